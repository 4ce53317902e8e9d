"""Monitoring engine: the food-industry replay, signal rule, state machine,
persistence and CSV ingestion."""

import json
import math
from pathlib import Path

import pytest

from rzchart.design import ChartSide, design_chart
from rzchart.monitor import (ChartStatus, ChartStore, CompletedRunError,
                             chart_status, config_from_dict, config_to_dict,
                             create_chart, ingest_inspection,
                             read_samples_csv, reset_chart, state_from_dict,
                             state_to_dict)

DATA = Path(__file__).parent / "data"

PRINTED_Z = [1.003, 1.003, 1.005, 0.999, 0.998, 0.997, 0.999, 0.990, 0.993,
             1.002, 1.017, 1.023, 1.016, 1.008, 0.996]


def food_cfg():
    return design_chart(ChartSide.UPPER, 5, 0.02, 0.01, 1.0, 0.8, 15)


def upper_cfg_n4():
    return design_chart(ChartSide.UPPER, 4, 0.02, 0.01, 1.0, 0.8, 10)


def replay_table16(state=None):
    state = state if state is not None else create_chart(food_cfg())
    for _, label, xs, ys in read_samples_csv(DATA / "table16.csv"):
        state, _ = ingest_inspection(state, xs, ys, label=label)
    return state


# --- creation -----------------------------------------------------------

def test_create_chart_food_example():
    state = create_chart(food_cfg())
    assert state.status is ChartStatus.ACTIVE
    assert state.records == []
    assert state.cfg.ucl == pytest.approx(1.01421, abs=5e-4)


def test_create_chart_distinct_ids():
    cfg = food_cfg()
    assert create_chart(cfg).id != create_chart(cfg).id


def test_create_chart_minimal_horizon():
    cfg = design_chart(ChartSide.UPPER, 1, 0.1, 0.1, 1.0, 0.0, 2)
    state = create_chart(cfg)
    state, _ = ingest_inspection(state, [1.0], [1.0])
    state, _ = ingest_inspection(state, [1.0], [1.0])
    assert state.status is ChartStatus.COMPLETED


# --- the published replay -------------------------------------------------

def test_table16_replay_z_values_and_signals():
    state = replay_table16()
    assert [round(r.z_hat, 3) for r in state.records] == PRINTED_Z
    assert [r.index for r in state.records if r.signal] == [11, 12, 13]
    assert state.status is ChartStatus.COMPLETED


def test_table16_summary():
    summary = chart_status(replay_table16())
    assert summary.signal_count == 3
    assert summary.signal_indices == (11, 12, 13)
    assert summary.inspections_remaining == 0
    assert summary.status is ChartStatus.COMPLETED
    assert summary.last_z_hat == pytest.approx(0.9957, abs=1e-4)


def test_table16_sample_one_no_signal():
    state = create_chart(food_cfg())
    groups = read_samples_csv(DATA / "table16.csv")
    state, record = ingest_inspection(state, groups[0][2], groups[0][3],
                                      label=groups[0][1])
    assert round(record.z_hat, 3) == 1.003
    assert not record.signal
    assert record.label == "250 gr"


def test_table16_sample_eleven_signals():
    state = create_chart(food_cfg())
    groups = read_samples_csv(DATA / "table16.csv")
    for idx, label, xs, ys in groups[:11]:
        state, record = ingest_inspection(state, xs, ys, label=label)
    assert record.index == 11
    assert round(record.z_hat, 3) == 1.017
    assert record.signal
    assert state.status is ChartStatus.SIGNALED_ACTIVE


# --- signal rule ----------------------------------------------------------

def test_signal_rule_is_strict():
    cfg = upper_cfg_n4()
    state = create_chart(cfg)
    # n = 4 equal values make the sample mean exactly the value itself
    exactly_limit = [cfg.ucl] * 4
    state, record = ingest_inspection(state, exactly_limit, [1.0] * 4)
    assert record.z_hat == cfg.ucl
    assert not record.signal
    above = [math.nextafter(cfg.ucl, math.inf)] * 4
    state, record = ingest_inspection(state, above, [1.0] * 4)
    assert record.signal


def test_signal_rule_lower_side():
    cfg = design_chart(ChartSide.LOWER, 4, 0.02, 0.01, 1.0, 0.8, 10)
    state = create_chart(cfg)
    state, record = ingest_inspection(state, [cfg.lcl] * 4, [1.0] * 4)
    assert not record.signal
    state, record = ingest_inspection(
        state, [math.nextafter(cfg.lcl, -math.inf)] * 4, [1.0] * 4)
    assert record.signal


def test_scale_invariance_power_of_two_exact():
    cfg = food_cfg()
    xs = [25.479, 25.355, 24.027, 25.792, 24.960]
    ys = [25.218, 25.171, 24.684, 25.052, 25.107]
    base = ingest_inspection(create_chart(cfg), xs, ys)[1]
    for c in (2.0, 0.5, 1024.0):
        scaled = ingest_inspection(create_chart(cfg),
                                   [c * x for x in xs], [c * y for y in ys])[1]
        assert scaled.z_hat == base.z_hat
        assert scaled.signal == base.signal


def test_scale_invariance_general_factor():
    cfg = food_cfg()
    xs = [50.1, 49.8, 50.3, 50.0, 49.9]
    ys = [49.9, 50.2, 50.1, 49.8, 50.0]
    base = ingest_inspection(create_chart(cfg), xs, ys)[1]
    scaled = ingest_inspection(create_chart(cfg), [x / 3.7 for x in xs],
                               [y / 3.7 for y in ys])[1]
    assert scaled.z_hat == pytest.approx(base.z_hat, rel=1e-12)
    assert scaled.signal == base.signal


# --- validation and state machine -----------------------------------------

def test_length_mismatch_rejected():
    state = create_chart(food_cfg())
    with pytest.raises(ValueError):
        ingest_inspection(state, [1.0] * 4, [1.0] * 5)
    with pytest.raises(ValueError):
        ingest_inspection(state, [1.0] * 5, [1.0] * 4)
    assert state.records == []


def test_non_finite_rejected():
    state = create_chart(food_cfg())
    with pytest.raises(ValueError):
        ingest_inspection(state, [1.0, float("nan"), 1.0, 1.0, 1.0], [1.0] * 5)
    with pytest.raises(ValueError):
        ingest_inspection(state, [1.0] * 5, [1.0, 1.0, float("inf"), 1.0, 1.0])


def test_nonpositive_ybar_rejected():
    state = create_chart(food_cfg())
    with pytest.raises(ValueError):
        ingest_inspection(state, [1.0] * 5, [-2.0, -2.0, -2.0, 0.5, 0.5])


def test_completed_run_rejects_more_samples():
    state = replay_table16()
    with pytest.raises(CompletedRunError):
        ingest_inspection(state, [50.0] * 5, [50.0] * 5)


def test_status_never_leaves_completed_without_reset():
    state = replay_table16()
    assert state.status is ChartStatus.COMPLETED
    summary = chart_status(state)
    assert summary.status is ChartStatus.COMPLETED


def test_signal_status_sticky_until_completion():
    state = create_chart(food_cfg())
    groups = read_samples_csv(DATA / "table16.csv")
    for idx, label, xs, ys in groups[:12]:
        state, _ = ingest_inspection(state, xs, ys, label=label)
    assert state.status is ChartStatus.SIGNALED_ACTIVE
    # sample 14 is below the limit but the signal history remains
    state, rec = ingest_inspection(state, *groups[13][2:4])
    assert not rec.signal
    assert state.status is ChartStatus.SIGNALED_ACTIVE


def test_reset_chart_lineage():
    state = replay_table16()
    fresh = reset_chart(state)
    assert fresh.parent_id == state.id
    assert fresh.id != state.id
    assert fresh.records == []
    assert fresh.status is ChartStatus.ACTIVE
    assert fresh.cfg == state.cfg


# --- serialisation and persistence ----------------------------------------

def test_config_json_roundtrip_upper_and_lower():
    for side in (ChartSide.UPPER, ChartSide.LOWER):
        cfg = design_chart(side, 5, 0.02, 0.01, 1.0, 0.8, 15)
        encoded = json.dumps(config_to_dict(cfg), allow_nan=False)
        assert config_from_dict(json.loads(encoded)) == cfg


def test_state_json_roundtrip():
    state = replay_table16()
    payload = json.dumps(state_to_dict(state), allow_nan=False)
    restored = state_from_dict(json.loads(payload))
    assert restored == state


def test_store_save_load_list(tmp_path):
    store = ChartStore(tmp_path)
    a = create_chart(food_cfg(), chart_id="aaa", now="2026-01-01T00:00:00+00:00")
    b = create_chart(food_cfg(), chart_id="bbb", now="2026-01-02T00:00:00+00:00")
    store.save(a)
    store.save(b)
    assert store.load("aaa") == a
    assert [s.id for s in store.list_states()] == ["bbb", "aaa"]
    assert store.exists("aaa") and not store.exists("ccc")
    with pytest.raises(KeyError):
        store.load("ccc")
    with pytest.raises(ValueError):
        store.load("../escape")


def test_store_persists_through_ingestion(tmp_path):
    store = ChartStore(tmp_path)
    state = create_chart(food_cfg(), chart_id="run1")
    store.save(state)
    groups = read_samples_csv(DATA / "table16.csv")
    state = store.load("run1")
    state, _ = ingest_inspection(state, groups[0][2], groups[0][3])
    store.save(state)
    assert len(store.load("run1").records) == 1


# --- CSV ingestion ----------------------------------------------------------

def test_read_samples_csv_groups():
    groups = read_samples_csv(DATA / "table16.csv")
    assert len(groups) == 15
    assert all(len(g[2]) == 5 and len(g[3]) == 5 for g in groups)
    assert groups[0][1] == "250 gr"
    assert groups[6][1] == "500 gr"


def test_read_samples_csv_rejects_bad_header(tmp_path):
    bad = tmp_path / "bad.csv"
    bad.write_text("a,b,c,d\n1,x,1.0,2.0\n")
    with pytest.raises(ValueError):
        read_samples_csv(bad)


def test_read_samples_csv_rejects_gap(tmp_path):
    bad = tmp_path / "gap.csv"
    bad.write_text("inspection,label,x,y\n1,,1.0,1.0\n3,,1.0,1.0\n")
    with pytest.raises(ValueError):
        read_samples_csv(bad)
