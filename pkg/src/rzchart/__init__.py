"""One-sided Shewhart charts for the ratio of two correlated normal
variables over short production runs: distribution math, limit design,
truncated run-length evaluation, Monte-Carlo validation, table regeneration
and live monitoring."""

from .design import (ChartConfig, ChartSide, RunPlan, design_chart,
                     sampling_frequency, solve_alpha_for_tarl0)
from .errors import ApproximationWarning, DomainError
from .monitor import (ChartState, ChartStatus, ChartStore, ChartSummary,
                      CompletedRunError, InspectionRecord, chart_status,
                      create_chart, ingest_inspection, read_samples_csv,
                      reset_chart)
from .normal import std_normal_cdf, std_normal_pdf, std_normal_quantile
from .performance import ShiftScenario, error_probabilities, tarl1
from .ratio import (RatioParams, SampleRatioParams, ratio_cdf, ratio_idf,
                    ratio_pdf, sample_ratio_cdf, sample_ratio_idf)
from .run_length import TrlDistribution, tarl, trl_cdf, trl_pmf
from .simulate import (SimulationSpec, TarlEstimate, estimate_tarl,
                       replication_rng, sample_inspection, simulate_trl)
from .tables import (GridSpec, LimitRow, RenderFormat, TarlRow,
                     gen_limits_table, gen_tarl_table, parse_csv, render)

__version__ = "0.1.0"

__all__ = [
    "ApproximationWarning", "ChartConfig", "ChartSide", "ChartState",
    "ChartStatus", "ChartStore", "ChartSummary", "CompletedRunError",
    "DomainError", "GridSpec", "InspectionRecord", "LimitRow", "RatioParams",
    "RenderFormat", "RunPlan", "SampleRatioParams", "ShiftScenario",
    "SimulationSpec", "TarlEstimate", "TarlRow", "TrlDistribution",
    "chart_status", "create_chart", "design_chart", "error_probabilities",
    "estimate_tarl", "gen_limits_table", "gen_tarl_table",
    "ingest_inspection", "parse_csv", "ratio_cdf", "ratio_idf", "ratio_pdf",
    "read_samples_csv", "render", "replication_rng", "reset_chart",
    "sample_inspection", "sample_ratio_cdf", "sample_ratio_idf",
    "sampling_frequency", "simulate_trl", "solve_alpha_for_tarl0",
    "std_normal_cdf", "std_normal_pdf", "std_normal_quantile", "tarl",
    "tarl1", "trl_cdf", "trl_pmf",
]
