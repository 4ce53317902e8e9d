/** Frozen responses captured from the real HTTP API (food-industry
 * example: upper chart, n=5, gamma 0.02/0.01, z0=1, rho0=0.8, I=15; the
 * 15-inspection replay whose samples 11-13 signal).
 */

import type { ChartState, InspectionRecord, TarlPoint } from "../src/types.js";

export const DESIGN_RESPONSE: ChartState = {
  "id": "d749d5c37f7d41a7bd7624b1cb89d7f8",
  "cfg": {
    "side": "upper",
    "n": 5,
    "horizon_inspections": 15,
    "z0": 1.0,
    "rho0": 0.8,
    "gamma_x": 0.02,
    "gamma_y": 0.01,
    "alpha0": 0.008674813213249134,
    "lcl": 0.0,
    "ucl": 1.0142083149011651,
    "tarl0_target": 15.0
  },
  "records": [],
  "status": "active",
  "created_at": "2026-08-10T05:47:32.704468+00:00",
  "updated_at": "2026-08-10T05:47:32.704468+00:00",
  "parent_id": null,
  "client_token": "designer:upper:5:0.02:0.01:1:0.8:15"
};

export const INSPECTION_RESPONSES: InspectionRecord[] = [
  {
    "index": 1,
    "x_values": [
      25.479,
      25.355,
      24.027,
      25.792,
      24.96
    ],
    "y_values": [
      25.218,
      25.171,
      24.684,
      25.052,
      25.107
    ],
    "x_bar": 25.1226,
    "y_bar": 25.0464,
    "z_hat": 1.0030423533921042,
    "signal": false,
    "timestamp": null,
    "label": "250 gr",
    "chart_status": "active"
  },
  {
    "index": 2,
    "x_values": [
      25.359,
      25.172,
      24.508,
      25.292,
      24.449
    ],
    "y_values": [
      25.211,
      25.115,
      24.317,
      24.933,
      24.831
    ],
    "x_bar": 24.956,
    "y_bar": 24.8814,
    "z_hat": 1.0029982235726285,
    "signal": false,
    "timestamp": null,
    "label": "250 gr",
    "chart_status": "active"
  },
  {
    "index": 3,
    "x_values": [
      24.574,
      24.864,
      25.865,
      25.107,
      24.811
    ],
    "y_values": [
      24.784,
      24.868,
      25.377,
      24.879,
      24.734
    ],
    "x_bar": 25.0442,
    "y_bar": 24.9284,
    "z_hat": 1.0046453041510888,
    "signal": false,
    "timestamp": null,
    "label": "250 gr",
    "chart_status": "active"
  },
  {
    "index": 4,
    "x_values": [
      25.313,
      24.483,
      24.088,
      25.184,
      25.681
    ],
    "y_values": [
      25.338,
      24.859,
      24.305,
      25.115,
      25.251
    ],
    "x_bar": 24.9498,
    "y_bar": 24.973599999999998,
    "z_hat": 0.9990469936252684,
    "signal": false,
    "timestamp": null,
    "label": "250 gr",
    "chart_status": "active"
  },
  {
    "index": 5,
    "x_values": [
      25.557,
      24.959,
      25.023,
      24.482,
      25.531
    ],
    "y_values": [
      25.277,
      25.402,
      25.012,
      24.937,
      25.148
    ],
    "x_bar": 25.1104,
    "y_bar": 25.1552,
    "z_hat": 0.9982190560997328,
    "signal": false,
    "timestamp": null,
    "label": "250 gr",
    "chart_status": "active"
  },
  {
    "index": 6,
    "x_values": [
      24.882,
      24.473,
      24.814,
      25.418,
      24.732
    ],
    "y_values": [
      24.962,
      24.644,
      24.817,
      25.419,
      24.818
    ],
    "x_bar": 24.8638,
    "y_bar": 24.932,
    "z_hat": 0.9972645596021179,
    "signal": false,
    "timestamp": null,
    "label": "250 gr",
    "chart_status": "active"
  },
  {
    "index": 7,
    "x_values": [
      49.848,
      48.685,
      49.994,
      49.91,
      49.374
    ],
    "y_values": [
      49.993,
      49.128,
      49.83,
      49.566,
      49.422
    ],
    "x_bar": 49.562200000000004,
    "y_bar": 49.5878,
    "z_hat": 0.9994837439854158,
    "signal": false,
    "timestamp": null,
    "label": "500 gr",
    "chart_status": "active"
  },
  {
    "index": 8,
    "x_values": [
      49.668,
      50.338,
      49.149,
      47.807,
      49.064
    ],
    "y_values": [
      49.695,
      50.681,
      49.64,
      48.969,
      49.612
    ],
    "x_bar": 49.205200000000005,
    "y_bar": 49.7194,
    "z_hat": 0.9896579604741812,
    "signal": false,
    "timestamp": null,
    "label": "500 gr",
    "chart_status": "active"
  },
  {
    "index": 9,
    "x_values": [
      51.273,
      48.303,
      48.51,
      50.594,
      48.591
    ],
    "y_values": [
      50.366,
      49.21,
      49.844,
      49.89,
      49.595
    ],
    "x_bar": 49.4542,
    "y_bar": 49.781,
    "z_hat": 0.9934352463791407,
    "signal": false,
    "timestamp": null,
    "label": "500 gr",
    "chart_status": "active"
  },
  {
    "index": 10,
    "x_values": [
      48.72,
      51.566,
      49.677,
      50.651,
      50.344
    ],
    "y_values": [
      49.721,
      50.215,
      50.178,
      50.324,
      50.071
    ],
    "x_bar": 50.1916,
    "y_bar": 50.1018,
    "z_hat": 1.0017923507738247,
    "signal": false,
    "timestamp": null,
    "label": "500 gr",
    "chart_status": "active"
  },
  {
    "index": 11,
    "x_values": [
      51.372,
      51.7,
      51.0,
      50.886,
      49.641
    ],
    "y_values": [
      50.164,
      50.272,
      49.884,
      50.061,
      49.845
    ],
    "x_bar": 50.919799999999995,
    "y_bar": 50.0452,
    "z_hat": 1.0174762015138314,
    "signal": true,
    "timestamp": null,
    "label": "500 gr",
    "chart_status": "signaled_active"
  },
  {
    "index": 12,
    "x_values": [
      52.02,
      52.182,
      51.374,
      51.342,
      48.771
    ],
    "y_values": [
      50.749,
      50.369,
      49.697,
      49.575,
      49.44
    ],
    "x_bar": 51.137800000000006,
    "y_bar": 49.966,
    "z_hat": 1.0234519473241805,
    "signal": true,
    "timestamp": null,
    "label": "500 gr",
    "chart_status": "signaled_active"
  },
  {
    "index": 13,
    "x_values": [
      52.36,
      50.412,
      50.704,
      50.37,
      50.901
    ],
    "y_values": [
      50.047,
      49.981,
      50.297,
      50.408,
      50.026
    ],
    "x_bar": 50.949400000000004,
    "y_bar": 50.1518,
    "z_hat": 1.0159037163172608,
    "signal": true,
    "timestamp": null,
    "label": "500 gr",
    "chart_status": "signaled_active"
  },
  {
    "index": 14,
    "x_values": [
      52.498,
      50.447,
      48.713,
      48.574,
      50.275
    ],
    "y_values": [
      50.064,
      50.124,
      49.162,
      48.865,
      50.344
    ],
    "x_bar": 50.1014,
    "y_bar": 49.7118,
    "z_hat": 1.0078371734678688,
    "signal": false,
    "timestamp": null,
    "label": "500 gr",
    "chart_status": "signaled_active"
  },
  {
    "index": 15,
    "x_values": [
      25.123,
      24.658,
      24.468,
      25.03,
      25.071
    ],
    "y_values": [
      25.041,
      24.79,
      24.835,
      25.211,
      25.008
    ],
    "x_bar": 24.87,
    "y_bar": 24.976999999999997,
    "z_hat": 0.9957160587740723,
    "signal": false,
    "timestamp": null,
    "label": "250 gr",
    "chart_status": "completed"
  }
];

export const FINAL_STATE: ChartState = {
  "id": "d749d5c37f7d41a7bd7624b1cb89d7f8",
  "cfg": {
    "side": "upper",
    "n": 5,
    "horizon_inspections": 15,
    "z0": 1.0,
    "rho0": 0.8,
    "gamma_x": 0.02,
    "gamma_y": 0.01,
    "alpha0": 0.008674813213249134,
    "lcl": 0.0,
    "ucl": 1.0142083149011651,
    "tarl0_target": 15.0
  },
  "records": [
    {
      "index": 1,
      "x_values": [
        25.479,
        25.355,
        24.027,
        25.792,
        24.96
      ],
      "y_values": [
        25.218,
        25.171,
        24.684,
        25.052,
        25.107
      ],
      "x_bar": 25.1226,
      "y_bar": 25.0464,
      "z_hat": 1.0030423533921042,
      "signal": false,
      "timestamp": null,
      "label": "250 gr"
    },
    {
      "index": 2,
      "x_values": [
        25.359,
        25.172,
        24.508,
        25.292,
        24.449
      ],
      "y_values": [
        25.211,
        25.115,
        24.317,
        24.933,
        24.831
      ],
      "x_bar": 24.956,
      "y_bar": 24.8814,
      "z_hat": 1.0029982235726285,
      "signal": false,
      "timestamp": null,
      "label": "250 gr"
    },
    {
      "index": 3,
      "x_values": [
        24.574,
        24.864,
        25.865,
        25.107,
        24.811
      ],
      "y_values": [
        24.784,
        24.868,
        25.377,
        24.879,
        24.734
      ],
      "x_bar": 25.0442,
      "y_bar": 24.9284,
      "z_hat": 1.0046453041510888,
      "signal": false,
      "timestamp": null,
      "label": "250 gr"
    },
    {
      "index": 4,
      "x_values": [
        25.313,
        24.483,
        24.088,
        25.184,
        25.681
      ],
      "y_values": [
        25.338,
        24.859,
        24.305,
        25.115,
        25.251
      ],
      "x_bar": 24.9498,
      "y_bar": 24.973599999999998,
      "z_hat": 0.9990469936252684,
      "signal": false,
      "timestamp": null,
      "label": "250 gr"
    },
    {
      "index": 5,
      "x_values": [
        25.557,
        24.959,
        25.023,
        24.482,
        25.531
      ],
      "y_values": [
        25.277,
        25.402,
        25.012,
        24.937,
        25.148
      ],
      "x_bar": 25.1104,
      "y_bar": 25.1552,
      "z_hat": 0.9982190560997328,
      "signal": false,
      "timestamp": null,
      "label": "250 gr"
    },
    {
      "index": 6,
      "x_values": [
        24.882,
        24.473,
        24.814,
        25.418,
        24.732
      ],
      "y_values": [
        24.962,
        24.644,
        24.817,
        25.419,
        24.818
      ],
      "x_bar": 24.8638,
      "y_bar": 24.932,
      "z_hat": 0.9972645596021179,
      "signal": false,
      "timestamp": null,
      "label": "250 gr"
    },
    {
      "index": 7,
      "x_values": [
        49.848,
        48.685,
        49.994,
        49.91,
        49.374
      ],
      "y_values": [
        49.993,
        49.128,
        49.83,
        49.566,
        49.422
      ],
      "x_bar": 49.562200000000004,
      "y_bar": 49.5878,
      "z_hat": 0.9994837439854158,
      "signal": false,
      "timestamp": null,
      "label": "500 gr"
    },
    {
      "index": 8,
      "x_values": [
        49.668,
        50.338,
        49.149,
        47.807,
        49.064
      ],
      "y_values": [
        49.695,
        50.681,
        49.64,
        48.969,
        49.612
      ],
      "x_bar": 49.205200000000005,
      "y_bar": 49.7194,
      "z_hat": 0.9896579604741812,
      "signal": false,
      "timestamp": null,
      "label": "500 gr"
    },
    {
      "index": 9,
      "x_values": [
        51.273,
        48.303,
        48.51,
        50.594,
        48.591
      ],
      "y_values": [
        50.366,
        49.21,
        49.844,
        49.89,
        49.595
      ],
      "x_bar": 49.4542,
      "y_bar": 49.781,
      "z_hat": 0.9934352463791407,
      "signal": false,
      "timestamp": null,
      "label": "500 gr"
    },
    {
      "index": 10,
      "x_values": [
        48.72,
        51.566,
        49.677,
        50.651,
        50.344
      ],
      "y_values": [
        49.721,
        50.215,
        50.178,
        50.324,
        50.071
      ],
      "x_bar": 50.1916,
      "y_bar": 50.1018,
      "z_hat": 1.0017923507738247,
      "signal": false,
      "timestamp": null,
      "label": "500 gr"
    },
    {
      "index": 11,
      "x_values": [
        51.372,
        51.7,
        51.0,
        50.886,
        49.641
      ],
      "y_values": [
        50.164,
        50.272,
        49.884,
        50.061,
        49.845
      ],
      "x_bar": 50.919799999999995,
      "y_bar": 50.0452,
      "z_hat": 1.0174762015138314,
      "signal": true,
      "timestamp": null,
      "label": "500 gr"
    },
    {
      "index": 12,
      "x_values": [
        52.02,
        52.182,
        51.374,
        51.342,
        48.771
      ],
      "y_values": [
        50.749,
        50.369,
        49.697,
        49.575,
        49.44
      ],
      "x_bar": 51.137800000000006,
      "y_bar": 49.966,
      "z_hat": 1.0234519473241805,
      "signal": true,
      "timestamp": null,
      "label": "500 gr"
    },
    {
      "index": 13,
      "x_values": [
        52.36,
        50.412,
        50.704,
        50.37,
        50.901
      ],
      "y_values": [
        50.047,
        49.981,
        50.297,
        50.408,
        50.026
      ],
      "x_bar": 50.949400000000004,
      "y_bar": 50.1518,
      "z_hat": 1.0159037163172608,
      "signal": true,
      "timestamp": null,
      "label": "500 gr"
    },
    {
      "index": 14,
      "x_values": [
        52.498,
        50.447,
        48.713,
        48.574,
        50.275
      ],
      "y_values": [
        50.064,
        50.124,
        49.162,
        48.865,
        50.344
      ],
      "x_bar": 50.1014,
      "y_bar": 49.7118,
      "z_hat": 1.0078371734678688,
      "signal": false,
      "timestamp": null,
      "label": "500 gr"
    },
    {
      "index": 15,
      "x_values": [
        25.123,
        24.658,
        24.468,
        25.03,
        25.071
      ],
      "y_values": [
        25.041,
        24.79,
        24.835,
        25.211,
        25.008
      ],
      "x_bar": 24.87,
      "y_bar": 24.976999999999997,
      "z_hat": 0.9957160587740723,
      "signal": false,
      "timestamp": null,
      "label": "250 gr"
    }
  ],
  "status": "completed",
  "created_at": "2026-08-10T05:47:32.704468+00:00",
  "updated_at": "2026-08-10T05:47:32.740538+00:00",
  "parent_id": null,
  "client_token": "designer:upper:5:0.02:0.01:1:0.8:15",
  "summary": {
    "status": "completed",
    "signal_count": 3,
    "signal_indices": [
      11,
      12,
      13
    ],
    "inspections_done": 15,
    "inspections_remaining": 0,
    "last_z_hat": 0.9957160587740723,
    "lcl": 0.0,
    "ucl": 1.0142083149011651
  }
};

export const CURVE_RESPONSE: TarlPoint[] = [
  {
    "tau": 0.9,
    "side": "lower",
    "tarl1": 1.0
  },
  {
    "tau": 0.95,
    "side": "lower",
    "tarl1": 1.0000000001205125
  },
  {
    "tau": 0.98,
    "side": "lower",
    "tarl1": 1.20133566467376
  },
  {
    "tau": 0.99,
    "side": "lower",
    "tarl1": 4.236837026775627
  },
  {
    "tau": 1.0,
    "side": "lower",
    "tarl1": 14.999999999999504
  },
  {
    "tau": 1.01,
    "side": "upper",
    "tarl1": 4.061075167401431
  },
  {
    "tau": 1.02,
    "side": "upper",
    "tarl1": 1.2083744763218327
  },
  {
    "tau": 1.05,
    "side": "upper",
    "tarl1": 1.0000000097728434
  },
  {
    "tau": 1.1,
    "side": "upper",
    "tarl1": 1.0
  }
];
