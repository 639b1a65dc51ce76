/** Frozen payloads of the JSON service over the bundled fixture dataset,
 * for demo mode and the test suite. */

import type {
  ClustersResponse,
  CompareResponse,
  DistancesResponse,
  RegionProfile,
  RegionSummary,
} from "./types.js";

export interface DemoData {
  regions: RegionSummary[];
  profiles: Record<string, RegionProfile>;
  compareSample: CompareResponse;
  distances: Record<string, DistancesResponse>;
  clusters: Record<string, ClustersResponse>;
}

export const DEMO_DATA: DemoData = {
  "clusters": {
    "1": {
      "avg_silhouette": null,
      "cost": 4.029566395929914,
      "fingerprint": "3ccb66441f32054c",
      "groups": {
        "LakeMacquarieEast": [
          "Auburn",
          "DalyTiwiWestArnhem",
          "EastArnhem",
          "KuRingGai",
          "LakeMacquarieEast",
          "SouthCanberra",
          "WestArnhem",
          "WestTorrens",
          "WestonCreek"
        ]
      },
      "k": 1,
      "medoids": [
        "LakeMacquarieEast"
      ],
      "seed": 0
    },
    "2": {
      "avg_silhouette": 0.3960324832846304,
      "cost": 2.539780163980569,
      "fingerprint": "3ccb66441f32054c",
      "groups": {
        "WestArnhem": [
          "Auburn",
          "DalyTiwiWestArnhem",
          "EastArnhem",
          "WestArnhem"
        ],
        "WestonCreek": [
          "KuRingGai",
          "LakeMacquarieEast",
          "SouthCanberra",
          "WestTorrens",
          "WestonCreek"
        ]
      },
      "k": 2,
      "medoids": [
        "WestArnhem",
        "WestonCreek"
      ],
      "seed": 0
    },
    "3": {
      "avg_silhouette": 0.4414027079973801,
      "cost": 1.692888142941211,
      "fingerprint": "3ccb66441f32054c",
      "groups": {
        "DalyTiwiWestArnhem": [
          "DalyTiwiWestArnhem",
          "EastArnhem",
          "WestArnhem"
        ],
        "LakeMacquarieEast": [
          "Auburn",
          "LakeMacquarieEast",
          "WestTorrens"
        ],
        "SouthCanberra": [
          "KuRingGai",
          "SouthCanberra",
          "WestonCreek"
        ]
      },
      "k": 3,
      "medoids": [
        "DalyTiwiWestArnhem",
        "LakeMacquarieEast",
        "SouthCanberra"
      ],
      "seed": 0
    },
    "5": {
      "avg_silhouette": 0.27748070344313874,
      "cost": 0.9624685635674738,
      "fingerprint": "3ccb66441f32054c",
      "groups": {
        "Auburn": [
          "Auburn"
        ],
        "DalyTiwiWestArnhem": [
          "DalyTiwiWestArnhem",
          "EastArnhem",
          "WestArnhem"
        ],
        "KuRingGai": [
          "KuRingGai"
        ],
        "LakeMacquarieEast": [
          "LakeMacquarieEast",
          "WestTorrens"
        ],
        "SouthCanberra": [
          "SouthCanberra",
          "WestonCreek"
        ]
      },
      "k": 5,
      "medoids": [
        "Auburn",
        "DalyTiwiWestArnhem",
        "KuRingGai",
        "LakeMacquarieEast",
        "SouthCanberra"
      ],
      "seed": 0
    }
  },
  "compareSample": {
    "distance_terms": {
      "location": 0.748136589679314,
      "shape": 0.9107973910292292,
      "size": 0.9213064673266393
    },
    "profiles": {
      "a": {
        "bcdfa": [
          0.0,
          0.0,
          0.0,
          0.0,
          3.0279999999999998e-05,
          0.00014306,
          0.00043333000000000005,
          0.0010516000000000002,
          0.0030318500000000004,
          0.011051600000000002,
          0.02043333,
          0.030143060000000003,
          0.04003028,
          0.05,
          0.05993944,
          0.06971388,
          0.07913334,
          0.08789680000000001,
          0.0939363,
          0.08789680000000001,
          0.07913334,
          0.06971388,
          0.05993944,
          0.05,
          0.04003028,
          0.030143060000000003,
          0.02043333,
          0.011051600000000002,
          0.0030318500000000004,
          0.0010516000000000002,
          0.00043333000000000005,
          0.00014306,
          3.0279999999999998e-05,
          0.0,
          0.0,
          0.0,
          0.0
        ],
        "bcf": [
          1.369,
          2.3689999999999998,
          3.369,
          4.369,
          5.369000000000001,
          6.361000000000001,
          7.333,
          8.263,
          9.116999999999999,
          9.631
        ],
        "benchmark": "LD",
        "benchmark_high": 0.9650000000000001,
        "benchmark_low": 0.0,
        "benchmark_mid": 0.035,
        "ci": 0.918,
        "csd": 0.08199999999999996,
        "di": 0.009643620977625951,
        "distribution": [
          0.0,
          0.0,
          0.0,
          0.0,
          0.004,
          0.01,
          0.021,
          0.038,
          0.17,
          0.757
        ],
        "equivalence_class": "[8,1]",
        "equivalence_table": "skewed",
        "excluded_fraction": 0.0,
        "gamma1": -2.8231224296284205,
        "group": "A",
        "hi": 0.9183899367824974,
        "li": 10,
        "li_upper": 10,
        "lorenz": [
          0.0,
          0.0,
          0.0,
          0.0,
          0.0,
          0.004,
          0.014,
          0.035,
          0.07300000000000001,
          0.24300000000000002,
          1.0
        ],
        "population": 119000,
        "pwavgs_decile": 9,
        "pwavgs_rank": 9,
        "pwavgs_score": 1101.7938080824977,
        "region_id": "KuRingGai",
        "s": 1.7379999999999995,
        "skew_class": "HS",
        "skew_sub": null,
        "typology": "not_polarised"
      },
      "b": {
        "bcdfa": [
          5.501745794090596e-06,
          0.00011521746300858941,
          0.0003982485722147745,
          0.0008379469768500563,
          0.0015463616072338585,
          0.002686737244167966,
          0.004420744053056009,
          0.006904562467029338,
          0.010845571329664253,
          0.016904562467029337,
          0.024409740561467826,
          0.03245630231815078,
          0.04074986446280432,
          0.04916205302314994,
          0.05730552535774706,
          0.06474174297467265,
          0.07116401363968207,
          0.07619087506594133,
          0.07830885734067149,
          0.07619087506594133,
          0.07116401363968207,
          0.06474174297467265,
          0.05730552535774706,
          0.04916205302314994,
          0.04074986446280432,
          0.03245630231815078,
          0.024409740561467826,
          0.016904562467029337,
          0.010845571329664253,
          0.006904562467029338,
          0.004420744053056009,
          0.002686737244167966,
          0.0015463616072338585,
          0.0008379469768500563,
          0.0003982485722147745,
          0.00011521746300858941,
          5.501745794090596e-06
        ],
        "bcf": [
          8.102229307113825,
          8.522585120105138,
          8.315181678794811,
          7.899571661515247,
          7.295565723186255,
          6.555562315948307,
          5.705967533889849,
          4.822373384604152,
          3.8939740563167757,
          2.897770692886174
        ],
        "benchmark": "HD",
        "benchmark_high": 0.05820292535715155,
        "benchmark_low": 0.7078050086397819,
        "benchmark_mid": 0.23399206600306652,
        "ci": 0.5911314463725085,
        "csd": 0.32831441775441383,
        "di": 0.0635958152975241,
        "distribution": [
          0.28982209350434424,
          0.31387962715081896,
          0.10410328798461875,
          0.09419796052471464,
          0.06799873445447686,
          0.05479568741025578,
          0.016999683613619216,
          0.02240258950083964,
          0.03390201757161284,
          0.0018983182846990679
        ],
        "equivalence_class": "[1,4]",
        "equivalence_table": "skewed",
        "excluded_fraction": 0.023109293644944247,
        "gamma1": 1.3468790546650788,
        "group": "B",
        "hi": 0.5792631652409115,
        "li": 2,
        "li_upper": 2,
        "lorenz": [
          0.0,
          0.0018983182846990679,
          0.018898001898318285,
          0.04130059139915793,
          0.07520260897077077,
          0.12999829638102656,
          0.1979970308355034,
          0.29219499136021804,
          0.3962982793448368,
          0.686120372849181,
          1.0
        ],
        "population": 84122,
        "pwavgs_decile": 5,
        "pwavgs_rank": 4,
        "pwavgs_score": 1010.9087518570316,
        "region_id": "Auburn",
        "s": 4.679816982647424,
        "skew_class": "HS",
        "skew_sub": null,
        "typology": "not_polarised"
      }
    },
    "total_distance": 0.8600801493450608
  },
  "distances": {
    "Auburn": {
      "distances": [
        {
          "distance": 0.3997919383098545,
          "region": "LakeMacquarieEast"
        },
        {
          "distance": 0.4087410289514816,
          "region": "WestArnhem"
        },
        {
          "distance": 0.41818438625478177,
          "region": "WestTorrens"
        },
        {
          "distance": 0.4406813392118246,
          "region": "DalyTiwiWestArnhem"
        },
        {
          "distance": 0.49601538320587446,
          "region": "EastArnhem"
        },
        {
          "distance": 0.730808065509118,
          "region": "SouthCanberra"
        },
        {
          "distance": 0.7559392712494604,
          "region": "WestonCreek"
        },
        {
          "distance": 0.8600801493450608,
          "region": "KuRingGai"
        }
      ],
      "region": "Auburn",
      "sort": "asc"
    },
    "DalyTiwiWestArnhem": {
      "distances": [
        {
          "distance": 0.08034225635781966,
          "region": "WestArnhem"
        },
        {
          "distance": 0.2836449654905766,
          "region": "EastArnhem"
        },
        {
          "distance": 0.4406813392118246,
          "region": "Auburn"
        },
        {
          "distance": 0.6442004149565441,
          "region": "LakeMacquarieEast"
        },
        {
          "distance": 0.6904937917663067,
          "region": "WestTorrens"
        },
        {
          "distance": 0.824832197569894,
          "region": "SouthCanberra"
        },
        {
          "distance": 0.8702173795408726,
          "region": "WestonCreek"
        },
        {
          "distance": 0.9458811532497988,
          "region": "KuRingGai"
        }
      ],
      "region": "DalyTiwiWestArnhem",
      "sort": "asc"
    },
    "EastArnhem": {
      "distances": [
        {
          "distance": 0.2836449654905766,
          "region": "DalyTiwiWestArnhem"
        },
        {
          "distance": 0.3032962962962963,
          "region": "WestArnhem"
        },
        {
          "distance": 0.49601538320587446,
          "region": "Auburn"
        },
        {
          "distance": 0.5253814814814814,
          "region": "LakeMacquarieEast"
        },
        {
          "distance": 0.6236510721247562,
          "region": "WestTorrens"
        },
        {
          "distance": 0.6283247863247864,
          "region": "WestonCreek"
        },
        {
          "distance": 0.674755233494364,
          "region": "SouthCanberra"
        },
        {
          "distance": 0.7825012345679012,
          "region": "KuRingGai"
        }
      ],
      "region": "EastArnhem",
      "sort": "asc"
    },
    "KuRingGai": {
      "distances": [
        {
          "distance": 0.3306276410638827,
          "region": "SouthCanberra"
        },
        {
          "distance": 0.4600485133020344,
          "region": "WestonCreek"
        },
        {
          "distance": 0.6601984067866749,
          "region": "LakeMacquarieEast"
        },
        {
          "distance": 0.7529028346782537,
          "region": "WestTorrens"
        },
        {
          "distance": 0.7825012345679012,
          "region": "EastArnhem"
        },
        {
          "distance": 0.8600801493450608,
          "region": "Auburn"
        },
        {
          "distance": 0.9458811532497988,
          "region": "DalyTiwiWestArnhem"
        },
        {
          "distance": 0.9462238209432454,
          "region": "WestArnhem"
        }
      ],
      "region": "KuRingGai",
      "sort": "asc"
    },
    "LakeMacquarieEast": {
      "distances": [
        {
          "distance": 0.26928148148148146,
          "region": "WestTorrens"
        },
        {
          "distance": 0.3997919383098545,
          "region": "Auburn"
        },
        {
          "distance": 0.4095830432842481,
          "region": "WestonCreek"
        },
        {
          "distance": 0.5003703703703704,
          "region": "SouthCanberra"
        },
        {
          "distance": 0.5253814814814814,
          "region": "EastArnhem"
        },
        {
          "distance": 0.6207592592592592,
          "region": "WestArnhem"
        },
        {
          "distance": 0.6442004149565441,
          "region": "DalyTiwiWestArnhem"
        },
        {
          "distance": 0.6601984067866749,
          "region": "KuRingGai"
        }
      ],
      "region": "LakeMacquarieEast",
      "sort": "asc"
    },
    "SouthCanberra": {
      "distances": [
        {
          "distance": 0.32919986023759606,
          "region": "WestonCreek"
        },
        {
          "distance": 0.3306276410638827,
          "region": "KuRingGai"
        },
        {
          "distance": 0.5003703703703704,
          "region": "LakeMacquarieEast"
        },
        {
          "distance": 0.5987037037037037,
          "region": "WestTorrens"
        },
        {
          "distance": 0.674755233494364,
          "region": "EastArnhem"
        },
        {
          "distance": 0.730808065509118,
          "region": "Auburn"
        },
        {
          "distance": 0.824832197569894,
          "region": "DalyTiwiWestArnhem"
        },
        {
          "distance": 0.8270074074074073,
          "region": "WestArnhem"
        }
      ],
      "region": "SouthCanberra",
      "sort": "asc"
    },
    "WestArnhem": {
      "distances": [
        {
          "distance": 0.08034225635781966,
          "region": "DalyTiwiWestArnhem"
        },
        {
          "distance": 0.3032962962962963,
          "region": "EastArnhem"
        },
        {
          "distance": 0.4087410289514816,
          "region": "Auburn"
        },
        {
          "distance": 0.6207592592592592,
          "region": "LakeMacquarieEast"
        },
        {
          "distance": 0.6752759259259258,
          "region": "WestTorrens"
        },
        {
          "distance": 0.8270074074074073,
          "region": "SouthCanberra"
        },
        {
          "distance": 0.8791291989664082,
          "region": "WestonCreek"
        },
        {
          "distance": 0.9462238209432454,
          "region": "KuRingGai"
        }
      ],
      "region": "WestArnhem",
      "sort": "asc"
    },
    "WestTorrens": {
      "distances": [
        {
          "distance": 0.26928148148148146,
          "region": "LakeMacquarieEast"
        },
        {
          "distance": 0.41818438625478177,
          "region": "Auburn"
        },
        {
          "distance": 0.5485691655510931,
          "region": "WestonCreek"
        },
        {
          "distance": 0.5987037037037037,
          "region": "SouthCanberra"
        },
        {
          "distance": 0.6236510721247562,
          "region": "EastArnhem"
        },
        {
          "distance": 0.6752759259259258,
          "region": "WestArnhem"
        },
        {
          "distance": 0.6904937917663067,
          "region": "DalyTiwiWestArnhem"
        },
        {
          "distance": 0.7529028346782537,
          "region": "KuRingGai"
        }
      ],
      "region": "WestTorrens",
      "sort": "asc"
    },
    "WestonCreek": {
      "distances": [
        {
          "distance": 0.32919986023759606,
          "region": "SouthCanberra"
        },
        {
          "distance": 0.4095830432842481,
          "region": "LakeMacquarieEast"
        },
        {
          "distance": 0.4600485133020344,
          "region": "KuRingGai"
        },
        {
          "distance": 0.5485691655510931,
          "region": "WestTorrens"
        },
        {
          "distance": 0.6283247863247864,
          "region": "EastArnhem"
        },
        {
          "distance": 0.7559392712494604,
          "region": "Auburn"
        },
        {
          "distance": 0.8702173795408726,
          "region": "DalyTiwiWestArnhem"
        },
        {
          "distance": 0.8791291989664082,
          "region": "WestArnhem"
        }
      ],
      "region": "WestonCreek",
      "sort": "asc"
    }
  },
  "profiles": {
    "Auburn": {
      "bcdfa": [
        5.501745794090596e-06,
        0.00011521746300858941,
        0.0003982485722147745,
        0.0008379469768500563,
        0.0015463616072338585,
        0.002686737244167966,
        0.004420744053056009,
        0.006904562467029338,
        0.010845571329664253,
        0.016904562467029337,
        0.024409740561467826,
        0.03245630231815078,
        0.04074986446280432,
        0.04916205302314994,
        0.05730552535774706,
        0.06474174297467265,
        0.07116401363968207,
        0.07619087506594133,
        0.07830885734067149,
        0.07619087506594133,
        0.07116401363968207,
        0.06474174297467265,
        0.05730552535774706,
        0.04916205302314994,
        0.04074986446280432,
        0.03245630231815078,
        0.024409740561467826,
        0.016904562467029337,
        0.010845571329664253,
        0.006904562467029338,
        0.004420744053056009,
        0.002686737244167966,
        0.0015463616072338585,
        0.0008379469768500563,
        0.0003982485722147745,
        0.00011521746300858941,
        5.501745794090596e-06
      ],
      "bcf": [
        8.102229307113825,
        8.522585120105138,
        8.315181678794811,
        7.899571661515247,
        7.295565723186255,
        6.555562315948307,
        5.705967533889849,
        4.822373384604152,
        3.8939740563167757,
        2.897770692886174
      ],
      "benchmark": "HD",
      "benchmark_high": 0.05820292535715155,
      "benchmark_low": 0.7078050086397819,
      "benchmark_mid": 0.23399206600306652,
      "ci": 0.5911314463725085,
      "csd": 0.32831441775441383,
      "di": 0.0635958152975241,
      "distribution": [
        0.28982209350434424,
        0.31387962715081896,
        0.10410328798461875,
        0.09419796052471464,
        0.06799873445447686,
        0.05479568741025578,
        0.016999683613619216,
        0.02240258950083964,
        0.03390201757161284,
        0.0018983182846990679
      ],
      "equivalence_class": "[1,4]",
      "equivalence_table": "skewed",
      "excluded_fraction": 0.023109293644944247,
      "gamma1": 1.3468790546650788,
      "group": "B",
      "hi": 0.5792631652409115,
      "li": 2,
      "li_upper": 2,
      "lorenz": [
        0.0,
        0.0018983182846990679,
        0.018898001898318285,
        0.04130059139915793,
        0.07520260897077077,
        0.12999829638102656,
        0.1979970308355034,
        0.29219499136021804,
        0.3962982793448368,
        0.686120372849181,
        1.0
      ],
      "population": 84122,
      "pwavgs_decile": 5,
      "pwavgs_rank": 4,
      "pwavgs_score": 1010.9087518570316,
      "region_id": "Auburn",
      "s": 4.679816982647424,
      "skew_class": "HS",
      "skew_sub": null,
      "typology": "not_polarised"
    },
    "DalyTiwiWestArnhem": {
      "bcdfa": [
        0.0,
        0.0,
        0.0004720621441285925,
        0.000989947700213288,
        0.0015213719916486507,
        0.0020662193027479224,
        0.0028005448447084975,
        0.0037443748387450348,
        0.00535902989013266,
        0.013744374838745037,
        0.022800544844708504,
        0.03206621930274793,
        0.040577247703391474,
        0.049010052299786715,
        0.05742931816083129,
        0.06586756139450416,
        0.074398910310583,
        0.08251125032250993,
        0.08928194021973468,
        0.08251125032250993,
        0.074398910310583,
        0.06586756139450416,
        0.05742931816083129,
        0.049010052299786715,
        0.040577247703391474,
        0.03206621930274793,
        0.022800544844708504,
        0.013744374838745037,
        0.00535902989013266,
        0.0037443748387450348,
        0.0028005448447084975,
        0.0020662193027479224,
        0.0015213719916486507,
        0.000989947700213288,
        0.0004720621441285925,
        0.0,
        0.0
      ],
      "bcf": [
        9.399499749874936,
        8.76688344172086,
        7.975787893946973,
        7.1378689344672335,
        6.253526763381691,
        5.369184592296148,
        4.4848424212106055,
        3.6005002501250623,
        2.6005002501250623,
        1.6005002501250625
      ],
      "benchmark": "HD",
      "benchmark_high": 0.05782891445722861,
      "benchmark_low": 0.9189594797398699,
      "benchmark_mid": 0.02321160580290145,
      "ci": 0.9204491134456116,
      "csd": 0.13344450002779196,
      "di": 0.03660952982075445,
      "distribution": [
        0.8163081540770385,
        0.07923961980990495,
        0.023411705852926464,
        0.02321160580290145,
        0.0,
        0.0,
        0.0,
        0.05782891445722861,
        0.0,
        0.0
      ],
      "equivalence_class": "[9,1]",
      "equivalence_table": "skewed",
      "excluded_fraction": 0.0,
      "gamma1": 3.1862722827709824,
      "group": "A",
      "hi": 0.896557350935956,
      "li": 1,
      "li_upper": 1,
      "lorenz": [
        0.0,
        0.0,
        0.0,
        0.0,
        0.0,
        0.0,
        0.02321160580290145,
        0.04662331165582791,
        0.10445222611305652,
        0.18369184592296145,
        1.0
      ],
      "population": 19990,
      "pwavgs_decile": 1,
      "pwavgs_rank": 1,
      "pwavgs_score": 853.8918864268563,
      "region_id": "DalyTiwiWestArnhem",
      "s": 1.7159579789894952,
      "skew_class": "HS",
      "skew_sub": null,
      "typology": "not_polarised"
    },
    "EastArnhem": {
      "bcdfa": [
        0.0001318,
        0.00136413,
        0.0034004400000000007,
        0.00564763,
        0.007894820000000002,
        0.010142010000000002,
        0.0123956,
        0.01472703,
        0.017334640000000002,
        0.024727030000000004,
        0.032132,
        0.037413749999999996,
        0.04109394000000001,
        0.04435237000000001,
        0.04761080000000001,
        0.05108011000000001,
        0.05534060000000001,
        0.06054594,
        0.06533072000000001,
        0.06054594,
        0.05534060000000001,
        0.05108011000000001,
        0.04761080000000001,
        0.04435237000000001,
        0.04109394000000001,
        0.037413749999999996,
        0.032132,
        0.024727030000000004,
        0.017334640000000002,
        0.01472703,
        0.0123956,
        0.010142010000000002,
        0.007894820000000002,
        0.00564763,
        0.0034004400000000007,
        0.00136413,
        0.0001318
      ],
      "bcf": [
        7.438,
        7.120000000000001,
        6.8020000000000005,
        6.484000000000001,
        6.166,
        5.848000000000001,
        5.53,
        5.148000000000001,
        4.522,
        3.5620000000000003
      ],
      "benchmark": "none",
      "benchmark_high": 0.30900000000000005,
      "benchmark_low": 0.659,
      "benchmark_mid": 0.032,
      "ci": 0.8695555555555555,
      "csd": 0.5693333333333335,
      "di": 0.18769120121213562,
      "distribution": [
        0.659,
        0.0,
        0.0,
        0.0,
        0.0,
        0.0,
        0.032,
        0.122,
        0.167,
        0.02
      ],
      "equivalence_class": "[9,4]",
      "equivalence_table": "skewed",
      "excluded_fraction": 0.0,
      "gamma1": 0.7160071367717333,
      "group": "A",
      "hi": 0.7166952824778372,
      "li": 1,
      "li_upper": 1,
      "lorenz": [
        0.0,
        0.0,
        0.0,
        0.0,
        0.0,
        0.0,
        0.02,
        0.052000000000000005,
        0.174,
        0.34099999999999997,
        1.0
      ],
      "population": 16000,
      "pwavgs_decile": 2,
      "pwavgs_rank": 3,
      "pwavgs_score": 885.110533788856,
      "region_id": "EastArnhem",
      "s": 2.1740000000000004,
      "skew_class": "MS",
      "skew_sub": null,
      "typology": "polarised"
    },
    "KuRingGai": {
      "bcdfa": [
        0.0,
        0.0,
        0.0,
        0.0,
        3.0279999999999998e-05,
        0.00014306,
        0.00043333000000000005,
        0.0010516000000000002,
        0.0030318500000000004,
        0.011051600000000002,
        0.02043333,
        0.030143060000000003,
        0.04003028,
        0.05,
        0.05993944,
        0.06971388,
        0.07913334,
        0.08789680000000001,
        0.0939363,
        0.08789680000000001,
        0.07913334,
        0.06971388,
        0.05993944,
        0.05,
        0.04003028,
        0.030143060000000003,
        0.02043333,
        0.011051600000000002,
        0.0030318500000000004,
        0.0010516000000000002,
        0.00043333000000000005,
        0.00014306,
        3.0279999999999998e-05,
        0.0,
        0.0,
        0.0,
        0.0
      ],
      "bcf": [
        1.369,
        2.3689999999999998,
        3.369,
        4.369,
        5.369000000000001,
        6.361000000000001,
        7.333,
        8.263,
        9.116999999999999,
        9.631
      ],
      "benchmark": "LD",
      "benchmark_high": 0.9650000000000001,
      "benchmark_low": 0.0,
      "benchmark_mid": 0.035,
      "ci": 0.918,
      "csd": 0.08199999999999996,
      "di": 0.009643620977625951,
      "distribution": [
        0.0,
        0.0,
        0.0,
        0.0,
        0.004,
        0.01,
        0.021,
        0.038,
        0.17,
        0.757
      ],
      "equivalence_class": "[8,1]",
      "equivalence_table": "skewed",
      "excluded_fraction": 0.0,
      "gamma1": -2.8231224296284205,
      "group": "A",
      "hi": 0.9183899367824974,
      "li": 10,
      "li_upper": 10,
      "lorenz": [
        0.0,
        0.0,
        0.0,
        0.0,
        0.0,
        0.004,
        0.014,
        0.035,
        0.07300000000000001,
        0.24300000000000002,
        1.0
      ],
      "population": 119000,
      "pwavgs_decile": 9,
      "pwavgs_rank": 9,
      "pwavgs_score": 1101.7938080824977,
      "region_id": "KuRingGai",
      "s": 1.7379999999999995,
      "skew_class": "HS",
      "skew_sub": null,
      "typology": "not_polarised"
    },
    "LakeMacquarieEast": {
      "bcdfa": [
        7.3696e-05,
        0.0003133316,
        0.0008199766,
        0.0017131648,
        0.0031010326000000003,
        0.0050919808,
        0.0078101478,
        0.0113634763,
        0.0158538874,
        0.0213634763,
        0.027662755800000004,
        0.034465317599999996,
        0.04146107940000001,
        0.048286835199999996,
        0.0546179114,
        0.06012936999999999,
        0.0644534004,
        0.06727304740000001,
        0.0682922252,
        0.06727304740000001,
        0.0644534004,
        0.06012936999999999,
        0.0546179114,
        0.048286835199999996,
        0.04146107940000001,
        0.034465317599999996,
        0.027662755800000004,
        0.0213634763,
        0.0158538874,
        0.0113634763,
        0.0078101478,
        0.0050919808,
        0.0031010326000000003,
        0.0017131648,
        0.0008199766,
        0.0003133316,
        7.3696e-05
      ],
      "bcf": [
        5.4113999999999995,
        6.2234,
        6.8526,
        7.3122,
        7.577,
        7.6426,
        7.4854,
        7.074400000000001,
        6.431800000000001,
        5.5886000000000005
      ],
      "benchmark": "none",
      "benchmark_high": 0.2945,
      "benchmark_low": 0.2702,
      "benchmark_mid": 0.4353,
      "ci": 0.08606666666666664,
      "csd": 0.5238666666666667,
      "di": 0.11362547412414772,
      "distribution": [
        0.094,
        0.0914,
        0.0848,
        0.0974,
        0.0996,
        0.1114,
        0.1269,
        0.1158,
        0.1003,
        0.0784
      ],
      "equivalence_class": "[1,9]",
      "equivalence_table": "symmetric",
      "excluded_fraction": 0.0,
      "gamma1": -0.11769198728202981,
      "group": "D",
      "hi": 0.08494297429845073,
      "li": 6,
      "li_upper": 6,
      "lorenz": [
        0.0,
        0.0784,
        0.1632,
        0.2546,
        0.3486,
        0.446,
        0.5456,
        0.6458999999999999,
        0.7572999999999999,
        0.8730999999999999,
        1.0
      ],
      "population": 60000,
      "pwavgs_decile": 7,
      "pwavgs_rank": 6,
      "pwavgs_score": 1049.6272636148724,
      "region_id": "LakeMacquarieEast",
      "s": 9.2254,
      "skew_class": "AS",
      "skew_sub": "HighlySymmetric",
      "typology": "not_polarised"
    },
    "SouthCanberra": {
      "bcdfa": [
        0.0001839,
        0.0006332699999999999,
        0.00114246,
        0.00190059,
        0.0027778800000000004,
        0.004072,
        0.005728919999999999,
        0.00803185,
        0.01103326,
        0.018031850000000002,
        0.025361119999999997,
        0.03280546,
        0.04049296,
        0.04809941,
        0.0555867,
        0.06248927,
        0.06872606,
        0.0739363,
        0.07793348,
        0.0739363,
        0.06872606,
        0.06248927,
        0.0555867,
        0.04809941,
        0.04049296,
        0.03280546,
        0.025361119999999997,
        0.018031850000000002,
        0.01103326,
        0.00803185,
        0.005728919999999999,
        0.004072,
        0.0027778800000000004,
        0.00190059,
        0.00114246,
        0.0006332699999999999,
        0.0001839
      ],
      "bcf": [
        2.45,
        3.39,
        4.252,
        5.114,
        5.91,
        6.688,
        7.35,
        7.922,
        8.324,
        8.55
      ],
      "benchmark": "LD",
      "benchmark_high": 0.786,
      "benchmark_low": 0.069,
      "benchmark_mid": 0.14500000000000002,
      "ci": 0.714,
      "csd": 0.3222222222222221,
      "di": 0.08187547595936932,
      "distribution": [
        0.03,
        0.039,
        0.0,
        0.033,
        0.009,
        0.058,
        0.045,
        0.085,
        0.088,
        0.613
      ],
      "equivalence_class": "[4,3]",
      "equivalence_table": "skewed",
      "excluded_fraction": 0.0,
      "gamma1": -1.8143175814194894,
      "group": "B",
      "hi": 0.6724011935697886,
      "li": 10,
      "li_upper": 10,
      "lorenz": [
        0.0,
        0.0,
        0.009,
        0.039,
        0.07200000000000001,
        0.11100000000000002,
        0.15600000000000003,
        0.21400000000000002,
        0.29900000000000004,
        0.387,
        1.0
      ],
      "population": 30000,
      "pwavgs_decile": 9,
      "pwavgs_rank": 8,
      "pwavgs_score": 1100.7593440278988,
      "region_id": "SouthCanberra",
      "s": 3.574,
      "skew_class": "HS",
      "skew_sub": null,
      "typology": "not_polarised"
    },
    "WestArnhem": {
      "bcdfa": [
        4.5060000000000006e-05,
        9.726e-05,
        0.00025772,
        0.00051198,
        0.0008384100000000002,
        0.00123612,
        0.00190612,
        0.0030156400000000013,
        0.005103380000000001,
        0.013015640000000002,
        0.021816,
        0.0310416,
        0.04032297,
        0.04948801999999999,
        0.05858089999999998,
        0.06762502000000001,
        0.07623282,
        0.08396872000000002,
        0.08979324,
        0.08396872000000002,
        0.07623282,
        0.06762502000000001,
        0.05858089999999998,
        0.04948801999999999,
        0.04032297,
        0.0310416,
        0.021816,
        0.013015640000000002,
        0.005103380000000001,
        0.0030156400000000013,
        0.00190612,
        0.00123612,
        0.0008384100000000002,
        0.00051198,
        0.00025772,
        9.726e-05,
        4.5060000000000006e-05
      ],
      "bcf": [
        9.399999999999999,
        8.898000000000001,
        8.158000000000001,
        7.313999999999999,
        6.402000000000001,
        5.476,
        4.536,
        3.5760000000000005,
        2.588,
        1.6
      ],
      "benchmark": "HD",
      "benchmark_high": 0.02,
      "benchmark_low": 0.922,
      "benchmark_mid": 0.058,
      "ci": 0.8733333333333334,
      "csd": 0.13333333333333364,
      "di": 0.027652761483953445,
      "distribution": [
        0.751,
        0.119,
        0.052,
        0.034,
        0.007,
        0.007,
        0.01,
        0.014,
        0.0,
        0.006
      ],
      "equivalence_class": "[1,2]",
      "equivalence_table": "skewed",
      "excluded_fraction": 0.0,
      "gamma1": 3.3479893942994616,
      "group": "A",
      "hi": 0.8625761602093869,
      "li": 1,
      "li_upper": 1,
      "lorenz": [
        0.0,
        0.0,
        0.006,
        0.013000000000000001,
        0.02,
        0.03,
        0.044,
        0.078,
        0.13,
        0.249,
        1.0
      ],
      "population": 20000,
      "pwavgs_decile": 1,
      "pwavgs_rank": 2,
      "pwavgs_score": 854.7416247574197,
      "region_id": "WestArnhem",
      "s": 2.1399999999999997,
      "skew_class": "HS",
      "skew_sub": null,
      "typology": "not_polarised"
    },
    "WestTorrens": {
      "bcdfa": [
        1.305e-07,
        1.4880800000000002e-05,
        7.46213e-05,
        0.0002798202,
        0.0008381148000000001,
        0.0019665910999999998,
        0.0038187941000000004,
        0.006616782699999999,
        0.010791906600000001,
        0.0166167827,
        0.023818533100000004,
        0.03193682950000001,
        0.0406888722,
        0.04972017980000001,
        0.0583983917,
        0.0660816986,
        0.0723625423,
        0.0767664346,
        0.0784161868,
        0.0767664346,
        0.0723625423,
        0.0660816986,
        0.0583983917,
        0.04972017980000001,
        0.0406888722,
        0.03193682950000001,
        0.023818533100000004,
        0.0166167827,
        0.010791906600000001,
        0.006616782699999999,
        0.0038187941000000004,
        0.0019665910999999998,
        0.0008381148000000001,
        0.0002798202,
        7.46213e-05,
        1.4880800000000002e-05,
        1.305e-07
      ],
      "bcf": [
        6.066800000000001,
        7.014600000000001,
        7.8878,
        8.443,
        8.4368,
        8.0642,
        7.5283999999999995,
        6.820600000000001,
        5.9322,
        4.9332
      ],
      "benchmark": "none",
      "benchmark_high": 0.1461,
      "benchmark_low": 0.2224,
      "benchmark_mid": 0.6315,
      "ci": 0.4821555555555555,
      "csd": 0.3460000000000001,
      "di": 0.05593047820263054,
      "distribution": [
        0.0261,
        0.0373,
        0.159,
        0.2807,
        0.1832,
        0.0816,
        0.086,
        0.0903,
        0.0553,
        0.0005
      ],
      "equivalence_class": "[2,5]",
      "equivalence_table": "symmetric",
      "excluded_fraction": 0.0,
      "gamma1": 0.45085620240592383,
      "group": "C",
      "hi": 0.48904454876049097,
      "li": 4,
      "li_upper": 4,
      "lorenz": [
        0.0,
        0.0005,
        0.026600000000000002,
        0.0639,
        0.1192,
        0.2008,
        0.2868,
        0.3771,
        0.5361,
        0.7193,
        1.0
      ],
      "population": 60000,
      "pwavgs_decile": 7,
      "pwavgs_rank": 5,
      "pwavgs_score": 1049.1314597715611,
      "region_id": "WestTorrens",
      "s": 5.6606000000000005,
      "skew_class": "AS",
      "skew_sub": "ApproximatelySkewed",
      "typology": "not_polarised"
    },
    "WestonCreek": {
      "bcdfa": [
        1.3950000000000002e-05,
        3.6150000000000005e-05,
        6.815e-05,
        0.00011145,
        0.00018860000000000003,
        0.00061476,
        0.0018874100000000002,
        0.004335640000000001,
        0.00829142,
        0.01433564,
        0.021859510000000002,
        0.03054246,
        0.0400523,
        0.049888550000000004,
        0.05969094999999999,
        0.06880663000000001,
        0.07623913,
        0.08132872,
        0.08341716,
        0.08132872,
        0.07623913,
        0.06880663000000001,
        0.05969094999999999,
        0.049888550000000004,
        0.0400523,
        0.03054246,
        0.021859510000000002,
        0.01433564,
        0.00829142,
        0.004335640000000001,
        0.0018874100000000002,
        0.00061476,
        0.00018860000000000003,
        0.00011145,
        6.815e-05,
        3.6150000000000005e-05,
        1.3950000000000002e-05
      ],
      "bcf": [
        2.806,
        3.7960000000000003,
        4.786,
        5.776,
        6.766,
        7.736000000000001,
        8.468,
        8.748000000000001,
        8.636,
        8.194
      ],
      "benchmark": "none",
      "benchmark_high": 0.64,
      "benchmark_low": 0.005,
      "benchmark_mid": 0.355,
      "ci": 0.6291111111111112,
      "csd": 0.2782222222222219,
      "di": 0.03420484296866268,
      "distribution": [
        0.005,
        0.0,
        0.0,
        0.0,
        0.01,
        0.119,
        0.226,
        0.196,
        0.165,
        0.279
      ],
      "equivalence_class": "[1,4]",
      "equivalence_table": "skewed",
      "excluded_fraction": 0.0,
      "gamma1": -0.6099733867127647,
      "group": "B",
      "hi": 0.6392577605158133,
      "li": 8,
      "li_upper": 8,
      "lorenz": [
        0.0,
        0.0,
        0.0,
        0.0,
        0.005,
        0.015,
        0.134,
        0.29900000000000004,
        0.49500000000000005,
        0.7210000000000001,
        1.0
      ],
      "population": 23000,
      "pwavgs_decile": 9,
      "pwavgs_rank": 7,
      "pwavgs_score": 1094.0353276730066,
      "region_id": "WestonCreek",
      "s": 4.337999999999999,
      "skew_class": "MS",
      "skew_sub": null,
      "typology": "not_polarised"
    }
  },
  "regions": [
    {
      "group": "B",
      "hi": 0.5792631652409115,
      "id": "Auburn",
      "li": 2,
      "population": 84122
    },
    {
      "group": "A",
      "hi": 0.896557350935956,
      "id": "DalyTiwiWestArnhem",
      "li": 1,
      "population": 19990
    },
    {
      "group": "A",
      "hi": 0.7166952824778372,
      "id": "EastArnhem",
      "li": 1,
      "population": 16000
    },
    {
      "group": "A",
      "hi": 0.9183899367824974,
      "id": "KuRingGai",
      "li": 10,
      "population": 119000
    },
    {
      "group": "D",
      "hi": 0.08494297429845073,
      "id": "LakeMacquarieEast",
      "li": 6,
      "population": 60000
    },
    {
      "group": "B",
      "hi": 0.6724011935697886,
      "id": "SouthCanberra",
      "li": 10,
      "population": 30000
    },
    {
      "group": "A",
      "hi": 0.8625761602093869,
      "id": "WestArnhem",
      "li": 1,
      "population": 20000
    },
    {
      "group": "C",
      "hi": 0.48904454876049097,
      "id": "WestTorrens",
      "li": 4,
      "population": 60000
    },
    {
      "group": "B",
      "hi": 0.6392577605158133,
      "id": "WestonCreek",
      "li": 8,
      "population": 23000
    }
  ]
};
