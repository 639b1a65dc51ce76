#!/usr/bin/env python3
"""Regenerate src/demoData.ts from the live service over the bundled fixture.

Run from the repository root after changing the fixture dataset or the
service payload shapes:

    python3 frontend/scripts/freeze_demo_data.py
"""

import json
from pathlib import Path

from fastapi.testclient import TestClient

from ordinal_peer.service import create_app

ROOT = Path(__file__).resolve().parents[2]
FIXTURE = ROOT / "tests" / "data" / "sa_regions.csv"
TARGET = ROOT / "frontend" / "src" / "demoData.ts"

HEADER = '''/** Frozen payloads of the JSON service over the bundled fixture dataset,
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

export const DEMO_DATA: DemoData = '''


def main() -> None:
    client = TestClient(create_app())
    assert client.post("/dataset", content=FIXTURE.read_text()).status_code == 200
    regions = client.get("/regions").json()
    data = {
        "regions": regions,
        "profiles": {r["id"]: client.get(f"/regions/{r['id']}").json() for r in regions},
        "compareSample": client.get("/compare", params={"a": "KuRingGai", "b": "Auburn"}).json(),
        "distances": {
            r["id"]: client.get("/distances", params={"region": r["id"]}).json()
            for r in regions
        },
        "clusters": {str(k): client.post("/clusters", json={"k": k}).json() for k in (1, 2, 3, 5)},
    }
    TARGET.write_text(HEADER + json.dumps(data, indent=2, sort_keys=True) + ";\n")
    print(f"wrote {TARGET} ({TARGET.stat().st_size} bytes)")


if __name__ == "__main__":
    main()
