"""JSON HTTP service backing the explorer: region profiles, pairwise
comparison, distance queries, and clustering over one in-memory dataset.

Readers always see a complete dataset snapshot: loading swaps an immutable
state object under a lock, and heavy artifacts (distance matrix, clusterings)
are computed outside the lock and cached per dataset fingerprint.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field

from fastapi import FastAPI, Request, Response
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from .classifier import RegionProfile, profile_to_dict
from .cluster import DistanceMatrix, DistanceParams, distance_matrix, pam
from .errors import KTooLarge, MissingColumn, OrdinalError
from .ingest import RegionDataset, aggregate, parse_subunit_csv
from .pipeline import build_profiles

DEFAULT_MAX_BODY = 10 * 1024 * 1024


@dataclass
class ServiceState:
    """One loaded dataset and everything derived from it."""

    dataset: RegionDataset
    profiles: list[RegionProfile]
    fingerprint: str
    by_id: dict[str, RegionProfile] = field(init=False)
    _matrix: DistanceMatrix | None = field(default=None, init=False)
    _clusterings: dict = field(default_factory=dict, init=False)
    _lock: threading.Lock = field(default_factory=threading.Lock, init=False)

    def __post_init__(self):
        self.by_id = {p.region_id: p for p in self.profiles}

    def matrix(self, params: DistanceParams = DistanceParams()) -> DistanceMatrix:
        with self._lock:
            cached = self._matrix
        if cached is not None:
            return cached
        computed = distance_matrix(self.profiles, params)
        with self._lock:
            if self._matrix is None:
                self._matrix = computed
            return self._matrix

    def clustering(self, k: int, seed: int = 0):
        key = (k, seed)
        with self._lock:
            if key in self._clusterings:
                return self._clusterings[key]
        result = pam(self.matrix(), k, seed)
        with self._lock:
            self._clusterings.setdefault(key, result)
            return self._clusterings[key]


class StateContainer:
    """Atomic holder for the current ServiceState."""

    def __init__(self, n: int = 10):
        self.n = n
        self._state: ServiceState | None = None
        self._swap = threading.Lock()

    def load(self, dataset: RegionDataset) -> ServiceState:
        profiles = build_profiles(dataset)
        state = ServiceState(dataset=dataset, profiles=profiles, fingerprint=dataset.fingerprint())
        with self._swap:
            self._state = state
        return state

    def current(self) -> ServiceState | None:
        return self._state


class ClusterRequest(BaseModel):
    k: int
    seed: int = 0


def create_app(n: int = 10, max_body: int = DEFAULT_MAX_BODY, cors_origins: list[str] | None = None) -> FastAPI:
    app = FastAPI(title="ordinal-peer service")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=cors_origins or ["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    app.state.container = StateContainer(n=n)

    def state_or_409() -> ServiceState | JSONResponse:
        state = app.state.container.current()
        if state is None:
            return JSONResponse({"error": "no dataset loaded"}, status_code=409)
        return state

    @app.exception_handler(OrdinalError)
    async def _domain_error(_request: Request, exc: OrdinalError) -> JSONResponse:
        return JSONResponse({"error": str(exc)}, status_code=400)

    @app.get("/regions")
    def regions():
        state = state_or_409()
        if isinstance(state, Response):
            return state
        return [
            {
                "id": p.region_id,
                "population": p.population,
                "li": p.li,
                "hi": p.hi,
                "group": p.group.label,
            }
            for p in state.profiles
        ]

    @app.get("/regions/{region_id}")
    def region(region_id: str):
        state = state_or_409()
        if isinstance(state, Response):
            return state
        profile = state.by_id.get(region_id)
        if profile is None:
            return JSONResponse({"error": f"unknown region {region_id!r}"}, status_code=404)
        return profile_to_dict(profile)

    @app.get("/compare")
    def compare(a: str, b: str):
        state = state_or_409()
        if isinstance(state, Response):
            return state
        pa, pb = state.by_id.get(a), state.by_id.get(b)
        if pa is None or pb is None:
            missing = a if pa is None else b
            return JSONResponse({"error": f"unknown region {missing!r}"}, status_code=404)
        matrix = state.matrix()
        ia, ib = matrix.index(a), matrix.index(b)
        from .cluster import l1_shape, location_distance, sorensen

        return {
            "profiles": {"a": profile_to_dict(pa), "b": profile_to_dict(pb)},
            "distance_terms": {
                "size": sorensen(pa.distribution.p * pa.population, pb.distribution.p * pb.population),
                "shape": l1_shape(pa.distribution, pb.distribution),
                "location": location_distance(pa.distribution, pb.distribution),
            },
            "total_distance": float(matrix.d[ia, ib]),
        }

    @app.get("/distances")
    def distances(region: str, sort: str = "asc", limit: int | None = None):
        state = state_or_409()
        if isinstance(state, Response):
            return state
        if sort not in ("asc", "desc"):
            return JSONResponse({"error": "sort must be asc or desc"}, status_code=400)
        if limit is not None and limit < 0:
            return JSONResponse({"error": "limit must be non-negative"}, status_code=400)
        if region not in state.by_id:
            return JSONResponse({"error": f"unknown region {region!r}"}, status_code=404)
        matrix = state.matrix()
        i = matrix.index(region)
        rows = [
            {"region": other, "distance": float(matrix.d[i, j])}
            for j, other in enumerate(matrix.ids)
            if j != i
        ]
        rows.sort(key=lambda r: (r["distance"], r["region"]), reverse=(sort == "desc"))
        if sort == "desc":  # keep ties ascending by id even when distances descend
            rows.sort(key=lambda r: r["region"])
            rows.sort(key=lambda r: r["distance"], reverse=True)
        if limit is not None:
            rows = rows[:limit]
        return {"region": region, "sort": sort, "distances": rows}

    @app.post("/clusters")
    def clusters(req: ClusterRequest):
        state = state_or_409()
        if isinstance(state, Response):
            return state
        try:
            clustering = state.clustering(req.k, req.seed)
        except KTooLarge as exc:
            return JSONResponse({"error": str(exc)}, status_code=400)
        matrix = state.matrix()
        groups: dict[str, list[str]] = {}
        for idx, rid in enumerate(matrix.ids):
            medoid = matrix.ids[clustering.medoids[clustering.assignment[idx]]]
            groups.setdefault(medoid, []).append(rid)
        return {
            "fingerprint": state.fingerprint,
            "k": clustering.k,
            "seed": req.seed,
            "medoids": list(clustering.medoid_ids(matrix)),
            "groups": groups,
            "cost": clustering.cost,
            "avg_silhouette": clustering.avg_silhouette,
        }

    @app.post("/dataset")
    async def load_dataset(request: Request):
        body = await request.body()
        if len(body) > max_body:
            return JSONResponse({"error": "dataset too large"}, status_code=413)
        try:
            records, issues = parse_subunit_csv(body.decode("utf-8"), app.state.container.n)
            dataset = aggregate(records, app.state.container.n)
            state = app.state.container.load(dataset)
        except MissingColumn as exc:
            return JSONResponse({"error": str(exc)}, status_code=400)
        except (OrdinalError, UnicodeDecodeError) as exc:
            return JSONResponse({"error": str(exc)}, status_code=400)
        return {
            "fingerprint": state.fingerprint,
            "regions": len(state.profiles),
            "issues": issues,
        }

    return app
