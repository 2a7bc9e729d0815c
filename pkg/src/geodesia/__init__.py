"""Exact strong geodetic sets and audits of corona-type graph products."""

from .corona import (
    Base,
    CoronaLabeledGraph,
    Satellite,
    Variant,
    generalized_corona,
    generalized_edge_corona,
    generalized_neighborhood_corona,
    iterated_corona,
    uniform,
)
from .geodetic import (
    TWO_GEODESIC,
    UNBOUNDED,
    LengthBound,
    SolveResult,
    SolverLimits,
    StrongGeodeticCertificate,
    check_strong_geodetic,
    geodetic_number,
    naive_oracle,
    strong_geodetic_number,
)
from .graph import (
    DistanceTable,
    Graph,
    antipodal_pairs,
    build_graph,
    distances,
    enumerate_geodesics,
    generate,
    pendant_vertices,
)

__version__ = "0.1.0"
