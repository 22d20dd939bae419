"""Construction and verification lab for triple-system Ramsey problems.

Thin convenience layer over the compiled core: everything heavy lives in
``ramseyforge._core``; this module only re-exports it and decodes the
pipeline's JSON payload.
"""

import json as _json

from ._core import (
    ConstructionFailed,
    DomainError,
    Graph,
    PairColoring,
    SizeLimitExceeded,
    ThreeGraph,
    appendix_eval,
    build_gamma,
    build_gamma_cfs,
    census_vs_bound,
    construct_auxiliary,
    e_recursion_beta,
    enumerate_triangle_free,
    f3_small,
    find_tripartite_hole,
    girth,
    hom_exists,
    independence_number,
    independence_number_3,
    link_vs_link_bound,
    lower_bound_l31,
    play_game,
    ramsey_upper_eval,
    random_coloring,
    reduce_on_host,
    required_host_size,
    verify_link_free,
)
from ._core import run_pipeline as _run_pipeline_raw

__all__ = [
    "ConstructionFailed",
    "DomainError",
    "Graph",
    "PairColoring",
    "SizeLimitExceeded",
    "ThreeGraph",
    "appendix_eval",
    "build_gamma",
    "build_gamma_cfs",
    "census_vs_bound",
    "construct_auxiliary",
    "e_recursion_beta",
    "enumerate_triangle_free",
    "f3_small",
    "find_tripartite_hole",
    "girth",
    "hom_exists",
    "independence_number",
    "independence_number_3",
    "link_vs_link_bound",
    "lower_bound_l31",
    "play_game",
    "ramsey_upper_eval",
    "random_coloring",
    "reduce_on_host",
    "required_host_size",
    "run_pipeline",
    "verify_link_free",
]


def run_pipeline(**kwargs):
    """Run the palette -> coloring -> certification pipeline.

    Returns the report as a dict; deterministic for fixed arguments.
    """
    return _json.loads(_run_pipeline_raw(**kwargs))
