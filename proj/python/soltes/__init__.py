"""Exact Wiener-index vertex-deletion analysis on H(n,k,l,n0,t0) graph families.

The heavy lifting lives in the compiled ``soltes._core`` extension: graph
construction, bit-parallel all-pairs BFS, delta spectra, closed-form
evaluation, and the parameter sweep.
"""

from ._core import (  # noqa: F401
    CutVertexError,
    DeltaSpectrum,
    DisconnectedError,
    FSpec,
    Graph,
    HGraph,
    HParams,
    HitReport,
    InstanceReport,
    NonIntegralDeltaError,
    Range,
    Rational,
    SweepHit,
    SweepResult,
    SweepSkip,
    all_transmissions,
    bfs_distances,
    build_h,
    case_sums,
    delete_vertex,
    delta_closed_form,
    delta_of_vertex,
    delta_spectrum,
    delta_spectrum_orbit,
    is_connected,
    load_edge_list,
    parse_selector,
    r_m,
    realize_gadget,
    selector_string,
    sweep,
    t0_of,
    to_edge_list_string,
    tr_closed_form,
    transmission,
    verify_hit,
    verify_instance,
    wiener,
)

__version__ = "0.1.0"
