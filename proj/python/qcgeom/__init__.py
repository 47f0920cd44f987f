"""Connectivity-graph geometry and distance bounds for stabilizer codes."""

from ._core import (  # noqa: F401
    ConnectivityGraph,
    PauliOperator,
    StabilizerCode,
    __version__,
    assouad_fit,
    b_max,
    ball,
    boundary,
    build_connectivity_graph,
    certify,
    complete_graph,
    covering_number,
    find_nagata_decomposition,
    five_qubit_code,
    grid_graph,
    is_correctable,
    logical_count,
    min_distance,
    parse_code_file,
    path_graph,
    random_local_1d,
    repetition_code,
    serialize_code_file,
    set_distance,
    surface_code,
    symplectic_product,
    verify_decomposition,
)
