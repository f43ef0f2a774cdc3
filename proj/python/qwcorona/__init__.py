"""Signless Laplacian quantum walks on vertex complemented coronae."""

import json

from ._qwcorona import (
    Graph,
    InvalidSupportError,
    ParseError,
    PreconditionError,
    QuadExt,
    SpectralDecomposition,
    antipodal_identity_check,
    cocktail_party_graph,
    complete_graph,
    corona_eigenvalues,
    corona_full_q,
    corona_index,
    corona_transition_element,
    cycle_graph,
    decompose,
    empty_graph,
    fidelity_scan,
    generate,
    halved_cube_graph,
    hypercube_graph,
    parse_edge_list,
    parse_graph,
    path_graph,
    recognize,
    signless_laplacian,
    square_free_part,
    transition_amplitude,
    transition_matrix,
    vertex_complemented_corona,
)
from . import _qwcorona as _core

__all__ = [
    "Graph", "QuadExt", "SpectralDecomposition", "PreconditionError", "ParseError",
    "InvalidSupportError", "antipodal_identity_check", "certify_pst", "check_corona_pst",
    "cocktail_party_graph", "complete_graph", "corona_eigenvalues", "corona_full_q",
    "corona_index", "corona_spectrum", "corona_transition_element", "cycle_graph", "decompose",
    "empty_graph", "fidelity_scan", "generate", "halved_cube_graph", "hypercube_graph",
    "is_periodic", "k2_corona", "parse_edge_list", "parse_graph", "path_graph", "pgst_cocktail",
    "pgst_search", "recognize", "signless_laplacian", "square_free_part",
    "transition_amplitude", "transition_matrix", "vertex_complemented_corona",
]


def corona_spectrum(g, h, projectors=False):
    """Closed-form spectrum of Q(G ~o H) as a dict."""
    return json.loads(_core.corona_spectrum_json(g, h, projectors))


def certify_pst(graph, u, v):
    return json.loads(_core.certify_pst_json(graph, u, v))


def check_corona_pst(g, h, a, b):
    """a, b: "base:i", "copy:i:j" or (base, inner) tuples."""
    return json.loads(_core.check_corona_pst_json(g, h, a, b))


def k2_corona(n2, r2):
    return json.loads(_core.k2_corona_json(n2, r2))


def is_periodic(support):
    return json.loads(_core.periodicity_json(list(support)))


def pgst_search(g, h, u, v, epsilon=0.01, l_bound=1_000_000):
    return json.loads(_core.pgst_search_json(g, h, u, v, epsilon, l_bound))


def pgst_cocktail(m, epsilon=0.01, l_bound=1_000_000):
    return json.loads(_core.pgst_cocktail_json(m, epsilon, l_bound))
