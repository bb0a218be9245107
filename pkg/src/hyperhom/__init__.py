"""Embedded homology of hypergraphs and Kunneth verification.

The public surface: hypergraph containers and parsing, the lattice-path
product, embedded homology over the integers / rationals / prime fields,
the two chain maps between tensor and product chains, the Kunneth
checker, and the randomized verification campaign.
"""

from .abelian import FGAbelianGroup, direct_sum
from .errors import (
    FormatError,
    HyperhomError,
    IntegrityError,
    ValidationError,
    VerificationError,
)
from .fuzz import FuzzConfig, FuzzFailure, FuzzReport, check_pair, run_fuzz
from .homology import (
    ChainElement,
    Coefficient,
    INTEGERS,
    RATIONALS,
    chain_boundary,
    classical_homology,
    embedded_homology,
    homology_table,
    inf_chain,
    mod_p,
    parse_coefficient,
    render_chain,
    sup_chain,
)
from .hypergraph import (
    Hypergraph,
    SimplicialComplex,
    associated_complex,
    dumps_structured,
    hypergraph_from_edges,
    lattice_paths,
    parse_hypergraph,
    product_boxtimes,
    product_complex,
    random_hypergraph,
    to_structured,
    to_text,
)
from .kunneth import (
    ChainMapReport,
    KunnethReport,
    ProductContext,
    TensorChain,
    TensorContext,
    aw_map,
    ez_map,
    field_kunneth_check,
    inf_tensor_basis,
    kunneth_check,
    render_tensor_chain,
    restricted_chainmap_check,
    tensor_boundary,
    tensor_of_chains,
)

__all__ = [
    "ChainElement",
    "ChainMapReport",
    "Coefficient",
    "FGAbelianGroup",
    "FormatError",
    "FuzzConfig",
    "FuzzFailure",
    "FuzzReport",
    "Hypergraph",
    "HyperhomError",
    "INTEGERS",
    "IntegrityError",
    "KunnethReport",
    "ProductContext",
    "RATIONALS",
    "SimplicialComplex",
    "TensorChain",
    "TensorContext",
    "ValidationError",
    "VerificationError",
    "associated_complex",
    "aw_map",
    "chain_boundary",
    "check_pair",
    "classical_homology",
    "direct_sum",
    "dumps_structured",
    "embedded_homology",
    "ez_map",
    "field_kunneth_check",
    "homology_table",
    "hypergraph_from_edges",
    "inf_chain",
    "inf_tensor_basis",
    "kunneth_check",
    "lattice_paths",
    "mod_p",
    "parse_coefficient",
    "parse_hypergraph",
    "product_boxtimes",
    "product_complex",
    "random_hypergraph",
    "render_chain",
    "render_tensor_chain",
    "restricted_chainmap_check",
    "run_fuzz",
    "sup_chain",
    "tensor_boundary",
    "tensor_of_chains",
    "to_structured",
    "to_text",
]
