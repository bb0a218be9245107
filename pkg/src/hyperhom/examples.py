"""Small named hypergraphs used by the demos, the test suite, and the
fuzz baselines."""

from __future__ import annotations

from .hypergraph import Hypergraph, SimplicialComplex, associated_complex, hypergraph_from_edges


def vertex_hypergraph(token: str = "pt") -> Hypergraph:
    """A single vertex."""
    return hypergraph_from_edges([[token]])


def triangle_boundary() -> SimplicialComplex:
    """Three vertices and three edges, no 2-cell: a circle."""
    return associated_complex(
        hypergraph_from_edges([["a", "b"], ["b", "c"], ["a", "c"]])
    )


def product_demo_pair() -> tuple[Hypergraph, Hypergraph]:
    """The pair whose product has five hyperedges and whose closure
    picks up one diagonal edge: an interval with one endpoint times an
    interval with the other endpoint."""
    h = hypergraph_from_edges([["v0"], ["v0", "v1"]])
    h2 = hypergraph_from_edges([["w1"], ["w0", "w1"]])
    return h, h2


def homology_demo_pair() -> tuple[Hypergraph, Hypergraph]:
    """A non-closed path-like hypergraph and a closed segment; both
    factors and their product have rank-1 degree-0 homology only."""
    h = hypergraph_from_edges([["v0"], ["v0", "v1"], ["v1", "v2"], ["v0", "v1", "v2"]])
    h2 = hypergraph_from_edges([["w0"], ["w1"], ["w0", "w1"]])
    return h, h2


def tensor_membership_pair() -> tuple[Hypergraph, Hypergraph]:
    """Two hyperedge-path hypergraphs whose tensor product carries a
    2-chain that decomposes only after regrouping terms."""
    h = hypergraph_from_edges(
        [["v1"], ["v3"], ["v1", "v2"], ["v2", "v3"], ["v1", "v3"]]
    )
    h2 = hypergraph_from_edges(
        [["w2"], ["w3"], ["w1", "w2"], ["w2", "w3"], ["w1", "w3"]]
    )
    return h, h2


PROJECTIVE_PLANE_FACETS = (
    ("p0", "p1", "p4"),
    ("p0", "p1", "p5"),
    ("p0", "p2", "p3"),
    ("p0", "p2", "p4"),
    ("p0", "p3", "p5"),
    ("p1", "p2", "p3"),
    ("p1", "p2", "p5"),
    ("p1", "p3", "p4"),
    ("p2", "p4", "p5"),
    ("p3", "p4", "p5"),
)


def projective_plane() -> SimplicialComplex:
    """The 6-vertex triangulation of the projective plane: 10 triangles,
    all 15 edges, torsion Z/2 in degree 1."""
    return associated_complex(hypergraph_from_edges(PROJECTIVE_PLANE_FACETS))
