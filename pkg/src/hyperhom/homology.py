"""Embedded homology of hypergraphs over the integers, the rationals,
and prime fields.

A hypergraph has no boundary operator of its own: the boundary of a
hyperedge may leave the span of the hyperedges. Two canonical repairs
exist inside the chain complex of the downward closure. The infimum
complex keeps the largest submodule of the hyperedge span that the
boundary maps into itself; the supremum complex is the smallest
boundary-stable submodule containing the span. Both have isomorphic
homology, which is what this module computes.

Over the integers each degree yields a finitely generated abelian
group. Field coefficients reuse the integral restricted boundary
matrices and take ranks in the field (exact rational rank, or rank mod
p), so Betti numbers always satisfy the universal-coefficient
relations with the integral answer.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .abelian import FGAbelianGroup, from_presentation
from .errors import IntegrityError, ValidationError
from .hypergraph import Hypergraph, SimplicialComplex, associated_complex
from .intlinalg import (
    LatticeSolver,
    SparseIntMatrix,
    column_hnf,
    invariant_factors,
    is_prime,
    kernel_basis,
    lattice_sum_basis,
    rank,
    rank_mod_p,
)

# ------------------------------------------------------------ coefficients


@dataclass(frozen=True)
class Coefficient:
    """Coefficient ring: the integers ("z"), the rationals ("q"), or a
    prime field ("zp" with the prime)."""

    kind: str
    p: int | None = None

    def __post_init__(self) -> None:
        if self.kind not in ("z", "q", "zp"):
            raise ValidationError(f"unknown coefficient kind: {self.kind!r}")
        if self.kind == "zp":
            if self.p is None or not is_prime(self.p):
                raise ValidationError(f"zp modulus must be prime, got {self.p!r}")
        elif self.p is not None:
            raise ValidationError(f"{self.kind!r} coefficients take no modulus")

    @property
    def is_field(self) -> bool:
        return self.kind != "z"

    def __str__(self) -> str:
        return f"zp:{self.p}" if self.kind == "zp" else self.kind


INTEGERS = Coefficient("z")
RATIONALS = Coefficient("q")


def mod_p(p: int) -> Coefficient:
    return Coefficient("zp", p)


def parse_coefficient(text: str) -> Coefficient:
    """Parse a coefficient tag: ``z``, ``q``, or ``zp:<prime>``."""
    if text == "z":
        return INTEGERS
    if text == "q":
        return RATIONALS
    if text.startswith("zp:"):
        try:
            p = int(text[3:])
        except ValueError:
            raise ValidationError(f"bad prime in coefficient tag: {text!r}") from None
        return mod_p(p)
    raise ValidationError(f"unknown coefficient tag: {text!r}")


# ------------------------------------------------------------------- chains


@dataclass(frozen=True)
class ChainElement:
    """Formal integer combination of simplices of one dimension.

    Keys are strictly increasing vertex-index tuples with degree+1
    entries; zero coefficients are never stored.
    """

    degree: int
    coeffs: dict[tuple[int, ...], int]

    def __post_init__(self) -> None:
        for s, c in self.coeffs.items():
            if len(s) != self.degree + 1:
                raise ValueError(f"simplex {s} has the wrong dimension")
            if c == 0:
                raise ValueError("zero coefficients must be dropped")

    @classmethod
    def make(cls, degree: int, items) -> "ChainElement":
        acc: dict[tuple[int, ...], int] = {}
        for s, c in dict(items).items():
            if c:
                acc[tuple(s)] = c
        return cls(degree, acc)

    @classmethod
    def of_simplex(cls, s: tuple[int, ...]) -> "ChainElement":
        return cls(len(s) - 1, {tuple(s): 1})

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "ChainElement") -> "ChainElement":
        if other.degree != self.degree:
            raise ValueError("cannot add chains of different degrees")
        acc = dict(self.coeffs)
        for s, c in other.coeffs.items():
            acc[s] = acc.get(s, 0) + c
        return ChainElement(self.degree, {s: c for s, c in acc.items() if c})

    def __neg__(self) -> "ChainElement":
        return ChainElement(self.degree, {s: -c for s, c in self.coeffs.items()})

    def __sub__(self, other: "ChainElement") -> "ChainElement":
        return self + (-other)

    def scaled(self, a: int) -> "ChainElement":
        if a == 0:
            return ChainElement(self.degree, {})
        return ChainElement(self.degree, {s: a * c for s, c in self.coeffs.items()})


def chain_boundary(c: ChainElement) -> ChainElement:
    """Simplicial boundary, purely combinatorial: drop vertex j with
    sign (-1)^j. Degree 0 maps to the (empty) degree -1 chain."""
    acc: dict[tuple[int, ...], int] = {}
    if c.degree > 0:
        for s, v in c.coeffs.items():
            for j in range(len(s)):
                f = s[:j] + s[j + 1 :]
                acc[f] = acc.get(f, 0) + (v if j % 2 == 0 else -v)
    return ChainElement(c.degree - 1, {s: v for s, v in acc.items() if v})


def chain_to_vector(c: ChainElement, k: SimplicialComplex) -> dict[int, int]:
    """Coordinates of a chain in the canonical simplex order of ``k``."""
    pos = k.simplex_positions(c.degree)
    out = {}
    for s, v in c.coeffs.items():
        if s not in pos:
            raise ValueError(f"simplex {s} is not in the complex")
        out[pos[s]] = v
    return out


def chain_from_vector(k: SimplicialComplex, n: int, vec: dict[int, int]) -> ChainElement:
    simplices = k.simplices_of_dim(n)
    return ChainElement(n, {simplices[i]: v for i, v in vec.items() if v})


def render_chain(c: ChainElement, k: SimplicialComplex) -> str:
    """Human-readable form like ``{a,b} - {b,c}`` in canonical order."""
    if c.is_zero():
        return "0"
    pos = k.simplex_positions(c.degree)
    parts = []
    for s, v in sorted(c.coeffs.items(), key=lambda kv: pos[kv[0]]):
        label = "{" + ",".join(k.vertices[i] for i in s) + "}"
        mag = "" if abs(v) == 1 else f"{abs(v)}*"
        parts.append(("- " if v < 0 else ("+ " if parts else "")) + mag + label)
    return " ".join(parts)


# --------------------------------------------------------------- boundaries


@lru_cache(maxsize=256)
def boundary_matrix(k: SimplicialComplex, n: int) -> SparseIntMatrix:
    """Matrix of the simplicial boundary from n-chains to (n-1)-chains.

    Columns follow the canonical n-simplex order, rows the (n-1) order;
    dropping vertex j contributes (-1)^j. Degree 0 maps to the zero
    module, so the matrix has no rows.
    """
    if n < 0:
        raise ValueError("degree must be non-negative")
    cols = k.simplices_of_dim(n)
    rows = k.simplices_of_dim(n - 1) if n > 0 else ()
    m = SparseIntMatrix(len(rows), len(cols))
    if n == 0:
        return m
    pos = k.simplex_positions(n - 1)
    for j, s in enumerate(cols):
        for drop in range(len(s)):
            m._cols[j][pos[s[:drop] + s[drop + 1 :]]] = -1 if drop % 2 else 1
    return m


# ---------------------------------------------------------- graded modules


@dataclass(frozen=True)
class GradedSubmodule:
    """A graded submodule of a chain complex, one basis per degree.

    ``boundaries[n]`` is the ambient boundary matrix from degree n to
    n-1 coordinates; ``bases[n]`` holds basis columns in ambient degree
    n coordinates. The submodule is expected to be boundary-stable
    (checked when homology is computed). Bases need not be saturated.
    """

    boundaries: tuple[SparseIntMatrix, ...]
    bases: tuple[SparseIntMatrix, ...]

    def __post_init__(self) -> None:
        if len(self.boundaries) != len(self.bases):
            raise ValueError("one boundary matrix per graded piece required")
        for n, (d, b) in enumerate(zip(self.boundaries, self.bases)):
            if d.ncols != b.nrows:
                raise ValueError(f"degree {n}: boundary domain != ambient rank")
            if n > 0 and d.nrows != self.bases[n - 1].nrows:
                raise ValueError(f"degree {n}: boundary range != ambient rank below")

    @property
    def top_degree(self) -> int:
        return len(self.bases) - 1

    def basis_rank(self, n: int) -> int:
        return self.bases[n].ncols if 0 <= n <= self.top_degree else 0

    def membership_solver(self, n: int) -> LatticeSolver:
        return LatticeSolver(self.bases[n])

    def contains(self, n: int, vector: dict[int, int]) -> bool:
        """Is the ambient coordinate vector in the degree-n lattice?"""
        return self.membership_solver(n).solve(vector) is not None


def restricted_boundaries(m: GradedSubmodule) -> list[SparseIntMatrix]:
    """Boundary matrices in the submodule's own basis coordinates.

    Entry n maps degree-n basis coefficients to degree-(n-1) basis
    coefficients. Raises IntegrityError if some boundary image leaves
    the submodule, i.e. the chain-complex property fails.
    """
    out: list[SparseIntMatrix] = []
    solver_below: LatticeSolver | None = None
    for n in range(m.top_degree + 1):
        basis = m.bases[n]
        cols = []
        for j in range(basis.ncols):
            if n == 0:
                cols.append({})
                continue
            img = m.boundaries[n].apply_to_column(basis.column(j))
            assert solver_below is not None
            coeffs = solver_below.solve(img)
            if coeffs is None:
                raise IntegrityError(
                    f"boundary of degree-{n} basis column {j} leaves the submodule"
                )
            cols.append({i: v for i, v in enumerate(coeffs) if v})
        out.append(SparseIntMatrix.from_columns(m.basis_rank(n - 1), cols))
        solver_below = LatticeSolver(basis)
    return out


def submodule_homology(
    m: GradedSubmodule, coeff: Coefficient = INTEGERS
) -> list[FGAbelianGroup] | list[int]:
    """Homology of a boundary-stable graded submodule, one value per
    degree 0..top_degree.

    Integral: kernel basis of each restricted boundary, relations from
    the degree above, cokernel via invariant factors. Field: Betti
    numbers from ranks of the same integer matrices taken in the field.
    """
    d = restricted_boundaries(m)
    top = m.top_degree
    if coeff.is_field:
        if coeff.kind == "q":
            ranks = [rank(dd) for dd in d]
        else:
            assert coeff.p is not None
            ranks = [rank_mod_p(dd, coeff.p) for dd in d]
        ranks.append(0)  # nothing above the top degree
        return [m.basis_rank(n) - ranks[n] - ranks[n + 1] for n in range(top + 1)]
    groups: list[FGAbelianGroup] = []
    for n in range(top + 1):
        cycles = kernel_basis(d[n])
        if cycles.ncols == 0:
            groups.append(FGAbelianGroup.trivial())
            continue
        if n == top or d[n + 1].ncols == 0:
            groups.append(FGAbelianGroup.free(cycles.ncols))
            continue
        solver = LatticeSolver(cycles)
        rel_cols = []
        for j in range(d[n + 1].ncols):
            coeffs = solver.solve(d[n + 1].column(j))
            if coeffs is None:
                raise IntegrityError(
                    f"degree-{n + 1} boundary image is not a degree-{n} cycle"
                )
            rel_cols.append({i: v for i, v in enumerate(coeffs) if v})
        relations = SparseIntMatrix.from_columns(cycles.ncols, rel_cols)
        groups.append(from_presentation(relations, ambient_rank=cycles.ncols))
    return groups


# ------------------------------------------------------------- inf and sup


def _hyperedge_positions(h: Hypergraph, k: SimplicialComplex, n: int) -> list[int]:
    pos = k.simplex_positions(n)
    return [pos[e] for e in h.edges_of_dim(n)]


def inf_bases_of_span(
    boundaries: tuple[SparseIntMatrix, ...], generators: tuple[tuple[int, ...], ...]
) -> tuple[SparseIntMatrix, ...]:
    """Largest boundary-stable graded submodule inside a coordinate span.

    ``generators[n]`` lists the ambient coordinates spanned at degree n.
    Degree n basis: kernel of (project away the degree n-1 generator
    coordinates, then apply the boundary restricted to the generator
    columns), embedded back into ambient coordinates, in canonical form.
    Works for any chain complex presented by its boundary matrices.
    """
    bases = []
    for n, full in enumerate(boundaries):
        ambient = full.ncols
        positions = generators[n]
        if not positions:
            bases.append(SparseIntMatrix(ambient, 0))
            continue
        keep_out = set(generators[n - 1]) if n > 0 else set()
        non_gen_rows = [i for i in range(full.nrows) if i not in keep_out]
        row_index = {r: i for i, r in enumerate(non_gen_rows)}
        cols = [
            {row_index[i]: v for i, v in full._cols[p].items() if i in row_index}
            for p in positions
        ]
        projected = SparseIntMatrix.from_columns(len(non_gen_rows), cols)
        ker = kernel_basis(projected)  # coefficients on generator columns
        basis_cols = [
            {positions[i]: v for i, v in ker._cols[j].items()}
            for j in range(ker.ncols)
        ]
        bases.append(column_hnf(SparseIntMatrix.from_columns(ambient, basis_cols)))
    return tuple(bases)


@lru_cache(maxsize=128)
def inf_chain(h: Hypergraph) -> GradedSubmodule:
    """Largest boundary-stable submodule inside the hyperedge span.

    Degree n basis: kernel of the composite (project onto simplices
    that are not (n-1)-hyperedges) after (boundary restricted to the
    degree-n hyperedge columns), written in ambient coordinates.
    """
    k = associated_complex(h)
    top = h.dim + 1
    boundaries = tuple(boundary_matrix(k, n) for n in range(top + 1))
    if h.is_closed():
        bases = tuple(
            SparseIntMatrix.identity(len(k.simplices_of_dim(n)))
            for n in range(top + 1)
        )
        return GradedSubmodule(boundaries, bases)
    generators = tuple(
        tuple(_hyperedge_positions(h, k, n)) for n in range(top + 1)
    )
    return GradedSubmodule(boundaries, inf_bases_of_span(boundaries, generators))


@lru_cache(maxsize=128)
def sup_chain(h: Hypergraph) -> GradedSubmodule:
    """Smallest boundary-stable submodule containing the hyperedge span:
    degree n is spanned by the n-hyperedges together with boundaries of
    the (n+1)-hyperedges."""
    k = associated_complex(h)
    top = h.dim + 1
    boundaries = tuple(boundary_matrix(k, n) for n in range(top + 1))
    bases = []
    for n in range(top + 1):
        ambient = len(k.simplices_of_dim(n))
        span = SparseIntMatrix.from_columns(
            ambient, [{p: 1} for p in _hyperedge_positions(h, k, n)]
        )
        if n + 1 <= top:
            above = _hyperedge_positions(h, k, n + 1)
            d_above = boundary_matrix(k, n + 1)
            image = SparseIntMatrix.from_columns(
                ambient, [dict(d_above._cols[p]) for p in above]
            )
        else:
            image = SparseIntMatrix(ambient, 0)
        bases.append(lattice_sum_basis(span, image))
    return GradedSubmodule(boundaries, tuple(bases))


def embedded_homology(
    h: Hypergraph, coeff: Coefficient = INTEGERS, verify: bool = False
) -> list[FGAbelianGroup] | list[int]:
    """Embedded homology of a hypergraph, degrees 0 through dim+1.

    Computed from the infimum complex. With ``verify`` the supremum
    complex is computed independently and the two answers must agree
    degree by degree.
    """
    result = submodule_homology(inf_chain(h), coeff)
    if verify:
        other = submodule_homology(sup_chain(h), coeff)
        if list(result) != list(other):
            raise IntegrityError(
                "infimum and supremum homology disagree: "
                f"inf={_render_values(result, coeff)} sup={_render_values(other, coeff)}"
            )
    return result


# ------------------------------------------------------ classical homology


def classical_homology(
    k: SimplicialComplex, coeff: Coefficient = INTEGERS
) -> list[FGAbelianGroup] | list[int]:
    """Simplicial homology of a complex, degrees 0 through dim+1.

    Standalone pipeline on the full chain complex: ranks and invariant
    factors of the raw boundary matrices, no submodule machinery. Used
    to cross-check the embedded pipeline on closed inputs.
    """
    top = k.dim + 1
    counts = [len(k.simplices_of_dim(n)) for n in range(top + 2)]
    mats = [boundary_matrix(k, n) for n in range(top + 2)]
    if coeff.is_field:
        if coeff.kind == "q":
            ranks = [rank(m) for m in mats]
        else:
            assert coeff.p is not None
            ranks = [rank_mod_p(m, coeff.p) for m in mats]
        return [counts[n] - ranks[n] - ranks[n + 1] for n in range(top + 1)]
    factors = [invariant_factors(m) for m in mats]
    out = []
    for n in range(top + 1):
        free = counts[n] - len(factors[n]) - len(factors[n + 1])
        torsion = [t for t in factors[n + 1] if t >= 2]
        out.append(FGAbelianGroup.from_parts(free, torsion))
    return out


# ---------------------------------------------------------------- rendering


def _render_values(values, coeff: Coefficient) -> str:
    return "[" + ", ".join(str(v) for v in values) + "]"


def homology_table(values, coeff: Coefficient) -> str:
    """Plain-text degree table, one ``H_n = ...`` line per degree."""
    lines = []
    for n, v in enumerate(values):
        shown = v if coeff.kind == "z" else f"rank {v}"
        lines.append(f"H_{n} = {shown}")
    return "\n".join(lines) + "\n"
