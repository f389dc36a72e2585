"""Characteristic matrices, artinian quotients of Stanley-Reisner rings, and
Koszul homology of the quotient over its degree-two generators.

A characteristic matrix defines n linear forms t_j = sum_i lambda_ji v_i of
cohomological degree 2. When they form a linear system of parameters, the
quotient k[K]/(t_1, ..., t_n) is a finite-dimensional graded algebra (the
cohomology ring of a quasitoric manifold when the matrix comes from a torus
action), and the Koszul homology of that quotient over a basis of its
degree-two part recovers the graded dimensions of the moment-angle
cohomology.

The lsop test is the facet column-rank criterion over the given field; the
integral determinant-one condition of honest torus actions is deliberately
not modeled (over a field the rank condition is the operative one).
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Sequence

from .complexes import SimplicialComplex, VertexSet, submasks
from .errors import BadParams, DimensionMismatch, NotGorenstein, NotLsop, UnknownCatalogEntry
from .fields import FieldSpec
from .linalg import EchelonBasis, ExactMatrix, rank, rref
from .rings import is_gorenstein, socle
from .tor import betti_table_hochster


@dataclass(frozen=True)
class CharMatrix:
    """Integer n x m matrix; row j gives the linear form t_j."""

    n: int
    m: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if len(self.rows) != self.n or any(len(r) != self.m for r in self.rows):
            raise DimensionMismatch(f"expected {self.n} rows of length {self.m}")

    @classmethod
    def of(cls, rows: Sequence[Sequence[int]]) -> "CharMatrix":
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        if not rows:
            raise DimensionMismatch("need at least one row")
        return cls(len(rows), len(rows[0]), rows)

    def columns(self, mask: int) -> list[list[int]]:
        cols = [c for c in range(self.m) if mask >> c & 1]
        return [[row[c] for c in cols] for row in self.rows]


def is_lsop(k: SimplicialComplex, lam: CharMatrix, field: FieldSpec) -> bool:
    """Facet rank criterion: the columns over each facet must be independent.

    Column-subset monotonicity extends the test from facets to all faces; for
    Cohen-Macaulay complexes an lsop is automatically a regular sequence.
    """
    if lam.m != k.m:
        raise DimensionMismatch(f"matrix has {lam.m} columns, complex has {k.m} vertices")
    if lam.n != k.dim + 1:
        raise DimensionMismatch(f"matrix has {lam.n} rows, complex needs dim+1 = {k.dim + 1}")
    for facet in k.facet_masks:
        cols = facet.bit_count()
        sub = ExactMatrix.from_rows(
            [[field.of_int(x) for x in row] for row in lam.columns(facet)], cols
        )
        if rank(sub, field) != cols:
            return False
    return True


@dataclass
class GradedAlgebra:
    """Finite-dimensional commutative graded algebra on a monomial basis.

    Basis labels are exponent vectors of the standard monomials surviving the
    degreewise elimination; degrees are cohomological (all even). Structure
    constants are stored sparsely; ``generators`` are the degree-two basis
    elements.
    """

    field: FieldSpec
    labels: tuple[tuple[int, ...], ...]
    degrees: tuple[int, ...]
    products: dict[tuple[int, int], dict[int, object]]
    generators: tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.labels)

    def basis_degrees(self) -> list[int]:
        return list(self.degrees)

    def dims_by_degree(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for d in self.degrees:
            out[d] = out.get(d, 0) + 1
        return dict(sorted(out.items()))

    def multiply_basis(self, a: int, b: int) -> dict[int, object]:
        if a > b:
            a, b = b, a
        return self.products.get((a, b), {})

    def multiply(self, x: dict[int, object], y: dict[int, object]) -> dict[int, object]:
        field = self.field
        out: dict[int, object] = {}
        for a, ca in x.items():
            for b, cb in y.items():
                prod = self.multiply_basis(a, b)
                if not prod:
                    continue
                f = field.mul(ca, cb)
                for g, cg in prod.items():
                    out[g] = field.add(out.get(g, field.zero()), field.mul(f, cg))
        return {g: c for g, c in out.items() if not field.is_zero(c)}


def _monomials_of_degree(k: SimplicialComplex, degree: int) -> list[tuple[int, ...]]:
    """Exponent vectors of degree-d monomials with face support, graded-lex
    descending (larger exponents on earlier variables first)."""
    if degree == 0:
        return [(0,) * k.m]
    out: list[tuple[int, ...]] = []
    for card, faces in k.faces_by_card().items():
        if card == 0 or card > degree:
            continue
        for mask in faces:
            support = [v for v in range(k.m) if mask >> v & 1]
            # compositions of `degree` into len(support) positive parts
            for cuts in itertools.combinations(range(1, degree), card - 1):
                parts = []
                prev = 0
                for c in (*cuts, degree):
                    parts.append(c - prev)
                    prev = c
                exps = [0] * k.m
                for v, e in zip(support, parts):
                    exps[v] = e
                out.append(tuple(exps))
    out.sort(reverse=True)
    return out


def quotient_algebra(k: SimplicialComplex, lam: CharMatrix, field: FieldSpec) -> GradedAlgebra:
    """k[K] modulo the linear forms of the matrix, computed degree by degree.

    In each polynomial degree d the span of {t_j * (monomials of degree d-1)}
    is eliminated from the monomial basis; pivots are the leading monomials in
    graded-lex order and the surviving standard monomials form the basis.
    Terminates at the first zero degree (the quotient is artinian).
    """
    if not is_lsop(k, lam, field):
        raise NotLsop("the rows are not a linear system of parameters for this complex")
    forms = [[field.of_int(x) for x in row] for row in lam.rows]

    std_by_degree: list[list[tuple[int, ...]]] = [[(0,) * k.m]]
    reducers: list[dict] = [dict(monomials=[(0,) * k.m], index={(0,) * k.m: 0}, pivot_rows=[], std_cols=[0])]
    degree = 0
    while std_by_degree[degree]:
        degree += 1
        monos = _monomials_of_degree(k, degree)
        index = {mono: c for c, mono in enumerate(monos)}
        rows = []
        for mono in _monomials_of_degree(k, degree - 1):
            for t in forms:
                row = [field.zero()] * len(monos)
                nonzero = False
                for v in range(k.m):
                    if field.is_zero(t[v]):
                        continue
                    bumped = list(mono)
                    bumped[v] += 1
                    support = 0
                    for pos, e in enumerate(bumped):
                        if e:
                            support |= 1 << pos
                    if not k.is_face_mask(support):
                        continue
                    col = index[tuple(bumped)]
                    row[col] = field.add(row[col], t[v])
                    nonzero = True
                if nonzero:
                    rows.append(row)
        if rows:
            reduced, pivots = rref(ExactMatrix.from_rows(rows, len(monos)), field)
            pivot_rows = [reduced.rows[r] for r in range(len(pivots))]
        else:
            pivots, pivot_rows = [], []
        pivot_set = set(pivots)
        std_cols = [c for c in range(len(monos)) if c not in pivot_set]
        std_by_degree.append([monos[c] for c in std_cols])
        reducers.append(
            dict(monomials=monos, index=index, pivots=list(pivots), pivot_rows=pivot_rows, std_cols=std_cols)
        )
    top_poly_degree = degree - 1

    labels: list[tuple[int, ...]] = []
    degrees: list[int] = []
    position: dict[tuple[int, ...], int] = {}
    for d, monos in enumerate(std_by_degree[: top_poly_degree + 1]):
        for mono in monos:
            position[mono] = len(labels)
            labels.append(mono)
            degrees.append(2 * d)

    def reduce_in_degree(d: int, vector: dict[tuple[int, ...], object]) -> dict[int, object]:
        """Express a degree-d element in the standard-monomial basis."""
        if d > top_poly_degree:
            return {}
        data = reducers[d]
        index = data["index"]
        dense = [field.zero()] * len(data["monomials"])
        for mono, c in vector.items():
            dense[index[mono]] = field.add(dense[index[mono]], c)
        for piv, row in zip(data.get("pivots", []), data.get("pivot_rows", [])):
            c = dense[piv]
            if field.is_zero(c):
                continue
            for j, x in enumerate(row):
                if not field.is_zero(x):
                    dense[j] = field.sub(dense[j], field.mul(c, x))
        out = {}
        for col in data["std_cols"]:
            if not field.is_zero(dense[col]):
                out[position[data["monomials"][col]]] = dense[col]
        return out

    products: dict[tuple[int, int], dict[int, object]] = {}
    for a in range(len(labels)):
        for b in range(a, len(labels)):
            da, db = degrees[a] // 2, degrees[b] // 2
            target = da + db
            if target > top_poly_degree:
                continue
            merged = tuple(x + y for x, y in zip(labels[a], labels[b]))
            support = 0
            for pos, e in enumerate(merged):
                if e:
                    support |= 1 << pos
            if not k.is_face_mask(support):
                continue
            result = reduce_in_degree(target, {merged: field.one()})
            if result:
                products[(a, b)] = result

    generators = tuple(i for i, d in enumerate(degrees) if d == 2)
    return GradedAlgebra(field, tuple(labels), tuple(degrees), products, generators)


# -- Koszul homology of a finite algebra over its degree-two generators -------------


@dataclass
class KoszulOfAlgebraResult:
    """Bigraded homology dims of A (x) Lambda(u_1..u_g), d(u_i) = z_i.

    Keys are (homological degree, internal degree); each u_i carries internal
    degree 2, so the comparable cohomological degree of a class is
    internal - homological.
    """

    dims: dict[tuple[int, int], int]

    def total_dim(self) -> int:
        return sum(self.dims.values())

    def by_cohomological_degree(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for (h, internal), dim in self.dims.items():
            deg = internal - h
            out[deg] = out.get(deg, 0) + dim
        return dict(sorted(out.items()))

    def poincare_series(self) -> dict[int, int]:
        """Total dims per homological degree."""
        out: dict[int, int] = {}
        for (h, _), dim in self.dims.items():
            out[h] = out.get(h, 0) + dim
        return dict(sorted(out.items()))


def koszul_homology_of_algebra(algebra: GradedAlgebra) -> KoszulOfAlgebraResult:
    """Finite Koszul complex on the declared degree-two generators."""
    field = algebra.field
    gens = algebra.generators
    g = len(gens)
    # basis elements (a, sigma) grouped by (homological, internal) degree
    blocks: dict[tuple[int, int], list[tuple[int, int]]] = {}
    for sigma in submasks((1 << g) - 1):
        h = sigma.bit_count()
        for a in range(algebra.dim):
            key = (h, algebra.degrees[a] + 2 * h)
            blocks.setdefault(key, []).append((a, sigma))
    for items in blocks.values():
        items.sort(key=lambda t: (t[1], t[0]))
    index = {key: {elem: i for i, elem in enumerate(items)} for key, items in blocks.items()}

    ranks: dict[tuple[int, int], int] = {}
    for (h, internal), items in sorted(blocks.items()):
        if h == 0:
            continue
        target_key = (h - 1, internal)
        target_index = index.get(target_key, {})
        mat = ExactMatrix.zeros(len(blocks.get(target_key, ())), len(items), field)
        for col, (a, sigma) in enumerate(items):
            sign = 1
            rest = sigma
            while rest:
                low = rest & -rest
                smaller = sigma ^ low
                z = gens[low.bit_length() - 1]
                for b, c in algebra.multiply_basis(a, z).items():
                    row = target_index[(b, smaller)]
                    coeff = c if sign > 0 else field.neg(c)
                    mat.rows[row][col] = field.add(mat.rows[row][col], coeff)
                sign = -sign
                rest ^= low
        ranks[(h, internal)] = rank(mat, field)

    dims: dict[tuple[int, int], int] = {}
    for (h, internal), items in sorted(blocks.items()):
        dim = len(items) - ranks.get((h, internal), 0) - ranks.get((h + 1, internal), 0)
        if dim:
            dims[(h, internal)] = dim
    return KoszulOfAlgebraResult(dims)


# -- the recovery check ---------------------------------------------------------------


@dataclass
class ZpRecoveryReport:
    """Degreewise comparison of Koszul homology of the quotient against the
    moment-angle cohomology dimensions."""

    passed: bool
    quotient_side: dict[int, int]
    moment_angle_side: dict[int, int]
    first_discrepancy: str | None


def verify_zp_recovery(
    k: SimplicialComplex, lam: CharMatrix, field: FieldSpec
) -> ZpRecoveryReport:
    """Koszul homology of k[K]/(t) over its degree-2 part, binned by
    cohomological degree, must equal the Betti-table bins."""
    algebra = quotient_algebra(k, lam, field)
    left = koszul_homology_of_algebra(algebra).by_cohomological_degree()
    right = betti_table_hochster(k, field).by_cohomological_degree()
    if left == right:
        return ZpRecoveryReport(True, left, right, None)
    for deg in sorted(set(left) | set(right)):
        if left.get(deg, 0) != right.get(deg, 0):
            return ZpRecoveryReport(
                False,
                left,
                right,
                f"degree {deg}: quotient side {left.get(deg, 0)} != moment-angle side {right.get(deg, 0)}",
            )
    return ZpRecoveryReport(False, left, right, "unreachable")


# -- indecomposability certificates ----------------------------------------------------


#: Shipped with every NotCertified report: a product split of the base does
#: not imply a tensor split of the quotient ring. The standard example is
#: H*(CP^3 # CP^3): a quasitoric manifold over the prism (interval x triangle)
#: whose cohomology admits no nontrivial tensor product decomposition.
POLYTOPE_SPLIT_CAVEAT = (
    "a product decomposition of the base polytope does NOT imply a tensor "
    "decomposition of the quotient ring; e.g. H*(CP^3 # CP^3) over the prism "
    "admits no nontrivial tensor product decomposition"
)


@dataclass
class Certificate:
    """Sound one-directional certificate for tensor indecomposability.

    ``certified`` carries the trivial-join witness: if the complex does not
    split as a join (and is Gorenstein*), no quotient by an lsop can split as
    a tensor product. ``NotCertified`` only reports the join split; it never
    claims the quotient actually decomposes (see the caveat).
    """

    certified: bool
    reason: str
    parts: tuple[VertexSet, ...]
    cone_vertices: VertexSet
    search: "QuotientSplitSearchResult | None" = None


def indecomposability_certificate(
    k: SimplicialComplex,
    lam: CharMatrix,
    field: FieldSpec,
    seed: int = 1729,
    search_trials: int = 25,
) -> Certificate:
    """Certify that k[K]/(t) admits no nontrivial tensor decomposition.

    Sound direction only: join-indecomposable Gorenstein* base implies
    tensor-indecomposable quotient. The certificate is double-checked by a
    bounded randomized split search over the quotient algebra (a property
    probe, not a proof of completeness).
    """
    if not is_lsop(k, lam, field):
        raise NotLsop("the rows are not a linear system of parameters for this complex")
    report = is_gorenstein(k, field)
    if not report.is_gorenstein_star:
        raise NotGorenstein("certificate requires a Gorenstein* complex")
    decomposition = k.join_decomposition()
    if decomposition.is_trivial:
        algebra = quotient_algebra(k, lam, field)
        search = search_quotient_tensor_split(algebra, trials=search_trials, seed=seed)
        assert not search.found, "sound certificate contradicted by a found split"
        reason = (
            "join decomposition is trivial (single part, no cone vertices); "
            f"randomized quotient split search found nothing in {search.trials} trials"
        )
        return Certificate(
            True, reason, decomposition.parts, decomposition.cone_vertices, search
        )
    parts = " | ".join(str(p) for p in decomposition.parts)
    reason = f"base splits as a join: parts {parts}; {POLYTOPE_SPLIT_CAVEAT}"
    return Certificate(False, reason, decomposition.parts, decomposition.cone_vertices, None)


@dataclass
class QuotientSplitSearchResult:
    """Outcome of the bounded quotient split search; negative results prove
    nothing (the search is not complete)."""

    found: bool
    detail: str | None
    trials: int
    seed: int


def _subalgebra_basis(
    algebra: GradedAlgebra, seed_vectors: list[dict[int, object]]
) -> list[dict[int, object]]:
    """Basis (as sparse vectors) of the unital subalgebra the elements generate."""
    field = algebra.field
    span = EchelonBasis(field, algebra.dim)
    unit = [i for i, d in enumerate(algebra.degrees) if d == 0]
    assert len(unit) == 1
    elements: list[dict[int, object]] = [{unit[0]: field.one()}]
    span.add([field.one() if i == unit[0] else field.zero() for i in range(algebra.dim)])
    for vec in seed_vectors:
        dense = [vec.get(i, field.zero()) for i in range(algebra.dim)]
        if span.add(dense):
            elements.append(vec)
    frontier = list(elements)
    while frontier:
        nxt = []
        for x in frontier:
            for y in seed_vectors:
                prod = algebra.multiply(x, y)
                dense = [prod.get(i, field.zero()) for i in range(algebra.dim)]
                if span.add(dense):
                    elements.append(prod)
                    nxt.append(prod)
        frontier = nxt
    return elements


def _is_tensor_split(
    algebra: GradedAlgebra,
    split_a: list[dict[int, object]],
    split_b: list[dict[int, object]],
) -> bool:
    """True when the generated subalgebras multiply bijectively onto A."""
    field = algebra.field
    basis_a = _subalgebra_basis(algebra, split_a)
    basis_b = _subalgebra_basis(algebra, split_b)
    if len(basis_a) <= 1 or len(basis_b) <= 1:
        return False
    if len(basis_a) * len(basis_b) != algebra.dim:
        return False
    span = EchelonBasis(field, algebra.dim)
    count = 0
    for x in basis_a:
        for y in basis_b:
            prod = algebra.multiply(x, y)
            dense = [prod.get(i, field.zero()) for i in range(algebra.dim)]
            if span.add(dense):
                count += 1
    return count == algebra.dim


def search_quotient_tensor_split(
    algebra: GradedAlgebra, trials: int = 25, seed: int = 1729
) -> QuotientSplitSearchResult:
    """Bounded randomized tensor-split search over a degree-2-generated algebra.

    Tries every bipartition of the standard degree-two basis first, then
    random invertible mixes of the generators; a candidate split counts only
    if the generated subalgebras multiply bijectively onto the whole algebra.
    """
    field = algebra.field
    g = len(algebra.generators)
    rng = random.Random(seed)
    if g < 2 or algebra.dim < 4:
        return QuotientSplitSearchResult(False, None, trials, seed)

    used = 0
    for size in range(1, g // 2 + 1):
        for combo in itertools.combinations(range(g), size):
            if used >= trials:
                return QuotientSplitSearchResult(False, None, trials, seed)
            used += 1
            split_a = [{algebra.generators[i]: field.one()} for i in combo]
            split_b = [
                {algebra.generators[i]: field.one()} for i in range(g) if i not in combo
            ]
            if _is_tensor_split(algebra, split_a, split_b):
                return QuotientSplitSearchResult(
                    True, f"generator bipartition {combo}", trials, seed
                )
    while used < trials:
        used += 1
        cut = rng.randint(1, g - 1)
        mix = [[field.of_int(rng.randint(-2, 2)) for _ in range(g)] for _ in range(g)]
        if rank(ExactMatrix.from_rows([list(r) for r in mix], g), field) != g:
            continue

        def as_vectors(rows):
            out = []
            for r in rows:
                vec = {
                    algebra.generators[i]: c
                    for i, c in enumerate(r)
                    if not field.is_zero(c)
                }
                if vec:
                    out.append(vec)
            return out

        split_a = as_vectors(mix[:cut])
        split_b = as_vectors(mix[cut:])
        if split_a and split_b and _is_tensor_split(algebra, split_a, split_b):
            return QuotientSplitSearchResult(True, "random generator mix", trials, seed)
    return QuotientSplitSearchResult(False, None, trials, seed)


# -- shipped characteristic matrices -----------------------------------------------------


def charmatrix_cpn(n: int) -> CharMatrix:
    """Identity block plus an all-minus-one column: the standard CP^n data."""
    if n < 1:
        raise BadParams("charmatrix_cpn needs n >= 1")
    rows = [[1 if j == i else 0 for j in range(n)] + [-1] for i in range(n)]
    return CharMatrix.of(rows)


def charmatrix_surface_4gon() -> CharMatrix:
    """Quasitoric surface over the square with quotient k[x,y]/(x^2, y^2)."""
    return CharMatrix.of([[1, 0, 1, 0], [0, 1, 0, 1]])


def charmatrix_hirzebruch(a: int) -> CharMatrix:
    """Hirzebruch-type family over the square: quotient k[x,y]/(x^2+a xy, y^2)."""
    return CharMatrix.of([[1, 0, -1, a], [0, 1, 0, -1]])


def charmatrix_cp3_connected_sum() -> CharMatrix:
    """Characteristic data over the prism dual (two points join a triangle
    boundary, vertices 1,2 | 3,4,5) whose quotient is k[x,y]/(xy, x^3 - y^3),
    the cohomology ring of CP^3 # CP^3. All facet minors are +-1, so this is
    an lsop over every field."""
    return CharMatrix.of(
        [
            [-1, 1, 1, 0, 0],
            [-1, 1, 0, 1, 0],
            [-1, 1, 0, 0, 1],
        ]
    )


_CHARMATRICES = {
    "cpn": (lambda p: charmatrix_cpn(*p), "n", "standard data for CP^n over boundary_simplex(n)"),
    "surface_4gon": (
        lambda p: charmatrix_surface_4gon(),
        "",
        "quasitoric surface over polygon(4)",
    ),
    "hirzebruch": (
        lambda p: charmatrix_hirzebruch(*p),
        "a",
        "Hirzebruch-type family over polygon(4)",
    ),
    "cp3_connected_sum": (
        lambda p: charmatrix_cp3_connected_sum(),
        "",
        "CP^3 # CP^3 over prism_dual()",
    ),
}


def charmatrix_catalog(name: str, params: Sequence[int] = ()) -> CharMatrix:
    try:
        builder, _, _ = _CHARMATRICES[name]
    except KeyError:
        raise UnknownCatalogEntry(
            f"unknown characteristic matrix {name!r}; known: {', '.join(sorted(_CHARMATRICES))}"
        ) from None
    try:
        return builder(list(params))
    except (TypeError, ValueError) as exc:
        raise BadParams(f"bad parameters {list(params)} for {name!r}: {exc}") from None


def charmatrix_inventory() -> list[tuple[str, str, str]]:
    return [(name, params, desc) for name, (_, params, desc) in sorted(_CHARMATRICES.items())]


def quotient_poincare_duality(algebra: GradedAlgebra) -> bool:
    """Socle check for the quotient: one-dimensional in the top degree."""
    return socle(algebra).is_poincare_duality
