"""Poincare duality and Gorenstein detection, join extraction from tensor
data, Kunneth verification, and relabeling-invariant algebra fingerprints.

Ring-isomorphism testing is NOT implemented (there is no known efficient
algorithm); fingerprints are one-sided invariants, so `compare` can prove two
complexes different but never isomorphic. Randomized searches are seeded and
the seed is recorded in every report.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Protocol, Sequence

from .complexes import SimplicialComplex, VertexSet, _mask_vertices
from .errors import NoValidSplit, NotPoincareDuality, SocleNotSpanned, VerdictMismatch
from .fields import DEFAULT_FIELDS, FieldSpec
from .linalg import (
    ExactMatrix,
    cochain_complex_within,
    cohomology_dims,
    rank,
    reduced_cochain_complex,
)
from .tor import BettiTable, TorAlgebra, tor_algebra


class FiniteGradedAlgebra(Protocol):
    """What socle and split searches need: a based finite graded algebra."""

    field: FieldSpec

    @property
    def dim(self) -> int: ...

    def basis_degrees(self) -> list[int]: ...

    def multiply_basis(self, a: int, b: int) -> dict[int, object]: ...


# -- socle -----------------------------------------------------------------------


@dataclass
class SocleReport:
    """Annihilator of the positive-degree part, degree by degree.

    ``is_poincare_duality`` holds exactly when the socle is one-dimensional
    and concentrated in the top nonzero degree.
    """

    field: FieldSpec
    top_degree: int
    socle_dims: dict[int, int]
    socle_basis: dict[int, list[dict[int, object]]]

    @property
    def total_dim(self) -> int:
        return sum(self.socle_dims.values())

    @property
    def is_poincare_duality(self) -> bool:
        return self.total_dim == 1 and self.socle_dims.get(self.top_degree, 0) == 1


def socle(algebra: FiniteGradedAlgebra) -> SocleReport:
    """Kernel of the stacked multiplication maps by positive-degree classes."""
    field = algebra.field
    degrees = algebra.basis_degrees()
    top = max(degrees)
    positive = [b for b, d in enumerate(degrees) if d > 0]
    socle_dims: dict[int, int] = {}
    socle_basis: dict[int, list[dict[int, object]]] = {}
    for deg in sorted(set(degrees)):
        source = [a for a, d in enumerate(degrees) if d == deg]
        rows: list[list] = []
        for b in positive:
            by_target: dict[int, list] = {}
            for col, a in enumerate(source):
                for g, c in algebra.multiply_basis(a, b).items():
                    by_target.setdefault(g, [field.zero()] * len(source))[col] = c
            rows.extend(by_target.values())
        if rows:
            from .linalg import nullspace

            kernel = nullspace(ExactMatrix.from_rows(rows, len(source)), field)
        else:
            kernel = [
                [field.one() if j == i else field.zero() for j in range(len(source))]
                for i in range(len(source))
            ]
        if kernel:
            socle_dims[deg] = len(kernel)
            socle_basis[deg] = [
                {source[j]: c for j, c in enumerate(vec) if not field.is_zero(c)}
                for vec in kernel
            ]
    return SocleReport(field, top, socle_dims, socle_basis)


# -- Gorenstein ---------------------------------------------------------------------


@dataclass
class GorensteinReport:
    field: FieldSpec
    algebraic: bool  # the Tor algebra is a Poincare duality algebra
    combinatorial: bool  # every link in core(K) has the homology of a top sphere
    is_gorenstein_star: bool  # Gorenstein and K = core(K)
    socle: SocleReport

    @property
    def is_gorenstein(self) -> bool:
        return self.algebraic


def _links_are_homology_spheres(gamma: SimplicialComplex, field: FieldSpec) -> bool:
    """Stanley's criterion on the core: for every face, the link's reduced
    cohomology is k in the link's own top dimension and zero below."""
    for card, faces in gamma.faces_by_card().items():
        for mask in faces:
            if card == 0:
                link = gamma
            else:
                link = gamma.link(VertexSet(gamma.m, mask)).complex
            dims = cohomology_dims(reduced_cochain_complex(link, field), field, verify=False)
            if dims != {link.dim: 1}:
                return False
    return True


def is_gorenstein(k: SimplicialComplex, field: FieldSpec) -> GorensteinReport:
    """Both Gorenstein verdicts, computed independently and compared.

    Raises VerdictMismatch if they ever disagree; that is a bug, not a state.
    """
    report = socle(tor_algebra(k, field))
    algebraic = report.is_poincare_duality
    core = k.core()
    combinatorial = _links_are_homology_spheres(core.complex, field)
    if algebraic != combinatorial:
        raise VerdictMismatch(
            f"algebraic verdict {algebraic} != combinatorial verdict {combinatorial}"
        )
    star = algebraic and len(core.cone_vertices) == 0
    return GorensteinReport(field, algebraic, combinatorial, star, report)


# -- join extraction from tensor data ----------------------------------------------


@dataclass
class SplitWitness:
    """A verified join split K = K_U * K_V extracted from socle-spanning data."""

    u: VertexSet
    v: VertexSet
    factor_u: SimplicialComplex
    factor_v: SimplicialComplex
    u_vertices: tuple[int, ...]
    v_vertices: tuple[int, ...]

    @property
    def is_nontrivial(self) -> bool:
        """Both factors support a missing face (neither is a simplex)."""
        return bool(self.factor_u.missing_face_masks) and bool(
            self.factor_v.missing_face_masks
        )


def _group_by_multidegree(
    algebra: TorAlgebra, x: dict[int, object]
) -> dict[int, dict[int, object]]:
    out: dict[int, dict[int, object]] = {}
    for g, c in x.items():
        if not algebra.field.is_zero(c):
            out.setdefault(algebra.basis[g].multidegree.mask, {})[g] = c
    return out


def extract_join_from_tensor(
    algebra: TorAlgebra, t1: dict[int, object], t2: dict[int, object]
) -> SplitWitness:
    """Recover a join split from two elements whose product spans the socle.

    The elements are decomposed into multidegree-homogeneous components; a
    pair of components multiplying to a nonzero multiple of the top class
    singles out complementary multidegrees U, V, and the split is accepted
    once every missing face lies inside U or inside V. Cone vertices (which
    carry no multidegree of any class) are absorbed into U so that U and V
    partition the whole vertex set.
    """
    k = algebra.k
    report = socle(algebra)
    if not report.is_poincare_duality:
        raise NotPoincareDuality(f"socle dims {report.socle_dims}; need one class in top degree")
    top_ids = algebra.classes_in_degree(report.top_degree)
    assert len(top_ids) == 1, "Poincare duality forces a one-dimensional top degree"
    g_top = top_ids[0]
    m0 = algebra.basis[g_top].multidegree.mask
    cone = k.cone_vertex_mask()
    assert m0 & cone == 0 and (m0 | cone) == (1 << k.m) - 1, (
        "top multidegree must be exactly the non-cone vertices"
    )
    product = algebra.multiply(t1, t2)
    if algebra.field.is_zero(product.get(g_top, algebra.field.zero())):
        raise SocleNotSpanned("t1 * t2 has no component on the top class")
    comps1 = _group_by_multidegree(algebra, t1)
    comps2 = _group_by_multidegree(algebra, t2)
    mf_masks = k.missing_face_masks
    candidates = sorted(comps1, key=lambda mask: (mask.bit_count(), _mask_vertices(mask)))
    for u_mask in candidates:
        if u_mask & ~m0:
            continue
        v_mask = m0 & ~u_mask
        part2 = comps2.get(v_mask)
        if part2 is None:
            continue
        w = algebra.multiply(comps1[u_mask], part2)
        if algebra.field.is_zero(w.get(g_top, algebra.field.zero())):
            continue
        u_full = u_mask | cone
        if all(mf & ~u_full == 0 or mf & ~v_mask == 0 for mf in mf_masks):
            sub_u = k.full_subcomplex(VertexSet(k.m, u_full))
            sub_v = k.full_subcomplex(VertexSet(k.m, v_mask))
            return SplitWitness(
                u=VertexSet(k.m, u_full),
                v=VertexSet(k.m, v_mask),
                factor_u=sub_u.complex,
                factor_v=sub_v.complex,
                u_vertices=sub_u.vertices,
                v_vertices=sub_v.vertices,
            )
    raise NoValidSplit("no component pair hits the top class with a missing-face partition")


@dataclass
class SplitSearchResult:
    """Outcome of the bounded randomized tensor-split search.

    A witness proves decomposability; an empty outcome proves nothing (the
    search is not complete), it only reports that ``trials`` seeded attempts
    found no socle-spanning pair inducing a nontrivial split.
    """

    witness: SplitWitness | None
    trials: int
    seed: int

    @property
    def found(self) -> bool:
        return self.witness is not None


def _random_scalar(field: FieldSpec, rng: random.Random):
    if field.characteristic == 0:
        return Fraction(rng.randint(-3, 3))
    return rng.randrange(field.characteristic)


def random_element_in_degree(
    algebra: TorAlgebra, degree: int, rng: random.Random
) -> dict[int, object]:
    field = algebra.field
    out = {}
    for g in algebra.classes_in_degree(degree):
        c = _random_scalar(field, rng)
        if not field.is_zero(c):
            out[g] = c
    return out


def search_tensor_split(
    algebra: TorAlgebra, trials: int = 40, seed: int = 1729
) -> SplitSearchResult:
    """Randomized search for a nontrivial split witness; sound, not complete.

    Samples homogeneous pairs in complementary degrees, keeps those whose
    product spans the socle, and runs the extraction; the first nontrivial
    verified split wins.
    """
    rng = random.Random(seed)
    top = algebra.top_degree()
    degrees = sorted({d for d in algebra.basis_degrees() if 0 < d < top})
    usable = [d for d in degrees if algebra.classes_in_degree(top - d)]
    if not usable:
        return SplitSearchResult(None, trials, seed)
    for trial in range(trials):
        d = usable[trial % len(usable)]
        t1 = random_element_in_degree(algebra, d, rng)
        t2 = random_element_in_degree(algebra, top - d, rng)
        if not t1 or not t2:
            continue
        try:
            witness = extract_join_from_tensor(algebra, t1, t2)
        except (SocleNotSpanned, NoValidSplit):
            continue
        if witness.is_nontrivial:
            return SplitSearchResult(witness, trials, seed)
    return SplitSearchResult(None, trials, seed)


# -- Kunneth / join verification ------------------------------------------------------


@dataclass
class KunnethReport:
    passed: bool
    first_discrepancy: str | None
    join_dim: int


def _betti_discrepancy(expected: BettiTable, got: BettiTable) -> str | None:
    keys = set(expected.entries) | set(got.entries)
    for i, mask in sorted(keys, key=lambda k: (k[1].bit_count(), _mask_vertices(k[1]), k[0])):
        e = expected.entries.get((i, mask), 0)
        g = got.entries.get((i, mask), 0)
        if e != g:
            return f"betti[(i={i}, J={_mask_vertices(mask)})]: tensor {e} != join {g}"
    return None


def verify_kunneth(
    k1: SimplicialComplex, k2: SimplicialComplex, field: FieldSpec
) -> KunnethReport:
    """Check table and structure-constant agreement between the Tor algebra of
    the join and the signed tensor product of the factor algebras."""
    t1 = tor_algebra(k1, field)
    t2 = tor_algebra(k2, field)
    tj = tor_algebra(k1.join(k2), field)
    expected = BettiTable.join_convolution(t1.betti_table(), t2.betti_table())
    mismatch = _betti_discrepancy(expected, tj.betti_table())
    if mismatch:
        return KunnethReport(False, mismatch, tj.dim)

    # positional identification of factor classes inside the join algebra
    j1: dict[int, int] = {}
    for (i, mask), ids in t1.blocks.items():
        for pos, a in enumerate(ids):
            j1[a] = tj.blocks[(i, mask)][pos]
    j2: dict[int, int] = {}
    for (i, mask), ids in t2.blocks.items():
        for pos, a in enumerate(ids):
            j2[a] = tj.blocks[(i, mask << k1.m)][pos]

    pairs = [(a1, a2) for a1 in range(t1.dim) for a2 in range(t2.dim)]
    phi: dict[tuple[int, int], dict[int, object]] = {}
    rows = []
    for a1, a2 in pairs:
        vec = tj.multiply_basis(j1[a1], j2[a2])
        phi[(a1, a2)] = vec
        rows.append([vec.get(g, field.zero()) for g in range(tj.dim)])
    if rank(ExactMatrix.from_rows(rows, tj.dim), field) != tj.dim:
        return KunnethReport(False, "phi: factor products are not a basis of the join algebra", tj.dim)

    def add_scaled(acc: dict[int, object], vec: dict[int, object], c) -> None:
        for g, x in vec.items():
            acc[g] = field.add(acc.get(g, field.zero()), field.mul(c, x))

    for a1, a2 in pairs:
        for b1, b2 in pairs:
            left = tj.multiply(phi[(a1, a2)], phi[(b1, b2)])
            sign_odd = (
                t2.basis[a2].cohomological_degree * t1.basis[b1].cohomological_degree
            ) & 1
            right: dict[int, object] = {}
            p1 = t1.multiply_basis(a1, b1)
            p2 = t2.multiply_basis(a2, b2)
            for g1, c1 in p1.items():
                for g2, c2 in p2.items():
                    add_scaled(right, phi[(g1, g2)], field.mul(c1, c2))
            if sign_odd:
                right = {g: field.neg(c) for g, c in right.items()}
            right = {g: c for g, c in right.items() if not field.is_zero(c)}
            if left != right:
                return KunnethReport(
                    False,
                    f"product[({a1},{a2}) x ({b1},{b2})]: join {left} != tensor {right}",
                    tj.dim,
                )
    return KunnethReport(True, None, tj.dim)


# -- fingerprints ------------------------------------------------------------------------


@dataclass
class Fingerprint:
    """Relabeling-invariant bundle of algebra invariants, one block per field.

    Equal fingerprints are necessary, never sufficient, for a bigraded
    isomorphism.
    """

    m: int
    components: dict[str, dict[str, object]]  # field token -> component -> value

    COMPONENT_ORDER = ("betti", "hilbert", "socle_degrees", "pairing_ranks", "multidegree_multisets")


def fingerprint(k: SimplicialComplex, fields: Sequence[FieldSpec] = DEFAULT_FIELDS) -> Fingerprint:
    components: dict[str, dict[str, object]] = {}
    for field in fields:
        algebra = tor_algebra(k, field)
        table = algebra.betti_table()
        soc = socle(algebra)
        ranks: dict[tuple[int, int], int] = {}
        degrees = sorted({c.cohomological_degree for c in algebra.basis})
        for a in degrees:
            for b in degrees:
                if a > b or a == 0 or b == 0:
                    continue
                source_a = algebra.classes_in_degree(a)
                source_b = algebra.classes_in_degree(b)
                target = algebra.classes_in_degree(a + b)
                if not target:
                    ranks[(a, b)] = 0
                    continue
                rows = []
                for x in source_a:
                    for y in source_b:
                        prod = algebra.multiply_basis(x, y)
                        rows.append([prod.get(g, field.zero()) for g in target])
                ranks[(a, b)] = rank(ExactMatrix.from_rows(rows, len(target)), field)
        components[field.token()] = {
            "betti": table.by_hom_and_size(),
            "hilbert": table.by_cohomological_degree(),
            "socle_degrees": sorted(soc.socle_dims.items()),
            "pairing_ranks": dict(sorted(ranks.items())),
            "multidegree_multisets": table.multiset_by_hom_and_size(),
        }
    return Fingerprint(k.m, components)


def fingerprint_join_prediction(a: Fingerprint, b: Fingerprint) -> dict[str, dict[str, object]]:
    """Convolution of the convolvable components (betti, hilbert, socle)
    for the join of the underlying complexes, per shared field."""
    out: dict[str, dict[str, object]] = {}
    for token in a.components:
        if token not in b.components:
            continue
        ca, cb = a.components[token], b.components[token]
        betti: dict[tuple[int, int], int] = {}
        for (i1, s1), d1 in ca["betti"].items():
            for (i2, s2), d2 in cb["betti"].items():
                key = (i1 + i2, s1 + s2)
                betti[key] = betti.get(key, 0) + d1 * d2
        hilbert: dict[int, int] = {}
        for d1, n1 in ca["hilbert"].items():
            for d2, n2 in cb["hilbert"].items():
                hilbert[d1 + d2] = hilbert.get(d1 + d2, 0) + n1 * n2
        sa = ca["socle_degrees"]
        sb = cb["socle_degrees"]
        socle_degrees = sorted(
            {(da + db, na * nb) for da, na in sa for db, nb in sb}
        )
        out[token] = {
            "betti": dict(sorted(betti.items())),
            "hilbert": dict(sorted(hilbert.items())),
            "socle_degrees": socle_degrees,
        }
    return out


@dataclass
class ComparisonResult:
    """Either a concrete distinguishing invariant or an explicit shrug.

    ``indistinguishable`` NEVER asserts the complexes are equivalent; it only
    says the implemented invariants do not separate them.
    """

    distinguished: bool
    witness: str | None

    def __str__(self) -> str:
        if self.distinguished:
            return f"Distinguished({self.witness})"
        return "IndistinguishableByFingerprint"


def compare(
    k1: SimplicialComplex,
    k2: SimplicialComplex,
    fields: Sequence[FieldSpec] = DEFAULT_FIELDS,
) -> ComparisonResult:
    """First fingerprint component separating the complexes, if any."""
    f1 = fingerprint(k1, fields)
    f2 = fingerprint(k2, fields)
    if f1.m != f2.m:
        return ComparisonResult(True, f"vertex count: {f1.m} != {f2.m}")
    for field in fields:
        token = field.token()
        c1, c2 = f1.components[token], f2.components[token]
        for name in Fingerprint.COMPONENT_ORDER:
            a, b = c1[name], c2[name]
            if a == b:
                continue
            if isinstance(a, dict):
                keys = sorted(set(a) | set(b), key=repr)
                for key in keys:
                    if a.get(key) != b.get(key):
                        return ComparisonResult(
                            True, f"{token}:{name}[{key}]: {a.get(key)} != {b.get(key)}"
                        )
            return ComparisonResult(True, f"{token}:{name}: {a} != {b}")
    return ComparisonResult(False, None)
