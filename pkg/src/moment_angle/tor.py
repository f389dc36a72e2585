"""Bigraded Betti tables and Tor algebras of Stanley-Reisner rings.

Two independent computation paths are kept permanently as mutual oracles:

* per-multidegree reduced cohomology of full subcomplexes (Hochster's
  formula), the fast production path, and
* homology of multidegree strands of the Koszul complex of k[K]
  (d(u_i) = v_i with the usual exterior product), the cross-check.

The algebra basis consists of one class per Hochster generator, with its
deterministic cocycle representative; products are computed by lifting
representatives into Koszul strands, multiplying there, and reducing the
result against the chosen representatives of the target strand.

Sign conventions, fixed once:

* strand differential  d(m (x) u_{i_1}...u_{i_s}) =
  sum_j (-1)^(j-1) v_{i_j} m (x) u_{...no i_j...}   (i_1 < ... < i_s);
* a degree-(|J|-i-1) cochain on K_J lifts to the strand element
  sum_tau phi(tau) * eps(tau, J) * v_tau (x) u_{J minus tau}  with
  eps(tau, J) = (-1)^(|tau|(|tau|-1)/2) * shuffle(tau, J minus tau),
  which makes the lift a chain map (unit-tested).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .complexes import SimplicialComplex, VertexSet, _mask_vertices, submasks
from .errors import VertexOutOfRange
from .fields import FieldSpec
from .linalg import (
    CochainComplex,
    DegreeCohomology,
    ExactMatrix,
    cochain_complex_within,
    cohomology,
    cohomology_dims,
    mat_vec,
    rank,
)

Multidegree = tuple[int, ...]


def _inversions(a_mask: int, b_mask: int) -> int:
    """Pairs (x in a, y in b) with y < x; parity of the (a, b) shuffle."""
    count = 0
    rest = a_mask
    while rest:
        low = rest & -rest
        count += (b_mask & (low - 1)).bit_count()
        rest ^= low
    return count


def _shuffle_sign(a_mask: int, b_mask: int) -> int:
    return -1 if _inversions(a_mask, b_mask) & 1 else 1


def _lift_sign(tau_mask: int, j_mask: int) -> int:
    c = tau_mask.bit_count()
    sign = -1 if (c * (c - 1) // 2) & 1 else 1
    return sign * _shuffle_sign(tau_mask, j_mask & ~tau_mask)


def _subsets_sorted(m: int) -> list[int]:
    """All submasks of [m] ordered by (cardinality, vertex tuple)."""
    out = []
    for card in range(m + 1):
        for combo in itertools.combinations(range(m), card):
            mask = 0
            for b in combo:
                mask |= 1 << b
            out.append(mask)
    return out


# -- Betti tables ---------------------------------------------------------------


@dataclass
class BettiTable:
    """dim Tor_i(k[K], k)_J per (homological degree i, square-free J).

    Zero entries are never stored. The cohomological degree of an entry is
    2|J| - i.
    """

    field: FieldSpec
    m: int
    entries: dict[tuple[int, int], int]  # (i, J mask) -> dim

    def total_dim(self) -> int:
        return sum(self.entries.values())

    def by_cohomological_degree(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for (i, mask), dim in self.entries.items():
            deg = 2 * mask.bit_count() - i
            out[deg] = out.get(deg, 0) + dim
        return dict(sorted(out.items()))

    def by_hom_and_size(self) -> dict[tuple[int, int], int]:
        """Relabeling-invariant totals keyed by (i, |J|)."""
        out: dict[tuple[int, int], int] = {}
        for (i, mask), dim in self.entries.items():
            key = (i, mask.bit_count())
            out[key] = out.get(key, 0) + dim
        return dict(sorted(out.items()))

    def multiset_by_hom_and_size(self) -> dict[tuple[int, int], tuple[int, ...]]:
        """Sorted multiset of nonzero entry dims per (i, |J|); relabeling-invariant."""
        acc: dict[tuple[int, int], list[int]] = {}
        for (i, mask), dim in self.entries.items():
            acc.setdefault((i, mask.bit_count()), []).append(dim)
        return {k: tuple(sorted(v)) for k, v in sorted(acc.items())}

    def sorted_items(self) -> list[tuple[int, tuple[int, ...], int]]:
        """(i, J vertices, dim) sorted by (|J|, J, i)."""
        rows = [
            (i, _mask_vertices(mask), dim) for (i, mask), dim in self.entries.items()
        ]
        rows.sort(key=lambda t: (len(t[1]), t[1], t[0]))
        return rows

    @classmethod
    def join_convolution(cls, a: "BettiTable", b: "BettiTable") -> "BettiTable":
        """Kunneth prediction for the join: (i, J) -> (i1+i2, J1 + shifted J2)."""
        if a.field != b.field:
            raise ValueError("mismatched fields")
        entries: dict[tuple[int, int], int] = {}
        for (i1, m1), d1 in a.entries.items():
            for (i2, m2), d2 in b.entries.items():
                key = (i1 + i2, m1 | (m2 << a.m))
                entries[key] = entries.get(key, 0) + d1 * d2
        return cls(a.field, a.m + b.m, entries)


def betti_table_hochster(k: SimplicialComplex, field: FieldSpec) -> BettiTable:
    """Entry (i, J) = dim of reduced H^(|J|-i-1) of the full subcomplex K_J.

    Iterates over all 2^m subsets; J = {} contributes exactly (0, {}) -> 1.
    """
    entries: dict[tuple[int, int], int] = {}
    for j_mask in _subsets_sorted(k.m):
        card = j_mask.bit_count()
        cx = cochain_complex_within(k, j_mask, field, verify=False)
        for p, dim in cohomology_dims(cx, field, verify=False).items():
            entries[(card - p - 1, j_mask)] = dim
    return BettiTable(field, k.m, entries)


# -- Koszul strands ---------------------------------------------------------------


def _strand_basis(k: SimplicialComplex, exponents: Sequence[int]) -> dict[int, list[int]]:
    """Exterior-part masks of the multidegree strand, grouped by homological degree.

    A basis element with exterior part sigma carries the monomial with
    exponent vector (exponents - indicator(sigma)); it survives in k[K] iff
    that monomial's support is a face.
    """
    if len(exponents) != k.m:
        raise VertexOutOfRange(f"multidegree length {len(exponents)} != m = {k.m}")
    if any(e < 0 for e in exponents):
        raise VertexOutOfRange("multidegree entries must be nonnegative")
    supp1 = 0
    supp2 = 0
    for pos, e in enumerate(exponents):
        if e == 1:
            supp1 |= 1 << pos
        elif e >= 2:
            supp2 |= 1 << pos
    out: dict[int, list[int]] = {}
    for sigma in submasks(supp1 | supp2):
        mono_support = supp2 | (supp1 & ~sigma)
        if k.is_face_mask(mono_support):
            out.setdefault(sigma.bit_count(), []).append(sigma)
    for sigmas in out.values():
        sigmas.sort()
    return out


def _strand_matrices(
    k: SimplicialComplex, exponents: Sequence[int], field: FieldSpec
) -> tuple[dict[int, list[int]], dict[int, ExactMatrix]]:
    """Strand basis and differentials d_i : degree i -> degree i - 1."""
    basis = _strand_basis(k, exponents)
    supp2 = 0
    for pos, e in enumerate(exponents):
        if e >= 2:
            supp2 |= 1 << pos
    supp1 = 0
    for pos, e in enumerate(exponents):
        if e == 1:
            supp1 |= 1 << pos
    index = {i: {s: c for c, s in enumerate(sigmas)} for i, sigmas in basis.items()}
    mats: dict[int, ExactMatrix] = {}
    for i in sorted(basis):
        if i == 0 or i - 1 not in basis:
            continue
        source, target_index = basis[i], index[i - 1]
        mat = ExactMatrix.zeros(len(basis[i - 1]), len(source), field)
        for col, sigma in enumerate(source):
            sign = 1
            rest = sigma
            while rest:
                low = rest & -rest
                smaller = sigma ^ low
                target_support = supp2 | (supp1 & ~smaller)
                if k.is_face_mask(target_support):
                    row = target_index[smaller]
                    mat.rows[row][col] = field.of_int(sign)
                sign = -sign
                rest ^= low
        mats[i] = mat
    return basis, mats


def koszul_strand_homology(
    k: SimplicialComplex, multidegree: Sequence[int] | VertexSet, field: FieldSpec
) -> dict[int, int]:
    """Exact homology dimensions of one multidegree strand, nonzero degrees only.

    For square-free multidegrees this must agree with the Betti table; strands
    with an exponent >= 2 are exact.
    """
    if isinstance(multidegree, VertexSet):
        exponents = tuple(1 if v in multidegree else 0 for v in range(1, k.m + 1))
    else:
        exponents = tuple(multidegree)
    basis, mats = _strand_matrices(k, exponents, field)
    ranks = {i: rank(mat, field) for i, mat in mats.items()}
    out = {}
    for i, sigmas in basis.items():
        dim = len(sigmas) - ranks.get(i, 0) - ranks.get(i + 1, 0)
        if dim:
            out[i] = dim
    return out


# -- the Tor algebra ---------------------------------------------------------------


@dataclass(frozen=True)
class TorClass:
    """One basis class: homological degree i, square-free multidegree J,
    cohomological degree 2|J| - i, and a cocycle representative on K_J
    (pairs of face mask and coefficient, faces of cardinality |J| - i)."""

    index: int
    hom_degree: int
    multidegree: VertexSet
    rep: tuple[tuple[int, object], ...]

    @property
    def cohomological_degree(self) -> int:
        return 2 * len(self.multidegree) - self.hom_degree


@dataclass
class _SubcomplexData:
    cx: CochainComplex
    degree_data: dict[int, DegreeCohomology]  # degrees with nonzero cohomology


class TorAlgebra:
    """H of the Koszul complex of k[K]: basis of bigraded classes plus
    structure constants over the field.

    Products are multidegree-additive with disjoint-support vanishing,
    graded-commutative and associative; the unit is the (0, {}) class.
    Products are memoized per ordered basis pair (dict insert-or-get is
    atomic, so concurrent readers are safe and results are schedule-
    independent).
    """

    def __init__(self, k: SimplicialComplex, field: FieldSpec):
        self.k = k
        self.field = field
        self._data: dict[int, _SubcomplexData] = {}
        basis: list[TorClass] = []
        blocks: dict[tuple[int, int], list[int]] = {}
        for j_mask in _subsets_sorted(k.m):
            card = j_mask.bit_count()
            cx = cochain_complex_within(k, j_mask, field, verify=False)
            dims = cohomology_dims(cx, field, verify=False)
            degree_data: dict[int, DegreeCohomology] = {}
            if dims:
                full = cohomology(cx, field, verify=False)
                for p in sorted(dims, reverse=True):  # ascending homological degree
                    data = full.by_degree[p]
                    degree_data[p] = data
                    i = card - p - 1
                    ids = []
                    faces = cx.basis[p]
                    for vec in data.representatives:
                        rep = tuple(
                            (faces[c], coeff)
                            for c, coeff in enumerate(vec)
                            if not field.is_zero(coeff)
                        )
                        cls = TorClass(len(basis), i, VertexSet(k.m, j_mask), rep)
                        ids.append(cls.index)
                        basis.append(cls)
                    blocks[(i, j_mask)] = ids
            self._data[j_mask] = _SubcomplexData(cx, degree_data)
        self.basis: tuple[TorClass, ...] = tuple(basis)
        self.blocks: dict[tuple[int, int], list[int]] = blocks
        self.unit_index = 0
        self._products: dict[tuple[int, int], dict[int, object]] = {}

    # -- structural queries ------------------------------------------------------

    @property
    def dim(self) -> int:
        return len(self.basis)

    def basis_degrees(self) -> list[int]:
        return [c.cohomological_degree for c in self.basis]

    def top_degree(self) -> int:
        return max(self.basis_degrees())

    def block(self, i: int, j_mask: int) -> list[int]:
        return self.blocks.get((i, j_mask), [])

    def betti_table(self) -> BettiTable:
        entries = {key: len(ids) for key, ids in self.blocks.items() if ids}
        return BettiTable(self.field, self.k.m, entries)

    def classes_in_degree(self, cohdeg: int) -> list[int]:
        return [c.index for c in self.basis if c.cohomological_degree == cohdeg]

    # -- products ---------------------------------------------------------------

    def multiply_basis(self, a: int, b: int) -> dict[int, object]:
        """Product of two basis classes as a sparse coordinate vector."""
        if (a, b) in self._products:
            return self._products[(a, b)]
        if (b, a) in self._products:
            alpha, beta = self.basis[a], self.basis[b]
            sign = (alpha.cohomological_degree * beta.cohomological_degree) & 1
            prod = self._products[(b, a)]
            if sign:
                prod = {g: self.field.neg(c) for g, c in prod.items()}
            self._products[(a, b)] = prod
            return prod
        prod = self._multiply_basis_raw(a, b)
        self._products[(a, b)] = prod
        return prod

    def _multiply_basis_raw(self, a: int, b: int) -> dict[int, object]:
        field = self.field
        alpha, beta = self.basis[a], self.basis[b]
        ja, jb = alpha.multidegree.mask, beta.multidegree.mask
        if ja & jb:
            return {}
        m_mask = ja | jb
        i = alpha.hom_degree + beta.hom_degree
        card = m_mask.bit_count()
        p = card - i - 1
        target = self._data[m_mask]
        data = target.degree_data.get(p)
        if data is None or data.dim == 0:
            return {}
        faces = target.cx.basis[p]
        index = {mask: c for c, mask in enumerate(faces)}
        psi = [field.zero()] * len(faces)
        for tau1, c1 in alpha.rep:
            s1 = _lift_sign(tau1, ja)
            sigma1 = ja & ~tau1
            for tau2, c2 in beta.rep:
                tau = tau1 | tau2
                if not self.k.is_face_mask(tau):
                    continue
                sigma2 = jb & ~tau2
                sign = s1 * _lift_sign(tau2, jb) * _shuffle_sign(sigma1, sigma2)
                sign *= _lift_sign(tau, m_mask)  # unlift; eps is +-1
                coeff = field.mul(c1, c2)
                if sign < 0:
                    coeff = field.neg(coeff)
                col = index[tau]
                psi[col] = field.add(psi[col], coeff)
        coords = mat_vec(data.projector, psi, field)
        ids = self.blocks[(i, m_mask)]
        return {
            g: coeff for g, coeff in zip(ids, coords) if not field.is_zero(coeff)
        }

    def multiply(self, x: dict[int, object], y: dict[int, object]) -> dict[int, object]:
        """Bilinear extension of the basis products to sparse vectors."""
        field = self.field
        out: dict[int, object] = {}
        for a, ca in x.items():
            if field.is_zero(ca):
                continue
            for b, cb in y.items():
                if field.is_zero(cb):
                    continue
                prod = self.multiply_basis(a, b)
                if not prod:
                    continue
                f = field.mul(ca, cb)
                for g, cg in prod.items():
                    out[g] = field.add(out.get(g, field.zero()), field.mul(f, cg))
        return {g: c for g, c in out.items() if not field.is_zero(c)}

    def structure_constants(self) -> dict[tuple[int, int], dict[int, object]]:
        """Materialize the full product table (most pairs vanish by multidegree)."""
        for a in range(self.dim):
            for b in range(self.dim):
                self.multiply_basis(a, b)
        return {key: val for key, val in self._products.items() if val}

    # -- projections ---------------------------------------------------------------

    def project_coords(self, x: dict[int, object], j_mask: int) -> dict[int, object]:
        """Kill every coordinate whose multidegree is not contained in J."""
        return {
            g: c for g, c in x.items() if self.basis[g].multidegree.mask & ~j_mask == 0
        }

    def project(self, selection: VertexSet) -> tuple["TorAlgebra", dict[int, int]]:
        """Subalgebra of classes with multidegree inside J, as the Tor algebra
        of the full subcomplex K_J, plus the basis identification.

        Representatives are computed deterministically per multidegree, so the
        identification is positional block by block.
        """
        if selection.m != self.k.m:
            raise VertexOutOfRange("selection ambient size differs from m")
        sub = self.k.full_subcomplex(selection)
        other = TorAlgebra(sub.complex, self.field)
        old_pos = {v: i for i, v in enumerate(sub.vertices)}
        idmap: dict[int, int] = {}
        for (i, j_mask), ids in self.blocks.items():
            if j_mask & ~selection.mask:
                continue
            new_mask = 0
            for v in _mask_vertices(j_mask):
                new_mask |= 1 << old_pos[v]
            new_ids = other.blocks.get((i, new_mask), [])
            if len(new_ids) != len(ids):
                raise AssertionError("projection block dimensions disagree")
            for a, b in zip(ids, new_ids):
                idmap[a] = b
        return other, idmap


def tor_algebra(k: SimplicialComplex, field: FieldSpec) -> TorAlgebra:
    """The cohomology algebra of the moment-angle complex of K over the field."""
    return TorAlgebra(k, field)


def tor1_basis(
    k: SimplicialComplex, field: FieldSpec | None = None
) -> list[tuple[VertexSet, TorClass]]:
    """Bijection between missing faces and the homological-degree-1 classes."""
    from .fields import QQ

    algebra = TorAlgebra(k, field or QQ)
    out = []
    degree_one_blocks = {
        mask for (i, mask) in algebra.blocks if i == 1 and algebra.blocks[(i, mask)]
    }
    mf_masks = set(k.missing_face_masks)
    if degree_one_blocks != mf_masks:
        raise AssertionError("degree-1 multidegrees do not match the missing faces")
    for mf in k.missing_faces():
        ids = algebra.block(1, mf.mask)
        if len(ids) != 1:
            raise AssertionError("missing-face block is not one-dimensional")
        out.append((mf, algebra.basis[ids[0]]))
    return out
