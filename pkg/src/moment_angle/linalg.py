"""Exact linear algebra over Q and F_p, plus reduced simplicial cochain complexes.

Everything is dense and exact. Rank over Q goes through fraction-free
(Bareiss) elimination on denominator-cleared integer rows; reduced echelon
forms, kernels and cocycle representatives use direct field arithmetic. The
representative choice is deterministic: kernel vectors in standard nullspace
order, greedily completed against the canonical image basis, so every
downstream structure constant is reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from .complexes import SimplicialComplex
from .errors import NotAComplex
from .fields import FieldSpec


@dataclass
class ExactMatrix:
    """Dense matrix with exact field entries (rows of scalars)."""

    nrows: int
    ncols: int
    rows: list[list]

    @classmethod
    def from_rows(cls, rows: list[list], ncols: int | None = None) -> "ExactMatrix":
        if rows and ncols is None:
            ncols = len(rows[0])
        ncols = ncols or 0
        for r in rows:
            if len(r) != ncols:
                raise ValueError("ragged rows")
        return cls(len(rows), ncols, [list(r) for r in rows])

    @classmethod
    def zeros(cls, nrows: int, ncols: int, field: FieldSpec) -> "ExactMatrix":
        z = field.zero()
        return cls(nrows, ncols, [[z] * ncols for _ in range(nrows)])

    def copy_rows(self) -> list[list]:
        return [list(r) for r in self.rows]

    def column(self, j: int) -> list:
        return [r[j] for r in self.rows]

    def is_zero(self, field: FieldSpec) -> bool:
        return all(field.is_zero(x) for r in self.rows for x in r)


def mat_vec(m: ExactMatrix, v: list, field: FieldSpec) -> list:
    out = []
    for row in m.rows:
        acc = field.zero()
        for a, b in zip(row, v):
            if not field.is_zero(a) and not field.is_zero(b):
                acc = field.add(acc, field.mul(a, b))
        out.append(acc)
    return out


def mat_mul(a: ExactMatrix, b: ExactMatrix, field: FieldSpec) -> ExactMatrix:
    if a.ncols != b.nrows:
        raise ValueError("shape mismatch")
    out = ExactMatrix.zeros(a.nrows, b.ncols, field)
    for i in range(a.nrows):
        arow = a.rows[i]
        orow = out.rows[i]
        for k in range(a.ncols):
            x = arow[k]
            if field.is_zero(x):
                continue
            brow = b.rows[k]
            for j in range(b.ncols):
                if not field.is_zero(brow[j]):
                    orow[j] = field.add(orow[j], field.mul(x, brow[j]))
    return out


# -- rank ---------------------------------------------------------------------


def _clear_denominators(rows: list[list[Fraction]]) -> list[list[int]]:
    out = []
    for r in rows:
        lcm = 1
        for x in r:
            d = x.denominator
            g = _gcd(lcm, d)
            lcm = lcm // g * d
        out.append([int(x * lcm) for x in r])
    return out


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _rank_bareiss(rows: list[list[int]]) -> int:
    """Fraction-free elimination on an integer matrix; exact divisions only."""
    if not rows or not rows[0]:
        return 0
    nrows, ncols = len(rows), len(rows[0])
    prev = 1
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        for i in range(r + 1, nrows):
            for j in range(c + 1, ncols):
                rows[i][j] = (rows[r][c] * rows[i][j] - rows[i][c] * rows[r][j]) // prev
            rows[i][c] = 0
        prev = rows[r][c]
        r += 1
        if r == nrows:
            break
    return r


def _rank_mod_p(rows: list[list[int]], p: int) -> int:
    if not rows or not rows[0]:
        return 0
    rows = [[x % p for x in r] for r in rows]
    nrows, ncols = len(rows), len(rows[0])
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = pow(rows[r][c], p - 2, p)
        prow = rows[r]
        for i in range(r + 1, nrows):
            f = rows[i][c]
            if f:
                f = f * inv % p
                irow = rows[i]
                for j in range(c, ncols):
                    irow[j] = (irow[j] - f * prow[j]) % p
        r += 1
        if r == nrows:
            break
    return r


def rank(m: ExactMatrix, field: FieldSpec) -> int:
    """Exact rank; Bareiss over Q, modular elimination over F_p."""
    if field.characteristic == 0:
        return _rank_bareiss(_clear_denominators(m.rows))
    return _rank_mod_p(m.rows, field.characteristic)


# -- reduced row echelon form and kernels ---------------------------------------


def rref(m: ExactMatrix, field: FieldSpec) -> tuple[ExactMatrix, list[int]]:
    """Reduced row echelon form and its pivot columns (leftmost-pivot order)."""
    rows = m.copy_rows()
    nrows, ncols = m.nrows, m.ncols
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if not field.is_zero(rows[i][c])), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = field.inv(rows[r][c])
        rows[r] = [field.mul(inv, x) for x in rows[r]]
        for i in range(nrows):
            if i != r and not field.is_zero(rows[i][c]):
                f = rows[i][c]
                rows[i] = [field.sub(x, field.mul(f, y)) for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return ExactMatrix(nrows, ncols, rows), pivots


def nullspace(m: ExactMatrix, field: FieldSpec) -> list[list]:
    """Standard kernel basis: one vector per free column, in column order."""
    reduced, pivots = rref(m, field)
    pivot_set = set(pivots)
    free = [c for c in range(m.ncols) if c not in pivot_set]
    basis = []
    for fcol in free:
        v = [field.zero()] * m.ncols
        v[fcol] = field.one()
        for r, pcol in enumerate(pivots):
            v[pcol] = field.neg(reduced.rows[r][fcol])
        basis.append(v)
    return basis


class EchelonBasis:
    """Incremental echelon basis of row vectors for membership tests."""

    def __init__(self, field: FieldSpec, ncols: int):
        self.field = field
        self.ncols = ncols
        self.rows: list[tuple[int, list]] = []  # (pivot index, normalized vector)

    def reduce(self, v: list) -> list:
        field = self.field
        v = list(v)
        for piv, row in self.rows:
            if not field.is_zero(v[piv]):
                f = v[piv]
                v = [field.sub(x, field.mul(f, y)) for x, y in zip(v, row)]
        return v

    def add(self, v: list) -> bool:
        """Reduce and insert if independent; returns True when v was new."""
        field = self.field
        v = self.reduce(v)
        piv = next((i for i, x in enumerate(v) if not field.is_zero(x)), None)
        if piv is None:
            return False
        inv = field.inv(v[piv])
        v = [field.mul(inv, x) for x in v]
        for i, (p, row) in enumerate(self.rows):
            if not field.is_zero(row[piv]):
                f = row[piv]
                self.rows[i] = (p, [field.sub(x, field.mul(f, y)) for x, y in zip(row, v)])
        self.rows.append((piv, v))
        self.rows.sort(key=lambda t: t[0])
        return True

    @property
    def dim(self) -> int:
        return len(self.rows)


def coordinate_extractor(columns: list[list], n: int, field: FieldSpec) -> ExactMatrix:
    """For independent columns M (n x t), a t x n matrix P with P (M w) = w."""
    t = len(columns)
    aug = []
    for i in range(n):
        row = [col[i] for col in columns]
        row.extend(field.one() if j == i else field.zero() for j in range(n))
        aug.append(row)
    reduced, pivots = rref(ExactMatrix(n, t + n, aug), field)
    if pivots[:t] != list(range(t)):
        raise ValueError("columns are not linearly independent")
    return ExactMatrix(t, n, [reduced.rows[r][t:] for r in range(t)])


# -- cochain complexes -----------------------------------------------------------


@dataclass
class CochainComplex:
    """Reduced simplicial cochain complex with exact differentials.

    Degree p is spanned by the faces of cardinality p + 1 (degree -1 by the
    empty face); ``differentials[p]`` maps degree p to degree p + 1, rows
    indexed by the target basis. Simplices are oriented by ascending vertex
    order with the usual alternating signs.
    """

    field: FieldSpec
    min_degree: int
    max_degree: int
    basis: dict[int, list[int]]
    differentials: dict[int, ExactMatrix]

    def dims(self) -> dict[int, int]:
        return {p: len(self.basis[p]) for p in range(self.min_degree, self.max_degree + 1)}

    def check_composition(self) -> bool:
        for p in range(self.min_degree, self.max_degree - 1):
            prod = mat_mul(self.differentials[p + 1], self.differentials[p], self.field)
            if not prod.is_zero(self.field):
                return False
        return True


def _complex_from_faces(
    faces_by_card: dict[int, list[int]], field: FieldSpec, verify: bool = True
) -> CochainComplex:
    max_card = max(faces_by_card)
    basis = {card - 1: list(faces_by_card.get(card, ())) for card in range(max_card + 1)}
    index = {p: {mask: i for i, mask in enumerate(faces)} for p, faces in basis.items()}
    one, zero = field.one(), field.zero()
    diffs: dict[int, ExactMatrix] = {}
    for p in range(-1, max_card - 1):
        source, target = basis[p], basis[p + 1]
        mat = ExactMatrix.zeros(len(target), len(source), field)
        for r, sigma in enumerate(target):
            sign = one
            rest = sigma
            while rest:
                low = rest & -rest
                tau = sigma ^ low
                mat.rows[r][index[p][tau]] = sign
                sign = field.neg(sign)
                rest ^= low
        diffs[p] = mat
    cx = CochainComplex(field, -1, max_card - 1, basis, diffs)
    if verify:
        assert cx.check_composition(), "coboundary squared is nonzero"
    return cx


def reduced_cochain_complex(k: SimplicialComplex, field: FieldSpec) -> CochainComplex:
    """Reduced cochain complex of a complex; the empty complex is k in degree -1."""
    return _complex_from_faces(k.faces_by_card(), field)


def cochain_complex_within(
    k: SimplicialComplex, within_mask: int, field: FieldSpec, verify: bool = True
) -> CochainComplex:
    """Cochain complex of the full subcomplex on ``within_mask``, original labels."""
    return _complex_from_faces(k.faces_by_card(within=within_mask), field, verify=verify)


@dataclass
class DegreeCohomology:
    """Cohomology of one degree with chosen cocycle representatives.

    ``projector`` sends any cocycle vector to its coordinates in the chosen
    representative basis (coboundaries to zero).
    """

    dim: int
    representatives: list[list]
    projector: ExactMatrix
    image_rank: int


@dataclass
class CohomologyResult:
    field: FieldSpec
    by_degree: dict[int, DegreeCohomology] = dc_field(default_factory=dict)

    def dim(self, p: int) -> int:
        data = self.by_degree.get(p)
        return data.dim if data else 0

    def dims(self) -> dict[int, int]:
        return {p: d.dim for p, d in self.by_degree.items() if d.dim}

    def coords(self, p: int, cocycle: list) -> list:
        """Coordinates of a cocycle's class in the representative basis."""
        data = self.by_degree[p]
        if data.projector.nrows == 0:
            return []
        return mat_vec(data.projector, cocycle, self.field)


def cohomology(cx: CochainComplex, field: FieldSpec, verify: bool = True) -> CohomologyResult:
    """Per-degree dimensions, representatives, and class projectors.

    Representatives are the standard kernel basis vectors greedily completed
    against the image basis (first independent kernel vectors win), which
    fixes them uniquely given the face ordering.
    """
    if verify and not cx.check_composition():
        raise NotAComplex("differentials do not compose to zero")
    result = CohomologyResult(field)
    for p in range(cx.min_degree, cx.max_degree + 1):
        n = len(cx.basis[p])
        d_out = cx.differentials.get(p)
        if d_out is not None:
            kernel = nullspace(d_out, field)
        else:
            kernel = [
                [field.one() if j == i else field.zero() for j in range(n)] for i in range(n)
            ]
        d_in = cx.differentials.get(p - 1)
        span = EchelonBasis(field, n)
        image_cols: list[list] = []
        if d_in is not None:
            for j in range(d_in.ncols):
                col = d_in.column(j)
                if span.add(col):
                    image_cols.append(col)
        image_rank = len(image_cols)
        reps = [z for z in kernel if span.add(z)]
        if reps:
            projector_full = coordinate_extractor(image_cols + reps, n, field)
            projector = ExactMatrix(
                len(reps), n, projector_full.rows[image_rank:]
            )
        else:
            projector = ExactMatrix(0, n, [])
        result.by_degree[p] = DegreeCohomology(len(reps), reps, projector, image_rank)
    return result


def cohomology_dims(
    cx: CochainComplex, field: FieldSpec, verify: bool = True
) -> dict[int, int]:
    """Dimensions only (rank-nullity); cheaper than full representatives."""
    if verify and not cx.check_composition():
        raise NotAComplex("differentials do not compose to zero")
    ranks = {
        p: rank(mat, field) for p, mat in cx.differentials.items()
    }
    out = {}
    for p in range(cx.min_degree, cx.max_degree + 1):
        dim = len(cx.basis[p]) - ranks.get(p, 0) - ranks.get(p - 1, 0)
        if dim:
            out[p] = dim
    return out
