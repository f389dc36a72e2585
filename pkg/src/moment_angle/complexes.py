"""Abstract simplicial complexes on vertex sets {1, ..., m} with m <= 63.

Faces are bitmasks (bit i-1 encodes vertex i) so that all set operations are
single machine-word instructions. The facet list is the canonical
representation; faces are enumerated on demand. Every derived ordering is
deterministic (cardinality, then lexicographic on sorted vertex tuples) so
outputs are reproducible byte for byte.

Vertices are 1-indexed in every public interface; bit positions are 0-indexed
internally. All values are immutable after construction.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import (
    EmptyInput,
    EmptySelection,
    MissingVertex,
    NotAFace,
    NotSimple,
    VertexBudgetExceeded,
    VertexOutOfRange,
)

MAX_VERTICES = 63


def _mask_vertices(mask: int) -> tuple[int, ...]:
    """1-indexed vertices of a bitmask, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length())
        mask ^= low
    return tuple(out)


def submasks(mask: int) -> Iterator[int]:
    """All submasks of ``mask``, in decreasing numeric order, ending with 0."""
    s = mask
    while True:
        yield s
        if s == 0:
            return
        s = (s - 1) & mask


@dataclass(frozen=True)
class VertexSet:
    """A subset of {1, ..., m}, stored as a bitmask with its ambient m."""

    m: int
    mask: int

    def __post_init__(self) -> None:
        if not 0 <= self.m <= MAX_VERTICES:
            raise VertexOutOfRange(f"m must be between 0 and {MAX_VERTICES}, got {self.m}")
        if not 0 <= self.mask < (1 << self.m):
            raise VertexOutOfRange(f"mask {self.mask:#x} has bits outside [1..{self.m}]")

    @classmethod
    def of(cls, m: int, vertices: Iterable[int]) -> "VertexSet":
        mask = 0
        for v in vertices:
            if not 1 <= v <= m:
                raise VertexOutOfRange(f"vertex {v} outside [1..{m}]")
            mask |= 1 << (v - 1)
        return cls(m, mask)

    @classmethod
    def empty(cls, m: int) -> "VertexSet":
        return cls(m, 0)

    @classmethod
    def full(cls, m: int) -> "VertexSet":
        return cls(m, (1 << m) - 1)

    @property
    def vertices(self) -> tuple[int, ...]:
        return _mask_vertices(self.mask)

    @property
    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        """(cardinality, lexicographic) ordering key."""
        return (self.mask.bit_count(), self.vertices)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __iter__(self) -> Iterator[int]:
        return iter(self.vertices)

    def __contains__(self, v: int) -> bool:
        return 1 <= v <= self.m and bool(self.mask >> (v - 1) & 1)

    def _check(self, other: "VertexSet") -> None:
        if self.m != other.m:
            raise VertexOutOfRange(f"mismatched ambient sizes {self.m} != {other.m}")

    def union(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.m, self.mask | other.mask)

    def intersection(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.m, self.mask & other.mask)

    def difference(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.m, self.mask & ~other.mask)

    def complement(self) -> "VertexSet":
        return VertexSet(self.m, ~self.mask & ((1 << self.m) - 1))

    def issubset(self, other: "VertexSet") -> bool:
        self._check(other)
        return self.mask & ~other.mask == 0

    def isdisjoint(self, other: "VertexSet") -> bool:
        self._check(other)
        return self.mask & other.mask == 0

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.vertices)) + "}"


class Reindexed(NamedTuple):
    """A subcomplex re-indexed onto {1, ..., |I|} plus its vertex map.

    ``vertices[new - 1]`` is the original label of new vertex ``new``.
    """

    complex: "SimplicialComplex"
    vertices: tuple[int, ...]


class CoreResult(NamedTuple):
    complex: "SimplicialComplex"
    vertices: tuple[int, ...]
    cone_vertices: VertexSet


@dataclass(frozen=True)
class DecompositionReport:
    """Finest join decomposition: K = (join of factors) * simplex(cone part).

    Each part supports at least one missing face and no missing face straddles
    two parts; parts are ordered by minimum vertex. ``factors[i]`` is the full
    subcomplex on ``parts[i]`` re-indexed via ``factor_vertices[i]``.
    """

    m: int
    parts: tuple[VertexSet, ...]
    cone_vertices: VertexSet
    factors: tuple["SimplicialComplex", ...]
    factor_vertices: tuple[tuple[int, ...], ...]

    @property
    def is_trivial(self) -> bool:
        """True when K does not split: one part and no cone vertices."""
        return len(self.parts) <= 1 and len(self.cone_vertices) == 0


@dataclass(frozen=True)
class SimplicialComplex:
    """A simplicial complex given by its maximal faces.

    Standing assumptions: the empty set is always a face (never stored), and
    every singleton {i} for i in [m] is a face. The unique complex with m = 0
    (only the empty face) is allowed and has an empty facet tuple.
    """

    m: int
    facets: tuple[VertexSet, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.m <= MAX_VERTICES:
            raise VertexOutOfRange(f"m must be between 0 and {MAX_VERTICES}, got {self.m}")
        if self.m == 0:
            if self.facets:
                raise EmptyInput("the empty complex stores no facets")
            return
        if not self.facets:
            raise EmptyInput("a complex with vertices needs at least one facet")
        covered = 0
        masks = [f.mask for f in self.facets]
        for f in self.facets:
            if f.m != self.m:
                raise VertexOutOfRange("facet ambient size differs from m")
            covered |= f.mask
        if covered != (1 << self.m) - 1:
            missing = _mask_vertices(~covered & ((1 << self.m) - 1))
            raise MissingVertex(f"vertices {missing} appear in no facet")
        for a, b in itertools.combinations(masks, 2):
            if a & b in (a, b):
                raise EmptyInput("facets must be pairwise incomparable")

    # -- construction --------------------------------------------------------

    @classmethod
    def from_facets(
        cls, m: int, facets: Iterable[VertexSet | Iterable[int]]
    ) -> "SimplicialComplex":
        """Validate and normalize facet input, pruning non-maximal faces."""
        if not 1 <= m <= MAX_VERTICES:
            raise VertexOutOfRange(f"m must be between 1 and {MAX_VERTICES}, got {m}")
        masks = []
        for f in facets:
            vs = f if isinstance(f, VertexSet) else VertexSet.of(m, f)
            if vs.m != m:
                raise VertexOutOfRange("facet ambient size differs from m")
            masks.append(vs.mask)
        if not masks:
            raise EmptyInput("facet list is empty")
        maximal = [
            a for a in set(masks) if not any(b != a and a & b == a for b in masks)
        ]
        out = sorted((VertexSet(m, a) for a in maximal), key=lambda v: v.sort_key)
        return cls(m, tuple(out))

    @classmethod
    def empty_complex(cls) -> "SimplicialComplex":
        return cls(0, ())

    # -- basic queries --------------------------------------------------------

    @cached_property
    def facet_masks(self) -> tuple[int, ...]:
        return tuple(f.mask for f in self.facets)

    @property
    def dim(self) -> int:
        return max((len(f) for f in self.facets), default=0) - 1

    @property
    def vertex_set(self) -> VertexSet:
        return VertexSet.full(self.m)

    def is_face_mask(self, mask: int) -> bool:
        return any(mask & ~f == 0 for f in self.facet_masks) or mask == 0

    def is_face(self, sigma: VertexSet) -> bool:
        if sigma.m != self.m:
            raise VertexOutOfRange("face ambient size differs from m")
        return self.is_face_mask(sigma.mask)

    def faces_by_card(self, within: int | None = None) -> dict[int, list[int]]:
        """All faces (as masks) grouped by cardinality, ascending masks.

        ``within`` restricts to faces contained in the given mask, i.e. the
        faces of the full subcomplex without re-indexing. Cardinality 0 (the
        empty face) is always present.
        """
        ambient = (1 << self.m) - 1 if within is None else within
        seen: set[int] = set()
        for f in self.facet_masks:
            for s in submasks(f & ambient):
                seen.add(s)
        seen.add(0)
        out: dict[int, list[int]] = {}
        for mask in sorted(seen):
            out.setdefault(mask.bit_count(), []).append(mask)
        return out

    def f_vector(self) -> tuple[int, ...]:
        """(f_-1, f_0, ..., f_{dim}) face counts, f_-1 = 1 for the empty face."""
        by_card = self.faces_by_card()
        return tuple(len(by_card.get(c, ())) for c in range(self.dim + 2))

    def h_vector(self) -> tuple[int, ...]:
        """h-vector (h_0, ..., h_n) with n = dim + 1, from the f-vector."""
        n = self.dim + 1
        f = self.f_vector()
        h = []
        for k in range(n + 1):
            total = 0
            for i in range(k + 1):
                total += (-1) ** (k - i) * _binom(n - i, k - i) * f[i]
            h.append(total)
        return tuple(h)

    def reduced_euler_characteristic(self) -> int:
        """chi~ = sum over all faces (including the empty face) of (-1)^(card-1)."""
        return sum((-1) ** (c - 1) * len(faces) for c, faces in self.faces_by_card().items())

    # -- missing faces ---------------------------------------------------------

    @cached_property
    def missing_face_masks(self) -> tuple[int, ...]:
        """Minimal non-faces, sorted by (cardinality, lexicographic).

        A minimal non-face has all proper subsets as faces, so its cardinality
        is at most (largest facet) + 1; subsets are scanned in increasing
        cardinality, and a non-face is minimal iff it contains no smaller
        missing face already found.
        """
        found: list[int] = []
        cap = min(self.m, max((len(f) for f in self.facets), default=0) + 1)
        for card in range(1, cap + 1):
            for combo in itertools.combinations(range(self.m), card):
                mask = 0
                for b in combo:
                    mask |= 1 << b
                if self.is_face_mask(mask):
                    continue
                if any(mf & mask == mf for mf in found):
                    continue
                found.append(mask)
        return tuple(found)

    def missing_faces(self) -> tuple[VertexSet, ...]:
        out = [VertexSet(self.m, mask) for mask in self.missing_face_masks]
        return tuple(sorted(out, key=lambda v: v.sort_key))

    # -- subcomplexes ------------------------------------------------------------

    def _reindex(self, masks: Sequence[int], keep_mask: int) -> Reindexed:
        old = _mask_vertices(keep_mask)
        pos = {v: i for i, v in enumerate(old)}
        new_m = len(old)
        remapped = []
        for mask in masks:
            new_mask = 0
            for v in _mask_vertices(mask):
                new_mask |= 1 << pos[v]
            remapped.append(VertexSet(new_m, new_mask))
        remapped.sort(key=lambda v: v.sort_key)
        return Reindexed(SimplicialComplex(new_m, tuple(remapped)), old)

    def full_subcomplex(self, selection: VertexSet) -> Reindexed:
        """K_I = {faces contained in I}, re-indexed onto {1, ..., |I|}.

        Isolated vertices of I are retained (every singleton is a face).
        """
        if selection.m != self.m:
            raise VertexOutOfRange("selection ambient size differs from m")
        if selection.mask == 0:
            raise EmptySelection("full subcomplex on the empty vertex set")
        restricted = {f & selection.mask for f in self.facet_masks}
        maximal = [a for a in restricted if not any(b != a and a & b == a for b in restricted)]
        return self._reindex(maximal, selection.mask)

    def join(self, other: "SimplicialComplex") -> "SimplicialComplex":
        """Join, with the second factor's vertices shifted by self.m."""
        if self.m + other.m > MAX_VERTICES:
            raise VertexBudgetExceeded(f"{self.m} + {other.m} > {MAX_VERTICES}")
        if self.m == 0:
            return other
        if other.m == 0:
            return self
        m = self.m + other.m
        facets = [
            VertexSet(m, a | (b << self.m))
            for a in self.facet_masks
            for b in other.facet_masks
        ]
        facets.sort(key=lambda v: v.sort_key)
        return SimplicialComplex(m, tuple(facets))

    def link(self, sigma: VertexSet) -> Reindexed:
        """Link of a face: {tau : tau disjoint from sigma, tau + sigma a face}."""
        if not self.is_face(sigma):
            raise NotAFace(f"{sigma} is not a face")
        if sigma.mask == 0:
            return Reindexed(self, tuple(range(1, self.m + 1)))
        containing = [f & ~sigma.mask for f in self.facet_masks if f & sigma.mask == sigma.mask]
        keep = 0
        for f in containing:
            keep |= f
        if keep == 0:
            return Reindexed(SimplicialComplex.empty_complex(), ())
        # facets of K containing sigma give incomparable differences
        return self._reindex(sorted(set(containing)), keep)

    def cone_vertex_mask(self) -> int:
        if self.m == 0:
            return 0
        acc = (1 << self.m) - 1
        for f in self.facet_masks:
            acc &= f
        return acc

    def core(self) -> CoreResult:
        """Remove the vertices common to all facets; core(core(K)) = core(K)."""
        cone = self.cone_vertex_mask()
        keep = ~cone & ((1 << self.m) - 1)
        if keep == 0:
            return CoreResult(SimplicialComplex.empty_complex(), (), VertexSet(self.m, cone))
        sub = self.full_subcomplex(VertexSet(self.m, keep))
        return CoreResult(sub.complex, sub.vertices, VertexSet(self.m, cone))

    def relabel(self, perm: Sequence[int]) -> "SimplicialComplex":
        """Relabel vertices: old vertex v becomes perm[v-1] (a permutation of [m])."""
        if sorted(perm) != list(range(1, self.m + 1)):
            raise VertexOutOfRange("perm must be a permutation of 1..m")
        facets = []
        for f in self.facets:
            facets.append(VertexSet.of(self.m, (perm[v - 1] for v in f)))
        facets.sort(key=lambda v: v.sort_key)
        return SimplicialComplex(self.m, tuple(facets))

    # -- join decomposition -------------------------------------------------------

    def join_decomposition(self) -> DecompositionReport:
        """Finest partition of [m] with no missing face straddling two parts.

        Union-find over the non-cone vertices, merging the support of each
        missing face. Every non-cone vertex lies in some missing face, so each
        part supports at least one.
        """
        cone = self.cone_vertex_mask()
        parent = list(range(self.m))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(x: int, y: int) -> None:
            rx, ry = find(x), find(y)
            if rx != ry:
                parent[max(rx, ry)] = min(rx, ry)

        for mf in self.missing_face_masks:
            bits = _mask_vertices(mf)
            for v in bits[1:]:
                union(bits[0] - 1, v - 1)
        groups: dict[int, int] = {}
        for b in range(self.m):
            if cone >> b & 1:
                continue
            groups.setdefault(find(b), 0)
            groups[find(b)] |= 1 << b
        parts = [VertexSet(self.m, mask) for _, mask in sorted(groups.items())]
        subs = [self.full_subcomplex(p) for p in parts]
        return DecompositionReport(
            m=self.m,
            parts=tuple(parts),
            cone_vertices=VertexSet(self.m, cone),
            factors=tuple(s.complex for s in subs),
            factor_vertices=tuple(s.vertices for s in subs),
        )

    def __str__(self) -> str:
        return f"SimplicialComplex(m={self.m}, facets=[" + ", ".join(map(str, self.facets)) + "])"


def _binom(n: int, k: int) -> int:
    if k < 0 or n < 0 or k > n:
        return 0
    return _factorial(n) // (_factorial(k) * _factorial(n - k))


def _factorial(n: int) -> int:
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


@dataclass(frozen=True)
class PolytopeIncidence:
    """Vertex-facet incidences of a simple n-polytope with m facets.

    ``vertices[j]`` is the set of facets containing polytope vertex j; each
    entry has exactly n elements (simplicity).
    """

    n: int
    m: int
    vertices: tuple[VertexSet, ...]

    def __post_init__(self) -> None:
        if not self.vertices:
            raise EmptyInput("polytope needs at least one vertex")
        covered = 0
        for entry in self.vertices:
            if entry.m != self.m:
                raise VertexOutOfRange("incidence entry ambient size differs from m")
            if len(entry) != self.n:
                raise NotSimple(f"vertex on {len(entry)} facets; expected {self.n}")
            covered |= entry.mask
        if covered != (1 << self.m) - 1:
            raise MissingVertex("some facet contains no vertex")
        if len({e.mask for e in self.vertices}) != len(self.vertices):
            raise NotSimple("duplicate vertex-facet incidences")

    @classmethod
    def of(cls, n: int, m: int, entries: Iterable[Iterable[int]]) -> "PolytopeIncidence":
        return cls(n, m, tuple(VertexSet.of(m, e) for e in entries))

    def product(self, other: "PolytopeIncidence") -> "PolytopeIncidence":
        """Product polytope: facets are the disjoint union of the factors'."""
        m = self.m + other.m
        entries = [
            VertexSet(m, a.mask | (b.mask << self.m))
            for a in self.vertices
            for b in other.vertices
        ]
        return PolytopeIncidence(self.n + other.n, m, tuple(entries))


def dual_of_polytope(p: PolytopeIncidence) -> SimplicialComplex:
    """Boundary complex of the dual simplicial polytope.

    A set of facets of P spans a face of the dual exactly when the facets have
    a common vertex, so the maximal faces are the incidence entries.
    """
    facets = sorted(p.vertices, key=lambda v: v.sort_key)
    return SimplicialComplex(p.m, tuple(facets))
