"""Exception types raised across the library."""


class MomentAngleError(Exception):
    """Base class for all library errors."""


class EmptyInput(MomentAngleError):
    """A construction was handed no data (e.g. an empty facet list)."""


class VertexOutOfRange(MomentAngleError):
    """A vertex label falls outside {1, ..., m} or m exceeds the budget."""


class MissingVertex(MomentAngleError):
    """Some vertex of {1, ..., m} appears in no facet."""


class EmptySelection(MomentAngleError):
    """A full subcomplex was requested on the empty vertex set."""


class VertexBudgetExceeded(MomentAngleError):
    """A join would need more than 63 vertices."""


class NotAFace(MomentAngleError):
    """The given vertex set is not a face of the complex."""


class NotSimple(MomentAngleError):
    """Polytope incidence data violates simplicity (wrong entry size)."""


class UnknownCatalogEntry(MomentAngleError):
    """No catalog builder with the given name."""


class BadParams(MomentAngleError):
    """Catalog builder parameters are invalid."""


class NotAComplex(MomentAngleError):
    """Consecutive differentials do not compose to zero."""


class VerdictMismatch(MomentAngleError):
    """Algebraic and combinatorial Gorenstein verdicts disagree (a bug)."""


class NotPoincareDuality(MomentAngleError):
    """The algebra does not satisfy Poincare duality."""


class SocleNotSpanned(MomentAngleError):
    """The given pair of elements does not multiply to a socle generator."""


class NoValidSplit(MomentAngleError):
    """No candidate multidegree pair induces a missing-face partition."""


class DimensionMismatch(MomentAngleError):
    """Matrix shape is incompatible with the complex."""


class NotLsop(MomentAngleError):
    """The linear forms are not a linear system of parameters."""


class NotGorenstein(MomentAngleError):
    """The operation requires a Gorenstein complex."""
