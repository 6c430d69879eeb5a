"""Zero-set geometry: P-closure, P-independence, P-bases and rank.

A point b lies in the closure of a point set G when every skew
polynomial vanishing on all of G also vanishes at b.  Membership is
decided through skew Vandermonde matrices: b is independent from a
P-independent set B exactly when appending b's column raises the rank
of the Vandermonde built from monomials of degree <= #B.  That degree
bound is the load-bearing fact of this module; the test suite checks
it against a brute-force enumeration oracle on small fields before
anything else relies on it.

Ranks and bases cost time exponential in the number of points when
n > 1 (the monomial count explodes); this is inherent to the method
and fine at desk scale.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as _cartesian

from .errors import DuplicatePoint, InvalidInput, NotFinite
from .evaluation import check_point, conjugate, fundamental_table
from .freering import monomials_below
from .linalg import Matrix, rank


def check_point_set(frame, points):
    """Validate an ordered collection of distinct points."""
    pts = tuple(check_point(frame, p) for p in points)
    if len(set(pts)) != len(pts):
        raise DuplicatePoint("point sets must contain distinct points")
    return pts


def points_to_json(frame, points):
    from .evaluation import point_to_json

    return [point_to_json(frame, p) for p in points]


def points_from_json(frame, obj):
    from .evaluation import point_from_json

    if not isinstance(obj, list):
        raise ValueError("point set must be a list of points")
    return check_point_set(frame, [point_from_json(frame, p) for p in obj])


def all_points(frame):
    """Every point of F^n, coordinates in ring enumeration order."""
    if not frame.ring.is_finite:
        raise NotFinite(f"{frame.ring} has infinitely many points")
    els = list(frame.ring.elements())
    for combo in _cartesian(els, repeat=frame.n):
        yield combo


# ---------------------------------------------------------------------------
# Skew Vandermonde matrices
# ---------------------------------------------------------------------------

def vandermonde(frame, points, d):
    """Matrix of fundamental-function values.

    Rows run over the monomials of degree < d in the global monomial
    order, columns over the given points.  Row count is d for n = 1
    and (n^d - 1)/(n - 1) otherwise.
    """
    if d < 1:
        raise InvalidInput("degree bound must be >= 1")
    points = tuple(check_point(frame, p) for p in points)
    monos = monomials_below(frame.n, d)
    tables = [fundamental_table(frame, p, d) for p in points]
    rows = [[t[m] for t in tables] for m in monos]
    if not points:
        rows = [[] for _ in monos]
    return Matrix(frame.ring, rows, row_labels=monos, col_labels=points)


# ---------------------------------------------------------------------------
# Independence and bases
# ---------------------------------------------------------------------------

def is_p_independent_from(frame, b, base):
    """Whether b lies outside the closure of the P-independent set base.

    Decided by the rank jump of the Vandermonde with monomials of
    degree <= #base; a separator of that degree exists exactly when b
    is outside the closure.
    """
    b = check_point(frame, b)
    base = check_point_set(frame, base)
    if b in base:
        raise DuplicatePoint(f"{b!r} is already in the base set")
    d = len(base) + 1
    r_with = rank(vandermonde(frame, base + (b,), d))
    r_without = rank(vandermonde(frame, base, d)) if base else 0
    return r_with == r_without + 1


@dataclass
class PBasisResult:
    """Greedily extracted P-basis with its certifying Vandermonde."""

    basis: tuple
    rank: int
    vandermonde: Matrix
    discarded: tuple


def find_p_basis(frame, points):
    """Scan points in input order, keeping each one independent from the
    kept set; the kept set is a P-basis of the closure of the input."""
    points = check_point_set(frame, points)
    kept = []
    discarded = []
    for p in points:
        if is_p_independent_from(frame, p, kept):
            kept.append(p)
        else:
            discarded.append(p)
    cert = vandermonde(frame, kept, max(len(kept), 1))
    return PBasisResult(
        basis=tuple(kept), rank=len(kept), vandermonde=cert, discarded=tuple(discarded)
    )


def rank_of(frame, points):
    """Rank of the closure of the given points."""
    points = check_point_set(frame, points)
    if not points:
        return 0
    return rank(vandermonde(frame, points, len(points)))


def in_closure(frame, b, generators):
    """Closure membership for arbitrary (possibly dependent) generators.

    Reduces the generators to a P-basis first, then runs the rank test.
    """
    b = check_point(frame, b)
    generators = check_point_set(frame, generators)
    if b in generators:
        return True
    basis = find_p_basis(frame, generators).basis
    return not is_p_independent_from(frame, b, basis)


def set_is_p_independent(frame, points):
    """Whether every point lies outside the closure of the others."""
    points = check_point_set(frame, points)
    for i, p in enumerate(points):
        rest = points[:i] + points[i + 1:]
        if in_closure(frame, p, rest):
            return False
    return True


def closure_members(frame, generators):
    """All points of F^n in the closure of the generators (finite fields only)."""
    generators = check_point_set(frame, generators)
    if not frame.ring.is_finite:
        raise NotFinite("closure enumeration needs a finite coefficient field")
    if not generators:
        return ()
    basis = find_p_basis(frame, generators).basis
    out = []
    for b in all_points(frame):
        if b in basis or not is_p_independent_from(frame, b, basis):
            out.append(b)
    return tuple(out)


def is_two_sided(frame, points):
    """Whether the ideal of polynomials vanishing on the points is two-sided.

    Equivalent to: every conjugate a^c of every listed point stays
    inside the closure, with c over all nonzero constants.
    """
    points = check_point_set(frame, points)
    if not frame.ring.is_finite:
        raise NotFinite("two-sidedness check enumerates all nonzero constants")
    closure = set(closure_members(frame, points))
    for a in points:
        for c in frame.ring.elements():
            if c.is_zero():
                continue
            if conjugate(frame, a, c) not in closure:
                return False
    return True


# ---------------------------------------------------------------------------
# Matroid verification
# ---------------------------------------------------------------------------

@dataclass
class MatroidReport:
    """Exhaustive subset audit of the independence system on a point set."""

    ok: bool
    violations: list
    ground_size: int
    independent_count: int
    bases: tuple          # maximal independent subsets, as index tuples
    rank: int


def matroid_check(frame, points):
    """Verify hereditary closure, the exchange axiom, and equicardinality
    of maximal independent subsets, over every subset of the input."""
    points = check_point_set(frame, points)
    m = len(points)
    if m > 10:
        raise InvalidInput("exhaustive subset check capped at 10 points")

    def members(mask):
        return tuple(points[i] for i in range(m) if mask >> i & 1)

    indep = {}
    for mask in range(1 << m):
        indep[mask] = set_is_p_independent(frame, members(mask))

    violations = []
    if not indep[0]:
        violations.append("empty set reported dependent")

    for mask in range(1 << m):
        if not indep[mask]:
            continue
        for i in range(m):
            if mask >> i & 1 and not indep[mask & ~(1 << i)]:
                violations.append(f"hereditary failure: subset of {members(mask)!r}")

    indep_masks = [mask for mask in range(1 << m) if indep[mask]]
    for A in indep_masks:
        for B in indep_masks:
            if bin(A).count("1") >= bin(B).count("1"):
                continue
            extra = B & ~A
            if not any(indep[A | (1 << i)] for i in range(m) if extra >> i & 1):
                violations.append(
                    f"exchange failure: {members(A)!r} cannot grow into {members(B)!r}"
                )

    bases = []
    for mask in indep_masks:
        if all(
            not indep[mask | (1 << i)] for i in range(m) if not mask >> i & 1
        ):
            bases.append(mask)
    sizes = {bin(b).count("1") for b in bases}
    if len(sizes) > 1:
        violations.append(f"maximal independent subsets of unequal sizes {sorted(sizes)}")

    rk = max(sizes) if sizes else 0
    base_indices = tuple(
        tuple(i for i in range(m) if mask >> i & 1) for mask in bases
    )
    return MatroidReport(
        ok=not violations,
        violations=violations,
        ground_size=m,
        independent_count=len(indep_masks),
        bases=base_indices,
        rank=rk,
    )


def complementary_p_basis(frame, base, ambient):
    """Extend the P-independent set base through ambient to a P-basis.

    Returns the added points C: base and C are disjoint and their union
    is a P-basis of the closure of ambient.  Requires base itself to be
    P-independent with closure inside the closure of ambient.
    """
    base = check_point_set(frame, base)
    ambient = check_point_set(frame, ambient)
    if not set_is_p_independent(frame, base):
        raise InvalidInput("base set is not P-independent")
    ambient_basis = find_p_basis(frame, ambient).basis
    for b in base:
        if b not in ambient_basis and is_p_independent_from(frame, b, ambient_basis):
            raise InvalidInput("base set leaves the closure of the ambient set")
    kept = list(base)
    added = []
    for p in ambient:
        if p in kept:
            continue
        if is_p_independent_from(frame, p, kept):
            kept.append(p)
            added.append(p)
    total = rank_of(frame, ambient)
    if len(base) + len(added) != total:
        raise InvalidInput(
            f"rank split failed: {len(base)} + {len(added)} != {total}"
        )
    return tuple(added)
