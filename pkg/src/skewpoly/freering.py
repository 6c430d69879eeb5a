"""Free multivariate skew polynomials and their degree-additive product.

Monomials are words over the variables x_1..x_n, stored as tuples of
1-based indices; the empty tuple is the monomial 1.  A polynomial is a
finite map word -> nonzero left coefficient.

The monomial order used everywhere (leading terms, division, the row
order of Vandermonde matrices) is graded, then lexicographic reading
words from their rightmost character, with x_1 < x_2 < ... < x_n.
Appending a variable on the right preserves the order, which is what
the division algorithm needs.
"""

from __future__ import annotations

from itertools import product as _cartesian

from .errors import RingMismatch, ZeroPolynomial


class _Bottom:
    """Degree of the zero polynomial.

    A dedicated sentinel rather than a numeric infinity: accidental
    arithmetic on it raises immediately instead of propagating a junk
    degree.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "BOTTOM"


BOTTOM = _Bottom()


def mono_key(word):
    """Sort key realizing the global monomial order."""
    return (len(word), word[::-1])


def monomials_of_degree(n, d):
    """All words of length d over n variables, ascending in the global order."""
    for rev in _cartesian(range(1, n + 1), repeat=d):
        yield rev[::-1]


def monomials_below(n, d):
    """All monomials of degree < d, ascending in the global order."""
    out = []
    for e in range(d):
        out.extend(monomials_of_degree(n, e))
    return out


def count_monomials_below(n, d):
    return sum(n ** e for e in range(d))


def word_times_constant(frame, word, a, memo=None):
    """Expand (word) * a as a dict word -> coefficient.

    Pushes a leftward through the word one character at a time starting
    from the right end:

        (m x_i) a = sum_j m (sigma_ij(a) x_j) + m (delta_i(a))

    Degree of every emitted word is at most len(word).
    """
    if memo is None:
        memo = {}
    return _push(frame, word, a, memo)


def _push(frame, word, a, memo):
    if a.is_zero():
        return {}
    if not word:
        return {word: a}
    key = (word, a)
    hit = memo.get(key)
    if hit is not None:
        return hit
    prefix, i = word[:-1], word[-1]
    out = {}
    sig_row = frame.sigma_at(a)[i - 1]
    for j in range(frame.n):
        c = sig_row[j]
        if c.is_zero():
            continue
        for w, coeff in _push(frame, prefix, c, memo).items():
            wj = w + (j + 1,)
            cur = out.get(wj)
            new = coeff if cur is None else cur + coeff
            if new.is_zero():
                out.pop(wj, None)
            else:
                out[wj] = new
    d = frame.delta_at(a)[i - 1]
    if not d.is_zero():
        for w, coeff in _push(frame, prefix, d, memo).items():
            cur = out.get(w)
            new = coeff if cur is None else cur + coeff
            if new.is_zero():
                out.pop(w, None)
            else:
                out[w] = new
    memo[key] = out
    return out


class SkewPolynomial:
    """Sparse skew polynomial with left coefficients over a fixed frame.

    Treat instances as immutable; all arithmetic allocates fresh term
    maps.  Two polynomials interoperate only when they share the same
    frame object.
    """

    __slots__ = ("frame", "terms")

    def __init__(self, frame, terms):
        self.frame = frame
        self.terms = {w: c for w, c in terms.items() if not c.is_zero()}

    # -- queries -------------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def degree(self):
        """Maximum word length, or BOTTOM for the zero polynomial."""
        if not self.terms:
            return BOTTOM
        return max(len(w) for w in self.terms)

    def leading_monomial(self):
        if not self.terms:
            raise ZeroPolynomial("the zero polynomial has no leading monomial")
        return max(self.terms, key=mono_key)

    def leading_coefficient(self):
        return self.terms[self.leading_monomial()]

    def coefficient(self, word):
        c = self.terms.get(tuple(word))
        return c if c is not None else self.frame.ring.zero()

    def sorted_terms(self, reverse=True):
        """(word, coeff) pairs, leading term first by default."""
        return [(w, self.terms[w]) for w in sorted(self.terms, key=mono_key, reverse=reverse)]

    # -- arithmetic ------------------------------------------------------------

    def _check(self, other):
        if not isinstance(other, SkewPolynomial):
            return None
        if other.frame is not self.frame:
            raise RingMismatch("polynomials built over different frames")
        return other

    def _coerce(self, other):
        if isinstance(other, SkewPolynomial):
            return self._check(other)
        if isinstance(other, int):
            return constant(self.frame, self.frame.ring.from_int(other))
        if _is_ring_element(self.frame.ring, other):
            return constant(self.frame, other)
        return None

    def __add__(self, other):
        g = self._coerce(other)
        if g is None:
            return NotImplemented
        out = dict(self.terms)
        for w, c in g.terms.items():
            cur = out.get(w)
            new = c if cur is None else cur + c
            if new.is_zero():
                out.pop(w, None)
            else:
                out[w] = new
        return SkewPolynomial(self.frame, out)

    __radd__ = __add__

    def __sub__(self, other):
        g = self._coerce(other)
        if g is None:
            return NotImplemented
        return self + (-g)

    def __rsub__(self, other):
        g = self._coerce(other)
        if g is None:
            return NotImplemented
        return g + (-self)

    def __neg__(self):
        return SkewPolynomial(self.frame, {w: -c for w, c in self.terms.items()})

    def scale_left(self, c):
        """c * self with the scalar acting on the left."""
        if c.is_zero():
            return zero(self.frame)
        return SkewPolynomial(self.frame, {w: c * coeff for w, coeff in self.terms.items()})

    def __rmul__(self, other):
        # element * poly and int * poly are left scalar actions
        if isinstance(other, int):
            return self.scale_left(self.frame.ring.from_int(other))
        if _is_ring_element(self.frame.ring, other):
            return self.scale_left(other)
        return NotImplemented

    def __mul__(self, other):
        g = self._coerce(other)
        if g is None:
            return NotImplemented
        return mul(self, g)

    def __eq__(self, other):
        if isinstance(other, SkewPolynomial):
            return self.frame is other.frame and self.terms == other.terms
        if isinstance(other, int) or _is_ring_element(self.frame.ring, other):
            g = self._coerce(other)
            return self.terms == g.terms
        return NotImplemented

    def __bool__(self):
        return bool(self.terms)

    # -- rendering -------------------------------------------------------------

    def to_text(self):
        """Human-readable rendering: terms "coeff*x1.x2" joined by " + "."""
        if not self.terms:
            return "0"
        chunks = []
        for w, c in self.sorted_terms():
            mono = ".".join(f"x{i}" for i in w) if w else "1"
            chunks.append(f"{c!r}*{mono}")
        return " + ".join(chunks)

    def to_json(self):
        enc = self.frame.ring.element_to_json
        return [
            {"monomial": list(w), "coeff": enc(c)} for w, c in self.sorted_terms()
        ]

    def __repr__(self):
        return self.to_text()


def _is_ring_element(ring, x):
    from .rings import FieldElement, Quaternion

    if isinstance(x, FieldElement):
        if x.field != ring:
            raise RingMismatch(f"{x.field} element used over {ring}")
        return True
    if isinstance(x, Quaternion):
        if x.ring != ring:
            raise RingMismatch("quaternion from a different ring")
        return True
    return False


# ---------------------------------------------------------------------------
# Constructors
# ---------------------------------------------------------------------------

def zero(frame):
    return SkewPolynomial(frame, {})


def one(frame):
    return constant(frame, frame.ring.one())


def constant(frame, c):
    return SkewPolynomial(frame, {(): c})


def variable(frame, i):
    """The polynomial x_i (1-based index)."""
    if not 1 <= i <= frame.n:
        raise ValueError(f"variable index {i} out of range 1..{frame.n}")
    return SkewPolynomial(frame, {(i,): frame.ring.one()})


def monomial(frame, word, coeff=None):
    word = tuple(int(i) for i in word)
    if any(not 1 <= i <= frame.n for i in word):
        raise ValueError("variable index out of range")
    if coeff is None:
        coeff = frame.ring.one()
    return SkewPolynomial(frame, {word: coeff})


def from_terms(frame, pairs):
    """Polynomial from (word, coeff) pairs; repeated words accumulate."""
    out = zero(frame)
    for w, c in pairs:
        out = out + monomial(frame, w, c)
    return out


def poly_from_json(frame, obj):
    if not isinstance(obj, list):
        raise ValueError("polynomial must be a list of term objects")
    dec = frame.ring.element_from_json
    return from_terms(frame, ((tuple(t["monomial"]), dec(t["coeff"])) for t in obj))


# ---------------------------------------------------------------------------
# Multiplication
# ---------------------------------------------------------------------------

def mul_monomial_constant(frame, word, a):
    """The product (word) * a as a polynomial of degree <= len(word)."""
    return SkewPolynomial(frame, word_times_constant(frame, tuple(word), a))


def mul(F, G):
    """The unique degree-additive ring product.

    Each left coefficient of G is pushed through the corresponding
    monomial of F, and G's monomial is appended on the right; on bare
    monomials this is concatenation.
    """
    if F.frame is not G.frame:
        raise RingMismatch("polynomials built over different frames")
    frame = F.frame
    out = {}
    memo = {}
    for mw, fc in F.terms.items():
        for nw, gc in G.terms.items():
            for w, c in _push(frame, mw, gc, memo).items():
                full = w + nw
                piece = fc * c
                cur = out.get(full)
                new = piece if cur is None else cur + piece
                if new.is_zero():
                    out.pop(full, None)
                else:
                    out[full] = new
    return SkewPolynomial(frame, out)
