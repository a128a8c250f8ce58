"""Exact scalars: Q(zeta_k), Laurent polynomials over it, and their quotients.

Coefficients are Python ints or ``fractions.Fraction``; nothing is ever
evaluated in floating point.
"""

import re
from fractions import Fraction
from functools import lru_cache
from math import gcd

MINUS_INFINITY = float("-inf")


def _lcm(a, b):
    return a * b // gcd(a, b)


def _ptrim(p):
    p = list(p)
    while p and not p[-1]:
        p.pop()
    return p


def _pdivmod_q(a, b):
    """Division with remainder of rational-coefficient polynomials (low->high)."""
    a = [Fraction(x) for x in a]
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = Fraction(b[-1])
    while len(a) >= len(b) and any(a):
        c = a[-1] / lead
        s = len(a) - len(b)
        q[s] = c
        for i, bi in enumerate(b):
            a[s + i] -= c * bi
        a = _ptrim(a)
    return q, a


@lru_cache(maxsize=None)
def cyclotomic_poly(k):
    """Coefficients (lowest degree first) of the k-th cyclotomic polynomial,
    obtained by dividing ``x^k - 1`` by ``Phi_d`` for every proper divisor d."""
    if k < 1:
        raise ValueError("k must be >= 1")
    num = [-1] + [0] * (k - 1) + [1]
    for d in range(1, k):
        if k % d == 0:
            num, r = _pdivmod_q(num, cyclotomic_poly(d))
            assert not r
    return tuple(int(x) for x in num)


def _reduce(p, k):
    phi = cyclotomic_poly(k)
    n = len(phi) - 1
    p = list(p)
    for i in range(len(p) - 1, n - 1, -1):
        c = p[i]
        if c:
            for j in range(n):
                if phi[j]:
                    p[i - n + j] -= c * phi[j]
    p = p[:n]
    return p + [0] * (n - len(p))


def _norm(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


class Cyclotomic:
    """Element of Q(zeta_k) stored as a coefficient vector in powers of zeta_k
    reduced modulo the k-th cyclotomic polynomial.

    Rational values are always stored with ``k == 1`` so that equal numbers
    compare and hash alike regardless of where they came from.
    """

    __slots__ = ("k", "c")

    def __init__(self, k, coeffs=(0,)):
        coeffs = [_norm(Fraction(x)) if not isinstance(x, int) else x for x in coeffs]
        self._set(k, _reduce(coeffs, k) if k > 1 else [sum(coeffs)])

    def _set(self, k, c):
        if k > 1 and not any(c[1:]):
            k, c = 1, c[:1]
        self.k = k
        self.c = tuple(x.numerator if type(x) is Fraction and x.denominator == 1 else x
                       for x in c)

    @classmethod
    def _raw(cls, k, c):
        obj = cls.__new__(cls)
        obj._set(k, c)
        return obj

    @classmethod
    def rational(cls, x):
        return cls._raw(1, [_norm(Fraction(x))])

    @classmethod
    def zeta(cls, k, a=1):
        a %= k
        return cls(k, [0] * a + [1])

    # coercion ------------------------------------------------------------

    @staticmethod
    def _coerce(x):
        if isinstance(x, Cyclotomic):
            return x
        if isinstance(x, (int, Fraction)):
            return Cyclotomic._raw(1, [x])
        return NotImplemented

    def lift(self, K):
        """The same number written in Q(zeta_K); requires k | K."""
        if K == self.k:
            return self
        if K % self.k:
            raise ValueError("cannot embed Q(zeta_%d) in Q(zeta_%d)" % (self.k, K))
        if self.k == 1:
            return self
        step = K // self.k
        p = [0] * ((len(self.c) - 1) * step + 1)
        for i, x in enumerate(self.c):
            p[i * step] = x
        return Cyclotomic._raw(K, _reduce(p, K))

    def _pair(self, other):
        if self.k == other.k or other.k == 1 or self.k == 1:
            return self, other
        K = _lcm(self.k, other.k)
        return self.lift(K), other.lift(K)

    # arithmetic ------------------------------------------------------------

    def is_rational(self):
        return self.k == 1

    def __bool__(self):
        return any(self.c)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._pair(other)
        if a.k == b.k:
            return Cyclotomic._raw(a.k, [x + y for x, y in zip(a.c, b.c)])
        if b.k == 1:
            a, b = b, a
        return Cyclotomic._raw(b.k, [b.c[0] + a.c[0]] + list(b.c[1:]))

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic._raw(self.k, [-x for x in self.c])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._pair(other)
        if a.k == 1 or b.k == 1:
            if b.k == 1:
                a, b = b, a
            s = a.c[0]
            return Cyclotomic._raw(b.k, [s * x for x in b.c])
        p = [0] * (len(a.c) + len(b.c) - 1)
        for i, x in enumerate(a.c):
            if x:
                for j, y in enumerate(b.c):
                    if y:
                        p[i + j] += x * y
        return Cyclotomic._raw(a.k, _reduce(p, a.k))

    __rmul__ = __mul__

    def inverse(self):
        if not self:
            raise ZeroDivisionError("inverse of zero in Q(zeta_%d)" % self.k)
        if self.k == 1:
            return Cyclotomic._raw(1, [_norm(Fraction(1) / self.c[0])])
        # extended Euclid: s * self + t * phi = 1
        phi = [Fraction(x) for x in cyclotomic_poly(self.k)]
        r0, r1 = phi, _ptrim(Fraction(x) for x in self.c)
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while len(r1) > 1:
            q, r = _pdivmod_q(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _ptrim(_psub_q(s0, _pmul_q(q, s1)))
        inv = [x / r1[0] for x in s1]
        return Cyclotomic._raw(self.k, _reduce([_norm(x) for x in inv], self.k))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        out, base = Cyclotomic._raw(1, [1]), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        if self.k == other.k:
            return self.c == other.c
        if self.k == 1 or other.k == 1:
            return False
        a, b = self._pair(other)
        return a.c == b.c

    def __hash__(self):
        return hash(self.c[0]) if self.k == 1 else hash((self.k, self.c))

    def __repr__(self):
        return "Cyclotomic(%d, %r)" % (self.k, self.c)

    def __str__(self):
        if self.k == 1:
            return str(self.c[0])
        terms = []
        for i, x in enumerate(self.c):
            if x:
                mono = "" if i == 0 else "z%d" % self.k if i == 1 else "z%d^%d" % (self.k, i)
                terms.append(_term(x, mono))
        out = _join(terms)
        return out if len(terms) == 1 else "(" + out + ")"


def _term(c, mono):
    """One product ``c * mono`` written compactly; c is a number or a
    Cyclotomic."""
    if not mono:
        return str(c)
    if c == 1:
        return mono
    if c == -1:
        return "-" + mono
    return "%s*%s" % (c, mono)


def _join(terms):
    out = terms[0]
    for s in terms[1:]:
        out += " - " + s[1:] if s.startswith("-") else " + " + s
    return out


def _psub_q(a, b):
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]


def _pmul_q(a, b):
    if not a or not b:
        return []
    p = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            p[i + j] += x * y
    return p


ZERO = Cyclotomic._raw(1, [0])
ONE = Cyclotomic._raw(1, [1])


def zeta(k, a=1):
    return Cyclotomic.zeta(k, a)


def as_cyclotomic(x):
    c = Cyclotomic._coerce(x)
    if c is NotImplemented:
        raise TypeError("cannot convert %r to a cyclotomic number" % (x,))
    return c


# dense polynomial helpers over Q(zeta) ------------------------------------


def _trim(p):
    while p and not p[-1]:
        p.pop()
    return p


def _padd(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, y in enumerate(b):
        out[i] = out[i] + y
    return out


def _pmul(a, b):
    if not a or not b:
        return []
    if all(x.k == 1 for x in a) and all(y.k == 1 for y in b):
        # rational coefficients: multiply plain numbers, wrap once
        raw = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            x = x.c[0]
            if x:
                for j, y in enumerate(b):
                    y = y.c[0]
                    if y:
                        raw[i + j] += x * y
        return [Cyclotomic._raw(1, [v]) for v in raw]
    out = [ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = out[i + j] + x * y
    return out


def _pdivmod(a, b):
    a = list(a)
    inv = b[-1].inverse()
    q = [ZERO] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b):
        c = a[-1] * inv
        s = len(a) - len(b)
        q[s] = c
        for i, y in enumerate(b):
            if y:
                a[s + i] = a[s + i] - c * y
        a.pop()
        _trim(a)
    return q, a


def _pgcd(a, b):
    a, b = list(a), list(b)
    while b:
        _, r = _pdivmod(a, b)
        a, b = b, r
    inv = a[-1].inverse()
    return [x * inv for x in a]


class LaurentPoly:
    """Finite sum ``sum c_i t^i`` with i possibly negative.

    Stored as a lowest exponent plus a dense coefficient tuple with no zero
    at either end; the zero polynomial has an empty tuple.
    """

    __slots__ = ("low", "c")

    def __init__(self, terms=None, low=0):
        """``terms`` is either a dict exponent -> coefficient or a sequence of
        coefficients starting at exponent ``low``."""
        if terms is None:
            terms = []
        if isinstance(terms, dict):
            items = {e: as_cyclotomic(v) for e, v in terms.items()}
            items = {e: v for e, v in items.items() if v}
            if not items:
                self.low, self.c = 0, ()
                return
            lo, hi = min(items), max(items)
            seq = [items.get(e, ZERO) for e in range(lo, hi + 1)]
            self.low, self.c = lo, tuple(seq)
            return
        self._set(low, [as_cyclotomic(v) for v in terms])

    def _set(self, low, seq):
        _trim(seq)
        i = 0
        while i < len(seq) and not seq[i]:
            i += 1
        if i == len(seq):
            self.low, self.c = 0, ()
        else:
            self.low, self.c = low + i, tuple(seq[i:])

    @classmethod
    def _raw(cls, low, seq):
        obj = cls.__new__(cls)
        obj._set(low, list(seq))
        return obj

    @classmethod
    def monomial(cls, coeff, exp=0):
        return cls._raw(exp, [as_cyclotomic(coeff)])

    @classmethod
    def const(cls, x):
        return cls.monomial(x, 0)

    @property
    def high(self):
        return self.low + len(self.c) - 1

    def is_zero(self):
        return not self.c

    __bool__ = lambda self: bool(self.c)

    def terms(self):
        return {self.low + i: x for i, x in enumerate(self.c) if x}

    def width(self):
        return MINUS_INFINITY if not self.c else len(self.c) - 1

    def order(self):
        """Least common order of the cyclotomic fields of the coefficients."""
        k = 1
        for x in self.c:
            k = _lcm(k, x.k)
        return k

    def __add__(self, other):
        other = _as_laurent(other)
        if other is NotImplemented:
            return other
        if not self.c:
            return other
        if not other.c:
            return self
        lo = min(self.low, other.low)
        a = [ZERO] * (self.low - lo) + list(self.c)
        b = [ZERO] * (other.low - lo) + list(other.c)
        return LaurentPoly._raw(lo, _padd(a, b))

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw(self.low, [-x for x in self.c])

    def __sub__(self, other):
        other = _as_laurent(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _as_laurent(other)
        if other is NotImplemented:
            return other
        return LaurentPoly._raw(self.low + other.low, _pmul(self.c, other.c))

    __rmul__ = __mul__

    def shift(self, n):
        return LaurentPoly._raw(self.low + n, self.c)

    def exact_div(self, other):
        """Quotient when ``other`` divides ``self``; ValueError otherwise."""
        if not other.c:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self.c:
            return self
        q, r = _pdivmod(list(self.c), list(other.c))
        if any(r):
            raise ValueError("division is not exact")
        return LaurentPoly._raw(self.low - other.low, q)

    def scale(self, x):
        x = as_cyclotomic(x)
        return LaurentPoly._raw(self.low, [x * y for y in self.c])

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a Laurent polynomial; use RatFunc")
        out, base = LaurentPoly.const(1), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        other = _as_laurent(other)
        if other is NotImplemented:
            return False
        return self.low == other.low and self.c == other.c

    def __hash__(self):
        return hash((self.low, len(self.c)))

    def __repr__(self):
        return "LaurentPoly(%r, low=%d)" % (list(self.c), self.low)

    def __str__(self):
        if not self.c:
            return "0"
        terms = []
        for i, x in enumerate(self.c):
            if x:
                e = self.low + i
                terms.append(_term(x, "" if e == 0 else "t" if e == 1 else "t^%d" % e))
        return _join(terms)


def _as_laurent(x):
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, (int, Fraction, Cyclotomic)):
        return LaurentPoly.const(x)
    return NotImplemented


_ONE_POLY = LaurentPoly._raw(0, [ONE])


class RatFunc:
    """Quotient of Laurent polynomials in canonical form.

    The denominator is an ordinary polynomial with constant coefficient 1 and
    shares no factor with the numerator; any power of t lives in the
    numerator. Two equal functions therefore have identical representations.
    """

    __slots__ = ("num", "den")

    def __init__(self, num=0, den=None):
        num = _as_laurent(num)
        den = _ONE_POLY if den is None else _as_laurent(den)
        if num is NotImplemented or den is NotImplemented:
            raise TypeError("RatFunc needs Laurent polynomial numerator and denominator")
        if not den.c:
            raise ZeroDivisionError("zero denominator")
        self._normalize(num, den)

    @classmethod
    def _raw(cls, num, den):
        obj = cls.__new__(cls)
        obj.num, obj.den = num, den
        return obj

    def _normalize(self, num, den):
        if not num.c:
            self.num, self.den = LaurentPoly._raw(0, []), _ONE_POLY
            return
        low = num.low - den.low
        a, b = list(num.c), list(den.c)
        if len(b) > 1 and len(a) > 1:
            g = _pgcd(a, b)
            if len(g) > 1:
                a, _ = _pdivmod(a, g)
                b, _ = _pdivmod(b, g)
        lead = b[0]
        if lead != ONE:
            inv = lead.inverse()
            a = [x * inv for x in a]
            b = [x * inv for x in b]
        self.num = LaurentPoly._raw(low, a)
        self.den = LaurentPoly._raw(0, b)

    @classmethod
    def t(cls, n=1):
        return cls._raw(LaurentPoly.monomial(1, n), _ONE_POLY)

    @classmethod
    def monomial(cls, coeff, exp=0):
        return cls._raw(LaurentPoly.monomial(coeff, exp), _ONE_POLY)

    @classmethod
    def const(cls, x):
        return cls.monomial(x, 0)

    def is_zero(self):
        return not self.num.c

    def __bool__(self):
        return bool(self.num.c)

    def is_laurent(self):
        return len(self.den.c) == 1

    def width(self):
        return width(self)

    @staticmethod
    def _coerce(x):
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, LaurentPoly):
            return RatFunc._raw(x, _ONE_POLY)
        if isinstance(x, (int, Fraction, Cyclotomic)):
            return RatFunc._raw(LaurentPoly.const(x), _ONE_POLY)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other.num.c:
            return self
        if not self.num.c:
            return other
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc._raw(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.num.c or not other.num.c:
            return RatFunc()
        if len(self.den.c) == 1 and len(other.den.c) == 1:
            return RatFunc._raw(self.num * other.num, _ONE_POLY)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self):
        if not self.num.c:
            raise ZeroDivisionError("inverse of zero")
        if len(self.num.c) == 1:
            # monomial numerator: result is den * c^-1 t^-e
            inv = self.num.c[0].inverse()
            return RatFunc._raw(self.den.scale(inv).shift(-self.num.low), _ONE_POLY)
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        out, base = RatFunc.const(1), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num.low, len(self.num.c), len(self.den.c)))

    def __repr__(self):
        return "RatFunc(%r)" % str(self)

    def __str__(self):
        if len(self.den.c) == 1:
            return str(self.num)
        return "(%s)/(%s)" % (self.num, self.den)


def width(r):
    """Span of exponents: top minus bottom for a Laurent polynomial, extended
    to quotients by subtraction; ``MINUS_INFINITY`` for zero."""
    if isinstance(r, LaurentPoly):
        return r.width()
    r = RatFunc._coerce(r)
    if not r.num.c:
        return MINUS_INFINITY
    return (len(r.num.c) - 1) - (len(r.den.c) - 1)


def _units(k, K):
    z = Cyclotomic.zeta(k).lift(K) if k > 1 else ONE
    out, u = [], ONE
    for _ in range(k):
        out.append(u)
        out.append(-u)
        u = u * z
    return out


def _key(x):
    return tuple(Fraction(v) for v in x.c)


class TorsionValue:
    """A nonzero rational function modulo the units ``+-zeta_k^a t^b``.

    Equality is decided by a normal form: shift the numerator to start at
    t^0, then multiply by the unit that makes its lowest coefficient
    lexicographically smallest.
    """

    __slots__ = ("rep", "k", "_nf")

    def __init__(self, rep, k=1):
        self.rep = RatFunc._coerce(rep)
        if self.rep is NotImplemented:
            raise TypeError("TorsionValue needs a rational function")
        self.k = int(k)
        self._nf = None

    def normal_form(self):
        if self._nf is None:
            r = self.rep
            if not r.num.c:
                self._nf = r
                return r
            K = _lcm(self.k, _lcm(r.num.order(), r.den.order()))
            lead = r.num.c[0].lift(K) if r.num.c[0].k > 1 else r.num.c[0]
            # prefer the unit making the lowest coefficient 1; it is unique
            best = min(_units(self.k, K),
                       key=lambda u: (u * lead != ONE, _key_full(u * lead, K)))
            num = LaurentPoly._raw(0, [best * x for x in r.num.c])
            self._nf = RatFunc._raw(num, r.den)
        return self._nf

    def width(self):
        return width(self.rep)

    def __mul__(self, other):
        if isinstance(other, TorsionValue):
            return TorsionValue(self.rep * other.rep, _lcm(self.k, other.k))
        return TorsionValue(self.rep * other, self.k)

    def __truediv__(self, other):
        if isinstance(other, TorsionValue):
            return TorsionValue(self.rep / other.rep, _lcm(self.k, other.k))
        return TorsionValue(self.rep / other, self.k)

    def __eq__(self, other):
        if not isinstance(other, TorsionValue):
            other = TorsionValue(other, self.k)
        if self.k != other.k:
            k = _lcm(self.k, other.k)
            return TorsionValue(self.rep, k) == TorsionValue(other.rep, k)
        return self.normal_form() == other.normal_form()

    def __hash__(self):
        return hash(self.normal_form())

    def __repr__(self):
        return "TorsionValue(%r, k=%d)" % (str(self.rep), self.k)

    def __str__(self):
        return str(self.normal_form())


def _key_full(x, K):
    """Comparable key for a cyclotomic number written in Q(zeta_K)."""
    if x.k != K:
        x = x.lift(K)
    c = list(x.c)
    n = len(cyclotomic_poly(K)) - 1
    return tuple(Fraction(v) for v in c + [0] * (n - len(c)))


def w_equal(x, y, k=1):
    """True iff ``x = u * y`` for a unit ``u = +-zeta_k^a t^b``."""
    return TorsionValue(x, k) == TorsionValue(y, k)


# string form ----------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|(z\d+)|(t)|([-+*/^()]))")


def parse_ratfunc(text):
    """Parse the rendering produced by ``str`` on ``RatFunc``/``LaurentPoly``.

    The grammar is ordinary arithmetic over integers, ``t`` and ``zK``
    (a primitive K-th root of unity), with ``^`` taking a signed integer.
    """
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError("unexpected character at %d in %r" % (pos, text))
        pos = m.end()
        num, z, t, op = m.groups()
        if num is not None:
            tokens.append(("num", int(num)))
        elif z is not None:
            tokens.append(("z", int(z[1:])))
        elif t is not None:
            tokens.append(("t", None))
        else:
            tokens.append((op, None))
    tokens.append(("end", None))
    i = 0

    def peek():
        return tokens[i][0]

    def take(kind=None):
        nonlocal i
        tok = tokens[i]
        if kind is not None and tok[0] != kind:
            raise ValueError("expected %r, found %r in %r" % (kind, tok[0], text))
        i += 1
        return tok

    def expr():
        val = term()
        while peek() in "+-":
            op = take()[0]
            rhs = term()
            val = val + rhs if op == "+" else val - rhs
        return val

    def term():
        val = factor()
        while peek() in ("*", "/"):
            op = take()[0]
            rhs = factor()
            val = val * rhs if op == "*" else val / rhs
        return val

    def factor():
        if peek() == "-":
            take()
            return -factor()
        base = atom()
        if peek() == "^":
            take()
            sign = 1
            if peek() == "-":
                take()
                sign = -1
            base = base ** (sign * take("num")[1])
        return base

    def atom():
        kind, val = take()
        if kind == "num":
            return RatFunc.const(val)
        if kind == "z":
            return RatFunc.const(Cyclotomic.zeta(val))
        if kind == "t":
            return RatFunc.t()
        if kind == "(":
            v = expr()
            take(")")
            return v
        raise ValueError("unexpected token %r in %r" % (kind, text))

    out = expr()
    take("end")
    return out
