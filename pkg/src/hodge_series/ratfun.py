"""Exact arithmetic for bivariate integer polynomials, rational functions and
truncated formal power series in two variables u, v.

All coefficients are arbitrary-precision Python ints (Fractions only appear
after substituting rational values for the variables), so every identity
checked with these types is exact.

Representation choices:

* ``BivarPoly`` stores a sparse map ``(deg_u, deg_v) -> coeff`` with no zero
  coefficients.  The generating functions in this package are products of
  very sparse factors such as ``(1 + u^3 v^2)^g`` or ``1 - (uv)^k``, so a
  dense representation would be wasteful.
* ``RatFun2`` is an unreduced quotient num/den.  Bivariate gcds are never
  computed: semantic equality is cross-multiplication equality, and
  ``cancel_factor`` strips the only common factors (powers of ``1+u``,
  ``1+v``, ``1-uv``) that the applications need removed.
* ``TruncSeries2`` truncates by total degree ``i + j <= order``; this matches
  the homogeneous filtration of Z[[u,v]].  Default working order is 24.
"""

from __future__ import annotations

from fractions import Fraction

#: truncation order used by the verification suites unless overridden
DEFAULT_ORDER = 24

Rational = Fraction


class NotDivisible(ArithmeticError):
    """Exact polynomial division failed: a is not a multiple of b."""


class DivisionByZeroFunction(ZeroDivisionError):
    """Inversion of a rational function with zero numerator."""


class NonUnitDenominator(ArithmeticError):
    """Series expansion requested for a denominator vanishing at (0, 0)."""


class NonIntegralExpansion(ArithmeticError):
    """A power-series coefficient of the expansion is not an integer."""


class ZeroDenominatorAfterSubstitution(ZeroDivisionError):
    """A substitution made the denominator vanish identically."""


class NotPolynomialWithinBound(ArithmeticError):
    """to_polynomial could not verify polynomiality within the degree bound."""


def _as_int(c):
    if isinstance(c, Fraction):
        if c.denominator != 1:
            raise TypeError("BivarPoly coefficients must be integers, got %r" % (c,))
        return int(c)
    return int(c)


class BivarPoly:
    """Sparse polynomial in Z[u, v]; immutable by convention."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for (i, j), c in terms.items():
                c = _as_int(c)
                if c:
                    if i < 0 or j < 0:
                        raise ValueError("negative exponent (%d, %d)" % (i, j))
                    clean[(i, j)] = c
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @staticmethod
    def constant(c):
        return BivarPoly({(0, 0): c})

    @staticmethod
    def monomial(i, j, c=1):
        return BivarPoly({(i, j): c})

    @staticmethod
    def from_json_terms(triples):
        return BivarPoly({(int(i), int(j)): int(c) for i, j, c in triples})

    # -- basic queries -----------------------------------------------------

    def is_zero(self):
        return not self.terms

    def constant_term(self):
        return self.terms.get((0, 0), 0)

    def total_degree(self):
        """Max of i + j over the support; -1 for the zero polynomial."""
        return max((i + j for i, j in self.terms), default=-1)

    def coeff(self, i, j):
        return self.terms.get((i, j), 0)

    def __eq__(self, other):
        if isinstance(other, int):
            other = BivarPoly.constant(other)
        if not isinstance(other, BivarPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            other = BivarPoly.constant(other)
        if not isinstance(other, BivarPoly):
            return NotImplemented
        res = dict(self.terms)
        for k, c in other.terms.items():
            nc = res.get(k, 0) + c
            if nc:
                res[k] = nc
            else:
                res.pop(k, None)
        out = BivarPoly.__new__(BivarPoly)
        out.terms = res
        return out

    __radd__ = __add__

    def __neg__(self):
        out = BivarPoly.__new__(BivarPoly)
        out.terms = {k: -c for k, c in self.terms.items()}
        return out

    def __sub__(self, other):
        if isinstance(other, int):
            other = BivarPoly.constant(other)
        return self.__add__(other.__neg__())

    def __rsub__(self, other):
        return BivarPoly.constant(other).__sub__(self)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return BivarPoly()
            out = BivarPoly.__new__(BivarPoly)
            out.terms = {k: c * other for k, c in self.terms.items()}
            return out
        if not isinstance(other, BivarPoly):
            return NotImplemented
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        res = {}
        for (i, j), c in a.items():
            for (k, l), d in b.items():
                key = (i + k, j + l)
                nc = res.get(key, 0) + c * d
                if nc:
                    res[key] = nc
                else:
                    del res[key]
        out = BivarPoly.__new__(BivarPoly)
        out.terms = res
        return out

    __rmul__ = __mul__

    def mul_trunc(self, other, order):
        """Product discarding all terms of total degree > order."""
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        res = {}
        for (i, j), c in a.items():
            rem = order - i - j
            if rem < 0:
                continue
            for (k, l), d in b.items():
                if k + l > rem:
                    continue
                key = (i + k, j + l)
                nc = res.get(key, 0) + c * d
                if nc:
                    res[key] = nc
                else:
                    del res[key]
        out = BivarPoly.__new__(BivarPoly)
        out.terms = res
        return out

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result = BivarPoly.constant(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def truncate(self, order):
        out = BivarPoly.__new__(BivarPoly)
        out.terms = {k: c for k, c in self.terms.items() if k[0] + k[1] <= order}
        return out

    # -- division ----------------------------------------------------------

    def divide_exact(self, other):
        """Return q with self == other * q, else raise NotDivisible.

        Greedy cancellation of lexicographic leading terms; correct for exact
        division over Z because leading terms are multiplicative.
        """
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = dict(self.terms)
        quot = {}
        lt = max(other.terms)
        lc = other.terms[lt]
        while rem:
            rlt = max(rem)
            di, dj = rlt[0] - lt[0], rlt[1] - lt[1]
            if di < 0 or dj < 0:
                raise NotDivisible("monomial %r not reachable" % (rlt,))
            qc, r = divmod(rem[rlt], lc)
            if r:
                raise NotDivisible("coefficient at %r not divisible" % (rlt,))
            quot[(di, dj)] = qc
            for (a, b), c in other.terms.items():
                key = (a + di, b + dj)
                nc = rem.get(key, 0) - qc * c
                if nc:
                    rem[key] = nc
                else:
                    rem.pop(key, None)
        return BivarPoly(quot)

    def is_divisible_by(self, other):
        try:
            self.divide_exact(other)
            return True
        except NotDivisible:
            return False

    # -- substitution ------------------------------------------------------

    def subs_u(self, val):
        """Substitute u := val (a Fraction or int); returns UniPoly in v."""
        val = Fraction(val)
        res = {}
        for (i, j), c in self.terms.items():
            res[j] = res.get(j, 0) + c * val ** i
        return UniPoly(res)

    def subs_v(self, val):
        val = Fraction(val)
        res = {}
        for (i, j), c in self.terms.items():
            res[i] = res.get(i, 0) + c * val ** j
        return UniPoly(res)

    def subs_uv(self, uval, vval):
        uval, vval = Fraction(uval), Fraction(vval)
        return sum((c * uval ** i * vval ** j for (i, j), c in self.terms.items()),
                   Fraction(0))

    def diagonal(self):
        """Substitute u = v = t; returns UniPoly in t."""
        res = {}
        for (i, j), c in self.terms.items():
            res[i + j] = res.get(i + j, 0) + c
        return UniPoly(res)

    # -- serialization and printing -----------------------------------------

    def json_terms(self):
        """Sorted [i, j, "coeff"] triples (coefficients as decimal strings)."""
        return [[i, j, str(c)] for (i, j), c in sorted(self.terms.items())]

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (i, j), c in sorted(self.terms.items(), key=lambda kv: (kv[0][0] + kv[0][1], kv[0])):
            mono = []
            if i:
                mono.append("u" if i == 1 else "u^%d" % i)
            if j:
                mono.append("v" if j == 1 else "v^%d" % j)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append("*".join(mono))
            elif c == -1:
                parts.append("-" + "*".join(mono))
            else:
                parts.append("%d*%s" % (c, "*".join(mono)))
        s = " + ".join(parts)
        return s.replace("+ -", "- ")

    def __repr__(self):
        return "BivarPoly(%s)" % (str(self),)

    def latex(self):
        if not self.terms:
            return "0"
        parts = []
        for (i, j), c in sorted(self.terms.items(), key=lambda kv: (kv[0][0] + kv[0][1], kv[0])):
            mono = ""
            if i:
                mono += "u" if i == 1 else "u^{%d}" % i
            if j:
                mono += "v" if j == 1 else "v^{%d}" % j
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append("%d %s" % (c, mono))
        return " + ".join(parts).replace("+ -", "- ")


ZERO = BivarPoly()
ONE = BivarPoly.constant(1)
U = BivarPoly.monomial(1, 0)
V = BivarPoly.monomial(0, 1)


def w_power(k):
    """(uv)^k as a polynomial."""
    return BivarPoly.monomial(k, k)


def one_minus_w(k):
    """1 - (uv)^k."""
    return BivarPoly({(0, 0): 1, (k, k): -1})


class TruncSeries2:
    """Truncated power series: coefficients on total degree i + j <= order."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order, coeffs=None):
        if order < 0:
            raise ValueError("negative truncation order")
        self.order = order
        clean = {}
        if coeffs:
            for (i, j), c in coeffs.items():
                if i + j <= order and c:
                    clean[(i, j)] = _as_int(c)
        self.coeffs = clean

    @staticmethod
    def from_poly(p, order):
        return TruncSeries2(order, p.terms)

    @staticmethod
    def from_json_obj(obj):
        return TruncSeries2(int(obj["order"]),
                            {(int(i), int(j)): int(c)
                             for i, j, c in obj["coeffs"]})

    def to_poly(self):
        return BivarPoly(self.coeffs)

    def coeff(self, i, j):
        return self.coeffs.get((i, j), 0)

    def is_zero(self):
        return not self.coeffs

    def __eq__(self, other):
        if not isinstance(other, TruncSeries2):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __add__(self, other):
        order = min(self.order, other.order)
        res = {k: c for k, c in self.coeffs.items() if k[0] + k[1] <= order}
        for k, c in other.coeffs.items():
            if k[0] + k[1] > order:
                continue
            nc = res.get(k, 0) + c
            if nc:
                res[k] = nc
            else:
                res.pop(k, None)
        return TruncSeries2(order, res)

    def __neg__(self):
        return TruncSeries2(self.order, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        return self.__add__(other.__neg__())

    def __mul__(self, other):
        if isinstance(other, int):
            return TruncSeries2(self.order, {k: c * other for k, c in self.coeffs.items()})
        order = min(self.order, other.order)
        prod = BivarPoly(self.coeffs).mul_trunc(BivarPoly(other.coeffs), order)
        return TruncSeries2(order, prod.terms)

    __rmul__ = __mul__

    def truncate(self, order):
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return TruncSeries2(order, self.coeffs)

    def shift_uv(self, k, order=None):
        """Multiply by (uv)^k, optionally re-truncating at the given order."""
        order = self.order if order is None else order
        res = {}
        for (i, j), c in self.coeffs.items():
            if i + j + 2 * k <= order:
                res[(i + k, j + k)] = c
        return TruncSeries2(order, res)

    def nonnegative(self):
        return all(c >= 0 for c in self.coeffs.values())

    def json_obj(self):
        return {"order": self.order,
                "coeffs": [[i, j, str(c)] for (i, j), c in sorted(self.coeffs.items())]}

    def __str__(self):
        return "%s + O(deg %d)" % (BivarPoly(self.coeffs), self.order + 1)

    def __repr__(self):
        return "TruncSeries2(order=%d, %s)" % (self.order, BivarPoly(self.coeffs))


class RatFun2:
    """Quotient of two BivarPoly; no gcd normalization is ever performed."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=ONE):
        if isinstance(num, int):
            num = BivarPoly.constant(num)
        if isinstance(den, int):
            den = BivarPoly.constant(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator polynomial")
        self.num = num
        self.den = den

    @staticmethod
    def from_poly(p):
        return RatFun2(p, ONE)

    def is_zero(self):
        return self.num.is_zero()

    # -- field operations ----------------------------------------------------

    def __add__(self, other):
        other = _coerce_rat(other)
        if self.den == other.den:
            return RatFun2(self.num + other.num, self.den)
        return RatFun2(self.num * other.den + other.num * self.den,
                       self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFun2(-self.num, self.den)

    def __sub__(self, other):
        return self.__add__(_coerce_rat(other).__neg__())

    def __rsub__(self, other):
        return _coerce_rat(other).__sub__(self)

    def __mul__(self, other):
        other = _coerce_rat(other)
        return RatFun2(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inv(self):
        if self.num.is_zero():
            raise DivisionByZeroFunction("inverse of the zero function")
        return RatFun2(self.den, self.num)

    def __truediv__(self, other):
        return self.__mul__(_coerce_rat(other).inv())

    def __pow__(self, e):
        if e < 0:
            return self.inv() ** (-e)
        result = RatFun2(ONE, ONE)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def rat_eq(self, other):
        """Semantic equality: num_a * den_b == num_b * den_a."""
        other = _coerce_rat(other)
        return self.num * other.den == other.num * self.den

    def __eq__(self, other):
        if isinstance(other, (RatFun2, BivarPoly, int)):
            return self.rat_eq(other)
        return NotImplemented

    # -- expansion -----------------------------------------------------------

    def expand(self, order):
        """Power-series expansion to total degree <= order.

        Coefficients are solved in increasing total degree from
        den * S = num.  Raises NonUnitDenominator if den(0,0) = 0 and
        NonIntegralExpansion at the first non-integer coefficient.
        """
        c0 = self.den.constant_term()
        if c0 == 0:
            raise NonUnitDenominator("denominator vanishes at (0, 0)")
        num = self.num.terms
        den_rest = [(k, c) for k, c in self.den.terms.items() if k != (0, 0)]
        S = {}
        for t in range(order + 1):
            for i in range(t + 1):
                j = t - i
                acc = num.get((i, j), 0)
                for (a, b), dcoef in den_rest:
                    if a <= i and b <= j:
                        prev = S.get((i - a, j - b))
                        if prev is not None:
                            acc -= dcoef * prev
                if acc:
                    q, r = divmod(acc, c0)
                    if r:
                        raise NonIntegralExpansion(
                            "coefficient at (%d, %d) is %s/%s" % (i, j, acc, c0))
                    S[(i, j)] = q
        return TruncSeries2(order, S)

    # -- cancellation and substitution ----------------------------------------

    def cancel_factor(self, f):
        """Divide the maximal common power of f out of num and den.

        Returns (reduced function, multiplicity removed).
        """
        if f.is_zero() or f.total_degree() <= 0:
            raise ValueError("factor must be a nonzero non-constant polynomial")
        num, den = self.num, self.den
        a = 0
        if not num.is_zero():
            while True:
                try:
                    num2 = num.divide_exact(f)
                except NotDivisible:
                    break
                num, a = num2, a + 1
        else:
            a = None  # zero numerator is divisible by anything
        b = 0
        while True:
            try:
                den2 = den.divide_exact(f)
            except NotDivisible:
                break
            den, b = den2, b + 1
        mult = b if a is None else min(a, b)
        if mult == 0:
            return self, 0
        num, den = self.num, self.den
        for _ in range(mult):
            if not num.is_zero():
                num = num.divide_exact(f)
            den = den.divide_exact(f)
        return RatFun2(num, den), mult

    def subs_u(self, val):
        den = self.den.subs_u(val)
        if den.is_zero():
            raise ZeroDenominatorAfterSubstitution("u := %s kills denominator" % (val,))
        return RatFun1(self.num.subs_u(val), den)

    def subs_v(self, val):
        den = self.den.subs_v(val)
        if den.is_zero():
            raise ZeroDenominatorAfterSubstitution("v := %s kills denominator" % (val,))
        return RatFun1(self.num.subs_v(val), den)

    def subs_uv(self, uval, vval):
        den = self.den.subs_uv(uval, vval)
        if den == 0:
            raise ZeroDenominatorAfterSubstitution(
                "(u, v) := (%s, %s) kills denominator" % (uval, vval))
        return self.num.subs_uv(uval, vval) / den

    def diagonal(self):
        """Substitute u = v = t."""
        den = self.den.diagonal()
        if den.is_zero():
            raise ZeroDenominatorAfterSubstitution("u = v = t kills denominator")
        return RatFun1(self.num.diagonal(), den)

    def json_obj(self):
        return {"num": self.num.json_terms(), "den": self.den.json_terms()}

    def __str__(self):
        if self.den == ONE:
            return str(self.num)
        return "(%s) / (%s)" % (self.num, self.den)

    def __repr__(self):
        return "RatFun2(%s)" % (str(self),)

    def latex(self):
        if self.den == ONE:
            return self.num.latex()
        return "\\frac{%s}{%s}" % (self.num.latex(), self.den.latex())


def _coerce_rat(x):
    if isinstance(x, RatFun2):
        return x
    if isinstance(x, BivarPoly):
        return RatFun2(x, ONE)
    if isinstance(x, int):
        return RatFun2(BivarPoly.constant(x), ONE)
    raise TypeError("cannot coerce %r to RatFun2" % (x,))


def expand_series(r, order):
    """Module-level alias for RatFun2.expand."""
    return _coerce_rat(r).expand(order)


def cancel_factor(r, f):
    return _coerce_rat(r).cancel_factor(f)


def substitute(r, u=None, v=None, diagonal=False):
    """Substitute rational values for u and/or v, or set u = v = t.

    Returns a Fraction when both variables are fixed, otherwise a univariate
    RatFun1 (in v, u or t respectively).
    """
    r = _coerce_rat(r)
    if diagonal:
        if u is not None or v is not None:
            raise ValueError("diagonal substitution takes no values")
        return r.diagonal()
    if u is not None and v is not None:
        return r.subs_uv(u, v)
    if u is not None:
        return r.subs_u(u)
    if v is not None:
        return r.subs_v(v)
    raise ValueError("nothing to substitute")


def to_polynomial(r, degree_bound):
    """Certify that r is a polynomial of total degree <= degree_bound.

    The candidate is the truncated expansion; the certificate is the exact
    identity candidate * den == num.
    """
    if degree_bound < 0:
        raise ValueError("negative degree bound")
    r = _coerce_rat(r)
    series = r.expand(degree_bound)
    p = series.to_poly()
    if p * r.den == r.num:
        return p
    raise NotPolynomialWithinBound(
        "not a polynomial of total degree <= %d" % degree_bound)


# ---------------------------------------------------------------------------
# univariate helpers (results of substitution; coefficients may be Fractions)
# ---------------------------------------------------------------------------


def _norm_scalar(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


class UniPoly:
    """Sparse univariate polynomial with int or Fraction coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for d, c in terms.items():
                c = _norm_scalar(c)
                if c:
                    clean[int(d)] = c
        self.terms = clean

    @staticmethod
    def constant(c):
        return UniPoly({0: c})

    @staticmethod
    def monomial(d, c=1):
        return UniPoly({d: c})

    def is_zero(self):
        return not self.terms

    def degree(self):
        return max(self.terms, default=-1)

    def coeff(self, d):
        return self.terms.get(d, 0)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = UniPoly.constant(other)
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = UniPoly.constant(other)
        res = dict(self.terms)
        for d, c in other.terms.items():
            nc = res.get(d, 0) + c
            if nc:
                res[d] = nc
            else:
                res.pop(d, None)
        return UniPoly(res)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly({d: -c for d, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = UniPoly.constant(other)
        return self.__add__(other.__neg__())

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return UniPoly({d: c * other for d, c in self.terms.items()})
        res = {}
        for d, c in self.terms.items():
            for e, f in other.terms.items():
                key = d + e
                nc = res.get(key, 0) + c * f
                if nc:
                    res[key] = nc
                else:
                    del res[key]
        return UniPoly(res)

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result = UniPoly.constant(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __call__(self, val):
        val = Fraction(val)
        return _norm_scalar(sum((c * val ** d for d, c in self.terms.items()),
                                Fraction(0)))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for d, c in sorted(self.terms.items()):
            if d == 0:
                parts.append(str(c))
            else:
                t = "t" if d == 1 else "t^%d" % d
                if c == 1:
                    parts.append(t)
                elif c == -1:
                    parts.append("-" + t)
                else:
                    parts.append("%s*%s" % (c, t))
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return "UniPoly(%s)" % (str(self),)


class RatFun1:
    """Quotient of two UniPoly, unreduced; equality via cross-multiplication."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if isinstance(num, (int, Fraction)):
            num = UniPoly.constant(num)
        if den is None:
            den = UniPoly.constant(1)
        elif isinstance(den, (int, Fraction)):
            den = UniPoly.constant(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        self.num = num
        self.den = den

    def rat_eq(self, other):
        if isinstance(other, (UniPoly, int, Fraction)):
            other = RatFun1(other)
        return self.num * other.den == other.num * self.den

    def __eq__(self, other):
        if isinstance(other, (RatFun1, UniPoly, int, Fraction)):
            return self.rat_eq(other)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, (UniPoly, int, Fraction)):
            other = RatFun1(other)
        return RatFun1(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __add__(self, other):
        if isinstance(other, (UniPoly, int, Fraction)):
            other = RatFun1(other)
        return RatFun1(self.num * other.den + other.num * self.den,
                       self.den * other.den)

    def __sub__(self, other):
        if isinstance(other, (UniPoly, int, Fraction)):
            other = RatFun1(other)
        return RatFun1(self.num * other.den - other.num * self.den,
                       self.den * other.den)

    def __call__(self, val):
        d = self.den(val)
        if d == 0:
            raise ZeroDenominatorAfterSubstitution("t := %s kills denominator" % (val,))
        return _norm_scalar(Fraction(self.num(val)) / d)

    def __str__(self):
        if self.den == UniPoly.constant(1):
            return str(self.num)
        return "(%s) / (%s)" % (self.num, self.den)

    def __repr__(self):
        return "RatFun1(%s)" % (str(self),)
