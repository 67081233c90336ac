"""Generating functions: classifying-stack series, full-stack series, the
closed formula for semistable stacks, classical-type composition sums, and
moduli-space specializations.

Every function here returns exact objects from :mod:`hodge_series.ratfun`.

The central object is the closed formula for the two-variable series of the
semistable locus: a sum over subsets I of the simple roots of

    (-1)^{dim Z(L^I) - dim Z_G} * a(L^I)
        * (uv)^{(g-1) dim U^I} / prod_{a in I} (1 - (uv)^{2 rho^I(a^vee)})
        * (uv)^{sum_{a in I} 2 rho^I(a^vee) <varpi_a(d)>}

where a(L) is the degree-independent series of the stack of all L-bundles,

    a(L) = ((1+u)^g (1+v)^g / (1-uv))^{dim Z(L)}
           * prod_{k > dim Z(L)} (1+u^{d_k} v^{d_k-1})^g (1+u^{d_k-1} v^{d_k})^g
                                 / ((1-(uv)^{d_k-1}) (1-(uv)^{d_k})),

with d_k the exponents of L.  Every denominator in sight is a product of
factors (1 - (uv)^k), so terms are carried in factored form (a numerator
product plus a multiset of w-exponents, w = uv) and merged over a factored
common denominator.  No gcd computations are ever needed, and a truncated
assembly mode expands term by term for the series-level identities.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, gcd

from .ratfun import (
    ONE,
    BivarPoly,
    RatFun1,
    RatFun2,
    TruncSeries2,
    UniPoly,
    one_minus_w,
    to_polynomial,
)
from .rootdata import (
    GroupSpec,
    NonIntegralExponent,
    RootDatum,
    build_root_system,
    frac_rep,
    validate_degree,
)

#: genus cap; coefficient sizes grow binomially in g
GENUS_CAP = 8


class NotGoodCase(ValueError):
    """Moduli-space series requested for a degree with strictly semistables."""


class NotCoprime(ValueError):
    """Fixed-determinant series requires coprime rank and degree."""


def _check_genus(g, allow_large_genus=False):
    if g < 2:
        raise ValueError("genus must be at least 2")
    if g > GENUS_CAP and not allow_large_genus:
        raise ValueError(
            "genus %d exceeds the default cap %d; pass allow_large_genus=True"
            % (g, GENUS_CAP))


# ---------------------------------------------------------------------------
# factored terms
# ---------------------------------------------------------------------------


@dataclass
class FTerm:
    """coef * w^shift * prod (1 + u^a v^b)^e / prod (1 - w^k)^mult."""

    coef: int
    shift: int
    numfactors: tuple   # of (a, b, e)
    den: Counter        # w-exponent -> multiplicity


def _binom_power(a, b, e):
    """(1 + u^a v^b)^e expanded by the binomial theorem."""
    return BivarPoly({(a * k, b * k): comb(e, k) for k in range(e + 1)})


def _num_poly(term, order=None):
    """Expanded numerator of a term (without denominator cofactors)."""
    poly = BivarPoly.monomial(term.shift, term.shift, term.coef)
    for a, b, e in term.numfactors:
        if e == 0:
            continue
        factor = _binom_power(a, b, e)
        poly = poly.mul_trunc(factor, order) if order is not None else poly * factor
    return poly


def _den_poly(den_counter):
    poly = ONE
    for k in sorted(den_counter):
        m = den_counter[k]
        if m:
            poly = poly * one_minus_w(k) ** m
    return poly


def assemble_exact(terms) -> RatFun2:
    """Sum factored terms over the max-multiplicity common denominator."""
    common = Counter()
    for t in terms:
        for k, m in t.den.items():
            if m > common[k]:
                common[k] = m
    total = BivarPoly()
    for t in terms:
        poly = _num_poly(t)
        cof = Counter({k: common[k] - t.den.get(k, 0) for k in common})
        poly = poly * _den_poly(cof)
        total = total + poly
    return RatFun2(total, _den_poly(common))


def assemble_series(terms, order) -> TruncSeries2:
    """Sum of the power-series expansions of factored terms, to total degree
    <= order; terms whose w-shift already exceeds the order are skipped."""
    total = TruncSeries2(order)
    for t in terms:
        if 2 * t.shift > order:
            continue
        num = _num_poly(t, order)
        total = total + RatFun2(num, _den_poly(t.den)).expand(order)
    return total


# ---------------------------------------------------------------------------
# stack series of all bundles (degree independent)
# ---------------------------------------------------------------------------


def _a_parts(m, exps, g):
    """Numerator factors and denominator multiset of a(L) from exponents."""
    numf = []
    den = Counter()
    if m:
        numf += [(1, 0, g * m), (0, 1, g * m)]
        den[1] = m
    for d in exps[m:]:
        numf += [(d, d - 1, g), (d - 1, d, g)]
        den[d - 1] += 1
        den[d] += 1
    return tuple(numf), den


def a_series_term(spec: GroupSpec, g) -> FTerm:
    rs = build_root_system(spec)
    exps = rs.datum.exponent_list()
    numf, den = _a_parts(rs.center_dim, exps, g)
    return FTerm(1, 0, numf, den)


def a_series(spec: GroupSpec, g, allow_large_genus=False) -> RatFun2:
    """Series of the stack of all G-bundles of a fixed degree (any degree)."""
    _check_genus(g, allow_large_genus)
    return assemble_exact([a_series_term(spec, g)])


def hp_classifying(spec: GroupSpec) -> RatFun2:
    """Series of the classifying stack: 1 / prod_k (1 - (uv)^{d_k})."""
    den = Counter()
    for d in build_root_system(spec).datum.exponent_list():
        den[d] += 1
    return RatFun2(ONE, _den_poly(den))


# ---------------------------------------------------------------------------
# the closed formula
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class _Skeleton:
    I: tuple
    coef: int
    m: int
    exps: tuple
    dim_u: int
    rho: tuple  # of (index, 2 rho^I(alpha^vee))


def _skeletons(datum: RootDatum):
    """Degree-independent data of every term of the closed formula."""
    cached = datum._cache.get("skeletons")
    if cached is not None:
        return cached
    k = datum.num_simple
    out = []
    for mask in range(1 << k):
        I = tuple(i for i in range(k) if (mask >> i) & 1)
        levi = datum.sub_datum(datum.complement(I))
        rho = datum.two_rho_pairings(I)
        out.append(_Skeleton(
            I=I,
            coef=(-1) ** len(I),
            m=levi.dim_z,
            exps=levi.exponent_list(),
            dim_u=datum.dim_unipotent(I),
            rho=tuple((a, rho[a]) for a in I),
        ))
    out = tuple(out)
    datum._cache["skeletons"] = out
    return out


def closed_terms(datum: RootDatum, fracs, g):
    """Factored terms of the closed formula for the given <varpi_a(d)> data."""
    terms = []
    for sk in _skeletons(datum):
        shift = Fraction((g - 1) * sk.dim_u)
        den = Counter()
        for a, r in sk.rho:
            den[r] += 1
            shift += r * fracs[a]
        if shift.denominator != 1:
            raise NonIntegralExponent(
                "non-integer (uv)-exponent %s at I=%s" % (shift, sk.I))
        numf, aden = _a_parts(sk.m, sk.exps, g)
        den.update(aden)
        terms.append(FTerm(sk.coef, int(shift), numf, den))
    return terms


def closed_ratfun(datum: RootDatum, fracs, g) -> RatFun2:
    return assemble_exact(closed_terms(datum, fracs, g))


_closed_series_cache = {}


def closed_series_for(datum: RootDatum, fracs, g, order) -> TruncSeries2:
    key = (datum.key, fracs, g, order)
    hit = _closed_series_cache.get(key)
    if hit is None:
        hit = assemble_series(closed_terms(datum, fracs, g), order)
        _closed_series_cache[key] = hit
    return hit


@lru_cache(maxsize=None)
def _closed_cached(spec, d, g):
    rs = build_root_system(spec)
    fracs = rs.datum.fund_fracs(rs.lift_degree(d))
    return closed_ratfun(rs.datum, fracs, g)


def hp_semistable_closed(spec: GroupSpec, d, g, allow_large_genus=False) -> RatFun2:
    """Closed formula for the series of the semistable stack of degree d."""
    _check_genus(g, allow_large_genus)
    d = validate_degree(d, spec)
    return _closed_cached(spec, d, g)


def hp_semistable_closed_series(spec: GroupSpec, d, g, order,
                                allow_large_genus=False) -> TruncSeries2:
    """Truncated expansion of the closed formula, assembled term by term."""
    _check_genus(g, allow_large_genus)
    d = validate_degree(d, spec)
    rs = build_root_system(spec)
    fracs = rs.datum.fund_fracs(rs.lift_degree(d))
    return closed_series_for(rs.datum, fracs, g, order)


# ---------------------------------------------------------------------------
# classical types as composition sums
# ---------------------------------------------------------------------------


def _compositions(r):
    """All compositions of r, lexicographically."""
    if r == 0:
        return [()]
    out = []
    for first in range(1, r + 1):
        for rest in _compositions(r - first):
            out.append((first,) + rest)
    return sorted(out)


def _e2(comp):
    total, run = 0, 0
    for c in comp:
        total += run * c
        run += c
    return total


def _gl_block_parts(s, g, numf, den):
    """Multiply in the non-abelian part of a GL_s stack series."""
    for k in range(2, s + 1):
        numf += [(k, k - 1, g), (k - 1, k, g)]
        den[k - 1] += 1
        den[k] += 1


def _so_odd_stack_parts(m, g, numf, den):
    """SO_{2m+1} (equally Sp_m) stack series: exponents 2, 4, ..., 2m."""
    for k in range(1, m + 1):
        numf += [(2 * k, 2 * k - 1, g), (2 * k - 1, 2 * k, g)]
    for j in range(1, 2 * m + 1):
        den[j] += 1


def _so_even_stack_parts(m, g, numf, den):
    """SO_{2m} stack series: exponents 2, 4, ..., 2m-2 and m (Euler class)."""
    for k in range(1, m):
        numf += [(2 * k, 2 * k - 1, g), (2 * k - 1, 2 * k, g)]
    for j in range(1, 2 * m - 1):
        den[j] += 1
    numf += [(m, m - 1, g), (m - 1, m, g)]
    den[m - 1] += 1
    den[m] += 1


def _int_shift(x):
    x = Fraction(x)
    if x.denominator != 1:
        raise NonIntegralExponent("non-integer (uv)-exponent %s" % x)
    return int(x)


def _gl_terms(r, d, g, abelian_drop=0):
    """Type A composition sum; abelian_drop=1 gives the SL_r normalization
    (one less abelian factor per term and degree zero)."""
    terms = []
    for comp in _compositions(r):
        l = len(comp)
        apow = l - abelian_drop
        numf = [(1, 0, g * apow), (0, 1, g * apow)] if apow else []
        den = Counter({1: apow}) if apow else Counter()
        for s in comp:
            _gl_block_parts(s, g, numf, den)
        shift = Fraction((g - 1) * _e2(comp))
        p = 0
        for i in range(l - 1):
            p += comp[i]
            rr = comp[i] + comp[i + 1]
            den[rr] += 1
            shift += rr * frac_rep(Fraction(-p * d, r))
        terms.append(FTerm((-1) ** (l - 1), _int_shift(shift), tuple(numf), den))
    return terms


def _so_odd_terms(r, d, g):
    """Type B composition sum for SO_{2r+1}, degree d in Z/2."""
    fr = frac_rep(Fraction(d, 2))
    u_full = r * (r + 1) // 2
    terms = []
    for comp in _compositions(r):
        l = len(comp)
        e2 = _e2(comp)
        # Levi GL_{r_1} x ... x GL_{r_l} (last simple root crossed)
        numf = [(1, 0, g * l), (0, 1, g * l)]
        den = Counter({1: l})
        for s in comp:
            _gl_block_parts(s, g, numf, den)
        shift = Fraction((g - 1) * (e2 + u_full))
        for i in range(l - 1):
            rr = comp[i] + comp[i + 1]
            den[rr] += 1
            shift += rr
        den[2 * comp[-1]] += 1
        shift += 2 * comp[-1] * fr
        terms.append(FTerm((-1) ** l, _int_shift(shift), tuple(numf), den))
        # Levi GL_{r_1} x ... x GL_{r_{l-1}} x SO_{2 r_l + 1}
        m = comp[-1]
        apow = l - 1
        numf = [(1, 0, g * apow), (0, 1, g * apow)] if apow else []
        den = Counter({1: apow}) if apow else Counter()
        for s in comp[:-1]:
            _gl_block_parts(s, g, numf, den)
        _so_odd_stack_parts(m, g, numf, den)
        shift = Fraction((g - 1) * (e2 + u_full - m * (m + 1) // 2))
        for i in range(l - 2):
            rr = comp[i] + comp[i + 1]
            den[rr] += 1
            shift += rr
        if l > 1:
            rr = comp[l - 2] + 2 * m
            den[rr] += 1
            shift += rr
        terms.append(FTerm((-1) ** (l - 1), _int_shift(shift), tuple(numf), den))
    return terms


def _sp_terms(r, g):
    """Type C composition sum for Sp_r (trivial pi_1)."""
    u_full = r * (r + 1) // 2
    terms = []
    for comp in _compositions(r):
        l = len(comp)
        e2 = _e2(comp)
        # Levi GL_{r_1} x ... x GL_{r_l}
        numf = [(1, 0, g * l), (0, 1, g * l)]
        den = Counter({1: l})
        for s in comp:
            _gl_block_parts(s, g, numf, den)
        shift = Fraction((g - 1) * (e2 + u_full))
        for i in range(l - 1):
            rr = comp[i] + comp[i + 1]
            den[rr] += 1
            shift += rr
        den[comp[-1] + 1] += 1
        shift += comp[-1] + 1
        terms.append(FTerm((-1) ** l, _int_shift(shift), tuple(numf), den))
        # Levi GL_{r_1} x ... x GL_{r_{l-1}} x Sp_{r_l}
        m = comp[-1]
        apow = l - 1
        numf = [(1, 0, g * apow), (0, 1, g * apow)] if apow else []
        den = Counter({1: apow}) if apow else Counter()
        for s in comp[:-1]:
            _gl_block_parts(s, g, numf, den)
        _so_odd_stack_parts(m, g, numf, den)
        shift = Fraction((g - 1) * (e2 + u_full - m * (m + 1) // 2))
        for i in range(l - 2):
            rr = comp[i] + comp[i + 1]
            den[rr] += 1
            shift += rr
        if l > 1:
            rr = comp[l - 2] + 2 * m + 1
            den[rr] += 1
            shift += rr
        terms.append(FTerm((-1) ** (l - 1), _int_shift(shift), tuple(numf), den))
    return terms


def _so_even_terms(r, d, g):
    """Type D composition sum for SO_{2r} (r >= 2), degree d in Z/2.

    Compositions with last part 1 index Levis GL_{r_1} x ... x GL_{r_{l-1}}
    x GL_1 (both fork roots crossed); compositions with last part >= 2 index
    both the two twisted all-GL Levis (hence the factor 2) and the Levis with
    an SO_{2 r_l} tail.
    """
    fr = frac_rep(Fraction(d, 2))
    u_full = r * (r - 1) // 2
    terms = []
    for comp in _compositions(r):
        l = len(comp)
        e2 = _e2(comp)
        if comp[-1] == 1 and l >= 2:
            numf = [(1, 0, g * l), (0, 1, g * l)]
            den = Counter({1: l})
            for s in comp:
                _gl_block_parts(s, g, numf, den)
            shift = Fraction((g - 1) * (e2 + u_full))
            for i in range(l - 2):
                rr = comp[i] + comp[i + 1]
                den[rr] += 1
                shift += rr
            rr = comp[l - 2] + 1
            den[rr] += 2
            shift += 2 * rr * fr
            terms.append(FTerm((-1) ** l, _int_shift(shift), tuple(numf), den))
        if comp[-1] >= 2:
            # two conjugate all-GL Levis contribute identically
            numf = [(1, 0, g * l), (0, 1, g * l)]
            den = Counter({1: l})
            for s in comp:
                _gl_block_parts(s, g, numf, den)
            shift = Fraction((g - 1) * (e2 + u_full))
            for i in range(l - 1):
                rr = comp[i] + comp[i + 1]
                den[rr] += 1
                shift += rr
            rr = 2 * (comp[-1] - 1)
            den[rr] += 1
            shift += rr * fr
            terms.append(FTerm(2 * (-1) ** l, _int_shift(shift), tuple(numf), den))
            # Levi GL_{r_1} x ... x GL_{r_{l-1}} x SO_{2 r_l}
            m = comp[-1]
            apow = l - 1
            numf = [(1, 0, g * apow), (0, 1, g * apow)] if apow else []
            den = Counter({1: apow}) if apow else Counter()
            for s in comp[:-1]:
                _gl_block_parts(s, g, numf, den)
            _so_even_stack_parts(m, g, numf, den)
            shift = Fraction((g - 1) * (e2 + u_full - m * (m - 1) // 2))
            for i in range(l - 2):
                rr = comp[i] + comp[i + 1]
                den[rr] += 1
                shift += rr
            if l > 1:
                rr = comp[l - 2] + 2 * m - 1
                den[rr] += 1
                shift += rr
            terms.append(FTerm((-1) ** (l - 1), _int_shift(shift), tuple(numf), den))
    return terms


def _classical_terms(family, rank, d, g):
    if family == "GL":
        return _gl_terms(rank, d, g)
    if family == "SL":
        return _gl_terms(rank, 0, g, abelian_drop=1)
    if family == "SOodd":
        return _so_odd_terms(rank, d, g)
    if family == "Sp":
        return _sp_terms(rank, g)
    if family == "SOeven":
        return _so_even_terms(rank, d, g)
    raise ValueError("unknown family %r" % (family,))


def hp_semistable_classical(family, rank, d, g, allow_large_genus=False) -> RatFun2:
    """The type-specific composition sum for a single classical factor."""
    _check_genus(g, allow_large_genus)
    spec = GroupSpec(((family, rank),))
    (d,) = validate_degree(d if isinstance(d, tuple) else (d,), spec)
    return assemble_exact(_classical_terms(family, rank, d, g))


def hp_semistable_classical_series(family, rank, d, g, order,
                                   allow_large_genus=False) -> TruncSeries2:
    _check_genus(g, allow_large_genus)
    spec = GroupSpec(((family, rank),))
    (d,) = validate_degree(d if isinstance(d, tuple) else (d,), spec)
    return assemble_series(_classical_terms(family, rank, d, g), order)


# ---------------------------------------------------------------------------
# moduli spaces (good case) and specializations
# ---------------------------------------------------------------------------


def hp_moduli_space(spec: GroupSpec, d, g, allow_large_genus=False) -> RatFun2:
    """(1-uv)^m times the semistable-stack series; requires the good case."""
    from .rootdata import good_case

    _check_genus(g, allow_large_genus)
    d = validate_degree(d, spec)
    if not good_case(spec, d):
        raise NotGoodCase("degree %s admits strictly semistable bundles" % (d,))
    m = build_root_system(spec).center_dim
    stack = hp_semistable_closed(spec, d, g, allow_large_genus)
    return RatFun2(stack.num * one_minus_w(1) ** m, stack.den)


@lru_cache(maxsize=None)
def _fixed_det_cached(r, d, g):
    terms = []
    for comp in _compositions(r):
        l = len(comp)
        apow = l - 1
        numf = [(1, 0, g * apow), (0, 1, g * apow)] if apow else []
        den = Counter({1: apow}) if apow else Counter()
        for s in comp:
            _gl_block_parts(s, g, numf, den)
        shift = Fraction((g - 1) * _e2(comp))
        p = 0
        for i in range(l - 1):
            p += comp[i]
            rr = comp[i] + comp[i + 1]
            den[rr] += 1
            shift += rr * frac_rep(Fraction(-p * d, r))
        terms.append(FTerm((-1) ** (l - 1), _int_shift(shift), tuple(numf), den))
    result = assemble_exact(terms)
    # consistency with the unfixed-determinant moduli space: multiplying by
    # the Jacobian series (1+u)^g (1+v)^g must recover it exactly
    jac = _binom_power(1, 0, g) * _binom_power(0, 1, g)
    full = hp_moduli_space(GroupSpec((("GL", r),)), (d,), g)
    if not RatFun2(result.num * jac, result.den).rat_eq(full):
        raise AssertionError("fixed-determinant factorization failed")
    return result


def hp_moduli_fixed_det(r, d, g, allow_large_genus=False) -> RatFun2:
    """Series of the moduli space of semistable bundles with fixed
    determinant, rank r, degree d, gcd(r, d) = 1."""
    _check_genus(g, allow_large_genus)
    if gcd(r, d) != 1:
        raise NotCoprime("need gcd(r, d) = 1, got (%d, %d)" % (r, d))
    return _fixed_det_cached(r, d, g)


def _strip_factor(r: RatFun2, poly) -> RatFun2:
    reduced, _ = r.cancel_factor(poly)
    return reduced


def specialize(x, kind):
    """Specializations: poincare (u=v=t), chi_t (u=-1), euler (u=v=-1),
    signature (u=-1, v=1).

    Polynomials are substituted directly.  Rational functions first drop all
    common (1+u) / (1+v) powers; a genuinely surviving pole still raises.
    """
    from .ratfun import U, V

    if kind == "poincare":
        return x.diagonal()
    if isinstance(x, BivarPoly):
        if kind == "chi_t":
            return x.subs_u(-1)
        if kind == "euler":
            return x.subs_uv(-1, -1)
        if kind == "signature":
            return x.subs_uv(-1, 1)
        raise ValueError("unknown specialization %r" % (kind,))
    r = _strip_factor(x, 1 + U)
    if kind == "chi_t":
        return r.subs_u(-1)
    r = _strip_factor(r, 1 + V)
    if kind == "euler":
        return r.subs_uv(-1, -1)
    if kind == "signature":
        return r.subs_uv(-1, 1)
    raise ValueError("unknown specialization %r" % (kind,))


def stack_poincare_series(spec: GroupSpec, g) -> RatFun1:
    """One-variable Poincare series of the full stack, as a product over the
    exponents: ((1+t)^{2g}/(1-t^2))^m prod (1+t^{2d-1})^{2g} /
    ((1-t^{2d-2})(1-t^{2d}))."""
    rs = build_root_system(spec)
    exps = rs.datum.exponent_list()
    m = rs.center_dim
    num = UniPoly({0: 1, 1: 1}) ** (2 * g * m)
    den = UniPoly({0: 1, 2: -1}) ** m
    for d in exps[m:]:
        num = num * UniPoly({0: 1, 2 * d - 1: 1}) ** (2 * g)
        den = den * UniPoly({0: 1, 2 * d - 2: -1}) * UniPoly({0: 1, 2 * d: -1})
    return RatFun1(num, den)


def chi_t_fixed_det_formula(r, g) -> UniPoly:
    """prod_{k=2}^r (1 - (-t)^{k-1})^{g-1} (1 - (-t)^k)^{g-1}."""
    out = UniPoly.constant(1)
    for k in range(2, r + 1):
        for e in (k - 1, k):
            out = out * UniPoly({0: 1, e: -((-1) ** e)}) ** (g - 1)
    return out


__all__ = [
    "FTerm", "GENUS_CAP", "NotCoprime", "NotGoodCase",
    "a_series", "assemble_exact", "assemble_series",
    "chi_t_fixed_det_formula", "closed_ratfun", "closed_series_for",
    "closed_terms", "hp_classifying", "hp_moduli_fixed_det",
    "hp_moduli_space", "hp_semistable_classical",
    "hp_semistable_classical_series", "hp_semistable_closed",
    "hp_semistable_closed_series", "specialize", "stack_poincare_series",
    "to_polynomial",
]
