"""Skew polynomials in one variable x that shifts parameters, and the
operators built on them.

Elements are finite sums  sum_k c_k(a, b) x^k  where the coefficients
are functions of the parameters and the variable obeys the skew rule

    x f(a, b) = f(a q^da, b q^db) x,

with (da, db) = (1, 2) for the four-parameter theta setting and
(1, 0) for its one-parameter a-degeneration.  Coefficients are kept as
evaluation trees (plain callables (a, b) -> complex); equality of
coefficients is always decided numerically at sampled parameters.

On top of the arithmetic sit the lowering operator D and the diagonal
operator eta, their Pincherle-type commutation identity, the theta
Fibonacci recursion with its generating-function expansion, and the
finite skew products used by the product-expansion identities.
"""

from __future__ import annotations

from dataclasses import dataclass

from .special_fn import (
    DomainError,
    ParameterSet,
    bracket_z,
    exp_coeff_bq,
    guarded,
    q_binomial,
    q_factorial,
    qpow,
    theta_product,
    theta_product_guarded,
)

__all__ = [
    "ShiftRule", "ELLIPTIC_RULE", "AQ_RULE", "SkewPoly",
    "x_mul", "skew_mul", "apply_D", "apply_eta", "apply_eta_aq",
    "pincherle_coeff", "pincherle_coeff_bracket", "pincherle_check",
    "fib_elliptic", "fib_aq", "fib_aq_closed", "genfun_expand",
    "product_expand", "f_relation_sides",
]


@dataclass(frozen=True)
class ShiftRule:
    """Exponents in the skew rule x f(a, b) = f(a q^da, b q^db) x."""

    da: int
    db: int


ELLIPTIC_RULE = ShiftRule(1, 2)
AQ_RULE = ShiftRule(1, 0)


def _const(z) -> "callable":
    z = complex(z)
    return lambda a, b: z


def _shifted(fn, q, u: int, v: int):
    """Wrap a coefficient so its parameters arrive pre-shifted by
    (a, b) -> (a q^u, b q^v).  Wrappers compose additively."""
    if u == 0 and v == 0:
        return fn
    qu = qpow(q, u)
    qv = qpow(q, v)
    return lambda a, b: fn(a * qu, b * qv)


def _product(f, g):
    return lambda a, b: f(a, b) * g(a, b)


class SkewPoly:
    """Finite sum of c_k(a, b) x^k under a fixed shift rule.

    Coefficients may be passed as complex constants or as callables
    (a, b) -> complex; exact numeric zeros are dropped.  Instances are
    immutable by convention.
    """

    __slots__ = ("coeffs", "rule", "q")

    def __init__(self, coeffs: dict, q, rule: ShiftRule = ELLIPTIC_RULE):
        cleaned = {}
        for k, c in coeffs.items():
            k = int(k)
            if k < 0:
                raise DomainError("skew polynomial degrees must be nonnegative")
            if not callable(c):
                if complex(c) == 0:
                    continue
                c = _const(c)
            cleaned[k] = c
        self.coeffs = cleaned
        self.q = complex(q)
        self.rule = rule

    @classmethod
    def unit(cls, q, rule: ShiftRule = ELLIPTIC_RULE) -> "SkewPoly":
        return cls({0: 1.0}, q, rule)

    @classmethod
    def x_power(cls, n: int, q, rule: ShiftRule = ELLIPTIC_RULE) -> "SkewPoly":
        return cls({n: 1.0}, q, rule)

    def degree(self) -> int:
        return max(self.coeffs, default=-1)

    def _compatible(self, other: "SkewPoly"):
        if self.rule != other.rule or self.q != other.q:
            raise DomainError("skew polynomials have mismatched rules")

    def __add__(self, other: "SkewPoly") -> "SkewPoly":
        self._compatible(other)
        merged = dict(self.coeffs)
        for k, c in other.coeffs.items():
            prior = merged.get(k)
            if prior is None:
                merged[k] = c
            else:
                merged[k] = (lambda f, g: lambda a, b: f(a, b) + g(a, b))(prior, c)
        return SkewPoly(merged, self.q, self.rule)

    def scale(self, factor) -> "SkewPoly":
        """Left multiplication by a scalar function of (a, b); being on
        the left, it picks up no shifts."""
        if not callable(factor):
            factor = _const(factor)
        return SkewPoly({k: _product(factor, c) for k, c in self.coeffs.items()},
                        self.q, self.rule)

    def truncated(self, max_degree: int) -> "SkewPoly":
        return SkewPoly({k: c for k, c in self.coeffs.items() if k <= max_degree},
                        self.q, self.rule)

    def evaluate(self, ps: ParameterSet) -> dict:
        """Coefficient values at the parameter point: map degree -> complex."""
        return {k: complex(c(ps.a, ps.b)) for k, c in sorted(self.coeffs.items())}

    def to_json(self, ps: ParameterSet) -> dict:
        values = self.evaluate(ps)
        return {"coeffs": [[k, [v.real, v.imag]] for k, v in sorted(values.items())]}


def x_mul(p: SkewPoly, power: int = 1) -> SkewPoly:
    """Left multiplication by x^power: coefficients shift, degrees rise."""
    if power < 0:
        raise DomainError("x_mul power must be nonnegative")
    if power == 0:
        return p
    rule = p.rule
    return SkewPoly(
        {k + power: _shifted(c, p.q, rule.da * power, rule.db * power)
         for k, c in p.coeffs.items()},
        p.q, rule)


def skew_mul(p: SkewPoly, other: SkewPoly) -> SkewPoly:
    """Product p * other under the shift rule: the right factor's
    coefficients travel past the left factor's powers of x."""
    p._compatible(other)
    rule = p.rule
    total: dict = {}
    for i, c in p.coeffs.items():
        for j, d in other.coeffs.items():
            term = _product(c, _shifted(d, p.q, rule.da * i, rule.db * i))
            k = i + j
            prior = total.get(k)
            if prior is None:
                total[k] = term
            else:
                total[k] = (lambda f, g: lambda a, b: f(a, b) + g(a, b))(prior, term)
    return SkewPoly(total, p.q, rule)


def apply_D(p: SkewPoly, ps: ParameterSet) -> SkewPoly:
    """The lowering operator: termwise

        D(c(a,b) x^n) = c(a q^-1, b q^-2)
            * theta(q^n, a q^n, b q^n, a q^(2-n)/b; p)
            / theta(q, a q, b q^(2n-1), a q/b; p) * x^(n-1),

    with the n = 0 term annihilated."""
    q, pp = ps.q, ps.p

    def factor(n: int):
        def fn(a, b):
            num = theta_product(
                [qpow(q, n), a * qpow(q, n), b * qpow(q, n),
                 a * qpow(q, 2 - n) / b], pp)
            den = theta_product_guarded(
                [q, a * q, b * qpow(q, 2 * n - 1), a * q / b], pp)
            return num / den
        return fn

    out: dict = {}
    for n, c in p.coeffs.items():
        if n == 0:
            continue
        out[n - 1] = _product(_shifted(c, q, -1, -2), factor(n))
    return SkewPoly(out, p.q, p.rule)


def apply_eta(p: SkewPoly, ps: ParameterSet) -> SkewPoly:
    """The diagonal operator: termwise multiplication by

        theta(a q^(1+n), a q^(2+n), b q, a q^(1-n)/b, a q^(-n)/b; p)
      / theta(a q, a q^2, b q^(1+2n), a q/b, a/b; p) * q^n,

    leaving the coefficient's arguments untouched."""
    q, pp = ps.q, ps.p

    def factor(n: int):
        def fn(a, b):
            num = theta_product(
                [a * qpow(q, 1 + n), a * qpow(q, 2 + n), b * q,
                 a * qpow(q, 1 - n) / b, a * qpow(q, -n) / b], pp)
            den = theta_product_guarded(
                [a * q, a * q * q, b * qpow(q, 1 + 2 * n),
                 a * q / b, a / b], pp)
            return num / den * qpow(q, n)
        return fn

    return SkewPoly({n: _product(c, factor(n)) for n, c in p.coeffs.items()},
                    p.q, p.rule)


def apply_eta_aq(p: SkewPoly, q) -> SkewPoly:
    """One-parameter diagonal operator: termwise multiplication by

        (1 - a q^(1+n)) (1 - a q^(2+n)) / ((1 - a q)(1 - a q^2)) * q^(-n),

    for use with the (da, db) = (1, 0) shift rule."""
    q = complex(q)

    def factor(n: int):
        def fn(a, b):
            num = (1.0 - a * qpow(q, 1 + n)) * (1.0 - a * qpow(q, 2 + n))
            den = guarded(1.0 - a * q, 0, "eta factor")
            den *= guarded(1.0 - a * q * q, 1, "eta factor")
            return num / den * qpow(q, -n)
        return fn

    return SkewPoly({n: _product(c, factor(n)) for n, c in p.coeffs.items()},
                    p.q, p.rule)


def pincherle_coeff(k: int, ps: ParameterSet) -> complex:
    """Scalar in the commutation identity D^k x - x D^k = C_k D^(k-1) eta,
    from its explicit theta form

        C_k = theta(q^k, a q^(3-k), b q^(2-k), a q^(k-1)/b; p)
            / theta(q, a q^2, b q^(3-2k), a/b; p) * q^(1-k).
    """
    if k < 1:
        raise DomainError("pincherle coefficient needs k >= 1")
    a, b, q, p = ps.a, ps.b, ps.q, ps.p
    num = theta_product(
        [qpow(q, k), a * qpow(q, 3 - k), b * qpow(q, 2 - k),
         a * qpow(q, k - 1) / b], p)
    den = theta_product_guarded(
        [q, a * q * q, b * qpow(q, 3 - 2 * k), a / b], p)
    return num / den * qpow(q, 1 - k)


def pincherle_coeff_bracket(k: int, ps: ParameterSet) -> complex:
    """The same scalar written as the z-bracket [k] taken at the swapped
    and shifted parameters (b q^(2-2k), a q^(1-k))."""
    if k < 1:
        raise DomainError("pincherle coefficient needs k >= 1")
    swapped = ParameterSet(ps.b * qpow(ps.q, 2 - 2 * k),
                           ps.a * qpow(ps.q, 1 - k), ps.q, ps.p)
    return bracket_z(swapped, k)


def pincherle_check(k: int, n: int, ps: ParameterSet) -> float:
    """Relative residual of (D^k x - x D^k)(x^n) = C_k D^(k-1)(eta(x^n))
    evaluated at ps, both sides through independent operator chains."""
    if k < 1 or n < 0:
        raise DomainError("pincherle check needs k >= 1 and n >= 0")
    xn = SkewPoly.x_power(n, ps.q)
    lhs_poly = x_mul(xn)
    for _ in range(k):
        lhs_poly = apply_D(lhs_poly, ps)
    right_of_x = xn
    for _ in range(k):
        right_of_x = apply_D(right_of_x, ps)
    lhs = lhs_poly.evaluate(ps)
    for deg, value in x_mul(right_of_x).evaluate(ps).items():
        lhs[deg] = lhs.get(deg, 0.0 + 0.0j) - value

    rhs_poly = apply_eta(xn, ps)
    for _ in range(k - 1):
        rhs_poly = apply_D(rhs_poly, ps)
    coeff = pincherle_coeff(k, ps)
    rhs = {deg: coeff * value for deg, value in rhs_poly.evaluate(ps).items()}

    residual = 0.0
    for deg in set(lhs) | set(rhs):
        l = lhs.get(deg, 0.0 + 0.0j)
        r = rhs.get(deg, 0.0 + 0.0j)
        residual = max(residual, abs(l - r) / max(abs(l), abs(r), 1e-30))
    return residual


def fib_elliptic(n: int, ps: ParameterSet) -> complex:
    """Theta Fibonacci numbers: S_0 = 0, S_1 = 1 and

        S_n(a, b) = S_(n-1)(a q, b q^2)
          + theta(a q^(1+n), a q^(2+n), b q^5, a q^(1-n)/b, a q^(-n)/b; p)
          / theta(a q^3, a q^4, b q^(1+2n), a/(b q), a/(b q^2)); p)
          * q^(n-2) * S_(n-2)(a q^2, b q^4).
    """
    if n < 0:
        raise DomainError("fib_elliptic needs n >= 0")
    q, p = ps.q, ps.p
    memo: dict = {}

    def factor(m: int, a, b) -> complex:
        if b == 0:
            raise DomainError(
                "fib_elliptic needs b != 0; the b -> 0 branch is fib_aq")
        num = theta_product(
            [a * qpow(q, 1 + m), a * qpow(q, 2 + m), b * qpow(q, 5),
             a * qpow(q, 1 - m) / b, a * qpow(q, -m) / b], p)
        den = theta_product_guarded(
            [a * qpow(q, 3), a * qpow(q, 4), b * qpow(q, 1 + 2 * m),
             a / (b * q), a / (b * q * q)], p)
        return num / den * qpow(q, m - 2)

    def rec(m: int, i: int, j: int) -> complex:
        if m == 0:
            return 0.0 + 0.0j
        if m == 1:
            return 1.0 + 0.0j
        key = (m, i, j)
        hit = memo.get(key)
        if hit is None:
            a = ps.a * qpow(q, i)
            b = ps.b * qpow(q, j)
            hit = rec(m - 1, i + 1, j + 2) + factor(m, a, b) * rec(m - 2, i + 2, j + 4)
            memo[key] = hit
        return hit

    return rec(n, 0, 0)


def fib_aq(n: int, a, q) -> complex:
    """One-parameter Fibonacci recursion: S_0 = 0, S_1 = 1 and

        S_n(a) = S_(n-1)(a q)
          + (1 - a q^(1+n))(1 - a q^(2+n)) / ((1 - a q^3)(1 - a q^4))
          * q^(2-n) * S_(n-2)(a q^2).
    """
    if n < 0:
        raise DomainError("fib_aq needs n >= 0")
    a = complex(a)
    q = complex(q)
    memo: dict = {}

    def rec(m: int, i: int) -> complex:
        if m == 0:
            return 0.0 + 0.0j
        if m == 1:
            return 1.0 + 0.0j
        key = (m, i)
        hit = memo.get(key)
        if hit is None:
            ai = a * qpow(q, i)
            num = (1.0 - ai * qpow(q, 1 + m)) * (1.0 - ai * qpow(q, 2 + m))
            den = guarded(1.0 - ai * qpow(q, 3), 0, "fib factor")
            den *= guarded(1.0 - ai * qpow(q, 4), 1, "fib factor")
            hit = rec(m - 1, i + 1) + num / den * qpow(q, 2 - m) * rec(m - 2, i + 2)
            memo[key] = hit
        return hit

    return rec(n, 0)


def fib_aq_closed(n: int, a, q) -> complex:
    """Closed form of the one-parameter Fibonacci numbers:

        S_n(a) = sum_j q^(-(n-j-1) j) [n-j-1, j]_q
                 (1 - a q^(n+1))^j (1 - a q^(n+2))^j
                 / ((a q^3; q)_j (a q^(n-j+2); q)_j).

    The final factorial's exponent is n-j+2; the n-j-2 variant fails
    against the recursion while this one matches it to round-off.
    """
    if n < 0:
        raise DomainError("fib_aq_closed needs n >= 0")
    if n == 0:
        return 0.0 + 0.0j
    a = complex(a)
    q = complex(q)
    total = 0.0 + 0.0j
    for j in range(0, (n - 1) // 2 + 1):
        binomial = q_binomial(n - j - 1, j, q)
        num = ((1.0 - a * qpow(q, n + 1)) * (1.0 - a * qpow(q, n + 2))) ** j
        den = 1.0 + 0.0j
        for i in range(j):
            den *= guarded(1.0 - a * qpow(q, 3 + i), i, "closed-form factor")
            den *= guarded(1.0 - a * qpow(q, n - j + 2 + i), i, "closed-form factor")
        total += qpow(q, -(n - j - 1) * j) * binomial * num / den
    return total


def genfun_expand(N: int, ps: ParameterSet) -> list:
    """Coefficients of x^1 .. x^N in sum_m (x + x^2 eta)^m x, the
    expansion of the Fibonacci generating function (1 - x - x^2 eta)^-1 x.
    Coefficient n must equal fib_elliptic(n, ps)."""
    if N < 1:
        raise DomainError("genfun_expand needs N >= 1")
    totals = {k: 0.0 + 0.0j for k in range(1, N + 1)}
    term = SkewPoly.x_power(1, ps.q)
    for _ in range(N):
        for k, v in term.evaluate(ps).items():
            if 1 <= k <= N:
                totals[k] += v
        term = (x_mul(term) + x_mul(apply_eta(term, ps), 2)).truncated(N)
        if not term.coeffs:
            break
    return [totals[k] for k in range(1, N + 1)]


def product_expand(factors, direction: str, q,
                   rule: ShiftRule = ELLIPTIC_RULE) -> SkewPoly:
    """Ordered product of skew-polynomial factors.

    "left-to-right" forms F_0 F_1 ... F_(n-1); "right-to-left" forms
    F_(n-1) ... F_1 F_0.  The empty product is 1.
    """
    acc = SkewPoly.unit(q, rule)
    if direction == "left-to-right":
        for f in factors:
            acc = skew_mul(acc, f)
    elif direction == "right-to-left":
        for f in factors:
            acc = skew_mul(f, acc)
    else:
        raise DomainError(
            f"direction must be left-to-right or right-to-left: {direction!r}")
    return acc


def f_relation_sides(b, q, n: int) -> dict:
    """Both sides of the three coefficientwise recurrences of the series
    F(x) = sum_n x^n / ((q; q)_n (b q; q)_n), for the x^n coefficient.

    The series' x crosses parameters as x f(b) = f(b q^2) x, so the
    first relation compares against F_(n-1) at b q, not at b/q:

        shift:    F_n(b) (1 - q^n)   = F_(n-1)(b q) / (1 - b q)
        scale:    F_n(b) (1 - b q^n) = (1 - b) F_n(b/q)
        combined: F_n(b) (1 - q^n)   = (1 - b q^(n+1)) F_(n-1)(b q^2)
                                        / ((1 - b q)(1 - b q^2))

    Left sides go through the exponential-coefficient helper; right
    sides rebuild their factorials directly.
    """
    if n < 1:
        raise DomainError("f_relation_sides needs n >= 1")
    b = complex(b)
    q = complex(q)

    def series_coeff(bb, m):
        den = q_factorial(q, q, m) * q_factorial(bb * q, q, m)
        return 1.0 / guarded(den, 0, "series denominator")

    lhs_base = exp_coeff_bq(b, q, n)
    sides = {}
    sides["shift"] = (
        lhs_base * (1.0 - qpow(q, n)),
        series_coeff(b * q, n - 1) / guarded(1.0 - b * q, 0, "relation denominator"),
    )
    sides["scale"] = (
        lhs_base * (1.0 - b * qpow(q, n)),
        (1.0 - b) * series_coeff(b / q, n),
    )
    den = guarded(1.0 - b * q, 0, "relation denominator")
    den *= guarded(1.0 - b * q * q, 1, "relation denominator")
    sides["combined"] = (
        lhs_base * (1.0 - qpow(q, n)),
        (1.0 - b * qpow(q, n + 1)) * series_coeff(b * q * q, n - 1) / den,
    )
    return sides
