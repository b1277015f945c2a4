"""Exact power-series coefficients A_n(t) of the Kapteyn series.

F(z,t) = sum_{n>=1} t^n J_n(nz) admits a power series sum A_n(t) z^n whose
coefficients are degree-n polynomials in t with rational coefficients:

    A_n(t) = sum_{k=0}^{n} C_k^n t^k,
    C_k^n  = cos((n-k) pi/2) k^n / ((n-k)!! (n+k)!!)

with the double-factorial convention 0!! = 1.  The same polynomial can be
built from the triangular recurrence (n^2-k^2) C_k^n = -k^2 C_k^{n-2}
seeded with C_n^n = n^n/(2n)!!, or from the rearranged alternating form

    A_n(t) = (-1)^n/n! sum_{k<=n/2} (-1)^k binom(n,k) (k-n/2)^n t^{n-2k}.

Everything in this module is exact rational arithmetic; floats appear only
at the log-magnitude boundary (a_eval_logabs), which exists because values
like A_500(t) span thousands of orders of magnitude.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import DomainError

_DYADIC_BITS = 64


def _dfact(m: int) -> int:
    # double factorial m!! with 0!! = (-1)!! = 1
    out = 1
    while m > 1:
        out *= m
        m -= 2
    return out


def _cos_half_pi(m: int) -> int:
    # cos(m*pi/2) for integer m, evaluated combinatorially
    if m % 2:
        return 0
    return -1 if (m // 2) % 2 else 1


def coeff_closed_form(n: int, k: int) -> Fraction:
    """Exact C_k^n = cos((n-k) pi/2) k^n / ((n-k)!! (n+k)!!)."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    if not 0 <= k <= n:
        raise DomainError(f"k must satisfy 0 <= k <= {n}, got {k}")
    sign = _cos_half_pi(n - k)
    if sign == 0 or k == 0:
        return Fraction(0)
    return Fraction(sign * k**n, _dfact(n - k) * _dfact(n + k))


@dataclass(frozen=True)
class CoefficientTable:
    """Triangular table of C_k^n for 1 <= n <= max_n, 0 <= k <= n."""

    max_n: int
    rows: tuple[tuple[Fraction, ...], ...]  # rows[n-1] has length n+1

    def value(self, n: int, k: int) -> Fraction:
        if not 1 <= n <= self.max_n:
            raise DomainError(f"n must be in 1..{self.max_n}, got {n}")
        if not 0 <= k <= n:
            raise DomainError(f"k must satisfy 0 <= k <= {n}, got {k}")
        return self.rows[n - 1][k]


def coeff_table_recurrence(max_n: int) -> CoefficientTable:
    """Build the C_k^n table from the triangular recurrence.

    Each diagonal is seeded with C_n^n = n^n/(2n)!!, C_{n-1}^n = 0, and
    (n^2-k^2) C_k^n = -k^2 C_k^{n-2} fills the rest of the row from the
    row two above (rows for n <= 0 are identically zero).  Must agree with
    coeff_closed_form entrywise; the pair of routes cross-validates both.
    """
    if max_n < 1:
        raise DomainError(f"max_n must be >= 1, got {max_n}")
    rows: list[tuple[Fraction, ...]] = []
    zero = Fraction(0)
    for n in range(1, max_n + 1):
        prev = rows[n - 3] if n >= 3 else ()
        row = []
        for k in range(n - 1):
            prev_val = prev[k] if k < len(prev) else zero
            row.append(Fraction(-k * k, n * n - k * k) * prev_val)
        row.append(zero)  # k = n-1 is forced to zero
        row.append(Fraction(n**n, _dfact(2 * n)))  # diagonal seed
        rows.append(tuple(row))
    return CoefficientTable(max_n=max_n, rows=tuple(rows))


@dataclass(frozen=True)
class APoly:
    """A_n(t) as an exact coefficient vector; coeffs[k] multiplies t^k."""

    n: int
    coeffs: tuple[Fraction, ...]  # length n+1; only k == n (mod 2) entries nonzero


@lru_cache(maxsize=None)
def _a_coeffs(n: int) -> tuple[Fraction, ...]:
    # alternating-binomial form: coefficient of t^{n-2k} is
    # (-1)^{n+k} binom(n,k) (2k-n)^n / (n! 2^n)
    denom = math.factorial(n) * 2**n
    sign_n = -1 if n % 2 else 1
    out = [Fraction(0)] * (n + 1)
    for k in range(n // 2 + 1):
        base = 2 * k - n
        if base == 0:
            continue
        num = sign_n * (-1 if k % 2 else 1) * math.comb(n, k) * base**n
        out[n - 2 * k] = Fraction(num, denom)
    return tuple(out)


def a_poly(n: int) -> APoly:
    """Exact polynomial A_n(t); agrees with coeff_closed_form coefficientwise."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    return APoly(n=n, coeffs=_a_coeffs(n))


def a_eval_exact(n: int, t) -> Fraction:
    """Exact A_n(t) at rational t, by Horner evaluation of the cached polynomial.

    t may be a Fraction, an int, or a float (floats convert exactly to the
    dyadic rational they represent).
    """
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    return _a_eval_cached(n, Fraction(t))


@lru_cache(maxsize=4096)
def _a_eval_cached(n: int, t: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(_a_coeffs(n)):
        acc = acc * t + c
    return acc


def _round_dyadic(t: float) -> Fraction:
    # round to 64 fractional bits; floats >= 2^53 are integers already
    if abs(t) >= 2.0**53:
        return Fraction(t)
    return Fraction(round(math.ldexp(t, _DYADIC_BITS)), 1 << _DYADIC_BITS)


def a_eval_logabs(n: int, t) -> tuple[float, int]:
    """(ln|A_n(t)|, sign) computed through the exact rational path.

    A float t is first rounded to a dyadic rational with 64 fractional
    bits (documented, deterministic); exact inputs (int, Fraction) are
    used as-is.  Returns sign 0 (with log -inf) iff the exact value is 0.
    """
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    if isinstance(t, float):
        if not math.isfinite(t):
            raise DomainError(f"t must be finite, got {t}")
        tr = _round_dyadic(t)
    else:
        tr = Fraction(t)
    v = _a_eval_cached(n, tr)
    if v == 0:
        return -math.inf, 0
    log_abs = math.log(abs(v.numerator)) - math.log(v.denominator)
    return log_abs, (1 if v > 0 else -1)
