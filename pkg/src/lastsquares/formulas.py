"""Exact evaluation of the five structured binomial sums and related identities.

The five sums share one value chain: for 0 <= r <= m/2 - 1 and
n = m - 1 - r,

    S(m, r) = T(n, r) = U(n, r) = V(n, r) = W(n, r).

S counts the plus-class family-D arrangements on m cells, the other four
count the plus-class family-B arrangements on n cells in four different
ways. W stands apart: its number of summands depends only on r, so it
acts as a closed form in m alone.

Everything here is exact. Counts are Python integers (arbitrary
precision), the one quotient that appears is handled with Fraction, and
no floating point is used anywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import NonIntegralResult, RangeError


@lru_cache(maxsize=None)
def binom(a: int, b: int) -> int:
    """Binomial coefficient under the convention used package-wide.

    C(a, 0) = 1 for every integer a, negatives included; C(a, b) = 0
    when b < 0, and also when b > 0 with a < 0 or a < b. For
    0 <= b <= a this is the ordinary binomial coefficient.

    The degenerate cases are forced by the sums below: W at n = 1 needs
    C(-1, 0) = 1, and W at n = r + 1 with r even needs C(0, 1) = 0.
    """
    if b == 0:
        return 1
    if b < 0 or a < 0 or a < b:
        return 0
    return math.comb(a, b)


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise RangeError(message)


def eval_S(m: int, r: int) -> int:
    """Sum of C(m, 2i) * C(i-1, r) over i = r+1 .. floor(m/2).

    Counts the plus-class family-D arrangements on m cells with r
    dominoes. The sum is empty (value 0) when r + 1 > floor(m/2).
    """
    _require(m >= 1 and r >= 0, f"need m >= 1 and r >= 0, got m={m} r={r}")
    return sum(binom(m, 2 * i) * binom(i - 1, r) for i in range(r + 1, m // 2 + 1))


def eval_T(n: int, r: int) -> int:
    """Sum of C(n, j) * C(j-1, r) over j = r+1 .. n.

    Counts the plus-class family-B arrangements on n cells with r black
    cells, stratified by the number of non-white cells.
    """
    _require(n >= 1 and 0 <= r <= n - 1, f"need n >= 1 and 0 <= r < n, got n={n} r={r}")
    return sum(binom(n, j) * binom(j - 1, r) for j in range(r + 1, n + 1))


def eval_U(n: int, r: int) -> int:
    """Sum of C(j-1, r) * 2**(j-1-r) over j = r+1 .. n.

    Same count as eval_T, stratified by the cell carrying the last
    decorated square.
    """
    _require(n >= 1 and 0 <= r <= n - 1, f"need n >= 1 and 0 <= r < n, got n={n} r={r}")
    return sum(binom(j - 1, r) << (j - 1 - r) for j in range(r + 1, n + 1))


def eval_V(n: int, r: int) -> int:
    """Sum of C(n-1-j, r-1) * 2**(n-r-j) * (2**j - 1) over j = 1 .. n-r.

    Same count as eval_T, stratified by the cell carrying the last black
    square. At r = 0 that stratification degenerates (there is no last
    black square) and the summand vanishes identically under the binom
    convention, so the value is pinned to 2**n - 1, the count it must
    represent: boards with no black cell and at least one decorated cell.
    """
    _require(n >= 1 and 0 <= r <= n - 1, f"need n >= 1 and 0 <= r < n, got n={n} r={r}")
    if r == 0:
        return (1 << n) - 1
    return sum(
        binom(n - 1 - j, r - 1) * ((1 << (n - r - j)) * ((1 << j) - 1))
        for j in range(1, n - r + 1)
    )


def eval_W(n: int, r: int) -> int:
    """2**(n-r) * sum of C(n-2-2k, r-2k) over k = 0 .. floor(r/2), minus (-1)**r.

    Same count as eval_T, derived from the even-weight census. The number
    of summands depends only on r.
    """
    _require(n >= 1 and 0 <= r <= n - 1, f"need n >= 1 and 0 <= r < n, got n={n} r={r}")
    total = sum(binom(n - 2 - 2 * k, r - 2 * k) for k in range(r // 2 + 1))
    return (total << (n - r)) + (-1) ** (r + 1)


def moriarty(m: int, r: int) -> tuple[int, int]:
    """Both sides of the identity obtained by replacing i-1 with i in eval_S.

    lhs = sum of C(m, 2i) * C(i, r) for i = r .. floor(m/2), and
    rhs = 2**(m-1-2r) * C(m-r, r) * m / (m-r), evaluated in exact
    rational arithmetic and asserted integral. Note the power of two is
    fractional at r = m/2; the product is an integer regardless.

    Raises NonIntegralResult if the rational rhs fails to reduce, which
    would mean an internal error, not bad input.
    """
    _require(
        m >= 1 and 0 <= r <= m // 2 and m > r,
        f"need m >= 1 and 0 <= r <= m/2 and m > r, got m={m} r={r}",
    )
    lhs = sum(binom(m, 2 * i) * binom(i, r) for i in range(r, m // 2 + 1))
    rhs = Fraction(2) ** (m - 1 - 2 * r) * binom(m - r, r) * Fraction(m, m - r)
    if rhs.denominator != 1:
        raise NonIntegralResult(f"rhs of moriarty({m}, {r}) is {rhs}, not an integer")
    return lhs, int(rhs)


def companion_identity(n: int, r: int) -> tuple[int, int]:
    """Both sides of the identity obtained by replacing j-1 with j in eval_T.

    lhs = sum of C(n, j) * C(j, r) for j = r .. n, rhs = 2**(n-r) * C(n, r).
    """
    _require(0 <= r <= n, f"need 0 <= r <= n, got n={n} r={r}")
    lhs = sum(binom(n, j) * binom(j, r) for j in range(r, n + 1))
    return lhs, binom(n, r) << (n - r)


@dataclass(frozen=True)
class Series:
    """Truncated formal power series with exact integer coefficients.

    coeffs[k] is the coefficient of x**k; the truncation degree is
    len(coeffs) - 1 and always explicit. Multiplication truncates to the
    smaller degree of the two operands, never silently extending it;
    shifted() extends the degree by exactly the shift amount.
    """

    coeffs: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __mul__(self, other: "Series") -> "Series":
        d = min(self.degree, other.degree)
        out = [0] * (d + 1)
        for i, a in enumerate(self.coeffs[: d + 1]):
            if a:
                for j, b in enumerate(other.coeffs[: d + 1 - i]):
                    out[i + j] += a * b
        return Series(tuple(out))

    def shifted(self, k: int) -> "Series":
        """Multiply by x**k (k >= 0), raising the truncation degree by k."""
        if k < 0:
            raise RangeError("shift must be nonnegative")
        return Series((0,) * k + self.coeffs)


def gf_coefficients(r: int, m_max: int) -> list[int]:
    """Coefficients of x**(2r+2) / ((1-x) (1-2x)**(r+1)) up to degree m_max.

    The result list is indexed by m, for m = 0 .. m_max, and its entries
    equal eval_S(m, r). Computed by truncated exact series
    multiplication: 1/(1-x) is the all-ones series, 1/(1-2x)**(r+1) has
    coefficient C(j+r, r) * 2**j at x**j, and the product is shifted by
    2r + 2. The last-decorated-cell sum is deliberately not reused here,
    so this is an independent route to the same numbers.
    """
    _require(r >= 0 and m_max >= 2 * r + 2, f"need m_max >= 2r+2, got r={r} m_max={m_max}")
    d = m_max - (2 * r + 2)
    ones = Series((1,) * (d + 1))
    geometric = Series(tuple(binom(j + r, r) << j for j in range(d + 1)))
    return list((ones * geometric).shifted(2 * r + 2).coeffs)


def recurrence_residual(n: int) -> int:
    """Residual of the three-term recurrence satisfied by f(n) = eval_T(2n, n).

    Returns (24n**2+44n+16) f(n) + (21n**2+37n+14) f(n+1)
    - (3n**2+7n+2) f(n+2), which is expected to be exactly 0 for all
    n >= 1.
    """
    _require(n >= 1, f"need n >= 1, got n={n}")

    def f(k: int) -> int:
        return eval_T(2 * k, k)

    return (
        (24 * n * n + 44 * n + 16) * f(n)
        + (21 * n * n + 37 * n + 14) * f(n + 1)
        - (3 * n * n + 7 * n + 2) * f(n + 2)
    )


def oddness_and_divisibility(m: int, r: int) -> tuple[bool, bool]:
    """Check that eval_S(m, r) is odd and nearly a multiple of a 2-power.

    Returns (is_odd, divisibility_ok) where is_odd reports whether
    eval_S(m, r) is odd and divisibility_ok whether 2**(m-1-2r) divides
    eval_S(m, r) + (-1)**r. Both follow from the closed form of eval_W
    and are expected to be True throughout 0 <= r <= m/2 - 1.
    """
    _require(m >= 2 and 0 <= r and 2 * r <= m - 2, f"need 0 <= r <= m/2 - 1, got m={m} r={r}")
    s = eval_S(m, r)
    is_odd = s % 2 == 1
    divisibility_ok = (s + (-1) ** r) % (1 << (m - 1 - 2 * r)) == 0
    return is_odd, divisibility_ok
