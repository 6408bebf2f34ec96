"""Exact special-function and combinatorial kernels.

Laguerre/Legendre values come from the stable three-term recurrences.  The
triangular derivative-exchange matrices and the partition tables behind the
higher-order chain rule are built in exact integer arithmetic (Python ints,
so there is no overflow limit; the partition enumeration is capped at n = 12
simply because table sizes grow quickly).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

__all__ = [
    "laguerre",
    "legendre",
    "legendre_leading_coefficient",
    "CnMatrix",
    "cn_matrix",
    "cn_inverse",
    "BellPartitionTable",
    "bell_partitions",
]


def laguerre(n: int, x):
    """Laguerre polynomial L_n(x) via (k+1)L_{k+1} = (2k+1-x)L_k - k L_{k-1}."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    if n == 0:
        return 1.0 + 0.0 * x
    prev, cur = 1.0 + 0.0 * x, 1.0 - x
    for k in range(1, n):
        prev, cur = cur, ((2 * k + 1 - x) * cur - k * prev) / (k + 1)
    return cur


def legendre(n: int, x):
    """Legendre polynomial P_n(x) via (k+1)P_{k+1} = (2k+1)x P_k - k P_{k-1}."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    if n == 0:
        return 1.0 + 0.0 * x
    prev, cur = 1.0 + 0.0 * x, x
    for k in range(1, n):
        prev, cur = cur, ((2 * k + 1) * x * cur - k * prev) / (k + 1)
    return cur


def legendre_leading_coefficient(n: int) -> Fraction:
    """Exact leading coefficient (2n)! / (2^n (n!)^2) of P_n."""
    return Fraction(factorial(2 * n), 2**n * factorial(n) ** 2)


@dataclass(frozen=True)
class CnMatrix:
    """Lower-triangular (n+1)-square integer matrix with entries binom(i,j) i!/j!.

    These coefficients exchange n-fold differentiation with multiplication by
    t^n: (t^n f)^(n) = sum_k c_{n,k} t^k f^(k).  The inverse simply alternates
    signs, and the row sums 1, 2, 7, 34, 209, ... count partial permutation
    matchings (OEIS A002720).
    """

    n: int
    entries: tuple[tuple[int, ...], ...]

    def row_sums(self) -> tuple[int, ...]:
        return tuple(sum(row) for row in self.entries)

    def multiply(self, other: "CnMatrix") -> "CnMatrix":
        if self.n != other.n:
            raise ValueError("size mismatch")
        m = self.n + 1
        prod = tuple(
            tuple(sum(self.entries[i][k] * other.entries[k][j] for k in range(m)) for j in range(m))
            for i in range(m)
        )
        return CnMatrix(self.n, prod)


def _cn_entry(i: int, j: int) -> int:
    if i < j:
        return 0
    return comb(i, j) * factorial(i) // factorial(j)


def cn_matrix(n: int) -> CnMatrix:
    if n < 0:
        raise ValueError("n must be nonnegative")
    return CnMatrix(n, tuple(tuple(_cn_entry(i, j) for j in range(n + 1)) for i in range(n + 1)))


def cn_inverse(n: int) -> CnMatrix:
    if n < 0:
        raise ValueError("n must be nonnegative")
    return CnMatrix(
        n,
        tuple(
            tuple((-1) ** (i + j) * _cn_entry(i, j) for j in range(n + 1)) for i in range(n + 1)
        ),
    )


@dataclass(frozen=True)
class BellPartitionTable:
    """Multi-indices and counts for the n-th derivative of a composition.

    Each entry (coeff, k, (m_1, ..., m_n)) contributes

        coeff * f^(k)(phi(z)) * prod_j (phi^(j)(z)) ** m_j

    to (f o phi)^(n)(z), where sum_j j*m_j = n and sum_j m_j = k, and
    coeff = n! / prod_j ((j!)^m_j * m_j!) counts the set partitions of that
    block structure.
    """

    n: int
    entries: tuple[tuple[int, int, tuple[int, ...]], ...]


BELL_PARTITION_MAX_N = 12


def bell_partitions(n: int) -> BellPartitionTable:
    if not 1 <= n <= BELL_PARTITION_MAX_N:
        raise ValueError(f"n must lie in 1..{BELL_PARTITION_MAX_N}")
    entries = []
    for multi in _multi_indices(n, n):
        k = sum(multi)
        coeff = factorial(n)
        for j, mj in enumerate(multi, start=1):
            coeff //= factorial(j) ** mj * factorial(mj)
        entries.append((coeff, k, tuple(multi)))
    entries.sort(key=lambda e: (-e[1], e[2]))
    return BellPartitionTable(n, tuple(entries))


def _multi_indices(n: int, length: int):
    """All (m_1..m_length) with sum j*m_j = n."""

    def rec(j: int, remaining: int, prefix: list[int]):
        if j > length:
            if remaining == 0:
                yield list(prefix)
            return
        for mj in range(remaining // j + 1):
            yield from rec(j + 1, remaining - j * mj, prefix + [mj])

    yield from rec(1, n, [])
