"""Coxeter type descriptors and closed-form z-class counts."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .combinatorics import (
    delta_prime_set,
    delta_set,
    partitions_of,
    signed_partitions_of,
    zeta,
)
from .errors import CoxeterParseError, CoxeterRankError, OrderCapExceeded

DEFAULT_ORDER_CAP = 100_000
LARGE_ORDER_CAP = 5_000_000

# family -> (conjugacy class count, z-class count); computed externally once,
# exposed here as lookup data
EXCEPTIONAL_TABLE: dict[str, tuple[int, int]] = {
    "F4": (25, 16),
    "E6": (25, 24),
    "E7": (60, 28),
    "E8": (112, 65),
    "H3": (10, 4),
    "H4": (34, 15),
}

_EXCEPTIONAL_ORDERS = {
    "F4": 1152,
    "E6": 51840,
    "E7": 2903040,
    "E8": 696729600,
    "H3": 120,
    "H4": 14400,
}


@dataclass(frozen=True)
class IrreducibleType:
    """One irreducible factor: A/B/C/D with a rank, I2 with an edge label, or a named type."""

    family: str
    rank: int | None = None

    def __post_init__(self):
        fam, rank = self.family, self.rank
        if fam in ("A", "B", "C", "D"):
            if rank is None:
                raise CoxeterRankError(f"{fam} needs a rank")
            low = 2 if fam == "D" else 1
            if rank < low:
                raise CoxeterRankError(f"{fam}{rank}: rank must be at least {low}")
        elif fam == "I2":
            if rank is None or rank < 3:
                raise CoxeterRankError(f"I2({rank}): label must be at least 3")
        elif fam in EXCEPTIONAL_TABLE:
            if rank is not None:
                raise CoxeterRankError(f"{fam} takes no rank")
        else:
            raise CoxeterRankError(f"unknown family {fam!r}")

    def __str__(self) -> str:
        if self.family == "I2":
            return f"I2({self.rank})"
        if self.rank is None:
            return self.family
        return f"{self.family}{self.rank}"

    def group_order(self) -> int:
        fam, rank = self.family, self.rank
        if fam == "A":
            return math.factorial(rank + 1)
        if fam in ("B", "C"):
            return 2**rank * math.factorial(rank)
        if fam == "D":
            return 2 ** (rank - 1) * math.factorial(rank)
        if fam == "I2":
            return 2 * rank
        return _EXCEPTIONAL_ORDERS[fam]


@dataclass(frozen=True)
class CoxeterType:
    """A finite Coxeter group: a product of irreducible factors."""

    factors: tuple[IrreducibleType, ...]

    def __post_init__(self):
        if not self.factors:
            raise ValueError("a Coxeter type needs at least one factor")

    def __str__(self) -> str:
        return " x ".join(str(f) for f in self.factors)

    def group_order(self) -> int:
        return math.prod(f.group_order() for f in self.factors)


def parse_coxeter_type(text: str) -> CoxeterType:
    """Parse `factor ("x" factor)*`, case- and whitespace-insensitive.

    Factors: A<k>, B<k>, C<k>, D<k>, I2(<m>), F4, E6, E7, E8, H3, H4.
    """
    factors: list[IrreducibleType] = []
    i = 0
    n = len(text)

    def skip_ws(j: int) -> int:
        while j < n and text[j].isspace():
            j += 1
        return j

    def read_int(j: int) -> tuple[int, int]:
        start = j
        while j < n and text[j].isdigit():
            j += 1
        if j == start:
            raise CoxeterParseError("expected a number", start)
        return int(text[start:j]), j

    i = skip_ws(i)
    if i == n:
        raise CoxeterParseError("empty Coxeter type", 0)
    while True:
        letter = text[i].upper()
        if letter in ("A", "B", "C", "D", "E", "F", "H"):
            pos = i
            rank, i = read_int(i + 1)
            if letter in ("A", "B", "C", "D"):
                fam, r = letter, rank
            else:
                fam, r = f"{letter}{rank}", None
                if fam not in EXCEPTIONAL_TABLE:
                    raise CoxeterParseError(f"unknown type {fam}", pos)
            factors.append(IrreducibleType(fam, r))
        elif letter == "I":
            pos = i
            if text[i + 1 : i + 2] != "2":
                raise CoxeterParseError("expected I2(<m>)", pos)
            j = skip_ws(i + 2)
            if text[j : j + 1] != "(":
                raise CoxeterParseError("expected '(' after I2", j)
            m, j = read_int(skip_ws(j + 1))
            j = skip_ws(j)
            if text[j : j + 1] != ")":
                raise CoxeterParseError("expected ')'", j)
            factors.append(IrreducibleType("I2", m))
            i = j + 1
        else:
            raise CoxeterParseError(f"unexpected character {text[i]!r}", i)
        i = skip_ws(i)
        if i == n:
            break
        if text[i].upper() != "X":
            raise CoxeterParseError(f"expected 'x' between factors, got {text[i]!r}", i)
        i = skip_ws(i + 1)
        if i == n:
            raise CoxeterParseError("trailing 'x' without a factor", i)
    return CoxeterType(tuple(factors))


def _z_product(entries) -> int:
    prod = 1
    for p, m in entries:
        prod *= (m // 2 + 1) if p % 2 else (m + 1)
    return prod


def z_count_bc(n: int) -> int:
    """z-classes of the hyperoctahedral group C2 wr S_n.

    Sum over partitions of n of prod (floor(l_i/2)+1) over odd parts times
    prod (w_j+1) over even parts.
    """
    if n < 1:
        raise ValueError("n must be positive")
    return sum(_z_product(lam.entries) for lam in partitions_of(n))


def z_count_d(n: int) -> int:
    """z-classes of D_n: same as C2 wr S_n for odd n, corrected sum for even n."""
    if n < 2:
        raise ValueError("n must be at least 2")
    if n % 2:
        return z_count_bc(n)
    total = sum(_z_product(lam.entries) for lam in delta_set(n))
    total += sum((_z_product(lam.entries) + 1) // 2 for lam in delta_prime_set(n))
    total -= zeta(n - 2)
    total += len(delta_prime_set(n // 2))
    return total


def z_count_dihedral(m: int) -> int:
    """z-classes of the dihedral group of order 2m: 3, or 4 when m is divisible by 4."""
    if m < 3:
        raise ValueError("m must be at least 3")
    return 4 if m % 4 == 0 else 3


def z_count_exceptional(family: str) -> int:
    """Table lookup for F4, E6, E7, E8, H3, H4."""
    if family not in EXCEPTIONAL_TABLE:
        raise ValueError(f"not an exceptional family: {family!r}")
    return EXCEPTIONAL_TABLE[family][1]


def conjugacy_count_dihedral(m: int) -> int:
    if m % 2:
        return (m + 3) // 2
    return m // 2 + 3


def conjugacy_count_exceptional(family: str) -> int:
    return EXCEPTIONAL_TABLE[family][0]


@dataclass(frozen=True)
class FactorCount:
    factor: IrreducibleType
    z_count: int
    conjugacy_count: int
    method: str  # 'formula' | 'table' | 'oracle'


@dataclass(frozen=True)
class ZCountResult:
    total: int
    per_factor: tuple[FactorCount, ...]
    method: str

    @property
    def conjugacy_total(self) -> int:
        return math.prod(f.conjugacy_count for f in self.per_factor)


def _count_factor(factor: IrreducibleType, order_cap: int) -> FactorCount:
    fam, rank = factor.family, factor.rank
    if fam in ("B", "C"):
        return FactorCount(
            factor, z_count_bc(rank), len(signed_partitions_of(rank)), "formula"
        )
    if fam == "D":
        from .signed_perm import dn_conjugacy_classes

        return FactorCount(
            factor, z_count_d(rank), len(dn_conjugacy_classes(rank)), "formula"
        )
    if fam == "I2":
        return FactorCount(
            factor, z_count_dihedral(rank), conjugacy_count_dihedral(rank), "formula"
        )
    if fam in EXCEPTIONAL_TABLE:
        cc, zc = EXCEPTIONAL_TABLE[fam]
        return FactorCount(factor, zc, cc, "table")
    # type A has no closed form here; delegate to the brute-force oracle
    order = math.factorial(rank + 1)
    if order > order_cap:
        raise OrderCapExceeded(
            f"A{rank} needs the oracle on a group of order {order}, beyond the "
            f"cap {order_cap}; raise it with --allow-large"
        )
    from . import oracle
    from .groups import build_symmetric

    g = build_symmetric(rank + 1, order_cap=order_cap)
    groups = oracle.z_classes(g, order_cap=order_cap)
    return FactorCount(
        factor, len(groups), len(partitions_of(rank + 1)), "oracle"
    )


def z_count(t: CoxeterType, order_cap: int = DEFAULT_ORDER_CAP) -> ZCountResult:
    """z-class count of a product type: product of the per-factor counts."""
    per_factor = tuple(_count_factor(f, order_cap) for f in t.factors)
    methods = {f.method for f in per_factor}
    if "oracle" in methods:
        method = "oracle"
    elif "table" in methods:
        method = "table"
    else:
        method = "formula"
    total = math.prod(f.z_count for f in per_factor)
    return ZCountResult(total, per_factor, method)
