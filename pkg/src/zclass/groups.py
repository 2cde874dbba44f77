"""Enumerated finite groups as permutation tables with canonical byte encodings.

Every group the oracle consumes is realized concretely as permutations of a
small point set: symmetric groups on their letters, signed-permutation groups
on 2n signed points, dihedral groups on polygon vertices, reflection groups on
their root sets, and direct products on disjoint unions.  Elements are stored
as uint8 image arrays; the canonical encoding of an element is its row's bytes,
and rows are kept lexicographically sorted so the encoding order never depends
on generation order.
"""

from __future__ import annotations

import math
from typing import Callable

import numpy as np

from .combinatorics import Partition
from .errors import OrderCapExceeded
from .signed_perm import SignedPermutation, signed_cycle_type

DEFAULT_ORDER_CAP = 100_000
LARGE_ORDER_CAP = 5_000_000

_CHUNK = 1 << 17


def _as_void(rows: np.ndarray) -> np.ndarray:
    """View uint8 rows as opaque fixed-width scalars comparable bytewise."""
    rows = np.ascontiguousarray(rows)
    return rows.view(np.dtype((np.void, rows.shape[1]))).ravel()


def compose_rows(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Row-wise composition: result[r] = a[r] after b[r], i.e. a[r][b[r][i]]."""
    return np.take_along_axis(a, b, axis=1)


class GroupTable:
    """Enumerated permutation group on `degree` points.

    `perms` holds all elements as image arrays, rows sorted lexicographically.
    Generator rows are retained so orbit algorithms can walk the Cayley graph.
    """

    def __init__(
        self,
        perms: np.ndarray,
        gen_rows: tuple[int, ...],
        name: str,
        labeler: Callable[[np.ndarray], str] | None = None,
    ):
        self.perms = perms
        self.order, self.degree = perms.shape
        self.name = name
        self.gen_rows = gen_rows
        self.labeler = labeler
        self._void = _as_void(perms)
        self.identity_row = self.index_of(bytes(np.arange(self.degree, dtype=np.uint8)))
        self._inverses: np.ndarray | None = None
        self._orders: np.ndarray | None = None

    # --- canonical-encoding surface -------------------------------------

    @property
    def identity(self) -> bytes:
        return self.encoding(self.identity_row)

    def encoding(self, row: int) -> bytes:
        return self.perms[row].tobytes()

    def elements(self) -> list[bytes]:
        return [self.perms[r].tobytes() for r in range(self.order)]

    def multiply(self, a: bytes, b: bytes) -> bytes:
        ra = np.frombuffer(a, dtype=np.uint8)
        rb = np.frombuffer(b, dtype=np.uint8)
        return ra[rb].tobytes()

    def invert(self, a: bytes) -> bytes:
        ra = np.frombuffer(a, dtype=np.uint8)
        return np.argsort(ra).astype(np.uint8).tobytes()

    def index_of(self, enc: bytes) -> int:
        row = np.frombuffer(enc, dtype=np.uint8)
        idx = self.row_index(row[None, :])
        return int(idx[0])

    def contains(self, enc: bytes) -> bool:
        row = np.frombuffer(enc, dtype=np.uint8)
        if row.shape[0] != self.degree:
            return False
        qv = _as_void(row[None, :])
        pos = np.searchsorted(self._void, qv)
        return bool(pos[0] < self.order and self._void[pos[0]] == qv[0])

    # --- bulk internals ---------------------------------------------------

    def row_index(self, rows: np.ndarray) -> np.ndarray:
        """Indices of query rows in the table; every row must be a member."""
        qv = _as_void(rows)
        idx = np.searchsorted(self._void, qv)
        if __debug__:
            if idx.size and (idx.max() >= self.order or np.any(self._void[idx] != qv)):
                raise AssertionError("row not in group table")
        return idx

    def inverses(self) -> np.ndarray:
        if self._inverses is None:
            inv = np.empty_like(self.perms)
            for lo in range(0, self.order, _CHUNK):
                hi = min(lo + _CHUNK, self.order)
                inv[lo:hi] = np.argsort(self.perms[lo:hi], axis=1).astype(np.uint8)
            self._inverses = inv
        return self._inverses

    def element_orders(self) -> np.ndarray:
        if self._orders is None:
            identity = np.arange(self.degree, dtype=np.uint8)
            orders = np.ones(self.order, dtype=np.int64)
            for lo in range(0, self.order, _CHUNK):
                base = self.perms[lo : min(lo + _CHUNK, self.order)]
                powers = base.copy()
                chunk_orders = np.ones(base.shape[0], dtype=np.int64)
                active = np.nonzero(~(powers == identity).all(axis=1))[0]
                while active.size:
                    powers[active] = compose_rows(powers[active], base[active])
                    chunk_orders[active] += 1
                    still = ~(powers[active] == identity).all(axis=1)
                    active = active[still]
                orders[lo : lo + base.shape[0]] = chunk_orders
            self._orders = orders
        return self._orders

    def label(self, row: int) -> str | None:
        return self.labeler(self.perms[row]) if self.labeler else None

    def validate(self, rng: np.random.Generator | None = None) -> None:
        """Check the group axioms: exhaustively up to order 5000, else by probing."""
        identity = np.arange(self.degree, dtype=np.uint8)
        if not self.contains(identity.tobytes()):
            raise AssertionError("identity missing")
        if self.order <= 5000:
            for r in range(self.order):
                products = self.perms[r][self.perms]
                self.row_index(products)
            self.row_index(self.inverses())
        else:
            rng = rng or np.random.default_rng(0)
            a = rng.integers(0, self.order, size=10_000)
            b = rng.integers(0, self.order, size=10_000)
            self.row_index(compose_rows(self.perms[a], self.perms[b]))
            self.row_index(self.inverses()[a])


def group_from_generators(
    gens: list[np.ndarray],
    *,
    name: str,
    degree: int,
    order_cap: int = DEFAULT_ORDER_CAP,
    labeler: Callable[[np.ndarray], str] | None = None,
) -> GroupTable:
    """Breadth-first closure of the generators under right multiplication."""
    identity = np.arange(degree, dtype=np.uint8)
    gen_arrays = []
    for g in gens:
        arr = np.asarray(g, dtype=np.uint8)
        if arr.shape != (degree,) or sorted(arr.tolist()) != list(range(degree)):
            raise ValueError(f"generator is not a permutation of 0..{degree - 1}: {g}")
        gen_arrays.append(arr)

    seen: set[bytes] = {identity.tobytes()}
    levels: list[np.ndarray] = [identity[None, :]]
    frontier = identity[None, :]
    while frontier.size:
        level_fresh: list[np.ndarray] = []
        for g in gen_arrays:
            products = frontier[:, g]
            fresh_idx = [
                i
                for i in range(products.shape[0])
                if products[i].tobytes() not in seen
            ]
            if fresh_idx:
                block = products[np.array(fresh_idx)]
                seen.update(row.tobytes() for row in block)
                level_fresh.append(block)
        if len(seen) > order_cap:
            raise OrderCapExceeded(
                f"{name}: enumeration passed {len(seen)} elements, beyond the cap "
                f"{order_cap}; raise it with --allow-large"
            )
        if level_fresh:
            frontier = np.concatenate(level_fresh)
            levels.append(frontier)
        else:
            frontier = np.empty((0, degree), np.uint8)

    perms = np.concatenate(levels)
    order = np.argsort(_as_void(perms), kind="stable")
    perms = perms[order]
    table = GroupTable(perms, (), name, labeler)
    gen_rows = tuple(int(table.row_index(g[None, :])[0]) for g in gen_arrays)
    table.gen_rows = gen_rows
    return table


# --- concrete families ----------------------------------------------------


def _cycle_type_label(row: np.ndarray) -> str:
    n = row.shape[0]
    seen = [False] * n
    lengths = []
    for i in range(n):
        if seen[i]:
            continue
        k, j = 0, i
        while not seen[j]:
            seen[j] = True
            j = int(row[j])
            k += 1
        lengths.append(k)
    return str(Partition.from_parts(lengths))


def build_symmetric(n: int, order_cap: int = DEFAULT_ORDER_CAP) -> GroupTable:
    """S_n on n points, generated by adjacent transpositions."""
    if n < 1:
        raise ValueError("n must be positive")
    if math.factorial(n) > order_cap:
        raise OrderCapExceeded(f"S{n} has order {math.factorial(n)} > cap {order_cap}")
    gens = []
    for i in range(n - 1):
        g = np.arange(n, dtype=np.uint8)
        g[[i, i + 1]] = g[[i + 1, i]]
        gens.append(g)
    table = group_from_generators(
        gens, name=f"S{n}", degree=n, order_cap=order_cap, labeler=_cycle_type_label
    )
    assert table.order == math.factorial(n)
    return table


def signed_perm_to_row(w: SignedPermutation) -> np.ndarray:
    """Faithful action on 2n signed points: point i is +e_i, point n+i is -e_i."""
    n = w.n
    row = np.empty(2 * n, dtype=np.uint8)
    for i in range(n):
        j = w.perm[i]
        if w.signs[j] == 1:
            row[i], row[n + i] = j, n + j
        else:
            row[i], row[n + i] = n + j, j
    return row


def row_to_signed_perm(row: np.ndarray) -> SignedPermutation:
    n = row.shape[0] // 2
    perm = [0] * n
    signs = [1] * n
    for i in range(n):
        img = int(row[i])
        perm[i] = img % n
        signs[img % n] = -1 if img >= n else 1
    return SignedPermutation(tuple(signs), tuple(perm))


def _signed_label(row: np.ndarray) -> str:
    return str(signed_cycle_type(row_to_signed_perm(row)))


def _bc_generators(n: int) -> list[np.ndarray]:
    gens = []
    for i in range(n - 1):
        swap = np.arange(2 * n, dtype=np.uint8)
        swap[[i, i + 1]] = swap[[i + 1, i]]
        swap[[n + i, n + i + 1]] = swap[[n + i + 1, n + i]]
        gens.append(swap)
    flip = np.arange(2 * n, dtype=np.uint8)
    flip[[n - 1, 2 * n - 1]] = flip[[2 * n - 1, n - 1]]
    gens.append(flip)
    return gens


def build_wreath_bc(n: int, order_cap: int = DEFAULT_ORDER_CAP) -> GroupTable:
    """C2 wr S_n as signed permutations acting on 2n points."""
    if n < 1:
        raise ValueError("n must be positive")
    expected = 2**n * math.factorial(n)
    if expected > order_cap:
        raise OrderCapExceeded(f"B{n} has order {expected} > cap {order_cap}")
    gens = _bc_generators(n)
    if n == 1:
        gens = gens[-1:]
    table = group_from_generators(
        gens, name=f"B{n}", degree=2 * n, order_cap=order_cap, labeler=_signed_label
    )
    assert table.order == expected
    return table


def build_d(n: int, order_cap: int = DEFAULT_ORDER_CAP) -> GroupTable:
    """D_n: the index-2 subgroup of C2 wr S_n with positive sign product."""
    if n < 2:
        raise ValueError("n must be at least 2")
    expected = 2 ** (n - 1) * math.factorial(n)
    if expected > order_cap:
        raise OrderCapExceeded(f"D{n} has order {expected} > cap {order_cap}")
    gens = _bc_generators(n)[:-1]
    flip_swap = np.arange(2 * n, dtype=np.uint8)
    flip_swap[n - 2] = 2 * n - 1
    flip_swap[n - 1] = 2 * n - 2
    flip_swap[2 * n - 2] = n - 1
    flip_swap[2 * n - 1] = n - 2
    gens.append(flip_swap)
    table = group_from_generators(
        gens, name=f"D{n}", degree=2 * n, order_cap=order_cap, labeler=_signed_label
    )
    assert table.order == expected
    return table


def build_dihedral(m: int, order_cap: int = DEFAULT_ORDER_CAP) -> GroupTable:
    """Dihedral group of order 2m on the vertices of an m-gon."""
    if m < 3:
        raise ValueError("m must be at least 3")
    if 2 * m > order_cap:
        raise OrderCapExceeded(f"I2({m}) has order {2 * m} > cap {order_cap}")
    rot = np.array([(i + 1) % m for i in range(m)], dtype=np.uint8)
    ref = np.array([(m - i) % m for i in range(m)], dtype=np.uint8)
    table = group_from_generators(
        [rot, ref], name=f"I2({m})", degree=m, order_cap=order_cap
    )
    assert table.order == 2 * m
    return table


def direct_product(
    g1: GroupTable, g2: GroupTable, order_cap: int = DEFAULT_ORDER_CAP
) -> GroupTable:
    """G1 x G2 acting on the disjoint union of the two point sets."""
    if g1.order * g2.order > order_cap:
        raise OrderCapExceeded(
            f"{g1.name} x {g2.name} has order {g1.order * g2.order} > cap {order_cap}"
        )
    d1, d2 = g1.degree, g2.degree
    gens = []
    for r in g1.gen_rows:
        g = np.concatenate([g1.perms[r], np.arange(d2, dtype=np.uint8) + d1])
        gens.append(g)
    for r in g2.gen_rows:
        g = np.concatenate([np.arange(d1, dtype=np.uint8), g2.perms[r] + d1])
        gens.append(g)
    labeler = None
    if g1.labeler and g2.labeler:
        l1, l2 = g1.labeler, g2.labeler
        labeler = lambda row: f"{l1(row[:d1])} | {l2(row[d1:] - d1)}"
    table = group_from_generators(
        gens,
        name=f"{g1.name} x {g2.name}",
        degree=d1 + d2,
        order_cap=order_cap,
        labeler=labeler,
    )
    assert table.order == g1.order * g2.order
    return table
