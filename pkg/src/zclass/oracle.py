"""Brute-force z-class engine for any enumerated finite group.

Mirrors the classic computer-algebra recipe: list conjugacy classes, take the
centralizer of each representative, and group classes whose centralizers are
conjugate subgroups, scanning existing groups in order and absorbing into the
first match.  Everything is deterministic: classes are ordered by their
minimal canonical encoding and witnesses are the smallest-index conjugators.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import OrderCapExceeded
from .groups import DEFAULT_ORDER_CAP, GroupTable, compose_rows

_CHUNK = 1 << 16


@dataclass(frozen=True)
class ConjugacyClass:
    rep: int  # row index of the minimal-encoding member
    members: np.ndarray = field(repr=False)  # sorted row indices

    @property
    def size(self) -> int:
        return int(self.members.size)


@dataclass(frozen=True)
class SubgroupHandle:
    """Subgroup as sorted member rows, a short generating list, and a fingerprint.

    The fingerprint (order, element-order histogram, center order) is invariant
    under conjugation, so unequal fingerprints reject conjugacy outright.
    """

    member_rows: np.ndarray = field(repr=False)
    generator_rows: tuple[int, ...]
    fingerprint: tuple

    @property
    def order(self) -> int:
        return int(self.member_rows.size)


def _conjugate_by_row(g: GroupTable, t: int, rows: np.ndarray) -> np.ndarray:
    """Indices of t * e * t^-1 for the given element rows."""
    t_arr = g.perms[t]
    t_inv = g.inverses()[t]
    out = np.empty(rows.size, dtype=np.int64)
    for lo in range(0, rows.size, _CHUNK):
        hi = min(lo + _CHUNK, rows.size)
        conj = t_arr[g.perms[rows[lo:hi]]][:, t_inv]
        out[lo:hi] = g.row_index(conj)
    return out


def conjugacy_classes(
    g: GroupTable, order_cap: int = DEFAULT_ORDER_CAP
) -> list[ConjugacyClass]:
    """Orbit partition under conjugation, ordered by minimal representative."""
    if g.order > order_cap:
        raise OrderCapExceeded(
            f"{g.name} has order {g.order} > cap {order_cap}; raise it with --allow-large"
        )
    all_rows = np.arange(g.order, dtype=np.int64)
    conj_maps = [_conjugate_by_row(g, t, all_rows) for t in g.gen_rows]
    visited = np.zeros(g.order, dtype=bool)
    classes: list[ConjugacyClass] = []
    for rep in range(g.order):
        if visited[rep]:
            continue
        visited[rep] = True
        members = [rep]
        frontier = np.array([rep], dtype=np.int64)
        while frontier.size and conj_maps:
            images = np.concatenate([m[frontier] for m in conj_maps])
            images = np.unique(images)
            images = images[~visited[images]]
            visited[images] = True
            members.append(images)
            frontier = images
        member_arr = np.unique(np.concatenate([np.atleast_1d(m) for m in members]))
        classes.append(ConjugacyClass(rep, member_arr))
    assert sum(c.size for c in classes) == g.order
    return classes


def centralizer(g: GroupTable, row: int) -> SubgroupHandle:
    """All elements commuting with the element at `row`."""
    x = g.perms[row]
    keep = []
    for lo in range(0, g.order, _CHUNK):
        hi = min(lo + _CHUNK, g.order)
        block = g.perms[lo:hi]
        mask = (block[:, x] == x[block]).all(axis=1)
        keep.append(np.nonzero(mask)[0] + lo)
    members = np.concatenate(keep)
    if members.size == g.order:
        gens = tuple(g.gen_rows)
    else:
        gens = _subgroup_generators(g, members)
    fp = _fingerprint(g, members, gens)
    return SubgroupHandle(members, gens, fp)


def _subgroup_generators(g: GroupTable, members: np.ndarray) -> tuple[int, ...]:
    """Greedy small generating list: add the least uncovered member, re-close."""
    gens: list[int] = []
    closed = {g.identity_row}
    closed_rows = np.array([g.identity_row], dtype=np.int64)
    for r in members.tolist():
        if r in closed:
            continue
        gens.append(r)
        frontier = closed_rows
        while frontier.size:
            products = []
            for gr in gens:
                prod = g.row_index(g.perms[frontier][:, g.perms[gr]])
                products.append(prod)
            fresh = np.unique(np.concatenate(products))
            fresh = np.array(
                [p for p in fresh.tolist() if p not in closed], dtype=np.int64
            )
            closed.update(fresh.tolist())
            frontier = fresh
        closed_rows = np.fromiter(closed, dtype=np.int64, count=len(closed))
    assert len(closed) == members.size
    return tuple(gens)


def _fingerprint(g: GroupTable, members: np.ndarray, gens: tuple[int, ...]) -> tuple:
    orders = g.element_orders()[members]
    histogram = tuple(np.bincount(orders).tolist())
    member_rows = g.perms[members]
    central = np.ones(members.size, dtype=bool)
    for gr in gens:
        garr = g.perms[gr]
        central &= (member_rows[:, garr] == garr[member_rows]).all(axis=1)
    return (int(members.size), histogram, int(central.sum()))


def subgroups_conjugate(
    g: GroupTable, h: SubgroupHandle, k: SubgroupHandle
) -> tuple[bool, int | None]:
    """Search for w with w h w^-1 = k; returns (found, witness row).

    Fingerprint mismatch rejects immediately.  Otherwise candidates w are
    filtered generator by generator (w g w^-1 must land in k), and the first
    survivor is confirmed by conjugating h's full member set.
    """
    if h.fingerprint != k.fingerprint:
        return False, None
    if np.array_equal(h.member_rows, k.member_rows):
        return True, g.identity_row
    candidates = np.arange(g.order, dtype=np.int64)
    inverses = g.inverses()
    for gr in h.generator_rows:
        if not candidates.size:
            break
        gen_arr = g.perms[gr]
        keep_parts = []
        for lo in range(0, candidates.size, _CHUNK):
            hi = min(lo + _CHUNK, candidates.size)
            cand = candidates[lo:hi]
            w = g.perms[cand]
            conj = compose_rows(w, gen_arr[inverses[cand]])
            idx = g.row_index(conj)
            inside = np.searchsorted(k.member_rows, idx)
            inside[inside == k.member_rows.size] = 0
            keep_parts.append(cand[k.member_rows[inside] == idx])
        candidates = np.concatenate(keep_parts) if keep_parts else candidates[:0]
    if not candidates.size:
        return False, None
    witness = int(candidates[0])
    conj_members = np.sort(_conjugate_by_row(g, witness, h.member_rows))
    if not np.array_equal(conj_members, k.member_rows):
        raise AssertionError("generator images matched but member sets differ")
    return True, witness


def z_classes(
    g: GroupTable, order_cap: int = DEFAULT_ORDER_CAP
) -> list[list[ConjugacyClass]]:
    """Group conjugacy classes whose centralizers are conjugate in g.

    The first existing group with a conjugate centralizer absorbs each class;
    otherwise the class opens a new group.
    """
    classes = conjugacy_classes(g, order_cap=order_cap)
    groups: list[list[int]] = []
    group_cens: list[SubgroupHandle] = []
    for ci, cl in enumerate(classes):
        cen = centralizer(g, cl.rep)
        assert cen.order * cl.size == g.order
        placed = False
        for gi, existing in enumerate(group_cens):
            ok, _ = subgroups_conjugate(g, existing, cen)
            if ok:
                groups[gi].append(ci)
                placed = True
                break
        if not placed:
            groups.append([ci])
            group_cens.append(cen)
    return [[classes[ci] for ci in grp] for grp in groups]


def z_class_count(g: GroupTable, order_cap: int = DEFAULT_ORDER_CAP) -> int:
    return len(z_classes(g, order_cap=order_cap))
