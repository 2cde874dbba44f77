"""Shared helpers: a tiny dict-based z-class oracle, independent of the numpy engine."""

import numpy as np


def naive_z_class_count(table) -> int:
    """Conjugacy classes and centralizer grouping by raw byte-encoding arithmetic.

    Deliberately avoids the package's orbit/fingerprint machinery: everything
    runs on Python sets of encodings via the GroupTable multiply/invert
    contract only.
    """
    elements = table.elements()
    inverse = {e: table.invert(e) for e in elements}

    def conjugate(w, x):
        return table.multiply(table.multiply(w, x), inverse[w])

    seen = set()
    classes = []
    for x in elements:
        if x in seen:
            continue
        orbit = {conjugate(w, x) for w in elements}
        seen |= orbit
        classes.append(min(orbit))

    centralizers = [
        frozenset(
            h
            for h in elements
            if table.multiply(h, rep) == table.multiply(rep, h)
        )
        for rep in classes
    ]
    groups = []
    for cen in centralizers:
        placed = False
        for existing in groups:
            if len(existing) != len(cen):
                continue
            if any(
                frozenset(conjugate(w, h) for h in existing) == cen
                for w in elements
            ):
                placed = True
                break
        if not placed:
            groups.append(cen)
    return len(groups)


def assert_valid_permutation_table(table):
    perms = table.perms
    assert perms.dtype == np.uint8
    for row in perms:
        assert sorted(row.tolist()) == list(range(table.degree))
