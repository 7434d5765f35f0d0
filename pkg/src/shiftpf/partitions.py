"""Integer partitions, with the odd-part and distinct-part refinements.

Partitions are plain tuples of positive ints in weakly decreasing order; the
empty tuple is the partition of 0.  Lists of partitions are returned in
graded reverse-lexicographic order (by weight, then largest parts first).
"""

from collections import Counter
from functools import lru_cache
from math import factorial, prod

FLAVORS = ("any", "odd", "distinct")


def _check_flavor(flavor):
    if flavor not in FLAVORS:
        raise ValueError(f"unknown partition flavor {flavor!r}; expected one of {FLAVORS}")


def gen_partitions(n, flavor="any"):
    """Return every partition of ``n`` of the given flavor, in canonical order.

    >>> gen_partitions(3, "odd")
    [(3,), (1, 1, 1)]
    >>> gen_partitions(6, "distinct")
    [(6,), (5, 1), (4, 2), (3, 2, 1)]
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    _check_flavor(flavor)
    return list(_gen(n, n, flavor))


@lru_cache(maxsize=None)
def _gen(n, largest, flavor):
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        if flavor == "odd" and first % 2 == 0:
            continue
        cap = first - 1 if flavor == "distinct" else first
        for rest in _gen(n - first, cap, flavor):
            out.append((first,) + rest)
    return tuple(out)


def is_partition(parts):
    return all(isinstance(p, int) and p >= 1 for p in parts) and all(
        a >= b for a, b in zip(parts, parts[1:])
    )


def is_odd(parts):
    return is_partition(parts) and all(p % 2 == 1 for p in parts)


def is_distinct(parts):
    return is_partition(parts) and all(a > b for a, b in zip(parts, parts[1:]))


def check_partition(parts, flavor="any"):
    """Return ``parts`` as a canonical tuple, raising ``ValueError`` if invalid."""
    _check_flavor(flavor)
    parts = tuple(parts)
    ok = {"any": is_partition, "odd": is_odd, "distinct": is_distinct}[flavor](parts)
    if not ok:
        raise ValueError(f"{parts} is not a valid {flavor} partition")
    return parts


def normalize(parts):
    """Sort an arbitrary multiset of positive ints into partition form."""
    return tuple(sorted(parts, reverse=True))


def multiplicities(parts):
    """Map each part value to its multiplicity, e.g. ``(3, 1, 1) -> {3: 1, 1: 2}``."""
    return dict(Counter(parts))


def from_multiplicities(mult):
    return normalize(v for v, m in mult.items() for _ in range(m))


def z_stat(parts):
    """Centralizer order prod_i i^{m_i} m_i! of a permutation of cycle type ``parts``."""
    return prod(i**m * factorial(m) for i, m in multiplicities(parts).items())


def multinomial(total, counts):
    """total! / prod(c!), with ``sum(counts) == total`` required."""
    counts = list(counts)
    if sum(counts) != total:
        raise ValueError("counts must sum to total")
    return factorial(total) // prod(factorial(c) for c in counts)


def sort_key(parts):
    """Key realizing the canonical graded reverse-lexicographic order."""
    return (sum(parts), tuple(-p for p in parts))


def display_key(parts):
    """Longest partitions first, ties broken reverse-lexicographically.

    This is the order in which hand-written tables list monomials in the
    generators, e.g. ``924*P1^6 + 840*P3*P1^3 + 28*P5*P1 + 14*P3^2``.
    """
    return (sum(parts), -len(parts), tuple(-p for p in parts))
