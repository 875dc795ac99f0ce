"""Integer partitions, Young diagrams and constrained compositions.

Partitions are plain tuples of positive integers in weakly decreasing order;
``()`` is the unique partition of 0. Compositions are tuples of nonnegative
integers of fixed length.
"""

from __future__ import annotations

from functools import lru_cache
from math import factorial
from typing import Iterable, Iterator, Sequence

Partition = tuple[int, ...]
Composition = tuple[int, ...]


def is_partition(parts: Sequence[int]) -> bool:
    if any(p <= 0 for p in parts):
        return False
    return all(parts[i] >= parts[i + 1] for i in range(len(parts) - 1))


def normalize_shape(parts: Iterable[int]) -> Partition | None:
    """Strip trailing zeros from a shape.

    Returns ``None`` for degenerate shapes (a negative entry, a zero followed
    by a positive entry, or an increase), which stand for the zero character.
    """
    parts = list(parts)
    while parts and parts[-1] == 0:
        parts.pop()
    if not is_partition(parts):
        return None
    return tuple(parts)


def partition_weight(p: Sequence[int]) -> int:
    return sum(p)


def partitions_of(n: int, max_parts: int | None = None) -> list[Partition]:
    """All partitions of ``n`` in reverse lexicographic order.

    >>> partitions_of(4)
    [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    limit = n if max_parts is None else max_parts
    return list(_partitions(n, n, limit))


def _partitions(n: int, largest: int, parts_left: int) -> Iterator[Partition]:
    if n == 0:
        yield ()
        return
    if parts_left == 0:
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first, parts_left - 1):
            yield (first,) + rest


def conjugate(p: Sequence[int]) -> Partition:
    if not p:
        return ()
    return tuple(sum(1 for part in p if part > i) for i in range(p[0]))


@lru_cache(maxsize=None)
def hook_dimension(p: Partition) -> int:
    """Number of standard Young tableaux of shape ``p`` (hook-length formula)."""
    n = sum(p)
    cols = conjugate(p)
    hooks = 1
    for i, row in enumerate(p):
        for j in range(row):
            hooks *= (row - j - 1) + (cols[j] - i - 1) + 1
    return factorial(n) // hooks


def compositions(total: int, parts: int) -> list[Composition]:
    """Weak compositions of ``total`` into ``parts`` parts, lexicographic."""
    if parts < 0:
        raise ValueError("parts must be nonnegative")
    if parts == 0:
        return [()] if total == 0 else []
    if parts == 1:
        return [(total,)]
    return [(first,) + rest
            for first in range(total + 1)
            for rest in compositions(total - first, parts - 1)]


def s_compositions(total: int, parts: int) -> list[Composition]:
    """Weak compositions whose first part is never exactly 1.

    The first part counts the variables of a leading commutator in
    identity-degree variables, which has length 0 or at least 2.
    """
    if parts < 1:
        raise ValueError("parts must be positive")
    return [c for c in compositions(total, parts) if c[0] != 1]


def multinomial(parts: Sequence[int]) -> int:
    result = factorial(sum(parts))
    for p in parts:
        result //= factorial(p)
    return result


def interleaves(nu: Sequence[int], lam: Sequence[int]) -> bool:
    """True when lam_1 >= nu_1 >= lam_2 >= nu_2 >= ... (lam/nu a horizontal strip)."""
    if len(nu) > len(lam):
        return False
    for i, lam_i in enumerate(lam):
        nu_i = nu[i] if i < len(nu) else 0
        nxt = lam[i + 1] if i + 1 < len(lam) else 0
        if not lam_i >= nu_i >= nxt:
            return False
    return True


def format_partition(p: Sequence[int]) -> str:
    return "(" + ",".join(str(x) for x in p) + ")"


def parse_partition(text: str) -> Partition:
    """Parse ``"3,2"``, ``"(3,2)"`` or ``""`` into a partition."""
    body = text.strip().strip("()").strip()
    if not body:
        return ()
    parts = tuple(int(x) for x in body.split(","))
    if not is_partition(parts):
        raise ValueError(f"not a partition: {text!r}")
    return parts
