"""Class-count calculators for wreath-type extensions.

A group with k classes of Hall subgroups, wreathed by a cyclic top of
prime order p (p outside pi), has (k^p + (p-1)k)/p classes; wreathed by a
Hall top with t orbits it has k^t.  A direct Burnside orbit counter over
explicitly generated permutation groups cross-checks both.
"""

from __future__ import annotations

from itertools import product
from typing import List, Sequence, Tuple

from pihall.arith import is_prime

DEFAULT_CLOSURE_BUDGET = 10_000


class BudgetExceeded(RuntimeError):
    pass


def kpi_wreath_cyclic(k: int, p: int) -> int:
    """(k^p + (p-1)k) / p, the class count under a cyclic top of prime order p."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    total = k**p + (p - 1) * k
    # divisibility is Fermat's little theorem; a failure means a bug
    assert total % p == 0, f"k^p + (p-1)k not divisible by p for k={k}, p={p}"
    return total // p


def kpi_wreath_orbits(k: int, t: int) -> int:
    """k^t: class count under a Hall top with t orbits."""
    if k < 1 or t < 1:
        raise ValueError("k and t must be >= 1")
    return k**t


def _compose(a: Tuple[int, ...], b: Tuple[int, ...]) -> Tuple[int, ...]:
    return tuple(a[b[i]] for i in range(len(a)))


def close_permutations(
    perms: Sequence[Tuple[int, ...]], budget: int = DEFAULT_CLOSURE_BUDGET
) -> List[Tuple[int, ...]]:
    """Close a set of permutations of {0..n-1} under composition."""
    if not perms:
        raise ValueError("need at least one permutation")
    n = len(perms[0])
    for g in perms:
        if sorted(g) != list(range(n)):
            raise ValueError(f"{g} is not a permutation of 0..{n - 1}")
    identity = tuple(range(n))
    elements = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in perms:
                y = _compose(x, g)
                if y not in elements:
                    elements.add(y)
                    nxt.append(y)
                    if len(elements) > budget:
                        raise BudgetExceeded(
                            f"permutation closure exceeded {budget} elements"
                        )
        frontier = nxt
    return sorted(elements)


def cycle_count(perm: Tuple[int, ...]) -> int:
    seen = [False] * len(perm)
    cycles = 0
    for i in range(len(perm)):
        if not seen[i]:
            cycles += 1
            j = i
            while not seen[j]:
                seen[j] = True
                j = perm[j]
    return cycles


def burnside_orbits(
    k: int,
    perms: Sequence[Tuple[int, ...]],
    budget: int = DEFAULT_CLOSURE_BUDGET,
) -> int:
    """Orbits of the group generated by perms on k-colorings of the points.

    Direct Burnside sum: average of k^(number of cycles of g) over the
    whole generated group.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    group = close_permutations(perms, budget)
    total = sum(k ** cycle_count(g) for g in group)
    assert total % len(group) == 0
    return total // len(group)


def enumerate_orbits_directly(
    k: int, perms: Sequence[Tuple[int, ...]], budget: int = DEFAULT_CLOSURE_BUDGET
) -> int:
    """Count coloring orbits by explicit enumeration (test oracle for burnside)."""
    group = close_permutations(perms, budget)
    n = len(group[0])
    if k**n > budget * 100:
        raise BudgetExceeded("too many colorings to enumerate")
    seen = set()
    orbits = 0
    for coloring in product(range(k), repeat=n):
        if coloring in seen:
            continue
        orbits += 1
        for g in group:
            seen.add(tuple(coloring[g[i]] for i in range(n)))
    return orbits


def cyclic_perm(n: int) -> Tuple[int, ...]:
    """The n-cycle (0 1 ... n-1) as a permutation tuple."""
    return tuple((i + 1) % n for i in range(n))
