"""Concrete-group verification engine.

Builds small matrix and permutation groups explicitly, finds every
pi-Hall subgroup by exhaustive search, counts conjugacy classes, and
cross-validates the symbolic reports.

Hall discovery seeds the search at a fixed Sylow 2-subgroup: every
pi-Hall subgroup contains a full Sylow r-subgroup for each r in pi, so
each conjugacy class of Hall subgroups has a representative above the
chosen Sylow 2-subgroup (for even hall orders), and the complete Hall
list is recovered as the union of conjugation orbits.  The cyclic-seeded
fixpoint over the whole pi-subgroup lattice is kept as a separate mode
for counterexample searches; it is the part that may hit its budget.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from pihall.arith import factorize, is_pi_number, is_prime, pi_part
from pihall.classify import HallReport, YES
from pihall.groups import (
    ALT,
    GENERAL,
    ISOMETRY,
    LINEAR_UNITARY,
    SIMPLE,
    SYM,
    GroupSpec,
    order as group_order,
    validate,
)

Element = Tuple[int, ...]


class BudgetExceeded(RuntimeError):
    pass


class NonPrimeField(ValueError):
    pass


@dataclass(frozen=True)
class Budget:
    max_group_order: int = 100_000
    max_closure_steps: int = 1_000_000
    max_subgroups: int = 10_000


DEFAULT_BUDGET = Budget()


@dataclass
class ConcreteGroup:
    """An explicit finite group with canonical element tuples."""

    name: str
    kind: str
    elements: List[Element]
    mul: Callable[[Element, Element], Element]
    identity: Element
    generators: List[Element]
    spec: Optional[GroupSpec] = None
    _orders: Dict[Element, int] = field(default_factory=dict, repr=False)

    @property
    def order(self) -> int:
        return len(self.elements)

    def element_order(self, x: Element) -> int:
        cached = self._orders.get(x)
        if cached is not None:
            return cached
        y = x
        n = 1
        while y != self.identity:
            y = self.mul(y, x)
            n += 1
        self._orders[x] = n
        return n

    def inverse(self, x: Element) -> Element:
        n = self.element_order(x)
        out = self.identity
        for _ in range(n - 1):
            out = self.mul(out, x)
        return out

    def conjugate_set(self, subset: FrozenSet[Element], g: Element) -> FrozenSet[Element]:
        ginv = self.inverse(g)
        return frozenset(self.mul(self.mul(ginv, x), g) for x in subset)


@dataclass(frozen=True)
class SubgroupHandle:
    elements: FrozenSet[Element]
    generator_witness: Tuple[Element, ...]

    @property
    def order(self) -> int:
        return len(self.elements)


@dataclass
class CensusReport:
    group: ConcreteGroup
    pi: Tuple[int, ...]
    hall_order: int
    halls_found: List[SubgroupHandle]
    classes: List[List[SubgroupHandle]]
    exhaustive: bool

    @property
    def class_count(self) -> int:
        return len(self.classes)

    def to_dict(self) -> dict:
        return {
            "group": self.group.name,
            "pi": list(self.pi),
            "hall_order": self.hall_order,
            "class_count": self.class_count,
            "halls_found": len(self.halls_found),
            "exhaustive": self.exhaustive,
            "class_representatives": [
                [list(g) for g in cls[0].generator_witness] for cls in self.classes
            ],
        }


# ---------------------------------------------------------------------------
# group construction


def _perm_mul(a: Element, b: Element) -> Element:
    # apply b first, then a
    return tuple(a[b[i]] for i in range(len(a)))


def _mat_mul_mod(p: int):
    def mul(x: Element, y: Element) -> Element:
        a, b, c, d = x
        e, f, g, h = y
        return (
            (a * e + b * g) % p,
            (a * f + b * h) % p,
            (c * e + d * g) % p,
            (c * f + d * h) % p,
        )

    return mul


def _scalar_canonical(p: int, scalars: Sequence[int]):
    def canon(x: Element) -> Element:
        return min(tuple((s * v) % p for v in x) for s in scalars)

    return canon


def _closure(
    gens: Sequence[Element],
    mul: Callable[[Element, Element], Element],
    identity: Element,
    limit: int,
) -> List[Element]:
    elements = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = mul(x, g)
                if y not in elements:
                    elements.add(y)
                    nxt.append(y)
                    if len(elements) > limit:
                        raise BudgetExceeded(f"closure exceeded {limit} elements")
        frontier = nxt
    return sorted(elements)


def _primitive_root(p: int) -> int:
    factors = [f for f, _ in factorize(p - 1).factors]
    for g in range(2, p):
        if all(pow(g, (p - 1) // f, p) != 1 for f in factors):
            return g
    raise ValueError(f"no primitive root mod {p}")


def build_group(kind: str, param: int, budget: Budget = DEFAULT_BUDGET) -> ConcreteGroup:
    """Build one of SL2(p), PSL2(p), GL2(p), PGL2(p), Sym(n), Alt(n) explicitly.

    Matrix kinds need a prime p (prime fields only); permutation kinds a
    degree n.  The resulting order must fit the budget.
    """
    kind = kind.upper()
    if kind in ("SYM", "ALT"):
        n = param
        if math.factorial(n) // (1 if kind == "SYM" else 2) > budget.max_group_order:
            raise BudgetExceeded(f"{kind}({n}) exceeds the group-order budget")
        identity = tuple(range(n))
        if kind == "SYM":
            gens = [
                tuple([1, 0] + list(range(2, n))),
                tuple(list(range(1, n)) + [0]) if n > 1 else identity,
            ]
            spec = GroupSpec(SYM, n=n, variant=ISOMETRY)
        else:
            three = tuple([1, 2, 0] + list(range(3, n)))
            if n % 2 == 1:
                cyc = tuple(list(range(1, n)) + [0])
            else:
                cyc = tuple([0] + list(range(2, n)) + [1])
            gens = [three, cyc] if n > 3 else [three]
            spec = GroupSpec(ALT, n=n, variant=SIMPLE if n >= 5 else ISOMETRY)
        gens = [g for g in gens if g != identity]
        elements = _closure(gens, _perm_mul, identity, budget.max_group_order)
        g = ConcreteGroup(f"{kind.capitalize()}({n})", kind, elements, _perm_mul,
                          identity, gens, spec=validate(spec))
        _check_order(g)
        return g

    if kind in ("SL2", "PSL2", "GL2", "PGL2"):
        p = param
        if not is_prime(p):
            raise NonPrimeField(f"{kind} needs a prime field, got {param}")
        mul0 = _mat_mul_mod(p)
        if kind in ("PSL2", "PGL2"):
            scalars = (
                list(range(1, p)) if kind == "PGL2" else ([1, p - 1] if p > 2 else [1])
            )
            canon = _scalar_canonical(p, scalars)

            def mul(x: Element, y: Element) -> Element:
                return canon(mul0(x, y))

        else:
            canon = lambda x: x  # noqa: E731
            mul = mul0
        identity = canon((1, 0, 0, 1))
        gens = [canon((1, 1, 0, 1)), canon((1, 0, 1, 1))]
        if kind in ("GL2", "PGL2"):
            gens.append(canon((_primitive_root(p), 0, 0, 1)))
        variant = {"SL2": ISOMETRY, "PSL2": SIMPLE, "GL2": GENERAL, "PGL2": GENERAL}[kind]
        spec = GroupSpec(LINEAR_UNITARY, n=2, q=p, eta=1, variant=variant)
        expected = group_order(validate(spec)).order.value if kind != "PGL2" else None
        if expected is not None and expected > budget.max_group_order:
            raise BudgetExceeded(f"{kind}({p}) exceeds the group-order budget")
        elements = _closure(gens, mul, identity, budget.max_group_order)
        g = ConcreteGroup(
            f"{kind}({p})", kind, elements, mul, identity, gens,
            spec=validate(spec) if kind != "PGL2" else None,
        )
        if kind != "PGL2":
            _check_order(g)
        return g

    raise ValueError(f"unknown group kind {kind!r}")


def psl3_3_points() -> ConcreteGroup:
    """PSL3(3) in its permutation action on the 13 points of the projective plane."""
    p = 3
    points: List[Tuple[int, int, int]] = []
    seen = set()
    for x in range(p):
        for y in range(p):
            for z in range(p):
                if (x, y, z) == (0, 0, 0) or (x, y, z) in seen:
                    continue
                for s in range(1, p):
                    seen.add((s * x % p, s * y % p, s * z % p))
                points.append((x, y, z))
    index = {pt: i for i, pt in enumerate(points)}

    def normalize(v):
        for c in v:
            if c % p:
                inv = pow(c, p - 2, p)
                return tuple(x * inv % p for x in v)
        raise ValueError("zero vector")

    def mat_perm(m) -> Element:
        out = [0] * len(points)
        for pt, i in index.items():
            img = (
                m[0] * pt[0] + m[1] * pt[1] + m[2] * pt[2],
                m[3] * pt[0] + m[4] * pt[1] + m[5] * pt[2],
                m[6] * pt[0] + m[7] * pt[1] + m[8] * pt[2],
            )
            out[i] = index[normalize(tuple(x % p for x in img))]
        return tuple(out)

    gens = [mat_perm((1, 1, 0, 0, 1, 0, 0, 0, 1)), mat_perm((0, 0, 1, 1, 0, 0, 0, 1, 0))]
    identity = tuple(range(len(points)))
    elements = _closure(gens, _perm_mul, identity, 10_000)
    g = ConcreteGroup("PSL3(3)", "PERM", elements, _perm_mul, identity, gens,
                      spec=validate(GroupSpec(LINEAR_UNITARY, n=3, q=3, eta=1, variant=SIMPLE)))
    _check_order(g)
    return g


def _check_order(g: ConcreteGroup) -> None:
    if g.spec is None:
        return
    expected = group_order(g.spec).order.value
    if expected != g.order:
        raise RuntimeError(
            f"{g.name}: closure produced order {g.order}, symbolic order is {expected}"
        )


# ---------------------------------------------------------------------------
# subgroup machinery


def subgroup_closure(
    g: ConcreteGroup,
    gens: Iterable[Element],
    limit: int,
) -> Optional[FrozenSet[Element]]:
    """Closure of gens inside g, or None once it would exceed limit elements."""
    gens = [x for x in gens if x != g.identity]
    if not gens:
        return frozenset({g.identity})
    elements = {g.identity}
    frontier = [g.identity]
    mul = g.mul
    while frontier:
        nxt = []
        for x in frontier:
            for gen in gens:
                y = mul(x, gen)
                if y not in elements:
                    if len(elements) >= limit:
                        return None
                    elements.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(elements)


def _pi_elements(g: ConcreteGroup, pi: Sequence[int]) -> List[Element]:
    return [x for x in g.elements if is_pi_number(g.element_order(x), pi)]


def sylow_subgroup(g: ConcreteGroup, r: int) -> FrozenSet[Element]:
    """A Sylow r-subgroup, grown by adjoining r-elements."""
    target = pi_part(g.order, (r,))
    relements = [x for x in g.elements if g.element_order(x) != 1
                 and is_pi_number(g.element_order(x), (r,))]
    current = frozenset({g.identity})
    if target == 1:
        return current
    progress = True
    while len(current) < target and progress:
        progress = False
        for x in relements:
            if x in current:
                continue
            bigger = subgroup_closure(g, list(current) + [x], target + 1)
            if bigger is not None and is_pi_number(len(bigger), (r,)):
                current = bigger
                progress = True
                if len(current) == target:
                    break
    if len(current) != target:
        raise RuntimeError(f"could not grow a Sylow {r}-subgroup of {g.name}")
    return current


def _generator_witness(
    g: ConcreteGroup, subgroup: FrozenSet[Element]
) -> Tuple[Element, ...]:
    """A small generating tuple (at most 3 elements) for a known subgroup."""
    if len(subgroup) == 1:
        return ()
    members = sorted(subgroup)
    by_order = sorted(members, key=lambda x: -g.element_order(x))
    head = by_order[0]
    if g.element_order(head) == len(subgroup):
        return (head,)
    for a in by_order[:40]:
        for b in by_order:
            got = subgroup_closure(g, [a, b], len(subgroup) + 1)
            if got == subgroup:
                return (a, b)
    for a in by_order[:20]:
        for b in by_order[:20]:
            for c in by_order:
                got = subgroup_closure(g, [a, b, c], len(subgroup) + 1)
                if got == subgroup:
                    return (a, b, c)
    return tuple(members)  # give up: the full set generates itself


def conjugacy_classes_of_subgroups(
    g: ConcreteGroup, subgroups: Sequence[FrozenSet[Element]]
) -> List[List[FrozenSet[Element]]]:
    """Partition subgroups into conjugacy classes by generator-orbit closure."""
    remaining = set(subgroups)
    classes: List[List[FrozenSet[Element]]] = []
    while remaining:
        seed = min(remaining, key=sorted)
        orbit = {seed}
        frontier = [seed]
        while frontier:
            nxt = []
            for sub in frontier:
                for gen in g.generators:
                    image = g.conjugate_set(sub, gen)
                    if image not in orbit:
                        orbit.add(image)
                        nxt.append(image)
            frontier = nxt
        classes.append(sorted(orbit, key=sorted))
        remaining -= orbit
    return sorted(classes, key=lambda cls: sorted(cls[0]))


def conjugacy_class_count(
    g: ConcreteGroup, subgroups: Sequence[SubgroupHandle]
) -> List[List[SubgroupHandle]]:
    """Spec-facing wrapper: partition handles into conjugacy classes."""
    by_set = {h.elements: h for h in subgroups}
    classes = conjugacy_classes_of_subgroups(g, list(by_set))
    out = []
    for cls in classes:
        out.append([
            by_set.get(s, SubgroupHandle(s, _generator_witness(g, s))) for s in cls
        ])
    return out


def find_hall_subgroups(
    g: ConcreteGroup,
    pi: Sequence[int],
    budget: Budget = DEFAULT_BUDGET,
) -> CensusReport:
    """All pi-Hall subgroups of g, grouped into conjugacy classes.

    Search: fix a Sylow subgroup S for the least prime in pi (every Hall
    subgroup contains a conjugate of it), extend it by pi-elements keeping
    pi-number orders dividing the Hall order, then close the hits under
    conjugation.  Extension candidates are deduplicated per coset of the
    current subgroup, since <H, y> = <H, h y> for h in H.
    """
    pi = tuple(sorted(set(pi)))
    hall_order = pi_part(g.order, pi)
    if hall_order == 1:
        trivial = SubgroupHandle(frozenset({g.identity}), ())
        return CensusReport(g, pi, 1, [trivial], [[trivial]], True)

    relevant = [r for r in pi if g.order % r == 0]
    seed = sylow_subgroup(g, relevant[0])
    pi_elems = [
        x for x in _pi_elements(g, pi)
        if x != g.identity and hall_order % g.element_order(x) == 0
    ]
    mul = g.mul

    # all pi-subgroups containing the fixed Sylow subgroup
    found: Dict[FrozenSet[Element], Tuple[Element, ...]] = {
        seed: _generator_witness(g, seed)
    }
    frontier = [seed]
    steps = 0
    exhaustive = True
    while frontier and exhaustive:
        nxt = []
        for current in frontier:
            if not exhaustive:
                break
            if len(current) == hall_order:
                continue
            gens = found[current]
            members = sorted(current)
            coset_reps = set()
            for x in pi_elems:
                if x in current:
                    continue
                coset_reps.add(min(mul(h, x) for h in members))
            for x in sorted(coset_reps):
                steps += 1
                if steps > budget.max_closure_steps:
                    exhaustive = False
                    break
                bigger = subgroup_closure(g, list(gens) + [x], hall_order + 1)
                if bigger is None or bigger in found:
                    continue
                if hall_order % len(bigger) == 0:
                    found[bigger] = tuple(gens) + (x,)
                    nxt.append(bigger)
                    if len(found) > budget.max_subgroups:
                        raise BudgetExceeded("stored subgroup budget exceeded")
        frontier = nxt

    halls_over_seed = [s for s in found if len(s) == hall_order]
    classes = _expand_conjugacy_orbits(g, halls_over_seed, found)
    all_halls = [h for cls in classes for h in cls]
    return CensusReport(g, pi, hall_order, all_halls, classes, exhaustive)


def _expand_conjugacy_orbits(
    g: ConcreteGroup,
    representatives: Sequence[FrozenSet[Element]],
    gens_of: Dict[FrozenSet[Element], Tuple[Element, ...]],
) -> List[List[SubgroupHandle]]:
    """Conjugation orbits of the given subgroups, witnesses conjugated along."""
    remaining = {
        s: _minimal_witness(g, gens_of.get(s, ()), s) for s in representatives
    }
    classes: List[List[SubgroupHandle]] = []
    done = set()
    for seed in sorted(remaining, key=sorted):
        if seed in done:
            continue
        orbit: Dict[FrozenSet[Element], Tuple[Element, ...]] = {seed: remaining[seed]}
        frontier = [seed]
        while frontier:
            nxt = []
            for sub in frontier:
                wit = orbit[sub]
                for gen in g.generators:
                    image = g.conjugate_set(sub, gen)
                    if image not in orbit:
                        ginv = g.inverse(gen)
                        orbit[image] = tuple(
                            g.mul(g.mul(ginv, w), gen) for w in wit
                        )
                        nxt.append(image)
            frontier = nxt
        done |= set(orbit)
        classes.append(
            [SubgroupHandle(s, orbit[s]) for s in sorted(orbit, key=sorted)]
        )
    return sorted(classes, key=lambda cls: sorted(cls[0].elements))


def _minimal_witness(
    g: ConcreteGroup, gens: Tuple[Element, ...], subgroup: FrozenSet[Element]
) -> Tuple[Element, ...]:
    """Shrink a known generating tuple, falling back to a fresh search."""
    gens = tuple(x for x in gens if x != g.identity)
    if gens and subgroup_closure(g, gens, len(subgroup) + 1) == subgroup:
        for drop in range(len(gens)):
            trimmed = gens[:drop] + gens[drop + 1:]
            if trimmed and subgroup_closure(g, trimmed, len(subgroup) + 1) == subgroup:
                return _minimal_witness(g, trimmed, subgroup)
        if len(gens) <= 3:
            return gens
    return _generator_witness(g, subgroup)


def pi_subgroup_lattice(
    g: ConcreteGroup,
    pi: Sequence[int],
    budget: Budget = DEFAULT_BUDGET,
    max_order: Optional[int] = None,
) -> Tuple[List[FrozenSet[Element]], bool]:
    """The cyclic-seeded fixpoint: all pi-subgroups up to max_order.

    Returns (subgroups, exhaustive).  This is the expensive search; the
    Hall census above does not depend on it.
    """
    pi = tuple(sorted(set(pi)))
    cap = max_order if max_order is not None else pi_part(g.order, pi)
    seeds: Dict[FrozenSet[Element], None] = {}
    for x in _pi_elements(g, pi):
        sub = subgroup_closure(g, [x], cap + 1)
        if sub is not None and cap % len(sub) == 0:
            seeds.setdefault(sub)
    found: Dict[FrozenSet[Element], None] = dict(seeds)
    found.setdefault(frozenset({g.identity}))
    frontier = list(found)
    steps = 0
    exhaustive = True
    seed_list = list(seeds)
    while frontier:
        nxt = []
        for current in frontier:
            for seed in seed_list:
                if seed <= current:
                    continue
                steps += 1
                if steps > budget.max_closure_steps:
                    return list(found), False
                join = subgroup_closure(g, list(current) + list(seed), cap + 1)
                if join is None or join in found:
                    continue
                if cap % len(join) == 0 and is_pi_number(len(join), pi):
                    found[join] = None
                    nxt.append(join)
                    if len(found) > budget.max_subgroups:
                        return list(found), False
        frontier = nxt
    return list(found), exhaustive


def is_conjugate_into(
    g: ConcreteGroup, k: FrozenSet[Element], hall: FrozenSet[Element]
) -> bool:
    """Does some conjugate of k land inside hall?  Exhaustive over g."""
    if len(hall) % len(k) != 0:
        return False
    for c in g.elements:
        if g.conjugate_set(k, c) <= hall:
            return True
    return False


@dataclass
class DpiWitnessReport:
    per_class: List[Optional[SubgroupHandle]]
    lattice_exhaustive: bool

    @property
    def refuted(self) -> bool:
        return all(w is not None for w in self.per_class)


def find_dpi_counterexample(
    g: ConcreteGroup,
    pi: Sequence[int],
    census: CensusReport,
    budget: Budget = DEFAULT_BUDGET,
) -> DpiWitnessReport:
    """For each Hall class, a pi-subgroup not conjugate into it (if one exists).

    A witness for every class refutes the full Sylow analogue for pi.  For
    a pi-group there are no witnesses (every pi-subgroup sits in the whole
    group), and the report comes back empty-handed honestly.
    """
    pi = tuple(sorted(set(pi)))
    lattice, exhaustive = pi_subgroup_lattice(g, pi, budget)
    lattice = sorted(lattice, key=lambda s: (-len(s), sorted(s)))
    per_class: List[Optional[SubgroupHandle]] = []
    for cls in census.classes:
        hall = cls[0].elements
        witness = None
        for cand in lattice:
            if len(cand) == 1:
                continue
            if not is_conjugate_into(g, cand, hall):
                witness = SubgroupHandle(cand, _generator_witness(g, cand))
                break
        per_class.append(witness)
    return DpiWitnessReport(per_class, exhaustive)


# ---------------------------------------------------------------------------
# verification against symbolic reports


@dataclass
class VerificationOutcome:
    checks: List[Tuple[str, str, str, bool]]

    @property
    def passed(self) -> bool:
        return all(ok for _, _, _, ok in self.checks)

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "checks": [
                {"field": f, "expected": e, "actual": a, "ok": ok}
                for f, e, a, ok in self.checks
            ],
        }


def verify_report(
    g: ConcreteGroup, report: HallReport, census: Optional[CensusReport] = None,
    budget: Budget = DEFAULT_BUDGET,
) -> VerificationOutcome:
    """Compare a symbolic report with the brute-force census, field by field."""
    if census is None:
        census = find_hall_subgroups(g, tuple(sorted(report.pi)), budget)
    checks = []
    expected_hall = report.hall_order
    checks.append(
        ("hall_order", str(expected_hall), str(census.hall_order),
         expected_hall == census.hall_order)
    )
    e_actual = YES if census.class_count > 0 else "no"
    if report.e_pi in (YES, "no"):
        checks.append(("e_pi", report.e_pi, e_actual, report.e_pi == e_actual))
    if report.k_pi is not None:
        checks.append(
            ("k_pi", str(report.k_pi), str(census.class_count),
             report.k_pi == census.class_count)
        )
    elif report.k_bound is not None:
        # bound-only verdict: the census must land inside the bound set
        checks.append(
            ("k_pi within bound", str(set(report.k_bound)), str(census.class_count),
             census.class_count in report.k_bound)
        )
    for cls in census.classes:
        sizes = {h.order for h in cls}
        checks.append(
            ("class order uniformity", str(census.hall_order), str(sizes),
             sizes == {census.hall_order})
        )
    return VerificationOutcome(checks)


def center_quotient_hall_match(
    sl2: ConcreteGroup, psl2: ConcreteGroup, pi: Sequence[int],
    budget: Budget = DEFAULT_BUDGET,
) -> bool:
    """Every Hall subgroup of the quotient is the image of a Hall subgroup.

    Maps SL2(p) Hall subgroups through the center quotient and compares
    the resulting element sets with the PSL2(p) census.
    """
    p = sl2.spec.q
    scalars = [1, p - 1]

    def project(x: Element) -> Element:
        return min(tuple((s * v) % p for v in x) for s in scalars)

    up = find_hall_subgroups(sl2, pi, budget)
    down = find_hall_subgroups(psl2, pi, budget)
    images = {frozenset(project(x) for x in h.elements) for h in up.halls_found}
    targets = {h.elements for h in down.halls_found}
    return images == targets
