"""pihall: decision procedures for pi-Hall subgroups of finite simple groups.

The package answers, for a symbolic group and a finite set of primes pi:
does a pi-Hall subgroup exist, what do its conjugacy classes look like,
and how many classes are there.  A brute-force engine over explicit small
groups independently confirms the symbolic answers.
"""

from pihall.arith import PrimeSet, factorize, pi_part
from pihall.groups import GroupSpec, parse_group, prime_spectrum, validate
from pihall.groups import order as group_order
from pihall.classify import HallReport, classify

__all__ = [
    "PrimeSet",
    "factorize",
    "pi_part",
    "GroupSpec",
    "parse_group",
    "validate",
    "group_order",
    "prime_spectrum",
    "HallReport",
    "classify",
]
