"""Exact number-theoretic kernels.

Everything here is plain integer arithmetic: r-parts and pi-parts of
integers, multiplicative orders, the closed forms for the r-part of
q^n - 1 and q^n - eta^n, and the factorial-domination inequality that
controls when symmetric-group tops can absorb extra primes.

All functions are pure and use arbitrary-precision ints throughout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterable, Tuple

# Deterministic Miller-Rabin witnesses; proven complete below 3.3e24,
# used as a fixed (reproducible) witness set above that.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)

_TRIAL_LIMIT = 100_000


def is_prime(n: int) -> bool:
    """Miller-Rabin primality test with a fixed witness set."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n == p:
            return True
        if n % p == 0:
            return False
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int) -> int:
    """Return a nontrivial factor of composite odd n (Brent's cycle variant)."""
    if n % 2 == 0:
        return 2
    c = 1
    while True:
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d
        c += 1


def _factor_into(n: int, out: Dict[int, int]) -> None:
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    d = _pollard_rho(n)
    _factor_into(d, out)
    _factor_into(n // d, out)


@lru_cache(maxsize=None)
def _factor_cached(n: int) -> Tuple[Tuple[int, int], ...]:
    factors: Dict[int, int] = {}
    m = n
    for p in _SMALL_PRIMES:
        while m % p == 0:
            factors[p] = factors.get(p, 0) + 1
            m //= p
    d = 53
    while d * d <= m and d <= _TRIAL_LIMIT:
        while m % d == 0:
            factors[d] = factors.get(d, 0) + 1
            m //= d
        d += 2
    if m > 1:
        _factor_into(m, factors)
    return tuple(sorted(factors.items()))


@dataclass(frozen=True)
class FactoredInt:
    """A positive integer together with its complete prime factorization."""

    value: int
    factors: Tuple[Tuple[int, int], ...]

    def __post_init__(self) -> None:
        prod = 1
        for p, e in self.factors:
            if e < 1 or not is_prime(p):
                raise ValueError(f"bad factorization entry {p}^{e}")
            prod *= p**e
        if prod != self.value:
            raise ValueError(f"factorization of {self.value} does not multiply back")

    @property
    def primes(self) -> Tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def as_dict(self) -> Dict[int, int]:
        return dict(self.factors)

    def pi_part(self, pi: Iterable[int]) -> int:
        pis = set(pi)
        out = 1
        for p, e in self.factors:
            if p in pis:
                out *= p**e
        return out

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        return " * ".join(f"{p}^{e}" if e > 1 else f"{p}" for p, e in self.factors)


def factorize(n: int) -> FactoredInt:
    """Complete prime factorization (trial division, then Pollard rho)."""
    if n < 1:
        raise ValueError("factorize expects a positive integer")
    return FactoredInt(n, _factor_cached(n))


def prime_divisors(n: int) -> Tuple[int, ...]:
    """pi(n): the primes dividing n, ascending."""
    return factorize(n).primes


class PrimeSet(frozenset):
    """A finite set of distinct primes; the pi of a pi-Hall query."""

    def __new__(cls, primes: Iterable[int]) -> "PrimeSet":
        ps = frozenset(int(p) for p in primes)
        for p in ps:
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")
        return super().__new__(cls, ps)

    @property
    def sorted(self) -> Tuple[int, ...]:
        return tuple(sorted(self))

    def __str__(self) -> str:
        return "{" + ",".join(str(p) for p in self.sorted) + "}"


def r_part(n: int, r: int) -> int:
    """The r-part n_r: the largest power of the prime r dividing n."""
    if n == 0:
        raise ValueError("r_part of zero is undefined")
    n = abs(n)
    out = 1
    while n % r == 0:
        n //= r
        out *= r
    return out


def pi_part(n: int, pi: Iterable[int]) -> int:
    """The pi-part n_pi: the largest divisor of n with all prime factors in pi."""
    if n < 1:
        raise ValueError("pi_part expects a positive integer")
    out = 1
    for p in sorted(set(pi)):
        out *= r_part(n, p)
    return out


def is_pi_number(n: int, pi: Iterable[int]) -> bool:
    return pi_part(n, pi) == n


def mult_order(q: int, r: int) -> int:
    """e(q, r): order of q mod r for odd r; the two-case rule at r = 2.

    For r = 2 the value is 1 when q = 1 (mod 4) and 2 when q = -1 (mod 4);
    this is the convention under which the closed forms below hold.
    """
    if math.gcd(q, r) != 1:
        raise ValueError(f"gcd({q},{r}) != 1")
    if r == 2:
        if q % 2 == 0:
            raise ValueError("q must be odd for r = 2")
        return 1 if q % 4 == 1 else 2
    order = r - 1
    for p, _ in factorize(r - 1).factors:
        while order % p == 0 and pow(q, order // p, r) == 1:
            order //= p
    return order


def e_star(e: int) -> int:
    """2e for odd e; e when e = 0 (mod 4); e/2 when e = 2 (mod 4)."""
    if e < 1:
        raise ValueError("e must be positive")
    if e % 2 == 1:
        return 2 * e
    if e % 4 == 0:
        return e
    return e // 2


def r_part_q_pow_minus_1(q: int, n: int, r: int) -> int:
    """(q^n - 1)_r by the closed form (q^e - 1)_r * (n/e)_r when e | n."""
    e = mult_order(q, r)
    if n % e == 0:
        return r_part(q**e - 1, r) * r_part(n // e, r)
    return 2 if r == 2 else 1


def r_part_q_pow_minus_eta(q: int, n: int, r: int, eta: int) -> int:
    """(q^n - eta^n)_r via the signed closed form (e* in place of e)."""
    if eta == 1:
        return r_part_q_pow_minus_1(q, n, r)
    if eta != -1:
        raise ValueError("eta must be +1 or -1")
    es = e_star(mult_order(q, r))
    if n % es == 0:
        return r_part(q**es - (-1) ** es, r) * r_part(n // es, r)
    return 2 if r == 2 else 1


def three_part_q_pow_minus_eta(q: int, n: int, eta: int) -> int:
    """(q^n - eta^n)_3, specialized by the residue of q mod 3."""
    if math.gcd(q, 3) != 1:
        raise ValueError("q must be coprime to 3")
    if q % 3 == eta % 3:
        return r_part(q - eta, 3) * r_part(n, 3)
    if n % 2 == 0:
        return r_part(q + eta, 3) * r_part(n // 2, 3)
    return 1


def two_part_q_pow_minus_eta(q: int, n: int, eta: int) -> int:
    """(q^n - eta^n)_2 = (q - eta)_2 * t with t depending on the parity of n."""
    if q % 2 == 0:
        raise ValueError("q must be odd")
    t = r_part(q + eta, 2) * r_part(n // 2, 2) if n % 2 == 0 else 1
    return r_part(q - eta, 2) * t


def r_part_product(q: int, n: int, r: int, eta: int) -> int:
    """r-part of prod_{i=1..n} (q^i - eta^i), via the per-term closed forms."""
    out = 1
    for i in range(1, n + 1):
        out *= r_part_q_pow_minus_eta(q, i, r, eta)
    return out


def r_part_product_closed_form(q: int, n: int, r: int) -> int:
    """Closed form for the r-part of prod (q^i - 1), odd r only."""
    if r == 2:
        raise ValueError("use two_part_product for r = 2")
    e = mult_order(q, r)
    m = n // e
    return r_part(q**e - 1, r) ** m * r_part(math.factorial(m), r)


def three_part_product(q: int, n: int, eta: int) -> int:
    """Closed form for the 3-part of prod (q^i - eta^i)."""
    if math.gcd(q, 3) != 1:
        raise ValueError("q must be coprime to 3")
    if q % 3 == eta % 3:
        return r_part(q - eta, 3) ** n * r_part(math.factorial(n), 3)
    m = n // 2
    return r_part(q + eta, 3) ** m * r_part(math.factorial(m), 3)


def two_part_product(q: int, n: int, eta: int) -> int:
    """Closed form for the 2-part of prod (q^i - eta^i)."""
    if q % 2 == 0:
        raise ValueError("q must be odd")
    m = n // 2
    return (
        r_part(q - eta, 2) ** n
        * r_part(q + eta, 2) ** m
        * r_part(math.factorial(m), 2)
    )


def symmetric_dominates(q: int, r: int, m: int) -> bool:
    """True iff ((q^2-1)(q^4-1)...(q^(2(m-1))-1))_r > (m!)_r.

    Guaranteed true whenever m >= (r+1)/2 for odd r not dividing q.
    """
    lhs = 1
    for i in range(1, m):
        lhs *= r_part(q ** (2 * i) - 1, r)
    return lhs > r_part(math.factorial(m), r)


def epsilon(q: int) -> int:
    """+1 if q = 1 (mod 4), -1 if q = 3 (mod 4); rejects even q."""
    if q % 2 == 0:
        raise ValueError("epsilon is defined for odd q only")
    return 1 if q % 4 == 1 else -1


@lru_cache(maxsize=None)
def _cyclotomic_value(n: int, q: int) -> int:
    """Phi_n(q) as an integer, by exact division of q^n - 1."""
    val = q**n - 1
    for d in range(1, n):
        if n % d == 0:
            val //= _cyclotomic_value(d, q)
    return val


def factor_q_pow_minus_1(q: int, n: int) -> FactoredInt:
    """Factor q^n - 1 through its cyclotomic pieces (fast for Lie-type orders)."""
    factors: Dict[int, int] = {}
    for d in range(1, n + 1):
        if n % d == 0:
            for p, e in factorize(_cyclotomic_value(d, q)).factors:
                factors[p] = factors.get(p, 0) + e
    return FactoredInt(q**n - 1, tuple(sorted(factors.items())))


def factor_q_pow_plus_1(q: int, n: int) -> FactoredInt:
    """Factor q^n + 1 = (q^2n - 1)/(q^n - 1) through cyclotomic pieces."""
    factors: Dict[int, int] = {}
    for d in range(1, 2 * n + 1):
        if 2 * n % d == 0 and n % d != 0:
            for p, e in factorize(_cyclotomic_value(d, q)).factors:
                factors[p] = factors.get(p, 0) + e
    return FactoredInt(q**n + 1, tuple(sorted(factors.items())))


def factor_q_pow_minus_eta(q: int, n: int, eta: int) -> FactoredInt:
    """Factor q^n - eta^n."""
    if eta == 1 or n % 2 == 0:
        return factor_q_pow_minus_1(q, n)
    return factor_q_pow_plus_1(q, n)


def merge_factored(parts: Iterable[FactoredInt]) -> FactoredInt:
    """Product of already-factored integers, keeping the factorization exact."""
    value = 1
    factors: Dict[int, int] = {}
    for part in parts:
        value *= part.value
        for p, e in part.factors:
            factors[p] = factors.get(p, 0) + e
    return FactoredInt(value, tuple(sorted(factors.items())))


def divide_factored(num: FactoredInt, d: int) -> FactoredInt:
    """num / d with exact bookkeeping; d must divide num.value."""
    if num.value % d != 0:
        raise ValueError(f"{d} does not divide {num.value}")
    factors = num.as_dict()
    for p, e in factorize(d).factors:
        if factors.get(p, 0) < e:
            raise ValueError(f"{d} does not divide the stored factorization")
        factors[p] -= e
        if factors[p] == 0:
            del factors[p]
    return FactoredInt(num.value // d, tuple(sorted(factors.items())))
