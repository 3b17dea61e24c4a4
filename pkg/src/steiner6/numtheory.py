"""Integer utilities: roots, valuations, primality and prime-power splitting."""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt

from sympy import integer_nthroot, isprime, primerange

# trial division ceiling for decompose_prime_power
TRIAL_LIMIT = 1 << 20

_SMALL_PRIMES: list[int] | None = None


def _small_primes() -> list[int]:
    global _SMALL_PRIMES
    if _SMALL_PRIMES is None:
        _SMALL_PRIMES = list(primerange(2, TRIAL_LIMIT + 1))
    return _SMALL_PRIMES


def is_prime(n: int) -> bool:
    return bool(isprime(n))


def iroot(n: int, k: int) -> int:
    """floor(n ** (1/k)) for n >= 0, exact for arbitrarily large n."""
    if n < 0:
        raise ValueError("iroot of a negative number")
    if k < 1:
        raise ValueError("root degree must be positive")
    return int(integer_nthroot(n, k)[0])


def valuation(n: int, p: int) -> int:
    """Exponent of the prime p in n (n != 0)."""
    if n == 0:
        raise ValueError("valuation of 0 is infinite")
    n = abs(n)
    if p == 2:
        return (n & -n).bit_length() - 1
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


@dataclass(frozen=True)
class PrimePower:
    value: int
    p: int
    e: int

    def __post_init__(self):
        if self.e < 1 or self.p ** self.e != self.value:
            raise ValueError(f"{self.value} != {self.p}^{self.e}")


def _smallest_factor(q: int) -> int | None:
    bound = min(isqrt(q), TRIAL_LIMIT)
    for p in _small_primes():
        if p > bound:
            break
        if q % p == 0:
            return p
    return None


def decompose_prime_power(q: int) -> PrimePower | None:
    """Split q = p^e with p prime, or return None if q is not a prime power.

    Trial division by primes up to 2^20 settles every q with a small prime
    factor. Otherwise all prime factors exceed 2^20, and q is a prime power
    iff some exact e-th root of q is prime.
    """
    if q < 2:
        raise ValueError(f"q must be >= 2, got {q}")
    p = _smallest_factor(q)
    if p is not None:
        e, r = 0, q
        while r % p == 0:
            r //= p
            e += 1
        return PrimePower(q, p, e) if r == 1 else None
    if q <= TRIAL_LIMIT * TRIAL_LIMIT:
        return PrimePower(q, q, 1)
    for e in range(q.bit_length() // 20, 0, -1):
        r, exact = integer_nthroot(q, e)
        if exact and isprime(r):
            return PrimePower(q, int(r), e)
    return None


def is_prime_power(q: int) -> bool:
    return q >= 2 and decompose_prime_power(q) is not None


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n > 0, ascending. Meant for witness-sized n."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


def divisors(n: int) -> list[int]:
    small = [d for d in range(1, isqrt(n) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def prime_not_dividing(b: int, order: int) -> int | None:
    """Largest prime dividing b but not order, if any."""
    rest = b // gcd(b, order)
    if rest == 1:
        return None
    return max((p for p in prime_factors(rest) if order % p), default=None)


def falling(k: int, n: int) -> int:
    """k (k-1) ... (k-n+1)."""
    out = 1
    for i in range(n):
        out *= k - i
    return out
