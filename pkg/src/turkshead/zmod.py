"""Modular and elementary number-theoretic arithmetic.

Residues are always stored canonically in [0, r); reduce on entry, so one
representation serves for equality tests everywhere else.
"""

from __future__ import annotations

import math


def check_modulus(r: int) -> int:
    """Validate a modulus (an integer >= 2) and return it."""
    if not isinstance(r, int) or isinstance(r, bool):
        raise ValueError(f"modulus must be an integer, got {r!r}")
    if r < 2:
        raise ValueError(f"modulus must be >= 2, got {r}")
    return r


def gcd(a: int, b: int) -> int:
    """Greatest common divisor of two nonnegative integers, not both zero."""
    if a < 0 or b < 0:
        raise ValueError("gcd arguments must be nonnegative")
    if a == 0 and b == 0:
        raise ValueError("gcd(0, 0) is undefined")
    return math.gcd(a, b)


def solution_count_linear(a: int, r: int) -> int:
    """Number of x in Z_r with a*x == 0 (mod r).

    Equals gcd(a mod r, r): the scaled congruence collapses to one with a
    unit coefficient on a subgroup of that index.
    """
    check_modulus(r)
    return math.gcd(a % r, r)


def mod_inverse(a: int, r: int) -> int:
    """Multiplicative inverse of a mod r; raises ValueError when none exists."""
    check_modulus(r)
    try:
        return pow(a % r, -1, r)
    except ValueError:
        raise ValueError(f"{a} has no inverse mod {r} (gcd is {math.gcd(a % r, r)})")


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    for f in range(3, math.isqrt(n) + 1, 2):
        if n % f == 0:
            return False
    return True


def legendre5(p: int) -> int:
    """5^((p-1)/2) mod p reduced to +1 or -1, for an odd prime p != 5.

    Computed by binary exponentiation; Fermat's little theorem guarantees the
    value is one of the two square roots of 1 mod p.
    """
    if p == 5 or p % 2 == 0 or not is_prime(p):
        raise ValueError(f"legendre5 requires an odd prime != 5, got {p}")
    t = pow(5, (p - 1) // 2, p)
    if t == 1:
        return 1
    if t == p - 1:
        return -1
    raise AssertionError(f"5^((p-1)/2) mod {p} = {t}, so {p} is not prime")


def primes_up_to(limit: int) -> list[int]:
    """All primes <= limit, ascending (empty for limit < 2)."""
    if limit < 2:
        return []
    sieve = bytearray(b"\x01") * (limit + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, math.isqrt(limit) + 1):
        if sieve[p]:
            start = p * p
            sieve[start::p] = b"\x00" * ((limit - start) // p + 1)
    return [i for i, flag in enumerate(sieve) if flag]


def first_primes(count: int) -> list[int]:
    """The first `count` primes, ascending."""
    if count <= 0:
        return []
    # overshooting upper bound for the count-th prime, then trim
    if count < 6:
        limit = 15
    else:
        n = float(count)
        limit = int(n * (math.log(n) + math.log(math.log(n)))) + 10
    primes = primes_up_to(limit)
    while len(primes) < count:
        limit *= 2
        primes = primes_up_to(limit)
    return primes[:count]


def least_prime_factors(m: int) -> dict[int, int]:
    """Factorization of m >= 1 by trial division, as {prime: exponent} ascending."""
    if m < 1:
        raise ValueError(f"cannot factor {m}")
    factors: dict[int, int] = {}
    x = m
    for p in primes_up_to(math.isqrt(m)):
        while x % p == 0:
            factors[p] = factors.get(p, 0) + 1
            x //= p
        if x == 1:
            break
    if x > 1:
        factors[x] = factors.get(x, 0) + 1
    return factors


def divisors(m: int) -> list[int]:
    """All positive divisors of m >= 1, ascending."""
    divs = [1]
    for p, e in least_prime_factors(m).items():
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)
