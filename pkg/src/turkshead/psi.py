"""The psi map: first appearance of a modulus as a divisor in the u sequence.

psi(r) is the least q >= 1 with r | u_{q-1}.  It always exists: the residue
stream of u mod r is periodic (it is determined by four consecutive terms,
of which there are finitely many combinations), and u_{-1} = 0 sits inside
the period.  psi governs which THK(3, n) admit nontrivial r-colorings: for
prime r other than 5, THK(3, psi(r)) is the shortest braid with one.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from . import seq, thk, zmod
from .config import DEFAULT_PSI_SCAN_CAP, BudgetExceededError

#: Outcomes of the prime divisibility dichotomy for psi(p).
DIVIDES_P_PLUS_1 = "divides_p_plus_1"
DIVIDES_HALF_P_MINUS_1 = "divides_half_p_minus_1"


@dataclass(frozen=True)
class PsiValue:
    r: int
    psi: int
    steps_scanned: int

    def to_json_dict(self) -> dict:
        return {"r": self.r, "psi": self.psi, "steps_scanned": self.steps_scanned}


def psi(r: int, cap: int = DEFAULT_PSI_SCAN_CAP) -> PsiValue:
    """First q with r | u_{q-1}, found by scanning the residue stream.

    Errors out at the scan cap rather than ever returning a wrong answer;
    the pigeonhole bound r^4 + 1 guarantees termination below any sane cap.
    """
    zmod.check_modulus(r)
    stream = seq.u_mod_stream(r)
    for index, residue in enumerate(stream):
        if index >= cap:
            raise BudgetExceededError(
                f"psi({r}) not found within the scan cap {cap}"
            )
        if residue == 0:
            return PsiValue(r, index + 1, index + 1)
    raise AssertionError("unreachable")


def psi_of_prime(p: int, cap: int = DEFAULT_PSI_SCAN_CAP) -> PsiValue:
    """psi at a prime, via the divisibility dichotomy instead of a long scan.

    For an odd prime p != 5, psi(p) divides p+1 or (p-1)/2 according to the
    sign of 5^((p-1)/2) mod p, and every index q with p | u_{q-1} is a
    multiple of psi(p); so psi(p) is the least divisor d of the applicable
    bound with u_{d-1} == 0 mod p.  Checking one divisor costs O(log p), so
    this stays fast even across large prime sweeps.  Agrees with the stream
    scan everywhere (see tests); p = 2 and p = 5 just scan.
    """
    if not zmod.is_prime(p):
        raise ValueError(f"psi_of_prime needs a prime, got {p}")
    if p in (2, 5):
        return psi(p, cap)
    bound = p + 1 if zmod.legendre5(p) == -1 else (p - 1) // 2
    if bound > cap:
        raise BudgetExceededError(f"psi({p}) search bound {bound} exceeds cap {cap}")
    candidates = zmod.divisors(bound)
    for steps, d in enumerate(candidates, start=1):
        if seq.u_mod(d - 1, p) == 0:
            return PsiValue(p, d, steps)
    raise AssertionError(f"no divisor of {bound} works for p = {p}")


def psi_divides(r: int, m: int, cap: int = DEFAULT_PSI_SCAN_CAP) -> bool:
    """Whether psi(r) divides m; equivalent to r | u_{m-1}."""
    if m < 1:
        raise ValueError(f"index must be positive, got {m}")
    return m % psi(r, cap).psi == 0


def psi_prime_bound(p: int) -> str:
    """Which divisibility branch psi(p) falls in, for an odd prime p != 5.

    Returns DIVIDES_P_PLUS_1 when 5^((p-1)/2) == -1 mod p, else
    DIVIDES_HALF_P_MINUS_1; the claimed divisibility is asserted against
    the actually computed psi(p).
    """
    branch = DIVIDES_P_PLUS_1 if zmod.legendre5(p) == -1 else DIVIDES_HALF_P_MINUS_1
    value = psi_of_prime(p).psi
    target = p + 1 if branch == DIVIDES_P_PLUS_1 else (p - 1) // 2
    if target % value != 0:
        raise AssertionError(
            f"psi({p}) = {value} does not divide {target} as the branch demands"
        )
    return branch


def p_divides_u(p: int) -> tuple[bool, bool]:
    """Direct tests (p | u_p, p | u_{(p-3)/2}) for an odd prime p != 5.

    Exactly one of the two holds, matching the sign of 5^((p-1)/2) mod p;
    that correspondence is asserted here.
    """
    leg = zmod.legendre5(p)
    at_p = seq.u_mod(p, p) == 0
    at_half = seq.u_mod((p - 3) // 2, p) == 0
    if at_p != (leg == -1) or at_half != (leg == 1):
        raise AssertionError(f"divisibility pattern at p = {p} defies the dichotomy")
    return at_p, at_half


def min_common_prime_psi(n: int, r: int) -> int | None:
    """The common prime factor (> 5) of u_{n-1} and r minimizing psi.

    Requires gcd(u_{n-1}, r) > 1.  Ties in psi break toward the smaller
    prime.  Returns None when no common prime factor exceeds 5.
    """
    zmod.check_modulus(r)
    g = math.gcd(seq.u_mod(n - 1, r), r)
    if g <= 1:
        raise ValueError(f"u_{{{n-1}}} and {r} share no common factor")
    candidates = [p for p in zmod.least_prime_factors(g) if p > 5]
    if not candidates:
        return None
    return min(candidates, key=lambda p: (psi_of_prime(p).psi, p))


# -- prime statistics ----------------------------------------------------------

@dataclass(frozen=True)
class PrimeStats:
    prime_count: int
    matched: int
    ratio: Fraction

    def to_json_dict(self) -> dict:
        return {
            "count": self.prime_count,
            "matched": self.matched,
            "ratio": float(self.ratio),
        }


def _count_matched(primes: list[int]) -> int:
    return sum(1 for p in primes if psi_of_prime(p).psi == p + 1)


def prime_psi_stats(count: int, workers: int = 1) -> PrimeStats:
    """How many of the first `count` primes have psi(p) = p + 1.

    psi is computed fully for every prime (the divisor route still returns
    the true minimum, not just a test at one index).  With workers > 1 the
    primes are sharded into contiguous ranges whose tallies are summed, so
    the result is independent of the worker count.
    """
    if count < 1:
        raise ValueError("prime count must be positive")
    primes = zmod.first_primes(count)
    if workers <= 1 or count < 64:
        matched = _count_matched(primes)
    else:
        chunk = -(-len(primes) // workers)
        shards = [primes[i : i + chunk] for i in range(0, len(primes), chunk)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            matched = sum(pool.map(_count_matched, shards))
    return PrimeStats(count, matched, Fraction(matched, count))


def color_usage_ratio(p: int) -> Fraction:
    """Fraction of the p available colors used by the two probe colorings.

    For a prime p > 7 with psi(p) = p + 1, every input colors THK(3, psi(p))
    mod p; this propagates the probes (0, 1, 0) and (1, 2, 0) and returns
    the larger palette size divided by p.
    """
    if not zmod.is_prime(p) or p <= 7:
        raise ValueError(f"need a prime greater than 7, got {p}")
    value = psi_of_prime(p).psi
    if value != p + 1:
        raise ValueError(f"psi({p}) = {value} != {p + 1}; ratio not defined here")
    palettes = [
        thk.distinct_colors(thk.Coloring.from_input(value, p, probe))
        for probe in ((0, 1, 0), (1, 2, 0))
    ]
    return Fraction(max(palettes), p)
