"""Named verification suites.

Each suite re-derives a slice of the library's behavior from an independent
direction (exhaustive enumeration, exact big-integer identities, frozen
reference data) and reports one CheckResult per logical check.  The CLI
`verify` subcommand and the acceptance tests both run these same functions.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction

from . import mincol, seq, thk, zmod
from .psi import color_usage_ratio, prime_psi_stats, psi, psi_of_prime
from .config import RunConfig

#: Frozen reference values for psi(r), 2 <= r <= 185, kept verbatim from the
#: source table this build reproduces.  Independent recomputation disagrees
#: at exactly one cell: the reference lists psi(162) = 28, but 162 = 2 * 3^4
#: and the table's own psi(2) = 3 and psi(81) = 108 force any valid index to
#: be a multiple of lcm(3, 108) = 108; both the residue-stream scan and the
#: exact big-integer scan yield 108.  The suite reports that cell as a
#: failing check rather than silently patching either side.
PSI_REFERENCE: dict[int, int] = {
    2: 3, 3: 4, 4: 3, 5: 10, 6: 12, 7: 8, 8: 6, 9: 12, 10: 30, 11: 5,
    12: 12, 13: 14, 14: 24, 15: 20, 16: 12, 17: 18, 18: 12, 19: 9, 20: 30,
    21: 8, 22: 15, 23: 24, 24: 12, 25: 50, 26: 42, 27: 36, 28: 24, 29: 7,
    30: 60, 31: 15, 32: 24, 33: 20, 34: 18, 35: 40, 36: 12, 37: 38, 38: 9,
    39: 28, 40: 30, 41: 20, 42: 24, 43: 44, 44: 15, 45: 60, 46: 24, 47: 16,
    48: 12, 49: 56, 50: 150, 51: 36, 52: 42, 53: 54, 54: 36, 55: 10, 56: 24,
    57: 36, 58: 21, 59: 29, 60: 60, 61: 30, 62: 15, 63: 24, 64: 48, 65: 70,
    66: 60, 67: 68, 68: 18, 69: 24, 70: 120, 71: 35, 72: 12, 73: 74,
    74: 114, 75: 100, 76: 9, 77: 40, 78: 84, 79: 39, 80: 60, 81: 108,
    82: 60, 83: 84, 84: 24, 85: 90, 86: 132, 87: 28, 88: 30, 89: 22,
    90: 60, 91: 56, 92: 24, 93: 60, 94: 48, 95: 90, 96: 24, 97: 98,
    98: 168, 99: 60, 100: 150, 101: 25, 102: 36, 103: 104, 104: 42,
    105: 40, 106: 54, 107: 36, 108: 36, 109: 54, 110: 30, 111: 76,
    112: 24, 113: 38, 114: 36, 115: 120, 116: 21, 117: 84, 118: 87,
    119: 72, 120: 60, 121: 55, 122: 30, 123: 20, 124: 15, 125: 250,
    126: 24, 127: 128, 128: 96, 129: 44, 130: 210, 131: 65, 132: 60,
    133: 72, 134: 204, 135: 180, 136: 18, 137: 138, 138: 24, 139: 23,
    140: 120, 141: 16, 142: 105, 143: 70, 144: 12, 145: 70, 146: 222,
    147: 56, 148: 114, 149: 74, 150: 300, 151: 25, 152: 18, 153: 36,
    154: 120, 155: 30, 156: 84, 157: 158, 158: 39, 159: 108, 160: 120,
    161: 24, 162: 28, 163: 164, 164: 60, 165: 20, 166: 84, 167: 168,
    168: 24, 169: 182, 170: 90, 171: 36, 172: 132, 173: 174, 174: 84,
    175: 200, 176: 60, 177: 116, 178: 66, 179: 89, 180: 60, 181: 45,
    182: 168, 183: 60, 184: 24, 185: 190,
}

#: Reference aggregate for the prime sweep: reported count of primes with
#: psi(p) = p + 1 among the first 10,000.  Independent recomputation (both
#: the divisor route and the definitional residue-stream scan, which agree
#: on every individual prime) yields 3,970; the discrepancy is reported as
#: a failing check, not patched.
PRIME_STATS_REFERENCE_10000 = 3969

#: Reference envelope for the color-usage probe ratios.
USAGE_WINDOW = (Fraction(69, 100), Fraction(76, 100))


@dataclass(frozen=True)
class CheckResult:
    suite: str
    name: str
    passed: bool
    detail: str

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.suite}/{self.name}: {self.detail}"


def _result(suite: str, name: str, failures: list[str], detail_ok: str) -> CheckResult:
    if failures:
        shown = "; ".join(failures[:6])
        more = f" (+{len(failures) - 6} more)" if len(failures) > 6 else ""
        return CheckResult(suite, name, False, shown + more)
    return CheckResult(suite, name, True, detail_ok)


# -- suite 1: counting formula vs exhaustive oracle ----------------------------

def suite_formula_oracle(config: RunConfig) -> list[CheckResult]:
    started = time.perf_counter()
    failures = []
    pairs = 0
    for n in range(1, 13):
        for r in range(2, 17):
            pairs += 1
            expected = mincol.count_colorings(n, r)
            actual = len(thk.enumerate_colorings(n, r, config.brute_force_budget))
            if expected != actual:
                failures.append(f"(n={n}, r={r}): formula {expected} != oracle {actual}")
    elapsed = time.perf_counter() - started
    return [
        _result(
            "formula-oracle",
            "count-grid",
            failures,
            f"{pairs} (n, r) pairs agree with exhaustive enumeration [{elapsed:.1f}s]",
        )
    ]


# -- suite 2: psi reference table ----------------------------------------------

def suite_psi_table(config: RunConfig) -> list[CheckResult]:
    started = time.perf_counter()
    failures = []
    for r, expected in sorted(PSI_REFERENCE.items()):
        actual = psi(r, config.psi_scan_cap).psi
        if actual != expected:
            failures.append(
                f"psi({r}) computed {actual}, reference {expected}"
                + (
                    "; reference cell is internally inconsistent: "
                    "162 = 2*3^4 with psi(2)=3, psi(81)=108 forces a multiple of 108"
                    if r == 162
                    else ""
                )
            )
    elapsed = time.perf_counter() - started
    return [
        _result(
            "psi-table",
            "reference-2-to-185",
            failures,
            f"all {len(PSI_REFERENCE)} reference values reproduced [{elapsed:.1f}s]",
        )
    ]


# -- suite 3: prime statistics ---------------------------------------------------

def suite_prime_stats(config: RunConfig) -> list[CheckResult]:
    started = time.perf_counter()
    small = prime_psi_stats(1000, workers=config.worker_count)
    window_ok = 0.37 <= small.ratio <= 0.42
    small_check = CheckResult(
        "prime-stats",
        "first-1000-window",
        window_ok,
        f"matched {small.matched}/1000, ratio {float(small.ratio):.4f} "
        f"{'inside' if window_ok else 'outside'} [0.37, 0.42]",
    )
    full = prime_psi_stats(10000, workers=config.worker_count)
    elapsed = time.perf_counter() - started
    exact_ok = full.matched == PRIME_STATS_REFERENCE_10000
    detail = (
        f"matched {full.matched}/10000 vs reference {PRIME_STATS_REFERENCE_10000} "
        f"[{elapsed:.1f}s]"
    )
    if not exact_ok:
        detail += (
            "; recomputation is confirmed prime-by-prime by the definitional "
            "residue-stream scan, which also gives 3970"
        )
    full_check = CheckResult("prime-stats", "first-10000-exact", exact_ok, detail)
    return [small_check, full_check]


# -- suite 4: exact mincol verdicts with certificates ---------------------------

_EXACT_CASES = (
    # (n, r, exact value, witness palette attainable on the standard diagram)
    (3, 2, 2, 2),
    (4, 3, 3, 3),
    (2, 5, 4, 4),
    (8, 7, 4, 7),
    (5, 11, 5, 5),
    (85, 143, 5, 5),
)


def suite_mincol_exact(config: RunConfig) -> list[CheckResult]:
    started = time.perf_counter()
    failures = []
    for n, r, expected, witness_palette in _EXACT_CASES:
        verdict = mincol.mincol_exact(n, r, config.brute_force_budget)
        if verdict.kind != "exact" or verdict.lower != expected or verdict.upper != expected:
            failures.append(f"({n}, {r}): verdict {verdict.kind} [{verdict.lower}, {verdict.upper}]")
            continue
        witness = verdict.witness
        if witness is None or not witness.validate() or witness.is_trivial:
            failures.append(f"({n}, {r}): witness missing or invalid")
            continue
        if not thk.is_coloring(witness.n, witness.r, witness.input_triple):
            failures.append(f"({n}, {r}): witness fails the closure test")
            continue
        if thk.distinct_colors(witness) != witness_palette:
            failures.append(
                f"({n}, {r}): witness uses {thk.distinct_colors(witness)} colors, "
                f"expected {witness_palette}"
            )
    # the one case whose witness exceeds the verdict: confirm the standard
    # diagram truly cannot do better than 7 there
    best = thk.min_colors_standard(8, 7, config.brute_force_budget)
    if best is None or best[0] != 7:
        failures.append(f"standard-diagram minimum for (8, 7) is {best and best[0]}, expected 7")
    elapsed = time.perf_counter() - started
    return [
        _result(
            "mincol-exact",
            "dual-certificates",
            failures,
            "6 exact verdicts certified; (8, 7) witness floor on standard "
            f"diagrams confirmed at 7 [{elapsed:.1f}s]",
        )
    ]


# -- suites 5 and 6: explicit constructions -------------------------------------

def _primes_with_psi_parity(limit: int, want_odd: bool) -> list[tuple[int, int]]:
    out = []
    for p in zmod.primes_up_to(limit):
        if p <= 5:
            continue
        q = psi_of_prime(p).psi
        if (q % 2 == 1) == want_odd:
            out.append((p, q))
    return out


def suite_odd_constructions(config: RunConfig) -> list[CheckResult]:
    started = time.perf_counter()
    failures = []
    cases = _primes_with_psi_parity(200, want_odd=True)
    for p, q in cases:
        try:
            col = mincol.construct_odd_psi(p)
        except AssertionError as exc:
            failures.append(f"p={p}: {exc}")
            continue
        palette = thk.distinct_colors(col)
        if not col.validate() or col.is_trivial:
            failures.append(f"p={p}: invalid or trivial coloring")
        if not thk.is_circular_shift(col.x_sequence, col.z_sequence):
            failures.append(f"p={p}: right side is not a shift of the left")
        if palette > q:
            failures.append(f"p={p}: palette {palette} exceeds psi = {q}")
        if p > 11:
            branch = (p + 1) // 2 if zmod.legendre5(p) == -1 else (p - 1) // 2
            if palette > branch:
                failures.append(f"p={p}: palette {palette} exceeds branch bound {branch}")
        if p == 11 and col.colors_used != [0, 1, 2, 4, 7]:
            failures.append(f"p=11: palette {col.colors_used} != [0, 1, 2, 4, 7]")
    elapsed = time.perf_counter() - started
    return [
        _result(
            "odd-constructions",
            "primes-to-200",
            failures,
            f"{len(cases)} odd-psi primes certified [{elapsed:.1f}s]",
        )
    ]


def suite_even_constructions(config: RunConfig) -> list[CheckResult]:
    started = time.perf_counter()
    failures = []
    cases = _primes_with_psi_parity(200, want_odd=False)
    for p, q in cases:
        try:
            col = mincol.construct_even_psi(p)
        except AssertionError as exc:
            failures.append(f"p={p}: {exc}")
            continue
        palette = thk.distinct_colors(col)
        bound = q - 1 if q % 4 == 0 else q - 5
        if not col.validate() or col.is_trivial:
            failures.append(f"p={p}: invalid or trivial coloring")
        if palette > bound:
            failures.append(f"p={p}: palette {palette} exceeds bound {bound}")
        if p == 7 and palette != 7:
            failures.append(f"p=7: palette {palette} != 7")
    elapsed = time.perf_counter() - started
    return [
        _result(
            "even-constructions",
            "primes-to-200",
            failures,
            f"{len(cases)} even-psi primes certified [{elapsed:.1f}s]",
        )
    ]


# -- suite 7: identity battery ---------------------------------------------------

def suite_identities(config: RunConfig) -> list[CheckResult]:
    started = time.perf_counter()
    results = []

    failures = [f"n={n}" for n in range(-20, 61) if seq.u(n) != -seq.u(-n - 2)]
    results.append(_result("identities", "u-reflection", failures, "n in [-20, 60]"))

    failures = []
    for n in range(0, 61):
        exact = seq.u(n)
        approx = seq.binet_u(n)
        tol = 1e-9 if n <= 40 else 1e-7
        if abs(approx - exact) > tol * max(1.0, abs(exact)):
            failures.append(f"n={n}: {approx} vs {exact}")
    results.append(_result("identities", "binet-closed-form", failures, "n in [0, 60]"))

    failures = [f"n={n}" for n in range(-10, 31) if not seq.check_sum_identity(n)]
    results.append(_result("identities", "sum-identities", failures, "indices in [-20, 62]"))

    failures = []
    for m in range(-30, 31):
        for n in range(-30, 31):
            if seq.check_product_identity(m, n) is False:
                failures.append(f"(m={m}, n={n})")
    results.append(_result("identities", "product-identities", failures, "|m|, |n| <= 30"))

    failures = [f"n={n}" for n in range(0, 61) if not seq.check_uv_factorization(n)]
    results.append(_result("identities", "uv-factorization", failures, "n in [0, 60]"))

    failures = []
    for n in range(-20, 61):
        a_n, a_prev = thk.matrix_entry_a(n), thk.matrix_entry_a(n - 1)
        b_n, b_prev = thk.matrix_entry_b(n), thk.matrix_entry_b(n - 1)
        if a_n - a_prev - b_n != 1 or b_n - b_prev - a_prev != -1:
            failures.append(f"n={n}")
    results.append(_result("identities", "index-identities", failures, "n in [-20, 60]"))

    failures = []
    for n in range(-20, 41):
        if thk.transfer_matrix(n).entries != thk.c_power_iterated(n):
            failures.append(f"n={n}")
    results.append(
        _result("identities", "closed-form-exact", failures, "integer powers, n in [-20, 40]")
    )

    failures = []
    for r in (2, 3, 5, 7, 16, 50):
        power = ((1 % r, 0, 0), (0, 1 % r, 0), (0, 0, 1 % r))
        block = tuple(tuple(x % r for x in row) for row in thk.C_BLOCK)
        for n in range(0, 501):
            if thk.transfer_matrix(n, r).entries != power:
                failures.append(f"(n={n}, r={r})")
                break
            power = thk._mat_mul(power, block, r)
    results.append(
        _result("identities", "closed-form-mod", failures, "n in [0, 500], six moduli")
    )

    failures = []
    cache = {k: thk.transfer_matrix(k).entries for k in range(-40, 41)}
    for a in range(-20, 21):
        for b in range(-20, 21):
            if thk._mat_mul(cache[a], cache[b]) != cache[a + b]:
                failures.append(f"(a={a}, b={b})")
    results.append(_result("identities", "power-group-law", failures, "a, b in [-20, 20]"))

    failures = []
    for n in range(-20, 61):
        m = thk.transfer_matrix(n).entries
        fixed = tuple(m[0][j] - m[1][j] + m[2][j] for j in range(3))
        det = (
            m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
        )
        if fixed != (1, -1, 1) or det != 1:
            failures.append(f"n={n}")
    results.append(
        _result("identities", "fixed-vector-and-determinant", failures, "n in [-20, 60]")
    )

    failures = []
    probes = [(0, 1, 0), (1, 2, 0), (1, 7, 0), (3, 1, 4), (0, 0, 1)]
    for r in (None, 2, 3, 5, 7, 11, 16, 50):
        for probe in probes:
            levels = thk.propagate(probe, r, 60)
            a, b, c = levels[0]
            invariant = a - b + c if r is None else (a - b + c) % r
            for k, (x, y, z) in enumerate(levels):
                value = x - y + z if r is None else (x - y + z) % r
                if value != invariant:
                    failures.append(f"(r={r}, probe={probe}, level={k}): level invariant")
                    break
                if k >= 1 and y != levels[k - 1][0]:
                    failures.append(f"(r={r}, probe={probe}, level={k}): middle strand lag")
                    break
                if k >= 2:
                    rhs = 3 * levels[k - 1][0] - levels[k - 2][0] - a + b - c
                    ok = (x - rhs) % r == 0 if r else x == rhs
                    if not ok:
                        failures.append(f"(r={r}, probe={probe}, level={k}): three-term")
                        break
                if k >= 3:
                    rhs = (
                        4 * levels[k - 1][0]
                        - 4 * levels[k - 2][0]
                        + levels[k - 3][0]
                    )
                    ok = (x - rhs) % r == 0 if r else x == rhs
                    if not ok:
                        failures.append(f"(r={r}, probe={probe}, level={k}): four-term")
                        break
    results.append(
        _result("identities", "trace-recurrences", failures, "five probes, eight moduli, 60 levels")
    )

    failures = []
    for r in range(2, 51):
        stream = seq.u_mod_stream(r)
        for n in range(0, 501):
            got = next(stream)
            if got != seq.u(n) % r or got != seq.u_mod(n, r):
                failures.append(f"(n={n}, r={r})")
                break
    results.append(
        _result("identities", "mod-stream-agreement", failures, "n in [0, 500], r in [2, 50]")
    )

    elapsed = time.perf_counter() - started
    results.append(
        CheckResult("identities", "elapsed", True, f"battery completed in {elapsed:.1f}s")
    )
    return results


# -- suite 8: determinants -------------------------------------------------------

def suite_determinants(config: RunConfig) -> list[CheckResult]:
    failures = []
    expected = {1: 1, 2: 5, 3: 16, 4: 45}
    for n, value in expected.items():
        got = mincol.determinant(n).value
        if got != value:
            failures.append(f"det(n={n}) = {got}, expected {value}")
    for n in range(1, 201):
        if mincol.determinant(n).value == 0:
            failures.append(f"det(n={n}) vanished")
    for n in range(3, 201):
        if not (seq.u(n) > 0 and seq.u(n) > seq.u(n - 2)):
            failures.append(f"monotonicity broken at n={n}")
    for n in range(0, 41):
        if abs(seq.binet_u(n) - seq.u(n)) > 1e-9 * max(1.0, abs(seq.u(n))):
            failures.append(f"binet drift at n={n}")
    return [
        _result(
            "determinants",
            "values-positivity-binet",
            failures,
            "n in {1..4} pinned; nonzero and monotone to n = 200; binet to n = 40",
        )
    ]


# -- suite 9: non-splitness counting consequence ---------------------------------

def suite_nonsplit(config: RunConfig) -> list[CheckResult]:
    failures = []
    for n in range(1, 9):
        floor = max(5, seq.u(n - 1))
        r = floor + 1
        while not zmod.is_prime(r):
            r += 1
        count = mincol.count_colorings(n, r)
        if count != r:
            failures.append(f"(n={n}, r={r}): formula count {count} != {r}")
            continue
        colorings = thk.enumerate_colorings(n, r, config.brute_force_budget)
        if len(colorings) != r or any(not col.is_trivial for col in colorings):
            failures.append(f"(n={n}, r={r}): oracle found nontrivial colorings")
    return [
        _result(
            "nonsplit",
            "minimal-count-at-large-prime",
            failures,
            "n in [1, 8]: smallest prime above max(5, u_{n-1}) yields exactly r trivial colorings",
        )
    ]


# -- suite 10: color-usage ratios -------------------------------------------------

def first_usage_primes(count: int) -> list[int]:
    """First `count` primes p > 7 with psi(p) = p + 1."""
    limit = 512
    while True:
        out = []
        for p in zmod.primes_up_to(limit):
            if p > 7 and psi_of_prime(p).psi == p + 1:
                out.append(p)
                if len(out) == count:
                    return out
        limit *= 2


def suite_color_usage(config: RunConfig) -> list[CheckResult]:
    started = time.perf_counter()
    lo, hi = USAGE_WINDOW
    failures = []
    ratios = []
    for p in first_usage_primes(25):
        ratio = color_usage_ratio(p)
        ratios.append(ratio)
        if not lo <= ratio <= hi:
            failures.append(f"p={p}: ratio {float(ratio):.4f} outside [{float(lo)}, {float(hi)}]")
    spread = f"observed range [{float(min(ratios)):.4f}, {float(max(ratios)):.4f}]"
    elapsed = time.perf_counter() - started
    if failures:
        failures.append(spread)
    return [
        _result(
            "color-usage",
            "first-25-window",
            failures,
            f"25 ratios inside [{float(lo)}, {float(hi)}]; {spread} [{elapsed:.1f}s]",
        )
    ]


SUITES = {
    "formula-oracle": suite_formula_oracle,
    "psi-table": suite_psi_table,
    "prime-stats": suite_prime_stats,
    "mincol-exact": suite_mincol_exact,
    "odd-constructions": suite_odd_constructions,
    "even-constructions": suite_even_constructions,
    "identities": suite_identities,
    "determinants": suite_determinants,
    "nonsplit": suite_nonsplit,
    "color-usage": suite_color_usage,
}


def run_suite(name: str, config: RunConfig | None = None) -> list[CheckResult]:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    return SUITES[name](config or RunConfig())


def run_all(config: RunConfig | None = None) -> list[CheckResult]:
    config = config or RunConfig()
    results = []
    for name in SUITES:
        results.extend(SUITES[name](config))
    return results
