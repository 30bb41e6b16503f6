"""Acceptance gate: one test per criterion, each backed by a named suite.

Every criterion prints a PASS/FAIL line (visible with `pytest -s` and in
any failure output).  Three checks compare against frozen reference data
whose published values fail independent recomputation; those are kept
verbatim and reported honestly, so three criteria are expected to stay red:

  * criterion 2: the reference table cell psi(162) = 28 (recomputed: 108,
    forced by the table's own psi(2) = 3 and psi(81) = 108);
  * criterion 3: the reference aggregate 3,969 primes with psi(p) = p + 1
    among the first 10,000 (recomputed twice, definitionally: 3,970);
  * criterion 10: the [0.69, 0.76] usage window (small qualifying primes
    provably fall outside it under the max-of-two-probes definition).

See README.md ("Known reference-data discrepancies") for the analysis.
"""

import pytest

from turkshead import verify
from turkshead.config import RunConfig

_CONFIG = RunConfig()
_CACHE: dict[str, list] = {}


def run_suite(name: str):
    if name not in _CACHE:
        _CACHE[name] = verify.run_suite(name, _CONFIG)
    return _CACHE[name]


def report(criterion: int, results) -> None:
    passed = all(res.passed for res in results)
    print(f"CRITERION {criterion}: {'PASS' if passed else 'FAIL'}")
    for res in results:
        print(f"  {res.line()}")
    assert passed, "\n".join(res.line() for res in results if not res.passed)


def test_criterion_01_formula_matches_oracle():
    report(1, run_suite("formula-oracle"))


def test_criterion_02_psi_table_reproduction():
    report(2, run_suite("psi-table"))


def test_criterion_03_prime_statistics():
    report(3, run_suite("prime-stats"))


def test_criterion_04_exact_mincol_certificates():
    report(4, run_suite("mincol-exact"))


def test_criterion_05_odd_psi_constructions():
    report(5, run_suite("odd-constructions"))


def test_criterion_06_even_psi_constructions():
    report(6, run_suite("even-constructions"))


def test_criterion_07_identity_battery():
    report(7, run_suite("identities"))


def test_criterion_08_determinants():
    report(8, run_suite("determinants"))


def test_criterion_09_nonsplit_counting():
    report(9, run_suite("nonsplit"))


def test_criterion_10_color_usage_window():
    report(10, run_suite("color-usage"))
