"""Acceptance suite: one test per criterion, one printed line per criterion.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines.
Every assertion is exact; the timed criteria assert their stated budgets.
"""

import subprocess
import sys
from time import perf_counter

import pytest

from qcatalan import verify, words
from qcatalan.catalan import (
    catalan_number,
    q_catalan,
    q_catalan_by_enumeration,
)
from qcatalan.inject import inject
from qcatalan.poly import Poly
from qcatalan.verify import (
    audit_injection,
    definition_critique,
    naive_counterexample,
    sharpness_check,
    sweep,
)

WORKED_PI = "112112221122"
WORKED_SIGMA = "12111212212212"


@pytest.fixture(scope="module", autouse=True)
def warm_kernels():
    # JIT compilation happens once, outside any criterion's budget
    words.enumerate_matrix(3)
    audit_injection(2, 2, 1)
    yield


def criterion(number, description, budget, body):
    start = perf_counter()
    try:
        body()
    except BaseException:
        print(f"criterion {number:2d} [{description}]: FAIL")
        raise
    elapsed = perf_counter() - start
    print(f"criterion {number:2d} [{description}]: PASS ({elapsed:.2f}s)")
    if budget is not None:
        assert elapsed < budget, f"criterion {number} took {elapsed:.2f}s, budget {budget}s"


def test_c01_known_polynomial_values():
    expected = [
        [1],
        [1],
        [1, 1],
        [1, 1, 2, 1],
        [1, 1, 2, 3, 3, 3, 1],
    ]

    def body():
        for n, coeffs in enumerate(expected):
            assert q_catalan(n) == Poly(coeffs), f"n={n}"

    criterion(1, "known polynomial values n<=4", 1.0, body)


def test_c02_enumeration_oracle_equivalence():
    def body():
        assert len(words.enumerate_words(10)) == 16796
        for n in range(11):
            assert q_catalan_by_enumeration(n) == q_catalan(n), f"n={n}"

    criterion(2, "recursion equals enumeration n<=10", 10.0, body)


def test_c03_catalan_number_cross_check():
    import math

    def body():
        for n in range(31):
            value = catalan_number(n)
            assert q_catalan(n).eval_one() == value, f"n={n}"
            assert value == math.comb(2 * n, n) // (n + 1), f"n={n}"

    criterion(3, "three-way Catalan number check n<=30", 30.0, body)


def test_c04_theorem_sweep():
    def body():
        reports = sweep(25, 25, 1)
        assert len(reports) == 25 * 26 // 2
        bad = [rep for rep in reports if not rep.nonneg]
        assert not bad, f"negative gap cells: {[(r.k, r.l) for r in bad]}"

    criterion(4, "r=1 gap nonneg for k<=l<=25", 60.0, body)


def test_c05_corollary_sweep_with_sharpness():
    def body():
        reports = sweep(12, 12, 12)
        for rep in reports:
            assert rep.nonneg, f"negative gap at ({rep.k},{rep.l},{rep.r})"
            sharp = sharpness_check(rep.k, rep.l, rep.r)
            assert sharp.degree_equal, f"degree mismatch at ({rep.k},{rep.l},{rep.r})"
            assert sharp.bumped_fails, f"bumped exponent survives at ({rep.k},{rep.l},{rep.r})"

    criterion(5, "general gap nonneg + sharp for r<=k<=12, l<=12", 60.0, body)


def test_c06_exhaustive_injection_audit():
    def body():
        for k in range(1, 7):
            for l in range(k, 7):
                for r in range(1, k + 1):
                    rep = audit_injection(k, l, r)
                    assert rep.pairs_checked == catalan_number(k) * catalan_number(l)
                    assert rep.injective, f"not injective at ({k},{l},{r})"
                    assert rep.shift_ok, f"wrong shift at ({k},{l},{r})"
                    assert rep.matches_gap, f"complement != gap at ({k},{l},{r})"

    criterion(6, "exhaustive audit for r<=k<=l<=6", 120.0, body)


def test_c07_worked_example():
    def body():
        result = inject(WORKED_PI, WORKED_SIGMA, r=2)
        assert result.nu == "12121122"
        assert result.omega == "112112211212212212"
        assert words.inversions(WORKED_PI) == 10
        assert words.inversions(WORKED_SIGMA) == 15
        assert words.inversions(result.nu) == 5
        assert words.inversions(result.omega) == 26
        assert result.shift_exponent == 6
        assert 10 + 15 + 6 == 5 + 26

    criterion(7, "worked two-step injection", None, body)


def test_c08_counterexamples():
    def conv_ref(a, b):
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] += x * y
        return out

    def first_negative_ref(coeffs):
        for d, c in enumerate(coeffs):
            if c < 0:
                return (d, c)
        return None

    def body():
        # independent convolution oracle on the frozen small polynomials
        c2, c3, c4 = [1, 1], [1, 1, 2, 1], [1, 1, 2, 3, 3, 3, 1]
        oracle_gap = [
            x - y for x, y in zip(conv_ref(c2, c4), conv_ref(c3, c3) + [0])
        ]
        assert first_negative_ref(oracle_gap) == (2, -2)
        rep = naive_counterexample()
        assert rep.first_violation == (2, -2)
        assert rep.gap == Poly(oracle_gap)
        assert rep.adjacent_all_nonneg

        critique = definition_critique()
        assert critique.adjacent_nonneg == (True, True)
        assert not critique.cross_nonneg
        p0, p1, p2, p3 = [list(p.coeffs) for p in critique.polys]
        oracle_cross = [
            x - y
            for x, y in zip(
                conv_ref(p0, p3), conv_ref(p1, p2) + [0] * (len(p0) + len(p3) - len(p1) - len(p2))
            )
        ]
        assert first_negative_ref(oracle_cross) is not None
        assert critique.cross_gap == Poly(oracle_cross)

    criterion(8, "both counterexamples behave as stated", None, body)


def test_c09_monotone_growth():
    def body():
        for n in range(31):
            assert (q_catalan(n + 1) - q_catalan(n)).is_nonneg(), f"n={n}"

    criterion(9, "nondecreasing polynomials n<=30", 30.0, body)


def test_c10_cli_determinism():
    commands = [
        ["poly", "8", "--json"],
        ["enumerate", "4"],
        ["inject", WORKED_PI, WORKED_SIGMA, "--r", "2", "--json"],
        ["render", WORKED_PI, WORKED_SIGMA, "--r", "2", "--svg"],
        ["render", WORKED_PI, WORKED_SIGMA, "--r", "2", "--ascii", "--stage", "after"],
        ["verify", "corollary", "--kmax", "4", "--rmax", "2", "--json"],
        ["verify", "counterexamples", "--json"],
    ]

    def run(argv):
        return subprocess.run(
            [sys.executable, "-m", "qcatalan", *argv], capture_output=True
        )

    def body():
        for argv in commands:
            first = run(argv)
            second = run(argv)
            assert first.returncode == 0, (argv, first.stderr)
            assert first.returncode == second.returncode
            assert first.stdout == second.stdout, f"nondeterministic: {argv}"

    criterion(10, "byte-identical repeated CLI runs", None, body)
