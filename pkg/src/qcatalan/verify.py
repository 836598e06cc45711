"""Machine verification of the q-Catalan log-convexity statements.

The central object is the gap polynomial

    gap(k, l, r) = C_{k-r}(q) C_{l+r}(q) - q^(r(l-k+r)) C_k(q) C_l(q)

whose coefficientwise nonnegativity is the two-index log-convexity
statement.  This module checks it cell by cell, checks that the exponent
is sharp, audits the combinatorial injection exhaustively against the gap
(the complement of the injection's image must reproduce the gap
coefficient by coefficient), and reproduces the two counterexamples that
delimit the statement.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional, Sequence, Union

import numpy as np

from . import words
from ._kernels import audit_batch, inv_rows
from .catalan import q_catalan
from .inject import InvariantBreachError
from .poly import Poly

AUDIT_DEFAULT_CAP = 8


@dataclass(frozen=True)
class GapReport:
    """A verified gap polynomial for one (k, l, r) cell."""

    k: int
    l: int
    r: int
    gap: Poly
    nonneg: bool
    first_violation: Optional[tuple[int, int]]
    degrees: tuple[int, int]


@dataclass(frozen=True)
class SharpnessReport:
    """Degree equality and failure of the exponent bumped by one."""

    k: int
    l: int
    r: int
    degree_equal: bool
    bumped_fails: bool


@dataclass(frozen=True)
class AuditReport:
    """Exhaustive injection audit for one (k, l, r) cell."""

    k: int
    l: int
    r: int
    pairs_checked: int
    injective: bool
    shift_ok: bool
    complement_poly: Poly
    matches_gap: bool

    @property
    def ok(self) -> bool:
        return self.injective and self.shift_ok and self.matches_gap


@dataclass(frozen=True)
class NaiveProductReport:
    """The unshifted product gap that fails, next to the shifted adjacent
    gaps that hold."""

    gap: Poly
    nonneg: bool
    first_violation: Optional[tuple[int, int]]
    adjacent_max_k: int
    adjacent_all_nonneg: bool

    @property
    def as_expected(self) -> bool:
        return (not self.nonneg) and self.adjacent_all_nonneg


@dataclass(frozen=True)
class CritiqueReport:
    """Four polynomials whose adjacent gaps are nonnegative while a
    two-index gap is not, showing the adjacent condition is weaker."""

    polys: tuple[Poly, Poly, Poly, Poly]
    adjacent_nonneg: tuple[bool, bool]
    cross_gap: Poly
    cross_nonneg: bool
    cross_first_violation: Optional[tuple[int, int]]

    @property
    def as_expected(self) -> bool:
        return all(self.adjacent_nonneg) and not self.cross_nonneg


def _check_cell(k: int, l: int, r: int) -> None:
    if not 1 <= r <= k:
        raise ValueError(f"need 1 <= r <= k, got r={r}, k={k}")
    if l <= k - r:
        raise ValueError(f"need l > k - r, got k={k}, l={l}, r={r}")


def corollary_gap(k: int, l: int, r: int) -> GapReport:
    """Gap polynomial for general step r (1 <= r <= k, l > k - r)."""
    _check_cell(k, l, r)
    minuend = q_catalan(k - r) * q_catalan(l + r)
    shifted = (q_catalan(k) * q_catalan(l)).shift(r * (l - k + r))
    gap = minuend - shifted
    return GapReport(
        k=k,
        l=l,
        r=r,
        gap=gap,
        nonneg=gap.is_nonneg(),
        first_violation=gap.first_negative(),
        degrees=(int(minuend.degree), int(shifted.degree)),
    )


def theorem_gap(k: int, l: int) -> GapReport:
    """Gap polynomial for the r = 1 case (requires 1 <= k <= l)."""
    if not 1 <= k <= l:
        raise ValueError(f"need 1 <= k <= l, got k={k}, l={l}")
    return corollary_gap(k, l, 1)


def sharpness_check(k: int, l: int, r: int) -> SharpnessReport:
    """Confirm the shift exponent r(l - k + r) cannot be raised.

    Degree equality follows from deg C_n = n(n-1)/2; bumping the exponent
    by one must leave a negative top coefficient, both sides being monic.
    """
    _check_cell(k, l, r)

    def choose2(n: int) -> int:
        return n * (n - 1) // 2

    exponent = r * (l - k + r)
    formula_equal = choose2(k - r) + choose2(l + r) == exponent + choose2(k) + choose2(l)
    minuend = q_catalan(k - r) * q_catalan(l + r)
    shifted = (q_catalan(k) * q_catalan(l)).shift(exponent)
    degree_equal = formula_equal and minuend.degree == shifted.degree
    bumped = minuend - (q_catalan(k) * q_catalan(l)).shift(exponent + 1)
    bumped_fails = bumped.leading_coefficient < 0
    return SharpnessReport(
        k=k, l=l, r=r, degree_equal=degree_equal, bumped_fails=bumped_fails
    )


def audit_injection(k: int, l: int, r: int, max_n: int | None = None) -> AuditReport:
    """Exhaustively audit the injection on P_k x P_l with step r.

    Applies the map to every pair, verifies output validity and the exact
    inversion shift, checks injectivity, and reconciles the complement of
    the image (as a generating polynomial of inversion sums) against the
    gap polynomial.  The domain is capped at k, l <= 8 by default; pass
    ``max_n`` to override.
    """
    _check_cell(k, l, r)
    cap = AUDIT_DEFAULT_CAP if max_n is None else max_n
    if max(k, l) > cap:
        raise ValueError(
            f"audit of P_{k} x P_{l} exceeds the cap {cap}; pass max_n to override"
        )
    pk = words.enumerate_matrix(k, max_n)
    pl = words.enumerate_matrix(l, max_n)
    keys, inv_sums, status = audit_batch(pk, pl, r)
    bad = np.nonzero(status)[0]
    if bad.size:
        p = int(bad[0])
        a, b = divmod(p, pl.shape[0])
        raise InvariantBreachError(
            f"audit cell (k={k}, l={l}, r={r}): pair "
            f"({words.from_array(pk[a])!r}, {words.from_array(pl[b])!r}) "
            f"failed with status {int(status[p])}"
        )
    domain_sums = (inv_rows(pk)[:, None] + inv_rows(pl)[None, :]).ravel()
    shift_ok = bool(np.all(inv_sums - domain_sums == r * (l - k + r)))
    unique_keys, first_index = np.unique(keys, return_index=True)
    injective = unique_keys.size == keys.size
    image_counts = np.bincount(inv_sums[first_index])
    image_poly = Poly(int(c) for c in image_counts)
    complement = q_catalan(k - r) * q_catalan(l + r) - image_poly
    gap = corollary_gap(k, l, r).gap
    return AuditReport(
        k=k,
        l=l,
        r=r,
        pairs_checked=int(keys.size),
        injective=injective,
        shift_ok=shift_ok,
        complement_poly=complement,
        matches_gap=complement == gap,
    )


def naive_counterexample(adjacent_max_k: int = 25) -> NaiveProductReport:
    """The unshifted gap C_2 C_4 - C_3^2 has a negative coefficient, while
    the q-shifted adjacent gaps C_{k-1} C_{k+1} - q C_k^2 stay nonnegative
    (checked through ``adjacent_max_k``)."""
    gap = q_catalan(2) * q_catalan(4) - q_catalan(3) * q_catalan(3)
    adjacent_ok = all(
        (q_catalan(k - 1) * q_catalan(k + 1) - (q_catalan(k) * q_catalan(k)).shift(1)).is_nonneg()
        for k in range(1, adjacent_max_k + 1)
    )
    return NaiveProductReport(
        gap=gap,
        nonneg=gap.is_nonneg(),
        first_violation=gap.first_negative(),
        adjacent_max_k=adjacent_max_k,
        adjacent_all_nonneg=adjacent_ok,
    )


def definition_critique() -> CritiqueReport:
    """Adjacent-index log-convexity does not imply the two-index version.

    For the sequence P_0..P_3 below, P_0 P_2 - P_1^2 and P_1 P_3 - P_2^2
    are coefficientwise nonnegative, yet P_0 P_3 - P_1 P_2 (the k = 1,
    l = 2 cross gap) has a negative coefficient.
    """
    p0 = Poly([1, 1, 1, 0, 0, 1])        # 1 + q + q^2 + q^5
    p1 = Poly([1, 0, 1, 1])              # 1 + q^2 + q^3
    p2 = Poly([1, 1, 0, 1])              # 1 + q + q^3
    p3 = Poly([1, 2, 0, 0, 0, 0, 1])     # 1 + 2q + q^6
    adj02 = p0 * p2 - p1 * p1
    adj13 = p1 * p3 - p2 * p2
    cross = p0 * p3 - p1 * p2
    return CritiqueReport(
        polys=(p0, p1, p2, p3),
        adjacent_nonneg=(adj02.is_nonneg(), adj13.is_nonneg()),
        cross_gap=cross,
        cross_nonneg=cross.is_nonneg(),
        cross_first_violation=cross.first_negative(),
    )


def sweep_cells(k_max: int, l_max: int, r_max: int) -> list[tuple[int, int, int]]:
    """All admissible (r, k, l) cells in the box, lexicographic in (r, k, l)."""
    return [
        (r, k, l)
        for r in range(1, r_max + 1)
        for k in range(r, k_max + 1)
        for l in range(k - r + 1, l_max + 1)
    ]


def _warm_table(n: int) -> None:
    q_catalan(n)


def _sweep_one(cell: tuple[str, int, int, int]) -> Union[GapReport, AuditReport]:
    mode, r, k, l = cell
    if mode == "gap":
        return corollary_gap(k, l, r)
    return audit_injection(k, l, r)


def sweep(
    k_max: int,
    l_max: int,
    r_max: int,
    mode: str = "gap",
    jobs: int = 1,
) -> list[Union[GapReport, AuditReport]]:
    """Evaluate every admissible cell in the box, in a fixed order.

    ``mode`` is "gap" (gap polynomials) or "audit" (exhaustive injection
    audits, subject to the audit cap).  Cells are independent; with
    ``jobs`` > 1 they are fanned out to worker processes, and the output
    order stays lexicographic in (r, k, l) either way.  Failures are
    collected in the reports, never short-circuited.
    """
    if mode not in ("gap", "audit"):
        raise ValueError(f"mode must be 'gap' or 'audit', got {mode!r}")
    if min(k_max, l_max, r_max) < 1:
        raise ValueError("bounds must be positive")
    cells = [(mode, r, k, l) for (r, k, l) in sweep_cells(k_max, l_max, r_max)]
    if jobs <= 1:
        return [_sweep_one(c) for c in cells]
    warm_to = l_max + r_max
    with ProcessPoolExecutor(
        max_workers=jobs, initializer=_warm_table, initargs=(warm_to,)
    ) as pool:
        return list(pool.map(_sweep_one, cells, chunksize=8))


def _violation_json(violation: Optional[tuple[int, int]]) -> Optional[dict]:
    if violation is None:
        return None
    degree, coeff = violation
    return {"degree": degree, "coeff": str(coeff)}


def report_to_json(
    report: Union[GapReport, AuditReport, NaiveProductReport, CritiqueReport],
    sharpness: Optional[SharpnessReport] = None,
) -> dict:
    """Serialize a report to the common JSON schema.

    Every document has kind, params, gap (coefficient strings), verdict,
    and violation; kind-specific extras go under details.
    """
    if isinstance(report, GapReport):
        details: dict = {"degrees": list(report.degrees)}
        verdict = report.nonneg
        if sharpness is not None:
            details["sharpness"] = {
                "degree_equal": sharpness.degree_equal,
                "bumped_fails": sharpness.bumped_fails,
            }
            verdict = verdict and sharpness.degree_equal and sharpness.bumped_fails
        return {
            "kind": "gap",
            "params": {"k": report.k, "l": report.l, "r": report.r},
            "gap": report.gap.to_json_coeffs(),
            "verdict": verdict,
            "violation": _violation_json(report.first_violation),
            "details": details,
        }
    if isinstance(report, AuditReport):
        return {
            "kind": "audit",
            "params": {"k": report.k, "l": report.l, "r": report.r},
            "gap": report.complement_poly.to_json_coeffs(),
            "verdict": report.ok,
            "violation": None,
            "details": {
                "pairs_checked": report.pairs_checked,
                "injective": report.injective,
                "shift_ok": report.shift_ok,
                "matches_gap": report.matches_gap,
            },
        }
    if isinstance(report, NaiveProductReport):
        return {
            "kind": "counterexample",
            "params": {"name": "unshifted-product"},
            "gap": report.gap.to_json_coeffs(),
            "verdict": report.as_expected,
            "violation": _violation_json(report.first_violation),
            "details": {
                "adjacent_max_k": report.adjacent_max_k,
                "adjacent_all_nonneg": report.adjacent_all_nonneg,
            },
        }
    if isinstance(report, CritiqueReport):
        return {
            "kind": "counterexample",
            "params": {"name": "adjacent-vs-cross"},
            "gap": report.cross_gap.to_json_coeffs(),
            "verdict": report.as_expected,
            "violation": _violation_json(report.cross_first_violation),
            "details": {
                "polys": [p.to_json_coeffs() for p in report.polys],
                "adjacent_nonneg": list(report.adjacent_nonneg),
            },
        }
    raise TypeError(f"unknown report type: {type(report).__name__}")
