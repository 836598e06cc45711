"""The inversion-shifting injection on pairs of lattice words.

Given pi in P_k, sigma in P_ell, and a step parameter r with 1 <= r <= k
and ell > k - r, cut both words at the smallest index t such that the
length-(t + 2r) prefix of pi contains exactly r more 2s than the length-t
prefix of sigma.  Swapping the prefixes,

    nu    = sigma_left + pi_right    (a word of P_{k-r})
    omega = pi_left    + sigma_right (a word of P_{ell+r})

gives an injective map P_k x P_ell -> P_{k-r} x P_{ell+r} that raises the
total inversion count by exactly r(ell - k + r).

Geometrically: draw pi from (0,0) in a k x k square and sigma from (r,r)
in an ell x ell square, both inside the (ell+r) x (ell+r) square.  The cut
happens at the first lattice point the two paths share; omega follows pi
then sigma, nu follows sigma then pi, and the shift r(ell - k + r) is the
area of the rectangle right of the k-square and below the ell-square.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import words
from ._kernels import split_scan
from .words import path_points, prefix_counts, raw_inversions, validate


class InvariantBreachError(RuntimeError):
    """An internally guaranteed property failed; indicates a bug in this
    package, not bad input."""


@dataclass(frozen=True)
class SplitCertificate:
    """The split index and the decomposition it induces.

    ``t`` is the sigma-prefix length; pi's prefix has length t + 2r.  The
    counts are of 1s (m1) and 2s (m2) in the named fragments; the meet
    point is where the two paths coincide: (m1 of pi_left, m2 of pi_left),
    which equals (m1 of sigma_left + r, m2 of sigma_left + r).
    """

    t: int
    r: int
    pi_left: str
    pi_right: str
    sigma_left: str
    sigma_right: str
    m1_pi_left: int
    m2_pi_left: int
    m1_sigma_left: int
    m2_sigma_left: int
    m1_pi_right: int
    m1_sigma_right: int
    meet_point: tuple[int, int]


@dataclass(frozen=True)
class InjectionResult:
    """One application of the injection, with its certificate."""

    nu: str
    omega: str
    certificate: SplitCertificate
    shift_exponent: int


@dataclass(frozen=True)
class StraddleReport:
    """Inversion count of a concatenation, split into parts.

    Every 2-before-1 pair lies in the left fragment, lies in the right
    fragment, or straddles the cut; the straddling pairs number
    m2(left) * m1(right).
    """

    inv_left: int
    inv_right: int
    straddle: int
    total: int


@dataclass(frozen=True)
class ShiftAudit:
    """Step-by-step recomputation of the inversion-shift identity."""

    ok: bool
    ledger: dict[str, int]


@dataclass(frozen=True)
class Scene:
    """Geometric view of one injection, ready for rendering.

    Paths are lists of lattice points inside the (big_side x big_side)
    square; ``rectangle`` is (x, y, width, height) of the shaded lower
    right rectangle whose area is the shift exponent.
    """

    k: int
    l: int
    r: int
    big_side: int
    pi_origin: tuple[int, int]
    sigma_origin: tuple[int, int]
    meet_point: tuple[int, int]
    rectangle: tuple[int, int, int, int]
    rectangle_area: int
    pi_path: tuple[tuple[int, int], ...]
    sigma_path: tuple[tuple[int, int], ...]
    nu_path: tuple[tuple[int, int], ...]
    omega_path: tuple[tuple[int, int], ...]

    def to_jsonable(self) -> dict:
        return {
            "k": self.k,
            "l": self.l,
            "r": self.r,
            "big_side": self.big_side,
            "pi_origin": list(self.pi_origin),
            "sigma_origin": list(self.sigma_origin),
            "meet_point": list(self.meet_point),
            "rectangle": list(self.rectangle),
            "rectangle_area": self.rectangle_area,
            "pi_path": [list(p) for p in self.pi_path],
            "sigma_path": [list(p) for p in self.sigma_path],
            "nu_path": [list(p) for p in self.nu_path],
            "omega_path": [list(p) for p in self.omega_path],
        }


def _check_inputs(pi: str, sigma: str, r: int) -> tuple[int, int]:
    if not validate(pi):
        raise ValueError(f"pi is not a lattice word: {pi!r}")
    if not validate(sigma):
        raise ValueError(f"sigma is not a lattice word: {sigma!r}")
    k = len(pi) // 2
    l = len(sigma) // 2
    if not 1 <= r <= k:
        raise ValueError(f"need 1 <= r <= k, got r={r}, k={k}")
    if l <= k - r:
        raise ValueError(f"need l > k - r, got l={l}, k={k}, r={r}")
    return k, l


def split_index(pi: str, sigma: str, r: int = 1) -> SplitCertificate:
    """Find the minimal split index and return the full certificate.

    The scan is guaranteed to succeed for valid inputs: the 2-count excess
    of pi's prefix over sigma's starts at most r, ends at least r, and
    moves by at most 1 per step.
    """
    k, l = _check_inputs(pi, sigma, r)
    t = int(split_scan(words.to_array(pi), words.to_array(sigma), r))
    if t < 0:
        raise InvariantBreachError(
            f"no split index found for pi={pi!r}, sigma={sigma!r}, r={r}"
        )
    cut = t + 2 * r
    pi_left, pi_right = pi[:cut], pi[cut:]
    sigma_left, sigma_right = sigma[:t], sigma[t:]
    m1_pi_left, m2_pi_left = prefix_counts(pi, cut)
    m1_sigma_left, m2_sigma_left = prefix_counts(sigma, t)
    return SplitCertificate(
        t=t,
        r=r,
        pi_left=pi_left,
        pi_right=pi_right,
        sigma_left=sigma_left,
        sigma_right=sigma_right,
        m1_pi_left=m1_pi_left,
        m2_pi_left=m2_pi_left,
        m1_sigma_left=m1_sigma_left,
        m2_sigma_left=m2_sigma_left,
        m1_pi_right=k - m1_pi_left,
        m1_sigma_right=l - m1_sigma_left,
        meet_point=(m1_pi_left, m2_pi_left),
    )


def inject(pi: str, sigma: str, r: int = 1) -> InjectionResult:
    """Apply the injection to (pi, sigma) with step parameter r.

    Output words are revalidated and the inversion-shift identity is
    rechecked; a failure of either raises InvariantBreachError since both
    are guaranteed for valid inputs.
    """
    k, l = _check_inputs(pi, sigma, r)
    cert = split_index(pi, sigma, r)
    nu = cert.sigma_left + cert.pi_right
    omega = cert.pi_left + cert.sigma_right
    shift = r * (l - k + r)
    if not validate(nu) or len(nu) != 2 * (k - r):
        raise InvariantBreachError(f"nu failed validation: {nu!r}")
    if not validate(omega) or len(omega) != 2 * (l + r):
        raise InvariantBreachError(f"omega failed validation: {omega!r}")
    got = raw_inversions(nu) + raw_inversions(omega)
    expected = raw_inversions(pi) + raw_inversions(sigma) + shift
    if got != expected:
        raise InvariantBreachError(
            f"inversion shift mismatch for ({pi!r}, {sigma!r}, r={r}): "
            f"{got} != {expected}"
        )
    return InjectionResult(nu=nu, omega=omega, certificate=cert, shift_exponent=shift)


def straddle_decomposition(left: str, right: str) -> StraddleReport:
    """Decompose the inversions of left + right into left, right, and
    straddling contributions."""
    inv_left = raw_inversions(left)
    inv_right = raw_inversions(right)
    straddle = left.count("2") * right.count("1")
    return StraddleReport(
        inv_left=inv_left,
        inv_right=inv_right,
        straddle=straddle,
        total=inv_left + inv_right + straddle,
    )


def shift_identity_audit(pi: str, sigma: str, r: int = 1) -> ShiftAudit:
    """Recompute the inversion-shift identity from first principles.

    Checks the four straddle decompositions (for pi, sigma, omega, nu),
    telescopes them into

        inv(omega) + inv(nu) - inv(pi) - inv(sigma)
            = (m2 pi_left - m2 sigma_left) * (m1 sigma_right - m1 pi_right)
            = r * (l - k + r)

    and returns every intermediate quantity.
    """
    k, l = _check_inputs(pi, sigma, r)
    cert = split_index(pi, sigma, r)
    nu = cert.sigma_left + cert.pi_right
    omega = cert.pi_left + cert.sigma_right

    dec_pi = straddle_decomposition(cert.pi_left, cert.pi_right)
    dec_sigma = straddle_decomposition(cert.sigma_left, cert.sigma_right)
    dec_omega = straddle_decomposition(cert.pi_left, cert.sigma_right)
    dec_nu = straddle_decomposition(cert.sigma_left, cert.pi_right)

    m2_pi_left = cert.m2_pi_left
    m2_sigma_left = cert.m2_sigma_left
    m1_pi_right = cert.m1_pi_right
    m1_sigma_right = cert.m1_sigma_right

    inv_pi = raw_inversions(pi)
    inv_sigma = raw_inversions(sigma)
    inv_nu = raw_inversions(nu)
    inv_omega = raw_inversions(omega)

    difference = inv_omega + inv_nu - inv_pi - inv_sigma
    factored = (m2_pi_left - m2_sigma_left) * (m1_sigma_right - m1_pi_right)
    expected = r * (l - k + r)

    checks = [
        dec_pi.total == inv_pi,
        dec_sigma.total == inv_sigma,
        dec_omega.total == inv_omega,
        dec_nu.total == inv_nu,
        m2_pi_left - m2_sigma_left == r,
        m1_sigma_right - m1_pi_right == l - k + r,
        difference == factored,
        difference == expected,
    ]
    ledger = {
        "k": k,
        "l": l,
        "r": r,
        "t": cert.t,
        "inv_pi": inv_pi,
        "inv_sigma": inv_sigma,
        "inv_nu": inv_nu,
        "inv_omega": inv_omega,
        "inv_pi_left": dec_pi.inv_left,
        "inv_pi_right": dec_pi.inv_right,
        "inv_sigma_left": dec_sigma.inv_left,
        "inv_sigma_right": dec_sigma.inv_right,
        "straddle_pi": dec_pi.straddle,
        "straddle_sigma": dec_sigma.straddle,
        "straddle_omega": dec_omega.straddle,
        "straddle_nu": dec_nu.straddle,
        "m1_pi_left": cert.m1_pi_left,
        "m2_pi_left": m2_pi_left,
        "m1_sigma_left": cert.m1_sigma_left,
        "m2_sigma_left": m2_sigma_left,
        "m1_pi_right": m1_pi_right,
        "m1_sigma_right": m1_sigma_right,
        "difference": difference,
        "factored": factored,
        "expected_shift": expected,
    }
    return ShiftAudit(ok=all(checks), ledger=ledger)


def geometric_scene(pi: str, sigma: str, r: int = 1) -> Scene:
    """Build the path-meeting view of one injection.

    The word-scan certificate is authoritative; the meeting point is also
    recomputed from the two point sets as a cross-check (first shared
    point, i.e. the shared point of minimal coordinate sum).
    """
    k, l = _check_inputs(pi, sigma, r)
    cert = split_index(pi, sigma, r)
    big_side = l + r
    pi_path = path_points(pi, origin=(0, 0))
    sigma_path = path_points(sigma, origin=(r, r))

    common = set(pi_path) & set(sigma_path)
    if not common:
        raise InvariantBreachError(
            f"paths of {pi!r} and {sigma!r} (offset {r}) never meet"
        )
    geometric_meet = min(common, key=lambda p: (p[0] + p[1], p))
    if geometric_meet != cert.meet_point:
        raise InvariantBreachError(
            f"geometric meet {geometric_meet} disagrees with certificate "
            f"{cert.meet_point}"
        )

    mx, my = cert.meet_point
    pi_meet_index = mx + my             # steps pi takes to reach the meet
    sigma_meet_index = cert.t           # steps sigma takes to reach it
    nu_path = tuple(sigma_path[: sigma_meet_index + 1] + pi_path[pi_meet_index + 1 :])
    omega_path = tuple(pi_path[: pi_meet_index + 1] + sigma_path[sigma_meet_index + 1 :])

    return Scene(
        k=k,
        l=l,
        r=r,
        big_side=big_side,
        pi_origin=(0, 0),
        sigma_origin=(r, r),
        meet_point=cert.meet_point,
        rectangle=(k, 0, big_side - k, r),
        rectangle_area=r * (l - k + r),
        pi_path=tuple(pi_path),
        sigma_path=tuple(sigma_path),
        nu_path=nu_path,
        omega_path=omega_path,
    )
