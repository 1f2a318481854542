"""Recovering waves from snapshots at integer, rational, and generic times.

A wave with Cauchy data (u0, g) evolves as u_t = S'_t u0 + S_t g.  On a
band-limited field every statement below is a finite set of scalar equations,
one per mode, so solvers work mode by mode and report exactly which modes
are free (kernel of the sine propagator), which determine the solution, and
which make the data inconsistent.

Statuses: "Unique" (all modes determined), "NonUniqueKernel" (free kernel
modes, minimal-norm representative returned), "Obstructed" (no wave fits).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from . import diophantine
from .fields import (
    SpectralField,
    apply_multiplier,
    field,
    linear_combine,
    max_abs_amp,
    subtract,
    symbol_product,
)
from .propagators import MultiplierSymbol, symbol_Psi, symbol_S, symbol_Sprime

STATUS_UNIQUE = "Unique"
STATUS_NONUNIQUE = "NonUniqueKernel"
STATUS_OBSTRUCTED = "Obstructed"

KERNEL_SIN_TOL = 1e-14  # |sin(t lam)| below this marks a kernel frequency
OBSTRUCTION_AMP_TOL = 1e-12  # kernel-mode data above this has no preimage
CONSISTENCY_TOL = 1e-9  # scaled by (1 + conditioning)
RATIONAL_GATE_TOL = 1e-9


class InvalidTime(ValueError):
    """A time at which the operation is undefined (t = 0 kernel, alpha in {0, 1})."""


class InvalidTimes(ValueError):
    """A time tuple violating ordering or coprimality preconditions."""


class IncompatibleData(ValueError):
    """Snapshot data failing a compatibility identity beyond tolerance."""

    def __init__(self, message: str, residual: float):
        super().__init__(message)
        self.residual = residual


@dataclass(frozen=True)
class CauchyData:
    position: SpectralField
    velocity: SpectralField

    def __post_init__(self) -> None:
        if self.position.dim != self.velocity.dim:
            raise ValueError(
                f"position dim {self.position.dim} != velocity dim {self.velocity.dim}"
            )


@dataclass(frozen=True)
class SolveReport:
    status: str
    solution: SpectralField | None
    residual: float
    conditioning: float
    kernel_modes: tuple[tuple[float, ...], ...]
    note: str = ""

    @property
    def solvable(self) -> bool:
        return self.status != STATUS_OBSTRUCTED


def evolve(data: CauchyData, t: float) -> SpectralField:
    """u_t = S'_t u0 + S_t g."""
    return linear_combine(
        [1.0, 1.0],
        [
            apply_multiplier(data.position, symbol_Sprime(t)),
            apply_multiplier(data.velocity, symbol_S(t)),
        ],
    )


_LAPLACIAN = MultiplierSymbol("-lam^2", lambda lam: -(lam * lam))


def wave_residual(data: CauchyData, t: float, h: float) -> float:
    """Max-amplitude residual of the centered second time difference of the
    evolved field against its Laplacian."""
    if h <= 0:
        raise ValueError(f"h must be > 0, got {h}")
    up = evolve(data, t + h)
    u0 = evolve(data, t)
    um = evolve(data, t - h)
    lap = apply_multiplier(u0, _LAPLACIAN)
    r = linear_combine(
        [1.0 / (h * h), -2.0 / (h * h), 1.0 / (h * h), -1.0], [up, u0, um, lap]
    )
    return max_abs_amp(r)


def kernel_modes(f: SpectralField, t: float) -> tuple[tuple[float, ...], ...]:
    """Frequencies of f annihilated by S_t: radius in (pi/t) Z, excluding 0
    where the symbol continues to t != 0."""
    if t == 0:
        raise InvalidTime("S_0 = 0: every frequency is in the kernel")
    out = []
    for m in f.modes:
        lam = m.radius
        if lam > 0 and abs(math.sin(t * lam)) < KERNEL_SIN_TOL:
            out.append(m.xi)
    return tuple(out)


def integer_snapshot(u0: SpectralField, u1: SpectralField, m: int) -> SpectralField:
    """u_m = Psi_m u1 - Psi_{m-1} u0: the closed form of the integer-time
    snapshot recursion, valid for every integer m."""
    return linear_combine(
        [1.0, -1.0],
        [
            apply_multiplier(u1, symbol_Psi(m, 1.0)),
            apply_multiplier(u0, symbol_Psi(m - 1, 1.0)),
        ],
    )


def general_integer_snapshot(
    ua: SpectralField, ub: SpectralField, a: float, b: float, m: int
) -> SpectralField:
    """u at time a + m (b - a), from the snapshots at a < b."""
    if not b > a:
        raise InvalidTimes(f"need a < b, got a={a}, b={b}")
    s = b - a
    return linear_combine(
        [1.0, -1.0],
        [
            apply_multiplier(ub, symbol_Psi(m, s)),
            apply_multiplier(ua, symbol_Psi(m - 1, s)),
        ],
    )


# ---------------------------------------------------------------------------
# compatibility residuals


def compatibility_residual(
    f0: SpectralField, f1: SpectralField, falpha: SpectralField, alpha: float
) -> float:
    """Residual of the three-time identity at times (0, 1, alpha)."""
    return compatibility_residual_general(f0, f1, falpha, 0.0, 1.0, float(alpha))


def compatibility_residual_general(
    fa: SpectralField, fb: SpectralField, fc: SpectralField, a: float, b: float, c: float
) -> float:
    """Residual of S_{c-b} fa + S_{a-c} fb + S_{b-a} fc, which vanishes on
    genuine snapshot triples at times (a, b, c)."""
    r = linear_combine(
        [1.0, 1.0, 1.0],
        [
            apply_multiplier(fa, symbol_S(c - b)),
            apply_multiplier(fb, symbol_S(a - c)),
            apply_multiplier(fc, symbol_S(b - a)),
        ],
    )
    return max_abs_amp(r)


def rational_compatibility_residual(
    f0: SpectralField, fp: SpectralField, fq: SpectralField, p: int, q: int
) -> float:
    """Residual of Psi_q (fp - S'_p f0) = Psi_p (fq - S'_q f0) for integer
    snapshot times 0, p, q."""
    _validate_pq(p, q)
    return _psi_gate_residual(f0, fp, fq, p, q, 1.0)


def _validate_pq(p: int, q: int) -> None:
    if not (isinstance(p, int) and isinstance(q, int)) or p < 1 or q < 1:
        raise InvalidTimes(f"need positive integer times, got p={p!r}, q={q!r}")
    if p == q:
        raise InvalidTimes(f"need distinct times, got p = q = {p}")
    if math.gcd(p, q) != 1:
        raise InvalidTimes(f"need coprime times, gcd({p}, {q}) = {math.gcd(p, q)}")


def _psi_gate_residual(
    f0: SpectralField, fa: SpectralField, fb: SpectralField, p: int, q: int, unit: float
) -> float:
    va = subtract(fa, apply_multiplier(f0, symbol_Sprime(p * unit)))
    vb = subtract(fb, apply_multiplier(f0, symbol_Sprime(q * unit)))
    lhs = apply_multiplier(va, symbol_Psi(q, unit))
    rhs = apply_multiplier(vb, symbol_Psi(p, unit))
    return max_abs_amp(subtract(lhs, rhs))


# ---------------------------------------------------------------------------
# solvers


def two_snapshot_solve(f0: SpectralField, f1: SpectralField) -> SolveReport:
    """Velocity g from snapshots at times 0 and 1.

    Modes with radius in pi Z (0 excluded) lie in the kernel of S_1: data
    there either obstructs (nonzero right side) or is free (minimal-norm
    g = 0 returned, mode listed)."""
    rhs = subtract(f1, apply_multiplier(f0, symbol_Sprime(1.0)))
    union = sorted({m.xi for m in f0.modes} | {m.xi for m in f1.modes})
    s1 = symbol_S(1.0)
    kernel: list[tuple[float, ...]] = []
    entries: list[tuple[tuple[float, ...], complex]] = []
    obstruction = 0.0
    conditioning = 0.0
    for xi in union:
        lam = math.hypot(*xi)
        amp = rhs.amplitude_at(xi)
        if lam > 0 and abs(math.sin(lam)) < KERNEL_SIN_TOL:
            kernel.append(xi)
            obstruction = max(obstruction, abs(amp))
            continue
        s = s1(lam)
        conditioning = max(conditioning, 1.0 / abs(s))
        entries.append((xi, amp / s))
    if obstruction > OBSTRUCTION_AMP_TOL:
        return SolveReport(
            STATUS_OBSTRUCTED,
            None,
            residual=obstruction,
            conditioning=conditioning,
            kernel_modes=tuple(kernel),
            note="data at kernel frequencies of S_1 has no preimage",
        )
    g = field(f0.dim, entries)
    residual = max_abs_amp(subtract(f1, evolve(CauchyData(f0, g), 1.0)))
    status = STATUS_NONUNIQUE if kernel else STATUS_UNIQUE
    return SolveReport(status, g, residual, conditioning, tuple(kernel))


def three_snapshot_solve(
    f0: SpectralField,
    f1: SpectralField,
    falpha: SpectralField,
    alpha: float | Fraction,
) -> SolveReport:
    """Velocity g from snapshots at times 0, 1, alpha.

    Exact rational alpha = p/q routes through the Bezout reconstruction on
    the rescaled integer times (0, p, q) with step 1/q, which handles the
    shared kernel exactly; its compatibility gate failing comes back as an
    Obstructed report.  Generic float alpha is solved mode by mode: the
    time-1 equation where sin(lam) is usable, the time-alpha equation
    otherwise, the unused equation cross-checked at 1e-9 (1 + conditioning).
    """
    if isinstance(alpha, Fraction):
        if alpha <= 0 or alpha == 1:
            raise InvalidTime(f"rational alpha must be positive and != 1, got {alpha}")
        try:
            return _bezout_solve(f0, falpha, f1, alpha.numerator, alpha.denominator, 1.0 / alpha.denominator)
        except IncompatibleData as exc:
            return SolveReport(
                STATUS_OBSTRUCTED,
                None,
                residual=exc.residual,
                conditioning=0.0,
                kernel_modes=(),
                note=str(exc),
            )
    alpha = float(alpha)
    if alpha in (0.0, 1.0):
        raise InvalidTime(f"alpha must differ from both snapshot times, got {alpha}")

    rhs1 = subtract(f1, apply_multiplier(f0, symbol_Sprime(1.0)))
    rhsa = subtract(falpha, apply_multiplier(f0, symbol_Sprime(alpha)))
    union = sorted(
        {m.xi for m in f0.modes} | {m.xi for m in f1.modes} | {m.xi for m in falpha.modes}
    )
    s1 = symbol_S(1.0)
    sa = symbol_S(alpha)
    entries: list[tuple[tuple[float, ...], complex]] = []
    kernel: list[tuple[float, ...]] = []
    conditioning = 0.0
    inconsistency = 0.0
    obstruction = 0.0
    for xi in union:
        lam = math.hypot(*xi)
        v = rhs1.amplitude_at(xi)
        w = rhsa.amplitude_at(xi)
        z1 = lam > 0 and abs(math.sin(lam)) < KERNEL_SIN_TOL
        za = lam > 0 and abs(math.sin(alpha * lam)) < KERNEL_SIN_TOL
        if z1 and za:
            kernel.append(xi)
            obstruction = max(obstruction, abs(v), abs(w))
            continue
        if not z1:
            s1v = s1(lam)
            g = v / s1v
            conditioning = max(conditioning, 1.0 / abs(s1v))
            if not za:
                conditioning = max(conditioning, 1.0 / abs(sa(lam)))
            inconsistency = max(inconsistency, abs(g * sa(lam) - w))
        else:
            sav = sa(lam)
            g = w / sav
            conditioning = max(conditioning, 1.0 / abs(sav))
            inconsistency = max(inconsistency, abs(g * s1(lam) - v))
        entries.append((xi, g))
    if obstruction > OBSTRUCTION_AMP_TOL:
        return SolveReport(
            STATUS_OBSTRUCTED,
            None,
            residual=obstruction,
            conditioning=conditioning,
            kernel_modes=tuple(kernel),
            note="data at shared kernel frequencies has no preimage",
        )
    tol = CONSISTENCY_TOL * (1.0 + conditioning)
    if inconsistency > tol:
        return SolveReport(
            STATUS_OBSTRUCTED,
            None,
            residual=inconsistency,
            conditioning=conditioning,
            kernel_modes=tuple(kernel),
            note=f"cross-equation inconsistency {inconsistency:.3e} exceeds {tol:.3e}",
        )
    g = field(f0.dim, entries)
    status = STATUS_NONUNIQUE if kernel else STATUS_UNIQUE
    return SolveReport(status, g, inconsistency, conditioning, tuple(kernel))


def rational_reconstruct(
    f0: SpectralField, fp: SpectralField, fq: SpectralField, p: int, q: int
) -> SolveReport:
    """Velocity from integer-time snapshots 0, p, q with gcd(p, q) = 1.

    Gates on the Psi compatibility identity (IncompatibleData beyond 1e-9),
    then combines the two windows through a Bezout pair k p + l q = 1 and
    divides once by the symbol of S_1.  The report's residual is the
    post-check of re-evolving the solution to times p and q.
    """
    _validate_pq(p, q)
    return _bezout_solve(f0, fp, fq, p, q, 1.0)


def _bezout_solve(
    f0: SpectralField,
    fa: SpectralField,
    fb: SpectralField,
    p: int,
    q: int,
    unit: float,
) -> SolveReport:
    """Solve for g from snapshots at times (0, p*unit, q*unit), gcd(p, q) = 1.

    With k p + l q = 1, the combination
        Psi_{k, p u} S'_{l q u} (fa - S'_{p u} f0) + Psi_{l, q u} S'_{k p u} (fb - S'_{q u} f0)
    equals S_u g identically, because sin(k p x) cos(l q x) + sin(l q x) cos(k p x)
    = sin(x) for x = u lam.  One division by the symbol of S_u finishes; its
    kernel (lam in pi Z / u) is the only non-uniqueness.
    """
    gate = _psi_gate_residual(f0, fa, fb, p, q, unit)
    if gate > RATIONAL_GATE_TOL:
        raise IncompatibleData(
            f"snapshot compatibility residual {gate:.3e} exceeds {RATIONAL_GATE_TOL:.1e}", gate
        )
    k, l = diophantine.bezout(p, q)
    va = subtract(fa, apply_multiplier(f0, symbol_Sprime(p * unit)))
    vb = subtract(fb, apply_multiplier(f0, symbol_Sprime(q * unit)))
    sym_a = symbol_product(symbol_Psi(k, p * unit), symbol_Sprime(l * q * unit))
    sym_b = symbol_product(symbol_Psi(l, q * unit), symbol_Sprime(k * p * unit))
    num = linear_combine([1.0, 1.0], [apply_multiplier(va, sym_a), apply_multiplier(vb, sym_b)])
    su = symbol_S(unit)
    union = sorted({m.xi for m in f0.modes} | {m.xi for m in fa.modes} | {m.xi for m in fb.modes})
    kernel: list[tuple[float, ...]] = []
    entries: list[tuple[tuple[float, ...], complex]] = []
    obstruction = 0.0
    conditioning = 0.0
    for xi in union:
        lam = math.hypot(*xi)
        if lam > 0 and abs(math.sin(unit * lam)) < KERNEL_SIN_TOL:
            kernel.append(xi)
            obstruction = max(obstruction, abs(va.amplitude_at(xi)), abs(vb.amplitude_at(xi)))
            continue
        suv = su(lam)
        amplification = (abs(sym_a(lam)) + abs(sym_b(lam))) / abs(suv)
        conditioning = max(conditioning, amplification)
        entries.append((xi, num.amplitude_at(xi) / suv))
    if obstruction > OBSTRUCTION_AMP_TOL:
        return SolveReport(
            STATUS_OBSTRUCTED,
            None,
            residual=obstruction,
            conditioning=conditioning,
            kernel_modes=tuple(kernel),
            note="kernel-mode data admits no wave through all three snapshots",
        )
    g = field(f0.dim, entries)
    data = CauchyData(f0, g)
    ra = max_abs_amp(subtract(fa, evolve(data, p * unit)))
    rb = max_abs_amp(subtract(fb, evolve(data, q * unit)))
    residual = max(ra, rb)
    note = f"bezout k={k}, l={l}; residual at t={p * unit:g}: {ra:.3e}, t={q * unit:g}: {rb:.3e}"
    if residual > CONSISTENCY_TOL * (1.0 + conditioning):
        return SolveReport(
            STATUS_OBSTRUCTED,
            None,
            residual=residual,
            conditioning=conditioning,
            kernel_modes=tuple(kernel),
            note="post-verification failed: " + note,
        )
    status = STATUS_NONUNIQUE if kernel else STATUS_UNIQUE
    return SolveReport(status, g, residual, conditioning, tuple(kernel), note)


# ---------------------------------------------------------------------------
# the small-denominator obstruction, exhibited


@dataclass(frozen=True)
class LiouvilleRow:
    k: int
    q: int
    data_sup: str  # sup norm of the k-th snapshot datum, q^(1-k)
    sin_abs: str  # |sin(pi delta_k)|, the small denominator
    amplitude: str  # pi / (sin * q^(k-1)), the velocity amplitude it forces
    amplitude_log10: float
    certified: bool  # exact arithmetic confirms amplitude > 1


@dataclass(frozen=True)
class LiouvilleDemoReport:
    alpha_label: str
    depth: int
    rows: tuple[LiouvilleRow, ...]

    @property
    def all_certified(self) -> bool:
        return all(r.certified for r in self.rows)


def liouville_obstruction_demo(k_max: int) -> LiouvilleDemoReport:
    """Velocity amplitudes forced by vanishing data along the convergents of
    the classical factorial series sum 10^(-j!).

    At frequency pi q_k the time-alpha equation divides by
    sin(pi q_k alpha) = +-sin(pi delta_k), and delta_k ~ q_k^(-k).  Even
    against data of sup norm q_k^(1-k) the recovered amplitude
    pi / (sin(pi delta_k) q_k^(k-1)) stays above 1, certified in exact
    arithmetic through sin x < x.  Display strings come from 30-digit
    arithmetic since the values leave double range around k = 5.
    """
    if not 1 <= k_max <= 25:
        raise ValueError(f"k_max must be in [1, 25], got {k_max}")
    depth = diophantine.FACTORIAL_DEPTH_CAP
    alpha = diophantine.liouville_truncation(10, (1,) * depth, depth)
    rows = []
    for k in range(1, k_max + 1):
        qk, _, dlo, dhi = diophantine.convergent_pair(alpha, k)
        certified = dhi * qk ** (k - 1) < 1
        with mpmath.workdps(30):
            delta = mpmath.mpf(dlo.numerator) / mpmath.mpf(dlo.denominator)
            sin_val = mpmath.sin(mpmath.pi * delta)
            amp = mpmath.pi / (sin_val * mpmath.mpf(qk) ** (k - 1))
            rows.append(
                LiouvilleRow(
                    k=k,
                    q=qk,
                    data_sup=mpmath.nstr(mpmath.mpf(qk) ** (1 - k), 8),
                    sin_abs=mpmath.nstr(sin_val, 8),
                    amplitude=mpmath.nstr(amp, 8),
                    amplitude_log10=float(mpmath.log10(amp)),
                    certified=bool(certified),
                )
            )
    return LiouvilleDemoReport(alpha.label, depth, tuple(rows))
