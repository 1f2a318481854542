"""Symbols of the wave propagators and their snapshot combinations.

The half-wave sine propagator S_t has symbol sin(t lam)/lam, its derivative
S'_t has symbol cos(t lam), and the snapshot propagator Psi_{m,s} has symbol
sin(m s lam)/sin(s lam).  The latter equals the Chebyshev polynomial
U_{m-1}(cos(s lam)), which is what makes integer-time snapshots close under
a three-term recurrence.

Both ratio symbols have removable singularities.  Evaluation switches branch
near them:

  sin(t lam)/lam      -> Taylor series in (t lam) when |t lam| < 1e-6
  sin(m s lam)/sin(s lam) -> U_{m-1}(cos(s lam)) when |sin(s lam)| < 1e-6

The switch thresholds are part of the contract; tests pin agreement of the
two branches across the handover window.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .fields import MultiplierSymbol

SERIES_SWITCH = 1e-6  # |t lam| below this: series branch of sin(t lam)/lam
SIN_SWITCH = 1e-6  # |sin(s lam)| below this: Chebyshev branch of Psi

IDENTITY_TOL = 1e-10


class InvalidScale(ValueError):
    """Psi_{m,s} needs a nonzero time step s."""


def chebyshev_U(m: int, x: float) -> float:
    """Chebyshev polynomial of the second kind, extended to all integer
    indices by U_{-1} = 0 and U_{-m-2} = -U_m."""
    if m == -1:
        return 0.0
    if m < -1:
        return -chebyshev_U(-m - 2, x)
    prev, cur = 1.0, 2.0 * x
    if m == 0:
        return prev
    for _ in range(m - 1):
        prev, cur = cur, 2.0 * x * cur - prev
    return cur


def symbol_S(t: float) -> MultiplierSymbol:
    """Symbol of S_t: lam -> sin(t lam)/lam, with value t at lam = 0."""
    t = float(t)

    def fn(lam: float) -> float:
        u = t * lam
        if abs(u) < SERIES_SWITCH:
            return t * (1.0 - u * u / 6.0 + u * u * u * u / 120.0)
        return math.sin(u) / lam

    return MultiplierSymbol(f"S[{t:g}]", fn, singular_note="lam=0 -> t")


def symbol_Sprime(t: float) -> MultiplierSymbol:
    """Symbol of S'_t: lam -> cos(t lam).  Entire, no singular points."""
    t = float(t)
    return MultiplierSymbol(f"S'[{t:g}]", lambda lam: math.cos(t * lam))


def symbol_Psi(m: int, s: float) -> MultiplierSymbol:
    """Symbol of Psi_{m,s}: lam -> sin(m s lam)/sin(s lam) = U_{m-1}(cos(s lam)).

    Defined for every integer m (negative ones through the extended U) and
    every nonzero step s.  Values at sin(s lam) = 0 come from the Chebyshev
    branch: +-m at even/odd multiples of pi.
    """
    m = int(m)
    s = float(s)
    if s == 0.0:
        raise InvalidScale("Psi_{m,s} requires s != 0")

    def fn(lam: float) -> float:
        u = s * lam
        d = math.sin(u)
        if abs(d) < SIN_SWITCH:
            return chebyshev_U(m - 1, math.cos(u))
        return math.sin(m * u) / d

    return MultiplierSymbol(f"Psi[{m},{s:g}]", fn, singular_note="sin(s lam)=0 -> U_{m-1}(+-1)")


@dataclass(frozen=True)
class IdentityReport:
    """Max absolute residuals of the defining propagator identities over a
    grid of spectral radii."""

    residuals: dict[str, float]
    grid_size: int
    index_range: tuple[int, int]

    @property
    def max_residual(self) -> float:
        return max(self.residuals.values())

    @property
    def passes(self) -> bool:
        return self.max_residual <= IDENTITY_TOL


def fundamental_identities_check(
    t: float,
    lam_grid: list[float],
    m_lo: int = -10,
    m_hi: int = 10,
) -> IdentityReport:
    """Check the recurrences Psi_{m+2} + Psi_m = 2 cos(lam) Psi_{m+1} and
    S_{m+2} + S_m = 2 S'_1 S_m+1, plus the shift rule
    S_t S'_1 - S'_t S_1 = S_{t-1}, pointwise on `lam_grid`.
    """
    if not lam_grid:
        raise ValueError("empty grid")
    if any(lam < 0 or not math.isfinite(lam) for lam in lam_grid):
        raise ValueError("grid entries must be finite and >= 0")
    if m_hi < m_lo:
        raise ValueError(f"empty index range [{m_lo}, {m_hi}]")

    psis = {m: symbol_Psi(m, 1.0) for m in range(m_lo - 1, m_hi + 3)}
    sins = {m: symbol_S(float(m)) for m in range(m_lo - 1, m_hi + 3)}
    s_t = symbol_S(t)
    s_t1 = symbol_S(t - 1.0)
    cos_t = symbol_Sprime(t)
    s_1 = symbol_S(1.0)

    r_psi = 0.0
    r_s = 0.0
    r_shift = 0.0
    for lam in lam_grid:
        two_cos = 2.0 * math.cos(lam)
        for m in range(m_lo, m_hi + 1):
            r_psi = max(r_psi, abs(psis[m + 2](lam) + psis[m](lam) - two_cos * psis[m + 1](lam)))
            r_s = max(r_s, abs(sins[m + 2](lam) + sins[m](lam) - two_cos * sins[m + 1](lam)))
        r_shift = max(r_shift, abs(s_t(lam) * math.cos(lam) - cos_t(lam) * s_1(lam) - s_t1(lam)))

    return IdentityReport(
        residuals={"snapshot_recurrence": r_psi, "sine_recurrence": r_s, "time_shift": r_shift},
        grid_size=len(lam_grid),
        index_range=(m_lo, m_hi),
    )
