"""The acceptance experiments, callable from tests and from the command line.

Each function runs one headline claim end to end and returns a small dict:
{"name", "passed", "details"}.  Random inputs are drawn from a seeded
generator, so a run is reproducible given its seed.

Random spectra are guarded: frequencies whose radius lands within a thin
window of a resonance (|sin(s lam)| < 5e-3 for a time step s the experiment
uses) are resampled.  The pinned branch switch of the ratio symbols sits at
1e-6, so inside (1e-6, 5e-3) the ratio branch is exact math but loses up to
three digits to cancellation; the desk-scale tolerances below (1e-9 .. 1e-11)
are honest only outside that window, and the separate branch-agreement
invariant covers the window itself at its own tolerance.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction

from . import diophantine, propagators, snapshots, sphere
from .fields import SpectralField, apply_multiplier, field, linear_combine, max_abs_amp, subtract
from .propagators import symbol_Psi, symbol_S, symbol_Sprime
from .snapshots import CauchyData, evolve

GUARD_SIN = 5e-3


def _guarded_radius(rng: random.Random, steps: tuple[float, ...], lam_max: float) -> float:
    while True:
        lam = rng.uniform(0.1, lam_max)
        if all(abs(math.sin(s * lam)) >= GUARD_SIN for s in steps):
            return lam


def _random_field(
    rng: random.Random,
    dim: int,
    count: int,
    steps: tuple[float, ...],
    lam_max: float = 4.0,
) -> SpectralField:
    entries = []
    for _ in range(count):
        lam = _guarded_radius(rng, steps, lam_max)
        direction = [rng.gauss(0.0, 1.0) for _ in range(dim)]
        norm = math.hypot(*direction)
        xi = tuple(lam * d / norm for d in direction)
        entries.append((xi, complex(rng.uniform(-1, 1), rng.uniform(-1, 1))))
    return field(dim, entries)


def _result(name: str, passed: bool, details: str) -> dict:
    return {"name": name, "passed": bool(passed), "details": details}


# ---------------------------------------------------------------------------


def recursion_roundtrip(seed: int = 0) -> dict:
    """Integer-time snapshots from the Chebyshev closed form match direct
    evolution for |m| <= 20 (tolerance 1e-10), and consecutive snapshots
    satisfy u_{m+2} + u_m = 2 S'_1 u_{m+1} (tolerance 1e-11)."""
    rng = random.Random(seed)
    worst_closed = 0.0
    worst_recur = 0.0
    worst_general = 0.0
    for _ in range(100):
        a = rng.uniform(0.0, 1.0)
        b = a + rng.uniform(0.3, 1.2)
        steps = (1.0, b - a)
        dim = rng.randint(1, 3)
        u0 = _random_field(rng, dim, rng.randint(4, 16), steps)
        g = _random_field(rng, dim, rng.randint(4, 16), steps)
        data = CauchyData(u0, g)
        u1 = evolve(data, 1.0)
        snaps = {m: evolve(data, float(m)) for m in range(-21, 22)}
        cos1 = symbol_Sprime(1.0)
        for m in range(-20, 21):
            via = snapshots.integer_snapshot(u0, u1, m)
            worst_closed = max(worst_closed, max_abs_amp(subtract(via, snaps[m])))
        for m in range(-20, 20):
            lhs = linear_combine([1.0, 1.0], [snaps[m + 2], snaps[m]])
            rhs = apply_multiplier(snaps[m + 1], cos1)
            worst_recur = max(worst_recur, max_abs_amp(linear_combine([1.0, -2.0], [lhs, rhs])))
        ua, ub = evolve(data, a), evolve(data, b)
        for m in range(-8, 9):
            via = snapshots.general_integer_snapshot(ua, ub, a, b, m)
            direct = evolve(data, a + m * (b - a))
            worst_general = max(worst_general, max_abs_amp(subtract(via, direct)))
    passed = worst_closed <= 1e-10 and worst_general <= 1e-10 and worst_recur <= 1e-11
    return _result(
        "recursion",
        passed,
        f"closed-form vs evolve: {worst_closed:.2e} (tol 1e-10); "
        f"general step: {worst_general:.2e} (tol 1e-10); "
        f"three-term recursion: {worst_recur:.2e} (tol 1e-11)",
    )


def identity_suite(seed: int = 0) -> dict:
    """Propagator identities hold to 1e-10 on a 1000-point random grid:
    the two three-term recurrences, the time-shift rule, Psi_m S_1 = S_m,
    and the symmetric snapshot-pair identity."""
    rng = random.Random(seed)
    grid = [_guarded_radius(rng, (1.0,), 50.0) for _ in range(1000)]
    worst_check = 0.0
    for alpha in (0.3, math.sqrt(2.0), 2.5):
        rep = propagators.fundamental_identities_check(alpha, grid)
        worst_check = max(worst_check, rep.max_residual)

    s1 = symbol_S(1.0)
    sins = {m: symbol_S(float(m)) for m in range(-10, 11)}
    psis = {m: symbol_Psi(m, 1.0) for m in range(-10, 11)}
    worst_product = 0.0
    for lam in grid[:300]:
        v1 = s1(lam)
        for m in range(-10, 11):
            worst_product = max(worst_product, abs(psis[m](lam) * v1 - sins[m](lam)))

    worst_pair = 0.0
    for p, q in ((2, 3), (3, 5), (4, 7), (5, 2)):
        pp = {j: symbol_Psi(j, 1.0) for j in (p, q, p - 1, q - 1)}
        for lam in grid[:300]:
            lhs = (pp[p - 1](lam) + math.cos(p * lam)) * pp[q](lam)
            rhs = (pp[q - 1](lam) + math.cos(q * lam)) * pp[p](lam)
            worst_pair = max(worst_pair, abs(lhs - rhs))

    worst = max(worst_check, worst_product, worst_pair)
    return _result(
        "identities",
        worst <= 1e-10,
        f"recurrences/shift over three alphas: {worst_check:.2e}; product rule: {worst_product:.2e}; "
        f"snapshot-pair symmetry: {worst_pair:.2e} (all tol 1e-10)",
    )


def three_snapshot_suite(seed: int = 0) -> dict:
    """Three snapshots at times 0, 1, alpha determine the velocity.

    Irrational alpha (sqrt 2 and a generic draw): recovery within
    1e-9 (1 + conditioning), status Unique.  Rational alpha = 2/3 with a
    mode at radius 3 pi: NonUniqueKernel, free mode listed, the rest
    recovered.  Inconsistent data: Obstructed."""
    rng = random.Random(seed)
    checks: list[str] = []
    ok = True

    for alpha in (math.sqrt(2.0), 1.2 + 0.6 * rng.random()):
        worst_ratio = 0.0
        for _ in range(25):
            steps = (1.0, alpha)
            u0 = _random_field(rng, 2, 5, steps)
            g = _random_field(rng, 2, 5, steps)
            data = CauchyData(u0, g)
            rep = snapshots.three_snapshot_solve(u0, evolve(data, 1.0), evolve(data, alpha), alpha)
            tol = 1e-9 * (1.0 + rep.conditioning)
            err = max_abs_amp(subtract(rep.solution, g)) if rep.solution is not None else math.inf
            worst_ratio = max(worst_ratio, err / tol)
            if rep.status != snapshots.STATUS_UNIQUE:
                ok = False
        checks.append(f"alpha={alpha:.6f}: worst err/tol {worst_ratio:.2e}")
        ok = ok and worst_ratio <= 1.0

    xi_k = (3.0 * math.pi, 0.0)
    u0 = linear_combine([1.0, 1.0], [_random_field(rng, 2, 4, (1.0, 2.0 / 3.0)), field(2, [(xi_k, 0.4)])])
    g = linear_combine([1.0, 1.0], [_random_field(rng, 2, 4, (1.0, 2.0 / 3.0)), field(2, [(xi_k, -0.7j)])])
    data = CauchyData(u0, g)
    rep = snapshots.three_snapshot_solve(u0, evolve(data, 1.0), evolve(data, 2.0 / 3.0), Fraction(2, 3))
    kernel_ok = rep.status == snapshots.STATUS_NONUNIQUE and xi_k in rep.kernel_modes
    off_kernel = subtract(rep.solution, field(2, [(m.xi, m.amp) for m in g.modes if m.xi != xi_k]))
    kernel_ok = kernel_ok and max_abs_amp(off_kernel) <= 1e-9 * (1.0 + rep.conditioning)
    checks.append(f"rational 2/3 kernel: status={rep.status}, off-kernel err {max_abs_amp(off_kernel):.2e}")
    ok = ok and kernel_ok

    f1 = evolve(data, 1.0)
    falpha_bad = linear_combine([1.0, 1.0], [evolve(data, 0.77), field(2, [((1.0, 0.5), 1e-4)])])
    rep_bad = snapshots.three_snapshot_solve(u0, f1, falpha_bad, 0.77)
    checks.append(f"perturbed data: status={rep_bad.status}")
    ok = ok and rep_bad.status == snapshots.STATUS_OBSTRUCTED

    worst_compat = 0.0
    for _ in range(10):
        alpha = 0.3 + rng.random()
        u0 = _random_field(rng, 1, 5, (1.0, alpha))
        g = _random_field(rng, 1, 5, (1.0, alpha))
        data = CauchyData(u0, g)
        worst_compat = max(
            worst_compat,
            snapshots.compatibility_residual(u0, evolve(data, 1.0), evolve(data, alpha), alpha),
        )
    checks.append(f"compatibility residual on genuine triples: {worst_compat:.2e} (tol 1e-12)")
    ok = ok and worst_compat <= 1e-12

    return _result("three-snapshot", ok, "; ".join(checks))


def liouville_demo_certified(seed: int = 0) -> dict:
    """The factorial-series time drives the reconstruction amplification
    above 1 against snapshot data of sup norm q_k^(1-k), certified in exact
    arithmetic for k <= 6; k = 7 exhausts the supported precision."""
    demo = snapshots.liouville_obstruction_demo(6)
    ok = demo.all_certified and all(r.amplitude_log10 > 0 for r in demo.rows)
    try:
        snapshots.liouville_obstruction_demo(7)
        raised = False
    except diophantine.PrecisionExhausted:
        raised = True
    ok = ok and raised
    amps = ", ".join(f"k={r.k}: {r.amplitude}" for r in demo.rows[:4])
    return _result(
        "liouville",
        ok,
        f"amplifications {amps}, ... all certified > 1 up to k=6; k=7 raises PrecisionExhausted",
    )


def rational_reconstruction_suite(seed: int = 0) -> dict:
    """Snapshots at coprime integer times (0, p, q) reconstruct the velocity
    through the Bezout combination (residual <= 1e-9), and data violating
    the compatibility identity is rejected."""
    rng = random.Random(seed)
    pairs = ((1, 2), (2, 3), (3, 5), (5, 7))
    worst_resid = 0.0
    worst_ratio = 0.0
    ok = True
    for trial in range(50):
        p, q = pairs[trial % len(pairs)]
        steps = (1.0, float(p), float(q), p / q)
        u0 = _random_field(rng, 2, 5, steps)
        g = _random_field(rng, 2, 5, steps)
        data = CauchyData(u0, g)
        fp, fq = evolve(data, float(p)), evolve(data, float(q))
        rep = snapshots.rational_reconstruct(u0, fp, fq, p, q)
        if rep.status != snapshots.STATUS_UNIQUE:
            ok = False
        worst_resid = max(worst_resid, rep.residual)
        err = max_abs_amp(subtract(rep.solution, g)) if rep.solution is not None else math.inf
        worst_ratio = max(worst_ratio, err / (1e-9 * (1.0 + rep.conditioning)))
        rep3 = snapshots.three_snapshot_solve(u0, evolve(data, 1.0), evolve(data, p / q), Fraction(p, q))
        err3 = max_abs_amp(subtract(rep3.solution, g)) if rep3.solution is not None else math.inf
        worst_ratio = max(worst_ratio, err3 / (1e-9 * (1.0 + rep3.conditioning)))
    ok = ok and worst_resid <= 1e-9 and worst_ratio <= 1.0

    u0 = _random_field(rng, 1, 3, (1.0, 2.0, 3.0))
    g = _random_field(rng, 1, 3, (1.0, 2.0, 3.0))
    data = CauchyData(u0, g)
    fp = linear_combine([1.0, 1.0], [evolve(data, 2.0), field(1, [((1.0,), 1.0)])])
    try:
        snapshots.rational_reconstruct(u0, fp, evolve(data, 3.0), 2, 3)
        rejected = False
    except snapshots.IncompatibleData:
        rejected = True
    ok = ok and rejected
    return _result(
        "rational",
        ok,
        f"post-verified residual {worst_resid:.2e} (tol 1e-9); worst err/tol {worst_ratio:.2e}; "
        f"violating data rejected: {rejected}",
    )


def odd_type_margins(seed: int = 0) -> dict:
    """Every odd q in (64, 1e4] keeps q |beta - nearest| above q^(-3) for the
    binary factorial series, certified against the truncation tail."""
    rep = diophantine.odd_type_verifier(10**4)
    return _result(
        "oddtype",
        rep.passes,
        f"{rep.count} odd q scanned at depth {rep.depth}; min margin ratio {rep.min_ratio:.1f} "
        f"at q={rep.worst_q}; violations: {len(rep.violations)}",
    )


def joint_lower_bound(seed: int = 0) -> dict:
    """(|sin x| + |sin(sqrt2 x)|) (1+x)^3 / x stays above a positive constant
    on (0, 1e4], with the grid refined near both families of sine zeros."""
    c, passes = diophantine.joint_sine_lower_bound_check(diophantine.sqrt2_class(), 3, 1e4)
    return _result("jointbound", passes and c > 0, f"C = {c:.6g} > 0 over (0, 1e4], exponent 3")


def sphere_suite(seed: int = 0) -> dict:
    """Sphere snapshot theory: classification of times beta pi from the
    number class alone, surjectivity margins at degree 1e4, the antipodal
    identity on odd spheres, solver round trips, and the Liouville
    conditioning blow-up."""
    rng = random.Random(seed)
    checks: list[str] = []
    ok = True

    golden = diophantine.golden_class()
    liou10 = diophantine.liouville_truncation(10, (1,) * 4, 4)
    expected = [
        (diophantine.rational_number(Fraction(1, 2)), 3, sphere.VERDICT_NON_UNIQUE),
        (diophantine.rational_number(Fraction(1, 3)), 2, sphere.VERDICT_SOLVABLE),
        (diophantine.rational_number(Fraction(2, 5)), 2, sphere.VERDICT_NON_UNIQUE),
        (golden, 3, sphere.VERDICT_SOLVABLE),
        (liou10, 3, sphere.VERDICT_NOT_ALWAYS),
        (diophantine.doubled(diophantine.ternary_odd_type_class(4)), 2, sphere.VERDICT_NOT_ALWAYS),
        (diophantine.sqrt2_class(), 3, sphere.VERDICT_SOLVABLE),
        (diophantine.doubled(diophantine.binary_factorial_class(4)), 2, sphere.VERDICT_SOLVABLE),
    ]
    bad = [
        (beta, n, want, sphere.classify_alpha(beta, n).verdict)
        for beta, n, want in expected
        if sphere.classify_alpha(beta, n).verdict != want
    ]
    try:
        sphere.classify_alpha(liou10, 2)
        bad.append(("liouville-no-half", 2, "Unclassifiable", "no exception"))
    except diophantine.Unclassifiable:
        pass
    checks.append(f"classification: {len(expected) + 1 - len(bad)}/{len(expected) + 1} cells")
    ok = ok and not bad

    margin_cases = [
        (Fraction(1, 3), 2, 3, True),
        (math.pi * float(golden.value), 3, 3, True),
        (math.sqrt(2.0) * math.pi, 3, 3, True),
        (Fraction(1, 2), 3, 3, False),
        (Fraction(2, 5), 2, 3, False),
    ]
    margin_ok = True
    for alpha, n, expo, want in margin_cases:
        c, passes = sphere.surjectivity_margin(alpha, n, 10**4, expo)
        margin_ok = margin_ok and passes == want and (c > 0) == want
    checks.append(f"margins at degree 1e4: {'all as classified' if margin_ok else 'MISMATCH'}")
    ok = ok and margin_ok

    worst_period = 0.0
    for n, period in ((3, 2.0 * math.pi), (2, 4.0 * math.pi)):
        f0 = sphere.sphere_field(n, [(l, 1, complex(rng.uniform(-1, 1), rng.uniform(-1, 1))) for l in range(12)])
        g = sphere.sphere_field(n, [(l, 1, complex(rng.uniform(-1, 1), rng.uniform(-1, 1))) for l in range(12)])
        for t in (0.0, 0.35, 1.7, 5.0):
            u = sphere.sphere_evolve(f0, g, t)
            v = sphere.sphere_evolve(f0, g, t + period)
            worst_period = max(
                worst_period,
                max(abs(u.amplitude_at(l, m) - v.amplitude_at(l, m)) for l, m, _ in u.coeffs),
            )
    checks.append(f"period 2pi (n=3) / 4pi (n=2): {worst_period:.2e} (tol 1e-10)")
    ok = ok and worst_period <= 1e-10

    worst_huygens = 0.0
    times = [2.0 * math.pi * j / 19 for j in range(20)]
    for n in (3, 5):
        f0 = sphere.sphere_field(n, [(l, 1, complex(rng.uniform(-1, 1), rng.uniform(-1, 1))) for l in range(10)])
        g = sphere.sphere_field(n, [(l, 1, complex(rng.uniform(-1, 1), rng.uniform(-1, 1))) for l in range(10)])
        worst_huygens = max(worst_huygens, sphere.huygens_antipodal_check(f0, g, times))
    checks.append(f"antipodal residual: {worst_huygens:.2e} (tol 1e-10)")
    ok = ok and worst_huygens <= 1e-10

    worst_solve = 0.0
    for n, alpha in ((2, math.pi / 3), (3, 0.7)):
        entries = [(l, m, complex(rng.uniform(-1, 1), rng.uniform(-1, 1))) for l in range(8) for m in (1, sphere.dim_Hl(n, l))]
        f0 = sphere.sphere_field(n, entries)
        entries = [(l, m, complex(rng.uniform(-1, 1), rng.uniform(-1, 1))) for l in range(8) for m in (1, sphere.dim_Hl(n, l))]
        g = sphere.sphere_field(n, entries)
        rep = sphere.sphere_two_snapshot_solve(f0, sphere.sphere_evolve(f0, g, alpha), alpha)
        err = max(
            (abs(rep.solution.amplitude_at(l, m) - amp) for l, m, amp in g.coeffs),
            default=math.inf,
        )
        if rep.status != snapshots.STATUS_UNIQUE:
            ok = False
        worst_solve = max(worst_solve, err / (1e-9 * (1.0 + rep.conditioning)))
    checks.append(f"solver round trip err/tol: {worst_solve:.2e}")
    ok = ok and worst_solve <= 1.0

    beta_l = Fraction(110001, 10**6)  # the depth-3 factorial series, exactly
    f0 = sphere.sphere_field(3, [(99, 1, 1.0)])
    fa = sphere.sphere_evolve(f0, sphere.sphere_field(3, [(99, 1, 0.5)]), math.pi * float(beta_l))
    rep = sphere.sphere_two_snapshot_solve(f0, fa, beta_l, max_degree=256)
    checks.append(f"conditioning at the q=100 convergent degree: {rep.conditioning:.3e}")
    ok = ok and rep.conditioning >= 1e5

    return _result("sphere", ok, "; ".join(checks))


def slow_decrease_suite(seed: int = 0) -> dict:
    """The sine-propagator symbol is slowly decreasing: every window
    |eta - xi| <= 4 log(2 + xi) holds a point with |symbol| >= (4 + xi)^(-4),
    across xi up to 1e3.  The zero symbol fails everywhere, as it must."""
    rep = diophantine.slowly_decreasing_probe(symbol_S(1.0), 4.0, 1e3, samples=512)
    from .fields import symbol_constant

    zero = diophantine.slowly_decreasing_probe(symbol_constant(0.0), 4.0, 50.0, samples=32)
    ok = rep.all_pass and not zero.all_pass and len(zero.failures) == len(zero.rows)
    return _result(
        "sdprobe",
        ok,
        f"sine symbol: {len(rep.rows)} windows, all witnessed; zero symbol: all {len(zero.rows)} fail",
    )


ALL = {
    "recursion": recursion_roundtrip,
    "identities": identity_suite,
    "three-snapshot": three_snapshot_suite,
    "liouville": liouville_demo_certified,
    "rational": rational_reconstruction_suite,
    "oddtype": odd_type_margins,
    "jointbound": joint_lower_bound,
    "sphere": sphere_suite,
    "sdprobe": slow_decrease_suite,
}


def run(names: list[str] | None = None, seed: int = 0) -> list[dict]:
    picked = list(ALL) if not names or names == ["all"] else names
    out = []
    for name in picked:
        if name not in ALL:
            raise ValueError(f"unknown suite {name!r}; choose from {', '.join(ALL)} or 'all'")
        out.append(ALL[name](seed=seed))
    return out
