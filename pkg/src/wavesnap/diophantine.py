"""Exact rational arithmetic for small-denominator questions.

Everything here that feeds a certified claim runs on `fractions.Fraction`
(arbitrary precision, exact).  Floating point appears only in two places:
final display values, and guard-banded enclosures of sines whose argument
has already been range-reduced exactly.  Numbers whose fine arithmetic
nature matters (rational, certified irrationality measure, factorial-series
Liouville constructions) travel as `NumberClass` values so that downstream
classification never has to guess from a float.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction

from .fields import MultiplierSymbol

KIND_RATIONAL = "rational"
KIND_MEASURE_BOUNDED = "measure-bounded"
KIND_LIOUVILLE = "liouville"
KIND_ODD_TYPE = "odd-type-liouville"

FACTORIAL_DEPTH_CAP = 7  # 8! exponents already exceed 1e40000; deeper is pointless

# Enclosure of pi: math.pi undershoots by about 1.22e-16.
PI_LO = Fraction(math.pi)
PI_HI = Fraction(math.pi) + Fraction(1, 2**52)


class PrecisionExhausted(RuntimeError):
    """The certified error of a truncation cannot support the request."""


class NotCoprime(ValueError):
    """Bezout data requested for non-coprime times."""


class InvalidCoefficient(ValueError):
    """A factorial-series digit outside the allowed range."""


class Unclassifiable(ValueError):
    """The symbolic number class carries no certificate that decides the case."""


# ---------------------------------------------------------------------------
# number classes


@dataclass(frozen=True)
class NumberClass:
    """A real number together with what is certified about it.

    `value` approximates the number with absolute error at most `err_bound`
    (None means the value is exact).  `kind` states the arithmetic nature:

      rational           exact fraction
      measure-bounded    irrational with irrationality measure <= measure_bound
      liouville          factorial-series construction sum c_j base^(-j!)
      odd-type-liouville ternary factorial series, odd-denominator margins

    For factorial series, `base`, `coeffs` and `depth` record the truncated
    construction.  `half` optionally carries the class of value/2, which is
    what the even-dimensional sphere classification consumes.
    """

    kind: str
    value: Fraction
    err_bound: Fraction | None = None
    measure_bound: float | None = None
    base: int | None = None
    coeffs: tuple[int, ...] = ()
    depth: int | None = None
    half: NumberClass | None = None
    label: str = ""

    @property
    def is_exact(self) -> bool:
        return self.err_bound is None

    @property
    def err(self) -> Fraction:
        return Fraction(0) if self.err_bound is None else self.err_bound

    def __str__(self) -> str:
        return self.label or f"{self.kind}:{self.value}"


def rational_number(x: Fraction | int | str) -> NumberClass:
    value = Fraction(x)
    return NumberClass(KIND_RATIONAL, value, label=str(value))


def sqrt2_class(depth: int = 40) -> NumberClass:
    """sqrt(2) via its continued fraction [1; 2, 2, ...].  Convergents p/q of
    a continued fraction satisfy |x - p/q| < 1/q^2, and quadratic irrationals
    have irrationality measure exactly 2."""
    if depth < 1:
        raise ValueError("depth must be >= 1")
    p2, p1, q2, q1 = 0, 1, 1, 0
    for k in range(depth + 1):
        a = 1 if k == 0 else 2
        p2, p1 = p1, a * p1 + p2
        q2, q1 = q1, a * q1 + q2
    return NumberClass(
        KIND_MEASURE_BOUNDED,
        Fraction(p1, q1),
        err_bound=Fraction(1, q1 * q1),
        measure_bound=2.0,
        label="sqrt2",
    )


def golden_class(depth: int = 45) -> NumberClass:
    """The golden ratio via [1; 1, 1, ...] (ratios of Fibonacci numbers)."""
    if depth < 1:
        raise ValueError("depth must be >= 1")
    p2, p1, q2, q1 = 0, 1, 1, 0
    for _ in range(depth + 1):
        p2, p1 = p1, p1 + p2
        q2, q1 = q1, q1 + q2
    return NumberClass(
        KIND_MEASURE_BOUNDED,
        Fraction(p1, q1),
        err_bound=Fraction(1, q1 * q1),
        measure_bound=2.0,
        label="golden",
    )


def liouville_truncation(base: int, coeffs: Sequence[int], depth: int) -> NumberClass:
    """Truncation of sum_j c_j base^(-j!) at j = depth.

    Digits c_j lie in {1, ..., base-1}; base 3 additionally admits 0, which is
    the ternary rule whose odd-denominator margins stay provably large.  The
    discarded tail is below base^(-(depth+1)!+1), stored as the exact error.
    """
    if base < 2:
        raise ValueError(f"base must be >= 2, got {base}")
    if depth < 1:
        raise ValueError(f"depth must be >= 1, got {depth}")
    if depth > FACTORIAL_DEPTH_CAP:
        raise PrecisionExhausted(f"factorial depth {depth} exceeds cap {FACTORIAL_DEPTH_CAP}")
    if len(coeffs) < depth:
        raise InvalidCoefficient(f"need {depth} digits, got {len(coeffs)}")
    lo = 0 if base == 3 else 1
    digits = tuple(int(c) for c in coeffs[:depth])
    for c in digits:
        if not lo <= c <= base - 1:
            raise InvalidCoefficient(f"digit {c} outside [{lo}, {base - 1}] for base {base}")
    value = sum(Fraction(c, base ** math.factorial(j)) for j, c in enumerate(digits, start=1))
    tail = Fraction(1, base ** (math.factorial(depth + 1) - 1))
    kind = KIND_ODD_TYPE if base == 3 else KIND_LIOUVILLE
    return NumberClass(
        kind,
        value,
        err_bound=tail,
        base=base,
        coeffs=digits,
        depth=depth,
        label=f"liouville(base={base}, depth={depth})",
    )


def binary_factorial_class(depth: int) -> NumberClass:
    """sum_j 2^(-j!), the stock binary construction.  Liouville, and its odd
    margins are large enough that twice it still classifies as solvable."""
    return liouville_truncation(2, (1,) * depth, depth)


def ternary_odd_type_class(depth: int, coeffs: Sequence[int] | None = None) -> NumberClass:
    if coeffs is None:
        coeffs = (1,) * depth
    return liouville_truncation(3, coeffs, depth)


def doubled(half: NumberClass) -> NumberClass:
    """The class of 2x given the class of x, keeping x as provenance."""
    if half.kind == KIND_RATIONAL:
        kind = KIND_RATIONAL
    elif half.kind in (KIND_LIOUVILLE, KIND_ODD_TYPE):
        kind = KIND_LIOUVILLE  # doubling preserves Liouville, not the series shape
    else:
        kind = KIND_MEASURE_BOUNDED
    return NumberClass(
        kind,
        2 * half.value,
        err_bound=None if half.err_bound is None else 2 * half.err_bound,
        measure_bound=half.measure_bound,
        half=half,
        label=f"2*({half})",
    )


# ---------------------------------------------------------------------------
# continued fractions


@dataclass(frozen=True)
class ContinuedFraction:
    partial_quotients: tuple[int, ...]
    convergents: tuple[Fraction, ...]


def continued_fraction(x: Fraction | int, max_terms: int) -> ContinuedFraction:
    """Partial quotients and convergents of x, at most `max_terms` of them.
    Rational input terminates exactly."""
    if max_terms < 1:
        raise ValueError("max_terms must be >= 1")
    r = Fraction(x)
    quots: list[int] = []
    convs: list[Fraction] = []
    p2, p1, q2, q1 = 0, 1, 1, 0
    while len(quots) < max_terms:
        a = r.numerator // r.denominator
        quots.append(a)
        p2, p1 = p1, a * p1 + p2
        q2, q1 = q1, a * q1 + q2
        convs.append(Fraction(p1, q1))
        rem = r - a
        if rem == 0:
            break
        r = 1 / rem
    return ContinuedFraction(tuple(quots), tuple(convs))


@dataclass(frozen=True)
class MuEstimate:
    index: int
    q: int
    mu: float


def irrationality_exponent_probe(x: NumberClass, depth: int) -> tuple[MuEstimate, ...]:
    """Certified lower bounds mu_k with |x - p_k/q_k| <= q_k^(-mu_k), read off
    the convergents of x.value.

    The bound uses gap + err, so it holds for the true number behind x, not
    just the stored approximation.  Convergents whose gap is not resolved by
    the certified error raise PrecisionExhausted.
    """
    if depth < 1:
        raise ValueError("depth must be >= 1")
    cf = continued_fraction(x.value, depth + 2)
    out: list[MuEstimate] = []
    for k, conv in enumerate(cf.convergents):
        if len(out) >= depth:
            break
        if conv == x.value:
            break  # reached the value itself; later gaps are all zero
        q = conv.denominator
        if q < 2:
            continue
        gap = abs(x.value - conv)
        if not x.is_exact and gap <= 2 * x.err:
            raise PrecisionExhausted(
                f"gap at q={q} is {float(gap):.3e}, within the certified error {float(x.err):.3e}"
            )
        total = gap + x.err
        # mu = -log(total)/log(q) on exact integers, safe far beyond float range
        mu = (math.log(total.denominator) - math.log(total.numerator)) / math.log(q)
        out.append(MuEstimate(k, q, mu))
    return tuple(out)


def convergent_pair(x: NumberClass, k: int) -> tuple[int, int, Fraction, Fraction]:
    """For a factorial-series construction, the canonical convergent
    p_k / q_k with q_k = base^(k!), plus exact bounds on the fractional
    residue delta_k = q_k x - p_k of the untruncated number:
    delta in [delta_lo, delta_hi], 0 < delta_lo."""
    if x.base is None or x.depth is None:
        raise ValueError("convergent_pair needs a factorial-series construction")
    if k < 1:
        raise ValueError("k must be >= 1")
    if k >= x.depth:
        raise PrecisionExhausted(
            f"residue at k={k} needs series depth > {k}, have {x.depth}; "
            f"deepening past {FACTORIAL_DEPTH_CAP} is not supported"
        )
    b = x.base
    qk = b ** math.factorial(k)
    pk = sum(c * b ** (math.factorial(k) - math.factorial(j)) for j, c in enumerate(x.coeffs[:k], start=1))
    delta_lo = sum(
        Fraction(c, b ** (math.factorial(j) - math.factorial(k)))
        for j, c in enumerate(x.coeffs[k : x.depth], start=k + 1)
    )
    delta_hi = delta_lo + qk * x.err
    if delta_lo <= 0:
        raise PrecisionExhausted(f"all stored digits beyond k={k} vanish; residue not certified positive")
    return qk, pk, delta_lo, delta_hi


# ---------------------------------------------------------------------------
# exact range reduction and sine enclosures


def nearest_integer(x: Fraction | int) -> int:
    """Nearest integer, ties to even."""
    x = Fraction(x)
    n = x.numerator // x.denominator
    rem = x - n
    if rem > Fraction(1, 2):
        return n + 1
    if rem < Fraction(1, 2):
        return n
    return n if n % 2 == 0 else n + 1


@dataclass(frozen=True)
class SineInterval:
    """Certified enclosure of |sin(pi r)| for exact rational r."""

    lo: float
    hi: float

    @property
    def mid(self) -> float:
        return 0.5 * (self.lo + self.hi)

    @property
    def width(self) -> float:
        return self.hi - self.lo

    @property
    def is_zero(self) -> bool:
        return self.hi == 0.0


def exact_sine_abs(theta_over_pi: Fraction | int) -> SineInterval:
    """|sin(pi r)| for exact rational r.

    Range reduction (mod 1, fold to [0, 1/2]) is exact on Fractions, so
    integers give the exact zero interval and half-integers exactly one.
    Only the final sine of an argument in [0, pi/2] is floating point, and
    it gets a guard band covering libm rounding plus the pi rounding in the
    argument.
    """
    r = Fraction(theta_over_pi) % 1
    if r > Fraction(1, 2):
        r = 1 - r
    if r == 0:
        return SineInterval(0.0, 0.0)
    if r == Fraction(1, 2):
        return SineInterval(1.0, 1.0)
    arg = math.pi * float(r)
    val = math.sin(arg)
    band = 1e-15 + 5e-16 * arg
    return SineInterval(max(0.0, val - band), min(1.0, val + band))


def sin_pi_enclosure(delta_lo: Fraction, delta_hi: Fraction) -> tuple[Fraction, Fraction]:
    """Exact rational enclosure of sin(pi delta) for 0 <= delta <= 1e-3,
    where delta itself is only known to lie in [delta_lo, delta_hi].
    Uses x - x^3/6 <= sin x <= x on rational pi bounds."""
    delta_lo, delta_hi = Fraction(delta_lo), Fraction(delta_hi)
    if not 0 <= delta_lo <= delta_hi:
        raise ValueError("need 0 <= delta_lo <= delta_hi")
    if delta_hi > Fraction(1, 1000):
        raise ValueError("enclosure only supports delta <= 1e-3")
    hi = PI_HI * delta_hi
    lo = PI_LO * delta_lo * (1 - (PI_HI * delta_hi) ** 2 / 6)
    if lo < 0:
        lo = Fraction(0)
    return lo, hi


# ---------------------------------------------------------------------------
# small-denominator tables


@dataclass(frozen=True)
class SmallDenominatorTable:
    """Rows (l, |sin(pi (l + shift) beta)|) with exact zero detection.

    `slack` bounds the extra uncertainty from beta's truncation error across
    the whole range; `fitted_exponent` is a least-squares decay exponent of
    the lower envelope over dyadic blocks (inf when an exact zero appears)."""

    beta_label: str
    shift: Fraction
    rows: tuple[tuple[int, float], ...]
    zero_rows: tuple[int, ...]
    fitted_exponent: float | None
    slack: float


def small_denominator_sequence(beta: NumberClass, shift: Fraction | int, count: int) -> SmallDenominatorTable:
    """Tabulate |sin(pi (l + shift) beta)| for l up to `count`.

    shift is 0 (whole-frequency sequences) or 1/2 (the half-integer spectrum
    of even-dimensional spheres).  For shift 0 the trivial l = 0 row is
    skipped.  Raises PrecisionExhausted when beta's certified error, scaled
    by pi (count + shift), could move any row by more than 1e-12.
    """
    shift = Fraction(shift)
    if shift.denominator not in (1, 2) or not 0 <= shift < 1:
        raise ValueError(f"shift must be 0 or 1/2, got {shift}")
    if not 1 <= count <= 10**6:
        raise ValueError(f"count must be in [1, 1e6], got {count}")
    slack_fr = PI_HI * (count + shift) * beta.err
    if slack_fr > Fraction(1, 10**12):
        raise PrecisionExhausted(
            f"certified error {float(beta.err):.3e} cannot support {count} rows at 1e-12 resolution"
        )
    num = beta.value.numerator * shift.denominator
    den = beta.value.denominator * shift.denominator
    base_num = beta.value.numerator * shift.numerator  # (shift * beta) numerator over den
    rows: list[tuple[int, float]] = []
    zeros: list[int] = []
    start = 1 if shift == 0 else 0
    for l in range(start, count + 1):
        r = (l * num + base_num) % den
        if 2 * r > den:
            r = den - r
        if r == 0:
            rows.append((l, 0.0))
            zeros.append(l)
            continue
        arg = math.pi * (r / den)
        rows.append((l, math.sin(arg)))
    return SmallDenominatorTable(
        beta_label=str(beta),
        shift=shift,
        rows=tuple(rows),
        zero_rows=tuple(zeros),
        fitted_exponent=_envelope_exponent(rows, zeros),
        slack=float(slack_fr),
    )


def _envelope_exponent(rows: Sequence[tuple[int, float]], zeros: Sequence[int]) -> float | None:
    if zeros:
        return math.inf
    blocks: dict[int, float] = {}
    for l, v in rows:
        if l < 1:
            continue
        j = l.bit_length() - 1
        blocks[j] = min(blocks.get(j, math.inf), v)
    if len(blocks) < 2:
        return None
    xs = [j * math.log(2.0) for j in sorted(blocks)]
    ys = [math.log(blocks[j]) for j in sorted(blocks)]
    n = len(xs)
    mx = sum(xs) / n
    my = sum(ys) / n
    sxx = sum((x - mx) ** 2 for x in xs)
    sxy = sum((x - mx) * (y - my) for x, y in zip(xs, ys))
    return -sxy / sxx


def slow_decay_check(
    table: SmallDenominatorTable | Iterable[tuple[int, float]], exponent: int
) -> tuple[bool, float]:
    """Whether the rows admit a bound value >= C (1+l)^(-exponent) with C > 0.
    Returns (passes, C) where C is the best constant; an exact zero row
    forces (False, 0)."""
    if exponent < 0:
        raise ValueError("exponent must be >= 0")
    rows = table.rows if isinstance(table, SmallDenominatorTable) else tuple(table)
    if not rows:
        raise ValueError("no rows")
    best = math.inf
    for l, v in rows:
        if v == 0.0:
            return False, 0.0
        best = min(best, v * float(1 + l) ** exponent)
    return best > 0.0, best


# ---------------------------------------------------------------------------
# joint lower bounds and slow decrease


def joint_sine_lower_bound_check(
    alpha: NumberClass, exponent: int, x_max: float, samples: int = 200_000
) -> tuple[float, bool]:
    """Empirical constant C = min over (0, x_max] of
    (|sin x| + |sin(alpha x)|) / x * (1+x)^exponent.

    Requires a certified irrationality measure: for rational or Liouville
    alpha no such positive constant exists, so those classes are rejected.
    The grid is refined near the zeros of both sines, where the minimum
    must occur.
    """
    import numpy as np

    if alpha.kind != KIND_MEASURE_BOUNDED or alpha.measure_bound is None:
        raise ValueError(f"joint lower bound needs a certified irrationality measure, got kind={alpha.kind}")
    if x_max <= 0 or exponent < 0 or samples < 16:
        raise ValueError("x_max must be > 0, exponent >= 0, samples >= 16")
    a = float(alpha.value)
    xs = [np.linspace(x_max / samples, x_max, samples)]
    offsets = np.array([0.0, 1e-9, -1e-9, 1e-6, -1e-6, 1e-3, -1e-3, 0.05, -0.05])
    for period in (math.pi, math.pi / a):
        k_max = int(x_max / period)
        if k_max >= 1:
            centers = np.arange(1, k_max + 1, dtype=float) * period
            pts = (centers[:, None] + offsets[None, :]).ravel()
            xs.append(pts)
    x = np.concatenate(xs)
    x = x[(x > 0) & (x <= x_max)]
    score = (np.abs(np.sin(x)) + np.abs(np.sin(a * x))) / x * (1.0 + x) ** exponent
    c = float(score.min())
    return c, c > 0.0


@dataclass(frozen=True)
class SlowDecreaseRow:
    xi: float
    threshold: float
    eta: float | None
    value: float

    @property
    def ok(self) -> bool:
        return self.eta is not None


@dataclass(frozen=True)
class SlowDecreaseReport:
    a_const: float
    xi_max: float
    rows: tuple[SlowDecreaseRow, ...]

    @property
    def all_pass(self) -> bool:
        return all(r.ok for r in self.rows)

    @property
    def failures(self) -> tuple[float, ...]:
        return tuple(r.xi for r in self.rows if not r.ok)


def slowly_decreasing_probe(
    symbol: MultiplierSymbol, a_const: float, xi_max: float, samples: int = 512
) -> SlowDecreaseReport:
    """For each sampled xi, search the window |eta - xi| <= A log(2 + xi) for
    a point with |symbol(|eta|)| >= (A + xi)^(-A).

    Candidates are xi itself, every half-period point (k + 1/2) pi in the
    window (where |sin| peaks), and a uniform sweep of the window.  One row
    per sample, recording the witness or the failure.
    """
    if a_const <= 0 or xi_max <= 0 or samples < 2:
        raise ValueError("need A > 0, xi_max > 0, samples >= 2")
    rows: list[SlowDecreaseRow] = []
    for i in range(samples):
        xi = xi_max * i / (samples - 1)
        window = a_const * math.log(2.0 + xi)
        threshold = (a_const + xi) ** (-a_const)
        cands = [xi]
        k_lo = math.ceil((xi - window) / math.pi - 0.5)
        k_hi = math.floor((xi + window) / math.pi - 0.5)
        cands.extend((k + 0.5) * math.pi for k in range(k_lo, k_hi + 1))
        cands.extend(xi - window + 2.0 * window * j / 32 for j in range(33))
        best_eta, best_val = None, 0.0
        for eta in cands:
            v = abs(symbol(abs(eta)))
            if v > best_val:
                best_eta, best_val = eta, v
            if v >= threshold:
                best_eta, best_val = eta, v
                break
        if best_val >= threshold:
            rows.append(SlowDecreaseRow(xi, threshold, best_eta, best_val))
        else:
            rows.append(SlowDecreaseRow(xi, threshold, None, best_val))
    return SlowDecreaseReport(a_const, xi_max, tuple(rows))


# ---------------------------------------------------------------------------
# Bezout data and odd-denominator margins


def bezout(p: int, q: int) -> tuple[int, int]:
    """The pair (k, l) with k p + l q = 1 and minimal |k| <= q, |l| <= p;
    on a tie the positive k wins."""
    p, q = int(p), int(q)
    if p < 1 or q < 1:
        raise ValueError(f"need positive integers, got ({p}, {q})")
    if math.gcd(p, q) != 1:
        raise NotCoprime(f"gcd({p}, {q}) != 1")
    if q == 1:
        return 0, 1
    k0 = pow(p, -1, q)
    k = k0 if abs(k0) <= abs(k0 - q) else k0 - q
    if abs(k0) == abs(k0 - q):
        k = max(k0, k0 - q)
    l = (1 - k * p) // q
    return k, l


@dataclass(frozen=True)
class OddTypeReport:
    """Scan of the odd-denominator margins q |beta - round| over q in
    (64, qmax].  `min_ratio` is the smallest certified margin * q^3; the
    construction is of odd type exactly when it stays above 1."""

    qmax: int
    depth: int
    tail: float
    count: int
    min_ratio: float
    worst_q: int
    violations: tuple[int, ...]

    @property
    def passes(self) -> bool:
        return not self.violations and self.min_ratio > 1.0


def odd_type_verifier(qmax: int) -> OddTypeReport:
    """Certify |q beta - nearest| > q^(-3) for every odd q in (64, qmax],
    beta = sum 2^(-j!).

    The truncation depth is the smallest one whose tail satisfies
    qmax * tail <= (1/2) qmax^(-3); every comparison then has slack for the
    discarded terms, so a pass certifies the untruncated number.
    """
    if not 65 <= qmax <= 10**5:
        raise ValueError(f"qmax must be in [65, 1e5], got {qmax}")
    depth = None
    for j in range(1, FACTORIAL_DEPTH_CAP + 1):
        tail = Fraction(1, 2 ** (math.factorial(j + 1) - 1))
        if qmax * tail * 2 * qmax**3 <= 1:
            depth = j
            break
    if depth is None:
        raise PrecisionExhausted(f"no truncation within depth cap certifies qmax={qmax}")
    beta = binary_factorial_class(depth)
    tail = beta.err
    min_ratio = math.inf
    worst_q = 0
    violations: list[int] = []
    count = 0
    for q in range(65, qmax + 1, 2):
        count += 1
        x = q * beta.value
        margin = abs(x - nearest_integer(x))
        lo = margin - q * tail
        ratio = float(lo * q**3)
        if ratio < min_ratio:
            min_ratio = ratio
            worst_q = q
        if lo * q**3 <= 1:
            violations.append(q)
    return OddTypeReport(
        qmax=qmax,
        depth=depth,
        tail=float(tail),
        count=count,
        min_ratio=min_ratio,
        worst_q=worst_q,
        violations=tuple(violations),
    )


@dataclass(frozen=True)
class DoubledFractionWitness:
    """Witness that 2 beta is Liouville: |2 beta - p/q| <= q^(-N) with the
    doubled fraction p/q = 2 p1 / (2 q1)."""

    exponent: int
    p: int
    q: int
    gap_lo: Fraction
    gap_hi: Fraction
    bound: Fraction

    @property
    def ok(self) -> bool:
        return Fraction(0) < self.gap_lo and self.gap_hi <= self.bound


def doubled_liouville_bound(x: NumberClass, exponent: int) -> DoubledFractionWitness:
    """For a factorial-series x and target exponent N, produce the doubled
    convergent 2 p_k / 2 q_k (k = 2N) witnessing |2x - p/q| <= q^(-N)."""
    if x.base is None or x.depth is None:
        raise ValueError("doubled bound needs a factorial-series construction")
    if exponent < 1:
        raise ValueError("exponent must be >= 1")
    k = 2 * exponent
    qk, pk, delta_lo, delta_hi = convergent_pair(x, k)
    # |2x - 2 pk / (2 qk)| = 2 delta / qk, delta in [delta_lo, delta_hi]
    gap_lo = 2 * delta_lo / qk
    gap_hi = 2 * delta_hi / qk
    bound = Fraction(1, (2 * qk) ** exponent)
    return DoubledFractionWitness(exponent, 2 * pk, 2 * qk, gap_lo, gap_hi, bound)
