"""Band-limited spectral fields and the multiplier operators that act on them.

A field is a finite sum of plane-wave modes c * exp(i xi . x).  Every operator
in this package is a Fourier multiplier, so it acts diagonally: the amplitude
at frequency xi is multiplied by a symbol value at the spectral radius
lambda = |xi|.  Keeping fields as explicit mode lists makes each operator
identity checkable mode by mode, with no discretization error beyond the
symbol evaluations themselves.
"""

from __future__ import annotations

import cmath
import json
import math
import os
import tempfile
from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass


class DimensionMismatch(ValueError):
    """Operands disagree on the ambient dimension."""


class SymbolUndefined(RuntimeError):
    """A symbol evaluation produced a non-finite value: an unhandled
    singularity, which is a programming error rather than bad data."""


@dataclass(frozen=True)
class Mode:
    xi: tuple[float, ...]
    amp: complex

    @property
    def radius(self) -> float:
        return math.hypot(*self.xi)


@dataclass(frozen=True)
class SpectralField:
    """Canonical finite mode sum: frequencies sorted, exact duplicates merged,
    zero amplitudes dropped.  Construct through `field` or `canonicalize`."""

    dim: int
    modes: tuple[Mode, ...]

    def amplitude_at(self, xi: tuple[float, ...]) -> complex:
        for m in self.modes:
            if m.xi == xi:
                return m.amp
        return 0j

    def frequencies(self) -> tuple[tuple[float, ...], ...]:
        return tuple(m.xi for m in self.modes)


def _clean_xi(dim: int, xi: Sequence[float]) -> tuple[float, ...]:
    if len(xi) != dim:
        raise DimensionMismatch(f"frequency {tuple(xi)} does not have dim {dim}")
    out = []
    for v in xi:
        v = float(v) + 0.0  # fold -0.0 into +0.0 so merging and sorting agree
        if not math.isfinite(v):
            raise ValueError(f"non-finite frequency component {v!r}")
        out.append(v)
    return tuple(out)


def field(dim: int, entries: Iterable[tuple[Sequence[float], complex]]) -> SpectralField:
    """Build a canonical field from (frequency, amplitude) pairs."""
    if dim < 1:
        raise ValueError(f"dim must be a positive integer, got {dim}")
    merged: dict[tuple[float, ...], complex] = {}
    for xi, amp in entries:
        key = _clean_xi(dim, xi)
        amp = complex(amp)
        if not (math.isfinite(amp.real) and math.isfinite(amp.imag)):
            raise ValueError(f"non-finite amplitude {amp!r}")
        merged[key] = merged.get(key, 0j) + amp
    modes = tuple(Mode(xi, amp) for xi, amp in sorted(merged.items()) if amp != 0)
    return SpectralField(dim, modes)


def canonicalize(f: SpectralField) -> SpectralField:
    return field(f.dim, ((m.xi, m.amp) for m in f.modes))


def evaluate(f: SpectralField, x: Sequence[float]) -> complex:
    if len(x) != f.dim:
        raise DimensionMismatch(f"point of length {len(x)} in dim {f.dim}")
    total = 0j
    for m in f.modes:
        phase = sum(a * b for a, b in zip(m.xi, x))
        total += m.amp * cmath.exp(1j * phase)
    return total


@dataclass(frozen=True)
class MultiplierSymbol:
    """Radial Fourier multiplier: a function of the spectral radius lambda >= 0.

    `singular_note` records removable singularities and how they are filled,
    purely as documentation; `fn` must already return the continued value.
    """

    label: str
    fn: Callable[[float], complex]
    singular_note: str = ""

    def __call__(self, lam: float) -> complex:
        return self.fn(lam)


def symbol_product(a: MultiplierSymbol, b: MultiplierSymbol) -> MultiplierSymbol:
    return MultiplierSymbol(f"({a.label})*({b.label})", lambda lam: a.fn(lam) * b.fn(lam))


def symbol_constant(c: complex, label: str | None = None) -> MultiplierSymbol:
    return MultiplierSymbol(label if label is not None else f"{c:g}", lambda lam: c)


def apply_multiplier(f: SpectralField, symbol: MultiplierSymbol) -> SpectralField:
    out = []
    for m in f.modes:
        try:
            value = complex(symbol(m.radius))
        except (ArithmeticError, ValueError) as exc:
            raise SymbolUndefined(f"symbol {symbol.label} failed at lambda={m.radius!r}") from exc
        if not (math.isfinite(value.real) and math.isfinite(value.imag)):
            raise SymbolUndefined(f"symbol {symbol.label} returned {value!r} at lambda={m.radius!r}")
        out.append((m.xi, value * m.amp))
    return field(f.dim, out)


def linear_combine(coeffs: Sequence[complex], fields: Sequence[SpectralField]) -> SpectralField:
    if len(coeffs) != len(fields):
        raise ValueError(f"{len(coeffs)} coefficients for {len(fields)} fields")
    if not fields:
        raise ValueError("need at least one field")
    dim = fields[0].dim
    for f in fields:
        if f.dim != dim:
            raise DimensionMismatch(f"mixed dimensions {dim} and {f.dim}")
    entries: list[tuple[tuple[float, ...], complex]] = []
    for c, f in zip(coeffs, fields):
        for m in f.modes:
            entries.append((m.xi, complex(c) * m.amp))
    return field(dim, entries)


def subtract(a: SpectralField, b: SpectralField) -> SpectralField:
    return linear_combine([1.0, -1.0], [a, b])


def max_abs_amp(f: SpectralField) -> float:
    return max((abs(m.amp) for m in f.modes), default=0.0)


def zero_field(dim: int) -> SpectralField:
    return SpectralField(dim, ())


# ---------------------------------------------------------------------------
# serialization


def field_to_json(f: SpectralField) -> dict:
    return {
        "dim": f.dim,
        "modes": [{"xi": list(m.xi), "amp": [m.amp.real, m.amp.imag]} for m in f.modes],
    }


def field_from_json(obj: dict) -> SpectralField:
    try:
        dim = int(obj["dim"])
        entries = [
            (tuple(float(v) for v in m["xi"]), complex(float(m["amp"][0]), float(m["amp"][1])))
            for m in obj["modes"]
        ]
    except (KeyError, TypeError, IndexError) as exc:
        raise ValueError(f"malformed field object: {exc}") from exc
    return field(dim, entries)


def save_field(f: SpectralField, path: str) -> None:
    write_text_atomic(path, json.dumps(field_to_json(f), indent=2) + "\n")


def load_field(path: str) -> SpectralField:
    with open(path, encoding="utf-8") as fh:
        return field_from_json(json.load(fh))


def write_text_atomic(path: str, text: str) -> None:
    """Write via a sibling temp file and rename, so readers never see a torn file."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix="~")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
