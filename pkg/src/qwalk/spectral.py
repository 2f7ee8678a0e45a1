"""Eigenphase analysis: periodic vs quasi-periodic dynamics and revivals.

Rationality of an eigenphase is decided relative to a tolerance ``eps`` and a
denominator cap ``q_max``. Floating point cannot prove irrationality, so a
``QuasiPeriodic`` verdict only means no fraction with ``q <= q_max`` lies
within ``eps`` of some eigenphase.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, replace
from fractions import Fraction

import numpy as np

from .coin import is_unitary
from .evolution import GlobalUnitary

DEFAULT_EPS = 1e-9
DEFAULT_QMAX = 10_000
UNIT_MODULUS_TOL = 1e-9


class Classification(str, enum.Enum):
    PERIODIC = "Periodic"
    QUASI_PERIODIC = "QuasiPeriodic"


class SpectralError(ValueError):
    pass


@dataclass(frozen=True)
class SpectrumAnalysis:
    eigenvalues: np.ndarray
    args_over_2pi: np.ndarray
    rational_approx: tuple[tuple[int, int] | None, ...] = ()
    classification: Classification | None = None
    predicted_period: int | None = None
    period_up_to_phase: int | None = None
    q_max: int | None = None
    eps: float | None = None

    def to_json(self) -> dict:
        rows = []
        for k, (lam, a) in enumerate(zip(self.eigenvalues, self.args_over_2pi)):
            pq = self.rational_approx[k] if self.rational_approx else None
            rows.append(
                {
                    "re": float(lam.real),
                    "im": float(lam.imag),
                    "arg_over_2pi": float(a),
                    "p": None if pq is None else pq[0],
                    "q": None if pq is None else pq[1],
                }
            )
        return {
            "eigenvalues": rows,
            "classification": None if self.classification is None else self.classification.value,
            "predicted_period": self.predicted_period,
            "period_up_to_phase": self.period_up_to_phase,
            "tolerance": {"q_max": self.q_max, "eps": self.eps},
        }


def _matrix(u: GlobalUnitary | np.ndarray) -> np.ndarray:
    return u.matrix if isinstance(u, GlobalUnitary) else np.asarray(u)


def eigen_spectrum(u: GlobalUnitary | np.ndarray) -> SpectrumAnalysis:
    """Eigenvalues of ``u`` and their arguments as fractions of a full turn in [0, 1)."""
    m = _matrix(u)
    if not is_unitary(m, 1e-10):
        raise SpectralError("matrix is not unitary")
    lam = np.linalg.eigvals(m)
    bad = np.abs(np.abs(lam) - 1.0)
    if bad.max(initial=0.0) > UNIT_MODULUS_TOL:
        raise SpectralError(f"eigenvalue off the unit circle by {bad.max():.2e}")
    args = np.mod(np.angle(lam) / (2 * np.pi), 1.0)
    # mod can return exactly 1.0 for tiny negative angles
    args[args >= 1.0] = 0.0
    return SpectrumAnalysis(eigenvalues=lam, args_over_2pi=args)


def _simplest_in(lo: Fraction, hi: Fraction) -> Fraction:
    """Fraction with the smallest denominator in the closed interval [lo, hi]."""
    # continued-fraction descent: strip the common integer part, invert, repeat
    terms: list[int] = []
    while True:
        fl = math.floor(lo)
        if fl == lo:
            value = Fraction(fl)
            break
        if fl < math.floor(hi):
            value = Fraction(fl + 1)
            break
        terms.append(fl)
        lo, hi = 1 / (hi - fl), 1 / (lo - fl)
    for a in reversed(terms):
        value = a + 1 / value
    return value


def rationalize(arg_over_2pi: float, q_max: int = DEFAULT_QMAX, eps: float = DEFAULT_EPS) -> tuple[int, int] | None:
    """Smallest-denominator ``p/q`` within ``eps`` of the input, with ``q <= q_max``.

    Returns ``(p, q)`` in lowest terms with ``0 <= p < q``, or ``None``.
    """
    x = Fraction(float(arg_over_2pi))
    e = Fraction(float(eps))
    f = _simplest_in(x - e, x + e)
    if f.denominator > q_max:
        return None
    return f.numerator % f.denominator, f.denominator


def _lcm_of_denominators(pairs) -> int | None:
    t = 1
    for pq in pairs:
        if pq is None:
            return None
        p, q = pq
        t = math.lcm(t, q // math.gcd(p, q))
    return t


def predict_period(spec: SpectrumAnalysis, q_max: int = DEFAULT_QMAX, eps: float = DEFAULT_EPS) -> tuple[int | None, int | None]:
    """Return ``(T, T_phase)``.

    ``T`` is the lcm of the eigenphase denominators, after which ``U^T = I``.
    ``T_phase`` is the lcm of denominators of eigenphase differences, after
    which ``U`` returns to a multiple of the identity. Either is ``None`` when
    some phase does not rationalise.
    """
    approx = spec.rational_approx or tuple(rationalize(a, q_max, eps) for a in spec.args_over_2pi)
    period = _lcm_of_denominators(approx)
    ref = spec.args_over_2pi[0]
    diffs = [rationalize(float(np.mod(a - ref, 1.0)) % 1.0, q_max, 2 * eps) for a in spec.args_over_2pi]
    return period, _lcm_of_denominators(diffs)


def classify(spec: SpectrumAnalysis, q_max: int = DEFAULT_QMAX, eps: float = DEFAULT_EPS) -> Classification:
    approx = spec.rational_approx or tuple(rationalize(a, q_max, eps) for a in spec.args_over_2pi)
    if all(pq is not None for pq in approx):
        return Classification.PERIODIC
    return Classification.QUASI_PERIODIC


def analyze(u: GlobalUnitary | np.ndarray, q_max: int = DEFAULT_QMAX, eps: float = DEFAULT_EPS) -> SpectrumAnalysis:
    """Full spectral report: eigenvalues, rational forms, verdict and periods."""
    spec = eigen_spectrum(u)
    approx = tuple(rationalize(a, q_max, eps) for a in spec.args_over_2pi)
    spec = replace(spec, rational_approx=approx, q_max=q_max, eps=eps)
    cls = classify(spec, q_max, eps)
    period, phase_period = predict_period(spec, q_max, eps)
    if cls is Classification.QUASI_PERIODIC:
        period = None
    return replace(spec, classification=cls, predicted_period=period, period_up_to_phase=phase_period)


def revival_time(
    u: GlobalUnitary | np.ndarray,
    s0: np.ndarray,
    fidelity_threshold: float = 1 - 1e-9,
    t_max: int = 10_000,
) -> tuple[int, float] | None:
    """First ``t >= 1`` with ``|<s0|U^t s0>| >= fidelity_threshold``."""
    if not 0.0 < fidelity_threshold <= 1.0:
        raise ValueError("fidelity threshold must be in (0, 1]")
    if t_max < 1:
        raise ValueError("t_max must be at least 1")
    m = u.sparse if isinstance(u, GlobalUnitary) else np.asarray(u)
    s0 = np.asarray(s0, dtype=complex)
    s = s0
    for t in range(1, t_max + 1):
        s = m @ s
        fid = abs(np.vdot(s0, s))
        if fid >= fidelity_threshold:
            return t, float(fid)
    return None
