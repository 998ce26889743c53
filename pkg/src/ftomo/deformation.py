"""Deformation families f(n) and the operator algebra quantities built on them.

A deformation turns the ladder operator a into A = a f(n), where f is a real
positive function of the excitation number.  Supported families:

  identity    f(n) = 1                       (ordinary oscillator)
  kerr        f(n) = sqrt((n - 1 + lam)/lam) (Kerr-type nonlinearity, lam > 0)
  qosc        f(n) = sqrt(sinh(lam n)/(lam n)), limit 1 at lam n -> 0
  tabulated   explicit values, mainly for adversarial tests

The deformed factorial f(n)! is taken over k = 1..n: the k = 0 factor is a
common prefactor of every coefficient and cancels in normalization, and for
the kerr family f(0) is not even real when lam < 1.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DeformationSingular

# sinh(t) overflows doubles near t = 710; switch to ln sinh t ~= t - ln 2
_SINH_CUTOFF = 700.0


@dataclass(frozen=True)
class DeformationSpec:
    """One deformation family with its parameters."""

    family: str
    lam: float = 0.0
    values: tuple = field(default_factory=tuple)
    description: str = ""

    @staticmethod
    def identity(description=""):
        return DeformationSpec("identity", description=description)

    @staticmethod
    def kerr(lam, description=""):
        if not lam > 0:
            raise ValueError("kerr deformation requires lam > 0")
        return DeformationSpec("kerr", lam=float(lam), description=description)

    @staticmethod
    def qosc(lam, description=""):
        if lam < 0:
            raise ValueError("qosc deformation requires lam >= 0")
        return DeformationSpec("qosc", lam=float(lam), description=description)

    @staticmethod
    def tabulated(values, description=""):
        # zeros/spikes are allowed at construction; reading one raises
        return DeformationSpec(
            "tabulated", values=tuple(float(v) for v in values),
            description=description,
        )

    def to_json(self):
        if self.family == "identity":
            return {"family": "identity"}
        if self.family in ("kerr", "qosc"):
            return {"family": self.family, "lambda": self.lam}
        return {"family": "tabulated", "values": list(self.values)}

    @staticmethod
    def from_json(obj):
        family = obj.get("family")
        if family == "identity":
            return DeformationSpec.identity()
        if family == "kerr":
            return DeformationSpec.kerr(obj["lambda"])
        if family == "qosc":
            return DeformationSpec.qosc(obj["lambda"])
        if family == "tabulated":
            return DeformationSpec.tabulated(obj["values"])
        raise ValueError(f"unknown deformation family: {family!r}")

    def label(self):
        if self.family in ("kerr", "qosc"):
            return f"{self.family}({self.lam:g})"
        if self.family == "tabulated":
            return f"tabulated[{len(self.values)}]"
        return "identity"


def _f_squared(spec, n):
    """f(n)^2; raises DeformationSingular where f(n) is zero or not real."""
    if spec.family == "identity":
        return 1.0
    if spec.family == "kerr":
        val = (n - 1 + spec.lam) / spec.lam
        if val <= 0:
            raise DeformationSingular(
                f"kerr deformation is singular at n={n} for lambda={spec.lam}"
            )
        return val
    if spec.family == "qosc":
        t = spec.lam * n
        if t == 0:
            return 1.0  # limit sinh(t)/t -> 1
        if t > _SINH_CUTOFF:
            return math.exp(t - math.log(2.0) - math.log(t))
        return math.sinh(t) / t
    if spec.family == "tabulated":
        if n >= len(spec.values):
            raise DeformationSingular(
                f"tabulated deformation has no value at n={n}"
            )
        v = spec.values[n]
        if not (v > 0) or not math.isfinite(v):
            raise DeformationSingular(
                f"tabulated deformation value at n={n} is {v}"
            )
        return v * v
    raise ValueError(f"unknown deformation family: {spec.family!r}")


def f_value(spec, n):
    """f(n) for the given family; DeformationSingular on zero/non-real values."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if spec.family == "tabulated":
        if n >= len(spec.values):
            raise DeformationSingular(f"tabulated deformation has no value at n={n}")
        v = spec.values[n]
        if not (v > 0) or not math.isfinite(v):
            raise DeformationSingular(f"tabulated deformation value at n={n} is {v}")
        return v
    if spec.family == "qosc":
        # f^2 overflows doubles long before f does; go through the log form
        return math.exp(log_f(spec, n))
    return math.sqrt(_f_squared(spec, n))


def log_f(spec, n):
    """ln f(n) for n >= 1, staying in log space for extreme qosc arguments."""
    if spec.family == "identity":
        return 0.0
    if spec.family == "qosc":
        t = spec.lam * n
        if t == 0:
            return 0.0
        if t > _SINH_CUTOFF:
            return 0.5 * (t - math.log(2.0) - math.log(t))
        return 0.5 * math.log(math.sinh(t) / t)
    return 0.5 * math.log(_f_squared(spec, n))


def log_f_factorial(spec, n):
    """ln prod_{k=1..n} f(k); zero for n = 0."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return float(log_f_factorial_table(spec, n)[n])


def log_f_factorial_table(spec, n_max):
    """Cumulative ln f(k)! for k = 0..n_max as an array (table[0] = 0)."""
    table = np.empty(n_max + 1, dtype=np.float64)
    table[0] = 0.0
    acc = 0.0
    for k in range(1, n_max + 1):
        acc += log_f(spec, k)
        table[k] = acc
    return table


def commutator_diag(spec, n):
    """Diagonal of [A, A+] in the number basis: (n+1) f(n+1)^2 - n f(n)^2.

    The n f(n)^2 term is dropped at n = 0 without evaluating f(0), which may
    not exist (kerr with lam < 1).
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    upper = (n + 1) * _f_squared(spec, n + 1)
    lower = n * _f_squared(spec, n) if n > 0 else 0.0
    return upper - lower
