"""Sampling distributions for scene parameter perturbation.

A DistributionSpec is a validated, dimension-tagged description of how one
scene dimension varies across a dataset. Args are stored in canonical units
so sampling never touches unit conversion. Actual drawing lives in
:mod:`hazgen.genvar`.
"""

from __future__ import annotations

from dataclasses import dataclass

from .units import Dimension, Quantity

FORMS = ("constant", "uniform", "normal", "choice")


@dataclass(frozen=True)
class DistributionSpec:
    """One parameter distribution.

    ``args`` meaning by form: constant ``(value,)``; uniform ``(lo, hi)``;
    normal ``(mu, sigma, lo, hi)`` truncated to [lo, hi]; choice = the values.
    ``weights`` applies to choice only (equal weights when None).
    """

    form: str
    args: tuple[float, ...]
    dimension: Dimension
    weights: tuple[float, ...] | None = None

    def problems(self) -> list[str]:
        """All validity violations, empty when well-formed."""
        out: list[str] = []
        if self.form not in FORMS:
            return [f"unknown distribution form {self.form!r}"]
        arity = {"constant": 1, "uniform": 2, "normal": 4}
        if self.form in arity and len(self.args) != arity[self.form]:
            out.append(f"{self.form} takes {arity[self.form]} argument(s), got {len(self.args)}")
            return out
        if self.form == "uniform":
            lo, hi = self.args
            if not lo < hi:
                out.append(f"uniform bounds must satisfy lo < hi, got ({lo!r}, {hi!r})")
        elif self.form == "normal":
            _, sigma, lo, hi = self.args
            if not sigma > 0:
                out.append(f"normal sigma must be > 0, got {sigma!r}")
            if not lo < hi:
                out.append(f"normal truncation must satisfy lo < hi, got ({lo!r}, {hi!r})")
        elif self.form == "choice":
            if not self.args:
                out.append("choice needs at least one value")
            if self.weights is not None:
                if len(self.weights) != len(self.args):
                    out.append("choice weights must match the number of values")
                if any(w <= 0 for w in self.weights):
                    out.append("choice weights must be positive")
        if self.form != "choice" and self.weights is not None:
            out.append(f"{self.form} does not take weights")
        return out

    def support(self) -> tuple[float, float]:
        """Smallest interval containing every possible draw (canonical units)."""
        if self.form == "constant":
            return self.args[0], self.args[0]
        if self.form == "uniform":
            return self.args[0], self.args[1]
        if self.form == "normal":
            return self.args[2], self.args[3]
        return min(self.args), max(self.args)


def constant(q: Quantity) -> DistributionSpec:
    return DistributionSpec("constant", (q.canonical,), q.dimension)


def from_quantities(
    form: str, args: list[Quantity], weights: list[float] | None = None
) -> DistributionSpec:
    """Build a spec from parsed quantities; they must share one dimension."""
    if not args:
        return DistributionSpec(form, (), Dimension.DIMENSIONLESS,
                                tuple(weights) if weights else None)
    dims = {q.dimension for q in args}
    if len(dims) > 1:
        names = sorted(d.value for d in dims)
        raise ValueError(f"mixed dimensions in one distribution: {', '.join(names)}")
    return DistributionSpec(
        form,
        tuple(q.canonical for q in args),
        args[0].dimension,
        tuple(weights) if weights else None,
    )
