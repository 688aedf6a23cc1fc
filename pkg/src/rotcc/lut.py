"""Lookup-table compilation and the transform into subset-firing circuits.

A canonical lookup-table fires exactly one gate per basis input. Removing the
|0>-controls and compensating the angles by cardinality-ordered subtraction
yields a circuit with the same subset-firing structure as polynomial rotation
circuits, which makes the greedy gate-omission procedure applicable to
arbitrary functions.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .core import DomainError, LookupTable, RegisterSpec, RotationCircuit
from .polynomial import Polynomial

log = logging.getLogger(__name__)

ZERO_AND_EXCLUDE = "zero_and_exclude"
REJECT = "reject"


@dataclass(frozen=True)
class FunctionSpec:
    """A target function for lookup-table compilation.

    ``undefined_policy`` decides what happens at representable inputs where
    the function is undefined: ``zero_and_exclude`` stores angle 0 and marks
    the mask excluded from error metrics; ``reject`` raises.
    """

    kind: str
    params: tuple[float, ...] = ()
    fn: Callable[[float], float] | None = None
    name: str = ""
    undefined_policy: str = ZERO_AND_EXCLUDE

    def __post_init__(self) -> None:
        if self.undefined_policy not in (ZERO_AND_EXCLUDE, REJECT):
            raise ValueError(f"unknown undefined_policy {self.undefined_policy!r}")
        if self.kind == "custom" and self.fn is None:
            raise ValueError("custom function spec needs a callable")

    @classmethod
    def arcsin(cls, **kw) -> "FunctionSpec":
        return cls("arcsin", name="arcsin", **kw)

    @classmethod
    def asin_recip(cls, **kw) -> "FunctionSpec":
        """2*arcsin(2^-n / x); n is taken from the register at evaluation time."""
        return cls("asin_recip", name="asin-recip", **kw)

    @classmethod
    def sin(cls, **kw) -> "FunctionSpec":
        return cls("sin", name="sin", **kw)

    @classmethod
    def exp(cls, **kw) -> "FunctionSpec":
        return cls("exp", name="exp", **kw)

    @classmethod
    def power(cls, d: int, **kw) -> "FunctionSpec":
        return cls("power", params=(float(d),), name=f"x^{d}", **kw)

    @classmethod
    def polynomial(cls, coefficients, **kw) -> "FunctionSpec":
        p = Polynomial(tuple(coefficients))
        name = "poly:" + ",".join(repr(c) for c in p.coefficients)
        return cls("polynomial", params=p.coefficients, name=name, **kw)

    @classmethod
    def custom(cls, fn: Callable[[float], float], name: str = "custom", **kw) -> "FunctionSpec":
        return cls("custom", fn=fn, name=name, **kw)

    def evaluator(self, register: RegisterSpec) -> Callable[[float], float]:
        """Scalar real -> real evaluation; raises DomainError when undefined."""
        if self.kind == "arcsin":
            def f(x: float) -> float:
                if abs(x) > 1.0:
                    raise DomainError(f"arcsin undefined at {x}")
                return math.asin(x)
        elif self.kind == "asin_recip":
            eps = 2.0 ** -register.n
            def f(x: float) -> float:
                if x == 0.0 or abs(eps / x) > 1.0:
                    raise DomainError(f"2*arcsin(2^-n/x) undefined at {x}")
                return 2.0 * math.asin(eps / x)
        elif self.kind == "sin":
            f = math.sin
        elif self.kind == "exp":
            f = math.exp
        elif self.kind == "power":
            d = int(self.params[0])
            def f(x: float) -> float:
                return x**d
        elif self.kind == "polynomial":
            f = Polynomial(self.params)
        elif self.kind == "custom":
            fn = self.fn
            def f(x: float) -> float:
                try:
                    y = float(fn(x))
                except (ValueError, ZeroDivisionError, OverflowError) as exc:
                    raise DomainError(f"custom function undefined at {x}: {exc}") from exc
                if not math.isfinite(y):
                    raise DomainError(f"custom function non-finite at {x}")
                return y
        else:
            raise ValueError(f"unknown function kind {self.kind!r}")
        return f

    def display_name(self) -> str:
        return self.name or self.kind


def compile_lut(f: FunctionSpec, register: RegisterSpec) -> LookupTable:
    """Evaluate f on all 2^n register values to build a dense angle table.

    arcsin targets with representable values outside [-1, 1] are rejected
    outright; other undefined points follow the spec's undefined_policy.
    """
    if f.kind == "arcsin":
        bad = [w for w in (register.value_of(m) for m in range(1 << register.n)) if abs(w) > 1.0]
        if bad:
            raise DomainError(f"register represents values outside arcsin domain, e.g. {bad[0]}")

    evaluate = f.evaluator(register)
    size = 1 << register.n
    angles = np.zeros(size)
    excluded: list[int] = []
    values = register.values()
    for mask in range(size):
        try:
            angles[mask] = evaluate(float(values[mask]))
        except DomainError:
            if f.undefined_policy == REJECT:
                raise
            excluded.append(mask)
    if excluded:
        log.info(
            "%s undefined at %d of %d inputs; stored angle 0 and excluded them",
            f.display_name(), len(excluded), size,
        )
    return LookupTable(register, angles, tuple(excluded))


def transform_lut(lut: LookupTable) -> RotationCircuit:
    """Turn exact-match firing into subset firing.

    Computes the subset-lattice Moebius transform
    theta[s] = sum_{t subset s} (-1)^(|s|-|t|) * angles[t] with the in-place
    fast transform, O(n * 2^n). Zero-angle gates are kept; canonicalize to
    filter them.
    """
    n = lut.register.n
    a = lut.angles.astype(float).copy()
    for i in range(n):
        view = a.reshape(-1, 2, 1 << i)
        view[:, 1, :] -= view[:, 0, :]
    return RotationCircuit(lut.register, {mask: float(a[mask]) for mask in range(1 << n)})


def transform_lut_reference(lut: LookupTable) -> RotationCircuit:
    """Literal cardinality-ordered subtraction; O(n * 2^2n), for certification only.

    Walks control sets by ascending cardinality and subtracts each gate's angle
    from every strict superset, exactly as the transformation is defined.
    """
    n = lut.register.n
    size = 1 << n
    circuit = lut.angles.astype(float).copy()
    by_card: list[list[int]] = [[] for _ in range(n + 1)]
    for mask in range(size):
        by_card[mask.bit_count()].append(mask)
    for card in range(n):
        for small in by_card[card]:
            theta = circuit[small]
            for big_card in range(card + 1, n + 1):
                for big in by_card[big_card]:
                    if small & big == small and small != big:
                        circuit[big] -= theta
    return RotationCircuit(lut.register, {mask: float(circuit[mask]) for mask in range(size)})


def zeta_transform(thetas: np.ndarray) -> np.ndarray:
    """Subset-sum transform, the inverse of the Moebius transform.

    out[m] = sum_{s subset m} thetas[s]; bit levels ascending so the
    accumulation order matches the fast Moebius transform.
    """
    size = len(thetas)
    n = size.bit_length() - 1
    if 1 << n != size:
        raise ValueError("table length must be a power of two")
    a = np.asarray(thetas, dtype=float).copy()
    for i in range(n):
        view = a.reshape(-1, 2, 1 << i)
        view[:, 1, :] += view[:, 0, :]
    return a
