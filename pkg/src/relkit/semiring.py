"""Closed-semiring abstraction and the built-in carrier instances.

A closed semiring bundles a carrier set with choice (``oplus``), chaining
(``otimes``), a closure operator (``star``) and the two constants.  All
matrix algebra in :mod:`relkit.relation` is generic over this structure;
three instances are registered by name:

``boolean``
    Bits 0/1 with OR/AND; ``star(x) == 1`` for every ``x``.
``tropical``
    Nonnegative weights plus ``inf`` (the additive identity) under
    min/plus; ``star(x) == 0`` for every carrier value.
``counting``
    Nonnegative integers under plus/times, counting distinct paths.
    Scalar ``star`` is defined only at 0; matrix-level closure of a
    nilpotent matrix is the finite geometric sum and is handled by the
    closure algorithms, which surface a divergence error on cycles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .errors import CarrierError, UndefinedClosureError, UnknownSemiringError

Value = object


@dataclass(frozen=True)
class Semiring:
    """A closed semiring (S, oplus, otimes, star, zero, one).

    ``contains`` decides carrier membership, used to reject mixed-carrier
    operands.  ``idempotent_add`` marks instances where ``a + a == a``,
    which licenses the squaring shortcut in the union-of-powers closure.
    ``kernel_tag`` selects a dense fast path (``"bool"`` / ``"trop"``) in
    the matrix layer; instances without a tag run the generic loops.
    """

    name: str
    zero: Value
    one: Value
    oplus: Callable[[Value, Value], Value]
    otimes: Callable[[Value, Value], Value]
    star: Callable[[Value], Value]
    contains: Callable[[Value], bool]
    idempotent_add: bool
    kernel_tag: str | None = None
    default_samples: tuple = ()

    def require(self, value: Value) -> Value:
        if not self.contains(value):
            raise CarrierError(f"{value!r} is not in the {self.name} carrier")
        return value

    def __repr__(self) -> str:  # pragma: no cover - cosmetic
        return f"Semiring({self.name!r})"


def oplus(spec: Semiring, a: Value, b: Value) -> Value:
    """Choice: a (+) b after carrier validation."""
    spec.require(a)
    spec.require(b)
    return spec.oplus(a, b)


def otimes(spec: Semiring, a: Value, b: Value) -> Value:
    """Chaining: a (*) b after carrier validation."""
    spec.require(a)
    spec.require(b)
    return spec.otimes(a, b)


def star(spec: Semiring, a: Value) -> Value:
    """Closure of a scalar; raises UndefinedClosureError where the instance has none."""
    spec.require(a)
    return spec.star(a)


def _bool_contains(x) -> bool:
    return isinstance(x, int) and x in (0, 1)


def _trop_contains(x) -> bool:
    if isinstance(x, bool):
        return False
    if not isinstance(x, (int, float)):
        return False
    return not math.isnan(x) and x >= 0


def _count_contains(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool) and x >= 0


def _count_star(x: int):
    if x == 0:
        return 1
    raise UndefinedClosureError(
        f"counting star({x}) diverges: closure of a nonzero count is an "
        "infinite sum; only matrix closure of nilpotent matrices is defined"
    )


BOOLEAN = Semiring(
    name="boolean",
    zero=0,
    one=1,
    oplus=lambda a, b: a | b,
    otimes=lambda a, b: a & b,
    star=lambda a: 1,
    contains=_bool_contains,
    idempotent_add=True,
    kernel_tag="bool",
    default_samples=(0, 1),
)

TROPICAL = Semiring(
    name="tropical",
    zero=math.inf,
    one=0,
    oplus=min,
    otimes=lambda a, b: a + b,
    star=lambda a: 0,
    contains=_trop_contains,
    idempotent_add=True,
    kernel_tag="trop",
    default_samples=(0, 1, 3, math.inf),
)

COUNTING = Semiring(
    name="counting",
    zero=0,
    one=1,
    oplus=lambda a, b: a + b,
    otimes=lambda a, b: a * b,
    star=_count_star,
    contains=_count_contains,
    idempotent_add=False,
    kernel_tag=None,
    default_samples=(0, 1, 2, 3),
)

_REGISTRY = {s.name: s for s in (BOOLEAN, TROPICAL, COUNTING)}


def get_semiring(name: str) -> Semiring:
    """Look up a registered instance by name (used by CLI flags and file headers)."""
    try:
        return _REGISTRY[name]
    except KeyError:
        known = ", ".join(sorted(_REGISTRY))
        raise UnknownSemiringError(f"unknown semiring {name!r} (known: {known})") from None


def semiring_names() -> tuple[str, ...]:
    return tuple(sorted(_REGISTRY))


@dataclass(frozen=True)
class AxiomCheck:
    axiom: str
    passed: bool
    counterexample: tuple | None = None


@dataclass(frozen=True)
class AxiomReport:
    """Per-axiom pass/fail verdicts over a sample set. Failures are reported, not thrown."""

    semiring: str
    samples: tuple
    checks: tuple[AxiomCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> tuple[AxiomCheck, ...]:
        return tuple(c for c in self.checks if not c.passed)

    def summary(self) -> str:
        lines = [f"semiring {self.semiring}: {len(self.samples)} samples"]
        for c in self.checks:
            status = "pass" if c.passed else f"FAIL at {c.counterexample!r}"
            lines.append(f"  {c.axiom}: {status}")
        return "\n".join(lines)


def check_axioms(spec: Semiring, samples: Sequence[Value] = ()) -> AxiomReport:
    """Audit the five semiring laws plus the closure axiom over sample values.

    Checks run over every triple drawn from ``samples`` (ordered, duplicates
    removed) merged with the instance's default sample set.  The closure
    axiom ``a* = 1 (+) (a (*) a*) = 1 (+) (a* (*) a)`` is checked wherever
    ``star`` is defined; samples with undefined closure are skipped there.
    """
    pool: list = []
    for v in tuple(spec.default_samples) + tuple(samples):
        if v not in pool:
            pool.append(v)
    if not pool:
        raise ValueError("need at least one sample value")

    add, mul = spec.oplus, spec.otimes
    zero, one = spec.zero, spec.one
    checks: list[AxiomCheck] = []

    def scan(axiom: str, arity: int, pred) -> None:
        witness = None
        for a in pool:
            if arity == 1:
                if not pred(a):
                    witness = (a,)
                    break
                continue
            for b in pool:
                if arity == 2:
                    if not pred(a, b):
                        witness = (a, b)
                        break
                    continue
                for c in pool:
                    if not pred(a, b, c):
                        witness = (a, b, c)
                        break
                if witness:
                    break
            if witness:
                break
        checks.append(AxiomCheck(axiom, witness is None, witness))

    scan("oplus commutative", 2, lambda a, b: add(a, b) == add(b, a))
    scan("oplus associative", 3, lambda a, b, c: add(add(a, b), c) == add(a, add(b, c)))
    scan("zero is oplus identity", 1, lambda a: add(zero, a) == a and add(a, zero) == a)
    scan("otimes associative", 3, lambda a, b, c: mul(mul(a, b), c) == mul(a, mul(b, c)))
    scan("one is otimes identity", 1, lambda a: mul(one, a) == a and mul(a, one) == a)
    scan("zero absorbs otimes", 1, lambda a: mul(zero, a) == zero and mul(a, zero) == zero)
    scan(
        "otimes distributes left",
        3,
        lambda a, b, c: mul(a, add(b, c)) == add(mul(a, b), mul(a, c)),
    )
    scan(
        "otimes distributes right",
        3,
        lambda a, b, c: mul(add(a, b), c) == add(mul(a, c), mul(b, c)),
    )

    witness = None
    for a in pool:
        try:
            s = spec.star(a)
        except UndefinedClosureError:
            continue
        if add(one, mul(a, s)) != s or add(one, mul(s, a)) != s:
            witness = (a,)
            break
    checks.append(AxiomCheck("closure axiom", witness is None, witness))

    return AxiomReport(semiring=spec.name, samples=tuple(pool), checks=tuple(checks))
