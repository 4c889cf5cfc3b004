"""Kashiwara operators and statistics on the D4^(3) crystal B^_l."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import (
    CartanData,
    Crystal,
    CrystalParams,
    Element,
    Kind,
    a_vector,
    add_delta,
    classify_e,
    classify_f,
    in_hat_crystal,
    pos,
    s_scaled,
    z_vector,
)

# Scaled steps, coordinate order (x1, x2, x3, xb3, xb2, xb1).
F0_STEPS = {
    1: (1, 0, 0, 0, 0, 0),
    2: (0, 0, 1, 1, 0, -1),
    3: (0, 0, 2, 0, -1, 0),
    4: (0, 1, 0, -2, 0, 0),
    5: (1, 0, -1, -1, 0, 0),
    6: (0, 0, 0, 0, 0, -1),
}
E0_STEPS = {k: tuple(-d for d in v) for k, v in F0_STEPS.items()}


def f1_step(z, unit):
    _, z2, z3, _ = z
    if pos(z2) <= -z3:
        return (-unit, unit, 0, 0, 0, 0)
    if z2 <= 0 < z3:
        return (0, 0, -unit, unit, 0, 0)
    return (0, 0, 0, 0, -unit, unit)


def e1_step(z, unit):
    _, z2, z3, _ = z
    if z2 >= pos(-z3):
        return (0, 0, 0, 0, unit, -unit)
    if z2 < 0 <= z3:
        return (0, 0, unit, -unit, 0, 0)
    return (unit, -unit, 0, 0, 0, 0)


def f2_step(z):
    if z.z4 <= 0:
        return (0, -1, 2, 0, 0, 0)
    return (0, 0, 0, -2, 1, 0)


def e2_step(z):
    if z.z4 >= 0:
        return (0, 0, 0, 2, -1, 0)
    return (0, 1, -2, 0, 0, 0)


def _hat_step(i, b, kind):
    z = z_vector(b)
    if i == 0:
        return F0_STEPS[classify_f(z)] if kind == "f" else E0_STEPS[classify_e(z)]
    if i == 1:
        return f1_step(z, 1) if kind == "f" else e1_step(z, 1)
    if i == 2:
        return f2_step(z) if kind == "f" else e2_step(z)
    raise ValueError(f"index must be 0, 1 or 2, got {i}")


def _apply(b: Element, delta, l: int) -> Optional[Element]:
    out = add_delta(b, delta)
    if not in_hat_crystal(out, l):
        return None
    return Element(*out)


def hat_f(i: int, b: Element, l: int) -> Optional[Element]:
    """f^_i b in B^_l, or None when the result leaves the crystal."""
    return _apply(b, _hat_step(i, b, "f"), l)


def hat_e(i: int, b: Element, l: int) -> Optional[Element]:
    """e^_i b in B^_l, or None when the result leaves the crystal."""
    return _apply(b, _hat_step(i, b, "e"), l)


def hat_eps(i: int, b: Element, l: int) -> int:
    x1, x2, x3, xb3, xb2, xb1 = b.astuple()
    if i == 0:
        z = z_vector(b)
        return l - s_scaled(b) + max(a_vector(z)) - a_vector(z).a5
    if i == 1:
        return xb1 + pos(xb3 - xb2 + pos(x2 - x3))
    if i == 2:
        return xb2 + pos(x3 - xb3) // 2
    raise ValueError(f"index must be 0, 1 or 2, got {i}")


def hat_phi(i: int, b: Element, l: int) -> int:
    x1, x2, x3, xb3, xb2, xb1 = b.astuple()
    if i == 0:
        return l - s_scaled(b) + max(a_vector(z_vector(b)))
    if i == 1:
        return x1 + pos(x3 - x2 + pos(xb2 - xb3))
    if i == 2:
        return x2 + pos(xb3 - x3) // 2
    raise ValueError(f"index must be 0, 1 or 2, got {i}")


def iterate(op, i: int, b, n: int, l: int):
    """Apply op(i, ., l) n times; None as soon as any step is None."""
    for _ in range(n):
        if b is None:
            return None
        b = op(i, b, l)
    return b


def hat_tuples(bound: int):
    """All scaled tuples with S <= bound and the parity condition, canonical order."""
    for x1 in range(bound + 1):
        r1 = bound - x1
        for x2 in range(r1 + 1):
            r2 = r1 - x2
            # (x3 + xb3) / 2 <= r2 with x3 = xb3 mod 2
            for x3 in range(2 * r2 + 1):
                for xb3 in range(x3 % 2, 2 * r2 - x3 + 1, 2):
                    r3 = r2 - (x3 + xb3) // 2
                    for xb2 in range(r3 + 1):
                        for xb1 in range(r3 - xb2 + 1):
                            yield (x1, x2, x3, xb3, xb2, xb1)


@dataclass(frozen=True)
class HatD4Crystal(Crystal):
    level: int

    cartan = CartanData.D4_3

    @property
    def params(self) -> CrystalParams:
        return CrystalParams(Kind.HAT_D4, self.level)

    def elements(self) -> list[Element]:
        return [Element(*t) for t in hat_tuples(self.level)]

    def contains(self, b) -> bool:
        return in_hat_crystal(b, self.level)

    def f(self, i, b):
        return hat_f(i, b, self.level)

    def e(self, i, b):
        return hat_e(i, b, self.level)

    def eps(self, i, b):
        return hat_eps(i, b, self.level)

    def phi(self, i, b):
        return hat_phi(i, b, self.level)
