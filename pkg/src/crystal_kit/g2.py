"""The G2^(1) crystal B_l, realised as the subset V_l of B^_{3l}.

Operators move in whole paper units except for the two fractional z4
sub-branches of f_0 / e_0 and the index-2 operators, which coincide with
the hat ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import (
    CartanData,
    Crystal,
    CrystalParams,
    Element,
    IntegralityError,
    Kind,
    a_vector,
    add_delta,
    classify_e,
    classify_f,
    g2_congruences,
    in_V,
    pos,
    s_scaled,
    z_vector,
)
from .hat_d4 import e1_step, e2_step, f1_step, f2_step, hat_e, hat_eps, hat_f, hat_phi, hat_tuples, iterate
from .reports import Report

F0_STEPS = {
    1: (3, 0, 0, 0, 0, 0),
    2: (0, 0, 3, 3, 0, -3),
    3: (0, 0, 6, 0, -3, 0),
    4: (0, 3, 0, -6, 0, 0),
    5: (3, 0, -3, -3, 0, 0),
    6: (0, 0, 0, 0, 0, -3),
}
# (F4) with scaled z4 = 1 or 2
F0_SPECIAL = {1: (0, 1, 4, -2, -2, 0), 2: (0, 2, 2, -4, -1, 0)}

E0_STEPS = {k: tuple(-d for d in v) for k, v in F0_STEPS.items()}
# (E3) with scaled z4 = -1 or -2
E0_SPECIAL = {-1: (0, -2, -2, 4, 1, 0), -2: (0, -1, -4, 2, 2, 0)}


def f_step(i: int, b) -> tuple[int, ...]:
    """Scaled displacement f_i would apply to b, ignoring the crystal bounds."""
    z = z_vector(b)
    if i == 0:
        case = classify_f(z)
        if case == 4 and z.z4 in F0_SPECIAL:
            return F0_SPECIAL[z.z4]
        return F0_STEPS[case]
    if i == 1:
        return f1_step(z, 3)
    if i == 2:
        return f2_step(z)
    raise ValueError(f"index must be 0, 1 or 2, got {i}")


def e_step(i: int, b) -> tuple[int, ...]:
    z = z_vector(b)
    if i == 0:
        case = classify_e(z)
        if case == 3 and z.z4 in E0_SPECIAL:
            return E0_SPECIAL[z.z4]
        return E0_STEPS[case]
    if i == 1:
        return e1_step(z, 3)
    if i == 2:
        return e2_step(z)
    raise ValueError(f"index must be 0, 1 or 2, got {i}")


def _apply(b, delta, l) -> Optional[Element]:
    out = add_delta(b, delta)
    if not in_V(out, l):
        return None
    return Element(*out)


def g2_f(i: int, b: Element, l: int) -> Optional[Element]:
    return _apply(b, f_step(i, b), l)


def g2_e(i: int, b: Element, l: int) -> Optional[Element]:
    return _apply(b, e_step(i, b), l)


def div3(n: int, what: str = "value") -> int:
    if n % 3:
        raise IntegralityError(f"{what} = {n}/3 is not an integer")
    return n // 3


def eps_without_level(i: int, b) -> int:
    """epsilon_i with the level term dropped from index 0 (the B_infinity form)."""
    x1, x2, x3, xb3, xb2, xb1 = b if isinstance(b, tuple) else b.astuple()
    if i == 0:
        a = a_vector(z_vector(b))
        return div3(-s_scaled(b) + max(a) - a.a5, "eps_0")
    if i == 1:
        return div3(xb1 + pos(xb3 - xb2 + pos(x2 - x3)), "eps_1")
    if i == 2:
        return xb2 + pos(x3 - xb3) // 2
    raise ValueError(f"index must be 0, 1 or 2, got {i}")


def phi_without_level(i: int, b) -> int:
    x1, x2, x3, xb3, xb2, xb1 = b if isinstance(b, tuple) else b.astuple()
    if i == 0:
        return div3(-s_scaled(b) + max(a_vector(z_vector(b))), "phi_0")
    if i == 1:
        return div3(x1 + pos(x3 - x2 + pos(xb2 - xb3)), "phi_1")
    if i == 2:
        return x2 + pos(xb3 - x3) // 2
    raise ValueError(f"index must be 0, 1 or 2, got {i}")


def g2_eps(i: int, b: Element, l: int) -> int:
    return eps_without_level(i, b) + (l if i == 0 else 0)


def g2_phi(i: int, b: Element, l: int) -> int:
    return phi_without_level(i, b) + (l if i == 0 else 0)


def g2_weight(b: Element, l: int) -> tuple[int, int, int]:
    """Coefficients of wt(b) on (Lambda_0, Lambda_1, Lambda_2)."""
    return tuple(g2_phi(i, b, l) - g2_eps(i, b, l) for i in range(3))


def similarity_check(i: int, b: Element, l: int) -> bool:
    """Compare e_i, f_i, eps_i, phi_i on V_l with the m_i-th hat powers at level 3l."""
    m = CartanData.multipliers[i]
    L = 3 * l
    if g2_f(i, b, l) != iterate(hat_f, i, b, m, L):
        return False
    if g2_e(i, b, l) != iterate(hat_e, i, b, m, L):
        return False
    return m * g2_eps(i, b, l) == hat_eps(i, b, L) and m * g2_phi(i, b, l) == hat_phi(i, b, L)


def v_tuples(l: int):
    for t in hat_tuples(3 * l):
        if g2_congruences(t):
            yield t


@dataclass(frozen=True)
class G2Crystal(Crystal):
    level: int

    cartan = CartanData.G2_1

    @property
    def params(self) -> CrystalParams:
        return CrystalParams(Kind.G2, self.level)

    def elements(self) -> list[Element]:
        return [Element(*t) for t in v_tuples(self.level)]

    def contains(self, b) -> bool:
        return in_V(b, self.level)

    def f(self, i, b):
        return g2_f(i, b, self.level)

    def e(self, i, b):
        return g2_e(i, b, self.level)

    def eps(self, i, b):
        return g2_eps(i, b, self.level)

    def phi(self, i, b):
        return g2_phi(i, b, self.level)


def verify_similarity(l: int) -> Report:
    """Sweep similarity_check over V_l x {0, 1, 2}."""
    report = Report("similarity", l)
    clauses = {i: report.clause(f"e_{i}, f_{i}, eps_{i}, phi_{i} agree with hat powers (m_{i} = {m})")
               for i, m in enumerate(CartanData.multipliers)}
    for b in G2Crystal(l).elements():
        for i, clause in clauses.items():
            clause.checked += 1
            if not similarity_check(i, b, l):
                clause.fail({"element": b.to_text(), "i": i})
    return report
