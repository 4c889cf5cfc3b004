"""Coordinate model shared by the D4^(3) and G2^(1) crystals.

Coordinates are stored multiplied by 3, so an element whose paper
coordinates are thirds of integers becomes a tuple of plain integers.
Every statistic below is expressed in those scaled units unless a
function says otherwise.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional, Sequence

SCALE = 3


class CrystalError(Exception):
    """Base class for errors raised by crystal_kit."""


class CaseClassificationError(CrystalError):
    """Zero or several of the six inequality cases matched a z-vector."""


class IntegralityError(CrystalError):
    """A statistic that must be an integer came out fractional."""


class MembershipError(CrystalError):
    """An element does not belong to the crystal it was given to."""


@dataclass(frozen=True, order=True)
class Element:
    """A point (x1, x2, x3, xb3, xb2, xb1) in scaled coordinates.

    Field order is the canonical total order, so sorting Elements sorts
    lexicographically on the tuple.
    """

    x1: int
    x2: int
    x3: int
    xb3: int
    xb2: int
    xb1: int

    def __post_init__(self):
        if min(self.astuple()) < 0:
            raise MembershipError(f"negative coordinate in {self.astuple()}")
        if (self.x3 - self.xb3) % 2:
            raise MembershipError(f"x3 and xb3 differ in parity: {self.astuple()}")

    def astuple(self) -> tuple[int, int, int, int, int, int]:
        return (self.x1, self.x2, self.x3, self.xb3, self.xb2, self.xb1)

    @classmethod
    def from_paper(cls, coords: Sequence) -> "Element":
        """Build from paper coordinates (ints, Fractions or strings like '4/3')."""
        return cls(*_scale_up(coords))

    def to_paper(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, SCALE) for c in self.astuple())

    def to_text(self) -> str:
        return format_coords(self.astuple())

    def to_json_obj(self) -> dict:
        return {"x": list(self.astuple()), "scale": SCALE}

    def __str__(self):
        return self.to_text()


class ZVector(NamedTuple):
    """Scaled (3*z1, 3*z2, 3*z3, 3*z4)."""

    z1: int
    z2: int
    z3: int
    z4: int


class AVector(NamedTuple):
    a0: int
    a1: int
    a2: int
    a3: int
    a4: int
    a5: int


class Kind(str, enum.Enum):
    HAT_D4 = "hat-d4"
    G2 = "g2"
    B_INFINITY = "b-infinity"


@dataclass(frozen=True)
class CrystalParams:
    kind: Kind
    level: int = 0

    def __post_init__(self):
        object.__setattr__(self, "kind", Kind(self.kind))
        if self.level < 0:
            raise ValueError(f"level must be non-negative, got {self.level}")

    def to_json_obj(self) -> dict:
        return {"kind": self.kind.value, "level": self.level}


class CartanData:
    """The two generalized Cartan matrices, indexed as matrix[i][j] = <h_i, alpha_j>."""

    D4_3 = ((2, -1, 0), (-1, 2, -3), (0, -1, 2))
    multipliers = (3, 3, 1)
    comarks = (1, 2, 1)

    @classmethod
    def rescaled(cls, matrix=None, m=None):
        """<h~_i, alpha~_j> = (m_j / m_i) <h_i, alpha_j> for alpha~_i = m_i alpha_i."""
        matrix = cls.D4_3 if matrix is None else matrix
        m = cls.multipliers if m is None else m
        out = []
        for i in range(3):
            row = []
            for j in range(3):
                val = Fraction(m[j], m[i]) * matrix[i][j]
                if val.denominator != 1:
                    raise IntegralityError(f"rescaled entry ({i},{j}) = {val}")
                row.append(int(val))
            out.append(tuple(row))
        return tuple(out)


CartanData.G2_1 = CartanData.rescaled()


def _scale_up(coords: Sequence) -> tuple[int, ...]:
    out = []
    for c in coords:
        v = Fraction(c) * SCALE
        if v.denominator != 1:
            raise ValueError(f"coordinate {c} is not a multiple of 1/3")
        out.append(int(v))
    return tuple(out)


def format_fraction(scaled: int) -> str:
    return str(Fraction(scaled, SCALE))


def format_coords(scaled: Sequence[int]) -> str:
    return "(" + ",".join(format_fraction(c) for c in scaled) + ")"


def parse_coords(text: str) -> tuple[int, ...]:
    """Inverse of format_coords: '(0,1/3,4/3,0,0,0)' -> scaled integers."""
    body = text.strip()
    if not (body.startswith("(") and body.endswith(")")):
        raise ValueError(f"not a coordinate tuple: {text!r}")
    parts = [p.strip() for p in body[1:-1].split(",")]
    if len(parts) != 6:
        raise ValueError(f"expected 6 coordinates, got {len(parts)}: {text!r}")
    return _scale_up(parts)


def element_from_json(obj) -> Element:
    if isinstance(obj, str):
        obj = json.loads(obj)
    scale = obj.get("scale", SCALE)
    if scale != SCALE:
        raise ValueError(f"unsupported scale {scale}")
    return Element(*obj["x"])


def pos(x: int) -> int:
    return x if x > 0 else 0


# The helpers below take any 6-sequence so that B_infinity elements, which
# may have negative coordinates, can share them.

def s_scaled(b) -> int:
    """3 * s(b) = X1 + X2 + (X3 + Xb3)/2 + Xb2 + Xb1."""
    x1, x2, x3, xb3, xb2, xb1 = _coords(b)
    return x1 + x2 + (x3 + xb3) // 2 + xb2 + xb1


def z_vector(b) -> ZVector:
    x1, x2, x3, xb3, xb2, xb1 = _coords(b)
    return ZVector(xb1 - x1, xb2 - xb3, x3 - x2, (xb3 - x3) // 2)


def a_vector(z: ZVector) -> AVector:
    z1, z2, z3, z4 = z
    return AVector(
        0,
        z1,
        z1 + z2,
        z1 + z2 + 3 * z4,
        z1 + z2 + z3 + 3 * z4,
        2 * z1 + z2 + z3 + 3 * z4,
    )


def _f_conditions(z: ZVector, strict):
    """The six inequality lists, parametrised by which comparison counts as '>'.

    `strict(x)` plays the role of 'x > 0' and `not strict(x)` of 'x <= 0'.
    Passing x >= 0 gives the E-cases.
    """
    z1, z2, z3, z4 = z
    le = lambda x: not strict(x)  # noqa: E731
    gt = strict
    return (
        le(z1 + z2 + z3 + 3 * z4) and le(z1 + z2 + 3 * z4) and le(z1 + z2) and le(z1),
        le(z1 + z2 + z3 + 3 * z4) and le(z2 + 3 * z4) and le(z2) and gt(z1),
        le(z1 + z3 + 3 * z4) and le(z3 + 3 * z4) and le(z4) and gt(z2) and gt(z1 + z2),
        gt(z1 + z2 + 3 * z4) and gt(z2 + 3 * z4) and gt(z4) and le(z3) and le(z1 + z3),
        gt(z1 + z2 + z3 + 3 * z4) and gt(z3 + 3 * z4) and gt(z3) and le(z1),
        gt(z1 + z2 + z3 + 3 * z4) and gt(z1 + z3 + 3 * z4) and gt(z1 + z3) and gt(z1),
    )


def _unique_case(flags, z, family) -> int:
    hits = [k + 1 for k, hit in enumerate(flags) if hit]
    if len(hits) != 1:
        raise CaseClassificationError(f"{family}-cases {hits} matched z={tuple(z)}")
    return hits[0]


def classify_f(z: ZVector) -> int:
    """Return k in 1..6 such that z satisfies (F_k)."""
    return _unique_case(_f_conditions(z, lambda x: x > 0), z, "F")


def classify_e(z: ZVector) -> int:
    """Return k in 1..6 such that z satisfies (E_k)."""
    return _unique_case(_f_conditions(z, lambda x: x >= 0), z, "E")


def in_hat_crystal(b, level: int) -> bool:
    x = _coords(b)
    if min(x) < 0 or (x[2] - x[3]) % 2:
        return False
    return s_scaled(x) <= level


def g2_congruences(b) -> bool:
    """X1, Xb1 divisible by 3; X2 = X3 and Xb3 = Xb2 mod 3."""
    x1, x2, x3, xb3, xb2, xb1 = _coords(b)
    return x1 % 3 == 0 and xb1 % 3 == 0 and (x2 - x3) % 3 == 0 and (xb3 - xb2) % 3 == 0


def in_V(b, level: int) -> bool:
    return in_hat_crystal(b, 3 * level) and g2_congruences(b)


def add_delta(b, delta) -> tuple[int, ...]:
    return tuple(c + d for c, d in zip(_coords(b), delta))


def _coords(b) -> tuple[int, ...]:
    if isinstance(b, tuple):
        return b
    return b.astuple()


class Crystal:
    """Common surface of the finite crystals: operators return None for 0."""

    cartan: tuple = ()
    index_set = (0, 1, 2)

    def elements(self) -> list:
        raise NotImplementedError

    def f(self, i: int, b) -> Optional[object]:
        raise NotImplementedError

    def e(self, i: int, b) -> Optional[object]:
        raise NotImplementedError

    def eps(self, i: int, b) -> int:
        raise NotImplementedError

    def phi(self, i: int, b) -> int:
        raise NotImplementedError

    def weight(self, b) -> tuple[int, ...]:
        return tuple(self.phi(i, b) - self.eps(i, b) for i in self.index_set)

    def contains(self, b) -> bool:
        raise NotImplementedError

    @property
    def params(self):
        raise NotImplementedError
