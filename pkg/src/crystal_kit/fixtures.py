"""The element tables of B_1 and B_2 as printed, with their box labels."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .core import CrystalParams, Element, Kind, in_V, parse_coords, s_scaled

GOLDEN_LEVELS = (1, 2)


@dataclass(frozen=True)
class GoldenFixture:
    params: CrystalParams
    boxes: tuple  # (label, Element)
    starred: tuple

    def elements(self) -> set[Element]:
        return {b for _, b in self.boxes}

    def labels(self) -> dict[Element, str]:
        return {b: label for label, b in self.boxes}

    def by_label(self) -> dict[str, Element]:
        return dict(self.boxes)


@lru_cache(maxsize=None)
def load_boxes() -> tuple:
    """(label, Element, starred) for every box in the table file."""
    text = resources.files("crystal_kit").joinpath("data/boxes.txt").read_text(encoding="utf-8")
    out = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        label, coords = line.split("\t")
        starred = label.endswith("*")
        out.append((label.rstrip("*"), Element(*parse_coords(coords)), starred))
    return tuple(out)


def golden_fixture(l: int) -> GoldenFixture:
    if l not in GOLDEN_LEVELS:
        raise ValueError(f"no table for level {l}; available: {GOLDEN_LEVELS}")
    rows = [r for r in load_boxes() if s_scaled(r[1]) <= 3 * l]
    for label, b, _ in rows:
        if not in_V(b, l):
            raise ValueError(f"box {label} = {b} is not in V_{l}")
    return GoldenFixture(
        CrystalParams(Kind.G2, l),
        tuple((label, b) for label, b, _ in rows),
        tuple(label for label, _, star in rows if star),
    )


def compare_golden(l: int, computed) -> dict:
    """Set comparison of computed elements against the table; lists are canonical order."""
    fixture = golden_fixture(l)
    want = fixture.elements()
    got = set(computed)
    return {
        "missing": sorted(want - got),
        "unexpected": sorted(got - want),
        "matched": len(want & got),
        "expected": len(want),
    }
