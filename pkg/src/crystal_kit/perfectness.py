"""Level pairing, minimal elements, perfectness, and the limit crystal B_infinity."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from .core import (
    CartanData,
    Element,
    MembershipError,
    ZVector,
    a_vector,
    add_delta,
    pos,
    s_scaled,
    z_vector,
)
from .g2 import G2Crystal, e_step, eps_without_level, f_step, phi_without_level
from .reports import Report


# -- level pairing and psi --------------------------------------------------

@dataclass(frozen=True, order=True)
class DominantWeight:
    k0: int
    k1: int
    k2: int

    def __post_init__(self):
        if min(self.k0, self.k1, self.k2) < 0:
            raise ValueError(f"not dominant: {(self.k0, self.k1, self.k2)}")

    @property
    def level(self) -> int:
        return level_of((self.k0, self.k1, self.k2))

    def astuple(self):
        return (self.k0, self.k1, self.k2)


def level_of(w) -> int:
    """<c, w> = k0 + 2 k1 + k2."""
    if isinstance(w, DominantWeight):
        w = w.astuple()
    return sum(c * k for c, k in zip(CartanData.comarks, w))


def dominant_weights(l: int) -> list[DominantWeight]:
    """(P+_cl)_l, sorted."""
    return sorted(
        DominantWeight(l - 2 * k1 - k2, k1, k2)
        for k1 in range(l // 2 + 1)
        for k2 in range(l - 2 * k1 + 1)
    )


def psi(z: ZVector) -> int:
    """3 * psi(z) for a scaled z-vector."""
    z1, z2, z3, z4 = z
    return max(a_vector(z)) + 2 * pos(z3 + pos(z2)) + pos(3 * z4) - (z1 + z2 + 2 * z3 + 3 * z4)


def eps_vector(crystal, b) -> tuple:
    return tuple(crystal.eps(i, b) for i in crystal.index_set)


def phi_vector(crystal, b) -> tuple:
    return tuple(crystal.phi(i, b) for i in crystal.index_set)


# -- minimal elements -------------------------------------------------------

@dataclass(frozen=True, order=True)
class MinimalElement:
    """(alpha, beta, beta, beta, beta, alpha) with alpha integral and beta3 = 3 beta."""

    alpha: int
    beta3: int

    def fits(self, l: int) -> bool:
        return 2 * self.alpha + self.beta3 <= l

    def element(self) -> Element:
        a, b = 3 * self.alpha, self.beta3
        return Element(a, b, b, b, b, a)

    def predicted_weight(self, l: int) -> DominantWeight:
        return DominantWeight(l - 2 * self.alpha - self.beta3, self.alpha, self.beta3)

    @classmethod
    def from_element(cls, b: Element) -> "MinimalElement":
        x1, x2, x3, xb3, xb2, xb1 = b.astuple()
        if not (x1 == xb1 and x2 == x3 == xb3 == xb2 and x1 % 3 == 0):
            raise MembershipError(f"{b} is not of the form (a,b,b,b,b,a)")
        return cls(x1 // 3, x2)


def minimal_parameters(l: int) -> list[MinimalElement]:
    return [
        MinimalElement(alpha, beta3)
        for alpha in range(l // 2 + 1)
        for beta3 in range(l - 2 * alpha + 1)
    ]


def minimal_elements(l: int) -> list[Element]:
    """Closed form of (B_l)_min, canonical order."""
    return sorted(m.element() for m in minimal_parameters(l))


def minimal_by_scan(l: int, crystal=None) -> list[Element]:
    """Elements b with <c, eps(b)> = l, found by exhaustive scan."""
    crystal = G2Crystal(l) if crystal is None else crystal
    return [b for b in crystal.elements() if level_of(eps_vector(crystal, b)) == l]


def verify_perfect(l: int, crystal=None, check_tensor: bool = False) -> Report:
    """Check the perfectness clauses for B_l. `crystal` overrides the operators under test."""
    crystal = G2Crystal(l) if crystal is None else crystal
    report = Report("perfect", l)
    elements = crystal.elements()

    lower = report.clause("level-bound: <c,eps(b)> >= l for all b")
    scan = []
    for b in elements:
        lower.checked += 1
        lev = level_of(eps_vector(crystal, b))
        if lev < l:
            lower.fail({"element": b.to_text(), "level": lev})
        elif lev == l:
            scan.append(b)

    closed = minimal_elements(l)
    same = report.clause("minimal-set: scan equals closed form")
    same.checked = len(closed)
    for b in sorted(set(scan) ^ set(closed)):
        same.fail({"element": b.to_text(), "in_scan": b in scan, "in_closed_form": b in closed})

    bij = report.clause("bijection: eps = phi on minimal elements, onto (P+_cl)_l")
    images_eps, images_phi = [], []
    for m in minimal_parameters(l):
        b = m.element()
        bij.checked += 1
        ev, pv = eps_vector(crystal, b), phi_vector(crystal, b)
        want = m.predicted_weight(l).astuple()
        if ev != want or pv != want:
            bij.fail({"element": b.to_text(), "eps": ev, "phi": pv, "expected": want})
        images_eps.append(ev)
        images_phi.append(pv)
    target = sorted(w.astuple() for w in dominant_weights(l))
    for name, images in (("eps", images_eps), ("phi", images_phi)):
        if sorted(images) != target:
            bij.fail({"map": name, "images": sorted(images), "expected": target})
    sigma = report.clause("sigma = eps o phi^-1 is the identity")
    sigma.checked = len(images_eps)
    for ev, pv in zip(images_eps, images_phi):
        if ev != pv:
            sigma.fail({"eps": ev, "phi": pv})
    report.notes["minimal_count"] = len(closed)

    if check_tensor:
        from .graph import TensorProduct, build_graph, is_connected

        conn = report.clause("B_l (x) B_l connected")
        g = build_graph(TensorProduct((crystal, crystal)))
        conn.checked = len(g.nodes)
        if not is_connected(g):
            conn.fail({"nodes": len(g.nodes)})
    return report


# -- B_infinity -------------------------------------------------------------

@dataclass(frozen=True, order=True)
class InfElement:
    """Scaled coordinates of an element of B_infinity; entries may be negative."""

    n1: int
    n2: int
    n3: int
    nb3: int
    nb2: int
    nb1: int

    def __post_init__(self):
        t = self.astuple()
        if (self.n3 - self.nb3) % 2:
            raise MembershipError(f"parity violated: {t}")
        if self.n1 % 3 or self.nb1 % 3 or (self.n2 - self.n3) % 3 or (self.nb3 - self.nb2) % 3:
            raise MembershipError(f"congruences violated: {t}")

    def astuple(self) -> tuple[int, int, int, int, int, int]:
        return (self.n1, self.n2, self.n3, self.nb3, self.nb2, self.nb1)

    def to_text(self) -> str:
        from .core import format_coords

        return format_coords(self.astuple())

    def __str__(self):
        return self.to_text()


B_INF = InfElement(0, 0, 0, 0, 0, 0)


def binf_f(i: int, b: InfElement) -> InfElement:
    return InfElement(*add_delta(b.astuple(), f_step(i, b.astuple())))


def binf_e(i: int, b: InfElement) -> InfElement:
    return InfElement(*add_delta(b.astuple(), e_step(i, b.astuple())))


def binf_eps(i: int, b: InfElement) -> int:
    return eps_without_level(i, b.astuple())


def binf_phi(i: int, b: InfElement) -> int:
    return phi_without_level(i, b.astuple())


def binf_weight(b: InfElement) -> tuple[int, int, int]:
    return tuple(binf_phi(i, b) - binf_eps(i, b) for i in range(3))


def embed(l: int, b0: MinimalElement, b: Element) -> InfElement:
    """Image of t_lambda (x) b (x) t_-lambda under the embedding attached to (l, b0)."""
    if not b0.fits(l):
        raise MembershipError(f"{b0} is not minimal in B_{l}")
    a, c = 3 * b0.alpha, b0.beta3
    return InfElement(*add_delta(b.astuple(), (-a, -c, -c, -c, -c, -a)))


def verify_coherent(l: int, crystal=None) -> Report:
    crystal = G2Crystal(l) if crystal is None else crystal
    report = Report("coherent", l)
    elements = crystal.elements()
    inj = report.clause("embedding injective")
    base = report.clause("embedding sends b0 to b_infinity")
    ops = report.clause("embedding commutes with defined e_i, f_i")
    stats = report.clause("statistics shifted by <h_i, eps(b0)>")
    zvec = report.clause("z-vector preserved")
    level_shift = report.clause("s(b') = s(b) - (2 alpha + 3 beta)")
    limit = report.clause("b_infinity has weight 0 and eps = phi = 0")
    limit.checked = 1
    if any(binf_eps(i, B_INF) or binf_phi(i, B_INF) for i in range(3)) or binf_weight(B_INF) != (0, 0, 0):
        limit.fail({"element": B_INF.to_text()})

    for m in minimal_parameters(l):
        b0 = m.element()
        lam = eps_vector(crystal, b0)
        images = {}
        for b in elements:
            img = embed(l, m, b)
            tag = {"b0": b0.to_text(), "element": b.to_text()}
            inj.checked += 1
            if img in images:
                inj.fail({**tag, "collides_with": images[img].to_text()})
            images[img] = b
            zvec.checked += 1
            if z_vector(img.astuple()) != z_vector(b):
                zvec.fail(tag)
            level_shift.checked += 1
            if s_scaled(img.astuple()) != s_scaled(b) - (6 * m.alpha + 3 * m.beta3):
                level_shift.fail(tag)
            for i in crystal.index_set:
                stats.checked += 1
                if binf_eps(i, img) != crystal.eps(i, b) - lam[i] or binf_phi(i, img) != crystal.phi(i, b) - lam[i]:
                    stats.fail({**tag, "i": i})
                for name, op, inf_op in (("f", crystal.f, binf_f), ("e", crystal.e, binf_e)):
                    moved = op(i, b)
                    if moved is None:
                        continue
                    ops.checked += 1
                    if embed(l, m, moved) != inf_op(i, img):
                        ops.fail({**tag, "op": f"{name}_{i}"})
        base.checked += 1
        if embed(l, m, b0) != B_INF:
            base.fail({"b0": b0.to_text()})
    return report


def embedded_images(max_level: int) -> set[InfElement]:
    """Union of Im f_(l,b0) over 1 <= l <= max_level and all minimal b0."""
    out = set()
    for l in range(1, max_level + 1):
        elements = G2Crystal(l).elements()
        for m in minimal_parameters(l):
            out.update(embed(l, m, b) for b in elements)
    return out


def window(radius: int) -> list[InfElement]:
    """All B_infinity elements with every scaled coordinate in [-radius, radius]."""
    r = radius
    out = []
    for t in itertools.product(range(-r, r + 1), repeat=6):
        n1, n2, n3, nb3, nb2, nb1 = t
        if (n3 - nb3) % 2 or n1 % 3 or nb1 % 3 or (n2 - n3) % 3 or (nb3 - nb2) % 3:
            continue
        out.append(InfElement(*t))
    return out


def covering_pair(b: InfElement) -> tuple[int, MinimalElement, Element]:
    """A level l, minimal b0 and b in B_l with embed(l, b0, b) = b (as in the last limit axiom)."""
    n1, n2, n3, nb3, nb2, nb1 = b.astuple()
    alpha = max(0, -(min(n1, nb1) // 3))
    beta3 = max(0, -min(n2, n3, nb3, nb2))
    m = MinimalElement(alpha, beta3)
    lifted = Element(*add_delta(b.astuple(), (3 * alpha, beta3, beta3, beta3, beta3, 3 * alpha)))
    total = s_scaled(lifted)
    l = max(1, 2 * alpha + beta3, -(-total // 3))
    return l, m, lifted


def verify_coverage(radius: int, max_level: Optional[int] = None) -> Report:
    """Check that a finite window of B_infinity lies in the union of embedded images.

    The last limit axiom quantifies over all of B_infinity; only the stated
    window is examined.
    """
    report = Report("coverage", max_level or 0)
    pts = window(radius)
    report.notes["window"] = f"all scaled coordinates in [-{radius}, {radius}] ({len(pts)} elements)"
    levels = []
    cov = report.clause("every window element is an embedded image")
    for b in pts:
        cov.checked += 1
        l, m, lifted = covering_pair(b)
        if not G2Crystal(l).contains(lifted) or embed(l, m, lifted) != b:
            cov.fail({"element": b.to_text(), "level": l})
        levels.append(l)
    report.notes["levels_needed"] = max(levels) if levels else 0
    if max_level is not None:
        images = embedded_images(max_level)
        within = report.clause(f"window covered using levels <= {max_level}")
        within.checked = len(pts)
        for b in pts:
            if b not in images:
                within.fail({"element": b.to_text()})
    return report


def growth(max_level: int) -> list[int]:
    """Sizes of the union of embedded images for levels 1..L, L = 1..max_level."""
    sizes, acc = [], set()
    for l in range(1, max_level + 1):
        elements = G2Crystal(l).elements()
        for m in minimal_parameters(l):
            acc.update(embed(l, m, b) for b in elements)
        sizes.append(len(acc))
    return sizes

