"""Crystal graphs: enumeration, index-subset decomposition, tensor products, export."""

from __future__ import annotations

import json
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .core import (
    Crystal,
    CrystalError,
    CrystalParams,
    Element,
    Kind,
    SCALE,
    element_from_json,
)
from .g2 import G2Crystal
from .hat_d4 import HatD4Crystal
from .reports import Report

THREADS_ENV = "CRYSTAL_KIT_THREADS"
EDGE_COLORS = {0: "red", 1: "blue", 2: "green"}


class DecompositionError(CrystalError):
    """A J-component did not have exactly one J-highest element."""


@dataclass(frozen=True)
class TensorProduct(Crystal):
    """left (x) right, with f_i acting on the left iff phi_i(left) > eps_i(right)."""

    factors: tuple

    def __post_init__(self):
        if len(self.factors) != 2:
            raise ValueError("TensorProduct takes exactly two factors")
        left, right = self.factors
        if left.cartan != right.cartan:
            raise ValueError("tensor factors must belong to the same algebra")

    @property
    def cartan(self):
        return self.factors[0].cartan

    @property
    def params(self) -> tuple:
        return tuple(c.params for c in self.factors)

    def elements(self) -> list[tuple]:
        left, right = self.factors
        return [(a, b) for a in left.elements() for b in right.elements()]

    def contains(self, pair) -> bool:
        return all(c.contains(x) for c, x in zip(self.factors, pair))

    def f(self, i, pair):
        (left, right), (a, b) = self.factors, pair
        if left.phi(i, a) > right.eps(i, b):
            fa = left.f(i, a)
            return None if fa is None else (fa, b)
        fb = right.f(i, b)
        return None if fb is None else (a, fb)

    def e(self, i, pair):
        (left, right), (a, b) = self.factors, pair
        if left.phi(i, a) >= right.eps(i, b):
            ea = left.e(i, a)
            return None if ea is None else (ea, b)
        eb = right.e(i, b)
        return None if eb is None else (a, eb)

    def eps(self, i, pair):
        (left, right), (a, b) = self.factors, pair
        return max(left.eps(i, a), right.eps(i, b) - left.weight(a)[i])

    def phi(self, i, pair):
        (left, right), (a, b) = self.factors, pair
        return max(right.phi(i, b), left.phi(i, a) + right.weight(b)[i])


def crystal_from_params(params) -> Crystal:
    if isinstance(params, tuple):
        return TensorProduct(tuple(crystal_from_params(p) for p in params))
    if params.kind is Kind.HAT_D4:
        return HatD4Crystal(params.level)
    if params.kind is Kind.G2:
        return G2Crystal(params.level)
    raise ValueError(f"{params.kind.value} is infinite and cannot be enumerated")


def enumerate_elements(params) -> list:
    """All members of the crystal described by params, in canonical order."""
    return crystal_from_params(params).elements()


@dataclass(frozen=True)
class CrystalGraph:
    crystal: Crystal
    nodes: tuple
    edges: tuple  # (source, target, i), sorted
    _index: dict = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "_index", {b: k for k, b in enumerate(self.nodes)})

    @property
    def params(self):
        return self.crystal.params

    def index_of(self, b) -> int:
        return self._index[b]

    def edges_with(self, labels: Iterable[int]):
        keep = set(labels)
        return [edge for edge in self.edges if edge[2] in keep]

    def __len__(self):
        return len(self.nodes)


def _worker_count(workers):
    if workers is not None:
        return max(1, int(workers))
    env = os.environ.get(THREADS_ENV)
    return max(1, int(env)) if env else 1


def _edges_for(crystal, index, chunk):
    out = []
    for u, b in chunk:
        for i in crystal.index_set:
            target = crystal.f(i, b)
            if target is not None:
                out.append((u, index[target], i))
    return out


def build_graph(source, workers: int | None = None) -> CrystalGraph:
    """Crystal graph with an edge (u, v, i) for every defined f_i node_u = node_v.

    `source` is a Crystal or CrystalParams. Work is split over `workers`
    threads (default from CRYSTAL_KIT_THREADS); the result does not depend on it.
    """
    crystal = source if isinstance(source, Crystal) else crystal_from_params(source)
    nodes = tuple(crystal.elements())
    index = {b: k for k, b in enumerate(nodes)}
    items = list(enumerate(nodes))
    n = _worker_count(workers)
    if n == 1 or len(items) < 2:
        edges = _edges_for(crystal, index, items)
    else:
        size = -(-len(items) // n)
        chunks = [items[k:k + size] for k in range(0, len(items), size)]
        with ThreadPoolExecutor(max_workers=n) as pool:
            parts = pool.map(lambda c: _edges_for(crystal, index, c), chunks)
            edges = [edge for part in parts for edge in part]
    return CrystalGraph(crystal, nodes, tuple(sorted(edges)))


def tensor(graph_a: CrystalGraph, graph_b: CrystalGraph, workers: int | None = None) -> CrystalGraph:
    return build_graph(TensorProduct((graph_a.crystal, graph_b.crystal)), workers)


def j_highest(graph: CrystalGraph, J: Iterable[int]) -> list:
    """Nodes with no incoming edge labelled in J."""
    J = set(J)
    hit = {v for _, v, i in graph.edges if i in J}
    return [b for k, b in enumerate(graph.nodes) if k not in hit]


def components(graph: CrystalGraph, J: Iterable[int]) -> np.ndarray:
    """Component label per node for the subgraph of J-labelled edges."""
    edges = graph.edges_with(J)
    n = len(graph.nodes)
    if edges:
        rows, cols, _ = zip(*edges)
    else:
        rows, cols = (), ()
    adj = coo_matrix((np.ones(len(rows), dtype=np.int8), (rows, cols)), shape=(n, n))
    _, labels = connected_components(adj, directed=True, connection="weak")
    return labels


@dataclass(frozen=True)
class Component:
    highest: object
    weight: tuple
    size: int


@dataclass(frozen=True)
class DecompositionReport:
    kept: tuple
    forgotten: tuple
    components: tuple

    @property
    def sizes(self) -> list[int]:
        return [c.size for c in self.components]

    def to_table(self) -> str:
        lines = [
            f"forgotten indices: {list(self.forgotten)}  kept: {list(self.kept)}",
            f"{'#':>4}  {'size':>6}  {'weight':<14}  highest element",
        ]
        for k, c in enumerate(self.components):
            lines.append(f"{k:>4}  {c.size:>6}  {str(c.weight):<14}  {node_text(c.highest)}")
        lines.append(f"total: {sum(self.sizes)} elements in {len(self.components)} components")
        return "\n".join(lines)


def decompose(graph: CrystalGraph, J: Iterable[int]) -> DecompositionReport:
    """Split the graph into connected components of its J-labelled edges.

    Components are ordered by their highest element's canonical position.
    """
    J = tuple(sorted(set(J)))
    if not set(J) <= set(graph.crystal.index_set):
        raise ValueError(f"index set {J} not contained in {graph.crystal.index_set}")
    labels = components(graph, J)
    highest = j_highest(graph, J)
    by_label: dict[int, list] = {}
    for b in highest:
        by_label.setdefault(int(labels[graph.index_of(b)]), []).append(b)
    sizes = np.bincount(labels, minlength=labels.max() + 1 if len(labels) else 0)
    found = []
    for lab in range(len(sizes)):
        tops = by_label.get(lab, [])
        if len(tops) != 1:
            raise DecompositionError(f"component {lab} has {len(tops)} J-highest elements")
        top = tops[0]
        found.append((graph.index_of(top), Component(top, graph.crystal.weight(top), int(sizes[lab]))))
    found.sort(key=lambda t: t[0])
    forgotten = tuple(i for i in graph.crystal.index_set if i not in J)
    return DecompositionReport(J, forgotten, tuple(c for _, c in found))


def is_connected(graph: CrystalGraph, J: Iterable[int] | None = None) -> bool:
    J = graph.crystal.index_set if J is None else J
    return len(graph.nodes) == 0 or int(components(graph, J).max()) == 0


# -- export -----------------------------------------------------------------

def node_text(b) -> str:
    if isinstance(b, tuple):
        return "⊗".join(x.to_text() for x in b)
    return b.to_text()


def _node_json(b):
    if isinstance(b, tuple):
        return [x.to_json_obj() for x in b]
    return b.to_json_obj()


def _params_json(params):
    if isinstance(params, tuple):
        return {"kind": "tensor", "factors": [_params_json(p) for p in params]}
    return params.to_json_obj()


def _params_from_json(obj):
    if obj["kind"] == "tensor":
        return tuple(_params_from_json(p) for p in obj["factors"])
    return CrystalParams(Kind(obj["kind"]), obj["level"])


def _graph_name(params) -> str:
    if isinstance(params, tuple):
        return "_x_".join(_graph_name(p) for p in params)
    return f"{params.kind.value.replace('-', '_')}_l{params.level}"


def export_dot(graph: CrystalGraph) -> str:
    lines = [f'digraph "{_graph_name(graph.params)}" {{']
    for k, b in enumerate(graph.nodes):
        lines.append(f'  n{k} [label="{node_text(b)}"];')
    for u, v, i in graph.edges:
        lines.append(f'  n{u} -> n{v} [label={i}, color={EDGE_COLORS[i]}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_json(graph: CrystalGraph) -> str:
    doc = {
        "params": _params_json(graph.params),
        "scale": SCALE,
        "nodes": [_node_json(b) for b in graph.nodes],
        "edges": [list(edge) for edge in graph.edges],
    }
    return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"


def parse_json(text: str) -> CrystalGraph:
    doc = json.loads(text)
    crystal = crystal_from_params(_params_from_json(doc["params"]))

    def node(obj):
        if isinstance(obj, list):
            return tuple(element_from_json(x) for x in obj)
        return element_from_json(obj)

    nodes = tuple(node(obj) for obj in doc["nodes"])
    edges = tuple(tuple(edge) for edge in doc["edges"])
    return CrystalGraph(crystal, nodes, edges)


def degree_profile(graph: CrystalGraph) -> dict[str, np.ndarray]:
    """Out- and in-degree per (node, label), shape (n, 3)."""
    n = len(graph.nodes)
    out_deg = np.zeros((n, 3), dtype=int)
    in_deg = np.zeros((n, 3), dtype=int)
    for u, v, i in graph.edges:
        out_deg[u, i] += 1
        in_deg[v, i] += 1
    return {"out": out_deg, "in": in_deg}


def box_edges(graph: CrystalGraph, labels: dict) -> list[tuple[str, str, int]]:
    """Edges rewritten in terms of fixture labels (Element -> label)."""
    return [(labels[graph.nodes[u]], labels[graph.nodes[v]], i) for u, v, i in graph.edges]



def check_axioms(crystal: Crystal) -> Report:
    """Exhaustive check of the regular-crystal axioms on a finite crystal."""
    report = Report("axioms", getattr(crystal, "level", 0))
    closure = report.clause("e_i, f_i stay inside the crystal")
    inverse = report.clause("f_i b = b' iff e_i b' = b")
    counts = report.clause("eps_i, phi_i equal the e_i / f_i string lengths")
    shift = report.clause("eps_i(f_i b) = eps_i(b) + 1, phi_i(f_i b) = phi_i(b) - 1")
    cartan = report.clause("(phi_j - eps_j)(b) - (phi_j - eps_j)(f_i b) = <h_j, alpha_i>")
    A = crystal.cartan
    for b in crystal.elements():
        wt = crystal.weight(b)
        for i in crystal.index_set:
            tag = {"element": node_text(b), "i": i}
            fb, eb = crystal.f(i, b), crystal.e(i, b)
            closure.checked += 1
            if any(x is not None and not crystal.contains(x) for x in (fb, eb)):
                closure.fail(tag)
            inverse.checked += 1
            if (fb is not None and crystal.e(i, fb) != b) or (eb is not None and crystal.f(i, eb) != b):
                inverse.fail(tag)
            counts.checked += 1
            if (crystal.eps(i, b), crystal.phi(i, b)) != (string_length(crystal.e, i, b), string_length(crystal.f, i, b)):
                counts.fail(tag)
            if fb is None:
                continue
            shift.checked += 1
            if crystal.eps(i, fb) != crystal.eps(i, b) + 1 or crystal.phi(i, fb) != crystal.phi(i, b) - 1:
                shift.fail(tag)
            wt_f = crystal.weight(fb)
            for j in crystal.index_set:
                cartan.checked += 1
                if wt[j] - wt_f[j] != A[j][i]:
                    cartan.fail({**tag, "j": j})
    return report


def string_length(op, i: int, b) -> int:
    n = 0
    while True:
        b = op(i, b)
        if b is None:
            return n
        n += 1
