"""Construction of the extended diagrams attached to a pair (g, e).

For each simple Lie algebra type and each admissible twist order e (the
order of a diagram automorphism: 1 for every family, 2 for A/D/E6, 3 for
D4) there is a finite graph with positive integer node labels whose label
sum, times e, is the twisted Coxeter number h_e.  Torsion automorphisms of
order m correspond to non-negative integer node vectors s with gcd 1 and
e * sum(c_i s_i) = m, taken up to the symmetry group Omega of the
labelled graph.

This module builds every supported diagram explicitly: node order, labels,
bonds (with multiplicity and arrow tip), the Omega permutations, and the
layout data used for rendering.  Everything downstream (subset scans,
reductions, tables) consumes these graphs.

Node order conventions
----------------------
* chains (C_n, F4, G2 and all twisted diagrams on a path) are numbered
  left to right, 0..n;
* fork families (B_n and the twisted diagram of odd A rank >= 5) put the
  two unit-label tips first: node 0 on the chain line, node 1 hanging
  below, node 2 the branch point, then the chain;
* D_n has tips {0, 1} at the left end and {n-1, n} at the right end;
* E6/E7/E8 number the horizontal chain first and the below-branch nodes
  last (for E6 the sixth node hangs below the branch and the affine node
  below that, so the chain is 0..4 and nodes 5, 6 hang under node 2);
* untwisted A_n (n >= 2) is a cycle 0..n with the closing bond implied.

Rendered strings parenthesise off-chain nodes, so the B4 vector
(1, 1, 0, 1, 0) prints as ``1 (1) 0 1=>0``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .dynkin import FiniteFactor, classify_nodes

__all__ = [
    "DiagramId",
    "Bond",
    "Diagram",
    "AffineDiagram",
    "parse_spec",
    "build",
    "build_spec",
    "catalog",
    "render_kac",
]


@dataclass(frozen=True)
class Bond:
    """An edge of the diagram.

    ``mult`` is the bond multiplicity (1..4).  For ``mult >= 2``, ``tip``
    is the node the arrow points toward; it is None only for the symmetric
    quadruple bond of the rank-one untwisted A diagram.
    """

    u: int
    v: int
    mult: int = 1
    tip: int | None = None

    def other(self, node: int) -> int:
        return self.v if node == self.u else self.u


class Diagram:
    """A labelled multigraph with the arithmetic helpers the scans need.

    Deliberately free of family metadata: the reduction moves produce
    diagrams that no longer carry a name, and every quantity entering the
    certified inequality (label sums, root counts of induced subdiagrams,
    n_e = #nodes - 1) is computed from the graph alone.
    """

    __slots__ = ("e", "labels", "bonds", "adjacency", "_bond_of")

    def __init__(self, e: int, labels: dict[int, int], bonds: Sequence[Bond]):
        self.e = e
        self.labels = dict(labels)
        self.bonds = tuple(bonds)
        adjacency: dict[int, list[tuple[int, int]]] = {u: [] for u in self.labels}
        bond_of: dict[tuple[int, int], Bond] = {}
        for b in self.bonds:
            adjacency[b.u].append((b.v, b.mult))
            adjacency[b.v].append((b.u, b.mult))
            bond_of[(b.u, b.v)] = b
            bond_of[(b.v, b.u)] = b
        self.adjacency = adjacency
        self._bond_of = bond_of

    # -- basic data ------------------------------------------------------

    @property
    def nodes(self) -> tuple[int, ...]:
        return tuple(sorted(self.labels))

    @property
    def n_e(self) -> int:
        return len(self.labels) - 1

    @property
    def label_sum(self) -> int:
        return sum(self.labels.values())

    @property
    def coxeter(self) -> int:
        """Twisted Coxeter number h_e = e * sum of labels."""
        return self.e * self.label_sum

    def bond_between(self, u: int, v: int) -> Bond | None:
        return self._bond_of.get((u, v))

    def degree(self, u: int) -> int:
        return len(self.adjacency[u])

    def interior(self) -> frozenset[int]:
        """Nodes of degree >= 2."""
        return frozenset(u for u in self.labels if self.degree(u) >= 2)

    # -- subset arithmetic -------------------------------------------------

    def label_sum_of(self, nodes) -> int:
        return sum(self.labels[u] for u in nodes)

    def factors(self, subset) -> tuple[FiniteFactor, ...]:
        """Finite factors of the subdiagram induced on ``subset``."""
        return classify_nodes(sorted(subset), self.adjacency)


# ---------------------------------------------------------------------------
# diagram identities
# ---------------------------------------------------------------------------

_BASE_DIM = {
    "A": lambda n: n * (n + 2),
    "B": lambda n: n * (2 * n + 1),
    "C": lambda n: n * (2 * n + 1),
    "D": lambda n: n * (2 * n - 1),
    "E": lambda n: {6: 78, 7: 133, 8: 248}[n],
    "F": lambda n: 52,
    "G": lambda n: 14,
}

_SPEC_RE = re.compile(r"^([123]?)([A-Ga-g])(\d+)$")


@dataclass(frozen=True, order=True)
class DiagramId:
    """Identifier of a supported diagram: twist order, family, base rank."""

    e: int
    family: str
    base_rank: int

    @property
    def spec(self) -> str:
        prefix = str(self.e) if self.e > 1 else ""
        return f"{prefix}{self.family}{self.base_rank}"

    def __str__(self) -> str:
        return self.spec


def parse_spec(text: str) -> DiagramId:
    """Parse a diagram spec such as ``B7``, ``2A10``, ``2D5`` or ``3D4``.

    The leading digit is the twist order (omitted when 1); the trailing
    number is the rank of the base algebra (so ``2D5`` acts on D5).
    """
    m = _SPEC_RE.match(text.strip())
    if not m:
        raise ValueError(f"cannot parse diagram spec {text!r}")
    e = int(m.group(1)) if m.group(1) else 1
    ident = DiagramId(e, m.group(2).upper(), int(m.group(3)))
    _check_admissible(ident)
    return ident


def _check_admissible(ident: DiagramId) -> None:
    e, family, n = ident.e, ident.family, ident.base_rank
    ok = False
    if e == 1:
        ok = (
            (family == "A" and n >= 1)
            or (family == "B" and n >= 3)
            or (family == "C" and n >= 2)
            or (family == "D" and n >= 4)
            or (family == "E" and n in (6, 7, 8))
            or (family == "F" and n == 4)
            or (family == "G" and n == 2)
        )
    elif e == 2:
        ok = (family == "A" and n >= 2) or (family == "D" and n >= 3) or (
            family == "E" and n == 6
        )
    elif e == 3:
        ok = family == "D" and n == 4
    if not ok:
        raise ValueError(f"unsupported diagram {ident.spec}")


@dataclass(frozen=True)
class AffineDiagram:
    """A built diagram together with its symmetry and layout data.

    ``omega`` lists the symmetry permutations as tuples p with p[i] the
    image of node i.  ``layout`` is the render recipe: a sequence of
    ``("node", i)``, ``("paren", (i, ...))`` and ``("bond", Bond, right)``
    entries, where ``right`` is the chain node to the bond's right.
    """

    ident: DiagramId
    graph: Diagram = field(compare=False)
    omega: tuple[tuple[int, ...], ...] = field(compare=False)
    layout: tuple = field(compare=False)
    cyclic: bool = field(compare=False, default=False)

    @property
    def spec(self) -> str:
        return self.ident.spec

    @property
    def e(self) -> int:
        return self.ident.e

    @property
    def n_e(self) -> int:
        return self.graph.n_e

    @property
    def coxeter(self) -> int:
        return self.graph.coxeter

    @property
    def nodes(self) -> tuple[int, ...]:
        return self.graph.nodes

    @property
    def labels(self) -> dict[int, int]:
        return self.graph.labels

    @property
    def label_sum(self) -> int:
        return self.graph.label_sum

    def label_sum_of(self, nodes) -> int:
        return self.graph.label_sum_of(nodes)

    def factors(self, subset) -> tuple:
        return self.graph.factors(subset)

    @property
    def base_dim(self) -> int:
        """Dimension of the base (untwisted) algebra g."""
        return _BASE_DIM[self.ident.family](self.ident.base_rank)

    @property
    def base_root_count(self) -> int:
        """|R(g)| computed from the base family, independent of the graph."""
        return self.base_dim - self.ident.base_rank


# ---------------------------------------------------------------------------
# family builders
# ---------------------------------------------------------------------------


def _layout(graph: Diagram, chain: Sequence[int], hang: dict[int, tuple[int, ...]] | None = None) -> tuple:
    """Render recipe for a chain with optional hanging (parenthesised) nodes."""
    hang = hang or {}
    entries: list = []
    chain = list(chain)
    for idx, u in enumerate(chain):
        entries.append(("node", u))
        if u in hang:
            entries.append(("paren", tuple(hang[u])))
        if idx + 1 < len(chain):
            entries.append(("bond", graph.bond_between(u, chain[idx + 1]), chain[idx + 1]))
    return tuple(entries)


def _identity(n_nodes: int) -> tuple[int, ...]:
    return tuple(range(n_nodes))


def _build_a_untwisted(n: int) -> AffineDiagram:
    ident = DiagramId(1, "A", n)
    if n == 1:
        graph = Diagram(1, {0: 1, 1: 1}, [Bond(0, 1, 4, None)])
        return AffineDiagram(ident, graph, (_identity(2), (1, 0)), _layout(graph, [0, 1]))
    labels = {i: 1 for i in range(n + 1)}
    bonds = [Bond(i, i + 1) for i in range(n)] + [Bond(n, 0)]
    graph = Diagram(1, labels, bonds)
    size = n + 1
    omega = tuple(tuple((i + k) % size for i in range(size)) for k in range(size))
    return AffineDiagram(ident, graph, omega, _layout(graph, range(size)), cyclic=True)


def _build_b(n: int) -> AffineDiagram:
    ident = DiagramId(1, "B", n)
    labels = {0: 1, 1: 1}
    labels.update({i: 2 for i in range(2, n + 1)})
    bonds = [Bond(0, 2), Bond(1, 2)]
    bonds += [Bond(i, i + 1) for i in range(2, n - 1)]
    bonds.append(Bond(n - 1, n, 2, n))
    graph = Diagram(1, labels, bonds)
    swap = (1, 0) + tuple(range(2, n + 1))
    layout = _layout(graph, [0] + list(range(2, n + 1)), {0: (1,)})
    return AffineDiagram(ident, graph, (_identity(n + 1), swap), layout)


def _build_c(n: int) -> AffineDiagram:
    ident = DiagramId(1, "C", n)
    labels = {0: 1, n: 1}
    labels.update({i: 2 for i in range(1, n)})
    bonds = [Bond(0, 1, 2, 1)]
    bonds += [Bond(i, i + 1) for i in range(1, n - 1)]
    bonds.append(Bond(n - 1, n, 2, n - 1))
    graph = Diagram(1, labels, bonds)
    flip = tuple(n - i for i in range(n + 1))
    return AffineDiagram(ident, graph, (_identity(n + 1), flip), _layout(graph, range(n + 1)))


def _d_reversal(n: int, overrides: dict[int, int]) -> tuple[int, ...]:
    perm = list(range(n + 1))
    for i in range(2, n - 1):
        perm[i] = n - i
    for src, dst in overrides.items():
        perm[src] = dst
    return tuple(perm)


def _build_d(n: int) -> AffineDiagram:
    ident = DiagramId(1, "D", n)
    labels = {0: 1, 1: 1, n - 1: 1, n: 1}
    labels.update({i: 2 for i in range(2, n - 1)})
    bonds = [Bond(0, 2), Bond(1, 2)]
    bonds += [Bond(i, i + 1) for i in range(2, n - 2)]
    bonds += [Bond(n - 2, n - 1), Bond(n - 2, n)]
    graph = Diagram(1, labels, bonds)

    tip_swap = list(range(n + 1))
    tip_swap[0], tip_swap[1] = 1, 0
    tip_swap[n - 1], tip_swap[n] = n, n - 1
    if n % 2 == 0:
        eps_s = _d_reversal(n, {0: n - 1, n - 1: 0, 1: n, n: 1})
        eps_vs = _d_reversal(n, {0: n, n: 0, 1: n - 1, n - 1: 1})
        omega = (_identity(n + 1), tuple(tip_swap), eps_s, eps_vs)
    else:
        rho = _d_reversal(n, {0: n - 1, n - 1: 1, 1: n, n: 0})
        rho2 = tuple(rho[rho[i]] for i in range(n + 1))
        rho3 = tuple(rho[rho2[i]] for i in range(n + 1))
        omega = (_identity(n + 1), rho, rho2, rho3)
    layout = _layout(graph, [0] + list(range(2, n - 1)) + [n - 1], {0: (1,), n - 1: (n,)})
    return AffineDiagram(ident, graph, omega, layout)


def _build_e(n: int) -> AffineDiagram:
    ident = DiagramId(1, "E", n)
    if n == 6:
        labels = {0: 1, 1: 2, 2: 3, 3: 2, 4: 1, 5: 2, 6: 1}
        bonds = [Bond(0, 1), Bond(1, 2), Bond(2, 3), Bond(3, 4), Bond(2, 5), Bond(5, 6)]
        rot = (4, 3, 2, 5, 6, 1, 0)
        rot2 = tuple(rot[rot[i]] for i in range(7))
        graph = Diagram(1, labels, bonds)
        layout = _layout(graph, [0, 1, 2, 3, 4], {2: (5, 6)})
        return AffineDiagram(ident, graph, (_identity(7), rot, rot2), layout)
    if n == 7:
        labels = {0: 1, 1: 2, 2: 3, 3: 4, 4: 3, 5: 2, 6: 1, 7: 2}
        bonds = [Bond(i, i + 1) for i in range(6)] + [Bond(3, 7)]
        flip = (6, 5, 4, 3, 2, 1, 0, 7)
        graph = Diagram(1, labels, bonds)
        layout = _layout(graph, [0, 1, 2, 3, 4, 5, 6], {3: (7,)})
        return AffineDiagram(ident, graph, (_identity(8), flip), layout)
    labels = {0: 1, 1: 2, 2: 3, 3: 4, 4: 5, 5: 6, 6: 4, 7: 2, 8: 3}
    bonds = [Bond(i, i + 1) for i in range(7)] + [Bond(5, 8)]
    graph = Diagram(1, labels, bonds)
    layout = _layout(graph, [0, 1, 2, 3, 4, 5, 6, 7], {5: (8,)})
    return AffineDiagram(ident, graph, (_identity(9),), layout)


def _build_f4() -> AffineDiagram:
    ident = DiagramId(1, "F", 4)
    labels = {0: 1, 1: 2, 2: 3, 3: 4, 4: 2}
    bonds = [Bond(0, 1), Bond(1, 2), Bond(2, 3, 2, 3), Bond(3, 4)]
    graph = Diagram(1, labels, bonds)
    return AffineDiagram(ident, graph, (_identity(5),), _layout(graph, range(5)))


def _build_g2() -> AffineDiagram:
    ident = DiagramId(1, "G", 2)
    labels = {0: 1, 1: 2, 2: 3}
    bonds = [Bond(0, 1), Bond(1, 2, 3, 2)]
    graph = Diagram(1, labels, bonds)
    return AffineDiagram(ident, graph, (_identity(3),), _layout(graph, range(3)))


def _twisted_d_graph(ident: DiagramId, n: int) -> AffineDiagram:
    labels = {i: 1 for i in range(n + 1)}
    bonds = [Bond(0, 1, 2, 0)]
    bonds += [Bond(i, i + 1) for i in range(1, n - 1)]
    bonds.append(Bond(n - 1, n, 2, n))
    graph = Diagram(2, labels, bonds)
    flip = tuple(n - i for i in range(n + 1))
    return AffineDiagram(ident, graph, (_identity(n + 1), flip), _layout(graph, range(n + 1)))


def _build_a_twisted(base: int) -> AffineDiagram:
    ident = DiagramId(2, "A", base)
    if base % 2 == 0:
        n = base // 2
        if n == 1:
            graph = Diagram(2, {0: 1, 1: 2}, [Bond(0, 1, 4, 1)])
            return AffineDiagram(ident, graph, (_identity(2),), _layout(graph, [0, 1]))
        labels = {0: 1}
        labels.update({i: 2 for i in range(1, n + 1)})
        bonds = [Bond(0, 1, 2, 1)]
        bonds += [Bond(i, i + 1) for i in range(1, n - 1)]
        bonds.append(Bond(n - 1, n, 2, n))
        graph = Diagram(2, labels, bonds)
        return AffineDiagram(ident, graph, (_identity(n + 1),), _layout(graph, range(n + 1)))
    n = (base + 1) // 2
    if n == 2:
        # The twist of A3 degenerates to the three-node chain with both
        # arrows pointing outward, the same shape the twisted D family
        # produces at its smallest rank.
        return _twisted_d_graph(ident, 2)
    labels = {0: 1, 1: 1, n: 1}
    labels.update({i: 2 for i in range(2, n)})
    bonds = [Bond(0, 2), Bond(1, 2)]
    bonds += [Bond(i, i + 1) for i in range(2, n - 1)]
    bonds.append(Bond(n - 1, n, 2, n - 1))
    graph = Diagram(2, labels, bonds)
    swap = (1, 0) + tuple(range(2, n + 1))
    layout = _layout(graph, [0] + list(range(2, n + 1)), {0: (1,)})
    return AffineDiagram(ident, graph, (_identity(n + 1), swap), layout)


def _build_e6_twisted() -> AffineDiagram:
    ident = DiagramId(2, "E", 6)
    labels = {0: 1, 1: 2, 2: 3, 3: 2, 4: 1}
    bonds = [Bond(0, 1), Bond(1, 2), Bond(2, 3, 2, 2), Bond(3, 4)]
    graph = Diagram(2, labels, bonds)
    return AffineDiagram(ident, graph, (_identity(5),), _layout(graph, range(5)))


def _build_d4_triality() -> AffineDiagram:
    ident = DiagramId(3, "D", 4)
    labels = {0: 1, 1: 2, 2: 1}
    bonds = [Bond(0, 1), Bond(1, 2, 3, 1)]
    graph = Diagram(3, labels, bonds)
    return AffineDiagram(ident, graph, (_identity(3),), _layout(graph, range(3)))


@lru_cache(maxsize=None)
def build(ident: DiagramId) -> AffineDiagram:
    """Build the diagram for ``ident`` (cached)."""
    _check_admissible(ident)
    e, family, n = ident.e, ident.family, ident.base_rank
    if e == 1:
        if family == "A":
            return _build_a_untwisted(n)
        if family == "B":
            return _build_b(n)
        if family == "C":
            return _build_c(n)
        if family == "D":
            return _build_d(n)
        if family == "E":
            return _build_e(n)
        if family == "F":
            return _build_f4()
        return _build_g2()
    if e == 2:
        if family == "A":
            return _build_a_twisted(n)
        if family == "D":
            return _build_d_twisted(n)
        return _build_e6_twisted()
    return _build_d4_triality()


def _build_d_twisted(base: int) -> AffineDiagram:
    return _twisted_d_graph(DiagramId(2, "D", base), base - 1)


def build_spec(text: str) -> AffineDiagram:
    return build(parse_spec(text))


def catalog(max_rank: int = 12) -> list[AffineDiagram]:
    """All supported diagrams with base rank at most ``max_rank``."""
    out: list[DiagramId] = []
    out += [DiagramId(1, "A", n) for n in range(1, max_rank + 1)]
    out += [DiagramId(1, "B", n) for n in range(3, max_rank + 1)]
    out += [DiagramId(1, "C", n) for n in range(2, max_rank + 1)]
    out += [DiagramId(1, "D", n) for n in range(4, max_rank + 1)]
    out += [DiagramId(1, "E", n) for n in (6, 7, 8) if n <= max_rank]
    if max_rank >= 4:
        out.append(DiagramId(1, "F", 4))
    if max_rank >= 2:
        out.append(DiagramId(1, "G", 2))
    out += [DiagramId(2, "A", n) for n in range(2, max_rank + 1)]
    out += [DiagramId(2, "D", n) for n in range(3, max_rank + 1)]
    if max_rank >= 6:
        out.append(DiagramId(2, "E", 6))
    if max_rank >= 4:
        out.append(DiagramId(3, "D", 4))
    return [build(ident) for ident in out]


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------

_BOND_ASCII = {
    (2, "fwd"): "=>",
    (2, "back"): "<=",
    (3, "fwd"): "=3>",
    (3, "back"): "<3=",
    (4, "fwd"): "=4>",
    (4, "back"): "<4=",
    (4, "sym"): "<=>",
}
_BOND_UNICODE = {
    (2, "fwd"): "⇒",
    (2, "back"): "⇐",
    (3, "fwd"): "⇛",
    (3, "back"): "⇚",
    (4, "fwd"): "⟹",
    (4, "back"): "⟸",
    (4, "sym"): "⇔",
}


def render_kac(diagram: AffineDiagram, s: Sequence[int], unicode: bool = False) -> str:
    """Render a Kac vector along the diagram's layout.

    Off-chain nodes print in parentheses after their attachment point;
    bonds of multiplicity >= 2 print as arrows toward their tip.  Cyclic
    diagrams get a ``(cycle)`` suffix for the implied closing bond.
    """
    if len(s) != len(diagram.nodes):
        raise ValueError(
            f"{diagram.spec} needs {len(diagram.nodes)} coordinates, got {len(s)}"
        )
    table = _BOND_UNICODE if unicode else _BOND_ASCII
    out: list[str] = []
    prev = ""
    for entry in diagram.layout:
        kind = entry[0]
        if kind == "node":
            if prev == "val":
                out.append(" ")
            out.append(str(s[entry[1]]))
            prev = "val"
        elif kind == "paren":
            if prev == "val":
                out.append(" ")
            out.append("(" + " ".join(str(s[i]) for i in entry[1]) + ")")
            prev = "val"
        else:
            _kind, bond, right = entry
            if bond.mult == 1:
                out.append(" ")
            else:
                direction = "sym" if bond.tip is None else ("fwd" if bond.tip == right else "back")
                out.append(table[(bond.mult, direction)])
            prev = "bond"
    if diagram.cyclic:
        out.append(" (cycle)")
    return "".join(out)
