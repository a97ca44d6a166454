"""Exact evaluation of the fixed-subalgebra dimension bound.

For a torsion class with Kac coordinates ``s`` of order ``m`` on a diagram
with ``n = n_e`` finite nodes, the fixed subalgebra has dimension
``n + |R_J|`` where ``J`` is the zero set of ``s``, and the bound under
test is

    1/m  <=  (n + |R_J|) / |R|,        |R| = h_e * n_e.

Clearing denominators and minimising over orders sharing a zero set, the
bound for every class with zero set ``J`` reduces to the integer
certificate

    f(J) = c^J * |R_J|  -  n * c_J  >=  0,

where ``c_J`` / ``c^J`` are the label sums over ``J`` and its complement.
Everything here is exact integer / rational arithmetic; no floats.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional

from .affine import AffineDiagram
from .dynkin import FiniteFactor, factors_type_string, total_root_count
from . import kac


def zero_set_data(diagram: AffineDiagram, J: frozenset[int]) -> tuple[int, int, int]:
    """Return ``(|R_J|, c_J, c^J)`` for a proper subset ``J`` of nodes."""
    nodes = frozenset(diagram.nodes)
    J = frozenset(J)
    if not J <= nodes:
        raise ValueError(f"not a node subset: {sorted(J)}")
    if J == nodes:
        raise ValueError("zero set must be a proper subset of the nodes")
    factors = diagram.factors(J)
    r_j = total_root_count(factors)
    c_j = diagram.label_sum_of(J)
    c_up = diagram.label_sum - c_j
    return r_j, c_j, c_up


def f_value(diagram: AffineDiagram, J: frozenset[int]) -> int:
    """The integer certificate ``c^J * |R_J| - n_e * c_J``."""
    r_j, c_j, c_up = zero_set_data(diagram, J)
    return c_up * r_j - diagram.n_e * c_j


@dataclass(frozen=True)
class ClassReport:
    """The bound, evaluated exactly for one torsion class."""

    spec: str
    m: int
    s: tuple[int, ...]
    zero_set: tuple[int, ...]
    fixed_type: str
    fixed_dim: int
    tau: Fraction           # 1/m
    bound: Fraction         # fixed_dim / |R|
    f: int

    @property
    def holds(self) -> bool:
        return self.tau <= self.bound

    @property
    def is_equality(self) -> bool:
        return self.tau == self.bound


def check_class(diagram: AffineDiagram, s: tuple[int, ...]) -> ClassReport:
    """Evaluate the bound for the torsion class with Kac coordinates ``s``."""
    if not kac.is_admissible(s):
        raise ValueError(f"inadmissible Kac coordinates: {s}")
    m = kac.order_of(diagram, s)
    J = kac.zero_set(diagram, s)
    factors = diagram.factors(J)
    r_j = total_root_count(factors)
    return ClassReport(
        spec=diagram.spec,
        m=m,
        s=tuple(s),
        zero_set=tuple(sorted(J)),
        fixed_type=factors_type_string(factors),
        fixed_dim=diagram.n_e + r_j,
        tau=Fraction(1, m),
        bound=Fraction(diagram.n_e + r_j, diagram.base_root_count),
        f=f_value(diagram, J),
    )


@dataclass(frozen=True)
class EqualityClass:
    """A torsion class attaining ``1/m = dim g^theta / dim(g/t)`` exactly."""

    m: int
    s: tuple[int, ...]
    fixed_type: str
    fixed_dim: int


@dataclass(frozen=True)
class DiagramScan:
    """Result of exhaustively certifying one diagram.

    ``min_f`` is taken over nonempty proper zero sets (the empty zero set
    always gives ``f = 0``: the principal class).  ``equality_classes``
    lists, up to diagram symmetry and in decreasing order, every torsion
    class attaining the bound; the empty zero set contributes the
    principal class of order ``h_e``.
    """

    spec: str
    h_e: int
    n_e: int
    dim_g: int
    subsets_checked: int
    min_f: int
    min_f_zero_set: tuple[int, ...]
    equality_classes: tuple[EqualityClass, ...]

    @property
    def all_nonnegative(self) -> bool:
        return self.min_f >= 0


def proper_subsets(diagram: AffineDiagram) -> Iterator[frozenset[int]]:
    """All proper subsets of the node set, the empty set first."""
    nodes = sorted(diagram.nodes)
    for size in range(len(nodes)):
        for combo in itertools.combinations(nodes, size):
            yield frozenset(combo)


def scan_diagram(diagram: AffineDiagram) -> DiagramScan:
    """Certify ``f(J) >= 0`` over every proper subset and collect equality."""
    n = diagram.n_e
    label_sum = diagram.label_sum
    min_f: Optional[int] = None
    min_J: tuple[int, ...] = ()
    equality: dict[tuple[int, ...], EqualityClass] = {}
    count = 0
    for J in proper_subsets(diagram):
        count += 1
        factors = diagram.factors(J)
        r_j = total_root_count(factors)
        c_j = diagram.label_sum_of(J)
        c_up = label_sum - c_j
        f = c_up * r_j - n * c_j
        if J and (min_f is None or f < min_f):
            min_f = f
            min_J = tuple(sorted(J))
        if f == 0:
            s = kac.canonical(diagram, kac.from_zero_set(diagram, J))
            if s not in equality:
                equality[s] = EqualityClass(
                    m=diagram.e * c_up,
                    s=s,
                    fixed_type=factors_type_string(factors),
                    fixed_dim=n + r_j,
                )
    classes = tuple(
        sorted(equality.values(), key=lambda c: (-c.m, c.s))
    )
    assert min_f is not None
    return DiagramScan(
        spec=diagram.spec,
        h_e=diagram.coxeter,
        n_e=n,
        dim_g=diagram.base_dim,
        subsets_checked=count,
        min_f=min_f,
        min_f_zero_set=min_J,
        equality_classes=classes,
    )


# ---------------------------------------------------------------------------
# Extremal tables for the simply-laced exceptional diagrams.
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class StepRow:
    """One row of an extremal table.

    For a first-kind row, ``key`` is a complement label sum ``m`` and
    ``value`` is ``r(m) = min |R_J|`` over ``c^J = m``; for a second-kind
    row, ``key`` is a root count ``r`` and ``value`` is
    ``m(r) = min c^J`` over ``|R_J| = r``.  ``achievers`` holds the type
    strings realising the minimum, and ``witness`` the unique zero set
    (as a Kac vector, if any) attaining the underlying bound with
    equality.
    """

    key: int
    value: int
    achievers: frozenset[str]
    witness: Optional[tuple[int, ...]]


def _exceptional_inner(diagram: AffineDiagram) -> None:
    if diagram.e != 1 or diagram.ident.family != "E":
        raise ValueError(
            f"extremal tables are defined for E6, E7, E8 only, not {diagram.spec}"
        )


def step1_table(diagram: AffineDiagram) -> dict[int, StepRow]:
    """Minimal fixed root counts ``r(m)`` for ``1 < m < n_e``.

    The bound proved row by row is ``r(m) >= |R|/m - n``; the witness
    column is the unique zero set achieving it with equality, when the
    right-hand side is attained.
    """
    _exceptional_inner(diagram)
    n = diagram.n_e
    total = diagram.base_root_count
    by_m: dict[int, list[tuple[int, str, frozenset[int]]]] = {}
    for J in proper_subsets(diagram):
        c_j = diagram.label_sum_of(J)
        m = diagram.label_sum - c_j
        if not 1 < m < n:
            continue
        factors = diagram.factors(J)
        by_m.setdefault(m, []).append(
            (total_root_count(factors), factors_type_string(factors), J)
        )
    table: dict[int, StepRow] = {}
    for m, entries in sorted(by_m.items()):
        r_min = min(r for r, _, _ in entries)
        achievers = frozenset(t for r, t, _ in entries if r == r_min)
        witnesses = {
            kac.canonical(diagram, kac.from_zero_set(diagram, J))
            for r, _, J in entries
            if m * (r + n) == total
        }
        if len(witnesses) > 1:
            raise AssertionError(
                f"{diagram.spec}: multiple extremal classes at m={m}: {witnesses}"
            )
        table[m] = StepRow(
            key=m,
            value=r_min,
            achievers=achievers,
            witness=next(iter(witnesses)) if witnesses else None,
        )
    return table


def step2_table(diagram: AffineDiagram) -> dict[int, StepRow]:
    """Minimal complement sums ``m(r)`` for even ``10 <= r <= h - n``."""
    _exceptional_inner(diagram)
    n = diagram.n_e
    total = diagram.base_root_count
    top = diagram.coxeter - n
    wanted = range(10, top + 1, 2)
    by_r: dict[int, list[tuple[int, str, frozenset[int]]]] = {r: [] for r in wanted}
    if not wanted:
        return {}
    for J in proper_subsets(diagram):
        factors = diagram.factors(J)
        r = total_root_count(factors)
        if r in by_r:
            c_j = diagram.label_sum_of(J)
            by_r[r].append(
                (diagram.label_sum - c_j, factors_type_string(factors), J)
            )
    table: dict[int, StepRow] = {}
    for r, entries in by_r.items():
        if not entries:
            continue
        m_min = min(m for m, _, _ in entries)
        achievers = frozenset(t for m, t, _ in entries if m == m_min)
        witnesses = {
            kac.canonical(diagram, kac.from_zero_set(diagram, J))
            for m, _, J in entries
            if m * (r + n) == total
        }
        if len(witnesses) > 1:
            raise AssertionError(
                f"{diagram.spec}: multiple extremal classes at r={r}: {witnesses}"
            )
        table[r] = StepRow(
            key=r,
            value=m_min,
            achievers=achievers,
            witness=next(iter(witnesses)) if witnesses else None,
        )
    return table
