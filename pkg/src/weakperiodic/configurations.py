"""Weak-periodic spin rules: a spin for every (parent coset, vertex coset) pair."""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from typing import Any, Iterable, Mapping

import numpy as np

from .group_core import (
    INDEX_FOUR,
    INDEX_TWO,
    GroupWord,
    SubgroupSpec,
    TreeLayout,
    coset_class,
    parent,
)

Pair = tuple[int, int]

INDEX_TWO_PAIRS: tuple[Pair, ...] = ((0, 0), (0, 1), (1, 0), (1, 1))
# order in which the eight index-4 entries a_pq are listed throughout
INDEX_FOUR_PAIRS: tuple[Pair, ...] = (
    (1, 3), (3, 1), (0, 3), (3, 0), (2, 1), (1, 2), (0, 2), (2, 0),
)

# index-2 tables in INDEX_TWO_PAIRS order, before the global sign
_INDEX_TWO_TABLES: dict[int, tuple[int, int, int, int]] = {
    1: (+1, +1, +1, +1),
    2: (-1, +1, +1, +1),
    3: (+1, -1, +1, +1),
    4: (+1, +1, -1, +1),
    5: (+1, +1, +1, -1),
    6: (-1, -1, +1, +1),
    7: (-1, +1, -1, +1),
    8: (+1, -1, -1, +1),
}

PHI_PRIME = (+1, +1, -1, -1, -1, -1, +1, +1)
PHI_DOUBLE_PRIME = (-1, +1, +1, -1, -1, +1, -1, +1)
_INDEX_FOUR_NAMES = {PHI_PRIME: "phi_prime", PHI_DOUBLE_PRIME: "phi_double_prime"}


def pairs_for(s: SubgroupSpec) -> tuple[Pair, ...]:
    return INDEX_TWO_PAIRS if s.kind == INDEX_TWO else INDEX_FOUR_PAIRS


def realizable_pairs(s: SubgroupSpec) -> frozenset[Pair]:
    """Pairs (class of x's parent, class of x) that some non-root vertex x attains."""
    avail = s.letter_type_counts()
    return frozenset(
        (j, s.step(j, t)) for j in range(s.n_classes) for t in (True, False) if avail[t] > 0
    )


def sign_pattern(spins: Iterable[int]) -> str:
    return "".join("+" if v > 0 else "-" for v in spins)


@dataclass(frozen=True)
class WeakPeriodicRule:
    subgroup: SubgroupSpec
    entries: tuple[int, ...]
    label: str = field(default="", compare=False)

    def __post_init__(self):
        entries = tuple(int(v) for v in self.entries)
        if len(entries) != len(pairs_for(self.subgroup)):
            raise ValueError(
                f"{self.subgroup.kind} rule needs {len(pairs_for(self.subgroup))} entries"
            )
        if any(v not in (-1, 1) for v in entries):
            raise ValueError("rule entries must be +1 or -1")
        object.__setattr__(self, "entries", entries)
        if not self.label:
            object.__setattr__(self, "label", default_label(self.subgroup, entries))

    @classmethod
    def from_table(cls, subgroup: SubgroupSpec, table: Mapping[Pair, int], label: str = ""):
        pairs = pairs_for(subgroup)
        if set(table) != set(pairs):
            raise ValueError(f"table keys must be exactly {sorted(pairs)}")
        return cls(subgroup, tuple(table[p] for p in pairs), label)

    @property
    def k(self) -> int:
        return self.subgroup.k

    @property
    def pairs(self) -> tuple[Pair, ...]:
        return pairs_for(self.subgroup)

    @property
    def table(self) -> dict[Pair, int]:
        return dict(zip(self.pairs, self.entries))

    def __getitem__(self, pair: Pair) -> int:
        return self.table[pair]

    def __neg__(self) -> WeakPeriodicRule:
        return negate(self)

    def lookup_array(self) -> np.ndarray:
        n = self.subgroup.n_classes
        lut = np.zeros((n, n), np.int8)
        for (j, c), v in self.table.items():
            lut[j, c] = v
        return lut


def _flip_label(label: str) -> str:
    return label[1:] if label.startswith("-") else "-" + label


def default_label(s: SubgroupSpec, entries: tuple[int, ...]) -> str:
    if s.kind == INDEX_TWO:
        for num, base in _INDEX_TWO_TABLES.items():
            if entries == base:
                return f"phi_{num}"
            if entries == tuple(-v for v in base):
                return f"-phi_{num}"
    else:
        for base, name in _INDEX_FOUR_NAMES.items():
            if entries == base:
                return name
            if entries == tuple(-v for v in base):
                return "-" + name
    return f"g{s.index}[{sign_pattern(entries)}]"


def negate(rule: WeakPeriodicRule) -> WeakPeriodicRule:
    return WeakPeriodicRule(rule.subgroup, tuple(-v for v in rule.entries), _flip_label(rule.label))


def index_two_rule(num: int, A: Iterable[int], k: int, sign: int = 1) -> WeakPeriodicRule:
    if num not in _INDEX_TWO_TABLES:
        raise ValueError(f"index-2 rules are numbered 1..8, got {num}")
    s = SubgroupSpec.index_two(A, k)
    rule = WeakPeriodicRule(s, _INDEX_TWO_TABLES[num])
    return rule if sign > 0 else negate(rule)


def catalog_index2(A: Iterable[int], k: int) -> list[WeakPeriodicRule]:
    """phi_1 .. phi_8 and their negations, in that order."""
    A = frozenset(A)
    rules = []
    for num in _INDEX_TWO_TABLES:
        rule = index_two_rule(num, A, k)
        rules += [rule, negate(rule)]
    return rules


def catalog_index4(A: Iterable[int], k: int) -> list[WeakPeriodicRule]:
    """All 2**8 sign tables over the index-4 pairs, all-plus first."""
    s = SubgroupSpec.index_four(A, k)
    return [
        WeakPeriodicRule(s, signs)
        for signs in itertools.product((1, -1), repeat=len(INDEX_FOUR_PAIRS))
    ]


def phi_prime(A: Iterable[int], k: int) -> WeakPeriodicRule:
    return WeakPeriodicRule(SubgroupSpec.index_four(A, k), PHI_PRIME)


def phi_double_prime(A: Iterable[int], k: int) -> WeakPeriodicRule:
    return WeakPeriodicRule(SubgroupSpec.index_four(A, k), PHI_DOUBLE_PRIME)


def periodic_sigma(i: int, k: int) -> WeakPeriodicRule:
    """Period-<=2 rule whose every unit ball has exactly i minority neighbours.

    i = 0 is the all-plus rule; otherwise phi_7 over A = {1..i}, which for
    i = k+1 is the checkerboard by word-length parity.
    """
    if not 0 <= i <= k + 1:
        raise ValueError(f"i must lie in 0..{k + 1}, got {i}")
    if i == 0:
        rule = index_two_rule(1, {1}, k)
    else:
        rule = index_two_rule(7, range(1, i + 1), k)
    return WeakPeriodicRule(rule.subgroup, rule.entries, f"sigma_{i}")


def rule_by_label(label: str, A: Iterable[int], k: int, index: int = 2) -> WeakPeriodicRule:
    """Parse ``phi_3``, ``-phi_8``, ``phi_prime``, ``-phi_double_prime``, ``g4[+-...]``."""
    sign = -1 if label.startswith("-") else 1
    base = label.lstrip("-")
    A = frozenset(A)
    if base.startswith("phi_") and base[4:].isdigit():
        return index_two_rule(int(base[4:]), A, k, sign)
    if base == "phi_prime":
        rule = phi_prime(A, k)
    elif base == "phi_double_prime":
        rule = phi_double_prime(A, k)
    elif base.startswith(("g2[", "g4[")) and base.endswith("]"):
        s = (SubgroupSpec.index_two if base[1] == "2" else SubgroupSpec.index_four)(A, k)
        pattern = base[3:-1]
        if set(pattern) - {"+", "-"}:
            raise ValueError(f"bad sign pattern {pattern!r}")
        rule = WeakPeriodicRule(s, tuple(1 if ch == "+" else -1 for ch in pattern))
    else:
        raise ValueError(f"unknown rule label {label!r}")
    return rule if sign > 0 else negate(rule)


class Periodicity(str, enum.Enum):
    TRANSLATION_INVARIANT = "TranslationInvariant"
    SUBGROUP_PERIODIC = "SubgroupPeriodic"
    STRICTLY_WEAK_PERIODIC = "StrictlyWeakPeriodic"


def classify_periodicity(rule: WeakPeriodicRule) -> Periodicity:
    """Decide periodicity from the entries that some vertex actually uses.

    Pairs that no edge of the tree realises (e.g. same-class pairs when A is
    every generator) never affect the configuration and are ignored.
    """
    used = {p: v for p, v in rule.table.items() if p in realizable_pairs(rule.subgroup)}
    if len(set(used.values())) == 1:
        return Periodicity.TRANSLATION_INVARIANT
    by_vertex: dict[int, set[int]] = {}
    for (_, c), v in used.items():
        by_vertex.setdefault(c, set()).add(v)
    if all(len(vals) == 1 for vals in by_vertex.values()):
        return Periodicity.SUBGROUP_PERIODIC
    return Periodicity.STRICTLY_WEAK_PERIODIC


def default_root_parent_class(s: SubgroupSpec) -> int:
    """A parent class j with (j, 0) realisable, so the root looks like a generic vertex."""
    preferred = 0 if s.kind == INDEX_TWO else 2
    pairs = realizable_pairs(s)
    if (preferred, 0) in pairs:
        return preferred
    return min(j for j, c in pairs if c == 0)


@dataclass(frozen=True)
class SpinConfigView:
    rule: WeakPeriodicRule
    root_parent_class: int | None = None

    def __post_init__(self):
        if self.root_parent_class is None:
            object.__setattr__(
                self, "root_parent_class", default_root_parent_class(self.rule.subgroup)
            )

    def spins(self, layout: TreeLayout) -> np.ndarray:
        """Spin of every vertex of the layout, as int8."""
        cls = layout.classes(self.rule.subgroup)
        par_cls = np.empty_like(cls)
        par_cls[0] = self.root_parent_class
        par_cls[1:] = cls[layout.parent[1:]]
        return self.rule.lookup_array()[par_cls, cls]


def evaluate(view: SpinConfigView | WeakPeriodicRule, x: GroupWord) -> int:
    if isinstance(view, WeakPeriodicRule):
        view = SpinConfigView(view)
    s = view.rule.subgroup
    if x.k != s.k:
        raise ValueError(f"word of order {x.k} against rule of order {s.k}")
    c = coset_class(x, s)
    j = view.root_parent_class if x.is_identity else coset_class(parent(x), s)
    table = view.rule.table
    if (j, c) not in table:
        raise ValueError(f"pair {(j, c)} is not a tree edge for {s.kind}")
    return table[(j, c)]


def rule_to_json(rule: WeakPeriodicRule) -> dict[str, Any]:
    s = rule.subgroup
    return {
        "label": rule.label,
        "subgroup": {"kind": s.kind, "A": sorted(s.A)},
        "k": s.k,
        "table": [
            {"parent": j, "vertex": c, "spin": v} for (j, c), v in zip(rule.pairs, rule.entries)
        ],
    }


def rule_from_json(data: Mapping[str, Any]) -> WeakPeriodicRule:
    sub = data["subgroup"]
    kind = sub["kind"]
    if kind not in (INDEX_TWO, INDEX_FOUR):
        raise ValueError(f"unknown subgroup kind {kind!r}")
    s = SubgroupSpec(kind, frozenset(sub["A"]), int(data["k"]))
    table = {(int(e["parent"]), int(e["vertex"])): int(e["spin"]) for e in data["table"]}
    if len(table) != len(data["table"]):
        raise ValueError("duplicate pair in rule table")
    return WeakPeriodicRule.from_table(s, table, data.get("label", ""))
