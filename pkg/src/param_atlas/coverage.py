"""Standard Levi subgroups and the coverage report.

A census entry is covered when its class is regular in some stable standard
Levi and the entry's twisted class is reached from that Levi.  Reachability is
a preset rule validated by the finite oracles: the identity twisted class is
always reached; non-identity classes are reached from the full group, and (via
block-scalar witnesses) from proper Levis in the SL family only.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .census import CensusEntry, UnipotentClass, census
from .root_datum import ArithmeticContext, GroupDatum


def simple_root_permutation(datum: GroupDatum) -> tuple[int, ...]:
    """The permutation induced by the Frobenius dual on simple-root indices."""
    out = []
    for k in datum.simple:
        image = tuple(
            sum(datum.frobenius_dual[i][j] * datum.roots[k][j] for j in range(datum.torus_rank))
            for i in range(datum.torus_rank)
        )
        matches = [j for j in datum.simple if datum.roots[j] == image]
        if len(matches) != 1:
            raise ValueError("frobenius does not permute the simple roots")
        out.append(datum.simple.index(matches[0]))
    return tuple(out)


@dataclass(frozen=True)
class StandardLevi:
    """Levi determined by a subset of simple roots.

    gl_blocks lists diagonal GL block sizes by position (singleton positions
    included); core is the symplectic core size 2c for GSp subsets containing
    the long root, else 0.
    """

    family: str
    n: int
    subset: tuple[int, ...]
    gamma_stable: bool
    gl_blocks: tuple[int, ...]
    core: int

    @property
    def is_full_group(self) -> bool:
        n_simple = (self.n // 2) if self.family == "GSp" else self.n - 1
        return len(self.subset) == n_simple

    def jordan_contribution(self) -> tuple[int, ...]:
        """Jordan type of a regular unipotent of this Levi in the ambient group."""
        if self.family in ("GL", "SL", "U"):
            return tuple(sorted(self.gl_blocks, reverse=True))
        parts = []
        for b in self.gl_blocks:
            parts += [b, b]
        if self.core:
            parts.append(self.core)
        return tuple(sorted(parts, reverse=True))

    def describe(self) -> str:
        pieces = [f"GL{b}" for b in self.gl_blocks]
        if self.family == "GSp" and self.core:
            pieces.append(f"GSp{self.core}")
        return "x".join(pieces) if pieces else "T"

    def to_dict(self) -> dict:
        return {
            "subset": list(self.subset),
            "gamma_stable": self.gamma_stable,
            "blocks": list(self.gl_blocks),
            "core": self.core if self.family == "GSp" else None,
            "shape": self.describe(),
        }


def _runs(subset: set[int], lo: int, hi: int) -> list[tuple[int, int]]:
    """Maximal runs [i, j] of consecutive members of subset within [lo, hi)."""
    runs = []
    i = lo
    while i < hi:
        if i in subset:
            j = i
            while j + 1 < hi and j + 1 in subset:
                j += 1
            runs.append((i, j))
            i = j + 2
        else:
            i += 1
    return runs


def _levi_from_subset(datum: GroupDatum, subset: tuple[int, ...], stable: bool) -> StandardLevi:
    s = set(subset)
    if datum.family in ("GL", "SL", "U"):
        npos = datum.n
        blocks = []
        pos = 0
        for (i, j) in _runs(s, 0, npos - 1):
            blocks += [1] * (i - pos)
            blocks.append(j - i + 2)
            pos = j + 2
        blocks += [1] * (npos - pos)
        return StandardLevi(datum.family, datum.n, subset, stable, tuple(blocks), 0)
    m = datum.n // 2
    long_index = m - 1
    core = 0
    if long_index in s:
        i = long_index
        while i - 1 in s:
            i -= 1
        core = 2 * (m - i)
        s = s - set(range(i, m))
        npos = i
    else:
        npos = m
    blocks = []
    pos = 0
    for (i, j) in _runs(s, 0, npos - 1):
        blocks += [1] * (i - pos)
        blocks.append(j - i + 2)
        pos = j + 2
    blocks += [1] * (npos - pos)
    return StandardLevi(datum.family, datum.n, subset, stable, tuple(blocks), core)


def standard_levis(datum: GroupDatum) -> list[StandardLevi]:
    """All subsets of simple roots, flagged stable under the Frobenius dual."""
    perm = simple_root_permutation(datum)
    n_simple = len(datum.simple)
    out = []
    for size in range(n_simple + 1):
        for subset in combinations(range(n_simple), size):
            stable = {perm[i] for i in subset} == set(subset)
            out.append(_levi_from_subset(datum, subset, stable))
    return out


def is_regular_in(cls: UnipotentClass, levi: StandardLevi) -> bool:
    """Whether the class is the regular unipotent class of the Levi."""
    if cls.family != levi.family or cls.ambient != levi.n:
        raise ValueError("class and Levi belong to different group data")
    if not levi.gamma_stable:
        raise ValueError("coverage only considers gamma-stable Levis")
    return levi.jordan_contribution() == cls.partition


def is_distinguished(cls: UnipotentClass, datum: GroupDatum) -> bool:
    if cls.family != datum.family or cls.ambient != datum.n:
        raise ValueError(f"class {cls.partition} does not belong to {datum.name}")
    return cls.distinguished


def _reaches_twisted_class(datum: GroupDatum, levi: StandardLevi, identity_rep: bool) -> bool:
    if identity_rep:
        return True
    if levi.is_full_group:
        return True
    # proper SL Levis surject onto pi_0 (block-scalar witnesses); other
    # families' proper Levis have connected regular centralizers
    return datum.family == "SL"


@dataclass(frozen=True)
class CoverageVerdict:
    entry: CensusEntry
    covered: bool
    witness: Optional[StandardLevi]
    reason: str

    def to_dict(self) -> dict:
        d = self.entry.to_dict()
        d["covered"] = self.covered
        d["witness"] = self.witness.to_dict() if self.witness else None
        d["reason"] = self.reason
        return d


def coverage_report(datum: GroupDatum, ctx: ArithmeticContext) -> list[CoverageVerdict]:
    """One verdict per census entry, in census order."""
    levis = [x for x in standard_levis(datum) if x.gamma_stable]
    levis.sort(key=lambda x: (len(x.subset), x.subset))
    verdicts = []
    for entry in census(datum, ctx):
        cls = entry.unipotent
        identity_rep = entry.twisted_rep == entry.pi0.realize(ctx.ell).identity
        regular_wits = [x for x in levis if is_regular_in(cls, x)]
        witness = next(
            (x for x in regular_wits if _reaches_twisted_class(datum, x, identity_rep)), None
        )
        if witness is not None:
            verdicts.append(CoverageVerdict(entry, True, witness, "regular-in-Levi"))
        elif regular_wits:
            verdicts.append(CoverageVerdict(entry, False, None, "twisted-class-not-reached"))
        elif cls.distinguished and not cls.regular:
            verdicts.append(CoverageVerdict(entry, False, None, "distinguished-non-regular"))
        else:
            verdicts.append(CoverageVerdict(entry, False, None, "no-stable-levi-witness"))
    return verdicts
