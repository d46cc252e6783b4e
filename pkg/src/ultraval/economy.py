"""Multi-agent economies: welfare, optimal allocations, Walrasian checks."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Mapping, Sequence

from .core import BundleLike, DomainError, GroundSet, PriceVector, Valuation, members
from .properties import CapExceeded

DEFAULT_ALLOCATION_CAP = 10**7


@dataclass(frozen=True)
class Economy:
    ground: GroundSet
    agents: tuple[tuple[str, Valuation], ...]

    def __post_init__(self):
        agents = tuple((str(name), v) for name, v in self.agents)
        object.__setattr__(self, "agents", agents)
        if not agents:
            raise DomainError("an economy needs at least one agent")
        names = [name for name, _ in agents]
        if len(set(names)) != len(names) or not all(names):
            raise DomainError("agent names must be distinct and non-empty")
        for name, v in agents:
            if v.ground != self.ground:
                raise DomainError(f"agent {name!r} is valued on a different ground set")

    @classmethod
    def of(cls, valuations: Sequence[Valuation], names: Sequence[str] | None = None) -> Economy:
        if not valuations:
            raise DomainError("an economy needs at least one agent")
        names = names or [f"agent{j}" for j in range(len(valuations))]
        return cls(valuations[0].ground, tuple(zip(names, valuations)))

    @property
    def m(self) -> int:
        return len(self.agents)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(name for name, _ in self.agents)

    @property
    def valuations(self) -> tuple[Valuation, ...]:
        return tuple(v for _, v in self.agents)

    def agent_index(self, name: str | int) -> int:
        if isinstance(name, int):
            if 0 <= name < self.m:
                return name
        elif name in self.names:
            return self.names.index(name)
        raise DomainError(f"unknown agent {name!r}")


@dataclass(frozen=True)
class Allocation:
    """One bundle (bitmask) per agent, in agent order; a partition of the items."""

    bundles: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "bundles", tuple(self.bundles))

    @classmethod
    def from_mapping(cls, e: Economy, assignment: Mapping[str, BundleLike]) -> Allocation:
        out: list = [None] * e.m
        for name, bundle in assignment.items():
            j = e.agent_index(name)
            out[j] = e.ground.mask(bundle)
        missing = [e.names[j] for j, b in enumerate(out) if b is None]
        if missing:
            raise DomainError(f"no bundle given for agents: {', '.join(missing)}")
        a = cls(tuple(out))
        a.validate(e)
        return a

    def validate(self, e: Economy) -> None:
        if len(self.bundles) != e.m:
            raise DomainError(f"allocation has {len(self.bundles)} bundles for {e.m} agents")
        seen = 0
        for b in self.bundles:
            if b < 0 or b >> e.ground.n:
                raise DomainError(f"bundle {b} is not a subset of the items")
            if seen & b:
                raise DomainError("allocation bundles overlap")
            seen |= b
        if seen != e.ground.full:
            left = e.ground.fmt(e.ground.full & ~seen)
            raise DomainError(f"allocation leaves items unassigned: {left}")


def welfare(e: Economy, a: Allocation) -> Fraction:
    a.validate(e)
    return sum((v.table[b] for v, b in zip(e.valuations, a.bundles)), Fraction(0))


def _assignments(n: int, m: int):
    # item i goes to agent digits[i]; enumerated with item 0 varying slowest
    if n == 0:
        yield ()
        return
    digits = [0] * n
    while True:
        yield tuple(digits)
        i = n - 1
        while i >= 0 and digits[i] == m - 1:
            digits[i] = 0
            i -= 1
        if i < 0:
            return
        digits[i] += 1


def optimal_allocation(
    e: Economy, cap: int = DEFAULT_ALLOCATION_CAP
) -> tuple[Fraction, list[Allocation]]:
    """Maximum welfare and every allocation attaining it, by brute force.

    Allocations are scanned in the order of the item->agent assignment vector
    (item 0 most significant), which is also the order of the returned list.
    """
    n, m = e.ground.n, e.m
    if m**n > cap:
        raise CapExceeded(f"{m}^{n} allocations exceed the cap of {cap}")
    tables = [v.scaled for v in e.valuations]
    scale = 1
    for _, d in tables:
        scale = lcm(scale, d)
    ints = [[x * (scale // d) for x in t] for t, d in tables]
    best, winners = None, []
    for digits in _assignments(n, m):
        bundles = [0] * m
        for i, j in enumerate(digits):
            bundles[j] |= 1 << i
        w = sum(ints[j][b] for j, b in enumerate(bundles))
        if best is None or w > best:
            best, winners = w, [tuple(bundles)]
        elif w == best:
            winners.append(tuple(bundles))
    return Fraction(best, scale), [Allocation(b) for b in winners]


@dataclass(frozen=True)
class AgentFailure:
    """Agent ``agent`` strictly prefers ``bundle`` to its own, by ``gap``.

    ``condition`` is 1 (superset), 2 (subset) or 3 (single swap); in full mode
    it is the first of these that ``bundle`` falls under, or 0 if none.
    """

    agent: int
    condition: int
    bundle: int
    own_utility: Fraction
    alt_utility: Fraction

    @property
    def gap(self) -> Fraction:
        return self.alt_utility - self.own_utility


@dataclass(frozen=True)
class EquilibriumVerdict:
    holds: bool
    mode: str
    failures: tuple[AgentFailure, ...] = ()

    def __bool__(self):
        return self.holds


def _relation(own: int, c: int) -> int:
    if own & c == own:
        return 1
    if own & c == c:
        return 2
    if (own & ~c).bit_count() == 1 and (c & ~own).bit_count() == 1:
        return 3
    return 0


def _argmax(u: Sequence[Fraction], candidates) -> tuple[int, Fraction] | None:
    best = None
    for c in candidates:
        if best is None or u[c] > best[1]:
            best = (c, u[c])
    return best


def _local_neighbourhoods(own: int, full: int):
    out_bits = [1 << i for i in members(full & ~own)]
    in_bits = [1 << i for i in members(own)]
    supersets = [own | s for s in _subsets(full & ~own)]
    subsets = _subsets(own)
    swaps = sorted(own ^ bx ^ by for bx in in_bits for by in out_bits)
    return ((1, supersets), (2, subsets), (3, swaps))


def _subsets(mask: int) -> list[int]:
    out = []
    s = 0
    while True:
        out.append(s)
        if s == mask:
            return out
        s = (s - mask) & mask


def check_walrasian(e: Economy, a: Allocation, p: PriceVector, mode: str = "full") -> EquilibriumVerdict:
    """Check that every agent's bundle maximises its utility at prices ``p``.

    ``full`` compares against every bundle.  ``local`` only checks supersets,
    subsets and single swaps of each agent's bundle, which is equivalent when
    every agent's valuation is ultra.  Failure evidence names, per failing
    agent, its most preferred alternative (lowest bitmask on ties).
    """
    if mode not in ("full", "local"):
        raise DomainError(f"unknown mode {mode!r}")
    if p.ground != e.ground:
        raise DomainError("prices are on a different ground set")
    a.validate(e)
    pt = p.as_valuation().table
    full = e.ground.full
    failures = []
    for j, (v, own) in enumerate(zip(e.valuations, a.bundles)):
        u = [x - y for x, y in zip(v.table, pt)]
        if mode == "full":
            c, uc = _argmax(u, range(1 << e.ground.n))
            if uc > u[own]:
                failures.append(AgentFailure(j, _relation(own, c), c, u[own], uc))
            continue
        for cond, cands in _local_neighbourhoods(own, full):
            hit = _argmax(u, cands)
            if hit is not None and hit[1] > u[own]:
                failures.append(AgentFailure(j, cond, hit[0], u[own], hit[1]))
                break
    return EquilibriumVerdict(not failures, mode, tuple(failures))
