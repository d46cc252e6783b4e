"""Ground sets, bundles, exact valuation tables and the valuation combinators.

A bundle is an ``int`` bitmask over the ground-set order: item ``i`` occupies
bit ``i``.  Values are :class:`fractions.Fraction` throughout, so every
comparison made by the checkers is exact.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import lcm
from numbers import Rational
from typing import Callable, Iterable, Mapping, Sequence, Union

MAX_ITEMS = 24

Value = Fraction
BundleLike = Union[int, Iterable[Union[str, int]]]
ItemLike = Union[str, int]

_VALUE_RE = re.compile(r"[+-]?(\d+(/\d+)?|\d+\.\d*|\.\d+)")


class DomainError(ValueError):
    """Raised when an argument lies outside the domain of an operation."""


def to_value(x) -> Fraction:
    """Convert ``x`` to an exact :class:`Fraction`.

    Strings may be a signed integer, ``"p/q"`` with ``q > 0`` or a finite
    decimal such as ``"2.5"``.  Floats are read through their shortest repr,
    so ``2.5`` becomes ``5/2`` and ``0.1`` becomes ``1/10``.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise DomainError(f"not a value: {x!r}")
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, float):
        if x != x or x in (float("inf"), float("-inf")):
            raise DomainError(f"not a finite value: {x!r}")
        return Fraction(repr(x))
    if isinstance(x, str):
        s = x.strip()
        if not _VALUE_RE.fullmatch(s):
            raise DomainError(f"malformed value string: {x!r}")
        try:
            return Fraction(s)
        except ZeroDivisionError:
            raise DomainError(f"zero denominator: {x!r}") from None
    raise DomainError(f"not a value: {x!r}")


def format_value(x: Fraction) -> str:
    """Canonical string for a value: ``"7"``, ``"-5/2"``."""
    return str(x)


def members(mask: int) -> list[int]:
    """Item indices of ``mask`` in ascending order."""
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def submasks(mask: int):
    """All subsets of ``mask`` in ascending numeric order."""
    idx = members(mask)
    return sorted(_spread(idx))


def _spread(idx: Sequence[int]) -> list[int]:
    # sub-mask j of a k-item set -> the corresponding full mask
    out = [0] * (1 << len(idx))
    for j in range(1, len(out)):
        low = (j & -j).bit_length() - 1
        out[j] = out[j & (j - 1)] | (1 << idx[low])
    return out


@dataclass(frozen=True)
class GroundSet:
    """An ordered, finite set of named items."""

    items: tuple[str, ...]

    def __post_init__(self):
        items = tuple(self.items)
        object.__setattr__(self, "items", items)
        if len(items) > MAX_ITEMS:
            raise DomainError(f"at most {MAX_ITEMS} items supported, got {len(items)}")
        for name in items:
            if not isinstance(name, str) or not name or "," in name:
                raise DomainError(f"invalid item name: {name!r}")
        if len(set(items)) != len(items):
            raise DomainError("item names must be distinct")

    @property
    def n(self) -> int:
        return len(self.items)

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    @cached_property
    def _index(self) -> dict[str, int]:
        return {name: i for i, name in enumerate(self.items)}

    def index(self, item: ItemLike) -> int:
        if isinstance(item, str):
            try:
                return self._index[item]
            except KeyError:
                raise DomainError(f"unknown item {item!r}") from None
        if isinstance(item, int) and not isinstance(item, bool) and 0 <= item < self.n:
            return item
        raise DomainError(f"item index out of range: {item!r}")

    def mask(self, bundle: BundleLike) -> int:
        """Bitmask of ``bundle``: an int mask or an iterable of names/indices."""
        if isinstance(bundle, int) and not isinstance(bundle, bool):
            if bundle < 0 or bundle >> self.n:
                raise DomainError(f"bundle {bundle} not a subset of the ground set")
            return bundle
        if isinstance(bundle, str):
            # a bare string is one item name, not an iterable of characters
            return 1 << self.index(bundle)
        m = 0
        for item in bundle:
            m |= 1 << self.index(item)
        return m

    def names(self, mask: int) -> tuple[str, ...]:
        return tuple(self.items[i] for i in members(mask))

    def key(self, mask: int) -> str:
        """File key of a bundle: names joined by commas in ground-set order."""
        return ",".join(self.names(mask))

    def fmt(self, mask: int) -> str:
        return "{" + ",".join(self.names(mask)) + "}"

    def sub(self, mask: int) -> GroundSet:
        return GroundSet(self.names(mask))


@dataclass(frozen=True, eq=False)
class Valuation:
    """A total map from the ``2**n`` bundles of ``ground`` to exact values.

    ``table[m]`` is the value of the bundle with bitmask ``m``.
    """

    ground: GroundSet
    table: tuple[Fraction, ...]

    def __post_init__(self):
        table = tuple(to_value(x) for x in self.table)
        if len(table) != 1 << self.ground.n:
            raise DomainError(
                f"table needs {1 << self.ground.n} entries, got {len(table)}"
            )
        object.__setattr__(self, "table", table)

    @classmethod
    def from_function(cls, ground: GroundSet | Sequence[str], fn: Callable[[int], object]) -> Valuation:
        ground = ground if isinstance(ground, GroundSet) else GroundSet(tuple(ground))
        return cls(ground, tuple(fn(m) for m in range(1 << ground.n)))

    @classmethod
    def from_mapping(cls, ground: GroundSet | Sequence[str], values: Mapping) -> Valuation:
        """Build from a mapping whose keys are anything :meth:`GroundSet.mask` accepts.

        String keys are read as comma-joined item names (``""`` is the empty bundle).
        """
        ground = ground if isinstance(ground, GroundSet) else GroundSet(tuple(ground))
        table: list = [None] * (1 << ground.n)
        for k, val in values.items():
            if isinstance(k, str):
                k = [s for s in k.split(",")] if k else []
            m = ground.mask(k)
            if table[m] is not None:
                raise DomainError(f"duplicate bundle {ground.fmt(m)}")
            table[m] = val
        missing = [ground.fmt(m) for m, x in enumerate(table) if x is None]
        if missing:
            raise DomainError(f"missing bundles: {', '.join(missing[:5])}")
        return cls(ground, tuple(table))

    @property
    def n(self) -> int:
        return self.ground.n

    def __call__(self, bundle: BundleLike) -> Fraction:
        return self.table[self.ground.mask(bundle)]

    def __eq__(self, other):
        if not isinstance(other, Valuation):
            return NotImplemented
        return self.ground == other.ground and self.table == other.table

    def __hash__(self):
        return hash((self.ground, self.table))

    def __repr__(self):
        body = ", ".join(
            f"{self.ground.key(m) or '∅'}: {x}" for m, x in enumerate(self.table[:16])
        )
        more = ", ..." if len(self.table) > 16 else ""
        return f"Valuation({list(self.ground.items)}, {{{body}{more}}})"

    def __add__(self, other: Valuation | PriceVector) -> Valuation:
        other = _as_valuation(other)
        _same_ground(self, other)
        return Valuation(self.ground, tuple(a + b for a, b in zip(self.table, other.table)))

    def __sub__(self, other: Valuation | PriceVector) -> Valuation:
        other = _as_valuation(other)
        _same_ground(self, other)
        return Valuation(self.ground, tuple(a - b for a, b in zip(self.table, other.table)))

    def __neg__(self) -> Valuation:
        return Valuation(self.ground, tuple(-a for a in self.table))

    @cached_property
    def scaled(self) -> tuple[list[int], int]:
        """Integer table and the positive scale it was multiplied by.

        Comparisons of sums and differences are invariant under a positive
        scale, which lets the checkers run on plain ints.
        """
        d = 1
        for x in self.table:
            d = lcm(d, x.denominator)
        return [x.numerator * (d // x.denominator) for x in self.table], d


@dataclass(frozen=True)
class PriceVector:
    """One price per item; induces the additive valuation ``p(A) = sum of p_x``."""

    ground: GroundSet
    prices: tuple[Fraction, ...] = field(default=())

    def __post_init__(self):
        prices = tuple(to_value(x) for x in self.prices)
        if len(prices) != self.ground.n:
            raise DomainError(f"need {self.ground.n} prices, got {len(prices)}")
        object.__setattr__(self, "prices", prices)

    @classmethod
    def from_mapping(cls, ground: GroundSet, prices: Mapping[ItemLike, object]) -> PriceVector:
        out: list = [None] * ground.n
        for item, p in prices.items():
            i = ground.index(item)
            if out[i] is not None:
                raise DomainError(f"duplicate price for {ground.items[i]!r}")
            out[i] = p
        missing = [ground.items[i] for i, p in enumerate(out) if p is None]
        if missing:
            raise DomainError(f"missing prices for: {', '.join(missing)}")
        return cls(ground, tuple(out))

    @classmethod
    def zeros(cls, ground: GroundSet) -> PriceVector:
        return cls(ground, (0,) * ground.n)

    def __getitem__(self, item: ItemLike) -> Fraction:
        return self.prices[self.ground.index(item)]

    def total(self, bundle: BundleLike) -> Fraction:
        m = self.ground.mask(bundle)
        return sum((self.prices[i] for i in members(m)), Fraction(0))

    def with_price(self, item: ItemLike, price) -> PriceVector:
        i = self.ground.index(item)
        ps = list(self.prices)
        ps[i] = price
        return PriceVector(self.ground, tuple(ps))

    def as_valuation(self) -> Valuation:
        n = self.ground.n
        table = [Fraction(0)] * (1 << n)
        for m in range(1, 1 << n):
            low = (m & -m).bit_length() - 1
            table[m] = table[m & (m - 1)] + self.prices[low]
        return Valuation(self.ground, tuple(table))


def _as_valuation(x: Valuation | PriceVector) -> Valuation:
    return x.as_valuation() if isinstance(x, PriceVector) else x


def _same_ground(u, v) -> None:
    if u.ground != v.ground:
        raise DomainError(
            f"ground sets differ: {list(u.ground.items)} vs {list(v.ground.items)}"
        )


# ---------------------------------------------------------------------------
# operations

def eval_bundle(v: Valuation, bundle: BundleLike) -> Fraction:
    return v(bundle)


def _embedding(ground: GroundSet, mask: int) -> list[int]:
    return _spread(members(mask))


def marginal(v: Valuation, conditioning: BundleLike) -> Valuation:
    """The marginal valuation ``B -> v(S | B) - v(S)`` on the items outside ``S``."""
    s = v.ground.mask(conditioning)
    rest = v.ground.full & ~s
    base = v.table[s]
    emb = _embedding(v.ground, rest)
    return Valuation(v.ground.sub(rest), tuple(v.table[s | m] - base for m in emb))


def restrict(v: Valuation, subset: BundleLike) -> Valuation:
    """``v`` restricted to the subsets of ``subset``."""
    x = v.ground.mask(subset)
    emb = _embedding(v.ground, x)
    return Valuation(v.ground.sub(x), tuple(v.table[m] for m in emb))


def complementarity(v: Valuation, given: BundleLike, x: ItemLike, y: ItemLike) -> Fraction:
    """``v_A(x+y) - v_A(x) - v_A(y)``; positive for complements."""
    a = v.ground.mask(given)
    i, j = v.ground.index(x), v.ground.index(y)
    bi, bj = 1 << i, 1 << j
    if i == j:
        raise DomainError("complementarity needs two distinct items")
    if a & (bi | bj):
        raise DomainError("items must lie outside the conditioning bundle")
    t = v.table
    return t[a | bi | bj] - t[a | bi] - t[a | bj] + t[a]


def utility(v: Valuation, prices: PriceVector) -> Valuation:
    """``A -> v(A) - p(A)``."""
    _same_ground(v, prices)
    return v - prices


def or_combine(u: Valuation, v: Valuation) -> Valuation:
    """OR (max-convolution): ``S -> max over T subset of S of u(T) + v(S - T)``.

    Plain subset-of-subset enumeration, ``3**n`` work in total.
    """
    _same_ground(u, v)
    tu, tv = u.table, v.table
    out = []
    for s in range(1 << u.n):
        best = tu[0] + tv[s]
        t = s
        while t:
            c = tu[t] + tv[s ^ t]
            if c > best:
                best = c
            t = (t - 1) & s
        out.append(best)
    return Valuation(u.ground, tuple(out))


def xor_combine(u: Valuation, v: Valuation) -> Valuation:
    """XOR: pointwise maximum."""
    _same_ground(u, v)
    return Valuation(u.ground, tuple(max(a, b) for a, b in zip(u.table, v.table)))


def direct_sum(parts: Sequence[Valuation]) -> Valuation:
    """Sum of valuations on pairwise-disjoint ground sets.

    The result's items are the parts' items concatenated in the given order.
    """
    if not parts:
        raise DomainError("direct_sum needs at least one part")
    items: list[str] = []
    for p in parts:
        clash = set(items) & set(p.ground.items)
        if clash:
            raise DomainError(f"ground sets overlap on {sorted(clash)}")
        items.extend(p.ground.items)
    ground = GroundSet(tuple(items))
    table = [Fraction(0)] * (1 << ground.n)
    for m in range(1 << ground.n):
        total = Fraction(0)
        shift = 0
        for p in parts:
            total += p.table[(m >> shift) & p.ground.full]
            shift += p.n
        table[m] = total
    return Valuation(ground, tuple(table))


def add_dummies(v: Valuation, names: Sequence[str]) -> Valuation:
    """Extend ``v`` by items that never change the value: ``v'(A) = v(A ∩ Ω)``.

    The new items are appended after the existing ones.
    """
    names = list(names)
    ground = GroundSet(v.ground.items + tuple(names))
    full = v.ground.full
    return Valuation(ground, tuple(v.table[m & full] for m in range(1 << ground.n)))
