"""Valuation families, random tables and the catalog of named instances."""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Sequence

from .core import DomainError, GroundSet, Valuation, or_combine, to_value, xor_combine
from .economy import Economy

# Recorded next to every emitted random corpus so it can be regenerated.
RANDOM_TABLE_ALGORITHM = "python-random-mt19937:randint-per-bundle-ascending"


def default_items(n: int) -> tuple[str, ...]:
    """``a, b, c, ...`` for small n, ``i0, i1, ...`` beyond 26 letters."""
    if n <= 26:
        return tuple("abcdefghijklmnopqrstuvwxyz"[:n])
    return tuple(f"i{k}" for k in range(n))


def _ground(n: int, items) -> GroundSet:
    items = default_items(n) if items is None else tuple(items)
    if len(items) != n:
        raise DomainError(f"expected {n} item names, got {len(items)}")
    return GroundSet(items)


@dataclass(frozen=True)
class ConcaveSchedule:
    """Values ``f(0), ..., f(m)``, strictly increasing and concave."""

    f: tuple[Fraction, ...]

    def __post_init__(self):
        f = tuple(to_value(x) for x in self.f)
        object.__setattr__(self, "f", f)
        if not f:
            raise DomainError("schedule needs at least f(0)")
        for k in range(len(f) - 1):
            if not f[k + 1] > f[k]:
                raise DomainError(f"schedule not strictly increasing at {k}")
        for k in range(1, len(f) - 1):
            if 2 * f[k] < f[k - 1] + f[k + 1]:
                raise DomainError(f"schedule not concave at {k}")

    def __len__(self):
        return len(self.f)

    def __getitem__(self, k: int) -> Fraction:
        return self.f[k]


def symmetric(n: int, slice_values: Sequence, items=None) -> Valuation:
    """``v(A) = slice_values[|A|]``."""
    if len(slice_values) != n + 1:
        raise DomainError(f"need {n + 1} slice values, got {len(slice_values)}")
    vals = [to_value(x) for x in slice_values]
    return Valuation.from_function(_ground(n, items), lambda m: vals[m.bit_count()])


def extended_symmetric(per_item: Sequence, slice_values: Sequence, items=None) -> Valuation:
    """``v(A) = sum of per_item[x] over A + s(|A|)`` with ``s(1) = 0``.

    ``slice_values`` lists ``s(0), s(2), s(3), ..., s(n)``: the size-one
    slice is pinned to zero, so it is not a parameter.
    """
    n = len(per_item)
    if len(slice_values) != max(n, 1):
        raise DomainError(f"need {max(n, 1)} slice values (s0, s2..sn), got {len(slice_values)}")
    own = [to_value(x) for x in per_item]
    s = [to_value(slice_values[0])]
    if n >= 1:
        s.append(Fraction(0))
        s.extend(to_value(x) for x in slice_values[1:])

    def value(m: int) -> Fraction:
        total = s[m.bit_count()]
        for i in range(n):
            if m >> i & 1:
                total += own[i]
        return total

    return Valuation.from_function(_ground(n, items), value)


def left_right(left: Sequence[str], right: Sequence[str], f) -> Valuation:
    """``v(X) = f(min(|X ∩ L|, |X ∩ R|))``: the value of matched pairs.

    Items are ordered ``left`` then ``right``.
    """
    left, right = list(left), list(right)
    if not left or not right:
        raise DomainError("both sides need at least one item")
    if set(left) & set(right):
        raise DomainError("left and right items overlap")
    f = f if isinstance(f, ConcaveSchedule) else ConcaveSchedule(tuple(f))
    pairs_max = min(len(left), len(right))
    if len(f) < pairs_max + 1:
        raise DomainError(f"schedule needs at least {pairs_max + 1} values")
    lmask = (1 << len(left)) - 1
    ground = GroundSet(tuple(left + right))
    return Valuation.from_function(
        ground,
        lambda m: f[min((m & lmask).bit_count(), (m >> len(left)).bit_count())],
    )


def random_table(n: int, seed: int, value_range: tuple[int, int] = (-10, 10), items=None) -> Valuation:
    """Uniform integer table from ``random.Random(seed)``, one draw per bundle
    in ascending bitmask order."""
    lo, hi = value_range
    if lo > hi:
        raise DomainError("empty value range")
    rng = random.Random(seed)
    ground = _ground(n, items)
    return Valuation(ground, tuple(rng.randint(lo, hi) for _ in range(1 << n)))


class CatalogName(str, Enum):
    V_PAPER = "V_PAPER"
    U_SYM = "U_SYM"
    W_OR = "W_OR"
    W_XOR = "W_XOR"
    V_AND2 = "V_AND2"
    V_LR_DEFAULT = "V_LR_DEFAULT"
    ECON_ADDITIVE2 = "ECON_ADDITIVE2"

    def __str__(self):
        return self.value


_XYZ = ("x", "y", "z")


def _v_paper() -> Valuation:
    return Valuation.from_mapping(
        _XYZ,
        {"": 0, "x": 5, "y": 10, "z": 15, "x,y": 25, "x,z": 20, "y,z": 35, "x,y,z": 35},
    )


def _u_sym() -> Valuation:
    return symmetric(3, [0, 6, 12, 12], items=_XYZ)


def _econ_additive2() -> Economy:
    ground = ("a", "b")
    agent0 = Valuation.from_mapping(ground, {"": 0, "a": 5, "b": 1, "a,b": 6})
    agent1 = Valuation.from_mapping(ground, {"": 0, "a": 2, "b": 3, "a,b": 5})
    return Economy.of([agent0, agent1], ["agent0", "agent1"])


def catalog(name: CatalogName | str) -> Valuation | Economy:
    """The named instance.

    ==============  ==========================================================
    V_PAPER         x,y,z table 0,5,10,15,25,20,35,35 (ultra, not submodular)
    U_SYM           symmetric on x,y,z with slices 0,6,12,12
    W_OR            U_SYM OR V_PAPER, computed on each call
    W_XOR           U_SYM XOR V_PAPER, computed on each call
    V_AND2          a,b with only the pair worth 10
    V_LR_DEFAULT    left {a,b}, right {c,d}, pair values f = 0,10,15
    ECON_ADDITIVE2  two additive agents on a,b: (5,1) and (2,3)
    ==============  ==========================================================
    """
    try:
        name = CatalogName(name)
    except ValueError:
        raise DomainError(f"unknown catalog name {name!r}") from None
    if name is CatalogName.V_PAPER:
        return _v_paper()
    if name is CatalogName.U_SYM:
        return _u_sym()
    if name is CatalogName.W_OR:
        return or_combine(_u_sym(), _v_paper())
    if name is CatalogName.W_XOR:
        return xor_combine(_u_sym(), _v_paper())
    if name is CatalogName.V_AND2:
        return Valuation.from_mapping(("a", "b"), {"": 0, "a": 0, "b": 0, "a,b": 10})
    if name is CatalogName.V_LR_DEFAULT:
        return left_right(["a", "b"], ["c", "d"], (0, 10, 15))
    return _econ_additive2()
