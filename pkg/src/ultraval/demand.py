"""Maximisation: greedy and brute-force optimisers, preferred bundles,
local optimality certificates and the constructive greedy-failure witness."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import BundleLike, PriceVector, Valuation, members, utility
from .properties import PropertyId, Verdict, Witness, check


@dataclass(frozen=True)
class GreedyTrace:
    chain: tuple[int, ...]
    values: tuple[Fraction, ...]
    best_k: int
    queries: int

    @property
    def best(self) -> int:
        return self.chain[self.best_k]

    @property
    def best_value(self) -> Fraction:
        return self.values[self.best_k]


@dataclass(frozen=True)
class PreferredSet:
    k: int | None  # None: the unrestricted problem
    bundles: tuple[int, ...]
    value: Fraction

    def __contains__(self, bundle: int) -> bool:
        return bundle in self.bundles


def _greedy(v: Valuation, shortened: bool) -> GreedyTrace:
    t = v.table
    n = v.n
    current = 0
    chain, values = [0], [t[0]]
    queries = 0
    for _ in range(n):
        best_bit, best_gain = 0, None
        for i in members(v.ground.full & ~current):
            gain = t[current | 1 << i] - t[current]
            queries += 1
            if best_gain is None or gain > best_gain:
                best_bit, best_gain = 1 << i, gain
        nxt = current | best_bit
        if shortened and t[nxt] <= t[current]:
            break
        current = nxt
        chain.append(current)
        values.append(t[current])
    top = max(values)
    return GreedyTrace(tuple(chain), tuple(values), values.index(top), queries)


def greedy_maximize(v: Valuation) -> GreedyTrace:
    """Grow ``A_0 = ∅`` one item at a time, always adding the item with the
    largest marginal value (lowest index on ties).

    Returns the whole chain ``A_0 .. A_n``; ``best_k`` is the smallest k
    with maximal ``v(A_k)``.  Exactly ``n(n+1)/2`` marginal values are
    evaluated.  For an ultra valuation every ``A_k`` is k-preferred.
    """
    return _greedy(v, shortened=False)


def shortened_greedy(v: Valuation) -> GreedyTrace:
    """Greedy that stops as soon as the next step would not increase the value.

    Only guaranteed to find a preferred bundle for substitutes valuations.
    """
    return _greedy(v, shortened=True)


def brute_force_maximize(v: Valuation, k: int | None = None) -> PreferredSet:
    t = v.table
    cands = range(1 << v.n) if k is None else [m for m in range(1 << v.n) if m.bit_count() == k]
    if not cands:
        raise ValueError(f"no bundles of size {k} among {v.n} items")
    top = max(t[m] for m in cands)
    return PreferredSet(k, tuple(m for m in cands if t[m] == top), top)


def demand_set(v: Valuation, p: PriceVector, k: int | None = None) -> PreferredSet:
    """Preferred bundles (of size ``k`` if given) under item prices ``p``."""
    return brute_force_maximize(utility(v, p), k)


def certify_k_preferred(v: Valuation, bundle: BundleLike) -> Verdict:
    """Check ``v(A) >= v(A - x + y)`` for every swap of one item in for one out.

    For an ultra ``v`` this local condition means A is |A|-preferred.  On
    failure the witness is the best swap (first in (x, y) order on ties).
    """
    a = v.ground.mask(bundle)
    t = v.table
    best = None
    for x in members(a):
        for y in members(v.ground.full & ~a):
            c = a ^ (1 << x) ^ (1 << y)
            if t[c] > t[a] and (best is None or t[c] > best[2]):
                best = (x, y, t[c])
    if best is None:
        return Verdict("k_preferred", True)
    x, y, val = best
    w = Witness({"A": a}, {"x": x, "y": y}, t[a], val, ">=")
    return Verdict("k_preferred", False, w)


def certify_preferred(v: Valuation, bundle: BundleLike) -> Verdict:
    """Check the three local conditions: no improving swap, no better superset,
    no better subset.  For an ultra ``v`` together they mean A is preferred.

    The witness records the violated condition (``values["condition"]``) and
    the best bundle ``C`` under it.
    """
    a = v.ground.mask(bundle)
    swap = certify_k_preferred(v, a)
    if not swap.holds:
        w = swap.witness
        c = a ^ (1 << w.items["x"]) ^ (1 << w.items["y"])
        return Verdict(
            "preferred", False,
            Witness({"A": a, "C": c}, w.items, w.lhs, w.rhs, ">=", {"condition": Fraction(1)}),
        )
    t = v.table
    rest = v.ground.full & ~a
    for cond, cands in ((2, [a | s for s in _subsets(rest)]), (3, _subsets(a))):
        c = max(cands, key=lambda m: (t[m], -m))
        if t[c] > t[a]:
            return Verdict(
                "preferred", False,
                Witness({"A": a, "C": c}, {}, t[a], t[c], ">=", {"condition": Fraction(cond)}),
            )
    return Verdict("preferred", True)


def _subsets(mask: int) -> list[int]:
    out, s = [], 0
    while True:
        out.append(s)
        if s == mask:
            return out
        s = (s - mask) & mask


@dataclass(frozen=True)
class FailureWitness:
    """Prices under which greedy extension fails.

    ``bundle`` (``A``) is k-preferred under ``utility(v, prices)`` while no
    ``A + w`` is (k+1)-preferred: ``extensions`` maps each outside item to
    the utility of ``A + w``, all below ``slice_max``, the best value in the
    (k+1)-slice.
    """

    prices: PriceVector
    k: int
    bundle: int
    base: int
    triple: tuple[int, int, int]  # (x, y, z): c(x, y) is the unique largest
    extensions: dict[int, Fraction]
    slice_max: Fraction


def greedy_failure_witness(v: Valuation, force: bool = False) -> FailureWitness | None:
    """For a valuation that is not ultra, build prices at which the greedy
    step from a k-preferred bundle cannot reach a (k+1)-preferred one.

    Starts from a conditioning bundle S and items x, y, z whose
    complementarity c_S(x, y) strictly exceeds both others.  Items of S get
    price -M, other outside items +M, and x, y, z are priced at their
    marginal values given S; then A = S + z is k-preferred with k = |S| + 1
    and the only (k+1)-preferred bundle is S + x + y.  Both facts are
    re-verified by brute force before returning.  Returns ``None`` for an
    ultra valuation.
    """
    verdict = check(v, PropertyId.ULTRA, force)
    if verdict.holds:
        return None
    w = verdict.witness
    s = w.bundles["A"]
    x, y, z = w.items["x"], w.items["y"], w.items["z"]
    cxy, cyz = w.values["c(x,y)"], w.values["c(y,z)"]
    # the Ultra witness has c(x,y) > c(x,z) and c(y,z) != c(x,y): the unique
    # largest complementarity is c(x,y) or c(y,z)
    if cyz > cxy:
        x, y, z = y, z, x
    t = v.table
    spread = max(t) - min(t)
    big = 1 + 4 * spread
    prices = []
    for i in range(v.n):
        if s >> i & 1:
            prices.append(-big)
        elif i in (x, y, z):
            prices.append(t[s | 1 << i] - t[s])
        else:
            prices.append(big)
    p = PriceVector(v.ground, tuple(prices))
    k = s.bit_count() + 1
    a = s | 1 << z
    u = utility(v, p).table

    k_pref = demand_set(v, p, k)
    next_pref = demand_set(v, p, k + 1)
    ext = {i: u[a | 1 << i] for i in members(v.ground.full & ~a)}
    if a not in k_pref or any(a | 1 << i in next_pref for i in ext):
        raise RuntimeError("greedy-failure construction did not verify; price bound too small")
    return FailureWitness(p, k, a, s, (x, y, z), ext, next_pref.value)
