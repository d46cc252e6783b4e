"""Walrasian equilibrium checks on a two-agent additive economy."""

from ultraval import Allocation, PriceVector, catalog, check_walrasian, optimal_allocation, welfare

e = catalog("ECON_ADDITIVE2")
a = Allocation.from_mapping(e, {"agent0": ["a"], "agent1": ["b"]})
best, allocs = optimal_allocation(e)
print(f"welfare {welfare(e, a)}, optimum {best}")

for prices in ((3, 2), (6, 2)):
    p = PriceVector(e.ground, prices)
    for mode in ("full", "local"):
        vd = check_walrasian(e, a, p, mode)
        print(f"prices {prices} {mode:>5}: {'equilibrium' if vd.holds else 'not an equilibrium'}")
        for f in vd.failures:
            print(f"    {e.names[f.agent]} prefers {e.ground.fmt(f.bundle)}: "
                  f"{f.alt_utility} > {f.own_utility} (condition {f.condition})")
