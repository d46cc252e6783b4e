"""Greedy maximization is optimal for ultra valuations and can be fooled otherwise."""

from ultraval import brute_force_maximize, catalog, greedy_failure_witness, greedy_maximize, utility

v = catalog("V_PAPER")
tr = greedy_maximize(v)
print("greedy chain:", [v.ground.fmt(a) for a in tr.chain])
print("values:      ", [str(x) for x in tr.values])
print(f"best {v.ground.fmt(tr.best)} = {tr.best_value} after {tr.queries} queries")
print("brute force: ", brute_force_maximize(v).value)

w = catalog("W_OR")
fw = greedy_failure_witness(w)
u = utility(w, fw.prices)
print("\nW_OR is not ultra; at prices", {w.ground.items[i]: str(p) for i, p in enumerate(fw.prices.prices)})
print(f"  {w.ground.fmt(fw.bundle)} is a best {fw.k}-bundle with utility {u.table[fw.bundle]}")
print("  its extensions reach", sorted(str(x) for x in fw.extensions.values()),
      f"but the best {fw.k + 1}-bundle is worth {fw.slice_max}")
tr = greedy_maximize(u)
step = tr.chain[fw.k + 1]
print(f"  greedy's {fw.k + 1}-step {w.ground.fmt(step)} has utility {u.table[step]}, "
      f"short of {brute_force_maximize(u, fw.k + 1).value}")
