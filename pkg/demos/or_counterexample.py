"""Two ultra valuations whose OR-combination is not ultra."""

from ultraval import catalog, check, complementarity, or_combine

u, v = catalog("U_SYM"), catalog("V_PAPER")
w = or_combine(u, v)
for name, f in (("u", u), ("v", v), ("u OR v", w)):
    print(f"{name:>7}: ultra={check(f, 'ultra').holds}")

print("\ncomplementarities of u OR v at the empty set:")
for x, y in (("x", "y"), ("x", "z"), ("y", "z")):
    print(f"  c({x},{y}) = {complementarity(w, [], x, y)}")

print("\nfirst violation found by the checker:")
print(" ", check(w, "ultra").witness.describe(w.ground))
