"""Classify the catalog valuations against every implemented property."""

from ultraval import CatalogName, Economy, catalog, classify

for name in CatalogName:
    v = catalog(name)
    if isinstance(v, Economy):
        continue
    holds = [prop.value for prop, verdict in classify(v).items() if verdict.holds]
    print(f"{name.value:>10} on {v.n} items: {', '.join(holds) or 'nothing'}")
