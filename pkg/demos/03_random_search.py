"""
A small random search over a group ring, with replay and deduplication.

Run with ``python3 demos/03_random_search.py``.
"""

from groupcodes.distance import Budget
from groupcodes.search import BKLCTable, SearchConfig, dedup_by_unit, random_search, replay

## Target distances for a few (n, k) at length 21 (a hand-made table)
table = BKLCTable({(21, 12): 5, (21, 9): 8, (21, 11): 6, (21, 10): 7})

cfg = SearchConfig("g1:7,3,2", iterations=300, seed=1, budget=Budget(seconds=5, work=None))
hits = list(random_search(cfg, table))
print(len(hits), "candidates meet the table")

unique = dedup_by_unit(hits)
print(len(unique), "after removing codes that coincide")
for r in unique[:5]:
    print(f"  {r.side:4s} [{r.n},{r.k},{r.upper}] iteration {r.iteration}: {r.psi}")

## Any record regenerates from (seed, iteration)
if unique:
    assert replay(unique[0]).coeffs.to_str() == unique[0].psi
