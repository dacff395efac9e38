#!/usr/bin/env python3
"""Cycle-length spectra and consecutive-run statistics on named graphs.

Usage:
    python demos/01_spectra_and_runs.py
"""

from consec_cycles import (
    complete,
    complete_bipartite,
    complete_minus_matching,
    cycle_blowup,
    cycle_spectrum,
    petersen,
    run_stats,
)


def show(name, g):
    spec = cycle_spectrum(g)
    stats = run_stats(spec)
    print(f"{name:<22} n={g.n:<3} lengths={list(spec.lengths)}")
    print(f"{'':<22} longest consecutive run {stats.max_run} {list(stats.run)}, "
          f"longest consecutive-odd run {stats.max_odd_run} {list(stats.odd_run)}")


print("=" * 72)
print("Complete graphs contain every length from 3 to n:")
for n in range(4, 9):
    show(f"K_{n}", complete(n))

print()
print("Complete bipartite graphs only realize even lengths:")
show("K_{3,3}", complete_bipartite(3, 3))
show("K_{3,4}", complete_bipartite(3, 4))

print()
print("The Petersen graph is the classic boundary case: it has cycles of")
print("lengths 5, 6, 8 and 9 only, so no three consecutive lengths and no")
print("two consecutive odd lengths.")
show("Petersen", petersen())

print()
print("Removing a matching from a complete graph keeps the full spectrum")
print("while lowering the minimum degree by one:")
show("K_8 minus matching", complete_minus_matching(8, 4))

print()
print("Blow-ups of odd cycles are triangle-free but far from bipartite:")
show("C_5 blow-up (x2)", cycle_blowup(5, 2))

print()
print("One witness cycle per length, straight from the spectrum:")
spec = cycle_spectrum(petersen())
for length, witness in sorted(spec.witnesses.items()):
    print(f"  length {length}: {list(witness)}")
