#!/usr/bin/env python3
"""Connectivity structure: bipartitions, blocks, cuts, non-separating sets.

Usage:
    python demos/02_blocks_and_connectivity.py
"""

from consec_cycles import (
    Graph,
    bipartition_or_odd_cycle,
    block_cut_tree,
    cycle,
    is_nonseparating,
    petersen,
    two_cut_witness,
    vertex_connectivity,
)

print("=" * 72)
print("Bipartiteness comes with a witness either way:")
bp = bipartition_or_odd_cycle(cycle(6))
print(f"  C_6 parts: {sorted(sorted(p) for p in bp.parts)}")
bp = bipartition_or_odd_cycle(petersen())
print(f"  Petersen shortest odd cycle: {list(bp.odd_cycle)}")

print()
print("A bowtie decomposes into two triangle blocks at its cut vertex:")
bowtie = Graph(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)])
tree = block_cut_tree(bowtie)
print(f"  blocks {[sorted(b) for b in tree.blocks]}, cut vertices {sorted(tree.cut_vertices)}")
print(f"  end-block doors: {tree.end_block_cut_vertex}")

print()
print("Exact vertex connectivity, at desk scale:")
for name, g in [("Petersen", petersen()), ("C_8", cycle(8)), ("bowtie", bowtie)]:
    rep = vertex_connectivity(g)
    print(f"  {name:<10} kappa={rep.kappa} 2-connected={rep.is_2_connected} "
          f"3-connected={rep.is_3_connected}")

print()
print("Separating pairs (the smallest one, when the graph is not 3-connected):")
print(f"  C_5: {two_cut_witness(cycle(5))}")
glued = Graph(8, [(a, b) for a in range(5) for b in range(a + 1, 5)]
              + [(a, b) for a in (0, 1, 5, 6, 7) for b in (5, 6, 7) if a < b])
print(f"  two K_5s glued on an edge: {two_cut_witness(glued)}")

print()
print("Removing the outer 5-cycle of the Petersen graph leaves the inner")
print("5-cycle connected, so the outer cycle is non-separating:")
print(f"  is_nonseparating(Petersen, outer five) = {is_nonseparating(petersen(), range(5))}")
g = Graph(6, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (2, 5)])
print(f"  a 4-cycle with two pendants, removing the cycle: "
      f"{is_nonseparating(g, [0, 1, 2, 3])} (the pendants fall apart)")
