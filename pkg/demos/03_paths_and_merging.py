#!/usr/bin/env python3
"""Path-length families between vertex pairs, and the merge that turns a
consecutive family plus an admissible family into a long consecutive run.

Usage:
    python demos/03_paths_and_merging.py
"""

from consec_cycles import (
    Graph,
    complete,
    cycle,
    make_family,
    max_admissible_family,
    merge_families,
    merged_length_run,
    odd_even_paths,
    xy_path_lengths,
)

print("=" * 72)
print("All simple path lengths between two vertices, with witnesses:")
lengths, witnesses = xy_path_lengths(complete(5), 0, 1)
print(f"  K_5, 0 to 1: lengths {list(lengths)}")
for l, p in sorted(witnesses.items()):
    print(f"    length {l}: {list(p)}")

print()
print("The largest admissible family (uniform step 1 or 2, shortest >= 2):")
for name, g in [("K_4", complete(4)), ("K_5", complete(5)), ("C_5", cycle(5))]:
    fam = max_admissible_family(g, 0, 1, True)
    print(f"  {name:<5} from 0 to 1 avoiding the direct edge: "
          f"{len(fam)} paths, lengths {list(fam.distinct_lengths)}, {fam.kind.value}")

print()
print("Odd and even paths coexist between any pair of a non-bipartite graph")
print("(as long as adding the pair edge keeps it 2-connected):")
pair = odd_even_paths(cycle(5), 0, 2)
print(f"  C_5, 0 to 2: odd {list(pair.odd_path)}, even {list(pair.even_path)}")

print()
print("Merge arithmetic: consecutive lengths A + admissible lengths B give a")
print("difference-1 run of size at least |A|+|B|-1, or |A|+2(|B|-1) when B")
print("steps by two:")
print(f"  A={{3,4}}, B={{5,6}}   -> {list(merged_length_run([3, 4], [5, 6]))}")
print(f"  A={{4,5}}, B={{2,4,6}} -> {list(merged_length_run([4, 5], [2, 4, 6]))}")

print()
print("The same merge on actual paths, closing into cycles:")
host = Graph(7, [(0, 3), (3, 1), (0, 4), (4, 5), (5, 1),
                 (1, 6), (6, 0), (1, 2), (2, 0)])
consec = make_family(host, 0, 1, [(0, 3, 1), (0, 4, 5, 1)])
admissible = make_family(host, 1, 0, [(1, 6, 0), (1, 2, 0)])
merged = merge_families(consec, admissible, host=host)
print(f"  cycle lengths {list(merged.lengths)} "
      f"(run of {merged.run_length}, closes cycles: {merged.closes_cycles})")
for item in merged.items:
    print(f"    {list(item)}")
