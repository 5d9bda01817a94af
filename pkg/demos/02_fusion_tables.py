"""Recompute the two rank-4 fusion/division tables from scratch.

Each table tracks what happens to the 24 cells of a top-dimensional star
when the form degenerates to a chamber wall (cells fuse in pairs) and then
re-enters the neighboring chamber (the fused cells split the other way).
"""

from latdel.verify import reproduce_table

for which in (1, 2):
    diff = reproduce_table(which)
    print("table %d: %s" % (which, "reproduced" if diff.ok else "MISMATCH"))
    print("  fine cell | refining cell")
    for line in diff.computed:
        print("   ", line)
    for line in diff.mismatches:
        print("  !!", line)
    print()
