"""Naive shifted parking functions and their block partition.

Blocks group NSPFs by value multiplicities and by the color of the leftmost
copy of each value.  Red entries are printed with a trailing quote.
"""

from shiftpf.nspf import count_fixed_all, format_nspf, partition_into_blocks
from shiftpf.shifted_pf import sh_easy_v

census = partition_into_blocks(2)
for block in census.blocks:
    print(sorted(format_nspf(s) for s in block.members), "lambda =", block.label)

print()
for n in range(1, 8):
    census = partition_into_blocks(n)
    print(f"n={n}: {census.total} NSPFs in {len(census.blocks)} blocks via {census.method};",
          "counts per label match the V-expansion:", census.blocks_per_label() == sh_easy_v(n))

print("\nfixed points of one permutation per cycle type, n = 4:")
for lam, c in count_fixed_all(4).items():
    print(f"  {lam}: {c}")
