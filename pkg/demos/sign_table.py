"""Where the A and B conventions agree on the sign of the conjugation map.

Run: python demos/sign_table.py
"""
from realdisc.report import table_text
from realdisc.sign_calculus import CountMode, Sign, ab_table_entry, maslov_from_dimension, table_cells

# A rigid disc with k boundary points needs a specific Maslov index.
for n in range(4):
    print(f"dim L = {n}:", [maslov_from_dimension(n, k) for k in range(6)])
# None means no even Maslov index works, so that (n, k) never gives a count.

# The comparison sign only depends on n and k mod 4, giving a 4x8 table.
print()
print(table_text(table_cells()), end="")

# X cells are exactly the entries where the rigidity equation has odd Maslov index.
xs = [(n, k) for n in range(4) for k in range(4) if ab_table_entry(n, k, CountMode.A) is Sign.UNDEFINED]
print("\nundefined cells (dim L, k):", xs)

# Any representative reduces the same way, e.g. dim L = 7 and k = 9 behave like (3, 1).
print("(7, 9) in A:", ab_table_entry(3, 1, CountMode.A, n=7, k=9))
