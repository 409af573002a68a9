"""Print the c(p, q, n) tables as grids, rows p (returns), columns q (rises).

    python scripts/tutte_tables.py --max-n 7
"""

import argparse

from catalan_zeta.trees import stat_table


def grid(table):
    n = table.n
    header = "p\\q " + " ".join(f"{q:>5}" for q in range(1, n + 1))
    rows = [header]
    for p in range(1, n + 1):
        rows.append(f"{p:>3} " + " ".join(f"{table[p, q]:>5}" for q in range(1, n + 1)))
    return "\n".join(rows)


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--max-n", type=int, default=6)
    args = parser.parse_args()
    for n in range(1, args.max_n + 1):
        table = stat_table(n)
        print(f"n = {n}   total = {table.total()}")
        print(grid(table))
        print(table.polynomial())
        print()


if __name__ == "__main__":
    main()
