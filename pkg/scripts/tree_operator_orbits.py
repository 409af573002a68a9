"""Iterate the zeta-conjugated Speyer operator on planted trees.

Every tree with k crucial vertices reaches a tree with a single crucial
vertex after k - 1 steps; this prints, per n, how many chains end at each
terminal root degree, plus a few sample chains in parentheses notation.
"""

import argparse
from collections import Counter

from catalan_zeta.trees import crucial_vertices, enumerate_trees, tree_operator


def chain(tree):
    out = [tree]
    while len(crucial_vertices(out[-1])) >= 2:
        out.append(tree_operator(out[-1]))
    return out


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--n", type=int, default=5)
    parser.add_argument("--samples", type=int, default=5)
    args = parser.parse_args()

    ends = Counter()
    samples = []
    for tree in enumerate_trees(args.n):
        c = chain(tree)
        assert len(c) == max(len(crucial_vertices(tree)), 1)
        ends[c[-1].root_degree] += 1
        if len(c) > 2 and len(samples) < args.samples:
            samples.append(c)

    print(f"trees on {args.n + 1} vertices, terminal root degree -> count")
    for degree in sorted(ends):
        print(f"  {degree:>2}: {ends[degree]}")
    for c in samples:
        print("  " + " -> ".join(t.to_parens() for t in c))


if __name__ == "__main__":
    main()
