#!/usr/bin/env python3
"""Chromatic spectra and feasible sets of small mixed hypergraphs.

A C-edge wants two vertices sharing a class, a D-edge wants two vertices in
different classes, and a bi-edge wants both (for three vertices: the edge
meets exactly two classes).  The spectrum counts strict colorings, as
unordered partitions, per class count.
"""

from bihyper import build_bi_hypergraph, build_hypergraph, enumerate_strict_colorings


def show(name, h):
    report = enumerate_strict_colorings(h)
    feasible = "{" + ", ".join(map(str, report.feasible)) + "}"
    print(f"{name}: spectrum {report.spectrum.counts or '()'}, feasible {feasible}")
    for p in report.colorings[:6]:
        print(f"    {p}")
    if len(report.colorings) > 6:
        print(f"    ... {len(report.colorings) - 6} more")
    print()


def main():
    print("Edgeless hypergraphs admit every partition, so their spectra are the")
    print("rows of partition counts by class count:\n")
    for v in (3, 4, 5):
        show(f"edgeless on {v}", build_hypergraph(v))

    show("one bi-edge on 3", build_bi_hypergraph(3, [[0, 1, 2]]))
    show("one D-edge on 3", build_hypergraph(3, [], [[0, 1, 2]]))
    show("one C-edge on 3", build_hypergraph(3, [[0, 1, 2]], []))

    print("A C-edge demanding a repeat can clash with D-pairs forbidding every")
    print("repeat, leaving no strict coloring at all:\n")
    show("uncolorable mix", build_hypergraph(3, [[0, 1, 2]], [[0, 1], [0, 2], [1, 2]]))

    print("Graph coloring embeds as D-edges of size 2 (here: a 4-cycle):\n")
    show("4-cycle as D-pairs", build_hypergraph(4, [], [[0, 1], [1, 2], [2, 3], [0, 3]]))


if __name__ == "__main__":
    main()
