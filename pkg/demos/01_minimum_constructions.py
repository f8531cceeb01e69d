#!/usr/bin/env python3
"""Build minimum-size bi-hypergraphs whose strict colorings hit a target set.

Walks through the size formula, the labeled construction, and the
verification that the built instance admits exactly one strict coloring
per target class count and nothing else.
"""

from bihyper import (canonical_colorings, construct, enumerate_strict_colorings,
                     is_one_realization, min_size, special_edge_labels)


def show(values):
    built = construct(values)
    h = built.hypergraph
    print(f"target {{{built.spec}}}: formula size {min_size(values)}, "
          f"variant {built.variant} on {built.vertex_count} vertices, "
          f"{len(h.c_edges)} bi-edges")
    print("  vertices:", " ".join(str(l) for l in built.labels))
    print("  special edge:", " ".join(str(l) for l in special_edge_labels(built.spec)))

    cert = is_one_realization(h, values)
    print("  one-realization:", "yes" if cert.ok else f"no ({cert.failure})")
    for witness in cert.witnesses:
        classes = " | ".join(" ".join(str(built.labels[v]) for v in cl)
                             for cl in witness.classes())
        print(f"    {witness.class_count} classes: {classes}")
    print()


def main():
    print("Every vertex is a coordinate tuple plus a bit; a triple is a bi-edge")
    print("exactly when every tuple position shows two distinct values, plus one")
    print("special edge that is monochromatic in the bit.  Grouping vertices by")
    print("their i-th coordinate is then automatically a strict coloring.\n")

    show([4, 2])
    show([3, 2])
    show([5, 3, 2])
    show([4, 3, 2])  # second count adjacent to the first: the one-vertex-smaller variant

    built = construct([4, 3, 2])
    report = enumerate_strict_colorings(built.hypergraph)
    print(f"exhaustive enumeration of the {{{built.spec}}} build explored "
          f"{report.nodes_explored} search nodes and found spectrum {report.spectrum.counts};")
    print("the colorings are exactly the coordinate groupings:",
          set(report.colorings) == set(canonical_colorings(built)))


if __name__ == "__main__":
    main()
