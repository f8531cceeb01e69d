#!/usr/bin/env python3
"""Deterministic interchange: byte-stable documents and resumable searches.

Hypergraphs serialize to versioned JSON with fixed key order and sorted
edge lists, so equal values produce identical bytes and golden files stay
stable.  Long searches checkpoint as a plain (vertices, mask) cursor.
"""

from bihyper import (build_hypergraph, certify_lower_bound, construct,
                     parse, serialize)


def main():
    built = construct([4, 3, 2])
    text = serialize(built)
    print("a labeled construction as a document:\n")
    print(text)
    again = parse(text)
    print("parse(serialize(x)) == x:", again == built)
    print("byte-stable:", serialize(again) == text)

    plain = build_hypergraph(4, c_edges=[[0, 1, 2]], d_edges=[[0, 3], [1, 2, 3]])
    print("\na plain mixed hypergraph (no labels):\n")
    print(serialize(plain))

    print("searches abort cleanly on budget and resume from a cursor:")
    partial = certify_lower_bound([3, 2], 4, budget=10)
    print(f"  after 10 instances: {partial.verdict}, cursor {partial.cursor}")
    resumed = certify_lower_bound([3, 2], 4, resume=partial.cursor)
    print(f"  resumed run: {resumed.verdict}, "
          f"examined {resumed.instances_examined} more instances")


if __name__ == "__main__":
    main()
