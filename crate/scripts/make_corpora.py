#!/usr/bin/env python3
"""Regenerate the graph6 corpora under data/.

connected_le7.g6  every connected graph on 1..7 vertices, up to isomorphism
connected_5.g6    every connected graph on 5 vertices
connected_le6.g6  every connected graph on 1..6 vertices
trees_le10.g6     every tree on 1..10 vertices, up to isomorphism
"""
import pathlib

import networkx as nx

DATA = pathlib.Path(__file__).resolve().parent.parent / "data"


def g6(g):
    g = nx.convert_node_labels_to_integers(g)
    return nx.to_graph6_bytes(g, header=False).decode().strip()


def write(name, graphs):
    lines = [g6(g) for g in graphs]
    (DATA / name).write_text("\n".join(lines) + "\n")
    print(f"{name}: {len(lines)} graphs")


def main():
    atlas = [g for g in nx.graph_atlas_g() if g.number_of_nodes() >= 1 and nx.is_connected(g)]
    write("connected_le7.g6", atlas)
    write("connected_le6.g6", [g for g in atlas if g.number_of_nodes() <= 6])
    write("connected_5.g6", [g for g in atlas if g.number_of_nodes() == 5])
    trees = [nx.empty_graph(1)]
    for n in range(2, 11):
        trees.extend(nx.nonisomorphic_trees(n))
    write("trees_le10.g6", trees)


if __name__ == "__main__":
    main()
