#!/usr/bin/env python3
"""Distance matrices, eccentricities, and the eccentricity matrix.

The eccentricity matrix keeps a distance entry d(u,v) only when it equals
min(ecc(u), ecc(v)).  This script walks through the construction on a path,
a star and the octahedron, and shows the diameter-2 shortcut that builds the
same matrix from the complement graph.
"""

import numpy as np

import eccspec as es


def show(title, matrix):
    print(f"\n{title}")
    for row in np.asarray(matrix):
        print("   ", " ".join(f"{int(x):2d}" for x in row))


def main():
    print("=== A path on four vertices ===")
    path = es.Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    dm = es.all_pairs_distances(path)
    show("distance matrix:", dm.matrix)
    print("eccentricities:", dm.eccentricities.tolist(), "diameter:", dm.diameter)
    show("eccentricity matrix (entries kept only at the eccentricity):",
         es.eccentricity_matrix(path).matrix)
    print("note the zeros where a distance falls short of both eccentricities")

    print("\n=== A star: centre at eccentricity 1, leaves at 2 ===")
    star = es.star(5)
    dm = es.all_pairs_distances(star)
    em = es.eccentricity_matrix(star)
    show("eccentricity matrix:", em.matrix)
    print("for stars every distance survives the rule, so it equals the")
    print("distance matrix:", np.array_equal(em.matrix, dm.matrix))

    print("\n=== The octahedron K_{2,2,2} and the complement shortcut ===")
    octa = es.build_multipartite([2, 2, 2])
    direct = es.eccentricity_matrix(octa)
    shortcut = es.ecc_via_complement(octa)
    show("via the definition:", direct.matrix)
    print("via 2*A(complement):", np.array_equal(direct.matrix, shortcut.matrix))
    print("(the shortcut needs diameter exactly 2 and max degree < n-1;")
    print(" each vertex keeps a single entry 2, pointing at its antipode)")

    print("\n=== Antipodal structure ===")
    for graph, label in [(octa, "K_{2,2,2}"), (es.complete(4), "K_4"), (path, "P_4")]:
        print(f"fibre size of {label}:", es.antipodal_class(graph))


if __name__ == "__main__":
    main()
