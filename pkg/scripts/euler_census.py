#!/usr/bin/env python3
"""Census of Eulerian structure over small connected multigraphs.

For every weakly connected multigraph up to a size bound, compare the
degree-balance verdict with the boundary-based one, and summarize how many
glue/attach steps the cycle-attachment decompositions need.
"""

from collections import Counter

from hog.enumeration import connected_small_graphs
from hog.euler import euler_check, euler_decompose
from hog.homology import euler_via_homology


def main(max_nodes: int = 3, max_arcs: int = 5) -> None:
    total = 0
    eulerian = 0
    step_histogram: Counter = Counter()
    disagreements = 0
    for g in connected_small_graphs(max_nodes, max_arcs):
        total += 1
        report = euler_check(g)
        if report.is_eulerian != euler_via_homology(g).is_eulerian:
            disagreements += 1
        if report.is_eulerian:
            eulerian += 1
            step_histogram[len(euler_decompose(g).steps)] += 1
    print(f"connected multigraphs (<= {max_nodes} nodes, <= {max_arcs} arcs): {total}")
    print(f"eulerian: {eulerian} ({eulerian / total:.1%})")
    print(f"balance vs boundary disagreements: {disagreements}")
    print("decomposition steps needed (steps: count):")
    for steps in sorted(step_histogram):
        print(f"  {steps}: {step_histogram[steps]}")


if __name__ == "__main__":
    main()
