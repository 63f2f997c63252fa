#!/usr/bin/env python3
"""Rank a small web-like graph and relate the scores to its component core.

The graph has a strongly connected hub cluster, an upstream page pointing in,
and a dangling page: the classic shape where the component census explains
who accumulates score.
"""

from hog.core import build_graph
from hog.homotopy import cofibrant_replacement
from hog.pagerank import connectivity_report, pagerank


def demo_graph():
    return build_graph(
        ["home", "docs", "blog", "about", "landing", "archive"],
        [
            ("a", "home", "docs"),
            ("b", "docs", "blog"),
            ("c", "blog", "home"),
            ("d", "docs", "home"),
            ("e", "landing", "home"),
            ("f", "home", "archive"),
            ("g", "about", "home"),
            ("h", "home", "about"),
        ],
    )


def main() -> None:
    g = demo_graph()
    report = connectivity_report(g)
    print(
        f"{report.node_count} pages, {report.component_count} components, "
        f"largest holds {report.largest_component_fraction:.0%}"
    )
    core, _ = cofibrant_replacement(g)
    inside = [a.id for a in core.arcs]
    print(f"arcs inside strongly connected components: {len(inside)} of {len(g.arcs)}")
    for damping in (0.5, 0.85, 0.99):
        scores = pagerank(g, damping=damping).scores
        ranked = sorted(scores, key=scores.get, reverse=True)
        row = "  ".join(f"{page}={scores[page]:.3f}" for page in ranked)
        print(f"damping {damping:4.2f}: {row}")


if __name__ == "__main__":
    main()
