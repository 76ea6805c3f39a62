#!/usr/bin/env python3
"""Print the statistics table for the named sharpness families.

For each family instance: order, size, exact indices, maximum-trail data,
and all four upper bounds.  Handy for eyeballing where each bound is tight.
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from itline.budget import Unknown  # noqa: E402
from itline.families import fig1, fig2, fig3, fig4b  # noqa: E402
from itline.indices import (  # noqa: E402
    PathHasNoIndexError,
    compute_bounds,
    hamiltonian_index,
    hamiltonian_path_index,
)


def row(name, g):
    hp = hamiltonian_path_index(g)
    hp_s = "?" if isinstance(hp, Unknown) else hp.value
    try:
        h = hamiltonian_index(g)
        h_s = "?" if isinstance(h, Unknown) else h.value
    except PathHasNoIndexError:
        h_s = "-"
    b = compute_bounds(g)
    print(f"{name:<14} n={g.vertex_count:<3} m={g.edge_count:<3} "
          f"hp={hp_s:<2} h={h_s:<2} mt*={b.mt_star:<3} d3*={b.d3_star:<2} "
          f"b1={b.thm_b1:<3} cor1={b.cor1:<3} cor2={b.cor2:<3} b2={b.thm_b2}")


def main() -> int:
    row("fig1", fig1())
    for k in (1, 2, 3):
        row(f"fig2(k={k})", fig2(k))
    for s, t in ((1, 6), (2, 7), (1, 8)):
        row(f"fig3({s},{t})", fig3(s, t))
    for s in (1, 2):
        row(f"fig4b(s={s})", fig4b(s))
    return 0


if __name__ == "__main__":
    sys.exit(main())
