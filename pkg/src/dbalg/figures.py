"""Figure rendering for the report path: role maps of the basis grid.

A single axes shows the n x m grid of F_ij basis cells colored by structural
role (Levi pattern, scalar line, radical off-blocks, center block) for one
shape and generator rank, with the dimension split in the title.  Rendering
is file-only through the Agg backend, so it works headless.
"""

from __future__ import annotations

from .structure import decomposition_report
from .supermatrix import SuperShape

_ROLE_COLORS = {
    0: "#4878cf",  # Levi sl(r) pattern
    1: "#e8a33d",  # scalar line
    2: "#6acc65",  # radical off-blocks
    3: "#b8b8b8",  # center block
}

_ROLE_LABELS = {
    0: "Levi sl(r) pattern",
    1: "scalar line (off-Levi diagonal)",
    2: "radical off-blocks",
    3: "center block",
}


def _role_grid(shape: SuperShape, r: int) -> list[list[int]]:
    grid = []
    for i in range(1, shape.n + 1):
        row = []
        for j in range(1, shape.m + 1):
            if r == 0 or (i > r and j > r):
                row.append(3)
            elif i <= r and j <= r:
                row.append(1 if i == j else 0)
            else:
                row.append(2)
        grid.append(row)
    return grid


def render_block_role_figure(shape: SuperShape, r: int, path: str) -> str:
    """Write the role map for (shape, r) to ``path``; returns the path."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    from matplotlib.colors import ListedColormap
    from matplotlib.patches import Patch

    report = decomposition_report(shape, r)
    grid = _role_grid(shape, r)
    present = sorted({cell for row in grid for cell in row})
    remap = {role: k for k, role in enumerate(present)}
    indexed = [[remap[cell] for cell in row] for row in grid]

    fig, ax = plt.subplots(figsize=(1.6 + 0.5 * shape.m, 1.2 + 0.5 * shape.n))
    ax.imshow(
        indexed,
        cmap=ListedColormap([_ROLE_COLORS[role] for role in present]),
        vmin=0,
        vmax=max(len(present) - 1, 1),
        origin="upper",
    )
    ax.set_xticks(range(shape.m), labels=[str(j) for j in range(1, shape.m + 1)])
    ax.set_yticks(range(shape.n), labels=[str(i) for i in range(1, shape.n + 1)])
    ax.set_xlabel("column j")
    ax.set_ylabel("row i")
    ax.set_xticks([x - 0.5 for x in range(1, shape.m)], minor=True)
    ax.set_yticks([y - 0.5 for y in range(1, shape.n)], minor=True)
    ax.grid(which="minor", color="white", linewidth=1.2)
    ax.tick_params(which="minor", length=0)
    ax.set_title(
        f"{shape} corner, rank {r}\n"
        f"dim {report.dim_total} = levi {report.dim_levi} + radical {report.dim_radical}; "
        f"center {report.dim_center}"
    )
    ax.legend(
        handles=[Patch(color=_ROLE_COLORS[role], label=_ROLE_LABELS[role]) for role in present],
        loc="center left",
        bbox_to_anchor=(1.02, 0.5),
        frameon=False,
    )
    fig.savefig(path, bbox_inches="tight", dpi=150)
    plt.close(fig)
    return path
