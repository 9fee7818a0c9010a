"""Matrix figures rendered to files alongside the delimited output."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt


def render_matrix_figure(M, path, block_sizes=None, title=None):
    """Heatmap of integer-encoded entries with block separators."""
    data = [[e.to_index() for e in M.row(r)] for r in range(M.rows)]
    fig, ax = plt.subplots(figsize=(max(3, M.cols * 0.4), max(2, M.rows * 0.4)))
    if data:
        im = ax.imshow(data, cmap="viridis", aspect="equal",
                       vmin=0, vmax=max(1, M.field.order - 1))
        fig.colorbar(im, ax=ax, fraction=0.046)
        for r in range(M.rows):
            for c in range(M.cols):
                ax.text(c, r, str(data[r][c]), ha="center", va="center",
                        color="white", fontsize=8)
    if block_sizes:
        x = -0.5
        for n in block_sizes[:-1]:
            x += n
            ax.axvline(x, color="red", linewidth=1.5)
    ax.set_xlabel("column")
    ax.set_ylabel("row")
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
