"""Render SVG facsimiles of the standard parameter studies.

Usage: render_figures <recipe.json> <out_dir>

All inputs are loaded and validated before any drawing starts, so a bad
recipe or CSV never leaves a partial image behind.  The SVG output is
deterministic: timestamps are stripped and element ids are salted with a
fixed string, so re-rendering identical inputs reproduces identical bytes.
"""

from __future__ import annotations

import argparse
import os
import sys

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .data import SchemaError, SweepTable, read_sweep_csv  # noqa: E402
from .recipes import FigureRecipe, RecipeError, load_recipe  # noqa: E402

plt.rcParams["svg.hashsalt"] = "ommsim-figures"
plt.rcParams["figure.dpi"] = 100

DELTA_LABEL = r"$\delta/\omega_b$"
LAMBDA_LABEL = r"$\Lambda$"
FWM_LABEL = r"$\epsilon_{FWM}$"

# line styles cycled through curve families (style, color)
FAMILY_STYLES = [
    ("-", "tab:orange"),
    ("--", "tab:red"),
    ("-.", "tab:green"),
    ("-", "tab:gray"),
    (":", "tab:blue"),
    ("--", "tab:purple"),
    ("-.", "black"),
    ("-", "tab:cyan"),
    (":", "tab:brown"),
]


class RenderError(Exception):
    """Rendering failed before an image could be produced."""


def _label(template, value):
    text = f"{value:g}"
    return template.format(v=text) if template else text


def _family_panel(ax, table: SweepTable, label_template, i2=0):
    for k, v1 in enumerate(table.axis1):
        style, color = FAMILY_STYLES[k % len(FAMILY_STYLES)]
        ax.plot(
            table.deltas,
            table.curve(k, i2),
            style,
            color=color,
            lw=1.0,
            label=_label(label_template, v1),
        )


def _apply_delta_range(ax, recipe):
    rng = recipe.axis_ranges.get("delta")
    if rng:
        ax.set_xlim(rng[0], rng[1])


def _render_fig2(recipe, tables):
    fig, axes = plt.subplots(1, 3, figsize=(12, 3.6))
    for ax, slot, title in zip(axes, ("panel_a", "panel_b", "panel_c"), ("(a)", "(b)", "(c)")):
        table = tables[slot]
        mesh = ax.pcolormesh(
            table.deltas,
            table.axis1,
            table.values[:, 0, :],
            shading="nearest",
            cmap="viridis",
            rasterized=True,
        )
        fig.colorbar(mesh, ax=ax, label=LAMBDA_LABEL)
        ax.set_xlabel(DELTA_LABEL)
        ax.set_ylabel(recipe.curve_labels.get("axis2_name", r"$\Delta_m/\omega_b$"))
        ax.set_title(title)
        _apply_delta_range(ax, recipe)
    return fig


def _render_fig3(recipe, tables):
    fig, axes = plt.subplots(3, 2, figsize=(8, 9), sharex=True)
    template = recipe.curve_labels.get("curve")
    for col, slot in enumerate(("weak", "strong")):
        table = tables[slot]
        for row in range(min(3, max(len(table.axis2), 1))):
            ax = axes[row][col]
            _family_panel(ax, table, template, i2=row)
            ax.set_ylabel(LAMBDA_LABEL)
            if table.axis2:
                ax.set_title(f"$\\Delta_c={table.axis2[row]:g}\\,\\omega_b$", fontsize=9)
            _apply_delta_range(ax, recipe)
    for ax in axes[-1]:
        ax.set_xlabel(DELTA_LABEL)
    axes[0][0].legend(frameon=False, fontsize=7)
    return fig


def _render_fig4(recipe, tables):
    table = tables["grid"]
    n_cols = max(len(table.axis2), 1)
    fig, axes = plt.subplots(1, n_cols, figsize=(4 * n_cols, 3.2), sharey=True)
    axes = [axes] if n_cols == 1 else list(axes)
    template = recipe.curve_labels.get("curve")
    for i2, ax in enumerate(axes):
        _family_panel(ax, table, template, i2=i2)
        ax.set_xlabel(DELTA_LABEL)
        if table.axis2:
            ax.set_title(f"$\\Delta_m={table.axis2[i2]:g}\\,\\omega_b$", fontsize=9)
        _apply_delta_range(ax, recipe)
    axes[0].set_ylabel(LAMBDA_LABEL)
    axes[0].legend(frameon=False, fontsize=7)
    return fig


def _render_fig5(recipe, tables):
    fig, axes = plt.subplots(1, 3, figsize=(12, 3.4))
    family = tables["family"]
    _family_panel(axes[0], family, recipe.curve_labels.get("family"))
    axes[0].set_xlabel(DELTA_LABEL)
    axes[0].set_ylabel(FWM_LABEL)
    axes[0].set_title("(a)")
    axes[0].legend(frameon=False, fontsize=6)

    mesh = axes[1].pcolormesh(
        family.deltas,
        family.axis1,
        family.values[:, 0, :],
        shading="nearest",
        cmap="magma",
        rasterized=True,
    )
    fig.colorbar(mesh, ax=axes[1], label=FWM_LABEL)
    axes[1].set_xlabel(DELTA_LABEL)
    axes[1].set_ylabel(r"$\Delta_m/\omega_b$")
    axes[1].set_title("(b)")

    _family_panel(axes[2], tables["detuning"], recipe.curve_labels.get("detuning"))
    axes[2].set_xlabel(DELTA_LABEL)
    axes[2].set_ylabel(FWM_LABEL)
    axes[2].set_title("(c)")
    axes[2].legend(frameon=False, fontsize=6)
    for ax in (axes[0], axes[1], axes[2]):
        _apply_delta_range(ax, recipe)
    return fig


def _render_two_panel(recipe, tables, slots, label_keys, ylabel):
    fig, axes = plt.subplots(1, 2, figsize=(9, 3.4))
    for ax, slot, key, title in zip(axes, slots, label_keys, ("(A)", "(B)")):
        _family_panel(ax, tables[slot], recipe.curve_labels.get(key))
        ax.set_xlabel(DELTA_LABEL)
        ax.set_ylabel(ylabel)
        ax.set_title(title)
        ax.legend(frameon=False, fontsize=7)
        _apply_delta_range(ax, recipe)
    return fig


def _render_fig6(recipe, tables):
    return _render_two_panel(recipe, tables, ("low", "high"), ("curve", "curve"), FWM_LABEL)


def _render_fig7(recipe, tables):
    return _render_two_panel(recipe, tables, ("cavity", "magnon"), ("cavity", "magnon"), FWM_LABEL)


RENDERERS = {
    "fig2": _render_fig2,
    "fig3": _render_fig3,
    "fig4": _render_fig4,
    "fig5": _render_fig5,
    "fig6": _render_fig6,
    "fig7": _render_fig7,
}


def render(recipe: FigureRecipe, out_dir) -> str:
    """Render one figure; returns the written SVG path.

    All inputs are loaded first; nothing is written if any of them fails.
    """
    try:
        tables = {slot: read_sweep_csv(path) for slot, path in recipe.inputs.items()}
    except SchemaError as exc:
        raise RenderError(str(exc)) from None
    fig = RENDERERS[recipe.figure_id](recipe, tables)
    os.makedirs(out_dir, exist_ok=True)
    out_path = os.path.join(out_dir, f"{recipe.figure_id}.svg")
    fig.savefig(out_path, format="svg", metadata={"Date": None})
    plt.close(fig)
    return out_path


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="render_figures", description="render figure facsimiles from exported CSVs"
    )
    parser.add_argument("recipe", help="recipe JSON document")
    parser.add_argument("out_dir", help="directory receiving the SVG")
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        out = render(load_recipe(args.recipe), args.out_dir)
    except (RecipeError, RenderError) as exc:
        print(f"render_figures: {exc}", file=sys.stderr)
        return 1
    print(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
