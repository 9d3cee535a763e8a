"""Figure recipes: which exported files feed which panels.

A recipe is a small JSON document:

    {"figure_id": "fig5",
     "inputs": {"family": "data/fig5a/fwm.csv", "detuning": "data/fig5c/fwm.csv"},
     "axis_ranges": {"delta": [-2, 2]},
     "curve_labels": {"family": "$\\Delta_m={v}\\,\\omega_b$"}}

Input paths are resolved relative to the recipe file.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field

FIGURE_IDS = ("fig2", "fig3", "fig4", "fig5", "fig6", "fig7")

#: input slots each figure consumes (slot -> dataset-relative exported file)
FIGURE_INPUTS = {
    "fig2": {
        "panel_a": "fig2a/lambda.csv",
        "panel_b": "fig2b/lambda.csv",
        "panel_c": "fig2c/lambda.csv",
    },
    "fig3": {
        "weak": "fig3_weak/lambda.csv",
        "strong": "fig3_strong/lambda.csv",
    },
    "fig4": {"grid": "fig4/lambda.csv"},
    "fig5": {
        "family": "fig5a/fwm.csv",
        "detuning": "fig5c/fwm.csv",
    },
    "fig6": {"low": "fig6a/fwm.csv", "high": "fig6b/fwm.csv"},
    "fig7": {"cavity": "fig7a/fwm.csv", "magnon": "fig7b/fwm.csv"},
}

DEFAULT_LABELS = {
    "fig2": {"axis2_name": "$\\Delta_m/\\omega_b$"},
    "fig3": {"curve": "$\\Delta_m={v}\\,\\omega_b$"},
    "fig4": {"curve": "$\\Delta_c={v}\\,\\omega_b$"},
    "fig5": {"family": "$\\Delta_m={v}\\,\\omega_b$", "detuning": "$\\Delta_c={v}\\,\\omega_b$"},
    "fig6": {"curve": "$G_{{mb}}={v}\\,\\omega_b$"},
    "fig7": {"cavity": "$\\kappa_c={v}\\,\\omega_b$", "magnon": "$\\kappa_m={v}\\,\\omega_b$"},
}


class RecipeError(Exception):
    """The recipe document is malformed or references missing inputs."""


@dataclass(frozen=True)
class FigureRecipe:
    figure_id: str
    inputs: dict  # slot name -> resolved path
    axis_ranges: dict = field(default_factory=dict)
    curve_labels: dict = field(default_factory=dict)


def load_recipe(path) -> FigureRecipe:
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except FileNotFoundError:
        raise RecipeError(f"recipe not found: {path}") from None
    except json.JSONDecodeError as exc:
        raise RecipeError(f"recipe {path}: {exc.msg} at line {exc.lineno}") from None
    figure_id = doc.get("figure_id")
    if figure_id not in FIGURE_IDS:
        raise RecipeError(f"recipe {path}: figure_id {figure_id!r} not in {FIGURE_IDS}")
    inputs = doc.get("inputs")
    if not isinstance(inputs, dict):
        raise RecipeError(f"recipe {path}: 'inputs' object is required")
    missing_slots = set(FIGURE_INPUTS[figure_id]) - set(inputs)
    if missing_slots:
        raise RecipeError(f"recipe {path}: missing input slot(s) {sorted(missing_slots)}")
    base = os.path.dirname(os.path.abspath(path))
    resolved = {}
    for slot, rel in inputs.items():
        full = rel if os.path.isabs(rel) else os.path.join(base, rel)
        if not os.path.exists(full):
            raise RecipeError(f"recipe {path}: input {slot!r} does not exist: {full}")
        resolved[slot] = full
    labels = {**DEFAULT_LABELS.get(figure_id, {}), **doc.get("curve_labels", {})}
    return FigureRecipe(
        figure_id=figure_id,
        inputs=resolved,
        axis_ranges=doc.get("axis_ranges", {}),
        curve_labels=labels,
    )


def write_default_recipes(recipe_dir, data_root="../data") -> list:
    """Write the six standard recipe files; returns the written paths."""
    os.makedirs(recipe_dir, exist_ok=True)
    written = []
    for figure_id, slots in FIGURE_INPUTS.items():
        doc = {
            "figure_id": figure_id,
            "inputs": {slot: os.path.join(data_root, rel) for slot, rel in slots.items()},
            "axis_ranges": {"delta": [-2.0, 2.0]},
            "curve_labels": {},
        }
        path = os.path.join(recipe_dir, f"{figure_id}.json")
        with open(path, "w") as fh:
            json.dump(doc, fh, indent=2)
            fh.write("\n")
        written.append(path)
    return written
