"""Figure facsimiles for the ommsim parameter studies.

Everything here works from the simulator's exported CSV files; no physics is
recomputed.  `make_figure_inputs` drives the `ommsim` CLI to produce the
datasets, `render_figures <recipe.json> <out_dir>` turns them into SVGs.
"""

__version__ = "0.1.0"

from .recipes import FigureRecipe, RecipeError, load_recipe, write_default_recipes
from .render import RenderError, render

__all__ = [
    "__version__",
    "FigureRecipe",
    "RecipeError",
    "RenderError",
    "load_recipe",
    "render",
    "write_default_recipes",
]
