import pytest

from ommsim_figures.make_inputs import make_inputs
from ommsim_figures.recipes import write_default_recipes

TEST_GRID = 201  # detunings per spectrum; keeps dataset generation quick


@pytest.fixture(scope="session")
def data_dir(tmp_path_factory):
    root = tmp_path_factory.mktemp("figure_data")
    make_inputs(root, grid=TEST_GRID)
    return root


@pytest.fixture(scope="session")
def recipe_dir(tmp_path_factory, data_dir):
    root = tmp_path_factory.mktemp("recipes")
    write_default_recipes(root, data_root=str(data_dir))
    return root
