"""Figure rendering: all six facsimiles, determinism, schema diagnostics."""

import os
import pathlib

import pytest

from ommsim_figures.data import SchemaError, read_sweep_csv
from ommsim_figures.recipes import FIGURE_IDS, RecipeError, load_recipe, write_default_recipes
from ommsim_figures.render import RenderError, main, render

FIGURES = list(FIGURE_IDS)


@pytest.mark.parametrize("figure_id", FIGURES)
def test_all_six_figures_render(figure_id, recipe_dir, tmp_path):
    recipe_path = recipe_dir / f"{figure_id}.json"
    out = tmp_path / "out"
    assert main([str(recipe_path), str(out)]) == 0
    svg = out / f"{figure_id}.svg"
    assert svg.exists()
    content = svg.read_bytes()
    assert len(content) > 5_000
    assert content.lstrip().startswith(b"<?xml")


def test_rerun_reproduces_identical_bytes(recipe_dir, tmp_path):
    recipe = load_recipe(recipe_dir / "fig5.json")
    first = pathlib.Path(render(recipe, tmp_path / "a")).read_bytes()
    second = pathlib.Path(render(recipe, tmp_path / "b")).read_bytes()
    assert first == second


def test_empty_csv_errors_before_writing(tmp_path):
    data = tmp_path / "fig4"
    data.mkdir()
    (data / "lambda.csv").write_text("")
    recipe_path = tmp_path / "fig4.json"
    recipe_path.write_text(
        '{"figure_id": "fig4", "inputs": {"grid": "fig4/lambda.csv"}}'
    )
    out = tmp_path / "out"
    with pytest.raises(RenderError, match="empty"):
        render(load_recipe(recipe_path), out)
    assert not out.exists()


def test_schema_mismatch_names_offending_column(tmp_path):
    bad = tmp_path / "bad.csv"
    bad.write_text("axis1,axisX,delta,quantity,value\n0.0,,0.0,lambda,1.0\n")
    with pytest.raises(SchemaError) as err:
        read_sweep_csv(bad)
    assert "axis2" in str(err.value) and "axisX" in str(err.value)


def test_header_only_csv_rejected(tmp_path):
    bad = tmp_path / "bad.csv"
    bad.write_text("axis1,axis2,delta,quantity,value\n")
    with pytest.raises(SchemaError, match="header-only"):
        read_sweep_csv(bad)


def test_recipe_validation(tmp_path):
    path = tmp_path / "r.json"
    path.write_text('{"figure_id": "fig99", "inputs": {}}')
    with pytest.raises(RecipeError, match="fig99"):
        load_recipe(path)
    path.write_text('{"figure_id": "fig7", "inputs": {"cavity": "missing.csv"}}')
    with pytest.raises(RecipeError, match="missing input slot"):
        load_recipe(path)
    path.write_text(
        '{"figure_id": "fig7", "inputs": {"cavity": "a.csv", "magnon": "b.csv"}}'
    )
    with pytest.raises(RecipeError, match="does not exist"):
        load_recipe(path)


def test_cli_reports_recipe_errors(tmp_path, capsys):
    code = main([str(tmp_path / "nope.json"), str(tmp_path / "out")])
    assert code == 1
    assert "recipe" in capsys.readouterr().err


def test_default_recipes_cover_all_figures(tmp_path):
    written = write_default_recipes(tmp_path / "recipes", data_root="../data")
    names = sorted(os.path.basename(p) for p in written)
    assert names == sorted(f"{fid}.json" for fid in FIGURES)


def test_renderer_never_imports_the_simulator():
    pkg = pathlib.Path(__file__).parent.parent / "src" / "ommsim_figures"
    for path in pkg.glob("*.py"):
        for line in path.read_text().splitlines():
            stripped = line.strip()
            if stripped.startswith(("import ", "from ")):
                assert not stripped.startswith(("import ommsim", "from ommsim ", "from ommsim.")), (
                    f"{path.name}: {stripped}"
                )


def test_sweep_table_shape(data_dir):
    table = read_sweep_csv(data_dir / "fig4" / "lambda.csv")
    assert table.quantity == "lambda"
    assert len(table.axis1) == 5 and len(table.axis2) == 3
    assert table.values.shape == (5, 3, 201)
