"""Structure and determinism of the hand-built SVG plots."""

import numpy as np
import pytest

from strainsim.svg import PlotSpec, render_line_plot


def fringe_columns(n=50):
    x = np.linspace(0.0, 4.0 * np.pi, n)
    port1 = np.cos(0.5 * x) ** 2
    return {"phase": x, "port1": port1, "port2": 1.0 - port1}


TWO_PORT_SPEC = PlotSpec(
    x_column="phase",
    y_columns=("port1", "port2"),
    title="fringe",
    x_label="phase (rad)",
    y_label="intensity",
    legend=("port 1", "port 2"),
)


def test_same_input_is_byte_identical():
    a = render_line_plot(fringe_columns(), TWO_PORT_SPEC)
    b = render_line_plot(fringe_columns(), TWO_PORT_SPEC)
    assert a == b


def test_one_polyline_per_series():
    markup = render_line_plot(fringe_columns(), TWO_PORT_SPEC)
    assert markup.count("<polyline") == 2
    assert markup.startswith("<svg ")
    assert markup.endswith("</svg>\n")


def test_labels_and_legend_present():
    markup = render_line_plot(fringe_columns(), TWO_PORT_SPEC)
    for text in ("fringe", "phase (rad)", "intensity", "port 1", "port 2"):
        assert text in markup


def test_title_markup_is_escaped():
    spec = PlotSpec(x_column="phase", y_columns=("port1",), title="a < b & c")
    markup = render_line_plot(fringe_columns(), spec)
    assert "a &lt; b &amp; c" in markup
    assert "a < b" not in markup


def test_missing_column_rejected():
    spec = PlotSpec(x_column="phase", y_columns=("nonexistent",))
    with pytest.raises(ValueError):
        render_line_plot(fringe_columns(), spec)


def test_empty_series_rejected():
    spec = PlotSpec(x_column="phase", y_columns=("port1",))
    empty = {"phase": np.array([]), "port1": np.array([])}
    with pytest.raises(ValueError):
        render_line_plot(empty, spec)


def test_length_mismatch_rejected():
    columns = fringe_columns()
    columns["port1"] = columns["port1"][:-1]
    spec = PlotSpec(x_column="phase", y_columns=("port1",))
    with pytest.raises(ValueError):
        render_line_plot(columns, spec)


def test_flat_series_still_renders():
    columns = {"x": np.arange(5.0), "y": np.full(5, 3.0)}
    spec = PlotSpec(x_column="x", y_columns=("y",))
    markup = render_line_plot(columns, spec)
    assert "<polyline" in markup
    assert "nan" not in markup.lower()


def test_spec_validation():
    with pytest.raises(ValueError):
        PlotSpec(x_column="x", y_columns=())
    with pytest.raises(ValueError):
        PlotSpec(x_column="x", y_columns=("a", "b"), legend=("only one",))


def test_coordinates_stay_inside_the_viewport():
    columns = {"x": np.linspace(-1e6, 1e6, 30), "y": np.linspace(-5e8, 5e8, 30)}
    spec = PlotSpec(x_column="x", y_columns=("y",))
    markup = render_line_plot(columns, spec)
    points_attr = markup.split('points="')[1].split('"')[0]
    for pair in points_attr.split(" "):
        px, py = map(float, pair.split(","))
        assert 0.0 <= px <= 800.0
        assert 0.0 <= py <= 480.0
