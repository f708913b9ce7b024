"""Figure rendering for the report path."""

from wittp import figures
from wittp.harness import figure_payload


def test_render_report_figures(tmp_path):
    payload = figure_payload()
    assert payload["t2"]["word"] == [1, 11, 4, 7, 1]
    assert payload["t2"]["leibniz"] == [24, 144, 36, 48, 4]
    assert sum(payload["cdist"]["counts"]["xp"].values()) == 5**5
    paths = figures.render_report_figures(payload, tmp_path)
    assert len(paths) == 3
    for path in paths:
        assert path.exists() and path.stat().st_size > 1000
