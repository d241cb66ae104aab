from robcat.lab import reduction_experiment
from robcat.plotting import plot_caterpillar, plot_experiment
from robcat.treegeom import Caterpillar


def test_experiment_figure(tmp_path):
    rep = reduction_experiment([6, 9], 3, 0)
    out = plot_experiment(rep, tmp_path / "sub" / "exp.png")
    assert out.exists() and out.read_bytes()[:4] == b"\x89PNG"


def test_caterpillar_figure_formats(tmp_path):
    cat = Caterpillar((0, 1, 1, 4), (0, 2, 1, 0))
    assert plot_caterpillar(cat, tmp_path / "c.svg").read_text().lstrip().startswith("<?xml")
    assert plot_caterpillar(cat, tmp_path / "c.pdf", labels=list("abcd")).read_bytes()[:4] == b"%PDF"
