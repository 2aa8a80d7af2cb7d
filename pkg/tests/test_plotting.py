from pathlib import Path

import numpy as np

import tfcahn as tfc
from tfcahn.diagnostics import SeriesRow, TimeSeries
from tfcahn.initial import circle_field
from tfcahn.plot_style import style_context


def _decaying_series() -> TimeSeries:
    t = np.geomspace(0.1, 100.0, 30)
    return TimeSeries(
        rows=tuple(
            SeriesRow(
                step=i,
                t=float(ti),
                energy_total=float(ti**-0.3),
                energy_per_area=float(ti**-0.3),
                mass=0.0,
                length_sf=float(ti**0.3),
                length_energy=float(ti**0.3),
            )
            for i, ti in enumerate(t)
        )
    )


def test_plot_energy_decay_with_fit() -> None:
    fig, ax, fit = tfc.plot_energy_decay(
        _decaying_series(), window=(1.0, 100.0), reference_slope=-0.3
    )
    assert fit is not None
    assert np.isclose(fit.slope, -0.3)
    assert ax.get_xscale() == "log"
    assert len(ax.get_lines()) == 3

    fig2, ax2, fit2 = tfc.plot_energy_decay(_decaying_series())
    assert fit2 is None
    assert len(ax2.get_lines()) == 1

    import matplotlib.pyplot as plt

    plt.close(fig)
    plt.close(fig2)


def test_plot_field_fixes_color_limits() -> None:
    g = tfc.Grid2D.square(32)
    fig, ax = tfc.plot_field(circle_field(g, radius=0.2, center=(0.5, 0.5), epsilon=0.02), title="disk")
    (image,) = ax.get_images()
    assert image.get_clim() == (-1.0, 1.0)
    assert ax.get_title() == "disk"

    import matplotlib.pyplot as plt

    plt.close(fig)


def test_savefig_writes_files(tmp_path: Path) -> None:
    tfc.set_style()
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots()
    ax.plot([0, 1], [0, 1])

    out = tmp_path / "fig"
    paths = tfc.savefig(fig, out, formats=("png", "pdf"))

    assert [p.suffix for p in paths] == [".png", ".pdf"]
    for path in paths:
        assert path.exists()


def test_style_context_restores_rcparams() -> None:
    import matplotlib as mpl

    original = mpl.rcParams["image.cmap"]
    mpl.rcParams["image.cmap"] = "viridis"
    with style_context():
        assert mpl.rcParams["image.cmap"] == "gray"
    assert mpl.rcParams["image.cmap"] == "viridis"
    mpl.rcParams["image.cmap"] = original
