from __future__ import annotations

from collections.abc import Iterable, Iterator
from contextlib import contextmanager
from pathlib import Path
from typing import Any

_INSTALL_HINT = "Plotting requires matplotlib. Install tfcahn[plot]."

_STYLE_RC: dict[str, object] = {
    "figure.facecolor": "white",
    "axes.facecolor": "white",
    "axes.edgecolor": "black",
    "axes.linewidth": 0.9,
    "axes.grid": True,
    "grid.alpha": 0.3,
    "grid.linestyle": ":",
    "font.size": 10.0,
    "axes.labelsize": 10.0,
    "xtick.labelsize": 9.0,
    "ytick.labelsize": 9.0,
    "legend.fontsize": 9.0,
    "legend.frameon": False,
    "xtick.direction": "in",
    "ytick.direction": "in",
    "lines.linewidth": 1.4,
    "lines.markersize": 3.5,
    # Phase fields: -1 dark, +1 light.
    "image.cmap": "gray",
    "image.origin": "lower",
    "image.interpolation": "nearest",
    "savefig.dpi": 200,
    "savefig.bbox": "tight",
    "pdf.fonttype": 42,
    "ps.fonttype": 42,
    "mathtext.fontset": "dejavusans",
}

# Simulation data, fitted line, reference slope.
_COLORS = ["#1f3b73", "#c0392b", "#7f7f7f"]


def _require_mpl() -> Any:
    try:
        import matplotlib as mpl
    except ImportError as e:  # pragma: no cover
        raise ImportError(_INSTALL_HINT) from e
    return mpl


def _apply_style(mpl: Any) -> None:
    mpl.rcParams.update(_STYLE_RC)
    try:
        from cycler import cycler
    except ImportError:  # pragma: no cover
        return
    mpl.rcParams["axes.prop_cycle"] = cycler(color=_COLORS)


def set_style() -> None:
    """Apply the tfcahn plotting style globally (matplotlib rcParams)."""
    _apply_style(_require_mpl())


@contextmanager
def style_context() -> Iterator[None]:
    """Apply the tfcahn style inside the block and restore rcParams after it."""
    mpl = _require_mpl()
    old = mpl.rcParams.copy()
    _apply_style(mpl)
    try:
        yield
    finally:
        mpl.rcParams.update(old)


def savefig(
    fig: Any,
    path: str | Path,
    *,
    formats: Iterable[str] = ("png",),
    dpi: int | None = None,
) -> list[Path]:
    """
    Save ``fig`` once per format next to ``path`` (suffix replaced) and close it.

    Returns
    -------
    list[Path]
        Paths written.
    """
    try:
        import matplotlib.pyplot as plt
    except ImportError as e:  # pragma: no cover
        raise ImportError(_INSTALL_HINT) from e

    out_base = Path(path)
    out_base.parent.mkdir(parents=True, exist_ok=True)
    fig.tight_layout()

    written: list[Path] = []
    for fmt in formats:
        fmt_clean = fmt.lower().lstrip(".")
        out = out_base.with_suffix(f".{fmt_clean}")
        kwargs: dict[str, object] = {}
        if dpi is not None and fmt_clean in {"png", "jpg", "jpeg", "tif", "tiff"}:
            kwargs["dpi"] = int(dpi)
        fig.savefig(out, **kwargs)
        written.append(out)

    plt.close(fig)
    return written


__all__ = ["savefig", "set_style", "style_context"]
