import tfcahn as tfc


def test_set_style_sets_expected_rcparams() -> None:
    tfc.set_style()
    import matplotlib as mpl

    assert mpl.rcParams["figure.facecolor"] == "white"
    assert mpl.rcParams["axes.facecolor"] == "white"
    assert mpl.rcParams["image.origin"] == "lower"
    assert mpl.rcParams["savefig.dpi"] == 200


def test_field_images_are_grayscale() -> None:
    tfc.set_style()
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots()
    image = ax.imshow([[-1.0, 1.0]], vmin=-1.0, vmax=1.0)
    lo = image.cmap(0.0)
    hi = image.cmap(1.0)
    assert lo[0] == lo[1] == lo[2]
    assert hi[0] == hi[1] == hi[2]
    assert hi[0] > lo[0]

    plt.close(fig)
