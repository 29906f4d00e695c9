"""The renderer consumes the simulation package only through its command
line and CSV format, so the fixtures here shell out to ``python -m entbath``."""

import subprocess
import sys

import pytest

PRESETS = ("fig1a", "fig1b", "fig2a", "fig2b")


@pytest.fixture(scope="session")
def preset_csvs(tmp_path_factory):
    outdir = tmp_path_factory.mktemp("grids")
    paths = {}
    for preset in PRESETS:
        path = outdir / f"{preset}.csv"
        subprocess.run(
            [
                sys.executable, "-m", "entbath", "sweep",
                "--preset", preset, "--steps", "21", "--out", str(path),
            ],
            check=True,
            capture_output=True,
        )
        paths[preset] = path
    return paths
