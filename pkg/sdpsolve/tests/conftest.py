import shutil
import subprocess

import pytest

ORDERS = (11, 13, 16, 23, 24, 26, 28, 30)


@pytest.fixture(scope="session")
def exports(tmp_path_factory):
    """Problem files for every order under test, written by the exporter CLI."""
    exe = shutil.which("muwm")
    if exe is None:
        pytest.skip("the muwm exporter is not on PATH")
    out = tmp_path_factory.mktemp("problems")
    paths = {}
    for n in ORDERS:
        path = out / f"n{n}.dat-s"
        subprocess.run(
            [exe, "sdp-export", "--n", str(n), "--out", str(path)],
            check=True,
            stdout=subprocess.DEVNULL,
        )
        paths[n] = path
    return paths
