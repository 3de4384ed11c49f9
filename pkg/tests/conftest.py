import json
from pathlib import Path

import pytest

from symstack import geometry
from symstack.multigraded import GradedDimension

DATA_DIR = Path(__file__).parent / "data"


@pytest.fixture
def data_file():
    def path(name):
        return str(DATA_DIR / name)

    return path


@pytest.fixture
def p1():
    return geometry.preset("p1")


@pytest.fixture
def p2():
    return geometry.preset("p2")


@pytest.fixture
def p3():
    return geometry.preset("p3")


@pytest.fixture(params=geometry.BIELLIPTIC_ORDERS)
def bielliptic(request):
    return geometry.preset("bielliptic%d" % request.param)


@pytest.fixture
def bielliptic2():
    return geometry.preset("bielliptic2")


@pytest.fixture
def k3():
    """
    A K3-type diamond: h^{0,0} = h^{2,0} = h^{0,2} = h^{2,2} = 1, h^{1,1} = 20,
    with trivial canonical bundle.
    """
    return geometry.load_variety(DATA_DIR / "k3.json")


@pytest.fixture
def variety_file(tmp_path, bielliptic2):
    path = tmp_path / "bielliptic2.json"
    with open(path, "w") as f:
        json.dump(geometry.dump_variety(bielliptic2), f, indent=2)
    yield path


@pytest.fixture
def hodge_p2():
    return GradedDimension.from_matrix([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
