import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parent.parent
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from knotcosmetic.core.diagram import mirror, parse_pd  # noqa: E402

TREFOIL = "X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)"
LEFT_TREFOIL = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"
FIGURE_EIGHT = "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)"
CINQUEFOIL = "X(1,6,2,7) X(3,8,4,9) X(5,10,6,1) X(7,2,8,3) X(9,4,10,5)"
HOPF = "X(1,3,2,4) X(3,1,4,2)"
# Montesinos diagram with tangles 22, 21 and 2-
KNOT_9_44 = (
    "X(18,14,1,13) X(12,2,13,1) X(14,11,15,12) X(10,15,11,16) X(2,7,3,8) "
    "X(8,3,9,4) X(6,9,7,10) X(17,5,18,4) X(5,17,6,16)"
)
# quoted in some references as a trefoil; its rotation system is not planar
NON_PLANAR = "X(1,4,2,3) X(3,6,4,5) X(5,2,6,1)"


@pytest.fixture
def trefoil():
    return parse_pd(TREFOIL)


@pytest.fixture
def left_trefoil():
    return parse_pd(LEFT_TREFOIL)


@pytest.fixture
def figure_eight():
    return parse_pd(FIGURE_EIGHT)


@pytest.fixture
def cinquefoil():
    return parse_pd(CINQUEFOIL)


@pytest.fixture
def hopf():
    return parse_pd(HOPF)


@pytest.fixture
def knot_9_44():
    return parse_pd(KNOT_9_44)


@pytest.fixture
def unknot():
    return parse_pd("", unknot=True)


@pytest.fixture
def small_knots(trefoil, left_trefoil, figure_eight, cinquefoil):
    return {
        "3_1": trefoil,
        "3_1 left": left_trefoil,
        "3_1 mirror": mirror(trefoil),
        "4_1": figure_eight,
        "5_1": cinquefoil,
    }


@pytest.fixture
def small_config():
    return {
        'engine': {'bracket_method': 'contraction', 'max_workers': 2, 'executor': 'thread'},
        'census': {'tau_source': 'test', 'reference_csv': None},
        'verify': {
            'grid_max': 1,
            'genus_max': 1,
            'twist_range': 2,
            'slope_pmax': 60,
            'genus2_grid': 2,
            'genus3_xmax': 1,
        },
        'logging': {'level': 'WARNING', 'file': None},
    }
