import pytest

from tlr.domain import MaterialProperties
from tlr.fem.domain import FieldState, Mesh
from tlr.loading.domain import AreaProfile


@pytest.fixture
def props() -> MaterialProperties:
    return MaterialProperties()


@pytest.fixture
def mesh() -> Mesh:
    return Mesh(length=200.0, n_elements=400)


@pytest.fixture
def area(props) -> AreaProfile:
    return AreaProfile(nominal_area=props.nominal_area, spread_depth_ratio=1.5)


@pytest.fixture
def state(mesh, props) -> FieldState:
    return FieldState.initial(mesh, props.reference_temp)


@pytest.fixture
def uniform_area(props) -> AreaProfile:
    # A notch this wide leaves the section constant to machine precision
    return AreaProfile(nominal_area=props.nominal_area, spread_depth_ratio=1e6)
