import pytest
from hypothesis import HealthCheck, settings

# fixed seeds: every property run draws the same examples
settings.register_profile(
    "repro",
    derandomize=True,
    deadline=None,
    max_examples=100,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile("repro")


@pytest.fixture
def ring3():
    from biratcheck.ring import PolyRing

    return PolyRing(("X0", "X1", "X2"))
