import random

import pytest
from hypothesis import HealthCheck, settings

from edgeideals.monomials import Monomial, MonomialIdeal, Variable, make_ideal

settings.register_profile(
    "suite",
    deadline=None,
    max_examples=30,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")


def random_ideal(
    rng: random.Random,
    n_vars: int = 3,
    max_gens: int = 6,
    max_exp: int = 4,
    prefix: str = "x",
) -> MonomialIdeal:
    """Nonzero random monomial ideal; generators minimalized."""
    ambient = tuple(Variable(f"{prefix}{i}") for i in range(1, n_vars + 1))
    gens = []
    for _ in range(rng.randint(1, max_gens)):
        exp = {v: rng.randint(0, max_exp) for v in ambient}
        m = Monomial({v: e for v, e in exp.items() if e})
        if not m.is_unit():
            gens.append(m)
    if not gens:
        gens = [Monomial({ambient[0]: 1})]
    return make_ideal(gens, ambient)


@pytest.fixture
def rng():
    return random.Random(20240817)
