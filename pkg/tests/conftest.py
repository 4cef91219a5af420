import os

import pytest
from hypothesis import HealthCheck, settings

from coxtwist.graph import DefiningGraph
from coxtwist.instances import catalog
from coxtwist.marking import GeneratingSet

settings.register_profile("default", deadline=None, derandomize=True,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", deadline=None, max_examples=500)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def dihedral(m) -> DefiningGraph:
    return DefiningGraph.from_edges(("s", "t"), [("s", "t", m)])


@pytest.fixture
def Q3():
    return catalog("Q3")


@pytest.fixture
def twisted_Q3():
    from coxtwist.twist import apply_twist_generators, twist_for

    G = catalog("Q3")
    return apply_twist_generators(GeneratingSet.reference(G), twist_for(G, "st", "b"), verify=True)
