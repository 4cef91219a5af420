"""Coxeter generating sets, elementary twists and twist complexity."""

from .errors import (CoxTwistError, Exhausted, InputError, Unsupported,  # noqa: F401
                     VerificationFailed)
from .graph import DefiningGraph, classify, is_fc, is_spherical  # noqa: F401
from .instances import catalog, load_instance, parse_instance, serialize_instance  # noqa: F401
from .kernel import BACKEND  # noqa: F401
from .marking import GeneratingSet  # noqa: F401
from .words import GroupElement, WordEngine, engine_for  # noqa: F401

__version__ = "0.1.0"
