"""Pseudorandom sequences from dynamical systems with weak attractors.

A weak attractor is a set every forward orbit of a step map eventually
enters.  Coupling such a base dynamic to an output dynamic through a seed
map yields a generated function: the output step applied depth-many times
to the seed of the first attractor state reached.  This package provides
the evaluation engine, the number-theoretic and finite-field step maps it
is typically used with, a catalog of named generators checked against
golden reference tables, and a small CLI.
"""

from .core import (CoupledSystem, OrbitTrace, OutputValue, State, delta,
                   dynamics_from_depth, evaluate, evaluate_range,
                   evaluate_recursive, is_weak_attractor, minimal_orbits)
from .errors import (DegenerateSpectrum, DepthExceeded, DivisionByZero,
                     DomainError, DomainNotClosed, HypothesisViolated,
                     NotPrime, OrbitgenError, UnknownSystem,
                     ValueOutOfAlphabet, ZeroInput)

__version__ = "0.1.0"

__all__ = [
    "CoupledSystem",
    "OrbitTrace",
    "OutputValue",
    "State",
    "delta",
    "evaluate",
    "evaluate_recursive",
    "evaluate_range",
    "minimal_orbits",
    "is_weak_attractor",
    "dynamics_from_depth",
    "OrbitgenError",
    "DepthExceeded",
    "DomainNotClosed",
    "HypothesisViolated",
    "DomainError",
    "UnknownSystem",
    "ValueOutOfAlphabet",
    "NotPrime",
    "DivisionByZero",
    "ZeroInput",
    "DegenerateSpectrum",
    "__version__",
]
