"""Benchmark problem registry.

Twenty-nine catalog entries, each with analytic objectives, analytic
gradients, a sampling box, and a convexity flag.  Four families (JOS1,
TOI4, NT2, DD) are dimension-scalable and can also be requested by
bare family name with an explicit ``variant_dim``.

Gradients are hand-coded rather than autodiffed so that evaluation
accounting stays exact; finite differences are used only as a test
oracle.
"""

from __future__ import annotations

from typing import Callable, Optional

from . import bk1, dd, deb, fds, ff1, jos1, kw2, mhhm, mop, nt2, pnr, slcdt1, toi4, wit, zkg7
from .base import EvaluationError, ProblemInstance, evaluate

__all__ = [
    "EvaluationError",
    "ProblemInstance",
    "evaluate",
    "get_problem",
    "problem_names",
    "UnknownProblemError",
]


class UnknownProblemError(KeyError):
    """Requested name is not in the registry."""


# Catalog order mirrors the benchmark table; names are case-sensitive.
_REGISTRY: dict[str, Callable[[], ProblemInstance]] = {
    "SLCDT1": slcdt1.build,
    "PNR": pnr.build,
    "MOP2": mop.build_mop2,
    "MOP5": mop.build_mop5,
    "KW2": kw2.build,
    "JOS1a": lambda: jos1.build("JOS1a", 50, 2.0),
    "JOS1b": lambda: jos1.build("JOS1b", 200, 2.0),
    "JOS1c": lambda: jos1.build("JOS1c", 500, 2.0),
    "JOS1d": lambda: jos1.build("JOS1d", 1000, 2.0),
    "JOS1e": lambda: jos1.build("JOS1e", 2000, 2.0),
    "JOS1f": lambda: jos1.build("JOS1f", 200, 5.0),
    "FF1": ff1.build,
    "FDS": fds.build,
    "Deb": deb.build,
    "DD": lambda: dd.build("DD", 5),
    "BK1": bk1.build,
    "WIT": wit.build,
    "TOI4a": lambda: toi4.build("TOI4a", 4),
    "TOI4b": lambda: toi4.build("TOI4b", 40),
    "TOI4c": lambda: toi4.build("TOI4c", 100),
    "TOI4d": lambda: toi4.build("TOI4d", 200),
    "TOI4e": lambda: toi4.build("TOI4e", 500),
    "TOI4f": lambda: toi4.build("TOI4f", 1000),
    "NT2a": lambda: nt2.build("NT2a", 20),
    "NT2b": lambda: nt2.build("NT2b", 70),
    "NT2c": lambda: nt2.build("NT2c", 120),
    "ZKG7": zkg7.build,
    "MHHM1": mhhm.build_mhhm1,
    "MHHM2": mhhm.build_mhhm2,
}

# Families accepting an explicit dimension.  Bare family names require
# variant_dim; catalog names never accept one.
_SCALABLE: dict[str, Callable[[int], ProblemInstance]] = {
    "JOS1": lambda n: jos1.build(f"JOS1(n={n})", n, 2.0),
    "TOI4": lambda n: toi4.build(f"TOI4(n={n})", n),
    "NT2": lambda n: nt2.build(f"NT2(n={n})", n),
    "DD": lambda n: dd.build(f"DD(n={n})", n),
}


def problem_names() -> list[str]:
    """Catalog names in table order."""
    return list(_REGISTRY)


def get_problem(name: str, variant_dim: Optional[int] = None) -> ProblemInstance:
    """Build a fresh instance of a registered problem.

    ``variant_dim`` is accepted only for the scalable families (JOS1,
    TOI4, NT2, DD); ``get_problem("JOS1", 1000)`` matches the catalog
    JOS1d variant.  Every call returns a new instance with its own
    evaluation counter, so instances can be handed to concurrent runs.

    Raises:
        UnknownProblemError: name not registered.
        ValueError: variant_dim passed for a fixed-dimension problem,
            or a bare family name requested without a dimension.
    """
    if variant_dim is not None:
        if variant_dim < 1:
            raise ValueError("variant_dim must be a positive integer")
        if name not in _SCALABLE:
            raise ValueError(f"{name!r} has a fixed dimension; variant_dim not accepted")
        return _SCALABLE[name](int(variant_dim))
    if name in _REGISTRY:
        return _REGISTRY[name]()
    if name in _SCALABLE:
        raise ValueError(f"{name!r} is a scalable family; pass variant_dim")
    raise UnknownProblemError(name)
