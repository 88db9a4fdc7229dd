"""Strata of real symmetric matrices with prescribed eigenvalue multiplicities.

Thin wrapper over the C++ core. Exact values come back as strings from the
extension; ``sample`` and ``vanishing_forms`` convert them to Fractions.
"""
from fractions import Fraction
import os as _os

from . import _eigenstrata as _core
from ._eigenstrata import EigenstrataError, discriminant  # noqa: F401

_here = _os.path.join(_os.path.dirname(__file__), "data")
if _os.path.isdir(_here) and "EIGENSTRATA_DATA" not in _os.environ:
    _os.environ["EIGENSTRATA_DATA"] = _here

__all__ = [
    "EigenstrataError", "arrangement_degree", "chevalley", "codimension", "dimension", "discriminant",
    "edd", "hilbert_function", "hilbert_polynomial", "multinomial", "nearest", "parametrization_rank",
    "run_suite", "sample", "vanishing_forms",
]


def _partition(p):
    return p if isinstance(p, str) else ",".join(str(int(x)) for x in p)


def _takes_partition(name):
    f = getattr(_core, name)

    def g(partition, *args, **kwargs):
        return f(_partition(partition), *args, **kwargs)

    g.__name__ = name
    g.__doc__ = f.__doc__
    return g


# partition given as "2,1" or as a sequence of parts
dimension = _takes_partition("dimension")
codimension = _takes_partition("codimension")
multinomial = _takes_partition("multinomial")
parametrization_rank = _takes_partition("parametrization_rank")
hilbert_polynomial = _takes_partition("hilbert_polynomial")
hilbert_function = _takes_partition("hilbert_function")
arrangement_degree = _takes_partition("arrangement_degree")
edd = _takes_partition("edd")
chevalley = _takes_partition("chevalley")


def nearest(matrix, partition):
    return _core.nearest([[float(x) for x in row] for row in matrix], _partition(partition))


def sample(partition, count=1, seed=1):
    """Exact points on the stratum: list of (n, [Fraction, ...]) upper triangles."""
    return [(s["n"], [Fraction(x) for x in s["ambient"]]) for s in _core.sample(_partition(partition), count, seed)]


def vanishing_forms(partition, degree, seed=1, mode="auto", threads=1):
    r = _core.vanishing_forms(_partition(partition), degree, seed, mode, threads)
    for f in r["basis"]:
        for t in f["terms"]:
            t["coeff"] = Fraction(t["coeff"])
    return r


def run_suite(criteria=(), seed=1, threads=1, data_dir=""):
    return _core.run_suite(list(criteria), seed, threads, data_dir)
