"""Exact formal-ball computations over finite quasi-metric spaces.

Spaces, posets, bases, functions and families are plain dicts in the JSON
file formats of the ``qm`` command line tool. Numbers are strings of the
form "p/q", "p" or "inf". Balls are written "(point, p/q)".
"""

import json

from . import _core
from ._core import (
    DEFAULT_BUDGET,
    DEFAULT_MODEL_DEPTH,
    DEFAULT_REFUTER_DEPTH,
    DEFAULT_SEED,
    IllegalMove,
    IndeterminateForm,
    InputError,
    InvalidSpace,
    NoOracle,
    NotAnAbstractBasis,
    NotAPoset,
    NotOpen,
    ParseError,
    TooLarge,
    UnknownElement,
    UnknownPoint,
    add,
    monus,
    normalize,
)


def _dump(obj):
    return obj if isinstance(obj, str) else json.dumps(obj)


def space(spec):
    """Validated space description in canonical form."""
    return json.loads(_core.space(_dump(spec)))


def distance(spec, x, y):
    return _core.distance(_dump(spec), x, y)


def check_axioms(spec, budget=DEFAULT_BUDGET, seed=DEFAULT_SEED):
    return json.loads(_core.check_axioms(_dump(spec), budget, seed))


def specialization(spec):
    """The specialization order as a poset dict."""
    return json.loads(_core.specialization(_dump(spec)))


def leq(spec, a, b):
    return _core.leq(_dump(spec), a, b)


def prec(spec, a, b):
    return _core.prec(_dump(spec), a, b)


def dplus(spec, a, b):
    return _core.dplus(_dump(spec), a, b)


def way_below(spec, a, b, depth=DEFAULT_REFUTER_DEPTH):
    """Verdict dict with "status" one of "holds", "refuted", "unknown"."""
    return json.loads(_core.way_below(_dump(spec), a, b, depth))


def replay_way_below(spec, a, b, witness):
    """None if the witness refutes a << b, else the reason it does not."""
    return _core.replay_way_below(_dump(spec), a, b, _dump(witness))


def standardness_probe(spec, family, sup, shift, depth=DEFAULT_REFUTER_DEPTH):
    return json.loads(_core.standardness_probe(_dump(spec), _dump(family), sup, str(shift), depth))


def v_relation(spec, x, y):
    return _core.v_relation(_dump(spec), x, y)


def center_points(spec):
    return _core.center_points(_dump(spec))


def smyth_probe(spec, budget=DEFAULT_BUDGET, seed=DEFAULT_SEED):
    return json.loads(_core.smyth_probe(_dump(spec), budget, seed))


def hat_membership(spec, ball, open_set):
    return _core.hat_membership(_dump(spec), ball, list(open_set))


def thinning(spec, open_set, radius):
    return _core.thinning(_dump(spec), list(open_set), str(radius))


def dist_to_complement(spec, open_set):
    """Mapping point -> distance to the complement of the open set."""
    return _core.dist_to_complement(_dump(spec), list(open_set))


def envelope(spec, function, alpha):
    return _core.envelope(_dump(spec), _dump(function), str(alpha))


def is_lipschitz(spec, function, alpha):
    return _core.is_lipschitz(_dump(spec), _dump(function), str(alpha))


def lipschitz_threshold(spec, function):
    return _core.lipschitz_threshold(_dump(spec), _dump(function))


def ideal_completion(poset):
    return json.loads(_core.ideal_completion(_dump(poset)))


def rounded_ideal_completion(basis):
    return json.loads(_core.rounded_ideal_completion(_dump(basis)))


def way_below_finite(poset, a, b):
    return _core.way_below_finite(_dump(poset), a, b)


def export_dot(poset):
    return _core.export_dot(_dump(poset))


def quasi_ideal_model(spec, depth=DEFAULT_MODEL_DEPTH, factor="2"):
    """Dict with the model poset and its check report."""
    return json.loads(_core.quasi_ideal_model(_dump(spec), depth, str(factor)))


def model_dot(spec, depth=DEFAULT_MODEL_DEPTH):
    return _core.model_dot(_dump(spec), depth)


def choquet(poset, depth=4, plays=None, seed=DEFAULT_SEED):
    """Exhaustive play when plays is None, else seeded random plays."""
    return json.loads(_core.choquet(_dump(poset), depth, plays, seed))
