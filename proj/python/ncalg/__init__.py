"""Normal forms and verification for the Racah and Bannai-Ito algebras."""

import json

from ._ncalg import (
    NotInCentralizerImage,
    ParseError,
    apply_map,
    casimir_express,
    is_filtration,
    leading_form,
    reduce,
)
from . import _ncalg

__all__ = [
    "NotInCentralizerImage",
    "ParseError",
    "apply_map",
    "casimir_express",
    "confluence",
    "criteria",
    "identities",
    "is_filtration",
    "leading_form",
    "reduce",
    "zeta_rank",
]


def confluence(algebra):
    """Termination and overlap report for a built-in name or system file."""
    return json.loads(_ncalg._confluence(algebra))


def zeta_rank(max_weight=40):
    return json.loads(_ncalg._zeta_rank(max_weight))


def identities():
    return json.loads(_ncalg._identities())


def criteria(ids=()):
    return json.loads(_ncalg._criteria(list(ids)))
