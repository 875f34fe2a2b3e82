"""Crossed-product orders over unramified valuation rings.

Decides, from the values of a normalized 2-cocycle at the maximal ideals
of S, whether A_f is semihereditary, primary, a valuation ring of the
crossed-product algebra, or Azumaya, with independent cross-checks.
"""

from .classify import ClassificationReport, classify
from .cocycle import Cocycle, twist
from .errors import Contradiction, InputError, Violation
from .numberfield import NumberField, verify_galois
from .profile import ValuationProfile, ValuationTable
from .splitting import PrimeSplitting
from .valuegroup import Value, ValueGroup

__version__ = "0.1.0"

__all__ = [
    "ClassificationReport",
    "Cocycle",
    "Contradiction",
    "InputError",
    "NumberField",
    "PrimeSplitting",
    "ValuationProfile",
    "ValuationTable",
    "Value",
    "ValueGroup",
    "Violation",
    "classify",
    "twist",
    "verify_galois",
]
