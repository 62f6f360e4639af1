"""Exact verification of the q-deformed Virasoro construction and a qKdV simulator."""

from .qscalar import EXACT, NumericField, QExact, qangle, qgamma, qint
from .qseries import LaurentPoly, monomial

__all__ = ["EXACT", "NumericField", "QExact", "LaurentPoly", "monomial",
           "qint", "qangle", "qgamma"]
