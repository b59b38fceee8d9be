"""Exact computations with twisted associator identities over the group algebra of S3."""

from .algebra import IdentityReport, MultTable, TriTensor, Witness
from .exact_linalg import QMatrix
from .sigma3 import GroupVector, named_vector, parse_vector

__all__ = ["GroupVector", "IdentityReport", "MultTable", "QMatrix", "TriTensor", "Witness",
           "named_vector", "parse_vector"]
