"""Kernels, cokernels, normal maps and homological lemmas in small concrete categories."""

__version__ = "0.1.0"

from .cmon import CMon, CMonoid
from .core import Category, Morphism, Subobject
from .errors import (ExactaError, MalformedInput, NoImage, NonNormalVertical, NotEpic, NotExact, NotMonic,
                     NotNormal, PreconditionError, ResourceLimit, Unsupported)
from .fgab import AbGroup, FinAb
from .fingrp import FinGroup, FinGrp
from .setpt import PointedSet, SetPt

__all__ = [
    "AbGroup", "CMon", "CMonoid", "Category", "ExactaError", "FinAb", "FinGroup", "FinGrp", "MalformedInput",
    "Morphism", "NoImage", "NonNormalVertical", "NotEpic", "NotExact", "NotMonic", "NotNormal", "PointedSet",
    "PreconditionError", "ResourceLimit", "SetPt", "Subobject", "Unsupported",
]
