"""Support invariants of simple modules in cyclotomic Cherednik category O."""
from .charged_fock import FockParam, GenericKappa
from .partitions import parse, render
from .supports import SupportResult, finite_dims, support, table

__all__ = ["FockParam", "GenericKappa", "SupportResult", "finite_dims",
           "parse", "render", "support", "table"]
__version__ = "0.1.0"
