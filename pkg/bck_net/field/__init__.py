__all__: list[str] = [
    "ArrowField",
    "FieldParams",
    "StoredLattice",
    "derive_seed",
    "mix64",
]

from .arrow_field import ArrowField
from .params import FieldParams
from .stored import StoredLattice
from .variates_mixin import derive_seed, mix64
