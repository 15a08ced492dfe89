"""Harish-Chandra modules over quantizations of nilpotent orbits: type A
classification, Spin component groups and exceptional orbit data."""
from .partitions import Partition
from .pin_group import component_group
from .typea import OrbitDatumA, QuantizationParameterA, classify, classify_canonical, classify_spin

__all__ = [
    "Partition",
    "component_group",
    "OrbitDatumA",
    "QuantizationParameterA",
    "classify",
    "classify_canonical",
    "classify_spin",
]
