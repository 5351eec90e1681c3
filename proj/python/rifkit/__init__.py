"""Isolation-forest family anomaly detectors: iForest, EIF, and RIF."""

from ._core import (
    Model,
    auc,
    fit,
    generate,
    label_by_contamination,
    load,
)

__all__ = [
    "Model",
    "auc",
    "fit",
    "generate",
    "label_by_contamination",
    "load",
]
