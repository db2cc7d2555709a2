"""Parameter records for core-satellite graph families.

A core-satellite graph joins a core clique on ``core`` nodes to
``satellite_count`` disjoint copies of a clique on ``satellite_size``
nodes.  The generalized family allows several satellite classes with
distinct clique sizes.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .exceptions import InvalidParameterError

__all__ = [
    "CoreSatelliteParams",
    "SatelliteClass",
    "GeneralizedParams",
]


@dataclass(frozen=True)
class CoreSatelliteParams:
    """Parameters (c, s, eta) of a single-class core-satellite graph."""

    core: int
    satellite_size: int
    satellite_count: int

    def __post_init__(self) -> None:
        for name in ("core", "satellite_size", "satellite_count"):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool):
                raise InvalidParameterError(f"{name} must be an int, got {value!r}")
            if value < 1:
                raise InvalidParameterError(f"{name} must be >= 1, got {value}")

    @property
    def n(self) -> int:
        """Number of nodes, core + satellite_count * satellite_size."""
        return self.core + self.satellite_count * self.satellite_size

    @property
    def m(self) -> int:
        """Number of edges: eta * C(c+s, 2) - (eta-1) * C(c, 2)."""
        c, s, eta = self.core, self.satellite_size, self.satellite_count
        return eta * math.comb(c + s, 2) - (eta - 1) * math.comb(c, 2)

    def to_generalized(self) -> "GeneralizedParams":
        return GeneralizedParams(
            self.core, ((self.satellite_size, self.satellite_count),)
        )


@dataclass(frozen=True)
class SatelliteClass:
    """One satellite class: ``count`` disjoint cliques of ``size`` nodes."""

    size: int
    count: int

    def __post_init__(self) -> None:
        for name in ("size", "count"):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool):
                raise InvalidParameterError(f"{name} must be an int, got {value!r}")
            if value < 1:
                raise InvalidParameterError(f"{name} must be >= 1, got {value}")


@dataclass(frozen=True)
class GeneralizedParams:
    """Parameters of a generalized core-satellite graph.

    ``classes`` is canonicalized on construction: classes sharing a clique
    size are merged by summing their counts, and the result is stored
    sorted by ascending size.  All downstream node ordering and spectrum
    assembly rely on this canonical form.
    """

    core: int
    classes: tuple[SatelliteClass, ...]

    def __init__(self, core: int, classes) -> None:
        if not isinstance(core, int) or isinstance(core, bool):
            raise InvalidParameterError(f"core must be an int, got {core!r}")
        if core < 1:
            raise InvalidParameterError(f"core must be >= 1, got {core}")
        merged: dict[int, int] = {}
        for entry in classes:
            if isinstance(entry, SatelliteClass):
                size, count = entry.size, entry.count
            else:
                size, count = entry
            cls = SatelliteClass(size, count)  # validates
            merged[cls.size] = merged.get(cls.size, 0) + cls.count
        if not merged:
            raise InvalidParameterError("at least one satellite class is required")
        canonical = tuple(
            SatelliteClass(size, merged[size]) for size in sorted(merged)
        )
        object.__setattr__(self, "core", core)
        object.__setattr__(self, "classes", canonical)

    @property
    def class_count(self) -> int:
        return len(self.classes)

    @property
    def satellite_total(self) -> int:
        """Total number of satellite cliques across all classes."""
        return sum(cls.count for cls in self.classes)

    @property
    def satellite_nodes(self) -> int:
        return sum(cls.size * cls.count for cls in self.classes)

    @property
    def n(self) -> int:
        return self.core + self.satellite_nodes

    @property
    def m(self) -> int:
        """Core clique edges plus, per class, clique and core-link edges."""
        edges = math.comb(self.core, 2)
        for cls in self.classes:
            edges += cls.count * (math.comb(cls.size, 2) + self.core * cls.size)
        return edges

    def to_core_satellite(self) -> CoreSatelliteParams:
        """Single-class parameters; error if more than one class."""
        if len(self.classes) != 1:
            raise InvalidParameterError(
                "only single-class parameters convert to CoreSatelliteParams"
            )
        cls = self.classes[0]
        return CoreSatelliteParams(self.core, cls.size, cls.count)
