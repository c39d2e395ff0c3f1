"""
Domain entities - Immutable algebraic objects
"""
from app.domain.entities.forest import OrderedForest, PlanarForest, RootedForest
from app.domain.entities.linear import GradedMap, LinComb
from app.domain.entities.series import PowerSeries
from app.domain.entities.word import ParkingWord

__all__ = ["GradedMap", "LinComb", "OrderedForest", "ParkingWord", "PlanarForest", "PowerSeries", "RootedForest"]
