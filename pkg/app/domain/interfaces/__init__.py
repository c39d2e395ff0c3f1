"""
Algebra and repository interfaces (Protocols) - Dependency Inversion Principle
"""
from app.domain.interfaces.algebra import DupDendCarrierProtocol, HopfAlgebraProtocol
from app.domain.interfaces.basis_repository import BasisRepositoryProtocol

__all__ = ["DupDendCarrierProtocol", "HopfAlgebraProtocol", "BasisRepositoryProtocol"]
