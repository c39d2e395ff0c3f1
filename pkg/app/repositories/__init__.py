"""
Repository layer - In-process caches
"""
from app.repositories.basis_repository import BasisRepository, basis_repository

__all__ = ["BasisRepository", "basis_repository"]
