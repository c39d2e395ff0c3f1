"""
Algebra and carrier registry
app/services/registry.py
"""
from typing import Any, Dict, Optional

from app.core.exceptions import InvalidInputError
from app.domain.entities.forest import GradedAlphabet
from app.domain.interfaces.basis_repository import BasisRepositoryProtocol
from app.repositories.basis_repository import basis_repository
from app.services.forest_algebras import ConnesKreimerAlgebra, HeapOrderedAlgebra, OrderedAlgebra, PlanarAlgebra
from app.services.word_algebras import FQSymAlgebra, PQSymAlgebra

ALGEBRA_NAMES = ("ck", "hp", "ho", "hho", "pqsym", "pqsym-cop", "fqsym", "fqsym-cop")
CARRIER_NAMES = ("hp", "ho", "hho", "pqsym", "fqsym")

# verify/iso 의 짧은 이름은 co-opposite 쪽 (분할이 정의된 쪽) 을 뜻한다
_CARRIER_ALIASES: Dict[str, str] = {
    "pqsym": "pqsym-cop",
    "fqsym": "fqsym-cop",
    "pqsym-cop": "pqsym-cop",
    "fqsym-cop": "fqsym-cop",
    "hp": "hp",
    "ho": "ho",
    "hho": "hho",
}


def algebra_for(
        name: str,
        alphabet: Optional[GradedAlphabet] = None,
        repository: Optional[BasisRepositoryProtocol] = None
) -> Any:
    """
    이름으로 Hopf 대수 생성

    Raises:
        InvalidInputError: 알 수 없는 이름 또는 평면 대수 외의 알파벳
    """
    repo = repository or basis_repository
    if alphabet is not None and name != "hp":
        raise InvalidInputError(f"an alphabet only applies to hp, not {name}")
    if name == "ck":
        return ConnesKreimerAlgebra(repo)
    if name == "hp":
        return PlanarAlgebra(alphabet, repo)
    if name == "ho":
        return OrderedAlgebra(repo)
    if name == "hho":
        return HeapOrderedAlgebra(repo)
    if name in ("pqsym", "pqsym-cop"):
        return PQSymAlgebra(cop=name.endswith("-cop"), repository=repo)
    if name in ("fqsym", "fqsym-cop"):
        return FQSymAlgebra(cop=name.endswith("-cop"), repository=repo)
    raise InvalidInputError(f"unknown algebra {name!r}; expected one of {', '.join(ALGEBRA_NAMES)}")


def carrier_for(
        name: str,
        alphabet: Optional[GradedAlphabet] = None,
        repository: Optional[BasisRepositoryProtocol] = None
) -> Any:
    """Dup-Dend 운반체 (pqsym / fqsym 은 co-opposite 로 해석)"""
    if name not in _CARRIER_ALIASES:
        raise InvalidInputError(f"unknown carrier {name!r}; expected one of {', '.join(CARRIER_NAMES)}")
    return algebra_for(_CARRIER_ALIASES[name], alphabet, repository)
