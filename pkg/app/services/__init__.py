"""
Service layer - Algebra, verification and the workbench facade
"""
from app.services.dupdend_service import DupDendService
from app.services.hopf_service import HopfService
from app.services.theta_service import ThetaService
from app.services.workbench_service import WorkbenchService

__all__ = ["DupDendService", "HopfService", "ThetaService", "WorkbenchService"]
