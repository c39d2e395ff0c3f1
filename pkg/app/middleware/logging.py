"""
Request logging middleware
app/middleware/logging.py
"""
import time
import logging
from fastapi import Request
from starlette.middleware.base import BaseHTTPMiddleware
from starlette.types import ASGIApp

logger = logging.getLogger("hopf_lab")


class LoggingMiddleware(BaseHTTPMiddleware):
    """요청/응답 로깅 + 계산 시간 헤더"""

    def __init__(self, app: ASGIApp, detailed: bool = False):
        super().__init__(app)
        self.detailed = detailed
        logger.info(f"🔧 LoggingMiddleware 초기화 (detailed={detailed})")

    async def dispatch(self, request: Request, call_next):
        start_time = time.perf_counter()

        # RequestIdMiddleware 가 먼저 설정
        request_id = getattr(request.state, "request_id", "no-id")
        method = request.method
        path = request.url.path

        logger.info(f"[{request_id}] → {method} {path}")
        if self.detailed and request.query_params:
            logger.debug(f"[{request_id}] Query: {dict(request.query_params)}")

        try:
            response = await call_next(request)
        except Exception as e:
            compute_time = time.perf_counter() - start_time
            logger.error(
                f"[{request_id}] ✗ {method} {path} - Error: {str(e)} - Duration: {compute_time:.3f}s",
                exc_info=True
            )
            raise

        compute_time = time.perf_counter() - start_time
        logger.info(
            f"[{request_id}] ← {method} {path} - Status: {response.status_code} - Duration: {compute_time:.3f}s"
        )
        response.headers["X-Compute-Time"] = f"{compute_time:.6f}"
        return response
