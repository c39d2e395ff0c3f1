"""
HTTP surface of the workbench
app/main.py
"""
from fastapi import FastAPI, HTTPException, Request
from fastapi.exception_handlers import http_exception_handler
from fastapi.middleware.cors import CORSMiddleware

from app.api.v1 import algebras, dupdend, forests, series, theta
from app.core.config import settings
from app.core.exceptions import HopfLabError
from app.core.logging import logger
from app.middleware import LoggingMiddleware, RequestIdMiddleware

app = FastAPI(
    title="hopf-lab",
    description="Exact Hopf algebra workbench: forests, words, Θ, Dup-Dend rigidity",
    version=settings.VERSION,
    docs_url=None if settings.ENVIRONMENT == "production" else "/docs",
    redoc_url=None if settings.ENVIRONMENT == "production" else "/redoc"
)

# CORS 설정
app.add_middleware(
    CORSMiddleware,
    allow_origins=settings.cors_origins_list,
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
    expose_headers=["X-Request-ID", "X-Compute-Time"],
)

# 로깅 미들웨어
app.add_middleware(LoggingMiddleware, detailed=settings.is_development)
logger.info("✅ LoggingMiddleware 등록 완료")

# Request ID 미들웨어 (가장 바깥)
app.add_middleware(RequestIdMiddleware)
logger.info("✅ RequestIdMiddleware 등록 완료")

# 라우터 등록
for module in (forests, algebras, theta, dupdend, series):
    app.include_router(module.router, prefix="/api/v1")


@app.exception_handler(HopfLabError)
async def hopf_lab_error_handler(request: Request, exc: HopfLabError):
    """도메인 예외 → HTTPException"""
    request_id = getattr(request.state, "request_id", "no-id")
    logger.warning(f"[{request_id}] ⚠️ {type(exc).__name__}: {exc}")
    return await http_exception_handler(request, HTTPException(status_code=exc.http_status, detail=str(exc)))


@app.on_event("startup")
async def startup_event():
    """앱 시작 시 이벤트"""
    logger.info("=" * 60)
    logger.info(f"🚀 {settings.PROJECT_NAME} {settings.VERSION} 시작")
    logger.info(f"Environment: {settings.ENVIRONMENT}")
    logger.info(f"Log Level: {settings.LOG_LEVEL}")
    logger.info(f"Jobs: {settings.JOBS}")
    logger.info("=" * 60)


@app.on_event("shutdown")
async def shutdown_event():
    """앱 종료 시 이벤트"""
    logger.info(f"🛑 {settings.PROJECT_NAME} 종료")


@app.get("/")
async def root():
    """루트 엔드포인트"""
    return {
        "message": "hopf-lab workbench",
        "docs": "/docs",
        "environment": settings.ENVIRONMENT
    }


@app.get("/health")
async def health_check():
    """헬스 체크"""
    return {"status": "healthy", "version": settings.VERSION}
