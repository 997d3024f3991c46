"""
配置管理模块
从环境变量加载配置，提供默认值
"""

import os
from pathlib import Path
from dotenv import load_dotenv

# 加载 .env 文件
load_dotenv()

# 项目根目录
BASE_DIR = Path(__file__).parent

# ========== 截断深度配置 ==========
DEFAULT_DEPTH = os.getenv("ENDSUM_DEFAULT_DEPTH", "8")
MAX_DEPTH = os.getenv("ENDSUM_MAX_DEPTH", "64")

# ========== 输出配置 ==========
OUTPUT_FORMAT = os.getenv("ENDSUM_OUTPUT_FORMAT", "human")
OUTPUT_FORMATS = ("human", "structured")
TEMPLATE_DIR = Path(os.getenv("ENDSUM_TEMPLATE_DIR", str(BASE_DIR / "templates")))

# ========== 其他配置 ==========
LOG_LEVEL = os.getenv("ENDSUM_LOG_LEVEL", "WARNING").upper()
CENSUS_PARALLEL = os.getenv("ENDSUM_CENSUS_PARALLEL", "1") not in ("0", "false", "no")


def _as_int(value: str) -> int | None:
    try:
        return int(value)
    except (TypeError, ValueError):
        return None


def default_depth() -> int:
    return _as_int(DEFAULT_DEPTH) or 8


def max_depth() -> int:
    return _as_int(MAX_DEPTH) or 64


def validate_config() -> list[str]:
    """验证配置完整性，返回问题列表"""
    problems = []
    depth = _as_int(DEFAULT_DEPTH)
    ceiling = _as_int(MAX_DEPTH)
    if depth is None or depth < 1:
        problems.append(f"ENDSUM_DEFAULT_DEPTH 必须是正整数: {DEFAULT_DEPTH!r}")
    if ceiling is None or ceiling < 1:
        problems.append(f"ENDSUM_MAX_DEPTH 必须是正整数: {MAX_DEPTH!r}")
    if depth is not None and ceiling is not None and ceiling < depth:
        problems.append("ENDSUM_MAX_DEPTH 不能小于 ENDSUM_DEFAULT_DEPTH")
    if OUTPUT_FORMAT not in OUTPUT_FORMATS:
        problems.append(f"ENDSUM_OUTPUT_FORMAT 未知: {OUTPUT_FORMAT!r}")
    return problems
