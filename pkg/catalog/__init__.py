"""
流形目录模块

自动发现并导入所有流形族，实现插件式架构。
catalog/ 下新增的流形族文件在导入本包时被加载并注册，无需在这里手动导入；
下面按名字导出的只是其他模块直接构造的几个流形族。
"""

import importlib
import logging
import pkgutil
from pathlib import Path
from typing import List

from .base import (
    Manifold,
    cohomology_ring,
    dimension,
    get_all_manifolds,
    get_manifold,
    list_manifolds,
    register_manifold,
)

logger = logging.getLogger(__name__)


def discover_manifolds(package_dir: Path, package: str) -> List[str]:
    """
    导入 package_dir 下的所有流形族模块，由 @register_manifold 完成注册

    Args:
        package_dir: 包目录
        package: 包名（可导入）

    Returns:
        成功导入的模块名
    """
    loaded = []
    for module_info in pkgutil.iter_modules([str(package_dir)]):
        if module_info.name.startswith("_") or module_info.name == "base":
            continue
        try:
            importlib.import_module(f".{module_info.name}", package=package)
        except ImportError as e:
            logger.warning("无法加载流形模块 %s: %s", module_info.name, e)
            continue
        loaded.append(module_info.name)
    return loaded


# 自动发现所有流形族
discover_manifolds(Path(__file__).parent, __name__)

from .compound import ConnSum, Product, connected_sum, product  # noqa: E402
from .lens import Lens  # noqa: E402
from .sphere import HomologySphere, Sphere  # noqa: E402
from .surface import Surface  # noqa: E402
from .torus import Torus  # noqa: E402

# 导出公共接口
__all__ = [
    "Manifold",
    "cohomology_ring",
    "dimension",
    "discover_manifolds",
    "get_all_manifolds",
    "get_manifold",
    "list_manifolds",
    "register_manifold",
    "ConnSum",
    "Product",
    "connected_sum",
    "product",
    "Lens",
    "HomologySphere",
    "Sphere",
    "Surface",
    "Torus",
]
