"""
流形基类与注册机制

沿用插件式设计：
- Manifold: 所有闭定向流形表达式的抽象基类
- register_manifold: 装饰器，把原子流形族按 DSL 关键字注册
- cohomology_ring: 带缓存的上同调环计算入口

添加新的流形族只需3步：
1. 在 catalog/ 下创建新文件，定义继承 Manifold 的不可变 dataclass
2. 使用 @register_manifold 装饰器并设置 keyword
3. 实现 dimension、ring() 和 from_argument()
"""

import logging
from abc import ABC, abstractmethod
from functools import lru_cache
from typing import ClassVar, Dict, List, Optional, Type

from algebra import CoefficientRing, GradedRing

logger = logging.getLogger(__name__)


class Manifold(ABC):
    """
    闭定向流形表达式

    Class Attributes:
        keyword: DSL 关键字（原子流形族才有，例如 "L"）
        description: 描述
        signature: 参数说明，例如 "L(k), k >= 1"

    子类都是 frozen dataclass，因此可哈希、可作为缓存键，
    并且结构相等即表示同一个流形表达式。
    """

    keyword: ClassVar[str] = ""
    description: ClassVar[str] = ""
    signature: ClassVar[str] = ""

    @property
    @abstractmethod
    def dimension(self) -> int:
        """流形维数"""

    @abstractmethod
    def ring(self, r: CoefficientRing) -> GradedRing:
        """
        计算约化上同调环（不缓存，请使用 cohomology_ring）

        Args:
            r: 系数环
        """

    @property
    def is_sphere(self) -> bool:
        """是否为连通和的单位元 S^n"""
        return False

    @classmethod
    def from_argument(cls, value: int) -> "Manifold":
        """由 DSL 中的整数参数构造（并规范化）"""
        raise NotImplementedError(f"{cls.__name__} has no DSL constructor")

    def sort_key(self) -> str:
        return str(self)


# ========== 流形族注册机制 ==========

# 全局注册表
_registry: Dict[str, Type[Manifold]] = {}


def register_manifold(cls: Type[Manifold]) -> Type[Manifold]:
    """
    装饰器：按 DSL 关键字注册原子流形族

    Example:
        @register_manifold
        @dataclass(frozen=True)
        class Sphere(Manifold):
            keyword = "S"
            ...
    """
    if not issubclass(cls, Manifold):
        raise TypeError(f"{cls.__name__} must inherit from Manifold")
    if not cls.keyword:
        raise TypeError(f"{cls.__name__} needs a DSL keyword")
    _registry[cls.keyword] = cls
    return cls


def get_all_manifolds() -> Dict[str, Type[Manifold]]:
    """获取所有已注册的流形族"""
    return _registry.copy()


def get_manifold(keyword: str) -> Optional[Type[Manifold]]:
    """根据 DSL 关键字获取流形族"""
    return _registry.get(keyword)


def list_manifolds() -> List[dict]:
    """列出所有流形族的信息"""
    return [
        {
            "keyword": cls.keyword,
            "description": cls.description,
            "signature": cls.signature,
        }
        for cls in sorted(_registry.values(), key=lambda c: c.keyword)
    ]


def dimension(m: Manifold) -> int:
    return m.dimension


@lru_cache(maxsize=1024)
def cohomology_ring(m: Manifold, r: CoefficientRing) -> GradedRing:
    """
    计算（并缓存）闭流形的约化上同调环

    Args:
        m: 流形表达式
        r: 系数环

    Returns:
        GradedRing
    """
    logger.debug("computing H*(%s; %s)", m, r)
    return m.ring(r)
