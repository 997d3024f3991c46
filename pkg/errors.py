"""
异常层次

所有核心模块抛出的异常都继承 EndsumError（它本身是 ValueError），
只有 main.py 负责把异常转换为终端诊断信息和非零退出码。
"""

from typing import Iterable, Optional


class EndsumError(ValueError):
    """所有 endsum 异常的基类"""


class CoefficientRingError(EndsumError):
    """系数环非法（非素数特征）或两个对象的系数环不一致"""


class UnsupportedCaseError(EndsumError):
    """超出实现范围的情形，例如两个因子都带挠的整系数张量积"""


class RingAxiomError(EndsumError):
    """乘法表违反双线性、分次交换、结合律或零化子相容性"""


class DimensionMismatchError(EndsumError):
    """
    维数不匹配

    Attributes:
        left: 左侧维数
        right: 右侧维数
    """

    def __init__(self, left: int, right: int, context: str = ""):
        self.left = left
        self.right = right
        prefix = f"{context}: " if context else ""
        super().__init__(f"{prefix}dimension mismatch ({left} vs {right})")


class NodeSelectionError(EndsumError):
    """节点编号不存在，或按标签选择节点时没有/有多个匹配"""


class IncomparableError(EndsumError):
    """两个不变量摘要的维数不同，无法比较"""


class ScenarioError(EndsumError):
    """
    场景文件诊断

    Attributes:
        line: 行号（从 1 开始）
        column: 列号（从 1 开始）
        expected: 期望的记号集合（已排序）
    """

    def __init__(
        self,
        message: str,
        line: int,
        column: int,
        expected: Optional[Iterable[str]] = None,
    ):
        self.message = message
        self.line = line
        self.column = column
        self.expected = tuple(sorted(set(expected or ())))
        text = f"{line}:{column}: {message}"
        if self.expected:
            text += f" (expected one of: {', '.join(self.expected)})"
        super().__init__(text)
