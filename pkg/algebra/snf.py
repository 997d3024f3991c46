"""
Smith 标准形

对任意整数矩阵 M 计算 D = U·M·V，其中 D 为对角矩阵，
对角元非负且满足 d_i | d_{i+1}，U 和 V 在 ℤ 上可逆。
矩阵使用 dtype=object 的 numpy 数组，元素保持 Python 任意精度整数。
"""

from typing import List, Optional, Sequence, Tuple

import numpy as np


def _identity(size: int) -> np.ndarray:
    eye = np.zeros((size, size), dtype=object)
    for i in range(size):
        eye[i, i] = 1
    return eye


def as_integer_matrix(matrix) -> np.ndarray:
    """转换为二维 object 数组，空输入视为 0×0"""
    a = np.array(matrix, dtype=object)
    if a.ndim != 2:
        if a.size == 0:
            return np.zeros((0, 0), dtype=object)
        raise ValueError(f"expected a 2-D integer matrix, got shape {a.shape}")
    return np.vectorize(int, otypes=[object])(a) if a.size else a


class SNF:
    """
    用扩展欧几里得消元计算 Smith 标准形

    每一步在剩余子矩阵中选取绝对值最小的非零元作为主元，
    用整除余数消去主元所在行和列；若子矩阵中仍有元素不能被主元整除，
    把该行加到主元行后重新选主元。主元绝对值严格下降，因此过程终止。

    Example:
        d, u, v = SNF([[2, 0], [0, 3]]).get_smith_normal_form()
        # d == diag(1, 6)
    """

    def __init__(self, matrix):
        self.matrix = as_integer_matrix(matrix).copy()
        rows, cols = self.matrix.shape
        self.left = _identity(rows)
        self.right = _identity(cols)

    @property
    def num_rows(self) -> int:
        return self.matrix.shape[0]

    @property
    def num_columns(self) -> int:
        return self.matrix.shape[1]

    def get_smith_normal_form(self) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        """
        计算 Smith 标准形

        Returns:
            (D, U, V)，满足 D = U·M·V
        """
        for s in range(min(self.num_rows, self.num_columns)):
            if not self._settle_pivot(s):
                break
            if self.matrix[s, s] < 0:
                self._negate_row(s)
        return self.matrix, self.left, self.right

    def _settle_pivot(self, s: int) -> bool:
        """把第 s 个主元化为整除剩余子矩阵的对角元；子矩阵全零时返回 False"""
        a = self.matrix
        while True:
            pivot = _nonzero_min_abs(a, s)
            if pivot is None:
                return False
            self._swap_rows(s, pivot[0])
            self._swap_columns(s, pivot[1])

            clean = True
            for i in range(s + 1, self.num_rows):
                q = a[i, s] // a[s, s]
                if q:
                    self._add_row(i, s, -q)
                if a[i, s] != 0:
                    clean = False
            for j in range(s + 1, self.num_columns):
                q = a[s, j] // a[s, s]
                if q:
                    self._add_column(j, s, -q)
                if a[s, j] != 0:
                    clean = False
            if not clean:
                continue

            row = self._find_non_divisible_row(s)
            if row is None:
                return True
            self._add_row(s, row, 1)

    def _find_non_divisible_row(self, s: int) -> Optional[int]:
        a = self.matrix
        for i in range(s + 1, self.num_rows):
            for j in range(s + 1, self.num_columns):
                if a[i, j] % a[s, s] != 0:
                    return i
        return None

    def _swap_rows(self, i: int, k: int) -> None:
        if i != k:
            self.matrix[[i, k]] = self.matrix[[k, i]]
            self.left[[i, k]] = self.left[[k, i]]

    def _swap_columns(self, j: int, k: int) -> None:
        if j != k:
            self.matrix[:, [j, k]] = self.matrix[:, [k, j]]
            self.right[:, [j, k]] = self.right[:, [k, j]]

    def _negate_row(self, i: int) -> None:
        self.matrix[i] = -self.matrix[i]
        self.left[i] = -self.left[i]

    def _add_row(self, target: int, source: int, k: int) -> None:
        """第 target 行加上 k 倍第 source 行"""
        self.matrix[target] = self.matrix[target] + k * self.matrix[source]
        self.left[target] = self.left[target] + k * self.left[source]

    def _add_column(self, target: int, source: int, k: int) -> None:
        """第 target 列加上 k 倍第 source 列"""
        self.matrix[:, target] = self.matrix[:, target] + k * self.matrix[:, source]
        self.right[:, target] = self.right[:, target] + k * self.right[:, source]


def _nonzero_min_abs(a: np.ndarray, s: int) -> Optional[Tuple[int, int]]:
    """返回 s 之后子矩阵中绝对值最小非零元的位置，全零时返回 None"""
    best = None
    best_value = None
    for i in range(s, a.shape[0]):
        for j in range(s, a.shape[1]):
            value = abs(a[i, j])
            if value and (best_value is None or value < best_value):
                best, best_value = (i, j), value
    return best


def smith_normal_form(matrix) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """便捷函数：返回 (D, U, V)，U·M·V = D"""
    return SNF(matrix).get_smith_normal_form()


def invariant_factors(matrix: Sequence[Sequence[int]]) -> List[int]:
    """返回 Smith 标准形的对角元（含 0）"""
    d, _, _ = smith_normal_form(matrix)
    return [int(d[i, i]) for i in range(min(d.shape))]
