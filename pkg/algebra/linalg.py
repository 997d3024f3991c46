"""
素域 ℤ_p 上的精确线性代数

行化简、秩、零空间、子空间包含与商空间维数。
向量约定为行向量，子空间由基向量按行堆叠给出。
矩阵一律使用 object 数组保存 Python 整数，任意大的素数都不会溢出。
"""

from typing import List, Optional, Sequence, Tuple

import numpy as np

_as_int = np.vectorize(int, otypes=[object])


def zero_matrix(rows: int, cols: int) -> np.ndarray:
    return np.zeros((rows, cols), dtype=object)


def identity_matrix(size: int) -> np.ndarray:
    return np.eye(size, dtype=int).astype(object)


def as_matrix_mod_p(rows, p: int, width: Optional[int] = None) -> np.ndarray:
    """
    转换为 ℤ_p 上的二维整数数组

    Args:
        rows: 行列表或二维数组
        p: 素数
        width: 列数（rows 为空时必须给出）
    """
    a = np.array(rows, dtype=object)
    if a.size == 0:
        cols = width if width is not None else (a.shape[1] if a.ndim == 2 else 0)
        return zero_matrix(0 if a.ndim < 2 else a.shape[0], cols)
    if a.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got shape {a.shape}")
    # np.int64 元素会在乘法中溢出，统一换成 Python int
    return _as_int(a) % p


def row_reduce_mod_p(rows, p: int, width: Optional[int] = None) -> Tuple[np.ndarray, List[int]]:
    """
    化为约化行阶梯形

    Returns:
        (rref, pivots)，pivots 为主元所在列
    """
    a = as_matrix_mod_p(rows, p, width).copy()
    n_rows, n_cols = a.shape
    pivots: List[int] = []
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        nonzero = np.nonzero(a[r:, c])[0]
        if nonzero.size == 0:
            continue
        i = r + int(nonzero[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        a[r] = (a[r] * pow(int(a[r, c]), -1, p)) % p
        for k in range(n_rows):
            if k != r and a[k, c]:
                a[k] = (a[k] - a[k, c] * a[r]) % p
        pivots.append(c)
        r += 1
    return a[:r], pivots


def rank_mod_p(rows, p: int, width: Optional[int] = None) -> int:
    return len(row_reduce_mod_p(rows, p, width)[1])


def nullspace_mod_p(matrix, p: int, width: Optional[int] = None) -> np.ndarray:
    """
    右零空间 {x : M x = 0} 的一组基（按行）

    Args:
        matrix: 形如 (目标维数, 源维数) 的矩阵
        width: 源维数（矩阵没有行时必须给出）
    """
    rref, pivots = row_reduce_mod_p(matrix, p, width)
    n_cols = rref.shape[1]
    free = [c for c in range(n_cols) if c not in pivots]
    basis = zero_matrix(len(free), n_cols)
    for k, f in enumerate(free):
        basis[k, f] = 1
        for row, c in enumerate(pivots):
            basis[k, c] = (-rref[row, f]) % p
    return basis


def stack(blocks: Sequence[np.ndarray], width: int) -> np.ndarray:
    parts = [np.asarray(b, dtype=object).reshape(-1, width) for b in blocks]
    if not parts:
        return zero_matrix(0, width)
    return np.vstack(parts)


def quotient_dimension(vectors, subspace, p: int, width: int) -> int:
    """span(vectors) 在商空间 V / span(subspace) 中的像的维数"""
    both = stack([subspace, vectors], width)
    return rank_mod_p(both, p, width) - rank_mod_p(subspace, p, width)


def contains(subspace, vectors, p: int, width: int) -> bool:
    """判断 span(vectors) ⊆ span(subspace)"""
    return quotient_dimension(vectors, subspace, p, width) == 0


def matmul_mod_p(left, right, p: int) -> np.ndarray:
    return (as_matrix_mod_p(left, p) @ as_matrix_mod_p(right, p)) % p
