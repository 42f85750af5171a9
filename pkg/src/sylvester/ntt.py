"""Exact integer convolution by a number theoretic transform.

Transforms run over the prime field F_q with q = 7 * 2**26 + 1, whose
multiplicative group has 3 as a primitive root, so power-of-two lengths
up to 2**26 are available. Residues stay below 2**29, which keeps every
butterfly product below 2**58 and inside numpy int64.
"""

from __future__ import annotations

import numpy as np

from .errors import InvalidArgumentError, ResourceLimitError
from .log import get_logger

logger = get_logger("NTT")

MODULUS = 469_762_049
PRIMITIVE_ROOT = 3
MAX_LOG_LENGTH = 26


def _bit_reversal(log_n: int) -> np.ndarray:
    idx = np.arange(1 << log_n, dtype=np.int64)
    rev = np.zeros_like(idx)
    for bit in range(log_n):
        rev |= ((idx >> bit) & 1) << (log_n - 1 - bit)
    return rev


def _powers(w: int, count: int) -> np.ndarray:
    """w**0 .. w**(count-1) mod q, by repeated doubling of the table."""
    table = np.ones(1, dtype=np.int64)
    while len(table) < count:
        step = pow(w, len(table), MODULUS)
        table = np.concatenate((table, table * step % MODULUS))
    return table[:count]


def _transform(values: np.ndarray, inverse: bool = False) -> np.ndarray:
    n = len(values)
    log_n = n.bit_length() - 1
    a = values[_bit_reversal(log_n)] % MODULUS

    w = pow(PRIMITIVE_ROOT, (MODULUS - 1) // n, MODULUS)
    if inverse:
        w = pow(w, MODULUS - 2, MODULUS)
    twiddles = _powers(w, max(n // 2, 1))

    length = 2
    while length <= n:
        half = length // 2
        stage_twiddles = twiddles[:: n // length][:half]
        blocks = a.reshape(-1, length)
        u = blocks[:, :half]
        v = blocks[:, half:] * stage_twiddles % MODULUS
        a = np.concatenate(((u + v) % MODULUS, (u - v) % MODULUS), axis=1).reshape(-1)
        length <<= 1

    if inverse:
        a = a * pow(n, MODULUS - 2, MODULUS) % MODULUS
    return a


def _padded_length(out_len: int) -> int:
    length = 1
    while length < out_len:
        length <<= 1
    if length > 1 << MAX_LOG_LENGTH:
        raise ResourceLimitError(
            f"transform length {length} exceeds 2**{MAX_LOG_LENGTH}", "ntt"
        )
    return length


def _check_operands(*arrays: np.ndarray) -> None:
    for array in arrays:
        if len(array) == 0:
            raise InvalidArgumentError("cannot convolve an empty vector", "ntt")
        if array.min() < 0:
            raise InvalidArgumentError("operands must be nonnegative", "ntt")
    bound = min(len(a) for a in arrays)
    for array in arrays:
        bound *= int(array.max())
    if bound >= MODULUS:
        raise ResourceLimitError(
            f"coefficients may reach {bound} >= modulus {MODULUS}; result would wrap",
            "ntt",
        )


def convolve(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Exact linear convolution of two nonnegative integer vectors."""
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    _check_operands(a, b)

    out_len = len(a) + len(b) - 1
    n = _padded_length(out_len)
    fa = _transform(np.pad(a, (0, n - len(a))))
    fb = _transform(np.pad(b, (0, n - len(b))))
    return _transform(fa * fb % MODULUS, inverse=True)[:out_len]


def self_convolve(a: np.ndarray) -> np.ndarray:
    """Exact a * a, transforming the operand once."""
    a = np.asarray(a, dtype=np.int64)
    _check_operands(a, a)

    out_len = 2 * len(a) - 1
    n = _padded_length(out_len)
    logger.info(f"Self-convolution of length {len(a)} via transform size {n}")
    fa = _transform(np.pad(a, (0, n - len(a))))
    return _transform(fa * fa % MODULUS, inverse=True)[:out_len]
