"""Exact linear algebra over Z_D for arbitrary modulus D >= 2 (composite allowed).

The workhorse is the Howell normal form: the unique canonical representative
of a row space over Z_D.  Unlike plain row echelon over a field, the Howell
form stays canonical for composite moduli, which makes row-span membership,
span order and kernel computations exact.  Conventions:

* entries are stored as least nonnegative residues and reduced eagerly;
* all spans are *row* spans; a kernel means ``{x : x @ M == 0 (mod D)}``.
"""

from __future__ import annotations

from math import gcd
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "ZModMatrix",
    "howell_form",
    "span_membership",
    "span_order",
    "kernel_basis",
    "solve_left",
    "coset_minimum",
]


class ZModMatrix:
    """A rectangular matrix with entries in Z_D (least nonnegative residues)."""

    __slots__ = ("modulus", "array")

    def __init__(self, modulus: int, array) -> None:
        if modulus < 2:
            raise ValueError(f"modulus must be >= 2, got {modulus}")
        arr = np.asarray(array, dtype=np.int64)
        if arr.ndim != 2:
            raise ValueError(f"expected a 2-D array, got ndim={arr.ndim}")
        if arr.size and (arr.min() < 0 or arr.max() >= modulus):
            raise ValueError(f"entries must lie in [0, {modulus})")
        self.modulus = int(modulus)
        self.array = arr

    @classmethod
    def from_rows(cls, modulus: int, rows: Iterable[Sequence[int]], cols: int | None = None) -> "ZModMatrix":
        rows = [list(r) for r in rows]
        if not rows:
            if cols is None:
                raise ValueError("cols is required for an empty row list")
            return cls(modulus, np.zeros((0, cols), dtype=np.int64))
        arr = np.array(rows, dtype=np.int64) % modulus
        return cls(modulus, arr)

    @classmethod
    def zeros(cls, modulus: int, rows: int, cols: int) -> "ZModMatrix":
        return cls(modulus, np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def identity(cls, modulus: int, n: int) -> "ZModMatrix":
        return cls(modulus, np.eye(n, dtype=np.int64))

    @property
    def num_rows(self) -> int:
        return self.array.shape[0]

    @property
    def num_cols(self) -> int:
        return self.array.shape[1]

    def row(self, i: int) -> np.ndarray:
        return self.array[i]

    def transpose(self) -> "ZModMatrix":
        return ZModMatrix(self.modulus, self.array.T.copy())

    def to_lists(self) -> list[list[int]]:
        return [[int(e) for e in row] for row in self.array]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ZModMatrix):
            return NotImplemented
        return (
            self.modulus == other.modulus
            and self.array.shape == other.array.shape
            and bool(np.array_equal(self.array, other.array))
        )

    def __hash__(self) -> int:
        return hash((self.modulus, self.array.shape, self.array.tobytes()))

    def __repr__(self) -> str:
        return f"ZModMatrix(mod {self.modulus}, {self.num_rows}x{self.num_cols})"


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, s, t) with s*a + t*b == g == gcd(a, b)."""
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    if g < 0:
        x, y, g = -x, -y, -g
    return g, x, y


def _div_mod(b: int, a: int, n: int) -> int:
    """Return some t with t*a == b (mod n); requires gcd(a, n) | b."""
    g, s, _ = _xgcd(a, n)
    if b % g:
        raise ValueError(f"{a} does not divide {b} modulo {n}")
    return (s * (b // g)) % (n // g)

def _coprime_part(n: int, m: int) -> int:
    """Largest divisor of n coprime to m."""
    while (g := gcd(n, m)) > 1:
        n //= g
    return n


def _unit_for_pivot(a: int, n: int) -> int:
    """A unit u mod n with (u * a) % n == gcd(a, n)."""
    d = gcd(a, n)
    a1, n1 = a // d, n // d
    if n1 == 1:
        return 1
    s0 = pow(a1, -1, n1)
    m2 = _coprime_part(n, n1)
    # CRT: u == s0 (mod n1), u == 1 (mod m2); every prime of n divides n1 or m2.
    g, p, q = _xgcd(n1, m2)
    assert g == 1
    u = (s0 * q * m2 + 1 * p * n1) % (n1 * m2)
    return u % n


def _echelon_insert(basis: dict[int, np.ndarray], v: np.ndarray, n: int) -> None:
    """Fold v into an echelon basis keyed by pivot column (destructive)."""
    while True:
        nz = np.nonzero(v)[0]
        if nz.size == 0:
            return
        j = int(nz[0])
        if j not in basis:
            basis[j] = v
            return
        row = basis[j]
        a = int(row[j])
        b = int(v[j])
        if b % gcd(a, n) == 0:
            t = _div_mod(b, a, n)
            v = (v - t * row) % n
        else:
            g, s, t = _xgcd(a, b)
            combined = (s * row + t * v) % n
            v = ((a // g) * v - (b // g) * row) % n
            basis[j] = combined


def _howell_basis(array: np.ndarray, n: int) -> dict[int, np.ndarray]:
    """Howell basis {pivot column: row} of the row span of ``array`` mod n."""
    ncols = array.shape[1]
    basis: dict[int, np.ndarray] = {}
    for r in array:
        _echelon_insert(basis, r % n, n)
    # Howell property: fold in the annihilator multiple of every pivot row.
    # Inserted rows only touch columns to the right, so one sweep suffices.
    for j in range(ncols):
        if j not in basis:
            continue
        a = int(basis[j][j])
        u = n // gcd(a, n)
        if u != 1:
            w = (u * basis[j]) % n
            if w.any():
                _echelon_insert(basis, w, n)
    # Canonical pivots: unit-scale so each pivot equals gcd(pivot, n).
    for j in basis:
        a = int(basis[j][j])
        d = gcd(a, n)
        if a != d:
            basis[j] = (basis[j] * _unit_for_pivot(a, n)) % n
    # Reduce entries above each pivot into [0, pivot).
    cols = sorted(basis)
    for idx, j in enumerate(cols):
        piv = int(basis[j][j])
        for j2 in cols[:idx]:
            q = int(basis[j2][j]) // piv
            if q:
                basis[j2] = (basis[j2] - q * basis[j]) % n
    return basis


def howell_form(m: ZModMatrix) -> ZModMatrix:
    """The unique Howell canonical form with the same row span as ``m``.

    The result is in echelon form with strictly increasing pivot columns,
    every pivot divides the modulus, entries above a pivot are reduced
    modulo it, and the span of the rows starting at any column equals the
    set of span elements supported from that column on.
    """
    basis = _howell_basis(m.array, m.modulus)
    if not basis:
        return ZModMatrix(m.modulus, np.zeros((0, m.num_cols), dtype=np.int64))
    rows = np.stack([basis[j] for j in sorted(basis)])
    return ZModMatrix(m.modulus, rows)


def _reduce_against(basis: dict[int, np.ndarray], v: np.ndarray, n: int, limit: int | None = None) -> np.ndarray | None:
    """Reduce v against a Howell basis; None if some leading entry is stuck.

    Only pivot columns < ``limit`` are used (all columns when None).
    """
    v = v % n
    while True:
        nz = np.nonzero(v if limit is None else v[:limit])[0]
        if nz.size == 0:
            return v
        j = int(nz[0])
        row = basis.get(j)
        if row is None:
            return None
        a = int(row[j])
        if int(v[j]) % gcd(a, n):
            return None
        t = _div_mod(int(v[j]), a, n)
        v = (v - t * row) % n


def span_membership(m: ZModMatrix, v: Sequence[int]) -> bool:
    """True iff v lies in the row span of m over Z_D."""
    vec = np.asarray(v, dtype=np.int64)
    if vec.ndim != 1 or vec.shape[0] != m.num_cols:
        raise ValueError(f"vector length {vec.shape} does not match {m.num_cols} columns")
    basis = _howell_basis(m.array, m.modulus)
    reduced = _reduce_against(basis, vec, m.modulus)
    return reduced is not None and not reduced.any()


def span_order(m: ZModMatrix) -> int:
    """Number of distinct vectors in the row span of m over Z_D.

    From the Howell form this is the product over pivot rows of D / pivot:
    row i contributes one factor because its pivot generates a cyclic module
    of that order and the Howell property removes double counting.
    """
    basis = _howell_basis(m.array, m.modulus)
    order = 1
    for j, row in basis.items():
        order *= m.modulus // int(row[j])
    return order


def kernel_basis(m: ZModMatrix) -> ZModMatrix:
    """Howell basis K of the left kernel {x : x @ M == 0 (mod D)}.

    Computed from the Howell form of [M | I]: rows whose M-part vanished
    record, in their I-part, the coefficient vectors that witness it.
    """
    n = m.modulus
    r, c = m.array.shape
    aug = np.hstack([m.array, np.eye(r, dtype=np.int64)])
    basis = _howell_basis(aug, n)
    kernel_rows = [row[c:] for j, row in sorted(basis.items()) if j >= c]
    if not kernel_rows:
        return ZModMatrix(n, np.zeros((0, r), dtype=np.int64))
    return ZModMatrix(n, np.stack(kernel_rows))


def solve_left(m: ZModMatrix, v: Sequence[int]) -> np.ndarray | None:
    """Some x with x @ M == v (mod D), or None when v is outside the span."""
    n = m.modulus
    r, c = m.array.shape
    vec = np.asarray(v, dtype=np.int64) % n
    if vec.shape != (c,):
        raise ValueError(f"vector length {vec.shape} does not match {c} columns")
    aug = np.hstack([m.array, np.eye(r, dtype=np.int64)])
    basis = _howell_basis(aug, n)
    front = {j: row for j, row in basis.items() if j < c}
    w = _reduce_against(front, np.concatenate([vec, np.zeros(r, dtype=np.int64)]), n, limit=c)
    if w is None or w[:c].any():
        return None
    return (-w[c:]) % n


def coset_minimum(m: ZModMatrix, v: Sequence[int]) -> np.ndarray:
    """Lexicographically smallest element of ``v + rowspan(M)``.

    Greedy left-to-right: at each pivot column the residual freedom is
    exactly the ideal generated by the pivot, so reducing the entry into
    [0, pivot) is optimal and never disturbs finished columns.
    """
    n = m.modulus
    vec = np.asarray(v, dtype=np.int64) % n
    if vec.shape != (m.num_cols,):
        raise ValueError(f"vector length {vec.shape} does not match {m.num_cols} columns")
    basis = _howell_basis(m.array, n)
    w = vec.copy()
    for j in sorted(basis):
        piv = int(basis[j][j])
        q = int(w[j]) // piv
        if q:
            w = (w - q * basis[j]) % n
    return w
