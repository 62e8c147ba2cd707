"""Spin-chain couplings from the spectral-derivative coefficients, and the
dense nearest-neighbour chain Hamiltonian

    H = sum_j  Jx X_j X_{j+1} + Jy Y_j Y_{j+1} + Jz Z_j Z_{j+1}
             + h/2 (Z_j + Z_{j+1})

with Jx = (m5+m6+m7+m8)/4, Jy = (m5+m6-m7-m8)/4, Jz = (m1-m3+m4-m2)/4 and
h = (m1-m3-m4+m2)/4.  Site 1 is the slowest tensor index.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import SizeLimit

MAX_SITES = 12

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
_ID2 = np.eye(2, dtype=complex)


@dataclass(frozen=True)
class CouplingConstants:
    jx: complex
    jy: complex
    jz: complex
    h: complex

    def to_json(self) -> dict:
        return {k: [v.real, v.imag] for k, v in
                (("jx", self.jx), ("jy", self.jy), ("jz", self.jz),
                 ("h", self.h))}


@dataclass(frozen=True)
class ChainOperator:
    n: int
    periodic: bool
    matrix: np.ndarray

    def hermiticity_defect(self) -> float:
        return float(np.abs(self.matrix - self.matrix.conj().T).max())


def couplings_from_coeffs(m) -> CouplingConstants:
    """The four linear combinations of m1..m8 (array-like of 8)."""
    m = np.asarray(m, dtype=complex)
    if m.shape != (8,):
        raise ValueError("need the eight coefficients m1..m8")
    m1, m2, m3, m4, m5, m6, m7, m8 = m
    return CouplingConstants(
        jx=(m5 + m6 + m7 + m8) / 4,
        jy=(m5 + m6 - m7 - m8) / 4,
        jz=(m1 - m3 + m4 - m2) / 4,
        h=(m1 - m3 - m4 + m2) / 4,
    )


def _site_op(op: np.ndarray, site: int, n: int) -> np.ndarray:
    mats = [op if j == site else _ID2 for j in range(n)]
    out = mats[0]
    for mat in mats[1:]:
        out = np.kron(out, mat)
    return out


def build_chain(c: CouplingConstants, n: int, periodic: bool = False
                ) -> ChainOperator:
    """Dense 2^n x 2^n chain Hamiltonian; Hermitian for real couplings."""
    if not 2 <= n <= MAX_SITES:
        raise SizeLimit(f"site count {n} outside [2, {MAX_SITES}]")
    dim = 2 ** n
    H = np.zeros((dim, dim), dtype=complex)
    bonds = [(j, j + 1) for j in range(n - 1)]
    if periodic:
        bonds.append((n - 1, 0))
    X = [_site_op(SIGMA_X, j, n) for j in range(n)]
    Y = [_site_op(SIGMA_Y, j, n) for j in range(n)]
    Z = [_site_op(SIGMA_Z, j, n) for j in range(n)]
    for (a, b) in bonds:
        H += c.jx * (X[a] @ X[b])
        H += c.jy * (Y[a] @ Y[b])
        H += c.jz * (Z[a] @ Z[b])
        H += 0.5 * c.h * (Z[a] + Z[b])
    return ChainOperator(n=n, periodic=periodic, matrix=H)


def cyclic_shift(n: int) -> np.ndarray:
    """One-site cyclic shift operator on n sites (site 1 slowest index)."""
    dim = 2 ** n
    S = np.zeros((dim, dim), dtype=complex)
    for b in range(dim):
        shifted = ((b << 1) & (dim - 1)) | (b >> (n - 1))
        S[shifted, b] = 1.0
    return S


def ff_relation_check(c: CouplingConstants, m, tol: float = 1e-8) -> dict:
    """Diagnostics for the special free-fermion-in-field corner:
    whether Jx + Jy = h and Jz = 0, and whether m5 = m1 - m3 = -m4 + m2."""
    m = np.asarray(m, dtype=complex)
    m1, m2, m3, m4, m5 = m[0], m[1], m[2], m[3], m[4]
    r_sum = abs(c.jx + c.jy - c.h)
    r_jz = abs(c.jz)
    r_m_a = abs(m5 - (m1 - m3))
    r_m_b = abs(m5 - (-m4 + m2))
    return {
        "jx_plus_jy_equals_h": bool(r_sum <= tol),
        "jz_zero": bool(r_jz <= tol),
        "m5_equals_m1_minus_m3": bool(r_m_a <= tol),
        "m5_equals_m2_minus_m4": bool(r_m_b <= tol),
        "residuals": {
            "jx_plus_jy_minus_h": float(r_sum),
            "jz": float(r_jz),
            "m5_minus_m1_plus_m3": float(r_m_a),
            "m5_plus_m4_minus_m2": float(r_m_b),
        },
    }


def export_matrix(op: ChainOperator, path: str, fmt: str = "npy") -> None:
    """Dense dump; 'npy' binary or 'csv' with re/im column pairs."""
    if fmt == "npy":
        np.save(path, op.matrix)
    elif fmt == "csv":
        dim = op.matrix.shape[0]
        cols = np.empty((dim, 2 * dim))
        cols[:, 0::2] = op.matrix.real
        cols[:, 1::2] = op.matrix.imag
        np.savetxt(path, cols, delimiter=",")
    else:
        raise ValueError(f"unknown export format {fmt!r}")
