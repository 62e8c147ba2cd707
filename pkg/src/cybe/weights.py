"""Eight-vertex weight vectors, their 4x4 matrix realization, and the
residual evaluators for the colored Yang-Baxter identity.

Matrix layout: with basis order (11, 12, 21, 22), the diagonal carries
(a1, a2, a3, a4), the center off-diagonal pair is a5 = R[1,2], a6 = R[2,1],
and the anti-corners are a7 = R[0,3], a8 = R[3,0].  All other entries are
structurally zero.

The matrix identity

    R12(u,xi,eta) R23(u+v,xi,lam) R12(v,eta,lam)
        = R23(v,eta,lam) R12(u+v,xi,lam) R23(u,xi,eta)

with R12 = R (x) E and R23 = E (x) R is, for this layout, equivalent to 28
scalar polynomial equations in the three weight vectors.  They are listed
in COMPONENT_IDS order below: a quartet of pure ratio relations (eq01-eq04)
followed by four sextets (eq05-eq28).  Under the gauge normalization
a2 = a3 = 1, a7 = a8 the quartet is identically zero and the last two
sextets duplicate the first two, leaving the 12 gauge equations.

Tensor index convention: row-major pairing, first factor is the slower
index, so (R (x) E)[(i,a),(j,b)] = R[i,j] * delta[a,b].
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NotGauge

GAUGE_TOL = 1e-10

_E2 = np.eye(2, dtype=complex)
_E4 = np.eye(4, dtype=complex)


@dataclass(frozen=True)
class WeightVector:
    """The eight vertex weights at one evaluation point."""

    a: np.ndarray  # shape (8,), complex128, order a1..a8

    def __post_init__(self):
        arr = np.asarray(self.a, dtype=complex)
        if arr.shape != (8,):
            raise ValueError("weight vector needs exactly eight components")
        if not np.all(np.isfinite(arr.view(float))):
            raise ValueError("weight vector has non-finite components")
        object.__setattr__(self, "a", arr)

    @classmethod
    def of(cls, a1, a2, a3, a4, a5, a6, a7, a8) -> "WeightVector":
        return cls(np.array([a1, a2, a3, a4, a5, a6, a7, a8], dtype=complex))

    def __getitem__(self, i: int) -> complex:
        return complex(self.a[i])

    a1 = property(lambda self: complex(self.a[0]))
    a2 = property(lambda self: complex(self.a[1]))
    a3 = property(lambda self: complex(self.a[2]))
    a4 = property(lambda self: complex(self.a[3]))
    a5 = property(lambda self: complex(self.a[4]))
    a6 = property(lambda self: complex(self.a[5]))
    a7 = property(lambda self: complex(self.a[6]))
    a8 = property(lambda self: complex(self.a[7]))

    def scale(self) -> float:
        return float(np.abs(self.a).max())

    def is_gauge(self, tol: float = GAUGE_TOL) -> bool:
        return bool(abs(self.a[1] - 1) <= tol and abs(self.a[2] - 1) <= tol
                    and abs(self.a[6] - self.a[7]) <= tol)


def to_matrix(w: WeightVector) -> np.ndarray:
    """Realize the weight vector as its 4x4 matrix."""
    a = w.a
    R = np.zeros((4, 4), dtype=complex)
    R[0, 0], R[1, 1], R[2, 2], R[3, 3] = a[0], a[1], a[2], a[3]
    R[1, 2], R[2, 1] = a[4], a[5]
    R[0, 3], R[3, 0] = a[6], a[7]
    return R


def matrix_weights(R: np.ndarray) -> WeightVector:
    """Inverse of to_matrix: read the eight designated entries."""
    R = np.asarray(R, dtype=complex)
    return WeightVector.of(R[0, 0], R[1, 1], R[2, 2], R[3, 3],
                           R[1, 2], R[2, 1], R[0, 3], R[3, 0])


def tensor_embed(R: np.ndarray, slot: int) -> np.ndarray:
    """Embed a 4x4 matrix into the 8-dimensional triple product space.

    slot 12 acts on the first two factors (R (x) E), slot 23 on the last
    two (E (x) R).
    """
    if slot == 12:
        return np.kron(R, _E2)
    if slot == 23:
        return np.kron(_E2, R)
    raise ValueError("slot must be 12 or 23")


COMPONENT_IDS = tuple(f"eq{i:02d}" for i in range(1, 29))

#: ids of the components that survive as the 12 gauge equations
GAUGE_COMPONENT_IDS = COMPONENT_IDS[4:16]


def component_residuals(wu: WeightVector, ww: WeightVector,
                        wv: WeightVector) -> np.ndarray:
    """The 28 scalar equations; zero exactly when the matrix identity holds.

    Argument pattern: wu at (u,xi,eta), ww at (u+v,xi,lam), wv at (v,eta,lam).
    """
    u1, u2, u3, u4, u5, u6, u7, u8 = wu.a
    w1, w2, w3, w4, w5, w6, w7, w8 = ww.a
    v1, v2, v3, v4, v5, v6, v7, v8 = wv.a
    return np.array([
        u7*w3*v8 - u8*w2*v7,
        u7*w8*v3 - u8*w7*v2,
        u2*w3*v2 - u3*w2*v3,
        u2*w8*v7 - u3*w7*v8,

        u1*w5*v2 + u7*w8*v6 - v2*w1*u5 - v5*w2*u3,
        u1*w1*v7 + u7*w3*v4 - v7*w5*u5 - v1*w7*u3,
        u2*w6*v1 + u5*w7*v8 - v6*w1*u2 - v3*w2*u6,
        u1*w2*v1 + u7*w4*v8 - v2*w1*u2 - v5*w2*u6,
        u1*w7*v5 + u7*w6*v3 - v7*w5*u2 - v1*w7*u6,
        u1*w7*v2 + u7*w6*v6 - v1*w1*u7 - v7*w2*u4,

        u4*w6*v2 + u7*w8*v5 - v2*w4*u6 - v6*w2*u3,
        u4*w4*v7 + u7*w3*v1 - v7*w6*u6 - v4*w7*u3,
        u2*w5*v4 + u6*w7*v8 - v5*w4*u2 - v3*w2*u5,
        u4*w2*v4 + u7*w1*v8 - v2*w4*u2 - v6*w2*u5,
        u4*w7*v6 + u7*w5*v3 - v7*w6*u2 - v4*w7*u5,
        u4*w7*v2 + u7*w5*v5 - v4*w4*u7 - v7*w2*u1,

        u1*w5*v3 + u8*w7*v6 - v3*w1*u5 - v5*w3*u2,
        u1*w1*v8 + u8*w2*v4 - v8*w5*u5 - v1*w8*u2,
        u3*w6*v1 + u5*w8*v7 - v6*w1*u3 - v2*w3*u6,
        u1*w3*v1 + u8*w4*v7 - v3*w1*u3 - v5*w3*u6,
        u1*w8*v5 + u8*w6*v2 - v8*w5*u3 - v1*w8*u6,
        u1*w8*v3 + u8*w6*v6 - v1*w1*u8 - v8*w3*u4,

        u4*w6*v3 + u8*w7*v5 - v3*w4*u6 - v6*w3*u2,
        u4*w4*v8 + u8*w2*v1 - v8*w6*u6 - v4*w8*u2,
        u3*w5*v4 + u6*w8*v7 - v5*w4*u3 - v2*w3*u5,
        u4*w3*v4 + u8*w1*v7 - v3*w4*u3 - v6*w3*u5,
        u4*w8*v6 + u8*w5*v2 - v8*w6*u3 - v4*w8*u5,
        u4*w8*v3 + u8*w5*v5 - v4*w4*u8 - v8*w3*u1,
    ])


@dataclass(frozen=True)
class ResidualReport:
    """Defect norms of the matrix identity for one argument triple.

    matrix_norm and max_component are raw; ``relative`` divides by the
    product of the three per-matrix max entry magnitudes, which is exactly
    invariant under the scaling symmetry (each side of the identity is
    trilinear in the three weight vectors).
    """

    matrix_norm: float
    component_norms: dict[str, float]
    max_component: float
    scale: float

    @property
    def relative(self) -> float:
        return self.matrix_norm / self.scale

    @property
    def consistency(self) -> float:
        """|matrix_norm - max_component|; the 28 equations are exactly the
        nonzero entries of the matrix defect."""
        return abs(self.matrix_norm - self.max_component)


def ybe_defect(wu: WeightVector, ww: WeightVector, wv: WeightVector) -> np.ndarray:
    Ru = to_matrix(wu)
    Rw = to_matrix(ww)
    Rv = to_matrix(wv)
    lhs = tensor_embed(Ru, 12) @ tensor_embed(Rw, 23) @ tensor_embed(Rv, 12)
    rhs = tensor_embed(Rv, 23) @ tensor_embed(Rw, 12) @ tensor_embed(Ru, 23)
    return lhs - rhs


def ybe_residual(wu: WeightVector, ww: WeightVector,
                 wv: WeightVector) -> ResidualReport:
    """Full defect report; caller supplies the (u,xi,eta)/(u+v,xi,lam)/
    (v,eta,lam) argument pattern."""
    defect = ybe_defect(wu, ww, wv)
    comp = np.abs(component_residuals(wu, ww, wv))
    scale = max(wu.scale(), 1e-300) * max(ww.scale(), 1e-300) * max(wv.scale(), 1e-300)
    return ResidualReport(
        matrix_norm=float(np.abs(defect).max()),
        component_norms=dict(zip(COMPONENT_IDS, comp.tolist())),
        max_component=float(comp.max()),
        scale=float(scale),
    )


def _require_gauge(w: WeightVector, where: str) -> None:
    if not w.is_gauge():
        raise NotGauge(f"{where}: weights are not gauge-normalized "
                       f"(|a2-1|={abs(w.a2-1):.2e}, |a3-1|={abs(w.a3-1):.2e}, "
                       f"|a7-a8|={abs(w.a7-w.a8):.2e})")


def gauge_equation_residuals(wu: WeightVector, ww: WeightVector,
                             wv: WeightVector) -> np.ndarray:
    """The 12 gauge equations (six displayed plus their index-swapped
    counterparts), equal to minus the eq05..eq16 components on gauge input."""
    u1, _, _, u4, u5, u6, u7, _ = wu.a
    w1, _, _, w4, w5, w6, w7, _ = ww.a
    v1, _, _, v4, v5, v6, v7, _ = wv.a
    return np.array([
        v5 + u5*w1 - u1*w5 - u7*w7*v6,
        w7*v1 + u5*w5*v7 - u1*w1*v7 - u7*v4,
        u6 + w1*v6 - w6*v1 - u5*w7*v7,
        u6*v5 + w1 - u1*v1 - u7*w4*v7,
        u6*w7*v1 + w5*v7 - u1*w7*v5 - u7*w6,
        u7*w1*v1 + u4*v7 - u1*w7 - u7*w6*v6,

        v6 + u6*w4 - u4*w6 - u7*w7*v5,
        w7*v4 + u6*w6*v7 - u4*w4*v7 - u7*v1,
        u5 + w4*v5 - w5*v4 - u6*w7*v7,
        u5*v6 + w4 - u4*v4 - u7*w1*v7,
        u5*w7*v4 + w6*v7 - u4*w7*v6 - u7*w5,
        u7*w4*v4 + u1*v7 - u4*w7 - u7*w5*v5,
    ])


def gauge_ybe_residual(evaluate, u, v, xi, eta, lam) -> float:
    """Max-abs residual of the 12 gauge equations for a gauge family.

    ``evaluate(u, xi, eta) -> WeightVector``.  Raises NotGauge when the
    sampled weights violate the gauge normalization.
    """
    wu = evaluate(u, xi, eta)
    ww = evaluate(u + v, xi, lam)
    wv = evaluate(v, eta, lam)
    for w in (wu, ww, wv):
        _require_gauge(w, "gauge_ybe_residual")
    return float(np.abs(gauge_equation_residuals(wu, ww, wv)).max())


def unitarity_residual(evaluate, u, xi, eta) -> float:
    """Max-abs entry of R(u,xi,eta) R(-u,eta,xi) - (1 - a5 a6) E."""
    w = evaluate(u, xi, eta)
    wr = evaluate(-u, eta, xi)
    _require_gauge(w, "unitarity_residual")
    _require_gauge(wr, "unitarity_residual")
    prod = to_matrix(w) @ to_matrix(wr) - (1 - w.a5 * w.a6) * _E4
    return float(np.abs(prod).max())


def free_fermion_residual(w: WeightVector) -> complex:
    """a1 a4 + a5 a6 - 1 - a7^2 (gauge form of the free-fermion condition)."""
    return w.a1 * w.a4 + w.a5 * w.a6 - 1 - w.a7 ** 2


def baxter_curve_residual(w: WeightVector, alpha: complex, beta: complex,
                          gamma: complex) -> complex:
    """Biquadratic curve in (a1, a5) for the branch with a1=a4, a5=a6."""
    x, y = w.a1, w.a5
    return (alpha**2 * x**2 * y**2 - beta**2 * y**2 - beta**2 * x**2
            + 2 * beta * gamma * x * y + beta**2)
