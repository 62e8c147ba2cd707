"""Hamiltonian-coefficient extraction, proposition-level invariants, the
branch identity suites, and the solution-type verdict.

Coefficients m_i(xi) are the spectral derivatives of the weights at the
identity point (u = 0, eta = xi).  For gauge solutions they obey

    m1^2 = m4^2,  m5^2 = m6^2,  m7 constant in the color,

and split the solution set in two: the Baxter branch (a1 = a4, a5 = a6,
first-order square ODEs and a biquadratic curve in (a1, a5) with constants
alpha = m7, beta = m5, gamma = m1) and the free-fermion branch
(a1 a4 + a5 a6 = 1 + a7^2, bilinear coefficient relations and a quartic
first-order ODE for a7).  The verdict pipeline tests the matrix identity
first, then eight-vertex-ness, then the identity initial value (whose
failure routes to the trivial shapes), then the branch conditions on the
gauge-reduced family.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from .errors import CybeError, StepUnstable
from .families import WeightFamily
from .sampling import SamplePlan, draw_points, draw_triples
from .transforms import gauge_reduce
from .weights import (WeightVector, baxter_curve_residual,
                      free_fermion_residual, ybe_residual)


class Verdict(str, enum.Enum):
    BAXTER = "BAXTER"
    FREE_FERMION = "FREE_FERMION"
    TRIVIAL_A = "TRIVIAL_A"
    TRIVIAL_B = "TRIVIAL_B"
    NOT_EIGHT_VERTEX = "NOT_EIGHT_VERTEX"
    NOT_A_SOLUTION = "NOT_A_SOLUTION"
    INDETERMINATE = "INDETERMINATE"


@dataclass(frozen=True)
class HamiltonianCoefficients:
    """m_i(xi) over a color grid, shape (len(xi_grid), 8)."""

    xi_grid: np.ndarray
    m: np.ndarray
    h: float
    fd_error: np.ndarray     # |richardson - raw| per grid point
    analytic: bool

    def at(self, i: int) -> np.ndarray:
        return self.m[i]

    def column(self, j: int) -> np.ndarray:
        """All grid samples of m_{j+1}."""
        return self.m[:, j]

    def mean(self) -> np.ndarray:
        return self.m.mean(axis=0)


def _fd_coeffs(fam: WeightFamily, xi, h: float):
    """Central difference with one Richardson level for d/du a(u,xi,xi)|_0."""
    def d(step):
        wp = fam.eval(step, xi, xi).a
        wm = fam.eval(-step, xi, xi).a
        return (wp - wm) / (2 * step)

    raw = d(h)
    fine = d(h / 2)
    rich = (4 * fine - raw) / 3
    return rich, float(np.abs(rich - raw).max())


def hamiltonian_coeffs(fam: WeightFamily, xi_grid=None, h: float = 1e-5,
                       use_analytic: bool = True) -> HamiltonianCoefficients:
    """Extract m_i over a color grid.

    Analytic values are substituted when the family supplies them (every
    built-in family does); otherwise central differences with one
    Richardson extrapolation level at step h in [1e-7, 1e-3].
    """
    if not 1e-7 <= h <= 1e-3:
        raise StepUnstable(f"step h = {h} outside [1e-7, 1e-3]")
    if xi_grid is None:
        xi_grid = np.linspace(-0.45, 0.45, 20)
    xi_grid = np.asarray(xi_grid, dtype=float)

    rows, errs = [], []
    analytic = use_analytic and fam.analytic_coeffs(xi_grid[0]) is not None
    for xi in xi_grid:
        if analytic:
            rows.append(fam.analytic_coeffs(xi))
            errs.append(0.0)
        else:
            rich, err = _fd_coeffs(fam, xi, h)
            scale = max(1.0, float(np.abs(rich).max()))
            if err > 1e-4 * scale:
                raise StepUnstable(
                    f"Richardson and raw central differences disagree by "
                    f"{err:.3e} at xi = {xi}; adjust h")
            rows.append(rich)
            errs.append(err)
    return HamiltonianCoefficients(
        xi_grid=xi_grid, m=np.array(rows), h=h,
        fd_error=np.array(errs), analytic=analytic)


def invariant_suite(fam: WeightFamily,
                    coeffs: HamiltonianCoefficients) -> dict[str, float]:
    """Named residuals of the coefficient-level propositions."""
    m1, m4 = coeffs.column(0), coeffs.column(3)
    m5, m6, m7 = coeffs.column(4), coeffs.column(5), coeffs.column(6)
    delta_sq = (m5 + m6) ** 2 - 4 * m1 ** 2
    return {
        "m1_sq_minus_m4_sq": float(np.abs(m1**2 - m4**2).max()),
        "m5_sq_minus_m6_sq": float(np.abs(m5**2 - m6**2).max()),
        "m7_color_spread": _spread(m7),
        "m7_color_stddev": float(np.std(m7)),
        "nondegeneracy": float(np.minimum(np.abs(m5), np.abs(m7)).max()
                               if len(m5) else 0.0),
        "degenerate_flag": float(max(np.abs(m5).max(), np.abs(m7).max()) < 1e-10),
        "m1_plus_m4": float(np.abs(m1 + m4).max()),
        "delta_sq_spread": _spread(delta_sq),
    }


def _spread(values: np.ndarray) -> float:
    return float(np.abs(values - values.mean()).max()) if len(values) else 0.0


def _du(fam, u, xi, eta, h=1e-5):
    raw = (fam.eval(u + h, xi, eta).a - fam.eval(u - h, xi, eta).a) / (2 * h)
    fine = (fam.eval(u + h/2, xi, eta).a - fam.eval(u - h/2, xi, eta).a) / h
    return (4 * fine - raw) / 3


def _d2u(fam, u, xi, eta, h=1e-4):
    return (fam.eval(u + h, xi, eta).a - 2 * fam.eval(u, xi, eta).a
            + fam.eval(u - h, xi, eta).a) / h**2


def _coeff_at(fam: WeightFamily, coeffs: HamiltonianCoefficients,
              x) -> np.ndarray:
    """Coefficients at an arbitrary color point: the closed form when the
    family has one, a fresh finite-difference extraction otherwise (the
    coefficients vary with color, so grid lookup is not accurate enough)."""
    if coeffs.analytic:
        m = fam.analytic_coeffs(x)
        if m is not None:
            return m
    return _fd_coeffs(fam, x, coeffs.h)[0]


def curve_residuals(fam: WeightFamily, coeffs: HamiltonianCoefficients,
                    samples, branch: str) -> dict[str, float]:
    """First-order ODE / curve residuals for the selected branch.

    ``samples`` are (u, xi, eta) points; ``branch`` is "baxter", "ff" or
    "alpha0".  Inapplicable suites are simply absent from the result.
    """
    out: dict[str, float] = {}
    mbar = coeffs.mean()
    alpha, beta, gamma = mbar[6], mbar[4], mbar[0]

    if branch == "baxter":
        r_ode5 = r_ode1 = r_curve = 0.0
        for (u, xi, eta) in samples:
            w = fam.eval(u, xi, eta)
            dw = _du(fam, u, xi, eta)
            c = beta**2 - gamma**2 + alpha**2
            r_ode5 = max(r_ode5, abs(dw[4]**2 - (beta**2 - c * w.a5**2
                                                 + alpha**2 * w.a5**4)))
            r_ode1 = max(r_ode1, abs(dw[0]**2 - (beta**2 - c * w.a1**2
                                                 + alpha**2 * w.a1**4)))
            r_curve = max(r_curve, abs(baxter_curve_residual(w, alpha, beta,
                                                             gamma)))
        out["ode_a5_square"] = r_ode5
        out["ode_a1_square"] = r_ode1
        out["biquadratic_curve"] = r_curve
    elif branch == "ff":
        r_ff = r_bilinear = r_quaddiff = r_ode7 = 0.0
        for (u, xi, eta) in samples:
            w = fam.eval(u, xi, eta)
            dw = _du(fam, u, xi, eta)
            me = _coeff_at(fam, coeffs, eta)
            m1e, m5e, m6e = me[0], me[4], me[5]
            r_ff = max(r_ff, abs(free_fermion_residual(w)))
            r_bilinear = max(r_bilinear, abs(
                alpha * (w.a1 * w.a6 + w.a4 * w.a5) - (m5e + m6e) * w.a7))
            r_quaddiff = max(r_quaddiff, abs(
                alpha * (w.a1**2 + w.a6**2 - w.a4**2 - w.a5**2)
                - 4 * m1e * w.a7))
            c = (m5e + m6e) ** 2 - 4 * m1e**2 - 2 * alpha**2
            r_ode7 = max(r_ode7, abs(dw[6]**2 - (alpha**2 - c * w.a7**2
                                                 + alpha**2 * w.a7**4)))
        out["ff_condition"] = r_ff
        out["coeff_bilinear"] = r_bilinear
        out["coeff_quadratic_diff"] = r_quaddiff
        out["ode_a7_square"] = r_ode7
    elif branch == "alpha0":
        r = 0.0
        for (u, xi, eta) in samples:
            w = fam.eval(u, xi, eta)
            d2 = _d2u(fam, u, xi, eta)
            m5e = _coeff_at(fam, coeffs, eta)[4]
            for i in (0, 3, 4, 5):
                r = max(r, abs(d2[i] - m5e**2 * w.a[i]))
        out["second_order_ode"] = r
    else:
        raise ValueError(f"unknown branch {branch!r}")
    return out


# ---- polynomial identity suites ----

def _suite_universal(w: WeightVector, m) -> np.ndarray:
    """Seven polynomial identities holding for every gauge solution, with
    coefficients taken at the second color."""
    u1, u4, u5, u6, u7 = w.a1, w.a4, w.a5, w.a6, w.a7
    m1, m4, m5, m6, m7 = m[0], m[3], m[4], m[5], m[6]
    return np.array([
        m7*u1**3 - m7*u1*u5**2 - 3*m1*u1*u7 + m4*u1*u7 - m7*u4*u7**2
            - m7*u4 + m5*u6*u7 + m6*u6*u7,
        -m6*u1*u4 + m7*u1*u6*u7 + m7*u4*u5*u7 + m1*u4*u6 + m4*u4*u6
            - m6*u5*u6 - m5*u7**2 + m6,
        m7*u1**2 - m7*u4**2 - m7*u5**2 + m7*u6**2 + 2*m4*u7 - 2*m1*u7,
        -m5*u1*u4 + m1*u1*u5 + m4*u1*u5 + m7*u1*u6*u7 + m7*u4*u5*u7
            - m5*u5*u6 - m6*u7**2 + m5,
        m7*u1**2*u6 - m6*u1*u7 - m5*u1*u7 - m7*u5**2*u6 + m7*u5*u7**2
            + m7*u5 + m4*u6*u7 + m1*u6*u7,
        m7*u1**3*u5 - m6*u1*u4*u7 - m7*u1*u5**3 + 2*m4*u1*u5*u7
            - 2*m1*u1*u5*u7 + m7*u1*u6 - m7*u4*u5*u7**2 + m5*u5*u6*u7
            + m6*u7**3 - m5*u7,
        -m7*u1**2*u4 + m7*u1*u7**2 + m7*u1 + m7*u4*u5**2 + m4*u4*u7
            + m1*u4*u7 - m5*u5*u7 - m6*u5*u7,
    ])


def _suite_reduced(w: WeightVector, m) -> np.ndarray:
    """Three further eliminations valid on both branches."""
    u1, u4, u5, u6, u7 = w.a1, w.a4, w.a5, w.a6, w.a7
    m1, m4, m5, m6, m7 = m[0], m[3], m[4], m[5], m[6]
    return np.array([
        -m5*u1*u4 + m1*u1*u5 + m4*u1*u5 + m7*u1*u6*u7 + m7*u4*u5*u7
            - m5*u5*u6 - m6*u7**2 + m5,
        -m7*u1**3*u5 + m7*u1*u4**2*u5 + 2*m5*u1*u4*u7 + m7*u1*u5**3
            - m7*u1*u5*u6**2 - 4*m4*u1*u5*u7 - 2*m7*u1*u6*u7**2
            - 2*m7*u4*u5*u7**2 + 2*m5*u5*u6*u7 + 2*m6*u7**3 - 2*m5*u7,
        -m7*u1*u4**2*u5 + m6*u1*u4*u7 + m7*u1*u5*u6**2 - m7*u1*u6
            + m7*u4*u5*u7**2 - m5*u5*u6*u7 - m6*u7**3 + m5*u7,
    ])


def _suite_baxter_quartet(w: WeightVector, m) -> np.ndarray:
    """Four bilinear-coefficient identities of the non-free-fermion branch
    (the factored alternative to the free-fermion condition)."""
    u1, u4, u5, u6, u7 = w.a1, w.a4, w.a5, w.a6, w.a7
    m6, m7 = m[5], m[6]
    return np.array([
        -m7*u1*u4**2*u5 + m6*u1*u4*u7 + m7*u1*u5*u6**2 - m7*u1*u6
            + m7*u4*u5 - m6*u5*u6*u7,
        m7*u1*u4*u5**2 - m6*u1*u5*u7 - m7*u4**2*u5*u6 + m6*u4*u6*u7
            - m7*u5**3*u6 + m7*u5**2 + m7*u5*u6**3 - m7*u6**2,
        -m7*u4**3*u5*u6 + m6*u4**2*u6*u7 + m7*u4*u5**2*u7**2
            + m7*u4*u5*u6**3 - m7*u4*u6**2 - m6*u5**2*u6*u7 - m6*u5*u7**3
            + m6*u5*u7,
        -m7*u1*u5**2*u6 + m7*u1*u5 - m7*u4**3*u5 + m6*u4**2*u7
            + m7*u4*u5**3 + m7*u4*u5*u6**2 - m7*u4*u6 - m6*u5**2*u7,
    ])


def _suite_baxter_weights(w: WeightVector) -> np.ndarray:
    """Three weight-only cubics of the non-free-fermion branch."""
    u1, u4, u5, u6, u7 = w.a1, w.a4, w.a5, w.a6, w.a7
    return np.array([
        u1**2*u5 - 2*u1*u4*u6 + u4**2*u5 - u5**3 + u5*u6**2,
        -u1*u4**2*u6 + u1*u5**2*u6 + u1*u5*u7**2 - u1*u5 + u4**3*u5
            - u4*u5**3 - u4*u6*u7**2 + u4*u6,
        -u1**2*u4 + 2*u1*u5*u6 + u4**3 - u4*u5**2 - u4*u6**2,
    ])


def elliptic_ff_identities(fam: WeightFamily, samples) -> dict[str, float]:
    """The five sn/cd bilinear identities of the elliptic free-fermion
    family, with coefficient factor 1/lam replacing the unit-constriction
    modulus.  Only meaningful when ``fam.spec`` is FF_ELLIPTIC or FF_TANH."""
    from .families import FamilyId
    from .numkernel import jacobi_sncndn

    spec = fam.spec
    if spec is None or spec.family not in (FamilyId.FF_ELLIPTIC,
                                           FamilyId.FF_TANH):
        raise ValueError("elliptic_ff_identities needs an elliptic or tanh "
                         "free-fermion family")
    k = spec.k if spec.family is FamilyId.FF_ELLIPTIC else 1.0
    kap = 1.0 / spec.lam
    worst = np.zeros(5)
    for (u, xi, eta) in samples:
        w = fam.eval(u, xi, eta)
        z = spec.lam * complex(u) + spec.F(xi) - spec.F(eta)
        sn, cn, dn = jacobi_sncndn(z, k)
        cd = cn / dn
        me = fam.analytic_coeffs(eta)
        mx = fam.analytic_coeffs(xi)
        m1e, m5e = me[0], me[4]
        m1x = mx[0]
        u1, u4, u5, u6 = w.a1, w.a4, w.a5, w.a6
        vals = np.array([
            cd**2 - sn**2 + 2*m1e*kap*cd*sn + u5**2 - u1**2,
            cd**2 - sn**2 - 2*m1e*kap*cd*sn + u6**2 - u4**2,
            u1*u4 + u5*u6 - cd**2 - sn**2,
            u1*u6 + u4*u5 - 2*m5e*kap*cd*sn,
            cd**2 - sn**2 - 2*m1x*kap*cd*sn + u5**2 - u4**2,
        ])
        worst = np.maximum(worst, np.abs(vals))
    return {f"sn_cd_identity_{i+1}": float(v) for i, v in enumerate(worst)}


def derived_identity_suite(fam: WeightFamily, coeffs: HamiltonianCoefficients,
                           samples, branch: str) -> dict[str, float]:
    """Numeric residuals of the elimination-output polynomial identities.

    The universal seven and the reduced three hold for every gauge solution.
    The free-fermion branch additionally satisfies the quadratic condition;
    the Baxter branch instead satisfies the weight-only cubics and the
    bilinear quartet.
    """
    w7 = np.zeros(7)
    w3 = np.zeros(3)
    wffc = 0.0
    wq = np.zeros(4)
    wbx = np.zeros(3)
    wbil = 0.0
    for (u, xi, eta) in samples:
        w = fam.eval(u, xi, eta)
        m = _coeff_at(fam, coeffs, eta)
        w7 = np.maximum(w7, np.abs(_suite_universal(w, m)))
        w3 = np.maximum(w3, np.abs(_suite_reduced(w, m)))
        if branch == "ff":
            wffc = max(wffc, abs(free_fermion_residual(w)))
        elif branch == "baxter":
            wq = np.maximum(wq, np.abs(_suite_baxter_quartet(w, m)))
            wbx = np.maximum(wbx, np.abs(_suite_baxter_weights(w)))
            # alpha a1 a5 = m6 a7: the factored bilinear of this branch
            wbil = max(wbil, abs(m[6] * w.a1 * w.a5 - m[5] * w.a7))
    out = {f"universal_{i+1}": float(v) for i, v in enumerate(w7)}
    out.update({f"reduced_{i+1}": float(v) for i, v in enumerate(w3)})
    if branch == "ff":
        out["ff_condition"] = float(wffc)
    elif branch == "baxter":
        out.update({f"baxter_quartet_{i+1}": float(v) for i, v in enumerate(wq)})
        out.update({f"baxter_cubic_{i+1}": float(v) for i, v in enumerate(wbx)})
        out["baxter_bilinear"] = float(wbil)
    return out


# ---- the verdict pipeline ----

@dataclass(frozen=True)
class ClassifyPlan:
    n_ybe: int = 60
    n_points: int = 24
    n_grid: int = 20
    seed: int = 0
    u_span: tuple[float, float] = (-0.35, 0.35)
    color_span: tuple[float, float] = (-0.5, 0.5)
    max_weight: float = 15.0
    tol_solution: float = 1e-8
    tol_branch: float = 1e-6
    h: float = 1e-5

    def sample_plan(self, n) -> SamplePlan:
        return SamplePlan(n=n, seed=self.seed, u_span=self.u_span,
                          color_span=self.color_span,
                          max_weight=self.max_weight)


@dataclass(frozen=True)
class ClassificationReport:
    verdict: Verdict
    is_gauge: bool
    initial_condition_ok: bool
    initial_condition_residual: float
    ybe_median: float
    ybe_max: float
    ff_condition_median: float | None = None
    baxter_curve_median: float | None = None
    coefficient_invariants: dict[str, float] = field(default_factory=dict)
    measured_constants: dict[str, list[float]] = field(default_factory=dict)
    notes: tuple[str, ...] = ()

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict.value,
            "is_gauge": self.is_gauge,
            "initial_condition_ok": self.initial_condition_ok,
            "initial_condition_residual": self.initial_condition_residual,
            "ybe_median": self.ybe_median,
            "ybe_max": self.ybe_max,
            "ff_condition_median": self.ff_condition_median,
            "baxter_curve_median": self.baxter_curve_median,
            "coefficient_invariants": self.coefficient_invariants,
            "measured_constants": self.measured_constants,
            "notes": list(self.notes),
        }


def _initial_condition_residual(fam: WeightFamily, rng, color_span) -> float:
    worst = 0.0
    target = np.array([1, 1, 1, 1, 0, 0, 0, 0], dtype=complex)
    for _ in range(8):
        xi = rng.uniform(*color_span)
        try:
            w = fam.eval(0.0, xi, xi)
        except CybeError:
            # families singular at u = 0 exactly: probe the limit
            try:
                w = fam.eval(1e-7, xi, xi)
            except CybeError:
                continue
        worst = max(worst, float(np.abs(w.a - target).max()))
    return worst


def _trivial_shape(fam: WeightFamily, rng, plan) -> Verdict | None:
    res_a = res_b = 0.0
    for _ in range(10):
        u = rng.uniform(*plan.u_span)
        xi, eta = rng.uniform(*plan.color_span, 2)
        try:
            w = fam.eval(u, xi, eta)
        except CybeError:
            continue
        a = w.a
        res_a = max(res_a, abs(a[1] - 1), abs(a[2] - 1), abs(a[6] - 1),
                    abs(a[7] - 1), abs(a[0] - a[3]), abs(a[0] - a[4]),
                    abs(a[0] - a[5]))
        res_b = max(res_b, abs(a[1] - 1), abs(a[2] - 1), abs(a[6] - 1j),
                    abs(a[7] - 1j), abs(a[0] - a[3]), abs(a[0] - a[4]),
                    abs(a[0] + a[5]))
    if res_a < 1e-8:
        return Verdict.TRIVIAL_A
    if res_b < 1e-8:
        return Verdict.TRIVIAL_B
    return None


def classify(fam: WeightFamily, plan: ClassifyPlan | None = None
             ) -> ClassificationReport:
    """Decide the solution type of a weight family.

    Pipeline: matrix-identity residuals (median over a pole-free plan),
    eight-vertex check, identity initial value with trivial-shape matching,
    gauge reduction when needed, then the free-fermion condition versus the
    biquadratic curve with measured constants.
    """
    plan = plan or ClassifyPlan()
    rng = np.random.default_rng(plan.seed + 1)
    notes: list[str] = []

    triples = draw_triples(fam, plan.sample_plan(plan.n_ybe))
    rels = []
    weight_mags = np.zeros(8)
    for (u, v, xi, eta, lam) in triples:
        wu = fam.eval(u, xi, eta)
        ww = fam.eval(u + v, xi, lam)
        wv = fam.eval(v, eta, lam)
        rels.append(ybe_residual(wu, ww, wv).relative)
        weight_mags = np.maximum(weight_mags, np.abs(wu.a))
    ybe_median = float(np.median(rels))
    ybe_max = float(np.max(rels))

    base = dict(ybe_median=ybe_median, ybe_max=ybe_max)

    if ybe_median > plan.tol_solution:
        return ClassificationReport(
            verdict=Verdict.NOT_A_SOLUTION, is_gauge=False,
            initial_condition_ok=False, initial_condition_residual=np.nan,
            notes=("matrix identity fails beyond tolerance",), **base)

    dead = [f"a{i+1}" for i in range(8)
            if weight_mags[i] < 1e-12 * max(weight_mags.max(), 1e-300)]
    if dead:
        return ClassificationReport(
            verdict=Verdict.NOT_EIGHT_VERTEX, is_gauge=False,
            initial_condition_ok=False, initial_condition_residual=np.nan,
            notes=(f"weights {', '.join(dead)} vanish identically",), **base)

    ic_res = _initial_condition_residual(fam, rng, plan.color_span)
    ic_ok = bool(ic_res <= 1e-8)

    if not ic_ok:
        shape = _trivial_shape(fam, rng, plan)
        if shape is not None:
            return ClassificationReport(
                verdict=shape, is_gauge=False, initial_condition_ok=False,
                initial_condition_residual=ic_res, **base)
        notes.append("initial value fails but no trivial shape matches")

    c_mid = 0.5 * (plan.color_span[0] + plan.color_span[1])
    c_half = 0.5 * (plan.color_span[1] - plan.color_span[0])
    u_probe = (0.5 * (plan.u_span[0] + plan.u_span[1])
               + 0.4 * (plan.u_span[1] - plan.u_span[0]) / 2)
    gauge_probe = fam.eval(u_probe, c_mid + 0.2 * c_half, c_mid - 0.2 * c_half)
    is_gauge = gauge_probe.is_gauge()
    work = fam
    if not is_gauge:
        try:
            work, cert = gauge_reduce(
                fam, anchor=c_mid, u_probe=u_probe,
                color_grid=np.linspace(c_mid - 0.9 * c_half,
                                       c_mid + 0.9 * c_half, 7),
                seed=plan.seed)
            notes.append(f"gauge-reduced (residual {cert.gauge_residual:.2e})")
        except CybeError as exc:
            return ClassificationReport(
                verdict=Verdict.INDETERMINATE, is_gauge=False,
                initial_condition_ok=ic_ok, initial_condition_residual=ic_res,
                notes=(f"gauge reduction failed: {exc}",), **base)

    coeffs = hamiltonian_coeffs(
        work, np.linspace(*plan.color_span, plan.n_grid), h=plan.h,
        use_analytic=work.spec is not None)
    inv = invariant_suite(work, coeffs)
    mbar = coeffs.mean()
    alpha, beta, gamma = mbar[6], mbar[4], mbar[0]

    points = draw_points(work, plan.sample_plan(plan.n_points))
    ff_vals, curve_vals = [], []
    for (u, xi, eta) in points:
        w = work.eval(u, xi, eta)
        ff_vals.append(abs(free_fermion_residual(w)))
        curve_vals.append(abs(baxter_curve_residual(w, alpha, beta, gamma)))
    ff_median = float(np.median(ff_vals))
    curve_median = float(np.median(curve_vals))

    measured = {
        "alpha": [alpha.real, alpha.imag],
        "beta": [beta.real, beta.imag],
        "gamma": [gamma.real, gamma.imag],
    }

    ff_small = ff_median <= plan.tol_branch
    curve_small = curve_median <= plan.tol_branch
    if ff_small and curve_small:
        verdict = Verdict.INDETERMINATE
        notes.append("free-fermion and curve residuals both below tolerance")
    elif ff_small:
        verdict = Verdict.FREE_FERMION
    elif curve_small:
        verdict = Verdict.BAXTER
    else:
        verdict = Verdict.INDETERMINATE
        notes.append("neither branch condition holds at tolerance")

    return ClassificationReport(
        verdict=verdict, is_gauge=is_gauge, initial_condition_ok=ic_ok,
        initial_condition_residual=ic_res,
        ff_condition_median=ff_median, baxter_curve_median=curve_median,
        coefficient_invariants=inv, measured_constants=measured,
        notes=tuple(notes), **base)
