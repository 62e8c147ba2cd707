"""Closed-form weight families: every solution class plus the two trivial
solutions, with parameter validation and the two literature reductions.

Family ids
----------
BAXTER_ELLIPTIC / BAXTER_TRIG
    a1 = a4, a5 = a6 built from sn (resp. tan) ratios at argument
    w = lam*u + F(xi) - F(eta), with a shift mu and modulus k.
FF_ELLIPTIC / FF_TANH
    a1, a4 = A cd +- B sn;  a5, a6 = C sn +- D cd;  a7 = s7 k sn cd, with
    A..D square-root combinations of color profiles G, H constrained by
    G^2 - H^2 = 1.  FF_TANH is the k = 1 degeneration (cd -> 1, sn -> tanh).
FF_TRIG
    the degenerate free-fermion branch with a7 = s7 tan(w) and a single
    positive color profile G.
FF_HYPERBOLIC
    a1 = a4 = cosh(wF)/cos(wG), a5 = -a6 = s5 sinh(wF)/cos(wG),
    a7 = s7 tan(wG) with two rates lam, mu and profiles F, G.
TRIVIAL_A
    (H, 1, 1, H, H, H, 1, 1) for an arbitrary spectral profile H(u,xi,eta).
TRIVIAL_B
    (E, 1, 1, E, E, -E, i, i) with E = F(xi)/F(eta) exp(u).

Square-root branches: the coefficients A..D use principal square roots.
B and D each carry a sign unit -- t/sqrt(t^2) for t = H(xi)G(eta)+G(xi)H(eta)
(resp. minus) -- which makes the products analytic across sign changes of
the radicand; radicands that vanish identically on the color diagonal are
clamped to exactly zero inside a roundoff window so gauge families meet the
identity initial value bit-exactly at u = 0, eta = xi.  The chosen branch
combination is validated by the residual suite, not asserted a priori.
"""

from __future__ import annotations

import cmath
import enum
import warnings
from dataclasses import dataclass

import numpy as np

from .errors import BranchAmbiguityWarning, InvalidSpec, PoleProximity
from .numkernel import elliptic_exp, jacobi_sncndn
from .profiles import ColorProfile, SpectralProfile, _check_keys, _cjson, _cval
from .weights import WeightVector

_DENOM_TOL = 1e-9     # |cos|, |sn|, ... below this counts as a pole
_CLAMP = 1e-13        # radicand roundoff window (relative)


class FamilyId(str, enum.Enum):
    BAXTER_ELLIPTIC = "baxter_elliptic"
    BAXTER_TRIG = "baxter_trig"
    FF_ELLIPTIC = "ff_elliptic"
    FF_TANH = "ff_tanh"
    FF_TRIG = "ff_trig"
    FF_HYPERBOLIC = "ff_hyperbolic"
    TRIVIAL_A = "trivial_a"
    TRIVIAL_B = "trivial_b"


#: families satisfying the gauge normalization a2 = a3 = 1, a7 = a8
GAUGE_FAMILIES = frozenset({
    FamilyId.BAXTER_ELLIPTIC, FamilyId.BAXTER_TRIG, FamilyId.FF_ELLIPTIC,
    FamilyId.FF_TANH, FamilyId.FF_TRIG, FamilyId.FF_HYPERBOLIC,
})

#: designated verdicts, used by the classification acceptance checks
FAMILY_CLASS = {
    FamilyId.BAXTER_ELLIPTIC: "BAXTER",
    FamilyId.BAXTER_TRIG: "BAXTER",
    FamilyId.FF_ELLIPTIC: "FREE_FERMION",
    FamilyId.FF_TANH: "FREE_FERMION",
    FamilyId.FF_TRIG: "FREE_FERMION",
    FamilyId.FF_HYPERBOLIC: "FREE_FERMION",
    FamilyId.TRIVIAL_A: "TRIVIAL_A",
    FamilyId.TRIVIAL_B: "TRIVIAL_B",
}

_ZERO = ColorProfile("constant", (0,))


@dataclass(frozen=True)
class FamilySpec:
    """Parameters of one closed-form family.

    Unused fields for a given family are ignored by ``eval`` but flagged by
    ``validate_spec`` when they violate that family's constraints.
    """

    family: FamilyId
    k: complex = 0.5
    lam: complex = 1.0
    mu: complex = 0.5
    s5: int = 1
    s7: int = 1
    delta: int = 1
    F: ColorProfile = _ZERO
    G: ColorProfile | None = None
    H: ColorProfile | None = None
    spectral: SpectralProfile | None = None

    def __post_init__(self):
        object.__setattr__(self, "family", FamilyId(self.family))
        object.__setattr__(self, "k", complex(self.k))
        object.__setattr__(self, "lam", complex(self.lam))
        object.__setattr__(self, "mu", complex(self.mu))
        for flag in ("s5", "s7", "delta"):
            v = getattr(self, flag)
            if v not in (1, -1):
                raise InvalidSpec(f"{flag} must be +1 or -1, got {v!r}")

    @property
    def is_gauge(self) -> bool:
        return self.family in GAUGE_FAMILIES


@dataclass(frozen=True)
class WeightFamily:
    """A family spec together with its evaluator (u, xi, eta) -> weights."""

    spec: FamilySpec | None
    evaluate: object  # callable (u, xi, eta) -> WeightVector
    label: str = ""
    gauge: bool = True

    def eval(self, u, xi, eta) -> WeightVector:
        return self.evaluate(u, xi, eta)

    def analytic_coeffs(self, xi):
        """Spectral-derivative coefficients m1..m8 at color xi, or None."""
        if self.spec is None:
            return None
        return _analytic_coeffs(self.spec, complex(xi))


def _sign_unit(t: complex, scale: float) -> complex:
    """t/sqrt(t^2): +-1 tracking the half-plane of t; +1 on the roundoff rim."""
    if abs(t) <= _CLAMP * scale:
        return 1.0 + 0j
    return t / cmath.sqrt(t * t)


def _root(w: complex, scale: float) -> complex:
    """Principal sqrt with the identically-vanishing radicand clamped to 0."""
    if abs(w) <= _CLAMP * scale:
        return 0j
    return cmath.sqrt(w)


def _ff_coefficients(Gx, Gy, Hx, Hy, delta):
    """The four color coefficients of the elliptic/tanh free-fermion forms."""
    GG, HH = Gx * Gy, Hx * Hy
    scale = 1.0 + abs(GG) + abs(HH)
    A = _root((1 + GG - HH) / 2, scale)
    B = _root((-1 + GG + HH) / 2, scale) * _sign_unit(Hx * Gy + Gx * Hy, scale)
    C = delta * _root((1 + GG + HH) / 2, scale)
    D = delta * _root((-1 + GG - HH) / 2, scale) * _sign_unit(Hx * Gy - Gx * Hy, scale)
    return A, B, C, D


def _need(spec: FamilySpec, *names: str) -> None:
    for n in names:
        if getattr(spec, n) is None:
            raise InvalidSpec(f"family {spec.family.value} requires profile {n}")


def make_family(spec: FamilySpec) -> WeightFamily:
    """Build the evaluator for a spec.  Raises InvalidSpec on hard errors;
    softer constraint violations are reported by validate_spec."""
    fam = spec.family
    if fam is FamilyId.BAXTER_ELLIPTIC:
        ev = _baxter_elliptic(spec)
    elif fam is FamilyId.BAXTER_TRIG:
        ev = _baxter_trig(spec)
    elif fam is FamilyId.FF_ELLIPTIC:
        _need(spec, "G", "H")
        ev = _ff_elliptic(spec, spec.k)
    elif fam is FamilyId.FF_TANH:
        _need(spec, "G", "H")
        ev = _ff_elliptic(spec, 1.0)
    elif fam is FamilyId.FF_TRIG:
        _need(spec, "G")
        ev = _ff_trig(spec)
    elif fam is FamilyId.FF_HYPERBOLIC:
        _need(spec, "G")
        ev = _ff_hyperbolic(spec)
    elif fam is FamilyId.TRIVIAL_A:
        _need(spec, "spectral")
        ev = _trivial_a(spec)
    else:
        ev = _trivial_b(spec)
    return WeightFamily(spec=spec, evaluate=ev, label=fam.value,
                        gauge=spec.is_gauge)


def eval_family(spec: FamilySpec, u, xi, eta) -> WeightVector:
    return make_family(spec).eval(u, xi, eta)


def _baxter_elliptic(spec: FamilySpec):
    if spec.lam == 0 or spec.mu == 0:
        raise InvalidSpec("rates lam and mu must be nonzero")
    snmu = jacobi_sncndn(spec.mu, spec.k)[0]
    if abs(snmu) < _DENOM_TOL:
        raise InvalidSpec("sn(mu) vanishes; shift mu divides the closed form")
    k, lam, F, s5, s7 = spec.k, spec.lam, spec.F, spec.s5, spec.s7

    def ev(u, xi, eta):
        w = lam * complex(u) + F(xi) - F(eta)
        snw = jacobi_sncndn(w, k)[0]
        snwm = jacobi_sncndn(w + spec.mu, k)[0]
        a1 = snwm / snmu
        a5 = s5 * snw / snmu
        a7 = s7 * k * snw * snwm
        return WeightVector.of(a1, 1, 1, a1, a5, a5, a7, a7)
    return ev


def _baxter_trig(spec: FamilySpec):
    if spec.lam == 0 or spec.mu == 0:
        raise InvalidSpec("rates lam and mu must be nonzero")
    tanmu = cmath.tan(spec.mu)
    if abs(tanmu) < _DENOM_TOL:
        raise InvalidSpec("tan(mu) vanishes; shift mu divides the closed form")
    lam, F, s5, s7 = spec.lam, spec.F, spec.s5, spec.s7

    def ev(u, xi, eta):
        w = lam * complex(u) + F(xi) - F(eta)
        cw, cwm = cmath.cos(w), cmath.cos(w + spec.mu)
        if min(abs(cw), abs(cwm)) < _DENOM_TOL:
            raise PoleProximity(f"tan pole near w = {w}")
        tw, twm = cmath.tan(w), cmath.tan(w + spec.mu)
        a1 = twm / tanmu
        a5 = s5 * tw / tanmu
        a7 = s7 * tw * twm
        return WeightVector.of(a1, 1, 1, a1, a5, a5, a7, a7)
    return ev


def _ff_elliptic(spec: FamilySpec, k):
    if spec.lam == 0:
        raise InvalidSpec("rate lam must be nonzero")
    lam, F, G, H, delta, s7 = spec.lam, spec.F, spec.G, spec.H, spec.delta, spec.s7

    def ev(u, xi, eta):
        w = lam * complex(u) + F(xi) - F(eta)
        snw, cnw, dnw = jacobi_sncndn(w, k)
        if abs(dnw) < _DENOM_TOL:
            raise PoleProximity(f"dn vanishes near w = {w}")
        cdw = cnw / dnw
        A, B, C, D = _ff_coefficients(G(xi), G(eta), H(xi), H(eta), delta)
        a1 = A * cdw + B * snw
        a4 = A * cdw - B * snw
        a5 = C * snw + D * cdw
        a6 = C * snw - D * cdw
        a7 = s7 * k * snw * cdw
        return WeightVector.of(a1, 1, 1, a4, a5, a6, a7, a7)
    return ev


def _ff_trig(spec: FamilySpec):
    if spec.lam == 0:
        raise InvalidSpec("rate lam must be nonzero")
    lam, F, G, s5, s7 = spec.lam, spec.F, spec.G, spec.s5, spec.s7

    def ev(u, xi, eta):
        w = lam * complex(u) + F(xi) - F(eta)
        cw = cmath.cos(w)
        if abs(cw) < _DENOM_TOL:
            raise PoleProximity(f"cos vanishes near w = {w}")
        sw, tw = cmath.sin(w), cmath.tan(w)
        Gx, Gy = G(xi), G(eta)
        X = 1 / (2 * cmath.sqrt(Gx * Gy))
        Y = s5 * X
        twoGG = 2 * Gx * Gy
        a1 = X * ((Gx + Gy) / cw + twoGG * sw)
        a4 = X * ((Gx + Gy) / cw - twoGG * sw)
        a5 = Y * ((Gx - Gy) / cw + twoGG * sw)
        a6 = Y * (-(Gx - Gy) / cw + twoGG * sw)
        a7 = s7 * tw
        return WeightVector.of(a1, 1, 1, a4, a5, a6, a7, a7)
    return ev


def _ff_hyperbolic(spec: FamilySpec):
    if spec.lam == 0 and spec.mu == 0:
        raise InvalidSpec("rates lam and mu must not both vanish")
    lam, mu, F, G, s5, s7 = spec.lam, spec.mu, spec.F, spec.G, spec.s5, spec.s7

    def ev(u, xi, eta):
        u = complex(u)
        wf = lam * u + F(xi) - F(eta)
        wg = mu * u + G(xi) - G(eta)
        cg = cmath.cos(wg)
        if abs(cg) < _DENOM_TOL:
            raise PoleProximity(f"cos vanishes near w = {wg}")
        a1 = cmath.cosh(wf) / cg
        a5 = s5 * cmath.sinh(wf) / cg
        a7 = s7 * cmath.tan(wg)
        return WeightVector.of(a1, 1, 1, a1, a5, -a5, a7, a7)
    return ev


def _trivial_a(spec: FamilySpec):
    prof = spec.spectral

    def ev(u, xi, eta):
        h = prof(u, xi, eta)
        return WeightVector.of(h, 1, 1, h, h, h, 1, 1)
    return ev


def _trivial_b(spec: FamilySpec):
    F = spec.F

    def ev(u, xi, eta):
        fe = F(eta)
        if abs(fe) < _DENOM_TOL:
            raise PoleProximity("profile F vanishes at eta")
        e = F(xi) / fe * cmath.exp(complex(u))
        return WeightVector.of(e, 1, 1, e, e, -e, 1j, 1j)
    return ev


# -------------------- validation --------------------

_COLOR_GRID = tuple(np.linspace(-0.5, 0.5, 11))


def validate_spec(spec: FamilySpec, color_grid=_COLOR_GRID) -> list[str]:
    """Diagnostics list; empty iff the spec satisfies its family constraints
    on the sampled color domain.  Soft warnings are prefixed 'warning:'."""
    out: list[str] = []
    fam = spec.family
    if fam in (FamilyId.BAXTER_ELLIPTIC, FamilyId.BAXTER_TRIG):
        if spec.lam == 0:
            out.append("lam = 0: family degenerates to a constant")
        if spec.mu == 0:
            out.append("mu = 0: the closed form divides by sn(mu)"
                       if fam is FamilyId.BAXTER_ELLIPTIC
                       else "mu = 0: the closed form divides by tan(mu)")
        if fam is FamilyId.BAXTER_ELLIPTIC and spec.lam != 0 and spec.mu != 0:
            try:
                snmu, cnmu, dnmu = jacobi_sncndn(spec.mu, spec.k)
            except Exception as exc:  # pole or bad modulus
                out.append(f"mu unusable: {exc}")
            else:
                if abs(snmu) < _DENOM_TOL:
                    out.append("sn(mu) = 0: the closed form divides by sn(mu)")
                else:
                    alpha = spec.k * spec.lam * snmu
                    beta = spec.lam / snmu
                    gamma = spec.lam * cnmu * dnmu / snmu
                    scale = max(abs(alpha), abs(beta), abs(gamma))
                    degenerate = min(
                        abs(beta + sa * alpha + sg * gamma)
                        for sa in (1, -1) for sg in (1, -1))
                    if degenerate < 1e-8 * scale:
                        out.append("warning: beta +- alpha +- gamma ~ 0; the "
                                   "elliptic form degenerates, use the trig family")
    elif fam in (FamilyId.FF_ELLIPTIC, FamilyId.FF_TANH):
        if spec.G is None or spec.H is None:
            out.append("profiles G and H are required")
        else:
            worst = max(abs(spec.G(x) ** 2 - spec.H(x) ** 2 - 1)
                        for x in color_grid)
            if worst > 1e-10:
                out.append(f"G^2 - H^2 = 1 fails on the color domain "
                           f"(worst |G^2-H^2-1| = {worst:.3e})")
        if spec.lam == 0:
            out.append("lam = 0: family degenerates to a constant")
    elif fam is FamilyId.FF_TRIG:
        if spec.G is None:
            out.append("profile G is required")
        else:
            worst = max(abs(cmath.sqrt(spec.G(x) ** 2) - spec.G(x))
                        for x in color_grid)
            if worst > 1e-10:
                out.append("G must stay in the right half plane "
                           "(principal sqrt(G^2) must equal G)")
        if spec.lam == 0:
            out.append("lam = 0: family degenerates to a constant")
    elif fam is FamilyId.FF_HYPERBOLIC:
        if spec.lam == 0 and spec.mu == 0:
            out.append("lam and mu must not vanish simultaneously")
        if spec.G is None:
            out.append("profile G is required")
    elif fam is FamilyId.TRIVIAL_A:
        if spec.spectral is None:
            out.append("a spectral profile is required")
    elif fam is FamilyId.TRIVIAL_B:
        zeros = [x for x in color_grid if abs(spec.F(x)) < _DENOM_TOL]
        if zeros:
            out.append(f"profile F vanishes on the color domain at {zeros[:3]}")
    return out


# -------------------- analytic spectral-derivative coefficients ----------

def _analytic_coeffs(spec: FamilySpec, xi: complex):
    """m_i = d/du a_i at u = 0, eta = xi.  None for the trivial families,
    whose weights violate the identity initial value."""
    fam = spec.family
    m = np.zeros(8, dtype=complex)
    if fam is FamilyId.BAXTER_ELLIPTIC:
        snmu, cnmu, dnmu = jacobi_sncndn(spec.mu, spec.k)
        m[0] = m[3] = spec.lam * cnmu * dnmu / snmu
        m[4] = m[5] = spec.s5 * spec.lam / snmu
        m[6] = m[7] = spec.s7 * spec.k * spec.lam * snmu
    elif fam is FamilyId.BAXTER_TRIG:
        smu, cmu = cmath.sin(spec.mu), cmath.cos(spec.mu)
        m[0] = m[3] = spec.lam / (smu * cmu)
        m[4] = m[5] = spec.s5 * spec.lam * cmu / smu
        m[6] = m[7] = spec.s7 * spec.lam * smu / cmu
    elif fam in (FamilyId.FF_ELLIPTIC, FamilyId.FF_TANH):
        k = spec.k if fam is FamilyId.FF_ELLIPTIC else 1.0
        Gx, Hx = spec.G(xi), spec.H(xi)
        scale = 1.0 + abs(Gx) ** 2 + abs(Hx) ** 2
        m1 = spec.lam * _root(Hx * Hx, scale) * _sign_unit(Hx * Gx, scale)
        m5 = spec.lam * spec.delta * _root(Gx * Gx, scale)
        m[0], m[3] = m1, -m1
        m[4] = m[5] = m5
        m[6] = m[7] = spec.s7 * k * spec.lam
    elif fam is FamilyId.FF_TRIG:
        Gx = spec.G(xi)
        m1 = spec.lam * cmath.sqrt(Gx * Gx)
        m[0], m[3] = m1, -m1
        m[4] = m[5] = spec.s5 * m1
        m[6] = m[7] = spec.s7 * spec.lam
    elif fam is FamilyId.FF_HYPERBOLIC:
        m[4] = spec.s5 * spec.lam
        m[5] = -m[4]
        m[6] = m[7] = spec.s7 * spec.mu
    else:
        return None
    return m


# -------------------- literature reductions --------------------

def murakami_reduction(u, xi, eta, k) -> WeightVector:
    """Hyperbolic-color specialization of the elliptic free-fermion family
    (unit rate, G = cosh(2 xi), H = sinh(2 xi), F = 0).

    The version satisfying the matrix identity carries
    a5 = cosh(xi+eta) sn + sinh(xi-eta) cd; the a5/a6 assignment often
    quoted in the literature is the index-swapped image of this one.
    """
    u, xi, eta = complex(u), complex(xi), complex(eta)
    snu, cnu, dnu = jacobi_sncndn(u, k)
    if abs(dnu) < _DENOM_TOL:
        raise PoleProximity(f"dn vanishes near u = {u}")
    cdu = cnu / dnu
    chm, shm = cmath.cosh(xi - eta), cmath.sinh(xi - eta)
    chp, shp = cmath.cosh(xi + eta), cmath.sinh(xi + eta)
    a1 = chm * cdu + shp * snu
    a4 = chm * cdu - shp * snu
    a5 = chp * snu + shm * cdu
    a6 = chp * snu - shm * cdu
    a7 = complex(k) * snu * cdu
    return WeightVector.of(a1, 1, 1, a4, a5, a6, a7, a7)


def bs_scale(u, xi, eta, k) -> complex:
    """The scaling profile of the non-gauge construction below:
    sqrt(e(xi) e(eta) sn(xi) sn(eta)) (1 - e(u)) / sn(u/2)."""
    u, xi, eta, k = complex(u), complex(xi), complex(eta), complex(k)
    snx = jacobi_sncndn(xi, k)[0]
    sne = jacobi_sncndn(eta, k)[0]
    snu2 = jacobi_sncndn(u / 2, k)[0]
    if abs(snu2) < _DENOM_TOL:
        raise PoleProximity("sn(u/2) vanishes; scale profile has a pole")
    root = cmath.sqrt(elliptic_exp(xi, k) * elliptic_exp(eta, k) * snx * sne)
    return root * (1 - elliptic_exp(u, k)) / snu2


def bazhanov_stroganov(u, xi, eta, k) -> WeightVector:
    """Non-gauge eight-vertex solution built on the elliptic exponential
    e(z) = cn(z) + i sn(z):

        a1 = 1 - e(u) e(xi) e(eta)          a4 = e(u) - e(xi) e(eta)
        a5 = e(xi) - e(u) e(eta)            a6 = e(eta) - e(u) e(xi)
        a2 = a3 = sqrt(e(xi) e(eta) sn(xi) sn(eta)) (1 - e(u)) / sn(u/2)
        a7 = a8 = k  sqrt(e(xi) e(eta) sn(xi) sn(eta)) (1 - e(u)) cd(u/2)

    This is exactly the scale profile ``bs_scale`` applied to the elliptic
    free-fermion family with G = 1/sn, H = cn/sn, F = 0 and rate 1/2.  The
    corner weight is cd(u/2)-shaped: sn(z + K) = cd(z), so quotations with
    an sn(u/2) corner differ by a quarter-period shift and do not solve the
    matrix identity.
    """
    u, xi, eta, k = complex(u), complex(xi), complex(eta), complex(k)
    eu = elliptic_exp(u, k)
    ex = elliptic_exp(xi, k)
    ee = elliptic_exp(eta, k)
    snx = jacobi_sncndn(xi, k)[0]
    sne = jacobi_sncndn(eta, k)[0]
    s2, c2, d2 = jacobi_sncndn(u / 2, k)
    if abs(s2) < _DENOM_TOL:
        raise PoleProximity("sn(u/2) vanishes; a2 has a pole at this point")
    if abs(d2) < _DENOM_TOL:
        raise PoleProximity("dn(u/2) vanishes; a7 has a pole at this point")
    root = cmath.sqrt(ex * ee * snx * sne)
    a2 = root * (1 - eu) / s2
    a7 = k * root * (1 - eu) * (c2 / d2)
    return WeightVector.of(1 - eu * ex * ee, a2, a2, eu - ex * ee,
                           ex - eu * ee, ee - eu * ex, a7, a7)


def branch_crossings(color_points, k) -> int:
    """Count negative-real-axis crossings of the square-root argument
    e(xi) e(eta) sn(xi) sn(eta) along a sweep of (xi, eta) pairs.  A nonzero
    count warns that the principal branch flips sign inside the sweep."""
    args = []
    for xi, eta in color_points:
        v = (elliptic_exp(xi, k) * elliptic_exp(eta, k)
             * jacobi_sncndn(xi, k)[0] * jacobi_sncndn(eta, k)[0])
        args.append(cmath.phase(v))
    crossings = 0
    for a, b in zip(args, args[1:]):
        if abs(b - a) > cmath.pi:
            crossings += 1
    if crossings:
        warnings.warn(f"square-root argument crossed the branch cut "
                      f"{crossings} time(s) along the sweep",
                      BranchAmbiguityWarning, stacklevel=2)
    return crossings


# -------------------- JSON serialization --------------------

_SPEC_KEYS = {"family", "k", "lambda", "mu", "signs", "profiles"}
_SIGN_KEYS = {"s5", "s7", "delta"}
_PROFILE_KEYS = {"F", "G", "H", "spectral"}


def spec_to_json(spec: FamilySpec) -> dict:
    doc = {
        "family": spec.family.value,
        "k": _cjson(spec.k),
        "lambda": _cjson(spec.lam),
        "mu": _cjson(spec.mu),
        "signs": {"s5": spec.s5, "s7": spec.s7, "delta": spec.delta},
        "profiles": {},
    }
    doc["profiles"]["F"] = spec.F.to_json()
    for name in ("G", "H"):
        prof = getattr(spec, name)
        if prof is not None:
            doc["profiles"][name] = prof.to_json()
    if spec.spectral is not None:
        doc["profiles"]["spectral"] = spec.spectral.to_json()
    return doc


def spec_from_json(doc: dict) -> FamilySpec:
    _check_keys(doc, _SPEC_KEYS, "family spec")
    if "family" not in doc:
        raise InvalidSpec("family spec needs a 'family' field")
    try:
        fam = FamilyId(doc["family"])
    except ValueError:
        raise InvalidSpec(f"unknown family {doc['family']!r}") from None
    signs = doc.get("signs", {})
    _check_keys(signs, _SIGN_KEYS, "signs")
    profiles = doc.get("profiles", {})
    _check_keys(profiles, _PROFILE_KEYS, "profiles")

    def prof(name):
        return (ColorProfile.from_json(profiles[name])
                if name in profiles else None)

    return FamilySpec(
        family=fam,
        k=_cval(doc.get("k", 0.5)),
        lam=_cval(doc.get("lambda", 1.0)),
        mu=_cval(doc.get("mu", 0.5)),
        s5=signs.get("s5", 1),
        s7=signs.get("s7", 1),
        delta=signs.get("delta", 1),
        F=prof("F") or _ZERO,
        G=prof("G"),
        H=prof("H"),
        spectral=(SpectralProfile.from_json(profiles["spectral"])
                  if "spectral" in profiles else None),
    )


def with_murakami_profiles(k, lam=1.0, delta=1, s7=1) -> FamilySpec:
    """The elliptic free-fermion spec whose evaluations coincide with
    murakami_reduction at lam = 1."""
    return FamilySpec(family=FamilyId.FF_ELLIPTIC, k=k, lam=lam,
                      delta=delta, s7=s7,
                      G=ColorProfile("cosh", (2, 0)),
                      H=ColorProfile("sinh", (2, 0)))


def with_bs_profiles(k, delta=1, s7=1) -> FamilySpec:
    """The elliptic free-fermion spec entering the bazhanov_stroganov
    construction: G = 1/sn, H = cn/sn, F = 0, rate 1/2."""
    return FamilySpec(family=FamilyId.FF_ELLIPTIC, k=k, lam=0.5,
                      delta=delta, s7=s7,
                      G=ColorProfile("recip_sn", (k,)),
                      H=ColorProfile("cn_over_sn", (k,)))
