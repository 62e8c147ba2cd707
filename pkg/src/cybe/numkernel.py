"""Jacobi elliptic functions for complex argument and complex modulus.

Everything downstream (weight families, literature reductions, identity
suites) reduces to the triple (sn, cn, dn).  They are computed with the
descending Landen transformation: with ``k' = sqrt(1 - k^2)`` and
``k1 = (1 - k')/(1 + k')`` one has

    sn(z, k) = (1 + k1) s / (1 + k1 s^2)
    cn(z, k) = c d / (1 + k1 s^2)
    dn(z, k) = (1 - k1 s^2) / (1 + k1 s^2)

where (s, c, d) are the functions of modulus k1 at argument z/(1 + k1).
The ladder |k| -> |k1| ~ |k|^2/4 converges quadratically; once the squared
modulus m = k^2 is below ``_SMALL_M`` the first-order trigonometric series
closes the recursion at full double precision.

Branch conventions: the principal square root is used at every rung, which
is single-valued because 1 - m stays off the negative real axis for every
supported modulus (real |k| > 1 is rejected).  The functions depend on the
modulus only through m = k^2, so k and -k agree.

Degenerate moduli are exact: m = 0 gives (sin, cos, 1) and |m - 1| below
``_NEAR_ONE`` is routed to the hyperbolic forms (tanh, sech, sech) with a
first-order correction in 1 - m, exact at k = 1.
"""

from __future__ import annotations

import cmath

from .errors import ModulusOutOfRange, PoleProximity

# Squared-modulus thresholds for the series / hyperbolic endpoints.
_SMALL_M = 1e-10
_NEAR_ONE = 5e-9
_MODULUS_MAX = 1.0 + 1e-9   # |k| cap, slightly padded for roundoff
_MAX_LADDER = 40

# |dn| (or |cn|) beyond this implies the argument is within ~1e-9 of a
# lattice pole, where all three functions have simple poles.
_POLE_MAGNITUDE = 1e9

# cd = cn/dn is rejected when |dn| is below this.
_CD_DENOM_TOL = 1e-12


def jacobi_sncndn(z: complex, k: complex) -> tuple[complex, complex, complex]:
    """Return (sn, cn, dn) at argument ``z`` for modulus ``k``.

    Raises ModulusOutOfRange for |k| beyond the supported disc (or real
    k > 1), and PoleProximity when the result indicates a lattice pole
    closer than ~1e-9.
    """
    z = complex(z)
    k = complex(k)
    if not (_finite(z) and _finite(k)):
        raise ModulusOutOfRange("argument and modulus must be finite")
    m = k * k
    if abs(k) > _MODULUS_MAX:
        raise ModulusOutOfRange(f"|k| = {abs(k):.6g} exceeds {_MODULUS_MAX}")
    if m.imag == 0.0 and m.real > 1.0 and abs(m - 1.0) > _NEAR_ONE:
        raise ModulusOutOfRange("real modulus k > 1 is not supported")

    if abs(m - 1.0) <= _NEAR_ONE:
        sn, cn, dn = _hyperbolic_correction(z, m)
    else:
        sn, cn, dn = _landen(z, m)

    if not (_finite(sn) and _finite(cn) and _finite(dn)):
        raise PoleProximity(f"pole of the elliptic functions at z = {z}")
    if max(abs(cn), abs(dn)) > _POLE_MAGNITUDE:
        raise PoleProximity(f"z = {z} is within tolerance of a lattice pole")
    return sn, cn, dn


def jacobi_cd(z: complex, k: complex) -> complex:
    """cn(z)/dn(z); raises PoleProximity at zeros of dn."""
    sn, cn, dn = jacobi_sncndn(z, k)
    if abs(dn) < _CD_DENOM_TOL:
        raise PoleProximity(f"dn({z}) vanishes; cd has a pole here")
    return cn / dn


def elliptic_exp(z: complex, k: complex) -> complex:
    """The elliptic exponential cn(z) + i sn(z); reduces to exp(iz) at k=0."""
    sn, cn, _ = jacobi_sncndn(z, k)
    return cn + 1j * sn


def _finite(v: complex) -> bool:
    return cmath.isfinite(v)


def _landen(z: complex, m: complex) -> tuple[complex, complex, complex]:
    ladder: list[complex] = []
    while abs(m) > _SMALL_M:
        kp = cmath.sqrt(1.0 - m)
        k1 = (1.0 - kp) / (1.0 + kp)
        ladder.append(k1)
        z = z / (1.0 + k1)
        m = k1 * k1
        if len(ladder) > _MAX_LADDER:
            raise ModulusOutOfRange("Landen ladder failed to converge")
    sn, cn, dn = _small_m_series(z, m)
    for k1 in reversed(ladder):
        s2 = sn * sn
        den = 1.0 + k1 * s2
        sn = (1.0 + k1) * sn / den
        cn = cn * dn / den
        dn = (1.0 - k1 * s2) / den
    return sn, cn, dn


def _small_m_series(z: complex, m: complex) -> tuple[complex, complex, complex]:
    s = cmath.sin(z)
    c = cmath.cos(z)
    if m == 0.0:
        return s, c, 1.0 + 0j
    corr = 0.25 * m * (z - s * c)
    return s - corr * c, c + corr * s, 1.0 - 0.5 * m * s * s


def _hyperbolic_correction(z: complex, m: complex) -> tuple[complex, complex, complex]:
    sh = cmath.sinh(z)
    ch = cmath.cosh(z)
    if abs(ch) > 1e150:
        raise PoleProximity("hyperbolic overflow; argument too large at k ~ 1")
    t = sh / ch
    se = 1.0 / ch
    mp = 1.0 - m
    if mp == 0.0:
        return t, se, se
    w = sh * ch
    sn = t + 0.25 * mp * (w - z) * se * se
    cn = se - 0.25 * mp * (w - z) * t * se
    dn = se + 0.25 * mp * (w + z) * t * se
    return sn, cn, dn
