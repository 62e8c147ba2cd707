"""Preset algebra for the free functions entering families and transforms.

Two shapes are needed: color profiles f(xi) (the arbitrary one-variable
functions of the closed forms and of the regauge/recolor transforms) and
spectral profiles g(u, xi, eta) (the arbitrary scaling functions and the
free weight of the first trivial solution).  Only a closed preset algebra
is supported; arbitrary user scripting is out of scope.
"""

from __future__ import annotations

from dataclasses import dataclass, field
import cmath

from .errors import InvalidSpec
from .numkernel import jacobi_sncndn

_COLOR_PRESETS = {
    "constant": 1,     # c
    "linear": 1,       # a -> a*x
    "affine": 2,       # a, b -> a*x + b
    "cosh": 2,         # a, b -> cosh(a*x + b)
    "sinh": 2,         # a, b -> sinh(a*x + b)
    "exp": 2,          # a, b -> exp(a*x + b)
    "recip_sn": 1,     # k -> 1/sn(x, k)
    "cn_over_sn": 1,   # k -> cn(x, k)/sn(x, k)
}

_SPECTRAL_PRESETS = {
    "const": 1,            # c
    "exp_affine": 3,       # a, b, c -> exp(a*u + b*xi + c*eta)
    "one_plus_bilinear": 1,  # a -> 1 + a*xi*eta
    "sin_bilinear": 2,     # a, b -> sin(a*u + b*xi*eta)
}


def _as_complex_tuple(params) -> tuple[complex, ...]:
    return tuple(complex(p) for p in params)


@dataclass(frozen=True)
class ColorProfile:
    """A one-variable profile from the preset algebra.

    ``factors`` turns the profile into a pointwise product of its factors;
    in that case ``preset`` must be "product" and ``params`` empty.
    """

    preset: str
    params: tuple[complex, ...] = ()
    factors: tuple["ColorProfile", ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "params", _as_complex_tuple(self.params))
        if self.preset == "product":
            if not self.factors:
                raise InvalidSpec("product profile needs at least one factor")
            return
        if self.preset not in _COLOR_PRESETS:
            raise InvalidSpec(f"unknown color profile preset {self.preset!r}")
        if len(self.params) != _COLOR_PRESETS[self.preset]:
            raise InvalidSpec(
                f"preset {self.preset!r} takes {_COLOR_PRESETS[self.preset]} "
                f"parameter(s), got {len(self.params)}")

    def __call__(self, x: complex) -> complex:
        x = complex(x)
        p = self.params
        if self.preset == "product":
            out = 1.0 + 0j
            for f in self.factors:
                out *= f(x)
            return out
        if self.preset == "constant":
            return p[0]
        if self.preset == "linear":
            return p[0] * x
        if self.preset == "affine":
            return p[0] * x + p[1]
        if self.preset == "cosh":
            return cmath.cosh(p[0] * x + p[1])
        if self.preset == "sinh":
            return cmath.sinh(p[0] * x + p[1])
        if self.preset == "exp":
            return cmath.exp(p[0] * x + p[1])
        if self.preset == "recip_sn":
            return 1.0 / jacobi_sncndn(x, p[0])[0]
        sn, cn, _ = jacobi_sncndn(x, p[0])
        return cn / sn

    def to_json(self) -> dict:
        doc = {"preset": self.preset, "params": [_cjson(p) for p in self.params]}
        if self.factors:
            doc["factors"] = [f.to_json() for f in self.factors]
        return doc

    @classmethod
    def from_json(cls, doc: dict) -> "ColorProfile":
        _check_keys(doc, {"preset", "params", "factors"}, "color profile")
        factors = tuple(cls.from_json(f) for f in doc.get("factors", []))
        return cls(doc["preset"], tuple(_cval(p) for p in doc.get("params", [])),
                   factors)


@dataclass(frozen=True)
class SpectralProfile:
    """A profile of (u, xi, eta) from the preset algebra."""

    preset: str
    params: tuple[complex, ...] = ()
    factors: tuple["SpectralProfile", ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "params", _as_complex_tuple(self.params))
        if self.preset == "product":
            if not self.factors:
                raise InvalidSpec("product profile needs at least one factor")
            return
        if self.preset not in _SPECTRAL_PRESETS:
            raise InvalidSpec(f"unknown spectral profile preset {self.preset!r}")
        if len(self.params) != _SPECTRAL_PRESETS[self.preset]:
            raise InvalidSpec(
                f"preset {self.preset!r} takes {_SPECTRAL_PRESETS[self.preset]} "
                f"parameter(s), got {len(self.params)}")

    def __call__(self, u: complex, xi: complex, eta: complex) -> complex:
        u, xi, eta = complex(u), complex(xi), complex(eta)
        p = self.params
        if self.preset == "product":
            out = 1.0 + 0j
            for f in self.factors:
                out *= f(u, xi, eta)
            return out
        if self.preset == "const":
            return p[0]
        if self.preset == "exp_affine":
            return cmath.exp(p[0] * u + p[1] * xi + p[2] * eta)
        if self.preset == "one_plus_bilinear":
            return 1.0 + p[0] * xi * eta
        return cmath.sin(p[0] * u + p[1] * xi * eta)

    def to_json(self) -> dict:
        doc = {"preset": self.preset, "params": [_cjson(p) for p in self.params]}
        if self.factors:
            doc["factors"] = [f.to_json() for f in self.factors]
        return doc

    @classmethod
    def from_json(cls, doc: dict) -> "SpectralProfile":
        _check_keys(doc, {"preset", "params", "factors"}, "spectral profile")
        factors = tuple(cls.from_json(f) for f in doc.get("factors", []))
        return cls(doc["preset"], tuple(_cval(p) for p in doc.get("params", [])),
                   factors)


def _cjson(z: complex) -> list[float]:
    return [z.real, z.imag]


def _cval(v) -> complex:
    if isinstance(v, (int, float)):
        return complex(v)
    if isinstance(v, (list, tuple)) and len(v) == 2:
        return complex(v[0], v[1])
    raise InvalidSpec(f"cannot parse complex value from {v!r}")


def _check_keys(doc: dict, allowed: set, what: str) -> None:
    if not isinstance(doc, dict):
        raise InvalidSpec(f"{what} must be a JSON object")
    unknown = set(doc) - allowed
    if unknown:
        raise InvalidSpec(f"unknown fields in {what}: {sorted(unknown)}")
