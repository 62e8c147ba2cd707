"""Deterministic pole-free sampling of evaluation points.

Candidate points are drawn from a seeded generator and rejected when the
family raises near a pole or produces weights above ``max_weight`` (which
would amplify roundoff in the cubic residuals).  Rejection keeps sampling
reproducible: the accepted sequence is a pure function of the seed.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import CybeError

_MAX_ATTEMPT_FACTOR = 200


@dataclass(frozen=True)
class SamplePlan:
    n: int = 100
    seed: int = 0
    u_span: tuple[float, float] = (-0.35, 0.35)
    color_span: tuple[float, float] = (-0.5, 0.5)
    max_weight: float = 15.0


def _accept(fam, pts, max_weight) -> bool:
    try:
        return all(fam.eval(*p).scale() <= max_weight for p in pts)
    except CybeError:
        return False


def draw_triples(fam, plan: SamplePlan):
    """Yield ``plan.n`` tuples (u, v, xi, eta, lam) whose three evaluation
    points (u,xi,eta), (u+v,xi,lam), (v,eta,lam) are pole-free."""
    rng = np.random.default_rng(plan.seed)
    out = []
    attempts = 0
    while len(out) < plan.n:
        attempts += 1
        if attempts > _MAX_ATTEMPT_FACTOR * plan.n:
            raise CybeError("sample rejection rate too high; widen the "
                            "spans or relax max_weight")
        u, v = rng.uniform(*plan.u_span, 2)
        xi, eta, lam = rng.uniform(*plan.color_span, 3)
        pts = ((u, xi, eta), (u + v, xi, lam), (v, eta, lam))
        if _accept(fam, pts, plan.max_weight):
            out.append((u, v, xi, eta, lam))
    return out


def draw_points(fam, plan: SamplePlan):
    """Yield ``plan.n`` pole-free single points (u, xi, eta)."""
    rng = np.random.default_rng(plan.seed)
    out = []
    attempts = 0
    while len(out) < plan.n:
        attempts += 1
        if attempts > _MAX_ATTEMPT_FACTOR * plan.n:
            raise CybeError("sample rejection rate too high; widen the "
                            "spans or relax max_weight")
        u = rng.uniform(*plan.u_span)
        xi, eta = rng.uniform(*plan.color_span, 2)
        if _accept(fam, ((u, xi, eta), (-u, eta, xi)), plan.max_weight):
            out.append((u, xi, eta))
    return out
