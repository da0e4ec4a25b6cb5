"""Floor of a divisor supported on the distinguished places."""

from __future__ import annotations

from .curve import CurveCtx
from .rrspace import SupportedDivisor, omega_set


def floor_divisor(curve: CurveCtx, H: SupportedDivisor) -> SupportedDivisor:
    """Coefficient-wise maxima of ``-i``, ``-i - m(q+1) j_mu``, ``-i - m k_nu`` and the weight over Omega(H)."""
    pts = omega_set(curve, H)
    if not pts:
        raise ValueError(f"ell({H}) = 0, the floor is undefined")
    m, m1 = curve.m, curve.mq1
    r0 = max(-p.i for p in pts)
    rmu = tuple(max(-p.i - m1 * p.j[mu] for p in pts) for mu in range(curve.q - 1))
    snu = tuple(max(-p.i - m * p.k[nu] for p in pts) for nu in range(curve.q**2 - 1))
    t = max(p.weight(curve) for p in pts)
    return SupportedDivisor((r0,) + rmu, snu, t)


def floor_via_gcd(curve: CurveCtx, H: SupportedDivisor) -> SupportedDivisor:
    """``-gcd`` (coefficient-wise minimum) of the principal divisors of the basis of L(H)."""
    pts = omega_set(curve, H)
    if not pts:
        raise ValueError(f"ell({H}) = 0, the floor is undefined")
    divs = [p.divisor(curve).coefficients() for p in pts]
    low = [min(col) for col in zip(*divs)]
    return SupportedDivisor.from_coefficients(curve.q, [-v for v in low])


def floor_code_bound(curve: CurveCtx, H: SupportedDivisor) -> int:
    """Distance bound 2 deg H - (2g - 2) for C_Omega(D, H + floor(H))."""
    if not H.is_effective():
        raise ValueError("H must be effective")
    if not omega_set(curve, H):
        raise ValueError(f"ell({H}) = 0, the floor is undefined")
    return 2 * H.degree - (2 * curve.g - 2)
