"""Exact-rational certification of the Basic Inequality for Prym multidegrees."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction

from prymfiber.errors import TooManyComponents
from prymfiber.picard.multidegree import Multidegree

logger = logging.getLogger(__name__)

DEFAULT_SUBCURVE_CAP = 20


@dataclass(frozen=True)
class SubcurveCertificate:
    subcurve: frozenset[str]
    d_Y: int
    k_Y: int
    g_Y: int
    m_Y: Fraction
    slack_low: Fraction
    slack_high: Fraction
    ktilde_Y: int

    @property
    def holds(self) -> bool:
        return self.slack_low >= 0 and self.slack_high >= 0

    @property
    def is_lower_equality(self) -> bool:
        return self.slack_low == 0


def m_value(d: int, g: int, g_y: int, k_y: int) -> Fraction:
    """m_Y = d/(g-1) * (g_Y - 1 + k_Y/2) - k_Y/2."""
    half_k = Fraction(k_y, 2)
    return Fraction(d, g - 1) * (g_y - 1 + half_k) - half_k


def certify_subcurve(md: Multidegree, mask: int) -> SubcurveCertificate:
    calc = md.subcurves
    degrees = md.degrees
    d_y = sum(degrees[c] for i, c in enumerate(calc.components) if mask >> i & 1)
    k_y = calc.boundary(mask)
    g_y = calc.arithmetic_genus(mask)
    m_y = m_value(md.total, md.model.total_genus, g_y, k_y)
    return SubcurveCertificate(
        subcurve=calc.members(mask),
        d_Y=d_y,
        k_Y=k_y,
        g_Y=g_y,
        m_Y=m_y,
        slack_low=d_y - m_y,
        slack_high=m_y + k_y - d_y,
        ktilde_Y=calc.tilde_boundary(mask),
    )


def basic_inequality_check(md: Multidegree, max_components: int = DEFAULT_SUBCURVE_CAP) -> list[SubcurveCertificate]:
    """One certificate per nonempty proper subset of components of X."""
    n = len(md.model.components)
    if n > max_components:
        raise TooManyComponents(f"{n} components; exhaustive certification is capped at {max_components}")
    certs = [certify_subcurve(md, mask) for mask in range(1, (1 << n) - 1)]
    violations = [c for c in certs if not c.holds]
    for cert in violations:
        logger.error(
            "Basic Inequality violated on %s: m_Y=%s d_Y=%d k_Y=%d",
            sorted(cert.subcurve), cert.m_Y, cert.d_Y, cert.k_Y,
        )
    logger.debug("Certified %d subcurves (%d violations)", len(certs), len(violations))
    return certs


def closed_orbit_criterion(md: Multidegree, certs: list[SubcurveCertificate]) -> bool:
    """Every subcurve with d_Y = m_Y must have k~_Y = 0."""
    ok = True
    for cert in certs:
        if cert.is_lower_equality and cert.ktilde_Y != 0:
            logger.error("d_Y = m_Y but k~_Y = %d on %s", cert.ktilde_Y, sorted(cert.subcurve))
            ok = False
    return ok
