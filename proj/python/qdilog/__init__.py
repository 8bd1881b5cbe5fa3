"""Quantum dilogarithm evaluation and q-Weyl algebra verification.

Thin re-export of the compiled extension module.
"""

try:
    from ._qdilog import (  # noqa: F401  (installed package layout)
        InvalidParameter,
        NonConvergence,
        NotDivisible,
        PoleEvaluation,
        UnresolvablePole,
        ft_gb_check,
        gb,
        little_gb,
        qbeta,
        qbinom_check,
        verify,
        wavepacket_coeff,
        zeta_b,
    )
except ImportError:  # build-tree layout: extension next to the package
    from _qdilog import (  # noqa: F401
        InvalidParameter,
        NonConvergence,
        NotDivisible,
        PoleEvaluation,
        UnresolvablePole,
        ft_gb_check,
        gb,
        little_gb,
        qbeta,
        qbinom_check,
        verify,
        wavepacket_coeff,
        zeta_b,
    )

__all__ = [
    "zeta_b",
    "gb",
    "little_gb",
    "qbeta",
    "ft_gb_check",
    "wavepacket_coeff",
    "qbinom_check",
    "verify",
    "PoleEvaluation",
    "NonConvergence",
    "UnresolvablePole",
    "NotDivisible",
    "InvalidParameter",
]
