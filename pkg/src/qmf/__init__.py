"""Exact Fourier coefficients and congruences of degree-2 quaternionic
modular forms over the Hurwitz order."""

from .exactnum import bernoulli, is_prime, kronecker, ord_p, sigma
from .fexp import CongCheck, FourierExpansion, cong_mod
from .forms import (
    build_form,
    eisenstein_h,
    g_h,
    maass_lift,
    x10,
    x12,
    x14,
    x14_closed,
)
from .quatlat import QuatCoord, enumerate_dual
from .series import QSeries, delta_q, eisenstein_q, express_in_e4_e6, tau, tau_star
from .tmat import TMatrix, enumerate_psd, parse_tmatrix

__version__ = "0.1.0"

__all__ = [
    "CongCheck",
    "FourierExpansion",
    "QSeries",
    "QuatCoord",
    "TMatrix",
    "bernoulli",
    "build_form",
    "cong_mod",
    "delta_q",
    "eisenstein_h",
    "eisenstein_q",
    "enumerate_dual",
    "enumerate_psd",
    "express_in_e4_e6",
    "g_h",
    "is_prime",
    "kronecker",
    "maass_lift",
    "ord_p",
    "parse_tmatrix",
    "sigma",
    "tau",
    "tau_star",
    "x10",
    "x12",
    "x14",
    "x14_closed",
]
