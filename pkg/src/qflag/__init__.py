"""Combinatorics and straightening laws for quantum minuscule flag manifolds."""

from qflag.rootsys import RootDatum, Root, Weight, build_root_datum, parse_cartan_type
from qflag.weylgroup import MinusculePoset, WeylElement, build_minuscule_poset
from qflag.posets import FinitePoset, WonderfulReport, check_wonderful, count_decreasing_chains
from qflag.charhilb import HilbertSeries, flag_hilbert_series, gorenstein_certificate, weyl_dim

__version__ = "0.1.0"

__all__ = [
    "FinitePoset",
    "HilbertSeries",
    "MinusculePoset",
    "Root",
    "RootDatum",
    "Weight",
    "WeylElement",
    "WonderfulReport",
    "build_minuscule_poset",
    "build_root_datum",
    "check_wonderful",
    "count_decreasing_chains",
    "flag_hilbert_series",
    "gorenstein_certificate",
    "parse_cartan_type",
    "weyl_dim",
]
