"""Exact arithmetic for Gopakumar-Vafa / Gromov-Witten generating series."""

from .errors import (DimensionMismatch, GVError, NonzeroConstantTerm, NotAUnit,
                     NotSuperRigidShape, ParityError, ParseError, ResourceLimit,
                     StrictIntegrality, ValidityExhausted)
from .fano import FanoBPS, FanoSeries, fano_bps_from_gw, fano_gw_from_bps
from .gv import BPSTable, bps_from_gw, gw_from_bps
from .kernels import KernelCache, decompose_in_genus_basis, sin_kernel
from .lattice import LatticeClass, LatticeConfig, divisors, enumerate_classes
from .localcurves import LocalBPS, Partition, g_series, hook_lengths, local_bps, partitions
from .qseries import QSeries, exp, log1p, pushforward
from .structure import ETable, extract_e, series_from_e, superrigid_decompose
from .tableio import dumps, gen_bps_table, loads
from .tpoly import TPoly, invert_unit

__version__ = "0.1.0"

__all__ = [
    "BPSTable",
    "DimensionMismatch",
    "ETable",
    "FanoBPS",
    "FanoSeries",
    "GVError",
    "KernelCache",
    "LatticeClass",
    "LatticeConfig",
    "LocalBPS",
    "NonzeroConstantTerm",
    "NotAUnit",
    "NotSuperRigidShape",
    "ParityError",
    "ParseError",
    "Partition",
    "QSeries",
    "ResourceLimit",
    "StrictIntegrality",
    "TPoly",
    "ValidityExhausted",
    "bps_from_gw",
    "decompose_in_genus_basis",
    "divisors",
    "dumps",
    "enumerate_classes",
    "exp",
    "extract_e",
    "fano_bps_from_gw",
    "fano_gw_from_bps",
    "g_series",
    "gen_bps_table",
    "gw_from_bps",
    "hook_lengths",
    "invert_unit",
    "loads",
    "local_bps",
    "log1p",
    "partitions",
    "pushforward",
    "series_from_e",
    "sin_kernel",
    "superrigid_decompose",
]
