"""Riemann zeta evaluation and functional-equation verification."""

from ._core import (
    ConfigError,
    DomainError,
    IoError,
    OverflowError,
    ParamError,
    PoleError,
    PrecisionError,
    SingularityError,
    ZrcError,
    catalogue,
    cgamma,
    choose_parameters,
    clog_gamma,
    half_integer_table,
    residual,
    scan,
    verdict_all,
    xi,
    zeta,
    zeta_em_raw,
)

__all__ = [
    "ConfigError",
    "DomainError",
    "IoError",
    "OverflowError",
    "ParamError",
    "PoleError",
    "PrecisionError",
    "SingularityError",
    "ZrcError",
    "catalogue",
    "cgamma",
    "choose_parameters",
    "clog_gamma",
    "half_integer_table",
    "residual",
    "scan",
    "verdict_all",
    "xi",
    "zeta",
    "zeta_em_raw",
]
