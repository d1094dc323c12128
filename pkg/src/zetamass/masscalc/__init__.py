"""Parabolic-reduction mass and volume calculus."""

from .functionfield import (
    Composition,
    HNPartial,
    IdentityCheck,
    IndividualMass,
    QPower,
    compositions,
    frac,
    hn_series_partial,
    semistable_mass,
    total_mass_ff,
    wz_average_identity,
    wz_individual_mass,
    zagier_semistable_mass,
)
from .inversion import inversion_consistency
from .numberfield import (
    CONVENTIONS,
    completed_riemann_zeta,
    ks_coefficient,
    ks_total_from_semistable,
    siegel_volume_nf,
    weng_coefficients,
    weng_semistable_volume_nf,
)
from .tables import MassTable, ff_mass_table, nf_mass_table

__all__ = [
    "CONVENTIONS",
    "Composition",
    "HNPartial",
    "IdentityCheck",
    "IndividualMass",
    "MassTable",
    "QPower",
    "completed_riemann_zeta",
    "compositions",
    "ff_mass_table",
    "frac",
    "hn_series_partial",
    "inversion_consistency",
    "ks_coefficient",
    "ks_total_from_semistable",
    "nf_mass_table",
    "semistable_mass",
    "siegel_volume_nf",
    "total_mass_ff",
    "weng_coefficients",
    "weng_semistable_volume_nf",
    "wz_average_identity",
    "wz_individual_mass",
    "zagier_semistable_mass",
]
