"""Link-homotopy invariants of three-component links in R^3 via the
generalized Gauss map T^3 -> S^2."""

from .errors import (
    CorrespondenceMismatch,
    DegenerateInput,
    DisjointnessViolation,
    GridTooLarge,
    NotARotation,
    NotNullHomologous,
    ParseError,
    TrilinkError,
    UnknownPreset,
)
from .fields import Grid3Field, characteristic_form, sample_gauss_field
from .fourier import FourierField, dft3, idft3
from .gauss import invariant_report, pairwise_linking, subtorus_degree
from .link import Link3, TrigCurve, load_link, preset, transform_link
from .mu import (
    least_norm_primitive,
    mu_fourier,
    mu_fourier_link,
    mu_helicity,
    mu_spherical,
    mu_whitehead,
)

__version__ = "0.1.0"
