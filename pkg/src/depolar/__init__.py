"""Complete-positivity regions of anisotropic depolarizing channels."""
from .channels import (
    ChannelMatrices,
    CompressionMap,
    apply_channel,
    build_A,
    build_channel,
    build_M,
    build_T,
    reshuffle,
)
from .cp_region import (
    ClosedFormValues,
    CPReport,
    Region,
    classify,
    is_cp,
    quart_closed_form,
    qubit_closed_form,
    qutrit_closed_form,
)
from .su_basis import (
    BasisKind,
    DimensionError,
    GeneratorBasis,
    MalformedStateError,
    coherence_from_density,
    default_basis,
    density_from_coherence,
    gell_mann_basis,
    pauli_tensor_basis,
    validate_basis,
)

__version__ = "0.1.0"

__all__ = [
    "ChannelMatrices",
    "CompressionMap",
    "apply_channel",
    "build_A",
    "build_channel",
    "build_M",
    "build_T",
    "reshuffle",
    "ClosedFormValues",
    "CPReport",
    "Region",
    "classify",
    "is_cp",
    "quart_closed_form",
    "qubit_closed_form",
    "qutrit_closed_form",
    "BasisKind",
    "DimensionError",
    "GeneratorBasis",
    "MalformedStateError",
    "coherence_from_density",
    "default_basis",
    "density_from_coherence",
    "gell_mann_basis",
    "pauli_tensor_basis",
    "validate_basis",
]
