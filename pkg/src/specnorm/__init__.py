"""Norms on complex matrices induced by iid random vectors.

    >>> import numpy as np
    >>> from specnorm import Exponential, norm_exact
    >>> round(norm_exact(np.array([1.0, 1.0]), Exponential(), 2) ** 2, 12)
    3.0
"""

from .combinatorics import (
    Partition,
    complete_bell,
    complete_homogeneous,
    enumerate_partitions,
    gamma,
    partition_y,
)
from .distributions import (
    Bernoulli,
    Exponential,
    Normal,
    Pareto,
    cumulants,
    mgf_product_coefficient,
    moment,
    parse_distribution,
    sample_vector,
)
from .extension import norm_extended, trace_T
from .figures import CircleTable, circle_samples
from .hermitian import (
    NormEstimate,
    closed_form_bernoulli,
    closed_form_normal,
    closed_form_pareto_2x2,
    continuity_scan,
    norm_exact,
    norm_exact_bell,
    norm_exact_mgf,
    norm_exact_partition,
    norm_mc,
)
from .linalg import (
    ADJOINT,
    PLAIN,
    HermitianMatrix,
    hermitian_eigenvalues,
    random_hermitian,
    random_unitary,
    trace_word,
)
from .majorization import (
    BirkhoffDecomposition,
    DoublyStochastic,
    birkhoff_decompose,
    hlp_transfer,
    ky_fan_check,
    majorization_pair_generator,
    majorizes,
)
from .verify import run_verify

__version__ = "0.1.0"
