"""reconet: simulate network dynamics, reconstruct networks from time
series, and compare graphs with a suite of distance measures."""

from ._version import __version__
from .distances import (
    DistanceConfig,
    DistanceValue,
    MeasureOutcome,
    compute_distance,
    dist_deltacon,
    dist_degree_jsd,
    dist_frobenius,
    dist_hamming,
    dist_him,
    dist_ipsen_mikhailov,
    dist_jaccard,
    dist_laplacian_spectrum,
    dist_netsimile,
    dist_resistance_perturbation,
    distance_all,
)
from .dynamics import (
    TimeSeriesMatrix,
    kuramoto_update,
    simulate_diffusion,
    simulate_ising_glauber,
    simulate_kuramoto,
    simulate_random_walker,
    simulate_sis,
    simulate_voter,
)
from .errors import (
    InsufficientDataError,
    NumericalError,
    NumericalInputError,
    ParameterError,
    ParseError,
    PreconditionError,
    ReconetError,
    SizeMismatchError,
    UnknownMethodError,
)
from .evaluation import (
    AucScore,
    EdgeScoreReport,
    auc_score,
    confusion_at_threshold,
    score_reconstruction,
    symmetrize_result,
)
from .generators import barabasi_albert, erdos_renyi, ring_lattice
from .graph import (
    Graph,
    SpectralDecomposition,
    degrees,
    is_connected,
    laplacian,
    pseudoinverse,
    symmetric_eigen,
)
from .io import read_edgelist, read_matrix_csv, write_edgelist, write_matrix_csv
from .pipeline import PipelineConfig, load_pipeline_config, run_pipeline
from .reconstruction import (
    CorrelationReconstructor,
    GraphicalLassoReconstructor,
    GrangerCausalityReconstructor,
    MeanFieldIsingReconstructor,
    MutualInformationReconstructor,
    PartialCorrelationReconstructor,
    RECONSTRUCTORS,
    ReconstructionResult,
    ThresholdSpec,
    TransferEntropyReconstructor,
    apply_threshold,
    parse_threshold_spec,
    threshold_absolute,
    threshold_quantile,
    threshold_target_degree,
    threshold_top_k,
)

__all__ = [name for name in dir() if not name.startswith("_")]
