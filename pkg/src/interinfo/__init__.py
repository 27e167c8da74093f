"""Discrete information measures, maximum-entropy fitting, anticipatory
logistic dynamics, and a bibliometric factor pipeline."""

from .biblio import (
    DEFAULT_STOPWORDS,
    DocRecord,
    FeatureSpec,
    extract_features,
    juxtapose,
    parse_records,
    write_records,
)
from .dynamics import (
    DynamicsParams,
    Trajectory,
    hyper_incursive_step,
    incursive_step,
    recursive_step,
    simulate,
    steady_state_incursive,
)
from .errors import (
    ArityError,
    AxisNotFoundError,
    CaseAlignmentError,
    ComplexRootError,
    DomainError,
    EigenConvergenceError,
    EmptyFeatureError,
    InterinfoError,
    MalformedRecordError,
    MarginCoverageError,
    SubsetError,
    TableError,
    ZeroVarianceError,
)
from .factors import (
    DataMatrix,
    LoadingsMatrix,
    bin_loadings,
    correlation_matrix,
    extract_factors,
    jacobi_eigh,
    varimax,
    varimax_criterion,
    varimax_rotate,
)
from .ipf import (
    IpfResult,
    MeasureReport,
    all_pairs,
    full_report,
    interaction_information,
    ipf_fit,
    redundancy,
)
from .measures import co_information, entropy, marginalize, q_measure, transmission
from .pipeline import PipelineConfig, PipelineResult, SetResult, run_pipeline
from .table import Axis, JointTable

__version__ = "0.1.0"

__all__ = [
    "ArityError",
    "Axis",
    "AxisNotFoundError",
    "CaseAlignmentError",
    "ComplexRootError",
    "DEFAULT_STOPWORDS",
    "DataMatrix",
    "DocRecord",
    "DomainError",
    "DynamicsParams",
    "EigenConvergenceError",
    "EmptyFeatureError",
    "FeatureSpec",
    "InterinfoError",
    "IpfResult",
    "JointTable",
    "LoadingsMatrix",
    "MalformedRecordError",
    "MarginCoverageError",
    "MeasureReport",
    "PipelineConfig",
    "PipelineResult",
    "SetResult",
    "SubsetError",
    "TableError",
    "Trajectory",
    "ZeroVarianceError",
    "all_pairs",
    "bin_loadings",
    "co_information",
    "correlation_matrix",
    "entropy",
    "extract_factors",
    "extract_features",
    "full_report",
    "hyper_incursive_step",
    "incursive_step",
    "interaction_information",
    "ipf_fit",
    "jacobi_eigh",
    "juxtapose",
    "marginalize",
    "parse_records",
    "q_measure",
    "recursive_step",
    "redundancy",
    "run_pipeline",
    "simulate",
    "steady_state_incursive",
    "transmission",
    "varimax",
    "varimax_criterion",
    "varimax_rotate",
    "write_records",
]
