"""Fast graphic approximation of non-graphic degree sequences."""

from .approximate import approximate
from .errors import (
    EmptySequence,
    GraphicSeqError,
    InvalidDegree,
    InvalidParameter,
    LengthMismatch,
    NonGraphic,
    NotPotentiallyGraphic,
    NotSorted,
    OddSum,
    PopulationMismatch,
    SamplingExhausted,
)
from .majorization import majorizes, meet, strictly_majorizes
from .metrics import DegreePmf, degree_pmf, discrepancy, total_variation, total_variation_l1
from .realize import Graph, degrees_of, havel_hakimi
from .sampling import sample_nongraphic_even, sample_power_law
from .sequence import DegreeSequence, from_unsorted, is_graphic, is_potentially_graphic
from .threshold import (
    ThresholdParams,
    threshold_graph,
    threshold_params,
    threshold_sequence,
    threshold_sequence_recursive,
    threshold_value,
)

__version__ = "0.1.0"
