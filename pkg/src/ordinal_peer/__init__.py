"""Concentration, divergence, homogeneity and location statistics for ordinal
categorical distributions, with equivalence-class and peer-group tooling."""

from .core import (
    LambdaMuParams,
    OrdinalDistribution,
    SkewClass,
    SkewKind,
    SymmetrySub,
    entropy_index,
    lambda_dist,
    lambda_mu_dist,
    make_distribution,
    moments,
    skewness_class,
    symmetric_lambda_mu_dist,
)
from .concentration import (
    ConcentrationSpec,
    LorenzCurve,
    ci_from_diversity,
    cis_lower_bound,
    cis_upper_bound,
    concentration_index,
    diversity_from_ci,
    lorenz_curve,
    lorenz_zonoid,
)
from .divergence import (
    DI_JSD,
    LOV,
    VAR,
    Autocorrelation,
    Bcdf,
    PolarizationMeasure,
    bcdf,
    bcdfa,
    compactness,
    divergence_index,
    jsd,
    pi_lov,
    pi_variance,
    singleton_bcdfa,
)
from .homogeneity import (
    HomogeneityConfig,
    ValidityReport,
    hi_equal_abundance,
    homogeneity_index,
    loss_functional,
    superior_loss,
    value_validity,
)
from .location import (
    CenterComparison,
    LocationResult,
    bcf_vector,
    center_comparison,
    location_index,
    mad,
)
from .classifier import (
    BenchmarkCategory,
    EquivalenceClass,
    HomogeneityGroup,
    RegionProfile,
    TableKind,
    Typology,
    benchmark_category,
    classify_equivalence,
    concentration_matrix,
    diversity_table,
    homogeneity_group,
    region_profile,
    skewed_table,
    symmetric_table,
)
from .cluster import (
    Clustering,
    DistanceMatrix,
    DistanceParams,
    choose_k,
    dissimilarity,
    distance_db_csv,
    distance_matrix,
    l1_shape,
    location_distance,
    pam,
    silhouette,
    sorensen,
)
from .ingest import (
    RegionDataset,
    SubunitRecord,
    aggregate,
    parse_subunit_csv,
    pwavgs,
    score_decile,
)
from .pipeline import build_profiles

__version__ = "0.1.0"
