"""distsim: sparse co-occurrence statistics and distributional
similarity/relatedness measures, with a ranking evaluation harness."""

from .assoc import (
    AssocParams,
    NegativePmiPolicy,
    association_ratio,
    conditional_probability,
    corrected_pmi,
    pmi,
)
from .cooccur import (
    ContextProfile,
    CooccurrenceStore,
    Semantics,
    TokenizerConfig,
    Vocabulary,
    WINDOW_RELATION,
    build_windowed,
    ingest_triples,
    load_store,
    merge_stores,
    profile,
    read_triples,
    save_store,
    tokenize,
)
from .errors import (
    DistsimError,
    EmptyReportError,
    InvalidParameterError,
    InvalidSpecError,
    NegativeInfinityError,
    NotFoundError,
    ParseError,
    StoreFormatError,
    UndefinedCorrelationError,
    UndefinedMeasureError,
    UndefinedProbabilityError,
    ZeroDenominatorError,
)
from .evaluation import (
    EvalReport,
    GoldStandard,
    ScoredPair,
    SkippedPair,
    load_gold,
    neighbors,
    pearson,
    rank_concordance,
    render_report_tsv,
    report_to_dict,
    score_pairs,
    spearman,
)
from .measures import (
    CombineMode,
    CrmFamily,
    CrmWeighting,
    KldMode,
    KldVariant,
    MeasureInfo,
    MeasureSpec,
    OverlapKind,
    PcmKind,
    Polarity,
    Score,
    SupportMode,
    SymmetrizeMode,
    asd,
    combine_relations,
    cosine,
    crisp_overlap,
    crm,
    crm_precision_recall,
    evaluate_pair,
    evaluate_profiles,
    fuzzy_overlap,
    get_measure,
    hindle,
    jsd,
    kld,
    l_norm,
    lin,
    list_measures,
    pcm,
    profile_for_measure,
    saif,
    symmetrize,
)

__version__ = "0.1.0"
