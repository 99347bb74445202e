//! The theorem suite: congruence sweeps, identities, equidistribution of
//! statistics and coefficient relations, each producing a [`Report`].

mod congruence;
mod equidistribution;
mod properties;
pub mod report;
mod suite;

pub use congruence::{check_congruence, check_congruence_on, CongruenceSpec, Target};
pub use equidistribution::{
    check_equidistribution, check_equidistribution_on, gf_classes, EquidistributionSpec,
    ENUMERATION_ROUTE_LIMIT,
};
pub use properties::{
    check_c4_partitions, check_d_pentagonal, check_oracle_equivalence, check_parity_enumeration,
    check_relation_chl, check_relation_chl_on, check_star_crank_identity, check_theta_dual_form,
    chl_required_precision, ORACLE_SIZE_LIMIT, THETA_PRECISION,
};
pub use report::{
    CongruenceReport, Counterexample, EquidistributionReport, IdentityReport, Report, ReportKind,
    Status,
};
pub use suite::{
    negative_controls, run_item, run_items, run_suite, suite_items, Check, Relation, SeriesCache,
    SuiteItem, DEFAULT_SUITE_PRECISION,
};
