//! Compare contrastive explanations across model adaptations.
//!
//! When a model `h` is adapted to new data, the result `h'` may agree with `h`
//! on most predictions while generalizing in a very different way. This crate
//! explains such adaptations by contrasting the *explanations* the two models
//! give at shared data points:
//!
//! - [`counterfactuals`] computes closest counterfactuals (closed form for
//!   linear classifiers, exact leaf enumeration for trees, a gradient penalty
//!   solver for differentiable families), regression-interval counterfactuals
//!   and greedy pertinent positives.
//! - [`diff`] compares the counterfactual perturbations a point receives under
//!   the old and the adapted model (component-wise, Euclidean and cosine).
//! - [`interest`] scores and ranks data-space points by how strongly the
//!   adaptation changed the local explanation.
//! - [`persistence`] freezes selected explanations as labeled constraint
//!   points and retrains under a soft-penalty objective.
//! - [`theory`] provides executable checks of the linear-model identities
//!   relating counterfactual changes to weight-vector geometry.
//!
//! [`data`] and [`models`] supply datasets (CSV, deterministic synthetic
//! generators) and the model families (`linear_classifier`,
//! `logistic_regression`, `linear_regression`, `gaussian_nb`, `decision_tree`)
//! everything else builds on.

pub mod counterfactuals;
pub mod data;
pub mod diff;
mod error;
pub mod interest;
pub mod linalg;
pub mod models;
pub mod persistence;
pub mod theory;

pub use error::{Error, Result};

pub use counterfactuals::{
    CfSolver, CfSolverConfig, CfTarget, CounterfactualResult, DistanceOrder,
    PertinentPositiveResult,
};
pub use data::{BlobSpec, CreditSpec, Dataset, Label, Task};
pub use diff::{DiffReport, ExplanationDiff, SkipReason, TargetSpec};
pub use interest::{InterestConfig, InterestMethod};
pub use models::{AdaptOutcome, AdaptationConfig, Model, ModelFamily};
pub use persistence::{
    ConstrainedAdaptConfig, ConstrainedAdaptOutcome, ConstraintKind, PersistenceConstraint,
    SatisfactionReport,
};
pub use theory::TheoremReport;
