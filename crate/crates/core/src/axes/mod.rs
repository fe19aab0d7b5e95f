//! Conditioning, sliding, essential edges and axes, the twist embedding and
//! interesting lifts for abelian groups of upper-triangular maps.

pub mod abelian;
pub mod bound;
pub mod condition;
pub mod essential;
pub mod group;
pub mod interesting;
pub mod slide;
pub mod twist;

pub use abelian::{abelian_certificate, AbelianCertificate, NonCommuting};
pub use bound::{gl3_order, index_bound, IndexBound};
pub use condition::{condition, ConditionStep, Conditioned, StepKind};
pub use essential::{
    essential_data, verify_property_a, CheckKind, EssentialAxis, EssentialData, EssentialEdge, PropertyItem,
    PropertyReport, Route,
};
pub use group::{GroupWord, MapGroup};
pub use interesting::{interesting_lifts, interesting_lifts_of, Candidate, ILReport};
pub use slide::{slide, Certificate, Slid, REWRITE_DEPTH};
pub use twist::{twist_coordinates, twist_vector, TwistVector};
