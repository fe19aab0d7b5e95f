//! Lifts to the universal cover, their fixed vertices and fixed ends.

pub mod classify;
pub mod lift;
pub mod ray;
pub mod splitting;

pub use classify::{classify_fixed_points, ClassifyBounds, FixedPointReport};
pub use lift::{deck_difference, fixes_vertex, lift_fixing_vertex, power_of, DeckElement, Lift};
pub use ray::{fixed_ray, fixed_vertices, IteratedRay, LineSpec, RaySpec};
pub use splitting::{highest_edge_splitting, periodic_splitting, splitting_translation, Splitting};
