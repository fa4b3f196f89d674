//! Lifting coloured braids to mapping classes of simple branched covers of
//! the disc.
//!
//! A label tuple of transpositions describes a simple `d`-fold cover of the
//! disc branched over `n` points. A braid word moves the branch points; the
//! lift of the braid is computed by sliding a system of arcs on the cover and
//! reading off the moved arcs as reduced words over the cover's spine.

pub mod braid;
pub mod complex;
pub mod cover;
pub mod error;
pub mod graphical;
pub mod lift;
pub mod perm;
pub mod word;

pub use braid::{
    canonical_label, equivalent_covers, hurwitz_apply, hurwitz_step, is_liftable, orbit,
    remove_same_label_crossings, total_monodromy, BraidGenerator, BraidWord, ColoredBraid,
    LabelTuple, Sign,
};
pub use complex::{
    build_xg_ball, build_xm, check_covering, export_dot, two_cell_inventory, ComplexGraph,
};
pub use cover::{build_cover, spine, topology, CoverPresentation, CoverTopology, Spine};
pub use error::{Error, Result};
pub use graphical::{
    apply_generator, apply_morphism, canonical_object, label_of, objects_equal, validate_object,
    ArcWord, GraphicalObject,
};
pub use lift::{
    arc_type, classify, compose_lifts, compute_lift, h1_action, invert_lift, is_identity,
    lift_report, LiftReport, SpineSubstitution,
};
pub use perm::{Permutation, Transposition};
