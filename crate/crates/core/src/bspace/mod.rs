//! Truncated simplicial sets and 𝔅-spaces: nerves, homotopy colimits,
//! homology, flatness, monoids, coend elements and the bar construction.

pub mod approx;
pub mod bar;
pub mod coend;
pub mod fixtures;
pub mod homology;
pub mod nerve;
pub mod space;
pub mod sset;

pub use approx::{hocolim_b_approx, ApproxHocolim, APPROXIMATE_CAVEAT};
pub use bar::{bar_degeneracy, bar_face, bar_multiply, check_bar_multiply, check_bar_simplicial, check_eval_independent};
pub use coend::{box_equal, canonicalize, minimal_form, monoid_eval, BoxElement, CoendElement};
pub use fixtures::{ConstantModel, FreeOneModel, NChain, NonFlatModel, PhiNerveModel, XBulletModel};
pub use homology::{homology, HomologyGroup};
pub use nerve::{hocolim_finite, nerve, Diagram};
pub use space::{
    check_bspace, check_commutative_monoid, check_commutative_sampled, check_flat, check_flat_sampled, check_model_sampled, check_monoid,
    materialize, materialize_monoid, model_act, BSpaceModel, TBSpaceMonoid, TBSpace,
};
pub use sset::{check_simplicial, product, smash, SMap, TSSet};
