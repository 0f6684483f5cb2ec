//! Jets of curve branches and the contact-order engine.
//!
//! Branches are expanded as truncated power series in an affine chart around
//! the common basepoint (`U` for the curves, `ω` for their dual curves) and
//! brought into graph form. Two jets have contact of order `k` when a formal
//! reparametrization makes them agree through order `k`.

pub mod duality;
pub mod jet;
pub mod order;
pub mod osculating;
pub mod planar;
pub mod theorem;

pub use duality::{dual_frame, DualFrame};
pub use jet::{curve_jet_at_u, dual_jet_at_omega, Basepoint, Jet, JetDump, DEFAULT_TRUNCATION};
pub use order::{
    contact_order, curve_contact_order, dual_contact_order, match_jets, ContactOrder, MatchTrace,
    MAX_ORDER,
};
pub use osculating::osculating_plane;
pub use planar::{conic_jet, planar_intersection_multiplicity};
pub use theorem::{predicted_contact, predicted_dual_contact};
