//! Finite subgroups of U(2): exact matrices, the Du Val family catalog,
//! pseudoreflection censuses, and Molien series for the doubled action.
//!
//! Everything here is exact.  Matrices are 2×2 arrays of cyclotomic field
//! elements ([`UnitaryMatrix2`]), so unitarity, group closure, eigenvalues,
//! and invariant-counting reduce to rational arithmetic with no floats and no
//! tolerance thresholds anywhere.
//!
//! The finite subgroups of U(2) that are not inside SU(2) are classified by a
//! fiber-product recipe: pick a scalar circle piece `L ⊂ U(1)·I`, a piece
//! `R ⊂ SU(2)`, normal subgroups of each, and an isomorphism between the two
//! quotients; the group is `{ l·r : φ(l L_K) = r R_K }`.  The classical
//! catalog organizes the possibilities into ten families, tagged here by
//! [`DuValType`] (I through IX, with a primed variant III′).  [`DuValSpec`]
//! pins down one member of one family, [`duval_group`] builds its honest
//! element set, and [`enumerate_groups_of_order`] walks every family for all
//! parameter choices hitting a requested order.
//!
//! For the symplectomorphism audit the payload of a group Γ is:
//!
//! * its pseudoreflections (elements fixing a line pointwise), organized into
//!   a primitive generating set, one generator per fixed line
//!   ([`primitive_pseudoreflection_set`]);
//! * the Molien series of the doubled action `w ↦ (gw, ḡw̄)` on ℂ² × ℂ̄²,
//!   whose Laurent data at `x = 1` gives `γ₀ = 1/|Γ|` and the curvature
//!   coefficient `γ₂` ([`molien_real`]);
//! * the closed form `γ₂ = (1/12|Γ|) Σᵢ (|gᵢ|² − 1)` over the primitive
//!   pseudoreflection set ([`gamma_finite_closed_form`]), cross-checked
//!   against the series extraction on every enumerated group.

mod duval;
mod element;
mod molien;
mod reflections;
mod su2;

pub use duval::{
    enumerate_groups_of_order, duval_group, DuValSpec, DuValType, EnumerationCaps, FiniteU2Group,
};
pub use element::{U2Error, UnitaryMatrix2};
pub use molien::{
    gamma_finite_closed_form, molien_real, quadratic_invariant_dimension, MolienData,
};
pub use reflections::{fixed_line, is_pseudoreflection, primitive_pseudoreflection_set, FixedLine};
pub use su2::{su2_group, Su2Kind};
