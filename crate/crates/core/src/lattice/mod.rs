//! Exact integer lattices and the Picard-lattice models of Nikulin surfaces.

mod gram;
mod matrix;
mod models;
mod short;

pub use gram::{CurveNumerics, Definiteness, DiscriminantData, IntegerLattice, Rational, RationalClass};
pub use matrix::{smith_normal_form, IntMatrix, SmithForm, Transform};
pub use models::{
    describe_class, e8_cartan, e8_minus2, glue_node_sets, half_class, lambda_class, lambda_h, nikulin_lattice,
    nonstandard_classes, pic_tilde_class, GlueClassData, NonStandardCase, NonStandardClasses, PicTildeClass,
    LAMBDA_LABELS, NIKULIN_LABELS,
};
pub use short::{find_vector_of_norm, for_each_short_vector, short_vectors, ShortVectors, SHORT_VECTOR_NODE_BUDGET};
