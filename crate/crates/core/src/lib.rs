//! Exact characteristic numbers of smooth complete intersections in
//! products of projective spaces, with the mod-`q` divisibility checks and
//! degree-formula verdicts built on them.

pub mod bundles;
pub mod charnum;
pub mod chow;
pub mod degform;
pub mod error;
pub mod oracle;
pub mod poly;
pub mod symfunc;

mod serde_big;

pub use bundles::{tangent_class, TotalChernClass};
pub use charnum::{
    hurewicz_vector, s_number, t_number, t_number_detail, DivisibilityReport, HurewiczVector, Report, Residue,
    TCase, TNumber,
};
pub use chow::{AmbientSpace, ChowClass, ChowRing, VarietyDescriptor, ZeroCycle};
pub use degform::{
    degree_formula_check, hoffmann_verdict, obstruction_ideal, quadric_t, DegreeFormulaVerdict, HoffmannVerdict,
    ObstructionIdeal, VerdictStatus,
};
pub use error::{Error, Result};
pub use oracle::SplitBundle;
pub use poly::{GradedPoly, PolyRing, Rational, Variable};
pub use symfunc::{enumerate_alpha, to_elementary, AlphaTuple, SymPoly};
