//! Cutting sequences of lines in the plane, ternary intersection sequences of
//! lines in 3-space, and the combinatorics used to analyze them: derivation,
//! continued-fraction recovery, factor and palindromic complexity, balance,
//! Rauzy graphs, and a depth-bounded linearity classifier.

pub mod cutting2d;
pub mod exactnum;
pub mod intersect3d;
pub mod rauzy;
pub mod words;

pub use cutting2d::{
    check_block_form, derive, generate_from_cf, is_sturmian_prefix, recover_cf, BlockFormReport,
    BlockVerdict, CuttingError, CuttingLine, Derivation, SturmianReport,
};
pub use exactnum::{cf_expand, ArithError, CfExpansion, Surd};
pub use intersect3d::{
    classify_linearity, fibonacci_word, line_from_min_complexity, s_m_word, tribonacci_word,
    IntersectError, Line3, ProjectionSlopes, Reconstruction, ReconstructionCase, SphericalAngles,
    TieOrder, Verdict, Witness,
};
pub use rauzy::{DegreeProfile, Edge, RauzyGraph};
pub use words::{CompactForm, Letter, Relabeling, Word, WordError};
