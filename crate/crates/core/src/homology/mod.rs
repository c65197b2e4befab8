//! Integer homology, Smith normal form, fundamental groups and collapses.

mod chain;
mod collapse;
mod matrix;
mod pi1;
mod snf;

pub use chain::{
    boundary_matrix, homological_connectivity, reduced_euler_from_faces, reduced_homology, HomologyGroup,
    HomologySummary,
};
pub use collapse::is_collapsible;
pub use matrix::IntMatrix;
pub use pi1::{
    abelianization, component_count, edge_path_presentation, first_homology, simple_connectivity,
    simplify_presentation, AbelianInvariants, NotSimplyConnected, Pi1Error, Simplified, SimplifyOutcome, TietzeBudget,
    TriState,
};
pub use snf::{invariant_factors, rank, smith_normal_form, SmithForm};
