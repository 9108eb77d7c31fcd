//! Map algebras on the sphere with poles at the vertices of a regular
//! polyhedron, their residue cocycles, the Onsager algebra inside the loop
//! algebra of sl2, and evaluation representations.

pub mod cocycle;
pub mod cyclo;
pub mod eval;
pub mod onsager;
pub mod ratfunc;

pub use cocycle::{
    finite_cocycle_rank, monomial_cocycle_check, sampled_cocycle_checks, CocycleSampleReport,
    LoopContext, LoopElement, Place,
};
pub use cyclo::{cyclotomic, CycloNumber};
pub use eval::EvaluationRep;
pub use onsager::{dolan_grady_check, onsager_relations, fixed_point_check, fixed_point_scalar, Laurent};
pub use ratfunc::{
    dihedral, icosahedral, loop_set, octahedral, tetrahedral, PoleSet, RatFunc, POLE_SET_NAMES,
};
