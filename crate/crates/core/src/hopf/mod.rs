//! Structure-constant algebras, coalgebras, Hopf algebras and their modules.

mod algebra;
mod coalgebra;
mod hopf_algebra;
mod module;

pub use algebra::{check_algebra, check_algebra_with, StructAlgebra};
pub use coalgebra::{check_coalgebra, check_coalgebra_with, PairVec, StructCoalgebra};
pub(crate) use coalgebra::collect_pairs;
pub use hopf_algebra::{check_bialgebra, check_hopf, check_hopf_with, dual_hopf, pair_mul, solve_antipode, HopfAlgebra};
pub use module::{
    act_legwise, check_module, check_module_with, coevaluation, evaluation, module_dual, module_tensor, unit_space,
    BModule, HModule, Module,
};
