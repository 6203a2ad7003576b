//! Example factories. Every factory verifies what it returns.

mod group;
mod hopf_examples;
mod reflective;
mod registry;
mod subgroup;

pub use group::{subgroup_embedding, FiniteGroup};
pub use hopf_examples::{
    double_label, drinfeld_double_group, dual_group_algebra, group_algebra, group_algebra_with_r, r_lambda, sweedler_h4,
};
pub use reflective::{reflective_algebra, ReflectiveAlgebraData};
pub use subgroup::{subgroup_comodule, subgroup_example};
pub use registry::{named_example, ExampleBundle, EXAMPLE_KINDS};
