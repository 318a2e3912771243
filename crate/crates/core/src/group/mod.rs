pub mod catalog;
pub mod linalg;
pub mod oracle;
mod perm;
mod perm_group;
pub mod table;

pub use perm::{Perm, PermError, MAX_PARSE_DEGREE};
pub use perm_group::{
    all_subgroups, factor_action, invariant_composition_series, invariant_subnormal_series,
    subgroups_between, FactorAction, Group, GroupError, GROUP_ORDER_CAP,
};
