//! Homogeneous sets, cographs, template expansions and the clique reduction.

mod cograph;
mod expansion;
mod modules;
mod reduce;
mod template;

pub use cograph::{cograph_optimal_coloring, cotree_within, is_cograph, CographCertificate, Cotree};
pub use expansion::{check_partition, expand, is_starred, match_expansion, BagPartition};
pub use modules::{is_prime, maximal_homogeneous_cliques, maximal_module_partition, module_closure};
pub use reduce::{clique_reduce, lift_coloring, lift_unit, CliqueReduction, LiftUnit};
pub use template::{NodeRole, Relation, Template, TemplateId};
