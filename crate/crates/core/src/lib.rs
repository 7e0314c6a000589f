//! Permutation groups, explicit digraphs and the symmetry checks that tie
//! them together: coset and Cayley digraphs, s-arc-transitivity, stabilizer
//! factorizations, regular subgroups and primitive prime divisors.

pub mod arith;
pub mod catalog;
pub mod config;
pub mod constructions;
pub mod digraph;
pub mod error;
pub mod group;
pub mod symmetry;

pub use config::Bounds;
pub use error::{Error, Result};
pub use group::{BlockSystem, Permutation, PermutationGroup, SubgroupHandle};
pub use constructions::{CosetDigraphSpec, GammaCertificate};
pub use digraph::{Digraph, SArc};
pub use symmetry::{DigraphAction, Status, Transitivity};
