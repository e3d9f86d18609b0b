//! Finite T₀-spaces, the classification of spaces on which the filtrated
//! K-theory UCT holds, and the categories `NT*(X)` of natural
//! transformations presented by generators and relations.

pub mod builtin;
pub mod category;
pub mod classify;
pub mod complex;
pub mod error;
pub mod io;
pub mod matrix;
pub mod modules;
pub mod poset;

pub use error::{Error, Result};
pub use poset::{Degree, DirectedGraph, Hulls, MonotoneMap, PointSet, Space, SubsetStatus};
