//! Exact verification toolkit for clique covers of 3-uniform hypergraphs
//! via weighted transversal bounds.

#![forbid(unsafe_code)]

pub mod graph;
pub mod hypergraph;
pub mod pairs;
pub mod realize;
pub mod weight;
pub mod naive;
pub mod cases;
pub mod cert;
