#![allow(dead_code)]

pub mod lattice;
pub mod mutation;
pub mod naive;
