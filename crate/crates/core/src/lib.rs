pub mod arith;
pub mod classify;
pub mod galois;
pub mod group;
pub mod interval;
pub mod roots;
pub mod rre;
