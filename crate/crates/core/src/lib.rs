pub mod cinfty;
pub mod cli;
pub mod graph;
pub mod linalg;
pub mod moduli;
pub mod operad;
pub mod torus;
