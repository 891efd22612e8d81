pub mod cli;
pub mod error;
pub mod factor;
pub mod io;
pub mod matrix;
pub mod multipoly;
pub mod qh;
pub mod ring;
pub mod rng;
pub mod verify;
