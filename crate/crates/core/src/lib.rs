pub mod biclique;
pub mod error;
pub mod family;
pub mod graph;
pub mod io;
pub mod oracles;
pub mod sat;
pub mod weightspace;
pub mod algorithms;
pub mod lab;
pub mod fixtures;
pub mod verify;
pub mod cli;
