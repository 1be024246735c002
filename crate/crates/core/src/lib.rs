//! Capital (unique-maximum) colourings of plane graphs.

pub mod plane_graph;
pub mod generators;
pub mod rbb;
pub mod grotzsch;
pub mod capital;
pub mod exact;
pub mod discharging;
pub mod corpus;
pub mod cli;
