//! Normal ordering in the Weyl algebra and its q-deformation, with word-indexed Stirling
//! and Lah numbers computed by rewriting, by recurrence, and by combinatorial enumeration.

pub mod error;
pub mod graphs;
pub mod partitions;
pub mod qpoly;
pub mod rooks;
pub mod tables;
pub mod verify;
pub mod weyl;
pub mod words;
pub mod zpoly;

pub use error::{Error, Result};
pub use graphs::{build_graph, DecreasingForest, ForestFamily, ForestPartition, QuasiThresholdGraph};
pub use partitions::SetPartition;
pub use qpoly::{q_bracket, LaurentPoly};
pub use rooks::{board_from_word, FerrersBoard, RookPlacement, TruncatedBoard};
pub use weyl::{expand, normal_order, Basis, Expander, Expansion, NormalForm};
pub use words::{Letter, Word};
pub use zpoly::IntPoly;
