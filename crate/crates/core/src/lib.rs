pub mod constructions;
pub mod embedding;
pub mod formulas;
pub mod graph;
pub mod oracle;
pub mod patterns;

pub use embedding::{EmbeddingError, FaceVector, PlaneEmbedding, Planarity};
pub use formulas::{FormulaError, TuranValue};
pub use graph::{CanonicalCode, EditOp, Graph, GraphError, Primitive};
