//! Real tropicalization of points and linear embeddings, membership in real
//! tropical hyperplanes and linear spaces, and real Bergman fans.

mod bergman;
mod embedding;
mod membership;
mod point;

pub use bergman::{bergman_fan, bergman_member, BergmanFan};
pub use embedding::{EmbeddingJson, LinearEmbedding};
pub use membership::{hyperplane_member, linear_space_member, unsigned_linear_space_member};
pub use point::{parse_point_literal, trop_r_point, RealTropProjPoint};
