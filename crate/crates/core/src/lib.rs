//! Binary quadratic forms over F_p[x] and the Picard group of
//! F_p[x][sqrt(alpha)] for squarefree monic `alpha` of odd degree.
//!
//! The layers build on each other: [`ff`] and [`poly`] provide exact
//! arithmetic, [`quadform`] and [`ideal`] the two views of a class (reduced
//! forms and Mumford pairs), [`classgroup`] the full table with its group
//! structure, [`genus`] the genus partition, and [`elliptic`] the curve-side
//! realization for cubic `alpha`. [`oracle`] recounts classes by orbit
//! closure alone and is used to cross-check everything else.

pub mod classgroup;
pub mod cli;
pub mod discriminant;
pub mod elliptic;
pub mod error;
pub mod ff;
pub mod genus;
pub mod golden;
pub mod ideal;
pub mod oracle;
pub mod poly;
pub mod quadform;
pub mod report;
pub mod selftest;

pub use classgroup::ClassGroupTable;
pub use discriminant::Discriminant;
pub use elliptic::{EllipticCurve, IsomorphismReport, ProjPoint};
pub use error::{Error, Result};
pub use ff::{FieldElement, PrimeField};
pub use genus::{GenusContext, GenusPartition, GenusVector};
pub use ideal::MumfordIdeal;
pub use oracle::{oracle_classes, OrbitReport};
pub use poly::Poly;
pub use quadform::{Mat2, QuadForm};
