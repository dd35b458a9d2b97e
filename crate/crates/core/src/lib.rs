//! Diameter-perfect constant-weight codes over non-binary alphabets.
//!
//! The crate builds codes and anticodes in `J_q(n,w)`, the length-`n`,
//! weight-`w` words over `{0..q}` under Hamming distance. Each construction
//! is certified with independent checks, small spaces can be searched
//! exhaustively, and the known necessary conditions for existence can be
//! evaluated.
//!
//! Module map:
//!
//! * [`galois`]: arithmetic in GF(q);
//! * [`space`]: words, codes, anticodes, balls, distances;
//! * [`ortharray`]: orthogonal arrays, Reed-Solomon arrays, MDS codewords;
//! * [`anticodes`]: the explicit maximum-size anticode families;
//! * [`designs`]: Steiner and generalized Steiner systems;
//! * [`families`]: the diameter-perfect code constructions;
//! * [`verifier`]: certification of codes against anticodes and families;
//! * [`oracle`]: exhaustive searches used as ground truth;
//! * [`bounds`]: feasibility predicates;
//! * [`codefile`]: the plain-text code format.

pub mod anticodes;
pub mod bounds;
pub mod codefile;
pub mod combinatorics;
pub mod designs;
pub mod error;
pub mod families;
pub mod galois;
pub mod oracle;
pub mod ortharray;
pub mod report;
pub mod space;
pub mod verifier;

pub use error::{Error, Result};
pub use families::{Family, FamilyCode};
pub use galois::{Field, FieldElement};
pub use report::{Check, VerificationReport};
pub use space::{Anticode, Code, Symbol, Word};
