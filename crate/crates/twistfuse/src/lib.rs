//! Fusion rings of level-restricted positive-energy representations of the
//! loop group of SU(2N), and the module over them formed by the
//! representations of the twisted loop group, with every number computed by
//! two independent routes that are required to agree.
//!
//! - [`sig`]: signature types, level predicates, and the finite enumerations
//!   of bases and evaluation labels.
//! - [`branching`]: classical and level-truncated Pieri and Sundaram rules
//!   for tensoring by exterior powers (route A).
//! - [`characters`]: Weyl characters evaluated at exact root-of-unity
//!   points, quantum dimensions and closed-form diagnostics.
//! - [`fusion`]: fusion matrices, the evaluation-route solver (route B), the
//!   basic-square decomposition and the verification suite.
//! - [`qseries`]: the truncated-series identity between distinct-part and
//!   odd-part partition counts.
//! - [`tables`]: versioned on-disk fusion tables with checksum-validated
//!   reuse.
//!
//! ```
//! use twistfuse::{GlSignature, LevelContext};
//! use twistfuse::fusion::general_fusion_untwisted;
//!
//! let ctx = LevelContext::new(1, 2)?;
//! let f = GlSignature::new(vec![1, 0])?;
//! let product = general_fusion_untwisted(&f, &f, &ctx)?;
//! assert_eq!(product.to_label_map().keys().collect::<Vec<_>>(), ["0,0", "2,0"]);
//! # Ok::<(), twistfuse::Error>(())
//! ```

pub mod branching;
pub mod characters;
pub mod error;
pub mod fusion;
mod linalg;
pub mod qseries;
pub mod sig;
pub mod tables;
pub mod tol;

pub use error::{Error, Result};
pub use sig::{
    FormalCombination, GlSignature, HalfIntVector, Integrality, LevelContext, SpSignature,
};

/// The guide chapters under `book/src` double as doc-tests: every Rust code
/// block in the book compiles and runs against the public API here, keeping
/// prose and library in sync.
#[cfg(doctest)]
pub mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub mod introduction {}
    #[doc = include_str!("../../../book/src/signatures.md")]
    pub mod signatures {}
    #[doc = include_str!("../../../book/src/strip-rules.md")]
    pub mod strip_rules {}
    #[doc = include_str!("../../../book/src/characters.md")]
    pub mod characters {}
    #[doc = include_str!("../../../book/src/fusion.md")]
    pub mod fusion {}
    #[doc = include_str!("../../../book/src/quantum-dimensions.md")]
    pub mod quantum_dimensions {}
    #[doc = include_str!("../../../book/src/qseries.md")]
    pub mod qseries {}
    #[doc = include_str!("../../../book/src/cli.md")]
    pub mod cli {}
    #[doc = include_str!("../../../book/src/file-formats.md")]
    pub mod file_formats {}
}
