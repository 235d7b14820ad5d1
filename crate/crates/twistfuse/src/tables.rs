//! Versioned on-disk fusion tables with atomic writes and checksum-validated
//! reuse.
//!
//! The document records both bases and, for every fundamental exterior
//! power, the untwisted fusion matrix and the module action matrix. A reused
//! file is trusted only after its checksum (over the identifying fields and
//! basis lists) recomputes to the stored value; anything else forces a
//! recompute.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::fusion::{fundamental_matrix_untwisted, module_matrix_route_b};
use crate::sig::{enumerate_twisted_basis, enumerate_untwisted_basis, GlSignature, LevelContext};

pub const TABLE_FORMAT: u32 = 1;

/// Serialized fusion tables for one (N, level) cell.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct FusionTableDoc {
    pub format: u32,
    pub n: usize,
    pub level: i64,
    /// Untwisted basis signatures, canonical order, as part arrays.
    pub basis_untwisted: Vec<Vec<i64>>,
    /// Twisted basis signatures, canonical order.
    pub basis_twisted: Vec<Vec<i64>>,
    /// Untwisted fusion matrix per fundamental k = "1".."2N-1".
    pub fundamental_matrices: BTreeMap<String, Vec<Vec<i64>>>,
    /// Module action matrix per fundamental k, same keys.
    pub module_matrices: BTreeMap<String, Vec<Vec<i64>>>,
    /// Hex SHA-256 over the identifying fields and basis lists.
    pub checksum: String,
}

fn checksum_of(
    format: u32,
    n: usize,
    level: i64,
    basis_untwisted: &[Vec<i64>],
    basis_twisted: &[Vec<i64>],
) -> String {
    let mut hasher = Sha256::new();
    hasher.update(format!(
        "{format}|{n}|{level}|{basis_untwisted:?}|{basis_twisted:?}"
    ));
    let digest = hasher.finalize();
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

/// Compute the full document for a context.
pub fn build_tables(ctx: &LevelContext) -> Result<FusionTableDoc> {
    let basis_untwisted: Vec<Vec<i64>> = enumerate_untwisted_basis(ctx)
        .iter()
        .map(|f| f.parts().to_vec())
        .collect();
    let basis_twisted: Vec<Vec<i64>> = enumerate_twisted_basis(ctx)
        .iter()
        .map(|h| h.parts().to_vec())
        .collect();
    let mut fundamental_matrices = BTreeMap::new();
    let mut module_matrices = BTreeMap::new();
    for k in 1..ctx.gl_rank() {
        fundamental_matrices.insert(k.to_string(), fundamental_matrix_untwisted(k, ctx)?.rows());
        let f = GlSignature::fundamental(k, ctx.gl_rank())?;
        module_matrices.insert(k.to_string(), module_matrix_route_b(&f, ctx)?.matrix.rows());
    }
    let checksum = checksum_of(
        TABLE_FORMAT,
        ctx.n(),
        ctx.level(),
        &basis_untwisted,
        &basis_twisted,
    );
    Ok(FusionTableDoc {
        format: TABLE_FORMAT,
        n: ctx.n(),
        level: ctx.level(),
        basis_untwisted,
        basis_twisted,
        fundamental_matrices,
        module_matrices,
        checksum,
    })
}

fn render(doc: &FusionTableDoc) -> Result<String> {
    let mut text = serde_json::to_string_pretty(doc)
        .map_err(|e| Error::Internal(format!("serializing tables: {e}")))?;
    text.push('\n');
    Ok(text)
}

/// Write the document atomically: serialize to a sibling temporary file,
/// then rename over the target.
pub fn write_tables(doc: &FusionTableDoc, path: &Path) -> Result<()> {
    let text = render(doc)?;
    let tmp = path.with_extension("json.tmp");
    fs::write(&tmp, text).map_err(|e| {
        Error::Io(std::io::Error::new(
            e.kind(),
            format!("writing {}: {e}", tmp.display()),
        ))
    })?;
    fs::rename(&tmp, path).map_err(|e| {
        Error::Io(std::io::Error::new(
            e.kind(),
            format!("renaming into {}: {e}", path.display()),
        ))
    })?;
    Ok(())
}

/// Try to load a cached document valid for `ctx`: parseable, right format,
/// right cell, checksum recomputes to the stored value.
pub fn load_valid_tables(path: &Path, ctx: &LevelContext) -> Result<FusionTableDoc> {
    let text = fs::read_to_string(path)?;
    let doc: FusionTableDoc = serde_json::from_str(&text)
        .map_err(|e| Error::InvalidTable(format!("{}: {e}", path.display())))?;
    if doc.format != TABLE_FORMAT {
        return Err(Error::InvalidTable(format!(
            "format {} (expected {TABLE_FORMAT})",
            doc.format
        )));
    }
    if doc.n != ctx.n() || doc.level != ctx.level() {
        return Err(Error::InvalidTable(format!(
            "tables are for N={}, level={}, wanted {ctx}",
            doc.n, doc.level
        )));
    }
    let recomputed = checksum_of(
        doc.format,
        doc.n,
        doc.level,
        &doc.basis_untwisted,
        &doc.basis_twisted,
    );
    if recomputed != doc.checksum {
        return Err(Error::InvalidTable("checksum mismatch".into()));
    }
    Ok(doc)
}

/// Export tables to `path`. An existing valid cache is reused untouched;
/// otherwise the document is computed and written atomically. Returns the
/// document and whether the cache was reused.
pub fn export_tables(ctx: &LevelContext, path: &Path) -> Result<(FusionTableDoc, bool)> {
    if path.exists() {
        match load_valid_tables(path, ctx) {
            Ok(doc) => return Ok((doc, true)),
            Err(Error::Io(e)) => return Err(Error::Io(e)),
            Err(_) => {
                // Invalid cache: fall through and recompute.
            }
        }
    }
    let doc = build_tables(ctx)?;
    write_tables(&doc, path)?;
    Ok((doc, false))
}

/// Canonical cache file name for a cell.
pub fn table_file_name(ctx: &LevelContext) -> String {
    format!("tables_n{}_l{}.json", ctx.n(), ctx.level())
}
