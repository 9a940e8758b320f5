//! Presentation caching: rules serialize in the NCPoly JSON schema with a
//! header recording (m, n, precedence hash, completion degree) and a
//! checksum. Cache writes are atomic (write-temp-rename).

use super::letter::Letter;
use super::presentation::{Presentation, RewriteRule};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::fs;
use std::io::Write;
use std::path::Path;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CacheError {
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("malformed cache file: {0}")]
    Malformed(#[from] serde_json::Error),
    #[error("cache checksum mismatch (expected {expected}, found {found})")]
    ChecksumMismatch { expected: String, found: String },
    #[error("cache header mismatch")]
    HeaderMismatch,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Clone, Debug)]
pub struct CacheHeader {
    pub m: usize,
    pub n: usize,
    pub copies: u8,
    pub precedence_hash: String,
    pub completion_degree: usize,
    pub engine_version: String,
}

#[derive(Serialize, Deserialize)]
struct CacheFile {
    header: CacheHeader,
    checksum: String,
    rules: Vec<RewriteRule>,
    alphabet: Vec<Letter>,
}

/// Hash of the alphabet in precedence order; identifies the monomial order.
pub fn precedence_hash(alphabet: &[Letter]) -> String {
    let mut sorted = alphabet.to_vec();
    sorted.sort();
    let listing = sorted
        .iter()
        .map(|l| format!("{l}"))
        .collect::<Vec<_>>()
        .join(",");
    hex::encode(&Sha256::digest(listing.as_bytes())[..8])
}

fn rules_checksum(rules: &[RewriteRule]) -> String {
    let body = serde_json::to_string(rules).expect("rules serialize");
    hex::encode(&Sha256::digest(body.as_bytes())[..16])
}

pub fn header_for(pres: &Presentation) -> CacheHeader {
    CacheHeader {
        m: pres.params().0,
        n: pres.params().1,
        copies: pres.copies(),
        precedence_hash: precedence_hash(pres.alphabet()),
        completion_degree: pres.completion_degree(),
        engine_version: crate::ENGINE_VERSION.to_string(),
    }
}

pub fn save(pres: &Presentation, path: &Path) -> Result<(), CacheError> {
    let file = CacheFile {
        header: header_for(pres),
        checksum: rules_checksum(pres.rules()),
        rules: pres.rules().to_vec(),
        alphabet: pres.alphabet().to_vec(),
    };
    let body = serde_json::to_vec(&file)?;
    if let Some(dir) = path.parent() {
        fs::create_dir_all(dir)?;
    }
    let mut tmp = tempfile::NamedTempFile::new_in(path.parent().unwrap_or_else(|| Path::new(".")))?;
    tmp.write_all(&body)?;
    tmp.persist(path).map_err(|e| CacheError::Io(e.error))?;
    Ok(())
}

/// Loads a cached presentation, verifying header expectations and checksum.
pub fn load(path: &Path, expect: &CacheHeader) -> Result<Presentation, CacheError> {
    let body = fs::read(path)?;
    let file: CacheFile = serde_json::from_slice(&body)?;
    if &file.header != expect {
        return Err(CacheError::HeaderMismatch);
    }
    let found = rules_checksum(&file.rules);
    if found != file.checksum {
        return Err(CacheError::ChecksumMismatch {
            expected: file.checksum,
            found,
        });
    }
    Ok(Presentation::from_parts(
        (file.header.m, file.header.n),
        file.alphabet,
        file.rules,
        file.header.completion_degree,
        file.header.copies,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cache_roundtrip_and_corruption() {
        let pres = crate::uqglmn::relations::chevalley_relations(1, 1)
            .complete(6)
            .unwrap();
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("p11.json");
        save(&pres, &path).unwrap();
        let expect = header_for(&pres);
        let back = load(&path, &expect).unwrap();
        assert_eq!(back.rules().len(), pres.rules().len());
        assert_eq!(back.completion_degree(), pres.completion_degree());

        // Header mismatch is refused.
        let mut wrong = expect.clone();
        wrong.completion_degree += 1;
        assert!(matches!(load(&path, &wrong), Err(CacheError::HeaderMismatch)));

        // Checksum mismatch is refused.
        let text = std::fs::read_to_string(&path).unwrap();
        let tampered = text.replacen("\"rules\":[{\"lhs\"", "\"rules\":[{\"lhs\"", 1);
        // Flip one scalar digit inside the rule body (first occurrence of "den").
        let tampered = tampered.replacen("[\"1\",0]", "[\"2\",0]", 1);
        std::fs::write(&path, tampered).unwrap();
        match load(&path, &expect) {
            Err(CacheError::ChecksumMismatch { .. }) | Err(CacheError::Malformed(_)) => {}
            other => panic!("expected checksum failure, got {:?}", other.map(|p| p.rules().len())),
        }
    }
}
