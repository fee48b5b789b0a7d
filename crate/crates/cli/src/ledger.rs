//! Append-only results ledger and witness directory.
//!
//! One line per solved instance:
//! `result <digest> N=<v> status=<exact|lo> nodes=<n> seconds=<s> witness=<path> version=<v>`.
//! Witness paths are relative to the ledger directory; `-` means none.

use std::fs::{self, OpenOptions};
use std::io::Write;
use std::path::{Path, PathBuf};

use ordram::format::sha256_hex;
use ordram::{Error, Result};

pub const LEDGER_FILE: &str = "results.ledger";
pub const WITNESS_DIR: &str = "witnesses";
pub const ENV_VAR: &str = "ORDRAM_LEDGER";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Exact,
    Lower,
}

impl Status {
    fn as_str(self) -> &'static str {
        match self {
            Status::Exact => "exact",
            Status::Lower => "lo",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct LedgerEntry {
    pub digest: String,
    /// The exact value, or the lower bound for `Status::Lower`.
    pub value: usize,
    pub status: Status,
    pub nodes: u64,
    pub seconds: f64,
    pub witness: Option<String>,
    pub version: String,
}

impl LedgerEntry {
    pub fn to_line(&self) -> String {
        format!(
            "result {} N={} status={} nodes={} seconds={:.3} witness={} version={}",
            self.digest,
            self.value,
            self.status.as_str(),
            self.nodes,
            self.seconds,
            self.witness.as_deref().unwrap_or("-"),
            self.version
        )
    }

    pub fn parse(line: &str, number: usize) -> Result<LedgerEntry> {
        let bad = |msg: String| Error::Parse {
            line: number,
            message: msg,
        };
        let parts: Vec<&str> = line.split(' ').collect();
        if parts.len() != 8 || parts[0] != "result" {
            return Err(bad("expected `result` and 7 fields".into()));
        }
        let field = |idx: usize, key: &str| -> Result<&str> {
            parts[idx]
                .strip_prefix(key)
                .and_then(|v| v.strip_prefix('='))
                .ok_or_else(|| bad(format!("field {idx} must be {key}=..")))
        };
        let value = field(2, "N")?.parse().map_err(|_| bad("bad N".into()))?;
        let status = match field(3, "status")? {
            "exact" => Status::Exact,
            "lo" => Status::Lower,
            other => return Err(bad(format!("unknown status {other:?}"))),
        };
        let nodes = field(4, "nodes")?
            .parse()
            .map_err(|_| bad("bad nodes".into()))?;
        let seconds = field(5, "seconds")?
            .parse()
            .map_err(|_| bad("bad seconds".into()))?;
        let witness = match field(6, "witness")? {
            "-" => None,
            p => Some(p.to_string()),
        };
        Ok(LedgerEntry {
            digest: parts[1].to_string(),
            value,
            status,
            nodes,
            seconds,
            witness,
            version: field(7, "version")?.to_string(),
        })
    }
}

/// `--ledger`, then `ORDRAM_LEDGER`, then `.ordram`.
pub fn ledger_dir(flag: Option<PathBuf>) -> PathBuf {
    flag.or_else(|| std::env::var_os(ENV_VAR).map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from(".ordram"))
}

pub fn read_entries(dir: &Path) -> Result<Vec<LedgerEntry>> {
    let path = dir.join(LEDGER_FILE);
    if !path.exists() {
        return Ok(Vec::new());
    }
    let text = fs::read_to_string(&path)?;
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.is_empty())
        .map(|(k, l)| LedgerEntry::parse(l, k + 1))
        .collect()
}

/// Latest exact entry for `digest`.
pub fn cached(dir: &Path, digest: &str) -> Result<Option<LedgerEntry>> {
    Ok(read_entries(dir)?
        .into_iter()
        .rev()
        .find(|e| e.digest == digest && e.status == Status::Exact))
}

/// Writes a witness file and returns its path relative to `dir`.
pub fn store_witness(dir: &Path, digest: &str, n: usize, text: &str) -> Result<String> {
    let rel = format!("{WITNESS_DIR}/{}-N{n}.oc", &sha256_hex(digest)[..16]);
    fs::create_dir_all(dir.join(WITNESS_DIR))?;
    fs::write(dir.join(&rel), text)?;
    Ok(rel)
}

/// Appends one line with a single write.
pub fn append(dir: &Path, entry: &LedgerEntry) -> Result<()> {
    fs::create_dir_all(dir)?;
    let mut file = OpenOptions::new()
        .create(true)
        .append(true)
        .open(dir.join(LEDGER_FILE))?;
    file.write_all(format!("{}\n", entry.to_line()).as_bytes())?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn line_round_trip() {
        let e = LedgerEntry {
            digest: "c1/n3/1-2.1-3.2-3+c2/n3/1-2.1-3.2-3".into(),
            value: 6,
            status: Status::Exact,
            nodes: 31,
            seconds: 0.001,
            witness: Some("witnesses/ab-N5.oc".into()),
            version: "0.1.0".into(),
        };
        let line = e.to_line();
        assert_eq!(
            line,
            "result c1/n3/1-2.1-3.2-3+c2/n3/1-2.1-3.2-3 N=6 status=exact nodes=31 seconds=0.001 witness=witnesses/ab-N5.oc version=0.1.0"
        );
        assert_eq!(LedgerEntry::parse(&line, 1).unwrap(), e);
        assert!(LedgerEntry::parse("result x N=1", 1).is_err());
    }
}
