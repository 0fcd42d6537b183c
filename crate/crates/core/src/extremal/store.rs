//! Newline-delimited JSON records of generated classes, so long runs can
//! pick up from the largest order already on disk.

use std::collections::BTreeMap;
use std::fs;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::canon::{canonical_form, CanonicalGraph};
use super::generate::{extend_level, Filter, GENERATION_LIMIT};
use super::par_map;
use crate::bounds::eppstein_ln;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::{parse_graph6, to_graph6};
use crate::mis::{guard, mis_profile};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StoreRecord {
    pub graph6: String,
    pub profile: Vec<u64>,
    /// Smallest `ln(bound / mis_{<=k})` over `k` with `mis_{<=k} > 0`.
    pub slack: BTreeMap<String, f64>,
}

impl StoreRecord {
    pub fn new(g: &Graph) -> Self {
        let profile = mis_profile(g).counts().to_vec();
        let n = g.order() as f64;
        let mut running = 0u64;
        let mut slack = f64::INFINITY;
        for (k, &c) in profile.iter().enumerate() {
            running += c;
            if running > 0 {
                slack = slack.min(eppstein_ln(n, k as f64) - (running as f64).ln());
            }
        }
        StoreRecord {
            graph6: to_graph6(g),
            profile,
            slack: BTreeMap::from([("eppstein".to_string(), crate::report::round_sig(slack))]),
        }
    }
}

fn store_err(path: &Path, e: impl std::fmt::Display) -> Error {
    Error::Store(format!("{}: {e}", path.display()))
}

pub fn write_records(path: &Path, records: &[StoreRecord]) -> Result<()> {
    let file = fs::File::create(path).map_err(|e| store_err(path, e))?;
    let mut w = BufWriter::new(file);
    for r in records {
        let line = serde_json::to_string(r).map_err(|e| store_err(path, e))?;
        writeln!(w, "{line}").map_err(|e| store_err(path, e))?;
    }
    w.flush().map_err(|e| store_err(path, e))
}

pub fn read_records(path: &Path) -> Result<Vec<StoreRecord>> {
    let file = fs::File::open(path).map_err(|e| store_err(path, e))?;
    BufReader::new(file)
        .lines()
        .filter(|l| l.as_ref().map_or(true, |l| !l.trim().is_empty()))
        .map(|l| {
            let l = l.map_err(|e| store_err(path, e))?;
            serde_json::from_str(&l).map_err(|e| store_err(path, e))
        })
        .collect()
}

pub struct Store {
    dir: PathBuf,
}

impl Store {
    pub fn new(dir: impl Into<PathBuf>) -> Result<Self> {
        let dir = dir.into();
        fs::create_dir_all(&dir).map_err(|e| store_err(&dir, e))?;
        Ok(Store { dir })
    }

    pub fn path(&self, n: usize, filter: Filter) -> PathBuf {
        self.dir.join(format!("classes-n{n}-{filter}.ndjson"))
    }

    fn load(&self, n: usize, filter: Filter) -> Result<Option<Vec<CanonicalGraph>>> {
        let path = self.path(n, filter);
        if !path.exists() {
            return Ok(None);
        }
        read_records(&path)?
            .iter()
            .map(|r| canonical_form(&parse_graph6(&r.graph6)?))
            .collect::<Result<Vec<_>>>()
            .map(Some)
    }

    fn save(&self, n: usize, filter: Filter, classes: &[CanonicalGraph]) -> Result<()> {
        let records = par_map(classes, |c| StoreRecord::new(&c.graph));
        write_records(&self.path(n, filter), &records)
    }

    /// Classes of order `n`, resuming from the largest stored order `<= n`
    /// and persisting each new level.
    pub fn load_or_generate(&self, n: usize, filter: Filter) -> Result<Vec<CanonicalGraph>> {
        guard("isomorphism-free generation", n, GENERATION_LIMIT)?;
        let mut start = None;
        for m in (0..=n).rev() {
            if let Some(level) = self.load(m, filter)? {
                start = Some((m, level));
                break;
            }
        }
        let (mut m, mut level) = match start {
            Some(s) => s,
            None => (0, vec![canonical_form(&Graph::empty(0))?]),
        };
        while m < n {
            let graphs: Vec<Graph> = level.into_iter().map(|c| c.graph).collect();
            level = extend_level(&graphs, filter)?;
            m += 1;
            self.save(m, filter, &level)?;
        }
        Ok(level)
    }
}
