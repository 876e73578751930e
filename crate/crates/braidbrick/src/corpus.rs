//! The bundled derivation corpus and a parallel runner.

use std::path::Path;

use braidbrick_core::derivation::{check, Relation};
use rayon::prelude::*;

use crate::deriv::{load_derivation, parse_derivation};

/// A bundled derivation file. Negative controls are expected to fail.
#[derive(Clone, Copy, Debug)]
pub struct Fixture {
    pub name: &'static str,
    pub text: &'static str,
    pub expect_ok: bool,
}

macro_rules! fixture {
    ($dir:literal, $name:literal, $ok:expr) => {
        Fixture {
            name: concat!($dir, "/", $name),
            text: include_str!(concat!("../fixtures/", $dir, "/", $name, ".deriv")),
            expect_ok: $ok,
        }
    };
}

pub const FIXTURES: &[Fixture] = &[
    fixture!("derivations", "3strand-b3", true),
    fixture!("derivations", "3strand-two-a2", true),
    fixture!("derivations", "3strand-two-large", true),
    fixture!("derivations", "case1-k2-D5", true),
    fixture!("derivations", "case1-k2-E9", true),
    fixture!("derivations", "case2-E9", true),
    fixture!("derivations", "case3-identity", true),
    fixture!("derivations", "case3-same-kind", true),
    fixture!("derivations", "case4-B-s1sq-s3", true),
    fixture!("derivations", "case4-a", true),
    fixture!("derivations", "case4-b", true),
    fixture!("derivations", "case4-c", true),
    fixture!("derivations", "case4-case2-b1", true),
    fixture!("derivations", "case4-d", true),
    fixture!("derivations", "case4-ef", true),
    fixture!("derivations", "case4-g", true),
    fixture!("derivations", "lemma-strand-reduction", true),
    fixture!("derivations", "thm-3strand-chain1", true),
    fixture!("derivations", "thm-3strand-chain2", true),
    fixture!("derivations", "ws4-dominance", true),
    fixture!("negative", "bad-eq", false),
    fixture!("negative", "case2-literal-r3", false),
    fixture!("negative", "corrupt-letter", false),
    fixture!("negative", "two-a2-literal-exponent", false),
    fixture!("negative", "wrong-claim", false),
];

/// Result of checking one file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub name: String,
    pub expect_ok: bool,
    /// The checked relation, or the parse/check error.
    pub result: Result<Relation, String>,
}

impl Outcome {
    pub fn passed(&self) -> bool {
        self.result.is_ok() == self.expect_ok
    }
}

fn check_text(text: &str) -> Result<Relation, String> {
    let d = parse_derivation(text).map_err(|e| e.to_string())?;
    check(&d).map_err(|e| e.to_string())
}

/// Runs `f` on a pool of `jobs` workers (0 = one per core).
pub fn with_pool<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> T {
    match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(pool) => pool.install(f),
        Err(_) => f(),
    }
}

/// Checks the bundled corpus; outcomes keep the corpus order.
pub fn run_corpus(jobs: usize) -> Vec<Outcome> {
    with_pool(jobs, || {
        FIXTURES
            .par_iter()
            .map(|f| Outcome { name: f.name.to_string(), expect_ok: f.expect_ok, result: check_text(f.text) })
            .collect()
    })
}

/// Checks files from disk, all expected to pass.
pub fn run_files<P: AsRef<Path> + Sync>(paths: &[P], jobs: usize) -> Vec<Outcome> {
    with_pool(jobs, || {
        paths
            .par_iter()
            .map(|p| {
                let p = p.as_ref();
                let result =
                    load_derivation(p).map_err(|e| e.to_string()).and_then(|d| check(&d).map_err(|e| e.to_string()));
                Outcome { name: p.display().to_string(), expect_ok: true, result }
            })
            .collect()
    })
}
