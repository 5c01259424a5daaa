//! Numberings and predicates by name, built once per run.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use anyhow::{anyhow, Result};
use goedelsim_core::deviant::{delta_forall, delta_neg, delta_star};
use goedelsim_core::loeb::{construct_pr, predicate_by_name, CodePredicate};
use goedelsim_core::numbering::{diag_numbering, split_provable, standard_gamma, twist_numbering, Growth, Numbering};
use goedelsim_core::truth::Oracle;

pub const NUMBERINGS: [&str; 7] =
    ["gamma", "diag", "twist", "split-provable", "delta-neg", "delta-star", "delta-forall"];

/// The numberings compared for equivalence.
pub const ACCEPTABLE: [&str; 4] = ["gamma", "diag", "twist", "split-provable"];

pub struct Registry {
    oracle: Arc<Oracle>,
    limit: usize,
    built: Mutex<HashMap<String, Arc<dyn Numbering>>>,
}

impl Registry {
    pub fn new(oracle: Arc<Oracle>, limit: usize) -> Registry {
        Registry { oracle, limit, built: Mutex::new(HashMap::new()) }
    }

    pub fn oracle(&self) -> &Arc<Oracle> {
        &self.oracle
    }

    pub fn numbering(&self, name: &str) -> Result<Arc<dyn Numbering>> {
        if let Some(n) = self.built.lock().expect("registry lock").get(name) {
            return Ok(n.clone());
        }
        let o = self.oracle.clone();
        let n: Arc<dyn Numbering> = match name {
            "gamma" => Arc::new(standard_gamma()),
            "diag" => Arc::new(diag_numbering()),
            "twist" => Arc::new(twist_numbering(Arc::new(standard_gamma()), Growth::pow2())?),
            "split-provable" => Arc::new(split_provable(o, self.limit)),
            "delta-neg" => Arc::new(delta_neg(o, self.limit)),
            "delta-star" => Arc::new(delta_star(o, self.limit)),
            "delta-forall" => Arc::new(delta_forall(o, self.limit)),
            _ => return Err(anyhow!("unknown numbering {name:?}; expected one of {}", NUMBERINGS.join(", "))),
        };
        self.built.lock().expect("registry lock").insert(name.to_string(), n.clone());
        Ok(n)
    }

    /// A shipped predicate, or `pr[N]` for the provability predicate
    /// built on numbering `N`.
    pub fn predicate(&self, name: &str) -> Result<CodePredicate> {
        if let Some(inner) = name.strip_prefix("pr[").and_then(|s| s.strip_suffix(']')) {
            return Ok(construct_pr(self.numbering(inner)?, self.oracle.clone()));
        }
        predicate_by_name(name).ok_or_else(|| anyhow!("unknown predicate {name:?}"))
    }
}
