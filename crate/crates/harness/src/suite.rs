//! Suite execution: per-property instance streams, hypothesis-hit
//! accounting, violation capture, and deterministic JSON reports.

use std::time::{Duration, Instant};

use serde_json::{json, Value};

use ringlab_core::par;

use crate::generate::{mix_seed, Profile};
use crate::properties::{registry, InstanceOutcome, PropKind, PropertyDef, Violation};

const CHUNK: usize = 32;
const MAX_STORED_VIOLATIONS: usize = 5;

#[derive(Debug, Clone)]
pub struct PropertyVerdict {
    pub id: String,
    pub title: String,
    pub kind: PropKind,
    pub attempts: u64,
    pub satisfying: u64,
    pub violations: Vec<Violation>,
    pub violations_total: u64,
    pub elapsed: Duration,
}

impl PropertyVerdict {
    pub fn hit_rate(&self) -> f64 {
        if self.attempts == 0 {
            0.0
        } else {
            self.satisfying as f64 / self.attempts as f64
        }
    }

    pub fn to_json(&self, timing: bool) -> Value {
        let mut obj = json!({
            "id": self.id,
            "title": self.title,
            "kind": match self.kind {
                PropKind::Theorem => "theorem",
                PropKind::Probe => "probe",
            },
            "attempts": self.attempts,
            "satisfying": self.satisfying,
            "hit_rate": format!("{:.4}", self.hit_rate()),
            "violations_total": self.violations_total,
            "violations": self.violations.iter().map(|v| v.to_json()).collect::<Vec<_>>(),
        });
        if let Some(map) = obj.as_object_mut() {
            if self.kind == PropKind::Probe {
                map.insert(
                    "note".to_string(),
                    Value::String("paper does not claim this direction".to_string()),
                );
            }
            if timing {
                map.insert(
                    "elapsed_ms".to_string(),
                    Value::from(self.elapsed.as_millis() as u64),
                );
            }
        }
        obj
    }
}

/// Run one property until it accumulates the profile's target of
/// hypothesis-satisfying instances (or hits the attempts cap). Instances are
/// evaluated in fixed-seed chunks, in parallel, with order-stable
/// aggregation, so the verdict is independent of scheduling.
pub fn run_property_batch(def: &PropertyDef, base_seed: u64, profile: &Profile) -> PropertyVerdict {
    let start = Instant::now();
    let mut attempts: u64 = 0;
    let mut satisfying: u64 = 0;
    let mut stored: Vec<Violation> = Vec::new();
    let mut violations_total: u64 = 0;

    if def.scripted {
        let outcome = (def.runner)(base_seed, profile);
        attempts = 1;
        match outcome {
            InstanceOutcome::Skipped => {}
            InstanceOutcome::Holds => satisfying = 1,
            InstanceOutcome::Violated(v) => {
                satisfying = 1;
                violations_total = 1;
                stored.push(v);
            }
        }
    } else {
        'outer: while satisfying < profile.target_satisfying as u64
            && attempts < profile.attempts_cap as u64
        {
            let seeds: Vec<u64> = (0..CHUNK as u64)
                .map(|k| mix_seed(base_seed, def.id, attempts + k))
                .collect();
            let outcomes = par::map_collect(&seeds, |&seed| (def.runner)(seed, profile));
            for outcome in outcomes {
                attempts += 1;
                match outcome {
                    InstanceOutcome::Skipped => {}
                    InstanceOutcome::Holds => satisfying += 1,
                    InstanceOutcome::Violated(v) => {
                        satisfying += 1;
                        violations_total += 1;
                        if stored.len() < MAX_STORED_VIOLATIONS {
                            stored.push(v);
                        }
                    }
                }
                if satisfying >= profile.target_satisfying as u64
                    || attempts >= profile.attempts_cap as u64
                {
                    break 'outer;
                }
            }
        }
    }

    PropertyVerdict {
        id: def.id.to_string(),
        title: def.title.to_string(),
        kind: def.kind,
        attempts,
        satisfying,
        violations: stored,
        violations_total,
        elapsed: start.elapsed(),
    }
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub profile: Profile,
    pub base_seed: u64,
    pub properties: Vec<PropertyVerdict>,
    pub elapsed: Duration,
}

impl SuiteReport {
    pub fn theorem_violations(&self) -> u64 {
        self.properties
            .iter()
            .filter(|p| p.kind == PropKind::Theorem)
            .map(|p| p.violations_total)
            .sum()
    }

    pub fn probe_violations(&self) -> u64 {
        self.properties
            .iter()
            .filter(|p| p.kind == PropKind::Probe)
            .map(|p| p.violations_total)
            .sum()
    }

    pub fn verdict_for(&self, id: &str) -> Option<&PropertyVerdict> {
        self.properties.iter().find(|p| p.id == id)
    }

    pub fn to_json(&self, timing: bool) -> Value {
        let mut obj = json!({
            "suite": "ringlab",
            "seed": self.base_seed,
            "profile": {
                "name": self.profile.name,
                "max_order": self.profile.max_order,
                "target_satisfying": self.profile.target_satisfying,
                "attempts_cap": self.profile.attempts_cap,
            },
            "properties": self.properties.iter().map(|p| p.to_json(timing)).collect::<Vec<_>>(),
            "theorem_violations": self.theorem_violations(),
            "probe_violations": self.probe_violations(),
        });
        if timing {
            if let Some(map) = obj.as_object_mut() {
                map.insert(
                    "elapsed_ms".to_string(),
                    Value::from(self.elapsed.as_millis() as u64),
                );
            }
        }
        obj
    }
}

pub fn run_suite(base_seed: u64, profile: &Profile) -> SuiteReport {
    let start = Instant::now();
    let properties: Vec<PropertyVerdict> = registry()
        .iter()
        .map(|def| run_property_batch(def, base_seed, profile))
        .collect();
    SuiteReport {
        profile: profile.clone(),
        base_seed,
        properties,
        elapsed: start.elapsed(),
    }
}

/// Mine instances of one property for counterexamples until the budget is
/// spent. The budget counts attempts, satisfied or not.
pub fn counterexample_search(
    def: &PropertyDef,
    base_seed: u64,
    budget: u64,
    profile: &Profile,
) -> PropertyVerdict {
    let start = Instant::now();
    let mut attempts = 0u64;
    let mut satisfying = 0u64;
    let mut stored = Vec::new();
    let mut violations_total = 0u64;
    while attempts < budget {
        let take = CHUNK.min((budget - attempts) as usize);
        let seeds: Vec<u64> = (0..take as u64)
            .map(|k| mix_seed(base_seed, def.id, attempts + k))
            .collect();
        let outcomes = par::map_collect(&seeds, |&seed| (def.runner)(seed, profile));
        for outcome in outcomes {
            attempts += 1;
            match outcome {
                InstanceOutcome::Skipped => {}
                InstanceOutcome::Holds => satisfying += 1,
                InstanceOutcome::Violated(v) => {
                    satisfying += 1;
                    violations_total += 1;
                    if stored.len() < MAX_STORED_VIOLATIONS {
                        stored.push(v);
                    }
                }
            }
        }
        if def.scripted {
            break;
        }
    }
    PropertyVerdict {
        id: def.id.to_string(),
        title: def.title.to_string(),
        kind: def.kind,
        attempts,
        satisfying,
        violations: stored,
        violations_total,
        elapsed: start.elapsed(),
    }
}
