use serde::Serialize;

use super::family::{generate_instances, Instance, InstanceFamily, InstanceId};
use crate::classify::{Predicate, Witness, WitnessJson};
use crate::error::Result;
use crate::module::{ModuleElement, Submodule};

/// A submodule in the `left` class but not the `right` one.
#[derive(Debug, Clone)]
pub struct SearchWitness {
    pub instance: Instance,
    pub submodule: Submodule,
    /// Violation of `right`.
    pub violation: Witness,
}

#[derive(Debug, Clone)]
pub enum SearchOutcome {
    Found { left: Predicate, right: Predicate, witness: SearchWitness },
    Exhausted { left: Predicate, right: Predicate, bounds: InstanceFamily, instances: Vec<InstanceId>, submodules: usize },
}

/// Serialized form of a search outcome.
#[derive(Debug, Clone, Serialize)]
#[serde(tag = "outcome", rename_all = "lowercase")]
pub enum SearchReport {
    Witness {
        schema: u32,
        left: String,
        right: String,
        instance: InstanceId,
        submodule: String,
        generators: Vec<ModuleElement>,
        violation: WitnessJson,
    },
    Exhausted {
        schema: u32,
        left: String,
        right: String,
        bounds: InstanceFamily,
        instances: Vec<InstanceId>,
        submodules_checked: usize,
    },
}

impl SearchOutcome {
    pub fn found(&self) -> Option<&SearchWitness> {
        match self {
            SearchOutcome::Found { witness, .. } => Some(witness),
            SearchOutcome::Exhausted { .. } => None,
        }
    }

    /// The witness still separates the two classes when replayed.
    pub fn replays(&self) -> Result<bool> {
        match self {
            SearchOutcome::Found { left, right, witness } => Ok(left.holds(&witness.submodule)?
                && right.replay(&witness.submodule, &witness.violation)),
            SearchOutcome::Exhausted { .. } => Ok(true),
        }
    }

    pub fn to_json(&self) -> SearchReport {
        match self {
            SearchOutcome::Found { left, right, witness } => {
                let m = &witness.instance.module;
                let ring = m.ring();
                SearchReport::Witness {
                    schema: 1,
                    left: left.id(),
                    right: right.id(),
                    instance: witness.instance.id(),
                    submodule: witness.submodule.to_string(),
                    generators: witness.submodule.generators().iter().map(|&g| m.element(g)).collect(),
                    violation: WitnessJson {
                        scalars: witness.violation.scalars.iter().map(|&r| ring.element(r)).collect(),
                        element: m.element(witness.violation.element),
                    },
                }
            }
            SearchOutcome::Exhausted { left, right, bounds, instances, submodules } => {
                SearchReport::Exhausted {
                    schema: 1,
                    left: left.id(),
                    right: right.id(),
                    bounds: bounds.clone(),
                    instances: instances.clone(),
                    submodules_checked: *submodules,
                }
            }
        }
    }
}

/// First submodule, in instance then lattice order, that satisfies `left`
/// and violates `right`.
pub fn search_separating(left: Predicate, right: Predicate, family: &InstanceFamily) -> Result<SearchOutcome> {
    let instances = generate_instances(family);
    let mut submodules = 0;
    for inst in &instances {
        for n in inst.module.enumerate_submodules()? {
            if !n.is_proper() {
                continue;
            }
            submodules += 1;
            if !left.holds(&n)? {
                continue;
            }
            if let Some(violation) = right.witness(&n)? {
                return Ok(SearchOutcome::Found {
                    left,
                    right,
                    witness: SearchWitness { instance: inst.clone(), submodule: n, violation },
                });
            }
        }
    }
    Ok(SearchOutcome::Exhausted {
        left,
        right,
        bounds: family.clone(),
        instances: instances.iter().map(Instance::id).collect(),
        submodules,
    })
}
