//! Submodule classification: definitional predicates, the two ten-condition
//! characterizations, minimal classical 2-absorbing submodules and
//! m-closed sets.

mod conditions;
mod mclosed;
mod predicates;

pub use conditions::{
    evaluate_main2_conditions, evaluate_main_conditions, Characterization, ConditionVector,
};
pub use mclosed::{
    c2a_m_closed_witness, complement, is_c2a_m_closed, maximal_disjoint_submodules,
    MClosedWitness, MCLOSED_MODULE_BOUND,
};
pub use predicates::{
    classical_2_absorbing_by_colons, classical_2_absorbing_witness, classical_prime_witness,
    is_2_absorbing_submodule, is_classical_2_absorbing, is_classical_prime,
    is_n_absorbing_submodule, is_prime_submodule, n_absorbing_witness, prime_witness,
    two_absorbing_witness, Predicate, Witness,
};

use serde::Serialize;

use crate::error::Result;
use crate::module::{Module, ModuleElement, Submodule};
use crate::ring::{AbsorbingMode, Elem, Ideal, RingElement};

/// Default largest `k` for the n-absorbing flags.
pub const DEFAULT_MAX_N: usize = 4;

#[derive(Debug, Clone)]
pub struct Flag {
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl Flag {
    fn from(w: Option<Witness>) -> Flag {
        Flag { holds: w.is_none(), witness: w }
    }
}

#[derive(Debug, Clone)]
pub struct ClassificationRecord {
    /// Position among all submodules of the module.
    pub index: usize,
    pub submodule: Submodule,
    pub prime: Flag,
    pub classical_prime: Flag,
    pub two_absorbing: Flag,
    /// Flags for `k = 1..=max_n`, in order.
    pub n_absorbing: Vec<Flag>,
    pub classical_2_absorbing: Flag,
    /// `(m, (N :_R m))` for every `m` outside `N`.
    pub colon_profile: Vec<(Elem, Ideal)>,
    /// Indices of the submodules covering this one.
    pub parents: Vec<usize>,
}

impl ClassificationRecord {
    /// Builds the record and checks it against its own invariants.
    pub fn new(n: &Submodule, index: usize, max_n: usize) -> Result<ClassificationRecord> {
        let flag = |p: Predicate| p.witness(n).map(Flag::from);
        let n_absorbing = (1..=max_n)
            .map(|k| flag(if k == 2 { Predicate::TwoAbsorbing } else { Predicate::NAbsorbing(k) }))
            .collect::<Result<Vec<_>>>()?;
        let colon_profile = n
            .module()
            .elements()
            .filter(|&x| !n.contains(x))
            .map(|x| n.colon_ideal(&[x]).map(|c| (x, c)))
            .collect::<Result<Vec<_>>>()?;
        Ok(ClassificationRecord {
            index,
            submodule: n.clone(),
            prime: flag(Predicate::Prime)?,
            classical_prime: flag(Predicate::ClassicalPrime)?,
            two_absorbing: flag(Predicate::TwoAbsorbing)?,
            n_absorbing,
            classical_2_absorbing: flag(Predicate::ClassicalTwoAbsorbing)?,
            colon_profile,
            parents: Vec::new(),
        })
    }

    fn flags(&self) -> Vec<(Predicate, &Flag)> {
        let mut v = vec![
            (Predicate::Prime, &self.prime),
            (Predicate::ClassicalPrime, &self.classical_prime),
            (Predicate::TwoAbsorbing, &self.two_absorbing),
            (Predicate::ClassicalTwoAbsorbing, &self.classical_2_absorbing),
        ];
        for (i, f) in self.n_absorbing.iter().enumerate() {
            let k = i + 1;
            if k != 2 {
                v.push((Predicate::NAbsorbing(k), f));
            }
        }
        v
    }

    /// Every stored witness reproduces its violation, and the c2a flag
    /// agrees with the colon profile.
    pub fn verify(&self) -> Result<bool> {
        let replays = self.flags().into_iter().all(|(p, f)| match &f.witness {
            Some(w) => !f.holds && p.replay(&self.submodule, w),
            None => f.holds,
        });
        let mut colons_ok = true;
        for (_, c) in &self.colon_profile {
            if !c.is_n_absorbing(2, AbsorbingMode::Elementwise)? {
                colons_ok = false;
                break;
            }
        }
        Ok(replays && colons_ok == self.classical_2_absorbing.holds)
    }

    pub fn to_json(&self) -> RecordJson {
        let m = self.submodule.module();
        let ring = m.ring();
        let flag = |f: &Flag| FlagJson {
            holds: f.holds,
            witness: f.witness.as_ref().map(|w| WitnessJson {
                scalars: w.scalars.iter().map(|&r| ring.element(r)).collect(),
                element: m.element(w.element),
            }),
        };
        RecordJson {
            index: self.index,
            submodule: self.submodule.to_string(),
            generators: self.submodule.generators().iter().map(|&g| m.element(g)).collect(),
            size: self.submodule.len(),
            prime: flag(&self.prime),
            classical_prime: flag(&self.classical_prime),
            two_absorbing: flag(&self.two_absorbing),
            n_absorbing: self
                .n_absorbing
                .iter()
                .enumerate()
                .map(|(i, f)| NAbsorbingJson { k: i + 1, flag: flag(f) })
                .collect(),
            classical_2_absorbing: flag(&self.classical_2_absorbing),
            colon_profile: self
                .colon_profile
                .iter()
                .map(|(x, c)| ColonJson {
                    element: m.element(*x),
                    colon: c.to_string(),
                    generators: c.generators().iter().map(|&g| ring.element(g)).collect(),
                })
                .collect(),
            parents: self.parents.clone(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct WitnessJson {
    pub scalars: Vec<RingElement>,
    pub element: ModuleElement,
}

#[derive(Debug, Clone, Serialize)]
pub struct FlagJson {
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessJson>,
}

#[derive(Debug, Clone, Serialize)]
pub struct NAbsorbingJson {
    pub k: usize,
    #[serde(flatten)]
    pub flag: FlagJson,
}

#[derive(Debug, Clone, Serialize)]
pub struct ColonJson {
    pub element: ModuleElement,
    pub colon: String,
    pub generators: Vec<RingElement>,
}

#[derive(Debug, Clone, Serialize)]
pub struct RecordJson {
    pub index: usize,
    pub submodule: String,
    pub generators: Vec<ModuleElement>,
    pub size: usize,
    pub prime: FlagJson,
    pub classical_prime: FlagJson,
    pub two_absorbing: FlagJson,
    pub n_absorbing: Vec<NAbsorbingJson>,
    pub classical_2_absorbing: FlagJson,
    pub colon_profile: Vec<ColonJson>,
    pub parents: Vec<usize>,
}

/// Covering relation of the whole lattice: `covers[i]` lists the
/// submodules directly above submodule `i`.
pub fn hasse_covers(subs: &[Submodule]) -> Vec<Vec<usize>> {
    subs.iter()
        .map(|a| {
            let mut above: Vec<usize> = Vec::new();
            // Canonical order lists smaller submodules first.
            for (j, b) in subs.iter().enumerate() {
                if b.len() > a.len()
                    && a.is_subset(b)
                    && !above.iter().any(|&c| subs[c].is_subset(b))
                {
                    above.push(j);
                }
            }
            above
        })
        .collect()
}

/// One record per proper submodule, in lattice order, with `k <= max_n`.
pub fn classify_all_with(m: &Module, max_n: usize) -> Result<Vec<ClassificationRecord>> {
    let subs = m.enumerate_submodules()?;
    let covers = hasse_covers(&subs);
    subs.iter()
        .enumerate()
        .filter(|(_, n)| n.is_proper())
        .map(|(i, n)| {
            let mut rec = ClassificationRecord::new(n, i, max_n)?;
            rec.parents = covers[i].clone();
            Ok(rec)
        })
        .collect()
}

pub fn classify_all(m: &Module) -> Result<Vec<ClassificationRecord>> {
    classify_all_with(m, DEFAULT_MAX_N)
}

#[derive(Debug, Clone)]
pub struct MinimalSet {
    pub members: Vec<Submodule>,
    /// No proper submodule is classical 2-absorbing.
    pub none_found: bool,
}

/// Inclusion-minimal classical 2-absorbing submodules.
pub fn minimal_classical_2_absorbing(m: &Module) -> Result<MinimalSet> {
    let mut c2a = Vec::new();
    for n in m.enumerate_submodules()? {
        if n.is_proper() && is_classical_2_absorbing(&n)? {
            c2a.push(n);
        }
    }
    let members: Vec<Submodule> = c2a
        .iter()
        .filter(|x| !c2a.iter().any(|y| y != *x && y.is_subset(x)))
        .cloned()
        .collect();
    assert!(
        c2a.iter().all(|x| members.iter().any(|y| y.is_subset(x))),
        "every classical 2-absorbing submodule contains a minimal one"
    );
    Ok(MinimalSet { none_found: members.is_empty(), members })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::Component;
    use crate::ring::Ring;

    fn z(n: u32) -> Module {
        Module::regular(&Ring::new(&[n]).unwrap())
    }

    #[test]
    fn z8_records() {
        let recs = classify_all(&z(8)).unwrap();
        let shown: Vec<(String, bool)> = recs
            .iter()
            .map(|r| (r.submodule.to_string(), r.classical_2_absorbing.holds))
            .collect();
        assert_eq!(
            shown,
            vec![("(0)".into(), false), ("(4)".into(), true), ("(2)".into(), true)]
        );
        for r in &recs {
            assert!(r.verify().unwrap());
        }
        assert_eq!(recs[0].parents, vec![1]);
        assert_eq!(recs[2].parents, vec![3]);
        let json = serde_json::to_value(recs[0].to_json()).unwrap();
        assert_eq!(json["classical_2_absorbing"]["witness"]["scalars"][0][0], 2);
    }

    #[test]
    fn z6_all_c2a() {
        let recs = classify_all(&z(6)).unwrap();
        assert_eq!(recs.len(), 3);
        assert!(recs.iter().all(|r| r.classical_2_absorbing.holds));
    }

    #[test]
    fn zero_module_has_no_records() {
        let r = Ring::new(&[4]).unwrap();
        let zero = Module::new(&r, &[Component { coord: 0, order: 1 }]).unwrap();
        assert!(classify_all(&zero).unwrap().is_empty());
        assert!(minimal_classical_2_absorbing(&zero).unwrap().none_found);
    }

    #[test]
    fn minimal_sets() {
        let m = z(8);
        let four = m.submodule_generated(&[4]).unwrap();
        assert_eq!(minimal_classical_2_absorbing(&m).unwrap().members, vec![four]);
        let m = z(6);
        assert_eq!(minimal_classical_2_absorbing(&m).unwrap().members, vec![m.zero_submodule()]);
    }
}
