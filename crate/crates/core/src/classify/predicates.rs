//! Definitional quantifier loops for every submodule class.
//!
//! Each `*_witness` function returns `None` when the submodule belongs to
//! the class and otherwise the first violating `(scalars, element)` tuple
//! in index order. Scalar tuples are visited nondecreasing wherever the
//! definition is symmetric in them.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::module::Submodule;
use crate::ring::{search_tuples, AbsorbingMode, Elem};

/// A violating tuple: scalars `a_1..a_k` and a module element `m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Witness {
    pub scalars: Vec<Elem>,
    pub element: Elem,
}

/// The submodule classes, by their command-line names.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Predicate {
    Prime,
    ClassicalPrime,
    TwoAbsorbing,
    NAbsorbing(usize),
    ClassicalTwoAbsorbing,
}

impl Predicate {
    pub fn witness(self, n: &Submodule) -> Result<Option<Witness>> {
        match self {
            Predicate::Prime => prime_witness(n),
            Predicate::ClassicalPrime => classical_prime_witness(n),
            Predicate::TwoAbsorbing => two_absorbing_witness(n),
            Predicate::NAbsorbing(k) => n_absorbing_witness(n, k),
            Predicate::ClassicalTwoAbsorbing => classical_2_absorbing_witness(n),
        }
    }

    pub fn holds(self, n: &Submodule) -> Result<bool> {
        Ok(self.witness(n)?.is_none())
    }

    /// True when `w` really violates the definition for `n`.
    pub fn replay(self, n: &Submodule, w: &Witness) -> bool {
        let m = n.module();
        let ring = m.ring();
        let x = w.element;
        if x >= m.cardinality() || w.scalars.iter().any(|&r| r >= ring.cardinality()) {
            return false;
        }
        let on = |scalars: &[Elem]| n.contains(m.act(ring.product(scalars), x));
        let colon = n.colon_module();
        match (self, w.scalars.as_slice()) {
            (Predicate::Prime, &[a]) => on(&[a]) && !n.contains(x) && !colon.contains(a),
            (Predicate::ClassicalPrime, &[a, b]) => on(&[a, b]) && !on(&[a]) && !on(&[b]),
            (Predicate::TwoAbsorbing, &[a, b]) => {
                on(&[a, b]) && !on(&[a]) && !on(&[b]) && !colon.contains(ring.mul(a, b))
            }
            (Predicate::NAbsorbing(k), s) if s.len() == k => {
                on(s)
                    && !colon.contains(ring.product(s))
                    && (0..k).all(|skip| {
                        let rest: Vec<Elem> = s
                            .iter()
                            .enumerate()
                            .filter(|&(i, _)| i != skip)
                            .map(|(_, &v)| v)
                            .collect();
                        !on(&rest)
                    })
            }
            (Predicate::ClassicalTwoAbsorbing, &[a, b, c]) => {
                on(&[a, b, c]) && !on(&[a, b]) && !on(&[a, c]) && !on(&[b, c])
            }
            _ => false,
        }
    }

    /// Name used on the command line and in reports.
    pub fn id(self) -> String {
        match self {
            Predicate::Prime => "prime".into(),
            Predicate::ClassicalPrime => "classical-prime".into(),
            Predicate::TwoAbsorbing => "2abs".into(),
            Predicate::NAbsorbing(k) => format!("{k}abs"),
            Predicate::ClassicalTwoAbsorbing => "c2a".into(),
        }
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.id())
    }
}

impl FromStr for Predicate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.to_ascii_lowercase();
        Ok(match lower.as_str() {
            "prime" => Predicate::Prime,
            "classical-prime" | "classical_prime" | "cprime" => Predicate::ClassicalPrime,
            "2abs" | "2-absorbing" | "two-absorbing" | "two_absorbing" => Predicate::TwoAbsorbing,
            "c2a" | "classical-2-absorbing" | "classical_2_absorbing" => {
                Predicate::ClassicalTwoAbsorbing
            }
            other => {
                let k = other
                    .strip_suffix("abs")
                    .or_else(|| other.strip_suffix("-absorbing"))
                    .and_then(|k| k.parse::<usize>().ok())
                    .filter(|&k| k >= 1)
                    .ok_or_else(|| Error::UnknownPredicate(s.to_string()))?;
                if k == 2 {
                    Predicate::TwoAbsorbing
                } else {
                    Predicate::NAbsorbing(k)
                }
            }
        })
    }
}

fn require_proper(n: &Submodule) -> Result<()> {
    if n.is_proper() {
        Ok(())
    } else {
        Err(Error::ImproperInput(format!(
            "{} is the whole module; the classes are defined for proper submodules",
            n
        )))
    }
}

/// `am in N => m in N or a in (N :_R M)`.
pub fn prime_witness(n: &Submodule) -> Result<Option<Witness>> {
    require_proper(n)?;
    let m = n.module();
    let colon = n.colon_module();
    for a in m.ring().elements() {
        if colon.contains(a) {
            continue;
        }
        for x in m.elements() {
            if n.contains(m.act(a, x)) && !n.contains(x) {
                return Ok(Some(Witness { scalars: vec![a], element: x }));
            }
        }
    }
    Ok(None)
}

/// `abm in N => am in N or bm in N`.
pub fn classical_prime_witness(n: &Submodule) -> Result<Option<Witness>> {
    require_proper(n)?;
    let m = n.module();
    let ring = m.ring();
    for x in m.elements() {
        for a in ring.elements() {
            let ax = m.act(a, x);
            if n.contains(ax) {
                continue;
            }
            for b in a..ring.cardinality() {
                let bx = m.act(b, x);
                if !n.contains(bx) && n.contains(m.act(a, bx)) {
                    return Ok(Some(Witness { scalars: vec![a, b], element: x }));
                }
            }
        }
    }
    Ok(None)
}

/// `abm in N => am in N or bm in N or ab in (N :_R M)`.
pub fn two_absorbing_witness(n: &Submodule) -> Result<Option<Witness>> {
    require_proper(n)?;
    let m = n.module();
    let ring = m.ring();
    let colon = n.colon_module();
    for x in m.elements() {
        for a in ring.elements() {
            for b in a..ring.cardinality() {
                let ab = ring.mul(a, b);
                if n.contains(m.act(ab, x))
                    && !n.contains(m.act(a, x))
                    && !n.contains(m.act(b, x))
                    && !colon.contains(ab)
                {
                    return Ok(Some(Witness { scalars: vec![a, b], element: x }));
                }
            }
        }
    }
    Ok(None)
}

/// `a_1..a_k m in N => a_1..a_k in (N :_R M)` or some `k-1` of the `a_i`
/// times `m` lie in `N`.
pub fn n_absorbing_witness(n: &Submodule, k: usize) -> Result<Option<Witness>> {
    require_proper(n)?;
    if k == 0 {
        return Err(Error::InvalidInput("k must be at least 1".into()));
    }
    let m = n.module();
    let ring = m.ring();
    let colon = n.colon_module();
    let mut tuple = vec![0; k];
    for x in m.elements() {
        let found = search_tuples(&mut tuple, 0, ring.cardinality(), &mut |s| {
            let full = ring.product(s);
            if !n.contains(m.act(full, x)) || colon.contains(full) {
                return false;
            }
            (0..s.len()).all(|skip| {
                let partial = s
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != skip)
                    .fold(ring.one(), |acc, (_, &v)| ring.mul(acc, v));
                !n.contains(m.act(partial, x))
            })
        });
        if found {
            return Ok(Some(Witness { scalars: tuple, element: x }));
        }
    }
    Ok(None)
}

/// `abcm in N => abm in N or acm in N or bcm in N`.
pub fn classical_2_absorbing_witness(n: &Submodule) -> Result<Option<Witness>> {
    require_proper(n)?;
    let m = n.module();
    let ring = m.ring();
    let card = ring.cardinality();
    for x in m.elements() {
        for a in 0..card {
            let ax = m.act(a, x);
            for b in a..card {
                let abx = m.act(b, ax);
                if n.contains(abx) {
                    continue;
                }
                let bx = m.act(b, x);
                for c in b..card {
                    if n.contains(m.act(c, abx))
                        && !n.contains(m.act(c, ax))
                        && !n.contains(m.act(c, bx))
                    {
                        return Ok(Some(Witness { scalars: vec![a, b, c], element: x }));
                    }
                }
            }
        }
    }
    Ok(None)
}

/// Independent route to the same class: every `m` outside `N` must have a
/// 2-absorbing colon ideal `(N :_R m)`. Returns the first offending `m`.
pub fn classical_2_absorbing_by_colons(n: &Submodule) -> Result<Option<Elem>> {
    require_proper(n)?;
    for x in n.module().elements() {
        if n.contains(x) {
            continue;
        }
        let colon = n.colon_ideal(&[x])?;
        if !colon.is_n_absorbing(2, AbsorbingMode::Elementwise)? {
            return Ok(Some(x));
        }
    }
    Ok(None)
}

pub fn is_prime_submodule(n: &Submodule) -> Result<bool> {
    Ok(prime_witness(n)?.is_none())
}

pub fn is_classical_prime(n: &Submodule) -> Result<bool> {
    Ok(classical_prime_witness(n)?.is_none())
}

pub fn is_2_absorbing_submodule(n: &Submodule) -> Result<bool> {
    Ok(two_absorbing_witness(n)?.is_none())
}

pub fn is_n_absorbing_submodule(n: &Submodule, k: usize) -> Result<bool> {
    Ok(n_absorbing_witness(n, k)?.is_none())
}

pub fn is_classical_2_absorbing(n: &Submodule) -> Result<bool> {
    Ok(classical_2_absorbing_witness(n)?.is_none())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::{Component, Module};
    use crate::ring::Ring;

    fn cyclic(n: u32) -> Module {
        Module::regular(&Ring::new(&[n]).unwrap())
    }

    fn sub(m: &Module, g: u32) -> Submodule {
        m.submodule_generated(&[m.index_of(&[g]).unwrap()]).unwrap()
    }

    fn z30_sum() -> Module {
        let r = Ring::new(&[30]).unwrap();
        Module::new(
            &r,
            &[
                Component { coord: 0, order: 2 },
                Component { coord: 0, order: 3 },
                Component { coord: 0, order: 5 },
            ],
        )
        .unwrap()
    }

    #[test]
    fn prime_examples() {
        assert!(is_prime_submodule(&cyclic(5).zero_submodule()).unwrap());
        assert!(!is_prime_submodule(&cyclic(6).zero_submodule()).unwrap());
        assert!(is_prime_submodule(&sub(&cyclic(4), 2)).unwrap());
        let whole = cyclic(6).whole();
        assert!(matches!(is_prime_submodule(&whole), Err(Error::ImproperInput(_))));
    }

    #[test]
    fn classical_prime_examples() {
        let z6 = cyclic(6);
        let w = classical_prime_witness(&z6.zero_submodule()).unwrap().unwrap();
        assert!(Predicate::ClassicalPrime.replay(&z6.zero_submodule(), &w));
        assert!(is_classical_prime(&sub(&cyclic(8), 2)).unwrap());
    }

    #[test]
    fn two_absorbing_examples() {
        assert!(is_2_absorbing_submodule(&cyclic(6).zero_submodule()).unwrap());
        let m = z30_sum();
        let zero = m.zero_submodule();
        assert!(!is_2_absorbing_submodule(&zero).unwrap());
        // a=2, b=3, m=(1,1,0) is a violation named in the definition.
        let r = m.ring();
        let w = Witness { scalars: vec![r.from_int(2), r.from_int(3)], element: m.index_of(&[1, 1, 0]).unwrap() };
        assert!(Predicate::TwoAbsorbing.replay(&zero, &w));
        assert!(is_n_absorbing_submodule(&zero, 3).unwrap());
    }

    #[test]
    fn classical_2_absorbing_examples() {
        let z8 = cyclic(8);
        let zero = z8.zero_submodule();
        let w = classical_2_absorbing_witness(&zero).unwrap().unwrap();
        assert!(Predicate::ClassicalTwoAbsorbing.replay(&zero, &w));
        let two = z8.ring().from_int(2);
        let named = Witness { scalars: vec![two; 3], element: z8.index_of(&[1]).unwrap() };
        assert!(Predicate::ClassicalTwoAbsorbing.replay(&zero, &named));
        assert!(is_classical_2_absorbing(&cyclic(6).zero_submodule()).unwrap());

        let z27 = cyclic(27);
        assert!(is_classical_2_absorbing(&sub(&z27, 9)).unwrap());
        assert!(!is_classical_2_absorbing(&z27.zero_submodule()).unwrap());
        assert_eq!(classical_2_absorbing_by_colons(&sub(&z27, 9)).unwrap(), None);
        assert!(classical_2_absorbing_by_colons(&z27.zero_submodule()).unwrap().is_some());
    }

    #[test]
    fn replay_rejects_non_witnesses() {
        let z6 = cyclic(6);
        let zero = z6.zero_submodule();
        let bogus = Witness { scalars: vec![1, 1, 1], element: 1 };
        assert!(!Predicate::ClassicalTwoAbsorbing.replay(&zero, &bogus));
        assert!(!Predicate::Prime.replay(&zero, &bogus));
    }

    #[test]
    fn predicate_names() {
        for p in [
            Predicate::Prime,
            Predicate::ClassicalPrime,
            Predicate::TwoAbsorbing,
            Predicate::NAbsorbing(4),
            Predicate::ClassicalTwoAbsorbing,
        ] {
            assert_eq!(p.id().parse::<Predicate>().unwrap(), p);
        }
        assert_eq!("2-absorbing".parse::<Predicate>().unwrap(), Predicate::TwoAbsorbing);
        assert!(matches!("nope".parse::<Predicate>(), Err(Error::UnknownPredicate(_))));
        assert!("0abs".parse::<Predicate>().is_err());
    }
}
