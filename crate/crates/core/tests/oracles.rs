//! Library results against naive re-implementations that work directly on
//! coordinate vectors, plus values computed by hand.

use std::collections::BTreeSet;

use absorb_core::classify::{classify_all, minimal_classical_2_absorbing, Predicate};
use absorb_core::harness::{generate_instances, InstanceFamily};
use absorb_core::{enumerate_ideals, Component, Module, Ring};

type Vector = Vec<u32>;
type Group = BTreeSet<Vector>;

/// `Z_o1 + ... + Z_ok` over `Z_n`, by hand.
struct Naive {
    n: u32,
    orders: Vec<u32>,
}

impl Naive {
    fn elements(&self) -> Vec<Vector> {
        let mut out = vec![vec![]];
        for &o in &self.orders {
            out = out
                .into_iter()
                .flat_map(|v: Vector| {
                    (0..o).map(move |x| {
                        let mut w = v.clone();
                        w.push(x);
                        w
                    })
                })
                .collect();
        }
        out
    }

    fn add(&self, a: &Vector, b: &Vector) -> Vector {
        a.iter().zip(b).zip(&self.orders).map(|((x, y), o)| (x + y) % o).collect()
    }

    fn act(&self, r: u32, a: &Vector) -> Vector {
        a.iter().zip(&self.orders).map(|(x, o)| (r * x) % o).collect()
    }

    fn closure(&self, gens: &Group) -> Group {
        let mut g: Group = BTreeSet::from([vec![0; self.orders.len()]]);
        loop {
            let mut next = g.clone();
            for a in &g {
                for b in gens {
                    next.insert(self.add(a, b));
                }
            }
            if next.len() == g.len() {
                return g;
            }
            g = next;
        }
    }

    /// Over `Z_n`, subgroups and submodules coincide.
    fn subgroups(&self) -> BTreeSet<Group> {
        let elems = self.elements();
        let mut all: BTreeSet<Group> = elems.iter().map(|e| self.closure(&BTreeSet::from([e.clone()]))).collect();
        loop {
            let list: Vec<Group> = all.iter().cloned().collect();
            let before = all.len();
            for a in &list {
                for b in &list {
                    let u: Group = a.union(b).cloned().collect();
                    all.insert(self.closure(&u));
                }
            }
            if all.len() == before {
                return all;
            }
        }
    }

    fn c2a(&self, n: &Group) -> bool {
        let m = self.elements();
        for a in 0..self.n {
            for b in a..self.n {
                for c in b..self.n {
                    for x in &m {
                        if n.contains(&self.act(a * b * c % self.n, x))
                            && !n.contains(&self.act(a * b % self.n, x))
                            && !n.contains(&self.act(a * c % self.n, x))
                            && !n.contains(&self.act(b * c % self.n, x))
                        {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    fn classical_prime(&self, n: &Group) -> bool {
        let m = self.elements();
        (0..self.n).all(|a| {
            (0..self.n).all(|b| {
                m.iter().all(|x| {
                    !n.contains(&self.act(a * b % self.n, x)) || n.contains(&self.act(a, x)) || n.contains(&self.act(b, x))
                })
            })
        })
    }

    fn annihilates(&self, r: u32, n: &Group) -> bool {
        self.elements().iter().all(|x| n.contains(&self.act(r, x)))
    }

    fn prime(&self, n: &Group) -> bool {
        let m = self.elements();
        (0..self.n).all(|a| m.iter().all(|x| !n.contains(&self.act(a, x)) || n.contains(x) || self.annihilates(a, n)))
    }

    fn two_absorbing(&self, n: &Group) -> bool {
        let m = self.elements();
        (0..self.n).all(|a| {
            (0..self.n).all(|b| {
                m.iter().all(|x| {
                    !n.contains(&self.act(a * b % self.n, x))
                        || n.contains(&self.act(a, x))
                        || n.contains(&self.act(b, x))
                        || self.annihilates(a * b % self.n, n)
                })
            })
        })
    }
}

fn as_group(m: &Module, n: &absorb_core::Submodule) -> Group {
    n.elements().map(|x| m.coords(x).to_vec()).collect()
}

#[test]
fn flags_match_naive_oracle_over_cyclic_rings() {
    let fam = InstanceFamily { max_modulus: 12, max_pair_modulus: 1, max_module: 16, ..Default::default() };
    let mut checked = 0;
    for inst in generate_instances(&fam) {
        let ring = inst.module.ring();
        if ring.moduli().len() != 1 {
            continue;
        }
        let orders: Vec<u32> = inst.module.components().unwrap().iter().map(|c| c.order).collect();
        let naive = Naive { n: ring.moduli()[0], orders };
        let subs = inst.module.enumerate_submodules().unwrap();
        let lib: BTreeSet<Group> = subs.iter().map(|n| as_group(&inst.module, n)).collect();
        assert_eq!(lib, naive.subgroups(), "submodules of {}", inst);
        for n in subs.iter().filter(|n| n.is_proper()) {
            let g = as_group(&inst.module, n);
            let ctx = format!("{n} in {inst}");
            assert_eq!(Predicate::ClassicalTwoAbsorbing.holds(n).unwrap(), naive.c2a(&g), "c2a {ctx}");
            assert_eq!(Predicate::ClassicalPrime.holds(n).unwrap(), naive.classical_prime(&g), "cp {ctx}");
            assert_eq!(Predicate::Prime.holds(n).unwrap(), naive.prime(&g), "prime {ctx}");
            assert_eq!(Predicate::TwoAbsorbing.holds(n).unwrap(), naive.two_absorbing(&g), "2abs {ctx}");
            checked += 1;
        }
    }
    assert!(checked > 200, "only {checked} submodules compared");
}

#[test]
fn subgroup_counts() {
    // Standard counts of subgroups of small abelian groups.
    let cases: [(u32, &[u32], usize); 6] = [
        (8, &[8], 4),
        (12, &[12], 6),
        (4, &[2, 4], 8),
        (4, &[4, 4], 15),
        (2, &[2, 2, 2], 16),
        (9, &[3, 9], 10),
    ];
    for (n, orders, want) in cases {
        let r = Ring::new(&[n]).unwrap();
        let comps: Vec<Component> = orders.iter().map(|&order| Component { coord: 0, order }).collect();
        let m = Module::new(&r, &comps).unwrap();
        assert_eq!(m.enumerate_submodules().unwrap().len(), want, "{m}");
    }
}

#[test]
fn ideal_counts_are_divisor_counts() {
    for n in 2..=16u32 {
        let r = Ring::new(&[n]).unwrap();
        let divisors = (1..=n).filter(|d| n % d == 0).count();
        assert_eq!(enumerate_ideals(&r).len(), divisors, "Z{n}");
    }
    let r = Ring::new(&[2, 4]).unwrap();
    assert_eq!(enumerate_ideals(&r).len(), 2 * 3);
}

#[test]
fn chinese_remainder_presentations_agree() {
    let counts = |r: Ring| {
        let recs = classify_all(&Module::regular(&r)).unwrap();
        let tally = |f: fn(&absorb_core::classify::ClassificationRecord) -> bool| recs.iter().filter(|r| f(r)).count();
        (
            recs.len(),
            tally(|r| r.prime.holds),
            tally(|r| r.classical_prime.holds),
            tally(|r| r.two_absorbing.holds),
            tally(|r| r.classical_2_absorbing.holds),
        )
    };
    assert_eq!(counts(Ring::new(&[2, 3]).unwrap()), counts(Ring::new(&[6]).unwrap()));
    assert_eq!(counts(Ring::new(&[3, 4]).unwrap()), counts(Ring::new(&[12]).unwrap()));
    // Z6: ideals (0), (2), (3) are proper; (2) and (3) are prime, (0) is not.
    assert_eq!(counts(Ring::new(&[6]).unwrap()), (3, 2, 2, 3, 3));
}

#[test]
fn hand_computed_classifications() {
    // Z8: (0) fails with a = b = c = 2, m = 1; (4) and (2) are c2a.
    let z8 = Module::regular(&Ring::new(&[8]).unwrap());
    let recs = classify_all(&z8).unwrap();
    let c2a: Vec<bool> = recs.iter().map(|r| r.classical_2_absorbing.holds).collect();
    assert_eq!(c2a, [false, true, true]);
    assert_eq!(minimal_classical_2_absorbing(&z8).unwrap().members.len(), 1);

    // Z30 = Z2 x Z3 x Z5: (0) is the meet of three primes, so not c2a.
    let z30 = Module::regular(&Ring::new(&[30]).unwrap());
    let zero = z30.zero_submodule();
    assert!(!Predicate::ClassicalTwoAbsorbing.holds(&zero).unwrap());
    assert!(Predicate::NAbsorbing(3).holds(&zero).unwrap());

    // Z4 as a module over itself: (0) is c2a but not classical prime.
    let z4 = Module::regular(&Ring::new(&[4]).unwrap());
    let zero = z4.zero_submodule();
    assert!(Predicate::ClassicalTwoAbsorbing.holds(&zero).unwrap());
    assert!(!Predicate::ClassicalPrime.holds(&zero).unwrap());
    assert!(Predicate::TwoAbsorbing.holds(&zero).unwrap());
    assert!(!Predicate::Prime.holds(&zero).unwrap());
}

#[test]
fn default_family_size() {
    assert_eq!(generate_instances(&InstanceFamily::default()).len(), 265);
}
