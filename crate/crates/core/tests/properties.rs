use proptest::prelude::*;

use absorb_core::classify::{classical_2_absorbing_by_colons, ClassificationRecord, Predicate};
use absorb_core::{Component, Elem, Ideal, Module, ModuleHom, Ring, Submodule};

fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

/// Rings with at most 16 elements.
fn moduli() -> impl Strategy<Value = Vec<u32>> {
    prop_oneof![(2u32..=16).prop_map(|n| vec![n]), (2u32..=4, 2u32..=4).prop_map(|(a, b)| vec![a, b])]
}

/// Modules with at most `max` elements.
fn module_over(moduli: Vec<u32>, max: u32) -> impl Strategy<Value = Module> {
    let ring = Ring::new(&moduli).unwrap();
    let comp = (0..moduli.len()).prop_flat_map(move |coord| {
        prop::sample::select(divisors(moduli[coord])).prop_map(move |order| Component { coord, order })
    });
    prop::collection::vec(comp, 1..=3)
        .prop_map(move |mut comps| {
            while comps.len() > 1 && comps.iter().map(|c| c.order).product::<u32>() > max {
                comps.pop();
            }
            comps
        })
        .prop_filter("module too large", move |comps| comps.iter().map(|c| c.order).product::<u32>() <= max)
        .prop_map(move |comps| Module::new(&ring, &comps).unwrap())
}

fn module() -> impl Strategy<Value = Module> {
    moduli().prop_flat_map(|m| module_over(m, 32))
}

fn with_submodule() -> impl Strategy<Value = (Module, Submodule)> {
    module().prop_flat_map(|m| {
        let card = m.cardinality();
        (Just(m), prop::collection::vec(0..card, 0..=2))
            .prop_map(|(m, gens)| {
                let n = m.submodule_generated(&gens).unwrap();
                (m, n)
            })
    })
}

fn ideal_pair() -> impl Strategy<Value = (Ring, Ideal, Ideal)> {
    prop_oneof![(2u32..=24).prop_map(|n| vec![n]), (2u32..=6, 2u32..=6).prop_map(|(a, b)| vec![a, b])].prop_flat_map(
        |moduli| {
            let r = Ring::new(&moduli).unwrap();
            let card = r.cardinality();
            (Just(r), prop::collection::vec(0..card, 0..=2), prop::collection::vec(0..card, 0..=2)).prop_map(
                |(r, a, b)| {
                    let i = Ideal::generated(&r, &a).unwrap();
                    let j = Ideal::generated(&r, &b).unwrap();
                    (r, i, j)
                },
            )
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn implication_lattice((_m, n) in with_submodule()) {
        prop_assume!(n.is_proper());
        let prime = Predicate::Prime.holds(&n).unwrap();
        let cp = Predicate::ClassicalPrime.holds(&n).unwrap();
        let two = Predicate::TwoAbsorbing.holds(&n).unwrap();
        let c2a = Predicate::ClassicalTwoAbsorbing.holds(&n).unwrap();
        prop_assert!(!prime || cp);
        prop_assert!(!cp || c2a);
        prop_assert!(!two || c2a);
        prop_assert_eq!(cp, two && n.colon_module().is_prime());
        for k in 1..=3 {
            let weaker = Predicate::NAbsorbing(k + 1).holds(&n).unwrap();
            prop_assert!(!Predicate::NAbsorbing(k).holds(&n).unwrap() || weaker);
        }
    }

    #[test]
    fn dual_oracle((_m, n) in with_submodule()) {
        prop_assume!(n.is_proper());
        let def = Predicate::ClassicalTwoAbsorbing.holds(&n).unwrap();
        prop_assert_eq!(def, classical_2_absorbing_by_colons(&n).unwrap().is_none());
    }

    #[test]
    fn witnesses_replay((_m, n) in with_submodule()) {
        prop_assume!(n.is_proper());
        let rec = ClassificationRecord::new(&n, 0, 3).unwrap();
        prop_assert!(rec.verify().unwrap());
    }

    #[test]
    fn submodule_operations((m, n) in with_submodule(), extra in prop::collection::vec(0usize..32, 0..=2)) {
        let gens: Vec<Elem> = extra.into_iter().filter(|&g| g < m.cardinality()).collect();
        let k = m.submodule_generated(&gens).unwrap();
        let meet = n.intersection(&k).unwrap();
        let join = n.sum(&k).unwrap();
        prop_assert!(meet.is_subset(&n) && meet.is_subset(&k));
        prop_assert!(n.is_subset(&join) && k.is_subset(&join));
        prop_assert_eq!(n.sum(&k).unwrap(), k.sum(&n).unwrap());
        // Lagrange on the sum: |N + K| |N ∩ K| = |N| |K|.
        prop_assert_eq!(join.len() * meet.len(), n.len() * k.len());
        // (N :_R M) M ⊆ N, and nothing larger does that.
        let colon = n.colon_module();
        prop_assert!(m.whole().scaled(&colon).is_subset(&n));
        for r in m.ring().elements() {
            let inside = m.elements().all(|x| n.contains(m.act(r, x)));
            prop_assert_eq!(inside, colon.contains(r));
        }
    }

    #[test]
    fn ideal_laws((_r, i, j) in ideal_pair()) {
        let prod = i.product(&j).unwrap();
        let meet = i.intersection(&j).unwrap();
        prop_assert_eq!(&prod, &j.product(&i).unwrap());
        prop_assert!(prod.is_subset(&meet));
        prop_assert!(meet.is_subset(&i));
        prop_assert!(i.is_subset(&i.sum(&j).unwrap()));
        if i.is_proper() {
            let rad = i.radical().unwrap();
            prop_assert!(i.is_subset(&rad));
            prop_assert_eq!(&rad.radical().unwrap(), &rad);
            let mins = i.minimal_primes().unwrap();
            prop_assert!(!mins.is_empty());
            let mut meet_all = mins[0].clone();
            for p in &mins[1..] {
                meet_all = meet_all.intersection(p).unwrap();
            }
            prop_assert_eq!(meet_all, rad);
        }
    }

    #[test]
    fn preimage_contains_kernel(
        (m, target) in moduli().prop_flat_map(|r| (module_over(r.clone(), 16), module_over(r, 16))),
        seed in 0usize..1000,
    ) {
        let homs = ModuleHom::enumerate(&m, &target).unwrap();
        let f = &homs[seed % homs.len()];
        for k in target.enumerate_submodules().unwrap() {
            let pre = f.preimage(&k).unwrap();
            prop_assert!(f.kernel().is_subset(&pre));
            prop_assert!(f.image_of(&pre).unwrap().is_subset(&k));
        }
    }
}
