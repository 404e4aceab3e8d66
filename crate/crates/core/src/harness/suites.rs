use std::collections::{BTreeSet, HashMap};

use fixedbitset::FixedBitSet;

use super::family::{generate_instances, modules_over, Instance, InstanceFamily};
use super::search::search_separating;
use super::{per_item, SuiteId, Tally};
use crate::classify::{
    classical_2_absorbing_by_colons, classical_2_absorbing_witness, complement,
    evaluate_main2_conditions, evaluate_main_conditions, is_2_absorbing_submodule,
    is_c2a_m_closed, is_classical_2_absorbing, is_classical_prime, is_n_absorbing_submodule,
    is_prime_submodule, maximal_disjoint_submodules, minimal_classical_2_absorbing, Predicate,
    Witness, WitnessJson,
};
use crate::error::Result;
use crate::module::{
    direct_product, localize, quotient_module, tensor_free, Component, Module, ModuleHom,
    Submodule,
};
use crate::ring::{enumerate_ideals, AbsorbingMode, Elem, Ideal, Ring};

pub(super) fn run(id: SuiteId, family: &InstanceFamily) -> (usize, Tally) {
    let instances = generate_instances(family);
    match id {
        SuiteId::Main => (instances.len(), per_instance(&instances, t_main)),
        SuiteId::MainCor => t_main_cor(&instances),
        SuiteId::Hom => t_hom(&instances, family),
        SuiteId::Meet => (instances.len(), per_instance(&instances, t_meet)),
        SuiteId::Sep => t_sep(&instances, family),
        SuiteId::Min => t_min(&instances),
        SuiteId::Rad => (instances.len(), per_instance(&instances, t_rad)),
        SuiteId::Mult => (instances.len(), per_instance(&instances, t_mult)),
        SuiteId::Main2 => {
            let small = below(&instances, family.max_quadratic_module);
            (small.len(), per_instance(&small, t_main2))
        }
        SuiteId::MClosed => {
            let small = below(&instances, family.max_quadratic_module);
            (small.len(), per_instance(&small, t_mclosed))
        }
        SuiteId::Flat => {
            let bound = family.max_module;
            let t = per_item(&instances, |i| Some(i.id()), |i, t| t_flat(i, bound, t));
            (instances.len(), t)
        }
        SuiteId::Loc => (instances.len(), per_instance(&instances, t_loc)),
        SuiteId::Prod => t_prod(family),
    }
}

fn per_instance(instances: &[Instance], f: fn(&Instance, &mut Tally) -> Result<()>) -> Tally {
    per_item(instances, |i| Some(i.id()), f)
}

fn below(instances: &[Instance], bound: usize) -> Vec<Instance> {
    instances.iter().filter(|i| i.module.cardinality() <= bound).cloned().collect()
}

fn violation(m: &Module, w: Option<Witness>) -> Option<WitnessJson> {
    w.map(|w| WitnessJson {
        scalars: w.scalars.iter().map(|&r| m.ring().element(r)).collect(),
        element: m.element(w.element),
    })
}

/// Asserts that `n` is classical 2-absorbing, attaching a violation if not.
fn expect_c2a(t: &mut Tally, n: &Submodule, check: &str, detail: impl FnOnce() -> String) -> Result<()> {
    t.checks += 1;
    if !n.is_proper() {
        t.fail_with(check, Some(n.to_string()), format!("{} (submodule is not proper)", detail()), None);
        return Ok(());
    }
    if let Some(w) = classical_2_absorbing_witness(n)? {
        t.fail_with(check, Some(n.to_string()), detail(), violation(n.module(), Some(w)));
    }
    Ok(())
}

/// The submodule lattice with the two flags most suites need.
struct Lattice {
    subs: Vec<Submodule>,
    index: HashMap<FixedBitSet, usize>,
    c2a: Vec<bool>,
    cprime: Vec<bool>,
}

impl Lattice {
    fn new(m: &Module) -> Result<Lattice> {
        let subs = m.enumerate_submodules()?;
        let mut c2a = Vec::with_capacity(subs.len());
        let mut cprime = Vec::with_capacity(subs.len());
        for n in &subs {
            let proper = n.is_proper();
            c2a.push(proper && is_classical_2_absorbing(n)?);
            cprime.push(proper && is_classical_prime(n)?);
        }
        let index = subs.iter().enumerate().map(|(i, s)| (s.set().clone(), i)).collect();
        Ok(Lattice { subs, index, c2a, cprime })
    }

    fn find(&self, n: &Submodule) -> usize {
        self.index[n.set()]
    }

    fn proper(&self) -> impl Iterator<Item = (usize, &Submodule)> {
        self.subs.iter().enumerate().filter(|(_, n)| n.is_proper())
    }
}

fn label(n: &Submodule) -> Option<String> {
    Some(n.to_string())
}

// T-MAIN: the ten conditions agree, match the definition, and the
// definition matches the colon characterization.
fn t_main(inst: &Instance, t: &mut Tally) -> Result<()> {
    for n in inst.module.enumerate_submodules()? {
        if !n.is_proper() {
            continue;
        }
        let v = evaluate_main_conditions(&n)?;
        let def = is_classical_2_absorbing(&n)?;
        let by_colons = classical_2_absorbing_by_colons(&n)?.is_none();
        t.check(v.all_equal(), "ten-conditions-agree", label(&n), || format!("{:?}", v.conditions));
        t.check(v.get(1) == def, "condition-1-is-definition", label(&n), || {
            format!("condition (1) {} but definition {}", v.get(1), def)
        });
        t.check(by_colons == def, "dual-oracle", label(&n), || {
            format!("definition {def} but colon characterization {by_colons}")
        });
    }
    Ok(())
}

// T-MAIN-COR: a proper ideal is c2a in R exactly when it is 2-absorbing;
// if every proper ideal is 2-absorbing, every proper submodule is c2a.
fn t_main_cor(instances: &[Instance]) -> (usize, Tally) {
    let mut rings: Vec<Ring> = Vec::new();
    for i in instances {
        if rings.last().is_none_or(|r| r.moduli() != i.ring.moduli()) {
            rings.push(i.ring.clone());
        }
    }
    let ring_part = per_item(
        &rings,
        |_| None,
        |ring, t| {
            let regular = Module::regular(ring);
            for ideal in enumerate_ideals(ring) {
                if !ideal.is_proper() {
                    continue;
                }
                let n = regular.submodule_from_set(ideal.set().clone())?;
                let two = ideal.is_n_absorbing(2, AbsorbingMode::Elementwise)?;
                let c2a = is_classical_2_absorbing(&n)?;
                t.check(two == c2a, "ideal-c2a-iff-2-absorbing", label(&n), || {
                    format!("in {ring}: 2-absorbing {two}, c2a {c2a}")
                });
            }
            Ok(())
        },
    );
    let all_two: HashMap<Vec<u32>, bool> = rings
        .iter()
        .map(|r| {
            let ok = enumerate_ideals(r)
                .iter()
                .filter(|i| i.is_proper())
                .all(|i| i.is_n_absorbing(2, AbsorbingMode::Elementwise).unwrap_or(false));
            (r.moduli().to_vec(), ok)
        })
        .collect();
    let module_part = per_instance_with(instances, |inst, t| {
        if !all_two[inst.ring.moduli()] {
            return Ok(());
        }
        for n in inst.module.enumerate_submodules()? {
            if n.is_proper() {
                expect_c2a(t, &n, "every-proper-submodule-c2a", || {
                    format!("every proper ideal of {} is 2-absorbing", inst.ring)
                })?;
            }
        }
        Ok(())
    });
    let mut tally = ring_part;
    tally.absorb(module_part);
    (instances.len(), tally)
}

fn per_instance_with(instances: &[Instance], f: impl Fn(&Instance, &mut Tally) -> Result<()> + Sync) -> Tally {
    per_item(instances, |i| Some(i.id()), f)
}

// T-HOM: preimages and images of c2a submodules along projections and
// along every epimorphism between small modules.
fn t_hom(instances: &[Instance], family: &InstanceFamily) -> (usize, Tally) {
    let mut tally = per_instance(instances, t_hom_quotients);
    let small = below(instances, family.max_hom_module);
    let lattices: Vec<Lattice> = {
        use rayon::prelude::*;
        small.par_iter().map(|i| Lattice::new(&i.module).expect("bounded module")).collect()
    };
    let pairs: Vec<(usize, usize)> = (0..small.len())
        .flat_map(|s| (0..small.len()).map(move |d| (s, d)))
        .filter(|&(s, d)| small[s].ring.moduli() == small[d].ring.moduli())
        .collect();
    let hom_part = per_item(
        &pairs,
        |&(s, _)| Some(small[s].id()),
        |&(s, d), t| {
            let (src, dst) = (&lattices[s], &lattices[d]);
            for f in ModuleHom::enumerate(&small[s].module, &small[d].module)? {
                if !f.is_epimorphism() {
                    continue;
                }
                for (j, n2) in dst.proper() {
                    if !dst.c2a[j] {
                        continue;
                    }
                    let pre = f.preimage(n2)?;
                    let k = src.find(&pre);
                    t.check(src.c2a[k], "epi-preimage-c2a", label(&pre), || {
                        format!("preimage of {n2} in {} along {:?}", small[d], f.table())
                    });
                }
                for (i, n) in src.proper() {
                    if !src.c2a[i] || !f.kernel().is_subset(n) {
                        continue;
                    }
                    let img = f.image_of(n)?;
                    let k = dst.find(&img);
                    t.check(dst.c2a[k], "epi-image-c2a", label(&img), || {
                        format!("image of {n} from {} along {:?}", small[s], f.table())
                    });
                }
            }
            Ok(())
        },
    );
    tally.absorb(hom_part);
    (instances.len(), tally)
}

fn t_hom_quotients(inst: &Instance, t: &mut Tally) -> Result<()> {
    let m = &inst.module;
    let lat = Lattice::new(m)?;
    for l in &lat.subs {
        let q = quotient_module(m, l)?;
        let qlat = Lattice::new(&q.module)?;
        for (j, n2) in qlat.proper() {
            let pre = q.projection.preimage(n2)?;
            let i = lat.find(&pre);
            t.check(lat.c2a[i] == qlat.c2a[j], "quotient-correspondence", label(&pre), || {
                format!("{pre} c2a {} but {pre}/{l} c2a {}", lat.c2a[i], qlat.c2a[j])
            });
            if qlat.c2a[j] && !lat.c2a[i] {
                t.fail_with(
                    "projection-preimage-c2a",
                    label(&pre),
                    format!("preimage of a c2a submodule of M/{l}"),
                    violation(m, classical_2_absorbing_witness(&pre)?),
                );
            }
        }
    }
    Ok(())
}

// T-MEET: pairwise meets of classical primes and meets along chains of
// c2a submodules are c2a.
fn t_meet(inst: &Instance, t: &mut Tally) -> Result<()> {
    let lat = Lattice::new(&inst.module)?;
    let n = lat.subs.len();
    for i in 0..n {
        for j in i..n {
            let (a, b) = (&lat.subs[i], &lat.subs[j]);
            if lat.cprime[i] && lat.cprime[j] {
                let meet = a.intersection(b)?;
                t.check(lat.c2a[lat.find(&meet)], "classical-prime-meet", label(&meet), || {
                    format!("{a} meet {b}")
                });
            }
            if lat.c2a[i] && lat.c2a[j] && (a.is_subset(b) || b.is_subset(a)) {
                let meet = a.intersection(b)?;
                t.check(lat.c2a[lat.find(&meet)], "chain-meet", label(&meet), || format!("{a} meet {b}"));
            }
        }
    }
    Ok(())
}

// T-SEP: the implication lattice between the classes, plus the three
// separation searches.
fn t_sep(instances: &[Instance], family: &InstanceFamily) -> (usize, Tally) {
    let mut tally = per_instance(instances, t_sep_lattice);
    let mut t = Tally::for_instance(None);
    for (left, right, assert_found) in [
        (Predicate::ClassicalTwoAbsorbing, Predicate::ClassicalPrime, true),
        (Predicate::TwoAbsorbing, Predicate::Prime, true),
        (Predicate::ClassicalTwoAbsorbing, Predicate::TwoAbsorbing, false),
    ] {
        match search_separating(left, right, family) {
            Ok(out) => {
                let replays = out.replays().unwrap_or(false);
                t.check(replays, "search-witness-replays", None, || format!("{left} vs {right}"));
                let summary = match out.found() {
                    Some(w) => format!("{left} but not {right}: {} in {}", w.submodule, w.instance),
                    None => format!("{left} but not {right}: none within bounds"),
                };
                if assert_found {
                    t.check(out.found().is_some(), "search-finds-witness", None, || summary.clone());
                }
                t.note(None, summary, None);
            }
            Err(e) => t.error(e),
        }
    }
    // The classical example ring: (0) in Z6 separates both pairs as well.
    let z6 = Module::regular(&Ring::new(&[6]).expect("valid ring"));
    let zero = z6.zero_submodule();
    let sep = |l: Predicate, r: Predicate| -> Result<bool> { Ok(l.holds(&zero)? && !r.holds(&zero)?) };
    match (
        sep(Predicate::ClassicalTwoAbsorbing, Predicate::ClassicalPrime),
        sep(Predicate::TwoAbsorbing, Predicate::Prime),
    ) {
        (Ok(a), Ok(b)) => {
            t.check(a, "z6-zero-c2a-not-classical-prime", label(&zero), String::new);
            t.check(b, "z6-zero-2abs-not-prime", label(&zero), String::new);
        }
        (Err(e), _) | (_, Err(e)) => t.error(e),
    }
    tally.absorb(t);
    (instances.len(), tally)
}

fn t_sep_lattice(inst: &Instance, t: &mut Tally) -> Result<()> {
    for n in inst.module.enumerate_submodules()? {
        if !n.is_proper() {
            continue;
        }
        let prime = is_prime_submodule(&n)?;
        let cprime = is_classical_prime(&n)?;
        let two = is_2_absorbing_submodule(&n)?;
        let c2a = is_classical_2_absorbing(&n)?;
        let colon_prime = n.colon_module().is_prime();
        t.check(!prime || cprime, "prime-implies-classical-prime", label(&n), String::new);
        t.check(!cprime || c2a, "classical-prime-implies-c2a", label(&n), String::new);
        t.check(!two || c2a, "2abs-implies-c2a", label(&n), String::new);
        t.check(cprime == (two && colon_prime), "classical-prime-iff-2abs-and-prime-colon", label(&n), || {
            format!("classical prime {cprime}, 2-absorbing {two}, (N:M) prime {colon_prime}")
        });
        let k2 = is_n_absorbing_submodule(&n, 2)?;
        t.check(k2 == two, "2-absorbing-is-n-absorbing-2", label(&n), String::new);
    }
    Ok(())
}

// T-MIN: every c2a submodule contains a minimal one; the truncations of
// the injective hull of Z_p are not c2a, witnessed by a = b = c = p.
fn t_min(instances: &[Instance]) -> (usize, Tally) {
    let mut tally = per_instance(instances, |inst, t| {
        let lat = Lattice::new(&inst.module)?;
        let minimal = minimal_classical_2_absorbing(&inst.module)?;
        for x in &minimal.members {
            t.check(lat.c2a[lat.find(x)], "minimal-is-c2a", label(x), String::new);
            t.check(
                !minimal.members.iter().any(|y| y != x && y.is_subset(x)),
                "minimal-is-minimal",
                label(x),
                String::new,
            );
        }
        for (i, n) in lat.proper() {
            if lat.c2a[i] {
                t.check(
                    minimal.members.iter().any(|x| x.is_subset(n)),
                    "contains-minimal",
                    label(n),
                    String::new,
                );
            }
        }
        t.check(minimal.none_found == !lat.c2a.iter().any(|&c| c), "none-found-flag", None, String::new);
        Ok(())
    });
    let mut t = Tally::for_instance(None);
    for (p, exp) in [(2u32, 3u32), (2, 4), (3, 3), (3, 4)] {
        if let Err(e) = truncation(p, exp, &mut t) {
            t.error(e);
        }
    }
    tally.absorb(t);
    (instances.len(), tally)
}

/// `N = (p^3)` in `Z_{p^e}`.
pub(crate) fn truncation(p: u32, exp: u32, t: &mut Tally) -> Result<()> {
    let ring = Ring::new(&[p.pow(exp)])?;
    let m = Module::regular(&ring);
    let n = m.submodule_generated(&[ring.from_int(i64::from(p.pow(3)))])?;
    let pe = ring.from_int(i64::from(p));
    let named = Witness { scalars: vec![pe; 3], element: m.index_of(&[1])? };
    t.check(!is_classical_2_absorbing(&n)?, "truncation-not-c2a", label(&n), || format!("in {ring}"));
    t.check(
        Predicate::ClassicalTwoAbsorbing.replay(&n, &named),
        "truncation-witness-replays",
        label(&n),
        || format!("a=b=c={p}, m=1 in {ring}"),
    );
    Ok(())
}

// T-RAD: shape of the radical of each colon and the family (N : xm).
fn t_rad(inst: &Instance, t: &mut Tally) -> Result<()> {
    let m = &inst.module;
    let ring = m.ring();
    for n in m.enumerate_submodules()? {
        if !n.is_proper() || !is_classical_2_absorbing(&n)? {
            continue;
        }
        for x in m.elements().filter(|&x| !n.contains(x)) {
            let colon = n.colon_ideal(&[x])?;
            let rad = colon.radical()?;
            let primes = colon.minimal_primes()?;
            let two_primes = primes.len() == 2 && primes[0].intersection(&primes[1])? == rad;
            t.check(rad.is_prime() || two_primes, "radical-shape", label(&n), || {
                format!("m={}: sqrt{colon} = {rad}, minimal primes {primes:?}", m.element(x))
            });
            if colon == rad {
                continue;
            }
            let mut family: Vec<Ideal> = Vec::new();
            for r in rad.elements().filter(|&r| !colon.contains(r)) {
                let c = n.colon_ideal(&[m.act(r, x)])?;
                let holds = c.is_prime() && primes.iter().all(|p| p.is_subset(&c));
                t.check(holds, "colon-xm-prime-over-minimal-primes", label(&n), || {
                    format!("m={}, x={}: {c}", m.element(x), ring.element(r))
                });
                family.push(c);
            }
            let chain = family
                .iter()
                .all(|a| family.iter().all(|b| a.is_subset(b) || b.is_subset(a)));
            t.check(chain, "colon-xm-chain", label(&n), || format!("m={}", m.element(x)));
        }
    }
    Ok(())
}

// T-MULT: product characterizations on multiplication modules.
fn t_mult(inst: &Instance, t: &mut Tally) -> Result<()> {
    let m = &inst.module;
    if !m.is_multiplication_module()? {
        return Ok(());
    }
    let ring = m.ring();
    let whole = m.whole();
    // Each submodule is (N_i : M) M, so products range over these ideals.
    let mut colons: Vec<Ideal> = m.enumerate_submodules()?.iter().map(Submodule::colon_module).collect();
    colons.sort();
    colons.dedup();
    let prod = |xs: &[&Ideal]| -> Ideal {
        xs.iter().fold(Ideal::unit(ring), |acc, x| acc.product(x).expect("same ring"))
    };
    for n in m.enumerate_submodules()? {
        if !n.is_proper() {
            continue;
        }
        let c2a = is_classical_2_absorbing(&n)?;
        let inside = |i: &Ideal, y: Elem| i.elements().all(|r| n.contains(m.act(r, y)));
        let sub_in = |i: &Ideal| whole.scaled(i).is_subset(&n);

        let mut with_element = true;
        'outer: for a in &colons {
            for b in &colons {
                for c in &colons {
                    let abc = prod(&[a, b, c]);
                    let (ab, ac, bc) = (prod(&[a, b]), prod(&[a, c]), prod(&[b, c]));
                    for y in m.elements() {
                        if inside(&abc, y) && !inside(&ab, y) && !inside(&ac, y) && !inside(&bc, y) {
                            with_element = false;
                            break 'outer;
                        }
                    }
                }
            }
        }
        t.check(with_element == c2a, "product-with-element-iff-c2a", label(&n), || {
            format!("c2a {c2a}, product form {with_element}")
        });

        let mut four = true;
        'four: for a in &colons {
            for b in &colons {
                for c in &colons {
                    for d in &colons {
                        if sub_in(&prod(&[a, b, c, d]))
                            && !sub_in(&prod(&[a, b, d]))
                            && !sub_in(&prod(&[a, c, d]))
                            && !sub_in(&prod(&[b, c, d]))
                        {
                            four = false;
                            break 'four;
                        }
                    }
                }
            }
        }
        let mut three = true;
        'three: for a in &colons {
            for b in &colons {
                for c in &colons {
                    if sub_in(&prod(&[a, b, c]))
                        && !sub_in(&prod(&[a, b]))
                        && !sub_in(&prod(&[a, c]))
                        && !sub_in(&prod(&[b, c]))
                    {
                        three = false;
                        break 'three;
                    }
                }
            }
        }
        let two = is_2_absorbing_submodule(&n)?;
        let colon_two = n.colon_module().is_n_absorbing(2, AbsorbingMode::Elementwise)?;
        let rest = [four, three, two, colon_two];
        for (k, &holds) in rest.iter().enumerate() {
            t.check(!holds || c2a, "five-way-backward", label(&n), || {
                format!("condition ({}) holds but N is not c2a", k + 2)
            });
        }
        if c2a && rest.iter().any(|&h| !h) {
            let missing: Vec<String> = rest
                .iter()
                .enumerate()
                .filter(|(_, &h)| !h)
                .map(|(k, _)| format!("({})", k + 2))
                .collect();
            t.note(label(&n), format!("c2a but five-way {} fail", missing.join(",")), None);
        }
    }
    Ok(())
}

// T-MAIN2: backward implications asserted, forward ones recorded. Also c2a
// against 4-absorbing, and the colon of abcm against the three two-scalar colons.
fn t_main2(inst: &Instance, t: &mut Tally) -> Result<()> {
    let m = &inst.module;
    let ring = m.ring();
    for n in m.enumerate_submodules()? {
        if !n.is_proper() {
            continue;
        }
        let v = evaluate_main2_conditions(&n)?;
        let c2a = is_classical_2_absorbing(&n)?;
        t.check(v.get(1) == c2a, "condition-1-is-definition", label(&n), String::new);
        for k in 2..=10 {
            t.check(!v.get(k) || v.get(1), "backward-implication", label(&n), || {
                format!("({k}) holds but (1) fails: {:?}", v.conditions)
            });
        }
        if c2a && !v.all_equal() {
            t.note(label(&n), "forward direction fails", Some(v.conditions));
        }

        let four = is_n_absorbing_submodule(&n, 4)?;
        let colon_two = n.colon_module().is_n_absorbing(2, AbsorbingMode::Elementwise)?;
        t.check(!c2a || four, "c2a-implies-4-absorbing", label(&n), String::new);
        if c2a && !colon_two {
            t.note(label(&n), "c2a but (N:M) is not 2-absorbing", None);
        }
        if four && colon_two && !c2a {
            t.note(label(&n), "4-absorbing with 2-absorbing (N:M) but not c2a", None);
        }

        if !c2a {
            continue;
        }
        for x in m.elements() {
            for a in ring.elements() {
                for b in a..ring.cardinality() {
                    for c in b..ring.cardinality() {
                        let col = |r: Elem| n.colon_set([m.act(r, x)]);
                        let lhs = col(ring.mul(ring.mul(a, b), c));
                        let (ab, ac, bc) = (col(ring.mul(a, b)), col(ring.mul(a, c)), col(ring.mul(b, c)));
                        let mut union = ab.clone();
                        union.union_with(&ac);
                        union.union_with(&bc);
                        t.check(lhs == union, "colon-union", label(&n), || {
                            format!("a={a}, b={b}, c={c}, m={}", m.element(x))
                        });
                        t.check(lhs == ab || lhs == ac || lhs == bc, "colon-one-of-three", label(&n), || {
                            format!("a={a}, b={b}, c={c}, m={}", m.element(x))
                        });
                    }
                }
            }
        }
    }
    Ok(())
}

// T-MCLOSED: N is c2a iff M \ N is m-closed; maximal submodules disjoint
// from an m-closed set are c2a.
fn t_mclosed(inst: &Instance, t: &mut Tally) -> Result<()> {
    let m = &inst.module;
    let lat = Lattice::new(m)?;
    for (i, n) in lat.proper() {
        let closed = is_c2a_m_closed(m, &complement(n))?;
        t.check(!closed || lat.c2a[i], "m-closed-implies-c2a", label(n), String::new);
        t.check(!lat.c2a[i] || closed, "c2a-implies-m-closed", label(n), String::new);
    }
    if m.cardinality() > 8 {
        return Ok(());
    }
    let nonzero: Vec<Elem> = m.elements().filter(|&x| x != m.zero()).collect();
    for mask in 1u32..(1 << nonzero.len()) {
        let s: Vec<Elem> = nonzero
            .iter()
            .enumerate()
            .filter(|(b, _)| mask >> b & 1 == 1)
            .map(|(_, &x)| x)
            .collect();
        if !is_c2a_m_closed(m, &s)? {
            continue;
        }
        let maximal = maximal_disjoint_submodules(m, &s)?;
        t.check(!maximal.is_empty(), "maximal-disjoint-exists", None, || format!("S={s:?}"));
        for p in &maximal {
            t.check(lat.c2a[lat.find(p)], "maximal-disjoint-c2a", label(p), || format!("S={s:?}"));
        }
    }
    Ok(())
}

// T-FLAT: N versus N^k inside M^k for k = 1, 2.
fn t_flat(inst: &Instance, bound: usize, t: &mut Tally) -> Result<()> {
    let m = &inst.module;
    for n in m.enumerate_submodules()? {
        if !n.is_proper() {
            continue;
        }
        let c2a = is_classical_2_absorbing(&n)?;
        let (_, n1) = tensor_free(m, &n, 1)?;
        t.check(is_classical_2_absorbing(&n1)? == c2a, "rank-1", label(&n), String::new);
        if m.cardinality() * m.cardinality() > bound {
            continue;
        }
        let (_, n2) = tensor_free(m, &n, 2)?;
        let c2a2 = is_classical_2_absorbing(&n2)?;
        t.check(!c2a2 || c2a, "rank-2-backward", label(&n), String::new);
        if c2a && !c2a2 {
            t.note(label(&n), "c2a but N^2 is not c2a in M^2", None);
        }
    }
    Ok(())
}

/// Multiplicative sets: `{1, x, x^2, ...}` for every `x`, and `R \ P` for
/// every prime `P`, deduplicated and sorted.
fn multiplicative_sets(ring: &Ring) -> Vec<Vec<Elem>> {
    let mut sets = BTreeSet::new();
    for x in ring.elements() {
        let mut s = BTreeSet::from([ring.one()]);
        let mut p = x;
        while s.insert(p) {
            p = ring.mul(p, x);
        }
        sets.insert(s.into_iter().collect::<Vec<_>>());
    }
    for p in enumerate_ideals(ring) {
        if p.is_prime() {
            sets.insert(ring.elements().filter(|&r| !p.contains(r)).collect());
        }
    }
    sets.into_iter().collect()
}

// T-LOC: both localization transfers.
fn t_loc(inst: &Instance, t: &mut Tally) -> Result<()> {
    let m = &inst.module;
    let lat = Lattice::new(m)?;
    for s in multiplicative_sets(m.ring()) {
        let loc = localize(m, &s)?;
        let llat = Lattice::new(&loc.module)?;
        for (i, n) in lat.proper() {
            let ln = loc.localize_submodule(n)?;
            let j = llat.find(&ln);
            let colon = n.colon_module();
            if lat.c2a[i] && s.iter().all(|&u| !colon.contains(u)) {
                t.check(ln.is_proper() && llat.c2a[j], "localize-c2a", label(n), || {
                    format!("S={s:?}: S^-1 N = {ln} in {}", loc.module.name())
                });
            }
            let zd = n.zero_divisors_on_quotient()?;
            if ln.is_proper() && llat.c2a[j] && s.iter().all(|u| !zd.contains(u)) {
                t.check(lat.c2a[i], "delocalize-c2a", label(n), || format!("S={s:?}"));
            }
        }
    }
    Ok(())
}

/// Factors for the product suite: one-coordinate rings up to the pair
/// bound and up to 5, with every module over them.
fn product_factors(family: &InstanceFamily) -> Vec<(Ring, Module)> {
    let top = family.max_pair_modulus.max(5);
    (2..=top)
        .flat_map(|n| {
            let r = Ring::new(&[n]).expect("valid modulus");
            modules_over(&r, family.max_module / 2)
                .into_iter()
                .map(move |m| (r.clone(), m))
        })
        .collect()
}

fn product_cases(family: &InstanceFamily) -> Vec<Vec<(Ring, Module)>> {
    let factors = product_factors(family);
    let mut cases: Vec<Vec<(Ring, Module)>> = Vec::new();
    for a in &factors {
        for b in &factors {
            if a.1.cardinality() * b.1.cardinality() <= family.max_module
                && a.0.moduli()[0] <= family.max_pair_modulus.max(3)
                && b.0.moduli()[0] <= family.max_pair_modulus.max(3)
            {
                cases.push(vec![a.clone(), b.clone()]);
            }
        }
    }
    let regular = |n: u32| {
        let r = Ring::new(&[n]).expect("valid modulus");
        let m = Module::new(&r, &[Component { coord: 0, order: n }]).expect("regular");
        (r, m)
    };
    if family.max_module >= 30 {
        cases.push(vec![regular(2), regular(3), regular(5)]);
    }
    if family.max_module >= 8 {
        cases.push(vec![regular(2), regular(2), regular(2)]);
    }
    cases
}

// T-PROD: classification of submodules of products from the factors.
fn t_prod(family: &InstanceFamily) -> (usize, Tally) {
    if family.max_module < 4 {
        return (0, Tally::default());
    }
    let cases = product_cases(family);
    let tally = per_item(
        &cases,
        |_| None,
        |parts, t| {
            let p = direct_product(parts)?;
            let inst = Instance { ring: p.ring.clone(), module: p.module.clone() };
            let mut inner = Tally::for_instance(Some(inst.id()));
            let factor_flags: Vec<Lattice> =
                p.factors.iter().map(Lattice::new).collect::<Result<_>>()?;
            for n in p.module.enumerate_submodules()? {
                if !n.is_proper() {
                    continue;
                }
                let d = p.decompose(&n)?;
                inner.check(d.split, "submodule-splits", label(&n), String::new);
                let proper: Vec<usize> =
                    (0..d.parts.len()).filter(|&k| d.parts[k].is_proper()).collect();
                let flag = |k: usize, c2a: bool| {
                    let lat = &factor_flags[k];
                    let i = lat.find(&d.parts[k]);
                    if c2a {
                        lat.c2a[i]
                    } else {
                        lat.cprime[i]
                    }
                };
                let expected_c2a = match proper.as_slice() {
                    [k] => flag(*k, true),
                    [k, l] => flag(*k, false) && flag(*l, false),
                    _ => false,
                };
                let expected_cprime = matches!(proper.as_slice(), [k] if flag(*k, false));
                let c2a = is_classical_2_absorbing(&n)?;
                let cprime = is_classical_prime(&n)?;
                inner.check(c2a == expected_c2a, "product-c2a-cases", label(&n), || {
                    format!("c2a {c2a}, case analysis {expected_c2a}")
                });
                inner.check(cprime == expected_cprime, "product-classical-prime-cases", label(&n), || {
                    format!("classical prime {cprime}, case analysis {expected_cprime}")
                });
            }
            t.absorb(inner);
            Ok(())
        },
    );
    (cases.len(), tally)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn truncations_hold() {
        let mut t = Tally::default();
        for (p, e) in [(2, 3), (2, 4), (3, 3), (3, 4)] {
            truncation(p, e, &mut t).unwrap();
        }
        assert!(t.failures.is_empty(), "{:?}", t.failures);
        assert_eq!(t.checks, 8);
    }

    #[test]
    fn multiplicative_sets_of_z6() {
        let r = Ring::new(&[6]).unwrap();
        let sets = multiplicative_sets(&r);
        assert!(sets.contains(&vec![1, 3]));
        assert!(sets.contains(&vec![1, 3, 5]));
        assert!(sets.contains(&vec![0, 1]));
    }

    #[test]
    fn z2_times_z3_product() {
        let r2 = Ring::new(&[2]).unwrap();
        let r3 = Ring::new(&[3]).unwrap();
        let p = direct_product(&[(r2.clone(), Module::regular(&r2)), (r3.clone(), Module::regular(&r3))]).unwrap();
        assert!(is_classical_2_absorbing(&p.module.zero_submodule()).unwrap());
    }
}
