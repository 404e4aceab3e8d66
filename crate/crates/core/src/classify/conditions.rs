//! The two ten-condition characterizations of classical 2-absorbing
//! submodules, one brute-force loop per condition.
//!
//! Conditions never call each other or the definitional predicate, so an
//! agreement between two entries is a fact about the instance rather than
//! about shared code.

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::module::{Module, Submodule, DEFAULT_SUBMODULE_BOUND};
use crate::ring::{enumerate_ideals, AbsorbingMode, Elem, Ideal};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Characterization {
    /// Element-quantified conditions.
    Main,
    /// Submodule-quantified conditions.
    Main2,
}

#[derive(Debug, Clone, Serialize)]
pub struct ConditionVector {
    pub theorem: Characterization,
    pub conditions: [bool; 10],
    #[serde(skip)]
    pub submodule: Submodule,
}

impl ConditionVector {
    pub fn all_equal(&self) -> bool {
        self.conditions.iter().all(|&c| c == self.conditions[0])
    }

    /// Condition `k`, numbered from 1.
    pub fn get(&self, k: usize) -> bool {
        self.conditions[k - 1]
    }
}

/// Ideals as element lists plus their product table.
struct IdealTable {
    elems: Vec<Vec<Elem>>,
    product: Vec<Vec<usize>>,
}

impl IdealTable {
    fn new(ideals: &[Ideal]) -> IdealTable {
        let pos = |x: &Ideal| ideals.iter().position(|y| y == x).expect("ideal list is closed under products");
        let product = ideals
            .iter()
            .map(|i| ideals.iter().map(|j| pos(&i.product(j).expect("same ring"))).collect())
            .collect();
        IdealTable { elems: ideals.iter().map(|i| i.elements().collect()).collect(), product }
    }

    fn len(&self) -> usize {
        self.elems.len()
    }
}

fn require_proper(n: &Submodule) -> Result<()> {
    if n.is_proper() {
        Ok(())
    } else {
        Err(Error::ImproperInput(format!("{n} is not a proper submodule")))
    }
}

/// The ten element-quantified conditions for `n`.
pub fn evaluate_main_conditions(n: &Submodule) -> Result<ConditionVector> {
    require_proper(n)?;
    let ideals = enumerate_ideals(n.module().ring());
    let table = IdealTable::new(&ideals);
    let conditions = [
        main_1(n),
        main_2(n),
        main_3(n),
        main_4(n),
        main_5(n, &table),
        main_6(n, &table),
        main_7(n, &table),
        main_8(n, &table),
        main_9(n, &table),
        main_10(n)?,
    ];
    Ok(ConditionVector { theorem: Characterization::Main, conditions, submodule: n.clone() })
}

// (1) abcm in N => abm, acm or bcm in N, over all a, b, c.
fn main_1(n: &Submodule) -> bool {
    let m = n.module();
    let ring = m.ring();
    for x in m.elements() {
        for a in ring.elements() {
            for b in ring.elements() {
                for c in ring.elements() {
                    let abc = ring.mul(ring.mul(a, b), c);
                    if n.contains(m.act(abc, x))
                        && !n.contains(m.act(ring.mul(a, b), x))
                        && !n.contains(m.act(ring.mul(a, c), x))
                        && !n.contains(m.act(ring.mul(b, c), x))
                    {
                        return false;
                    }
                }
            }
        }
    }
    true
}

// (2) (N :_M abc) = (N :_M ab) u (N :_M ac) u (N :_M bc).
fn main_2(n: &Submodule) -> bool {
    let m = n.module();
    let ring = m.ring();
    let colon = |r: Elem| -> FixedBitSet {
        let mut s = m.empty_set();
        for x in m.elements() {
            if n.contains(m.act(r, x)) {
                s.insert(x);
            }
        }
        s
    };
    for a in ring.elements() {
        for b in ring.elements() {
            for c in ring.elements() {
                let lhs = colon(ring.mul(ring.mul(a, b), c));
                let mut rhs = colon(ring.mul(a, b));
                rhs.union_with(&colon(ring.mul(a, c)));
                rhs.union_with(&colon(ring.mul(b, c)));
                if lhs != rhs {
                    return false;
                }
            }
        }
    }
    true
}

// (3) abm not in N => (N :_R abm) = (N :_R am) u (N :_R bm).
fn main_3(n: &Submodule) -> bool {
    let m = n.module();
    let ring = m.ring();
    for x in m.elements() {
        for a in ring.elements() {
            for b in ring.elements() {
                let abx = m.act(ring.mul(a, b), x);
                if n.contains(abx) {
                    continue;
                }
                let lhs = n.colon_set([abx]);
                let mut rhs = n.colon_set([m.act(a, x)]);
                rhs.union_with(&n.colon_set([m.act(b, x)]));
                if lhs != rhs {
                    return false;
                }
            }
        }
    }
    true
}

// (4) abm not in N => (N :_R abm) equals (N :_R am) or (N :_R bm).
fn main_4(n: &Submodule) -> bool {
    let m = n.module();
    let ring = m.ring();
    for x in m.elements() {
        for a in ring.elements() {
            for b in ring.elements() {
                let abx = m.act(ring.mul(a, b), x);
                if n.contains(abx) {
                    continue;
                }
                let lhs = n.colon_set([abx]);
                if lhs != n.colon_set([m.act(a, x)]) && lhs != n.colon_set([m.act(b, x)]) {
                    return false;
                }
            }
        }
    }
    true
}

// (5) abIm in N => abm in N or aIm in N or bIm in N.
fn main_5(n: &Submodule, t: &IdealTable) -> bool {
    let m = n.module();
    let ring = m.ring();
    for x in m.elements() {
        for a in ring.elements() {
            for b in ring.elements() {
                let ab = ring.mul(a, b);
                for i in &t.elems {
                    let inside = |s: Elem| i.iter().all(|&r| n.contains(m.act(ring.mul(s, r), x)));
                    if inside(ab) && !n.contains(m.act(ab, x)) && !inside(a) && !inside(b) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

// (6) aIm not in N => (N :_R aIm) equals (N :_R am) or (N :_R Im).
fn main_6(n: &Submodule, t: &IdealTable) -> bool {
    let m = n.module();
    let ring = m.ring();
    for x in m.elements() {
        for a in ring.elements() {
            for i in &t.elems {
                let ai_x: Vec<Elem> = i.iter().map(|&r| m.act(ring.mul(a, r), x)).collect();
                if ai_x.iter().all(|&y| n.contains(y)) {
                    continue;
                }
                let lhs = n.colon_set(ai_x.iter().copied());
                let by_a = n.colon_set([m.act(a, x)]);
                let by_i = n.colon_set(i.iter().map(|&r| m.act(r, x)));
                if lhs != by_a && lhs != by_i {
                    return false;
                }
            }
        }
    }
    true
}

// (7) aIJm in N => aIm in N or aJm in N or IJm in N.
fn main_7(n: &Submodule, t: &IdealTable) -> bool {
    let m = n.module();
    let ring = m.ring();
    for x in m.elements() {
        for a in ring.elements() {
            for i in 0..t.len() {
                for j in 0..t.len() {
                    let ij = &t.elems[t.product[i][j]];
                    let scaled_in = |s: Elem, id: &[Elem]| {
                        id.iter().all(|&r| n.contains(m.act(ring.mul(s, r), x)))
                    };
                    if scaled_in(a, ij)
                        && !scaled_in(a, &t.elems[i])
                        && !scaled_in(a, &t.elems[j])
                        && !scaled_in(ring.one(), ij)
                    {
                        return false;
                    }
                }
            }
        }
    }
    true
}

// (8) IJm not in N => (N :_R IJm) equals (N :_R Im) or (N :_R Jm).
fn main_8(n: &Submodule, t: &IdealTable) -> bool {
    let m = n.module();
    for x in m.elements() {
        for i in 0..t.len() {
            for j in 0..t.len() {
                let ij = &t.elems[t.product[i][j]];
                if ij.iter().all(|&r| n.contains(m.act(r, x))) {
                    continue;
                }
                let lhs = n.colon_set(ij.iter().map(|&r| m.act(r, x)));
                let by_i = n.colon_set(t.elems[i].iter().map(|&r| m.act(r, x)));
                let by_j = n.colon_set(t.elems[j].iter().map(|&r| m.act(r, x)));
                if lhs != by_i && lhs != by_j {
                    return false;
                }
            }
        }
    }
    true
}

// (9) IJKm in N => IJm in N or IKm in N or JKm in N.
fn main_9(n: &Submodule, t: &IdealTable) -> bool {
    let m = n.module();
    for x in m.elements() {
        let kills = |id: usize| t.elems[id].iter().all(|&r| n.contains(m.act(r, x)));
        let killed: Vec<bool> = (0..t.len()).map(kills).collect();
        for i in 0..t.len() {
            for j in i..t.len() {
                let ij = t.product[i][j];
                for k in j..t.len() {
                    if killed[t.product[ij][k]]
                        && !killed[ij]
                        && !killed[t.product[i][k]]
                        && !killed[t.product[j][k]]
                    {
                        return false;
                    }
                }
            }
        }
    }
    true
}

// (10) (N :_R m) is a 2-absorbing ideal for every m outside N.
fn main_10(n: &Submodule) -> Result<bool> {
    for x in n.module().elements() {
        if !n.contains(x) && !n.colon_ideal(&[x])?.is_n_absorbing(2, AbsorbingMode::Elementwise)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Submodules as element lists, with `XL` lookups for ideals `X`.
struct SubTable {
    elems: Vec<Vec<Elem>>,
}

impl SubTable {
    fn new(m: &Module) -> Result<SubTable> {
        let subs = m.enumerate_submodules_bounded(DEFAULT_SUBMODULE_BOUND)?;
        Ok(SubTable { elems: subs.iter().map(|s| s.elements().collect()).collect() })
    }
}

/// The ten submodule-quantified conditions for `n`, evaluated without
/// assuming they agree.
pub fn evaluate_main2_conditions(n: &Submodule) -> Result<ConditionVector> {
    require_proper(n)?;
    let m = n.module();
    let subs = SubTable::new(m)?;
    let ideals = enumerate_ideals(m.ring());
    let table = IdealTable::new(&ideals);
    let conditions = [
        main2_1(n),
        main2_2(n),
        main2_3(n, &subs),
        main2_4(n, &subs),
        main2_5(n, &subs, &table),
        main2_6(n, &subs, &table),
        main2_7(n, &subs, &table),
        main2_8(n, &subs, &table),
        main2_9(n, &subs, &table),
        main2_10(n, &subs)?,
    ];
    Ok(ConditionVector { theorem: Characterization::Main2, conditions, submodule: n.clone() })
}

// (1) is the definition, restated over nondecreasing scalar triples.
fn main2_1(n: &Submodule) -> bool {
    let m = n.module();
    let ring = m.ring();
    let card = ring.cardinality();
    for a in 0..card {
        for b in a..card {
            for c in b..card {
                for x in m.elements() {
                    let hit = |r: Elem| n.contains(m.act(r, x));
                    if hit(ring.mul(ring.mul(a, b), c))
                        && !hit(ring.mul(a, b))
                        && !hit(ring.mul(a, c))
                        && !hit(ring.mul(b, c))
                    {
                        return false;
                    }
                }
            }
        }
    }
    true
}

// (2) (N :_M abc) equals one of (N :_M ab), (N :_M ac), (N :_M bc).
fn main2_2(n: &Submodule) -> bool {
    let m = n.module();
    let ring = m.ring();
    let colon = |r: Elem| -> Vec<bool> { m.elements().map(|x| n.contains(m.act(r, x))).collect() };
    for a in ring.elements() {
        for b in ring.elements() {
            for c in ring.elements() {
                let lhs = colon(ring.mul(ring.mul(a, b), c));
                if lhs != colon(ring.mul(a, b))
                    && lhs != colon(ring.mul(a, c))
                    && lhs != colon(ring.mul(b, c))
                {
                    return false;
                }
            }
        }
    }
    true
}

// (3) abcL in N => abL, acL or bcL in N.
fn main2_3(n: &Submodule, subs: &SubTable) -> bool {
    let m = n.module();
    let ring = m.ring();
    for l in &subs.elems {
        let kills = |r: Elem| l.iter().all(|&y| n.contains(m.act(r, y)));
        for a in ring.elements() {
            for b in ring.elements() {
                for c in ring.elements() {
                    if kills(ring.mul(ring.mul(a, b), c))
                        && !kills(ring.mul(a, b))
                        && !kills(ring.mul(a, c))
                        && !kills(ring.mul(b, c))
                    {
                        return false;
                    }
                }
            }
        }
    }
    true
}

// (4) abL not in N => (N :_R abL) equals (N :_R aL) or (N :_R bL).
fn main2_4(n: &Submodule, subs: &SubTable) -> bool {
    let m = n.module();
    let ring = m.ring();
    for l in &subs.elems {
        for a in ring.elements() {
            for b in ring.elements() {
                let ab = ring.mul(a, b);
                if l.iter().all(|&y| n.contains(m.act(ab, y))) {
                    continue;
                }
                let lhs = n.colon_set(l.iter().map(|&y| m.act(ab, y)));
                if lhs != n.colon_set(l.iter().map(|&y| m.act(a, y)))
                    && lhs != n.colon_set(l.iter().map(|&y| m.act(b, y)))
                {
                    return false;
                }
            }
        }
    }
    true
}

// (5) abIL in N => abL in N or aIL in N or bIL in N.
fn main2_5(n: &Submodule, subs: &SubTable, t: &IdealTable) -> bool {
    let m = n.module();
    let ring = m.ring();
    for l in &subs.elems {
        for a in ring.elements() {
            for b in ring.elements() {
                let ab = ring.mul(a, b);
                let ab_l = l.iter().all(|&y| n.contains(m.act(ab, y)));
                for i in &t.elems {
                    let s_il = |s: Elem| {
                        i.iter().all(|&r| l.iter().all(|&y| n.contains(m.act(ring.mul(s, r), y))))
                    };
                    if s_il(ab) && !ab_l && !s_il(a) && !s_il(b) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

// (6) aIL not in N => (N :_R aIL) equals (N :_R aL) or (N :_R IL).
fn main2_6(n: &Submodule, subs: &SubTable, t: &IdealTable) -> bool {
    let m = n.module();
    let ring = m.ring();
    for l in &subs.elems {
        for a in ring.elements() {
            for i in &t.elems {
                let ail: Vec<Elem> = i
                    .iter()
                    .flat_map(|&r| l.iter().map(move |&y| (r, y)))
                    .map(|(r, y)| m.act(ring.mul(a, r), y))
                    .collect();
                if ail.iter().all(|&z| n.contains(z)) {
                    continue;
                }
                let lhs = n.colon_set(ail.iter().copied());
                let al = n.colon_set(l.iter().map(|&y| m.act(a, y)));
                let il: Vec<Elem> =
                    i.iter().flat_map(|&r| l.iter().map(move |&y| m.act(r, y))).collect();
                if lhs != al && lhs != n.colon_set(il.iter().copied()) {
                    return false;
                }
            }
        }
    }
    true
}

// (7) aIJL in N => aIL in N or aJL in N or IJL in N.
fn main2_7(n: &Submodule, subs: &SubTable, t: &IdealTable) -> bool {
    let m = n.module();
    let ring = m.ring();
    for l in &subs.elems {
        for a in ring.elements() {
            let in_n = |s: Elem, id: usize| {
                t.elems[id]
                    .iter()
                    .all(|&r| l.iter().all(|&y| n.contains(m.act(ring.mul(s, r), y))))
            };
            for i in 0..t.len() {
                for j in 0..t.len() {
                    let ij = t.product[i][j];
                    if in_n(a, ij) && !in_n(a, i) && !in_n(a, j) && !in_n(ring.one(), ij) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

// (8) IJL not in N => (N :_R IJL) equals (N :_R IL) or (N :_R JL).
fn main2_8(n: &Submodule, subs: &SubTable, t: &IdealTable) -> bool {
    let m = n.module();
    for l in &subs.elems {
        let colon_of = |id: usize| {
            let xs: Vec<Elem> =
                t.elems[id].iter().flat_map(|&r| l.iter().map(move |&y| m.act(r, y))).collect();
            let inside = xs.iter().all(|&z| n.contains(z));
            (inside, n.colon_set(xs.iter().copied()))
        };
        let cols: Vec<(bool, FixedBitSet)> = (0..t.len()).map(colon_of).collect();
        for i in 0..t.len() {
            for j in 0..t.len() {
                let (inside, lhs) = &cols[t.product[i][j]];
                if *inside {
                    continue;
                }
                if *lhs != cols[i].1 && *lhs != cols[j].1 {
                    return false;
                }
            }
        }
    }
    true
}

// (9) IJKL in N => IJL in N or IKL in N or JKL in N.
fn main2_9(n: &Submodule, subs: &SubTable, t: &IdealTable) -> bool {
    let m = n.module();
    for l in &subs.elems {
        let killed: Vec<bool> = t
            .elems
            .iter()
            .map(|id| id.iter().all(|&r| l.iter().all(|&y| n.contains(m.act(r, y)))))
            .collect();
        for i in 0..t.len() {
            for j in 0..t.len() {
                for k in 0..t.len() {
                    let ij = t.product[i][j];
                    if killed[t.product[ij][k]]
                        && !killed[ij]
                        && !killed[t.product[i][k]]
                        && !killed[t.product[j][k]]
                    {
                        return false;
                    }
                }
            }
        }
    }
    true
}

// (10) (N :_R L) is 2-absorbing for every L not inside N.
fn main2_10(n: &Submodule, subs: &SubTable) -> Result<bool> {
    for l in &subs.elems {
        if l.iter().all(|&y| n.contains(y)) {
            continue;
        }
        if !n.colon_ideal(l)?.is_n_absorbing(2, AbsorbingMode::Elementwise)? {
            return Ok(false);
        }
    }
    Ok(true)
}
