use std::collections::HashMap;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::module::{Module, Submodule};
use crate::ring::{enumerate_ideals, Elem};

/// Largest module the m-closed quantifier loop accepts.
pub const MCLOSED_MODULE_BOUND: usize = 64;

/// Ideals `I, J, Q` and submodules `K, L` breaking the m-closed condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MClosedWitness {
    pub ideals: [usize; 3],
    pub k: usize,
    pub l: usize,
}

fn element_set(m: &Module, s: &[Elem]) -> Result<FixedBitSet> {
    let mut set = m.empty_set();
    for &x in s {
        if x >= m.cardinality() {
            return Err(Error::InvalidInput(format!("{x} is not an element of {m}")));
        }
        set.insert(x);
    }
    if set.contains(m.zero()) {
        return Err(Error::InvalidInput("S must not contain 0".into()));
    }
    Ok(set)
}

/// Whether `S` meets `K + IJQ L` whenever it meets `K + IJ L`, `K + IQ L`
/// and `K + JQ L`. Returns the first violation, indices referring to
/// `enumerate_ideals` and `enumerate_submodules`. An empty `S` never meets
/// anything, so it passes.
pub fn c2a_m_closed_witness(m: &Module, s: &[Elem]) -> Result<Option<MClosedWitness>> {
    let set = element_set(m, s)?;
    if m.cardinality() > MCLOSED_MODULE_BOUND {
        return Err(Error::SizeLimit {
            what: "module for the m-closed check",
            actual: m.cardinality(),
            limit: MCLOSED_MODULE_BOUND,
        });
    }
    let subs = m.enumerate_submodules()?;
    let ideals = enumerate_ideals(m.ring());
    let index: HashMap<&FixedBitSet, usize> =
        subs.iter().enumerate().map(|(i, x)| (x.set(), i)).collect();
    let pos = |x: &Submodule| index[x.set()];
    let ideal_pos = |x| ideals.iter().position(|y| *y == x).expect("ideal list is closed");

    let prod: Vec<Vec<usize>> = ideals
        .iter()
        .map(|i| ideals.iter().map(|j| ideal_pos(i.product(j).expect("same ring"))).collect())
        .collect();
    // scaled[x][l] = index of the submodule X L.
    let scaled: Vec<Vec<usize>> =
        ideals.iter().map(|x| subs.iter().map(|l| pos(&l.scaled(x))).collect()).collect();
    // meets[k][a] = (K + A) meets S.
    let meets: Vec<Vec<bool>> = subs
        .iter()
        .map(|k| {
            subs.iter()
                .map(|a| !k.sum(a).expect("same module").set().is_disjoint(&set))
                .collect()
        })
        .collect();

    let n = ideals.len();
    for i in 0..n {
        for j in i..n {
            for q in j..n {
                let ij = prod[i][j];
                let (iq, jq, ijq) = (prod[i][q], prod[j][q], prod[ij][q]);
                for l in 0..subs.len() {
                    let (a, b, c, d) = (scaled[ij][l], scaled[iq][l], scaled[jq][l], scaled[ijq][l]);
                    for (k, row) in meets.iter().enumerate() {
                        if row[a] && row[b] && row[c] && !row[d] {
                            return Ok(Some(MClosedWitness { ideals: [i, j, q], k, l }));
                        }
                    }
                }
            }
        }
    }
    Ok(None)
}

pub fn is_c2a_m_closed(m: &Module, s: &[Elem]) -> Result<bool> {
    Ok(c2a_m_closed_witness(m, s)?.is_none())
}

/// Inclusion-maximal submodules disjoint from a nonempty m-closed `S`.
pub fn maximal_disjoint_submodules(m: &Module, s: &[Elem]) -> Result<Vec<Submodule>> {
    if s.is_empty() {
        return Err(Error::Precondition("S is empty, so the whole module is disjoint from it".into()));
    }
    if !is_c2a_m_closed(m, s)? {
        return Err(Error::Precondition("S is not classical 2-absorbing m-closed".into()));
    }
    let set = element_set(m, s)?;
    let disjoint: Vec<Submodule> = m
        .enumerate_submodules()?
        .into_iter()
        .filter(|x| x.set().is_disjoint(&set))
        .collect();
    let maximal: Vec<Submodule> = disjoint
        .iter()
        .filter(|x| !disjoint.iter().any(|y| y != *x && x.is_subset(y)))
        .cloned()
        .collect();
    Ok(maximal)
}

/// `M \ N` as an element list.
pub fn complement(n: &Submodule) -> Vec<Elem> {
    n.module().elements().filter(|&x| !n.contains(x)).collect()
}
