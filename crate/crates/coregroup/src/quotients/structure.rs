//! Recognizing small finite groups from a regular coset table.
//!
//! Covers what the examples need: abelian groups (read off the
//! abelianization, which is the group itself) and split extensions of a
//! normal cyclic subgroup by a cyclic group.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use num_integer::Integer;

use crate::abelian::abelianization;
use crate::error::{Error, Result};

use super::coset::CosetTable;
use super::perm::Perm;

/// `C_m ⋊ C_q`, a generator of `C_q` acting by `c -> c^r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitCyclic {
    pub normal_order: u64,
    pub complement_order: u64,
    pub action: u64,
}

impl SplitCyclic {
    pub fn is_inversion(&self) -> bool {
        self.normal_order > 2 && (self.action + 1).is_multiple_of(self.normal_order)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureReport {
    pub order: u64,
    pub abelian: bool,
    /// Element order -> number of elements of that order.
    pub order_counts: BTreeMap<u64, u64>,
    /// Invariant factors, when abelian.
    pub invariant_factors: Option<Vec<u64>>,
    /// Largest normal cyclic subgroup with a cyclic complement, when
    /// non-abelian.
    pub split: Option<SplitCyclic>,
}

impl fmt::Display for StructureReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(inv) = &self.invariant_factors {
            if inv.is_empty() {
                return write!(f, "trivial");
            }
            let parts: Vec<String> = inv.iter().map(|d| format!("Z/{d}")).collect();
            return write!(f, "{}", parts.join(" + "));
        }
        match &self.split {
            Some(s) if s.is_inversion() => {
                write!(
                    f,
                    "Z/{} ⋉ Z/{} by inversion",
                    s.complement_order, s.normal_order
                )
            }
            Some(s) => write!(
                f,
                "Z/{} ⋉ Z/{} by c -> c^{}",
                s.complement_order, s.normal_order, s.action
            ),
            None => write!(f, "non-abelian of order {}", self.order),
        }
    }
}

/// The elements of the group, when the table is the regular action: the
/// element sending coset `0` to `c` sits at index `c`.
pub fn regular_elements(t: &CosetTable) -> Result<Vec<Perm>> {
    let (reps, _) = t.transversal();
    let elems: Vec<Perm> = reps.iter().map(|w| t.word_perm(w)).collect();
    let set: HashSet<&Perm> = elems.iter().collect();
    for e in &elems {
        for g in 0..t.ngens() {
            if !set.contains(&e.then(&t.generator_perm(g))) {
                return Err(Error::Precondition(
                    "the coset action is not regular".into(),
                ));
            }
        }
    }
    Ok(elems)
}

fn cyclic(c: &Perm) -> Vec<Perm> {
    let mut out = vec![Perm::identity(c.degree())];
    let mut x = c.clone();
    while !x.is_identity() {
        out.push(x.clone());
        x = x.then(c);
    }
    out
}

/// Structure of the group whose regular action `t` is.
pub fn identify_structure(t: &CosetTable) -> Result<StructureReport> {
    let elems = regular_elements(t)?;
    let order = elems.len() as u64;
    let mut order_counts = BTreeMap::new();
    for e in &elems {
        *order_counts.entry(e.order()).or_insert(0u64) += 1;
    }
    let gens: Vec<Perm> = (0..t.ngens()).map(|g| t.generator_perm(g)).collect();
    let abelian = gens
        .iter()
        .all(|a| gens.iter().all(|b| a.then(b) == b.then(a)));
    if abelian {
        let s = abelianization(&t.presentation)?;
        if s.free_rank != 0 || s.torsion.iter().product::<u64>() != order {
            return Err(Error::Invariant(
                "abelianization disagrees with the coset count".into(),
            ));
        }
        return Ok(StructureReport {
            order,
            abelian,
            order_counts,
            invariant_factors: Some(s.torsion.clone()),
            split: None,
        });
    }
    // normal cyclic subgroups, largest first
    let mut seen = HashSet::new();
    let mut cands: Vec<(u64, Perm)> = Vec::new();
    for c in &elems {
        let sub = cyclic(c);
        let key: std::collections::BTreeSet<Perm> = sub.iter().cloned().collect();
        if !seen.insert(key) {
            continue;
        }
        let set: HashSet<&Perm> = sub.iter().collect();
        let normal = gens
            .iter()
            .all(|g| set.contains(&g.inverse().then(c).then(g)));
        if normal {
            cands.push((sub.len() as u64, c.clone()));
        }
    }
    cands.sort_by(|a, b| b.0.cmp(&a.0).then_with(|| a.1.cmp(&b.1)));
    let mut split = None;
    'outer: for (m, c) in &cands {
        let (m, q) = (*m, order / *m);
        if m == 1 || m * q != order {
            continue;
        }
        let sub = cyclic(c);
        let index: HashMap<&Perm, u64> = sub.iter().zip(0u64..).collect();
        for b in &elems {
            if b.order() != q {
                continue;
            }
            let meets_trivially = cyclic(b).iter().skip(1).all(|x| !index.contains_key(x));
            if meets_trivially {
                let conj = b.inverse().then(c).then(b);
                let r = *index
                    .get(&conj)
                    .ok_or_else(|| Error::Invariant("normality check failed".into()))?;
                if r.gcd(&m) != 1 {
                    return Err(Error::Invariant(
                        "conjugation is not an automorphism".into(),
                    ));
                }
                split = Some(SplitCyclic {
                    normal_order: m,
                    complement_order: q,
                    action: r,
                });
                break 'outer;
            }
        }
    }
    Ok(StructureReport {
        order,
        abelian,
        order_counts,
        invariant_factors: None,
        split,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grouppres::{Presentation, PresentationKind};
    use crate::quotients::todd_coxeter;

    #[test]
    fn dihedral_of_order_ten() {
        let p = Presentation::from_text(
            &["r", "s"],
            &["r^5", "s^2", "s r s^-1 r"],
            PresentationKind::Derived,
        )
        .unwrap();
        let t = todd_coxeter(&p, &[], 1000).unwrap();
        let s = identify_structure(&t).unwrap();
        assert_eq!(s.order, 10);
        let sp = s.split.unwrap();
        assert_eq!((sp.normal_order, sp.complement_order), (5, 2));
        assert!(sp.is_inversion());
    }

    #[test]
    fn klein_four() {
        let p = Presentation::from_text(
            &["a", "b"],
            &["a^2", "b^2", "a b a^-1 b^-1"],
            PresentationKind::Derived,
        )
        .unwrap();
        let t = todd_coxeter(&p, &[], 100).unwrap();
        assert_eq!(identify_structure(&t).unwrap().to_string(), "Z/2 + Z/2");
    }
}
