//! Recognizing free products of cyclic groups.
//!
//! Generators are grouped into clusters that share relators. In each
//! cluster one generator `r` is picked as a root and every other generator
//! `g` is replaced by `t_g = g r^-1`. On core presentations this turns the
//! crossing relators `(a b^-1)^2`-style into powers of single letters. The
//! remaining work is Tietze elimination plus reduction of exponents modulo
//! the orders already found. Recognition succeeds only when every relator
//! ends up a power of one generator; the result is then a presentation
//! `<t_1, …; t_i^{k_i}>` reached by Tietze moves alone, which is a free
//! product of cyclic groups with a syllable normal form.

use std::collections::BTreeMap;

use num_integer::Integer;

use super::{GeneratorMap, Letter, Presentation, Word};
use crate::error::{Error, Result};

/// A factor: its generator as a word in the original presentation and its
/// order (`None` for infinite).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factor {
    pub word: Word,
    pub order: Option<u64>,
}

#[derive(Debug, Clone)]
pub struct FreeProductStructure {
    pub factors: Vec<Factor>,
    /// Original generator -> word in factor indices.
    forward: GeneratorMap,
}

/// Normal form: syllables `(factor, exponent)`, adjacent factors distinct,
/// finite exponents in `1..order`.
pub type NormalForm = Vec<(usize, i64)>;

impl FreeProductStructure {
    pub fn normal_form(&self, w: &Word) -> Result<NormalForm> {
        let img = w.apply_map(&self.forward)?;
        let mut out: NormalForm = Vec::new();
        for l in img.letters() {
            push_syllable(&mut out, l.gen, l.exp as i64, |f| self.factors[f].order);
        }
        Ok(out)
    }

    pub fn equal(&self, w1: &Word, w2: &Word) -> Result<bool> {
        Ok(self.normal_form(w1)? == self.normal_form(w2)?)
    }

    pub fn is_trivial(&self, w: &Word) -> Result<bool> {
        Ok(self.normal_form(w)?.is_empty())
    }

    /// `Z * Z2 * …` in factor order.
    pub fn describe(&self) -> String {
        if self.factors.is_empty() {
            return "1".into();
        }
        self.factors
            .iter()
            .map(|f| match f.order {
                None => "Z".to_string(),
                Some(k) => format!("Z{k}"),
            })
            .collect::<Vec<_>>()
            .join(" * ")
    }

    /// Renders a normal form with factor words in parentheses.
    pub fn show_normal_form(&self, nf: &NormalForm, names: &[String]) -> String {
        if nf.is_empty() {
            return "1".into();
        }
        nf.iter()
            .map(|&(f, e)| {
                let w = self.factors[f].word.display(names);
                let base = if self.factors[f].word.len() == 1 {
                    w
                } else {
                    format!("({w})")
                };
                if e == 1 {
                    base
                } else {
                    format!("{base}^{e}")
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

fn canon_exp(e: i64, order: Option<u64>) -> i64 {
    match order {
        Some(k) => e.rem_euclid(k as i64),
        None => e,
    }
}

fn push_syllable(out: &mut NormalForm, g: usize, e: i64, order: impl Fn(usize) -> Option<u64>) {
    let e = canon_exp(e, order(g));
    if e == 0 {
        return;
    }
    if let Some(last) = out.last_mut() {
        if last.0 == g {
            let merged = canon_exp(last.1 + e, order(g));
            if merged == 0 {
                out.pop();
            } else {
                last.1 = merged;
            }
            return;
        }
    }
    out.push((g, e));
}

/// Cyclically merges syllables and reduces exponents into `(-k/2, k/2]`.
fn normalize_cyclic(w: &Word, orders: &BTreeMap<usize, u64>) -> Word {
    let sym = |g: usize, e: i64| match orders.get(&g) {
        Some(&k) => {
            let k = k as i64;
            let r = e.rem_euclid(k);
            if 2 * r > k {
                r - k
            } else {
                r
            }
        }
        None => e,
    };
    let push = |syl: &mut Vec<(usize, i64)>, g: usize, e: i64| {
        match syl.last_mut() {
            Some(last) if last.0 == g => last.1 = sym(g, last.1 + e),
            _ => syl.push((g, sym(g, e))),
        }
        if syl.last().is_some_and(|s| s.1 == 0) {
            syl.pop();
        }
    };
    let mut syl: Vec<(usize, i64)> = Vec::new();
    for l in w.letters() {
        push(&mut syl, l.gen, l.exp as i64);
    }
    // fold the last syllable into the first while they share a generator
    while syl.len() >= 2 && syl[0].0 == syl[syl.len() - 1].0 {
        let (_, e) = syl.pop().unwrap();
        let first = syl.remove(0);
        let mut rebuilt = Vec::with_capacity(syl.len() + 1);
        push(&mut rebuilt, first.0, first.1 + e);
        for (g, e) in syl {
            push(&mut rebuilt, g, e);
        }
        syl = rebuilt;
    }
    let mut letters = Vec::new();
    for (g, e) in syl {
        let s = if e > 0 { 1 } else { -1 };
        letters.extend(std::iter::repeat_n(
            Letter::new(g, s),
            e.unsigned_abs() as usize,
        ));
    }
    Word::from_letters(letters)
}

/// Outcome of reducing one cluster: orders of surviving generators (absent
/// means infinite) and images of eliminated generators.
struct Reduced {
    orders: BTreeMap<usize, u64>,
    survivors: Vec<usize>,
    elim: GeneratorMap,
}

fn reduce_cluster(mut rels: Vec<Word>, gens: &[usize], budget: usize) -> Option<Reduced> {
    let mut alive: Vec<usize> = gens.to_vec();
    let mut orders: BTreeMap<usize, u64> = BTreeMap::new();
    let mut elim = GeneratorMap::new();
    for _ in 0..budget.max(1) {
        rels = rels
            .iter()
            .map(|r| normalize_cyclic(r, &orders))
            .filter(|r| !r.is_empty())
            .collect();
        rels.sort();
        rels.dedup();
        // single-generator powers become orders
        let mut changed = false;
        let mut rest = Vec::new();
        for r in rels.drain(..) {
            let g = r.letters()[0].gen;
            if r.letters().iter().all(|l| l.gen == g) {
                let k = r.exponent_sum().unsigned_abs();
                let old = orders.get(&g).copied().unwrap_or(0);
                let new = old.gcd(&k);
                if new != old {
                    orders.insert(g, new);
                    changed = true;
                }
            } else {
                rest.push(r);
            }
        }
        rels = rest;
        // generators of order 1 are trivial
        let trivial: Vec<usize> = orders
            .iter()
            .filter(|(_, &k)| k == 1)
            .map(|(&g, _)| g)
            .collect();
        if !trivial.is_empty() {
            let mut map = GeneratorMap::from_fn(gens.iter().max().map_or(0, |m| m + 1), Word::gen);
            for &g in &trivial {
                map.insert(g, Word::identity());
                orders.remove(&g);
                alive.retain(|&a| a != g);
            }
            rels = rels
                .iter()
                .map(|r| r.apply_map(&map).expect("total"))
                .collect();
            elim = substitute(&elim, &map);
            for &g in &trivial {
                elim.insert(g, Word::identity());
            }
            continue;
        }
        if rels.is_empty() {
            return Some(Reduced {
                orders,
                survivors: alive,
                elim,
            });
        }
        if changed {
            continue;
        }
        // Tietze: a generator occurring once in some relator
        let mut choice: Option<(usize, usize, usize)> = None;
        for (ri, r) in rels.iter().enumerate() {
            let mut counts = BTreeMap::<usize, usize>::new();
            for l in r.letters() {
                *counts.entry(l.gen).or_default() += 1;
            }
            if let Some((&g, _)) = counts.iter().rev().find(|(_, &c)| c == 1) {
                if choice.is_none_or(|c| r.len() < c.0) {
                    choice = Some((r.len(), ri, g));
                }
            }
        }
        let (_, ri, g) = choice?;
        let r = rels.remove(ri);
        let l = r.letters();
        let pos = l.iter().position(|x| x.gen == g).unwrap();
        let a = Word::from_letters(l[..pos].to_vec());
        let b = Word::from_letters(l[pos + 1..].to_vec());
        let value = if l[pos].exp > 0 {
            a.inverse().mul(&b.inverse())
        } else {
            b.mul(&a)
        };
        let mut map = GeneratorMap::from_fn(gens.iter().max().map_or(0, |m| m + 1), Word::gen);
        map.insert(g, value.clone());
        rels = rels
            .iter()
            .map(|r| r.apply_map(&map).expect("total"))
            .collect();
        elim = substitute(&elim, &map);
        elim.insert(g, value);
        orders.remove(&g);
        alive.retain(|&a| a != g);
    }
    None
}

fn substitute(elim: &GeneratorMap, map: &GeneratorMap) -> GeneratorMap {
    let mut out = GeneratorMap::new();
    for (&g, w) in elim.iter() {
        out.insert(g, w.apply_map(map).expect("total"));
    }
    out
}

fn clusters(p: &Presentation) -> Vec<Vec<usize>> {
    let n = p.ngens();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let next = p[y];
            p[y] = r;
            y = next;
        }
        r
    }
    for r in p.relators() {
        let gs: Vec<usize> = r.letters().iter().map(|l| l.gen).collect();
        for w in gs.windows(2) {
            let (a, b) = (find(&mut parent, w[0]), find(&mut parent, w[1]));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for g in 0..n {
        let r = find(&mut parent, g);
        groups.entry(r).or_default().push(g);
    }
    groups.into_values().collect()
}

/// Tries every root in each cluster, generator order.
pub fn recognize_free_product_of_cyclics(
    p: &Presentation,
    budget: usize,
) -> Result<FreeProductStructure> {
    recognize_with_roots(p, &[], budget)
}

/// Like [`recognize_free_product_of_cyclics`], trying the generators in
/// `preferred` first as cluster roots.
pub fn recognize_with_roots(
    p: &Presentation,
    preferred: &[usize],
    budget: usize,
) -> Result<FreeProductStructure> {
    let n = p.ngens();
    let mut factors = Vec::new();
    let mut forward = GeneratorMap::new();
    let mut fwd_old: BTreeMap<usize, Word> = BTreeMap::new(); // old gen -> word in old-index t's
    let mut factor_of: BTreeMap<usize, usize> = BTreeMap::new();
    for cluster in clusters(p) {
        let rels: Vec<Word> = p
            .relators()
            .iter()
            .filter(|r| {
                r.letters()
                    .first()
                    .is_some_and(|l| cluster.contains(&l.gen))
            })
            .cloned()
            .collect();
        let mut roots: Vec<usize> = preferred
            .iter()
            .copied()
            .filter(|g| cluster.contains(g))
            .collect();
        roots.extend(cluster.iter().copied().filter(|g| !preferred.contains(g)));
        let mut done = false;
        for &root in &roots {
            // g = t_g r
            let mut sub = GeneratorMap::from_fn(n, Word::gen);
            for &g in &cluster {
                if g != root {
                    sub.insert(
                        g,
                        Word::from_letters(vec![Letter::new(g, 1), Letter::new(root, 1)]),
                    );
                }
            }
            let mapped: Vec<Word> = rels
                .iter()
                .map(|r| r.apply_map(&sub).expect("total"))
                .collect();
            let Some(red) = reduce_cluster(mapped, &cluster, budget) else {
                continue;
            };
            let mut full = GeneratorMap::from_fn(n, Word::gen);
            for (&g, w) in red.elim.iter() {
                full.insert(g, w.clone());
            }
            for &g in &cluster {
                fwd_old.insert(g, sub.get(g).unwrap().apply_map(&full).expect("total"));
            }
            for &t in &red.survivors {
                let word = if t == root {
                    Word::gen(root)
                } else {
                    Word::from_letters(vec![Letter::new(t, 1), Letter::new(root, -1)])
                };
                let order = red.orders.get(&t).copied().filter(|&k| k != 0);
                factor_of.insert(t, factors.len());
                factors.push(Factor { word, order });
            }
            done = true;
            break;
        }
        if !done {
            return Err(Error::BudgetExceeded(format!(
                "no free-product-of-cyclics splitting found for cluster {:?}",
                cluster
                    .iter()
                    .map(|&g| p.generators()[g].as_str())
                    .collect::<Vec<_>>()
            )));
        }
    }
    let renum = GeneratorMap::from_fn(n, |g| {
        factor_of
            .get(&g)
            .map_or_else(Word::identity, |&f| Word::gen(f))
    });
    for (g, w) in fwd_old {
        forward.insert(g, w.apply_map(&renum)?);
    }
    Ok(FreeProductStructure { factors, forward })
}
