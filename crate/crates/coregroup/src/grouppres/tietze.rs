//! Tietze simplification by generator elimination.
//!
//! Repeatedly picks a relator in which some generator occurs exactly once,
//! solves for that generator, substitutes it everywhere, and drops the
//! relator. Shorter relators go first; among generators, the highest index
//! is eliminated so early names survive. Trivial and duplicate relators are
//! removed along the way.

use std::collections::BTreeSet;

use super::{GeneratorMap, Presentation, PresentationKind, Word};

/// Total relator length beyond which elimination stops.
const LENGTH_CAP: usize = 200_000;

#[derive(Debug, Clone)]
pub struct TietzeResult {
    pub presentation: Presentation,
    /// Old generator -> word in the new generators.
    pub forward: GeneratorMap,
    /// New generator -> word in the old generators.
    pub backward: GeneratorMap,
}

/// Canonical representative of a relator up to rotation and inversion.
fn cyclic_key(w: &Word) -> Word {
    let mut best: Option<Word> = None;
    for base in [w.clone(), w.inverse()] {
        let l = base.letters();
        for r in 0..l.len().max(1) {
            let cand = Word::from_letters(l[r..].iter().chain(&l[..r]).copied().collect());
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        }
    }
    best.unwrap_or_default()
}

fn tidy(relators: Vec<Word>) -> Vec<Word> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for r in relators {
        let r = r.cyclic_reduce();
        if r.is_empty() {
            continue;
        }
        if seen.insert(cyclic_key(&r)) {
            out.push(r);
        }
    }
    out
}

pub fn tietze_simplify(p: &Presentation) -> TietzeResult {
    let n = p.ngens();
    let mut alive: Vec<bool> = vec![true; n];
    // images of the old generators, in old indices
    let mut forward: Vec<Word> = (0..n).map(Word::gen).collect();
    let mut relators = tidy(p.relators().to_vec());

    loop {
        let mut choice: Option<(usize, usize, usize)> = None; // (len, relator, gen)
        for (ri, r) in relators.iter().enumerate() {
            let mut counts = std::collections::BTreeMap::<usize, usize>::new();
            for l in r.letters() {
                *counts.entry(l.gen).or_default() += 1;
            }
            if let Some((&g, _)) = counts.iter().rev().find(|(_, &c)| c == 1) {
                let key = (r.len(), ri, g);
                if choice.is_none_or(|c| (key.0, key.1) < (c.0, c.1)) {
                    choice = Some(key);
                }
            }
        }
        let Some((_, ri, g)) = choice else { break };
        let r = relators.remove(ri);
        let l = r.letters();
        let pos = l.iter().position(|x| x.gen == g).unwrap();
        let a = Word::from_letters(l[..pos].to_vec());
        let b = Word::from_letters(l[pos + 1..].to_vec());
        // a g^e b = 1
        let value = if l[pos].exp > 0 {
            a.inverse().mul(&b.inverse())
        } else {
            b.mul(&a)
        };
        let mut map = GeneratorMap::identity(n);
        map.insert(g, value);
        let next: Vec<Word> = relators
            .iter()
            .map(|w| w.apply_map(&map).expect("total map"))
            .collect();
        if next.iter().map(Word::len).sum::<usize>() > LENGTH_CAP {
            relators.insert(ri, r);
            break;
        }
        relators = tidy(next);
        for f in forward.iter_mut() {
            *f = f.apply_map(&map).expect("total map");
        }
        alive[g] = false;
    }

    let survivors: Vec<usize> = (0..n).filter(|&g| alive[g]).collect();
    let mut renum = GeneratorMap::new();
    let mut backward = GeneratorMap::new();
    for (new, &old) in survivors.iter().enumerate() {
        renum.insert(old, Word::gen(new));
        backward.insert(new, Word::gen(old));
    }
    for g in 0..n {
        if !alive[g] {
            renum.insert(g, Word::identity());
        }
    }
    let mut fwd = GeneratorMap::new();
    for (g, w) in forward.iter().enumerate() {
        fwd.insert(g, w.apply_map(&renum).expect("total map"));
    }
    let rels = relators
        .iter()
        .map(|r| r.apply_map(&renum).expect("total map"))
        .collect();
    let names = survivors
        .iter()
        .map(|&g| p.generators()[g].clone())
        .collect();
    let presentation =
        Presentation::new(names, rels, PresentationKind::Derived).expect("renumbered");
    TietzeResult {
        presentation,
        forward: fwd,
        backward,
    }
}
