//! Bounded relator rewriting.
//!
//! Every cyclic rotation of every relator `R = s t` (and of `R^-1`) gives a
//! rule `s -> t^-1` whenever `|s| >= |t|`. A breadth-first search applies
//! rules at every position, never lengthening the word, and returns the
//! shortest word met (ties broken by letter order). The search is sound and
//! deterministic but not complete: a `false` from [`Rewriter::equal`] means
//! "not shown equal", nothing more.

use std::collections::{HashMap, HashSet, VecDeque};

use super::{Letter, Presentation, Word};

/// `lhs -> rhs` rules grouped by the first letter of `lhs`.
type Rules = HashMap<Letter, Vec<(Vec<Letter>, Vec<Letter>)>>;

#[derive(Debug, Clone)]
pub struct Rewriter {
    /// Rules keyed by their first left-hand letter.
    rules: Rules,
}

impl Rewriter {
    pub fn new(p: &Presentation) -> Self {
        let mut set: Vec<(Vec<Letter>, Vec<Letter>)> = Vec::new();
        for r in p.relators() {
            let r = r.cyclic_reduce();
            if r.is_empty() {
                continue;
            }
            for base in [r.clone(), r.inverse()] {
                let l = base.letters();
                let n = l.len();
                for rot in 0..n {
                    let cyc: Vec<Letter> = l[rot..].iter().chain(&l[..rot]).copied().collect();
                    for k in 1..=n {
                        if 2 * k < n {
                            continue;
                        }
                        let lhs = cyc[..k].to_vec();
                        let rhs = Word::from_letters(cyc[k..].to_vec())
                            .inverse()
                            .letters()
                            .to_vec();
                        set.push((lhs, rhs));
                    }
                }
            }
        }
        set.sort();
        set.dedup();
        let mut rules: Rules = HashMap::new();
        for (l, r) in set {
            rules.entry(l[0]).or_default().push((l, r));
        }
        Rewriter { rules }
    }

    /// Shortest word found within `budget` expanded states.
    pub fn rewrite(&self, w: &Word, budget: usize) -> Word {
        let start = w.free_reduce();
        let mut best = start.clone();
        let mut seen: HashSet<Word> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(start.clone());
        queue.push_back(start);
        let mut expanded = 0;
        while let Some(cur) = queue.pop_front() {
            if best.is_empty() || expanded >= budget {
                break;
            }
            expanded += 1;
            let l = cur.letters();
            for i in 0..l.len() {
                let Some(rules) = self.rules.get(&l[i]) else {
                    continue;
                };
                for (lhs, rhs) in rules {
                    if i + lhs.len() > l.len() || l[i..i + lhs.len()] != lhs[..] {
                        continue;
                    }
                    let mut v = l[..i].to_vec();
                    v.extend_from_slice(rhs);
                    v.extend_from_slice(&l[i + lhs.len()..]);
                    let next = Word::from_letters(v).free_reduce();
                    if (next.len(), &next) < (best.len(), &best) {
                        best = next.clone();
                    }
                    if seen.insert(next.clone()) {
                        queue.push_back(next);
                    }
                }
            }
        }
        best
    }

    /// True when `w1 w2^-1` rewrites to the identity within `budget`.
    pub fn equal(&self, w1: &Word, w2: &Word, budget: usize) -> bool {
        self.rewrite(&w1.mul(&w2.inverse()), budget).is_empty()
    }
}

/// One-shot form of [`Rewriter::rewrite`].
pub fn rewrite_with_relators(p: &Presentation, w: &Word, budget: usize) -> Word {
    Rewriter::new(p).rewrite(w, budget)
}
