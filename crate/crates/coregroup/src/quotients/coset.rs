//! Todd–Coxeter coset enumeration (HLT with coincidence collapse) and
//! Reidemeister–Schreier presentations of the enumerated subgroup.
//!
//! Columns: `2g` is generator `g`, `2g+1` its inverse.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::grouppres::{Letter, Presentation, PresentationKind, Word};

use super::perm::Perm;

fn col(l: &Letter) -> usize {
    2 * l.gen + usize::from(l.exp < 0)
}

/// A complete coset table. Coset `0` is the subgroup itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetTable {
    pub presentation: Presentation,
    pub subgroup: Vec<Word>,
    table: Vec<Vec<usize>>,
}

impl CosetTable {
    /// The index of the subgroup.
    pub fn count(&self) -> usize {
        self.table.len()
    }

    pub fn ngens(&self) -> usize {
        self.presentation.ngens()
    }

    /// Coset reached from `c` by reading `w`.
    pub fn act(&self, c: usize, w: &Word) -> usize {
        w.letters().iter().fold(c, |c, l| self.table[c][col(l)])
    }

    /// The action of generator `g` on cosets.
    pub fn generator_perm(&self, g: usize) -> Perm {
        Perm::from_images(self.table.iter().map(|row| row[2 * g] as u32).collect())
            .expect("complete table")
    }

    /// The permutation action of a word.
    pub fn word_perm(&self, w: &Word) -> Perm {
        Perm::from_images((0..self.count()).map(|c| self.act(c, w) as u32).collect())
            .expect("complete table")
    }

    /// Shortlex-first representative words, found breadth first, together
    /// with the tree edge `(parent, column)` of each coset.
    pub fn transversal(&self) -> (Vec<Word>, Vec<Option<(usize, usize)>>) {
        let n = self.count();
        let mut reps: Vec<Option<Word>> = vec![None; n];
        let mut parent = vec![None; n];
        reps[0] = Some(Word::identity());
        let mut q = VecDeque::from([0usize]);
        while let Some(c) = q.pop_front() {
            for x in 0..2 * self.ngens() {
                let d = self.table[c][x];
                if reps[d].is_none() {
                    let l = Letter::new(x / 2, if x % 2 == 0 { 1 } else { -1 });
                    reps[d] = Some(
                        reps[c]
                            .as_ref()
                            .expect("visited")
                            .concat(&Word::from_letters(vec![l])),
                    );
                    parent[d] = Some((c, x));
                    q.push_back(d);
                }
            }
        }
        (
            reps.into_iter().map(|r| r.expect("connected")).collect(),
            parent,
        )
    }

    /// Every relator closes at every coset and every subgroup generator fixes
    /// coset `0`.
    pub fn verify(&self) -> bool {
        let n = self.count();
        let inverse_ok = self.table.iter().enumerate().all(|(c, row)| {
            row.iter()
                .enumerate()
                .all(|(x, &d)| d < n && self.table[d][x ^ 1] == c)
        });
        inverse_ok
            && (0..n).all(|c| {
                self.presentation
                    .relators()
                    .iter()
                    .all(|r| self.act(c, r) == c)
            })
            && self.subgroup.iter().all(|h| self.act(0, h) == 0)
    }
}

struct Enumerator {
    table: Vec<Vec<Option<usize>>>,
    parent: Vec<usize>,
    ncols: usize,
    ceiling: usize,
    queue: Vec<usize>,
}

impl Enumerator {
    fn live(&self, c: usize) -> bool {
        self.parent[c] == c
    }

    fn rep(&mut self, c: usize) -> usize {
        let mut r = c;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut x = c;
        while self.parent[x] != r {
            let next = self.parent[x];
            self.parent[x] = r;
            x = next;
        }
        r
    }

    fn define(&mut self, c: usize, x: usize) -> Result<()> {
        if self.table.len() >= self.ceiling {
            return Err(Error::BudgetExceeded(format!(
                "coset ceiling {} reached",
                self.ceiling
            )));
        }
        let d = self.table.len();
        self.table.push(vec![None; self.ncols]);
        self.parent.push(d);
        self.table[c][x] = Some(d);
        self.table[d][x ^ 1] = Some(c);
        Ok(())
    }

    fn merge(&mut self, k: usize, l: usize) {
        let (k, l) = (self.rep(k), self.rep(l));
        if k != l {
            let (lo, hi) = if k < l { (k, l) } else { (l, k) };
            self.parent[hi] = lo;
            self.queue.push(hi);
        }
    }

    fn coincidence(&mut self, a: usize, b: usize) {
        self.merge(a, b);
        let mut i = 0;
        while i < self.queue.len() {
            let e = self.queue[i];
            i += 1;
            for x in 0..self.ncols {
                if let Some(f) = self.table[e][x] {
                    if self.table[f][x ^ 1] == Some(e) {
                        self.table[f][x ^ 1] = None;
                    }
                    let (e1, f1) = (self.rep(e), self.rep(f));
                    if let Some(t) = self.table[e1][x] {
                        self.merge(f1, t);
                    } else if let Some(t) = self.table[f1][x ^ 1] {
                        self.merge(e1, t);
                    } else {
                        self.table[e1][x] = Some(f1);
                        self.table[f1][x ^ 1] = Some(e1);
                    }
                }
            }
        }
        self.queue.clear();
    }

    fn scan_and_fill(&mut self, c: usize, w: &[usize]) -> Result<()> {
        if w.is_empty() {
            return Ok(());
        }
        let (mut f, mut b) = (c, c);
        let (mut i, mut j) = (0usize, w.len() as isize - 1);
        loop {
            while (i as isize) <= j {
                match self.table[f][w[i]] {
                    Some(t) => {
                        f = t;
                        i += 1;
                    }
                    None => break,
                }
            }
            if (i as isize) > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j >= i as isize {
                match self.table[b][w[j as usize] ^ 1] {
                    Some(t) => {
                        b = t;
                        j -= 1;
                    }
                    None => break,
                }
            }
            if j < i as isize {
                self.coincidence(f, b);
                return Ok(());
            }
            if j == i as isize {
                self.table[f][w[i]] = Some(b);
                self.table[b][w[i] ^ 1] = Some(f);
                return Ok(());
            }
            self.define(f, w[i])?;
        }
    }
}

/// Enumerates the cosets of `<subgroup>` in the group of `p`, defining at
/// most `ceiling` cosets along the way.
pub fn todd_coxeter(p: &Presentation, subgroup: &[Word], ceiling: usize) -> Result<CosetTable> {
    let ncols = 2 * p.ngens();
    let to_cols = |w: &Word| -> Vec<usize> { w.free_reduce().letters().iter().map(col).collect() };
    let relators: Vec<Vec<usize>> = p.relators().iter().map(to_cols).collect();
    let mut e = Enumerator {
        table: vec![vec![None; ncols]],
        parent: vec![0],
        ncols,
        ceiling: ceiling.max(1),
        queue: Vec::new(),
    };
    for h in subgroup {
        e.scan_and_fill(0, &to_cols(h))?;
    }
    let mut c = 0;
    while c < e.table.len() {
        for r in &relators {
            if !e.live(c) {
                break;
            }
            e.scan_and_fill(c, r)?;
        }
        if e.live(c) {
            for x in 0..ncols {
                if e.table[c][x].is_none() {
                    e.define(c, x)?;
                }
            }
        }
        c += 1;
    }
    // compact: renumber live cosets in order
    let mut index = vec![usize::MAX; e.table.len()];
    let mut k = 0;
    for c in 0..e.table.len() {
        if e.live(c) {
            index[c] = k;
            k += 1;
        }
    }
    let mut table = Vec::with_capacity(k);
    for c in 0..e.table.len() {
        if e.live(c) {
            let row = (0..ncols)
                .map(|x| {
                    let t = e.table[c][x]
                        .ok_or_else(|| Error::Invariant("incomplete coset row".into()))?;
                    Ok(index[e.rep(t)])
                })
                .collect::<Result<Vec<_>>>()?;
            table.push(row);
        }
    }
    let t = CosetTable {
        presentation: p.clone(),
        subgroup: subgroup.to_vec(),
        table,
    };
    if !t.verify() {
        return Err(Error::Invariant("coset table fails its post-check".into()));
    }
    Ok(t)
}

/// Reidemeister–Schreier presentation of the subgroup, on the Schreier
/// generators `s_<coset>_<generator>` of non-tree edges.
#[derive(Debug, Clone)]
pub struct SubgroupPresentation {
    pub presentation: Presentation,
    /// Each Schreier generator as a word of the parent group.
    pub words: Vec<Word>,
}

pub fn reidemeister_schreier(t: &CosetTable) -> Result<SubgroupPresentation> {
    if !t.verify() {
        return Err(Error::Precondition("coset table is not closed".into()));
    }
    let (reps, parent) = t.transversal();
    let n = t.count();
    let g = t.ngens();
    let tree = |c: usize, x: usize| -> bool {
        let d = t.table[c][2 * x];
        parent[d] == Some((c, 2 * x)) || parent[c] == Some((d, 2 * x + 1))
    };
    let mut id = vec![vec![None; g]; n];
    let mut names = Vec::new();
    let mut words = Vec::new();
    for c in 0..n {
        for x in 0..g {
            if !tree(c, x) {
                id[c][x] = Some(names.len());
                names.push(format!("s_{}_{}", c + 1, t.presentation.generators()[x]));
                let d = t.table[c][2 * x];
                words.push(
                    reps[c]
                        .concat(&Word::gen(x))
                        .concat(&reps[d].inverse())
                        .free_reduce(),
                );
            }
        }
    }
    let mut relators = Vec::new();
    for c in 0..n {
        for r in t.presentation.relators() {
            let mut cur = c;
            let mut letters = Vec::new();
            for l in r.letters() {
                if l.exp > 0 {
                    if let Some(s) = id[cur][l.gen] {
                        letters.push(Letter::new(s, 1));
                    }
                    cur = t.table[cur][2 * l.gen];
                } else {
                    let prev = t.table[cur][2 * l.gen + 1];
                    if let Some(s) = id[prev][l.gen] {
                        letters.push(Letter::new(s, -1));
                    }
                    cur = prev;
                }
            }
            relators.push(Word::from_letters(letters).free_reduce());
        }
    }
    let relators: Vec<Word> = relators.into_iter().filter(|r| !r.is_empty()).collect();
    Ok(SubgroupPresentation {
        presentation: Presentation::new(names, relators, PresentationKind::Derived)?,
        words,
    })
}
