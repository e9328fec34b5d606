//! Homomorphisms into symmetric groups: checking, the η family for the
//! Borromean rings, backtracking search, and separation certificates.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::grouppres::{Presentation, Word};

use super::perm::{parse_perm, Perm};

/// Images of the generators of a presentation in `S_degree`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermAssignment {
    pub degree: usize,
    pub images: Vec<Perm>,
}

impl PermAssignment {
    pub fn new(degree: usize, images: Vec<Perm>) -> Result<Self> {
        if let Some(p) = images.iter().find(|p| p.degree() != degree) {
            return Err(Error::InvalidParameter(format!(
                "{p} does not have degree {degree}"
            )));
        }
        Ok(PermAssignment { degree, images })
    }

    pub fn trivial(p: &Presentation, degree: usize) -> Self {
        PermAssignment {
            degree,
            images: vec![Perm::identity(degree); p.ngens()],
        }
    }

    /// Image of a word, letters applied left to right.
    pub fn eval(&self, w: &Word) -> Result<Perm> {
        let mut out = Perm::identity(self.degree);
        for l in w.letters() {
            let g = self
                .images
                .get(l.gen)
                .ok_or_else(|| Error::UnknownGenerator(format!("#{}", l.gen)))?;
            out = if l.exp > 0 {
                out.then(g)
            } else {
                out.then(&g.inverse())
            };
        }
        Ok(out)
    }

    /// `generator = image` lines, generator names from `p`.
    pub fn emit(&self, p: &Presentation) -> String {
        let mut s = format!("degree = {}\n", self.degree);
        for (name, img) in p.generators().iter().zip(&self.images) {
            let _ = writeln!(s, "{name} = {img}");
        }
        s
    }

    /// Inverse of [`PermAssignment::emit`].
    pub fn parse(p: &Presentation, text: &str) -> Result<Self> {
        let mut degree = None;
        let mut images = vec![None; p.ngens()];
        for line in text.lines().map(str::trim).filter(|l| !l.is_empty()) {
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| Error::BadText(line.to_string()))?;
            let (k, v) = (k.trim(), v.trim());
            if k == "degree" {
                degree = Some(
                    v.parse::<usize>()
                        .map_err(|_| Error::BadText(v.to_string()))?,
                );
            } else {
                let n = degree.ok_or_else(|| Error::BadText("degree must come first".into()))?;
                images[p.gen_index(k)?] = Some(parse_perm(n, v)?);
            }
        }
        let degree = degree.ok_or_else(|| Error::BadText("missing degree".into()))?;
        let images = images
            .into_iter()
            .enumerate()
            .map(|(g, i)| i.ok_or_else(|| Error::UnknownGenerator(p.generators()[g].clone())))
            .collect::<Result<Vec<_>>>()?;
        PermAssignment::new(degree, images)
    }

    /// `π^-1 g π` on every image.
    pub fn conjugate(&self, pi: &Perm) -> PermAssignment {
        let pinv = pi.inverse();
        PermAssignment {
            degree: self.degree,
            images: self.images.iter().map(|g| pinv.then(g).then(pi)).collect(),
        }
    }

    pub fn is_conjugate_to(&self, other: &PermAssignment) -> bool {
        self.degree == other.degree
            && Perm::all(self.degree)
                .iter()
                .any(|pi| self.conjugate(pi) == *other)
    }

    /// Precomposition with a generator map: `g -> self(map(g))`.
    pub fn precompose(
        &self,
        map: &crate::grouppres::GeneratorMap,
        ngens: usize,
    ) -> Result<PermAssignment> {
        let images = (0..ngens)
            .map(|g| {
                let w = map
                    .get(g)
                    .ok_or_else(|| Error::UnknownGenerator(format!("#{g}")))?;
                self.eval(w)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(PermAssignment {
            degree: self.degree,
            images,
        })
    }
}

/// True iff every relator maps to the identity.
pub fn check_assignment(p: &Presentation, a: &PermAssignment) -> Result<bool> {
    if a.images.len() != p.ngens() {
        return Err(Error::UnknownGenerator(format!(
            "{} images for {} generators",
            a.images.len(),
            p.ngens()
        )));
    }
    for r in p.relators() {
        if !a.eval(r)?.is_identity() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The assignment `η_n` on the Borromean generators `u, v, w, x, y, z`
/// (in that generator order), of degree `2n`.
pub fn eta_n(n: usize) -> Result<PermAssignment> {
    if n == 0 {
        return Err(Error::InvalidParameter("eta_n needs n >= 1".into()));
    }
    let d = 2 * n;
    let odds: Vec<usize> = (1..=n).map(|i| 2 * i - 1).collect();
    let evens: Vec<usize> = (1..=n).map(|i| 2 * i).collect();
    let v = Perm::from_cycles(d, &[odds.clone(), evens.clone()])?;
    // (2n-1) 2 (2n-3) 4 ... 1 (2n)
    let mut wc = Vec::with_capacity(d);
    for i in 0..n {
        wc.push(odds[n - 1 - i]);
        wc.push(evens[i]);
    }
    let w = Perm::from_cycles(d, &[wc])?;
    let y = Perm::from_cycles(d, &[(1..=d).collect()])?;
    PermAssignment::new(
        d,
        vec![Perm::identity(d), v, w.clone(), w.inverse(), y.clone(), y],
    )
}

/// Knobs for [`search_homs`].
#[derive(Debug, Clone, Copy)]
pub struct HomSearch {
    pub degree: usize,
    pub limit: usize,
    /// Keep only assignments whose image acts transitively.
    pub transitive: bool,
    /// Search nodes allowed before giving up with `BudgetExceeded`.
    pub max_nodes: usize,
}

impl HomSearch {
    pub fn new(degree: usize, limit: usize) -> Self {
        HomSearch {
            degree,
            limit,
            transitive: false,
            max_nodes: 200_000,
        }
    }

    pub fn transitive(self) -> Self {
        HomSearch {
            transitive: true,
            ..self
        }
    }
}

fn is_transitive(degree: usize, images: &[Perm]) -> bool {
    let mut seen = vec![false; degree];
    let mut stack = vec![0usize];
    seen[0] = true;
    while let Some(x) = stack.pop() {
        for g in images {
            let y = g.apply(x);
            if !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    seen.iter().all(|&s| s)
}

struct Searcher<'a> {
    p: &'a Presentation,
    opts: HomSearch,
    all: Vec<Perm>,
    found: Vec<PermAssignment>,
    nodes: usize,
}

impl Searcher<'_> {
    /// Fills generators forced by a relator with a single unknown occurring
    /// once; `false` on a violated relator.
    fn propagate(&self, images: &mut [Option<Perm>]) -> bool {
        loop {
            let mut changed = false;
            for r in self.p.relators() {
                let unknown: Vec<usize> = r
                    .letters()
                    .iter()
                    .filter(|l| images[l.gen].is_none())
                    .map(|l| l.gen)
                    .collect();
                if unknown.is_empty() {
                    let mut acc = Perm::identity(self.opts.degree);
                    for l in r.letters() {
                        let g = images[l.gen].as_ref().expect("assigned");
                        acc = if l.exp > 0 {
                            acc.then(g)
                        } else {
                            acc.then(&g.inverse())
                        };
                    }
                    if !acc.is_identity() {
                        return false;
                    }
                } else if unknown.len() == 1 {
                    // r = A x^e B  =>  x^e = A^-1 B^-1
                    let pos = r
                        .letters()
                        .iter()
                        .position(|l| images[l.gen].is_none())
                        .expect("one");
                    let eval = |ls: &[crate::grouppres::Letter]| {
                        let mut acc = Perm::identity(self.opts.degree);
                        for l in ls {
                            let g = images[l.gen].as_ref().expect("assigned");
                            acc = if l.exp > 0 {
                                acc.then(g)
                            } else {
                                acc.then(&g.inverse())
                            };
                        }
                        acc
                    };
                    let a = eval(&r.letters()[..pos]);
                    let b = eval(&r.letters()[pos + 1..]);
                    let xe = a.inverse().then(&b.inverse());
                    let x = if r.letters()[pos].exp > 0 {
                        xe
                    } else {
                        xe.inverse()
                    };
                    images[r.letters()[pos].gen] = Some(x);
                    changed = true;
                }
            }
            if !changed {
                return true;
            }
        }
    }

    /// The unknown generator closest to being forced: most relators in
    /// which it is one of at most two unknowns. Ties go to the lowest index.
    fn pick(&self, images: &[Option<Perm>]) -> Option<usize> {
        let mut score = vec![0usize; images.len()];
        for r in self.p.relators() {
            let mut unknown: Vec<usize> = r
                .letters()
                .iter()
                .filter(|l| images[l.gen].is_none())
                .map(|l| l.gen)
                .collect();
            unknown.sort_unstable();
            unknown.dedup();
            if unknown.len() <= 2 {
                for g in unknown {
                    score[g] += 1;
                }
            }
        }
        (0..images.len())
            .filter(|&g| images[g].is_none())
            .max_by_key(|&g| (score[g], std::cmp::Reverse(g)))
    }

    fn run(&mut self, mut images: Vec<Option<Perm>>) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.opts.max_nodes {
            return Err(Error::BudgetExceeded(format!(
                "homomorphism search into S_{} passed {} nodes",
                self.opts.degree, self.opts.max_nodes
            )));
        }
        if self.found.len() >= self.opts.limit || !self.propagate(&mut images) {
            return Ok(());
        }
        match self.pick(&images) {
            None => {
                let imgs: Vec<Perm> = images.into_iter().map(|i| i.expect("complete")).collect();
                if !self.opts.transitive || is_transitive(self.opts.degree, &imgs) {
                    self.found.push(PermAssignment {
                        degree: self.opts.degree,
                        images: imgs,
                    });
                }
            }
            Some(g) => {
                for k in 0..self.all.len() {
                    if self.found.len() >= self.opts.limit {
                        break;
                    }
                    let mut next = images.clone();
                    next[g] = Some(self.all[k].clone());
                    self.run(next)?;
                }
            }
        }
        Ok(())
    }
}

/// Verified homomorphisms into `S_degree`, in a fixed order: free
/// generators take images in lexicographic order, forced ones are solved.
pub fn search_homs(p: &Presentation, opts: HomSearch) -> Result<Vec<PermAssignment>> {
    if opts.degree == 0 {
        return Err(Error::InvalidParameter("degree must be positive".into()));
    }
    let mut s = Searcher {
        p,
        opts,
        all: Perm::all(opts.degree),
        found: Vec::new(),
        nodes: 0,
    };
    s.run(vec![None; p.ngens()])?;
    for a in &s.found {
        if !check_assignment(p, a)? {
            return Err(Error::Invariant(
                "search produced an unverified assignment".into(),
            ));
        }
    }
    Ok(s.found)
}

/// Orders of the images of `w`, one per assignment.
pub fn order_profile(w: &Word, assignments: &[PermAssignment]) -> Result<Vec<u64>> {
    assignments.iter().map(|a| Ok(a.eval(w)?.order())).collect()
}

/// Two words told apart by a verified permutation representation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparationCertificate {
    pub w1: Word,
    pub w2: Word,
    pub assignment: PermAssignment,
    pub image1: Perm,
    pub image2: Perm,
}

impl SeparationCertificate {
    /// Rechecks the homomorphism and both images.
    pub fn verify(&self, p: &Presentation) -> Result<bool> {
        Ok(check_assignment(p, &self.assignment)?
            && self.assignment.eval(&self.w1)? == self.image1
            && self.assignment.eval(&self.w2)? == self.image2
            && self.image1 != self.image2)
    }

    pub fn emit(&self, p: &Presentation) -> String {
        format!(
            "w1 = {}\nw2 = {}\n{}image1 = {}\nimage2 = {}\n",
            p.show(&self.w1),
            p.show(&self.w2),
            self.assignment.emit(p),
            self.image1,
            self.image2
        )
    }

    pub fn parse(p: &Presentation, text: &str) -> Result<Self> {
        let mut w1 = None;
        let mut w2 = None;
        let mut im = (None, None);
        let mut rest = String::new();
        for line in text.lines() {
            match line.split_once('=').map(|(k, v)| (k.trim(), v.trim())) {
                Some(("w1", v)) => w1 = Some(p.word(v)?),
                Some(("w2", v)) => w2 = Some(p.word(v)?),
                Some(("image1", v)) => im.0 = Some(v.to_string()),
                Some(("image2", v)) => im.1 = Some(v.to_string()),
                _ => {
                    rest.push_str(line);
                    rest.push('\n');
                }
            }
        }
        let assignment = PermAssignment::parse(p, &rest)?;
        let missing = |k: &str| Error::BadText(format!("certificate lacks {k}"));
        Ok(SeparationCertificate {
            w1: w1.ok_or_else(|| missing("w1"))?,
            w2: w2.ok_or_else(|| missing("w2"))?,
            image1: parse_perm(assignment.degree, &im.0.ok_or_else(|| missing("image1"))?)?,
            image2: parse_perm(assignment.degree, &im.1.ok_or_else(|| missing("image2"))?)?,
            assignment,
        })
    }
}

/// Tries the given assignments, then searched ones of degree `2..=max_degree`
/// (up to `limit` each). `None` means "not separated", never "equal".
pub fn separate(
    p: &Presentation,
    w1: &Word,
    w2: &Word,
    candidates: &[PermAssignment],
    max_degree: usize,
    limit: usize,
) -> Result<Option<SeparationCertificate>> {
    let attempt = |a: &PermAssignment| -> Result<Option<SeparationCertificate>> {
        let (i1, i2) = (a.eval(w1)?, a.eval(w2)?);
        Ok((i1 != i2).then(|| SeparationCertificate {
            w1: w1.clone(),
            w2: w2.clone(),
            assignment: a.clone(),
            image1: i1,
            image2: i2,
        }))
    };
    for a in candidates {
        if check_assignment(p, a)? {
            if let Some(c) = attempt(a)? {
                return Ok(Some(c));
            }
        }
    }
    for n in 2..=max_degree {
        for a in search_homs(p, HomSearch::new(n, limit).transitive())? {
            if let Some(c) = attempt(&a)? {
                return Ok(Some(c));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grouppres::PresentationKind;

    #[test]
    fn eta_two_as_printed() {
        let e = eta_n(2).unwrap();
        assert_eq!(e.images[1], parse_perm(4, "(1 3)(2 4)").unwrap());
        assert_eq!(e.images[2], parse_perm(4, "(3 2 1 4)").unwrap());
        assert_eq!(e.images[3], parse_perm(4, "(4 1 2 3)").unwrap());
        assert_eq!(e.images[4], parse_perm(4, "(1 2 3 4)").unwrap());
    }

    #[test]
    fn cyclic_group_homs() {
        let p = Presentation::from_text(&["a"], &["a^3"], PresentationKind::Derived).unwrap();
        // identity plus the two 3-cycles
        assert_eq!(search_homs(&p, HomSearch::new(3, 100)).unwrap().len(), 3);
    }

    #[test]
    fn assignment_text_round_trip() {
        let p = Presentation::from_text(&["a", "b"], &[], PresentationKind::Derived).unwrap();
        let a = PermAssignment::new(
            3,
            vec![
                parse_perm(3, "(1 2)").unwrap(),
                parse_perm(3, "(1 2 3)").unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(PermAssignment::parse(&p, &a.emit(&p)).unwrap(), a);
    }
}
