//! Meridians, longitudes and the involutory meridional automorphisms.
//!
//! All words here are over the core generators of a diagram, whose index
//! equals the arc id. Meridians carry their component and the chain of ι
//! maps that produced them; the component is read from the tag, never
//! recomputed from the group element.
//!
//! The `f` embedding and the transport back from the orbifold side live in
//! [`orbifold`].

pub mod orbifold;

pub use orbifold::{
    decode_f_inverse, embed_f, embed_pair, longitude_difference, orbifold_normal_form,
    orbifold_plus_presentation, to_orbifold, transport_pair_from_orbifold,
    wirtinger_preferred_longitude,
};

use std::collections::HashSet;
use std::fmt::Write as _;

use crate::diagram::VirtualLinkDiagram;
use crate::error::{Error, Result};
use crate::grouppres::{FreeProductStructure, GeneratorMap, Presentation, Rewriter, Word};

/// A meridian with its component tag. `derivation = [n_1, …, n_k]` means
/// `word = ι_{n_1}(… ι_{n_k}(g_base))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Meridian {
    pub word: Word,
    pub component: usize,
    pub base: usize,
    pub derivation: Vec<Meridian>,
}

impl Meridian {
    /// The arc generator `g_arc`.
    pub fn arc(d: &VirtualLinkDiagram, arc: usize) -> Result<Meridian> {
        let a = d.arc(arc)?;
        Ok(Meridian {
            word: Word::gen(arc),
            component: a.component,
            base: arc,
            derivation: Vec::new(),
        })
    }

    /// Every arc generator, in arc order.
    pub fn arcs(d: &VirtualLinkDiagram) -> Vec<Meridian> {
        (0..d.arcs().len())
            .map(|a| Meridian::arc(d, a).expect("arc in range"))
            .collect()
    }

    /// Replays the derivation from the base generator.
    pub fn replay(&self) -> Word {
        let mut w = Word::gen(self.base);
        for n in self.derivation.iter().rev() {
            w = n.word.mul(&w.inverse()).mul(&n.word);
        }
        w
    }

    /// The generator map of `ι_m`. For an arc generator this is
    /// `g_b -> m g_b^-1 m`; for a derived meridian it is the conjugated
    /// composition along the derivation.
    pub fn iota_map(&self, ngens: usize) -> GeneratorMap {
        let base = GeneratorMap::from_fn(ngens, |b| {
            Word::gen(self.base)
                .mul(&Word::gen_inv(b))
                .mul(&Word::gen(self.base))
        });
        let mut m = base;
        // ι_m = ι_{n1} ∘ … ∘ ι_{nk} ∘ ι_base ∘ ι_{nk} ∘ … ∘ ι_{n1}
        for n in self.derivation.iter().rev() {
            let nm = n.iota_map(ngens);
            m = nm.compose(&m).expect("total").compose(&nm).expect("total");
        }
        m
    }
}

/// `ι_m(w)`, freely reduced.
pub fn iota(m: &Meridian, w: &Word, ngens: usize) -> Result<Word> {
    w.apply_map(&m.iota_map(ngens))
}

/// `ι_m(n) = m n^-1 m` on a meridian `n`; keeps `n`'s component.
pub fn iota_on_meridian(m: &Meridian, n: &Meridian) -> Meridian {
    let mut derivation = vec![m.clone()];
    derivation.extend(n.derivation.iter().cloned());
    Meridian {
        word: m.word.mul(&n.word.inverse()).mul(&m.word),
        component: n.component,
        base: n.base,
        derivation,
    }
}

/// The automorphism `g_b -> g_b^-1`.
pub fn iota_one(w: &Word) -> Word {
    Word::from_letters(w.letters().iter().map(|l| l.inverse()).collect()).free_reduce()
}

/// The component tag.
pub fn kappa(m: &Meridian) -> usize {
    m.component
}

/// Longitude at arc `b`: the overpassers met at the successive under
/// passages from `b` onward, with alternating exponents, closed by `g_b^-1`
/// when their number is odd. Identity for a component without under
/// passages.
pub fn longitude(d: &VirtualLinkDiagram, b: usize) -> Result<Word> {
    let cs = d.underpasses_from(b)?;
    let mut letters = Vec::with_capacity(cs.len() + 1);
    for (j, c) in cs.iter().enumerate() {
        letters.push(crate::grouppres::Letter::new(
            c.over_arc,
            if j % 2 == 0 { 1 } else { -1 },
        ));
    }
    if cs.len() % 2 == 1 {
        letters.push(crate::grouppres::Letter::new(b, -1));
    }
    Ok(Word::from_letters(letters))
}

/// An element of `Z ⊕ (Z/2)^{μ-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AbelianTarget {
    pub integer: i64,
    pub bits: Vec<u8>,
}

/// `φ_D`: a generator of component 0 goes to `(1, 0…0)`, one of component
/// `i > 0` to `(1, e_i)`.
pub fn phi(d: &VirtualLinkDiagram, w: &Word) -> Result<AbelianTarget> {
    let mut t = AbelianTarget {
        integer: 0,
        bits: vec![0; d.mu() - 1],
    };
    for l in w.letters() {
        let comp = d.arc(l.gen)?.component;
        t.integer += l.exp as i64;
        if comp > 0 {
            t.bits[comp - 1] ^= 1;
        }
    }
    Ok(t)
}

/// Membership in the even-product subgroup: even total exponent.
pub fn in_ac_pm(w: &Word) -> bool {
    w.free_reduce().exponent_sum() % 2 == 0
}

/// A meridian-longitude pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeripheralPair {
    pub meridian: Meridian,
    pub longitude: Word,
}

impl PeripheralPair {
    pub fn base(d: &VirtualLinkDiagram, b: usize) -> Result<PeripheralPair> {
        Ok(PeripheralPair {
            meridian: Meridian::arc(d, b)?,
            longitude: longitude(d, b)?,
        })
    }

    /// Both coordinates pushed through `ι_{g_a}`.
    pub fn apply_arc(&self, d: &VirtualLinkDiagram, a: usize) -> Result<PeripheralPair> {
        let m = Meridian::arc(d, a)?;
        Ok(PeripheralPair {
            meridian: iota_on_meridian(&m, &self.meridian),
            longitude: iota(&m, &self.longitude, d.arcs().len())?,
        })
    }
}

/// Decides when two words count as the same during enumeration. Equal keys
/// must imply equal images in whatever group the oracle speaks for.
pub trait Equivalence {
    fn key(&self, w: &Word) -> Result<Vec<i64>>;
}

fn letters_key(w: &Word) -> Vec<i64> {
    w.letters()
        .iter()
        .map(|l| (l.gen as i64 + 1) * l.exp as i64)
        .collect()
}

/// Free reduction: sound for the group, far from complete.
pub struct FreeReduction;

impl Equivalence for FreeReduction {
    fn key(&self, w: &Word) -> Result<Vec<i64>> {
        Ok(letters_key(&w.free_reduce()))
    }
}

/// Shortest word found by the bounded rewriter.
pub struct ByRewriting {
    pub rewriter: Rewriter,
    pub budget: usize,
}

impl ByRewriting {
    pub fn new(p: &Presentation, budget: usize) -> Self {
        ByRewriting {
            rewriter: Rewriter::new(p),
            budget,
        }
    }
}

impl Equivalence for ByRewriting {
    fn key(&self, w: &Word) -> Result<Vec<i64>> {
        Ok(letters_key(&self.rewriter.rewrite(w, self.budget)))
    }
}

/// Free-product normal form: complete when recognition succeeded.
impl Equivalence for FreeProductStructure {
    fn key(&self, w: &Word) -> Result<Vec<i64>> {
        Ok(self
            .normal_form(w)?
            .into_iter()
            .flat_map(|(f, e)| [f as i64, e])
            .collect())
    }
}

/// Image in the abelianization.
impl Equivalence for crate::abelian::AbelianStructure {
    fn key(&self, w: &Word) -> Result<Vec<i64>> {
        self.image(w)
    }
}

/// Meridians reachable from arc generators by at most `depth` maps
/// `ι_{g_a}`, deduplicated by `eq`, in discovery order.
pub fn enumerate_meridians(
    d: &VirtualLinkDiagram,
    depth: usize,
    eq: &dyn Equivalence,
) -> Result<Vec<Meridian>> {
    let arcs = Meridian::arcs(d);
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut frontier = Vec::new();
    for m in &arcs {
        if seen.insert(eq.key(&m.word)?) {
            out.push(m.clone());
            frontier.push(m.clone());
        }
    }
    for _ in 0..depth {
        let mut next = Vec::new();
        for n in &frontier {
            for a in &arcs {
                let m = iota_on_meridian(a, n);
                if seen.insert(eq.key(&m.word)?) {
                    out.push(m.clone());
                    next.push(m);
                }
            }
        }
        frontier = next;
    }
    Ok(out)
}

/// Pairs reachable from the base pairs by at most `depth` simultaneous
/// maps `ι_{g_a}`, deduplicated on both coordinates by `eq`.
pub fn enumerate_pairs(
    d: &VirtualLinkDiagram,
    depth: usize,
    eq: &dyn Equivalence,
) -> Result<Vec<PeripheralPair>> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut frontier = Vec::new();
    for b in 0..d.arcs().len() {
        let p = PeripheralPair::base(d, b)?;
        if seen.insert((eq.key(&p.meridian.word)?, eq.key(&p.longitude)?)) {
            out.push(p.clone());
            frontier.push(p);
        }
    }
    for _ in 0..depth {
        let mut next = Vec::new();
        for p in &frontier {
            for a in 0..d.arcs().len() {
                let q = p.apply_arc(d, a)?;
                if seen.insert((eq.key(&q.meridian.word)?, eq.key(&q.longitude)?)) {
                    out.push(q.clone());
                    next.push(q);
                }
            }
        }
        frontier = next;
    }
    Ok(out)
}

/// Distinct longitudes among `pairs` under `eq`, first occurrence kept.
pub fn distinct_longitudes(pairs: &[PeripheralPair], eq: &dyn Equivalence) -> Result<Vec<Word>> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for p in pairs {
        if seen.insert(eq.key(&p.longitude)?) {
            out.push(p.longitude.clone());
        }
    }
    Ok(out)
}

/// One line per pair: component (1-based), meridian, longitude, and the
/// arcs of the ι chain, outermost first.
pub fn emit_pairs(p: &Presentation, pairs: &[PeripheralPair]) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "pairs = {}", pairs.len());
    for (i, q) in pairs.iter().enumerate() {
        let trail: Vec<String> = q
            .meridian
            .derivation
            .iter()
            .map(|m| p.show(&m.word))
            .collect();
        let _ = writeln!(
            s,
            "pair {} component = {} meridian = {} longitude = {} derivation = [{}]",
            i + 1,
            q.meridian.component + 1,
            p.show(&q.meridian.word),
            p.show(&q.longitude),
            trail.join(", ")
        );
    }
    s
}

/// The free-group identity behind the well-definedness of `ι_{g_a}`:
/// `I_a(r'_c) = u (r'_c)^-1 u^-1` with `u = I_a(a(c) b1(c)^-1 a(c) a^-1)`,
/// checked by free reduction for one crossing and one generator.
pub fn check_iota_relator_identity(
    d: &VirtualLinkDiagram,
    crossing: u32,
    a: usize,
) -> Result<bool> {
    let c = d.crossing(crossing).ok_or(Error::OutOfRange {
        what: "crossing",
        index: crossing as usize,
    })?;
    let n = d.arcs().len();
    let map = Meridian::arc(d, a)?.iota_map(n);
    let (ac, b1, b2) = (c.over_arc, c.right_under, c.left_under());
    let r = Word::from_letters(vec![
        crate::grouppres::Letter::new(ac, 1),
        crate::grouppres::Letter::new(b1, -1),
        crate::grouppres::Letter::new(ac, 1),
        crate::grouppres::Letter::new(b2, -1),
    ]);
    let lhs = r.apply_map(&map)?;
    let inner = Word::from_letters(vec![
        crate::grouppres::Letter::new(ac, 1),
        crate::grouppres::Letter::new(b1, -1),
        crate::grouppres::Letter::new(ac, 1),
        crate::grouppres::Letter::new(a, -1),
    ]);
    let u = inner.apply_map(&map)?;
    let rhs = u.concat(&r.inverse()).concat(&u.inverse()).free_reduce();
    Ok(lhs == rhs)
}
