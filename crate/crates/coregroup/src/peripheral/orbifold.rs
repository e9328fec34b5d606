//! The embedding `f` of the core group into the orbifold group of the
//! augmented diagram, and transport of peripheral pairs back along it.
//!
//! Words on the orbifold side use the Wirtinger generators of `D⁺`: arc `a`
//! of `D` keeps index `a` and the new arc `a⁺` gets index `|A(D)|`. Modulo
//! squares every letter is its own inverse, so words are kept in the normal
//! form of the free product of order-two groups: positive letters, no two
//! neighbours equal. Relators of `O(D)` are not applied.

use crate::diagram::{augment_plus, VirtualLinkDiagram};
use crate::error::{Error, Result};
use crate::grouppres::{
    build_orbifold_presentation, build_wirtinger_presentation, Letter, Presentation, Word,
};

use super::{Meridian, PeripheralPair};

/// The presentation of `O(D⁺)`.
pub fn orbifold_plus_presentation(d: &VirtualLinkDiagram) -> Result<Presentation> {
    build_orbifold_presentation(&build_wirtinger_presentation(&augment_plus(d)))
}

fn push_z2(out: &mut Vec<Letter>, g: usize) {
    if out.last().map(|l| l.gen) == Some(g) {
        out.pop();
    } else {
        out.push(Letter::new(g, 1));
    }
}

/// Normal form modulo squares of generators.
pub fn orbifold_normal_form(w: &Word) -> Word {
    let mut out = Vec::with_capacity(w.len());
    for l in w.letters() {
        push_z2(&mut out, l.gen);
    }
    Word::from_letters(out)
}

/// `x -> x N⁺`: the image of a core-group word with squares killed.
pub fn to_orbifold(w: &Word) -> Word {
    orbifold_normal_form(w)
}

/// `f(g_a) = x_a x_+`, `f(g_a^-1) = x_+ x_a`.
pub fn embed_f(d: &VirtualLinkDiagram, w: &Word) -> Result<Word> {
    let plus = d.arcs().len();
    let mut out = Vec::with_capacity(2 * w.len());
    for l in w.letters() {
        if l.gen >= plus {
            return Err(Error::UnknownGenerator(format!("#{}", l.gen)));
        }
        if l.exp > 0 {
            push_z2(&mut out, l.gen);
            push_z2(&mut out, plus);
        } else {
            push_z2(&mut out, plus);
            push_z2(&mut out, l.gen);
        }
    }
    Ok(Word::from_letters(out))
}

/// Inverse of `f` on products of an even number of generators: drop the
/// `x_+` letters and give the letter found at 1-based position `i` the
/// exponent `(-1)^(i-1)`.
pub fn decode_f_inverse(d: &VirtualLinkDiagram, w: &Word) -> Result<Word> {
    let plus = d.arcs().len();
    let w = orbifold_normal_form(w);
    if w.len() % 2 == 1 {
        return Err(Error::Precondition(
            "an odd product of meridians is outside the image of f".into(),
        ));
    }
    let mut out = Vec::with_capacity(w.len());
    for (i, l) in w.letters().iter().enumerate() {
        if l.gen > plus {
            return Err(Error::UnknownGenerator(format!("#{}", l.gen)));
        }
        if l.gen != plus {
            out.push(Letter::new(l.gen, if i % 2 == 0 { 1 } else { -1 }));
        }
    }
    Ok(Word::from_letters(out).free_reduce())
}

/// Turns an orbifold pair `(m, λ)` with `m` free of `x_+` into a pair of the
/// core group: `(f^-1(m x_+), f^-1(λ m^q))`, `q` the parity of `λ`'s length.
/// `m` must be a palindrome of odd length, the normal form of a conjugate
/// of an arc generator; its centre fixes the component.
pub fn transport_pair_from_orbifold(
    d: &VirtualLinkDiagram,
    m: &Word,
    lambda: &Word,
) -> Result<PeripheralPair> {
    let plus = d.arcs().len();
    let m = orbifold_normal_form(m);
    let lambda = orbifold_normal_form(lambda);
    if m.letters().iter().any(|l| l.gen == plus) {
        return Err(Error::Precondition(
            "the meridian involves the added arc".into(),
        ));
    }
    let l = m.letters();
    let palindrome = l.iter().eq(l.iter().rev());
    if l.len().is_multiple_of(2) || !palindrome {
        return Err(Error::Precondition(
            "the meridian is not a conjugate of an arc generator in normal form".into(),
        ));
    }
    let half = l.len() / 2;
    let centre = l[half].gen;
    let mut meridian = Meridian::arc(d, centre)?;
    meridian.word = decode_f_inverse(d, &m.concat(&Word::gen(plus)))?;
    // the first half, outermost first, are the ι chain
    meridian.derivation = l[..half]
        .iter()
        .map(|x| Meridian::arc(d, x.gen))
        .collect::<Result<_>>()?;
    let q = lambda.len() % 2;
    let lm = if q == 1 { lambda.concat(&m) } else { lambda };
    let longitude = decode_f_inverse(d, &lm)?;
    Ok(PeripheralPair {
        meridian,
        longitude,
    })
}

/// The orbifold pair of a core pair: `(f(m) x_+, f(λ))`. The first entry
/// is the meridian as a conjugate of a Wirtinger generator, so
/// [`transport_pair_from_orbifold`] inverts this map.
pub fn embed_pair(d: &VirtualLinkDiagram, pair: &PeripheralPair) -> Result<(Word, Word)> {
    let plus = Word::gen(d.arcs().len());
    let m = orbifold_normal_form(&embed_f(d, &pair.meridian.word)?.concat(&plus));
    Ok((m, embed_f(d, &pair.longitude)?))
}

/// The preferred Wirtinger longitude at arc `b`: overpassers at the
/// successive under passages raised to the crossing signs, then `x_b^p` with
/// `p` cancelling the exponent sum over the component's own arcs.
pub fn wirtinger_preferred_longitude(d: &VirtualLinkDiagram, b: usize) -> Result<Word> {
    let comp = d.arc(b)?.component;
    let mut letters = Vec::new();
    let mut own = 0i64;
    for c in d.underpasses_from(b)? {
        letters.push(Letter::new(c.over_arc, c.sign));
        if d.arc(c.over_arc)?.component == comp {
            own += c.sign as i64;
        }
    }
    Ok(Word::from_letters(letters).concat(&Word::gen_pow(b, -own)))
}

/// Exponent `e ∈ {0, 1}` with `λ(b) = λ_W(b) x_b^e` modulo squares, or
/// `None` when the two differ by more than a meridian power.
pub fn longitude_difference(d: &VirtualLinkDiagram, b: usize) -> Result<Option<u8>> {
    let core = to_orbifold(&super::longitude(d, b)?);
    let wirt = to_orbifold(&wirtinger_preferred_longitude(d, b)?);
    for e in 0..2u8 {
        let shifted = orbifold_normal_form(&wirt.concat(&Word::gen_pow(b, e as i64)));
        if shifted == core {
            return Ok(Some(e));
        }
    }
    Ok(None)
}
