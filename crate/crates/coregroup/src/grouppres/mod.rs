//! Finite presentations and the diagram builders.
//!
//! Generators are indices into a presentation's name list. Core generators
//! are named `g_<label>`, Wirtinger generators `x_<label>`. Emission is one
//! `key = value` line per item.

pub mod freeprod;
pub mod rewrite;
pub mod tietze;
pub mod word;

pub use freeprod::{recognize_free_product_of_cyclics, FreeProductStructure};
pub use rewrite::{rewrite_with_relators, Rewriter};
pub use tietze::{tietze_simplify, TietzeResult};
pub use word::{apply_generator_map, free_reduce, GeneratorMap, Letter, Word};

use std::fmt::Write as _;

use crate::diagram::VirtualLinkDiagram;
use crate::error::{Error, Result};

/// Where a presentation came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PresentationKind {
    Core,
    Wirtinger,
    Orbifold,
    Derived,
}

impl PresentationKind {
    pub fn as_str(self) -> &'static str {
        match self {
            PresentationKind::Core => "core",
            PresentationKind::Wirtinger => "wirtinger",
            PresentationKind::Orbifold => "orbifold",
            PresentationKind::Derived => "derived",
        }
    }
}

/// Arc provenance of a diagram-derived generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GenMeta {
    pub arc: usize,
    pub component: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    generators: Vec<String>,
    relators: Vec<Word>,
    kind: PresentationKind,
    gen_meta: Vec<Option<GenMeta>>,
}

impl Presentation {
    /// Checks that every relator letter names an existing generator.
    pub fn new(
        generators: Vec<String>,
        relators: Vec<Word>,
        kind: PresentationKind,
    ) -> Result<Self> {
        let n = generators.len();
        for r in &relators {
            if let Some(g) = r.max_gen() {
                if g >= n {
                    return Err(Error::UnknownGenerator(format!("#{g}")));
                }
            }
        }
        Ok(Presentation {
            gen_meta: vec![None; n],
            generators,
            relators,
            kind,
        })
    }

    /// Convenience constructor from names and relator text.
    pub fn from_text(
        generators: &[&str],
        relators: &[&str],
        kind: PresentationKind,
    ) -> Result<Self> {
        let names: Vec<String> = generators.iter().map(|s| s.to_string()).collect();
        let rels = relators
            .iter()
            .map(|r| Word::parse(r, &names))
            .collect::<Result<Vec<_>>>()?;
        Presentation::new(names, rels, kind)
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn ngens(&self) -> usize {
        self.generators.len()
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn kind(&self) -> PresentationKind {
        self.kind
    }

    pub fn gen_meta(&self, g: usize) -> Option<GenMeta> {
        self.gen_meta.get(g).copied().flatten()
    }

    pub fn gen_index(&self, name: &str) -> Result<usize> {
        self.generators
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    /// The single-letter word for a named generator.
    pub fn gen(&self, name: &str) -> Result<Word> {
        Ok(Word::gen(self.gen_index(name)?))
    }

    /// Parses a word in this presentation's generator names.
    pub fn word(&self, text: &str) -> Result<Word> {
        Word::parse(text, &self.generators)
    }

    pub fn show(&self, w: &Word) -> String {
        w.display(&self.generators)
    }

    /// Same generators with extra relators appended; kind becomes `kind`.
    pub fn with_relators(
        &self,
        extra: impl IntoIterator<Item = Word>,
        kind: PresentationKind,
    ) -> Result<Self> {
        let mut relators = self.relators.clone();
        relators.extend(extra);
        let mut p = Presentation::new(self.generators.clone(), relators, kind)?;
        p.gen_meta = self.gen_meta.clone();
        Ok(p)
    }

    /// Line-oriented emission.
    pub fn emit(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "kind = {}", self.kind.as_str());
        let _ = writeln!(s, "generators = {}", self.generators.join(" "));
        let _ = writeln!(s, "relators = {}", self.relators.len());
        for (i, r) in self.relators.iter().enumerate() {
            let _ = writeln!(s, "relator {} = {}", i + 1, self.show(r));
        }
        s
    }
}

fn diagram_presentation(
    d: &VirtualLinkDiagram,
    prefix: &str,
    kind: PresentationKind,
) -> Presentation {
    let generators = d
        .arcs()
        .iter()
        .map(|a| format!("{prefix}{}", a.label))
        .collect();
    let relators = d
        .crossings()
        .map(|c| {
            let (a, b1, b2) = (c.over_arc, c.right_under, c.left_under());
            let letters = match kind {
                PresentationKind::Core => [(a, 1), (b1, -1), (a, 1), (b2, -1)],
                _ => [(a, 1), (b1, 1), (a, -1), (b2, -1)],
            };
            Word::from_letters(letters.iter().map(|&(g, e)| Letter::new(g, e)).collect())
        })
        .collect();
    let mut p = Presentation::new(generators, relators, kind).expect("arc indices are in range");
    p.gen_meta = d
        .arcs()
        .iter()
        .map(|a| {
            Some(GenMeta {
                arc: a.id,
                component: a.component,
            })
        })
        .collect();
    p
}

/// One generator per arc and the relator `g_a g_b1^-1 g_a g_b2^-1` per
/// crossing. Relators are left unreduced, so a kink gives `g_a g_a^-1 g_a
/// g_b^-1`.
pub fn build_core_presentation(d: &VirtualLinkDiagram) -> Presentation {
    diagram_presentation(d, "g_", PresentationKind::Core)
}

/// One generator per arc and the relator `x_a x_b1 x_a^-1 x_b2^-1` per
/// crossing, `b1` the right-hand underpasser.
pub fn build_wirtinger_presentation(d: &VirtualLinkDiagram) -> Presentation {
    diagram_presentation(d, "x_", PresentationKind::Wirtinger)
}

/// Appends the square of every generator.
pub fn build_orbifold_presentation(p: &Presentation) -> Result<Presentation> {
    if !matches!(p.kind, PresentationKind::Core | PresentationKind::Wirtinger) {
        return Err(Error::Precondition(format!(
            "orbifold quotient needs a core or Wirtinger presentation, got {}",
            p.kind.as_str()
        )));
    }
    let squares = (0..p.ngens()).map(|g| Word::gen_pow(g, 2));
    p.with_relators(squares, PresentationKind::Orbifold)
}

/// Kills one generator of a core presentation. By the free splitting of a
/// core group along any arc generator this presents the complementary
/// factor, the subgroup of even alternating products. Other generators keep
/// their names and stand for `g_a g_base^-1`.
pub fn split_off_generator(p: &Presentation, base: usize) -> Result<Presentation> {
    if base >= p.ngens() {
        return Err(Error::OutOfRange {
            what: "generator",
            index: base,
        });
    }
    let renum = |g: usize| if g < base { g } else { g - 1 };
    let mut map = GeneratorMap::new();
    for g in 0..p.ngens() {
        map.insert(
            g,
            if g == base {
                Word::identity()
            } else {
                Word::gen(renum(g))
            },
        );
    }
    let relators = p
        .relators
        .iter()
        .map(|r| r.apply_map(&map))
        .collect::<Result<Vec<_>>>()?;
    let mut generators = p.generators.clone();
    generators.remove(base);
    let mut meta = p.gen_meta.clone();
    meta.remove(base);
    let mut out = Presentation::new(generators, relators, PresentationKind::Derived)?;
    out.gen_meta = meta;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{generate_named, parse_gauss_code, Named};

    #[test]
    fn hopf_core_relators() {
        let d = generate_named(&Named::Hopf).unwrap();
        let p = build_core_presentation(&d);
        assert_eq!(p.generators(), ["g_a", "g_b"]);
        let rels: Vec<String> = p.relators().iter().map(|r| p.show(r)).collect();
        assert_eq!(rels, ["g_a g_b^-1 g_a g_b^-1", "g_b g_a^-1 g_b g_a^-1"]);
    }

    #[test]
    fn core_relators_alternate() {
        for n in Named::catalogue() {
            let p = build_core_presentation(&generate_named(&n).unwrap());
            for r in p.relators() {
                assert_eq!(r.len(), 4);
                assert!(r.is_even_alternating(), "{n}");
            }
        }
    }

    #[test]
    fn unknot_wirtinger_is_free() {
        let p = build_wirtinger_presentation(&parse_gauss_code("").unwrap());
        assert_eq!(p.ngens(), 1);
        assert!(p.relators().is_empty());
    }

    #[test]
    fn orbifold_rejects_derived() {
        let p = Presentation::from_text(&["a"], &["a^5"], PresentationKind::Derived).unwrap();
        assert!(build_orbifold_presentation(&p).is_err());
    }

    #[test]
    fn emission_lists_relators() {
        let p = Presentation::from_text(&["a", "b"], &["a b^-1 a b^-1"], PresentationKind::Derived)
            .unwrap();
        assert_eq!(
            p.emit(),
            "kind = derived\ngenerators = a b\nrelators = 1\nrelator 1 = a b^-1 a b^-1\n"
        );
    }
}
