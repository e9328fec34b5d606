//! Oriented virtual link diagrams as signed Gauss codes.
//!
//! Each component is a cyclic list of passages `(crossing id, over|under,
//! sign)` read along its orientation. Virtual crossings never appear: the
//! code only records classical crossings, which is exactly the information
//! the core group sees.
//!
//! Arcs are cut at under passages. For a component whose under passages sit
//! at token positions `u_0 < … < u_{k-1}`, arc `j` is the stretch that *ends*
//! at `u_j`; arc `0` therefore wraps around and contains the start of the
//! code. A component without under passages is a single closed arc.
//!
//! Grammar: components separated by `;`, tokens by `,`, each token
//! `(O|U)<decimal id>(+|-)`. The empty string is the unknot.

mod fixtures;
mod moves;

pub use fixtures::{generate_named, pretzel, split_union, twisted_whitehead, Named};
pub use moves::{apply_reidemeister, augment_plus, legal_moves, mirror, reverse_component, Move};

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// Over or under.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Role {
    Over,
    Under,
}

impl Role {
    pub fn flipped(self) -> Role {
        match self {
            Role::Over => Role::Under,
            Role::Under => Role::Over,
        }
    }
}

/// One passage of a component through a classical crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Passage {
    pub crossing: u32,
    pub role: Role,
    pub sign: i8,
}

impl Passage {
    pub fn new(crossing: u32, role: Role, sign: i8) -> Self {
        Passage {
            crossing,
            role,
            sign,
        }
    }
}

impl fmt::Display for Passage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = if self.role == Role::Over { 'O' } else { 'U' };
        let s = if self.sign > 0 { '+' } else { '-' };
        write!(f, "{r}{}{s}", self.crossing)
    }
}

/// A maximal segment between consecutive under passages.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arc {
    pub id: usize,
    pub component: usize,
    /// Ordinal among the arcs of its component.
    pub position: usize,
    pub label: String,
}

/// A classical crossing with its incident arcs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Crossing {
    pub id: u32,
    pub over_arc: usize,
    pub under_in: usize,
    pub under_out: usize,
    pub sign: i8,
    /// The underpasser on the right of the overpasser: `under_in` at a
    /// positive crossing, `under_out` at a negative one.
    pub right_under: usize,
    pub over_component: usize,
    pub under_component: usize,
}

impl Crossing {
    /// The underpasser on the left (`b_2` in the Wirtinger relator).
    pub fn left_under(&self) -> usize {
        if self.right_under == self.under_in {
            self.under_out
        } else {
            self.under_in
        }
    }
}

/// A validated diagram with derived arcs and crossings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VirtualLinkDiagram {
    components: Vec<Vec<Passage>>,
    arcs: Vec<Arc>,
    crossings: BTreeMap<u32, Crossing>,
    comp_arcs: Vec<Vec<usize>>,
    /// For each component, the token positions of its under passages.
    under_positions: Vec<Vec<usize>>,
}

impl VirtualLinkDiagram {
    /// Validates the passages and derives arcs. `labels`, when given, must
    /// name every arc in global arc order.
    pub fn from_components(
        components: Vec<Vec<Passage>>,
        labels: Option<Vec<String>>,
    ) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::InvalidParameter(
                "a diagram needs at least one component".into(),
            ));
        }
        validate(&components)?;

        let mut under_positions = Vec::with_capacity(components.len());
        let mut comp_arcs = Vec::with_capacity(components.len());
        let mut arcs = Vec::new();
        for (ci, comp) in components.iter().enumerate() {
            let unders: Vec<usize> = comp
                .iter()
                .enumerate()
                .filter(|(_, p)| p.role == Role::Under)
                .map(|(i, _)| i)
                .collect();
            let k = unders.len().max(1);
            let mut ids = Vec::with_capacity(k);
            for pos in 0..k {
                ids.push(arcs.len());
                arcs.push(Arc {
                    id: arcs.len(),
                    component: ci,
                    position: pos,
                    label: String::new(),
                });
            }
            under_positions.push(unders);
            comp_arcs.push(ids);
        }
        let labels = match labels {
            Some(l) => {
                if l.len() != arcs.len() {
                    return Err(Error::InvalidParameter(format!(
                        "{} labels given for {} arcs",
                        l.len(),
                        arcs.len()
                    )));
                }
                l
            }
            None => default_labels(arcs.len()),
        };
        for (a, l) in arcs.iter_mut().zip(labels) {
            a.label = l;
        }

        let mut d = VirtualLinkDiagram {
            components,
            arcs,
            crossings: BTreeMap::new(),
            comp_arcs,
            under_positions,
        };
        d.crossings = d.derive_crossings();
        Ok(d)
    }

    fn derive_crossings(&self) -> BTreeMap<u32, Crossing> {
        let mut over: BTreeMap<u32, (usize, usize, i8)> = BTreeMap::new();
        let mut under: BTreeMap<u32, (usize, usize, usize)> = BTreeMap::new();
        for (ci, comp) in self.components.iter().enumerate() {
            for (pos, p) in comp.iter().enumerate() {
                match p.role {
                    Role::Over => {
                        over.insert(p.crossing, (self.arc_at(ci, pos), ci, p.sign));
                    }
                    Role::Under => {
                        let j = self.under_positions[ci]
                            .iter()
                            .position(|&u| u == pos)
                            .unwrap();
                        let k = self.under_positions[ci].len();
                        let a_in = self.comp_arcs[ci][j];
                        let a_out = self.comp_arcs[ci][(j + 1) % k];
                        under.insert(p.crossing, (a_in, a_out, ci));
                    }
                }
            }
        }
        over.into_iter()
            .map(|(id, (oa, oc, sign))| {
                let (ui, uo, uc) = under[&id];
                let right_under = if sign > 0 { ui } else { uo };
                (
                    id,
                    Crossing {
                        id,
                        over_arc: oa,
                        under_in: ui,
                        under_out: uo,
                        sign,
                        right_under,
                        over_component: oc,
                        under_component: uc,
                    },
                )
            })
            .collect()
    }

    /// Arc containing a non-under token (or, for an under token, the arc
    /// entering it).
    fn arc_at(&self, comp: usize, pos: usize) -> usize {
        let unders = &self.under_positions[comp];
        if unders.is_empty() {
            return self.comp_arcs[comp][0];
        }
        match unders.iter().position(|&u| u >= pos) {
            Some(j) => self.comp_arcs[comp][j],
            None => self.comp_arcs[comp][0],
        }
    }

    /// Number of components `μ`.
    pub fn mu(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Vec<Passage>] {
        &self.components
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn arc(&self, id: usize) -> Result<&Arc> {
        self.arcs.get(id).ok_or(Error::OutOfRange {
            what: "arc",
            index: id,
        })
    }

    /// Looks an arc up by label.
    pub fn arc_by_label(&self, label: &str) -> Result<usize> {
        self.arcs
            .iter()
            .position(|a| a.label == label)
            .ok_or_else(|| Error::InvalidParameter(format!("no arc labelled `{label}`")))
    }

    pub fn labels(&self) -> Vec<String> {
        self.arcs.iter().map(|a| a.label.clone()).collect()
    }

    /// Arcs of one component in order.
    pub fn component_arcs(&self, comp: usize) -> &[usize] {
        &self.comp_arcs[comp]
    }

    /// Number `k_i` of under passages of a component.
    pub fn underpass_count(&self, comp: usize) -> usize {
        self.under_positions[comp].len()
    }

    pub fn crossings(&self) -> impl Iterator<Item = &Crossing> {
        self.crossings.values()
    }

    pub fn crossing(&self, id: u32) -> Option<&Crossing> {
        self.crossings.get(&id)
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    /// Crossings met at the successive under passages when walking the
    /// component of `arc` from `arc` onward: `c_{i0}, c_{i1}, …`.
    pub fn underpasses_from(&self, arc: usize) -> Result<Vec<Crossing>> {
        let a = self.arc(arc)?;
        let ci = a.component;
        let unders = &self.under_positions[ci];
        let k = unders.len();
        Ok((0..k)
            .map(|t| {
                let pos = unders[(a.position + t) % k];
                self.crossings[&self.components[ci][pos].crossing]
            })
            .collect())
    }

    /// One component.
    pub fn is_knot(&self) -> bool {
        self.mu() == 1
    }

    /// Emits the signed Gauss code; exact inverse of [`parse_gauss_code`].
    pub fn to_gauss_code(&self) -> String {
        self.components
            .iter()
            .map(|c| {
                c.iter()
                    .map(|p| p.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect::<Vec<_>>()
            .join(";")
    }

    /// Same components with new arc labels.
    pub fn with_labels(&self, labels: Vec<String>) -> Result<Self> {
        VirtualLinkDiagram::from_components(self.components.clone(), Some(labels))
    }

    /// Same components with default labels.
    pub fn with_default_labels(&self) -> Self {
        VirtualLinkDiagram::from_components(self.components.clone(), None).expect("already valid")
    }

    /// Structured description: one line per arc and per crossing.
    pub fn describe(&self) -> String {
        let mut s = String::new();
        s.push_str(&format!("mu = {}\n", self.mu()));
        s.push_str(&format!("crossings = {}\n", self.crossing_count()));
        s.push_str(&format!("arcs = {}\n", self.arcs.len()));
        for a in &self.arcs {
            s.push_str(&format!(
                "arc {} component = {}\n",
                a.label,
                a.component + 1
            ));
        }
        for c in self.crossings.values() {
            s.push_str(&format!(
                "crossing {} sign = {:+} over = {} under = {} {}\n",
                c.id,
                c.sign,
                self.arcs[c.over_arc].label,
                self.arcs[c.under_in].label,
                self.arcs[c.under_out].label
            ));
        }
        s
    }
}

fn default_labels(n: usize) -> Vec<String> {
    if n <= 26 {
        (0..n)
            .map(|i| ((b'a' + i as u8) as char).to_string())
            .collect()
    } else {
        (0..n).map(|i| format!("a{}", i + 1)).collect()
    }
}

fn validate(components: &[Vec<Passage>]) -> Result<()> {
    let mut seen: BTreeMap<u32, Vec<Passage>> = BTreeMap::new();
    for comp in components {
        for p in comp {
            if p.sign != 1 && p.sign != -1 {
                return Err(Error::SignMismatch { id: p.crossing });
            }
            seen.entry(p.crossing).or_default().push(*p);
        }
    }
    for (id, ps) in seen {
        if ps.len() != 2 {
            return Err(Error::CrossingCount {
                id,
                count: ps.len(),
            });
        }
        if ps[0].sign != ps[1].sign {
            return Err(Error::SignMismatch { id });
        }
        if ps[0].role == ps[1].role {
            return Err(Error::RoleMismatch { id });
        }
    }
    Ok(())
}

/// Parses a signed Gauss code.
pub fn parse_gauss_code(text: &str) -> Result<VirtualLinkDiagram> {
    let mut components = Vec::new();
    for (ci, comp) in text.split(';').enumerate() {
        let comp = comp.trim();
        let mut passages = Vec::new();
        if !comp.is_empty() {
            for tok in comp.split(',') {
                passages.push(parse_token(tok.trim(), ci)?);
            }
        }
        components.push(passages);
    }
    VirtualLinkDiagram::from_components(components, None)
}

fn parse_token(tok: &str, component: usize) -> Result<Passage> {
    let bad = || Error::MalformedToken {
        component,
        token: tok.to_string(),
    };
    let bytes = tok.as_bytes();
    if bytes.len() < 3 {
        return Err(bad());
    }
    let role = match bytes[0] {
        b'O' => Role::Over,
        b'U' => Role::Under,
        _ => return Err(bad()),
    };
    let sign = match bytes[bytes.len() - 1] {
        b'+' => 1,
        b'-' => -1,
        _ => return Err(bad()),
    };
    let digits = &tok[1..tok.len() - 1];
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    let crossing = digits.parse::<u32>().map_err(|_| bad())?;
    Ok(Passage {
        crossing,
        role,
        sign,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hopf_code() {
        let d = parse_gauss_code("O1+,U2+;O2+,U1+").unwrap();
        assert_eq!(d.mu(), 2);
        assert_eq!(d.crossing_count(), 2);
        assert_eq!(d.arcs().len(), 2);
        assert_eq!(d.component_arcs(0).len(), 1);
        assert_eq!(d.component_arcs(1).len(), 1);
        assert_eq!(d.to_gauss_code(), "O1+,U2+;O2+,U1+");
    }

    #[test]
    fn empty_code_is_unknot() {
        let d = parse_gauss_code("").unwrap();
        assert_eq!(d.mu(), 1);
        assert_eq!(d.crossing_count(), 0);
        assert_eq!(d.arcs().len(), 1);
        assert_eq!(d.to_gauss_code(), "");
    }

    #[test]
    fn trailing_empty_component() {
        let d = parse_gauss_code("O1+,U1+;").unwrap();
        assert_eq!(d.mu(), 2);
        assert_eq!(d.to_gauss_code(), "O1+,U1+;");
    }

    #[test]
    fn errors() {
        assert!(matches!(
            parse_gauss_code("X1+"),
            Err(Error::MalformedToken { .. })
        ));
        assert!(matches!(
            parse_gauss_code("O1+"),
            Err(Error::CrossingCount { .. })
        ));
        assert!(matches!(
            parse_gauss_code("O1+,U1-"),
            Err(Error::SignMismatch { .. })
        ));
        assert!(matches!(
            parse_gauss_code("O1+,O1+"),
            Err(Error::RoleMismatch { .. })
        ));
        assert!(matches!(
            parse_gauss_code("O1+,U1+,O1+"),
            Err(Error::CrossingCount { .. })
        ));
        assert!(matches!(
            parse_gauss_code("Ox+"),
            Err(Error::MalformedToken { .. })
        ));
    }

    #[test]
    fn right_under_convention() {
        let d = parse_gauss_code("O1+,U2-;O2-,U1+").unwrap();
        let c1 = d.crossing(1).unwrap();
        assert_eq!(c1.right_under, c1.under_in);
        let c2 = d.crossing(2).unwrap();
        assert_eq!(c2.right_under, c2.under_out);
    }
}
