//! Orientation changes, mirror image, the `D⁺` augmentation and
//! Reidemeister moves on Gauss codes.
//!
//! Component indices are 0-based throughout the crate.

use super::{Passage, Role, VirtualLinkDiagram};
use crate::error::{Error, Result};

/// Reverses the orientation of component `i`.
///
/// The token order of the component is reversed. Crossings between `i` and
/// another component change sign; self-crossings of `i` keep theirs, since
/// both strands turn around. Arc labels follow their arcs.
pub fn reverse_component(d: &VirtualLinkDiagram, i: usize) -> Result<VirtualLinkDiagram> {
    if i >= d.mu() {
        return Err(Error::OutOfRange {
            what: "component",
            index: i,
        });
    }
    let mixed = |id: u32| {
        let c = d.crossing(id).expect("crossing exists");
        (c.over_component == i) != (c.under_component == i)
    };
    let mut comps: Vec<Vec<Passage>> = d
        .components()
        .iter()
        .map(|c| {
            c.iter()
                .map(|p| Passage {
                    sign: if mixed(p.crossing) { -p.sign } else { p.sign },
                    ..*p
                })
                .collect()
        })
        .collect();
    comps[i].reverse();

    // New arc t of the reversed component is the old arc (k - t) mod k.
    let mut labels = d.labels();
    let arcs = d.component_arcs(i);
    let k = arcs.len();
    let old: Vec<String> = arcs.iter().map(|&a| d.arcs()[a].label.clone()).collect();
    for (t, &a) in arcs.iter().enumerate() {
        labels[a] = old[(k - t) % k].clone();
    }
    VirtualLinkDiagram::from_components(comps, Some(labels))
}

/// Mirror image: every crossing changes sign and swaps over with under.
pub fn mirror(d: &VirtualLinkDiagram) -> VirtualLinkDiagram {
    let comps = d
        .components()
        .iter()
        .map(|c| {
            c.iter()
                .map(|p| Passage {
                    crossing: p.crossing,
                    role: p.role.flipped(),
                    sign: -p.sign,
                })
                .collect()
        })
        .collect();
    VirtualLinkDiagram::from_components(comps, None).expect("mirror of a valid diagram is valid")
}

/// Adds a crossing-free component whose single arc is labelled `+`.
pub fn augment_plus(d: &VirtualLinkDiagram) -> VirtualLinkDiagram {
    let mut comps = d.components().to_vec();
    comps.push(Vec::new());
    let mut labels = d.labels();
    labels.push("+".to_string());
    VirtualLinkDiagram::from_components(comps, Some(labels)).expect("augmentation keeps validity")
}

/// A Reidemeister move or its inverse, located by token positions or
/// crossing ids.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Move {
    /// Insert a kink before token `position` of `component`.
    R1 {
        component: usize,
        position: usize,
        over_first: bool,
        sign: i8,
    },
    /// Remove a kink: both passages of `crossing` are cyclically adjacent.
    R1Inverse { crossing: u32 },
    /// Push the strand at `under` beneath the strand at `over`, creating
    /// two crossings of opposite sign.
    R2 {
        over: (usize, usize),
        under: (usize, usize),
        sign: i8,
        antiparallel: bool,
    },
    /// Remove a bigon formed by two crossings.
    R2Inverse { first: u32, second: u32 },
    /// Slide across the triangle formed by three crossings.
    R3 { crossings: [u32; 3] },
}

/// Applies a move, returning a diagram with default labels.
pub fn apply_reidemeister(d: &VirtualLinkDiagram, mv: Move) -> Result<VirtualLinkDiagram> {
    let mut comps = d.components().to_vec();
    let next_id = d.crossings().map(|c| c.id).max().map_or(1, |m| m + 1);
    match mv {
        Move::R1 {
            component,
            position,
            over_first,
            sign,
        } => {
            let comp = comps.get_mut(component).ok_or(Error::OutOfRange {
                what: "component",
                index: component,
            })?;
            if position > comp.len() || (sign != 1 && sign != -1) {
                return Err(Error::IllegalSite(format!("R1 at {component}:{position}")));
            }
            let (r1, r2) = if over_first {
                (Role::Over, Role::Under)
            } else {
                (Role::Under, Role::Over)
            };
            comp.insert(position, Passage::new(next_id, r2, sign));
            comp.insert(position, Passage::new(next_id, r1, sign));
        }
        Move::R1Inverse { crossing } => {
            let (ci, p1, p2) = locate_pair(&comps, crossing)?;
            let comp = &comps[ci];
            let n = comp.len();
            if ci != p2.0 || !((p1.1 + 1) % n == p2.1 || (p2.1 + 1) % n == p1.1) {
                return Err(Error::IllegalSite(format!(
                    "crossing {crossing} is not a kink"
                )));
            }
            comps[ci].retain(|p| p.crossing != crossing);
        }
        Move::R2 {
            over,
            under,
            sign,
            antiparallel,
        } => {
            if sign != 1 && sign != -1 {
                return Err(Error::IllegalSite("R2 sign".into()));
            }
            for &(c, p) in &[over, under] {
                let comp = comps.get(c).ok_or(Error::OutOfRange {
                    what: "component",
                    index: c,
                })?;
                if p > comp.len() {
                    return Err(Error::IllegalSite(format!("R2 position {c}:{p}")));
                }
            }
            if over == under {
                return Err(Error::IllegalSite(
                    "R2 needs two distinct insertion points".into(),
                ));
            }
            let (a, b) = (next_id, next_id + 1);
            let top = [
                Passage::new(a, Role::Over, sign),
                Passage::new(b, Role::Over, -sign),
            ];
            let bottom = if antiparallel {
                [
                    Passage::new(b, Role::Under, -sign),
                    Passage::new(a, Role::Under, sign),
                ]
            } else {
                [
                    Passage::new(a, Role::Under, sign),
                    Passage::new(b, Role::Under, -sign),
                ]
            };
            // insert at the later position first so the earlier index stays valid
            let mut inserts = [(over, top), (under, bottom)];
            inserts.sort_by(|x, y| (y.0 .0, y.0 .1).cmp(&(x.0 .0, x.0 .1)));
            for ((c, p), pair) in inserts {
                comps[c].insert(p, pair[1]);
                comps[c].insert(p, pair[0]);
            }
        }
        Move::R2Inverse { first, second } => {
            if !is_bigon(&comps, first, second) {
                return Err(Error::IllegalSite(format!(
                    "crossings {first},{second} do not bound a bigon"
                )));
            }
            for comp in comps.iter_mut() {
                comp.retain(|p| p.crossing != first && p.crossing != second);
            }
        }
        Move::R3 { crossings } => {
            let swaps = r3_swaps(&comps, crossings).ok_or_else(|| {
                Error::IllegalSite(format!("crossings {crossings:?} do not form a triangle"))
            })?;
            for (ci, i, j) in swaps {
                comps[ci].swap(i, j);
            }
        }
    }
    VirtualLinkDiagram::from_components(comps, None)
}

type Loc = (usize, usize);

fn locate(comps: &[Vec<Passage>], id: u32, role: Role) -> Option<Loc> {
    comps.iter().enumerate().find_map(|(ci, c)| {
        c.iter()
            .position(|p| p.crossing == id && p.role == role)
            .map(|pos| (ci, pos))
    })
}

fn locate_pair(comps: &[Vec<Passage>], id: u32) -> Result<(usize, Loc, Loc)> {
    let o = locate(comps, id, Role::Over).ok_or(Error::IllegalSite(format!("no crossing {id}")))?;
    let u =
        locate(comps, id, Role::Under).ok_or(Error::IllegalSite(format!("no crossing {id}")))?;
    Ok((o.0, o, u))
}

/// Cyclically adjacent positions within one component; returns the pair in
/// walking order.
fn adjacent(comps: &[Vec<Passage>], x: Loc, y: Loc) -> Option<(usize, usize, usize)> {
    if x.0 != y.0 {
        return None;
    }
    let n = comps[x.0].len();
    if n < 2 {
        return None;
    }
    if (x.1 + 1) % n == y.1 {
        Some((x.0, x.1, y.1))
    } else if (y.1 + 1) % n == x.1 {
        Some((x.0, y.1, x.1))
    } else {
        None
    }
}

fn is_bigon(comps: &[Vec<Passage>], a: u32, b: u32) -> bool {
    let sign = |id: u32| {
        comps
            .iter()
            .flatten()
            .find(|p| p.crossing == id)
            .map(|p| p.sign)
    };
    match (sign(a), sign(b)) {
        (Some(sa), Some(sb)) if sa == -sb && a != b => {}
        _ => return false,
    }
    let (oa, ob) = (locate(comps, a, Role::Over), locate(comps, b, Role::Over));
    let (ua, ub) = (locate(comps, a, Role::Under), locate(comps, b, Role::Under));
    match (oa, ob, ua, ub) {
        (Some(oa), Some(ob), Some(ua), Some(ub)) => {
            adjacent(comps, oa, ob).is_some() && adjacent(comps, ua, ub).is_some()
        }
        _ => false,
    }
}

/// For a triangle `top` (over both), `mid`, `bottom`, returns the three
/// adjacent position pairs to swap.
fn r3_swaps(comps: &[Vec<Passage>], ids: [u32; 3]) -> Option<Vec<(usize, usize, usize)>> {
    if ids[0] == ids[1] || ids[1] == ids[2] || ids[0] == ids[2] {
        return None;
    }
    let perms = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    for p in perms {
        // a: top x middle, b: top x bottom, c: middle x bottom
        let (a, b, c) = (ids[p[0]], ids[p[1]], ids[p[2]]);
        let oa = locate(comps, a, Role::Over)?;
        let ob = locate(comps, b, Role::Over)?;
        let ua = locate(comps, a, Role::Under)?;
        let oc = locate(comps, c, Role::Over)?;
        let ub = locate(comps, b, Role::Under)?;
        let uc = locate(comps, c, Role::Under)?;
        if let (Some(t), Some(m), Some(bo)) = (
            adjacent(comps, oa, ob),
            adjacent(comps, ua, oc),
            adjacent(comps, ub, uc),
        ) {
            // the three pairs must be six distinct tokens
            let mut all = vec![
                (t.0, t.1),
                (t.0, t.2),
                (m.0, m.1),
                (m.0, m.2),
                (bo.0, bo.1),
                (bo.0, bo.2),
            ];
            all.sort();
            all.dedup();
            if all.len() == 6 {
                return Some(vec![t, m, bo]);
            }
        }
    }
    None
}

/// Every legal move site of a diagram (used for exhaustive invariance
/// checks). R1 and R2 sites use a single sign each to keep the list short;
/// the sign never affects the core group.
pub fn legal_moves(d: &VirtualLinkDiagram) -> Vec<Move> {
    let comps = d.components();
    let mut out = Vec::new();
    for (ci, c) in comps.iter().enumerate() {
        for pos in 0..c.len().max(1) {
            for over_first in [true, false] {
                out.push(Move::R1 {
                    component: ci,
                    position: pos,
                    over_first,
                    sign: 1,
                });
            }
        }
    }
    let ids: Vec<u32> = d.crossings().map(|c| c.id).collect();
    for &id in &ids {
        if let Ok((ci, o, u)) = locate_pair(comps, id) {
            if adjacent(comps, o, u).is_some() && ci == u.0 {
                out.push(Move::R1Inverse { crossing: id });
            }
        }
    }
    let points: Vec<Loc> = comps
        .iter()
        .enumerate()
        .flat_map(|(ci, c)| (0..c.len().max(1)).map(move |p| (ci, p)))
        .collect();
    for &o in &points {
        for &u in &points {
            if o != u {
                for antiparallel in [false, true] {
                    out.push(Move::R2 {
                        over: o,
                        under: u,
                        sign: 1,
                        antiparallel,
                    });
                }
            }
        }
    }
    for (i, &a) in ids.iter().enumerate() {
        for &b in &ids[i + 1..] {
            if is_bigon(comps, a, b) {
                out.push(Move::R2Inverse {
                    first: a,
                    second: b,
                });
            }
        }
    }
    for (i, &a) in ids.iter().enumerate() {
        for (j, &b) in ids.iter().enumerate().skip(i + 1) {
            for &c in &ids[j + 1..] {
                if r3_swaps(comps, [a, b, c]).is_some() {
                    out.push(Move::R3 {
                        crossings: [a, b, c],
                    });
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse_gauss_code;

    #[test]
    fn mirror_is_an_involution() {
        let d = parse_gauss_code("O1+,U2-,O3+;U1+,O2-,U3+").unwrap();
        assert_eq!(mirror(&mirror(&d)).to_gauss_code(), d.to_gauss_code());
    }

    #[test]
    fn reverse_unknot() {
        let d = parse_gauss_code("").unwrap();
        assert_eq!(reverse_component(&d, 0).unwrap(), d);
        assert!(reverse_component(&d, 1).is_err());
    }

    #[test]
    fn r1_round_trip() {
        let d = parse_gauss_code("").unwrap();
        let k = apply_reidemeister(
            &d,
            Move::R1 {
                component: 0,
                position: 0,
                over_first: true,
                sign: 1,
            },
        )
        .unwrap();
        assert_eq!(k.crossing_count(), 1);
        let back = apply_reidemeister(&k, Move::R1Inverse { crossing: 1 }).unwrap();
        assert_eq!(back.to_gauss_code(), d.to_gauss_code());
    }

    #[test]
    fn r2_round_trip() {
        let d = parse_gauss_code(";").unwrap();
        let e = apply_reidemeister(
            &d,
            Move::R2 {
                over: (0, 0),
                under: (1, 0),
                sign: 1,
                antiparallel: false,
            },
        )
        .unwrap();
        assert_eq!(e.crossing_count(), 2);
        assert_eq!(e.to_gauss_code(), "O1+,O2-;U1+,U2-");
        let back = apply_reidemeister(
            &e,
            Move::R2Inverse {
                first: 1,
                second: 2,
            },
        )
        .unwrap();
        assert_eq!(back.to_gauss_code(), ";");
    }

    #[test]
    fn r3_twice_is_identity() {
        // three strands: top over both, middle over bottom
        let d = parse_gauss_code("O1+,O2+;U1+,O3+;U2+,U3+").unwrap();
        let mv = Move::R3 {
            crossings: [1, 2, 3],
        };
        let e = apply_reidemeister(&d, mv).unwrap();
        assert_eq!(e.to_gauss_code(), "O2+,O1+;O3+,U1+;U3+,U2+");
        assert_eq!(
            apply_reidemeister(&e, mv).unwrap().to_gauss_code(),
            d.to_gauss_code()
        );
    }

    #[test]
    fn illegal_sites() {
        let d = parse_gauss_code("O1+,U2+;O2+,U1+").unwrap();
        assert!(apply_reidemeister(&d, Move::R1Inverse { crossing: 1 }).is_err());
        assert!(apply_reidemeister(
            &d,
            Move::R2Inverse {
                first: 1,
                second: 2
            }
        )
        .is_err());
        assert!(apply_reidemeister(
            &d,
            Move::R3 {
                crossings: [1, 2, 2]
            }
        )
        .is_err());
    }
}
