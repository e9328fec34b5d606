//! Named diagrams.
//!
//! The hand-traced codes below were read off planar pictures: crossing
//! points, over/under from the gaps in the drawing, and signs from the
//! strand directions (positive when the under strand passes from right to
//! left beneath the over strand). Each trace is checked in the tests against
//! the crossing relations it must produce.
//!
//! | name | code | arcs |
//! |---|---|---|
//! | `hopf` | `O1+,U2+;O2+,U1+` | `a`, `b` |
//! | `borromean_B` | see [`BORROMEAN_B`] | `u v`, `w x`, `y z` |
//! | `borromean_Bprime` | `borromean_B` with the third component reversed | same |
//! | `link_L` | two split Hopf links | `s`, `t`, `u`, `v` |
//! | `link_Lprime` | a three-link chain plus a free circle | `w`, `x x'`, `y`, `z` |

use std::fmt;
use std::str::FromStr;

use super::{parse_gauss_code, Passage, Role, VirtualLinkDiagram};
use crate::error::{Error, Result};

/// Borromean rings, all three components clockwise. Component 1 underpasses
/// `z` then `y`, component 2 underpasses `v` then `u`, component 3
/// underpasses `x` then `w`.
pub const BORROMEAN_B: &str = "O4+,U1-,O3-,U2+;O6+,U3-,O5-,U4+;O2+,U5-,O1-,U6+";
/// The same picture with the third component counterclockwise.
pub const BORROMEAN_BPRIME: &str = "O4+,U1+,O3-,U2-;O6-,U3-,O5+,U4+;O2-,U6-,O1+,U5+";
pub const HOPF: &str = "O1+,U2+;O2+,U1+";
pub const LINK_L: &str = "O1+,U2+;U1+,O2+;O3+,U4+;U3+,O4+";
pub const LINK_LPRIME: &str = "O1+,U2+;O3+,U1+,O2+,U4+;U3+,O4+;";

/// Identifiers accepted by [`generate_named`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Named {
    Hopf,
    BorromeanB,
    BorromeanBprime,
    LinkL,
    LinkLprime,
    Pretzel(i64, i64, i64),
    TwistedWhitehead(i64),
    Unknot,
    SplitUnion(Box<Named>, Box<Named>),
}

impl Named {
    /// Every parameter-free fixture plus a few parameterised ones; the set
    /// the property suites run over.
    pub fn catalogue() -> Vec<Named> {
        vec![
            Named::Unknot,
            Named::Hopf,
            Named::BorromeanB,
            Named::BorromeanBprime,
            Named::LinkL,
            Named::LinkLprime,
            Named::Pretzel(7, -3, 5),
            Named::Pretzel(-3, 5, 7),
            Named::TwistedWhitehead(-1),
            Named::TwistedWhitehead(0),
            Named::TwistedWhitehead(1),
            Named::SplitUnion(Box::new(Named::Hopf), Box::new(Named::Unknot)),
        ]
    }
}

impl fmt::Display for Named {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Named::Hopf => write!(f, "hopf"),
            Named::BorromeanB => write!(f, "borromean_B"),
            Named::BorromeanBprime => write!(f, "borromean_Bprime"),
            Named::LinkL => write!(f, "link_L"),
            Named::LinkLprime => write!(f, "link_Lprime"),
            Named::Pretzel(p, q, r) => write!(f, "pretzel:{p},{q},{r}"),
            Named::TwistedWhitehead(n) => write!(f, "twisted_whitehead:{n}"),
            Named::Unknot => write!(f, "unknot"),
            Named::SplitUnion(a, b) => write!(f, "split_union:{a}+{b}"),
        }
    }
}

impl FromStr for Named {
    type Err = Error;

    fn from_str(s: &str) -> Result<Named> {
        let bad = || Error::InvalidParameter(format!("unknown fixture `{s}`"));
        let (head, args) = match s.split_once(':') {
            Some((h, a)) => (h, Some(a)),
            None => (s, None),
        };
        let ints = |a: &str| -> Result<Vec<i64>> {
            a.split(',')
                .map(|x| x.trim().parse::<i64>().map_err(|_| bad()))
                .collect()
        };
        match (head, args) {
            ("hopf", None) => Ok(Named::Hopf),
            ("borromean_B", None) => Ok(Named::BorromeanB),
            ("borromean_Bprime", None) => Ok(Named::BorromeanBprime),
            ("link_L", None) => Ok(Named::LinkL),
            ("link_Lprime", None) => Ok(Named::LinkLprime),
            ("unknot", None) => Ok(Named::Unknot),
            ("pretzel", Some(a)) => match ints(a)?.as_slice() {
                [p, q, r] => Ok(Named::Pretzel(*p, *q, *r)),
                _ => Err(bad()),
            },
            ("twisted_whitehead", Some(a)) => match ints(a)?.as_slice() {
                [n] => Ok(Named::TwistedWhitehead(*n)),
                _ => Err(bad()),
            },
            ("split_union", Some(a)) => {
                let (x, y) = a.split_once('+').ok_or_else(bad)?;
                Ok(Named::SplitUnion(
                    Box::new(x.parse()?),
                    Box::new(y.parse()?),
                ))
            }
            _ => Err(bad()),
        }
    }
}

fn labels(names: &[&str]) -> Option<Vec<String>> {
    Some(names.iter().map(|s| s.to_string()).collect())
}

fn with_labels(code: &str, names: &[&str]) -> Result<VirtualLinkDiagram> {
    let d = parse_gauss_code(code)?;
    VirtualLinkDiagram::from_components(d.components().to_vec(), labels(names))
}

/// Builds a named diagram.
pub fn generate_named(name: &Named) -> Result<VirtualLinkDiagram> {
    match name {
        Named::Hopf => with_labels(HOPF, &["a", "b"]),
        Named::BorromeanB => with_labels(BORROMEAN_B, &["u", "v", "w", "x", "y", "z"]),
        Named::BorromeanBprime => with_labels(BORROMEAN_BPRIME, &["u", "v", "w", "x", "y", "z"]),
        Named::LinkL => with_labels(LINK_L, &["s", "t", "u", "v"]),
        Named::LinkLprime => with_labels(LINK_LPRIME, &["w", "x", "x'", "y", "z"]),
        Named::Pretzel(p, q, r) => pretzel(*p, *q, *r),
        Named::TwistedWhitehead(n) => twisted_whitehead(*n),
        Named::Unknot => parse_gauss_code(""),
        Named::SplitUnion(a, b) => Ok(split_union(&generate_named(a)?, &generate_named(b)?)),
    }
}

/// Disjoint union; crossing ids of `d2` are shifted past those of `d1`.
pub fn split_union(d1: &VirtualLinkDiagram, d2: &VirtualLinkDiagram) -> VirtualLinkDiagram {
    let shift = d1.crossings().map(|c| c.id).max().unwrap_or(0);
    let mut comps = d1.components().to_vec();
    comps.extend(d2.components().iter().map(|c| {
        c.iter()
            .map(|p| Passage {
                crossing: p.crossing + shift,
                ..*p
            })
            .collect::<Vec<_>>()
    }));
    VirtualLinkDiagram::from_components(comps, None).expect("union of valid diagrams is valid")
}

/// Whitehead link with `n` full twists on the two strands of the second
/// component that pass through the first.
///
/// The base diagram has 6 crossings: the round component meets two
/// antiparallel strands (4 crossings) and those strands close up through a
/// clasp (2 crossings). Each full twist adds 2 crossings between the
/// strands, so the diagram has `6 + 2|n|` crossings.
pub fn twisted_whitehead(n: i64) -> Result<VirtualLinkDiagram> {
    use Role::{Over as O, Under as U};
    let p = |c: u32, r: Role, s: i8| Passage::new(c, r, s);
    let ring = vec![p(1, O, 1), p(2, O, -1), p(3, U, -1), p(4, U, 1)];

    let t = n.unsigned_abs() as u32;
    // the twist handedness is fixed so that the even-product subgroup of
    // W_n has order 8|4n-1|
    let s: i8 = if n < 0 { 1 } else { -1 };
    // full twist j uses crossings 7+2j and 8+2j
    let mut inner = Vec::new();
    let mut outer = Vec::new();
    for j in 0..t {
        let (c1, c2) = (7 + 2 * j, 8 + 2 * j);
        if n < 0 {
            inner.extend([p(c1, U, s), p(c2, O, s)]);
            outer.push([p(c2, U, s), p(c1, O, s)]);
        } else {
            inner.extend([p(c1, O, s), p(c2, U, s)]);
            outer.push([p(c2, O, s), p(c1, U, s)]);
        }
    }
    let mut band = vec![p(3, O, -1), p(2, U, -1)];
    band.extend(inner);
    band.extend([p(5, U, -1), p(6, O, -1)]);
    for pair in outer.into_iter().rev() {
        band.extend(pair);
    }
    band.extend([p(1, U, 1), p(4, O, 1), p(6, U, -1), p(5, O, -1)]);
    VirtualLinkDiagram::from_components(vec![ring, band], None)
}

/// Pretzel diagram with three vertical twist regions of `p`, `q`, `r`
/// half-twists, placed left to right and closed by two arcs above and two
/// below. A positive entry makes the strand descending from upper left to
/// lower right pass over.
pub fn pretzel(p: i64, q: i64, r: i64) -> Result<VirtualLinkDiagram> {
    let t = [p, q, r];
    if t.iter().any(|x| x % 2 == 0) {
        return Err(Error::InvalidParameter(format!(
            "pretzel entries must be odd, got ({p},{q},{r})"
        )));
    }
    // crossing id of region i, level j
    let mut base = [0u32; 3];
    let mut next = 1u32;
    for i in 0..3 {
        base[i] = next;
        next += t[i].unsigned_abs() as u32;
    }
    #[derive(Clone, Copy, PartialEq, Eq)]
    struct State {
        region: usize,
        level: usize,
        right: bool,
        down: bool,
    }
    let n = |i: usize| t[i].unsigned_abs() as usize;
    let total: usize = (0..3).map(n).sum();
    // visits: crossing -> (component, position, is_over, direction)
    type Visit = (usize, usize, bool, (i64, i64));
    let mut visits: Vec<Vec<Visit>> = vec![Vec::new(); total + 1];
    let mut comps: Vec<Vec<(u32, bool)>> = Vec::new();
    let mut seen_start = [false; 3 * 2];
    loop {
        // start a new component at an unused top-left entry going down
        let Some(start_region) = (0..3).find(|&i| !seen_start[2 * i]) else {
            break;
        };
        let start = State {
            region: start_region,
            level: 0,
            right: false,
            down: true,
        };
        let mut st = start;
        let mut comp = Vec::new();
        let ci = comps.len();
        loop {
            if st.level == 0 && st.down {
                seen_start[2 * st.region + usize::from(st.right)] = true;
            }
            let i = st.region;
            if st.down {
                // cross from level j to j+1
                let j = st.level;
                let backslash = !st.right; // left-to-right going down
                let over = backslash != (t[i] < 0);
                let dir = if st.right { (-1, -1) } else { (1, -1) };
                let id = base[i] + j as u32;
                visits[id as usize].push((ci, comp.len(), over, dir));
                comp.push((id, over));
                st.level += 1;
                st.right = !st.right;
                if st.level == n(i) {
                    // bottom exit: BR_i joins BL_{i+1}; BL_i joins BR_{i-1}
                    if st.right {
                        st = State {
                            region: (i + 1) % 3,
                            level: n((i + 1) % 3),
                            right: false,
                            down: false,
                        };
                    } else {
                        st = State {
                            region: (i + 2) % 3,
                            level: n((i + 2) % 3),
                            right: true,
                            down: false,
                        };
                    }
                }
            } else {
                let j = st.level - 1;
                // segment between level j (column !right) and j+1 (column right)
                let backslash = st.right;
                let over = backslash != (t[i] < 0);
                let dir = if st.right { (-1, 1) } else { (1, 1) };
                let id = base[i] + j as u32;
                visits[id as usize].push((ci, comp.len(), over, dir));
                comp.push((id, over));
                st.level -= 1;
                st.right = !st.right;
                if st.level == 0 {
                    // top exit: TR_i joins TL_{i+1}; TL_i joins TR_{i-1}
                    if st.right {
                        st = State {
                            region: (i + 1) % 3,
                            level: 0,
                            right: false,
                            down: true,
                        };
                    } else {
                        st = State {
                            region: (i + 2) % 3,
                            level: 0,
                            right: true,
                            down: true,
                        };
                    }
                }
            }
            if st == start {
                break;
            }
        }
        comps.push(comp);
        // mark top-right entries visited going down as used too
        if comps.iter().map(|c| c.len()).sum::<usize>() == 2 * total {
            break;
        }
    }
    let mut sign = vec![0i8; total + 1];
    for id in 1..=total {
        let v = &visits[id];
        debug_assert_eq!(v.len(), 2);
        let (o, u) = if v[0].2 {
            (v[0].3, v[1].3)
        } else {
            (v[1].3, v[0].3)
        };
        sign[id] = if o.0 * u.1 - o.1 * u.0 > 0 { 1 } else { -1 };
    }
    let components = comps
        .into_iter()
        .map(|c| {
            c.into_iter()
                .map(|(id, over)| {
                    Passage::new(
                        id,
                        if over { Role::Over } else { Role::Under },
                        sign[id as usize],
                    )
                })
                .collect()
        })
        .collect();
    VirtualLinkDiagram::from_components(components, None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for n in Named::catalogue() {
            let s = n.to_string();
            assert_eq!(s.parse::<Named>().unwrap(), n, "{s}");
        }
        assert!("pretzel:1,2".parse::<Named>().is_err());
        assert!("nonsense".parse::<Named>().is_err());
    }

    #[test]
    fn fixture_sizes() {
        let h = generate_named(&Named::Hopf).unwrap();
        assert_eq!((h.mu(), h.crossing_count()), (2, 2));
        let b = generate_named(&Named::BorromeanB).unwrap();
        assert_eq!((b.mu(), b.crossing_count(), b.arcs().len()), (3, 6, 6));
        let lp = generate_named(&Named::LinkLprime).unwrap();
        assert_eq!(lp.mu(), 4);
        assert_eq!(lp.underpass_count(3), 0);
        let w = generate_named(&Named::TwistedWhitehead(1)).unwrap();
        assert_eq!(w.crossing_count(), 8);
        assert_eq!(w.mu(), 2);
    }

    #[test]
    fn pretzel_is_a_knot_with_all_crossings() {
        let d = pretzel(7, -3, 5).unwrap();
        assert_eq!(d.mu(), 1);
        assert_eq!(d.crossing_count(), 15);
        assert!(pretzel(2, 3, 5).is_err());
    }

    #[test]
    fn pretzel_twist_regions_are_antiparallel_for_odd_entries() {
        // odd pretzel knots have linking-free twist regions: each region's
        // crossings share one sign
        let d = pretzel(3, -5, 7).unwrap();
        let signs: Vec<i8> = d.crossings().map(|c| c.sign).collect();
        assert!(signs[0..3].iter().all(|&s| s == signs[0]));
        assert!(signs[3..8].iter().all(|&s| s == signs[3]));
        assert!(signs[8..15].iter().all(|&s| s == signs[8]));
    }
}
