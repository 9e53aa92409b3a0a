//! Distance functions on finite posets, metric-axiom checking,
//! chain-compatibility testing, and kinship degrees on tree orders.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{PosetError, Result};
use crate::poset::{ElementId, Poset};

/// Selector among the four distance functions.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DistanceKind {
    Zigzag,
    UpDown,
    DownUp,
    Chebyshev,
}

impl DistanceKind {
    pub const ALL: [DistanceKind; 4] = [
        DistanceKind::Zigzag,
        DistanceKind::UpDown,
        DistanceKind::DownUp,
        DistanceKind::Chebyshev,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            DistanceKind::Zigzag => "zigzag",
            DistanceKind::UpDown => "updown",
            DistanceKind::DownUp => "downup",
            DistanceKind::Chebyshev => "chebyshev",
        }
    }
}

impl std::str::FromStr for DistanceKind {
    type Err = PosetError;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "zigzag" => Ok(DistanceKind::Zigzag),
            "updown" | "up-down" | "up_down" => Ok(DistanceKind::UpDown),
            "downup" | "down-up" | "down_up" => Ok(DistanceKind::DownUp),
            "chebyshev" => Ok(DistanceKind::Chebyshev),
            other => Err(PosetError::InvalidParameter(format!(
                "unknown distance kind `{other}`"
            ))),
        }
    }
}

/// Graph distance in the (undirected) Hasse diagram.
pub fn zigzag_distance(p: &Poset, x: ElementId, y: ElementId) -> Result<u32> {
    if x == y {
        return Ok(0);
    }
    let n = p.len();
    let mut dist = vec![u32::MAX; n];
    dist[x.index()] = 0;
    let mut queue = VecDeque::from([x]);
    while let Some(v) = queue.pop_front() {
        let d = dist[v.index()];
        for w in p.upper_covers(v).into_iter().chain(p.lower_covers(v)) {
            if dist[w.index()] == u32::MAX {
                dist[w.index()] = d + 1;
                if w == y {
                    return Ok(d + 1);
                }
                queue.push_back(w);
            }
        }
    }
    Err(PosetError::Disconnected(
        p.name(x).to_string(),
        p.name(y).to_string(),
    ))
}

/// Smallest h(x,u) + h(y,u) over common upper bounds u.
pub fn up_down_distance(p: &Poset, x: ElementId, y: ElementId) -> Result<u32> {
    let bounds = p.common_upper_bounds(x, y);
    if bounds.is_empty() {
        return Err(PosetError::NoUpperBound(
            p.name(x).to_string(),
            p.name(y).to_string(),
        ));
    }
    bounds
        .into_iter()
        .map(|u| Ok(p.height(x, u)? + p.height(y, u)?))
        .collect::<Result<Vec<u32>>>()
        .map(|v| v.into_iter().min().unwrap())
}

/// Smallest h(u,x) + h(u,y) over common lower bounds u.
pub fn down_up_distance(p: &Poset, x: ElementId, y: ElementId) -> Result<u32> {
    let bounds = p.common_lower_bounds(x, y);
    if bounds.is_empty() {
        return Err(PosetError::NoLowerBound(
            p.name(x).to_string(),
            p.name(y).to_string(),
        ));
    }
    bounds
        .into_iter()
        .map(|u| Ok(p.height(u, x)? + p.height(u, y)?))
        .collect::<Result<Vec<u32>>>()
        .map(|v| v.into_iter().min().unwrap())
}

/// max[h(x, x∨y), h(y, x∨y)]; requires the join to exist.
pub fn chebyshev_distance(p: &Poset, x: ElementId, y: ElementId) -> Result<u32> {
    let j = p.join(x, y)?;
    Ok(p.height(x, j)?.max(p.height(y, j)?))
}

pub fn distance(p: &Poset, kind: DistanceKind, x: ElementId, y: ElementId) -> Result<u32> {
    match kind {
        DistanceKind::Zigzag => zigzag_distance(p, x, y),
        DistanceKind::UpDown => up_down_distance(p, x, y),
        DistanceKind::DownUp => down_up_distance(p, x, y),
        DistanceKind::Chebyshev => chebyshev_distance(p, x, y),
    }
}

/// Every maximal chain of the poset, bottom to top, in depth-first order from
/// the minimal elements (index-ascending at each branch).
pub fn maximal_chains(p: &Poset) -> Vec<Vec<ElementId>> {
    let mut out = Vec::new();
    for m in p.minimal_elements() {
        let mut chain = vec![m];
        extend_chains(p, &mut chain, &mut out);
    }
    out
}

fn extend_chains(p: &Poset, chain: &mut Vec<ElementId>, out: &mut Vec<Vec<ElementId>>) {
    let top = *chain.last().unwrap();
    let ups = p.upper_covers(top);
    if ups.is_empty() {
        out.push(chain.clone());
        return;
    }
    for u in ups {
        chain.push(u);
        extend_chains(p, chain, out);
        chain.pop();
    }
}

/// Maximal chains of the interval [lo,hi]: cover paths from lo to hi.
pub fn maximal_chains_in_interval(p: &Poset, lo: ElementId, hi: ElementId) -> Result<Vec<Vec<ElementId>>> {
    if !p.leq(lo, hi) {
        return Err(PosetError::NotComparable(
            p.name(lo).to_string(),
            p.name(hi).to_string(),
        ));
    }
    let mut out = Vec::new();
    let mut chain = vec![lo];
    fn go(p: &Poset, hi: ElementId, chain: &mut Vec<ElementId>, out: &mut Vec<Vec<ElementId>>) {
        let top = *chain.last().unwrap();
        if top == hi {
            out.push(chain.clone());
            return;
        }
        for u in p.upper_covers(top) {
            if p.leq(u, hi) {
                chain.push(u);
                go(p, hi, chain, out);
                chain.pop();
            }
        }
    }
    go(p, hi, &mut chain, &mut out);
    Ok(out)
}

/// First place where a distance fails to restrict to the natural chain
/// distance on some maximal chain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainViolation {
    pub chain: Vec<ElementId>,
    pub i: usize,
    pub j: usize,
    pub expected: u32,
    pub actual: u32,
}

/// Chain compatibility: on every maximal chain c0 ⋖ … ⋖ ck and all i,j,
/// d(ci,cj) = |i−j|. Returns the first violation, or None when compatible.
pub fn chain_compatibility(p: &Poset, kind: DistanceKind) -> Result<Option<ChainViolation>> {
    for chain in maximal_chains(p) {
        for i in 0..chain.len() {
            for j in i + 1..chain.len() {
                let actual = distance(p, kind, chain[i], chain[j])?;
                let expected = (j - i) as u32;
                if actual != expected {
                    return Ok(Some(ChainViolation { chain, i, j, expected, actual }));
                }
            }
        }
    }
    Ok(None)
}

pub fn is_chain_compatible(p: &Poset, kind: DistanceKind) -> Result<bool> {
    Ok(chain_compatibility(p, kind)?.is_none())
}

/// An ordered triple breaking the triangle inequality: d(x,z) > d(x,y) + d(y,z).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TriangleViolation {
    pub x: ElementId,
    pub y: ElementId,
    pub z: ElementId,
    pub lhs: u32,
    pub rhs: u32,
}

/// All ordered triples (x,y,z) with x≠z, y∉{x,z} violating the triangle
/// inequality, in index-lexicographic order. Empty iff the distance is a
/// metric on this poset. Errors with DistanceUndefined if any pair's
/// distance does not exist.
pub fn triangle_violations(p: &Poset, kind: DistanceKind) -> Result<Vec<TriangleViolation>> {
    let n = p.len();
    let mut d = vec![vec![0u32; n]; n];
    for x in p.elements() {
        for y in p.elements() {
            if x.index() < y.index() {
                let v = distance(p, kind, x, y).map_err(|_| {
                    PosetError::DistanceUndefined(p.name(x).to_string(), p.name(y).to_string())
                })?;
                d[x.index()][y.index()] = v;
                d[y.index()][x.index()] = v;
            }
        }
    }
    let mut out = Vec::new();
    for x in 0..n {
        for y in 0..n {
            if y == x {
                continue;
            }
            for z in 0..n {
                if z == x || z == y {
                    continue;
                }
                let lhs = d[x][z];
                let rhs = d[x][y] + d[y][z];
                if lhs > rhs {
                    out.push(TriangleViolation {
                        x: ElementId(x),
                        y: ElementId(y),
                        z: ElementId(z),
                        lhs,
                        rhs,
                    });
                }
            }
        }
    }
    Ok(out)
}

/// One row of the distance comparison table.
#[derive(Clone, Debug, Serialize)]
pub struct PairDistances {
    pub x: String,
    pub y: String,
    pub zigzag: u32,
    pub up_down: u32,
    pub chebyshev: Option<u32>,
}

/// Per-pair distance table with the pointwise order relations that held
/// across the whole poset. Only zigzag ≤ up-down is ever asserted elsewhere;
/// the other two directions are reported observations.
#[derive(Clone, Debug, Serialize)]
pub struct DistanceComparison {
    pub pairs: Vec<PairDistances>,
    pub zigzag_le_up_down: bool,
    pub chebyshev_le_up_down: bool,
    pub chebyshev_le_zigzag: bool,
    pub up_down_eq_zigzag: bool,
}

/// Requires the upper filtering property so that up-down is total.
pub fn compare_distances(p: &Poset) -> Result<DistanceComparison> {
    if !p.has_upper_filtering() {
        return Err(PosetError::NoUpperBound(String::new(), String::new()));
    }
    let mut pairs = Vec::new();
    let (mut zz_le_ud, mut cheb_le_ud, mut cheb_le_zz, mut ud_eq_zz) = (true, true, true, true);
    for x in p.elements() {
        for y in p.elements() {
            if x.index() >= y.index() {
                continue;
            }
            let zz = zigzag_distance(p, x, y)?;
            let ud = up_down_distance(p, x, y)?;
            let cheb = match chebyshev_distance(p, x, y) {
                Ok(v) => Some(v),
                Err(PosetError::NoLeastUpperBound(_, _)) => None,
                Err(e) => return Err(e),
            };
            zz_le_ud &= zz <= ud;
            ud_eq_zz &= zz == ud;
            if let Some(c) = cheb {
                cheb_le_ud &= c <= ud;
                cheb_le_zz &= c <= zz;
            }
            pairs.push(PairDistances {
                x: p.name(x).to_string(),
                y: p.name(y).to_string(),
                zigzag: zz,
                up_down: ud,
                chebyshev: cheb,
            });
        }
    }
    Ok(DistanceComparison {
        pairs,
        zigzag_le_up_down: zz_le_ud,
        chebyshev_le_up_down: cheb_le_ud,
        chebyshev_le_zigzag: cheb_le_zz,
        up_down_eq_zigzag: ud_eq_zz,
    })
}

/// Degrees of kinship between two members of a tree order (ancestors upward).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KinshipResult {
    pub ancestor: String,
    pub h_ego: u32,
    pub h_alter: u32,
    /// Sum of generations to the nearest common ancestor.
    pub civil: u32,
    /// Greater of the two generation counts.
    pub canon: u32,
}

pub fn kinship(p: &Poset, ego: ElementId, alter: ElementId) -> Result<KinshipResult> {
    if !p.is_tree_order() {
        return Err(PosetError::NotATreeOrder);
    }
    let ancestor = p.join(ego, alter)?;
    let h_ego = p.height(ego, ancestor)?;
    let h_alter = p.height(alter, ancestor)?;
    Ok(KinshipResult {
        ancestor: p.name(ancestor).to_string(),
        h_ego,
        h_alter,
        civil: h_ego + h_alter,
        canon: h_ego.max(h_alter),
    })
}
