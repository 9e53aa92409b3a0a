//! Finite partially ordered sets: construction, closure/reduction, intervals,
//! heights, joins, duality, and the structural predicates.

use std::collections::HashMap;

use serde::Serialize;

use crate::bits::BitMatrix;
use crate::error::{PosetError, Result};

/// Index of an element within a particular [`Poset`].
///
/// Ids are only meaningful for the poset that produced them. Names are the
/// stable identity; indices give deterministic output ordering.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ElementId(pub(crate) usize);

impl ElementId {
    pub fn index(self) -> usize {
        self.0
    }
}

/// An immutable finite order: elements, the cover relation, and its
/// reflexive-transitive closure. All maximal chains are finite by
/// construction, so every interval behaves discretely.
#[derive(Clone, Debug)]
pub struct Poset {
    names: Vec<String>,
    by_name: HashMap<String, usize>,
    closure: BitMatrix,
    closure_t: BitMatrix,
    cover: BitMatrix,
    cover_t: BitMatrix,
    topo: Vec<usize>,
}

fn validate_name(name: &str) -> Result<()> {
    if name.is_empty() || name.contains(char::is_whitespace) || name.contains('#') {
        return Err(PosetError::EmptyName);
    }
    Ok(())
}

/// Build a poset from arbitrary strict-order pairs plus isolated elements.
///
/// The pairs need not be covers; the builder computes the reflexive-transitive
/// closure and then the transitive reduction. Element order is first-mention
/// order, isolated declarations last.
pub fn build_poset<S: AsRef<str>>(relations: &[(S, S)], isolated: &[S]) -> Result<Poset> {
    let mut names: Vec<String> = Vec::new();
    let mut by_name: HashMap<String, usize> = HashMap::new();
    let intern = |name: &str, names: &mut Vec<String>, by_name: &mut HashMap<String, usize>| -> Result<usize> {
        validate_name(name)?;
        if let Some(&i) = by_name.get(name) {
            return Ok(i);
        }
        let i = names.len();
        names.push(name.to_string());
        by_name.insert(name.to_string(), i);
        Ok(i)
    };

    let mut pairs = Vec::with_capacity(relations.len());
    for (a, b) in relations {
        let i = intern(a.as_ref(), &mut names, &mut by_name)?;
        let j = intern(b.as_ref(), &mut names, &mut by_name)?;
        pairs.push((i, j));
    }
    for name in isolated {
        validate_name(name.as_ref())?;
        if by_name.contains_key(name.as_ref()) {
            return Err(PosetError::DuplicateElement(name.as_ref().to_string()));
        }
        intern(name.as_ref(), &mut names, &mut by_name)?;
    }

    let n = names.len();
    let mut closure = BitMatrix::new(n);
    for i in 0..n {
        closure.set(i, i, true);
    }
    for &(i, j) in &pairs {
        if i == j {
            return Err(PosetError::CycleDetected(names[i].clone()));
        }
        closure.set(i, j, true);
    }
    // Warshall
    for k in 0..n {
        for i in 0..n {
            if closure.get(i, k) {
                closure.or_row_into(i, k);
            }
        }
    }
    for i in 0..n {
        for j in closure.iter_row(i) {
            if i != j && closure.get(j, i) {
                return Err(PosetError::CycleDetected(names[i].clone()));
            }
        }
    }
    Poset::from_parts(names, by_name, closure)
}

impl Poset {
    pub(crate) fn from_closure(names: Vec<String>, closure: BitMatrix) -> Result<Poset> {
        let by_name = names
            .iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), i))
            .collect();
        Poset::from_parts(names, by_name, closure)
    }

    fn from_parts(names: Vec<String>, by_name: HashMap<String, usize>, closure: BitMatrix) -> Result<Poset> {
        let n = names.len();
        // cover = transitive reduction: y covers x iff x<y with nothing between
        let mut cover = BitMatrix::new(n);
        for x in 0..n {
            let above: Vec<usize> = closure.iter_row(x).filter(|&y| y != x).collect();
            for &y in &above {
                let between = above
                    .iter()
                    .any(|&z| z != y && closure.get(z, y) && z != x);
                if !between {
                    cover.set(x, y, true);
                }
            }
        }
        let mut topo: Vec<usize> = (0..n).collect();
        topo.sort_by_key(|&i| (closure.row_count_ones(i), i));
        // sorting by up-set size descending puts lower elements first
        topo.reverse();
        let closure_t = closure.transpose();
        let cover_t = cover.transpose();
        Ok(Poset {
            names,
            by_name,
            closure,
            closure_t,
            cover,
            cover_t,
            topo,
        })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn elements(&self) -> impl Iterator<Item = ElementId> {
        (0..self.len()).map(ElementId)
    }

    pub fn name(&self, x: ElementId) -> &str {
        &self.names[x.0]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn element(&self, name: &str) -> Result<ElementId> {
        self.by_name
            .get(name)
            .map(|&i| ElementId(i))
            .ok_or_else(|| PosetError::UnknownElement(name.to_string()))
    }

    /// x ≤ y in the order closure.
    pub fn leq(&self, x: ElementId, y: ElementId) -> bool {
        self.closure.get(x.0, y.0)
    }

    pub fn lt(&self, x: ElementId, y: ElementId) -> bool {
        x != y && self.leq(x, y)
    }

    pub fn covers(&self, x: ElementId, y: ElementId) -> bool {
        self.cover.get(x.0, y.0)
    }

    /// Cover pairs (lower, upper) in index order.
    pub fn cover_pairs(&self) -> Vec<(ElementId, ElementId)> {
        let mut out = Vec::new();
        for x in 0..self.len() {
            for y in self.cover.iter_row(x) {
                out.push((ElementId(x), ElementId(y)));
            }
        }
        out
    }

    pub fn cover_edge_count(&self) -> usize {
        (0..self.len()).map(|x| self.cover.row_count_ones(x) as usize).sum()
    }

    /// Elements covering x, ascending.
    pub fn upper_covers(&self, x: ElementId) -> Vec<ElementId> {
        self.cover.iter_row(x.0).map(ElementId).collect()
    }

    /// Elements covered by x, ascending.
    pub fn lower_covers(&self, x: ElementId) -> Vec<ElementId> {
        self.cover_t.iter_row(x.0).map(ElementId).collect()
    }

    /// { z : x ≤ z }
    pub fn up_set(&self, x: ElementId) -> Vec<ElementId> {
        self.closure.iter_row(x.0).map(ElementId).collect()
    }

    /// { z : z ≤ x }
    pub fn down_set(&self, x: ElementId) -> Vec<ElementId> {
        self.closure_t.iter_row(x.0).map(ElementId).collect()
    }

    /// The interval [x,y] = { z : x ≤ z ≤ y }. Requires x ≤ y.
    pub fn interval(&self, x: ElementId, y: ElementId) -> Result<Vec<ElementId>> {
        if !self.leq(x, y) {
            return Err(PosetError::NotComparable(
                self.name(x).to_string(),
                self.name(y).to_string(),
            ));
        }
        Ok(self
            .closure
            .iter_row(x.0)
            .filter(|&z| self.closure.get(z, y.0))
            .map(ElementId)
            .collect())
    }

    /// Height of one comparable element above the other: the least cardinality
    /// of a maximal chain of [lo,hi], minus one. Symmetric in its arguments.
    ///
    /// Maximal chains of [lo,hi] are exactly the cover paths from lo to hi,
    /// so this is an unweighted shortest path in the cover digraph.
    pub fn height(&self, x: ElementId, y: ElementId) -> Result<u32> {
        let (lo, hi) = if self.leq(x, y) {
            (x, y)
        } else if self.leq(y, x) {
            (y, x)
        } else {
            return Err(PosetError::NotComparable(
                self.name(x).to_string(),
                self.name(y).to_string(),
            ));
        };
        Ok(self.shortest_cover_path_len(lo, hi).expect("comparable pair has a cover path"))
    }

    /// BFS over directed cover edges from lo; None if hi unreachable.
    fn shortest_cover_path_len(&self, lo: ElementId, hi: ElementId) -> Option<u32> {
        if lo == hi {
            return Some(0);
        }
        let n = self.len();
        let mut dist = vec![u32::MAX; n];
        dist[lo.0] = 0;
        let mut queue = std::collections::VecDeque::from([lo.0]);
        while let Some(v) = queue.pop_front() {
            for w in self.cover.iter_row(v) {
                if dist[w] == u32::MAX {
                    dist[w] = dist[v] + 1;
                    if w == hi.0 {
                        return Some(dist[w]);
                    }
                    queue.push_back(w);
                }
            }
        }
        None
    }

    /// Length of the longest cover path from lo to hi (the largest maximal
    /// chain of [lo,hi], minus one). Requires lo ≤ hi.
    pub fn longest_chain_len(&self, lo: ElementId, hi: ElementId) -> Result<u32> {
        if !self.leq(lo, hi) {
            return Err(PosetError::NotComparable(
                self.name(lo).to_string(),
                self.name(hi).to_string(),
            ));
        }
        let mut best = vec![None::<u32>; self.len()];
        best[lo.0] = Some(0);
        for &v in &self.topo {
            let Some(d) = best[v] else { continue };
            if !self.closure.get(v, hi.0) {
                continue;
            }
            for w in self.cover.iter_row(v) {
                if self.closure.get(w, hi.0) && best[w].map_or(true, |b| b < d + 1) {
                    best[w] = Some(d + 1);
                }
            }
        }
        Ok(best[hi.0].expect("comparable pair has a cover path"))
    }

    /// Least common upper bound, when it exists.
    pub fn join(&self, x: ElementId, y: ElementId) -> Result<ElementId> {
        let common = self.closure.row_intersection(x.0, y.0);
        if common.is_empty() {
            return Err(PosetError::NoUpperBound(
                self.name(x).to_string(),
                self.name(y).to_string(),
            ));
        }
        for &u in &common {
            if common.iter().all(|&v| self.closure.get(u, v)) {
                return Ok(ElementId(u));
            }
        }
        Err(PosetError::NoLeastUpperBound(
            self.name(x).to_string(),
            self.name(y).to_string(),
        ))
    }

    /// Greatest common lower bound, when it exists.
    pub fn meet(&self, x: ElementId, y: ElementId) -> Result<ElementId> {
        let common = self.closure_t.row_intersection(x.0, y.0);
        if common.is_empty() {
            return Err(PosetError::NoLowerBound(
                self.name(x).to_string(),
                self.name(y).to_string(),
            ));
        }
        for &u in &common {
            if common.iter().all(|&v| self.closure.get(v, u)) {
                return Ok(ElementId(u));
            }
        }
        Err(PosetError::NoLeastUpperBound(
            self.name(x).to_string(),
            self.name(y).to_string(),
        ))
    }

    pub fn common_upper_bounds(&self, x: ElementId, y: ElementId) -> Vec<ElementId> {
        self.closure.row_intersection(x.0, y.0).into_iter().map(ElementId).collect()
    }

    pub fn common_lower_bounds(&self, x: ElementId, y: ElementId) -> Vec<ElementId> {
        self.closure_t.row_intersection(x.0, y.0).into_iter().map(ElementId).collect()
    }

    pub fn minimal_elements(&self) -> Vec<ElementId> {
        self.elements()
            .filter(|&x| self.cover_t.row_count_ones(x.0) == 0)
            .collect()
    }

    pub fn maximal_elements(&self) -> Vec<ElementId> {
        self.elements()
            .filter(|&x| self.cover.row_count_ones(x.0) == 0)
            .collect()
    }

    /// Same elements, reversed order.
    pub fn dual(&self) -> Poset {
        let n = self.len();
        let mut topo = self.topo.clone();
        topo.reverse();
        Poset {
            names: self.names.clone(),
            by_name: self.by_name.clone(),
            closure: self.closure_t.clone(),
            closure_t: self.closure.clone(),
            cover: self.cover_t.clone(),
            cover_t: self.cover.clone(),
            topo: if n == 0 { vec![] } else { topo },
        }
    }

    pub(crate) fn closure_matrix(&self) -> &BitMatrix {
        &self.closure
    }

    // ----- structural predicates -----

    /// Connectedness of the (undirected) Hasse diagram.
    pub fn is_connected(&self) -> bool {
        let n = self.len();
        if n <= 1 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for w in self.cover.iter_row(v).chain(self.cover_t.iter_row(v)) {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == n
    }

    /// Every pair of elements has a common upper bound.
    pub fn has_upper_filtering(&self) -> bool {
        let n = self.len();
        (0..n).all(|x| (x..n).all(|y| self.closure.rows_intersect(x, y)))
    }

    pub fn has_lower_filtering(&self) -> bool {
        let n = self.len();
        (0..n).all(|x| (x..n).all(|y| self.closure_t.rows_intersect(x, y)))
    }

    pub fn is_join_semilattice(&self) -> bool {
        let n = self.len();
        (0..n).all(|x| {
            (x + 1..n).all(|y| self.join(ElementId(x), ElementId(y)).is_ok())
        })
    }

    pub fn is_meet_semilattice(&self) -> bool {
        self.dual().is_join_semilattice()
    }

    pub fn is_lattice(&self) -> bool {
        self.is_join_semilattice() && self.is_meet_semilattice()
    }

    /// Tree order: uncomparable pairs always have a join and never a common
    /// lower bound.
    pub fn is_tree_order(&self) -> bool {
        if !self.is_join_semilattice() {
            return false;
        }
        let n = self.len();
        (0..n).all(|x| {
            (x + 1..n).all(|y| {
                self.closure.get(x, y)
                    || self.closure.get(y, x)
                    || !self.closure_t.rows_intersect(x, y)
            })
        })
    }

    /// Cover form of semimodularity: whenever some z is covered by both x and
    /// y, the join x∨y covers both x and y.
    pub fn is_semimodular_cover(&self) -> Result<bool> {
        if !self.is_join_semilattice() {
            return Err(PosetError::NotAJoinSemilattice);
        }
        let n = self.len();
        for x in 0..n {
            for y in x + 1..n {
                if !self.cover_t.rows_intersect(x, y) {
                    continue;
                }
                let j = self.join(ElementId(x), ElementId(y))?;
                if !self.cover.get(x, j.0) || !self.cover.get(y, j.0) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Height form of semimodularity, stated one-sidedly: whenever x and y
    /// have a common lower bound z, h(x, x∨y) ≤ h(z, y).
    pub fn is_semimodular_height(&self) -> Result<bool> {
        if !self.is_join_semilattice() {
            return Err(PosetError::NotAJoinSemilattice);
        }
        let n = self.len();
        for x in 0..n {
            for y in 0..n {
                let lows = self.closure_t.row_intersection(x, y);
                if lows.is_empty() {
                    continue;
                }
                let j = self.join(ElementId(x), ElementId(y))?;
                let hx = self.height(ElementId(x), j)?;
                for z in lows {
                    if hx > self.height(ElementId(z), ElementId(y))? {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// Both directions of the height form at once: h(x,x∨y) ≤ h(z,y) and
    /// h(y,x∨y) ≤ h(z,x). Agrees with [`Self::is_semimodular_height`] because
    /// the one-sided condition already quantifies over all ordered pairs.
    pub fn is_semimodular_height_symmetric(&self) -> Result<bool> {
        if !self.is_join_semilattice() {
            return Err(PosetError::NotAJoinSemilattice);
        }
        let n = self.len();
        for x in 0..n {
            for y in 0..n {
                let lows = self.closure_t.row_intersection(x, y);
                if lows.is_empty() {
                    continue;
                }
                let j = self.join(ElementId(x), ElementId(y))?;
                let hx = self.height(ElementId(x), j)?;
                let hy = self.height(ElementId(y), j)?;
                for z in lows {
                    if hx > self.height(ElementId(z), ElementId(y))?
                        || hy > self.height(ElementId(z), ElementId(x))?
                    {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// Jordan–Dedekind chain condition: in every interval, all maximal chains
    /// have the same cardinality. Equivalent to shortest and longest cover
    /// paths agreeing for every comparable pair.
    pub fn is_jordan_dedekind(&self) -> bool {
        for x in self.elements() {
            for y in self.up_set(x) {
                if x == y {
                    continue;
                }
                let short = self.height(x, y).expect("comparable");
                let long = self.longest_chain_len(x, y).expect("comparable");
                if short != long {
                    return false;
                }
            }
        }
        true
    }

    pub fn structural_report(&self) -> StructuralReport {
        let join_semilattice = self.is_join_semilattice();
        let semimodular = join_semilattice && self.is_semimodular_cover().unwrap_or(false);
        StructuralReport {
            connected: self.is_connected(),
            upper_filtering: self.has_upper_filtering(),
            lower_filtering: self.has_lower_filtering(),
            join_semilattice,
            lattice: join_semilattice && self.is_meet_semilattice(),
            tree_order: self.is_tree_order(),
            semimodular,
            jordan_dedekind: self.is_jordan_dedekind(),
            element_count: self.len(),
            cover_edge_count: self.cover_edge_count(),
        }
    }
}

/// Predicate vector for one poset.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct StructuralReport {
    pub connected: bool,
    pub upper_filtering: bool,
    pub lower_filtering: bool,
    pub join_semilattice: bool,
    pub lattice: bool,
    pub tree_order: bool,
    pub semimodular: bool,
    pub jordan_dedekind: bool,
    pub element_count: usize,
    pub cover_edge_count: usize,
}
