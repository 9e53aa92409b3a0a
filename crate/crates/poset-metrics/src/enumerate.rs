//! Exhaustive, isomorphism-free enumeration of finite posets up to a size
//! cap, with a permutation-minimizing canonical code.

use std::str::FromStr;

use crate::bits::BitMatrix;
use crate::error::{PosetError, Result};
use crate::exec::map_ordered;
use crate::poset::{Poset, StructuralReport};

/// Hard cap on enumeration size; unlabeled poset counts grow too fast beyond
/// this for a desk-scale harness.
pub const SIZE_CAP: usize = 8;

/// Byte string identifying a poset's isomorphism class: P ≅ Q iff their
/// codes are equal.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CanonicalCode(pub Vec<u8>);

impl CanonicalCode {
    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }
}

/// Vertex invariant cells: isomorphism-invariant ordered partition used to
/// prune the permutation search. Refined from (|down|, |up|, cover degrees)
/// by neighbor-multiset propagation until stable.
fn invariant_cells(closure: &BitMatrix, cover: &BitMatrix) -> Vec<Vec<usize>> {
    let n = closure.size();
    let cover_t = cover.transpose();
    let closure_t = closure.transpose();
    let mut inv: Vec<Vec<u64>> = (0..n)
        .map(|v| {
            vec![
                closure_t.row_count_ones(v) as u64,
                closure.row_count_ones(v) as u64,
                cover_t.row_count_ones(v) as u64,
                cover.row_count_ones(v) as u64,
            ]
        })
        .collect();
    loop {
        let rank = rank_of(&inv);
        let next: Vec<Vec<u64>> = (0..n)
            .map(|v| {
                let mut key = vec![rank[v]];
                let mut ups: Vec<u64> = cover.iter_row(v).map(|u| rank[u]).collect();
                ups.sort_unstable();
                key.push(u64::MAX); // separator
                key.extend(ups);
                let mut downs: Vec<u64> = cover_t.iter_row(v).map(|u| rank[u]).collect();
                downs.sort_unstable();
                key.push(u64::MAX);
                key.extend(downs);
                key
            })
            .collect();
        let next_rank = rank_of(&next);
        if next_rank == rank {
            let mut cells: Vec<(u64, Vec<usize>)> = Vec::new();
            let mut order: Vec<usize> = (0..n).collect();
            order.sort_by_key(|&v| (rank[v], v));
            for v in order {
                match cells.last_mut() {
                    Some((r, cell)) if *r == rank[v] => cell.push(v),
                    _ => cells.push((rank[v], vec![v])),
                }
            }
            return cells.into_iter().map(|(_, c)| c).collect();
        }
        inv = next;
    }
}

fn rank_of(inv: &[Vec<u64>]) -> Vec<u64> {
    let mut sorted: Vec<&Vec<u64>> = inv.iter().collect();
    sorted.sort();
    sorted.dedup();
    inv.iter()
        .map(|k| sorted.binary_search(&k).unwrap() as u64)
        .collect()
}

/// Pack the closure matrix under a vertex relabeling into code bytes:
/// element count, then row-major bits in the new order.
fn encode(closure: &BitMatrix, orig_of_pos: &[usize]) -> Vec<u8> {
    let n = closure.size();
    let mut bytes = vec![n as u8];
    let mut acc = 0u8;
    let mut used = 0;
    for &r in orig_of_pos {
        for &c in orig_of_pos {
            acc = acc << 1 | closure.get(r, c) as u8;
            used += 1;
            if used == 8 {
                bytes.push(acc);
                acc = 0;
                used = 0;
            }
        }
    }
    if used > 0 {
        bytes.push(acc << (8 - used));
    }
    bytes
}

/// Canonical code plus the canonically relabeled closure matrix.
fn canonical_form(closure: &BitMatrix, cover: &BitMatrix) -> (CanonicalCode, BitMatrix) {
    let n = closure.size();
    let cells = invariant_cells(closure, cover);
    let mut best: Option<(Vec<u8>, Vec<usize>)> = None;
    let mut assignment: Vec<usize> = Vec::with_capacity(n);
    search_perms(closure, &cells, 0, &mut assignment, &mut best);
    let (code, orig_of_pos) = best.expect("at least one permutation");
    let mut canon = BitMatrix::new(n);
    for (p, &r) in orig_of_pos.iter().enumerate() {
        for (q, &c) in orig_of_pos.iter().enumerate() {
            if closure.get(r, c) {
                canon.set(p, q, true);
            }
        }
    }
    (CanonicalCode(code), canon)
}

fn search_perms(
    closure: &BitMatrix,
    cells: &[Vec<usize>],
    cell_idx: usize,
    assignment: &mut Vec<usize>,
    best: &mut Option<(Vec<u8>, Vec<usize>)>,
) {
    if cell_idx == cells.len() {
        let code = encode(closure, assignment);
        if best.as_ref().map_or(true, |(b, _)| code < *b) {
            *best = Some((code, assignment.clone()));
        }
        return;
    }
    let cell = &cells[cell_idx];
    let mut perm = cell.clone();
    permute_all(&mut perm, 0, &mut |p| {
        assignment.extend_from_slice(p);
        search_perms(closure, cells, cell_idx + 1, assignment, best);
        assignment.truncate(assignment.len() - p.len());
    });
}

fn permute_all(items: &mut [usize], k: usize, f: &mut impl FnMut(&[usize])) {
    if k == items.len() {
        f(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute_all(items, k + 1, f);
        items.swap(k, i);
    }
}

/// Permutation-invariant identifier of `p`'s isomorphism class.
pub fn canonical_code(p: &Poset) -> CanonicalCode {
    let cover = transitive_reduction(p.closure_matrix());
    canonical_form(p.closure_matrix(), &cover).0
}

fn transitive_reduction(closure: &BitMatrix) -> BitMatrix {
    let n = closure.size();
    let mut cover = BitMatrix::new(n);
    for x in 0..n {
        let above: Vec<usize> = closure.iter_row(x).filter(|&y| y != x).collect();
        for &y in &above {
            if !above.iter().any(|&z| z != y && closure.get(z, y)) {
                cover.set(x, y, true);
            }
        }
    }
    cover
}

fn element_names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("e{i}")).collect()
}

/// Down-closed subsets of the poset given by `closure`, as bit masks,
/// ascending.
fn order_ideals(closure: &BitMatrix) -> Vec<u64> {
    let n = closure.size();
    let down_masks: Vec<u64> = (0..n)
        .map(|v| (0..n).filter(|&u| closure.get(u, v)).fold(0u64, |m, u| m | 1 << u))
        .collect();
    (0..1u64 << n)
        .filter(|&s| (0..n).all(|v| s >> v & 1 == 0 || down_masks[v] & !s == 0))
        .collect()
}

/// All isomorphism classes of posets on 1..=n elements, one canonical
/// representative each, grouped by size and sorted by canonical code.
///
/// Each poset on k+1 elements has a maximal element whose removal leaves a
/// k-element poset and whose strict down-set is an order ideal of it, so
/// extending every representative by every ideal and rejecting duplicate
/// canonical codes is complete.
pub fn enumerate_up_to(n: usize, jobs: usize) -> Result<Vec<Vec<Poset>>> {
    if n < 1 || n > SIZE_CAP {
        return Err(PosetError::SizeCapExceeded(n, SIZE_CAP));
    }
    let mut levels: Vec<Vec<Poset>> = Vec::with_capacity(n);
    let mut one = BitMatrix::new(1);
    one.set(0, 0, true);
    levels.push(vec![Poset::from_closure(element_names(1), one)?]);
    for k in 1..n {
        let reps: Vec<&Poset> = levels[k - 1].iter().collect();
        let batches = map_ordered(reps, jobs, |p| {
            let closure = p.closure_matrix();
            let mut out: Vec<(CanonicalCode, BitMatrix)> = Vec::new();
            for ideal in order_ideals(closure) {
                let mut ext = BitMatrix::new(k + 1);
                for r in 0..k {
                    for c in closure.iter_row(r) {
                        ext.set(r, c, true);
                    }
                }
                ext.set(k, k, true);
                for d in 0..k {
                    if ideal >> d & 1 == 1 {
                        ext.set(d, k, true);
                    }
                }
                let cover = transitive_reduction(&ext);
                out.push(canonical_form(&ext, &cover));
            }
            out
        });
        let mut all: Vec<(CanonicalCode, BitMatrix)> = batches.into_iter().flatten().collect();
        all.sort_by(|a, b| a.0.cmp(&b.0));
        all.dedup_by(|a, b| a.0 == b.0);
        let level = all
            .into_iter()
            .map(|(_, m)| Poset::from_closure(element_names(k + 1), m))
            .collect::<Result<Vec<Poset>>>()?;
        levels.push(level);
    }
    Ok(levels)
}

/// Exactly one representative per isomorphism class of n-element posets
/// passing the filter, in ascending canonical-code order.
pub fn enumerate_posets(n: usize, filter: &PosetFilter, jobs: usize) -> Result<Vec<Poset>> {
    let mut levels = enumerate_up_to(n, jobs)?;
    let last = levels.pop().expect("n >= 1");
    if filter.is_empty() {
        return Ok(last);
    }
    let keep = map_ordered(last.iter().collect::<Vec<_>>(), jobs, |p| {
        filter.accepts(&p.structural_report())
    });
    Ok(last
        .into_iter()
        .zip(keep)
        .filter_map(|(p, k)| k.then_some(p))
        .collect())
}

/// Structural predicate named in a filter.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ReportField {
    Connected,
    UpperFiltering,
    LowerFiltering,
    JoinSemilattice,
    Lattice,
    TreeOrder,
    Semimodular,
    JordanDedekind,
}

impl ReportField {
    fn of(self, r: &StructuralReport) -> bool {
        match self {
            ReportField::Connected => r.connected,
            ReportField::UpperFiltering => r.upper_filtering,
            ReportField::LowerFiltering => r.lower_filtering,
            ReportField::JoinSemilattice => r.join_semilattice,
            ReportField::Lattice => r.lattice,
            ReportField::TreeOrder => r.tree_order,
            ReportField::Semimodular => r.semimodular,
            ReportField::JordanDedekind => r.jordan_dedekind,
        }
    }
}

impl FromStr for ReportField {
    type Err = PosetError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "connected" => Ok(ReportField::Connected),
            "upper_filtering" => Ok(ReportField::UpperFiltering),
            "lower_filtering" => Ok(ReportField::LowerFiltering),
            "join_semilattice" => Ok(ReportField::JoinSemilattice),
            "lattice" => Ok(ReportField::Lattice),
            "tree_order" => Ok(ReportField::TreeOrder),
            "semimodular" => Ok(ReportField::Semimodular),
            "jordan_dedekind" => Ok(ReportField::JordanDedekind),
            other => Err(PosetError::InvalidParameter(format!(
                "unknown predicate `{other}`"
            ))),
        }
    }
}

/// Conjunction of required predicate values; empty accepts everything.
/// Parsed from comma-separated names, `!` prefix for negation, e.g.
/// `join_semilattice,!semimodular`.
#[derive(Clone, Debug, Default)]
pub struct PosetFilter {
    required: Vec<(ReportField, bool)>,
}

impl PosetFilter {
    pub fn empty() -> Self {
        PosetFilter::default()
    }

    pub fn require(mut self, field: ReportField, value: bool) -> Self {
        self.required.push((field, value));
        self
    }

    pub fn is_empty(&self) -> bool {
        self.required.is_empty()
    }

    pub fn accepts(&self, report: &StructuralReport) -> bool {
        self.required.iter().all(|&(f, v)| f.of(report) == v)
    }
}

impl FromStr for PosetFilter {
    type Err = PosetError;

    fn from_str(s: &str) -> Result<Self> {
        let mut filter = PosetFilter::empty();
        for part in s.split(',').filter(|p| !p.is_empty()) {
            let (value, name) = match part.strip_prefix('!') {
                Some(rest) => (false, rest),
                None => (true, part),
            };
            filter = filter.require(name.parse()?, value);
        }
        Ok(filter)
    }
}
