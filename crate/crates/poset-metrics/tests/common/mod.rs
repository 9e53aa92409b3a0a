//! Independent brute-force oracles shared by the integration suites.
//!
//! Nothing here touches the library's enumeration or canonical coding: poset
//! classes are generated by direct relation-assignment enumeration and
//! deduplicated by full-permutation minimization.

use poset_metrics::poset::Poset;

/// All permutations of 0..n.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
        if k == items.len() {
            out.push(items.clone());
            return;
        }
        for i in k..items.len() {
            items.swap(k, i);
            go(items, k + 1, out);
            items.swap(k, i);
        }
    }
    let mut items: Vec<usize> = (0..n).collect();
    let mut out = Vec::new();
    go(&mut items, 0, &mut out);
    out
}

/// Minimum over all permutations of the strict relation packed into a u64
/// (bit p[a]*n + p[b] for each a < b in the order). Identifies the
/// isomorphism class for n <= 8.
pub fn min_perm_key(n: usize, strict: &[Vec<bool>], perms: &[Vec<usize>]) -> u64 {
    let mut best = u64::MAX;
    for p in perms {
        let mut bits = 0u64;
        for a in 0..n {
            for b in 0..n {
                if strict[a][b] {
                    bits |= 1 << (p[a] * n + p[b]);
                }
            }
        }
        best = best.min(bits);
    }
    best
}

fn is_transitive(n: usize, rel: &[Vec<bool>]) -> bool {
    for a in 0..n {
        for b in 0..n {
            if !rel[a][b] {
                continue;
            }
            for c in 0..n {
                if rel[b][c] && !rel[a][c] {
                    return false;
                }
            }
        }
    }
    true
}

/// Isomorphism classes of n-element posets by ternary assignment over
/// unordered pairs (<, >, or incomparable) with a transitivity check.
/// Returns the sorted class keys. Feasible for n <= 5.
pub fn oracle_classes_ternary(n: usize) -> Vec<u64> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let perms = permutations(n);
    let mut keys = std::collections::BTreeSet::new();
    let total = 3usize.pow(pairs.len() as u32);
    for code in 0..total {
        let mut rel = vec![vec![false; n]; n];
        let mut c = code;
        for &(i, j) in &pairs {
            match c % 3 {
                1 => rel[i][j] = true,
                2 => rel[j][i] = true,
                _ => {}
            }
            c /= 3;
        }
        if is_transitive(n, &rel) {
            keys.insert(min_perm_key(n, &rel, &perms));
        }
    }
    keys.into_iter().collect()
}

/// Count of isomorphism classes via upper-triangular binary relation
/// matrices (every finite poset has a linear extension, so every class has a
/// naturally labeled representative). Feasible for n <= 6.
pub fn oracle_class_count_upper_triangular(n: usize) -> usize {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let perms = permutations(n);
    let mut keys = std::collections::HashSet::new();
    for mask in 0u64..1 << pairs.len() {
        let mut rel = vec![vec![false; n]; n];
        for (b, &(i, j)) in pairs.iter().enumerate() {
            if mask >> b & 1 == 1 {
                rel[i][j] = true;
            }
        }
        if is_transitive(n, &rel) {
            keys.insert(min_perm_key(n, &rel, &perms));
        }
    }
    keys.len()
}

/// The oracle's class key for a library poset, for class-for-class
/// comparison against oracle output.
pub fn key_of_poset(p: &Poset, perms: &[Vec<usize>]) -> u64 {
    let n = p.len();
    let mut strict = vec![vec![false; n]; n];
    for x in p.elements() {
        for y in p.elements() {
            if x != y && p.leq(x, y) {
                strict[x.index()][y.index()] = true;
            }
        }
    }
    min_perm_key(n, &strict, perms)
}
