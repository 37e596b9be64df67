//! Exact oracles for small graphs, used to cross-check the heuristics.

use super::UGraph;
use crate::error::GraphError;

pub const CUTSET_EXACT_LIMIT: usize = 20;
pub const TREEWIDTH_EXACT_LIMIT: usize = 10;

fn masks(g: &UGraph) -> Vec<u32> {
    (0..g.len())
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | (1 << w)))
        .collect()
}

/// Whether the subgraph induced by `keep` is acyclic.
fn acyclic_on(adj: &[u32], keep: u32) -> bool {
    // edges = vertices - components  <=>  forest
    let mut nodes = 0u32;
    let mut edges = 0u32;
    let mut comps = 0u32;
    let mut unseen = keep;
    while unseen != 0 {
        comps += 1;
        let mut frontier = unseen & unseen.wrapping_neg();
        let mut comp = frontier;
        while frontier != 0 {
            let mut next = 0;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= adj[v] & keep;
            }
            frontier = next & !comp;
            comp |= next;
        }
        unseen &= !comp;
    }
    let mut k = keep;
    while k != 0 {
        let v = k.trailing_zeros() as usize;
        k &= k - 1;
        nodes += 1;
        edges += (adj[v] & keep).count_ones();
    }
    edges / 2 == nodes - comps
}

/// Minimum feedback vertex set by enumerating subsets in increasing size.
/// Returns the lexicographically first minimum set, sorted.
pub fn cutset_exact(g: &UGraph) -> Result<Vec<usize>, GraphError> {
    let n = g.len();
    if n > CUTSET_EXACT_LIMIT {
        return Err(GraphError::TooLarge {
            nodes: n,
            limit: CUTSET_EXACT_LIMIT,
        });
    }
    let adj = masks(g);
    let all: u32 = if n == 0 { 0 } else { (1u32 << n) - 1 };
    for k in 0..=n {
        let mut best: Option<u32> = None;
        for_each_subset_of_size(n, k, |s| {
            if best.is_none() && acyclic_on(&adj, all & !s) {
                best = Some(s);
            }
        });
        if let Some(s) = best {
            return Ok((0..n).filter(|&v| s & (1 << v) != 0).collect());
        }
    }
    unreachable!("removing every node leaves an empty forest")
}

/// Visit all `k`-subsets of `0..n` in lexicographic order of their members.
fn for_each_subset_of_size(n: usize, k: usize, mut f: impl FnMut(u32)) {
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(idx.iter().fold(0u32, |m, &i| m | (1 << i)));
        let mut i = k;
        while i > 0 && idx[i - 1] == n - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return;
        }
        idx[i - 1] += 1;
        for j in i..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Exact treewidth: the minimum induced width over all orderings.
///
/// Uses the subset recurrence `TW(S) = min_v max(TW(S - v), Q(S - v, v))`,
/// where `Q(S, v)` counts nodes outside `S + v` reachable from `v` through
/// `S`. This equals the minimum over all `n!` orderings.
pub fn treewidth_exact(g: &UGraph) -> Result<usize, GraphError> {
    let n = g.len();
    if n > TREEWIDTH_EXACT_LIMIT {
        return Err(GraphError::TooLarge {
            nodes: n,
            limit: TREEWIDTH_EXACT_LIMIT,
        });
    }
    if n == 0 {
        return Ok(0);
    }
    let adj = masks(g);
    let full = (1usize << n) - 1;
    let q = |s: u32, v: usize| -> u32 {
        // flood from v through s
        let mut reach = 1u32 << v;
        let mut frontier = reach;
        let mut out = 0u32;
        while frontier != 0 {
            let mut next = 0u32;
            let mut f = frontier;
            while f != 0 {
                let x = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= adj[x];
            }
            next &= !reach;
            out |= next & !s;
            frontier = next & s;
            reach |= next;
        }
        (out & !(1 << v)).count_ones()
    };
    let mut tw = vec![u32::MAX; full + 1];
    tw[0] = 0;
    for s in 1..=full {
        let mut best = u32::MAX;
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let prev = s & !(1 << v);
            let cand = tw[prev].max(q(prev as u32, v));
            best = best.min(cand);
        }
        tw[s] = best;
    }
    Ok(tw[full] as usize)
}
