use super::UGraph;

/// Maximum cardinality search visit order: each step picks the unvisited
/// node with the most visited neighbours, lowest id on ties.
pub fn mcs_order(g: &UGraph) -> Vec<usize> {
    let n = g.len();
    // Bucket queue keyed by weight; stale entries are skipped on pop.
    let mut weight = vec![0usize; n];
    let mut visited = vec![false; n];
    let mut buckets: Vec<std::collections::BTreeSet<usize>> = vec![Default::default(); n + 1];
    buckets[0].extend(0..n);
    let mut top = 0;
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        while buckets[top].is_empty() {
            top -= 1;
        }
        let v = buckets[top].pop_first().expect("non-empty bucket");
        visited[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            if !visited[w] {
                buckets[weight[w]].remove(&w);
                weight[w] += 1;
                buckets[weight[w]].insert(w);
                top = top.max(weight[w]);
            }
        }
    }
    order
}

/// True when every node's earlier neighbours (under `order`, first to last)
/// are pairwise adjacent, i.e. eliminating last to first adds no fill.
pub fn is_perfect_elimination_ordering(g: &UGraph, order: &[usize]) -> bool {
    let n = g.len();
    if order.len() != n {
        return false;
    }
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        if v >= n || pos[v] != usize::MAX {
            return false;
        }
        pos[v] = i;
    }
    for v in 0..n {
        let earlier: Vec<usize> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| pos[w] < pos[v])
            .collect();
        let Some(&p) = earlier.iter().max_by_key(|&&w| pos[w]) else {
            continue;
        };
        if !earlier.iter().all(|&w| w == p || g.has_edge(p, w)) {
            return false;
        }
    }
    true
}

/// Chordality via maximum cardinality search plus a perfect-elimination check.
pub fn is_chordal(g: &UGraph) -> bool {
    is_perfect_elimination_ordering(g, &mcs_order(g))
}
