use std::collections::VecDeque;

use super::UGraph;

struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false if `a` and `b` were already connected.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        true
    }
}

/// True when `g` minus the nodes in `removed` has no cycle.
pub fn is_forest_without(g: &UGraph, removed: &[usize]) -> bool {
    let mut gone = vec![false; g.len()];
    for &v in removed {
        gone[v] = true;
    }
    let mut dsu = Dsu::new(g.len());
    g.edges()
        .filter(|&(u, v)| !gone[u] && !gone[v])
        .all(|(u, v)| dsu.union(u, v))
}

/// Greedy cycle-cutset. Repeatedly strips nodes of degree at most one; while
/// anything remains, moves a maximum-degree node (lowest id on ties) into the
/// cutset. A final sweep returns any cutset node whose neighbours outside the
/// cutset all lie in distinct trees, so the result is inclusion-minimal.
/// Returned sorted.
pub fn cutset_heuristic(g: &UGraph) -> Vec<usize> {
    let n = g.len();
    let mut alive = vec![true; n];
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut remaining = n;
    let mut queue: VecDeque<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut cut = Vec::new();

    let remove = |v: usize,
                  alive: &mut Vec<bool>,
                  degree: &mut Vec<usize>,
                  queue: &mut VecDeque<usize>,
                  remaining: &mut usize| {
        alive[v] = false;
        *remaining -= 1;
        for &w in g.neighbors(v) {
            if alive[w] {
                degree[w] -= 1;
                if degree[w] == 1 {
                    queue.push_back(w);
                }
            }
        }
    };

    loop {
        while let Some(v) = queue.pop_front() {
            if alive[v] && degree[v] <= 1 {
                remove(v, &mut alive, &mut degree, &mut queue, &mut remaining);
            }
        }
        if remaining == 0 {
            break;
        }
        let v = (0..n)
            .filter(|&v| alive[v])
            .max_by(|&a, &b| degree[a].cmp(&degree[b]).then(b.cmp(&a)))
            .expect("a node remains");
        cut.push(v);
        remove(v, &mut alive, &mut degree, &mut queue, &mut remaining);
    }

    // Minimality sweep, latest pick first.
    let mut in_cut = vec![false; n];
    for &v in &cut {
        in_cut[v] = true;
    }
    let mut dsu = Dsu::new(n);
    for (u, v) in g.edges() {
        if !in_cut[u] && !in_cut[v] {
            dsu.union(u, v);
        }
    }
    for &v in cut.iter().rev() {
        let mut roots: Vec<usize> = g
            .neighbors(v)
            .iter()
            .filter(|&&w| !in_cut[w])
            .map(|&w| dsu.find(w))
            .collect();
        let k = roots.len();
        roots.sort_unstable();
        roots.dedup();
        if roots.len() == k {
            in_cut[v] = false;
            for r in roots {
                dsu.union(v, r);
            }
        }
    }
    (0..n).filter(|&v| in_cut[v]).collect()
}
