use crate::graph::Graph;

/// Vertex order from maximum-cardinality search; the reverse of this order
/// is a perfect elimination ordering exactly when the graph is chordal.
pub fn maximum_cardinality_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut done = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        // ties go to the smallest vertex
        let v = (0..n)
            .filter(|&v| !done[v])
            .max_by(|&a, &b| weight[a].cmp(&weight[b]).then(b.cmp(&a)))
            .expect("a vertex remains");
        done[v] = true;
        order.push(v);
        for w in g.neighbors(v) {
            if !done[w] {
                weight[w] += 1;
            }
        }
    }
    order
}

/// Chordality via maximum-cardinality search and a perfect elimination
/// check.
pub fn is_chordal(g: &Graph) -> bool {
    let order = maximum_cardinality_order(g);
    let mut position = vec![0usize; g.n()];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    // Each vertex's earlier neighbours must form a clique; it suffices that
    // they all neighbour the latest of them.
    for &v in &order {
        let earlier: Vec<usize> = g.neighbors(v).filter(|&w| position[w] < position[v]).collect();
        let Some(&parent) = earlier.iter().max_by_key(|&&w| position[w]) else {
            continue;
        };
        if !earlier.iter().all(|&w| w == parent || g.has_edge(parent, w)) {
            return false;
        }
    }
    true
}
