use std::collections::BTreeSet;

use super::SimplicialComplex;

/// All simplicial complexes whose vertex set is exactly `{0, .., n-1}`, one
/// per isomorphism class, for `1 <= n <= 4`.
///
/// Brute force: every antichain of non-empty vertex subsets covering all
/// vertices, deduplicated by the least facet-mask list over all vertex
/// permutations.
pub fn complexes_on_vertices(n: usize) -> Vec<SimplicialComplex> {
    assert!(
        (1..=4).contains(&n),
        "brute-force complex enumeration supports 1..=4 vertices"
    );
    let subsets: Vec<u32> = (1u32..(1 << n)).collect();
    let perms = permutations(n);
    let mut seen: BTreeSet<Vec<u32>> = BTreeSet::new();
    let mut out = Vec::new();
    for choice in 1u64..(1u64 << subsets.len()) {
        let family: Vec<u32> = (0..subsets.len())
            .filter(|&i| choice >> i & 1 == 1)
            .map(|i| subsets[i])
            .collect();
        let antichain = family.iter().all(|&a| family.iter().all(|&b| a == b || a & b != a));
        let covers = family.iter().fold(0, |m, &f| m | f) == (1 << n) - 1;
        if !antichain || !covers {
            continue;
        }
        let canonical = perms
            .iter()
            .map(|p| {
                let mut masks: Vec<u32> = family.iter().map(|&f| permute_mask(f, p)).collect();
                masks.sort_unstable();
                masks
            })
            .min()
            .expect("at least one permutation");
        if seen.insert(canonical) {
            let faces = family
                .iter()
                .map(|&f| (0..n).filter(|&v| f >> v & 1 == 1).collect())
                .collect();
            out.push(SimplicialComplex::from_index_faces(n, faces).expect("in range"));
        }
    }
    out
}

fn permute_mask(mask: u32, perm: &[usize]) -> u32 {
    (0..perm.len())
        .filter(|&v| mask >> v & 1 == 1)
        .fold(0, |m, v| m | 1 << perm[v])
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for at in 0..=p.len() {
            let mut q = p.clone();
            q.insert(at, n - 1);
            out.push(q);
        }
    }
    out
}
