//! Independent reference implementations shared by the integration tests.
//! None of these go through the library's canonical labeling, Smith form or
//! homology code.
#![allow(dead_code)]

use std::collections::BTreeSet;

use indcomplex::complex::SimplicialComplex;
use indcomplex::homology::IntMatrix;
use indcomplex::Graph;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect()
}

pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let edges: Vec<(usize, usize)> = pairs(n)
        .into_iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, e)| e)
        .collect();
    Graph::from_edges(n, edges).unwrap()
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
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

/// Isomorphism classes of graphs on `n` vertices by trying every vertex
/// permutation on every edge set; each class is represented by its least
/// edge mask.
pub fn brute_force_classes(n: usize) -> BTreeSet<u64> {
    let ps = pairs(n);
    let index = |u: usize, v: usize| ps.iter().position(|&(a, b)| (a, b) == (u.min(v), u.max(v))).unwrap();
    let perms = permutations(n);
    // image[p][i]: where pair i goes under permutation p
    let images: Vec<Vec<usize>> = perms
        .iter()
        .map(|p| ps.iter().map(|&(u, v)| index(p[u], p[v])).collect())
        .collect();
    let mut classes = BTreeSet::new();
    for mask in 0u64..(1 << ps.len()) {
        let least = images
            .iter()
            .map(|img| {
                (0..ps.len())
                    .filter(|&i| mask >> i & 1 == 1)
                    .fold(0u64, |m, i| m | 1 << img[i])
            })
            .min()
            .unwrap();
        classes.insert(least);
    }
    classes
}

/// Maximal independent sets by checking every vertex subset.
pub fn brute_force_maximal_independent_sets(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let independent =
        |m: u32| (0..n).all(|u| (u + 1..n).all(|v| m >> u & 1 == 0 || m >> v & 1 == 0 || !g.has_edge(u, v)));
    let mut out = Vec::new();
    for m in 1u32..(1 << n) {
        if independent(m) && (0..n).all(|v| m >> v & 1 == 1 || !independent(m | 1 << v)) {
            out.push((0..n).filter(|&v| m >> v & 1 == 1).collect());
        }
    }
    out.sort();
    out
}

/// All faces of `k`, of each dimension, sorted.
pub fn faces_by_dim(k: &SimplicialComplex) -> Vec<Vec<Vec<usize>>> {
    let mut all: BTreeSet<Vec<usize>> = BTreeSet::new();
    for f in k.facets() {
        for m in 1u64..(1 << f.len()) {
            all.insert((0..f.len()).filter(|&i| m >> i & 1 == 1).map(|i| f[i]).collect());
        }
    }
    let top = all.iter().map(Vec::len).max().unwrap_or(0);
    (1..=top)
        .map(|s| all.iter().filter(|f| f.len() == s).cloned().collect())
        .collect()
}

/// Rows: faces of size `s - 1`; columns: faces of size `s`. Entries are
/// the signs of the simplicial boundary.
fn boundary(rows: &[Vec<usize>], cols: &[Vec<usize>]) -> Vec<Vec<i64>> {
    let mut m = vec![vec![0i64; cols.len()]; rows.len()];
    for (j, c) in cols.iter().enumerate() {
        for i in 0..c.len() {
            let mut f = c.clone();
            f.remove(i);
            let r = rows.binary_search(&f).unwrap();
            m[r][j] = if i % 2 == 0 { 1 } else { -1 };
        }
    }
    m
}

/// Rank over the prime field `F_p`.
pub fn rank_mod_p(m: &[Vec<i64>], p: i64) -> usize {
    let mut a: Vec<Vec<i64>> = m.iter().map(|r| r.iter().map(|x| x.rem_euclid(p)).collect()).collect();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..a.len()).find(|&r| a[r][c] != 0) else {
            continue;
        };
        a.swap(rank, piv);
        let inv = pow_mod(a[rank][c], p - 2, p);
        for x in a[rank].iter_mut() {
            *x = *x * inv % p;
        }
        for r in 0..a.len() {
            if r != rank && a[r][c] != 0 {
                let f = a[r][c];
                let pivot_row = a[rank].clone();
                for (x, y) in a[r].iter_mut().zip(&pivot_row) {
                    *x = (*x - f * y).rem_euclid(p);
                }
            }
        }
        rank += 1;
    }
    rank
}

fn pow_mod(mut b: i64, mut e: i64, p: i64) -> i64 {
    let mut r = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

/// Rational rank, taken as the rank modulo a large prime. Boundary matrices
/// have tiny minors relative to it, so this is exact on every test corpus.
pub fn rank_rational(m: &[Vec<i64>]) -> usize {
    rank_mod_p(m, 1_000_000_007)
}

/// Reduced Betti numbers over `F_p` (`p = 0` for the rationals), for
/// dimensions `0..=dim`.
pub fn reduced_betti_over(k: &SimplicialComplex, p: i64) -> Vec<usize> {
    let faces = faces_by_dim(k);
    let rank = |m: &[Vec<i64>]| if p == 0 { rank_rational(m) } else { rank_mod_p(m, p) };
    let mut ranks = vec![usize::from(!faces.is_empty())];
    for d in 1..faces.len() {
        ranks.push(rank(&boundary(&faces[d - 1], &faces[d])));
    }
    ranks.push(0);
    (0..faces.len())
        .map(|d| faces[d].len() - ranks[d] - ranks[d + 1])
        .collect()
}

/// Invariant factors of an integer matrix with exactly two columns, from
/// the gcd of its entries and the gcd of its 2x2 minors.
pub fn two_column_invariants(rows: &[[i64; 2]]) -> (usize, Vec<i64>) {
    let g1 = rows.iter().flat_map(|r| r.iter()).fold(0i64, |g, &x| g.gcd(&x));
    let mut g2 = 0i64;
    for i in 0..rows.len() {
        for j in i + 1..rows.len() {
            g2 = g2.gcd(&(rows[i][0] * rows[j][1] - rows[i][1] * rows[j][0]));
        }
    }
    // Z^2 / rowspace: rank 2 - r, torsion from the nonzero factors
    let mut factors = Vec::new();
    if g1 != 0 {
        factors.push(g1);
        if g2 != 0 {
            factors.push(g2 / g1);
        }
    }
    let free = 2 - factors.len();
    (free, factors.into_iter().filter(|&x| x != 1).collect())
}

/// Exponent sums of each generator in each relator.
pub fn exponent_rows(relators: &[Vec<i32>], generators: usize) -> Vec<Vec<i64>> {
    relators
        .iter()
        .map(|r| {
            let mut row = vec![0i64; generators];
            for &l in r {
                row[l.unsigned_abs() as usize - 1] += l.signum() as i64;
            }
            row
        })
        .collect()
}

pub fn to_i64_rows(m: &IntMatrix) -> Vec<Vec<i64>> {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| m[(i, j)].to_i64().unwrap()).collect())
        .collect()
}

pub fn big(xs: &[i64]) -> Vec<BigInt> {
    xs.iter().map(|&x| BigInt::from(x)).collect()
}

/// `d` is diagonal, non-negative, and each nonzero entry divides the next.
pub fn is_smith_diagonal(d: &IntMatrix) -> bool {
    if !d.is_diagonal() {
        return false;
    }
    let diag = d.diagonal();
    if diag.iter().any(Signed::is_negative) {
        return false;
    }
    let nonzero = diag.iter().take_while(|x| !x.is_zero()).count();
    diag[nonzero..].iter().all(Zero::is_zero) && diag[..nonzero].windows(2).all(|w| (&w[1] % &w[0]).is_zero())
}
