//! Smith normal form over the integers.
//!
//! Elimination always pivots on a nonzero entry of least absolute value to
//! keep entries small. The work is first attempted in checked `i64`
//! arithmetic and redone with `BigInt` if anything overflows, so results are
//! exact either way.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, Signed, ToPrimitive, Zero};

use super::IntMatrix;

/// `u * a * v == d` with `u`, `v` unimodular and `d` diagonal with
/// non-negative entries `d1 | d2 | ...`.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl SmithForm {
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        self.d.diagonal().into_iter().filter(|x| !x.is_zero()).collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

pub fn smith_normal_form(a: &IntMatrix) -> SmithForm {
    if let Some(small) = to_i64(a) {
        if let Some(done) = reduce(small, a.rows(), a.cols(), true) {
            return done.into_form();
        }
    }
    let big = Dense::new(a.rows(), a.cols(), a.data().to_vec());
    reduce(big, a.rows(), a.cols(), true)
        .expect("BigInt never overflows")
        .into_form()
}

/// Nonzero diagonal entries of the Smith form, in divisibility order.
/// Skips the transform bookkeeping.
pub fn invariant_factors(a: &IntMatrix) -> Vec<BigInt> {
    let diag = match to_i64(a).and_then(|m| reduce(m, a.rows(), a.cols(), false)) {
        Some(done) => done.a.diagonal().into_iter().map(BigInt::from).collect::<Vec<_>>(),
        None => {
            let big = Dense::new(a.rows(), a.cols(), a.data().to_vec());
            reduce(big, a.rows(), a.cols(), false)
                .expect("BigInt never overflows")
                .a
                .diagonal()
        }
    };
    diag.into_iter().filter(|x| !x.is_zero()).collect()
}

pub fn rank(a: &IntMatrix) -> usize {
    invariant_factors(a).len()
}

fn to_i64(a: &IntMatrix) -> Option<Dense<i64>> {
    let data = a.data().iter().map(ToPrimitive::to_i64).collect::<Option<Vec<_>>>()?;
    Some(Dense::new(a.rows(), a.cols(), data))
}

trait Entry: Clone + Integer + Signed + CheckedAdd + CheckedSub + CheckedMul + Into<BigInt> {}
impl<T: Clone + Integer + Signed + CheckedAdd + CheckedSub + CheckedMul + Into<BigInt>> Entry for T {}

#[derive(Clone)]
struct Dense<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Entry> Dense<T> {
    fn new(rows: usize, cols: usize, data: Vec<T>) -> Self {
        Dense { rows, cols, data }
    }

    fn identity(n: usize) -> Self {
        let mut data = vec![T::zero(); n * n];
        for i in 0..n {
            data[i * n + i] = T::one();
        }
        Dense { rows: n, cols: n, data }
    }

    fn at(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// row[dst] -= q * row[src], over columns `from..`
    fn row_sub(&mut self, dst: usize, src: usize, q: &T, from: usize) -> Option<()> {
        for j in from..self.cols {
            let s = &self.data[src * self.cols + j];
            if s.is_zero() {
                continue;
            }
            let prod = q.checked_mul(s)?;
            let d = &mut self.data[dst * self.cols + j];
            *d = d.checked_sub(&prod)?;
        }
        Some(())
    }

    /// col[dst] -= q * col[src], over rows `from..`
    fn col_sub(&mut self, dst: usize, src: usize, q: &T, from: usize) -> Option<()> {
        for i in from..self.rows {
            let s = &self.data[i * self.cols + src];
            if s.is_zero() {
                continue;
            }
            let prod = q.checked_mul(s)?;
            let d = &mut self.data[i * self.cols + dst];
            *d = d.checked_sub(&prod)?;
        }
        Some(())
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let x = &mut self.data[i * self.cols + j];
            *x = -x.clone();
        }
    }

    fn diagonal(&self) -> Vec<T> {
        (0..self.rows.min(self.cols)).map(|i| self.at(i, i).clone()).collect()
    }

    fn into_int_matrix(self) -> IntMatrix {
        IntMatrix::from_raw(self.rows, self.cols, self.data.into_iter().map(Into::into).collect())
    }
}

struct Reduced<T> {
    a: Dense<T>,
    u: Option<Dense<T>>,
    v: Option<Dense<T>>,
}

impl<T: Entry> Reduced<T> {
    fn into_form(self) -> SmithForm {
        SmithForm {
            d: self.a.into_int_matrix(),
            u: self.u.expect("tracked").into_int_matrix(),
            v: self.v.expect("tracked").into_int_matrix(),
        }
    }
}

/// `None` means the entry type overflowed.
fn reduce<T: Entry>(mut a: Dense<T>, rows: usize, cols: usize, track: bool) -> Option<Reduced<T>> {
    let mut u = track.then(|| Dense::<T>::identity(rows));
    let mut v = track.then(|| Dense::<T>::identity(cols));

    for t in 0..rows.min(cols) {
        let Some((pi, pj)) = min_abs_entry(&a, t..rows, t..cols) else {
            break;
        };
        swap_pivot(&mut a, &mut u, &mut v, t, pi, pj);
        loop {
            let pivot = a.at(t, t).clone();
            for i in t + 1..rows {
                if !a.at(i, t).is_zero() {
                    let q = a.at(i, t).div_floor(&pivot);
                    a.row_sub(i, t, &q, t)?;
                    if let Some(u) = u.as_mut() {
                        u.row_sub(i, t, &q, 0)?;
                    }
                }
            }
            for j in t + 1..cols {
                if !a.at(t, j).is_zero() {
                    let q = a.at(t, j).div_floor(&pivot);
                    a.col_sub(j, t, &q, t)?;
                    if let Some(v) = v.as_mut() {
                        v.col_sub(j, t, &q, 0)?;
                    }
                }
            }
            // Remainders are smaller than the pivot; promote the least one.
            let in_col = min_abs_entry(&a, t + 1..rows, t..t + 1);
            let in_row = min_abs_entry(&a, t..t + 1, t + 1..cols);
            let better = match (in_col, in_row) {
                (Some(c), Some(r)) => Some(if a.at(c.0, c.1).abs() <= a.at(r.0, r.1).abs() {
                    c
                } else {
                    r
                }),
                (c, r) => c.or(r),
            };
            if let Some((i, j)) = better {
                swap_pivot(&mut a, &mut u, &mut v, t, i, j);
                continue;
            }
            // Row and column are clear; enforce divisibility of the remainder.
            if !pivot.abs().is_one() {
                if let Some(i) = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !a.at(i, j).is_multiple_of(&pivot))) {
                    // row[t] += row[i]
                    let minus_one = -T::one();
                    a.row_sub(t, i, &minus_one, t)?;
                    if let Some(u) = u.as_mut() {
                        u.row_sub(t, i, &minus_one, 0)?;
                    }
                    continue;
                }
            }
            break;
        }
        if a.at(t, t).is_negative() {
            a.negate_row(t);
            if let Some(u) = u.as_mut() {
                u.negate_row(t);
            }
        }
    }
    Some(Reduced { a, u, v })
}

fn min_abs_entry<T: Entry>(
    a: &Dense<T>,
    rows: std::ops::Range<usize>,
    cols: std::ops::Range<usize>,
) -> Option<(usize, usize)> {
    let mut best: Option<((usize, usize), T)> = None;
    for i in rows {
        for j in cols.clone() {
            let x = a.at(i, j);
            if x.is_zero() {
                continue;
            }
            let ax = x.abs();
            if best.as_ref().is_none_or(|(_, b)| ax < *b) {
                let one = ax.is_one();
                best = Some(((i, j), ax));
                if one {
                    return best.map(|(p, _)| p);
                }
            }
        }
    }
    best.map(|(p, _)| p)
}

fn swap_pivot<T: Entry>(
    a: &mut Dense<T>,
    u: &mut Option<Dense<T>>,
    v: &mut Option<Dense<T>>,
    t: usize,
    i: usize,
    j: usize,
) {
    a.swap_rows(t, i);
    a.swap_cols(t, j);
    if let Some(u) = u.as_mut() {
        u.swap_rows(t, i);
    }
    if let Some(v) = v.as_mut() {
        v.swap_cols(t, j);
    }
}
