use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::linalg::{identity_z, ZMatrix};

/// `D = U·A·V` with `U`, `V` unimodular and `D` diagonal, `d_1 | d_2 | …`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub d: ZMatrix,
    pub u: ZMatrix,
    pub v: ZMatrix,
}

impl SmithForm {
    /// The nonzero diagonal entries.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        (0..self.d.len().min(self.d.first().map_or(0, Vec::len)))
            .map(|i| self.d[i][i].clone())
            .filter(|x| !x.is_zero())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

/// Smith normal form by pivoting on the smallest nonzero absolute value,
/// ties broken by row-major position.
pub fn smith_normal_form(a: &ZMatrix) -> SmithForm {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut d = a.to_vec();
    let mut u = identity_z(rows);
    let mut v = identity_z(cols);
    for t in 0..rows.min(cols) {
        loop {
            let Some((pi, pj)) = smallest_entry(&d, t) else {
                return finish(d, u, v);
            };
            d.swap(t, pi);
            u.swap(t, pi);
            swap_cols(&mut d, t, pj);
            swap_cols(&mut v, t, pj);
            let p = d[t][t].clone();
            let mut clean = true;
            for i in t + 1..rows {
                if d[i][t].is_zero() {
                    continue;
                }
                let q = d[i][t].div_floor(&p);
                add_row(&mut d, i, t, &-&q);
                add_row(&mut u, i, t, &-&q);
                clean &= d[i][t].is_zero();
            }
            for j in t + 1..cols {
                if d[t][j].is_zero() {
                    continue;
                }
                let q = d[t][j].div_floor(&p);
                add_col(&mut d, j, t, &-&q);
                add_col(&mut v, j, t, &-&q);
                clean &= d[t][j].is_zero();
            }
            if !clean {
                continue;
            }
            // enforce divisibility against the remaining block
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !d[i][j].is_multiple_of(&p)));
            match bad {
                Some(i) => {
                    add_row(&mut d, t, i, &BigInt::one());
                    add_row(&mut u, t, i, &BigInt::one());
                }
                None => break,
            }
        }
        if d[t][t].is_negative() {
            negate_row(&mut d, t);
            negate_row(&mut u, t);
        }
    }
    finish(d, u, v)
}

fn finish(d: ZMatrix, u: ZMatrix, v: ZMatrix) -> SmithForm {
    SmithForm { d, u, v }
}

fn smallest_entry(d: &ZMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, row) in d.iter().enumerate().skip(t) {
        for (j, x) in row.iter().enumerate().skip(t) {
            if x.is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| x.abs() < d[bi][bj].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

fn swap_cols(m: &mut ZMatrix, a: usize, b: usize) {
    if a != b {
        for row in m.iter_mut() {
            row.swap(a, b);
        }
    }
}

// row[dst] += s·row[src]
fn add_row(m: &mut ZMatrix, dst: usize, src: usize, s: &BigInt) {
    let src_row = m[src].clone();
    for (x, y) in m[dst].iter_mut().zip(&src_row) {
        if !y.is_zero() {
            *x += s * y;
        }
    }
}

// col[dst] += s·col[src]
fn add_col(m: &mut ZMatrix, dst: usize, src: usize, s: &BigInt) {
    for row in m.iter_mut() {
        if !row[src].is_zero() {
            let y = s * &row[src];
            row[dst] += y;
        }
    }
}

fn negate_row(m: &mut ZMatrix, i: usize) {
    for x in m[i].iter_mut() {
        *x = -&*x;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{det_z, i64_to_z, mul_z};

    fn check(a: &[Vec<i64>]) -> SmithForm {
        let a = i64_to_z(a);
        let s = smith_normal_form(&a);
        assert_eq!(mul_z(&mul_z(&s.u, &a), &s.v), s.d);
        assert!(det_z(&s.u).abs().is_one());
        assert!(det_z(&s.v).abs().is_one());
        let f = s.invariant_factors();
        for w in f.windows(2) {
            assert!(w[1].is_multiple_of(&w[0]));
        }
        s
    }

    #[test]
    fn examples() {
        let s = check(&[vec![4, 0], vec![0, 6]]);
        assert_eq!(
            s.invariant_factors(),
            vec![BigInt::from(2), BigInt::from(12)]
        );
        let s = check(&[vec![4, 0], vec![0, 3], vec![8, 6]]);
        assert_eq!(
            s.invariant_factors(),
            vec![BigInt::from(1), BigInt::from(12)]
        );
        let s = check(&[vec![1, 0], vec![0, 1]]);
        assert_eq!(s.d, identity_z(2));
        let s = check(&[vec![0, 0, 0]]);
        assert!(s.invariant_factors().is_empty());
        check(&[]);
    }
}
