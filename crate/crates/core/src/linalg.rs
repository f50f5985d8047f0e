//! Exact dense linear algebra over `Q` and `Z`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type QMatrix = Vec<Vec<BigRational>>;
pub type ZMatrix = Vec<Vec<BigInt>>;

pub fn q(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

pub fn to_q(m: &[Vec<BigInt>]) -> QMatrix {
    m.iter()
        .map(|r| {
            r.iter()
                .map(|x| BigRational::from_integer(x.clone()))
                .collect()
        })
        .collect()
}

pub fn i64_to_z(m: &[Vec<i64>]) -> ZMatrix {
    m.iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect()
}

/// Converts a rational matrix with integral entries; `None` otherwise.
pub fn to_z(m: &QMatrix) -> Option<ZMatrix> {
    m.iter()
        .map(|r| {
            r.iter()
                .map(|x| x.is_integer().then(|| x.to_integer()))
                .collect()
        })
        .collect()
}

pub fn transpose<T: Clone>(m: &[Vec<T>]) -> Vec<Vec<T>> {
    if m.is_empty() {
        return Vec::new();
    }
    (0..m[0].len())
        .map(|j| m.iter().map(|r| r[j].clone()).collect())
        .collect()
}

pub fn identity_q(n: usize) -> QMatrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect()
}

pub fn identity_z(n: usize) -> ZMatrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigInt::one()
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect()
}

pub fn mul_q(a: &QMatrix, b: &QMatrix) -> QMatrix {
    let inner = b.len();
    let cols = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            assert_eq!(row.len(), inner, "shape mismatch");
            let mut out = vec![BigRational::zero(); cols];
            for (k, x) in row.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for (j, y) in b[k].iter().enumerate() {
                    if !y.is_zero() {
                        out[j] += x * y;
                    }
                }
            }
            out
        })
        .collect()
}

pub fn mul_z(a: &ZMatrix, b: &ZMatrix) -> ZMatrix {
    let inner = b.len();
    let cols = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            assert_eq!(row.len(), inner, "shape mismatch");
            let mut out = vec![BigInt::zero(); cols];
            for (k, x) in row.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for (j, y) in b[k].iter().enumerate() {
                    if !y.is_zero() {
                        out[j] += x * y;
                    }
                }
            }
            out
        })
        .collect()
}

/// Row vector times matrix.
pub fn vec_mul_q(v: &[BigRational], m: &QMatrix) -> Vec<BigRational> {
    mul_q(&vec![v.to_vec()], m).pop().unwrap_or_default()
}

/// Reduced row echelon form and pivot columns.
pub fn rref(m: &QMatrix) -> (QMatrix, Vec<usize>) {
    let mut a = m.clone();
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        if row == rows {
            break;
        }
        let Some(r) = (row..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(row, r);
        let inv = a[row][col].recip();
        for x in a[row].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..rows {
            if r != row && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in col..cols {
                    if !a[row][c].is_zero() {
                        let t = &f * &a[row][c];
                        a[r][c] -= t;
                    }
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    a.truncate(pivots.len());
    (a, pivots)
}

pub fn rank_q(m: &QMatrix) -> usize {
    rref(m).1.len()
}

/// Basis of `{x : m x = 0}`.
pub fn nullspace_q(m: &QMatrix, cols: usize) -> QMatrix {
    let (r, pivots) = rref(m);
    (0..cols)
        .filter(|c| !pivots.contains(c))
        .map(|f| {
            let mut v = vec![BigRational::zero(); cols];
            v[f] = BigRational::one();
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = -r[i][f].clone();
            }
            v
        })
        .collect()
}

/// Coefficients `c` with `c · rows = v`, if `v` lies in the row space.
pub fn solve_rows(rows: &QMatrix, v: &[BigRational]) -> Option<Vec<BigRational>> {
    // columns of the system are the given rows
    let k = rows.len();
    let n = v.len();
    let aug: QMatrix = (0..n)
        .map(|j| {
            let mut r: Vec<BigRational> = rows.iter().map(|row| row[j].clone()).collect();
            r.push(v[j].clone());
            r
        })
        .collect();
    let (red, pivots) = rref(&aug);
    if pivots.contains(&k) {
        return None;
    }
    let mut c = vec![BigRational::zero(); k];
    for (i, &pc) in pivots.iter().enumerate() {
        c[pc] = red[i][k].clone();
    }
    Some(c)
}

pub fn inverse_q(m: &QMatrix) -> Option<QMatrix> {
    let n = m.len();
    let aug: QMatrix = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| {
                if i == j {
                    BigRational::one()
                } else {
                    BigRational::zero()
                }
            }));
            row
        })
        .collect();
    let (red, pivots) = rref(&aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(red.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Determinant by fraction-free (Bareiss) elimination.
pub fn det_z(m: &ZMatrix) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, r);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = t / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

pub fn det_q(m: &QMatrix) -> BigRational {
    let n = m.len();
    let mut a = m.clone();
    let mut det = BigRational::one();
    for col in 0..n {
        let Some(r) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return BigRational::zero();
        };
        if r != col {
            a.swap(r, col);
            det = -det;
        }
        det *= &a[col][col];
        let inv = a[col][col].recip();
        for r in col + 1..n {
            if !a[r][col].is_zero() {
                let f = &a[r][col] * &inv;
                for c in col..n {
                    let t = &f * &a[col][c];
                    a[r][c] -= t;
                }
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qm(rows: &[&[i64]]) -> QMatrix {
        rows.iter()
            .map(|r| r.iter().map(|&x| q(x)).collect())
            .collect()
    }

    #[test]
    fn rank_and_nullspace() {
        let m = qm(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(rank_q(&m), 2);
        let ns = nullspace_q(&m, 3);
        assert_eq!(ns.len(), 1);
        let prod = mul_q(&m, &transpose(&ns));
        assert!(prod.iter().flatten().all(|x| x.is_zero()));
    }

    #[test]
    fn solving() {
        let rows = qm(&[&[1, 0, 1], &[0, 1, 1]]);
        let c = solve_rows(&rows, &[q(2), q(3), q(5)]).unwrap();
        assert_eq!(c, vec![q(2), q(3)]);
        assert!(solve_rows(&rows, &[q(1), q(1), q(1)]).is_none());
    }

    #[test]
    fn determinants_agree() {
        let z = i64_to_z(&[vec![2, -1, 0], vec![1, 3, 4], vec![0, 5, -2]]);
        let d = det_z(&z);
        assert_eq!(BigRational::from_integer(d.clone()), det_q(&to_q(&z)));
        assert_eq!(d, BigInt::from(-54));
        let zero_corner = i64_to_z(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(det_z(&zero_corner), BigInt::from(-1));
    }

    #[test]
    fn inverse_round_trip() {
        let m = qm(&[&[2, 1], &[7, 4]]);
        let inv = inverse_q(&m).unwrap();
        assert_eq!(mul_q(&m, &inv), identity_q(2));
        assert!(inverse_q(&qm(&[&[1, 2], &[2, 4]])).is_none());
    }
}
