use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;

use super::CycInt;

/// A dense matrix over `Z[ζ_d]`.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct CycMatrix {
    d: u64,
    rows: usize,
    cols: usize,
    entries: Vec<CycInt>,
}

impl CycMatrix {
    pub fn zero(d: u64, rows: usize, cols: usize) -> Self {
        CycMatrix {
            d,
            rows,
            cols,
            entries: vec![CycInt::zero(d); rows * cols],
        }
    }

    pub fn identity(d: u64, n: usize) -> Self {
        let mut m = Self::zero(d, n, n);
        for i in 0..n {
            m.set(i, i, CycInt::one(d));
        }
        m
    }

    pub fn from_rows(d: u64, rows: Vec<Vec<CycInt>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut entries = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            for x in row {
                assert_eq!(x.conductor(), d, "conductor mismatch");
                entries.push(x);
            }
        }
        CycMatrix {
            d,
            rows: r,
            cols: c,
            entries,
        }
    }

    pub fn from_int_rows(d: u64, rows: &[Vec<i64>]) -> Self {
        Self::from_rows(
            d,
            rows.iter()
                .map(|r| r.iter().map(|&x| CycInt::from_int(d, x)).collect())
                .collect(),
        )
    }

    /// `diag(entries)`.
    pub fn diagonal(d: u64, diag: Vec<CycInt>) -> Self {
        let n = diag.len();
        let mut m = Self::zero(d, n, n);
        for (i, x) in diag.into_iter().enumerate() {
            m.set(i, i, x);
        }
        m
    }

    /// `E_{ij}(s)`: the identity with `s` at `(i, j)`, 0-based, `i ≠ j`.
    pub fn elementary(n: usize, i: usize, j: usize, s: CycInt) -> Self {
        assert!(
            i != j && i < n && j < n,
            "inadmissible elementary position ({i}, {j})"
        );
        let mut m = Self::identity(s.conductor(), n);
        m.set(i, j, s);
        m
    }

    /// `H(A) = [[I_{m2}, 0], [A, I_{m1}]]` for an `m1 × m2` block `A`.
    pub fn h_block(d: u64, a: &[Vec<CycInt>]) -> Self {
        let m1 = a.len();
        let m2 = a.first().map_or(0, |r| r.len());
        let mut m = Self::identity(d, m1 + m2);
        for (i, row) in a.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                m.set(m2 + i, j, x.clone());
            }
        }
        m
    }

    /// `V(A) = [[I_{m2}, Aᵗ], [0, I_{m1}]]` for an `m1 × m2` block `A`.
    pub fn v_block(d: u64, a: &[Vec<CycInt>]) -> Self {
        let m1 = a.len();
        let m2 = a.first().map_or(0, |r| r.len());
        let mut m = Self::identity(d, m1 + m2);
        for (i, row) in a.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                m.set(j, m2 + i, x.clone());
            }
        }
        m
    }

    /// `Π_i Π_j E_{m2+i, j}(a_ij)`, which should equal [`Self::h_block`].
    pub fn h_block_product(d: u64, a: &[Vec<CycInt>]) -> Self {
        let m1 = a.len();
        let m2 = a.first().map_or(0, |r| r.len());
        let mut m = Self::identity(d, m1 + m2);
        for (i, row) in a.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                m = m.mul(&Self::elementary(m1 + m2, m2 + i, j, x.clone()));
            }
        }
        m
    }

    /// `Π_i Π_j E_{j, m2+i}(a_ij)`, which should equal [`Self::v_block`].
    pub fn v_block_product(d: u64, a: &[Vec<CycInt>]) -> Self {
        let m1 = a.len();
        let m2 = a.first().map_or(0, |r| r.len());
        let mut m = Self::identity(d, m1 + m2);
        for (i, row) in a.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                m = m.mul(&Self::elementary(m1 + m2, j, m2 + i, x.clone()));
            }
        }
        m
    }

    pub fn conductor(&self) -> u64 {
        self.d
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &CycInt {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: CycInt) {
        assert_eq!(x.conductor(), self.d, "conductor mismatch");
        self.entries[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[CycInt] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul(&self, other: &CycMatrix) -> CycMatrix {
        assert_eq!(self.d, other.d, "conductor mismatch");
        assert_eq!(self.cols, other.rows, "shape mismatch");
        let mut out = Self::zero(self.d, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j).add(&a.mul(b));
                        out.set(i, j, v);
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &CycMatrix) -> CycMatrix {
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "shape mismatch"
        );
        CycMatrix {
            d: self.d,
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn transpose(&self) -> CycMatrix {
        let mut out = Self::zero(self.d, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Self::identity(self.d, self.rows)
    }

    /// Exact determinant by cofactor expansion, memoised over column subsets.
    pub fn determinant(&self) -> CycInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        assert!(n < 24, "matrix too large for subset expansion");
        let mut memo: HashMap<u32, CycInt> = HashMap::new();
        self.minor(0, (1u32 << n) - 1, &mut memo)
    }

    // determinant of rows row.. against the columns in `mask`
    fn minor(&self, row: usize, mask: u32, memo: &mut HashMap<u32, CycInt>) -> CycInt {
        if row == self.rows {
            return CycInt::one(self.d);
        }
        if let Some(v) = memo.get(&mask) {
            return v.clone();
        }
        let mut acc = CycInt::zero(self.d);
        let mut sign_positive = true;
        for col in 0..self.cols {
            if mask & (1 << col) == 0 {
                continue;
            }
            let a = self.get(row, col);
            if !a.is_zero() {
                let sub = self.minor(row + 1, mask & !(1 << col), memo);
                let term = a.mul(&sub);
                acc = if sign_positive {
                    acc.add(&term)
                } else {
                    acc.sub(&term)
                };
            }
            sign_positive = !sign_positive;
        }
        memo.insert(mask, acc.clone());
        acc
    }

    /// `Some(k)` when the determinant is `ζ_d^k`.
    pub fn is_glplus(&self) -> Option<u64> {
        self.determinant().root_of_unity_exponent()
    }

    /// The inverse, when the determinant is a unit of the form `±ζ_d^k`.
    pub fn inverse(&self) -> Option<CycMatrix> {
        let n = self.rows;
        let det = self.determinant();
        let (k, sign) = match det.root_of_unity_exponent() {
            Some(k) => (k, 1),
            None => (det.neg().root_of_unity_exponent()?, -1),
        };
        let det_inv = CycInt::zeta_pow(self.d, -(k as i64)).scale(&BigInt::from(sign));
        let mut out = Self::zero(self.d, n, n);
        for i in 0..n {
            for j in 0..n {
                // adjugate entry (i, j) is the (j, i) cofactor
                let minor = self.delete(j, i).determinant();
                let c = if (i + j) % 2 == 0 { minor } else { minor.neg() };
                out.set(i, j, c.mul(&det_inv));
            }
        }
        Some(out)
    }

    fn delete(&self, r: usize, c: usize) -> CycMatrix {
        let rows = (0..self.rows)
            .filter(|&i| i != r)
            .map(|i| {
                (0..self.cols)
                    .filter(|&j| j != c)
                    .map(|j| self.get(i, j).clone())
                    .collect()
            })
            .collect();
        Self::from_rows(self.d, rows)
    }

    /// Rows as strings, for reports.
    pub fn to_strings(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|x| x.to_string()).collect())
            .collect()
    }
}

impl fmt::Display for CycMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .to_strings()
            .into_iter()
            .map(|r| format!("[{}]", r.join(", ")))
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

/// The group commutator `a b a⁻¹ b⁻¹` of invertible matrices.
pub fn commutator(a: &CycMatrix, b: &CycMatrix) -> Option<CycMatrix> {
    Some(a.mul(b).mul(&a.inverse()?).mul(&b.inverse()?))
}

/// Checks the Steinberg relations for `E_{ij}(s1)` and `E_{kl}(s2)` (0-based,
/// `i ≠ j`, `k ≠ l`, not both `j = k` and `i = l`) together with additivity
/// of `E_{ij}`. Inverses are taken as `E_{ij}(s)⁻¹ = E_{ij}(−s)`.
pub fn verify_steinberg(
    s1: &CycInt,
    s2: &CycInt,
    (i, j): (usize, usize),
    (k, l): (usize, usize),
    n: usize,
) -> bool {
    if i == j || k == l || (j == k && i == l) {
        return false;
    }
    let e = |a, b, s: &CycInt| CycMatrix::elementary(n, a, b, s.clone());
    let comm = e(i, j, s1)
        .mul(&e(k, l, s2))
        .mul(&e(i, j, &s1.neg()))
        .mul(&e(k, l, &s2.neg()));
    let expect = if j != k && i != l {
        CycMatrix::identity(s1.conductor(), n)
    } else if j == k {
        e(i, l, &s1.mul(s2))
    } else {
        e(k, j, &s2.mul(s1).neg())
    };
    let additive = e(i, j, s1).mul(&e(i, j, s2)) == e(i, j, &s1.add(s2));
    comm == expect && additive
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(d: u64, v: &[i64]) -> CycInt {
        CycInt::from_poly(d, v.iter().map(|&x| BigInt::from(x)).collect())
    }

    #[test]
    fn determinant_examples() {
        let s = c(5, &[3, -1, 2]);
        assert!(CycMatrix::elementary(3, 0, 1, s).determinant().is_one());
        let z = CycInt::zeta(5);
        let m = CycMatrix::diagonal(5, vec![z.clone(), CycInt::one(5), CycInt::one(5)]);
        assert_eq!(m.determinant(), z);
        assert_eq!(m.is_glplus(), Some(1));
        assert!(CycMatrix::identity(3, 4).is_glplus() == Some(0));
        let d2 = CycMatrix::from_int_rows(1, &[vec![2, 0], vec![0, 1]]);
        assert_eq!(d2.is_glplus(), None);
    }

    #[test]
    fn inverse_of_unimodular() {
        let d = 4;
        let z = CycInt::zeta(d);
        let m = CycMatrix::from_rows(
            d,
            vec![
                vec![z.clone(), CycInt::from_int(d, 3)],
                vec![CycInt::zero(d), CycInt::one(d)],
            ],
        );
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        assert!(CycMatrix::from_int_rows(1, &[vec![2, 0], vec![0, 1]])
            .inverse()
            .is_none());
    }

    #[test]
    fn block_product_formulas() {
        let d = 3;
        let a = vec![vec![c(d, &[1, 2]), c(d, &[0, -1])]];
        let h = CycMatrix::h_block(d, &a);
        assert_eq!(h, CycMatrix::h_block_product(d, &a));
        assert_eq!(h.get(2, 0), &a[0][0]);
        assert_eq!(h.get(2, 1), &a[0][1]);
        let v = CycMatrix::v_block(d, &a);
        assert_eq!(v, CycMatrix::v_block_product(d, &a));
        assert_eq!(v, h.transpose());
    }

    #[test]
    fn steinberg_examples() {
        let d = 6;
        let a = c(d, &[1, 1]);
        let b = c(d, &[2, 0, -1]);
        assert!(verify_steinberg(&a, &b, (0, 1), (1, 2), 3));
        assert!(verify_steinberg(&a, &b, (0, 1), (2, 3), 4));
        assert!(verify_steinberg(&a, &b, (0, 1), (2, 0), 3));
        let e12 = CycMatrix::elementary(3, 0, 1, a.clone());
        let e23 = CycMatrix::elementary(3, 1, 2, b.clone());
        assert_eq!(
            commutator(&e12, &e23).unwrap(),
            CycMatrix::elementary(3, 0, 2, a.mul(&b))
        );
        assert!(CycMatrix::elementary(2, 0, 1, CycInt::one(1))
            .get(0, 1)
            .is_one());
    }
}
