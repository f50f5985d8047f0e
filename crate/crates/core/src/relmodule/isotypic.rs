use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::{g_action_matrix, RelationLattice, RepMatrix};
use crate::error::{Error, Result};
use crate::grpring::RationalIdempotent;
use crate::linalg::{mul_q, rank_q, rref, solve_rows, to_q, transpose, QMatrix};

/// A subspace of `Q ⊗ R̄` in Schreier coordinates, given by an RREF basis.
#[derive(Clone, Debug)]
pub struct IsotypicComponent {
    /// Row vectors of length `t`; column `pivots[k]` of row `k` is one and
    /// zero in the other rows.
    pub basis: QMatrix,
    pub pivots: Vec<usize>,
    pub expected_dimension: usize,
}

impl IsotypicComponent {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }
}

/// `Σ_g e_g·A(g)` acting on lattice coordinates.
pub fn idempotent_operator(lattice: &RelationLattice, e: &RationalIdempotent) -> Result<QMatrix> {
    let t = lattice.rank();
    let mut op = vec![vec![BigRational::zero(); t]; t];
    for (g, c) in e.element.terms() {
        let a = g_action_matrix(g, lattice)?;
        for (row, arow) in op.iter_mut().zip(&a.entries) {
            for (x, y) in row.iter_mut().zip(arow) {
                if !y.is_zero() {
                    *x += c * BigRational::from_integer(y.clone());
                }
            }
        }
    }
    Ok(op)
}

/// Predicted `dim e·(Q ⊗ R̄)`: `n` for the trivial idempotent and
/// `(n − 1)·dim e·Q[G]` otherwise.
pub fn expected_dimension(lattice: &RelationLattice, e: &RationalIdempotent) -> usize {
    let n = lattice.epimorphism().rank();
    if e.is_trivial() {
        n
    } else {
        (n - 1) * e.component_dimension
    }
}

/// The component `e·(Q ⊗ R̄)` and each matrix restricted to it.
pub fn isotypic_component(
    lattice: &RelationLattice,
    e: &RationalIdempotent,
    mats: &[RepMatrix],
) -> Result<(IsotypicComponent, Vec<QMatrix>)> {
    if !crate::grpring::same_group(e.element.group(), lattice.epimorphism().group()) {
        return Err(Error::GroupMismatch);
    }
    let op = idempotent_operator(lattice, e)?;
    // column space of op = row space of its transpose
    let (basis, pivots) = rref(&transpose(&op));
    let expected = expected_dimension(lattice, e);
    if basis.len() != expected {
        return Err(Error::consistency(format!(
            "isotypic component has dimension {}, expected {expected}",
            basis.len()
        )));
    }
    let comp = IsotypicComponent {
        basis,
        pivots,
        expected_dimension: expected,
    };
    let restricted = mats
        .iter()
        .map(|m| restrict(&comp, m))
        .collect::<Result<Vec<_>>>()?;
    Ok((comp, restricted))
}

fn restrict(comp: &IsotypicComponent, m: &RepMatrix) -> Result<QMatrix> {
    let mq = to_q(&m.entries);
    // images of the basis vectors, one per row
    let images = transpose(&mul_q(&mq, &transpose(&comp.basis)));
    let k = comp.dimension();
    let mut x = vec![vec![BigRational::zero(); k]; k];
    for (col, img) in images.iter().enumerate() {
        for (row, &p) in comp.pivots.iter().enumerate() {
            x[row][col] = img[p].clone();
        }
        // the image must be the combination read off at the pivots
        let mut recon = vec![BigRational::zero(); img.len()];
        for (row, b) in comp.basis.iter().enumerate() {
            for (r, v) in recon.iter_mut().zip(b) {
                *r += &x[row][col] * v;
            }
        }
        if recon != *img {
            return Err(Error::consistency("matrix does not preserve the component"));
        }
    }
    Ok(x)
}

/// Restricts each matrix to the span of arbitrary basis rows (in Schreier
/// coordinates). Column `k` of a result holds the coordinates of the image
/// of basis vector `k`.
pub fn restrict_to_basis(mats: &[RepMatrix], basis: &QMatrix) -> Result<Vec<QMatrix>> {
    if rank_q(basis) != basis.len() {
        return Err(Error::InvalidParameters(
            "basis rows are linearly dependent".into(),
        ));
    }
    mats.iter()
        .map(|m| {
            let images = transpose(&mul_q(&to_q(&m.entries), &transpose(basis)));
            let cols = images
                .iter()
                .map(|img| {
                    solve_rows(basis, img)
                        .ok_or_else(|| Error::consistency("span is not invariant"))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(transpose(&cols))
        })
        .collect()
}

/// Schreier coordinates of the given words of `R`, as rational rows.
pub fn coordinate_rows(
    lattice: &RelationLattice,
    words: &[crate::freewords::Word],
) -> Result<QMatrix> {
    words
        .iter()
        .map(|w| {
            let c: Vec<BigInt> = lattice.word_coordinates(w)?;
            Ok(c.into_iter().map(BigRational::from_integer).collect())
        })
        .collect()
}

/// `dim ker(J_B : M^n → M^t)` for `M = e·Q[G]`, with `B` the Schreier basis.
pub fn fox_kernel_dimension(lattice: &RelationLattice, e: &RationalIdempotent) -> Result<usize> {
    let pi = lattice.epimorphism();
    let g = pi.group();
    let order = g.order();
    let n = pi.rank();
    // basis of M = Q[G]·e as row coefficient vectors
    let (mbasis, _) = rref(&e.element.right_multiplication_matrix());
    let dim_m = mbasis.len();
    // image of (0, …, b_k at slot i, …, 0) is (∂_i(u_r)·b_k)_r
    let mut columns: QMatrix = Vec::with_capacity(n * dim_m);
    for i in 0..n {
        for b in &mbasis {
            let mut col = Vec::with_capacity(lattice.rank() * order);
            for row in lattice.basis() {
                let mut prod = vec![BigRational::zero(); order];
                for h in 0..order {
                    let c = row[i * order + h];
                    if c == 0 {
                        continue;
                    }
                    for (gamma, bg) in b.iter().enumerate() {
                        if !bg.is_zero() {
                            prod[g.mul(h, gamma)] += bg * BigRational::from_integer(c.into());
                        }
                    }
                }
                col.extend(prod);
            }
            columns.push(col);
        }
    }
    Ok(n * dim_m - rank_q(&columns))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fingroup::MarkedEpimorphism;
    use crate::grpring::rational_central_idempotents;

    #[test]
    fn c2_dimensions() {
        let pi = MarkedEpimorphism::from_cycle_strings(2, &["(1,2)", "()"]).unwrap();
        let l = RelationLattice::new(&pi).unwrap();
        let ids = rational_central_idempotents(pi.group()).unwrap();
        let (triv, _) = isotypic_component(&l, &ids[0], &[]).unwrap();
        assert_eq!(triv.dimension(), 2);
        let (sign, _) = isotypic_component(&l, &ids[1], &[]).unwrap();
        assert_eq!(sign.dimension(), 1);
    }

    #[test]
    fn fox_kernel_examples() {
        let pi = MarkedEpimorphism::from_cycle_strings(3, &["(1,2,3)", "(1,2)"]).unwrap();
        let l = RelationLattice::new(&pi).unwrap();
        let ids = rational_central_idempotents(pi.group()).unwrap();
        assert_eq!(fox_kernel_dimension(&l, &ids[0]).unwrap(), 0);
        for e in &ids[1..] {
            assert_eq!(fox_kernel_dimension(&l, e).unwrap(), e.component_dimension);
        }
    }
}
