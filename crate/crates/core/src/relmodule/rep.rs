use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::RelationLattice;
use crate::error::{Error, Result};
use crate::fingroup::MarkedEpimorphism;
use crate::freewords::{fox_derivative_projected, fox_vector, Endomorphism};
use crate::grpring::GroupRingElement;
use crate::linalg::{det_z, mul_z, transpose, ZMatrix};

/// An integral `t × t` matrix acting on column vectors of lattice
/// coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepMatrix {
    pub entries: ZMatrix,
    pub source: String,
}

impl RepMatrix {
    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn determinant(&self) -> BigInt {
        det_z(&self.entries)
    }

    pub fn mul(&self, other: &RepMatrix) -> RepMatrix {
        RepMatrix {
            entries: mul_z(&self.entries, &other.entries),
            source: format!("{}·{}", self.source, other.source),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.entries.iter().enumerate().all(|(i, r)| {
            r.iter()
                .enumerate()
                .all(|(j, x)| if i == j { x.is_one() } else { x.is_zero() })
        })
    }

    pub fn entries_i64(&self) -> Vec<Vec<i64>> {
        use num_traits::ToPrimitive;
        self.entries
            .iter()
            .map(|r| {
                r.iter()
                    .map(|x| x.to_i64().expect("entry fits in i64"))
                    .collect()
            })
            .collect()
    }
}

/// Whether `φ(R) = R`: the assignment `π(x_i) ↦ π(φ(x_i))` must extend to an
/// automorphism of `G`. Decided on the subgroup of `G × G` generated by the
/// pairs `(π(x_i), π(φ(x_i)))`.
pub fn member_gamma_r(phi: &Endomorphism, pi: &MarkedEpimorphism) -> bool {
    if phi.rank() != pi.rank() {
        return false;
    }
    let g = pi.group();
    let images: Vec<usize> = phi.images().iter().map(|w| pi.eval(w)).collect();
    if g.subgroup_closure(&images).len() != g.order() {
        return false;
    }
    // graph subgroup, as pairs; well defined iff it meets {1} × G trivially
    let order = g.order();
    let mut seen = vec![false; order * order];
    seen[0] = true;
    let mut queue = vec![(0usize, 0usize)];
    let mut head = 0;
    while head < queue.len() {
        let (a, b) = queue[head];
        head += 1;
        for (i, &img) in images.iter().enumerate() {
            let p = (g.mul(a, pi.image(i)), g.mul(b, img));
            if !seen[p.0 * order + p.1] {
                if p.0 == 0 && p.1 != 0 {
                    return false;
                }
                seen[p.0 * order + p.1] = true;
                queue.push(p);
            }
        }
        if queue.len() > order {
            return false;
        }
    }
    true
}

/// Whether `π ∘ φ = π`.
pub fn member_gamma_g_pi(phi: &Endomorphism, pi: &MarkedEpimorphism) -> bool {
    phi.rank() == pi.rank()
        && phi
            .images()
            .iter()
            .enumerate()
            .all(|(i, w)| pi.eval(w) == pi.image(i))
}

/// Entry `(i, j)` is `π(∂φ(x_i)/∂x_j)`.
pub fn fox_jacobian(phi: &Endomorphism, pi: &MarkedEpimorphism) -> Vec<Vec<GroupRingElement>> {
    phi.images()
        .iter()
        .map(|w| {
            (0..pi.rank())
                .map(|j| fox_derivative_projected(w, j, pi))
                .collect()
        })
        .collect()
}

/// `ρ(φ)`: column `r` holds the coordinates of `φ(w_r)` for the Schreier
/// word `w_r`, so that `ρ(φ∘ψ) = ρ(φ)·ρ(ψ)`.
pub fn rho_matrix(phi: &Endomorphism, lattice: &RelationLattice) -> Result<RepMatrix> {
    let pi = lattice.epimorphism();
    if phi.rank() != pi.rank() {
        return Err(Error::RankMismatch {
            expected: pi.rank(),
            found: phi.rank(),
        });
    }
    if !member_gamma_r(phi, pi) {
        return Err(Error::NotInGammaR);
    }
    let cols = lattice
        .schreier_words()
        .iter()
        .map(|w| lattice.coordinates(&fox_vector(&phi.apply_unchecked(w), pi)))
        .collect::<Result<Vec<_>>>()?;
    Ok(RepMatrix {
        entries: transpose(&cols),
        source: phi.label().unwrap_or("φ").to_string(),
    })
}

/// Matrix of the left action of the element `g` on `R̄`, in the Schreier
/// basis: conjugation by the transversal word of `g`.
pub fn g_action_matrix(g: usize, lattice: &RelationLattice) -> Result<RepMatrix> {
    let rep = &lattice.transversal()[g];
    let rep_inv = rep.inverse();
    let pi = lattice.epimorphism();
    let cols = lattice
        .schreier_words()
        .iter()
        .map(|w| lattice.coordinates(&fox_vector(&rep.mul(w).mul(&rep_inv), pi)))
        .collect::<Result<Vec<_>>>()?;
    Ok(RepMatrix {
        entries: transpose(&cols),
        source: format!("g{g}"),
    })
}

/// The action of `φ ∈ Γ(G, π)` on `Z[G]^n` with basis `γ·e_i`, indexed
/// `(i, γ)`, acting on column vectors. Entry `((j, δ), (i, γ))` is the
/// coefficient of `δ` in `γ·π(∂φ(x_i)/∂x_j)`.
pub fn eta_matrix(phi: &Endomorphism, pi: &MarkedEpimorphism) -> Result<ZMatrix> {
    if phi.rank() != pi.rank() {
        return Err(Error::RankMismatch {
            expected: pi.rank(),
            found: phi.rank(),
        });
    }
    if !member_gamma_g_pi(phi, pi) {
        return Err(Error::NotInGammaGPi);
    }
    let g = pi.group();
    let order = g.order();
    let n = pi.rank();
    let mut m = vec![vec![BigInt::zero(); n * order]; n * order];
    for (i, row) in fox_jacobian(phi, pi).iter().enumerate() {
        for (j, jij) in row.iter().enumerate() {
            for (h, c) in jij.terms() {
                let c = c.to_integer();
                for gamma in 0..order {
                    let delta = g.mul(gamma, h);
                    m[j * order + delta][i * order + gamma] += &c;
                }
            }
        }
    }
    Ok(m)
}

/// The quotient map `Q[G]^n → I(Q[G])`, `v ↦ Σ v_i (g_i − 1)`, as a
/// `|G| × n|G|` matrix.
pub fn quotient_matrix(pi: &MarkedEpimorphism) -> ZMatrix {
    let order = pi.group().order();
    let n = pi.rank();
    let mut q = vec![vec![BigInt::zero(); n * order]; order];
    for i in 0..n {
        for gamma in 0..order {
            q[pi.right_mul(gamma, i, 1)][i * order + gamma] += 1;
            q[gamma][i * order + gamma] -= 1;
        }
    }
    q
}

/// Checks that `η(φ)` preserves the lattice with restriction `ρ(φ)` and
/// induces the identity on the quotient.
pub fn verify_eta(eta: &ZMatrix, rho: &RepMatrix, lattice: &RelationLattice) -> Result<()> {
    let bt: ZMatrix = transpose(
        &lattice
            .basis()
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect::<Vec<Vec<_>>>(),
    );
    if mul_z(eta, &bt) != mul_z(&bt, &rho.entries) {
        return Err(Error::consistency(
            "η does not restrict to ρ on the lattice",
        ));
    }
    let q = quotient_matrix(lattice.epimorphism());
    if mul_z(&q, eta) != q {
        return Err(Error::consistency(
            "η does not act trivially on the quotient",
        ));
    }
    Ok(())
}

/// `det = ±1`.
pub fn is_unimodular(m: &RepMatrix) -> bool {
    m.determinant().abs().is_one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freewords::{alpha_plus_f2, delta, parse_word, phi};

    fn c2() -> MarkedEpimorphism {
        MarkedEpimorphism::from_cycle_strings(2, &["(1,2)", "()"]).unwrap()
    }

    fn c2_n3() -> MarkedEpimorphism {
        MarkedEpimorphism::from_cycle_strings(2, &["(1,2)", "()", "()"]).unwrap()
    }

    #[test]
    fn membership_examples() {
        let pi = c2();
        assert!(member_gamma_r(&Endomorphism::identity(2), &pi));
        assert!(!member_gamma_r(&alpha_plus_f2(), &pi));
        assert!(member_gamma_r(&delta(1, 2).unwrap(), &pi));
        let pi3 = c2_n3();
        assert!(member_gamma_g_pi(&Endomorphism::identity(3), &pi3));
        assert!(member_gamma_g_pi(&phi(1, 3).unwrap().pow(2).unwrap(), &pi3));
        assert!(!member_gamma_g_pi(&phi(1, 3).unwrap(), &pi3));
    }

    #[test]
    fn rho_identity_and_alpha_example() {
        let pi = c2();
        let l = RelationLattice::new(&pi).unwrap();
        assert!(rho_matrix(&Endomorphism::identity(2), &l)
            .unwrap()
            .is_identity());
        // x ↦ y x
        let a = Endomorphism::new(
            vec![
                parse_word("x2 x1", 2).unwrap(),
                parse_word("x2", 2).unwrap(),
            ],
            Some(vec![
                parse_word("x2^-1 x1", 2).unwrap(),
                parse_word("x2", 2).unwrap(),
            ]),
            Some("a".into()),
        )
        .unwrap();
        let rho = rho_matrix(&a, &l).unwrap();
        let idx = |s: &str| {
            l.schreier_words()
                .iter()
                .position(|w| w.to_string() == s)
                .unwrap()
        };
        let (sq, y, gy) = (idx("x1^2"), idx("x2"), idx("x1 x2 x1^-1"));
        let e = rho.entries_i64();
        assert_eq!((e[sq][sq], e[y][sq], e[gy][sq]), (1, 1, 1));
        assert_eq!((e[y][y], e[gy][y], e[sq][y]), (1, 0, 0));
        assert_eq!((e[gy][gy], e[y][gy], e[sq][gy]), (1, 0, 0));
        assert!(is_unimodular(&rho));
    }

    #[test]
    fn g_action_c2() {
        let l = RelationLattice::new(&c2()).unwrap();
        assert!(g_action_matrix(0, &l).unwrap().is_identity());
        let a = g_action_matrix(1, &l).unwrap().entries_i64();
        let idx = |s: &str| {
            l.schreier_words()
                .iter()
                .position(|w| w.to_string() == s)
                .unwrap()
        };
        let (sq, y, gy) = (idx("x1^2"), idx("x2"), idx("x1 x2 x1^-1"));
        assert_eq!(a[gy][y], 1);
        assert_eq!(a[y][gy], 1);
        assert_eq!(a[sq][sq], 1);
    }

    #[test]
    fn eta_identity_and_restriction() {
        let pi = c2_n3();
        let l = RelationLattice::new(&pi).unwrap();
        let id = eta_matrix(&Endomorphism::identity(3), &pi).unwrap();
        assert_eq!(id, crate::linalg::identity_z(6));
        let f = phi(1, 3).unwrap().pow(2).unwrap();
        let eta = eta_matrix(&f, &pi).unwrap();
        let rho = rho_matrix(&f, &l).unwrap();
        verify_eta(&eta, &rho, &l).unwrap();
        assert_eq!(
            eta_matrix(&phi(1, 3).unwrap(), &pi),
            Err(Error::NotInGammaGPi)
        );
    }
}
