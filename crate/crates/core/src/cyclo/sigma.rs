use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::{CycInt, CycMatrix};
use crate::error::{Error, Result};
use crate::fingroup::{FiniteGroup, MarkedEpimorphism};
use crate::fpgrp::{orbit_stabilizer, word_to_automorphism};
use crate::freewords::{
    delta, epsilon, lambda, nielsen_generators, nu, phi, torelli_generators, Endomorphism, Word,
};
use crate::grpring::{cyclic_divisor_idempotent_in, cyclic_group};
use crate::relmodule::{g_action_matrix, member_gamma_g_pi, rho_matrix, RelationLattice};

/// `F_n → C_m` with `x ↦ g` and `y_i ↦ 1`, together with its relation
/// lattice. Generator 0 is `x`; generators `1..n` are the `y_i`.
#[derive(Clone, Debug)]
pub struct CyclicSetting {
    m: u64,
    group: Arc<FiniteGroup>,
    lattice: RelationLattice,
    // g^k as an element index, and its action on lattice coordinates
    powers: Vec<usize>,
    actions: Vec<Vec<Vec<BigInt>>>,
}

impl CyclicSetting {
    pub fn new(m: u64, n: usize) -> Result<Self> {
        if m == 0 || n < 2 {
            return Err(Error::InvalidParameters(format!(
                "need m ≥ 1 and n ≥ 2, got m={m}, n={n}"
            )));
        }
        let group = cyclic_group(m as usize)?;
        let gen = usize::from(m > 1);
        let mut images = vec![0usize; n];
        images[0] = gen;
        let pi = MarkedEpimorphism::from_indices(group.clone(), images);
        let lattice = RelationLattice::new(&pi)?;
        let mut powers = Vec::with_capacity(m as usize);
        let mut gk = 0;
        for _ in 0..m {
            powers.push(gk);
            gk = group.mul(gk, gen);
        }
        let actions = powers
            .iter()
            .map(|&g| g_action_matrix(g, &lattice).map(|a| a.entries))
            .collect::<Result<_>>()?;
        Ok(CyclicSetting {
            m,
            group,
            lattice,
            powers,
            actions,
        })
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn rank(&self) -> usize {
        self.lattice.epimorphism().rank()
    }

    pub fn epimorphism(&self) -> &MarkedEpimorphism {
        self.lattice.epimorphism()
    }

    pub fn lattice(&self) -> &RelationLattice {
        &self.lattice
    }

    /// `d > 1` dividing `m`, ascending.
    pub fn divisors(&self) -> Vec<u64> {
        (2..=self.m).filter(|d| self.m.is_multiple_of(*d)).collect()
    }

    /// Generators of `Γ(C_m, π)`: the Schreier generators of the orbit of
    /// `π` under the Nielsen generators, labelled by their words, and for
    /// `n ≥ 3` also `δ_i, ε_i, λ_ij, ν_ij, φ_i^m` and the Torelli generators.
    pub fn stabilizer_generators(&self) -> Result<Vec<Endomorphism>> {
        let n = self.rank();
        let gens = nielsen_generators(n)?;
        let names: Vec<String> = gens
            .iter()
            .map(|g| g.label().unwrap_or("?").to_string())
            .collect();
        let orbit = orbit_stabilizer(self.epimorphism(), &gens)?;
        let mut out = Vec::with_capacity(orbit.schreier_words.len());
        for w in &orbit.schreier_words {
            out.push(word_to_automorphism(w, &gens)?.with_label(w.display_with(&names)));
        }
        if n >= 3 {
            let m = self.m as i64;
            for i in 1..n {
                out.push(delta(i, n)?);
                out.push(epsilon(i, n)?);
                let p = phi(i, n)?;
                let label = format!("{}^{m}", p.label().unwrap_or("phi"));
                out.push(p.pow(m)?.with_label(label));
                for j in 1..n {
                    if i != j {
                        out.push(lambda(i, j, n)?);
                        out.push(nu(i, j, n)?);
                    }
                }
            }
            out.extend(torelli_generators(n)?);
        }
        Ok(out)
    }

    /// Lattice coordinates of `v_i(d, m) = Σ_k Tr(ζ_d^k)·g^k·ȳ_i`, for
    /// `i = 1, …, n − 1`.
    pub fn eigenvectors(&self, d: u64) -> Result<Vec<Vec<BigInt>>> {
        let e = cyclic_divisor_idempotent_in(
            &self.group,
            self.powers.get(1).copied().unwrap_or(0),
            self.m,
            d,
        )?;
        let t = self.lattice.rank();
        let m = BigInt::from(self.m);
        let actions: Vec<(BigInt, &Vec<Vec<BigInt>>)> = e
            .element
            .terms()
            .map(|(g, c)| {
                let k = self
                    .powers
                    .iter()
                    .position(|&h| h == g)
                    .expect("cyclic group element");
                ((c * &m).to_integer(), &self.actions[k])
            })
            .collect();
        (1..self.rank())
            .map(|i| {
                let y = self
                    .lattice
                    .word_coordinates(&Word::generator(self.rank(), i))?;
                let mut v = vec![BigInt::zero(); t];
                for (c, a) in &actions {
                    for (r, row) in a.iter().enumerate() {
                        for (x, yk) in row.iter().zip(&y) {
                            if !x.is_zero() && !yk.is_zero() {
                                v[r] += c * x * yk;
                            }
                        }
                    }
                }
                Ok(v)
            })
            .collect()
    }

    /// `σ_d(φ)` in the row convention: row `i` lists the coefficients of
    /// `φ̄(v_i)` in the basis `v_1, …, v_{n−1}` over `Z[ζ_d]`, where `g` acts
    /// as `ζ_d`. Hence `σ_d(φ∘ψ) = σ_d(ψ)·σ_d(φ)`.
    pub fn sigma(&self, phi: &Endomorphism, d: u64) -> Result<CycMatrix> {
        if d <= 1 || !self.m.is_multiple_of(d) {
            return Err(Error::NotDivisor(d, self.m));
        }
        let pi = self.epimorphism();
        if phi.rank() != pi.rank() {
            return Err(Error::RankMismatch {
                expected: pi.rank(),
                found: phi.rank(),
            });
        }
        if !member_gamma_g_pi(phi, pi) {
            return Err(Error::NotInGammaGPi);
        }
        let rho = rho_matrix(phi, &self.lattice)?;
        let vs = self.eigenvectors(d)?;
        let order = self.m as usize;
        let n = self.rank();
        let m = BigInt::from(self.m);
        let mut rows = Vec::with_capacity(n - 1);
        for v in &vs {
            let image: Vec<BigInt> = rho
                .entries
                .iter()
                .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
                .collect();
            let fox = self.fox_of(&image);
            if fox[..order].iter().any(|c| !c.is_zero()) {
                return Err(Error::consistency("image of v_i has a nonzero x-block"));
            }
            let mut row = Vec::with_capacity(n - 1);
            for j in 1..n {
                let block = &fox[j * order..(j + 1) * order];
                let mut poly = vec![BigInt::zero(); order];
                for (k, &g) in self.powers.iter().enumerate() {
                    poly[k] = block[g].clone();
                }
                let value = CycInt::from_poly(d, poly);
                let mut coeffs = Vec::with_capacity(value.coeffs().len());
                for c in value.coeffs() {
                    let (q, r) = c.div_rem(&m);
                    if !r.is_zero() {
                        return Err(Error::consistency("σ_d entry is not integral"));
                    }
                    coeffs.push(q);
                }
                row.push(CycInt::from_poly(d, coeffs));
            }
            rows.push(row);
        }
        let sigma = CycMatrix::from_rows(d, rows);
        self.check_span(&vs, &rho.entries, &sigma)?;
        Ok(sigma)
    }

    // Fox vector of a lattice coordinate vector
    fn fox_of(&self, c: &[BigInt]) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); self.lattice.ambient_dimension()];
        for (ck, row) in c.iter().zip(self.lattice.basis()) {
            if ck.is_zero() {
                continue;
            }
            for (o, &b) in out.iter_mut().zip(row) {
                if b != 0 {
                    *o += ck * b;
                }
            }
        }
        out
    }

    // φ̄(v_i) must equal Σ_j σ_ij·v_j with g^k acting for ζ_d^k
    fn check_span(&self, vs: &[Vec<BigInt>], rho: &[Vec<BigInt>], sigma: &CycMatrix) -> Result<()> {
        let t = self.lattice.rank();
        let gk = &self.actions;
        for (i, v) in vs.iter().enumerate() {
            let lhs: Vec<BigInt> = rho
                .iter()
                .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
                .collect();
            let mut rhs = vec![BigInt::zero(); t];
            for (j, vj) in vs.iter().enumerate() {
                for (k, c) in sigma.get(i, j).coeffs().iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let a = &gk[k % gk.len()];
                    for (r, row) in a.iter().enumerate() {
                        let s: BigInt = row.iter().zip(vj).map(|(x, y)| x * y).sum();
                        rhs[r] += c * s;
                    }
                }
            }
            if lhs != rhs {
                return Err(Error::consistency("φ̄ does not preserve the ζ_d-component"));
            }
        }
        Ok(())
    }
}

/// `σ_d(φ)` for `π : F_n → C_m`; see [`CyclicSetting::sigma`].
pub fn sigma_d_matrix(phi: &Endomorphism, m: u64, d: u64, n: usize) -> Result<CycMatrix> {
    CyclicSetting::new(m, n)?.sigma(phi, d)
}

/// Exponent `k` with `det = ζ_d^k`, as a small integer for reports.
pub fn determinant_exponent(m: &CycMatrix) -> Option<i64> {
    m.is_glplus().and_then(|k| k.to_i64())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freewords::{
        fox_derivative_projected, lambda, nu, phi, psi, tau, torelli_generators,
    };

    // σ_ij = ζ_d-evaluation of π(∂φ(y_i)/∂y_j)
    fn jacobian_oracle(f: &Endomorphism, s: &CyclicSetting, d: u64) -> CycMatrix {
        let n = s.rank();
        let pi = s.epimorphism();
        let rows = (1..n)
            .map(|i| {
                (1..n)
                    .map(|j| {
                        let e = fox_derivative_projected(f.image(i), j, pi);
                        let mut poly = vec![BigInt::zero(); s.m() as usize];
                        for (k, &g) in s.powers.iter().enumerate() {
                            poly[k] = e.coeff(g).to_integer();
                        }
                        CycInt::from_poly(d, poly)
                    })
                    .collect()
            })
            .collect();
        CycMatrix::from_rows(d, rows)
    }

    #[test]
    fn identity_and_unipotents() {
        for (m, d) in [(2u64, 2u64), (3, 3), (4, 2), (4, 4), (6, 3)] {
            let s = CyclicSetting::new(m, 3).unwrap();
            assert!(s
                .sigma(&Endomorphism::identity(3), d)
                .unwrap()
                .is_identity());
            let l = s.sigma(&lambda(1, 2, 3).unwrap(), d).unwrap();
            assert_eq!(l, CycMatrix::elementary(2, 0, 1, CycInt::one(d)));
            let t = s.sigma(&tau(1, 2, 3).unwrap(), d).unwrap();
            assert_eq!(
                t,
                CycMatrix::elementary(2, 0, 1, CycInt::zeta(d).sub(&CycInt::one(d)))
            );
        }
    }

    #[test]
    fn agrees_with_jacobian() {
        let s = CyclicSetting::new(4, 3).unwrap();
        for f in torelli_generators(3).unwrap() {
            for d in [2, 4] {
                assert_eq!(s.sigma(&f, d).unwrap(), jacobian_oracle(&f, &s, d), "{f}");
            }
        }
    }

    #[test]
    fn reversed_composition() {
        let s = CyclicSetting::new(3, 3).unwrap();
        let a = tau(1, 2, 3).unwrap();
        let b = nu(2, 1, 3).unwrap();
        let ab = s.sigma(&a.compose(&b).unwrap(), 3).unwrap();
        assert_eq!(ab, s.sigma(&b, 3).unwrap().mul(&s.sigma(&a, 3).unwrap()));
    }

    #[test]
    fn determinant_of_phi_psi() {
        let s = CyclicSetting::new(5, 2).unwrap();
        let f = phi(1, 2).unwrap();
        let p = psi(1, 2).unwrap();
        let a = f.inverse().unwrap().compose(&p).unwrap();
        assert_eq!(
            s.sigma(&a, 5).unwrap().determinant(),
            CycInt::zeta_pow(5, -1)
        );
        let b = p.inverse().unwrap().compose(&f).unwrap();
        assert_eq!(s.sigma(&b, 5).unwrap().determinant(), CycInt::zeta(5));
    }

    #[test]
    fn rejects_bad_input() {
        let s = CyclicSetting::new(4, 3).unwrap();
        assert_eq!(
            s.sigma(&Endomorphism::identity(3), 3),
            Err(Error::NotDivisor(3, 4))
        );
        assert_eq!(s.sigma(&phi(1, 3).unwrap(), 2), Err(Error::NotInGammaGPi));
    }
}
