//! Complex character tables by Dixon's modular method.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::cyclo::CycInt;
use crate::error::{Error, Result};
use crate::fingroup::FiniteGroup;

/// Character table with values in `Z[ζ_e]`, `e` the group exponent.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    pub classes: Vec<Vec<usize>>,
    pub exponent: u64,
    /// `values[χ][class]`.
    pub values: Vec<Vec<CycInt>>,
    pub degrees: Vec<u64>,
    /// Index of the class containing each element.
    pub class_of: Vec<usize>,
}

impl CharacterTable {
    pub fn class_sizes(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c.len()).collect()
    }

    /// `χ(g)` for the element with index `g`.
    pub fn value(&self, chi: usize, g: usize) -> &CycInt {
        &self.values[chi][self.class_of[g]]
    }

    /// Checks row and column orthogonality and `Σ χ(1)² = |G|`.
    pub fn verify(&self, group: &FiniteGroup) -> Result<()> {
        let e = self.exponent;
        let order = BigInt::from(group.order());
        let sizes = self.class_sizes();
        let r = self.classes.len();
        if self.values.len() != r {
            return Err(Error::consistency(
                "character count differs from class count",
            ));
        }
        let deg_sq: u64 = self.degrees.iter().map(|d| d * d).sum();
        if deg_sq != group.order() as u64 {
            return Err(Error::consistency(
                "degrees squared do not sum to the group order",
            ));
        }
        for i in 0..r {
            for j in 0..r {
                let mut s = CycInt::zero(e);
                for (k, size) in sizes.iter().enumerate() {
                    s = s.add(
                        &self.values[i][k]
                            .mul(&self.values[j][k].conj())
                            .scale(&BigInt::from(*size)),
                    );
                }
                let expect = if i == j {
                    CycInt::from_int(e, order.clone())
                } else {
                    CycInt::zero(e)
                };
                if s != expect {
                    return Err(Error::consistency(format!(
                        "row orthogonality fails for characters {i}, {j}"
                    )));
                }
            }
        }
        for k in 0..r {
            for l in 0..r {
                let mut s = CycInt::zero(e);
                for chi in &self.values {
                    s = s.add(&chi[k].mul(&chi[l].conj()));
                }
                let expect = if k == l {
                    CycInt::from_int(e, &order / BigInt::from(sizes[k]))
                } else {
                    CycInt::zero(e)
                };
                if s != expect {
                    return Err(Error::consistency(format!(
                        "column orthogonality fails for classes {k}, {l}"
                    )));
                }
            }
        }
        Ok(())
    }
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = (r as u128 * b as u128 % p as u128) as u64;
        }
        b = (b as u128 * b as u128 % p as u128) as u64;
        e >>= 1;
    }
    r
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut k = 2;
    while k * k <= n {
        if n.is_multiple_of(k) {
            return false;
        }
        k += 1;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn primitive_root(p: u64) -> u64 {
    let fs = prime_factors(p - 1);
    (2..p)
        .find(|&g| fs.iter().all(|&q| pow_mod(g, (p - 1) / q, p) != 1))
        .unwrap_or(1)
}

/// Smallest prime `p ≡ 1 (mod e)` with `p > 2·order`.
fn choose_prime(e: u64, order: u64) -> Result<u64> {
    let bound = 1u64 << 40;
    let mut p = (2 * order / e) * e + 1;
    while p < bound {
        if p > 2 * order && is_prime(p) {
            return Ok(p);
        }
        p += e;
    }
    Err(Error::NoPrime(bound))
}

/// Basis of the null space of the `rows × cols` matrix over `F_p`.
fn nullspace_mod(mut m: Vec<Vec<u64>>, cols: usize, p: u64) -> Vec<Vec<u64>> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(r) = (row..m.len()).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(row, r);
        let inv = inv_mod(m[row][col], p);
        for v in m[row].iter_mut() {
            *v = *v * inv % p;
        }
        for r in 0..m.len() {
            if r != row && m[r][col] != 0 {
                let f = m[r][col];
                for c in 0..cols {
                    m[r][c] = (m[r][c] + p - f * m[row][c] % p) % p;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == m.len() {
            break;
        }
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0u64; cols];
            v[f] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = (p - m[r][f]) % p;
            }
            v
        })
        .collect()
}

/// The complete character table of `group`.
pub fn dixon_character_table(group: &Arc<FiniteGroup>) -> Result<CharacterTable> {
    let order = group.order();
    let classes = group.conjugacy_classes();
    let r = classes.len();
    let mut class_of = vec![0usize; order];
    for (k, c) in classes.iter().enumerate() {
        for &g in c {
            class_of[g] = k;
        }
    }
    let e = group.exponent() as u64;
    let p = choose_prime(e, order as u64)?;
    let sizes: Vec<u64> = classes.iter().map(|c| c.len() as u64).collect();
    let inverse_class: Vec<usize> = classes
        .iter()
        .map(|c| class_of[group.inverse(c[0])])
        .collect();

    // class matrices: mats[i][j][k] = #{x ∈ C_i : x⁻¹ z_k ∈ C_j} for fixed z_k ∈ C_k
    let mut mats = vec![vec![vec![0u64; r]; r]; r];
    for (i, ci) in classes.iter().enumerate() {
        for (k, ck) in classes.iter().enumerate() {
            let z = ck[0];
            for &x in ci {
                let y = group.mul(group.inverse(x), z);
                mats[i][class_of[y]][k] += 1;
            }
        }
    }

    // split F_p^r into common eigenspaces
    let mut spaces: Vec<Vec<Vec<u64>>> = vec![(0..r)
        .map(|i| {
            let mut v = vec![0u64; r];
            v[i] = 1;
            v
        })
        .collect()];
    for mat in mats.iter().skip(1) {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let mut next = Vec::new();
        for space in spaces {
            if space.len() == 1 {
                next.push(space);
                continue;
            }
            let images: Vec<Vec<u64>> = space
                .iter()
                .map(|b| {
                    (0..r)
                        .map(|j| (0..r).map(|k| mat[j][k] % p * b[k] % p).sum::<u64>() % p)
                        .collect()
                })
                .collect();
            let mut found = 0;
            for lambda in 0..p {
                if found == space.len() {
                    break;
                }
                // columns: (M − λ) b_k
                let sys: Vec<Vec<u64>> = (0..r)
                    .map(|j| {
                        (0..space.len())
                            .map(|k| (images[k][j] + p - lambda * space[k][j] % p) % p)
                            .collect()
                    })
                    .collect();
                let null = nullspace_mod(sys, space.len(), p);
                if null.is_empty() {
                    continue;
                }
                found += null.len();
                next.push(
                    null.iter()
                        .map(|c| {
                            (0..r)
                                .map(|j| {
                                    (0..space.len())
                                        .map(|k| c[k] * space[k][j] % p)
                                        .sum::<u64>()
                                        % p
                                })
                                .collect()
                        })
                        .collect(),
                );
            }
            if found != space.len() {
                return Err(Error::consistency(
                    "class matrix does not split over the chosen prime",
                ));
            }
        }
        spaces = next;
    }
    if spaces.len() != r {
        return Err(Error::consistency(
            "eigenspaces did not separate the characters",
        ));
    }

    let z = pow_mod(primitive_root(p), (p - 1) / e, p);
    let orders: Vec<usize> = classes.iter().map(|c| group.element_order(c[0])).collect();
    let mut table: Vec<(u64, Vec<CycInt>)> = Vec::with_capacity(r);
    for space in &spaces {
        let v = &space[0];
        let scale = inv_mod(v[0], p);
        let omega: Vec<u64> = v.iter().map(|x| x * scale % p).collect();
        let mut s = 0u64;
        for k in 0..r {
            s = (s + omega[k] * omega[inverse_class[k]] % p * inv_mod(sizes[k] % p, p)) % p;
        }
        let deg_sq = order as u64 % p * inv_mod(s, p) % p;
        let degree = (1..=order as u64)
            .take_while(|d| d * d <= order as u64)
            .find(|d| d * d == deg_sq)
            .ok_or_else(|| Error::consistency("character degree is not a square root"))?;
        let chi_p: Vec<u64> = (0..r)
            .map(|k| omega[k] * degree % p * inv_mod(sizes[k] % p, p) % p)
            .collect();
        let mut values = Vec::with_capacity(r);
        for k in 0..r {
            let g = classes[k][0];
            let o = orders[k] as u64;
            let zo = pow_mod(z, e / o, p);
            let mut poly = vec![BigInt::zero(); e as usize];
            let mut gl = 0usize;
            let mut powers = Vec::with_capacity(o as usize);
            for _ in 0..o {
                powers.push(chi_p[class_of[gl]]);
                gl = group.mul(gl, g);
            }
            let inv_o = inv_mod(o % p, p);
            for kk in 0..o {
                let mut m = 0u64;
                for (l, val) in powers.iter().enumerate() {
                    let w = pow_mod(zo, (o - (kk * l as u64) % o) % o, p);
                    m = (m + val * w) % p;
                }
                m = m * inv_o % p;
                if m > degree {
                    return Err(Error::consistency(
                        "eigenvalue multiplicity exceeds the degree",
                    ));
                }
                poly[(kk * (e / o)) as usize] += BigInt::from(m);
            }
            values.push(CycInt::from_poly(e, poly));
        }
        table.push((degree, values));
    }
    let trivial = table
        .iter()
        .position(|(_, vals)| vals.iter().all(|v| v.is_one()))
        .ok_or_else(|| Error::consistency("no trivial character"))?;
    let triv = table.remove(trivial);
    table.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.cmp(&b.1)));
    table.insert(0, triv);

    let out = CharacterTable {
        classes,
        exponent: e,
        degrees: table.iter().map(|t| t.0).collect(),
        values: table.into_iter().map(|t| t.1).collect(),
        class_of,
    };
    out.verify(group)?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn table(degree: usize, gens: &[&str]) -> (Arc<FiniteGroup>, CharacterTable) {
        let g = Arc::new(FiniteGroup::from_cycle_strings(degree, gens).unwrap());
        let t = dixon_character_table(&g).unwrap();
        (g, t)
    }

    #[test]
    fn c2_table() {
        let (_, t) = table(2, &["(1,2)"]);
        let ints: Vec<Vec<i64>> = t
            .values
            .iter()
            .map(|row| {
                row.iter()
                    .map(|v| v.as_integer().unwrap().to_i64().unwrap())
                    .collect()
            })
            .collect();
        assert_eq!(ints, vec![vec![1, 1], vec![1, -1]]);
    }

    #[test]
    fn s3_degrees() {
        let (_, t) = table(3, &["(1,2,3)", "(1,2)"]);
        assert_eq!(t.degrees, vec![1, 1, 2]);
    }

    #[test]
    fn c3_values_are_roots_of_unity() {
        let (_, t) = table(3, &["(1,2,3)"]);
        assert_eq!(t.degrees, vec![1, 1, 1]);
        for row in &t.values {
            for v in row {
                assert!(v.root_of_unity_exponent().is_some());
            }
        }
    }

    #[test]
    fn larger_tables_verify() {
        let (_, t) = table(5, &["(1,2,3,4,5)", "(1,2,3)"]);
        assert_eq!(t.degrees, vec![1, 3, 3, 4, 5]);
        let (_, t) = table(8, &["(1,7,2,8)(3,6,4,5)", "(1,4,2,3)(5,7,6,8)"]);
        assert_eq!(t.degrees, vec![1, 1, 1, 1, 2]);
    }

    #[test]
    fn prime_choice() {
        assert_eq!(choose_prime(2, 2).unwrap(), 5);
        assert_eq!(choose_prime(30, 60).unwrap(), 151);
    }
}
