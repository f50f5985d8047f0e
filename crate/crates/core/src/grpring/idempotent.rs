//! Primitive central idempotents of `Q[G]`.

use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;

use super::{dixon_character_table, GroupRingElement};
use crate::cyclo::{euler_phi, CycInt};
use crate::error::{Error, Result};
use crate::fingroup::{FiniteGroup, Permutation};
use crate::linalg::rank_q;

#[derive(serde::Serialize, serde::Deserialize)]
struct IdempotentRecord {
    coeffs: Vec<(usize, String)>,
    dim: usize,
}

/// A central idempotent `e` together with `dim_Q e·Q[G]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalIdempotent {
    pub element: GroupRingElement,
    pub component_dimension: usize,
}

impl RationalIdempotent {
    /// Checks `e² = e`, centrality, and that the rank of right
    /// multiplication by `e` equals the stated dimension.
    pub fn validate(&self) -> Result<()> {
        let e = &self.element;
        if e.mul(e)? != *e {
            return Err(Error::consistency("element is not idempotent"));
        }
        if !e.is_central() {
            return Err(Error::consistency("idempotent is not central"));
        }
        let rank = rank_q(&e.right_multiplication_matrix());
        if rank != self.component_dimension {
            return Err(Error::consistency(format!(
                "component dimension {} but e·Q[G] has dimension {rank}",
                self.component_dimension
            )));
        }
        Ok(())
    }

    /// Whether this is `(1/|G|) Σ g`.
    pub fn is_trivial(&self) -> bool {
        let g = self.element.group();
        let c = BigRational::new(BigInt::one(), BigInt::from(g.order()));
        (0..g.order()).all(|x| self.element.coeff(x) == c)
    }
}

/// Checks that a family of idempotents is pairwise orthogonal and sums to one.
pub fn validate_family(family: &[RationalIdempotent]) -> Result<()> {
    let Some(first) = family.first() else {
        return Err(Error::consistency("empty idempotent family"));
    };
    let group = first.element.group().clone();
    let mut sum = GroupRingElement::zero(group.clone());
    for (i, a) in family.iter().enumerate() {
        a.validate()?;
        sum = sum.add(&a.element)?;
        for b in &family[i + 1..] {
            if !a.element.mul(&b.element)?.is_zero() {
                return Err(Error::consistency("idempotents are not orthogonal"));
            }
        }
    }
    if sum != GroupRingElement::one(group) {
        return Err(Error::consistency("idempotents do not sum to one"));
    }
    Ok(())
}

/// One idempotent per Galois orbit of irreducible complex characters,
/// trivial component first.
pub fn rational_central_idempotents(group: &Arc<FiniteGroup>) -> Result<Vec<RationalIdempotent>> {
    let table = dixon_character_table(group)?;
    let e = table.exponent;
    let r = table.values.len();
    let units: Vec<i64> = (1..=e as i64).filter(|a| a.gcd(&(e as i64)) == 1).collect();
    let mut orbit_of = vec![usize::MAX; r];
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    for chi in 0..r {
        if orbit_of[chi] != usize::MAX {
            continue;
        }
        let mut orbit = Vec::new();
        for &a in &units {
            let conj: Vec<CycInt> = table.values[chi].iter().map(|v| v.galois(a)).collect();
            let psi = table
                .values
                .iter()
                .position(|row| *row == conj)
                .ok_or_else(|| Error::consistency("Galois conjugate is not a character"))?;
            if orbit_of[psi] == usize::MAX {
                orbit_of[psi] = orbits.len();
                orbit.push(psi);
            }
        }
        orbit.sort_unstable();
        orbits.push(orbit);
    }
    let order = group.order();
    let mut out = Vec::with_capacity(orbits.len());
    for orbit in &orbits {
        let mut coeffs = Vec::with_capacity(order);
        for g in 0..order {
            let ginv = group.inverse(g);
            let mut s = CycInt::zero(e);
            for &chi in orbit {
                s = s.add(
                    &table
                        .value(chi, ginv)
                        .scale(&BigInt::from(table.degrees[chi])),
                );
            }
            let c = s
                .as_integer()
                .ok_or_else(|| Error::consistency("orbit sum has irrational coefficients"))?;
            coeffs.push((g, BigRational::new(c, BigInt::from(order))));
        }
        let element = GroupRingElement::from_terms(group.clone(), coeffs);
        let dim = orbit
            .iter()
            .map(|&chi| (table.degrees[chi] * table.degrees[chi]) as usize)
            .sum();
        let idem = RationalIdempotent {
            element,
            component_dimension: dim,
        };
        idem.validate()?;
        out.push(idem);
    }
    Ok(out)
}

/// The cyclic group of order `m`, generated by an `m`-cycle; the element
/// with index `k` is `g^k`.
pub fn cyclic_group(m: usize) -> Result<Arc<FiniteGroup>> {
    if m == 0 {
        return Err(Error::InvalidParameters("cyclic group of order 0".into()));
    }
    let images: Vec<u32> = (0..m as u32).map(|i| (i + 1) % m as u32).collect();
    let gen = Permutation::new(images)?;
    Ok(Arc::new(FiniteGroup::close(m, vec![gen])?))
}

/// Ramanujan's sum `Tr_{Q(ζ_d)/Q}(ζ_d^k)`.
fn trace_of_root(d: u64, k: i64) -> BigInt {
    let g = (k.rem_euclid(d as i64) as u64).gcd(&d);
    let q = d / g;
    let mu = mobius(q);
    BigInt::from(mu * (euler_phi(d) / euler_phi(q)) as i64)
}

fn mobius(mut n: u64) -> i64 {
    let mut out = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            out = -out;
        }
        p += 1;
    }
    if n > 1 {
        out = -out;
    }
    out
}

/// `e_d = (1/m) Σ_k Tr(ζ_d^{-k}) g^k` in `Q[C_m]`.
pub fn cyclic_divisor_idempotent(m: u64, d: u64) -> Result<RationalIdempotent> {
    let group = cyclic_group(m as usize)?;
    cyclic_divisor_idempotent_in(&group, usize::from(m > 1), m, d)
}

/// As [`cyclic_divisor_idempotent`], inside a given cyclic group of order `m`
/// generated by the element with index `generator`.
pub fn cyclic_divisor_idempotent_in(
    group: &Arc<FiniteGroup>,
    generator: usize,
    m: u64,
    d: u64,
) -> Result<RationalIdempotent> {
    if d == 0 || !m.is_multiple_of(d) {
        return Err(Error::NotDivisor(d, m));
    }
    if group.order() as u64 != m || group.element_order(generator) as u64 != m {
        return Err(Error::InvalidParameters(format!(
            "element {generator} does not generate a group of order {m}"
        )));
    }
    let mut terms = Vec::with_capacity(m as usize);
    let mut gk = 0usize;
    for k in 0..m as i64 {
        terms.push((gk, BigRational::new(trace_of_root(d, -k), BigInt::from(m))));
        gk = group.mul(gk, generator);
    }
    let element = GroupRingElement::from_terms(group.clone(), terms);
    Ok(RationalIdempotent {
        element,
        component_dimension: euler_phi(d) as usize,
    })
}

/// Sum of the component dimensions.
pub fn total_dimension(family: &[RationalIdempotent]) -> usize {
    family.iter().map(|e| e.component_dimension).sum()
}

/// Reads a family of idempotents from JSON, a list of
/// `{"coeffs": [[element-index, "p/q"], …], "dim": int}`, and validates it
/// as a complete orthogonal family.
pub fn idempotents_from_json(
    group: &Arc<FiniteGroup>,
    text: &str,
) -> Result<Vec<RationalIdempotent>> {
    let records: Vec<IdempotentRecord> =
        serde_json::from_str(text).map_err(|e| Error::Input(e.to_string()))?;
    let mut out = Vec::with_capacity(records.len());
    for r in records {
        let terms = r
            .coeffs
            .iter()
            .map(|(g, c)| {
                if *g >= group.order() {
                    return Err(Error::Input(format!("element index {g} out of range")));
                }
                let c: BigRational = c
                    .trim()
                    .parse()
                    .map_err(|_| Error::Input(format!("bad coefficient `{c}`")))?;
                Ok((*g, c))
            })
            .collect::<Result<Vec<_>>>()?;
        out.push(RationalIdempotent {
            element: GroupRingElement::from_terms(group.clone(), terms),
            component_dimension: r.dim,
        });
    }
    validate_family(&out)?;
    Ok(out)
}

/// Inverse of [`idempotents_from_json`].
pub fn idempotents_to_json(family: &[RationalIdempotent]) -> String {
    let records: Vec<IdempotentRecord> = family
        .iter()
        .map(|e| IdempotentRecord {
            coeffs: e.element.terms().map(|(g, c)| (g, c.to_string())).collect(),
            dim: e.component_dimension,
        })
        .collect();
    serde_json::to_string(&records).expect("idempotents serialize")
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn c2_idempotents() {
        let g = cyclic_group(2).unwrap();
        let ids = rational_central_idempotents(&g).unwrap();
        assert_eq!(ids.len(), 2);
        assert_eq!(ids[0].element.dense(), vec![q(1, 2), q(1, 2)]);
        assert_eq!(ids[1].element.dense(), vec![q(1, 2), q(-1, 2)]);
        validate_family(&ids).unwrap();
    }

    #[test]
    fn c4_dimensions() {
        let g = cyclic_group(4).unwrap();
        let ids = rational_central_idempotents(&g).unwrap();
        let dims: Vec<usize> = ids.iter().map(|e| e.component_dimension).collect();
        assert_eq!(dims, vec![1, 1, 2]);
        let e4 = cyclic_divisor_idempotent(4, 4).unwrap();
        assert_eq!(
            e4.element.dense(),
            vec![q(1, 2), q(0, 1), q(-1, 2), q(0, 1)]
        );
        assert!(ids.iter().any(|e| e.element == e4.element));
    }

    #[test]
    fn divisor_idempotents() {
        assert_eq!(
            cyclic_divisor_idempotent(2, 1).unwrap().element.dense(),
            vec![q(1, 2), q(1, 2)]
        );
        assert_eq!(
            cyclic_divisor_idempotent(2, 2).unwrap().element.dense(),
            vec![q(1, 2), q(-1, 2)]
        );
        assert!(matches!(
            cyclic_divisor_idempotent(6, 4),
            Err(Error::NotDivisor(4, 6))
        ));
        for m in 1..=12u64 {
            let fam: Vec<_> = (1..=m)
                .filter(|d| m % d == 0)
                .map(|d| cyclic_divisor_idempotent(m, d).unwrap())
                .collect();
            assert_eq!(total_dimension(&fam), m as usize);
            validate_family(&fam).unwrap();
        }
    }

    #[test]
    fn divisor_matches_galois_orbits() {
        for m in [3usize, 5, 6, 8] {
            let g = cyclic_group(m).unwrap();
            let ids = rational_central_idempotents(&g).unwrap();
            for d in (1..=m as u64).filter(|d| (m as u64).is_multiple_of(*d)) {
                let e = cyclic_divisor_idempotent(m as u64, d).unwrap();
                assert!(ids.contains(&e), "m={m} d={d}");
            }
            assert!(ids[0].is_trivial());
        }
    }

    #[test]
    fn nonabelian_families() {
        let s3 = Arc::new(FiniteGroup::from_cycle_strings(3, &["(1,2,3)", "(1,2)"]).unwrap());
        let ids = rational_central_idempotents(&s3).unwrap();
        assert_eq!(
            ids.iter()
                .map(|e| e.component_dimension)
                .collect::<Vec<_>>(),
            vec![1, 1, 4]
        );
        validate_family(&ids).unwrap();
        assert!(ids[0].element.augmentation().is_one());
        assert!(ids[1].element.augmentation().is_zero());
    }

    #[test]
    fn json_round_trip() {
        let g = Arc::new(FiniteGroup::from_cycle_strings(3, &["(1,2,3)", "(1,2)"]).unwrap());
        let family = rational_central_idempotents(&g).unwrap();
        let text = idempotents_to_json(&family);
        assert_eq!(idempotents_from_json(&g, &text).unwrap(), family);
        // dropping one member breaks completeness
        let partial = idempotents_to_json(&family[1..]);
        assert!(idempotents_from_json(&g, &partial).is_err());
        assert!(matches!(
            idempotents_from_json(&g, "[{\"coeffs\": [[0, \"x\"]], \"dim\": 1}]"),
            Err(Error::Input(_))
        ));
    }
}
