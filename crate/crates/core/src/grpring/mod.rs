//! The rational group ring `Q[G]`, character tables and central idempotents.

mod chartab;
mod idempotent;

pub use chartab::{dixon_character_table, CharacterTable};
pub use idempotent::{
    cyclic_divisor_idempotent, cyclic_divisor_idempotent_in, cyclic_group, idempotents_from_json,
    idempotents_to_json, rational_central_idempotents, total_dimension, validate_family,
    RationalIdempotent,
};

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::fingroup::FiniteGroup;

/// A sparse element of `Q[G]`; zero coefficients are never stored.
#[derive(Clone, Debug)]
pub struct GroupRingElement {
    group: Arc<FiniteGroup>,
    coeffs: BTreeMap<usize, BigRational>,
}

impl PartialEq for GroupRingElement {
    fn eq(&self, other: &Self) -> bool {
        same_group(&self.group, &other.group) && self.coeffs == other.coeffs
    }
}

impl Eq for GroupRingElement {}

pub(crate) fn same_group(a: &Arc<FiniteGroup>, b: &Arc<FiniteGroup>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl GroupRingElement {
    pub fn zero(group: Arc<FiniteGroup>) -> Self {
        GroupRingElement {
            group,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(group: Arc<FiniteGroup>) -> Self {
        Self::basis(group, 0)
    }

    /// The group element with index `g`, as a ring element.
    pub fn basis(group: Arc<FiniteGroup>, g: usize) -> Self {
        Self::from_terms(group, [(g, BigRational::one())])
    }

    /// Sums the given terms; repeated indices accumulate.
    pub fn from_terms(
        group: Arc<FiniteGroup>,
        terms: impl IntoIterator<Item = (usize, BigRational)>,
    ) -> Self {
        let mut coeffs: BTreeMap<usize, BigRational> = BTreeMap::new();
        for (g, c) in terms {
            assert!(g < group.order(), "element index {g} out of range");
            *coeffs.entry(g).or_insert_with(BigRational::zero) += c;
        }
        coeffs.retain(|_, c| !c.is_zero());
        GroupRingElement { group, coeffs }
    }

    pub fn from_integers(
        group: Arc<FiniteGroup>,
        terms: impl IntoIterator<Item = (usize, i64)>,
    ) -> Self {
        Self::from_terms(
            group,
            terms
                .into_iter()
                .map(|(g, c)| (g, BigRational::from_integer(c.into()))),
        )
    }

    /// Builds an element from a dense coefficient vector indexed by element.
    pub fn from_dense(group: Arc<FiniteGroup>, dense: &[BigRational]) -> Self {
        assert_eq!(dense.len(), group.order());
        Self::from_terms(group, dense.iter().cloned().enumerate())
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn coeff(&self, g: usize) -> BigRational {
        self.coeffs
            .get(&g)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// Nonzero terms in increasing element order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &BigRational)> {
        self.coeffs.iter().map(|(g, c)| (*g, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn dense(&self) -> Vec<BigRational> {
        (0..self.group.order()).map(|g| self.coeff(g)).collect()
    }

    /// Dense integer coefficients; panics on non-integral or oversized entries.
    pub fn integer_coefficients(&self) -> Vec<i64> {
        self.dense()
            .iter()
            .map(|c| {
                assert!(c.is_integer(), "non-integral coefficient {c}");
                c.to_integer().to_i64().expect("coefficient fits in i64")
            })
            .collect()
    }

    /// Nonzero terms as machine integers, or an error if some coefficient is
    /// not an integer.
    pub fn integer_terms(&self) -> Result<Vec<(usize, i64)>> {
        self.coeffs
            .iter()
            .map(|(g, c)| {
                if !c.is_integer() {
                    return Err(Error::InvalidParameters(format!(
                        "coefficient {c} is not an integer"
                    )));
                }
                let v = c.to_integer().to_i64().ok_or_else(|| {
                    Error::InvalidParameters(format!("coefficient {c} too large"))
                })?;
                Ok((*g, v))
            })
            .collect()
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.values().all(|c| c.is_integer())
    }

    fn check(&self, other: &Self) -> Result<()> {
        if same_group(&self.group, &other.group) {
            Ok(())
        } else {
            Err(Error::GroupMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self::from_terms(
            self.group.clone(),
            self.coeffs
                .iter()
                .chain(other.coeffs.iter())
                .map(|(g, c)| (*g, c.clone())),
        ))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-BigRational::one())
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        Self::from_terms(
            self.group.clone(),
            self.coeffs.iter().map(|(g, c)| (*g, c * s)),
        )
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut acc: BTreeMap<usize, BigRational> = BTreeMap::new();
        for (a, ca) in &self.coeffs {
            for (b, cb) in &other.coeffs {
                *acc.entry(self.group.mul(*a, *b))
                    .or_insert_with(BigRational::zero) += ca * cb;
            }
        }
        Ok(Self::from_terms(self.group.clone(), acc))
    }

    /// Sum of the coefficients.
    pub fn augmentation(&self) -> BigRational {
        self.coeffs.values().fold(BigRational::zero(), |a, c| a + c)
    }

    /// Commutes with every generator of the group.
    pub fn is_central(&self) -> bool {
        self.group.generator_indices().into_iter().all(|g| {
            let h = Self::basis(self.group.clone(), g);
            self.mul(&h).unwrap() == h.mul(self).unwrap()
        })
    }

    /// Matrix of `x ↦ x · self` on `Q[G]` acting on coefficient row vectors:
    /// entry `(a, b)` is the coefficient of `b` in `a · self`.
    pub fn right_multiplication_matrix(&self) -> Vec<Vec<BigRational>> {
        let n = self.group.order();
        let mut m = vec![vec![BigRational::zero(); n]; n];
        for (a, row) in m.iter_mut().enumerate() {
            for (b, c) in &self.coeffs {
                row[self.group.mul(a, *b)] += c;
            }
        }
        m
    }

    /// Matrix of `x ↦ self · x` acting on coefficient column vectors:
    /// entry `(a, b)` is the coefficient of `a` in `self · b`.
    pub fn left_multiplication_matrix(&self) -> Vec<Vec<BigRational>> {
        let n = self.group.order();
        let mut m = vec![vec![BigRational::zero(); n]; n];
        for b in 0..n {
            for (g, c) in &self.coeffs {
                m[self.group.mul(*g, b)][b] += c;
            }
        }
        m
    }

    /// Least common multiple of the coefficient denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        self.coeffs.values().fold(BigInt::one(), |acc, c| {
            num_integer::Integer::lcm(&acc, c.denom())
        })
    }
}

impl fmt::Display for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|(g, c)| {
                let name = if *g == 0 {
                    "1".to_string()
                } else {
                    format!("g{g}")
                };
                if c.is_one() {
                    name
                } else if (-c).is_one() {
                    format!("-{name}")
                } else if c.is_negative() {
                    format!("({c})*{name}")
                } else {
                    format!("{c}*{name}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// One element per conjugacy class, with coefficient one on each member.
pub fn class_sums(group: &Arc<FiniteGroup>) -> Vec<GroupRingElement> {
    group
        .conjugacy_classes()
        .into_iter()
        .map(|c| GroupRingElement::from_integers(group.clone(), c.into_iter().map(|g| (g, 1))))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn c2() -> Arc<FiniteGroup> {
        Arc::new(FiniteGroup::from_cycle_strings(2, &["(1,2)"]).unwrap())
    }

    #[test]
    fn ring_examples() {
        let g = c2();
        let a = GroupRingElement::from_integers(g.clone(), [(0, 1), (1, 1)]);
        let b = GroupRingElement::from_integers(g.clone(), [(0, 1), (1, -1)]);
        assert!(a.mul(&b).unwrap().is_zero());
        let e = a.scale(&q(1, 2));
        assert_eq!(e.mul(&e).unwrap(), e);
        assert_eq!(a.augmentation(), q(2, 1));
        assert_eq!(GroupRingElement::zero(g).augmentation(), q(0, 1));
    }

    #[test]
    fn group_mismatch() {
        let a = GroupRingElement::one(c2());
        let s3 = Arc::new(FiniteGroup::from_cycle_strings(3, &["(1,2,3)", "(1,2)"]).unwrap());
        let b = GroupRingElement::one(s3);
        assert_eq!(a.add(&b), Err(Error::GroupMismatch));
        assert_eq!(a.mul(&b), Err(Error::GroupMismatch));
    }

    #[test]
    fn class_sums_are_central() {
        let s3 = Arc::new(FiniteGroup::from_cycle_strings(3, &["(1,2,3)", "(1,2)"]).unwrap());
        let sums = class_sums(&s3);
        assert_eq!(sums.len(), 3);
        for s in &sums {
            assert!(s.is_central());
        }
        let transpositions = sums.iter().find(|s| s.terms().count() == 3).unwrap();
        for (g, _) in transpositions.terms() {
            assert_eq!(s3.element_order(g), 2);
        }
        let c = class_sums(&c2());
        assert_eq!(c[0], GroupRingElement::one(c2()));
        assert_eq!(c[1], GroupRingElement::basis(c2(), 1));
    }

    #[test]
    fn multiplication_matrices() {
        let s3 = Arc::new(FiniteGroup::from_cycle_strings(3, &["(1,2,3)", "(1,2)"]).unwrap());
        let x = GroupRingElement::from_integers(s3.clone(), [(1, 2), (3, -1)]);
        let r = x.right_multiplication_matrix();
        for a in 0..6 {
            let prod = GroupRingElement::basis(s3.clone(), a).mul(&x).unwrap();
            assert_eq!(r[a], prod.dense());
        }
    }
}
