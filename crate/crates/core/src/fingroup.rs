//! Finite permutation groups and marked epimorphisms `F_n → G`.
//!
//! Permutations are composed left to right: `(p * q)(i) = q(p(i))`, so the
//! left factor is applied first. Word evaluation follows the same order,
//! `π(w₁ w₂) = π(w₁) * π(w₂)`.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::freewords::Word;

/// Default upper bound on the order of an enumerated group.
pub const DEFAULT_ORDER_CAP: usize = 10_000;

/// Groups up to this order keep a full multiplication table.
const TABLE_LIMIT: usize = 2048;

/// A bijection of `{0, …, degree − 1}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    pub fn new(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            let i = i as usize;
            if i >= n || seen[i] {
                return Err(Error::InvalidPermutation(format!(
                    "{images:?} is not a bijection"
                )));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    /// Parses 1-based cycle notation such as `(1,2,3)(4,5)`; `()` or the
    /// empty string is the identity.
    pub fn from_cycles(text: &str, degree: usize) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut used = vec![false; degree];
        let mut rest = text.trim();
        while !rest.is_empty() {
            let body_end = rest
                .strip_prefix('(')
                .and_then(|r| r.find(')'))
                .ok_or_else(|| {
                    Error::InvalidPermutation(format!("malformed cycle notation `{text}`"))
                })?;
            let body = &rest[1..=body_end];
            rest = rest[body_end + 2..].trim_start();
            if body.trim().is_empty() {
                continue;
            }
            let points: Vec<usize> = body
                .split(',')
                .map(|s| {
                    s.trim().parse::<usize>().map_err(|_| {
                        Error::InvalidPermutation(format!("bad point `{}` in `{text}`", s.trim()))
                    })
                })
                .collect::<Result<_>>()?;
            for &p in &points {
                if p == 0 || p > degree {
                    return Err(Error::InvalidPermutation(format!(
                        "point {p} outside 1..={degree}"
                    )));
                }
                if used[p - 1] {
                    return Err(Error::InvalidPermutation(format!(
                        "point {p} repeated in `{text}`"
                    )));
                }
                used[p - 1] = true;
            }
            for k in 0..points.len() {
                images[points[k] - 1] = (points[(k + 1) % points.len()] - 1) as u32;
            }
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    /// `self` first, then `other`.
    pub fn mul(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Permutation {
            images: self
                .images
                .iter()
                .map(|&i| other.images[i as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    /// Disjoint cycles, 1-based, omitting fixed points.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.apply(start) == start {
                continue;
            }
            let mut c = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                c.push(p + 1);
                p = self.apply(p);
            }
            out.push(c);
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(|p| p.to_string()).collect();
            write!(f, "({})", parts.join(","))?;
        }
        Ok(())
    }
}

/// A finite permutation group with all elements enumerated.
///
/// Elements are numbered breadth first from the identity (index 0),
/// multiplying on the right by the generators in their given order.
#[derive(Debug)]
pub struct FiniteGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    inverses: Vec<usize>,
    table: Option<Vec<u32>>,
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements
    }
}

impl Eq for FiniteGroup {}

impl FiniteGroup {
    /// Closes the generators under multiplication with the default order cap.
    pub fn close(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        Self::close_with_cap(degree, generators, DEFAULT_ORDER_CAP)
    }

    pub fn close_with_cap(degree: usize, generators: Vec<Permutation>, cap: usize) -> Result<Self> {
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::InvalidPermutation(format!(
                    "{g} has degree {} not {degree}",
                    g.degree()
                )));
            }
        }
        let id = Permutation::identity(degree);
        let mut elements = vec![id.clone()];
        let mut index = HashMap::from([(id, 0usize)]);
        let mut head = 0;
        while head < elements.len() {
            for g in &generators {
                let p = elements[head].mul(g);
                if !index.contains_key(&p) {
                    if elements.len() >= cap {
                        return Err(Error::OrderCap { cap });
                    }
                    index.insert(p.clone(), elements.len());
                    elements.push(p);
                }
            }
            head += 1;
        }
        let inverses = elements.iter().map(|p| index[&p.inverse()]).collect();
        let mut group = FiniteGroup {
            degree,
            generators,
            elements,
            index,
            inverses,
            table: None,
        };
        let n = group.elements.len();
        if n <= TABLE_LIMIT {
            let mut t = vec![0u32; n * n];
            for a in 0..n {
                for b in 0..n {
                    t[a * n + b] = group.index[&group.elements[a].mul(&group.elements[b])] as u32;
                }
            }
            group.table = Some(t);
        }
        Ok(group)
    }

    /// Parses generators in cycle notation and closes them.
    pub fn from_cycle_strings(degree: usize, generators: &[&str]) -> Result<Self> {
        let gens = generators
            .iter()
            .map(|s| Permutation::from_cycles(s, degree))
            .collect::<Result<Vec<_>>>()?;
        Self::close(degree, gens)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.table {
            Some(t) => t[a * self.order() + b] as usize,
            None => self.index[&self.elements[a].mul(&self.elements[b])],
        }
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a]
    }

    /// `a^k` for any integer `k`.
    pub fn pow(&self, a: usize, k: i64) -> usize {
        let base = if k < 0 { self.inverse(a) } else { a };
        let mut out = 0;
        for _ in 0..k.unsigned_abs() {
            out = self.mul(out, base);
        }
        out
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut k = 1;
        let mut p = a;
        while p != 0 {
            p = self.mul(p, a);
            k += 1;
        }
        k
    }

    /// Least common multiple of element orders.
    pub fn exponent(&self) -> usize {
        (0..self.order()).fold(1, |acc, a| num_integer::lcm(acc, self.element_order(a)))
    }

    pub fn is_abelian(&self) -> bool {
        let gens: Vec<usize> = self.generators.iter().map(|g| self.index[g]).collect();
        gens.iter()
            .all(|&a| gens.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Element indices of the generators.
    pub fn generator_indices(&self) -> Vec<usize> {
        self.generators.iter().map(|g| self.index[g]).collect()
    }

    /// Subgroup generated by the given elements, in breadth-first order.
    pub fn subgroup_closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order()];
        seen[0] = true;
        let mut out = vec![0];
        let mut head = 0;
        while head < out.len() {
            for &g in gens {
                let p = self.mul(out[head], g);
                if !seen[p] {
                    seen[p] = true;
                    out.push(p);
                }
            }
            head += 1;
        }
        out
    }

    /// `g⁻¹ h g`.
    pub fn conjugate(&self, h: usize, g: usize) -> usize {
        self.mul(self.mul(self.inverse(g), h), g)
    }

    /// Conjugacy classes ordered by (size, smallest element index); each class
    /// is sorted.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let gens = self.generator_indices();
        let mut assigned = vec![false; self.order()];
        let mut classes = Vec::new();
        for start in 0..self.order() {
            if assigned[start] {
                continue;
            }
            assigned[start] = true;
            let mut class = vec![start];
            let mut head = 0;
            while head < class.len() {
                for &g in &gens {
                    let c = self.conjugate(class[head], g);
                    if !assigned[c] {
                        assigned[c] = true;
                        class.push(c);
                    }
                }
                head += 1;
            }
            class.sort_unstable();
            classes.push(class);
        }
        classes.sort_by_key(|c| (c.len(), c[0]));
        classes
    }
}

/// `π: F_n → G`, determined by the images of the free generators.
#[derive(Clone, Debug)]
pub struct MarkedEpimorphism {
    group: Arc<FiniteGroup>,
    images: Vec<usize>,
    // right[2j][g] = g·π(x_j), right[2j+1][g] = g·π(x_j)⁻¹
    right: Arc<Vec<Vec<u32>>>,
}

impl MarkedEpimorphism {
    /// Builds the marked map and checks surjectivity.
    pub fn new(group: Arc<FiniteGroup>, images: Vec<Permutation>) -> Result<Self> {
        let m = Self::marked(group, images)?;
        if !m.is_epimorphism() {
            return Err(Error::NotSurjective);
        }
        Ok(m)
    }

    /// Builds the marked map without requiring surjectivity.
    pub fn marked(group: Arc<FiniteGroup>, images: Vec<Permutation>) -> Result<Self> {
        let idx = images
            .iter()
            .map(|p| {
                group
                    .index_of(p)
                    .ok_or_else(|| Error::InvalidPermutation(format!("{p} is not in the group")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_indices(group, idx))
    }

    /// Builds the marked map from element indices.
    pub fn from_indices(group: Arc<FiniteGroup>, images: Vec<usize>) -> Self {
        let n = group.order();
        let mut right = Vec::with_capacity(2 * images.len());
        for &g in &images {
            let gi = group.inverse(g);
            right.push((0..n).map(|a| group.mul(a, g) as u32).collect());
            right.push((0..n).map(|a| group.mul(a, gi) as u32).collect());
        }
        MarkedEpimorphism {
            group,
            images,
            right: Arc::new(right),
        }
    }

    /// The group generated by the images, with the given marking.
    pub fn from_generator_images(degree: usize, images: Vec<Permutation>) -> Result<Self> {
        let group = Arc::new(FiniteGroup::close(degree, images.clone())?);
        Self::new(group, images)
    }

    /// Convenience constructor from 1-based cycle strings.
    pub fn from_cycle_strings(degree: usize, images: &[&str]) -> Result<Self> {
        let perms = images
            .iter()
            .map(|s| Permutation::from_cycles(s, degree))
            .collect::<Result<Vec<_>>>()?;
        Self::from_generator_images(degree, perms)
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    /// Element index of `π(x_i)`.
    pub fn image(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn image_permutations(&self) -> Vec<Permutation> {
        self.images
            .iter()
            .map(|&i| self.group.element(i).clone())
            .collect()
    }

    pub fn is_epimorphism(&self) -> bool {
        self.group.subgroup_closure(&self.images).len() == self.group.order()
    }

    /// `g · π(x_j)^{±1}`.
    #[inline]
    pub fn right_mul(&self, g: usize, j: usize, sign: i8) -> usize {
        let k = 2 * j + usize::from(sign < 0);
        self.right[k][g] as usize
    }

    /// Element index of `π(w)`.
    pub fn eval(&self, w: &Word) -> usize {
        let mut g = 0;
        for (j, s) in w.letters() {
            g = self.right_mul(g, j, s);
        }
        g
    }

    pub fn evaluate_word(&self, w: &Word) -> Result<Permutation> {
        if w.rank() != self.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                found: w.rank(),
            });
        }
        Ok(self.group.element(self.eval(w)).clone())
    }
}

/// Image of one free generator in a group file: a 0-based index into
/// `generators`, or `"id"` for the identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GeneratorImage {
    Index(usize),
    Token(String),
}

/// The JSON group file: a permutation group on `1..=degree` given by
/// generators in cycle notation, and the marking `x_i ↦ pi_images[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupFile {
    pub degree: usize,
    pub generators: Vec<String>,
    pub n: usize,
    pub pi_images: Vec<GeneratorImage>,
}

impl GroupFile {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Input(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("group file serializes")
    }

    /// The marked epimorphism described by the file; fails unless the images
    /// generate the whole group.
    pub fn epimorphism(&self) -> Result<MarkedEpimorphism> {
        self.epimorphism_with_cap(DEFAULT_ORDER_CAP)
    }

    pub fn epimorphism_with_cap(&self, cap: usize) -> Result<MarkedEpimorphism> {
        if self.pi_images.len() != self.n {
            return Err(Error::Input(format!(
                "n = {} but {} images given",
                self.n,
                self.pi_images.len()
            )));
        }
        let gens = self
            .generators
            .iter()
            .map(|c| Permutation::from_cycles(c, self.degree))
            .collect::<Result<Vec<_>>>()?;
        let images = self
            .pi_images
            .iter()
            .map(|img| match img {
                GeneratorImage::Index(k) => gens
                    .get(*k)
                    .cloned()
                    .ok_or_else(|| Error::Input(format!("generator index {k} out of range"))),
                GeneratorImage::Token(t) if t == "id" => Ok(Permutation::identity(self.degree)),
                GeneratorImage::Token(t) => Err(Error::Input(format!("unknown image token `{t}`"))),
            })
            .collect::<Result<Vec<_>>>()?;
        let group = Arc::new(FiniteGroup::close_with_cap(self.degree, gens, cap)?);
        MarkedEpimorphism::new(group, images)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freewords::parse_word;

    #[test]
    fn multiplication_applies_left_factor_first() {
        let p = Permutation::from_cycles("(1,2)", 3).unwrap();
        let q = Permutation::from_cycles("(2,3)", 3).unwrap();
        // p sends 1 to 2, then q sends 2 to 3
        assert_eq!(p.mul(&q).apply(0), 2);
        assert_eq!(p.mul(&q), Permutation::from_cycles("(1,3,2)", 3).unwrap());
    }

    #[test]
    fn cycle_parsing() {
        assert!(Permutation::from_cycles("()", 4).unwrap().is_identity());
        assert!(Permutation::from_cycles("", 4).unwrap().is_identity());
        let p = Permutation::from_cycles("(1,7,2,8)(3,6,4,5)", 8).unwrap();
        assert_eq!(p.to_string(), "(1,7,2,8)(3,6,4,5)");
        assert!(Permutation::from_cycles("(1,2,1)", 3).is_err());
        assert!(Permutation::from_cycles("(1,4)", 3).is_err());
        assert!(Permutation::from_cycles("(1,2", 3).is_err());
        assert!(Permutation::new(vec![0, 0]).is_err());
    }

    #[test]
    fn close_orders() {
        assert_eq!(
            FiniteGroup::from_cycle_strings(2, &["(1,2)"])
                .unwrap()
                .order(),
            2
        );
        assert_eq!(
            FiniteGroup::from_cycle_strings(3, &["(1,2,3)", "(1,2)"])
                .unwrap()
                .order(),
            6
        );
        assert_eq!(
            FiniteGroup::from_cycle_strings(5, &["(1,2,3,4,5)", "(1,2,3)"])
                .unwrap()
                .order(),
            60
        );
    }

    #[test]
    fn order_cap() {
        let g = vec![
            Permutation::from_cycles("(1,2,3,4,5,6,7,8)", 8).unwrap(),
            Permutation::from_cycles("(1,2)", 8).unwrap(),
        ];
        assert!(matches!(
            FiniteGroup::close_with_cap(8, g, 1000),
            Err(Error::OrderCap { cap: 1000 })
        ));
    }

    #[test]
    fn word_evaluation() {
        let pi = MarkedEpimorphism::from_cycle_strings(3, &["(1,2,3)", "(1,2)"]).unwrap();
        assert!(pi.evaluate_word(&Word::identity(2)).unwrap().is_identity());
        let w = parse_word("x1 x2 x1^-1 x2^-1", 2).unwrap();
        let x = Permutation::from_cycles("(1,2,3)", 3).unwrap();
        let y = Permutation::from_cycles("(1,2)", 3).unwrap();
        let expect = x.mul(&y).mul(&x.inverse()).mul(&y.inverse());
        assert_eq!(pi.evaluate_word(&w).unwrap(), expect);
        let c2 = MarkedEpimorphism::from_cycle_strings(2, &["(1,2)", "()"]).unwrap();
        assert!(c2
            .evaluate_word(&parse_word("x1^2", 2).unwrap())
            .unwrap()
            .is_identity());
    }

    #[test]
    fn epimorphism_check() {
        let g = Arc::new(FiniteGroup::from_cycle_strings(2, &["(1,2)"]).unwrap());
        let t = Permutation::from_cycles("(1,2)", 2).unwrap();
        let e = Permutation::identity(2);
        assert!(MarkedEpimorphism::marked(g.clone(), vec![t, e.clone()])
            .unwrap()
            .is_epimorphism());
        assert!(
            !MarkedEpimorphism::marked(g.clone(), vec![e.clone(), e.clone()])
                .unwrap()
                .is_epimorphism()
        );
        assert_eq!(
            MarkedEpimorphism::new(g, vec![e.clone(), e]).unwrap_err(),
            Error::NotSurjective
        );
    }

    fn class_sizes(g: &FiniteGroup) -> Vec<usize> {
        g.conjugacy_classes().iter().map(|c| c.len()).collect()
    }

    #[test]
    fn conjugacy_class_examples() {
        assert_eq!(
            class_sizes(&FiniteGroup::from_cycle_strings(2, &["(1,2)"]).unwrap()),
            vec![1, 1]
        );
        let s3 = FiniteGroup::from_cycle_strings(3, &["(1,2,3)", "(1,2)"]).unwrap();
        let mut sizes = class_sizes(&s3);
        assert_eq!(sizes[0], 1);
        sizes.sort();
        assert_eq!(sizes, vec![1, 2, 3]);
        let q8 = FiniteGroup::from_cycle_strings(8, &["(1,7,2,8)(3,6,4,5)", "(1,4,2,3)(5,7,6,8)"])
            .unwrap();
        assert_eq!(class_sizes(&q8), vec![1, 1, 2, 2, 2]);
    }

    #[test]
    fn classes_match_brute_force() {
        let a4 = FiniteGroup::from_cycle_strings(4, &["(1,2,3)", "(1,2)(3,4)"]).unwrap();
        for class in a4.conjugacy_classes() {
            let h = class[0];
            let mut brute: Vec<usize> = (0..a4.order()).map(|g| a4.conjugate(h, g)).collect();
            brute.sort();
            brute.dedup();
            assert_eq!(brute, class);
        }
    }

    #[test]
    fn group_file() {
        let text = r#"{"degree": 3, "generators": ["(1,2,3)", "(1,2)"], "n": 3, "pi_images": [0, 1, "id"]}"#;
        let f = GroupFile::from_json(text).unwrap();
        let pi = f.epimorphism().unwrap();
        assert_eq!(pi.group().order(), 6);
        assert_eq!(pi.image(2), pi.group().identity());
        assert_eq!(GroupFile::from_json(&f.to_json()).unwrap(), f);
        let bad = r#"{"degree": 3, "generators": ["(1,2,3)"], "n": 2, "pi_images": [0, "one"]}"#;
        assert!(GroupFile::from_json(bad).unwrap().epimorphism().is_err());
        let not_onto =
            r#"{"degree": 3, "generators": ["(1,2,3)", "(1,2)"], "n": 2, "pi_images": [0, "id"]}"#;
        assert_eq!(
            GroupFile::from_json(not_onto)
                .unwrap()
                .epimorphism()
                .unwrap_err(),
            Error::NotSurjective
        );
    }
}
