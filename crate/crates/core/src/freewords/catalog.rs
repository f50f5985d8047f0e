//! Built-in automorphism families.
//!
//! Two generator layouts are in use. The redundant-presentation families
//! (`alpha`, `beta`, `gamma`, `eta`) treat generators `0..n-1` as
//! `x_1, …, x_{n-1}` and the last generator as `y`. The cyclic families
//! (`delta` … `tau`) treat generator `0` as `x` and generator `i` as `y_i`.
//! Indices passed to constructors are 1-based, as in `y_1`, `λ_{12}`.
//! Generators not mentioned in a definition are fixed.

use super::{Endomorphism, Word};
use crate::error::{Error, Result};
use crate::grpring::GroupRingElement;

/// Parameters for [`builtin_automorphism`].
#[derive(Clone, Debug)]
pub enum CatalogParams {
    None,
    Indices(Vec<usize>),
    Word(Word),
    Eta {
        b: GroupRingElement,
        i: usize,
        reps: Vec<Word>,
    },
}

fn gen(rank: usize, i: usize) -> Word {
    Word::generator(rank, i)
}

/// Replaces the image of one generator.
fn single(rank: usize, target: usize, image: Word, inverse: Word, label: String) -> Endomorphism {
    let mut imgs: Vec<Word> = (0..rank).map(|i| gen(rank, i)).collect();
    let mut inv = imgs.clone();
    imgs[target] = image;
    inv[target] = inverse;
    Endomorphism::from_parts_unchecked(imgs, Some(inv), Some(label))
}

fn check_rank(rank: usize, min: usize) -> Result<()> {
    if rank < min {
        return Err(Error::InvalidParameters(format!(
            "rank {rank} too small (need ≥ {min})"
        )));
    }
    Ok(())
}

fn check_x_index(i: usize, rank: usize) -> Result<()> {
    if i == 0 || i >= rank {
        return Err(Error::InvalidParameters(format!(
            "index {i} outside 1..{}",
            rank - 1
        )));
    }
    Ok(())
}

// Redundant layout: x_i is generator i-1, y is generator rank-1.

/// `α_i : x_i ↦ y x_i`.
pub fn alpha(i: usize, rank: usize) -> Result<Endomorphism> {
    check_rank(rank, 2)?;
    check_x_index(i, rank)?;
    let y = gen(rank, rank - 1);
    let x = gen(rank, i - 1);
    Ok(single(
        rank,
        i - 1,
        y.mul(&x),
        y.inverse().mul(&x),
        format!("alpha_{i}"),
    ))
}

/// `β_X : y ↦ X y X⁻¹`, with `X` free of `y`.
pub fn beta(x: &Word, rank: usize) -> Result<Endomorphism> {
    check_rank(rank, 2)?;
    if x.rank() != rank {
        return Err(Error::RankMismatch {
            expected: rank,
            found: x.rank(),
        });
    }
    if x.involves(rank - 1) {
        return Err(Error::InvalidParameters("β_X requires X free of y".into()));
    }
    let y = gen(rank, rank - 1);
    let img = x.mul(&y).mul(&x.inverse());
    let inv = x.inverse().mul(&y).mul(x);
    Ok(single(rank, rank - 1, img, inv, format!("beta[{x}]")))
}

/// `γ_U : y ↦ U y`, with `U` free of `y`.
pub fn gamma(u: &Word, rank: usize) -> Result<Endomorphism> {
    check_rank(rank, 2)?;
    if u.rank() != rank {
        return Err(Error::RankMismatch {
            expected: rank,
            found: u.rank(),
        });
    }
    if u.involves(rank - 1) {
        return Err(Error::InvalidParameters("γ_U requires U free of y".into()));
    }
    let y = gen(rank, rank - 1);
    Ok(single(
        rank,
        rank - 1,
        u.mul(&y),
        u.inverse().mul(&y),
        format!("gamma[{u}]"),
    ))
}

/// `η_{B,i} = ∘_g β_g α_i^{m_g} β_{g⁻¹}` for `B = Σ m_g g ∈ Z[G]`.
///
/// `reps[g]` is a word free of `y` mapping to the group element with index
/// `g`; the terms are composed in increasing element order.
pub fn eta(b: &GroupRingElement, i: usize, reps: &[Word]) -> Result<Endomorphism> {
    let group = b.group();
    if reps.len() != group.order() {
        return Err(Error::InvalidParameters(
            "one representative per group element required".into(),
        ));
    }
    let rank = reps
        .first()
        .map(|w| w.rank())
        .ok_or_else(|| Error::InvalidParameters("empty representative list".into()))?;
    let mut out = Endomorphism::identity(rank);
    let a = alpha(i, rank)?;
    for (g, c) in b.integer_terms()? {
        let ginv = group.inverse(g);
        let term = beta(&reps[g], rank)?
            .compose(&a.pow(c)?)?
            .compose(&beta(&reps[ginv], rank)?)?;
        out = out.compose(&term)?;
    }
    Ok(out.with_label(format!("eta[{i}]")))
}

// Cyclic layout: x is generator 0, y_i is generator i.

fn check_y_index(i: usize, rank: usize) -> Result<()> {
    check_x_index(i, rank)
}

/// `δ_i : x ↦ y_i x`.
pub fn delta(i: usize, rank: usize) -> Result<Endomorphism> {
    check_y_index(i, rank)?;
    let (x, y) = (gen(rank, 0), gen(rank, i));
    Ok(single(
        rank,
        0,
        y.mul(&x),
        y.inverse().mul(&x),
        format!("delta_{i}"),
    ))
}

/// `ε_i : x ↦ x y_i`.
pub fn epsilon(i: usize, rank: usize) -> Result<Endomorphism> {
    check_y_index(i, rank)?;
    let (x, y) = (gen(rank, 0), gen(rank, i));
    Ok(single(
        rank,
        0,
        x.mul(&y),
        x.mul(&y.inverse()),
        format!("epsilon_{i}"),
    ))
}

/// `φ_i : y_i ↦ x y_i`.
pub fn phi(i: usize, rank: usize) -> Result<Endomorphism> {
    check_y_index(i, rank)?;
    let (x, y) = (gen(rank, 0), gen(rank, i));
    Ok(single(
        rank,
        i,
        x.mul(&y),
        x.inverse().mul(&y),
        format!("phi_{i}"),
    ))
}

/// `ψ_i : y_i ↦ y_i x`.
pub fn psi(i: usize, rank: usize) -> Result<Endomorphism> {
    check_y_index(i, rank)?;
    let (x, y) = (gen(rank, 0), gen(rank, i));
    Ok(single(
        rank,
        i,
        y.mul(&x),
        y.mul(&x.inverse()),
        format!("psi_{i}"),
    ))
}

fn distinct(i: usize, j: usize) -> Result<()> {
    if i == j {
        return Err(Error::InvalidParameters(format!(
            "indices must differ, got {i} twice"
        )));
    }
    Ok(())
}

/// `λ_{ij} : y_i ↦ y_j y_i`.
pub fn lambda(i: usize, j: usize, rank: usize) -> Result<Endomorphism> {
    check_y_index(i, rank)?;
    check_y_index(j, rank)?;
    distinct(i, j)?;
    let (yi, yj) = (gen(rank, i), gen(rank, j));
    Ok(single(
        rank,
        i,
        yj.mul(&yi),
        yj.inverse().mul(&yi),
        format!("lambda_{i}{j}"),
    ))
}

/// `ν_{ij} : y_i ↦ y_i y_j`.
pub fn nu(i: usize, j: usize, rank: usize) -> Result<Endomorphism> {
    check_y_index(i, rank)?;
    check_y_index(j, rank)?;
    distinct(i, j)?;
    let (yi, yj) = (gen(rank, i), gen(rank, j));
    Ok(single(
        rank,
        i,
        yi.mul(&yj),
        yi.mul(&yj.inverse()),
        format!("nu_{i}{j}"),
    ))
}

/// `κ_{jk} : x ↦ x [y_j, y_k]`.
pub fn kappa_jk(j: usize, k: usize, rank: usize) -> Result<Endomorphism> {
    check_y_index(j, rank)?;
    check_y_index(k, rank)?;
    let x = gen(rank, 0);
    let c = Word::commutator(&gen(rank, j), &gen(rank, k));
    Ok(single(
        rank,
        0,
        x.mul(&c),
        x.mul(&c.inverse()),
        format!("kappa_{j}{k}"),
    ))
}

/// `κ_{ijk} : y_i ↦ y_i [y_j, y_k]` with `i ∉ {j, k}`.
pub fn kappa_ijk(i: usize, j: usize, k: usize, rank: usize) -> Result<Endomorphism> {
    check_y_index(i, rank)?;
    check_y_index(j, rank)?;
    check_y_index(k, rank)?;
    distinct(i, j)?;
    distinct(i, k)?;
    let yi = gen(rank, i);
    let c = Word::commutator(&gen(rank, j), &gen(rank, k));
    Ok(single(
        rank,
        i,
        yi.mul(&c),
        yi.mul(&c.inverse()),
        format!("kappa_{i}{j}{k}"),
    ))
}

/// `τ_{ij} : y_i ↦ y_i [x, y_j]`.
pub fn tau(i: usize, j: usize, rank: usize) -> Result<Endomorphism> {
    check_y_index(i, rank)?;
    check_y_index(j, rank)?;
    distinct(i, j)?;
    let yi = gen(rank, i);
    let c = Word::commutator(&gen(rank, 0), &gen(rank, j));
    Ok(single(
        rank,
        i,
        yi.mul(&c),
        yi.mul(&c.inverse()),
        format!("tau_{i}{j}"),
    ))
}

/// Generator `α` of `A⁺(F_2)`: `x ↦ y⁻¹, y ↦ x`.
pub fn alpha_plus_f2() -> Endomorphism {
    let (x, y) = (gen(2, 0), gen(2, 1));
    Endomorphism::from_parts_unchecked(
        vec![y.inverse(), x.clone()],
        Some(vec![y.clone(), x.inverse()]),
        Some("alpha".into()),
    )
}

/// Generator `β` of `A⁺(F_2)`: `x ↦ x⁻¹ y⁻¹, y ↦ x`.
pub fn beta_plus_f2() -> Endomorphism {
    let (x, y) = (gen(2, 0), gen(2, 1));
    Endomorphism::from_parts_unchecked(
        vec![x.inverse().mul(&y.inverse()), x.clone()],
        Some(vec![y.clone(), x.inverse().mul(&y.inverse())]),
        Some("beta".into()),
    )
}

/// The Nielsen generators `δ_i, ε_i, φ_i, ψ_i, λ_{ij}, ν_{ij}` of `A⁺(F_n)`.
pub fn nielsen_generators(rank: usize) -> Result<Vec<Endomorphism>> {
    check_rank(rank, 2)?;
    let mut out = Vec::new();
    for i in 1..rank {
        out.push(delta(i, rank)?);
        out.push(epsilon(i, rank)?);
        out.push(phi(i, rank)?);
        out.push(psi(i, rank)?);
    }
    for i in 1..rank {
        for j in 1..rank {
            if i != j {
                out.push(lambda(i, j, rank)?);
                out.push(nu(i, j, rank)?);
            }
        }
    }
    Ok(out)
}

/// The generating set `T_n` of `IA(F_n)`.
pub fn torelli_generators(rank: usize) -> Result<Vec<Endomorphism>> {
    check_rank(rank, 2)?;
    let mut out = Vec::new();
    for j in 1..rank {
        for k in 1..rank {
            if j < k {
                out.push(kappa_jk(j, k, rank)?);
            }
        }
    }
    for i in 1..rank {
        for j in 1..rank {
            for k in 1..rank {
                if i != j && i != k && j < k {
                    out.push(kappa_ijk(i, j, k, rank)?);
                }
            }
        }
    }
    for i in 1..rank {
        for j in 1..rank {
            if i != j {
                out.push(tau(i, j, rank)?);
            }
        }
    }
    for i in 1..rank {
        out.push(
            delta(i, rank)?
                .inverse()
                .unwrap()
                .compose(&epsilon(i, rank)?)?,
        );
        out.push(phi(i, rank)?.inverse().unwrap().compose(&psi(i, rank)?)?);
    }
    for i in 1..rank {
        for j in 1..rank {
            if i != j {
                out.push(lambda(i, j, rank)?.compose(&nu(i, j, rank)?.inverse().unwrap())?);
            }
        }
    }
    Ok(out)
}

/// Looks up a catalog entry by name.
///
/// Names: `identity`, `alpha`, `beta`, `gamma`, `eta`, `delta`, `epsilon`,
/// `phi`, `psi`, `lambda`, `nu`, `kappa_jk`, `kappa_ijk`, `tau`,
/// `alpha_plus_f2`, `beta_plus_f2`.
pub fn builtin_automorphism(
    name: &str,
    params: &CatalogParams,
    rank: usize,
) -> Result<Endomorphism> {
    let idx = |want: usize| -> Result<&[usize]> {
        match params {
            CatalogParams::Indices(v) if v.len() == want => Ok(v),
            _ => Err(Error::InvalidParameters(format!(
                "`{name}` takes {want} indices"
            ))),
        }
    };
    let word = || -> Result<&Word> {
        match params {
            CatalogParams::Word(w) => Ok(w),
            _ => Err(Error::InvalidParameters(format!("`{name}` takes a word"))),
        }
    };
    match name {
        "identity" => Ok(Endomorphism::identity(rank)),
        "alpha" => alpha(idx(1)?[0], rank),
        "beta" => beta(word()?, rank),
        "gamma" => gamma(word()?, rank),
        "eta" => match params {
            CatalogParams::Eta { b, i, reps } => {
                if reps.first().map(|w| w.rank()) != Some(rank) {
                    return Err(Error::InvalidParameters(
                        "representatives must have the requested rank".into(),
                    ));
                }
                eta(b, *i, reps)
            }
            _ => Err(Error::InvalidParameters(
                "`eta` takes a group ring element, index and representatives".into(),
            )),
        },
        "delta" => delta(idx(1)?[0], rank),
        "epsilon" => epsilon(idx(1)?[0], rank),
        "phi" => phi(idx(1)?[0], rank),
        "psi" => psi(idx(1)?[0], rank),
        "lambda" => {
            let v = idx(2)?;
            lambda(v[0], v[1], rank)
        }
        "nu" => {
            let v = idx(2)?;
            nu(v[0], v[1], rank)
        }
        "kappa_jk" => {
            let v = idx(2)?;
            kappa_jk(v[0], v[1], rank)
        }
        "kappa_ijk" => {
            let v = idx(3)?;
            kappa_ijk(v[0], v[1], v[2], rank)
        }
        "tau" => {
            let v = idx(2)?;
            tau(v[0], v[1], rank)
        }
        "alpha_plus_f2" | "beta_plus_f2" => {
            if rank != 2 {
                return Err(Error::InvalidParameters(format!(
                    "`{name}` lives in rank 2"
                )));
            }
            Ok(if name == "alpha_plus_f2" {
                alpha_plus_f2()
            } else {
                beta_plus_f2()
            })
        }
        other => Err(Error::UnknownAutomorphism(other.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freewords::parse_word;

    fn all_small() -> Vec<Endomorphism> {
        let mut v = nielsen_generators(3).unwrap();
        v.extend(torelli_generators(3).unwrap());
        v.extend(nielsen_generators(4).unwrap());
        v.extend(torelli_generators(4).unwrap());
        v.push(alpha_plus_f2());
        v.push(beta_plus_f2());
        v.push(alpha(1, 3).unwrap());
        v.push(beta(&parse_word("x1 x2^-1", 3).unwrap(), 3).unwrap());
        v.push(gamma(&parse_word("x1^2", 3).unwrap(), 3).unwrap());
        v
    }

    #[test]
    fn catalog_inverses_are_inverses() {
        for e in all_small() {
            let inv = e.inverse().expect("catalog entries carry inverses");
            assert!(e.compose(&inv).unwrap().is_identity(), "{e}");
            assert!(inv.compose(&e).unwrap().is_identity(), "{e}");
        }
    }

    #[test]
    fn lambda_example() {
        let l = builtin_automorphism("lambda", &CatalogParams::Indices(vec![1, 2]), 3).unwrap();
        assert_eq!(l.image(1), &parse_word("x3 x2", 3).unwrap());
        assert_eq!(l.image(0), &parse_word("x1", 3).unwrap());
        assert_eq!(l.image(2), &parse_word("x3", 3).unwrap());
    }

    #[test]
    fn alpha_plus_example() {
        let a = builtin_automorphism("alpha_plus_f2", &CatalogParams::None, 2).unwrap();
        assert_eq!(a.image(0), &parse_word("x2^-1", 2).unwrap());
        assert_eq!(a.image(1), &parse_word("x1", 2).unwrap());
    }

    #[test]
    fn gamma_of_empty_is_identity() {
        let g = builtin_automorphism("gamma", &CatalogParams::Word(Word::identity(3)), 3).unwrap();
        assert!(g.is_identity());
    }

    #[test]
    fn neumann_relators_on_generators() {
        let a = alpha_plus_f2();
        let b = beta_plus_f2();
        assert!(a.pow(4).unwrap().is_identity());
        assert!(b.pow(3).unwrap().is_identity());
        assert!(!a.pow(2).unwrap().is_identity());
    }

    #[test]
    fn catalog_errors() {
        assert!(matches!(
            builtin_automorphism("omega", &CatalogParams::None, 2),
            Err(Error::UnknownAutomorphism(_))
        ));
        assert!(builtin_automorphism("lambda", &CatalogParams::Indices(vec![1, 1]), 3).is_err());
        assert!(builtin_automorphism("lambda", &CatalogParams::Indices(vec![1, 5]), 3).is_err());
        assert!(builtin_automorphism(
            "beta",
            &CatalogParams::Word(parse_word("x3", 3).unwrap()),
            3
        )
        .is_err());
    }
}
