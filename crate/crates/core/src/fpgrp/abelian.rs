use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{smith_normal_form, Presentation};

/// `Z^r × C_{d_1} × … × C_{d_k}` with `1 < d_1 | d_2 | … | d_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Abelianization {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl fmt::Display for Abelianization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("C{d}")));
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join(" x "))
        }
    }
}

impl Abelianization {
    /// Parses the rendering produced by `Display`, e.g. `Z^2 x C2 x C4`.
    pub fn parse(text: &str) -> Option<Self> {
        let text = text.trim();
        let mut out = Abelianization {
            free_rank: 0,
            torsion: Vec::new(),
        };
        if text == "1" {
            return Some(out);
        }
        for part in text.split(" x ") {
            let part = part.trim();
            if part == "Z" {
                out.free_rank += 1;
            } else if let Some(r) = part.strip_prefix("Z^") {
                out.free_rank += r.parse::<usize>().ok()?;
            } else {
                let d = part.strip_prefix('C')?;
                out.torsion.push(d.parse().ok()?);
            }
        }
        Some(out)
    }
}

type SparseRow = BTreeMap<usize, BigInt>;

/// Abelian invariants of `⟨X | R⟩` from the exponent-sum matrix. Columns with
/// a `±1` entry are eliminated sparsely before the dense Smith form.
pub fn abelianization(p: &Presentation) -> Abelianization {
    let mut rows: Vec<SparseRow> = p
        .relators()
        .iter()
        .map(|r| {
            r.exponent_sums()
                .into_iter()
                .enumerate()
                .filter(|(_, c)| *c != 0)
                .map(|(j, c)| (j, BigInt::from(c)))
                .collect::<SparseRow>()
        })
        .filter(|r: &SparseRow| !r.is_empty())
        .collect();
    let mut alive_cols: Vec<bool> = vec![true; p.rank()];
    while let Some((ri, col)) = unit_pivot(&rows) {
        let pivot = rows.swap_remove(ri);
        let sign = pivot[&col].clone();
        for row in rows.iter_mut() {
            let Some(c) = row.get(&col).cloned() else {
                continue;
            };
            // row -= c·sign·pivot, which clears column col since sign² = 1
            let s = &c * &sign;
            for (j, x) in &pivot {
                let e = row.entry(*j).or_insert_with(BigInt::zero);
                *e -= &s * x;
                if e.is_zero() {
                    row.remove(j);
                }
            }
        }
        rows.retain(|r| !r.is_empty());
        alive_cols[col] = false;
    }
    let cols: Vec<usize> = (0..p.rank()).filter(|&j| alive_cols[j]).collect();
    let dense: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| {
            cols.iter()
                .map(|j| r.get(j).cloned().unwrap_or_default())
                .collect()
        })
        .collect();
    let factors = if dense.is_empty() {
        Vec::new()
    } else {
        smith_normal_form(&dense).invariant_factors()
    };
    Abelianization {
        free_rank: cols.len() - factors.len(),
        torsion: factors.into_iter().filter(|d| !d.is_one()).collect(),
    }
}

// the shortest row holding a ±1 entry
fn unit_pivot(rows: &[SparseRow]) -> Option<(usize, usize)> {
    rows.iter()
        .enumerate()
        .filter_map(|(i, r)| {
            r.iter()
                .find(|(_, x)| x.abs().is_one())
                .map(|(j, _)| (r.len(), i, *j))
        })
        .min()
        .map(|(_, i, j)| (i, j))
}
