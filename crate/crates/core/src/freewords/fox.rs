//! Fox derivatives projected to `Z[G]`.

use num_rational::BigRational;

use super::Word;
use crate::fingroup::MarkedEpimorphism;
use crate::grpring::GroupRingElement;

/// Accumulates `π(∂w/∂x_i)` for every `i` into `out`, laid out as blocks of
/// length `|G|` indexed by `(i, γ)`.
pub(crate) fn fox_accumulate(w: &Word, pi: &MarkedEpimorphism, scale: i64, out: &mut [i64]) {
    let order = pi.group().order();
    let mut prefix = 0usize;
    for (j, s) in w.letters() {
        if s > 0 {
            out[j * order + prefix] += scale;
            prefix = pi.right_mul(prefix, j, 1);
        } else {
            prefix = pi.right_mul(prefix, j, -1);
            out[j * order + prefix] -= scale;
        }
    }
}

/// Concatenated coefficient vectors of `π(∂w/∂x_1), …, π(∂w/∂x_n)`.
pub fn fox_vector(w: &Word, pi: &MarkedEpimorphism) -> Vec<i64> {
    assert_eq!(w.rank(), pi.rank(), "rank mismatch");
    let mut out = vec![0; pi.rank() * pi.group().order()];
    fox_accumulate(w, pi, 1, &mut out);
    out
}

/// `π(∂w/∂x_i)` as a group-ring element.
pub fn fox_derivative_projected(w: &Word, i: usize, pi: &MarkedEpimorphism) -> GroupRingElement {
    assert_eq!(w.rank(), pi.rank(), "rank mismatch");
    let order = pi.group().order();
    let mut prefix = 0usize;
    let mut coeffs = vec![0i64; order];
    for (j, s) in w.letters() {
        if s > 0 {
            if j == i {
                coeffs[prefix] += 1;
            }
            prefix = pi.right_mul(prefix, j, 1);
        } else {
            prefix = pi.right_mul(prefix, j, -1);
            if j == i {
                coeffs[prefix] -= 1;
            }
        }
    }
    GroupRingElement::from_terms(
        pi.group().clone(),
        coeffs
            .into_iter()
            .enumerate()
            .filter(|(_, c)| *c != 0)
            .map(|(g, c)| (g, BigRational::from_integer(c.into()))),
    )
}
