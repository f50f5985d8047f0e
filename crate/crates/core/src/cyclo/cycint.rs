use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Coefficients of `Φ_d`, lowest degree first.
pub fn cyclotomic_polynomial(d: u64) -> Arc<Vec<BigInt>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<Vec<BigInt>>>>> = OnceLock::new();
    assert!(d >= 1, "conductor must be positive");
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&d) {
        return p.clone();
    }
    // x^d − 1 divided by Φ_k for every proper divisor k of d
    let mut num = vec![BigInt::zero(); d as usize + 1];
    num[0] = -BigInt::one();
    num[d as usize] = BigInt::one();
    for k in 1..d {
        if d.is_multiple_of(k) {
            num = exact_div(&num, &cyclotomic_polynomial(k));
        }
    }
    let p = Arc::new(num);
    cache.lock().unwrap().insert(d, p.clone());
    p
}

fn exact_div(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dl = den.len() - 1;
    let lead = &den[dl];
    let mut q = vec![BigInt::zero(); num.len() - dl];
    for i in (0..q.len()).rev() {
        let (c, r) = rem[i + dl].div_rem(lead);
        assert!(r.is_zero(), "inexact polynomial division");
        for (k, dk) in den.iter().enumerate() {
            rem[i + k] -= &c * dk;
        }
        q[i] = c;
    }
    assert!(
        rem.iter().all(|c| c.is_zero()),
        "inexact polynomial division"
    );
    q
}

/// Euler's totient.
pub fn euler_phi(mut n: u64) -> u64 {
    let mut out = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            out -= out / p;
        }
        p += 1;
    }
    if n > 1 {
        out -= out / n;
    }
    out
}

/// An element of `Z[ζ_d]` in the power basis `1, ζ, …, ζ^{φ(d)−1}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct CycInt {
    d: u64,
    coeffs: Vec<BigInt>,
}

impl CycInt {
    /// Reduces an arbitrary polynomial in `ζ_d` modulo `Φ_d`.
    pub fn from_poly(d: u64, poly: Vec<BigInt>) -> Self {
        let phi = cyclotomic_polynomial(d);
        let deg = phi.len() - 1;
        let mut c = poly;
        // Φ_d is monic
        for i in (deg..c.len()).rev() {
            if c[i].is_zero() {
                continue;
            }
            let lead = c[i].clone();
            for (k, pk) in phi.iter().enumerate() {
                c[i - deg + k] -= &lead * pk;
            }
        }
        c.resize(deg, BigInt::zero());
        CycInt { d, coeffs: c }
    }

    pub fn from_int(d: u64, n: impl Into<BigInt>) -> Self {
        Self::from_poly(d, vec![n.into()])
    }

    pub fn zero(d: u64) -> Self {
        Self::from_int(d, 0)
    }

    pub fn one(d: u64) -> Self {
        Self::from_int(d, 1)
    }

    /// `ζ_d^k` for any integer `k`.
    pub fn zeta_pow(d: u64, k: i64) -> Self {
        let k = k.rem_euclid(d as i64) as usize;
        let mut poly = vec![BigInt::zero(); k + 1];
        poly[k] = BigInt::one();
        Self::from_poly(d, poly)
    }

    pub fn zeta(d: u64) -> Self {
        Self::zeta_pow(d, 1)
    }

    pub fn conductor(&self) -> u64 {
        self.d
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.d, other.d, "conductor mismatch");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check(other);
        CycInt {
            d: self.d,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        CycInt {
            d: self.d,
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check(other);
        let mut poly = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len()];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                poly[i + j] += a * b;
            }
        }
        Self::from_poly(self.d, poly)
    }

    pub fn scale(&self, s: &BigInt) -> Self {
        CycInt {
            d: self.d,
            coeffs: self.coeffs.iter().map(|a| a * s).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one(self.d);
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// The Galois conjugate `ζ ↦ ζ^a`.
    pub fn galois(&self, a: i64) -> Self {
        let d = self.d as i64;
        let mut poly = vec![BigInt::zero(); self.d as usize];
        for (k, c) in self.coeffs.iter().enumerate() {
            poly[((k as i64) * a).rem_euclid(d) as usize] += c;
        }
        Self::from_poly(self.d, poly)
    }

    /// Complex conjugation, `ζ ↦ ζ⁻¹`.
    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        *self == Self::one(self.d)
    }

    /// The value as an integer, when it is one.
    pub fn as_integer(&self) -> Option<BigInt> {
        if self.coeffs.iter().skip(1).all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// `k` with `self = ζ_d^k`, if any.
    pub fn root_of_unity_exponent(&self) -> Option<u64> {
        (0..self.d).find(|&k| *self == Self::zeta_pow(self.d, k as i64))
    }

    /// Same element seen in `Z[ζ_e]` for a multiple `e` of the conductor.
    pub fn lift(&self, e: u64) -> Self {
        assert!(e.is_multiple_of(self.d), "{} does not divide {e}", self.d);
        let step = (e / self.d) as usize;
        let mut poly = vec![BigInt::zero(); self.coeffs.len() * step + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            poly[k * step] = c.clone();
        }
        Self::from_poly(e, poly)
    }
}

impl fmt::Display for CycInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let mono = match k {
                0 => String::new(),
                1 => "z".to_string(),
                _ => format!("z^{k}"),
            };
            let body = if k == 0 {
                mag.to_string()
            } else if mag.is_one() {
                mono
            } else {
                format!("{mag}*{mono}")
            };
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            out.push_str(&body);
        }
        if out.is_empty() {
            out.push('0');
        }
        write!(f, "{out}")
    }
}
