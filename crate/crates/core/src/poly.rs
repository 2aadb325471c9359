//! Polynomials in one variable `k` with exact rational coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::value::{format_rational, int, Rational};

/// Coefficients lowest degree first, with trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct RationalPoly {
    coeffs: Vec<Rational>,
}

impl RationalPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RationalPoly { coeffs }
    }

    pub fn zero() -> Self {
        RationalPoly::default()
    }

    pub fn one() -> Self {
        RationalPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        RationalPoly::new(vec![c])
    }

    /// The variable `k`.
    pub fn var() -> Self {
        RationalPoly::new(vec![Rational::zero(), Rational::one()])
    }

    /// From integer coefficients, lowest degree first.
    pub fn from_ints(cs: &[i64]) -> Self {
        RationalPoly::new(cs.iter().map(|&c| int(c)).collect())
    }

    /// `C(k, j) = k(k−1)⋯(k−j+1) / j!`.
    pub fn binomial(j: usize) -> Self {
        let mut p = RationalPoly::one();
        for i in 0..j {
            let factor = RationalPoly::new(vec![int(-(i as i64)), Rational::one()]);
            p = &p * &factor;
            p = p.scale(&Rational::new(1.into(), ((i + 1) as i64).into()));
        }
        p
    }

    /// The falling factorial `k(k−1)⋯(k−j+1)`.
    pub fn falling_factorial(j: usize) -> Self {
        (0..j).fold(RationalPoly::one(), |acc, i| {
            &acc * &RationalPoly::new(vec![int(-(i as i64)), Rational::one()])
        })
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        RationalPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn eval(&self, k: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * k + c)
    }

    pub fn eval_int(&self, k: i64) -> Rational {
        self.eval(&int(k))
    }

    /// `self(inner(k))`.
    pub fn compose(&self, inner: &RationalPoly) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(RationalPoly::zero(), |acc, c| {
                &(&acc * inner) + &RationalPoly::constant(c.clone())
            })
    }

    /// The unique polynomial of degree below `points.len()` through the points.
    ///
    /// Panics if two abscissae coincide.
    pub fn interpolate(points: &[(Rational, Rational)]) -> Self {
        let mut out = RationalPoly::zero();
        for (i, (xi, yi)) in points.iter().enumerate() {
            let mut basis = RationalPoly::one();
            let mut denom = Rational::one();
            for (j, (xj, _)) in points.iter().enumerate() {
                if i != j {
                    basis = &basis * &RationalPoly::new(vec![-xj.clone(), Rational::one()]);
                    denom *= xi - xj;
                }
            }
            assert!(!denom.is_zero(), "interpolation nodes must be distinct");
            out = &out + &basis.scale(&(yi / denom));
        }
        out
    }

    /// Coefficients `c_j` with `self(k) = Σ_j c_j C(k, j)`.
    pub fn binomial_basis(&self) -> Vec<Rational> {
        let d = match self.degree() {
            None => return Vec::new(),
            Some(d) => d,
        };
        let mut diffs: Vec<Rational> = (0..=d as i64).map(|k| self.eval_int(k)).collect();
        let mut out = Vec::with_capacity(d + 1);
        for _ in 0..=d {
            out.push(diffs[0].clone());
            diffs = diffs.windows(2).map(|w| &w[1] - &w[0]).collect();
        }
        while out.last().is_some_and(Zero::is_zero) {
            out.pop();
        }
        out
    }

    /// Writes the binomial-basis form, e.g. `6 C(k,3)` or `C(k,2) + C(k,1)`.
    pub fn format_binomial(&self) -> String {
        let terms: Vec<(Rational, String)> = self
            .binomial_basis()
            .into_iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| (c, format!("C(k,{j})")))
            .collect();
        join_terms(&terms, " ")
    }
}

fn join_terms(terms: &[(Rational, String)], sep: &str) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (n, (c, mono)) in terms.iter().enumerate() {
        let negative = c.is_negative();
        if n == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let a = c.abs();
        let coeff = if a.is_integer() {
            format_rational(&a)
        } else {
            format!("({})", format_rational(&a))
        };
        if mono.is_empty() {
            out.push_str(&format_rational(&a));
        } else if a.is_one() {
            out.push_str(mono);
        } else if a.is_integer() {
            out.push_str(&format!("{coeff}{sep}{mono}"));
        } else {
            out.push_str(&format!("{coeff}{mono}"));
        }
    }
    out
}

/// E.g. `k^3 - 3k^2 + 2k` or `(1/2)k^2 - (1/2)k`.
impl fmt::Display for RationalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(Rational, String)> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| {
                let mono = match j {
                    0 => String::new(),
                    1 => "k".into(),
                    _ => format!("k^{j}"),
                };
                (c.clone(), mono)
            })
            .collect();
        f.write_str(&join_terms(&terms, ""))
    }
}

impl Add for &RationalPoly {
    type Output = RationalPoly;

    fn add(self, rhs: &RationalPoly) -> RationalPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let zero = Rational::zero();
        RationalPoly::new(
            (0..len)
                .map(|i| self.coeffs.get(i).unwrap_or(&zero) + rhs.coeffs.get(i).unwrap_or(&zero))
                .collect(),
        )
    }
}

impl Neg for &RationalPoly {
    type Output = RationalPoly;

    fn neg(self) -> RationalPoly {
        RationalPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Sub for &RationalPoly {
    type Output = RationalPoly;

    fn sub(self, rhs: &RationalPoly) -> RationalPoly {
        self + &(-rhs)
    }
}

impl Mul for &RationalPoly {
    type Output = RationalPoly;

    fn mul(self, rhs: &RationalPoly) -> RationalPoly {
        if self.is_zero() || rhs.is_zero() {
            return RationalPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RationalPoly::new(out)
    }
}

impl std::iter::Sum for RationalPoly {
    fn sum<I: Iterator<Item = RationalPoly>>(iter: I) -> Self {
        iter.fold(RationalPoly::zero(), |acc, p| &acc + &p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::value::frac;

    #[test]
    fn display_power_basis() {
        let p = RationalPoly::falling_factorial(3);
        assert_eq!(p.to_string(), "k^3 - 3k^2 + 2k");
        assert_eq!(RationalPoly::binomial(2).to_string(), "(1/2)k^2 - (1/2)k");
        assert_eq!(RationalPoly::zero().to_string(), "0");
        assert_eq!(RationalPoly::from_ints(&[1, 1]).to_string(), "k + 1");
        assert_eq!(RationalPoly::from_ints(&[-2]).to_string(), "-2");
    }

    #[test]
    fn arithmetic_and_eval() {
        assert_eq!(RationalPoly::falling_factorial(3).eval_int(3), int(6));
        let c2 = RationalPoly::binomial(2);
        assert_eq!(&c2 + &c2, RationalPoly::from_ints(&[0, -1, 1]));
        assert!((&c2 - &c2).is_zero());
        assert_eq!((&c2 * &RationalPoly::zero()).degree(), None);
    }

    #[test]
    fn binomial_basis_change() {
        let p = RationalPoly::falling_factorial(3);
        assert_eq!(p.binomial_basis(), vec![int(0), int(0), int(0), int(6)]);
        assert_eq!(p.format_binomial(), "6 C(k,3)");
        assert_eq!(RationalPoly::binomial(3).format_binomial(), "C(k,3)");
        let q = &RationalPoly::binomial(2) + &RationalPoly::binomial(1);
        assert_eq!(q.format_binomial(), "C(k,2) + C(k,1)");
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let p = RationalPoly::new(vec![frac(1, 3), int(0), frac(-2, 5), int(1)]);
        let pts: Vec<_> = (0..4).map(|k| (int(k), p.eval_int(k))).collect();
        assert_eq!(RationalPoly::interpolate(&pts), p);
    }

    #[test]
    fn composition() {
        let p = RationalPoly::from_ints(&[0, 0, 1]);
        let shift = RationalPoly::from_ints(&[-1, -1]);
        assert_eq!(p.compose(&shift), RationalPoly::from_ints(&[1, 2, 1]));
    }
}
