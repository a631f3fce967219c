//! Symmetric polynomials in `w` variables, stored in the elementary basis `e_1..e_w`.

use std::collections::BTreeMap;
use std::fmt;

use crate::linalg::{Field, Rational};
use crate::partition::Partition;

use super::SymError;

/// Exponent vector over `x_1..x_w` (or `e_1..e_w`) mapped to its coefficient.
pub type Poly = BTreeMap<Vec<usize>, Rational>;

fn insert(p: &mut Poly, m: Vec<usize>, c: Rational) {
    if c.is_zero() {
        return;
    }
    let sum = p.get(&m).cloned().unwrap_or_else(Rational::zero) + c;
    if sum.is_zero() {
        p.remove(&m);
    } else {
        p.insert(m, sum);
    }
}

fn poly_mul(a: &Poly, b: &Poly, cap: Option<usize>) -> Poly {
    let mut out = Poly::new();
    for (ma, ca) in a {
        for (mb, cb) in b {
            let m: Vec<usize> = ma.iter().zip(mb).map(|(x, y)| x + y).collect();
            if cap.is_some_and(|c| m.iter().any(|&x| x >= c)) {
                continue;
            }
            insert(&mut out, m, ca.clone() * cb.clone());
        }
    }
    out
}

/// `e_k(x_1..x_w)` as a polynomial in the `x`s.
pub fn elementary_expanded(k: usize, w: usize) -> Poly {
    let mut out = Poly::new();
    let mut cur = Vec::new();
    fn go(start: usize, k: usize, w: usize, cur: &mut Vec<usize>, out: &mut Poly) {
        if cur.len() == k {
            let mut m = vec![0; w];
            for &i in cur.iter() {
                m[i] = 1;
            }
            out.insert(m, Rational::one());
            return;
        }
        for i in start..w {
            cur.push(i);
            go(i + 1, k, w, cur, out);
            cur.pop();
        }
    }
    if k <= w {
        go(0, k, w, &mut cur, &mut out);
    }
    out
}

/// A symmetric polynomial in `w` variables as a polynomial in `e_1..e_w`, with
/// `deg e_k = k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SymPoly {
    w: usize,
    terms: Poly,
}

impl SymPoly {
    pub fn zero(w: usize) -> Self {
        SymPoly { w, terms: Poly::new() }
    }

    pub fn constant(w: usize, c: Rational) -> Self {
        let mut terms = Poly::new();
        insert(&mut terms, vec![0; w], c);
        SymPoly { w, terms }
    }

    pub fn one(w: usize) -> Self {
        Self::constant(w, Rational::one())
    }

    /// `e_k`; zero for `k > w`, one for `k = 0`.
    pub fn elementary(k: usize, w: usize) -> Self {
        if k == 0 {
            return Self::one(w);
        }
        if k > w {
            return Self::zero(w);
        }
        let mut m = vec![0; w];
        m[k - 1] = 1;
        SymPoly {
            w,
            terms: Poly::from([(m, Rational::one())]),
        }
    }

    /// `e_λ = Π e_{λ_i}`.
    pub fn from_partition(lambda: &Partition, w: usize) -> Self {
        if lambda.parts().iter().any(|&p| p > w) {
            return Self::zero(w);
        }
        let mut m = vec![0; w];
        for &p in lambda.parts() {
            m[p - 1] += 1;
        }
        SymPoly {
            w,
            terms: Poly::from([(m, Rational::one())]),
        }
    }

    pub fn w(&self) -> usize {
        self.w
    }

    /// Exponent vectors over `e_1..e_w` with coefficients.
    pub fn terms(&self) -> &Poly {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn weight(m: &[usize]) -> usize {
        m.iter().enumerate().map(|(i, a)| (i + 1) * a).sum()
    }

    /// The degree of a nonzero homogeneous polynomial.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut degs = self.terms.keys().map(|m| Self::weight(m));
        let d = degs.next()?;
        degs.all(|x| x == d).then_some(d)
    }

    /// Partition `λ` with `e_λ` the given monomial.
    pub fn monomial_partition(m: &[usize]) -> Partition {
        let mut parts = Vec::new();
        for (i, &a) in m.iter().enumerate() {
            parts.extend(std::iter::repeat_n(i + 1, a));
        }
        Partition::new(parts)
    }

    fn check(&self, other: &Self) -> Result<(), SymError> {
        if self.w != other.w {
            return Err(SymError::WidthMismatch {
                expected: self.w,
                found: other.w,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, SymError> {
        self.check(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            insert(&mut terms, m.clone(), c.clone());
        }
        Ok(SymPoly { w: self.w, terms })
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut terms = Poly::new();
        for (m, x) in &self.terms {
            insert(&mut terms, m.clone(), x.clone() * c.clone());
        }
        SymPoly { w: self.w, terms }
    }

    pub fn sub(&self, other: &Self) -> Result<Self, SymError> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn mul(&self, other: &Self) -> Result<Self, SymError> {
        self.check(other)?;
        Ok(SymPoly {
            w: self.w,
            terms: poly_mul(&self.terms, &other.terms, None),
        })
    }

    /// Substitutes `e_k ↦ e_k(x_1..x_w)`. With `cap = Some(c)`, monomials with an exponent
    /// `>= c` are dropped as they appear, which computes the image modulo `x_i^c`.
    pub fn expand_truncated(&self, cap: Option<usize>) -> Poly {
        let elementary: Vec<Poly> = (1..=self.w).map(|k| elementary_expanded(k, self.w)).collect();
        let mut out = Poly::new();
        for (m, c) in &self.terms {
            let mut acc = Poly::from([(vec![0; self.w], c.clone())]);
            for (k, &a) in m.iter().enumerate() {
                for _ in 0..a {
                    acc = poly_mul(&acc, &elementary[k], cap);
                }
            }
            for (mono, x) in acc {
                insert(&mut out, mono, x);
            }
        }
        out
    }

    pub fn expand(&self) -> Poly {
        self.expand_truncated(None)
    }
}

impl fmt::Display for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (m, c)) in self.terms.iter().rev().enumerate() {
            let mono: Vec<String> = m
                .iter()
                .enumerate()
                .filter(|(_, a)| **a > 0)
                .map(|(i, a)| {
                    if *a == 1 {
                        format!("e{}", i + 1)
                    } else {
                        format!("e{}^{a}", i + 1)
                    }
                })
                .collect();
            let neg = *c < Rational::zero();
            let abs = if neg { -c.clone() } else { c.clone() };
            let sign = match (n, neg) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            };
            let body = if mono.is_empty() {
                abs.to_string()
            } else if abs.is_one() {
                mono.join("*")
            } else {
                format!("{abs}*{}", mono.join("*"))
            };
            write!(f, "{sign}{body}")?;
        }
        Ok(())
    }
}

/// `p_k` in terms of `e_1..e_w` by Newton's identities
/// `p_k = Σ_{i<k} (-1)^{i-1} e_i p_{k-i} + (-1)^{k-1} k e_k`.
pub fn power_sum_in_e(k: usize, w: usize) -> SymPoly {
    let mut p: Vec<SymPoly> = vec![SymPoly::constant(w, Rational::from_i64(w as i64))];
    for n in 1..=k {
        let sign = |i: usize| if i % 2 == 1 { Rational::one() } else { -Rational::one() };
        let mut acc = SymPoly::elementary(n, w).scale(&(sign(n) * Rational::from_i64(n as i64)));
        for i in 1..n {
            let term = SymPoly::elementary(i, w).mul(&p[n - i]).expect("same width");
            acc = acc.add(&term.scale(&sign(i))).expect("same width");
        }
        p.push(acc);
    }
    p.swap_remove(k)
}

/// Parses `p3` (power sum) or `e2` (elementary) as a symmetric polynomial in `w` variables.
pub fn parse_generator(token: &str, w: usize) -> Result<SymPoly, SymError> {
    let t = token.trim();
    let bad = || SymError::BadGenerator(token.to_string());
    let (kind, k) = t.split_at_checked(1).ok_or_else(bad)?;
    let k: usize = k.parse().map_err(|_| bad())?;
    match kind {
        "p" if k >= 1 => Ok(power_sum_in_e(k, w)),
        "e" => Ok(SymPoly::elementary(k, w)),
        _ => Err(bad()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn newton_small() {
        assert_eq!(power_sum_in_e(1, 3).to_string(), "e1");
        assert_eq!(power_sum_in_e(2, 3).to_string(), "e1^2 - 2*e2");
        assert_eq!(power_sum_in_e(3, 3).to_string(), "e1^3 - 3*e1*e2 + 3*e3");
        assert_eq!(power_sum_in_e(3, 2).to_string(), "e1^3 - 3*e1*e2");
    }

    #[test]
    fn expansion_is_power_sum() {
        for w in 1..=4 {
            for k in 1..=8 {
                let mut expected = Poly::new();
                for i in 0..w {
                    let mut m = vec![0; w];
                    m[i] = k;
                    expected.insert(m, Rational::one());
                }
                assert_eq!(power_sum_in_e(k, w).expand(), expected, "p{k}, w={w}");
            }
        }
    }

    #[test]
    fn homogeneity() {
        assert_eq!(power_sum_in_e(4, 3).homogeneous_degree(), Some(4));
        let mixed = SymPoly::one(2).add(&SymPoly::elementary(1, 2)).unwrap();
        assert_eq!(mixed.homogeneous_degree(), None);
        assert!(SymPoly::one(2).add(&SymPoly::one(3)).is_err());
    }

    #[test]
    fn parse_tokens() {
        assert_eq!(parse_generator("p2", 2).unwrap(), power_sum_in_e(2, 2));
        assert_eq!(parse_generator("e3", 2).unwrap(), SymPoly::zero(2));
        assert!(parse_generator("q2", 2).is_err());
        assert!(parse_generator("p0", 2).is_err());
    }
}
