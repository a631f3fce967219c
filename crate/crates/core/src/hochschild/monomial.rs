//! Hilbert functions of commutative polynomial rings modulo monomial ideals.

use std::collections::BTreeSet;

use crate::graded::GradedDims;

/// A commutative polynomial ring with graded variables modulo an ideal generated by monomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialQuotient {
    pub names: Vec<String>,
    pub degrees: Vec<usize>,
    /// Exponent vectors of the generating monomials.
    pub relations: Vec<Vec<usize>>,
}

impl MonomialQuotient {
    pub fn is_standard(&self, m: &[usize]) -> bool {
        !self.relations.iter().any(|r| r.iter().zip(m).all(|(a, b)| a <= b))
    }

    pub fn degree(&self, m: &[usize]) -> usize {
        m.iter().zip(&self.degrees).map(|(e, d)| e * d).sum()
    }

    /// Standard monomials of degree at most `max_degree`. Returns `None` if more than `cap`
    /// are found, which happens when degree-0 variables generate an infinite family.
    pub fn standard_monomials(&self, max_degree: usize, cap: usize) -> Option<Vec<Vec<usize>>> {
        let n = self.degrees.len();
        let mut seen = BTreeSet::new();
        let mut stack = vec![vec![0; n]];
        seen.insert(vec![0; n]);
        while let Some(m) = stack.pop() {
            for v in 0..n {
                let mut next = m.clone();
                next[v] += 1;
                if self.degree(&next) > max_degree || !self.is_standard(&next) || seen.contains(&next) {
                    continue;
                }
                if seen.len() >= cap {
                    return None;
                }
                seen.insert(next.clone());
                stack.push(next);
            }
        }
        Some(seen.into_iter().collect())
    }

    pub fn hilbert(&self, max_degree: usize) -> Option<GradedDims> {
        let monos = self.standard_monomials(max_degree, 100_000)?;
        let mut dims = vec![0; max_degree + 1];
        for m in &monos {
            dims[self.degree(m)] += 1;
        }
        Some(GradedDims::new(dims))
    }

    pub fn display(&self, m: &[usize]) -> String {
        let parts: Vec<String> = m
            .iter()
            .zip(&self.names)
            .filter(|(e, _)| **e > 0)
            .map(|(e, name)| if *e == 1 { name.clone() } else { format!("{name}^{e}") })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }
}

/// `k[z_1..z_{e-1}, x, y] / ⟨z_i z_j, z_i x, z_i y, x², x y^{e-1}, y^e⟩` with
/// `deg z = 0`, `deg x = 1`, `deg y = 2`. Variables are ordered `z_1..z_{e-1}, x, y`.
pub fn presented_ring(e: usize) -> MonomialQuotient {
    let k = e - 1;
    let n = k + 2;
    let (x, y) = (k, k + 1);
    let unit = |v: usize, p: usize| {
        let mut m = vec![0; n];
        m[v] = p;
        m
    };
    let mut relations = Vec::new();
    for i in 0..k {
        for j in i..k {
            let mut m = unit(i, 1);
            m[j] += 1;
            relations.push(m);
        }
        let mut zx = unit(i, 1);
        zx[x] = 1;
        relations.push(zx);
        let mut zy = unit(i, 1);
        zy[y] = 1;
        relations.push(zy);
    }
    relations.push(unit(x, 2));
    let mut xy = unit(y, e - 1);
    xy[x] = 1;
    relations.push(xy);
    relations.push(unit(y, e));
    let mut names: Vec<String> = (1..e).map(|i| format!("z{i}")).collect();
    names.push("x".into());
    names.push("y".into());
    let mut degrees = vec![0; k];
    degrees.extend([1, 2]);
    MonomialQuotient {
        names,
        degrees,
        relations,
    }
}

/// `k[z_1..z_{e-1}, y] / ⟨z_i z_j, z_k y, y^e⟩` with `deg y = 2`.
pub fn presented_even_ring(e: usize) -> MonomialQuotient {
    let k = e - 1;
    let n = k + 1;
    let y = k;
    let mut relations = Vec::new();
    for i in 0..k {
        for j in i..k {
            let mut m = vec![0; n];
            m[i] += 1;
            m[j] += 1;
            relations.push(m);
        }
        let mut zy = vec![0; n];
        zy[i] = 1;
        zy[y] = 1;
        relations.push(zy);
    }
    let mut ye = vec![0; n];
    ye[y] = e;
    relations.push(ye);
    let mut names: Vec<String> = (1..e).map(|i| format!("z{i}")).collect();
    names.push("y".into());
    let mut degrees = vec![0; k];
    degrees.push(2);
    MonomialQuotient {
        names,
        degrees,
        relations,
    }
}

/// Graded dimensions of the presented even part of `HH*(A_e)`.
pub fn even_part_hilbert(e: usize) -> GradedDims {
    presented_even_ring(e)
        .hilbert(2 * e)
        .expect("the presented even ring is finite-dimensional")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn even_part_small() {
        assert_eq!(even_part_hilbert(3), GradedDims::new(vec![3, 0, 1, 0, 1]));
        assert_eq!(even_part_hilbert(2), GradedDims::new(vec![2, 0, 1]));
    }

    #[test]
    fn presented_ring_dims() {
        for e in 2..7 {
            let mut expected = vec![1; 2 * e - 1];
            expected[0] = e;
            assert_eq!(presented_ring(e).hilbert(4 * e).unwrap(), GradedDims::new(expected));
        }
    }

    #[test]
    fn infinite_quotients_are_capped() {
        let q = MonomialQuotient {
            names: vec!["z".into()],
            degrees: vec![0],
            relations: Vec::new(),
        };
        assert!(q.standard_monomials(3, 50).is_none());
    }
}
