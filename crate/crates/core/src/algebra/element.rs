use crate::linalg::{add_scaled, scale, Field, SparseVec};

/// Element of a finite-dimensional algebra in coordinates of its basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlgebraElement<K> {
    coeffs: SparseVec<K>,
}

impl<K: Field> AlgebraElement<K> {
    pub fn zero() -> Self {
        AlgebraElement { coeffs: Vec::new() }
    }

    pub fn basis(i: usize) -> Self {
        AlgebraElement {
            coeffs: vec![(i, K::one())],
        }
    }

    /// Wraps a sorted sparse vector without stored zeros.
    pub fn from_sparse(coeffs: SparseVec<K>) -> Self {
        debug_assert!(coeffs.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(coeffs.iter().all(|(_, x)| !x.is_zero()));
        AlgebraElement { coeffs }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (usize, K)>) -> Self {
        AlgebraElement {
            coeffs: crate::linalg::collect_sparse(terms),
        }
    }

    pub fn terms(&self) -> &[(usize, K)] {
        &self.coeffs
    }

    pub fn into_sparse(self) -> SparseVec<K> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, i: usize) -> K {
        self.coeffs
            .binary_search_by_key(&i, |(j, _)| *j)
            .map(|k| self.coeffs[k].1.clone())
            .unwrap_or_else(|_| K::zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        AlgebraElement {
            coeffs: add_scaled(&self.coeffs, &K::one(), &other.coeffs),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        AlgebraElement {
            coeffs: add_scaled(&self.coeffs, &(-K::one()), &other.coeffs),
        }
    }

    pub fn add_scaled(&self, c: &K, other: &Self) -> Self {
        AlgebraElement {
            coeffs: add_scaled(&self.coeffs, c, &other.coeffs),
        }
    }

    pub fn scale(&self, c: &K) -> Self {
        AlgebraElement {
            coeffs: scale(&self.coeffs, c),
        }
    }

    /// Human-readable form using the given basis labels, e.g. `e1 + c1` or `-a2`.
    pub fn display_with(&self, labels: &[String]) -> String {
        if self.coeffs.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (i, x)) in self.coeffs.iter().enumerate() {
            let s = x.to_string();
            let (neg, mag) = match s.strip_prefix('-') {
                Some(m) => (true, m.to_string()),
                None => (false, s),
            };
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if mag != "1" {
                out.push_str(&mag);
                out.push('*');
            }
            out.push_str(&labels[*i]);
        }
        out
    }
}
