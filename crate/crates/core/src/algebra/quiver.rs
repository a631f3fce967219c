use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::AlgebraError;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// Finite quiver with vertices numbered `1..=vertex_count`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Quiver {
    vertex_count: usize,
    arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(vertex_count: usize, arrows: Vec<Arrow>) -> Result<Self, AlgebraError> {
        let mut names = HashSet::new();
        for a in &arrows {
            for v in [a.source, a.target] {
                if v == 0 || v > vertex_count {
                    return Err(AlgebraError::BadVertex {
                        arrow: a.name.clone(),
                        vertex: v,
                    });
                }
            }
            if !names.insert(a.name.clone()) {
                return Err(AlgebraError::DuplicateArrow(a.name.clone()));
            }
        }
        Ok(Quiver { vertex_count, arrows })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        1..=self.vertex_count
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, idx: usize) -> &Arrow {
        &self.arrows[idx]
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    /// Path from a list of arrow names written in product order (leftmost applied last).
    pub fn path_from_names(&self, names: &[&str]) -> Result<Path, AlgebraError> {
        let idx = names
            .iter()
            .map(|n| {
                self.arrow_index(n)
                    .ok_or_else(|| AlgebraError::UnknownArrow(n.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Path::from_arrows(self, idx)
    }

    pub fn path_name(&self, p: &Path) -> String {
        if p.arrows.is_empty() {
            format!("e{}", p.source)
        } else {
            p.arrows
                .iter()
                .map(|&a| self.arrows[a].name.as_str())
                .collect::<Vec<_>>()
                .join("*")
        }
    }
}

/// A path in a quiver written as a product: `arrows[0]` is applied last.
///
/// Composition reads right to left, so `p*q` means "first `q`, then `p`".
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Path {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Path {
        Path {
            source: v,
            target: v,
            arrows: Vec::new(),
        }
    }

    pub fn from_arrows(q: &Quiver, arrows: Vec<usize>) -> Result<Path, AlgebraError> {
        let Some(&first_applied) = arrows.last() else {
            return Err(AlgebraError::EmptyWord);
        };
        for w in arrows.windows(2) {
            // w[1] is applied before w[0]
            if q.arrows[w[1]].target != q.arrows[w[0]].source {
                return Err(AlgebraError::NotComposable(format!(
                    "{} then {}",
                    q.arrows[w[1]].name, q.arrows[w[0]].name
                )));
            }
        }
        Ok(Path {
            source: q.arrows[first_applied].source,
            target: q.arrows[arrows[0]].target,
            arrows,
        })
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    /// `self * other`, i.e. `other` followed by `self`; `None` if the endpoints do not meet.
    pub fn compose(&self, other: &Path) -> Option<Path> {
        if self.source != other.target {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&other.arrows);
        Some(Path {
            source: other.source,
            target: self.target,
            arrows,
        })
    }

    /// Key of the path order used to orient relations: length first, then the arrow
    /// indices in application order.
    pub fn order_key(&self) -> (usize, Vec<usize>) {
        (self.len(), self.arrows.iter().rev().copied().collect())
    }

    /// Starting positions where `word` occurs as a contiguous subword.
    pub fn occurrences<'a>(&'a self, word: &'a [usize]) -> impl Iterator<Item = usize> + 'a {
        let n = word.len();
        (0..=self.arrows.len().saturating_sub(n))
            .filter(move |&i| n > 0 && self.arrows.len() >= n && self.arrows[i..i + n] == *word)
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.arrows.is_empty() {
            write!(f, "e{}", self.source)
        } else {
            let w: Vec<String> = self.arrows.iter().map(|a| format!("#{a}")).collect();
            write!(f, "{}", w.join("*"))
        }
    }
}
