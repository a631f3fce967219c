use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::linalg::{Field, SparseVec};

use super::element::AlgebraElement;
use super::finite::FiniteAlgebra;
use super::quiver::{Path, Quiver};
use super::AlgebraError;

/// Longest irreducible path accepted before the presentation is declared infinite-dimensional.
pub const MAX_PATH_LEN: usize = 64;

/// Linear relation among parallel paths. Only monomial (one term) and binomial
/// (two terms) relations are supported.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation<K> {
    pub terms: Vec<(K, Path)>,
}

impl<K: Field> Relation<K> {
    pub fn monomial(p: Path) -> Self {
        Relation {
            terms: vec![(K::one(), p)],
        }
    }

    /// The relation `p - q`.
    pub fn commutation(p: Path, q: Path) -> Self {
        Relation {
            terms: vec![(K::one(), p), (-K::one(), q)],
        }
    }

    fn validate(&self, q: &Quiver) -> Result<(), AlgebraError> {
        let describe = || {
            self.terms
                .iter()
                .map(|(c, p)| format!("{c}*{}", q.path_name(p)))
                .collect::<Vec<_>>()
                .join(" + ")
        };
        if self.terms.is_empty() || self.terms.len() > 2 {
            return Err(AlgebraError::UnsupportedRelation(describe()));
        }
        let (s, t) = (self.terms[0].1.source, self.terms[0].1.target);
        for (c, p) in &self.terms {
            if c.is_zero() || p.is_trivial() {
                return Err(AlgebraError::UnsupportedRelation(describe()));
            }
            if p.source != s || p.target != t {
                return Err(AlgebraError::NotParallel(describe()));
            }
        }
        if self.terms.len() == 2 && self.terms[0].1 == self.terms[1].1 {
            return Err(AlgebraError::UnsupportedRelation(describe()));
        }
        Ok(())
    }
}

/// Rewriting rule `lead -> coeff * replacement` (or `lead -> 0`).
#[derive(Clone, Debug)]
struct Rule<K> {
    lead: Path,
    replacement: Option<(K, Path)>,
}

impl<K: Field> Rule<K> {
    fn from_relation(r: &Relation<K>) -> Self {
        if r.terms.len() == 1 {
            return Rule {
                lead: r.terms[0].1.clone(),
                replacement: None,
            };
        }
        let (a, b) = (&r.terms[0], &r.terms[1]);
        let (lead, other) = if a.1.order_key() > b.1.order_key() {
            (a, b)
        } else {
            (b, a)
        };
        // c_l lead + c_o other = 0  =>  lead = -(c_o / c_l) other
        let coeff = -(other.0.clone() * lead.0.inv().expect("nonzero coefficient"));
        Rule {
            lead: lead.1.clone(),
            replacement: Some((coeff, other.1.clone())),
        }
    }
}

type Combination<K> = BTreeMap<Path, K>;

fn add_term<K: Field>(c: &mut Combination<K>, p: Path, x: K) {
    let v = c.remove(&p).map_or(x.clone(), |y| y + x);
    if !v.is_zero() {
        c.insert(p, v);
    }
}

/// Bound quiver algebra `kQ/I` with `I` given by monomial and commutation relations,
/// realised on the basis of irreducible paths.
#[derive(Clone, Debug)]
pub struct BoundQuiverAlgebra<K> {
    quiver: Quiver,
    relations: Vec<Relation<K>>,
    rules: Vec<Rule<K>>,
    basis: Vec<Path>,
    index: HashMap<Path, usize>,
    structure: FiniteAlgebra<K>,
}

impl<K: Field> BoundQuiverAlgebra<K> {
    pub fn new(quiver: Quiver, relations: Vec<Relation<K>>) -> Result<Self, AlgebraError> {
        Self::with_aliases(quiver, relations, &HashMap::new())
    }

    /// Like [`Self::new`]; basis paths listed in `aliases` are labelled with the given names.
    pub fn with_aliases(
        quiver: Quiver,
        relations: Vec<Relation<K>>,
        aliases: &HashMap<Path, String>,
    ) -> Result<Self, AlgebraError> {
        for r in &relations {
            r.validate(&quiver)?;
        }
        let rules: Vec<Rule<K>> = relations.iter().map(Rule::from_relation).collect();
        let basis = irreducible_paths(&quiver, &rules)?;
        let index: HashMap<Path, usize> = basis.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();

        let mut alg = BoundQuiverAlgebra {
            quiver,
            relations,
            rules,
            basis,
            index,
            structure: FiniteAlgebra::new(Vec::new(), Vec::new(), Vec::new(), Vec::new(), Vec::new()),
        };
        let labels = alg
            .basis
            .iter()
            .map(|p| aliases.get(p).cloned().unwrap_or_else(|| alg.quiver.path_name(p)))
            .collect();
        let n = alg.basis.len();
        let mut table = Vec::with_capacity(n);
        for a in 0..n {
            let mut row = Vec::with_capacity(n);
            for b in 0..n {
                row.push(match alg.basis[a].compose(&alg.basis[b]) {
                    Some(p) => alg.reduce_path(&p).into_sparse(),
                    None => Vec::new(),
                });
            }
            table.push(row);
        }
        let unit: SparseVec<K> = alg
            .quiver
            .vertices()
            .map(|v| (alg.index[&Path::trivial(v)], K::one()))
            .collect::<Vec<_>>();
        let unit = crate::linalg::collect_sparse(unit);
        let radical = (0..n)
            .filter(|&i| !alg.basis[i].is_trivial())
            .map(|i| vec![(i, K::one())])
            .collect();
        let idempotents = alg
            .quiver
            .vertices()
            .map(|v| (format!("e{v}"), vec![(alg.index[&Path::trivial(v)], K::one())]))
            .collect();
        alg.structure = FiniteAlgebra::new(labels, table, unit, radical, idempotents);
        Ok(alg)
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn relations(&self) -> &[Relation<K>] {
        &self.relations
    }

    pub fn structure(&self) -> &FiniteAlgebra<K> {
        &self.structure
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Path] {
        &self.basis
    }

    pub fn basis_path(&self, i: usize) -> &Path {
        &self.basis[i]
    }

    pub fn basis_index(&self, p: &Path) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.structure.labels()[i]
    }

    pub fn labels(&self) -> &[String] {
        self.structure.labels()
    }

    /// Basis index of the trivial path at vertex `v`.
    pub fn vertex_idempotent(&self, v: usize) -> usize {
        self.index[&Path::trivial(v)]
    }

    pub fn source(&self, i: usize) -> usize {
        self.basis[i].source
    }

    pub fn target(&self, i: usize) -> usize {
        self.basis[i].target
    }

    /// Basis index of the arrow with the given name.
    pub fn arrow_basis_index(&self, name: &str) -> Option<usize> {
        let a = self.quiver.arrow_index(name)?;
        let p = Path::from_arrows(&self.quiver, vec![a]).ok()?;
        self.basis_index(&p)
    }

    pub fn element(&self, i: usize) -> AlgebraElement<K> {
        AlgebraElement::basis(i)
    }

    pub fn multiply(&self, a: &AlgebraElement<K>, b: &AlgebraElement<K>) -> AlgebraElement<K> {
        self.structure.multiply(a, b)
    }

    pub fn mul_basis(&self, a: usize, b: usize) -> &SparseVec<K> {
        self.structure.mul_basis(a, b)
    }

    pub fn center(&self) -> Vec<AlgebraElement<K>> {
        self.structure.center()
    }

    pub fn radical(&self, power: usize) -> Vec<AlgebraElement<K>> {
        self.structure.radical_power(power)
    }

    pub fn display(&self, x: &AlgebraElement<K>) -> String {
        self.structure.display(x)
    }

    /// Normal form of a path, by deterministic leftmost rewriting.
    pub fn reduce_path(&self, p: &Path) -> AlgebraElement<K> {
        let mut combo: Combination<K> = BTreeMap::new();
        combo.insert(p.clone(), K::one());
        let combo = self.normalize(combo);
        AlgebraElement::from_terms(combo.into_iter().map(|(p, x)| (self.index[&p], x)))
    }

    fn first_match(&self, p: &Path) -> Option<(usize, usize)> {
        (0..p.len()).find_map(|pos| {
            self.rules
                .iter()
                .position(|r| {
                    let w = &r.lead.arrows;
                    pos + w.len() <= p.len() && p.arrows[pos..pos + w.len()] == w[..]
                })
                .map(|ri| (ri, pos))
        })
    }

    fn rewrite_at(&self, p: &Path, rule: usize, pos: usize) -> Option<(K, Path)> {
        let r = &self.rules[rule];
        let (c, rep) = r.replacement.as_ref()?;
        let mut arrows = p.arrows[..pos].to_vec();
        arrows.extend_from_slice(&rep.arrows);
        arrows.extend_from_slice(&p.arrows[pos + r.lead.len()..]);
        Some((
            c.clone(),
            Path {
                source: p.source,
                target: p.target,
                arrows,
            },
        ))
    }

    fn normalize(&self, mut combo: Combination<K>) -> Combination<K> {
        loop {
            let hit = combo.keys().find_map(|p| self.first_match(p).map(|m| (p.clone(), m)));
            let Some((p, (rule, pos))) = hit else {
                return combo;
            };
            let x = combo.remove(&p).expect("term present");
            if let Some((c, q)) = self.rewrite_at(&p, rule, pos) {
                add_term(&mut combo, q, x * c);
            }
        }
    }

    /// Exhaustive confluence check: every path of length `<= max_len` must reach one normal
    /// form whichever rewrite is applied at each step. Returns the first offending path.
    pub fn verify_confluence(&self, max_len: usize) -> Result<(), Path> {
        let mut memo: HashMap<Vec<(Path, K)>, BTreeSet<Vec<(Path, K)>>> = HashMap::new();
        for p in all_paths(&self.quiver, max_len) {
            let mut start = BTreeMap::new();
            start.insert(p.clone(), K::one());
            if self.all_normal_forms(start, &mut memo).len() != 1 {
                return Err(p);
            }
        }
        Ok(())
    }

    fn all_normal_forms(
        &self,
        combo: Combination<K>,
        memo: &mut HashMap<Vec<(Path, K)>, BTreeSet<Vec<(Path, K)>>>,
    ) -> BTreeSet<Vec<(Path, K)>> {
        let key: Vec<(Path, K)> = combo.iter().map(|(p, x)| (p.clone(), x.clone())).collect();
        if let Some(r) = memo.get(&key) {
            return r.clone();
        }
        let mut successors = Vec::new();
        for (p, x) in &combo {
            for pos in 0..p.len() {
                for (ri, r) in self.rules.iter().enumerate() {
                    let w = &r.lead.arrows;
                    if pos + w.len() <= p.len() && p.arrows[pos..pos + w.len()] == w[..] {
                        let mut next = combo.clone();
                        next.remove(p);
                        if let Some((c, q)) = self.rewrite_at(p, ri, pos) {
                            add_term(&mut next, q, x.clone() * c);
                        }
                        successors.push(next);
                    }
                }
            }
        }
        let result = if successors.is_empty() {
            BTreeSet::from([key.clone()])
        } else {
            successors
                .into_iter()
                .flat_map(|s| self.all_normal_forms(s, memo))
                .collect()
        };
        memo.insert(key, result.clone());
        result
    }
}

/// Every path of length `1..=max_len` in the quiver, shortest first.
pub fn all_paths(q: &Quiver, max_len: usize) -> Vec<Path> {
    let mut out = Vec::new();
    let mut frontier: Vec<Path> = (0..q.arrows().len())
        .map(|a| Path::from_arrows(q, vec![a]).expect("single arrow"))
        .collect();
    for _ in 0..max_len {
        if frontier.is_empty() {
            break;
        }
        out.extend(frontier.iter().cloned());
        let mut next = Vec::new();
        for p in &frontier {
            for (a, arrow) in q.arrows().iter().enumerate() {
                if arrow.source == p.target {
                    let mut arrows = vec![a];
                    arrows.extend_from_slice(&p.arrows);
                    next.push(Path {
                        source: p.source,
                        target: arrow.target,
                        arrows,
                    });
                }
            }
        }
        frontier = next;
    }
    out
}

fn irreducible_paths<K: Field>(q: &Quiver, rules: &[Rule<K>]) -> Result<Vec<Path>, AlgebraError> {
    let reducible = |p: &Path| rules.iter().any(|r| p.occurrences(&r.lead.arrows).next().is_some());
    let mut basis: Vec<Path> = q.vertices().map(Path::trivial).collect();
    let mut frontier: Vec<Path> = basis.clone();
    for len in 1..=MAX_PATH_LEN + 1 {
        let mut next = Vec::new();
        for p in &frontier {
            for (a, arrow) in q.arrows().iter().enumerate() {
                if arrow.source == p.target {
                    let mut arrows = vec![a];
                    arrows.extend_from_slice(&p.arrows);
                    let cand = Path {
                        source: p.source,
                        target: arrow.target,
                        arrows,
                    };
                    if !reducible(&cand) {
                        next.push(cand);
                    }
                }
            }
        }
        if next.is_empty() {
            return Ok(basis);
        }
        if len > MAX_PATH_LEN {
            return Err(AlgebraError::InfiniteDimensional(MAX_PATH_LEN));
        }
        next.sort_by_key(|p| p.order_key());
        basis.extend(next.iter().cloned());
        frontier = next;
    }
    unreachable!()
}
