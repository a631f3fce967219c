//! Independent oracles shared by the integration tests. None of these call the code they
//! check; they only borrow exact rank computations from the linear algebra layer.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use qschur_hh::linalg::{rank, Field, Matrix, Rational};
use qschur_hh::GradedDims;

/// Graded dimensions of `kQ/I` for `A_e`, by length: the number of paths of length `l`
/// minus the rank of the ideal's length-`l` piece, spanned by `u·r·v` for relations `r`.
/// Paths are arrow sequences in traversal order; arrow `a_i` is `(i, i+1)`, `b_i` is `(i+1, i)`.
pub fn path_algebra_dims(e: usize) -> Vec<usize> {
    let mut arrows = Vec::new();
    for i in 1..e {
        arrows.push((i, i + 1));
        arrows.push((i + 1, i));
    }
    let idx = |s: usize, t: usize| arrows.iter().position(|&a| a == (s, t)).unwrap();
    // relations as lists of (coefficient, path)
    let mut rels: Vec<Vec<(i64, Vec<usize>)>> = Vec::new();
    for i in 2..e {
        rels.push(vec![(1, vec![idx(i - 1, i), idx(i, i + 1)])]);
        rels.push(vec![(1, vec![idx(i + 1, i), idx(i, i - 1)])]);
        rels.push(vec![
            (1, vec![idx(i, i - 1), idx(i - 1, i)]),
            (-1, vec![idx(i, i + 1), idx(i + 1, i)]),
        ]);
    }
    rels.push(vec![(1, vec![idx(e, e - 1), idx(e - 1, e)])]);

    let start = |p: &[usize]| arrows[p[0]].0;
    let end = |p: &[usize]| arrows[*p.last().unwrap()].1;
    let paths_of_len = |l: usize| -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = (0..arrows.len()).map(|a| vec![a]).collect();
        for _ in 1..l {
            let mut next = Vec::new();
            for p in &out {
                for a in 0..arrows.len() {
                    if arrows[a].0 == end(p) {
                        let mut q = p.clone();
                        q.push(a);
                        next.push(q);
                    }
                }
            }
            out = next;
        }
        out
    };

    let mut dims = vec![e];
    for l in 1.. {
        let paths = paths_of_len(l);
        let index: HashMap<&Vec<usize>, usize> = paths.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let mut rows = Vec::new();
        if l >= 2 {
            for r in &rels {
                let (s, t) = (start(&r[0].1), end(&r[0].1));
                for ul in 0..=l - 2 {
                    let vl = l - 2 - ul;
                    let us: Vec<Vec<usize>> = if ul == 0 { vec![vec![]] } else { paths_of_len(ul) };
                    let vs: Vec<Vec<usize>> = if vl == 0 { vec![vec![]] } else { paths_of_len(vl) };
                    for u in us.iter().filter(|u| u.is_empty() || end(u) == s) {
                        for v in vs.iter().filter(|v| v.is_empty() || start(v) == t) {
                            let row: Vec<(usize, Rational)> = r
                                .iter()
                                .map(|(c, p)| {
                                    let full: Vec<usize> = u.iter().chain(p).chain(v).copied().collect();
                                    (index[&full], Rational::from_i64(*c))
                                })
                                .collect();
                            let mut row = row;
                            row.sort_by_key(|x| x.0);
                            rows.push(row);
                        }
                    }
                }
            }
        }
        let r = rank(&Matrix::from_sparse_rows(paths.len(), rows));
        let d = paths.len() - r;
        if d == 0 {
            break;
        }
        dims.push(d);
    }
    dims
}

/// Removes one rim hook of length `e` from `lambda` in every possible way, by enumerating
/// subdiagrams `μ` with `λ/μ` connected, of size `e`, and free of 2x2 squares.
pub fn rim_hook_removals(lambda: &[usize], e: usize) -> Vec<Vec<usize>> {
    let size: usize = lambda.iter().sum();
    if size < e {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut mu = Vec::new();
    fn go(lambda: &[usize], row: usize, left: usize, mu: &mut Vec<usize>, e: usize, out: &mut Vec<Vec<usize>>) {
        if row == lambda.len() {
            let removed: usize = lambda.iter().zip(mu.iter()).map(|(l, m)| l - m).sum();
            if removed == e && is_rim_hook(lambda, mu) {
                let mut m: Vec<usize> = mu.clone();
                while m.last() == Some(&0) {
                    m.pop();
                }
                out.push(m);
            }
            return;
        }
        let cap = if row == 0 {
            lambda[0]
        } else {
            lambda[row].min(mu[row - 1])
        };
        for m in 0..=cap {
            let used = lambda[row] - m;
            if used > left {
                continue;
            }
            mu.push(m);
            go(lambda, row + 1, left - used, mu, e, out);
            mu.pop();
        }
    }
    go(lambda, 0, e, &mut mu, e, &mut out);
    out
}

fn is_rim_hook(lambda: &[usize], mu: &[usize]) -> bool {
    let cells: BTreeSet<(usize, usize)> = lambda
        .iter()
        .zip(mu)
        .enumerate()
        .flat_map(|(r, (&l, &m))| (m..l).map(move |c| (r, c)))
        .collect();
    let Some(&first) = cells.iter().next() else {
        return false;
    };
    for &(r, c) in &cells {
        if cells.contains(&(r + 1, c)) && cells.contains(&(r, c + 1)) && cells.contains(&(r + 1, c + 1)) {
            return false;
        }
    }
    let mut seen = BTreeSet::from([first]);
    let mut stack = vec![first];
    while let Some((r, c)) = stack.pop() {
        let mut nbrs = vec![(r + 1, c), (r, c + 1)];
        if r > 0 {
            nbrs.push((r - 1, c));
        }
        if c > 0 {
            nbrs.push((r, c - 1));
        }
        for n in nbrs {
            if cells.contains(&n) && seen.insert(n) {
                stack.push(n);
            }
        }
    }
    seen.len() == cells.len()
}

/// Every (core, hooks removed) reachable by removing rim `e`-hooks until none is left.
pub fn cores_by_hook_removal(
    lambda: &[usize],
    e: usize,
    memo: &mut HashMap<Vec<usize>, BTreeSet<(Vec<usize>, usize)>>,
) -> BTreeSet<(Vec<usize>, usize)> {
    if let Some(r) = memo.get(lambda) {
        return r.clone();
    }
    let next = rim_hook_removals(lambda, e);
    let result = if next.is_empty() {
        BTreeSet::from([(lambda.to_vec(), 0)])
    } else {
        let mut acc = BTreeSet::new();
        for mu in next {
            for (core, w) in cores_by_hook_removal(&mu, e, memo) {
                acc.insert((core, w + 1));
            }
        }
        acc
    };
    memo.insert(lambda.to_vec(), result.clone());
    result
}

fn permutations(p: usize) -> Vec<Vec<usize>> {
    if p == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for rest in permutations(p - 1) {
        for pos in 0..=rest.len() {
            let mut v = rest.clone();
            v.insert(pos, p - 1);
            out.push(v);
        }
    }
    out
}

/// `(V^{⊗p})^{𝔖_p}` by the Reynolds operator on the explicit tensor basis. With `signed`,
/// each transposition of factors of degrees `a, b` contributes `(-1)^{ab}`.
pub fn invariants_by_reynolds(v: &GradedDims, p: usize, signed: bool) -> GradedDims {
    let degrees: Vec<usize> = (0..v.len()).flat_map(|d| std::iter::repeat_n(d, v.get(d))).collect();
    let n = degrees.len();
    let mut tuples: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..p {
        tuples = tuples
            .into_iter()
            .flat_map(|t| {
                (0..n).map(move |i| {
                    let mut u = t.clone();
                    u.push(i);
                    u
                })
            })
            .collect();
    }
    let index: HashMap<Vec<usize>, usize> = tuples.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
    let perms = permutations(p);
    let top = p * v.len().saturating_sub(1);
    let mut out = vec![0; top + 1];
    for d in 0..=top {
        let cols: Vec<usize> = (0..tuples.len())
            .filter(|&k| tuples[k].iter().map(|&i| degrees[i]).sum::<usize>() == d)
            .collect();
        let mut rows = Vec::new();
        for &k in &cols {
            let t = &tuples[k];
            let mut acc: HashMap<usize, i64> = HashMap::new();
            for s in &perms {
                // factor in position i moves to position s[i]
                let mut image = vec![0; p];
                for i in 0..p {
                    image[s[i]] = t[i];
                }
                let mut sign = 1i64;
                if signed {
                    for i in 0..p {
                        for j in i + 1..p {
                            if s[i] > s[j] && degrees[t[i]] % 2 == 1 && degrees[t[j]] % 2 == 1 {
                                sign = -sign;
                            }
                        }
                    }
                }
                *acc.entry(index[&image]).or_insert(0) += sign;
            }
            let mut row: Vec<(usize, Rational)> = acc
                .into_iter()
                .filter(|(_, c)| *c != 0)
                .map(|(i, c)| (i, Rational::from_i64(c)))
                .collect();
            row.sort_by_key(|x| x.0);
            rows.push(row);
        }
        out[d] = rank(&Matrix::from_sparse_rows(tuples.len(), rows));
    }
    GradedDims::new(out)
}

/// Brute-force `HH*` dimensions of the wreath product for `w = 2, 3`: each summand of the
/// partition sum is built from explicit invariants.
pub fn wreath_by_reynolds(v: &GradedDims, w: usize, signed: bool) -> GradedDims {
    match w {
        1 => v.clone(),
        2 => invariants_by_reynolds(v, 2, signed).add(v),
        3 => invariants_by_reynolds(v, 3, signed).add(&v.tensor(v)).add(v),
        _ => panic!("oracle covers w <= 3"),
    }
}

/// `(k[y_1..y_w]/⟨y_i^e⟩)^{𝔖_w}` by symmetrising every monomial and taking ranks.
pub fn truncated_invariants_by_symmetrising(e: usize, w: usize) -> GradedDims {
    if e <= 1 {
        return GradedDims::new(vec![1]);
    }
    let mut monos: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..w {
        monos = monos
            .into_iter()
            .flat_map(|m| {
                (0..e).map(move |a| {
                    let mut n = m.clone();
                    n.push(a);
                    n
                })
            })
            .collect();
    }
    let index: HashMap<Vec<usize>, usize> = monos.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
    let perms = permutations(w);
    let top = w * (e - 1);
    let mut out = vec![0; top + 1];
    for d in 0..=top {
        let rows: Vec<Vec<(usize, Rational)>> = monos
            .iter()
            .filter(|m| m.iter().sum::<usize>() == d)
            .map(|m| {
                let mut acc: HashMap<usize, i64> = HashMap::new();
                for s in &perms {
                    let image: Vec<usize> = (0..w).map(|i| m[s[i]]).collect();
                    *acc.entry(index[&image]).or_insert(0) += 1;
                }
                let mut row: Vec<(usize, Rational)> =
                    acc.into_iter().map(|(i, c)| (i, Rational::from_i64(c))).collect();
                row.sort_by_key(|x| x.0);
                row
            })
            .collect();
        out[d] = rank(&Matrix::from_sparse_rows(monos.len(), rows));
    }
    GradedDims::new(out)
}

/// `[e, 1, ..., 1]` with `2(e-1)` ones.
pub fn expected_hh(e: usize) -> GradedDims {
    let mut v = vec![1; 2 * e - 1];
    v[0] = e;
    GradedDims::new(v)
}

/// Case table for `dim Hom(Ker d_n, A_e)`: `e-2s-1` for `n = 4s+1, 4s+2` and `e-2s-2` for
/// `n = 4s+3, 4s+4`.
pub fn kernel_hom_table(e: usize, n: usize) -> i64 {
    let (e, n) = (e as i64, n as i64);
    let s = (n - 1) / 4;
    if (n - 1) % 4 < 2 {
        e - 2 * s - 1
    } else {
        e - 2 * s - 2
    }
}
