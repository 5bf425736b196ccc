//! Bound quiver algebras `kQ/I` computed by degreewise relation closure.
//!
//! Arrows carry positive integer weights (default 1) and every relation must
//! be homogeneous for the induced grading. In each degree `d` the quotient
//! `A_d` is spanned by the candidates `s·a`, with `s` a surviving path of
//! degree `d - w(a)`, modulo the images of `s·r` for relations `r`. The
//! surviving paths of each degree are the non-pivot columns of a reduced
//! echelon form whose columns are ordered with the largest path first, so
//! each coset is represented by its least paths.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{Algebra, AlgebraError, Sparse};
use crate::linalg::{rat, Rat, RatMatrix};

pub const DEFAULT_LENGTH_CAP: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arrow {
    pub label: String,
    /// Zero-based source vertex.
    pub source: usize,
    /// Zero-based target vertex.
    pub target: usize,
    pub weight: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Quiver {
    pub vertices: usize,
    pub arrows: Vec<Arrow>,
}

/// A linear combination of parallel paths, each a list of arrow indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub terms: Vec<(Rat, Vec<usize>)>,
}

impl Relation {
    pub fn monomial(path: Vec<usize>) -> Self {
        Relation {
            terms: vec![(rat(1), path)],
        }
    }

    /// `p - q`.
    pub fn commutativity(p: Vec<usize>, q: Vec<usize>) -> Self {
        Relation {
            terms: vec![(rat(1), p), (rat(-1), q)],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuiverError {
    #[error("arrow {label} has an endpoint outside 1..={vertices}")]
    BadArrow { label: String, vertices: usize },
    #[error("arrow {0} has weight 0")]
    ZeroWeight(String),
    #[error("duplicate arrow label {0}")]
    DuplicateLabel(String),
    #[error("unknown arrow label {0}")]
    UnknownLabel(String),
    #[error("relation {0} is empty or contains an empty path")]
    EmptyRelation(usize),
    #[error("relation {0} contains a path that is not composable")]
    NotComposable(usize),
    #[error("relation {0} is not a combination of parallel paths")]
    NotParallel(usize),
    #[error("relation {0} is not homogeneous for the arrow weights")]
    NotHomogeneous(usize),
    #[error("quiver has an oriented cycle or loop")]
    Cyclic,
    #[error("not finite-dimensional within degree cap {cap}; surviving paths per degree: {profile:?}")]
    CapExceeded { cap: usize, profile: Vec<usize> },
    #[error("length cap must be at least 1")]
    ZeroCap,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

impl Quiver {
    pub fn new(vertices: usize) -> Self {
        Quiver {
            vertices,
            arrows: Vec::new(),
        }
    }

    /// Adds an arrow between zero-based vertices and returns its index.
    pub fn arrow(&mut self, label: impl Into<String>, source: usize, target: usize) -> usize {
        self.weighted_arrow(label, source, target, 1)
    }

    pub fn weighted_arrow(
        &mut self,
        label: impl Into<String>,
        source: usize,
        target: usize,
        weight: usize,
    ) -> usize {
        self.arrows.push(Arrow {
            label: label.into(),
            source,
            target,
            weight,
        });
        self.arrows.len() - 1
    }

    pub fn arrow_index(&self, label: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.label == label)
    }

    pub fn validate(&self) -> Result<(), QuiverError> {
        let mut seen = std::collections::HashSet::new();
        for a in &self.arrows {
            if a.source >= self.vertices || a.target >= self.vertices {
                return Err(QuiverError::BadArrow {
                    label: a.label.clone(),
                    vertices: self.vertices,
                });
            }
            if a.weight == 0 {
                return Err(QuiverError::ZeroWeight(a.label.clone()));
            }
            if !seen.insert(a.label.as_str()) {
                return Err(QuiverError::DuplicateLabel(a.label.clone()));
            }
        }
        Ok(())
    }

    pub fn is_acyclic(&self) -> bool {
        let n = self.vertices;
        let mut indeg = vec![0usize; n];
        for a in &self.arrows {
            indeg[a.target] += 1;
        }
        let mut stack: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = stack.pop() {
            seen += 1;
            for a in self.arrows.iter().filter(|a| a.source == v) {
                indeg[a.target] -= 1;
                if indeg[a.target] == 0 {
                    stack.push(a.target);
                }
            }
        }
        seen == n
    }

    fn path_ends(&self, path: &[usize]) -> Option<(usize, usize)> {
        let first = self.arrows.get(*path.first()?)?;
        let mut at = first.target;
        for &a in &path[1..] {
            let arrow = self.arrows.get(a)?;
            if arrow.source != at {
                return None;
            }
            at = arrow.target;
        }
        Some((first.source, at))
    }

    fn path_weight(&self, path: &[usize]) -> usize {
        path.iter().map(|&a| self.arrows[a].weight).sum()
    }
}

/// A path: its source vertex and arrow sequence (empty for a trivial path).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Path {
    source: usize,
    arrows: Vec<usize>,
}

/// Reduction data for one degree: surviving paths and the normal form of
/// every candidate path.
#[derive(Default)]
struct Degree {
    surviving: Vec<Path>,
    normal: HashMap<Path, Vec<(usize, Rat)>>,
}

struct Closure<'a> {
    quiver: &'a Quiver,
    relations: Vec<(usize, (usize, usize), &'a Relation)>,
    degrees: Vec<Degree>,
}

impl<'a> Closure<'a> {
    fn target(&self, p: &Path) -> usize {
        p.arrows
            .last()
            .map_or(p.source, |&a| self.quiver.arrows[a].target)
    }

    fn key(p: &Path) -> (usize, &[usize], usize) {
        (p.arrows.len(), &p.arrows, p.source)
    }

    /// Normal form of an arbitrary path of known degree, as coefficients on
    /// the surviving paths of that degree. Only valid for computed degrees.
    fn reduce(&self, p: &Path, degree: usize) -> Vec<(usize, Rat)> {
        if degree >= self.degrees.len() {
            return Vec::new();
        }
        let Some((&last, prefix)) = p.arrows.split_last() else {
            return vec![(p.source, rat(1))];
        };
        self.expand_through(p.source, prefix, last, degree)
            .into_iter()
            .flat_map(|(cand, c)| {
                self.degrees[degree].normal[&cand]
                    .iter()
                    .map(move |(k, v)| (*k, &c * v))
                    .collect::<Vec<_>>()
            })
            .fold(Vec::new(), accumulate)
    }

    /// Writes `prefix·last` as a combination of candidate paths `s·last`.
    fn expand_through(
        &self,
        source: usize,
        prefix: &[usize],
        last: usize,
        degree: usize,
    ) -> Vec<(Path, Rat)> {
        let w = self.quiver.arrows[last].weight;
        let pre = Path {
            source,
            arrows: prefix.to_vec(),
        };
        let lower = degree - w;
        self.reduce(&pre, lower)
            .into_iter()
            .map(|(k, c)| {
                let mut s = self.degrees[lower].surviving[k].clone();
                s.arrows.push(last);
                (s, c)
            })
            .collect()
    }

    fn compute_degree(&mut self, d: usize) {
        if d == 0 {
            let surviving: Vec<Path> = (0..self.quiver.vertices)
                .map(|v| Path {
                    source: v,
                    arrows: Vec::new(),
                })
                .collect();
            let normal = surviving
                .iter()
                .enumerate()
                .map(|(k, p)| (p.clone(), vec![(k, rat(1))]))
                .collect();
            self.degrees.push(Degree { surviving, normal });
            return;
        }
        let mut candidates: Vec<Path> = Vec::new();
        for (ai, a) in self.quiver.arrows.iter().enumerate() {
            if a.weight > d {
                continue;
            }
            for s in &self.degrees[d - a.weight].surviving {
                if self.target(s) == a.source {
                    let mut c = s.clone();
                    c.arrows.push(ai);
                    candidates.push(c);
                }
            }
        }
        // Largest path first so that pivots land on the largest paths.
        candidates.sort_by(|x, y| Self::key(y).cmp(&Self::key(x)));
        let column: HashMap<&Path, usize> =
            candidates.iter().enumerate().map(|(i, p)| (p, i)).collect();

        let mut rows: Vec<Vec<Rat>> = Vec::new();
        for &(deg, (src, _), rel) in &self.relations {
            if deg > d {
                continue;
            }
            for s in &self.degrees[d - deg].surviving {
                if self.target(s) != src {
                    continue;
                }
                let mut row = vec![rat(0); candidates.len()];
                let mut nonzero = false;
                for (coef, path) in &rel.terms {
                    let mut full = s.arrows.clone();
                    full.extend_from_slice(path);
                    let (&last, prefix) = full.split_last().expect("relation paths are nonempty");
                    for (cand, c) in self.expand_through(s.source, prefix, last, d) {
                        let j = column[&cand];
                        row[j] += coef * &c;
                        nonzero = true;
                    }
                }
                if nonzero {
                    rows.push(row);
                }
            }
        }
        let rref = RatMatrix::from_rows(&rows).rref();
        let mut is_pivot = vec![false; candidates.len()];
        for &p in &rref.pivots {
            is_pivot[p] = true;
        }
        // Surviving paths are stored in increasing order.
        let free: Vec<usize> = (0..candidates.len()).rev().filter(|&j| !is_pivot[j]).collect();
        let index_of: HashMap<usize, usize> = free.iter().enumerate().map(|(k, &j)| (j, k)).collect();
        let mut normal = HashMap::new();
        for (&j, &k) in &index_of {
            normal.insert(candidates[j].clone(), vec![(k, rat(1))]);
        }
        for (r, &p) in rref.pivots.iter().enumerate() {
            let mut nf = Vec::new();
            for &j in &free {
                let x = &rref.matrix[(r, j)];
                if *x != 0 {
                    nf.push((index_of[&j], -x.clone()));
                }
            }
            nf.sort_by_key(|(k, _)| *k);
            normal.insert(candidates[p].clone(), nf);
        }
        let surviving = free.iter().map(|&j| candidates[j].clone()).collect();
        self.degrees.push(Degree { surviving, normal });
    }
}

fn accumulate(mut acc: Vec<(usize, Rat)>, (k, c): (usize, Rat)) -> Vec<(usize, Rat)> {
    match acc.iter_mut().find(|(j, _)| *j == k) {
        Some((_, x)) => *x += c,
        None => acc.push((k, c)),
    }
    acc.retain(|(_, x)| *x != 0);
    acc
}

fn check_relations<'a>(
    quiver: &Quiver,
    relations: &'a [Relation],
) -> Result<Vec<(usize, (usize, usize), &'a Relation)>, QuiverError> {
    let mut out = Vec::new();
    for (i, r) in relations.iter().enumerate() {
        if r.terms.is_empty() || r.terms.iter().any(|(_, p)| p.is_empty()) {
            return Err(QuiverError::EmptyRelation(i));
        }
        let mut shape = None;
        for (_, p) in &r.terms {
            let ends = quiver.path_ends(p).ok_or(QuiverError::NotComposable(i))?;
            let w = quiver.path_weight(p);
            match shape {
                None => shape = Some((w, ends)),
                Some((w0, e0)) => {
                    if e0 != ends {
                        return Err(QuiverError::NotParallel(i));
                    }
                    if w0 != w {
                        return Err(QuiverError::NotHomogeneous(i));
                    }
                }
            }
        }
        let (w, ends) = shape.expect("nonempty relation");
        out.push((w, ends, r));
    }
    Ok(out)
}

/// The algebra `kQ/(R)`, computed degree by degree up to `length_cap`.
///
/// Basis: the trivial paths in vertex order, then surviving paths ordered by
/// (length, arrow indices).
pub fn bound_quiver_algebra(
    name: impl Into<String>,
    quiver: &Quiver,
    relations: &[Relation],
    length_cap: usize,
) -> Result<Algebra, QuiverError> {
    if length_cap == 0 {
        return Err(QuiverError::ZeroCap);
    }
    quiver.validate()?;
    let rels = check_relations(quiver, relations)?;
    let max_weight = quiver.arrows.iter().map(|a| a.weight).max().unwrap_or(1);
    let mut closure = Closure {
        quiver,
        relations: rels,
        degrees: Vec::new(),
    };
    closure.compute_degree(0);
    let mut empty_run = 0;
    let mut d = 0;
    while empty_run < max_weight {
        d += 1;
        if d > length_cap {
            let profile = closure.degrees.iter().map(|g| g.surviving.len()).collect();
            return Err(QuiverError::CapExceeded {
                cap: length_cap,
                profile,
            });
        }
        closure.compute_degree(d);
        if closure.degrees[d].surviving.is_empty() {
            empty_run += 1;
        } else {
            empty_run = 0;
        }
    }
    // Drop the trailing empty degrees so `reduce` treats them as zero.
    while closure.degrees.last().is_some_and(|g| g.surviving.is_empty()) {
        closure.degrees.pop();
    }
    assemble(name.into(), quiver, &closure)
}

fn assemble(name: String, quiver: &Quiver, closure: &Closure) -> Result<Algebra, QuiverError> {
    let n = quiver.vertices;
    let mut basis: Vec<(usize, usize)> = Vec::new(); // (degree, index within degree)
    for d in 0..closure.degrees.len() {
        for k in 0..closure.degrees[d].surviving.len() {
            basis.push((d, k));
        }
    }
    let path_of = |&(d, k): &(usize, usize)| &closure.degrees[d].surviving[k];
    // Trivial paths (degree 0) come first in vertex order already.
    basis[n..].sort_by(|x, y| {
        let (px, py) = (path_of(x), path_of(y));
        Closure::key(px).cmp(&Closure::key(py))
    });
    let global: HashMap<(usize, usize), usize> =
        basis.iter().enumerate().map(|(i, &dk)| (dk, i)).collect();
    let dim = basis.len();

    let labels: Vec<String> = basis
        .iter()
        .map(|dk| {
            let p = path_of(dk);
            if p.arrows.is_empty() {
                format!("e{}", p.source + 1)
            } else {
                p.arrows
                    .iter()
                    .map(|&a| quiver.arrows[a].label.as_str())
                    .collect::<Vec<_>>()
                    .join("*")
            }
        })
        .collect();
    let ends: Vec<(usize, usize)> = basis
        .iter()
        .map(|dk| {
            let p = path_of(dk);
            (p.source, closure.target(p))
        })
        .collect();

    let mut table: Vec<Sparse> = vec![Vec::new(); dim * dim];
    for (i, bi) in basis.iter().enumerate() {
        let pi = path_of(bi);
        for (j, bj) in basis.iter().enumerate() {
            let pj = path_of(bj);
            if ends[i].1 != ends[j].0 {
                continue;
            }
            let mut arrows = pi.arrows.clone();
            arrows.extend_from_slice(&pj.arrows);
            let path = Path {
                source: pi.source,
                arrows,
            };
            let degree = bi.0 + bj.0;
            let mut nf: Sparse = closure
                .reduce(&path, degree)
                .into_iter()
                .map(|(k, c)| (global[&(degree, k)], c))
                .collect();
            nf.sort_by_key(|(k, _)| *k);
            table[i * dim + j] = nf;
        }
    }

    // Words in the surviving arrows, when every basis path only uses them.
    let generator_of: HashMap<usize, usize> = basis
        .iter()
        .enumerate()
        .filter_map(|(i, dk)| {
            let p = path_of(dk);
            (p.arrows.len() == 1).then(|| (p.arrows[0], i))
        })
        .collect();
    let generators: Vec<usize> = {
        let mut g: Vec<usize> = generator_of.values().copied().collect();
        g.sort_unstable();
        g
    };
    let position: HashMap<usize, usize> = generators.iter().enumerate().map(|(k, &g)| (g, k)).collect();
    let mut expansions = Vec::with_capacity(dim - n);
    let mut monomial = true;
    for dk in &basis[n..] {
        let p = path_of(dk);
        let word: Option<Vec<usize>> = p
            .arrows
            .iter()
            .map(|a| generator_of.get(a).map(|g| position[g]))
            .collect();
        match word {
            Some(w) => expansions.push(vec![(rat(1), w)]),
            None => {
                monomial = false;
                break;
            }
        }
    }
    let exp = monomial.then_some((generators, expansions));
    Ok(Algebra::from_table(name, n, labels, ends, table, exp)?)
}

/// Path algebra of an acyclic quiver.
pub fn hereditary(name: impl Into<String>, quiver: &Quiver) -> Result<Algebra, QuiverError> {
    quiver.validate()?;
    if !quiver.is_acyclic() {
        return Err(QuiverError::Cyclic);
    }
    bound_quiver_algebra(name, quiver, &[], DEFAULT_LENGTH_CAP)
}

/// Linearly oriented type A quiver `1 -> 2 -> ... -> n`.
pub fn linear_a(n: usize) -> Quiver {
    let mut q = Quiver::new(n);
    for i in 0..n.saturating_sub(1) {
        q.arrow(format!("x{}", i + 1), i, i + 1);
    }
    q
}

/// The double-ladder quiver with arrows `a_i: i -> i+1`, `b_i: i -> i-1`.
pub fn auslander_quiver(n: usize) -> (Quiver, Vec<Relation>) {
    let mut q = Quiver::new(n);
    let a: Vec<usize> = (1..n).map(|i| q.arrow(format!("a{i}"), i - 1, i)).collect();
    // b[i] is b_{i+2}: (i+2) -> (i+1), one-based.
    let b: Vec<usize> = (2..=n).map(|i| q.arrow(format!("b{i}"), i - 1, i - 2)).collect();
    let a_ = |i: usize| a[i - 1];
    let b_ = |i: usize| b[i - 2];
    let mut rels = Vec::new();
    if n >= 2 {
        rels.push(Relation::monomial(vec![a_(1), b_(2)]));
    }
    for i in 2..n {
        rels.push(Relation::commutativity(vec![a_(i), b_(i + 1)], vec![b_(i), a_(i - 1)]));
    }
    (q, rels)
}

/// Auslander algebra of `k[x]/(x^n)` as a bound quiver algebra.
pub fn auslander_nilpotent(n: usize) -> Result<Algebra, QuiverError> {
    let (q, rels) = auslander_quiver(n);
    bound_quiver_algebra(format!("auslander:n={n}"), &q, &rels, DEFAULT_LENGTH_CAP)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn loop_with_square_zero() {
        let mut q = Quiver::new(1);
        let e = q.arrow("eps", 0, 0);
        let a = bound_quiver_algebra("k[x]/x2", &q, &[Relation::monomial(vec![e, e])], 8).unwrap();
        assert_eq!(a.dim(), 2);
        a.verify().unwrap();
    }

    #[test]
    fn free_loop_exceeds_cap() {
        let mut q = Quiver::new(1);
        q.arrow("eps", 0, 0);
        let err = bound_quiver_algebra("k[x]", &q, &[], 5).unwrap_err();
        assert_eq!(
            err,
            QuiverError::CapExceeded {
                cap: 5,
                profile: vec![1, 1, 1, 1, 1, 1]
            }
        );
    }

    #[test]
    fn a2_and_a3_dimensions() {
        let a2 = hereditary("A2", &linear_a(2)).unwrap();
        assert_eq!(a2.dim(), 3);
        assert_eq!(a2.labels(), &["e1", "e2", "x1"]);
        let a3 = hereditary("A3", &linear_a(3)).unwrap();
        assert_eq!(a3.dim(), 6);
        a3.verify().unwrap();
        let two_points = hereditary("QxQ", &Quiver::new(2)).unwrap();
        assert_eq!(two_points.dim(), 2);
    }

    #[test]
    fn cyclic_quiver_rejected() {
        let mut q = Quiver::new(2);
        q.arrow("x", 0, 1);
        q.arrow("y", 1, 0);
        assert_eq!(hereditary("cyc", &q).unwrap_err(), QuiverError::Cyclic);
    }

    #[test]
    fn auslander_two_basis() {
        let a = auslander_nilpotent(2).unwrap();
        assert_eq!(a.labels(), &["e1", "e2", "a1", "b2", "b2*a1"]);
        a.verify().unwrap();
        // a1 * b2 = 0 and b2 * a1 is a basis element
        let a1 = a.basis_vector(2);
        let b2 = a.basis_vector(3);
        assert!(a.multiply(&a1, &b2).iter().all(|x| *x == 0));
        assert_eq!(a.multiply(&b2, &a1), a.basis_vector(4));
    }

    #[test]
    fn auslander_dimensions_match_min_sum() {
        for n in 2..=4 {
            let a = auslander_nilpotent(n).unwrap();
            let expected: usize = (1..=n).flat_map(|i| (1..=n).map(move |j| i.min(j))).sum();
            assert_eq!(a.dim(), expected, "n = {n}");
        }
    }

    #[test]
    fn inhomogeneous_relation_rejected() {
        let mut q = Quiver::new(1);
        let e = q.arrow("eps", 0, 0);
        let r = Relation::commutativity(vec![e, e], vec![e, e, e]);
        assert_eq!(
            bound_quiver_algebra("bad", &q, &[r], 8).unwrap_err(),
            QuiverError::NotHomogeneous(0)
        );
    }
}
