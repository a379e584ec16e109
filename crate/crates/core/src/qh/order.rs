use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gammaalg::{BasedAlgebra, Gamma};
use crate::lambdacat::Rep;

/// Largest vertex count for which linear extensions are enumerated.
pub const MAX_LINEAR_VERTICES: usize = 8;

/// A partial order on the vertices (simple modules) of a based algebra.
#[derive(Clone, Debug)]
pub struct SimpleOrder {
    alg: Arc<BasedAlgebra>,
    /// `less[i][j]` iff `i < j`
    less: Vec<Vec<bool>>,
}

impl SimpleOrder {
    /// The transitive closure of the pairs `(a, b)` read as `a < b`.
    pub fn new(alg: Arc<BasedAlgebra>, pairs: &[(usize, usize)]) -> Result<Self> {
        let n = alg.n_vertices();
        let mut less = vec![vec![false; n]; n];
        for &(a, b) in pairs {
            if a >= n || b >= n {
                return Err(Error::Dimension(format!("vertex out of range in ({a}, {b})")));
            }
            less[a][b] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if less[i][k] {
                    for j in 0..n {
                        if less[k][j] {
                            less[i][j] = true;
                        }
                    }
                }
            }
        }
        if (0..n).any(|i| less[i][i]) {
            return Err(Error::Precondition("relation has a cycle".into()));
        }
        Ok(SimpleOrder { alg, less })
    }

    /// The chain `ranking[0] < ranking[1] < …`.
    pub fn linear(alg: Arc<BasedAlgebra>, ranking: &[usize]) -> Result<Self> {
        let n = alg.n_vertices();
        let mut seen = vec![false; n];
        if ranking.len() != n || ranking.iter().any(|&v| v >= n || std::mem::replace(&mut seen[v], true)) {
            return Err(Error::Precondition("ranking is not a permutation of the vertices".into()));
        }
        let pairs: Vec<(usize, usize)> = ranking.windows(2).map(|w| (w[0], w[1])).collect();
        Self::new(alg, &pairs)
    }

    pub fn discrete(alg: Arc<BasedAlgebra>) -> Self {
        Self::new(alg, &[]).expect("empty relation")
    }

    /// The reversed order.
    pub fn reversed(&self) -> Self {
        let n = self.n();
        let less = (0..n).map(|i| (0..n).map(|j| self.less[j][i]).collect()).collect();
        SimpleOrder { alg: self.alg.clone(), less }
    }

    pub fn alg(&self) -> &Arc<BasedAlgebra> {
        &self.alg
    }

    pub fn n(&self) -> usize {
        self.less.len()
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        self.less[a][b]
    }

    pub fn le(&self, a: usize, b: usize) -> bool {
        a == b || self.less[a][b]
    }

    pub fn is_linear(&self) -> bool {
        let n = self.n();
        (0..n).all(|i| (0..n).all(|j| i == j || self.less[i][j] || self.less[j][i]))
    }

    pub fn maximal(&self) -> Vec<usize> {
        (0..self.n()).filter(|&i| !(0..self.n()).any(|j| self.less[i][j])).collect()
    }

    /// Linear extensions as rankings (smallest first), in lexicographic order.
    pub fn linear_extensions(&self) -> Result<Vec<Vec<usize>>> {
        let n = self.n();
        if n > MAX_LINEAR_VERTICES {
            return Err(Error::Precondition(format!("{n} vertices exceed the enumeration cap {MAX_LINEAR_VERTICES}")));
        }
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(n);
        let mut used = vec![false; n];
        self.extend(&mut cur, &mut used, &mut out);
        Ok(out)
    }

    fn extend(&self, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        let n = self.n();
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for v in 0..n {
            if !used[v] && (0..n).all(|u| used[u] || !self.less[u][v]) {
                used[v] = true;
                cur.push(v);
                self.extend(cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }

    /// The first linear extension, largest vertex first.
    pub fn descending(&self) -> Vec<usize> {
        let n = self.n();
        let mut used = vec![false; n];
        let mut out = Vec::with_capacity(n);
        while out.len() < n {
            let v = (0..n)
                .find(|&v| !used[v] && (0..n).all(|u| used[u] || !self.less[v][u]))
                .expect("acyclic relation has a maximal element");
            used[v] = true;
            out.push(v);
        }
        out
    }
}

/// Length of the radical filtration.
pub fn rep_loewy_length(m: &Rep) -> usize {
    let mut cur = m.clone();
    let mut l = 0;
    while !cur.is_zero() {
        cur = cur.subrep(&cur.radical_spaces()).0;
        l += 1;
    }
    l
}

/// `[M] < [N]` iff `ℓ(M) > ℓ(N)`; equal lengths are incomparable.
pub fn loewy_order(g: &Gamma) -> SimpleOrder {
    let ls: Vec<usize> = (0..g.m()).map(|i| rep_loewy_length(g.catalog.entry(i))).collect();
    let pairs: Vec<(usize, usize)> = (0..ls.len())
        .flat_map(|a| (0..ls.len()).map(move |b| (a, b)))
        .filter(|&(a, b)| ls[a] > ls[b])
        .collect();
    SimpleOrder::new(g.alg.clone(), &pairs).expect("lengths give an acyclic relation")
}
