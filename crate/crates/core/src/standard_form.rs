//! Standard form `Γ + ωI` and the 3-weighted graph view of self-dual codes.

use std::fmt;

use crate::code::{GeneratorMatrix, Gf9Vec, Trits, MAX_LEN};
use crate::error::{Error, Result};
use crate::galois::Gf3;

/// A loop-free undirected graph with edge weights in {1, 2}, stored as the
/// rows of its symmetric adjacency matrix over GF(3).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightedGraph {
    n: usize,
    adj: Vec<Trits>,
}

impl WeightedGraph {
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_LEN, "graph on {n} vertices exceeds {MAX_LEN}");
        WeightedGraph {
            n,
            adj: vec![Trits::ZERO; n],
        }
    }

    /// Builds a graph from a full adjacency matrix; rejects asymmetric input
    /// and nonzero diagonals.
    pub fn from_matrix(m: &[Vec<Gf3>]) -> Result<Self> {
        let n = m.len();
        if n > MAX_LEN {
            return Err(Error::UnsupportedLength(n));
        }
        let mut g = WeightedGraph::empty(n);
        for i in 0..n {
            if m[i].len() != n {
                return Err(Error::LengthMismatch(n, m[i].len()));
            }
            if !m[i][i].is_zero() {
                return Err(Error::InvalidGraph(format!("loop at vertex {i}")));
            }
            for j in 0..i {
                if m[i][j] != m[j][i] {
                    return Err(Error::InvalidGraph(format!("asymmetric entry ({i},{j})")));
                }
                g.set(i, j, m[i][j]);
            }
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> Gf3 {
        self.adj[i].get(j)
    }

    pub fn set(&mut self, i: usize, j: usize, w: Gf3) {
        assert_ne!(i, j, "weighted graphs are loop-free");
        self.adj[i].set(j, w);
        self.adj[j].set(i, w);
    }

    /// Row `i` of the adjacency matrix.
    pub fn row(&self, i: usize) -> &Trits {
        &self.adj[i]
    }

    pub fn rows(&self) -> &[Trits] {
        &self.adj
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.weight() as usize).sum::<usize>() / 2
    }

    /// Upper triangle in row-major order, one character per entry.
    pub fn to_trits(&self) -> String {
        let mut s = String::with_capacity(self.n * self.n.saturating_sub(1) / 2);
        for i in 0..self.n {
            for j in i + 1..self.n {
                s.push(char::from(b'0' + self.get(i, j).value()));
            }
        }
        s
    }

    /// Parses a trit string of length C(n,2) for the given `n`.
    pub fn from_trits(n: usize, s: &str) -> Result<Self> {
        let expected = n * n.saturating_sub(1) / 2;
        if s.len() != expected {
            return Err(Error::LengthMismatch(expected, s.len()));
        }
        if n == 0 || n > MAX_LEN {
            return Err(Error::UnsupportedLength(n));
        }
        let mut g = WeightedGraph::empty(n);
        let mut chars = s.bytes();
        for i in 0..n {
            for j in i + 1..n {
                let c = chars.next().expect("length checked");
                let w = match c {
                    b'0'..=b'2' => Gf3::new(c - b'0'),
                    _ => {
                        return Err(Error::InvalidGraph(format!(
                            "invalid trit `{}`",
                            char::from(c)
                        )))
                    }
                };
                g.set_if_nonzero(i, j, w);
            }
        }
        Ok(g)
    }

    /// Infers `n` from the length of a trit string.
    pub fn length_for_trits(len: usize) -> Option<usize> {
        (1..=MAX_LEN).find(|n| n * (n - 1) / 2 == len)
    }

    fn set_if_nonzero(&mut self, i: usize, j: usize, w: Gf3) {
        if !w.is_zero() {
            self.set(i, j, w);
        }
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let all = if self.n == 64 { u64::MAX } else { (1u64 << self.n) - 1 };
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = self.adj[v].support() & !seen;
            seen |= fresh;
            frontier |= fresh;
        }
        seen == all
    }

    /// Vertex sets of the connected components, each sorted, ordered by
    /// smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen & (1 << s) != 0 {
                continue;
            }
            let mut comp = 1u64 << s;
            let mut frontier = comp;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let fresh = self.adj[v].support() & !comp;
                comp |= fresh;
                frontier |= fresh;
            }
            seen |= comp;
            out.push((0..self.n).filter(|&v| comp & (1 << v) != 0).collect());
        }
        out
    }

    /// The subgraph induced on `vertices`, relabeled in the given order.
    pub fn induced(&self, vertices: &[usize]) -> WeightedGraph {
        let mut g = WeightedGraph::empty(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                g.set_if_nonzero(i, j, self.get(u, v));
            }
        }
        g
    }

    /// Relabels vertex `i` as `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> WeightedGraph {
        let mut g = WeightedGraph::empty(self.n);
        for i in 0..self.n {
            for j in i + 1..self.n {
                g.set_if_nonzero(perm[i], perm[j], self.get(i, j));
            }
        }
        g
    }

    /// The code generated by `Γ + ωI`, as packed rows.
    pub fn generator_rows(&self) -> Vec<Gf9Vec> {
        self.adj
            .iter()
            .enumerate()
            .map(|(i, r)| Gf9Vec {
                a: *r,
                b: Trits::unit(i),
            })
            .collect()
    }

    /// Adds vertex `n` joined to the old vertices with weights `r`.
    pub fn lengthen(&self, r: &Trits) -> WeightedGraph {
        let n = self.n;
        let mut g = WeightedGraph::empty(n + 1);
        for i in 0..n {
            g.adj[i] = self.adj[i];
            g.adj[i].set(n, r.get(i));
        }
        g.adj[n] = *r;
        g
    }
}

impl fmt::Display for WeightedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_trits())
    }
}

/// `Γ + ωI`; always generates a self-dual code.
pub fn graph_to_generator(wg: &WeightedGraph) -> GeneratorMatrix {
    GeneratorMatrix::from_packed(wg.n(), &wg.generator_rows())
        .expect("standard-form rows are independent")
}

pub fn is_connected(wg: &WeightedGraph) -> bool {
    wg.is_connected()
}

/// Disjoint union; `b`'s vertices follow `a`'s.
pub fn direct_sum(a: &WeightedGraph, b: &WeightedGraph) -> WeightedGraph {
    let mut g = WeightedGraph::empty(a.n + b.n);
    for i in 0..a.n {
        for j in i + 1..a.n {
            g.set_if_nonzero(i, j, a.get(i, j));
        }
    }
    for i in 0..b.n {
        for j in i + 1..b.n {
            g.set_if_nonzero(a.n + i, a.n + j, b.get(i, j));
        }
    }
    g
}

/// The `(3^m − 1)/2` one-vertex extensions of a graph on `m` vertices, one per
/// `{r, −r}` pair (the first nonzero entry of `r` is 1).
pub fn lengthenings(wg: &WeightedGraph) -> impl Iterator<Item = WeightedGraph> + '_ {
    let m = wg.n();
    let total = 3u64.pow(m as u32);
    (1..total).filter_map(move |code| {
        let r = row_from_index(code, m);
        let lowest = r.support().trailing_zeros() as usize;
        (r.get(lowest) == Gf3::ONE).then(|| wg.lengthen(&r))
    })
}

/// Base-3 digits of `code`, least significant first.
pub(crate) fn row_from_index(mut code: u64, m: usize) -> Trits {
    let mut r = Trits::ZERO;
    for i in 0..m {
        r.set(i, Gf3::new((code % 3) as u8));
        code /= 3;
    }
    r
}

fn dense(g: &GeneratorMatrix) -> (Vec<Vec<u8>>, Vec<Vec<u8>>) {
    let n = g.n();
    let a = g
        .rows()
        .iter()
        .map(|r| (0..n).map(|j| r.a.get(j).value()).collect())
        .collect();
    let b = g
        .rows()
        .iter()
        .map(|r| (0..n).map(|j| r.b.get(j).value()).collect())
        .collect();
    (a, b)
}

/// Indices of a maximal set of independent columns, chosen greedily from the
/// left.
fn independent_columns(m: &[Vec<u8>], n: usize) -> Vec<usize> {
    let rows = m.len();
    let mut basis: Vec<(Vec<u8>, usize)> = Vec::new();
    let mut kept = Vec::new();
    for j in 0..n {
        let mut col: Vec<u8> = (0..rows).map(|i| m[i][j]).collect();
        for (b, p) in &basis {
            let c = col[*p];
            if c != 0 {
                for i in 0..rows {
                    col[i] = (col[i] + 3 * 3 - c * b[i]) % 3;
                }
            }
        }
        if let Some(p) = col.iter().position(|&x| x != 0) {
            // scale so the pivot is 1 (2 is its own inverse)
            let s = col[p];
            let col = col.iter().map(|&x| (x * s) % 3).collect();
            basis.push((col, p));
            kept.push(j);
        }
    }
    kept
}

/// Solves `B X = A` over GF(3) by Gauss-Jordan elimination on `[B | A]`.
fn solve(b: &[Vec<u8>], a: &[Vec<u8>]) -> Option<Vec<Vec<u8>>> {
    let n = b.len();
    let mut m: Vec<Vec<u8>> = (0..n)
        .map(|i| b[i].iter().chain(&a[i]).copied().collect())
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&r| m[r][col] != 0)?;
        m.swap(col, p);
        let s = m[col][col];
        for x in m[col].iter_mut() {
            *x = (*x * s) % 3;
        }
        for r in 0..n {
            if r != col && m[r][col] != 0 {
                let c = m[r][col];
                let pivot = m[col].clone();
                for (x, y) in m[r].iter_mut().zip(&pivot) {
                    *x = (*x + 9 - c * y) % 3;
                }
            }
        }
    }
    Some(m.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Maps a self-dual generator matrix to an equivalent standard form and
/// returns the graph with the coordinate order used: vertex `i` of the graph
/// is coordinate `order[i]` of the input.
pub fn to_standard_form_with_order(g: &GeneratorMatrix) -> Result<(WeightedGraph, Vec<usize>)> {
    if !g.is_self_dual() {
        return Err(Error::NotSelfDual(format!(
            "rank {} at length {}, or a nonzero inner product",
            g.rank(),
            g.n()
        )));
    }
    let n = g.n();
    let (a, b) = dense(g);
    let kept = independent_columns(&b, n);
    let k = kept.len();
    let mut order = kept.clone();
    order.extend((0..n).filter(|j| !kept.contains(j)));

    let mut a2 = vec![vec![0u8; n]; n];
    let mut b2 = vec![vec![0u8; n]; n];
    for i in 0..n {
        for (new, &old) in order.iter().enumerate() {
            if new < k {
                a2[i][new] = a[i][old];
                b2[i][new] = b[i][old];
            } else {
                // c ↦ ω·c̄ on this coordinate: (a, b) ↦ (−b, a)
                a2[i][new] = (3 - b[i][old]) % 3;
                b2[i][new] = a[i][old];
            }
        }
    }
    let gamma = solve(&b2, &a2)
        .ok_or_else(|| Error::NotSelfDual("B is singular after the column swap".into()))?;
    for i in 0..n {
        for j in 0..i {
            if gamma[i][j] != gamma[j][i] {
                return Err(Error::NotSelfDual(format!(
                    "Γ is not symmetric at ({i},{j})"
                )));
            }
        }
    }
    let mut wg = WeightedGraph::empty(n);
    for i in 0..n {
        for j in 0..i {
            wg.set_if_nonzero(i, j, Gf3::new(gamma[i][j]));
        }
    }
    Ok((wg, order))
}

/// An equivalent standard form `Γ + ωI` of a self-dual code, returned as the
/// graph `Γ`.
pub fn to_standard_form(g: &GeneratorMatrix) -> Result<WeightedGraph> {
    to_standard_form_with_order(g).map(|(wg, _)| wg)
}
