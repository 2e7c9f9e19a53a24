//! Canonical labeling of vertex-colored digraphs by individualization and
//! refinement, with automorphism pruning and exact automorphism-group order.
//!
//! The search tree follows the usual scheme: refine the coloring to a stable
//! partition, individualize a vertex of the smallest non-singleton cell,
//! refine again, and recurse until the partition is discrete. Each node
//! carries a hash of its refinement trace; the canonical leaf minimizes the
//! pair (trace sequence, relabeled arc list). Leaves that relabel the graph
//! identically yield automorphisms, which prune siblings lying in the same
//! orbit. The group order is the product of the orbit lengths met along the
//! leftmost path.

use std::cmp::Ordering;
use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::standard_form::WeightedGraph;

const FORMAT_ID: u8 = 1;

/// Largest graph accepted by [`brute_force_canonize`].
pub const BRUTE_FORCE_MAX: usize = 8;

/// A vertex-colored directed graph without loops, stored in CSR form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredDigraph {
    colors: Vec<u32>,
    out_start: Vec<u32>,
    out_list: Vec<u32>,
    in_start: Vec<u32>,
    in_list: Vec<u32>,
}

impl ColoredDigraph {
    /// Builds a graph from per-vertex colors and an arc list. Duplicate arcs
    /// are merged; loops, out-of-range endpoints and gaps in the color ids
    /// are rejected.
    pub fn new(colors: Vec<u32>, arcs: &[(usize, usize)]) -> Result<Self> {
        let v = colors.len();
        if v > u32::MAX as usize {
            return Err(Error::InvalidGraph("too many vertices".into()));
        }
        let mut seen = vec![false; colors.iter().map(|&c| c as usize + 1).max().unwrap_or(0)];
        for &c in &colors {
            seen[c as usize] = true;
        }
        if let Some(c) = seen.iter().position(|s| !s) {
            return Err(Error::InvalidGraph(format!("color ids are not dense: {c} unused")));
        }
        let mut list: Vec<(u32, u32)> = Vec::with_capacity(arcs.len());
        for &(a, b) in arcs {
            if a >= v || b >= v {
                return Err(Error::InvalidGraph(format!("arc ({a},{b}) out of range")));
            }
            if a == b {
                return Err(Error::InvalidGraph(format!("self-loop at {a}")));
            }
            list.push((a as u32, b as u32));
        }
        list.sort_unstable();
        list.dedup();
        let (out_start, out_list) = csr(v, list.iter().copied());
        let mut rev: Vec<(u32, u32)> = list.iter().map(|&(a, b)| (b, a)).collect();
        rev.sort_unstable();
        let (in_start, in_list) = csr(v, rev.into_iter());
        Ok(ColoredDigraph {
            colors,
            out_start,
            out_list,
            in_start,
            in_list,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.colors.len()
    }

    pub fn arc_count(&self) -> usize {
        self.out_list.len()
    }

    pub fn color(&self, v: usize) -> u32 {
        self.colors[v]
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    #[inline]
    pub fn out_neighbors(&self, v: usize) -> &[u32] {
        &self.out_list[self.out_start[v] as usize..self.out_start[v + 1] as usize]
    }

    #[inline]
    pub fn in_neighbors(&self, v: usize) -> &[u32] {
        &self.in_list[self.in_start[v] as usize..self.in_start[v + 1] as usize]
    }

    pub fn has_arc(&self, a: usize, b: usize) -> bool {
        self.out_neighbors(a).binary_search(&(b as u32)).is_ok()
    }

    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.vertex_count())
            .flat_map(move |a| self.out_neighbors(a).iter().map(move |&b| (a, b as usize)))
    }

    /// The isomorphic copy in which vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> ColoredDigraph {
        let mut colors = vec![0; self.vertex_count()];
        for (v, &c) in self.colors.iter().enumerate() {
            colors[perm[v]] = c;
        }
        let arcs: Vec<(usize, usize)> = self.arcs().map(|(a, b)| (perm[a], perm[b])).collect();
        ColoredDigraph::new(colors, &arcs).expect("permutation of a valid graph")
    }

    /// True when `perm` maps the graph onto itself.
    pub fn is_automorphism(&self, perm: &[usize]) -> bool {
        (0..self.vertex_count()).all(|v| self.colors[v] == self.colors[perm[v]])
            && self.arcs().all(|(a, b)| self.has_arc(perm[a], perm[b]))
    }
}

fn csr(v: usize, sorted: impl Iterator<Item = (u32, u32)>) -> (Vec<u32>, Vec<u32>) {
    let mut start = vec![0u32; v + 1];
    let mut list = Vec::new();
    for (a, b) in sorted {
        start[a as usize + 1] += 1;
        list.push(b);
    }
    for i in 0..v {
        start[i + 1] += start[i];
    }
    (start, list)
}

/// Result of canonization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonForm {
    /// Serialization of the relabeled graph; equal exactly for isomorphic inputs.
    pub bytes: Vec<u8>,
    /// `labeling[v]` is the canonical position of vertex `v`.
    pub labeling: Vec<u32>,
    pub aut_order: u128,
}

fn serialize(g: &ColoredDigraph, pos: &[u32], sorted_arcs: &[u64]) -> Vec<u8> {
    let v = g.vertex_count();
    let mut colors = vec![0u32; v];
    for (x, &p) in pos.iter().enumerate() {
        colors[p as usize] = g.color(x);
    }
    let mut out = Vec::with_capacity(9 + 4 * v + 8 * sorted_arcs.len());
    out.push(FORMAT_ID);
    out.extend_from_slice(&(v as u32).to_le_bytes());
    for c in colors {
        out.extend_from_slice(&c.to_le_bytes());
    }
    out.extend_from_slice(&(sorted_arcs.len() as u32).to_le_bytes());
    for &a in sorted_arcs {
        out.extend_from_slice(&((a >> 32) as u32).to_le_bytes());
        out.extend_from_slice(&(a as u32).to_le_bytes());
    }
    out
}

fn relabeled_arcs(g: &ColoredDigraph, pos: &[u32]) -> Vec<u64> {
    let mut arcs: Vec<u64> = g
        .arcs()
        .map(|(a, b)| ((pos[a] as u64) << 32) | pos[b] as u64)
        .collect();
    arcs.sort_unstable();
    arcs
}

#[inline]
fn mix(h: u64, x: u64) -> u64 {
    (h ^ x).wrapping_mul(0x9E37_79B9_7F4A_7C15).rotate_left(27)
}

/// Ordered partition of the vertex set into cells of consecutive positions.
#[derive(Clone, Debug)]
struct Partition {
    lab: Vec<u32>,
    pos: Vec<u32>,
    /// vertex -> start position of its cell
    cell: Vec<u32>,
    /// start position -> end position (exclusive); meaningful at cell starts
    end: Vec<u32>,
    cells: usize,
}

impl Partition {
    fn by_color(g: &ColoredDigraph) -> (Partition, Vec<u32>) {
        let v = g.vertex_count();
        let mut lab: Vec<u32> = (0..v as u32).collect();
        lab.sort_by_key(|&x| g.color(x as usize));
        let mut p = Partition {
            pos: vec![0; v],
            cell: vec![0; v],
            end: vec![0; v + 1],
            lab,
            cells: 0,
        };
        let mut starts = Vec::new();
        let mut q = 0;
        while q < v {
            let c = g.color(p.lab[q] as usize);
            let mut e = q;
            while e < v && g.color(p.lab[e] as usize) == c {
                e += 1;
            }
            p.end[q] = e as u32;
            for r in q..e {
                let x = p.lab[r] as usize;
                p.cell[x] = q as u32;
                p.pos[x] = r as u32;
            }
            starts.push(q as u32);
            p.cells += 1;
            q = e;
        }
        (p, starts)
    }

    #[inline]
    fn cell_len(&self, x: usize) -> u32 {
        let s = self.cell[x];
        self.end[s as usize] - s
    }

    fn is_discrete(&self) -> bool {
        self.cells == self.lab.len()
    }

    /// Smallest non-singleton cell, lowest start on ties.
    fn target_cell(&self) -> Option<usize> {
        let v = self.lab.len();
        let mut best: Option<(u32, usize)> = None;
        let mut q = 0;
        while q < v {
            let e = self.end[q] as usize;
            let len = (e - q) as u32;
            if len > 1 && best.is_none_or(|(l, _)| len < l) {
                best = Some((len, q));
                if len == 2 {
                    break;
                }
            }
            q = e;
        }
        best.map(|(_, q)| q)
    }

    /// Splits `x` off the front of its cell; returns the singleton's start.
    fn individualize(&mut self, x: u32) -> u32 {
        let c = self.cell[x as usize];
        let e = self.end[c as usize];
        let q = self.pos[x as usize];
        let y = self.lab[c as usize];
        self.lab.swap(c as usize, q as usize);
        self.pos[x as usize] = c;
        self.pos[y as usize] = q;
        self.end[c as usize] = c + 1;
        self.end[c as usize + 1] = e;
        for r in c + 1..e {
            self.cell[self.lab[r as usize] as usize] = c + 1;
        }
        self.cells += 1;
        c
    }
}

/// Scratch space for refinement, reused across the nodes of one search.
struct Refiner {
    key: Vec<u64>,
    touched: Vec<u32>,
    touched_cells: Vec<u32>,
    cell_marked: Vec<bool>,
    in_queue: Vec<bool>,
    queue: VecDeque<u32>,
}

impl Refiner {
    fn new(v: usize) -> Self {
        Refiner {
            key: vec![0; v],
            touched: Vec::new(),
            touched_cells: Vec::new(),
            cell_marked: vec![false; v + 1],
            in_queue: vec![false; v + 1],
            queue: VecDeque::new(),
        }
    }

    /// Refines `p` until every cell has uniform in- and out-arc counts into
    /// every other cell, starting from the given splitter cells. Returns a
    /// hash of the refinement trace, which is invariant under isomorphism.
    fn refine(&mut self, g: &ColoredDigraph, p: &mut Partition, splitters: &[u32]) -> u64 {
        let mut h = 0x5EED_u64;
        for &s in splitters {
            if !self.in_queue[s as usize] {
                self.in_queue[s as usize] = true;
                self.queue.push_back(s);
            }
        }
        while let Some(s) = self.queue.pop_front() {
            self.in_queue[s as usize] = false;
            if p.is_discrete() {
                continue;
            }
            let e = p.end[s as usize];
            h = mix(h, ((s as u64) << 32) | (e - s) as u64);
            for q in s..e {
                let w = p.lab[q as usize] as usize;
                for &u in g.out_neighbors(w) {
                    if p.cell_len(u as usize) > 1 {
                        let k = &mut self.key[u as usize];
                        if *k == 0 {
                            self.touched.push(u);
                        }
                        *k += 1;
                    }
                }
                for &u in g.in_neighbors(w) {
                    if p.cell_len(u as usize) > 1 {
                        let k = &mut self.key[u as usize];
                        if *k == 0 {
                            self.touched.push(u);
                        }
                        *k += 1 << 32;
                    }
                }
            }
            for &u in &self.touched {
                let c = p.cell[u as usize];
                if !self.cell_marked[c as usize] {
                    self.cell_marked[c as usize] = true;
                    self.touched_cells.push(c);
                }
            }
            self.touched_cells.sort_unstable();
            let cells = std::mem::take(&mut self.touched_cells);
            for &c in &cells {
                self.cell_marked[c as usize] = false;
                h = self.split(p, c, h);
            }
            self.touched_cells = cells;
            self.touched_cells.clear();
            for &u in &self.touched {
                self.key[u as usize] = 0;
            }
            self.touched.clear();
        }
        mix(h, p.cells as u64)
    }

    fn split(&mut self, p: &mut Partition, c: u32, mut h: u64) -> u64 {
        let (cs, ce) = (c as usize, p.end[c as usize] as usize);
        let key = &self.key;
        let slice = &mut p.lab[cs..ce];
        let k0 = key[slice[0] as usize];
        if slice.iter().all(|&x| key[x as usize] == k0) {
            return h;
        }
        slice.sort_unstable_by_key(|&x| key[x as usize]);
        // fragment boundaries
        let mut frags: Vec<(usize, usize)> = Vec::new();
        let mut fs = cs;
        for q in cs + 1..=ce {
            if q == ce || key[p.lab[q] as usize] != key[p.lab[fs] as usize] {
                frags.push((fs, q));
                fs = q;
            }
        }
        h = mix(h, ((c as u64) << 32) | frags.len() as u64);
        for &(fs, fe) in &frags {
            h = mix(h, key[p.lab[fs] as usize]);
            h = mix(h, (fe - fs) as u64);
            p.end[fs] = fe as u32;
            for q in fs..fe {
                let x = p.lab[q] as usize;
                p.cell[x] = fs as u32;
                p.pos[x] = q as u32;
            }
        }
        p.cells += frags.len() - 1;
        if self.in_queue[cs] {
            for &(fs, _) in &frags[1..] {
                self.in_queue[fs] = true;
                self.queue.push_back(fs as u32);
            }
        } else {
            let largest = frags
                .iter()
                .enumerate()
                .max_by(|a, b| (a.1 .1 - a.1 .0).cmp(&(b.1 .1 - b.1 .0)).then(b.0.cmp(&a.0)))
                .map(|(i, _)| i)
                .expect("at least two fragments");
            for (i, &(fs, _)) in frags.iter().enumerate() {
                if i != largest {
                    self.in_queue[fs] = true;
                    self.queue.push_back(fs as u32);
                }
            }
        }
        h
    }
}

struct UnionFind {
    parent: Vec<u32>,
}

impl UnionFind {
    fn new(v: usize) -> Self {
        UnionFind {
            parent: (0..v as u32).collect(),
        }
    }

    fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let p = self.parent[x as usize];
            self.parent[x as usize] = self.parent[p as usize];
            x = p;
        }
        x
    }

    fn union(&mut self, a: u32, b: u32) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi as usize] = lo;
        }
    }
}

struct Leaf {
    path: Vec<u32>,
    traces: Vec<u64>,
    lab: Vec<u32>,
    cert: Vec<u64>,
}

enum Flow {
    Continue,
    /// Resume sibling iteration at the node of this level.
    Abort(usize),
}

struct Search<'g> {
    g: &'g ColoredDigraph,
    refiner: Refiner,
    first: Option<Leaf>,
    best: Option<Leaf>,
    generators: Vec<Vec<u32>>,
    group_order: u128,
    path: Vec<u32>,
    traces: Vec<u64>,
}

fn divergence(a: &[u32], b: &[u32]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

/// Compares a node's trace prefix with a leaf's full trace sequence, as the
/// leaves below the node would compare.
fn prefix_cmp(node: &[u64], leaf: &[u64]) -> Ordering {
    let m = node.len().min(leaf.len());
    match node[..m].cmp(&leaf[..m]) {
        Ordering::Equal if node.len() > leaf.len() => Ordering::Greater,
        o => o,
    }
}

impl<'g> Search<'g> {
    fn orbits(&self, level: usize) -> UnionFind {
        let prefix = &self.path[..level];
        let mut uf = UnionFind::new(self.g.vertex_count());
        for gen in &self.generators {
            if prefix.iter().all(|&x| gen[x as usize] == x) {
                for (x, &y) in gen.iter().enumerate() {
                    if x as u32 != y {
                        uf.union(x as u32, y);
                    }
                }
            }
        }
        uf
    }

    fn node(&mut self, p: Partition, level: usize, on_first: bool) -> Flow {
        if !on_first {
            let first = self.first.as_ref().expect("first leaf precedes other nodes");
            let best = self.best.as_ref().expect("best leaf exists once first does");
            let eq_first = first.traces.len() >= self.traces.len()
                && first.traces[..self.traces.len()] == self.traces[..];
            if !eq_first && prefix_cmp(&self.traces, &best.traces) == Ordering::Greater {
                return Flow::Continue;
            }
        }
        if p.is_discrete() {
            return self.leaf(&p);
        }
        let c = p.target_cell().expect("non-discrete partition has a target cell");
        let cell: Vec<u32> = p.lab[c..p.end[c] as usize].to_vec();
        let mut explored: Vec<u32> = Vec::with_capacity(cell.len());
        let mut orbits: Option<(usize, UnionFind)> = None;
        for (idx, &x) in cell.iter().enumerate() {
            if idx > 0 {
                if orbits.as_ref().is_none_or(|(n, _)| *n != self.generators.len()) {
                    orbits = Some((self.generators.len(), self.orbits(level)));
                }
                let uf = &mut orbits.as_mut().expect("computed above").1;
                let rx = uf.find(x);
                if explored.iter().any(|&y| uf.find(y) == rx) {
                    continue;
                }
            }
            explored.push(x);
            let mut child = p.clone();
            let start = child.individualize(x);
            let t = self.refiner.refine(self.g, &mut child, &[start]);
            self.path.push(x);
            self.traces.push(t);
            let flow = self.node(child, level + 1, on_first && idx == 0);
            self.path.pop();
            self.traces.pop();
            if let Flow::Abort(k) = flow {
                if k < level {
                    debug_assert!(!on_first, "first-path nodes never abort upward");
                    return flow;
                }
            }
        }
        if on_first {
            let mut uf = self.orbits(level);
            let root = uf.find(cell[0]);
            let size = cell.iter().filter(|&&y| uf.find(y) == root).count() as u128;
            self.group_order = self
                .group_order
                .checked_mul(size)
                .expect("automorphism group order overflows u128");
        }
        Flow::Continue
    }

    fn leaf(&mut self, p: &Partition) -> Flow {
        let cert = relabeled_arcs(self.g, &p.pos);
        let Some(first) = self.first.as_ref() else {
            let leaf = Leaf {
                path: self.path.clone(),
                traces: self.traces.clone(),
                lab: p.lab.clone(),
                cert,
            };
            self.best = Some(Leaf {
                path: leaf.path.clone(),
                traces: leaf.traces.clone(),
                lab: leaf.lab.clone(),
                cert: leaf.cert.clone(),
            });
            self.first = Some(leaf);
            return Flow::Continue;
        };
        if first.traces == self.traces && first.cert == cert {
            let gen = automorphism(&first.lab, &p.lab);
            let k = divergence(&first.path, &self.path);
            self.generators.push(gen);
            return Flow::Abort(k);
        }
        let best = self.best.as_ref().expect("set with first");
        match self.traces.cmp(&best.traces).then_with(|| cert.cmp(&best.cert)) {
            Ordering::Equal => {
                let gen = automorphism(&best.lab, &p.lab);
                let k = divergence(&best.path, &self.path);
                self.generators.push(gen);
                Flow::Abort(k)
            }
            Ordering::Less => {
                self.best = Some(Leaf {
                    path: self.path.clone(),
                    traces: self.traces.clone(),
                    lab: p.lab.clone(),
                    cert,
                });
                Flow::Continue
            }
            Ordering::Greater => Flow::Continue,
        }
    }
}

/// The permutation sending the leaf labeled `from` onto the leaf labeled `to`.
fn automorphism(from: &[u32], to: &[u32]) -> Vec<u32> {
    let mut gen = vec![0u32; from.len()];
    for (q, &x) in from.iter().enumerate() {
        gen[x as usize] = to[q];
    }
    gen
}

/// Canonical form and automorphism-group order of a colored digraph.
pub fn canonize(g: &ColoredDigraph) -> CanonForm {
    let v = g.vertex_count();
    if v == 0 {
        return CanonForm {
            bytes: serialize(g, &[], &[]),
            labeling: Vec::new(),
            aut_order: 1,
        };
    }
    let mut refiner = Refiner::new(v);
    let (mut root, starts) = Partition::by_color(g);
    let t = refiner.refine(g, &mut root, &starts);
    let mut search = Search {
        g,
        refiner,
        first: None,
        best: None,
        generators: Vec::new(),
        group_order: 1,
        path: Vec::new(),
        traces: vec![t],
    };
    search.node(root, 0, true);
    let best = search.best.expect("search reaches at least one leaf");
    let mut pos = vec![0u32; v];
    for (q, &x) in best.lab.iter().enumerate() {
        pos[x as usize] = q as u32;
    }
    CanonForm {
        bytes: serialize(g, &pos, &best.cert),
        labeling: pos,
        aut_order: search.group_order,
    }
}

/// Exhaustive canonization over all color-preserving permutations: the
/// lexicographically smallest relabeled arc list, and the number of
/// permutations attaining it.
pub fn brute_force_canonize(g: &ColoredDigraph) -> Result<CanonForm> {
    let v = g.vertex_count();
    if v > BRUTE_FORCE_MAX {
        return Err(Error::TooLarge(v));
    }
    // positions are grouped by color, as in the refinement engine
    let mut order: Vec<usize> = (0..v).collect();
    order.sort_by_key(|&x| g.color(x));
    let mut blocks: Vec<(usize, usize)> = Vec::new();
    let mut q = 0;
    while q < v {
        let mut e = q;
        while e < v && g.color(order[e]) == g.color(order[q]) {
            e += 1;
        }
        blocks.push((q, e));
        q = e;
    }
    let mut best: Option<(Vec<u64>, Vec<u32>)> = None;
    let mut count: u128 = 0;
    let mut lab: Vec<usize> = order.clone();
    let mut visit = |lab: &[usize]| {
        let mut pos = vec![0u32; v];
        for (q, &x) in lab.iter().enumerate() {
            pos[x] = q as u32;
        }
        let cert = relabeled_arcs(g, &pos);
        match best.as_ref().map(|(b, _)| cert.cmp(b)) {
            None | Some(Ordering::Less) => {
                best = Some((cert, pos));
                count = 1;
            }
            Some(Ordering::Equal) => count += 1,
            Some(Ordering::Greater) => {}
        }
    };
    permute_blocks(&mut lab, &blocks, 0, &mut visit);
    let (cert, pos) = best.expect("at least the identity labeling");
    Ok(CanonForm {
        bytes: serialize(g, &pos, &cert),
        labeling: pos,
        aut_order: count,
    })
}

fn permute_blocks(lab: &mut Vec<usize>, blocks: &[(usize, usize)], b: usize, visit: &mut impl FnMut(&[usize])) {
    if b == blocks.len() {
        visit(lab);
        return;
    }
    let (s, e) = blocks[b];
    permute_range(lab, s, e, blocks, b, visit);
}

fn permute_range(
    lab: &mut Vec<usize>,
    k: usize,
    e: usize,
    blocks: &[(usize, usize)],
    b: usize,
    visit: &mut impl FnMut(&[usize]),
) {
    if k + 1 >= e {
        permute_blocks(lab, blocks, b + 1, visit);
        return;
    }
    for i in k..e {
        lab.swap(k, i);
        permute_range(lab, k + 1, e, blocks, b, visit);
        lab.swap(k, i);
    }
}

/// Colored digraph encoding of a 3-weighted graph: the graph's vertices get
/// color 0, a weight-1 edge becomes an arc pair, and a weight-2 edge becomes
/// arc pairs through a fresh color-1 vertex.
pub fn encode_weighted_graph(wg: &WeightedGraph) -> ColoredDigraph {
    let n = wg.n();
    let mut colors = vec![0u32; n];
    let mut arcs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            match wg.get(i, j).value() {
                1 => {
                    arcs.push((i, j));
                    arcs.push((j, i));
                }
                2 => {
                    let x = colors.len();
                    colors.push(1);
                    arcs.extend_from_slice(&[(i, x), (x, i), (j, x), (x, j)]);
                }
                _ => {}
            }
        }
    }
    ColoredDigraph::new(colors, &arcs).expect("encoding is a valid digraph")
}

pub fn weighted_canonical_form(wg: &WeightedGraph) -> Vec<u8> {
    canonize(&encode_weighted_graph(wg)).bytes
}

/// The canonical relabeling of a weighted graph: isomorphic graphs map to the
/// same graph. Its trit string is a compact isomorphism key.
pub fn canonical_weighted_graph(wg: &WeightedGraph) -> WeightedGraph {
    let form = canonize(&encode_weighted_graph(wg));
    let perm: Vec<usize> = form.labeling[..wg.n()].iter().map(|&p| p as usize).collect();
    wg.permuted(&perm)
}
