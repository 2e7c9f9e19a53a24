//! Code equivalence via graph isomorphism.
//!
//! Each coordinate of a length-`n` code becomes a copy of an 8-vertex
//! coordinate graph whose automorphisms are exactly the Sp2(3) relabelings of
//! GF(9)*. Codewords of a generating set become extra vertices joined to the
//! vertex of each coordinate copy that matches their value there. Two codes are
//! equivalent exactly when these graphs are isomorphic, and the automorphism
//! group of the graph is that of the code.

use std::sync::OnceLock;

use crate::canon::{canonize, ColoredDigraph};
use crate::code::{generating_set_by_weight, Echelon, Gf9Vec, GeneratorMatrix};
use crate::error::{Error, Result};
use crate::galois::{sp2_enumerate, Gf9, Sp2};
use crate::standard_form::{graph_to_generator, to_standard_form, WeightedGraph};

const BLOCK: usize = 8;

/// The 8-vertex graph on GF(9)*: vertex `i` stands for `Gf9::from_index(i + 1)`.
#[derive(Clone, Debug)]
pub struct CoordinateGraph {
    graph: ColoredDigraph,
}

impl CoordinateGraph {
    pub fn graph(&self) -> &ColoredDigraph {
        &self.graph
    }

    pub fn vertex(x: Gf9) -> usize {
        debug_assert!(!x.is_zero());
        x.index() as usize - 1
    }
}

fn coordinate_arcs() -> &'static [(usize, usize)] {
    static ARCS: OnceLock<Vec<(usize, usize)>> = OnceLock::new();
    ARCS.get_or_init(|| {
        let mut arcs: Vec<(usize, usize)> = sp2_enumerate()
            .iter()
            .map(|s| {
                (
                    CoordinateGraph::vertex(s.apply(Gf9::ONE)),
                    CoordinateGraph::vertex(s.apply(Gf9::OMEGA)),
                )
            })
            .collect();
        arcs.sort_unstable();
        arcs.dedup();
        arcs
    })
}

/// Builds the coordinate graph and checks that its automorphism group is Sp2(3).
pub fn build_coordinate_graph() -> CoordinateGraph {
    let graph = ColoredDigraph::new(vec![0; BLOCK], coordinate_arcs()).expect("valid coordinate graph");
    let order = canonize(&graph).aut_order;
    assert_eq!(order, 24, "coordinate graph must have exactly 24 automorphisms");
    CoordinateGraph { graph }
}

fn equivalence_graph(n: usize, words: &[Gf9Vec]) -> ColoredDigraph {
    let arcs0 = coordinate_arcs();
    let mut colors = vec![0u32; BLOCK * n];
    colors.resize(BLOCK * n + words.len(), 1);
    let mut arcs = Vec::with_capacity(n * arcs0.len() + 2 * n * words.len());
    for j in 0..n {
        arcs.extend(arcs0.iter().map(|&(a, b)| (BLOCK * j + a, BLOCK * j + b)));
    }
    for (i, c) in words.iter().enumerate() {
        let v = BLOCK * n + i;
        for j in 0..n {
            let x = c.get(j);
            if !x.is_zero() {
                let u = BLOCK * j + CoordinateGraph::vertex(x);
                arcs.push((v, u));
                arcs.push((u, v));
            }
        }
    }
    ColoredDigraph::new(colors, &arcs).expect("valid equivalence graph")
}

/// The equivalence graph of a self-dual code: `n` coordinate-graph copies
/// (color 0, copy `j` on vertices `8j..8j+8`) followed by one color-1 vertex per
/// codeword of the weight-layered generating set.
pub fn build_equivalence_graph(g: &GeneratorMatrix) -> ColoredDigraph {
    equivalence_graph(g.n(), &generating_set_by_weight(g))
}

/// A canonical representative of an equivalence class: the standard-form
/// graph as a trit string, plus the order of the automorphism group.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CanonicalCode {
    pub n: usize,
    pub trits: String,
    pub aut_order: u128,
}

impl CanonicalCode {
    pub fn graph(&self) -> WeightedGraph {
        WeightedGraph::from_trits(self.n, &self.trits).expect("canonical trits are well formed")
    }
}

/// Canonical form of a code given by a standard-form graph.
pub fn canonical_code_of_graph(wg: &WeightedGraph) -> CanonicalCode {
    let n = wg.n();
    let g = graph_to_generator(wg);
    let words = generating_set_by_weight(&g);
    let eg = equivalence_graph(n, &words);
    let form = canonize(&eg);
    let pos = &form.labeling;

    // blocks in order of their first canonical position
    let mut blocks: Vec<usize> = (0..n).collect();
    blocks.sort_by_key(|&j| (0..BLOCK).map(|k| pos[BLOCK * j + k]).min());
    let mut perm = vec![0usize; n];
    for (new, &old) in blocks.iter().enumerate() {
        perm[old] = new;
    }

    // per block, the relabeling whose canonical positions read smallest
    let nonzero: Vec<Gf9> = Gf9::nonzero().collect();
    let ops: Vec<Sp2> = (0..n)
        .map(|j| {
            let key = |s: &Sp2| -> Vec<u32> {
                nonzero
                    .iter()
                    .map(|&x| pos[BLOCK * j + CoordinateGraph::vertex(s.apply(x))])
                    .collect()
            };
            let best = sp2_enumerate()
                .iter()
                .min_by_key(|s| key(s))
                .expect("Sp2(3) is nonempty");
            let inv = best.inverse();
            let map: [Gf9; 8] = std::array::from_fn(|k| inv.apply(nonzero[k]));
            Sp2::from_action(&map).expect("block relabeling is an Sp2(3) action")
        })
        .collect();

    let mut order: Vec<usize> = (0..words.len()).collect();
    order.sort_by_key(|&i| pos[BLOCK * n + i]);
    let mut ech = Echelon::new(n);
    let mut rows = Vec::with_capacity(n);
    for i in order {
        let w = crate::code::transform_vec(&words[i], &perm, &ops, n);
        if ech.insert(&w) {
            rows.push(w);
            if rows.len() == n {
                break;
            }
        }
    }
    let canon = GeneratorMatrix::from_packed(n, &rows).expect("codewords of a length-n code");
    let trits = to_standard_form(&canon)
        .expect("canonical generators span a self-dual code")
        .to_trits();
    CanonicalCode {
        n,
        trits,
        aut_order: form.aut_order,
    }
}

/// Canonical form of a self-dual code.
pub fn canonical_code(g: &GeneratorMatrix) -> Result<CanonicalCode> {
    Ok(canonical_code_of_graph(&to_standard_form(g)?))
}

pub fn are_equivalent(g1: &GeneratorMatrix, g2: &GeneratorMatrix) -> Result<bool> {
    if g1.n() != g2.n() {
        return Err(Error::LengthMismatch(g1.n(), g2.n()));
    }
    Ok(canonical_code(g1)?.trits == canonical_code(g2)?.trits)
}

pub fn automorphism_group_order(g: &GeneratorMatrix) -> Result<u128> {
    let wg = to_standard_form(g)?;
    Ok(canonize(&build_equivalence_graph(&graph_to_generator(&wg))).aut_order)
}
