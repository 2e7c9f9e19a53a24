//! Classification by lengthening, plus the bookkeeping that turns a list of
//! classes into census tables and checks it against the mass formula.

use std::collections::BTreeMap;

use dashmap::{DashMap, DashSet};
use num_bigint::BigUint;
use rayon::prelude::*;

use crate::canon::canonical_weighted_graph;
use crate::code::{
    match_enumerator_family, standard_has_weight_below, standard_min_distance, weight_distribution,
    GeneratorMatrix, WeightDistribution,
};
use crate::equivalence::{canonical_code_of_graph, CanonicalCode};
use crate::error::{Error, Result};
use crate::standard_form::{direct_sum, graph_to_generator, lengthenings, WeightedGraph};

/// One equivalence class of self-dual codes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeClass {
    pub canonical: CanonicalCode,
    pub d: usize,
    pub aut_order: u128,
    pub indecomposable: bool,
}

impl CodeClass {
    /// The class of the code generated by `Γ + ωI`.
    pub fn from_graph(wg: &WeightedGraph) -> CodeClass {
        let canonical = canonical_code_of_graph(wg);
        Self::from_canonical(canonical)
    }

    pub(crate) fn from_canonical(canonical: CanonicalCode) -> CodeClass {
        let wg = canonical.graph();
        CodeClass {
            d: standard_min_distance(&wg.generator_rows()),
            aut_order: canonical.aut_order,
            indecomposable: wg.is_connected(),
            canonical,
        }
    }

    pub fn n(&self) -> usize {
        self.canonical.n
    }

    pub fn trits(&self) -> &str {
        &self.canonical.trits
    }

    pub fn graph(&self) -> WeightedGraph {
        self.canonical.graph()
    }

    pub fn generator(&self) -> GeneratorMatrix {
        graph_to_generator(&self.graph())
    }

    pub fn weight_distribution(&self) -> WeightDistribution {
        weight_distribution(&self.generator())
    }
}

/// The single class of length 1: the code generated by `(ω)`.
pub fn base_classes() -> Vec<CodeClass> {
    vec![CodeClass::from_graph(&WeightedGraph::empty(1))]
}

fn sorted(classes: impl IntoIterator<Item = CodeClass>) -> Vec<CodeClass> {
    let mut v: Vec<CodeClass> = classes.into_iter().collect();
    v.sort_by(|a, b| a.canonical.trits.cmp(&b.canonical.trits));
    v
}

/// Lengthens every parent graph, keeps the extensions accepted by `keep`,
/// and returns one class per equivalence class among them.
fn lengthen_and_classify<F>(parents: &[CodeClass], keep: F) -> Vec<CodeClass>
where
    F: Fn(&WeightedGraph) -> bool + Sync,
{
    let seen_graphs: DashSet<String> = DashSet::new();
    let classes: DashMap<String, CodeClass> = DashMap::new();
    parents.par_iter().for_each(|parent| {
        let wg = parent.graph();
        for child in lengthenings(&wg) {
            if !keep(&child) {
                continue;
            }
            if !seen_graphs.insert(canonical_weighted_graph(&child).to_trits()) {
                continue;
            }
            let canonical = canonical_code_of_graph(&child);
            if !classes.contains_key(&canonical.trits) {
                let class = CodeClass::from_canonical(canonical);
                classes.entry(class.canonical.trits.clone()).or_insert(class);
            }
        }
    });
    sorted(classes.into_iter().map(|(_, c)| c))
}

/// All indecomposable classes of length `n`, from the indecomposable classes
/// of length `n − 1`.
pub fn classify_step(prev: &[CodeClass], n: usize) -> Result<Vec<CodeClass>> {
    if n == 1 {
        return Ok(base_classes());
    }
    let parents: Vec<CodeClass> = prev.iter().filter(|c| c.indecomposable).cloned().collect();
    if parents.is_empty() {
        return Err(Error::Incomplete(format!("no length-{} parents to lengthen", n - 1)));
    }
    if let Some(c) = parents.iter().find(|c| c.n() != n - 1) {
        return Err(Error::LengthMismatch(c.n(), n - 1));
    }
    Ok(lengthen_and_classify(&parents, |_| true))
}

/// All decomposable classes of length `n`: one per multiset of at least two
/// indecomposable classes whose lengths sum to `n`. `indecomposables[m]`
/// holds the classes of length `m`.
pub fn decomposable_classes(n: usize, indecomposables: &[Vec<CodeClass>]) -> Vec<CodeClass> {
    let items: Vec<&CodeClass> = (1..n.min(indecomposables.len()))
        .flat_map(|m| indecomposables[m].iter().filter(|c| c.indecomposable))
        .collect();
    let mut parts: Vec<usize> = Vec::new();
    let mut out = Vec::new();
    collect_multisets(&items, n, 0, &mut parts, &mut |parts| {
        let graph = parts
            .iter()
            .map(|&i| items[i].graph())
            .reduce(|a, b| direct_sum(&a, &b))
            .expect("at least two parts");
        let canonical = canonical_code_of_graph(&graph);
        let mut aut: u128 = 1;
        let mut k = 0;
        for (idx, &i) in parts.iter().enumerate() {
            k += 1;
            aut *= k as u128 * items[i].aut_order;
            if parts.get(idx + 1) != Some(&i) {
                k = 0;
            }
        }
        out.push(CodeClass {
            d: parts.iter().map(|&i| items[i].d).min().expect("nonempty"),
            aut_order: aut,
            indecomposable: false,
            canonical: CanonicalCode {
                aut_order: aut,
                ..canonical
            },
        });
    });
    sorted(out)
}

fn collect_multisets(
    items: &[&CodeClass],
    remaining: usize,
    from: usize,
    parts: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]),
) {
    if remaining == 0 {
        if parts.len() >= 2 {
            visit(parts);
        }
        return;
    }
    for i in from..items.len() {
        let len = items[i].n();
        if len > remaining || (parts.is_empty() && len == remaining) {
            continue;
        }
        parts.push(i);
        collect_multisets(items, remaining - len, i, parts, visit);
        parts.pop();
    }
}

/// Total class counts from indecomposable counts.
pub fn euler_transform(i: &[u128]) -> Result<Vec<u128>> {
    let len = i.len();
    let c: Vec<u128> = (1..=len)
        .map(|n| (1..=n).filter(|d| n % d == 0).map(|d| d as u128 * i[d - 1]).sum())
        .collect();
    let mut t: Vec<u128> = Vec::with_capacity(len);
    for n in 1..=len {
        let s: u128 = c[n - 1] + (1..n).map(|k| c[k - 1] * t[n - k - 1]).sum::<u128>();
        if !s.is_multiple_of(n as u128) {
            return Err(Error::NonIntegral(format!("t_{n} = {s}/{n}")));
        }
        t.push(s / n as u128);
    }
    Ok(t)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MassReport {
    pub n: usize,
    pub lhs: BigUint,
    pub rhs: BigUint,
    pub equal: bool,
}

fn group_order(n: usize) -> BigUint {
    let mut g = BigUint::from(24u32).pow(n as u32);
    for k in 2..=n {
        g *= k;
    }
    g
}

fn mass_product(n: usize) -> BigUint {
    (1..=n as u32).map(|i| BigUint::from(3u32).pow(i) + 1u32).product()
}

/// Compares the number of self-dual codes of length `n` with the sum of the
/// orbit sizes of the given classes.
pub fn mass_check(n: usize, classes: &[CodeClass]) -> Result<MassReport> {
    let lhs = mass_product(n);
    let group = group_order(n);
    let mut rhs = BigUint::from(0u32);
    for c in classes {
        let aut = BigUint::from(c.aut_order);
        if c.aut_order == 0 || &group % &aut != BigUint::from(0u32) {
            return Err(Error::NonIntegral(format!(
                "|Aut| = {} does not divide 24^{n}·{n}! for {}",
                c.aut_order,
                c.trits()
            )));
        }
        rhs += &group / aut;
    }
    let equal = lhs == rhs;
    Ok(MassReport { n, lhs, rhs, equal })
}

/// Lower bound on the number of classes of length `n`, from the mass formula
/// and `|Aut| ≥ 2`.
pub fn mass_lower_bound(n: usize) -> BigUint {
    let num = mass_product(n) * 2u32;
    let den = group_order(n);
    (num + &den - 1u32) / den
}

/// Lengthens the complete set of length-`n` classes with `d ≥ d_target − 1`
/// and returns every length-`n+1` class with `d ≥ d_target`. Extensions with
/// smaller distance are discarded before any canonization.
pub fn extend_with_distance_floor(classes: &[CodeClass], d_target: usize) -> Vec<CodeClass> {
    let parents: Vec<CodeClass> = classes
        .iter()
        .filter(|c| c.d + 1 >= d_target)
        .cloned()
        .collect();
    lengthen_and_classify(&parents, |wg| {
        !standard_has_weight_below(&wg.generator_rows(), d_target)
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusRow {
    pub n: usize,
    pub i_n: usize,
    pub t_n: usize,
    pub by_distance: BTreeMap<usize, usize>,
    pub trivial_aut_count: usize,
}

/// Summary tables for a set of classes of one length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Census {
    pub row: CensusRow,
    /// indecomposable classes by minimum distance
    pub indecomposable_by_distance: BTreeMap<usize, usize>,
    /// distinct weight distributions of indecomposable classes, by distance
    pub distinct_wd_by_distance: BTreeMap<usize, usize>,
    pub distinct_wd: usize,
    pub aut_histogram: BTreeMap<u128, usize>,
    pub trivial_by_distance: BTreeMap<usize, usize>,
    /// `(d, α, |Aut|) → count` for classes whose weight distribution belongs
    /// to the length's enumerator family
    pub alpha_beta: BTreeMap<(usize, i64, u128), usize>,
}

pub fn tabulate(n: usize, classes: &[CodeClass]) -> Census {
    let mut by_distance = BTreeMap::new();
    let mut indecomposable_by_distance = BTreeMap::new();
    let mut aut_histogram = BTreeMap::new();
    let mut trivial_by_distance = BTreeMap::new();
    let mut wds: BTreeMap<usize, Vec<WeightDistribution>> = BTreeMap::new();
    let mut alpha_beta = BTreeMap::new();
    let wd_of: Vec<WeightDistribution> = classes.par_iter().map(|c| c.weight_distribution()).collect();
    for (c, wd) in classes.iter().zip(wd_of) {
        *by_distance.entry(c.d).or_insert(0) += 1;
        *aut_histogram.entry(c.aut_order).or_insert(0) += 1;
        if c.aut_order == 2 {
            *trivial_by_distance.entry(c.d).or_insert(0) += 1;
        }
        if (9..=12).contains(&n) {
            if let Ok(Some(m)) = match_enumerator_family(n, &wd) {
                *alpha_beta.entry((c.d, m.alpha, c.aut_order)).or_insert(0) += 1;
            }
        }
        if c.indecomposable {
            *indecomposable_by_distance.entry(c.d).or_insert(0) += 1;
            wds.entry(c.d).or_default().push(wd);
        }
    }
    let distinct_wd_by_distance: BTreeMap<usize, usize> = wds
        .into_iter()
        .map(|(d, mut v)| {
            v.sort_by(|a, b| a.counts().cmp(b.counts()));
            v.dedup();
            (d, v.len())
        })
        .collect();
    let i_n = classes.iter().filter(|c| c.indecomposable).count();
    Census {
        row: CensusRow {
            n,
            i_n,
            t_n: classes.len(),
            by_distance,
            trivial_aut_count: trivial_by_distance.values().sum(),
        },
        indecomposable_by_distance,
        distinct_wd: distinct_wd_by_distance.values().sum(),
        distinct_wd_by_distance,
        aut_histogram,
        trivial_by_distance,
        alpha_beta,
    }
}

/// Classes of one length: indecomposable ones first, then decomposable.
#[derive(Clone, Debug, Default)]
pub struct LengthClasses {
    pub indecomposable: Vec<CodeClass>,
    pub decomposable: Vec<CodeClass>,
}

impl LengthClasses {
    pub fn all(&self) -> Vec<CodeClass> {
        self.indecomposable.iter().chain(&self.decomposable).cloned().collect()
    }

    pub fn len(&self) -> usize {
        self.indecomposable.len() + self.decomposable.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Complete classification of lengths `1..=max_n`; entry `m − 1` holds length `m`.
pub fn classify_up_to(max_n: usize, mut progress: impl FnMut(&LengthClasses)) -> Result<Vec<LengthClasses>> {
    let mut out: Vec<LengthClasses> = Vec::with_capacity(max_n);
    let mut indec: Vec<Vec<CodeClass>> = vec![Vec::new()];
    for n in 1..=max_n {
        let prev = out.last().map(|l| l.indecomposable.as_slice()).unwrap_or(&[]);
        let indecomposable = classify_step(prev, n)?;
        indec.push(indecomposable.clone());
        let decomposable = decomposable_classes(n, &indec);
        let level = LengthClasses {
            indecomposable,
            decomposable,
        };
        progress(&level);
        out.push(level);
    }
    Ok(out)
}
