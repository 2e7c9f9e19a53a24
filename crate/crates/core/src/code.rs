//! Additive codes over GF(9): packed vectors, generator matrices, weight
//! distributions, minimum distance and the generating sets used to build
//! equivalence graphs.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::galois::{Gf3, Gf9, Sp2};

/// Longest supported code; vectors are packed into 64-bit masks.
pub const MAX_LEN: usize = 64;

/// A bit-sliced vector over GF(3): bit `i` of `one` (resp. `two`) is set when
/// coordinate `i` equals 1 (resp. 2).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Trits {
    one: u64,
    two: u64,
}

impl Trits {
    pub const ZERO: Trits = Trits { one: 0, two: 0 };

    pub fn from_slice(values: &[Gf3]) -> Trits {
        let mut t = Trits::ZERO;
        for (i, &v) in values.iter().enumerate() {
            t.set(i, v);
        }
        t
    }

    pub fn unit(i: usize) -> Trits {
        Trits {
            one: 1 << i,
            two: 0,
        }
    }

    pub fn get(&self, i: usize) -> Gf3 {
        let bit = 1u64 << i;
        if self.one & bit != 0 {
            Gf3::ONE
        } else if self.two & bit != 0 {
            Gf3::TWO
        } else {
            Gf3::ZERO
        }
    }

    pub fn set(&mut self, i: usize, v: Gf3) {
        let bit = 1u64 << i;
        self.one &= !bit;
        self.two &= !bit;
        match v.value() {
            1 => self.one |= bit,
            2 => self.two |= bit,
            _ => {}
        }
    }

    #[inline]
    pub fn support(&self) -> u64 {
        self.one | self.two
    }

    #[inline]
    pub fn weight(&self) -> u32 {
        self.support().count_ones()
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.support() == 0
    }

    #[inline]
    pub fn add(&self, other: &Trits) -> Trits {
        let t = (self.one | other.two) ^ (self.two | other.one);
        Trits {
            one: (self.two | other.two) ^ t,
            two: (self.one | other.one) ^ t,
        }
    }

    #[inline]
    pub fn neg(&self) -> Trits {
        Trits {
            one: self.two,
            two: self.one,
        }
    }

    #[inline]
    pub fn sub(&self, other: &Trits) -> Trits {
        self.add(&other.neg())
    }

    #[inline]
    pub fn scale(&self, s: Gf3) -> Trits {
        match s.value() {
            0 => Trits::ZERO,
            1 => *self,
            _ => self.neg(),
        }
    }

    /// Standard dot product over GF(3).
    #[inline]
    pub fn dot(&self, other: &Trits) -> Gf3 {
        let ones = (self.one & other.one) | (self.two & other.two);
        let twos = (self.one & other.two) | (self.two & other.one);
        Gf3::new(((ones.count_ones() + 2 * twos.count_ones()) % 3) as u8)
    }
}

/// A vector over GF(9) stored as its two GF(3) components: `c = a + bω`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Gf9Vec {
    pub a: Trits,
    pub b: Trits,
}

impl Gf9Vec {
    pub const ZERO: Gf9Vec = Gf9Vec {
        a: Trits::ZERO,
        b: Trits::ZERO,
    };

    pub fn from_slice(values: &[Gf9]) -> Gf9Vec {
        let mut v = Gf9Vec::ZERO;
        for (i, &x) in values.iter().enumerate() {
            v.set(i, x);
        }
        v
    }

    pub fn to_vec(&self, n: usize) -> Vec<Gf9> {
        (0..n).map(|i| self.get(i)).collect()
    }

    pub fn get(&self, i: usize) -> Gf9 {
        Gf9::new(self.a.get(i), self.b.get(i))
    }

    pub fn set(&mut self, i: usize, x: Gf9) {
        self.a.set(i, x.a());
        self.b.set(i, x.b());
    }

    #[inline]
    pub fn support(&self) -> u64 {
        self.a.support() | self.b.support()
    }

    #[inline]
    pub fn weight(&self) -> u32 {
        self.support().count_ones()
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.support() == 0
    }

    #[inline]
    pub fn add(&self, other: &Gf9Vec) -> Gf9Vec {
        Gf9Vec {
            a: self.a.add(&other.a),
            b: self.b.add(&other.b),
        }
    }

    #[inline]
    pub fn neg(&self) -> Gf9Vec {
        Gf9Vec {
            a: self.a.neg(),
            b: self.b.neg(),
        }
    }

    #[inline]
    pub fn scale(&self, s: Gf3) -> Gf9Vec {
        Gf9Vec {
            a: self.a.scale(s),
            b: self.b.scale(s),
        }
    }

    /// The Hermitian trace inner product, which on components reduces to the
    /// symplectic form `b_u·a_v − a_u·b_v`.
    #[inline]
    pub fn symplectic(&self, other: &Gf9Vec) -> Gf3 {
        self.b.dot(&other.a) - self.a.dot(&other.b)
    }

    /// Lexicographic comparison of the coordinate indices `a_i + 3b_i`.
    pub fn lex_cmp(&self, other: &Gf9Vec) -> Ordering {
        let diff = (self.a.one ^ other.a.one)
            | (self.a.two ^ other.a.two)
            | (self.b.one ^ other.b.one)
            | (self.b.two ^ other.b.two);
        if diff == 0 {
            return Ordering::Equal;
        }
        let i = diff.trailing_zeros() as usize;
        self.get(i).index().cmp(&other.get(i).index())
    }

    /// Coordinate `p` of the length-`2n` GF(3) vector `(a | b)`.
    fn pair_coord(&self, n: usize, p: usize) -> Gf3 {
        if p < n {
            self.a.get(p)
        } else {
            self.b.get(p - n)
        }
    }

    fn first_pair_coord(&self, n: usize) -> Option<usize> {
        if self.a.support() != 0 {
            Some(self.a.support().trailing_zeros() as usize)
        } else if self.b.support() != 0 {
            Some(n + self.b.support().trailing_zeros() as usize)
        } else {
            None
        }
    }
}

/// Incremental GF(3) row echelon form over `(a | b)` pairs, used for rank and
/// independence tests.
#[derive(Clone, Debug)]
pub struct Echelon {
    n: usize,
    rows: Vec<(Gf9Vec, usize)>,
}

impl Echelon {
    pub fn new(n: usize) -> Self {
        Echelon {
            n,
            rows: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, mut v: Gf9Vec) -> Gf9Vec {
        for (row, pivot) in &self.rows {
            let c = v.pair_coord(self.n, *pivot);
            if !c.is_zero() {
                v = v.add(&row.scale(-c));
            }
        }
        v
    }

    /// Adds `v` if it is independent of the rows so far; returns whether it was.
    pub fn insert(&mut self, v: &Gf9Vec) -> bool {
        let r = self.reduce(*v);
        match r.first_pair_coord(self.n) {
            None => false,
            Some(p) => {
                let lead = r.pair_coord(self.n, p);
                self.rows.push((r.scale(lead), p));
                true
            }
        }
    }
}

/// Generator matrix of an additive code: GF(3)-independent rows over GF(9).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorMatrix {
    n: usize,
    rows: Vec<Gf9Vec>,
}

impl GeneratorMatrix {
    /// Keeps a maximal independent subset of `rows`, in the given order.
    pub fn from_rows(n: usize, rows: &[Vec<Gf9>]) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::EmptyInput);
        }
        for r in rows {
            if r.len() != n {
                return Err(Error::LengthMismatch(n, r.len()));
            }
        }
        let packed: Vec<Gf9Vec> = rows.iter().map(|r| Gf9Vec::from_slice(r)).collect();
        Self::from_packed(n, &packed)
    }

    pub fn from_packed(n: usize, rows: &[Gf9Vec]) -> Result<Self> {
        if n == 0 || n > MAX_LEN {
            return Err(Error::UnsupportedLength(n));
        }
        if rows.is_empty() {
            return Err(Error::EmptyInput);
        }
        let mut ech = Echelon::new(n);
        let basis = rows.iter().filter(|r| ech.insert(r)).copied().collect();
        Ok(GeneratorMatrix { n, rows: basis })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of basis rows `k`; the code has `3^k` codewords.
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Gf9Vec] {
        &self.rows
    }

    pub fn entry(&self, row: usize, col: usize) -> Gf9 {
        self.rows[row].get(col)
    }

    pub fn is_self_dual(&self) -> bool {
        self.rank() == self.n
            && self.rows.iter().enumerate().all(|(i, u)| {
                self.rows[i..]
                    .iter()
                    .all(|v| u.symplectic(v).is_zero())
            })
    }

    /// The rows of `Γ` when this matrix is exactly `Γ + ωI` with `Γ`
    /// symmetric and zero on the diagonal.
    pub fn standard_gamma(&self) -> Option<Vec<Trits>> {
        if self.rank() != self.n {
            return None;
        }
        for (i, r) in self.rows.iter().enumerate() {
            if r.b != Trits::unit(i) || !r.a.get(i).is_zero() {
                return None;
            }
            for j in 0..i {
                if r.a.get(j) != self.rows[j].a.get(i) {
                    return None;
                }
            }
        }
        Some(self.rows.iter().map(|r| r.a).collect())
    }

    pub fn is_standard_form(&self) -> bool {
        self.standard_gamma().is_some()
    }

    /// Applies an element of Sp2(3) ≀ Sym(n): coordinate `j` is acted on by
    /// `ops[j]` and then moved to position `perm[j]`.
    pub fn transform(&self, perm: &[usize], ops: &[Sp2]) -> GeneratorMatrix {
        let rows = self
            .rows
            .iter()
            .map(|r| transform_vec(r, perm, ops, self.n))
            .collect();
        GeneratorMatrix { n: self.n, rows }
    }

    /// Parses the text format: `n` lines of `n` whitespace-separated tokens.
    /// Blank lines and lines starting with `#` are ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let mut rows: Vec<Vec<Gf9>> = Vec::new();
        let mut positions = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let mut row = Vec::new();
            for (col, tok) in tokens_with_columns(line) {
                let x = tok.parse::<Gf9>().map_err(|_| Error::Parse {
                    line: lineno + 1,
                    column: col,
                    token: tok.to_string(),
                    message: "unknown GF(9) element".into(),
                })?;
                row.push(x);
            }
            positions.push((lineno + 1, line.to_string()));
            rows.push(row);
        }
        let n = rows.len();
        if n == 0 {
            return Err(Error::EmptyInput);
        }
        for (row, (lineno, line)) in rows.iter().zip(&positions) {
            if row.len() != n {
                let toks: Vec<(usize, &str)> = tokens_with_columns(line).collect();
                let (column, token) = match toks.get(n) {
                    Some(&(c, t)) => (c, t.to_string()),
                    None => (line.trim_end().len() + 1, String::new()),
                };
                return Err(Error::Parse {
                    line: *lineno,
                    column,
                    token,
                    message: format!("expected {n} entries, found {}", row.len()),
                });
            }
        }
        Self::from_rows(n, &rows)
    }
}

fn tokens_with_columns(line: &str) -> impl Iterator<Item = (usize, &str)> {
    let mut rest = line;
    let mut offset = 0;
    std::iter::from_fn(move || {
        let start = rest.find(|c: char| !c.is_whitespace())?;
        let after = &rest[start..];
        let len = after.find(char::is_whitespace).unwrap_or(after.len());
        let tok = &after[..len];
        let col = offset + start + 1;
        offset += start + len;
        rest = &after[len..];
        Some((col, tok))
    })
}

pub(crate) fn transform_vec(v: &Gf9Vec, perm: &[usize], ops: &[Sp2], n: usize) -> Gf9Vec {
    let mut out = Gf9Vec::ZERO;
    for j in 0..n {
        out.set(perm[j], ops[j].apply(v.get(j)));
    }
    out
}

impl fmt::Display for GeneratorMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rows {
            let line: Vec<&str> = (0..self.n).map(|j| r.get(j).token()).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// Visits every codeword `Σ c_i r_i` built from at most `max_rows` of `rows`
/// with first nonzero coefficient 1. The callback receives the number of rows
/// used and the codeword, and returns `false` to stop early.
fn for_each_combination<F>(rows: &[Gf9Vec], max_rows: usize, visit: &mut F) -> bool
where
    F: FnMut(usize, &Gf9Vec) -> bool,
{
    fn go<F: FnMut(usize, &Gf9Vec) -> bool>(
        rows: &[Gf9Vec],
        start: usize,
        depth: usize,
        max_rows: usize,
        acc: &Gf9Vec,
        visit: &mut F,
    ) -> bool {
        for i in start..rows.len() {
            let plus = acc.add(&rows[i]);
            if !visit(depth + 1, &plus) {
                return false;
            }
            if depth + 1 < max_rows && !go(rows, i + 1, depth + 1, max_rows, &plus, visit) {
                return false;
            }
            if depth > 0 {
                let minus = acc.add(&rows[i].neg());
                if !visit(depth + 1, &minus) {
                    return false;
                }
                if depth + 1 < max_rows && !go(rows, i + 1, depth + 1, max_rows, &minus, visit) {
                    return false;
                }
            }
        }
        true
    }
    if max_rows == 0 {
        return true;
    }
    go(rows, 0, 0, max_rows, &Gf9Vec::ZERO, visit)
}

/// All codewords of weight at most `w` (including zero and both signs of each
/// word). Requires `Γ + ωI` form, where a combination of `i` rows has weight
/// at least `i`.
pub fn codewords_up_to_weight(g: &GeneratorMatrix, w: usize) -> Result<Vec<Gf9Vec>> {
    if g.standard_gamma().is_none() {
        return Err(Error::NotStandardForm);
    }
    let mut out = vec![Gf9Vec::ZERO];
    for_each_combination(g.rows(), w.min(g.n()), &mut |_, c| {
        if c.weight() as usize <= w {
            out.push(*c);
            out.push(c.neg());
        }
        true
    });
    Ok(out)
}

/// Weight distribution `(A_0, …, A_n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightDistribution(Vec<u64>);

impl WeightDistribution {
    pub fn new(counts: Vec<u64>) -> Self {
        WeightDistribution(counts)
    }

    pub fn counts(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.0.len() <= 1
    }

    pub fn get(&self, i: usize) -> u64 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn min_distance(&self) -> Option<usize> {
        self.0.iter().skip(1).position(|&c| c > 0).map(|i| i + 1)
    }
}

impl fmt::Display for WeightDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}y")?,
                _ => write!(f, "{c}y^{i}")?,
            }
        }
        Ok(())
    }
}

/// Full weight distribution by enumerating all `3^k` codewords.
pub fn weight_distribution(g: &GeneratorMatrix) -> WeightDistribution {
    let mut counts = vec![0u64; g.n() + 1];
    counts[0] = 1;
    for_each_combination(g.rows(), g.rank(), &mut |_, c| {
        counts[c.weight() as usize] += 2;
        true
    });
    WeightDistribution(counts)
}

/// Minimum distance of a standard-form code, deepening the number of combined
/// rows until no larger combination can beat the best weight found.
pub(crate) fn standard_min_distance(rows: &[Gf9Vec]) -> usize {
    let n = rows.len();
    let mut best = n;
    let mut r = 1;
    while r < best {
        for_each_combination(rows, r, &mut |k, c| {
            if k == r {
                best = best.min(c.weight() as usize);
            }
            true
        });
        r += 1;
    }
    best
}

/// True when some nonzero codeword has weight below `t`; standard form only.
pub(crate) fn standard_has_weight_below(rows: &[Gf9Vec], t: usize) -> bool {
    if t <= 1 {
        return false;
    }
    let mut found = false;
    for_each_combination(rows, t - 1, &mut |_, c| {
        if (c.weight() as usize) < t {
            found = true;
        }
        !found
    });
    found
}

/// Minimum distance. Standard-form matrices use the low-weight search; other
/// matrices fall back to the full distribution.
pub fn minimum_distance(g: &GeneratorMatrix) -> usize {
    if g.is_standard_form() {
        standard_min_distance(g.rows())
    } else {
        weight_distribution(g)
            .min_distance()
            .unwrap_or(g.n())
    }
}

/// All codewords of weight exactly `w`, both signs, in lexicographic order.
fn layer(g: &GeneratorMatrix, standard: bool, w: usize) -> Vec<Gf9Vec> {
    let max_rows = if standard { w } else { g.rank() };
    let mut out = Vec::new();
    for_each_combination(g.rows(), max_rows, &mut |_, c| {
        if c.weight() as usize == w {
            out.push(*c);
            out.push(c.neg());
        }
        true
    });
    out.sort_by(|x, y| x.lex_cmp(y));
    out
}

/// All codewords of weight `d`, then `d+1`, …, stopping at the first weight at
/// which the accumulated set spans the code.
pub fn generating_set_by_weight(g: &GeneratorMatrix) -> Vec<Gf9Vec> {
    let standard = g.is_standard_form();
    let d = minimum_distance(g);
    let mut ech = Echelon::new(g.n());
    let mut out = Vec::new();
    for w in d..=g.n() {
        let words = layer(g, standard, w);
        for c in &words {
            ech.insert(c);
        }
        out.extend(words);
        if ech.rank() == g.rank() {
            break;
        }
    }
    out
}

/// A weight distribution identified as member `alpha` of a known family.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumFamilyMatch {
    pub n: usize,
    pub alpha: i64,
}

struct Family {
    base: &'static [i64],
    slope: &'static [i64],
    admissible: fn(i64) -> bool,
}

fn family(n: usize) -> Option<Family> {
    // coefficients of A_0..A_n as base + slope·α
    match n {
        9 => Some(Family {
            base: &[1, 0, 0, 0, 4, 244, 1168, 3704, 7766, 6796],
            slope: &[0, 0, 0, 0, 2, -4, -4, 16, -14, 4],
            admissible: |a| (0..=24).contains(&a),
        }),
        10 => Some(Family {
            base: &[1, 0, 0, 0, 0, 44, 1460, 3320, 13600, 22380, 18244],
            slope: &[0, 0, 0, 0, 0, 4, -20, 40, -40, 20, -4],
            admissible: |a| [0, 9, 12, 13, 16, 18, 21, 22, 24, 25].contains(&a),
        }),
        11 => Some(Family {
            base: &[1, 0, 0, 0, 0, 12, 888, 3960, 14970, 42500, 66240, 48576],
            slope: &[0, 0, 0, 0, 0, 2, -6, 0, 20, -30, 18, -4],
            admissible: |a| (6..=50).contains(&a) || [0, 54, 60].contains(&a),
        }),
        12 => Some(Family {
            base: &[1, 0, 0, 0, 0, 0, 480, 3456, 15120, 55520, 133920, 193536, 129408],
            slope: &[0, 0, 0, 0, 0, 0, 4, -24, 60, -80, 60, -24, 4],
            admissible: |a| {
                [
                    0, 1, 3, 4, 7, 9, 12, 13, 16, 19, 21, 25, 27, 28, 31, 36, 37, 39, 43, 48,
                    49, 52, 57, 63, 64, 81, 144,
                ]
                .contains(&a)
            },
        }),
        _ => None,
    }
}

/// Identifies `wd` as a member of the length-`n` weight enumerator family of
/// optimal or near-optimal codes, checking every coefficient.
pub fn match_enumerator_family(n: usize, wd: &WeightDistribution) -> Result<Option<EnumFamilyMatch>> {
    let fam = family(n).ok_or(Error::UnsupportedFamily(n))?;
    if wd.len() != n {
        return Ok(None);
    }
    let (i, slope) = fam
        .slope
        .iter()
        .enumerate()
        .find(|(_, &s)| s != 0)
        .map(|(i, &s)| (i, s))
        .expect("every family depends on alpha");
    let diff = wd.get(i) as i64 - fam.base[i];
    if diff % slope != 0 {
        return Ok(None);
    }
    let alpha = diff / slope;
    if !(fam.admissible)(alpha) {
        return Ok(None);
    }
    let fits = (0..=n).all(|k| wd.get(k) as i64 == fam.base[k] + fam.slope[k] * alpha);
    Ok(fits.then_some(EnumFamilyMatch { n, alpha }))
}
