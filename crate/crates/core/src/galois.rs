//! Exact arithmetic in GF(3) and GF(9), and the symplectic group Sp2(3).
//!
//! GF(9) is GF(3)[ω] with ω² = ω + 1. An element `a + bω` is stored as the
//! single index `a + 3b`, and every operation is a lookup into tables built at
//! compile time from the defining relation.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::OnceLock;

use crate::error::Error;

/// An element of GF(3), always reduced to `0..3`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gf3(u8);

impl Gf3 {
    pub const ZERO: Gf3 = Gf3(0);
    pub const ONE: Gf3 = Gf3(1);
    pub const TWO: Gf3 = Gf3(2);

    pub const fn new(v: u8) -> Self {
        Gf3(v % 3)
    }

    pub const fn value(self) -> u8 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Multiplicative inverse; GF(3) elements are their own inverses.
    pub fn inv(self) -> Option<Gf3> {
        (self.0 != 0).then_some(self)
    }

    pub fn all() -> [Gf3; 3] {
        [Gf3(0), Gf3(1), Gf3(2)]
    }
}

impl Add for Gf3 {
    type Output = Gf3;
    fn add(self, rhs: Gf3) -> Gf3 {
        Gf3((self.0 + rhs.0) % 3)
    }
}

impl AddAssign for Gf3 {
    fn add_assign(&mut self, rhs: Gf3) {
        *self = *self + rhs;
    }
}

impl Sub for Gf3 {
    type Output = Gf3;
    fn sub(self, rhs: Gf3) -> Gf3 {
        Gf3((self.0 + 3 - rhs.0) % 3)
    }
}

impl Neg for Gf3 {
    type Output = Gf3;
    fn neg(self) -> Gf3 {
        Gf3((3 - self.0) % 3)
    }
}

impl Mul for Gf3 {
    type Output = Gf3;
    fn mul(self, rhs: Gf3) -> Gf3 {
        Gf3((self.0 * rhs.0) % 3)
    }
}

impl fmt::Display for Gf3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

const fn mul_index(x: u8, y: u8) -> u8 {
    let (a1, b1) = (x % 3, x / 3);
    let (a2, b2) = (y % 3, y / 3);
    // (a1 + b1ω)(a2 + b2ω) = a1a2 + b1b2 + (a1b2 + a2b1 + b1b2)ω, using ω² = ω + 1
    let a = (a1 * a2 + b1 * b2) % 3;
    let b = (a1 * b2 + a2 * b1 + b1 * b2) % 3;
    a + 3 * b
}

const MUL_TABLE: [[u8; 9]; 9] = {
    let mut t = [[0u8; 9]; 9];
    let mut x = 0;
    while x < 9 {
        let mut y = 0;
        while y < 9 {
            t[x][y] = mul_index(x as u8, y as u8);
            y += 1;
        }
        x += 1;
    }
    t
};

const ADD_TABLE: [[u8; 9]; 9] = {
    let mut t = [[0u8; 9]; 9];
    let mut x = 0;
    while x < 9 {
        let mut y = 0;
        while y < 9 {
            let a = (x % 3 + y % 3) % 3;
            let b = (x / 3 + y / 3) % 3;
            t[x][y] = (a + 3 * b) as u8;
            y += 1;
        }
        x += 1;
    }
    t
};

// x̄ = x³
const CONJ_TABLE: [u8; 9] = {
    let mut t = [0u8; 9];
    let mut x = 0;
    while x < 9 {
        let sq = mul_index(x as u8, x as u8);
        t[x] = mul_index(sq, x as u8);
        x += 1;
    }
    t
};

// tr(x) = x + x̄; the ω-component of the sum is always zero.
const TRACE_TABLE: [u8; 9] = {
    let mut t = [0u8; 9];
    let mut x = 0;
    while x < 9 {
        let s = ADD_TABLE[x][CONJ_TABLE[x] as usize];
        t[x] = s % 3;
        x += 1;
    }
    t
};

/// An element `a + bω` of GF(9).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gf9(u8);

const TOKENS: [&str; 9] = ["0", "1", "2", "w", "1+w", "2+w", "2w", "1+2w", "2+2w"];

impl Gf9 {
    pub const ZERO: Gf9 = Gf9(0);
    pub const ONE: Gf9 = Gf9(1);
    pub const OMEGA: Gf9 = Gf9(3);

    pub const fn new(a: Gf3, b: Gf3) -> Self {
        Gf9(a.0 + 3 * b.0)
    }

    pub fn from_index(index: u8) -> Self {
        assert!(index < 9, "GF(9) index out of range: {index}");
        Gf9(index)
    }

    /// Index `a + 3b`, in `0..9`.
    pub const fn index(self) -> u8 {
        self.0
    }

    pub const fn a(self) -> Gf3 {
        Gf3(self.0 % 3)
    }

    pub const fn b(self) -> Gf3 {
        Gf3(self.0 / 3)
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub fn conj(self) -> Gf9 {
        Gf9(CONJ_TABLE[self.0 as usize])
    }

    pub fn trace(self) -> Gf3 {
        Gf3(TRACE_TABLE[self.0 as usize])
    }

    pub fn pow(self, mut k: u32) -> Gf9 {
        let mut base = self;
        let mut acc = Gf9::ONE;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            k >>= 1;
        }
        acc
    }

    pub fn scale(self, s: Gf3) -> Gf9 {
        Gf9::new(self.a() * s, self.b() * s)
    }

    /// All nine elements in index order.
    pub fn all() -> impl Iterator<Item = Gf9> {
        (0..9).map(Gf9)
    }

    /// The eight nonzero elements in index order.
    pub fn nonzero() -> impl Iterator<Item = Gf9> {
        (1..9).map(Gf9)
    }

    pub fn token(self) -> &'static str {
        TOKENS[self.0 as usize]
    }
}

impl Add for Gf9 {
    type Output = Gf9;
    fn add(self, rhs: Gf9) -> Gf9 {
        Gf9(ADD_TABLE[self.0 as usize][rhs.0 as usize])
    }
}

impl AddAssign for Gf9 {
    fn add_assign(&mut self, rhs: Gf9) {
        *self = *self + rhs;
    }
}

impl Neg for Gf9 {
    type Output = Gf9;
    fn neg(self) -> Gf9 {
        Gf9::new(-self.a(), -self.b())
    }
}

impl Sub for Gf9 {
    type Output = Gf9;
    fn sub(self, rhs: Gf9) -> Gf9 {
        self + (-rhs)
    }
}

impl Mul for Gf9 {
    type Output = Gf9;
    fn mul(self, rhs: Gf9) -> Gf9 {
        Gf9(MUL_TABLE[self.0 as usize][rhs.0 as usize])
    }
}

impl From<Gf3> for Gf9 {
    fn from(x: Gf3) -> Gf9 {
        Gf9(x.0)
    }
}

impl fmt::Display for Gf9 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for Gf9 {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        TOKENS
            .iter()
            .position(|t| *t == s)
            .map(|i| Gf9(i as u8))
            .ok_or_else(|| Error::InvalidToken(s.to_string()))
    }
}

pub fn gf9_mul(x: Gf9, y: Gf9) -> Gf9 {
    x * y
}

pub fn gf9_conj(x: Gf9) -> Gf9 {
    x.conj()
}

pub fn gf9_trace(x: Gf9) -> Gf3 {
    x.trace()
}

/// The Hermitian trace inner product `tr(ω² u·v̄)`.
pub fn hermitian_trace_ip(u: &[Gf9], v: &[Gf9]) -> Result<Gf3, Error> {
    if u.len() != v.len() {
        return Err(Error::LengthMismatch(u.len(), v.len()));
    }
    let dot = u
        .iter()
        .zip(v)
        .fold(Gf9::ZERO, |acc, (&x, &y)| acc + x * y.conj());
    Ok((Gf9::OMEGA.pow(2) * dot).trace())
}

/// A 2×2 matrix over GF(3) with determinant one, acting on `a + bω` as the
/// column vector `(a, b)ᵀ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Sp2 {
    m: [Gf3; 4],
}

impl Sp2 {
    pub const IDENTITY: Sp2 = Sp2 {
        m: [Gf3::ONE, Gf3::ZERO, Gf3::ZERO, Gf3::ONE],
    };

    /// Returns `None` unless the determinant is one.
    pub fn new(m00: Gf3, m01: Gf3, m10: Gf3, m11: Gf3) -> Option<Sp2> {
        (m00 * m11 - m01 * m10 == Gf3::ONE).then_some(Sp2 {
            m: [m00, m01, m10, m11],
        })
    }

    pub fn entries(&self) -> [Gf3; 4] {
        self.m
    }

    pub fn apply(&self, c: Gf9) -> Gf9 {
        let [m00, m01, m10, m11] = self.m;
        let (a, b) = (c.a(), c.b());
        Gf9::new(m00 * a + m01 * b, m10 * a + m11 * b)
    }

    /// Matrix product `self · rhs` (apply `rhs` first).
    pub fn compose(&self, rhs: &Sp2) -> Sp2 {
        let [a, b, c, d] = self.m;
        let [e, f, g, h] = rhs.m;
        Sp2 {
            m: [a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h],
        }
    }

    pub fn inverse(&self) -> Sp2 {
        let [a, b, c, d] = self.m;
        Sp2 { m: [d, -b, -c, a] }
    }

    /// Finds the group element inducing `map` on the nonzero elements,
    /// where `map[i]` is the image of `Gf9::from_index(i + 1)`.
    pub fn from_action(map: &[Gf9; 8]) -> Option<Sp2> {
        sp2_enumerate()
            .iter()
            .copied()
            .find(|s| Gf9::nonzero().all(|x| s.apply(x) == map[x.index() as usize - 1]))
    }
}

/// All 24 elements of Sp2(3), ordered lexicographically by `(m00, m01, m10, m11)`.
pub fn sp2_enumerate() -> &'static [Sp2; 24] {
    static ELEMENTS: OnceLock<[Sp2; 24]> = OnceLock::new();
    ELEMENTS.get_or_init(|| {
        let mut out = Vec::with_capacity(24);
        for m00 in Gf3::all() {
            for m01 in Gf3::all() {
                for m10 in Gf3::all() {
                    for m11 in Gf3::all() {
                        if let Some(s) = Sp2::new(m00, m01, m10, m11) {
                            out.push(s);
                        }
                    }
                }
            }
        }
        out.try_into().expect("Sp2(3) has exactly 24 elements")
    })
}

pub fn sp2_apply(m: &Sp2, c: Gf9) -> Gf9 {
    m.apply(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w() -> Gf9 {
        Gf9::OMEGA
    }

    #[test]
    fn tables_match_defining_relation() {
        assert_eq!(w() * w(), Gf9::ONE + w());
        for x in Gf9::all() {
            assert_eq!(x * Gf9::ZERO, Gf9::ZERO);
            assert_eq!(x * Gf9::ONE, x);
        }
        // ω generates the multiplicative group
        let powers: Vec<Gf9> = (0..8).map(|k| w().pow(k)).collect();
        let mut sorted = powers.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), 8);
        assert_eq!(w().pow(4), Gf9::from(Gf3::TWO));
        assert_eq!(w().pow(3) * w(), Gf9::from(Gf3::TWO));
        assert_eq!(w().pow(8), Gf9::ONE);
    }

    #[test]
    fn field_axioms_exhaustive() {
        for x in Gf9::all() {
            for y in Gf9::all() {
                assert_eq!(x * y, y * x);
                assert_eq!((x * y).conj(), x.conj() * y.conj());
                for z in Gf9::all() {
                    assert_eq!((x * y) * z, x * (y * z));
                    assert_eq!(x * (y + z), x * y + x * z);
                }
            }
        }
    }

    #[test]
    fn conjugation_and_trace() {
        assert_eq!(Gf9::ONE.conj(), Gf9::ONE);
        assert_eq!(w().conj(), "1+2w".parse().unwrap());
        for x in Gf9::all() {
            assert_eq!(x.conj().conj(), x);
            assert_eq!(Gf9::from(x.trace()), x + x.conj());
        }
        assert_eq!(Gf9::ZERO.trace(), Gf3::ZERO);
        assert_eq!(w().trace(), Gf3::ONE);
        assert_eq!(w().pow(2).trace(), Gf3::ZERO);
    }

    #[test]
    fn inner_product_examples() {
        let z = [Gf9::ZERO; 3];
        let v = [w(), Gf9::ONE, w().pow(5)];
        assert_eq!(hermitian_trace_ip(&z, &v).unwrap(), Gf3::ZERO);
        assert_eq!(hermitian_trace_ip(&[w()], &[w()]).unwrap(), Gf3::ZERO);
        assert_eq!(hermitian_trace_ip(&[Gf9::ONE], &[w()]).unwrap(), Gf3::TWO);
        assert!(matches!(
            hermitian_trace_ip(&[w()], &[w(), w()]),
            Err(Error::LengthMismatch(1, 2))
        ));
    }

    #[test]
    fn inner_product_is_alternating() {
        for x in Gf9::all() {
            for y in Gf9::all() {
                let xy = hermitian_trace_ip(&[x], &[y]).unwrap();
                let yx = hermitian_trace_ip(&[y], &[x]).unwrap();
                assert_eq!(xy, -yx);
            }
        }
    }

    #[test]
    fn sp2_group_structure() {
        let all = sp2_enumerate();
        assert_eq!(all.len(), 24);
        assert!(all.contains(&Sp2::IDENTITY));
        assert!(all.windows(2).all(|p| p[0] < p[1]));
        for s in all {
            for t in all {
                assert!(all.contains(&s.compose(t)));
            }
            assert_eq!(s.compose(&s.inverse()), Sp2::IDENTITY);
        }
        // the two generators named for the group are members
        let g1 = Sp2::new(Gf3::ONE, Gf3::ONE, Gf3::ONE, Gf3::TWO).unwrap();
        let g2 = Sp2::new(Gf3::ONE, Gf3::ONE, Gf3::ZERO, Gf3::ONE).unwrap();
        assert!(all.contains(&g1) && all.contains(&g2));
    }

    #[test]
    fn sp2_actions() {
        for c in Gf9::all() {
            assert_eq!(Sp2::IDENTITY.apply(c), c);
        }
        for y in Gf3::all() {
            let m = Sp2::new(Gf3::ONE, y, Gf3::ZERO, Gf3::ONE).unwrap();
            for c in Gf9::all() {
                assert_eq!(m.apply(c), Gf9::new(c.a() + y * c.b(), c.b()));
            }
        }
        let rot = Sp2::new(Gf3::ZERO, Gf3::TWO, Gf3::ONE, Gf3::ZERO).unwrap();
        for c in Gf9::all() {
            assert_eq!(rot.apply(c), w() * c.conj());
        }
    }

    #[test]
    fn sp2_preserves_form_and_acts_faithfully() {
        for s in sp2_enumerate() {
            for u in Gf9::all() {
                for v in Gf9::all() {
                    assert_eq!(
                        hermitian_trace_ip(&[s.apply(u)], &[s.apply(v)]).unwrap(),
                        hermitian_trace_ip(&[u], &[v]).unwrap()
                    );
                }
            }
            let fixes_all = Gf9::nonzero().all(|x| s.apply(x) == x);
            assert_eq!(fixes_all, *s == Sp2::IDENTITY);
        }
    }

    #[test]
    fn tokens_round_trip() {
        for x in Gf9::all() {
            assert_eq!(x.token().parse::<Gf9>().unwrap(), x);
        }
        assert_eq!("2+w".parse::<Gf9>().unwrap(), w().pow(7));
        assert!("W".parse::<Gf9>().is_err());
        assert!("w+1".parse::<Gf9>().is_err());
    }
}
