//! The five-letter alphabet, weights, and the defining 5x5 realization of spo(4|1).
//!
//! Matrix indices are 1-based in the public constructors (matching the usual
//! `E_ij` notation) and 0-based internally. Indices 1..=4 are even, 5 is odd.
//! Letters name a signed standard basis vector of the natural module:
//! `1 = e1`, `2 = e2`, `0 = e5`, `-2 = -e4`, `-1 = e3`.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::Coefficient;

/// A letter of the alphabet `1 < 2 < 0 < -2 < -1`. The derived order is the alphabet order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[repr(u8)]
pub enum Letter {
    One = 0,
    Two = 1,
    Zero = 2,
    TwoBar = 3,
    OneBar = 4,
}

impl Letter {
    pub const ALL: [Letter; 5] = [
        Letter::One,
        Letter::Two,
        Letter::Zero,
        Letter::TwoBar,
        Letter::OneBar,
    ];

    pub fn rank(self) -> u8 {
        self as u8
    }

    pub fn from_rank(rank: u8) -> Option<Letter> {
        Letter::ALL.get(rank as usize).copied()
    }

    /// 1 for the odd letter `0`, else 0.
    pub fn parity(self) -> u8 {
        u8::from(self == Letter::Zero)
    }

    pub fn is_odd(self) -> bool {
        self == Letter::Zero
    }

    pub fn weight(self) -> Weight {
        match self {
            Letter::One => Weight::new(1, 0),
            Letter::Two => Weight::new(0, 1),
            Letter::Zero => Weight::new(0, 0),
            Letter::TwoBar => Weight::new(0, -1),
            Letter::OneBar => Weight::new(-1, 0),
        }
    }

    /// Integer code used by every file format: bars are negative.
    pub fn code(self) -> i8 {
        match self {
            Letter::One => 1,
            Letter::Two => 2,
            Letter::Zero => 0,
            Letter::TwoBar => -2,
            Letter::OneBar => -1,
        }
    }

    pub fn from_code(code: i64) -> Result<Letter> {
        match code {
            1 => Ok(Letter::One),
            2 => Ok(Letter::Two),
            0 => Ok(Letter::Zero),
            -2 => Ok(Letter::TwoBar),
            -1 => Ok(Letter::OneBar),
            other => Err(Error::Parse(format!("not a letter code: {other}"))),
        }
    }

    /// The letter as `(sign, 0-based index)` of a standard basis vector of C^{4|1}.
    pub fn standard_vector(self) -> (i64, usize) {
        match self {
            Letter::One => (1, 0),
            Letter::Two => (1, 1),
            Letter::Zero => (1, 4),
            Letter::TwoBar => (-1, 3),
            Letter::OneBar => (1, 2),
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.code())
    }
}

impl FromStr for Letter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Letter> {
        let code: i64 = s
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("not a letter: {s:?}")))?;
        Letter::from_code(code)
    }
}

impl Serialize for Letter {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_i8(self.code())
    }
}

impl<'de> Deserialize<'de> for Letter {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let code = i64::deserialize(deserializer)?;
        Letter::from_code(code).map_err(serde::de::Error::custom)
    }
}

/// A weight `c1*eps1 + c2*eps2`.
#[derive(
    Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
pub struct Weight {
    pub c1: i64,
    pub c2: i64,
}

impl Weight {
    pub const ZERO: Weight = Weight { c1: 0, c2: 0 };

    pub const fn new(c1: i64, c2: i64) -> Weight {
        Weight { c1, c2 }
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, rhs: Weight) -> Weight {
        Weight::new(self.c1 + rhs.c1, self.c2 + rhs.c2)
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(self, rhs: Weight) -> Weight {
        Weight::new(self.c1 - rhs.c1, self.c2 - rhs.c2)
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight::new(-self.c1, -self.c2)
    }
}

impl std::iter::Sum for Weight {
    fn sum<I: Iterator<Item = Weight>>(iter: I) -> Weight {
        iter.fold(Weight::ZERO, Add::add)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.c1, self.c2)
    }
}

/// A two-row partition `(l1, l2)`, i.e. the highest weight `l1*eps1 + l2*eps2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Shape {
    l1: u32,
    l2: u32,
}

impl Shape {
    pub fn new(l1: u32, l2: u32) -> Result<Shape> {
        if l1 < l2 {
            return Err(Error::InvalidShape {
                l1: l1.into(),
                l2: l2.into(),
            });
        }
        Ok(Shape { l1, l2 })
    }

    /// The shape of `m1*omega1 + 2*m2*omega2`.
    pub fn from_m(m1: u32, m2: u32) -> Shape {
        Shape {
            l1: m1 + m2,
            l2: m2,
        }
    }

    pub fn l1(self) -> u32 {
        self.l1
    }

    pub fn l2(self) -> u32 {
        self.l2
    }

    pub fn m1(self) -> u32 {
        self.l1 - self.l2
    }

    pub fn m2(self) -> u32 {
        self.l2
    }

    pub fn highest_weight(self) -> Weight {
        Weight::new(self.l1.into(), self.l2.into())
    }

    /// Dimension of the ambient space `V^{(x) m1} (x) (wedge^2 V)^{(x) m2}`, i.e. `5^m1 * 11^m2`.
    pub fn ambient_dimension(self) -> u128 {
        5u128.pow(self.m1()) * 11u128.pow(self.m2())
    }

    /// All shapes with `m1 <= max_m1` and `m2 <= max_m2`, ordered by `(m1, m2)`.
    pub fn sweep(max_m1: u32, max_m2: u32) -> Vec<Shape> {
        (0..=max_m1)
            .flat_map(|m1| (0..=max_m2).map(move |m2| Shape::from_m(m1, m2)))
            .collect()
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.l1, self.l2)
    }
}

impl FromStr for Shape {
    type Err = Error;

    /// Parses `"l1,l2"`.
    fn from_str(s: &str) -> Result<Shape> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        let [a, b] = parts.as_slice() else {
            return Err(Error::Parse(format!("shape must be L1,L2: {s:?}")));
        };
        let parse = |x: &str| {
            x.parse::<i64>()
                .map_err(|_| Error::Parse(format!("not an integer: {x:?}")))
        };
        let (l1, l2) = (parse(a)?, parse(b)?);
        if l1 < l2 || l2 < 0 || l1 > i64::from(u32::MAX) {
            return Err(Error::InvalidShape { l1, l2 });
        }
        Shape::new(l1 as u32, l2 as u32)
    }
}

impl Serialize for Shape {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        [self.l1, self.l2].serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Shape {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let [l1, l2] = <[u32; 2]>::deserialize(deserializer)?;
        Shape::new(l1, l2).map_err(serde::de::Error::custom)
    }
}

/// The distinguished generators: simple root vectors and the Cartan basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    E1,
    E2,
    F1,
    F2,
    H1,
    H2,
}

impl Generator {
    pub const ALL: [Generator; 6] = [
        Generator::E1,
        Generator::E2,
        Generator::F1,
        Generator::F2,
        Generator::H1,
        Generator::H2,
    ];

    /// The four root vectors, which generate the algebra.
    pub const ROOT_VECTORS: [Generator; 4] =
        [Generator::E1, Generator::E2, Generator::F1, Generator::F2];

    pub fn parity(self) -> u8 {
        u8::from(self.is_odd())
    }

    pub fn is_odd(self) -> bool {
        matches!(self, Generator::E2 | Generator::F2)
    }

    /// The weight by which the generator shifts weight vectors.
    pub fn root(self) -> Weight {
        match self {
            Generator::E1 => Weight::new(1, -1),
            Generator::F1 => Weight::new(-1, 1),
            Generator::E2 => Weight::new(0, 1),
            Generator::F2 => Weight::new(0, -1),
            Generator::H1 | Generator::H2 => Weight::ZERO,
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for Generator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Generator> {
        Generator::ALL
            .into_iter()
            .find(|g| g.to_string().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::Parse(format!("unknown generator {s:?}")))
    }
}

/// Parity of the 0-based matrix index.
fn index_parity(i: usize) -> u8 {
    u8::from(i == 4)
}

/// A 5x5 matrix over `T`, graded with the last index odd.
#[derive(Clone, Debug, PartialEq)]
pub struct SuperMatrix<T> {
    entries: [[T; 5]; 5],
}

impl<T: Coefficient> SuperMatrix<T> {
    pub fn zero() -> Self {
        SuperMatrix {
            entries: std::array::from_fn(|_| std::array::from_fn(|_| T::zero())),
        }
    }

    /// The matrix unit `E_ij`, 1-based.
    pub fn unit(i: usize, j: usize) -> Self {
        assert!(
            (1..=5).contains(&i) && (1..=5).contains(&j),
            "E_{i}{j} out of range"
        );
        let mut m = Self::zero();
        m.entries[i - 1][j - 1] = T::one();
        m
    }

    pub fn from_entries(entries: [[T; 5]; 5]) -> Self {
        SuperMatrix { entries }
    }

    pub fn entries(&self) -> &[[T; 5]; 5] {
        &self.entries
    }

    /// Entry at 1-based position.
    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.entries[i - 1][j - 1]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(T::is_zero)
    }

    /// `Some(parity)` when all non-zero entries share a parity; the zero matrix is even.
    pub fn parity(&self) -> Option<u8> {
        let mut seen = None;
        for (i, row) in self.entries.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                let p = index_parity(i) ^ index_parity(j);
                match seen {
                    None => seen = Some(p),
                    Some(q) if q != p => return None,
                    _ => {}
                }
            }
        }
        Some(seen.unwrap_or(0))
    }

    pub fn scale(&self, c: &T) -> Self {
        SuperMatrix {
            entries: std::array::from_fn(|i| {
                std::array::from_fn(|j| self.entries[i][j].clone() * c.clone())
            }),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        SuperMatrix {
            entries: std::array::from_fn(|i| {
                std::array::from_fn(|j| {
                    (0..5).fold(T::zero(), |acc, k| {
                        acc + self.entries[i][k].clone() * rhs.entries[k][j].clone()
                    })
                })
            }),
        }
    }

    pub fn apply(&self, v: &[T; 5]) -> [T; 5] {
        std::array::from_fn(|i| {
            (0..5).fold(T::zero(), |acc, k| {
                acc + self.entries[i][k].clone() * v[k].clone()
            })
        })
    }

    pub fn diagonal(&self) -> [T; 5] {
        std::array::from_fn(|i| self.entries[i][i].clone())
    }
}

impl<T: Coefficient> Add for &SuperMatrix<T> {
    type Output = SuperMatrix<T>;
    fn add(self, rhs: &SuperMatrix<T>) -> SuperMatrix<T> {
        SuperMatrix {
            entries: std::array::from_fn(|i| {
                std::array::from_fn(|j| self.entries[i][j].clone() + rhs.entries[i][j].clone())
            }),
        }
    }
}

impl<T: Coefficient> Sub for &SuperMatrix<T> {
    type Output = SuperMatrix<T>;
    fn sub(self, rhs: &SuperMatrix<T>) -> SuperMatrix<T> {
        SuperMatrix {
            entries: std::array::from_fn(|i| {
                std::array::from_fn(|j| self.entries[i][j].clone() - rhs.entries[i][j].clone())
            }),
        }
    }
}

impl<T: Coefficient> fmt::Display for SuperMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = self
            .entries
            .iter()
            .map(|row| row.iter().map(ToString::to_string).collect())
            .collect();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        for row in cells {
            let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// The matrix of a generator in the defining realization.
pub fn generator_matrix<T: Coefficient>(g: Generator) -> SuperMatrix<T> {
    let e = SuperMatrix::<T>::unit;
    match g {
        Generator::E1 => &e(1, 2) - &e(4, 3),
        Generator::E2 => &e(2, 5) + &e(5, 4),
        Generator::F1 => &e(2, 1) - &e(3, 4),
        Generator::F2 => &e(5, 2) - &e(4, 5),
        Generator::H1 => &e(1, 1) - &e(3, 3),
        Generator::H2 => &e(2, 2) - &e(4, 4),
    }
}

/// `AB - (-1)^{|A||B|} BA` for homogeneous `A`, `B`.
pub fn supercommutator<T: Coefficient>(
    a: &SuperMatrix<T>,
    b: &SuperMatrix<T>,
) -> Result<SuperMatrix<T>> {
    let pa = a.parity().ok_or(Error::NonHomogeneous)?;
    let pb = b.parity().ok_or(Error::NonHomogeneous)?;
    let ab = a.mul(b);
    let ba = b.mul(a);
    Ok(if pa & pb == 1 { &ab + &ba } else { &ab - &ba })
}

/// Whether `m` lies in the 5x5 realization of spo(4|1).
pub fn is_spo_matrix<T: Coefficient>(m: &SuperMatrix<T>) -> bool {
    let x = |i: usize, j: usize| m.entries[i][j].clone();
    let (p1, p2, q1, q2) = (x(0, 4), x(1, 4), x(2, 4), x(3, 4));
    // b and c symmetric
    x(0, 3) == x(1, 2)
        && x(2, 1) == x(3, 0)
        // lower-right block is -a^T
        && x(2, 2) == -x(0, 0)
        && x(2, 3) == -x(1, 0)
        && x(3, 2) == -x(0, 1)
        && x(3, 3) == -x(1, 1)
        // odd row and column coupling
        && x(4, 4).is_zero()
        && x(4, 0) == -q1
        && x(4, 1) == -q2
        && x(4, 2) == p1
        && x(4, 3) == p2
}

/// Action of a root vector on a letter: `Some((c, y))` means `g . x = c * y`.
pub fn act_letter(g: Generator, x: Letter) -> Result<Option<(i64, Letter)>> {
    use Letter::*;
    Ok(match (g, x) {
        (Generator::F1, One) => Some((1, Two)),
        (Generator::F1, TwoBar) => Some((1, OneBar)),
        (Generator::F2, Two) => Some((1, Zero)),
        (Generator::F2, Zero) => Some((1, TwoBar)),
        (Generator::E1, Two) => Some((1, One)),
        (Generator::E1, OneBar) => Some((1, TwoBar)),
        (Generator::E2, Zero) => Some((1, Two)),
        (Generator::E2, TwoBar) => Some((-1, Zero)),
        (Generator::H1 | Generator::H2, _) => return Err(Error::CartanOnLetter(g)),
        _ => None,
    })
}

/// The letter's column vector in C^{4|1}.
pub fn letter_column<T: Coefficient>(x: Letter) -> [T; 5] {
    let (s, i) = x.standard_vector();
    std::array::from_fn(|k| {
        if k == i {
            T::from_i64_exact(s)
        } else {
            T::zero()
        }
    })
}

/// Reads a column vector back as `c * letter`, if it is a multiple of a single letter.
pub fn column_as_letter<T: Coefficient>(v: &[T; 5]) -> Option<(T, Letter)> {
    let mut support = v.iter().enumerate().filter(|(_, c)| !c.is_zero());
    let (i, c) = support.next()?;
    if support.next().is_some() {
        return None;
    }
    let letter = Letter::ALL
        .into_iter()
        .find(|l| l.standard_vector().1 == i)?;
    let s = T::from_i64_exact(letter.standard_vector().0);
    Some((c.clone() * s, letter))
}
