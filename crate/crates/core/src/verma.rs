//! Exponent vectors of Verma monomials `f1^b4 f2^b3 f1^b2 f2^b1 v`, and their
//! correspondence with KN tableaux.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::algebra::{Letter, Shape, Weight};
use crate::error::{Error, Result};
use crate::tableau::{enumerate_kn, is_kn, Tableau};

/// Exponents `(b1, b2, b3, b4)`; `b1` is applied first.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BVector {
    pub b1: u32,
    pub b2: u32,
    pub b3: u32,
    pub b4: u32,
}

impl BVector {
    pub const fn new(b1: u32, b2: u32, b3: u32, b4: u32) -> BVector {
        BVector { b1, b2, b3, b4 }
    }

    pub fn to_array(self) -> [u32; 4] {
        [self.b1, self.b2, self.b3, self.b4]
    }
}

impl From<[u32; 4]> for BVector {
    fn from([b1, b2, b3, b4]: [u32; 4]) -> BVector {
        BVector { b1, b2, b3, b4 }
    }
}

impl fmt::Display for BVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.b1, self.b2, self.b3, self.b4)
    }
}

impl FromStr for BVector {
    type Err = Error;

    /// Parses `"b1,b2,b3,b4"`.
    fn from_str(s: &str) -> Result<BVector> {
        let parts = s
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("not a non-negative integer: {x:?}")))
            })
            .collect::<Result<Vec<u32>>>()?;
        let arr: [u32; 4] = parts
            .try_into()
            .map_err(|_| Error::Parse(format!("b must have four entries: {s:?}")))?;
        Ok(arr.into())
    }
}

impl Serialize for BVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_array().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for BVector {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        <[u32; 4]>::deserialize(deserializer).map(BVector::from)
    }
}

/// The defining inequalities of a Verma vector for the shape.
///
/// `b4 <= b3/2` is tested as `2*b4 <= b3`.
pub fn satisfies_inequalities(b: BVector, s: Shape) -> bool {
    let (m1, m2) = (u64::from(s.m1()), u64::from(s.m2()));
    let [b1, b2, b3, b4] = b.to_array().map(u64::from);
    b1 <= 2 * m2 && b2 <= m1 + b1 && b3 <= (b2 + m1).min(2 * b2) && b4 <= m1 && 2 * b4 <= b3
}

/// All valid exponent vectors, in lexicographic order.
pub fn enumerate_b(s: Shape) -> Vec<BVector> {
    let (m1, m2) = (s.m1(), s.m2());
    let mut out = Vec::new();
    for b1 in 0..=2 * m2 {
        for b2 in 0..=m1 + b1 {
            for b3 in 0..=(b2 + m1).min(2 * b2) {
                for b4 in 0..=m1.min(b3 / 2) {
                    out.push(BVector::new(b1, b2, b3, b4));
                }
            }
        }
    }
    out
}

/// The counting map from KN tableaux to exponent vectors.
pub fn psi(t: &Tableau) -> Result<BVector> {
    if !is_kn(t) {
        return Err(Error::NotKn);
    }
    Ok(psi_counts(t))
}

fn psi_counts(t: &Tableau) -> BVector {
    let count =
        |row: &[Letter], f: fn(Letter) -> bool| row.iter().filter(|&&x| f(x)).count() as u32;
    let (r1, r2) = (t.row1(), t.row2());
    let at_least_two_bar = |x: Letter| x >= Letter::TwoBar;
    let is_zero = |x: Letter| x == Letter::Zero;
    BVector {
        b1: 2 * count(r2, at_least_two_bar) + count(r2, is_zero),
        b2: count(r1, |x| x > Letter::One) + count(r2, |x| x > Letter::TwoBar),
        b3: 2 * count(r1, at_least_two_bar) + count(r1, is_zero),
        b4: count(r1, |x| x > Letter::TwoBar),
    }
}

/// `(m1+m2-b2-b4, m2-b1+b2-b3+b4)`.
pub fn verma_weight(b: BVector, s: Shape) -> Weight {
    let [b1, b2, b3, b4] = b.to_array().map(i64::from);
    let (m1, m2) = (i64::from(s.m1()), i64::from(s.m2()));
    Weight::new(m1 + m2 - b2 - b4, m2 - b1 + b2 - b3 + b4)
}

/// Preimages of every exponent vector under [`psi`] for one shape.
#[derive(Clone, Debug)]
pub struct KnCorrespondence {
    shape: Shape,
    preimages: BTreeMap<BVector, Vec<Tableau>>,
    tableaux: usize,
}

impl KnCorrespondence {
    pub fn new(shape: Shape) -> KnCorrespondence {
        let kn = enumerate_kn(shape);
        let tableaux = kn.len();
        let mut preimages: BTreeMap<BVector, Vec<Tableau>> = BTreeMap::new();
        for t in kn {
            preimages.entry(psi_counts(&t)).or_default().push(t);
        }
        KnCorrespondence {
            shape,
            preimages,
            tableaux,
        }
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    pub fn kn_count(&self) -> usize {
        self.tableaux
    }

    /// The unique KN tableau mapping to `b`.
    pub fn tableau(&self, b: BVector) -> Result<&Tableau> {
        match self.preimages.get(&b).map(Vec::as_slice) {
            Some([t]) => Ok(t),
            None | Some([]) => Err(Error::NoPreimage {
                b,
                shape: self.shape,
            }),
            Some(many) => Err(Error::MultiplePreimages {
                b,
                shape: self.shape,
                count: many.len(),
            }),
        }
    }

    /// Images hit by more than one tableau.
    pub fn collisions(&self) -> impl Iterator<Item = (BVector, &[Tableau])> + '_ {
        self.preimages
            .iter()
            .filter(|(_, ts)| ts.len() > 1)
            .map(|(b, ts)| (*b, ts.as_slice()))
    }

    /// The image of psi, sorted.
    pub fn image(&self) -> impl Iterator<Item = BVector> + '_ {
        self.preimages.keys().copied()
    }
}

/// The KN tableau corresponding to `b`, found by exhaustive search.
pub fn tableau_of_b(b: BVector, s: Shape) -> Result<Tableau> {
    if !satisfies_inequalities(b, s) {
        return Err(Error::NoPreimage { b, shape: s });
    }
    KnCorrespondence::new(s).tableau(b).cloned()
}
