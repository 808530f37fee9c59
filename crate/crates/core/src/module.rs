//! The tensor space `W = V^{(x) m1} (x) (wedge^2 V)^{(x) m2}` with exact coefficients.
//!
//! A basis element is stored as a flat word of letters: the `m1` single
//! factors, then each wedge pair `(lo, hi)` in canonical order. This word is
//! exactly the scan word of the corresponding column-strict tableau, so the
//! derived order on [`BasisIndex`] is the tableau order.
//!
//! Generators act as super-derivations. Acting on the letter at flat position
//! `p` picks up `(-1)^{|g| * (parity of letters before p)}`; inside a wedge the
//! result is renormalized with `x ^ y = -(-1)^{|x||y|} y ^ x`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::{act_letter, letter_column, Generator, Letter, Shape, Weight};
use crate::error::{Error, Result};
use crate::scalar::{factorial, Coefficient};
use crate::tableau::{is_cst, Tableau};
use crate::verma::BVector;

/// A canonical basis element `lo ^ hi` of the super exterior square.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WedgePair {
    lo: Letter,
    hi: Letter,
}

impl WedgePair {
    /// `lo < hi`, or `lo = hi = 0`.
    pub fn new(lo: Letter, hi: Letter) -> Option<WedgePair> {
        (lo < hi || (lo == Letter::Zero && hi == Letter::Zero)).then_some(WedgePair { lo, hi })
    }

    pub fn lo(self) -> Letter {
        self.lo
    }

    pub fn hi(self) -> Letter {
        self.hi
    }

    pub fn parity(self) -> u8 {
        self.lo.parity() ^ self.hi.parity()
    }
}

/// Rewrites `a ^ c` in canonical form; `None` when it vanishes.
pub fn canonical_wedge(a: Letter, c: Letter) -> Option<(i8, WedgePair)> {
    use std::cmp::Ordering::*;
    match a.cmp(&c) {
        Less => Some((1, WedgePair { lo: a, hi: c })),
        Greater => {
            let both_odd = a.is_odd() && c.is_odd();
            Some((if both_odd { 1 } else { -1 }, WedgePair { lo: c, hi: a }))
        }
        Equal if a == Letter::Zero => Some((1, WedgePair { lo: a, hi: a })),
        Equal => None,
    }
}

/// A basis element of `W`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BasisIndex {
    word: Vec<Letter>,
    m1: usize,
}

impl BasisIndex {
    pub fn new(singles: Vec<Letter>, pairs: &[WedgePair]) -> BasisIndex {
        let m1 = singles.len();
        let mut word = singles;
        for p in pairs {
            word.push(p.lo);
            word.push(p.hi);
        }
        BasisIndex { word, m1 }
    }

    /// Tensor factors of `V`, first factor first.
    pub fn singles(&self) -> &[Letter] {
        &self.word[..self.m1]
    }

    /// Wedge factors, first factor first.
    pub fn pairs(&self) -> impl Iterator<Item = WedgePair> + '_ {
        self.word[self.m1..]
            .chunks_exact(2)
            .map(|p| WedgePair { lo: p[0], hi: p[1] })
    }

    pub fn word(&self) -> &[Letter] {
        &self.word
    }

    pub fn shape(&self) -> Shape {
        let m2 = (self.word.len() - self.m1) / 2;
        Shape::from_m(self.m1 as u32, m2 as u32)
    }

    pub fn parity(&self) -> u8 {
        self.word.iter().fold(0, |p, l| p ^ l.parity())
    }
}

impl fmt::Display for BasisIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut factors: Vec<String> = self.singles().iter().map(ToString::to_string).collect();
        factors.extend(self.pairs().map(|p| format!("({}^{})", p.lo, p.hi)));
        if factors.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", factors.join("(x)"))
        }
    }
}

pub fn basis_index_weight(idx: &BasisIndex) -> Weight {
    idx.word.iter().map(|l| l.weight()).sum()
}

/// The basis element `u(Y)` of a column-strict tableau.
pub fn u_of_tableau(y: &Tableau) -> Result<BasisIndex> {
    if !is_cst(y) {
        return Err(Error::NotColumnStrict);
    }
    Ok(BasisIndex {
        word: y.scan_word(),
        m1: y.shape().m1() as usize,
    })
}

/// Inverse of [`u_of_tableau`].
pub fn tableau_of_index(idx: &BasisIndex) -> Tableau {
    Tableau::from_scan_word(idx.shape(), &idx.word).expect("index words have tableau length")
}

/// An element of `W` with exact coefficients and no stored zeros.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseVector<T> {
    shape: Shape,
    terms: BTreeMap<BasisIndex, T>,
}

impl<T: Coefficient> SparseVector<T> {
    pub fn zero(shape: Shape) -> Self {
        SparseVector {
            shape,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(idx: BasisIndex) -> Self {
        let shape = idx.shape();
        SparseVector {
            shape,
            terms: BTreeMap::from([(idx, T::one())]),
        }
    }

    /// Sums the given terms, dropping zeros.
    pub fn from_terms(shape: Shape, terms: impl IntoIterator<Item = (BasisIndex, T)>) -> Self {
        let mut v = Self::zero(shape);
        for (idx, c) in terms {
            v.add_term(idx, c);
        }
        v
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending basis order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&BasisIndex, &T)> + '_ {
        self.terms.iter()
    }

    pub fn coefficient(&self, idx: &BasisIndex) -> T {
        self.terms.get(idx).cloned().unwrap_or_else(T::zero)
    }

    pub fn add_term(&mut self, idx: BasisIndex, c: T) {
        debug_assert_eq!(idx.shape(), self.shape);
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(idx) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Self::zero(self.shape);
        }
        SparseVector {
            shape: self.shape,
            terms: self
                .terms
                .iter()
                .map(|(k, x)| (k.clone(), x.clone() * c.clone()))
                .collect(),
        }
    }

    /// `a*self - b*other`, merged in one pass.
    pub fn combine(&self, a: &T, other: &Self, b: &T) -> Self {
        let mut terms = BTreeMap::new();
        let mut left = self.terms.iter().peekable();
        let mut right = other.terms.iter().peekable();
        loop {
            let (idx, c) = match (left.peek(), right.peek()) {
                (None, None) => break,
                (Some(_), None) => {
                    let (k, x) = left.next().unwrap();
                    (k, x.clone() * a.clone())
                }
                (None, Some(_)) => {
                    let (k, y) = right.next().unwrap();
                    (k, -(y.clone() * b.clone()))
                }
                (Some((kl, _)), Some((kr, _))) => match kl.cmp(kr) {
                    std::cmp::Ordering::Less => {
                        let (k, x) = left.next().unwrap();
                        (k, x.clone() * a.clone())
                    }
                    std::cmp::Ordering::Greater => {
                        let (k, y) = right.next().unwrap();
                        (k, -(y.clone() * b.clone()))
                    }
                    std::cmp::Ordering::Equal => {
                        let (k, x) = left.next().unwrap();
                        let (_, y) = right.next().unwrap();
                        (k, x.clone() * a.clone() - y.clone() * b.clone())
                    }
                },
            };
            if !c.is_zero() {
                terms.insert(idx.clone(), c);
            }
        }
        SparseVector {
            shape: self.shape,
            terms,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.combine(&T::one(), other, &-T::one())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.combine(&T::one(), other, &T::one())
    }

    /// Divides every coefficient by their gcd.
    pub fn primitive(&self) -> Self {
        let content = self.terms.values().fold(T::zero(), |g, c| g.gcd_with(c));
        if content.is_zero() || content.is_one() {
            return self.clone();
        }
        SparseVector {
            shape: self.shape,
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.clone(), c.exact_div(&content)))
                .collect(),
        }
    }

    /// The common weight of all terms, if the support is weight-homogeneous and non-empty.
    pub fn weight(&self) -> Option<Weight> {
        let mut weights = self.terms.keys().map(basis_index_weight);
        let w = weights.next()?;
        weights.all(|x| x == w).then_some(w)
    }

    /// The largest basis element in the support and its coefficient.
    pub fn leading_term(&self) -> Option<(&T, &BasisIndex)> {
        self.terms.iter().next_back().map(|(k, c)| (c, k))
    }

    /// Converts coefficients into another ring.
    pub fn map_coefficients<U: Coefficient>(&self, f: impl Fn(&T) -> U) -> SparseVector<U> {
        SparseVector::from_terms(
            self.shape,
            self.terms.iter().map(|(k, c)| (k.clone(), f(c))),
        )
    }
}

impl<T: Coefficient> fmt::Display for SparseVector<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(k, c)| format!("{c}*{k}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `eps_1^{(x) m1} (x) (eps_1 ^ eps_2)^{(x) m2}`.
pub fn highest_vector<T: Coefficient>(s: Shape) -> SparseVector<T> {
    let idx = u_of_tableau(&Tableau::highest(s)).expect("highest filling is column-strict");
    SparseVector::basis(idx)
}

/// The action of a generator on `W`.
pub fn apply_generator<T: Coefficient>(g: Generator, v: &SparseVector<T>) -> SparseVector<T> {
    let mut out = SparseVector::zero(v.shape);
    match g {
        Generator::H1 | Generator::H2 => {
            for (idx, c) in &v.terms {
                let w = basis_index_weight(idx);
                let eigen = if g == Generator::H1 { w.c1 } else { w.c2 };
                out.add_term(idx.clone(), c.clone() * T::from_i64_exact(eigen));
            }
            return out;
        }
        _ => {}
    }
    let odd = g.is_odd();
    for (idx, c) in &v.terms {
        let mut prefix_odd = false;
        for (p, &x) in idx.word.iter().enumerate() {
            if let Some((s, y)) = act_letter(g, x).expect("root vector") {
                let mut negative = (odd && prefix_odd) != (s < 0);
                let mut word = idx.word.clone();
                word[p] = y;
                let mut vanished = false;
                if p >= idx.m1 {
                    let q = idx.m1 + (p - idx.m1) / 2 * 2;
                    match canonical_wedge(word[q], word[q + 1]) {
                        Some((ws, pair)) => {
                            word[q] = pair.lo;
                            word[q + 1] = pair.hi;
                            negative ^= ws < 0;
                        }
                        None => vanished = true,
                    }
                }
                if !vanished {
                    let key = BasisIndex { word, m1: idx.m1 };
                    let coeff = if negative { -c.clone() } else { c.clone() };
                    out.add_term(key, coeff);
                }
            }
            prefix_odd ^= x.is_odd();
        }
    }
    out
}

/// `g^n . v`.
pub fn apply_power<T: Coefficient>(g: Generator, n: u32, v: &SparseVector<T>) -> SparseVector<T> {
    (0..n).fold(v.clone(), |acc, _| apply_generator(g, &acc))
}

/// `f1^b4 f2^b3 f1^b2 f2^b1 v_lambda`, for any exponents.
pub fn verma_vector<T: Coefficient>(b: BVector, s: Shape) -> SparseVector<T> {
    let v = apply_power(Generator::F2, b.b1, &highest_vector(s));
    let v = apply_power(Generator::F1, b.b2, &v);
    let v = apply_power(Generator::F2, b.b3, &v);
    apply_power(Generator::F1, b.b4, &v)
}

/// Verma vectors for `bs` (sorted lexicographically), sharing common prefixes.
pub fn verma_vectors<T: Coefficient>(bs: &[BVector], s: Shape) -> Vec<SparseVector<T>> {
    debug_assert!(bs.windows(2).all(|w| w[0] <= w[1]));
    let gens = [Generator::F2, Generator::F1, Generator::F2, Generator::F1];
    let root = highest_vector::<T>(s);
    // chain[i] is the vector after exponent blocks 0..=i of the previous b
    let mut chain: Vec<SparseVector<T>> = Vec::with_capacity(4);
    let mut prev: Option<[u32; 4]> = None;
    let mut out = Vec::with_capacity(bs.len());
    for &b in bs {
        let e = b.to_array();
        let start = match prev {
            Some(p) => (0..4).find(|&i| p[i] != e[i]).unwrap_or(4),
            None => 0,
        };
        for i in start..4 {
            let v = match prev {
                // same prefix and a larger exponent: keep applying
                Some(p) if i == start && p[i] <= e[i] => {
                    apply_power(gens[i], e[i] - p[i], &chain[i])
                }
                _ => {
                    let base = if i == 0 { &root } else { &chain[i - 1] };
                    apply_power(gens[i], e[i], base)
                }
            };
            if i < chain.len() {
                chain[i] = v;
            } else {
                chain.push(v);
            }
        }
        out.push(chain[3].clone());
        prev = Some(e);
    }
    out
}

/// The closed form of `f2^b1 v_lambda` as a sum over choices of wedge positions.
pub fn f2_power_closed_form<T: Coefficient>(s: Shape, b1: u32) -> Result<SparseVector<T>> {
    let m2 = s.m2();
    if b1 > 2 * m2 {
        return Err(Error::F2ExponentTooLarge { b1, max: 2 * m2 });
    }
    let k = (b1 / 2) as usize;
    let odd = b1 % 2 == 1;
    let m2 = m2 as usize;
    let singles = vec![Letter::One; s.m1() as usize];
    let pair = |hi| WedgePair {
        lo: Letter::One,
        hi,
    };
    let coeff: T = factorial(k as u64);
    let mut out = SparseVector::zero(s);
    for subset in k_subsets(m2, k) {
        let extra: Vec<Option<usize>> = if odd {
            (0..m2).filter(|j| !subset.contains(j)).map(Some).collect()
        } else {
            vec![None]
        };
        for j in extra {
            let pairs: Vec<WedgePair> = (0..m2)
                .map(|t| {
                    if subset.contains(&t) {
                        pair(Letter::TwoBar)
                    } else if Some(t) == j {
                        pair(Letter::Zero)
                    } else {
                        pair(Letter::Two)
                    }
                })
                .collect();
            out.add_term(BasisIndex::new(singles.clone(), &pairs), coeff.clone());
        }
    }
    Ok(out)
}

/// All `k`-element subsets of `0..n` in lexicographic order.
fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(0, n, k, &mut Vec::new(), &mut out);
    }
    out
}

/// `floor(b1/2)! * b2! * floor(b3/2)! * b4!`.
pub fn verma_leading_coefficient<T: Coefficient>(b: BVector) -> T {
    factorial::<T>(u64::from(b.b1 / 2))
        * factorial(u64::from(b.b2))
        * factorial(u64::from(b.b3 / 2))
        * factorial(u64::from(b.b4))
}

/// Coordinates of a vector of the natural module (shape `(1,0)`) in the standard basis.
pub fn natural_coordinates<T: Coefficient>(v: &SparseVector<T>) -> Result<[T; 5]> {
    let natural = Shape::from_m(1, 0);
    if v.shape != natural {
        return Err(Error::ShapeMismatch(v.shape, natural));
    }
    let mut out: [T; 5] = std::array::from_fn(|_| T::zero());
    for (idx, c) in &v.terms {
        let col: [T; 5] = letter_column(idx.word[0]);
        for (o, x) in out.iter_mut().zip(col) {
            *o = o.clone() + x * c.clone();
        }
    }
    Ok(out)
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    coeff: String,
    singles: Vec<Letter>,
    pairs: Vec<[Letter; 2]>,
}

#[derive(Serialize, Deserialize)]
struct VectorJson {
    shape: Shape,
    terms: Vec<TermJson>,
}

impl<T: Coefficient> SparseVector<T> {
    /// JSON with terms in descending basis order and decimal-string coefficients.
    pub fn to_json(&self) -> String {
        let doc = VectorJson {
            shape: self.shape,
            terms: self
                .terms
                .iter()
                .rev()
                .map(|(k, c)| TermJson {
                    coeff: c.to_string(),
                    singles: k.singles().to_vec(),
                    pairs: k.pairs().map(|p| [p.lo, p.hi]).collect(),
                })
                .collect(),
        };
        serde_json::to_string(&doc).expect("vector serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: VectorJson =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let shape = doc.shape;
        let mut terms = BTreeMap::new();
        for t in doc.terms {
            if t.singles.len() != shape.m1() as usize || t.pairs.len() != shape.m2() as usize {
                return Err(Error::Parse(format!("term does not fit shape {shape}")));
            }
            let pairs = t
                .pairs
                .iter()
                .map(|&[a, b]| {
                    WedgePair::new(a, b)
                        .ok_or_else(|| Error::Parse(format!("non-canonical pair [{a},{b}]")))
                })
                .collect::<Result<Vec<_>>>()?;
            let c: T = t
                .coeff
                .parse()
                .map_err(|_| Error::Parse(format!("bad coefficient {:?}", t.coeff)))?;
            if c.is_zero() {
                return Err(Error::Parse("zero coefficient stored".into()));
            }
            let idx = BasisIndex::new(t.singles, &pairs);
            if terms.insert(idx, c).is_some() {
                return Err(Error::Parse("repeated basis element".into()));
            }
        }
        Ok(SparseVector { shape, terms })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableau::{enumerate_cst, Tableau};
    use num_bigint::BigInt;

    type V = SparseVector<i64>;

    fn t(r1: &[i64], r2: &[i64]) -> Tableau {
        Tableau::from_codes(r1, r2).unwrap()
    }

    fn idx(r1: &[i64], r2: &[i64]) -> BasisIndex {
        u_of_tableau(&t(r1, r2)).unwrap()
    }

    fn l(code: i64) -> Letter {
        Letter::from_code(code).unwrap()
    }

    #[test]
    fn wedge_normal_form() {
        let z = Letter::Zero;
        assert_eq!(
            canonical_wedge(z, z),
            Some((1, WedgePair::new(z, z).unwrap()))
        );
        assert_eq!(
            canonical_wedge(l(2), l(1)),
            Some((-1, WedgePair::new(l(1), l(2)).unwrap()))
        );
        assert_eq!(
            canonical_wedge(l(-2), z),
            Some((-1, WedgePair::new(z, l(-2)).unwrap()))
        );
        assert_eq!(canonical_wedge(l(2), l(2)), None);
        assert_eq!(WedgePair::new(l(1), z).unwrap().parity(), 1);
        assert_eq!(WedgePair::new(z, z).unwrap().parity(), 0);
        assert_eq!(WedgePair::new(l(1), l(-2)).unwrap().parity(), 0);
    }

    #[test]
    fn u_examples() {
        let u = idx(&[1, 0, -1], &[2, 0]);
        assert_eq!(u.singles(), [l(-1)]);
        let pairs: Vec<(i8, i8)> = u.pairs().map(|p| (p.lo().code(), p.hi().code())).collect();
        assert_eq!(pairs, [(0, 0), (1, 2)]);
        let hv = u_of_tableau(&Tableau::highest(Shape::new(3, 2).unwrap())).unwrap();
        assert_eq!(hv.to_string(), "1(x)(1^2)(x)(1^2)");
        let empty = u_of_tableau(&Tableau::highest(Shape::from_m(0, 0))).unwrap();
        assert!(empty.word().is_empty());
        assert!(u_of_tableau(&t(&[2], &[1])).is_err());
    }

    #[test]
    fn u_is_an_order_isomorphism() {
        let s = Shape::from_m(1, 2);
        let list = enumerate_cst(s);
        let us: Vec<BasisIndex> = list.iter().map(|y| u_of_tableau(y).unwrap()).collect();
        assert!(us.windows(2).all(|w| w[0] < w[1]));
        for (y, u) in list.iter().zip(&us) {
            assert_eq!(&tableau_of_index(u), y);
            assert_eq!(basis_index_weight(u), crate::tableau::tableau_weight(y));
        }
    }

    #[test]
    fn highest_vectors() {
        let v: V = highest_vector(Shape::from_m(1, 0));
        assert_eq!(v.to_string(), "1*1");
        let v: V = highest_vector(Shape::from_m(0, 0));
        assert_eq!(v.to_string(), "1*1");
        assert_eq!(v.len(), 1);
        let v: V = highest_vector(Shape::from_m(0, 1));
        assert_eq!(v.to_string(), "1*(1^2)");
    }

    #[test]
    fn generator_examples() {
        let v: V = highest_vector(Shape::from_m(1, 0));
        assert_eq!(apply_generator(Generator::F1, &v), V::basis(idx(&[2], &[])));

        let s = Shape::from_m(0, 2);
        let v: V = highest_vector(s);
        let got = apply_power(Generator::F2, 2, &v);
        let want = V::from_terms(
            s,
            [(idx(&[1, 1], &[2, -2]), 1), (idx(&[1, 1], &[-2, 2]), 1)],
        );
        assert_eq!(got, want);

        for s in [
            Shape::from_m(1, 0),
            Shape::from_m(0, 1),
            Shape::from_m(1, 1),
        ] {
            let v: V = highest_vector(s);
            assert!(apply_generator(Generator::E1, &v).is_zero());
            assert!(apply_generator(Generator::E2, &v).is_zero());
            let w = s.highest_weight();
            assert_eq!(apply_generator(Generator::H1, &v), v.scale(&w.c1));
            assert_eq!(apply_generator(Generator::H2, &v), v.scale(&w.c2));
        }
    }

    #[test]
    fn single_f2_puts_odd_letter_in_each_wedge() {
        let s = Shape::from_m(2, 2);
        let got = apply_generator(Generator::F2, &highest_vector::<i64>(s));
        let want = V::from_terms(
            s,
            [
                (idx(&[1, 1, 1, 1], &[2, 0]), 1),
                (idx(&[1, 1, 1, 1], &[0, 2]), 1),
            ],
        );
        assert_eq!(got, want);
    }

    #[test]
    fn natural_module_vectors() {
        let s = Shape::from_m(1, 0);
        let v: V = verma_vector(BVector::new(0, 1, 2, 0), s);
        assert_eq!(v, V::basis(idx(&[-2], &[])));
        assert_eq!(natural_coordinates(&v).unwrap(), [0, 0, 0, -1, 0]);
        let v: V = verma_vector(BVector::new(0, 1, 1, 0), s);
        assert_eq!(v.leading_term(), Some((&1, &idx(&[0], &[]))));
    }

    #[test]
    fn leading_coefficients() {
        assert_eq!(verma_leading_coefficient::<i64>(BVector::default()), 1);
        assert_eq!(
            verma_leading_coefficient::<i64>(BVector::new(1, 2, 3, 1)),
            2
        );
        assert_eq!(
            verma_leading_coefficient::<i64>(BVector::new(4, 3, 2, 1)),
            2 * 6
        );

        let v: V = verma_vector(BVector::new(1, 2, 3, 1), Shape::new(3, 2).unwrap());
        assert_eq!(v.leading_term(), Some((&2, &idx(&[1, 0, -1], &[2, 0]))));

        // (4,3,2,1) is valid once m1 >= 1
        let b = BVector::new(4, 3, 2, 1);
        let s = Shape::new(5, 4).unwrap();
        let v: SparseVector<BigInt> = verma_vector(b, s);
        let t = crate::verma::tableau_of_b(b, s).unwrap();
        let (c, i) = v.leading_term().unwrap();
        assert_eq!((c, i), (&BigInt::from(12), &u_of_tableau(&t).unwrap()));

        // on (4,4) it violates b4 <= m1; the expansion survives, led by another monomial's tableau
        let s = Shape::new(4, 4).unwrap();
        assert!(!crate::verma::satisfies_inequalities(b, s));
        let v: SparseVector<BigInt> = verma_vector(b, s);
        let (c, i) = v.leading_term().unwrap();
        assert_eq!(*c, BigInt::from(24));
        let lead = tableau_of_index(i);
        assert_ne!(crate::verma::psi(&lead).ok(), Some(b));
    }

    #[test]
    fn closed_form_small_cases() {
        let s = Shape::from_m(2, 2);
        assert_eq!(
            f2_power_closed_form::<i64>(s, 0).unwrap(),
            highest_vector(s)
        );
        let one = f2_power_closed_form::<i64>(s, 1).unwrap();
        assert_eq!(one.len(), 2);
        assert!(one.terms().all(|(_, c)| *c == 1));
        for b1 in 0..=4 {
            let iterated = apply_power(Generator::F2, b1, &highest_vector::<i64>(s));
            assert_eq!(f2_power_closed_form(s, b1).unwrap(), iterated, "b1 = {b1}");
        }
        assert!(f2_power_closed_form::<i64>(s, 5).is_err());
    }

    #[test]
    fn prefix_sharing_matches_direct_expansion() {
        let s = Shape::from_m(1, 2);
        let bs = crate::verma::enumerate_b(s);
        let shared: Vec<V> = verma_vectors(&bs, s);
        for (b, v) in bs.iter().zip(&shared) {
            assert_eq!(v, &verma_vector::<i64>(*b, s), "{b}");
        }
    }

    #[test]
    fn json_round_trip_and_rejections() {
        let s = Shape::new(3, 2).unwrap();
        let v: SparseVector<BigInt> = verma_vector(BVector::new(1, 2, 3, 1), s);
        let text = v.to_json();
        assert!(text.starts_with(
            r#"{"shape":[3,2],"terms":[{"coeff":"2","singles":[-1],"pairs":[[0,0],[1,2]]}"#
        ));
        assert_eq!(SparseVector::<BigInt>::from_json(&text).unwrap(), v);
        let bad = r#"{"shape":[1,0],"terms":[{"coeff":"1","singles":[1,2],"pairs":[]}]}"#;
        assert!(SparseVector::<i64>::from_json(bad).is_err());
        let bad = r#"{"shape":[1,1],"terms":[{"coeff":"1","singles":[],"pairs":[[2,1]]}]}"#;
        assert!(SparseVector::<i64>::from_json(bad).is_err());
        let bad = r#"{"shape":[1,0],"terms":[{"coeff":"0","singles":[1],"pairs":[]}]}"#;
        assert!(SparseVector::<i64>::from_json(bad).is_err());
    }
}
