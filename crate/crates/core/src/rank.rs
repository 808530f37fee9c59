//! Exact rank and submodule closure.
//!
//! Elimination keeps one stored vector per pivot, keyed by its leading basis
//! element. Reducing a vector against a pivot cross-multiplies by the two
//! leading coefficients and then strips the content, so integer coefficients
//! never leave the ring.

use std::collections::{BTreeMap, VecDeque};

use crate::algebra::{Generator, Shape};
use crate::module::{apply_generator, highest_vector, BasisIndex, SparseVector};
use crate::scalar::Coefficient;

/// Vectors in echelon form with distinct leading indices.
#[derive(Clone, Debug)]
pub struct Echelon<T> {
    shape: Shape,
    pivots: BTreeMap<BasisIndex, SparseVector<T>>,
}

impl<T: Coefficient> Echelon<T> {
    pub fn new(shape: Shape) -> Self {
        Echelon {
            shape,
            pivots: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    /// Leading indices of the stored vectors, ascending.
    pub fn pivot_indices(&self) -> impl Iterator<Item = &BasisIndex> + '_ {
        self.pivots.keys()
    }

    /// Eliminates leading terms until the leading index is not a pivot.
    /// The result is zero iff `v` lies in the span.
    pub fn reduce(&self, v: &SparseVector<T>) -> SparseVector<T> {
        assert_eq!(
            v.shape(),
            self.shape,
            "vector shape differs from echelon shape"
        );
        let mut v = v.primitive();
        loop {
            let Some((c, idx)) = v.leading_term() else {
                return v;
            };
            let Some(p) = self.pivots.get(idx) else {
                return v;
            };
            let (pc, _) = p.leading_term().expect("pivots are non-zero");
            v = v.combine(pc, p, c).primitive();
        }
    }

    pub fn contains(&self, v: &SparseVector<T>) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v` if it raises the rank, returning the stored reduced vector.
    pub fn insert(&mut self, v: &SparseVector<T>) -> Option<&SparseVector<T>> {
        let r = self.reduce(v);
        let (_, idx) = r.leading_term()?;
        let idx = idx.clone();
        Some(self.pivots.entry(idx).or_insert(r))
    }
}

/// Exact rank over the rationals. Vectors must share one shape.
pub fn rank<T: Coefficient>(vectors: &[SparseVector<T>]) -> usize {
    let Some(first) = vectors.first() else {
        return 0;
    };
    let mut e = Echelon::new(first.shape());
    for v in vectors {
        e.insert(v);
    }
    e.rank()
}

/// Outcome of a closure computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Closure {
    Dimension(usize),
    /// The span grew past the budget before stabilizing.
    Exceeded {
        budget: usize,
    },
}

/// Grows the span of `v_lambda` under `e1, e2, f1, f2` breadth first.
pub fn closure<T: Coefficient>(s: Shape, budget: usize) -> (Closure, Echelon<T>) {
    let mut e = Echelon::new(s);
    let mut queue = VecDeque::new();
    let hv = highest_vector::<T>(s);
    queue.push_back(e.insert(&hv).expect("highest vector is non-zero").clone());
    while let Some(w) = queue.pop_front() {
        for g in Generator::ROOT_VECTORS {
            let x = apply_generator(g, &w);
            if x.is_zero() {
                continue;
            }
            if let Some(new) = e.insert(&x) {
                queue.push_back(new.clone());
                if e.rank() > budget {
                    return (Closure::Exceeded { budget }, e);
                }
            }
        }
    }
    (Closure::Dimension(e.rank()), e)
}

/// Dimension of the submodule of `W` generated by `v_lambda`.
pub fn submodule_dimension(s: Shape) -> usize {
    match closure::<num_bigint::BigInt>(s, usize::MAX).0 {
        Closure::Dimension(d) => d,
        Closure::Exceeded { .. } => unreachable!("unbounded budget"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::{verma_vector, verma_vectors};
    use crate::verma::{enumerate_b, BVector};

    #[test]
    fn rank_examples() {
        assert_eq!(rank::<i64>(&[]), 0);
        let s = Shape::from_m(1, 0);
        let vs: Vec<SparseVector<i64>> = verma_vectors(&enumerate_b(s), s);
        assert_eq!(rank(&vs), 5);
        let v: SparseVector<i64> =
            verma_vector(BVector::new(1, 2, 3, 1), Shape::new(3, 2).unwrap());
        assert_eq!(rank(&[v.clone(), v.scale(&2)]), 1);
        assert_eq!(rank(&[v.clone(), SparseVector::zero(v.shape())]), 1);
    }

    #[test]
    fn reduce_detects_combinations() {
        let s = Shape::from_m(1, 1);
        let vs: Vec<SparseVector<i64>> = verma_vectors(&enumerate_b(s), s);
        let mut e = Echelon::new(s);
        for v in &vs {
            assert!(e.insert(v).is_some());
        }
        let combo = vs[3].scale(&3).add(&vs[7].scale(&-5)).add(&vs[1]);
        assert!(e.contains(&combo));
    }

    #[test]
    fn small_closures() {
        assert_eq!(submodule_dimension(Shape::from_m(0, 0)), 1);
        assert_eq!(submodule_dimension(Shape::from_m(1, 0)), 5);
        assert_eq!(submodule_dimension(Shape::from_m(0, 1)), 10);
        let (c, _) = closure::<i64>(Shape::from_m(1, 1), 20);
        assert_eq!(c, Closure::Exceeded { budget: 20 });
    }
}
