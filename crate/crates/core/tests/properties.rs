use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use spo41::algebra::{act_letter, Weight};
use spo41::module::{
    apply_generator, basis_index_weight, canonical_wedge, tableau_of_index, u_of_tableau,
    verma_vector, BasisIndex, SparseVector, WedgePair,
};
use spo41::rank::rank;
use spo41::tableau::{compare_tableaux, enumerate_cst, enumerate_kn, is_cst, tableau_weight};
use spo41::verma::{enumerate_b, psi, satisfies_inequalities, tableau_of_b, verma_weight, BVector};
use spo41::{Generator, Letter, Shape, Tableau};

type V = SparseVector<i64>;

fn small_shape() -> impl Strategy<Value = Shape> {
    (0u32..=2, 0u32..=2).prop_map(|(m1, m2)| Shape::from_m(m1, m2))
}

fn cst_tableau() -> impl Strategy<Value = Tableau> {
    small_shape().prop_flat_map(|s| {
        let all = enumerate_cst(s);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

fn random_vector() -> impl Strategy<Value = V> {
    small_shape().prop_flat_map(|s| {
        let basis = enumerate_cst(s);
        let n = basis.len();
        prop::collection::vec((0..n, -3i64..=3), 1..6).prop_map(move |terms| {
            V::from_terms(
                s,
                terms
                    .into_iter()
                    .map(|(i, c)| (u_of_tableau(&basis[i]).unwrap(), c)),
            )
        })
    })
}

fn valid_b() -> impl Strategy<Value = (Shape, BVector)> {
    small_shape().prop_flat_map(|s| {
        let bs = enumerate_b(s);
        (0..bs.len()).prop_map(move |i| (s, bs[i]))
    })
}

fn act(g: Generator, v: &V) -> V {
    apply_generator(g, v)
}

/// `a.(b.v) - sign * b.(a.v)`.
fn bracket_action(a: Generator, b: Generator, v: &V) -> V {
    let s = if a.is_odd() && b.is_odd() { -1 } else { 1 };
    act(a, &act(b, v)).combine(&1, &act(b, &act(a, v)), &s)
}

/// `g(x ^ y) = g(x) ^ y + (-1)^{|g||x|} x ^ g(y)` on one wedge factor.
fn act_on_pair(g: Generator, w: WedgePair) -> Vec<(i64, WedgePair)> {
    let (x, y) = (w.lo(), w.hi());
    let mut out = Vec::new();
    if let Some((c, gx)) = act_letter(g, x).unwrap() {
        if let Some((s, pair)) = canonical_wedge(gx, y) {
            out.push((c * i64::from(s), pair));
        }
    }
    if let Some((c, gy)) = act_letter(g, y).unwrap() {
        let sign = if g.is_odd() && x.is_odd() { -1 } else { 1 };
        if let Some((s, pair)) = canonical_wedge(x, gy) {
            out.push((sign * c * i64::from(s), pair));
        }
    }
    out
}

/// The operator acting on tensor factor `p` alone, with the factor-level Koszul sign.
fn factor_operator(g: Generator, p: usize, v: &V) -> V {
    let mut out = V::zero(v.shape());
    for (idx, c) in v.terms() {
        let singles = idx.singles().to_vec();
        let pairs: Vec<WedgePair> = idx.pairs().collect();
        let m1 = singles.len();
        let before = if p < m1 {
            singles[..p].iter().map(|x| x.parity()).sum::<u8>()
        } else {
            singles.iter().map(|x| x.parity()).sum::<u8>()
                + pairs[..p - m1].iter().map(|w| w.parity()).sum::<u8>()
        };
        let koszul = if g.is_odd() && before % 2 == 1 { -1 } else { 1 };
        if p < m1 {
            if let Some((s, y)) = act_letter(g, singles[p]).unwrap() {
                let mut ys = singles.clone();
                ys[p] = y;
                out.add_term(BasisIndex::new(ys, &pairs), c * s * koszul);
            }
        } else {
            for (s, w) in act_on_pair(g, pairs[p - m1]) {
                let mut ps = pairs.clone();
                ps[p - m1] = w;
                out.add_term(BasisIndex::new(singles.clone(), &ps), c * s * koszul);
            }
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn bracket_coherence(v in random_vector()) {
        use Generator::*;
        let h12 = act(H1, &v).sub(&act(H2, &v));
        prop_assert_eq!(bracket_action(E1, F1, &v), h12);
        prop_assert_eq!(bracket_action(E2, F2, &v), act(H2, &v));
        prop_assert!(bracket_action(E1, F2, &v).is_zero());
        prop_assert!(bracket_action(E2, F1, &v).is_zero());
        prop_assert!(bracket_action(H1, H2, &v).is_zero());
        for h in [H1, H2] {
            for x in [E1, E2, F1, F2] {
                let root = x.root();
                let eigen = if h == H1 { root.c1 } else { root.c2 };
                prop_assert_eq!(bracket_action(h, x, &v), act(x, &v).scale(&eigen));
            }
        }
    }

    #[test]
    fn action_is_a_sum_of_factor_operators(v in random_vector()) {
        let factors = (v.shape().m1() + v.shape().m2()) as usize;
        for g in Generator::ROOT_VECTORS {
            let summed = (0..factors).fold(V::zero(v.shape()), |acc, p| acc.add(&factor_operator(g, p, &v)));
            prop_assert_eq!(act(g, &v), summed);
        }
    }

    #[test]
    fn odd_factor_operators_anticommute(v in random_vector()) {
        let factors = (v.shape().m1() + v.shape().m2()) as usize;
        for p in 0..factors {
            for q in 0..factors {
                if p == q {
                    continue;
                }
                let pq = factor_operator(Generator::F2, p, &factor_operator(Generator::F2, q, &v));
                let qp = factor_operator(Generator::F2, q, &factor_operator(Generator::F2, p, &v));
                prop_assert!(pq.add(&qp).is_zero());
            }
        }
    }

    #[test]
    fn order_matches_basis_order(a in cst_tableau(), b in cst_tableau()) {
        prop_assume!(a.shape() == b.shape());
        let by_tableau = compare_tableaux(&a, &b).unwrap();
        let by_index = u_of_tableau(&a).unwrap().cmp(&u_of_tableau(&b).unwrap());
        prop_assert_eq!(by_tableau, by_index);
        prop_assert_eq!(by_tableau == std::cmp::Ordering::Equal, a == b);
    }

    #[test]
    fn index_round_trip_and_weight(t in cst_tableau()) {
        prop_assert!(is_cst(&t));
        let idx = u_of_tableau(&t).unwrap();
        prop_assert_eq!(&tableau_of_index(&idx), &t);
        prop_assert_eq!(basis_index_weight(&idx), tableau_weight(&t));
        let json = t.to_json();
        prop_assert_eq!(serde_json::from_str::<Tableau>(&json).unwrap(), t);
    }

    #[test]
    fn correspondence_round_trips((s, b) in valid_b()) {
        prop_assert!(satisfies_inequalities(b, s));
        let t = tableau_of_b(b, s).unwrap();
        prop_assert_eq!(psi(&t).unwrap(), b);
        prop_assert_eq!(tableau_weight(&t), verma_weight(b, s));
        let text = b.to_string();
        let digits = text.trim_matches(|c| c == '(' || c == ')');
        prop_assert_eq!(digits.parse::<BVector>().unwrap(), b);
    }

    #[test]
    fn verma_vectors_are_weight_homogeneous((s, b) in valid_b()) {
        let v: V = verma_vector(b, s);
        prop_assert_eq!(v.weight(), Some(verma_weight(b, s)));
    }

    #[test]
    fn kn_weights_lie_below_the_highest_weight(s in small_shape()) {
        let lambda = s.highest_weight();
        for t in enumerate_kn(s) {
            let d: Weight = lambda - tableau_weight(&t);
            // d = a*(1,-1) + b*(0,1) with a, b >= 0
            prop_assert!(d.c1 >= 0 && d.c2 + d.c1 >= 0);
        }
    }

    #[test]
    fn vector_json_round_trip(v in random_vector()) {
        let big = v.map_coefficients(|c| BigInt::from(*c));
        prop_assert_eq!(SparseVector::<BigInt>::from_json(&big.to_json()).unwrap(), big);
    }

    #[test]
    fn rank_ignores_scaling_and_order(v in random_vector(), w in random_vector(), k in 1i64..5) {
        prop_assume!(v.shape() == w.shape());
        let r = rank(&[v.clone(), w.clone()]);
        prop_assert_eq!(rank(&[w.scale(&k), v.scale(&-k)]), r);
        prop_assert_eq!(rank(&[v.clone(), w.clone(), v.add(&w)]), r);
    }

    #[test]
    fn coefficient_rings_agree((s, b) in valid_b()) {
        let small: V = verma_vector(b, s);
        let big: SparseVector<BigInt> = verma_vector(b, s);
        let rational: SparseVector<BigRational> = verma_vector(b, s);
        prop_assert_eq!(small.map_coefficients(|c| BigInt::from(*c)), big.clone());
        prop_assert_eq!(big.map_coefficients(|c| BigRational::from(c.clone())), rational);
    }
}

#[test]
fn wedge_signs_follow_the_super_rule() {
    for a in Letter::ALL {
        for c in Letter::ALL {
            match canonical_wedge(a, c) {
                None => assert!(a == c && a != Letter::Zero),
                Some((s, w)) if a > c => {
                    let expected = if a.is_odd() && c.is_odd() { 1 } else { -1 };
                    assert_eq!((s, w.lo(), w.hi()), (expected, c, a));
                }
                Some((s, w)) => assert_eq!((s, w.lo(), w.hi()), (1, a, c)),
            }
        }
    }
}
