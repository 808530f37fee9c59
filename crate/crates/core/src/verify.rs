//! Verification suites with machine-readable reports.
//!
//! Each suite checks one family of statements on one shape and records every
//! failing input verbatim, so a report is enough to reproduce a failure.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{
    act_letter, generator_matrix, is_spo_matrix, letter_column, supercommutator, Generator, Letter,
    Shape, SuperMatrix,
};
use crate::error::{Error, Result};
use crate::module::{
    apply_power, basis_index_weight, f2_power_closed_form, highest_vector, u_of_tableau,
    verma_leading_coefficient, verma_vectors, SparseVector,
};
use crate::rank::{closure, rank, Closure, Echelon};
use crate::tableau::{enumerate_kn, tableau_weight};
use crate::verma::{enumerate_b, psi, satisfies_inequalities, verma_weight, KnCorrespondence};

/// Default cap on `5^m1 * 11^m2` for the closure suite.
pub const DEFAULT_BUDGET: u128 = 200_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Algebra,
    Bijection,
    Weights,
    Leading,
    Lemma,
    Independence,
    Closure,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Algebra,
        Suite::Bijection,
        Suite::Weights,
        Suite::Leading,
        Suite::Lemma,
        Suite::Independence,
        Suite::Closure,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Algebra => "algebra",
            Suite::Bijection => "bijection",
            Suite::Weights => "weights",
            Suite::Leading => "leading",
            Suite::Lemma => "lemma",
            Suite::Independence => "independence",
            Suite::Closure => "closure",
        }
    }

    /// Whether the suite depends on a shape.
    pub fn per_shape(self) -> bool {
        self != Suite::Algebra
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s.trim())
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

/// Parses a comma-separated suite list; `all` selects every suite.
pub fn parse_suites(list: &str) -> Result<Vec<Suite>> {
    if list.trim() == "all" {
        return Ok(Suite::ALL.to_vec());
    }
    let set: BTreeSet<Suite> = list.split(',').map(str::parse).collect::<Result<_>>()?;
    Ok(set.into_iter().collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub check: String,
    pub input: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    /// `None` for the shape-independent algebra suite.
    pub shape: Option<Shape>,
    pub checks_run: u64,
    pub failures: Vec<Failure>,
    pub wall_time_ms: u64,
    pub skipped: bool,
    pub notes: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

struct Recorder {
    suite: Suite,
    shape: Option<Shape>,
    start: Instant,
    checks: u64,
    failures: Vec<Failure>,
    skipped: bool,
    notes: Vec<String>,
}

impl Recorder {
    fn new(suite: Suite, shape: Option<Shape>) -> Recorder {
        Recorder {
            suite,
            shape,
            start: Instant::now(),
            checks: 0,
            failures: Vec::new(),
            skipped: false,
            notes: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, check: &str, input: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(Failure {
                check: check.to_owned(),
                input: input(),
            });
        }
    }

    fn finish(self) -> SuiteReport {
        SuiteReport {
            suite: self.suite.name().to_owned(),
            shape: self.shape,
            checks_run: self.checks,
            failures: self.failures,
            wall_time_ms: self.start.elapsed().as_millis() as u64,
            skipped: self.skipped,
            notes: self.notes,
        }
    }
}

fn b_json(b: crate::verma::BVector) -> String {
    serde_json::to_string(&b).expect("b serializes")
}

/// The six generators with their defining matrices.
pub fn standard_generators() -> Vec<(Generator, SuperMatrix<BigInt>)> {
    Generator::ALL
        .into_iter()
        .map(|g| (g, generator_matrix(g)))
        .collect()
}

/// Algebra checks on the standard generators.
pub fn suite_algebra() -> SuiteReport {
    suite_algebra_on(&standard_generators())
}

/// Algebra checks on an arbitrary assignment of matrices to generator names.
///
/// Relations are checked only when every generator they mention is present.
pub fn suite_algebra_on(gens: &[(Generator, SuperMatrix<BigInt>)]) -> SuiteReport {
    let mut r = Recorder::new(Suite::Algebra, None);
    let get = |g: Generator| gens.iter().find(|(h, _)| *h == g).map(|(_, m)| m);

    for (g, m) in gens {
        r.check(is_spo_matrix(m), "pattern", || format!("{g}"));
        r.check(m.parity() == Some(g.parity()), "parity", || format!("{g}"));
        if g.root() != crate::algebra::Weight::ZERO {
            for x in Letter::ALL {
                let expected: [BigInt; 5] = match act_letter(*g, x) {
                    Ok(Some((c, y))) => letter_column::<BigInt>(y).map(|e| e * BigInt::from(c)),
                    _ => std::array::from_fn(|_| BigInt::zero()),
                };
                let got = m.apply(&letter_column(x));
                r.check(got == expected, "letter-action", || format!("{g} on {x}"));
            }
        }
    }

    // every bracket stays in the algebra
    for (i, (g, a)) in gens.iter().enumerate() {
        for (h, b) in &gens[i..] {
            let ok = supercommutator(a, b)
                .map(|c| is_spo_matrix(&c))
                .unwrap_or(false);
            r.check(ok, "bracket-pattern", || format!("[{g},{h}]"));
        }
    }

    let bracket = |a: Generator, b: Generator| -> Option<SuperMatrix<BigInt>> {
        supercommutator(get(a)?, get(b)?).ok()
    };
    let mut relation = |name: &str,
                        gs: &[Generator],
                        lhs: Option<SuperMatrix<BigInt>>,
                        rhs: Option<SuperMatrix<BigInt>>| {
        if gs.iter().all(|g| get(*g).is_some()) {
            let ok = matches!((&lhs, &rhs), (Some(l), Some(r)) if l == r);
            r.check(ok, name, || format!("{gs:?}"));
        }
    };
    use Generator::*;
    let diff = |a: Generator, b: Generator| Some(get(a)? - get(b)?);
    relation(
        "[E1,F1]=H1-H2",
        &[E1, F1, H1, H2],
        bracket(E1, F1),
        diff(H1, H2),
    );
    relation(
        "{E2,F2}=H2",
        &[E2, F2, H2],
        bracket(E2, F2),
        get(H2).cloned(),
    );
    relation(
        "[E1,F2]=0",
        &[E1, F2],
        bracket(E1, F2),
        Some(SuperMatrix::zero()),
    );
    relation(
        "[E2,F1]=0",
        &[E2, F1],
        bracket(E2, F1),
        Some(SuperMatrix::zero()),
    );
    for h in [H1, H2] {
        for x in [E1, E2, F1, F2] {
            let root = x.root();
            let eigen = if h == H1 { root.c1 } else { root.c2 };
            let rhs = get(x).map(|m| m.scale(&BigInt::from(eigen)));
            relation(
                &format!("[{h},{x}]={eigen}{x}"),
                &[h, x],
                bracket(h, x),
                rhs,
            );
        }
    }
    relation(
        "[H1,H2]=0",
        &[H1, H2],
        bracket(H1, H2),
        Some(SuperMatrix::zero()),
    );
    r.finish()
}

/// `psi` is a bijection from KN tableaux onto exponent vectors.
pub fn suite_bijection(s: Shape) -> SuiteReport {
    let mut r = Recorder::new(Suite::Bijection, Some(s));
    let kn = enumerate_kn(s);
    let bs = enumerate_b(s);
    let corr = KnCorrespondence::new(s);
    r.check(kn.len() == bs.len(), "count", || {
        format!("|KN|={} |B|={}", kn.len(), bs.len())
    });
    for t in &kn {
        match psi(t) {
            Ok(b) => {
                r.check(satisfies_inequalities(b, s), "psi-in-range", || t.to_json());
                let back = corr.tableau(b);
                r.check(back == Ok(t), "round-trip-tableau", || t.to_json());
            }
            Err(_) => r.check(false, "psi-defined", || t.to_json()),
        }
    }
    for (b, ts) in corr.collisions() {
        r.check(false, "psi-injective", || {
            format!(
                "{} <- {}",
                b_json(b),
                ts.iter().map(|t| t.to_json()).collect::<Vec<_>>().join(" ")
            )
        });
    }
    for &b in &bs {
        let ok = corr.tableau(b).is_ok_and(|t| psi(t) == Ok(b));
        r.check(ok, "round-trip-b", || b_json(b));
    }
    r.notes.push(format!("pairings={}", bs.len()));
    r.finish()
}

/// Weights of Verma vectors, their tableaux and their expansions agree.
pub fn suite_weights(s: Shape) -> SuiteReport {
    let mut r = Recorder::new(Suite::Weights, Some(s));
    let corr = KnCorrespondence::new(s);
    let bs = enumerate_b(s);
    let vs: Vec<SparseVector<BigInt>> = verma_vectors(&bs, s);
    for (&b, v) in bs.iter().zip(&vs) {
        let mu = verma_weight(b, s);
        match corr.tableau(b) {
            Ok(t) => r.check(tableau_weight(t) == mu, "weight-tableau", || b_json(b)),
            Err(_) => r.check(false, "weight-tableau", || b_json(b)),
        }
        r.check(!v.is_zero(), "vector-nonzero", || b_json(b));
        let ok = v.terms().all(|(idx, _)| basis_index_weight(idx) == mu);
        r.check(ok, "weight-support", || b_json(b));
    }
    r.finish()
}

/// Each Verma vector is led by its tableau with the factorial coefficient.
pub fn suite_leading(s: Shape) -> SuiteReport {
    let mut r = Recorder::new(Suite::Leading, Some(s));
    let corr = KnCorrespondence::new(s);
    let bs = enumerate_b(s);
    let vs: Vec<SparseVector<BigInt>> = verma_vectors(&bs, s);
    for (&b, v) in bs.iter().zip(&vs) {
        let Some((c, idx)) = v.leading_term() else {
            r.check(false, "leading-nonzero", || b_json(b));
            continue;
        };
        let expected_idx = corr.tableau(b).ok().and_then(|t| u_of_tableau(t).ok());
        r.check(expected_idx.as_ref() == Some(idx), "leading-index", || {
            b_json(b)
        });
        r.check(
            *c == verma_leading_coefficient::<BigInt>(b),
            "leading-coefficient",
            || format!("{} coefficient {c}", b_json(b)),
        );
        r.check(c.is_positive(), "leading-positive", || b_json(b));
    }
    r.finish()
}

/// The closed form of `f2^b1 v_lambda` matches iterated application.
pub fn suite_lemma(s: Shape) -> SuiteReport {
    let mut r = Recorder::new(Suite::Lemma, Some(s));
    let hv = highest_vector::<BigInt>(s);
    let mut iterated = hv;
    let top = 2 * s.m2();
    for b1 in 0..=top {
        if b1 > 0 {
            iterated = apply_power(Generator::F2, 1, &iterated);
        }
        let closed = f2_power_closed_form::<BigInt>(s, b1);
        r.check(closed.as_ref() == Ok(&iterated), "closed-form", || {
            format!("b1={b1}")
        });
    }
    // past b1 = 2*m2 the closed form no longer applies; record what happens
    let beyond = apply_power(Generator::F2, 1, &iterated);
    r.notes
        .push(format!("f2^{} v has {} terms", top + 1, beyond.len()));
    r.finish()
}

/// The Verma vectors are linearly independent.
pub fn suite_independence(s: Shape) -> SuiteReport {
    let mut r = Recorder::new(Suite::Independence, Some(s));
    let bs = enumerate_b(s);
    let vs: Vec<SparseVector<BigInt>> = verma_vectors(&bs, s);
    let rk = rank(&vs);
    r.check(rk == bs.len(), "rank", || {
        format!("rank={rk} |B|={}", bs.len())
    });
    let leads: BTreeSet<_> = vs
        .iter()
        .filter_map(|v| v.leading_term().map(|(_, i)| i))
        .collect();
    r.check(leads.len() == bs.len(), "distinct-leading", || {
        format!("distinct={} |B|={}", leads.len(), bs.len())
    });
    r.notes.push(format!("rank={rk}"));
    r.finish()
}

/// The submodule generated by `v_lambda` has the Verma vectors as a basis.
pub fn suite_closure(s: Shape, budget: u128) -> SuiteReport {
    let mut r = Recorder::new(Suite::Closure, Some(s));
    let ambient = s.ambient_dimension();
    if ambient > budget {
        r.skipped = true;
        r.notes.push(format!(
            "skipped: ambient dimension {ambient} exceeds budget {budget}"
        ));
        return r.finish();
    }
    let (outcome, span): (Closure, Echelon<BigInt>) = closure(s, ambient as usize);
    let kn = enumerate_kn(s).len();
    let bs = enumerate_b(s);
    let vs: Vec<SparseVector<BigInt>> = verma_vectors(&bs, s);
    let rk = rank(&vs);
    let dim = match outcome {
        Closure::Dimension(d) => d,
        Closure::Exceeded { .. } => usize::MAX,
    };
    r.check(dim == kn, "closure-vs-kn", || {
        format!("closure={dim} |KN|={kn}")
    });
    r.check(rk == kn, "rank-vs-kn", || format!("rank={rk} |KN|={kn}"));
    for (&b, v) in bs.iter().zip(&vs) {
        r.check(span.contains(v), "verma-in-closure", || b_json(b));
    }
    r.notes.push(format!("closure={dim} kn={kn} rank={rk}"));
    r.finish()
}

/// Runs one suite; the shape is ignored by the algebra suite.
pub fn run_suite(suite: Suite, s: Shape, budget: u128) -> SuiteReport {
    match suite {
        Suite::Algebra => suite_algebra(),
        Suite::Bijection => suite_bijection(s),
        Suite::Weights => suite_weights(s),
        Suite::Leading => suite_leading(s),
        Suite::Lemma => suite_lemma(s),
        Suite::Independence => suite_independence(s),
        Suite::Closure => suite_closure(s, budget),
    }
}

/// Runs suites over shapes in parallel. Shape-independent suites run once, first;
/// the rest follow in (shape, suite) order regardless of scheduling.
pub fn run_sweep(suites: &[Suite], shapes: &[Shape], budget: u128) -> Vec<SuiteReport> {
    let mut out: Vec<SuiteReport> = suites
        .iter()
        .filter(|s| !s.per_shape())
        .map(|&s| run_suite(s, Shape::from_m(0, 0), budget))
        .collect();
    let jobs: Vec<(Shape, Suite)> = shapes
        .iter()
        .flat_map(|&sh| {
            suites
                .iter()
                .filter(|s| s.per_shape())
                .map(move |&s| (sh, s))
        })
        .collect();
    out.par_extend(jobs.into_par_iter().map(|(sh, s)| run_suite(s, sh, budget)));
    out
}
