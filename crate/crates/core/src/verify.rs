//! Named verification suites.
//!
//! Each suite sweeps one family of exact identities and returns a report;
//! the CLI `verify` command and the acceptance tests share these runners.
//! Independent brute-force oracles (commutation classes, window scans,
//! deletion-contraction counts) live here so that the checks do not reuse
//! the code paths they validate.

use std::collections::HashSet;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{
    a_value, commuting_sets, i_of, p_classes, p_prime, product, ScaledMonomial,
};
use crate::coxeter::{
    build_graph, bruhat_leq, commutation_class, enumerate_fc, normalize, CoxeterGraph, FcElement,
};
use crate::diagram::{
    compose, gen_e, iota, mu_tilde_diagrammatic, rho, simplify, tau_bullet, ScaledDiagram,
};
use crate::oracle::{KlOracle, OracleLimits};
use crate::trace::{markov_step, TraceEngine};
use crate::{Error, Result};

/// Regression constants: the number of fully commutative elements of
/// `W(E_n)` for the ranks the suites sweep, recorded from two independent
/// enumeration orders.
pub const FC_COUNT_E6: usize = 662;
pub const FC_COUNT_E7: usize = 2670;
pub const FC_COUNT_E8: usize = 10846;

/// Configuration shared by the suites.
#[derive(Debug, Clone, Copy)]
pub struct VerifyConfig {
    pub seed: u64,
    pub limits: OracleLimits,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            seed: 0x746c65,
            limits: OracleLimits::default(),
        }
    }
}

/// Outcome of one suite run.
#[derive(Debug, Clone)]
pub struct SuiteOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub checks: usize,
    pub failures: Vec<String>,
    pub elapsed_ms: u128,
}

impl SuiteOutcome {
    pub fn summary(&self) -> String {
        format!(
            "{}: {} ({} checks, {} ms)",
            self.name,
            if self.passed { "pass" } else { "FAIL" },
            self.checks,
            self.elapsed_ms
        )
    }
}

pub const SUITE_NAMES: [&str; 9] = [
    "mu-example",
    "trace-classes",
    "purity",
    "trace-laws",
    "bridge",
    "markov",
    "kl-oracle",
    "gram",
    "enumeration",
];

/// Runs one suite by name ("all" runs every suite and folds the outcome).
pub fn run_suite(name: &str, config: &VerifyConfig) -> Result<Vec<SuiteOutcome>> {
    let run_one = |n: &str| -> Result<SuiteOutcome> {
        Ok(match n {
            "mu-example" => suite_mu_example(config),
            "trace-classes" => suite_trace_classes(config),
            "purity" => suite_purity(config),
            "trace-laws" => suite_trace_laws(config),
            "bridge" => suite_bridge(config),
            "markov" => suite_markov(config),
            "kl-oracle" => suite_kl_oracle(config),
            "gram" => suite_gram(config),
            "enumeration" => suite_enumeration(config),
            _ => return Err(Error::InvalidInput(format!("unknown suite `{n}`"))),
        })
    };
    if name == "all" {
        SUITE_NAMES.iter().map(|n| run_one(n)).collect()
    } else {
        Ok(vec![run_one(name)?])
    }
}

struct Tally {
    name: &'static str,
    start: Instant,
    checks: usize,
    failures: Vec<String>,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Tally {
            name,
            start: Instant::now(),
            checks: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok && self.failures.len() < 32 {
            self.failures.push(describe());
        }
    }

    fn finish(self) -> SuiteOutcome {
        SuiteOutcome {
            name: self.name,
            passed: self.failures.is_empty(),
            checks: self.checks,
            failures: self.failures,
            elapsed_ms: self.start.elapsed().as_millis(),
        }
    }
}

fn fc(g: &CoxeterGraph, word: &[usize]) -> FcElement {
    normalize(g, word).expect("verification word is reduced FC")
}

/// All fully commutative elements of rank `n` up to the optional bound.
fn all_fc(g: &CoxeterGraph, max_len: Option<usize>) -> Vec<FcElement> {
    enumerate_fc(g, max_len)
        .expect("rank <= 8 enumerations are bounded")
        .collect()
}

/// Seeded random fully commutative element with length near `target`.
fn random_fc(g: &CoxeterGraph, rng: &mut ChaCha8Rng, target: usize) -> FcElement {
    let mut word: Vec<usize> = Vec::new();
    let mut stuck = 0;
    while word.len() < target && stuck < 24 {
        let s = rng.gen_range(0..g.rank());
        word.push(s);
        if normalize(g, &word).is_ok() {
            stuck = 0;
        } else {
            word.pop();
            stuck += 1;
        }
    }
    fc(g, &word)
}

/// The end-to-end leading-coefficient example: the length-5 and length-16
/// pair evaluates to 1 by both routes, with diagram trace exponent 5.
fn suite_mu_example(_config: &VerifyConfig) -> SuiteOutcome {
    let mut t = Tally::new("mu-example");
    let g = build_graph(6).unwrap();
    let mut eng = TraceEngine::new(&g);
    let y = fc(&g, &[1, 2, 4, 0, 5]);
    let w = fc(&g, &[1, 2, 3, 4, 0, 3, 5, 2, 4, 1, 3, 2, 0, 3, 4, 5]);

    let algebraic = eng.mu_tilde(&y, &w);
    t.check(algebraic == Ok(1), || {
        format!("algebraic mu(y, w) = {algebraic:?}, expected 1")
    });
    let diagrammatic = mu_tilde_diagrammatic(&g, &y, &w);
    t.check(diagrammatic == Ok(1), || {
        format!("diagrammatic mu(y, w) = {diagrammatic:?}, expected 1")
    });
    let dy = rho(&y.word(), 6).unwrap();
    let dw_inv = rho(&w.inverse(&g).word(), 6).unwrap();
    let prod = simplify(&compose(&dy, &dw_inv).unwrap());
    let tau = tau_bullet(&prod);
    t.check(tau == 5, || format!("trace exponent {tau}, expected 5"));
    t.finish()
}

/// Classification of the trace space: class counts, canonical
/// representatives, the explicit rank-7 class, the duality matrix, and the
/// independent-set count by deletion-contraction.
fn suite_trace_classes(_config: &VerifyConfig) -> SuiteOutcome {
    let mut t = Tally::new("trace-classes");
    for (n, expected_classes) in [(6, 4usize), (7, 6), (8, 5)] {
        let g = build_graph(n).unwrap();
        let part = p_classes(&g);
        t.check(part.num_classes() == expected_classes, || {
            format!("rank {n}: {} classes", part.num_classes())
        });
        let reps = p_prime(&g);
        t.check(reps.len() == part.num_classes(), || {
            format!(
                "rank {n}: {} canonical representatives vs {} classes",
                reps.len(),
                part.num_classes()
            )
        });
        // Every class contains exactly one canonical representative.
        for c in 0..part.num_classes() {
            let members = part.members(c);
            let hits = members.iter().filter(|m| reps.contains(m)).count();
            t.check(hits == 1, || {
                format!("rank {n} class {c}: {hits} canonical representatives")
            });
        }
        // The duality matrix [tau_A(i(B))] over classes x representatives
        // is the identity.
        let mut eng = TraceEngine::new(&g);
        for b in &reps {
            let ib = i_of(&g, b).unwrap();
            let cb = part.class_of(b).unwrap();
            for c in 0..part.num_classes() {
                let got = eng.indicator_exponent(c, &ib);
                let want = if c == cb { Some(0) } else { None };
                t.check(got == want, || {
                    format!("rank {n}: indicator {c} on i({b:?}) = {got:?}")
                });
            }
        }
        // Independent-set census against deletion-contraction.
        let count = commuting_sets(&g).len();
        let expected = independent_set_count(&g);
        t.check(count == expected, || {
            format!("rank {n}: {count} commuting sets, expected {expected}")
        });
    }
    // The explicit class of the rank-7 example.
    let g7 = build_graph(7).unwrap();
    let part = p_classes(&g7);
    let c = part.class_of(&[0, 2, 4, 6]).unwrap();
    let members = part.members(c);
    t.check(
        members == vec![vec![0, 1, 4, 6], vec![0, 2, 4, 6]],
        || format!("rank 7 class of {{0,2,4,6}}: {members:?}"),
    );
    t.finish()
}

/// Independent-set count by deletion-contraction on vertex subsets.
fn independent_set_count(g: &CoxeterGraph) -> usize {
    fn go(g: &CoxeterGraph, alive: u32) -> usize {
        let v = match (0..g.rank()).find(|&v| alive >> v & 1 == 1) {
            Some(v) => v,
            None => return 1,
        };
        let without = alive & !(1 << v);
        let mut closed = without;
        for u in g.neighbours(v) {
            closed &= !(1 << u);
        }
        go(g, without) + go(g, closed)
    }
    go(g, (1u32 << g.rank()) - 1)
}

/// Structure-constant purity: exhaustive products at rank 6 stay single
/// scaled monomials with exponent at most `min(a(x), a(y))`, and the
/// `a`-function agrees with a brute-force scan of reduced decompositions.
fn suite_purity(_config: &VerifyConfig) -> SuiteOutcome {
    let mut t = Tally::new("purity");
    let g = build_graph(6).unwrap();
    let elements = all_fc(&g, Some(10));
    let a_of: Vec<usize> = elements.iter().map(|x| a_value(&g, x)).collect();
    for (i, x) in elements.iter().enumerate() {
        for (j, y) in elements.iter().enumerate() {
            if x.len() + y.len() > 10 {
                continue;
            }
            let p = product(&g, x, y);
            let bound = a_of[i].min(a_of[j]);
            t.check(p.exp as usize <= bound, || {
                format!(
                    "product of {:?} and {:?} has exponent {} > min(a) = {bound}",
                    x.word(),
                    y.word(),
                    p.exp
                )
            });
        }
    }
    // Brute-force a: maximum window of distinct pairwise-commuting letters
    // over the full commutation class.
    for x in elements.iter().filter(|x| x.len() <= 6) {
        let brute = a_value_brute(&g, x);
        let fast = a_value(&g, x);
        t.check(brute == fast, || {
            format!("a({:?}) = {fast}, brute force {brute}", x.word())
        });
    }
    t.finish()
}

/// Brute-force `a`-function: scan every reduced word for the largest
/// contiguous window of distinct, pairwise non-adjacent letters.
fn a_value_brute(g: &CoxeterGraph, x: &FcElement) -> usize {
    let mut best = 0;
    for word in commutation_class(g, &x.word()) {
        for i in 0..word.len() {
            let mut window: Vec<usize> = Vec::new();
            for &s in &word[i..] {
                if window.iter().any(|&u| u == s || g.adjacent(u, s)) {
                    break;
                }
                window.push(s);
            }
            best = best.max(window.len());
        }
    }
    best
}

/// Trace exponent laws over the full rank-6 sweep: bound by `-a(w)` with
/// equality exactly for involutions, parity of the length, and symmetry
/// under inversion.
fn suite_trace_laws(_config: &VerifyConfig) -> SuiteOutcome {
    let mut t = Tally::new("trace-laws");
    let g = build_graph(6).unwrap();
    let mut eng = TraceEngine::new(&g);
    for w in all_fc(&g, None) {
        let e = eng.tr_exponent(&w);
        let a = a_value(&g, &w) as i64;
        let inv = w.inverse(&g);
        t.check(e <= -a, || {
            format!("tr exponent {e} above -a = {} for {:?}", -a, w.word())
        });
        let involution = inv == w;
        t.check((e == -a) == involution, || {
            format!(
                "exponent {e}, a {a}, involution {involution} for {:?}",
                w.word()
            )
        });
        t.check((e - w.len() as i64) % 2 == 0, || {
            format!("parity: exponent {e}, length {} for {:?}", w.len(), w.word())
        });
        let e_inv = eng.tr_exponent(&inv);
        t.check(e == e_inv, || {
            format!("tr({:?}) = {e} but tr of inverse = {e_inv}", w.word())
        });
    }
    t.finish()
}

/// The algebra-diagram bridge: the closed diagram trace matches the
/// algebraic trace on every fully commutative element of rank 6, and on
/// seeded random products `b_x b_{y^-1}`.
fn suite_bridge(config: &VerifyConfig) -> SuiteOutcome {
    let mut t = Tally::new("bridge");
    let g = build_graph(6).unwrap();
    let mut eng = TraceEngine::new(&g);
    let elements = all_fc(&g, None);
    for w in &elements {
        let d = rho(&w.word(), 6).unwrap();
        let tau = tau_bullet(&d) as i64;
        let expected = 6 + eng.tr_exponent(w);
        t.check(tau == expected, || {
            format!("tau {tau} vs 6 + tr = {expected} for {:?}", w.word())
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    for _ in 0..1000 {
        let x = &elements[rng.gen_range(0..elements.len())];
        let y = &elements[rng.gen_range(0..elements.len())];
        let p = product(&g, x, &y.inverse(&g));
        let expected = 6 + p.exp as i64 + eng.tr_exponent(&p.elt);
        let dx = rho(&x.word(), 6).unwrap();
        let dy = rho(&y.inverse(&g).word(), 6).unwrap();
        let tau = tau_bullet(&simplify(&compose(&dx, &dy).unwrap())) as i64;
        t.check(tau == expected, || {
            format!(
                "pair tau {tau} vs {expected} for x={:?} y={:?}",
                x.word(),
                y.word()
            )
        });
    }
    t.finish()
}

/// Markov property of the trace tower and the diagrammatic embedding laws.
fn suite_markov(config: &VerifyConfig) -> SuiteOutcome {
    let mut t = Tally::new("markov");
    let g6 = build_graph(6).unwrap();
    let g7 = build_graph(7).unwrap();
    let mut e6 = TraceEngine::new(&g6);
    let mut e7 = TraceEngine::new(&g7);
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    for _ in 0..100 {
        let target = rng.gen_range(0..=6);
        let h = ScaledMonomial {
            exp: rng.gen_range(0..3),
            elt: random_fc(&g6, &mut rng, target),
        };
        match markov_step(&mut e6, &mut e7, &h) {
            Ok((lhs, rhs)) => t.check(lhs == rhs, || {
                format!("markov step {lhs} vs {rhs} for {:?}", h.elt.word())
            }),
            Err(e) => t.check(false, || format!("markov step failed: {e}")),
        }
    }
    // Embedding laws for diagrams: appending a strand multiplies the trace
    // by delta, and capping the new strand with a cup-cap restores it.
    let e6_gen = ScaledDiagram::of(gen_e(6, 7).unwrap());
    for _ in 0..100 {
        let target = rng.gen_range(0..=8);
        let w = random_fc(&g6, &mut rng, target);
        let d = rho(&w.word(), 6).unwrap();
        let lifted = ScaledDiagram {
            delta_exp: d.delta_exp,
            diagram: iota(&d.diagram),
        };
        t.check(tau_bullet(&lifted) == tau_bullet(&d) + 1, || {
            format!("iota law (i) fails for {:?}", w.word())
        });
        let capped = compose(&lifted, &e6_gen).unwrap();
        t.check(tau_bullet(&capped) == tau_bullet(&d), || {
            format!("iota law (ii) fails for {:?}", w.word())
        });
    }
    t.finish()
}

/// Agreement of the non-recursive leading coefficient with the recursive
/// oracle on comparable fully commutative pairs, plus the 0/1 bound.
fn suite_kl_oracle(config: &VerifyConfig) -> SuiteOutcome {
    let mut t = Tally::new("kl-oracle");
    let g = build_graph(6).unwrap();
    let mut eng = TraceEngine::new(&g);
    let mut oracle = KlOracle::new(&g, config.limits);
    let elements = all_fc(&g, Some(10));
    let mut incomparable_checked = 0usize;
    for y in &elements {
        let wy = y.word();
        for x in &elements {
            if x.len() > y.len() {
                continue;
            }
            let wx = x.word();
            if bruhat_leq(&g, &wx, &wy) {
                let mu = oracle.mu(&wx, &wy).expect("within oracle limits");
                t.check(mu == 0 || mu == 1, || {
                    format!("oracle mu({wx:?},{wy:?}) = {mu} outside {{0,1}}")
                });
                let fast = eng.mu_tilde(x, y).expect("trace exponent nonpositive");
                t.check(i64::from(fast) == mu, || {
                    format!("mu mismatch for x={wx:?} y={wy:?}: oracle {mu}, trace {fast}")
                });
            } else if x.len() == y.len() && incomparable_checked < 500 {
                // Incomparable pairs: both one-sided coefficients vanish,
                // and the symmetrized value must be 0.
                incomparable_checked += 1;
                let fast = eng.mu_tilde(x, y).expect("trace exponent nonpositive");
                let sym = eng.mu_tilde(y, x).expect("trace exponent nonpositive");
                t.check(fast == 0 && sym == 0, || {
                    format!("incomparable pair x={wx:?} y={wy:?} has mu {fast}/{sym}")
                });
            }
        }
    }
    t.finish()
}

/// Orthogonality of the trace form: `tr(b_x b_{y^-1})` has exponent 0 only
/// on the diagonal and is negative off it.
fn suite_gram(_config: &VerifyConfig) -> SuiteOutcome {
    let mut t = Tally::new("gram");
    let g = build_graph(6).unwrap();
    let mut eng = TraceEngine::new(&g);
    let elements = all_fc(&g, Some(8));
    for x in &elements {
        for y in &elements {
            let p = product(&g, x, &y.inverse(&g));
            let e = p.exp as i64 + eng.tr_exponent(&p.elt);
            let ok = if x == y { e == 0 } else { e <= -1 };
            t.check(ok, || {
                format!(
                    "gram exponent {e} for x={:?} y={:?}",
                    x.word(),
                    y.word()
                )
            });
        }
    }
    t.finish()
}

/// Enumeration stability: two independent orders agree and match the
/// recorded census, with identical length multisets.
fn suite_enumeration(_config: &VerifyConfig) -> SuiteOutcome {
    let mut t = Tally::new("enumeration");
    for (n, expected) in [(6, FC_COUNT_E6), (7, FC_COUNT_E7), (8, FC_COUNT_E8)] {
        let g = build_graph(n).unwrap();
        let right: Vec<FcElement> =
            crate::coxeter::enumerate_fc_side(&g, None, crate::coxeter::BfsSide::Right)
                .unwrap()
                .collect();
        let left: Vec<FcElement> =
            crate::coxeter::enumerate_fc_side(&g, None, crate::coxeter::BfsSide::Left)
                .unwrap()
                .collect();
        t.check(right.len() == expected, || {
            format!("rank {n}: {} elements, expected {expected}", right.len())
        });
        let mut right_lens: Vec<usize> = right.iter().map(FcElement::len).collect();
        let mut left_lens: Vec<usize> = left.iter().map(FcElement::len).collect();
        right_lens.sort();
        left_lens.sort();
        t.check(right_lens == left_lens, || {
            format!("rank {n}: length multisets differ between BFS orders")
        });
        let rset: HashSet<&FcElement> = right.iter().collect();
        let lset: HashSet<&FcElement> = left.iter().collect();
        t.check(rset == lset, || {
            format!("rank {n}: element sets differ between BFS orders")
        });
    }
    t.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn example_suite_passes() {
        let out = suite_mu_example(&VerifyConfig::default());
        assert!(out.passed, "{:?}", out.failures);
    }

    #[test]
    fn unknown_suite_rejected() {
        assert!(run_suite("nope", &VerifyConfig::default()).is_err());
    }

    #[test]
    fn independent_set_count_matches_direct_enumeration() {
        for n in [6, 7, 8] {
            let g = build_graph(n).unwrap();
            assert_eq!(independent_set_count(&g), commuting_sets(&g).len());
        }
    }

    #[test]
    fn random_fc_is_reproducible() {
        let g = build_graph(6).unwrap();
        let mut a = ChaCha8Rng::seed_from_u64(7);
        let mut b = ChaCha8Rng::seed_from_u64(7);
        assert_eq!(random_fc(&g, &mut a, 5), random_fc(&g, &mut b, 5));
    }
}
