//! Verification suites. Every check compares a library answer with an
//! independent computation and reports the first counterexample.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use semisimplicity::branching::path_counts;
use semisimplicity::brauer::{factorize, gen_d, AlgebraElement, BrauerDiagram};
use semisimplicity::cellular::{
    check_ideal_identification, check_involution, check_left_triangularity, transition_matrix, weak_coherence_check,
    CellularBasis,
};
use semisimplicity::criteria::{decide_brauer, m0, m1, m1p, m2, m2p, m3, m3p, m_bruteforce, mprime_bruteforce, MKind};
use semisimplicity::exactalg::{rat, LaurentPoly, RationalFunction, RootSpec};
use semisimplicity::gram::{first_degenerate_level, generic_structure_check};
use semisimplicity::params::{DeltaSpec, Family, ParamSpec};
use semisimplicity::partitions::partitions_of;
use semisimplicity::weights::{
    bmw_weight_at_power, brauer_weight, loop_parameter, qbrauer_weight_at_power, vanishing_level,
};
use semisimplicity::Bound;

use crate::args::Suite;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub suite: String,
    pub check: String,
    pub passed: bool,
    /// The range covered on success, the counterexample on failure.
    pub detail: String,
}

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lib<T>(r: semisimplicity::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn double_factorial(n: u64) -> BigUint {
    (1..=n).rev().step_by(2).map(BigUint::from).product()
}

fn factorial(n: u64) -> BigUint {
    (1..=n).map(BigUint::from).product()
}

fn path_squares(max_n: usize) -> Check {
    let top = max_n.min(10);
    for n in 0..=top as u64 {
        let sum: BigUint = path_counts(n as usize).values().map(|c| c * c).sum();
        let target = double_factorial((2 * n).saturating_sub(1));
        ensure(sum == target, || format!("n = {n}: Σ paths² = {sum}, (2n−1)!! = {target}"))?;
    }
    Ok(format!("n ≤ {top}"))
}

fn coset_counts(max_n: usize) -> Check {
    let top = max_n.min(10);
    for n in 0..=top as u64 {
        let mut sum = BigUint::from(0u32);
        for s in 0..=n / 2 {
            let d = lib(gen_d(n as usize, s as usize))?.len();
            sum += BigUint::from(d * d) * factorial(n - 2 * s);
        }
        let target = double_factorial((2 * n).saturating_sub(1));
        ensure(sum == target, || format!("n = {n}: Σ |D|²(n−2s)! = {sum}, (2n−1)!! = {target}"))?;
    }
    Ok(format!("n ≤ {top}"))
}

fn round_trips(max_n: usize) -> Check {
    let top = max_n.min(5);
    for n in 0..=top {
        for d in BrauerDiagram::all(n) {
            let back = lib(factorize(&d).compose())?;
            ensure(back == d, || format!("{d} factorizes back to {back}"))?;
        }
    }
    Ok(format!("every diagram, n ≤ {top}"))
}

fn delta() -> LaurentPoly {
    LaurentPoly::var('δ')
}

fn unit(d: &BrauerDiagram) -> AlgebraElement<LaurentPoly> {
    AlgebraElement::from_diagram(d.clone(), LaurentPoly::one('δ'))
}

fn trace(x: &AlgebraElement<LaurentPoly>) -> Result<LaurentPoly, String> {
    lib(x.markov_trace(&delta()))
}

fn trace_symmetry(max_n: usize) -> Check {
    let top = max_n.min(4);
    for n in 1..=top {
        let all = BrauerDiagram::all(n);
        // Exhaustive up to Br₃; strided samples beyond.
        let (sa, sb) = if n <= 3 { (1, 1) } else { (7, 11) };
        for a in all.iter().step_by(sa) {
            for b in all.iter().step_by(sb) {
                let (x, y) = (unit(a), unit(b));
                let xy = trace(&lib(x.multiply(&y, &delta()))?)?;
                let yx = trace(&lib(y.multiply(&x, &delta()))?)?;
                ensure(xy == yx, || format!("tr({a}·{b}) = {xy} but tr({b}·{a}) = {yx}"))?;
            }
        }
    }
    Ok(format!("n ≤ {top}"))
}

fn markov_property(max_n: usize) -> Check {
    let top = max_n.min(4);
    for n in 1..=top {
        let ebar = AlgebraElement::from_diagram(lib(BrauerDiagram::e(n, n + 1))?, LaurentPoly::power('δ', -1));
        for d in BrauerDiagram::all(n) {
            let lhs = trace(&lib(ebar.multiply(&unit(&d).embed(), &delta()))?)?;
            let rhs = &LaurentPoly::power('δ', -2) * &trace(&unit(&d))?;
            ensure(lhs == rhs, || format!("tr(ē_{n}·{d}) = {lhs}, δ⁻²tr = {rhs}"))?;
        }
    }
    Ok(format!("n ≤ {top}"))
}

fn iterated_expectation(max_n: usize) -> Check {
    let top = max_n.min(4);
    for n in 0..=top {
        for d in BrauerDiagram::all(n) {
            let mut x = unit(&d);
            for _ in 0..n {
                x = lib(x.cond_exp(&delta()))?;
            }
            let iterated = x.coeff(&BrauerDiagram::identity(0)).cloned().unwrap_or_else(|| LaurentPoly::zero('δ'));
            let direct = trace(&unit(&d))?;
            ensure(iterated == direct, || format!("{d}: E∘⋯∘E gives {iterated}, closure gives {direct}"))?;
        }
    }
    Ok(format!("n ≤ {top}"))
}

fn generic_gram(max_n: usize) -> Check {
    let top = max_n.min(4);
    for n in 0..=top {
        ensure(lib(generic_structure_check(n))?, || format!("n = {n}: some tr(b·b′) breaks the δ^k pattern"))?;
    }
    Ok(format!("n ≤ {top}"))
}

fn transition(max_n: usize) -> Check {
    let top = max_n.min(4);
    for n in 0..=top {
        let r = lib(transition_matrix(n))?;
        ensure(r.is_unit, || format!("n = {n}: determinant {}", r.determinant))?;
    }
    Ok(format!("n ≤ {top}"))
}

fn cell_axioms(max_n: usize) -> Check {
    let top = max_n.min(3);
    let one = LaurentPoly::one('δ');
    for n in 0..=top {
        let basis = lib(CellularBasis::new(n))?;
        let bad = lib(check_involution(&basis, &one))?;
        ensure(bad.is_empty(), || format!("n = {n}: involution fails at {}", bad.join(", ")))?;
        let bad = lib(check_left_triangularity(&basis, &delta()))?;
        ensure(bad.is_empty(), || format!("n = {n}: triangularity fails at {}", bad.join(", ")))?;
        ensure(lib(check_ideal_identification(&basis))?, || format!("n = {n}: lower layers ≠ ideal of e_{{n−1}}"))?;
    }
    Ok(format!("n ≤ {top}"))
}

fn coherence(max_n: usize) -> Check {
    let top = max_n.min(4);
    let one = LaurentPoly::one('δ');
    let bases: Vec<CellularBasis> = (0..=top).map(|n| lib(CellularBasis::new(n))).collect::<Result<_, _>>()?;
    let mut lifts = 0;
    for k in 0..=top.min(2) {
        for c in bases[k].elements() {
            let x = lib(c.element_in(&one))?;
            for n in (k..=top).step_by(2) {
                let ok = lib(weak_coherence_check(&x, c.label.shape(), n, &delta(), &bases[n]))?;
                ensure(ok, || format!("{} lifted to n = {n} leaves its layer", c.label))?;
                lifts += 1;
            }
        }
    }
    Ok(format!("{lifts} lifts, n ≤ {top}"))
}

fn closed_forms() -> Check {
    for d in -20i64..=20 {
        if d != 0 {
            for (kind, closed) in [(MKind::M0, m0(d)), (MKind::M1, m1(d)), (MKind::M2, m2(d))] {
                let closed = lib(closed)?;
                let brute = m_bruteforce(kind, d, 40).bound;
                ensure(closed == brute, || format!("{kind:?}({d}) = {closed}, brute force {brute}"))?;
            }
        }
        let brute = m_bruteforce(MKind::M3, d, 40).bound;
        ensure(m3(d) == brute, || format!("m3({d}) = {}, brute force {brute}", m3(d)))?;
    }
    Ok("δ ∈ [−20, 20], search to level 40".into())
}

fn primed_forms() -> Check {
    for e in 2u64..=12 {
        for f in [e, 2 * e] {
            let Ok(root) = RootSpec::new(e, f) else { continue };
            for n in (1 - e as i64)..=0 {
                for eps in [1i8, -1] {
                    for char2 in [false, true] {
                        let cases = [
                            (MKind::M1, m1p(n, e)),
                            (MKind::M2, m2p(n, eps, root, char2)),
                            (MKind::M3, m3p(n, eps, root, char2)),
                        ];
                        for (kind, closed) in cases {
                            let closed = lib(closed)?;
                            let brute = lib(mprime_bruteforce(kind, n, eps, root, char2, 40))?.bound;
                            ensure(closed == brute, || {
                                format!("{kind:?}′ at e={e} f={f} N={n} ε={eps} char2={char2}: {closed} vs {brute}")
                            })?;
                        }
                    }
                }
            }
        }
    }
    Ok("e ∈ [2, 12], f ∈ {e, 2e}".into())
}

fn gram_levels(max_n: usize) -> Check {
    let n_max = max_n.min(4);
    for d in [1i64, -1, 2, -2, 3, -4, 5] {
        let spec = lib(ParamSpec::brauer(0, DeltaSpec::Integer(d)))?;
        let gram = lib(first_degenerate_level(&spec, n_max))?.map(|r| r.n);
        let weight = lib(vanishing_level(&spec, n_max))?.map(|w| w.level);
        let theorem = lib(decide_brauer(&spec))?.bound;
        let predicted = match theorem {
            Bound::Finite(m) if m as usize <= n_max => Some(m as usize),
            _ => None,
        };
        ensure(gram == weight && gram == predicted, || {
            format!("δ = {d}: Gram {gram:?}, weights {weight:?}, theorem {theorem}")
        })?;
    }
    Ok(format!("δ ∈ {{1, −1, 2, −2, 3, −4, 5}}, n ≤ {n_max}"))
}

fn q_one(max_n: usize) -> Check {
    let (qb, bmw) = (max_n.min(6), max_n.min(5));
    let one = rat(1, 1);
    for size in 0..=qb {
        for shape in partitions_of(size) {
            let b = brauer_weight(&shape);
            for n in -5i64..=5 {
                let expected = lib(b.eval(&rat(n, 1)))?;
                let q = lib(qbrauer_weight_at_power(&shape, n).eval(&one))?;
                ensure(q == expected, || format!("q-Brauer {shape}, N = {n}: {q} vs {expected}"))?;
                if size <= bmw {
                    let w = lib(bmw_weight_at_power(&shape, n, 1).eval(&one))?;
                    ensure(w == expected, || format!("BMW {shape}, N = {n}: {w} vs {expected}"))?;
                }
            }
        }
    }
    Ok(format!("q-Brauer |λ| ≤ {qb}, BMW |λ| ≤ {bmw}"))
}

fn normalization(max_n: usize) -> Check {
    let top = max_n.min(5);
    for n in 0..=top {
        let mut total = RationalFunction::zero('δ');
        for (shape, count) in path_counts(n) {
            let c = i64::try_from(count).map_err(|e| e.to_string())?;
            total = &total + &(&RationalFunction::from_int('δ', c) * &brauer_weight(&shape));
        }
        let target = lib(RationalFunction::var('δ').pow(n as i64))?;
        ensure(total == target, || format!("Brauer, n = {n}: Σ = {total}"))?;
    }
    let top_q = max_n.min(4);
    for family in [Family::QBrauer, Family::Bmw] {
        for big_n in [3i64, 5, -4] {
            let delta = loop_parameter(family, big_n, 1);
            for n in 0..=top_q {
                let mut total = RationalFunction::zero('q');
                for (shape, count) in path_counts(n) {
                    let c = i64::try_from(count).map_err(|e| e.to_string())?;
                    let w = match family {
                        Family::Bmw => bmw_weight_at_power(&shape, big_n, 1),
                        _ => qbrauer_weight_at_power(&shape, big_n),
                    };
                    total = &total + &(&RationalFunction::from_int('q', c) * &w);
                }
                let target = lib(delta.pow(n as i64))?;
                ensure(total == target, || format!("{family}, N = {big_n}, n = {n}: Σ = {total}"))?;
            }
        }
    }
    Ok(format!("Brauer n ≤ {top}, q-families n ≤ {top_q}"))
}

type NamedCheck = (&'static str, Box<dyn Fn(usize) -> Check>);

fn suite_checks(suite: Suite) -> Vec<NamedCheck> {
    match suite {
        Suite::Counting => vec![
            ("path counts", Box::new(path_squares)),
            ("coset counts", Box::new(coset_counts)),
            ("factorization round trips", Box::new(round_trips)),
        ],
        Suite::Trace => vec![
            ("trace symmetry", Box::new(trace_symmetry)),
            ("Markov property", Box::new(markov_property)),
            ("iterated expectation", Box::new(iterated_expectation)),
            ("generic Gram structure", Box::new(generic_gram)),
        ],
        Suite::Cellular => vec![
            ("unimodular transition", Box::new(transition)),
            ("cellular axioms", Box::new(cell_axioms)),
            ("weak coherence", Box::new(coherence)),
        ],
        Suite::OracleEquivalence => vec![
            ("closed forms", Box::new(|_| closed_forms())),
            ("primed closed forms", Box::new(|_| primed_forms())),
            ("Gram levels", Box::new(gram_levels)),
        ],
        Suite::Specialization => {
            vec![("q = 1 specialization", Box::new(q_one)), ("weight normalization", Box::new(normalization))]
        }
        Suite::All => [Suite::Counting, Suite::Trace, Suite::Cellular, Suite::OracleEquivalence, Suite::Specialization]
            .into_iter()
            .flat_map(suite_checks)
            .collect(),
    }
}

fn suite_of(check: &str) -> &'static str {
    for (suite, name) in [
        (Suite::Counting, "counting"),
        (Suite::Trace, "trace"),
        (Suite::Cellular, "cellular"),
        (Suite::OracleEquivalence, "oracle-equivalence"),
        (Suite::Specialization, "specialization"),
    ] {
        if suite_checks(suite).iter().any(|(c, _)| *c == check) {
            return name;
        }
    }
    "unknown"
}

pub fn run_suite(suite: Suite, max_n: usize) -> Vec<CheckResult> {
    suite_checks(suite)
        .into_iter()
        .map(|(name, check)| {
            let (passed, detail) = match check(max_n) {
                Ok(d) => (true, d),
                Err(d) => (false, d),
            };
            CheckResult { suite: suite_of(name).into(), check: name.into(), passed, detail }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suites_pass() {
        for suite in [Suite::Counting, Suite::Trace, Suite::Cellular, Suite::Specialization] {
            let results = run_suite(suite, 3);
            assert!(results.iter().all(|r| r.passed), "{results:?}");
        }
    }

    #[test]
    fn all_covers_every_suite() {
        let results = run_suite(Suite::All, 2);
        let suites: std::collections::BTreeSet<_> = results.iter().map(|r| r.suite.as_str()).collect();
        assert_eq!(suites.len(), 5);
        assert!(results.iter().all(|r| r.passed), "{results:?}");
    }

    #[test]
    fn failures_carry_counterexamples() {
        let r = ensure(false, || "x".into());
        assert_eq!(r, Err("x".to_string()));
    }
}
