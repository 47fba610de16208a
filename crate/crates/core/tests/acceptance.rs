//! Acceptance criteria. Runs as a plain binary (`harness = false`) so that
//! every criterion prints one PASS/FAIL line; exits nonzero on any failure.

mod common;

use std::time::{Duration, Instant};

use ehrhart::catalog;
use ehrhart::count::{count_points, interior_shift_check, CountConfig};
use ehrhart::quasi::{self, binomial_i64, evaluate_qp, negative_binomial_reflect};
use ehrhart::verify::{self, check_characterization, check_palindrome, check_theorem};
use ehrhart::{DeltaVector, EhrhartQP, Polytope};
use num_bigint::BigInt;

const M_MAX: u64 = 6;

struct Computed {
    name: String,
    p: Polytope,
    qp: EhrhartQP,
    delta: DeltaVector,
    series: DeltaVector,
    counts: Vec<BigInt>,
}

fn compute(name: &str, p: &Polytope) -> Computed {
    let cfg = CountConfig::default();
    let (qp, series, counts) = quasi::fit_and_series(p, &cfg).expect("fit succeeds");
    Computed {
        name: name.to_string(),
        p: p.clone(),
        delta: quasi::delta_vector(&qp),
        qp,
        series,
        counts,
    }
}

struct Outcome {
    id: usize,
    title: &'static str,
    failures: Vec<String>,
    detail: String,
}

fn run(id: usize, title: &'static str, body: impl FnOnce(&mut Vec<String>) -> String) -> Outcome {
    let mut failures = Vec::new();
    let detail = body(&mut failures);
    let status = if failures.is_empty() { "PASS" } else { "FAIL" };
    println!("[{status}] criterion {id}: {title}: {detail}");
    for f in failures.iter().take(10) {
        println!("         {f}");
    }
    Outcome {
        id,
        title,
        failures,
        detail,
    }
}

fn fixture_deltas(out: &mut Vec<String>) -> String {
    let expected: &[(&str, &[i64])] = &[
        ("square2", &[1, 6, 1]),
        ("diamond2", &[1, 2, 1]),
        ("halfdiamond2", &[1, 1, 2, 2, 1, 1]),
        ("seg_mhalf_1", &[1, 2, 2, 1]),
        ("seg_mhalf_third", &[1, 1, 2, 3, 4, 4, 4, 4, 3, 2, 1, 1]),
        ("seg_m1_2", &[1, 2]),
        ("seg_m23_1", &[1, 2, 4, 4, 3, 1]),
    ];
    let mut slowest = Duration::ZERO;
    for (name, want) in expected {
        let p = catalog::lookup(name).unwrap();
        let start = Instant::now();
        let qp = quasi::fit_qp(&p, &CountConfig::default()).unwrap();
        let got = quasi::delta_vector(&qp).to_i64().unwrap();
        let elapsed = start.elapsed();
        slowest = slowest.max(elapsed);
        if got != *want {
            out.push(format!("{name}: got {got:?}, want {want:?}"));
        }
        if elapsed >= Duration::from_secs(1) {
            out.push(format!("{name}: took {elapsed:?}"));
        }
        if *name == "seg_mhalf_1" {
            let cols = (qp.table().column(0), qp.table().column(1));
            let want = (
                vec![BigInt::from(1), BigInt::from(2)],
                vec![BigInt::from(2), BigInt::from(1)],
            );
            if cols != want {
                out.push(format!("seg_mhalf_1 residue table {cols:?}"));
            }
        }
    }
    format!("{} fixtures, slowest {slowest:?}", expected.len())
}

fn theorem_suite(instances: &[Computed], elapsed: Duration, out: &mut Vec<String>) -> String {
    for c in instances {
        if let Some(w) = check_theorem(c.qp.table()).witness {
            out.push(format!("{}: theorem fails at {w} ({})", c.name, c.p));
        }
        if let Some(w) = check_palindrome(&c.delta).witness {
            out.push(format!("{}: palindrome fails at {w} ({})", c.name, c.p));
        }
    }
    if elapsed >= Duration::from_secs(300) {
        out.push(format!("runtime {elapsed:?} exceeds 5 minutes"));
    }
    let max_k = instances.iter().map(|c| c.qp.k()).max().unwrap_or(0);
    format!("{} instances, max k = {max_k}, {elapsed:?}", instances.len())
}

fn reciprocity_suite(set: &[&Computed], out: &mut Vec<String>) -> String {
    let cfg = CountConfig::default();
    let mut non_lattice = 0;
    for c in set {
        if !c.p.dual_is_lattice().unwrap() {
            non_lattice += 1;
        }
        let sign = if c.p.dim() % 2 == 0 { 1 } else { -1 };
        for m in 1..=M_MAX {
            let interior = BigInt::from(count_points(&c.p, m, true, &cfg).unwrap()) * sign;
            let value = evaluate_qp(&c.qp, -(m as i64));
            if value != interior {
                out.push(format!("{} m={m}: qp(-m)={value}, (-1)^n interior={interior}", c.name));
            }
        }
    }
    format!("{} polytopes ({non_lattice} with non-lattice dual), m = 1..{M_MAX}", set.len())
}

fn interior_shift_suite(set: &[&Computed], out: &mut Vec<String>) -> String {
    let cfg = CountConfig::default();
    let mut checked = 0;
    for c in set.iter().filter(|c| c.p.dual_is_lattice().unwrap()) {
        checked += 1;
        for m in 1..=M_MAX {
            if !interior_shift_check(&c.p, m, &cfg).unwrap() {
                out.push(format!("{} m={m}: sets differ", c.name));
            }
        }
    }
    let mut witnesses = Vec::new();
    for name in ["seg_m1_2", "seg_m23_1"] {
        let p = catalog::lookup(name).unwrap();
        match verify::find_interior_shift_violation(&p, M_MAX, &cfg).unwrap() {
            Some(cmp) => {
                let w: Vec<String> = cmp.witness.unwrap().iter().map(ToString::to_string).collect();
                witnesses.push(format!("{name}: m={} point ({})", cmp.m, w.join(",")));
            }
            None => out.push(format!("{name}: no violation found up to m={M_MAX}")),
        }
    }
    format!("{checked} lattice-dual polytopes equal; {}", witnesses.join("; "))
}

fn oracle_suite(set: &[&Computed], out: &mut Vec<String>) -> String {
    for c in set {
        if c.delta != c.series {
            out.push(format!("{}: fit {} vs series {}", c.name, c.delta, c.series));
        }
        let (n, k) = (c.qp.n(), c.qp.k());
        for i in 0..=n {
            for r in 0..k {
                if c.delta.entries()[i * k + r] != *c.qp.table().get(i, r) {
                    out.push(format!("{}: interleaving breaks at i={i} r={r}", c.name));
                }
            }
        }
    }
    format!("{} polytopes", set.len())
}

fn extrapolation_suite(fixtures: &[&Computed], out: &mut Vec<String>) -> String {
    let cfg = CountConfig::default();
    let mut evaluations = 0;
    for c in fixtures {
        let top = 3 * c.qp.k() * (c.qp.n() + 1);
        for m in 0..=top as u64 {
            let fresh = BigInt::from(count_points(&c.p, m, false, &cfg).unwrap());
            evaluations += 1;
            if evaluate_qp(&c.qp, m as i64) != fresh {
                out.push(format!("{} m={m}: qp disagrees with count {fresh}", c.name));
            }
        }
    }
    format!("{} fixtures, {evaluations} evaluations", fixtures.len())
}

fn structure_suite(set: &[&Computed], out: &mut Vec<String>) -> String {
    for c in set {
        let t = c.qp.table();
        if c.delta.entries()[0] != BigInt::from(1) {
            out.push(format!("{}: delta_0 = {}", c.name, c.delta.entries()[0]));
        }
        for r in 0..t.k() {
            if *t.get(0, r) != c.counts[r] {
                out.push(format!("{}: delta[0][{r}] != L({r})", c.name));
            }
        }
        let sums = t.column_sums();
        if sums.iter().any(|s| *s != sums[0]) {
            out.push(format!("{}: column sums {sums:?}", c.name));
        }
        if let Some(j) = c.delta.entries().iter().position(|d| *d < BigInt::from(0)) {
            out.push(format!("{}: negative delta at {j}", c.name));
        }
    }
    format!("{} delta-vectors", set.len())
}

fn characterization_suite(set: &[&Computed], out: &mut Vec<String>) -> String {
    let (mut lattice, mut other) = (0, 0);
    for c in set {
        let res = check_characterization(&c.p, &CountConfig::default()).unwrap();
        if c.p.dual_is_lattice().unwrap() {
            lattice += 1;
        } else {
            other += 1;
        }
        if res.fatal {
            out.push(format!("{}: FATAL {:?}", c.name, res.witness));
        } else if !res.passed {
            out.push(format!("{}: disagreement {:?}", c.name, res.witness));
        }
    }
    format!("{} polytopes ({lattice} lattice dual, {other} not)", set.len())
}

fn reflection_suite(out: &mut Vec<String>) -> String {
    let mut cases = 0;
    for n in 0..=6u32 {
        for x in -20..=20i64 {
            cases += 1;
            let r = negative_binomial_reflect(&BigInt::from(x), n);
            let lhs = binomial_i64(x, n);
            if r.top != BigInt::from(n as i64 - 1 - x) || r.sign != (-1i32).pow(n) {
                out.push(format!("x={x} n={n}: reflect gave ({}, {})", r.sign, r.top));
            }
            if lhs != quasi::binomial(&r.top, n) * r.sign {
                out.push(format!("x={x} n={n}: C(x,n)={lhs}"));
            }
            // independent falling-factorial evaluation in i128
            let mut num: i128 = 1;
            let mut den: i128 = 1;
            for j in 0..n as i128 {
                num *= x as i128 - j;
                den *= j + 1;
            }
            if lhs != BigInt::from(num / den) {
                out.push(format!("x={x} n={n}: binomial {lhs} vs product {}", num / den));
            }
        }
    }
    format!("{cases} (x, n) pairs")
}

fn main() {
    let fixtures: Vec<Computed> = catalog::catalog()
        .iter()
        .map(|(name, p)| compute(name, p))
        .collect();

    let start = Instant::now();
    let duals: Vec<Computed> = common::dual_instances(2024, 100)
        .iter()
        .map(|(name, p)| compute(name, p))
        .collect();
    let dual_elapsed = start.elapsed();

    let controls: Vec<Computed> = common::control_instances(77, 50)
        .iter()
        .map(|(name, p)| compute(name, p))
        .collect();

    let fixture_refs: Vec<&Computed> = fixtures.iter().collect();
    let fixtures_and_controls: Vec<&Computed> = fixtures.iter().chain(&controls).collect();
    let everything: Vec<&Computed> = fixtures.iter().chain(&duals).chain(&controls).collect();

    let outcomes = vec![
        run(1, "fixture delta-vectors", fixture_deltas),
        run(2, "theorem and palindrome on 100 lattice-dual instances", |o| {
            theorem_suite(&duals, dual_elapsed, o)
        }),
        run(3, "reciprocity on fixtures and 50 controls", |o| {
            reciprocity_suite(&fixtures_and_controls, o)
        }),
        run(4, "interior-shift set identity", |o| interior_shift_suite(&everything, o)),
        run(5, "fitted vs series delta-vector, interleaving", |o| oracle_suite(&everything, o)),
        run(6, "extrapolation to m = 3k(n+1)", |o| extrapolation_suite(&fixture_refs, o)),
        run(7, "structural invariants of delta", |o| structure_suite(&everything, o)),
        run(8, "characterization on fixtures and 50 controls", |o| {
            characterization_suite(&fixtures_and_controls, o)
        }),
        run(9, "binomial reflection", reflection_suite),
    ];

    let failed: Vec<&Outcome> = outcomes.iter().filter(|o| !o.failures.is_empty()).collect();
    println!(
        "acceptance: {} of {} criteria passed",
        outcomes.len() - failed.len(),
        outcomes.len()
    );
    if !failed.is_empty() {
        for o in &failed {
            eprintln!("criterion {} ({}) failed: {}", o.id, o.title, o.detail);
        }
        std::process::exit(1);
    }
}
