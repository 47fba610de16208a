//! Checks of the palindromic symmetry and the identities behind it, with
//! structured reports.
//!
//! Every check returns the first failing index or dilation as its witness.
//! A report is *fatal* when a check fails that cannot fail for a correct
//! implementation: the symmetry for a polytope whose dual is a lattice
//! polytope, reciprocity, the interior-shift identity, the agreement of the
//! two delta-vector computations, or non-negativity.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::count::{count_points, interior_shift_compare, CountConfig, ShiftComparison};
use crate::error::{Error, Result};
use crate::polytope::Polytope;
use crate::quasi::{self, interleave, DeltaVector, EhrhartQP, ResidueDeltaTable};
use crate::serde_big;

pub const DEFAULT_M_MAX: u64 = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyConfig {
    pub m_max: u64,
    pub count: CountConfig,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            m_max: DEFAULT_M_MAX,
            count: CountConfig::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// Position in a delta-vector.
    Index { j: usize },
    /// Entry `delta[i][r]` of a residue table.
    TableEntry { i: usize, r: usize },
    /// A dilation where two integer quantities disagree.
    Dilation {
        m: i64,
        #[serde(with = "serde_big::single")]
        expected: BigInt,
        #[serde(with = "serde_big::single")]
        actual: BigInt,
    },
    /// A lattice point in exactly one of `mP°` and `(m-1)P`.
    Point {
        m: u64,
        #[serde(with = "serde_big::vec")]
        point: Vec<BigInt>,
        in_interior: bool,
    },
    /// The two symmetry formulations disagree.
    Symmetry { theorem: bool, palindrome: bool },
    /// Lattice-dual flag and palindromicity disagree.
    Characterization { dual_is_lattice: bool, palindromic: bool },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Index { j } => write!(f, "index {j}"),
            Witness::TableEntry { i, r } => write!(f, "entry i={i} r={r}"),
            Witness::Dilation { m, expected, actual } => {
                write!(f, "m={m}: expected {expected}, got {actual}")
            }
            Witness::Point {
                m,
                point,
                in_interior,
            } => {
                let coords: Vec<String> = point.iter().map(ToString::to_string).collect();
                let side = if *in_interior {
                    "interior of mP only"
                } else {
                    "(m-1)P only"
                };
                write!(f, "m={m}: point ({}) in {side}", coords.join(", "))
            }
            Witness::Symmetry {
                theorem,
                palindrome,
            } => write!(f, "theorem={theorem} palindrome={palindrome}"),
            Witness::Characterization {
                dual_is_lattice,
                palindromic,
            } => write!(f, "dual_is_lattice={dual_is_lattice} palindromic={palindromic}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub fatal: bool,
    pub witness: Option<Witness>,
}

impl CheckResult {
    fn new(name: &str, witness: Option<Witness>) -> Self {
        Self {
            name: name.to_string(),
            passed: witness.is_none(),
            fatal: false,
            witness,
        }
    }

    fn fatal_if(mut self, cond: bool) -> Self {
        self.fatal = !self.passed && cond;
        self
    }
}

/// `qp(-m) = (-1)^n * |interior of mP ∩ Z^n|` for `m = 1 ..= m_max`.
pub fn check_reciprocity(
    p: &Polytope,
    qp: &EhrhartQP,
    m_max: u64,
    cfg: &CountConfig,
) -> Result<CheckResult> {
    let sign = if p.dim().is_multiple_of(2) { 1 } else { -1 };
    for m in 1..=m_max {
        let interior = BigInt::from(count_points(p, m, true, cfg)?);
        let expected = interior * sign;
        let actual = qp.evaluate(&-BigInt::from(m));
        if expected != actual {
            return Ok(CheckResult::new(
                "reciprocity",
                Some(Witness::Dilation {
                    m: -(m as i64),
                    expected,
                    actual,
                }),
            ));
        }
    }
    Ok(CheckResult::new("reciprocity", None))
}

pub fn check_palindrome(d: &DeltaVector) -> CheckResult {
    let e = d.entries();
    let last = e.len().saturating_sub(1);
    let witness = (0..e.len())
        .find(|&j| e[j] != e[last - j])
        .map(|j| Witness::Index { j });
    CheckResult::new("palindrome", witness)
}

/// `delta[i][r] = delta[n-i][k-r-1]` everywhere.
pub fn check_theorem(t: &ResidueDeltaTable) -> CheckResult {
    let (n, k) = (t.n(), t.k());
    let witness = (0..=n)
        .flat_map(|i| (0..k).map(move |r| (i, r)))
        .find(|&(i, r)| t.get(i, r) != t.get(n - i, k - r - 1))
        .map(|(i, r)| Witness::TableEntry { i, r });
    CheckResult::new("theorem", witness)
}

/// `d` is the interleaving of `t`, and the table symmetry holds iff `d` is
/// palindromic.
pub fn check_equivalence(t: &ResidueDeltaTable, d: &DeltaVector) -> CheckResult {
    let expected = interleave(t);
    let (a, b) = (expected.entries(), d.entries());
    let mismatch = (0..a.len().max(b.len())).find(|&j| a.get(j) != b.get(j));
    if let Some(j) = mismatch {
        return CheckResult::new("equivalence", Some(Witness::Index { j }));
    }
    let theorem = check_theorem(t).passed;
    let palindrome = check_palindrome(d).passed;
    let witness = (theorem != palindrome).then_some(Witness::Symmetry {
        theorem,
        palindrome,
    });
    CheckResult::new("equivalence", witness)
}

pub fn check_nonnegativity(d: &DeltaVector) -> CheckResult {
    let witness = d
        .entries()
        .iter()
        .position(Signed::is_negative)
        .map(|j| Witness::Index { j });
    CheckResult::new("nonnegativity", witness)
}

/// `delta_0 = 1`, `delta[0][r] = L(r)`, and equal column sums.
pub fn check_structure(t: &ResidueDeltaTable, counts: &[BigInt]) -> CheckResult {
    let first_row = (0..t.k()).find(|&r| counts.get(r) != Some(t.get(0, r)));
    if let Some(r) = first_row {
        return CheckResult::new("structure", Some(Witness::TableEntry { i: 0, r }));
    }
    let sums = t.column_sums();
    let witness = sums
        .iter()
        .position(|s| *s != sums[0])
        .map(|r| Witness::TableEntry { i: t.n(), r });
    CheckResult::new("structure", witness)
}

pub fn check_oracle(fitted: &DeltaVector, series: &DeltaVector) -> CheckResult {
    let (a, b) = (fitted.entries(), series.entries());
    let witness = (0..a.len().max(b.len()))
        .find(|&j| a.get(j) != b.get(j))
        .map(|j| Witness::Index { j });
    CheckResult::new("oracle_equivalence", witness)
}

/// Interior-shift set identity for `m = 1 ..= m_max`.
pub fn check_interior_shift(p: &Polytope, m_max: u64, cfg: &CountConfig) -> Result<CheckResult> {
    let witness = find_interior_shift_violation(p, m_max, cfg)?.map(|cmp| Witness::Point {
        m: cmp.m,
        point: cmp.witness.expect("violation has a witness"),
        in_interior: cmp.witness_in_interior.expect("violation has a side"),
    });
    Ok(CheckResult::new("interior_shift", witness))
}

/// Smallest `m <= m_max` at which the interior of `mP` and `(m-1)P` carry
/// different lattice points, if any.
pub fn find_interior_shift_violation(
    p: &Polytope,
    m_max: u64,
    cfg: &CountConfig,
) -> Result<Option<ShiftComparison>> {
    for m in 1..=m_max {
        let cmp = interior_shift_compare(p, m, cfg)?;
        if !cmp.equal() {
            return Ok(Some(cmp));
        }
    }
    Ok(None)
}

fn characterization(dual_is_lattice: bool, palindromic: bool) -> CheckResult {
    let witness = (dual_is_lattice != palindromic).then_some(Witness::Characterization {
        dual_is_lattice,
        palindromic,
    });
    // a lattice dual with a non-palindromic delta-vector contradicts the theorem
    CheckResult::new("characterization", witness).fatal_if(dual_is_lattice)
}

/// Agreement of "dual is a lattice polytope" with "delta-vector is palindromic".
pub fn check_characterization(p: &Polytope, cfg: &CountConfig) -> Result<CheckResult> {
    let dual_is_lattice = p.dual_is_lattice()?;
    let qp = quasi::fit_qp(p, cfg)?;
    let palindromic = check_palindrome(&quasi::delta_vector(&qp)).passed;
    Ok(characterization(dual_is_lattice, palindromic))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub polytope_id: String,
    pub n: usize,
    pub k: usize,
    pub dual_is_lattice: bool,
    pub delta: DeltaVector,
    pub residue_table: ResidueDeltaTable,
    pub checks: Vec<CheckResult>,
    pub fatal: bool,
}

impl VerificationReport {
    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn passed(&self, name: &str) -> Option<bool> {
        self.check(name).map(|c| c.passed)
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Run every check on `p` and aggregate.
pub fn full_report(id: &str, p: &Polytope, cfg: &VerifyConfig) -> Result<VerificationReport> {
    if !p.origin_is_interior() {
        return Err(Error::OriginNotInterior);
    }
    let dual_is_lattice = p.dual_is_lattice()?;
    let (qp, series, counts) = quasi::fit_and_series(p, &cfg.count)?;
    let delta = quasi::delta_vector(&qp);
    let table = qp.table().clone();

    let palindrome = check_palindrome(&delta).fatal_if(dual_is_lattice);
    let palindromic = palindrome.passed;
    let mut checks = vec![
        check_oracle(&delta, &series).fatal_if(true),
        check_structure(&table, &counts).fatal_if(true),
        check_nonnegativity(&delta).fatal_if(true),
        check_reciprocity(p, &qp, cfg.m_max, &cfg.count)?.fatal_if(true),
    ];
    if dual_is_lattice {
        checks.push(check_interior_shift(p, cfg.m_max, &cfg.count)?.fatal_if(true));
    }
    checks.push(check_theorem(&table).fatal_if(dual_is_lattice));
    checks.push(palindrome);
    checks.push(check_equivalence(&table, &delta).fatal_if(true));
    checks.push(characterization(dual_is_lattice, palindromic));

    let fatal = checks.iter().any(|c| c.fatal);
    Ok(VerificationReport {
        polytope_id: id.to_string(),
        n: qp.n(),
        k: qp.k(),
        dual_is_lattice,
        delta,
        residue_table: table,
        checks,
        fatal,
    })
}

pub fn report_to_json(report: &VerificationReport) -> String {
    serde_json::to_string(report).expect("plain data serializes")
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "polytope: {}", self.polytope_id)?;
        writeln!(f, "n = {}, k = {}", self.n, self.k)?;
        writeln!(f, "dual is lattice: {}", self.dual_is_lattice)?;
        writeln!(f, "delta: {}", self.delta)?;
        writeln!(f, "residue table: {}", self.residue_table)?;
        for c in &self.checks {
            let status = match (c.passed, c.fatal) {
                (true, _) => "PASS",
                (false, false) => "FAIL",
                (false, true) => "FATAL",
            };
            write!(f, "  {status:5} {}", c.name)?;
            if let Some(w) = &c.witness {
                write!(f, " ({w})")?;
            }
            writeln!(f)?;
        }
        write!(f, "result: {}", if self.fatal { "FATAL" } else { "ok" })
    }
}
