//! The full identity sweep.
//!
//! [`run_suite`] evaluates every identity over deterministic parameter ranges
//! and never stops at the first failure: each identity becomes one
//! [`Entry`] carrying its smallest counterexample.
//!
//! A [`Mutation`] replaces one term of the Narayana formula, the symmetric
//! closed form, or the half-path recurrence with a perturbed value, so the
//! suite can be shown to fail when the mathematics is wrong.

use std::fmt;
use std::fs;
use std::path::{Path as FsPath, PathBuf};
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use crate::algebra::{Integer, QPoly};
use crate::error::{Error, Result};
use crate::numbers::{
    binomial, catalan, check_neg1_sum_identity_range, hoggatt_binomial, hoggatt_neg1_by_evaluation,
    hoggatt_neg1_closed, hoggatt_neg1_table_recurrence_with, narayana, q_binomial,
    q_hoggatt_binomial, symmetric_narayana_closed, QBinomialTable,
};
use crate::paths::{
    count_u_dp, count_u_enumeration, count_u_recurrence_with, enumerate_dyck,
    enumerate_nonnegative, enumerate_symmetric_dyck, major_index, valley_count, GgCell, GgTable,
    Path, Step,
};
use crate::report::{Check, Entry, VerificationReport};

/// Rows 0..=7 of the Hoggatt triangle as published.
pub const PRINTED_HOGGATT: [&[u64]; 8] = [
    &[1],
    &[1, 1],
    &[1, 3, 1],
    &[1, 6, 6, 1],
    &[1, 10, 20, 10, 1],
    &[1, 15, 50, 50, 15, 1],
    &[1, 21, 105, 175, 105, 21, 1],
    &[1, 28, 196, 490, 490, 196, 28, 1],
];

/// Rows 0..=7 of the Hoggatt triangle at `q = -1` as published.
pub const PRINTED_HOGGATT_NEG1: [&[u64]; 8] = [
    &[1],
    &[1, 1],
    &[1, 1, 1],
    &[1, 2, 2, 1],
    &[1, 2, 4, 2, 1],
    &[1, 3, 6, 6, 3, 1],
    &[1, 3, 9, 9, 9, 3, 1],
    &[1, 4, 12, 18, 18, 12, 4, 1],
];

/// Symmetric Dyck paths of semi-length 1..=4 grouped by valley count, as
/// published.
pub const PRINTED_SYMMETRIC_PATHS: [&[&[&str]]; 4] = [
    &[&["UD"]],
    &[&["UUDD"], &["UDUD"]],
    &[&["UUUDDD"], &["UUDUDD"], &["UDUDUD"]],
    &[
        &["UUUUDDDD"],
        &["UUUDUDDD", "UUDDUUDD"],
        &["UUDUDUDD", "UDUUDDUD"],
        &["UDUDUDUD"],
    ],
];

/// The q-Hoggatt route through products of `<j>_q` is slow; it is checked on
/// a smaller range than the other polynomial identities.
const ANGLE_ROUTE_MAX: i64 = 24;

pub const DEFAULT_MAX_ENUM: usize = 14;
pub const DEFAULT_MAX_DP: usize = 200;
pub const DEFAULT_MAX_POLY: usize = 60;
pub const DEFAULT_MAX_CLOSED: usize = 500;

/// Vendored prefix of OEIS A088855 (symmetric Dyck paths by valleys, read by
/// rows).
pub fn default_golden_path() -> PathBuf {
    PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/data/b088855.txt"))
}

/// A single-term perturbation of one of the formulas under test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mutation {
    /// Adds `delta` to `N(n, k)`.
    Narayana { n: i64, k: i64, delta: i64 },
    /// Adds `delta` to the symmetric closed form at `(n, k)`.
    SymmetricClosed { n: i64, k: i64, delta: i64 },
    /// Adds `delta` to the first term of the up-step recurrence at `cell`.
    UpRecurrence { cell: GgCell, delta: i64 },
}

impl fmt::Display for Mutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mutation::Narayana { n, k, delta } => write!(f, "narayana:{n}:{k}:{delta:+}"),
            Mutation::SymmetricClosed { n, k, delta } => write!(f, "closed:{n}:{k}:{delta:+}"),
            Mutation::UpRecurrence { cell, delta } => {
                write!(f, "g:{}:{}:{}:{delta:+}", cell.n, cell.j, cell.k)
            }
        }
    }
}

impl FromStr for Mutation {
    type Err = String;

    /// `narayana:N:K:DELTA`, `closed:N:K:DELTA` or `g:N:J:K:DELTA`.
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let parts: Vec<&str> = s.split(':').collect();
        let int = |t: &str| {
            t.parse::<i64>()
                .map_err(|e| format!("bad number `{t}` in `{s}`: {e}"))
        };
        let uint = |t: &str| {
            t.parse::<usize>()
                .map_err(|e| format!("bad index `{t}` in `{s}`: {e}"))
        };
        match parts.as_slice() {
            ["narayana", n, k, d] => Ok(Mutation::Narayana {
                n: int(n)?,
                k: int(k)?,
                delta: int(d)?,
            }),
            ["closed", n, k, d] => Ok(Mutation::SymmetricClosed {
                n: int(n)?,
                k: int(k)?,
                delta: int(d)?,
            }),
            ["g", n, j, k, d] => Ok(Mutation::UpRecurrence {
                cell: GgCell {
                    n: uint(n)?,
                    j: uint(j)?,
                    k: uint(k)?,
                },
                delta: int(d)?,
            }),
            _ => Err(format!(
                "unrecognised mutation `{s}` (expected narayana:N:K:D, closed:N:K:D or g:N:J:K:D)"
            )),
        }
    }
}

/// The formulas a mutation can reach.
#[derive(Clone, Copy, Debug, Default)]
struct Kernel {
    mutation: Option<Mutation>,
}

impl Kernel {
    fn narayana(&self, n: i64, k: i64) -> Integer {
        let v = narayana(n, k);
        match self.mutation {
            Some(Mutation::Narayana {
                n: mn,
                k: mk,
                delta,
            }) if (mn, mk) == (n, k) => v + delta,
            _ => v,
        }
    }

    fn symmetric_closed(&self, n: i64, k: i64) -> Integer {
        let v = symmetric_narayana_closed(n, k);
        match self.mutation {
            Some(Mutation::SymmetricClosed {
                n: mn,
                k: mk,
                delta,
            }) if (mn, mk) == (n, k) => v + delta,
            _ => v,
        }
    }

    fn gg_table(&self, max_n: usize) -> GgTable {
        match self.mutation {
            Some(Mutation::UpRecurrence { cell, delta }) => {
                GgTable::build_perturbed(max_n, cell, delta)
            }
            _ => GgTable::build(max_n),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    /// Upper bound for exhaustive path enumeration.
    pub max_enum: usize,
    /// Upper bound for the dynamic program, recurrences and closed forms.
    pub max_dp: usize,
    /// Upper bound for identities between fully expanded q-polynomials.
    pub max_poly: usize,
    /// Upper bound for the cheap closed-form sums.
    pub max_closed: usize,
    pub golden: PathBuf,
    pub mutation: Option<Mutation>,
}

impl SuiteConfig {
    /// Closed-form ranges follow `max_dp`; polynomial ranges follow it up to
    /// [`DEFAULT_MAX_POLY`].
    pub fn new(max_enum: usize, max_dp: usize) -> Self {
        assert!(
            1 <= max_enum && max_enum <= max_dp,
            "need 1 <= max_enum <= max_dp"
        );
        Self {
            max_enum,
            max_dp,
            max_poly: max_dp.min(DEFAULT_MAX_POLY),
            max_closed: max_dp,
            golden: default_golden_path(),
            mutation: None,
        }
    }

    pub fn with_mutation(mut self, mutation: Mutation) -> Self {
        self.mutation = Some(mutation);
        self
    }
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            max_enum: DEFAULT_MAX_ENUM,
            max_dp: DEFAULT_MAX_DP,
            max_poly: DEFAULT_MAX_POLY,
            max_closed: DEFAULT_MAX_CLOSED,
            golden: default_golden_path(),
            mutation: None,
        }
    }
}

/// Runs the full sweep with default polynomial and golden-file settings.
pub fn run_suite(max_enum: usize, max_dp: usize) -> VerificationReport {
    run_suite_with(&SuiteConfig::new(max_enum, max_dp))
}

pub fn run_suite_with(config: &SuiteConfig) -> VerificationReport {
    let kernel = Kernel {
        mutation: config.mutation,
    };
    let max_enum = config.max_enum as i64;
    let max_dp = config.max_dp as i64;
    let max_poly = config.max_poly as i64;
    let max_closed = config.max_closed as i64;

    let mut report = VerificationReport::default();
    let poly = PolyCache::new(max_poly);

    report.push(degenerations(&kernel, &poly, max_poly));
    report.push(catalan_degeneration(&poly, max_poly));
    report.push(printed_hoggatt());
    report.push(hoggatt_vs_narayana(&kernel, max_dp));
    report.push(q_binomial_routes(&poly, max_poly.min(ANGLE_ROUTE_MAX)));
    report.push(q_hoggatt_routes(&poly, max_poly.min(ANGLE_ROUTE_MAX)));
    report.push(printed_hoggatt_neg1());
    report.push(neg1_full_polynomial(&poly, max_poly));
    report.push(neg1_reduced_polynomial(max_dp));
    report.push(neg1_recurrence(&kernel, max_dp));
    report.push(narayana_row_sums(&kernel, max_dp));
    report.push(neg1_row_sums(max_closed));
    report.push(neg1_row_sum_recurrences(max_closed));

    let gg = kernel.gg_table(config.max_dp);
    report.push(symmetric_four_way(&kernel, &gg, max_enum));
    report.push(symmetric_three_way(&kernel, &gg, max_enum + 1, max_dp));
    report.push(printed_symmetric_paths());
    report.push(symmetric_totals(max_enum));
    report.push(dyck_totals_and_valleys(&kernel, max_enum));
    report.push(base_cases_enumerated(max_enum));
    report.push(base_cases_dp(&gg, config.max_dp));
    report.push(gg_initial_values(&gg, config.max_dp));
    report.push(gg_boundary_zeros(&gg));
    report.push(down_to_axis(&kernel, &gg, config.max_dp));
    report.push(q_catalan_refinement(&poly, max_poly));
    report.push(major_index_refinement(
        &poly,
        config.max_enum.min(config.max_poly),
    ));
    let mut central = check_neg1_sum_identity_range(1, max_closed);
    central.id = "q-narayana.neg1-sum-central-binomial".into();
    report.push(central);
    report.push(neg1_sum_by_enumeration(&poly, max_enum.min(max_poly)));

    let golden = golden_entry(&config.golden, config.max_dp);
    report.push(golden);
    report
}

/// Fully expanded `N(n, k; q)` for `n <= max_n + 1` and the Gaussian
/// binomials up to `2 max_n`.
struct PolyCache {
    binomials: QBinomialTable,
    narayana: Vec<Vec<std::result::Result<QPoly, String>>>,
}

impl PolyCache {
    fn new(max_n: i64) -> Self {
        let binomials = QBinomialTable::new((2 * max_n).max(max_n + 1));
        let narayana = (0..=max_n + 1)
            .map(|n| {
                (0..n.max(1))
                    .map(|k| binomials.q_narayana(n, k).map_err(|e| e.to_string()))
                    .collect()
            })
            .collect();
        Self {
            binomials,
            narayana,
        }
    }

    fn q_narayana(&self, n: i64, k: i64) -> std::result::Result<&QPoly, &str> {
        match self.narayana[n as usize][k as usize] {
            Ok(ref p) => Ok(p),
            Err(ref e) => Err(e),
        }
    }
}

fn range(from: i64, to: i64) -> String {
    format!("n={from}..={to}")
}

fn degenerations(kernel: &Kernel, poly: &PolyCache, max_poly: i64) -> Entry {
    let mut check = Check::new("q-narayana.at-q-equals-one", range(1, max_poly));
    for n in 1..=max_poly {
        for k in 0..n {
            match poly.q_narayana(n, k) {
                Ok(p) => check.expect_eq(
                    || format!("n={n} k={k}"),
                    &p.eval_i64(1),
                    &kernel.narayana(n, k),
                ),
                Err(e) => check.abort(format!("n={n} k={k}: {e}")),
            }
            let b = poly.binomials.get(n, k).eval_i64(1);
            check.expect_eq(|| format!("[{n} {k}] at 1"), &b, &binomial(n, k));
        }
    }
    check.finish()
}

fn catalan_degeneration(poly: &PolyCache, max_poly: i64) -> Entry {
    let mut check = Check::new("q-catalan.at-q-equals-one", range(0, max_poly));
    for n in 0..=max_poly {
        match poly.binomials.q_catalan(n) {
            Ok(c) => check.expect_eq(|| format!("n={n}"), &c.eval_i64(1), &catalan(n)),
            Err(e) => check.abort(format!("n={n}: {e}")),
        }
    }
    check.finish()
}

fn printed_table(id: &str, rows: &[&[u64]], value: impl Fn(i64, i64) -> Integer) -> Entry {
    let mut check = Check::new(id, range(0, rows.len() as i64 - 1));
    for (n, row) in rows.iter().enumerate() {
        for (k, &want) in row.iter().enumerate() {
            let got = value(n as i64, k as i64);
            check.expect_eq(|| format!("n={n} k={k}"), &got, &Integer::from(want));
        }
    }
    check.finish()
}

fn printed_hoggatt() -> Entry {
    printed_table("hoggatt.printed-table", &PRINTED_HOGGATT, hoggatt_binomial)
}

fn printed_hoggatt_neg1() -> Entry {
    printed_table(
        "hoggatt-neg1.printed-table",
        &PRINTED_HOGGATT_NEG1,
        hoggatt_neg1_closed,
    )
}

fn hoggatt_vs_narayana(kernel: &Kernel, max_dp: i64) -> Entry {
    let mut check = Check::new("hoggatt.equals-shifted-narayana", range(0, max_dp));
    for n in 0..=max_dp {
        for k in 0..=n {
            check.expect_eq(
                || format!("n={n} k={k}"),
                &hoggatt_binomial(n, k),
                &kernel.narayana(n + 1, k),
            );
        }
    }
    check.finish()
}

fn q_binomial_routes(poly: &PolyCache, max_n: i64) -> Entry {
    let mut check = Check::new("q-binomial.product-vs-pascal", range(0, max_n));
    for n in 0..=max_n {
        for k in 0..=n {
            match q_binomial(n, k) {
                Ok(p) => check.expect_eq(|| format!("n={n} k={k}"), &p, poly.binomials.get(n, k)),
                Err(e) => check.abort(format!("n={n} k={k}: {e}")),
            }
        }
    }
    check.finish()
}

fn q_hoggatt_routes(poly: &PolyCache, max_n: i64) -> Entry {
    let mut check = Check::new("q-hoggatt.equals-shifted-q-narayana", range(0, max_n));
    for n in 0..=max_n {
        for k in 0..=n {
            match (q_hoggatt_binomial(n, k), poly.q_narayana(n + 1, k)) {
                (Ok(a), Ok(b)) => {
                    check.expect_eq(|| format!("n={n} k={k}"), &a, b);
                    check.expect_eq(
                        || format!("n={n} k={k} at 1"),
                        &a.eval_i64(1),
                        &hoggatt_binomial(n, k),
                    );
                }
                (Err(e), _) => check.abort(format!("n={n} k={k}: {e}")),
                (_, Err(e)) => check.abort(format!("n={n} k={k}: {e}")),
            }
        }
    }
    check.finish()
}

fn neg1_full_polynomial(poly: &PolyCache, max_poly: i64) -> Entry {
    let mut check = Check::new("hoggatt-neg1.closed-vs-full-polynomial", range(0, max_poly));
    for n in 0..=max_poly {
        for k in 0..=n {
            match poly.q_narayana(n + 1, k) {
                Ok(p) => check.expect_eq(
                    || format!("n={n} k={k}"),
                    &p.eval_i64(-1),
                    &hoggatt_neg1_closed(n, k),
                ),
                Err(e) => check.abort(format!("n={n} k={k}: {e}")),
            }
        }
    }
    check.finish()
}

fn neg1_reduced_polynomial(max_dp: i64) -> Entry {
    let mut check = Check::new(
        "hoggatt-neg1.closed-vs-reduced-polynomial",
        range(0, max_dp),
    );
    match hoggatt_neg1_by_evaluation(max_dp) {
        Ok(table) => {
            for (n, row) in table.rows() {
                for (k, v) in row.iter().enumerate() {
                    check.expect_eq(
                        || format!("n={n} k={k}"),
                        v,
                        &hoggatt_neg1_closed(n as i64, k as i64),
                    );
                }
            }
        }
        Err(e) => check.abort(e.to_string()),
    }
    check.finish()
}

fn neg1_recurrence(kernel: &Kernel, max_dp: i64) -> Entry {
    let mut check = Check::new("hoggatt-neg1.recurrence-vs-closed", range(0, max_dp));
    let table = hoggatt_neg1_table_recurrence_with(max_dp, |n, k| kernel.narayana(n, k));
    for (n, row) in table.rows() {
        for (k, v) in row.iter().enumerate() {
            check.expect_eq(
                || format!("n={n} k={k}"),
                v,
                &hoggatt_neg1_closed(n as i64, k as i64),
            );
        }
    }
    check.finish()
}

fn narayana_row_sums(kernel: &Kernel, max_dp: i64) -> Entry {
    let mut check = Check::new("narayana.row-sum-catalan", range(0, max_dp));
    for n in 0..=max_dp {
        let sum: Integer = (0..=n).map(|k| kernel.narayana(n, k)).sum();
        check.expect_eq(|| format!("n={n}"), &sum, &catalan(n));
    }
    check.finish()
}

fn neg1_row_sum(n: i64) -> Integer {
    (0..=n).map(|k| hoggatt_neg1_closed(n, k)).sum()
}

fn neg1_row_sums(max_closed: i64) -> Entry {
    let mut check = Check::new("hoggatt-neg1.row-sum", range(0, max_closed));
    for n in 0..=max_closed {
        check.expect_eq(
            || format!("n={n}"),
            &neg1_row_sum(n),
            &binomial(n + 1, (n + 1) / 2),
        );
    }
    check.finish()
}

fn neg1_row_sum_recurrences(max_closed: i64) -> Entry {
    let mut check = Check::new("hoggatt-neg1.row-sum-recurrences", range(1, max_closed));
    let sums: Vec<Integer> = (0..=max_closed).map(neg1_row_sum).collect();
    let closed: Vec<Integer> = (0..=max_closed)
        .map(|n| binomial(n + 1, (n + 1) / 2))
        .collect();
    for n in 1..=max_closed as usize {
        for (label, a) in [("s", &sums), ("a", &closed)] {
            let expected = if n % 2 == 1 {
                &a[n - 1] * 2
            } else {
                &a[n - 1] * 2 - catalan(n as i64 / 2)
            };
            check.expect_eq(|| format!("{label}({n})"), &a[n], &expected);
        }
    }
    check.finish()
}

fn symmetric_four_way(kernel: &Kernel, gg: &GgTable, max_enum: i64) -> Entry {
    let mut check = Check::new("symmetric.four-way-agreement", range(1, max_enum));
    let rec = count_u_recurrence_with(max_enum as usize, |n, k| kernel.narayana(n, k));
    for n in 1..=max_enum {
        let closed: Vec<Integer> = (0..n).map(|k| kernel.symmetric_closed(n, k)).collect();
        let routes = [
            ("enumeration", count_u_enumeration(n as usize)),
            ("dp", count_u_dp(n as usize, gg)),
            ("recurrence", rec.row(n as usize).unwrap().to_vec()),
        ];
        compare_rows(&mut check, n, &closed, &routes);
    }
    check.finish()
}

fn symmetric_three_way(kernel: &Kernel, gg: &GgTable, from: i64, to: i64) -> Entry {
    let mut check = Check::new("symmetric.three-way-agreement", range(from, to));
    if from <= to {
        let rec = count_u_recurrence_with(to as usize, |n, k| kernel.narayana(n, k));
        for n in from..=to {
            let closed: Vec<Integer> = (0..n).map(|k| kernel.symmetric_closed(n, k)).collect();
            let routes = [
                ("dp", count_u_dp(n as usize, gg)),
                ("recurrence", rec.row(n as usize).unwrap().to_vec()),
            ];
            compare_rows(&mut check, n, &closed, &routes);
        }
    }
    check.finish()
}

fn compare_rows(check: &mut Check, n: i64, closed: &[Integer], routes: &[(&str, Vec<Integer>)]) {
    let zero = Integer::zero();
    for (name, row) in routes {
        let width = row.len().max(closed.len());
        for k in 0..width {
            let got = row.get(k).unwrap_or(&zero);
            let want = closed.get(k).unwrap_or(&zero);
            check.expect_eq(|| format!("{name} n={n} k={k}"), got, want);
        }
    }
}

fn printed_symmetric_paths() -> Entry {
    let mut check = Check::new("symmetric.printed-paths", range(1, 4));
    for (i, groups) in PRINTED_SYMMETRIC_PATHS.iter().enumerate() {
        let n = i + 1;
        let mut got: Vec<Vec<String>> = vec![Vec::new(); n];
        for p in enumerate_symmetric_dyck(n) {
            got[p.valley_count()].push(p.to_string());
        }
        for (k, want) in groups.iter().enumerate() {
            let mut want: Vec<String> = want.iter().map(|s| s.to_string()).collect();
            want.sort();
            got[k].sort();
            let ok = got[k] == want;
            check.expect(ok, || format!("n={n} k={k}: {:?} != {:?}", got[k], want));
        }
    }
    check.finish()
}

fn symmetric_totals(max_enum: i64) -> Entry {
    let mut check = Check::new("symmetric.count-central-binomial", range(1, max_enum));
    for n in 1..=max_enum {
        let mut it = enumerate_symmetric_dyck(n as usize);
        let mut count = 0u64;
        let mut all_symmetric = true;
        while let Some(w) = it.next_word() {
            count += 1;
            all_symmetric &= w.iter().zip(w.iter().rev()).all(|(a, b)| *a == b.flipped());
        }
        check.expect(all_symmetric, || {
            format!("n={n}: non-symmetric word enumerated")
        });
        check.expect_eq(
            || format!("n={n}"),
            &Integer::from(count),
            &binomial(n, n / 2),
        );
    }
    check.finish()
}

fn dyck_totals_and_valleys(kernel: &Kernel, max_enum: i64) -> Entry {
    let mut check = Check::new("dyck.valley-distribution-narayana", range(1, max_enum));
    for n in 1..=max_enum {
        let mut counts = vec![0u64; n as usize];
        let mut it = enumerate_dyck(n as usize);
        while let Some(w) = it.next_word() {
            counts[valley_count(w)] += 1;
        }
        let total: u64 = counts.iter().sum();
        check.expect_eq(
            || format!("n={n} total"),
            &Integer::from(total),
            &catalan(n),
        );
        for (k, c) in counts.iter().enumerate() {
            check.expect_eq(
                || format!("n={n} k={k}"),
                &Integer::from(*c),
                &kernel.narayana(n, k as i64),
            );
        }
    }
    check.finish()
}

/// Valley-free half-paths: `U^n` is the only one ending in `U`, and
/// `U^(n-j) D^j` for `1 <= j <= n/2` are the ones ending in `D`.
fn base_cases_enumerated(max_enum: i64) -> Entry {
    let mut check = Check::new("symmetric.valley-free-halves", range(1, max_enum));
    for n in 1..=max_enum as usize {
        let mut ending_up = Vec::new();
        let mut ending_down = Vec::new();
        for half in enumerate_nonnegative(n) {
            if half.valley_count() == 0 {
                match half.steps().last() {
                    Some(Step::Up) => ending_up.push(half),
                    _ => ending_down.push(half),
                }
            }
        }
        let word = |ups: usize, downs: usize| {
            let mut s = vec![Step::Up; ups];
            s.extend(std::iter::repeat_n(Step::Down, downs));
            Path::new(s)
        };
        let want_up = vec![word(n, 0)];
        let mut want_down: Vec<Path> = (1..=n / 2).map(|j| word(n - j, j)).collect();
        want_down.sort();
        ending_down.sort();
        check.expect(ending_up == want_up, || {
            format!("n={n}: up-ending halves {ending_up:?}")
        });
        check.expect(ending_down == want_down, || {
            format!("n={n}: down-ending halves {ending_down:?}")
        });
    }
    check.finish()
}

fn base_cases_dp(gg: &GgTable, max_dp: usize) -> Entry {
    let mut check = Check::new("symmetric.base-cases", range(1, max_dp as i64));
    for n in 1..=max_dp {
        let u = count_u_dp(n, gg);
        check.expect_eq(|| format!("u({n},0)"), &u[0], &Integer::one());
        if n >= 2 {
            check.expect_eq(|| format!("u({n},1)"), &u[1], &Integer::from(n / 2));
            check.expect_eq(
                || format!("u({n},1) vs <{} 1>_-1", n - 1),
                &u[1],
                &hoggatt_neg1_closed(n as i64 - 1, 1),
            );
        }
    }
    check.finish()
}

fn gg_initial_values(gg: &GgTable, max_dp: usize) -> Entry {
    let mut check = Check::new("gg.initial-values", range(1, max_dp as i64));
    for k in 0..=max_dp / 2 {
        let first_up = 2 * k + 1;
        if first_up <= max_dp {
            for j in 0..=first_up {
                let want = Integer::from(i64::from(j == 1));
                check.expect_eq(
                    || format!("G({first_up},{j},{k})"),
                    gg.up(first_up, j, k),
                    &want,
                );
            }
        }
        let first_down = 2 * k + 2;
        if first_down <= max_dp {
            for j in 0..=first_down {
                let want = Integer::from(i64::from(j == 0));
                check.expect_eq(
                    || format!("g({first_down},{j},{k})"),
                    gg.down(first_down, j, k),
                    &want,
                );
            }
        }
    }
    check.finish()
}

fn gg_boundary_zeros(gg: &GgTable) -> Entry {
    let mut check = Check::new("gg.boundary-zeros", range(1, gg.max_n() as i64));
    for (cell, up, down) in gg.cells() {
        let too_short_up = cell.n < 2 * cell.k + 1;
        let too_short_down = cell.n < 2 * cell.k + 2;
        if too_short_up || cell.j == 0 {
            check.expect(up.is_zero(), || format!("G{cell} = {up}"));
        }
        if too_short_down {
            check.expect(down.is_zero(), || format!("g{cell} = {down}"));
        }
        check.expect(!up.is_negative(), || format!("G{cell} < 0"));
        check.expect(!down.is_negative(), || format!("g{cell} < 0"));
    }
    let stray = gg.stray_cells();
    // smallest offending cell first
    if let Some((cell, is_up, value)) = stray.iter().min_by_key(|(c, _, _)| (c.n, c.k, c.j)) {
        let name = if *is_up { "G" } else { "g" };
        check.expect(false, || {
            format!("{name}{cell} = {value} outside the support")
        });
    } else {
        check.expect(true, String::new);
    }
    check.finish()
}

fn down_to_axis(kernel: &Kernel, gg: &GgTable, max_dp: usize) -> Entry {
    let mut check = Check::new(
        "gg.down-to-axis-narayana",
        format!("2n=2..={}", max_dp - max_dp % 2),
    );
    for n in 1..=max_dp / 2 {
        for k in 0..n {
            check.expect_eq(
                || format!("n={n} k={k}"),
                gg.down(2 * n, 0, k),
                &kernel.narayana(n as i64, k as i64),
            );
        }
    }
    check.finish()
}

fn q_catalan_refinement(poly: &PolyCache, max_poly: i64) -> Entry {
    let mut check = Check::new("q-catalan.valley-refinement", range(0, max_poly));
    for n in 0..=max_poly {
        let mut lhs = QPoly::zero();
        let mut failed = None;
        for k in 0..n.max(1) {
            match poly.q_narayana(n, k) {
                Ok(p) => lhs = &lhs + &p.shifted((k * k + k) as usize),
                Err(e) => failed = Some(e.to_string()),
            }
        }
        match (failed, poly.binomials.q_catalan(n)) {
            (None, Ok(rhs)) => check.expect_eq(|| format!("n={n}"), &lhs, &rhs),
            (Some(e), _) => check.abort(format!("n={n}: {e}")),
            (_, Err(e)) => check.abort(format!("n={n}: {e}")),
        }
    }
    check.finish()
}

fn major_index_refinement(poly: &PolyCache, max_n: usize) -> Entry {
    let mut check = Check::new("dyck.major-index-refinement", range(1, max_n as i64));
    for n in 1..=max_n {
        let mut hist: Vec<Vec<u64>> = vec![Vec::new(); n];
        let mut it = enumerate_dyck(n);
        while let Some(w) = it.next_word() {
            let bucket = &mut hist[valley_count(w)];
            let m = major_index(w);
            if bucket.len() <= m {
                bucket.resize(m + 1, 0);
            }
            bucket[m] += 1;
        }
        let mut total = QPoly::zero();
        for (k, bucket) in hist.into_iter().enumerate() {
            let enumerated = QPoly::from_coeffs(bucket.into_iter().map(Integer::from).collect());
            total = &total + &enumerated;
            match poly.q_narayana(n as i64, k as i64) {
                Ok(p) => check.expect_eq(
                    || format!("n={n} k={k}"),
                    &enumerated,
                    &p.shifted(k * k + k),
                ),
                Err(e) => check.abort(format!("n={n} k={k}: {e}")),
            }
        }
        match poly.binomials.q_catalan(n as i64) {
            Ok(c) => check.expect_eq(|| format!("n={n} total"), &total, &c),
            Err(e) => check.abort(format!("n={n}: {e}")),
        }
    }
    check.finish()
}

fn neg1_sum_by_enumeration(poly: &PolyCache, max_n: i64) -> Entry {
    let mut check = Check::new("symmetric.neg1-sum-by-enumeration", range(1, max_n));
    for n in 1..=max_n {
        let by_paths = Integer::from(enumerate_symmetric_dyck(n as usize).count());
        check.expect_eq(|| format!("n={n} paths"), &by_paths, &binomial(n, n / 2));
        let mut by_poly = Integer::zero();
        for k in 0..n {
            match poly.q_narayana(n, k) {
                Ok(p) => by_poly += p.eval_i64(-1),
                Err(e) => check.abort(format!("n={n} k={k}: {e}")),
            }
        }
        check.expect_eq(|| format!("n={n} polynomial"), &by_paths, &by_poly);
    }
    check.finish()
}

fn golden_entry(path: &FsPath, max_dp: usize) -> Entry {
    let available = match read_bfile(path) {
        Ok(terms) => complete_rows(terms.len()),
        Err(e) => {
            let mut check = Check::new("oeis.a088855-prefix", "rows=?");
            check.abort(e.to_string());
            return check.finish();
        }
    };
    match check_oeis_a088855(path, available.min(max_dp)) {
        Ok(entry) => entry,
        Err(e) => {
            let mut check = Check::new("oeis.a088855-prefix", "rows=?");
            check.abort(e.to_string());
            check.finish()
        }
    }
}

fn complete_rows(terms: usize) -> usize {
    let mut rows = 0;
    while (rows + 1) * (rows + 2) / 2 <= terms {
        rows += 1;
    }
    rows
}

/// Reads `index value` lines; blank lines and `#` comments are skipped.
/// Indices must run 1, 2, 3, ...
pub fn read_bfile(path: &FsPath) -> Result<Vec<Integer>> {
    let text =
        fs::read_to_string(path).map_err(|_| Error::MissingGoldenFile(path.to_path_buf()))?;
    let malformed = |reason: String| Error::MalformedGoldenFile {
        path: path.to_path_buf(),
        reason,
    };
    let mut values = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut fields = line.split_whitespace();
        let (Some(index), Some(value), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(malformed(format!(
                "line {}: expected `index value`",
                lineno + 1
            )));
        };
        let index: usize = index
            .parse()
            .map_err(|_| malformed(format!("line {}: bad index `{index}`", lineno + 1)))?;
        if index != values.len() + 1 {
            return Err(malformed(format!(
                "line {}: index {index} out of sequence",
                lineno + 1
            )));
        }
        let value: Integer = value
            .parse()
            .map_err(|_| malformed(format!("line {}: bad value `{value}`", lineno + 1)))?;
        values.push(value);
    }
    Ok(values)
}

/// Compares the first `rows` rows of `u(n, k)` (from the half-path dynamic
/// program, read by rows from `n = 1`) with the vendored b-file prefix.
pub fn check_oeis_a088855(path: &FsPath, rows: usize) -> Result<Entry> {
    let golden = read_bfile(path)?;
    let mut check = Check::new("oeis.a088855-prefix", format!("rows=1..={rows}"));
    let needed = rows * (rows + 1) / 2;
    if golden.len() < needed {
        check.abort(format!(
            "golden prefix has {} terms, {needed} needed",
            golden.len()
        ));
        return Ok(check.finish());
    }
    if rows > 0 {
        let gg = GgTable::build(rows);
        let mut index = 0;
        for n in 1..=rows {
            for (k, v) in count_u_dp(n, &gg).iter().enumerate() {
                let want = &golden[index];
                check.expect_eq(|| format!("term {} (n={n} k={k})", index + 1), v, want);
                index += 1;
            }
        }
    }
    Ok(check.finish())
}
