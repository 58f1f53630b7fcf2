//! Counting symmetric Dyck paths by valleys: exhaustively, through the
//! `G`/`g` dynamic program over half-paths, and by row recurrence.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{enumerate_dyck, enumerate_symmetric_dyck, major_index, valley_count};
use crate::algebra::{Integer, QPoly};
use crate::numbers::{narayana, QBinomialTable};
use crate::report::{Check, Entry};
use crate::table::TriangleTable;

/// A cell `(n, j, k)` of the half-path tables: length `n`, end height `j`,
/// `k` valleys.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GgCell {
    pub n: usize,
    pub j: usize,
    pub k: usize,
}

impl std::fmt::Display for GgCell {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(n={}, j={}, k={})", self.n, self.j, self.k)
    }
}

/// Counts of non-negative paths of length `n` ending at height `j` with `k`
/// valleys, split by last step: `up` for paths ending in `U`, `down` for
/// paths ending in `D`.
///
/// Filled for `1 <= n <= max_n`, `0 <= j <= n`, `0 <= k <= n / 2` by
///
/// - `up(n, j, k) = up(n-1, j-1, k) + down(n-1, j-1, k-1)`
/// - `down(n, j, k) = down(n-1, j+1, k) + up(n-1, j+1, k)`
///
/// seeded with `up(1, 1, 0) = 1`. Only cells with `j = n (mod 2)` and
/// `j <= n - 2k` are stored; any other cell that evaluates to a nonzero value
/// is kept in [`GgTable::stray_cells`].
#[derive(Clone, Debug)]
pub struct GgTable {
    max_n: usize,
    // [n][k][t] with j = n % 2 + 2t
    up: Vec<Vec<Vec<Integer>>>,
    down: Vec<Vec<Vec<Integer>>>,
    stray: Vec<(GgCell, bool, Integer)>,
}

impl GgTable {
    pub fn build(max_n: usize) -> Self {
        Self::build_impl(max_n, None)
    }

    /// Builds the table with `delta` added to the first term of the `up`
    /// recurrence at `cell` (or to the seed when `cell` is `(1, 1, 0)`).
    /// Used to confirm that checks built on this table can fail.
    pub fn build_perturbed(max_n: usize, cell: GgCell, delta: i64) -> Self {
        Self::build_impl(max_n, Some((cell, delta)))
    }

    fn build_impl(max_n: usize, perturb: Option<(GgCell, i64)>) -> Self {
        assert!(max_n >= 1, "GgTable needs max_n >= 1");
        let mut table = GgTable {
            max_n,
            up: vec![Vec::new()],
            down: vec![Vec::new()],
            stray: Vec::new(),
        };
        for n in 1..=max_n {
            let mut up_n = storage(n);
            let mut down_n = storage(n);
            for k in 0..=n / 2 {
                for j in 0..=n {
                    let cell = GgCell { n, j, k };
                    let mut up = if n == 1 {
                        Integer::from(i64::from(j == 1 && k == 0))
                    } else if j >= 1 {
                        let mut v = table.up(n - 1, j - 1, k).clone();
                        if k >= 1 {
                            v += table.down(n - 1, j - 1, k - 1);
                        }
                        v
                    } else {
                        Integer::zero()
                    };
                    if let Some((c, delta)) = perturb {
                        if c == cell {
                            up += delta;
                        }
                    }
                    let down = if n == 1 {
                        Integer::zero()
                    } else {
                        table.down(n - 1, j + 1, k) + table.up(n - 1, j + 1, k)
                    };
                    match slot(n, j, k) {
                        Some(t) => {
                            up_n[k][t] = up;
                            down_n[k][t] = down;
                        }
                        None => {
                            if !up.is_zero() {
                                table.stray.push((cell, true, up));
                            }
                            if !down.is_zero() {
                                table.stray.push((cell, false, down));
                            }
                        }
                    }
                }
            }
            table.up.push(up_n);
            table.down.push(down_n);
        }
        table
    }

    pub fn max_n(&self) -> usize {
        self.max_n
    }

    /// Paths ending with an up step; zero outside the stored support.
    pub fn up(&self, n: usize, j: usize, k: usize) -> &Integer {
        lookup(&self.up, self.max_n, n, j, k)
    }

    /// Paths ending with a down step; zero outside the stored support.
    pub fn down(&self, n: usize, j: usize, k: usize) -> &Integer {
        lookup(&self.down, self.max_n, n, j, k)
    }

    /// Cells outside the structural support that evaluated to nonzero, as
    /// `(cell, ends_with_up, value)`. Empty for a correct table.
    pub fn stray_cells(&self) -> &[(GgCell, bool, Integer)] {
        &self.stray
    }

    /// Stored cells in ascending `(n, k, j)` order with their `(up, down)`
    /// values.
    pub fn cells(&self) -> impl Iterator<Item = (GgCell, &Integer, &Integer)> + '_ {
        (1..=self.max_n).flat_map(move |n| {
            (0..self.up[n].len()).flat_map(move |k| {
                (0..self.up[n][k].len()).map(move |t| {
                    let j = n % 2 + 2 * t;
                    (GgCell { n, j, k }, &self.up[n][k][t], &self.down[n][k][t])
                })
            })
        })
    }
}

fn storage(n: usize) -> Vec<Vec<Integer>> {
    (0..=n / 2)
        .map(|k| {
            let span = n - 2 * k;
            let len = if span >= n % 2 {
                (span - n % 2) / 2 + 1
            } else {
                0
            };
            vec![Integer::zero(); len]
        })
        .collect()
}

fn slot(n: usize, j: usize, k: usize) -> Option<usize> {
    let fits = 2 * k <= n && j <= n - 2 * k && j % 2 == n % 2;
    fits.then_some(j / 2)
}

fn lookup(data: &[Vec<Vec<Integer>>], max_n: usize, n: usize, j: usize, k: usize) -> &Integer {
    static ZERO: BigInt = BigInt::ZERO;
    if n == 0 || n > max_n {
        return &ZERO;
    }
    match slot(n, j, k) {
        Some(t) => &data[n][k][t],
        None => &ZERO,
    }
}

fn to_counts(raw: Vec<u64>) -> Vec<Integer> {
    raw.into_iter().map(Integer::from).collect()
}

/// `u(n, k)` for `k = 0..n` by listing every symmetric Dyck path.
pub fn count_u_enumeration(n: usize) -> Vec<Integer> {
    assert!(n >= 1);
    let mut counts = vec![0u64; n];
    let mut it = enumerate_symmetric_dyck(n);
    while let Some(w) = it.next_word() {
        counts[valley_count(w)] += 1;
    }
    to_counts(counts)
}

/// `u(n, k)` from the half-path table: even `k = 2i` sums `up(n, j, i)` over
/// `j`, odd `k = 2i + 1` sums `down(n, j, i)` (the last half step is then the
/// `D` of the centre valley).
///
/// The result has length `n`, extended if a nonzero count lands beyond.
pub fn count_u_dp(n: usize, table: &GgTable) -> Vec<Integer> {
    assert!(n >= 1 && n <= table.max_n(), "table does not cover n = {n}");
    let mut u = vec![Integer::zero(); n.max(2 * (n / 2) + 2)];
    for k in 0..=n / 2 {
        for j in 0..=n {
            u[2 * k] += table.up(n, j, k);
            u[2 * k + 1] += table.down(n, j, k);
        }
    }
    while u.len() > n && u.last().is_some_and(Zero::is_zero) {
        u.pop();
    }
    u
}

/// Rows `1..=max_n` of `u(n, k)` by recurrence:
///
/// - `u(n, 0) = 1`, `u(n, 1) = floor(n / 2)`
/// - `u(n, 2k) = u(n-1, 2k) + u(n-1, 2k-1)`
/// - `u(2m, 2k+1) = u(2m-1, 2k+1) + u(2m-1, 2k)`
/// - `u(2m+1, 2k+1) = u(2m, 2k+1) + u(2m, 2k) - N(m, k)`
pub fn count_u_recurrence(max_n: usize) -> TriangleTable {
    count_u_recurrence_with(max_n, narayana)
}

pub fn count_u_recurrence_with(
    max_n: usize,
    narayana: impl Fn(i64, i64) -> Integer,
) -> TriangleTable {
    assert!(max_n >= 1);
    let mut rows: Vec<Vec<Integer>> = vec![vec![Integer::one()]];
    for n in 2..=max_n {
        let prev = rows.last().unwrap();
        let at = |k: usize| prev.get(k).cloned().unwrap_or_default();
        let mut row = Vec::with_capacity(n);
        row.push(Integer::one());
        row.push(Integer::from(n / 2));
        for k in 2..n {
            let mut v = at(k) + at(k - 1);
            if k % 2 == 1 && n % 2 == 1 {
                v -= narayana((n / 2) as i64, (k / 2) as i64);
            }
            row.push(v);
        }
        rows.push(row);
    }
    TriangleTable::new(1, rows)
}

/// Dyck paths of semi-length `n` by number of valleys, `k = 0..n`.
pub fn dyck_valley_distribution(n: usize) -> Vec<Integer> {
    assert!(n >= 1);
    let mut counts = vec![0u64; n];
    let mut it = enumerate_dyck(n);
    while let Some(w) = it.next_word() {
        counts[valley_count(w)] += 1;
    }
    to_counts(counts)
}

/// `sum q^maj(p)` over Dyck paths of semi-length `n`, grouped by valleys.
fn major_index_by_valleys(n: usize) -> BTreeMap<usize, QPoly> {
    let mut hist: BTreeMap<usize, Vec<u64>> = BTreeMap::new();
    let mut it = enumerate_dyck(n);
    while let Some(w) = it.next_word() {
        let bucket = hist.entry(valley_count(w)).or_default();
        let m = major_index(w);
        if bucket.len() <= m {
            bucket.resize(m + 1, 0);
        }
        bucket[m] += 1;
    }
    hist.into_iter()
        .map(|(k, c)| (k, QPoly::from_coeffs(to_counts(c))))
        .collect()
}

fn major_index_instance(check: &mut Check, table: &QBinomialTable, n: usize) {
    let by_valleys = major_index_by_valleys(n);
    let mut total = QPoly::zero();
    for k in 0..n.max(1) {
        let enumerated = by_valleys.get(&k).cloned().unwrap_or_default();
        total = &total + &enumerated;
        match table.q_narayana(n as i64, k as i64) {
            Ok(nk) => {
                let expected = nk.shifted(k * k + k);
                check.expect_eq(|| format!("n={n} k={k}"), &enumerated, &expected);
            }
            Err(e) => check.abort(format!("n={n} k={k}: {e}")),
        }
    }
    if let Some(extra) = by_valleys.keys().find(|&&k| k >= n.max(1)) {
        check.abort(format!("n={n}: path with {extra} valleys"));
    }
    match table.q_catalan(n as i64) {
        Ok(c) => check.expect_eq(|| format!("n={n} total"), &total, &c),
        Err(e) => check.abort(format!("n={n}: {e}")),
    }
}

/// For each `k`, `sum q^maj(p)` over Dyck paths with `k` valleys equals
/// `q^(k^2+k) N(n, k; q)`, and the total equals `C_n(q)`.
pub fn check_major_index_refinement(n: usize) -> Entry {
    check_major_index_refinement_range(n, n)
}

pub fn check_major_index_refinement_range(from: usize, to: usize) -> Entry {
    let mut check = Check::new("dyck.major-index-refinement", format!("n={from}..={to}"));
    let table = QBinomialTable::new(2 * to as i64);
    for n in from..=to {
        major_index_instance(&mut check, &table, n);
    }
    check.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numbers::symmetric_narayana_closed;

    fn ints(v: &[i64]) -> Vec<Integer> {
        v.iter().map(|&x| Integer::from(x)).collect()
    }

    // Independent oracle: all 2^n step words of length n, kept if they stay
    // non-negative, bucketed by (end height, valleys, last step).
    fn brute_gg(n: usize) -> BTreeMap<(usize, usize, bool), u64> {
        let mut out = BTreeMap::new();
        for bits in 0u32..(1 << n) {
            let mut h = 0i64;
            let mut ok = true;
            let mut valleys = 0;
            let mut prev_down = false;
            for i in 0..n {
                let up = bits >> i & 1 == 1;
                if up && prev_down {
                    valleys += 1;
                }
                h += if up { 1 } else { -1 };
                ok &= h >= 0;
                prev_down = !up;
            }
            if ok {
                let last_up = bits >> (n - 1) & 1 == 1;
                *out.entry((h as usize, valleys, last_up)).or_insert(0) += 1;
            }
        }
        out
    }

    #[test]
    fn gg_matches_brute_force() {
        let table = GgTable::build(14);
        assert!(table.stray_cells().is_empty());
        for n in 1..=14 {
            let brute = brute_gg(n);
            for k in 0..=n / 2 + 1 {
                for j in 0..=n + 1 {
                    let want_up = brute.get(&(j, k, true)).copied().unwrap_or(0);
                    let want_down = brute.get(&(j, k, false)).copied().unwrap_or(0);
                    assert_eq!(table.up(n, j, k), &Integer::from(want_up), "G({n},{j},{k})");
                    assert_eq!(
                        table.down(n, j, k),
                        &Integer::from(want_down),
                        "g({n},{j},{k})"
                    );
                }
            }
        }
    }

    #[test]
    fn gg_initial_values() {
        let t = GgTable::build(12);
        assert_eq!(t.up(5, 1, 2), &Integer::one());
        assert_eq!(t.down(4, 0, 1), &Integer::one());
        for k in 0..5 {
            for j in 0..12 {
                let first_up = Integer::from(i64::from(j == 1));
                assert_eq!(t.up(2 * k + 1, j, k), &first_up);
                let first_down = Integer::from(i64::from(j == 0));
                assert_eq!(t.down(2 * k + 2, j, k), &first_down);
                for n in 1..2 * k + 1 {
                    assert!(t.up(n, j, k).is_zero());
                }
                for n in 1..2 * k + 2 {
                    assert!(t.down(n, j, k).is_zero());
                }
            }
        }
        for n in 1..=12 {
            for k in 0..=6 {
                assert!(t.up(n, 0, k).is_zero());
            }
        }
    }

    #[test]
    fn down_to_axis_is_narayana() {
        let t = GgTable::build(40);
        for n in 1..=20usize {
            for k in 0..n {
                assert_eq!(
                    t.down(2 * n, 0, k),
                    &narayana(n as i64, k as i64),
                    "n={n} k={k}"
                );
            }
        }
    }

    #[test]
    fn u_examples() {
        assert_eq!(count_u_enumeration(4), ints(&[1, 2, 2, 1]));
        assert_eq!(count_u_enumeration(2), ints(&[1, 1]));
        assert_eq!(count_u_enumeration(1), ints(&[1]));
        let t = GgTable::build(6);
        assert_eq!(count_u_dp(4, &t), ints(&[1, 2, 2, 1]));
        assert_eq!(count_u_dp(1, &t), ints(&[1]));
        // u(6,2) = <5 2>_{-1}
        assert_eq!(count_u_dp(6, &t)[2], Integer::from(6));
        let r = count_u_recurrence(6);
        assert_eq!(r.get(4, 1), Some(&Integer::from(2)));
        // odd row, odd k: u(4,3) + u(4,2) - N(2,1)
        assert_eq!(r.get(5, 3), Some(&Integer::from(2)));
        for n in 1..=6 {
            assert_eq!(r.get(n, 0), Some(&Integer::one()));
        }
    }

    #[test]
    fn four_routes_agree() {
        let table = GgTable::build(14);
        let rec = count_u_recurrence(14);
        for n in 1..=14 {
            let closed: Vec<Integer> = (0..n)
                .map(|k| symmetric_narayana_closed(n as i64, k as i64))
                .collect();
            assert_eq!(count_u_enumeration(n), closed, "enumeration n={n}");
            assert_eq!(count_u_dp(n, &table), closed, "dp n={n}");
            assert_eq!(rec.row(n).unwrap(), &closed[..], "recurrence n={n}");
        }
    }

    #[test]
    fn valley_distribution_is_narayana() {
        assert_eq!(dyck_valley_distribution(3), ints(&[1, 3, 1]));
        assert_eq!(dyck_valley_distribution(4), ints(&[1, 6, 6, 1]));
        assert_eq!(dyck_valley_distribution(1), ints(&[1]));
        for n in 1..=10 {
            let want: Vec<Integer> = (0..n).map(|k| narayana(n as i64, k as i64)).collect();
            assert_eq!(dyck_valley_distribution(n), want);
        }
    }

    #[test]
    fn major_index_small_cases() {
        let by = major_index_by_valleys(2);
        assert_eq!(by[&1], QPoly::monomial(2, 1));
        let by = major_index_by_valleys(3);
        assert_eq!(by[&1], QPoly::from_i64s(&[0, 0, 1, 1, 1]));
        for n in 1..=8 {
            assert!(check_major_index_refinement(n).passed(), "n={n}");
        }
    }

    #[test]
    fn perturbed_table_is_detectably_wrong() {
        let clean = GgTable::build(8);
        let cell = GgCell { n: 5, j: 3, k: 1 };
        let bad = GgTable::build_perturbed(8, cell, 1);
        assert_eq!(bad.up(5, 3, 1), &(clean.up(5, 3, 1) + 1));
        assert_ne!(count_u_dp(5, &bad), count_u_dp(5, &clean));
        // outside the support the perturbation shows up as a stray cell
        let bad = GgTable::build_perturbed(8, GgCell { n: 5, j: 2, k: 1 }, -1);
        assert_eq!(bad.stray_cells().len(), 1);
    }
}
