//! Narayana, Catalan and Hoggatt numbers, their q-analogs, and the values of
//! the q-analogs at `q = -1`.
//!
//! Every q-quantity is an exact [`QPoly`]; values at `q = -1` are taken from
//! polynomials (directly, or through their reduction modulo `(q + 1)^2` when
//! the polynomials are too large to expand) rather than as limits.
//!
//! Indices are `i64`. A negative `n` is a caller bug and panics; out-of-range
//! `k` gives zero.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Zero};

use crate::algebra::{Integer, NegOneJet, QPoly};
use crate::error::{Error, Result};
use crate::report::{Check, Entry};
use crate::table::TriangleTable;

static ZERO_POLY: QPoly = QPoly::zero();

fn idx(n: i64) -> usize {
    usize::try_from(n).unwrap_or_else(|_| panic!("negative index {n}"))
}

fn exact_div(num: Integer, den: &Integer) -> Integer {
    let (q, r) = num.div_rem(den);
    assert!(r.is_zero(), "inexact integer division by {den}");
    q
}

/// `C(n, k)`, zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> Integer {
    assert!(n >= 0, "binomial: negative n = {n}");
    if k < 0 || k > n {
        return Integer::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(Integer::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// All of `C(n, 0..=n)` in O(n) multiplications.
pub fn binomial_row(n: i64) -> Vec<Integer> {
    assert!(n >= 0);
    let mut row = Vec::with_capacity(idx(n) + 1);
    let mut c = Integer::one();
    for i in 0..=n {
        row.push(c.clone());
        c = c * (n - i) / (i + 1);
    }
    row
}

/// `N(n, k) = C(n, k) C(n-1, k) / (k + 1)`: Dyck paths of semi-length `n`
/// with `k` valleys. `N(0, 0) = 1` for the empty path.
pub fn narayana(n: i64, k: i64) -> Integer {
    assert!(n >= 0, "narayana: negative n = {n}");
    if n == 0 {
        return if k == 0 {
            Integer::one()
        } else {
            Integer::zero()
        };
    }
    if k < 0 || k >= n {
        return Integer::zero();
    }
    exact_div(binomial(n, k) * binomial(n - 1, k), &Integer::from(k + 1))
}

pub fn catalan(n: i64) -> Integer {
    assert!(n >= 0);
    exact_div(binomial(2 * n, n), &Integer::from(n + 1))
}

/// Triangular number `<n> = C(n + 1, 2)`.
pub fn hoggatt_angle(n: i64) -> Integer {
    assert!(n >= 0);
    binomial(n + 1, 2)
}

/// `<n k> = <n>! / (<k>! <n-k>!)` built from triangular numbers.
pub fn hoggatt_binomial(n: i64, k: i64) -> Integer {
    assert!(n >= 0);
    if k < 0 || k > n {
        return Integer::zero();
    }
    let num: Integer = (1..=k).map(|i| hoggatt_angle(n - k + i)).product();
    let den: Integer = (1..=k).map(hoggatt_angle).product();
    exact_div(num, &den)
}

/// `[n] = 1 + q + ... + q^(n-1)`.
pub fn q_integer(n: i64) -> QPoly {
    QPoly::from_coeffs(vec![Integer::one(); idx(n)])
}

pub fn q_factorial(n: i64) -> QPoly {
    (1..=n).fold(QPoly::one(), |acc, j| &acc * &q_integer(j))
}

/// Gaussian binomial `[n]! / ([k]! [n-k]!)`, built as a running product of
/// exact quotients `[n-k+i] / [i]` (each partial product is itself a
/// Gaussian binomial).
pub fn q_binomial(n: i64, k: i64) -> Result<QPoly> {
    assert!(n >= 0);
    if k < 0 || k > n {
        return Ok(QPoly::zero());
    }
    let k = k.min(n - k);
    let mut acc = QPoly::one();
    for i in 1..=k {
        acc = (&acc * &q_integer(n - k + i)).div_exact(&q_integer(i))?;
    }
    Ok(acc)
}

/// `N(n, k; q) = [n k] [n-1 k] / [k+1]`.
pub fn q_narayana(n: i64, k: i64) -> Result<QPoly> {
    assert!(n >= 0);
    if n == 0 {
        return Ok(if k == 0 { QPoly::one() } else { QPoly::zero() });
    }
    if k < 0 || k >= n {
        return Ok(QPoly::zero());
    }
    (&q_binomial(n, k)? * &q_binomial(n - 1, k)?).div_exact(&q_integer(k + 1))
}

/// `<n>_q = [n+1 2]_q`.
pub fn q_hoggatt_angle(n: i64) -> Result<QPoly> {
    q_binomial(n + 1, 2)
}

/// `<n k>_q = <n>_q! / (<k>_q! <n-k>_q!)`, built as a running product of
/// exact quotients `<n-k+i>_q / <i>_q`.
pub fn q_hoggatt_binomial(n: i64, k: i64) -> Result<QPoly> {
    assert!(n >= 0);
    if k < 0 || k > n {
        return Ok(QPoly::zero());
    }
    let mut acc = QPoly::one();
    for i in 1..=k {
        acc = (&acc * &q_hoggatt_angle(n - k + i)?).div_exact(&q_hoggatt_angle(i)?)?;
    }
    Ok(acc)
}

/// `C_n(q) = [2n n] / [n+1]`.
pub fn q_catalan(n: i64) -> Result<QPoly> {
    q_binomial(2 * n, n)?.div_exact(&q_integer(n + 1))
}

/// Gaussian binomials for `0 <= k <= n <= max_n`, filled by
/// `[n k] = [n-1 k-1] + q^k [n-1 k]`.
#[derive(Clone, Debug)]
pub struct QBinomialTable {
    rows: Vec<Vec<QPoly>>,
}

impl QBinomialTable {
    pub fn new(max_n: i64) -> Self {
        let max_n = idx(max_n);
        let mut rows: Vec<Vec<QPoly>> = Vec::with_capacity(max_n + 1);
        rows.push(vec![QPoly::one()]);
        for n in 1..=max_n {
            let prev = &rows[n - 1];
            let row = (0..=n)
                .map(|k| {
                    let left = if k > 0 { &prev[k - 1] } else { &ZERO_POLY };
                    let right = prev.get(k).map_or_else(QPoly::zero, |p| p.shifted(k));
                    left + &right
                })
                .collect();
            rows.push(row);
        }
        Self { rows }
    }

    pub fn max_n(&self) -> i64 {
        self.rows.len() as i64 - 1
    }

    pub fn get(&self, n: i64, k: i64) -> &QPoly {
        if n < 0 || k < 0 || k > n {
            return &ZERO_POLY;
        }
        &self.rows[idx(n)][idx(k)]
    }

    /// `N(n, k; q)` from the cached binomials; requires `n <= max_n`.
    pub fn q_narayana(&self, n: i64, k: i64) -> Result<QPoly> {
        assert!(n <= self.max_n());
        if n == 0 {
            return Ok(if k == 0 { QPoly::one() } else { QPoly::zero() });
        }
        if k < 0 || k >= n {
            return Ok(QPoly::zero());
        }
        (self.get(n, k) * self.get(n - 1, k)).div_exact(&q_integer(k + 1))
    }

    /// `C_n(q)`; requires `2n <= max_n`.
    pub fn q_catalan(&self, n: i64) -> Result<QPoly> {
        assert!(2 * n <= self.max_n());
        self.get(2 * n, n).div_exact(&q_integer(n + 1))
    }
}

/// Gaussian binomials reduced modulo `(q + 1)^2`, filled by the same Pascal
/// recurrence as [`QBinomialTable`]. Cheap enough for `n` in the hundreds.
#[derive(Clone, Debug)]
pub struct NegOneBinomials {
    rows: Vec<Vec<NegOneJet>>,
}

impl NegOneBinomials {
    pub fn new(max_n: i64) -> Self {
        let max_n = idx(max_n);
        let zero = NegOneJet::zero();
        let mut rows: Vec<Vec<NegOneJet>> = Vec::with_capacity(max_n + 1);
        rows.push(vec![NegOneJet::constant(1)]);
        for n in 1..=max_n {
            let prev = &rows[n - 1];
            let row = (0..=n)
                .map(|k| {
                    let left = if k > 0 { &prev[k - 1] } else { &zero };
                    let right = prev.get(k).unwrap_or(&zero);
                    left + &(&NegOneJet::q_power(k) * right)
                })
                .collect();
            rows.push(row);
        }
        Self { rows }
    }

    pub fn max_n(&self) -> i64 {
        self.rows.len() as i64 - 1
    }

    pub fn get(&self, n: i64, k: i64) -> NegOneJet {
        if n < 0 || k < 0 || k > n {
            return NegOneJet::zero();
        }
        self.rows[idx(n)][idx(k)].clone()
    }

    /// `N(n, k; -1)`; requires `n <= max_n`.
    pub fn q_narayana_value(&self, n: i64, k: i64) -> Result<Integer> {
        assert!(n <= self.max_n());
        if n == 0 {
            return Ok(Integer::from(i64::from(k == 0)));
        }
        if k < 0 || k >= n {
            return Ok(Integer::zero());
        }
        let product = &self.get(n, k) * &self.get(n - 1, k);
        product.quotient_value(&q_integer(k + 1).jet_at_neg_one())
    }

    /// `<n k>_{-1} = N(n+1, k; -1)`; requires `n + 1 <= max_n`.
    pub fn q_hoggatt_value(&self, n: i64, k: i64) -> Result<Integer> {
        self.q_narayana_value(n + 1, k)
    }
}

/// `<n k>_{-1} = C(floor(n/2), floor(k/2)) C(floor((n+1)/2), floor((k+1)/2))`.
pub fn hoggatt_neg1_closed(n: i64, k: i64) -> Integer {
    assert!(n >= 0);
    if k < 0 || k > n {
        return Integer::zero();
    }
    binomial(n / 2, k / 2) * binomial((n + 1) / 2, (k + 1) / 2)
}

/// Symmetric Dyck paths of semi-length `n >= 1` with `k` valleys:
/// `C(floor((n-1)/2), floor(k/2)) C(floor(n/2), floor((k+1)/2))`.
pub fn symmetric_narayana_closed(n: i64, k: i64) -> Integer {
    assert!(n >= 1, "symmetric_narayana_closed: n = {n} < 1");
    if k < 0 || k >= n {
        return Integer::zero();
    }
    binomial((n - 1) / 2, k / 2) * binomial(n / 2, (k + 1) / 2)
}

/// The closed form for a whole row `k = 0..n`, using two binomial rows.
pub fn symmetric_narayana_row(n: i64) -> Vec<Integer> {
    assert!(n >= 1);
    let lower = binomial_row((n - 1) / 2);
    let upper = binomial_row(n / 2);
    (0..idx(n))
        .map(|k| &lower[k / 2] * &upper[k.div_ceil(2)])
        .collect()
}

/// Rows `0..=max_n` of `<n k>_{-1}` by recurrence:
///
/// - `T(m, 0) = 1`, `T(0, k) = [k = 0]`
/// - `T(m, 2k) = T(m-1, 2k) + T(m-1, 2k-1)`
/// - `T(2n-1, 2k+1) = T(2n-2, 2k+1) + T(2n-2, 2k)`
/// - `T(2n, 2k+1) = T(2n-1, 2k+1) + T(2n-1, 2k) - N(n, k)`
pub fn hoggatt_neg1_table_recurrence(max_n: i64) -> TriangleTable {
    hoggatt_neg1_table_recurrence_with(max_n, narayana)
}

/// As [`hoggatt_neg1_table_recurrence`] with a caller-supplied Narayana
/// correction term.
pub fn hoggatt_neg1_table_recurrence_with(
    max_n: i64,
    narayana: impl Fn(i64, i64) -> Integer,
) -> TriangleTable {
    let max_n = idx(max_n);
    let mut rows: Vec<Vec<Integer>> = vec![vec![Integer::one()]];
    for m in 1..=max_n {
        let prev = &rows[m - 1];
        let at = |k: usize| prev.get(k).cloned().unwrap_or_default();
        let mut row = Vec::with_capacity(m + 1);
        row.push(Integer::one());
        for k in 1..=m {
            let mut v = at(k) + at(k - 1);
            if k % 2 == 1 && m % 2 == 0 {
                v -= narayana((m / 2) as i64, (k / 2) as i64);
            }
            row.push(v);
        }
        rows.push(row);
    }
    TriangleTable::new(0, rows)
}

/// Rows `0..=max_n` of `<n k>_{-1}` taken from the q-polynomials at `q = -1`.
pub fn hoggatt_neg1_by_evaluation(max_n: i64) -> Result<TriangleTable> {
    let jets = NegOneBinomials::new(max_n + 1);
    let mut rows = Vec::with_capacity(idx(max_n) + 1);
    for n in 0..=max_n {
        rows.push(
            (0..=n)
                .map(|k| jets.q_hoggatt_value(n, k))
                .collect::<Result<Vec<_>>>()?,
        );
    }
    Ok(TriangleTable::new(0, rows))
}

pub fn hoggatt_neg1_closed_table(max_n: i64) -> TriangleTable {
    TriangleTable::from_fn(0, idx(max_n), |n, k| {
        hoggatt_neg1_closed(n as i64, k as i64)
    })
}

pub fn hoggatt_table(max_n: i64) -> TriangleTable {
    TriangleTable::from_fn(0, idx(max_n), |n, k| hoggatt_binomial(n as i64, k as i64))
}

/// Rows `1..=max_n` of `N(n, k)`, `k = 0..n`.
pub fn narayana_table(max_n: i64) -> TriangleTable {
    TriangleTable::from_fn(1, idx(max_n), |n, k| narayana(n as i64, k as i64))
}

/// `s(n) = sum_k <n k>_{-1}`, checked against `C(n+1, floor((n+1)/2))`.
pub fn row_sum_s(n: i64) -> Result<Integer> {
    assert!(n >= 0);
    let lhs: Integer = (0..=n).map(|k| hoggatt_neg1_closed(n, k)).sum();
    let rhs = binomial(n + 1, (n + 1) / 2);
    if lhs == rhs {
        Ok(lhs)
    } else {
        Err(Error::IdentityViolation {
            identity: "hoggatt-neg1.row-sum",
            at: format!("n={n}"),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        })
    }
}

/// `sum_k q^(k^2+k) N(n, k; q)`.
pub fn valley_weighted_q_narayana_sum(table: &QBinomialTable, n: i64) -> Result<QPoly> {
    let mut sum = QPoly::zero();
    for k in 0..n.max(1) {
        let shift = idx(k * k + k);
        sum = &sum + &table.q_narayana(n, k)?.shifted(shift);
    }
    Ok(sum)
}

fn q_catalan_identity_instance(check: &mut Check, table: &QBinomialTable, n: i64) {
    match (valley_weighted_q_narayana_sum(table, n), table.q_catalan(n)) {
        (Ok(lhs), Ok(rhs)) => check.expect_eq(|| format!("n={n}"), &lhs, &rhs),
        (Err(e), _) | (_, Err(e)) => check.abort(format!("n={n}: {e}")),
    }
}

/// `sum_k q^(k^2+k) N(n, k; q) == C_n(q)` for a single `n`.
pub fn check_q_catalan_identity(n: i64) -> Entry {
    check_q_catalan_identity_range(n, n)
}

/// As [`check_q_catalan_identity`] for every `n` in `from..=to`.
pub fn check_q_catalan_identity_range(from: i64, to: i64) -> Entry {
    let mut check = Check::new("q-catalan.valley-refinement", format!("n={from}..={to}"));
    let table = QBinomialTable::new(2 * to.max(0));
    for n in from..=to {
        q_catalan_identity_instance(&mut check, &table, n);
    }
    check.finish()
}

/// `sum_k N(n, k; -1) == C(n, floor(n/2))` for a single `n >= 1`.
pub fn check_neg1_sum_identity(n: i64) -> Entry {
    check_neg1_sum_identity_range(n, n)
}

pub fn check_neg1_sum_identity_range(from: i64, to: i64) -> Entry {
    let mut check = Check::new(
        "q-narayana.neg1-central-binomial",
        format!("n={from}..={to}"),
    );
    let jets = NegOneBinomials::new(to.max(0));
    for n in from..=to {
        let lhs: Result<BigInt> = (0..n).map(|k| jets.q_narayana_value(n, k)).sum();
        match lhs {
            Ok(lhs) => check.expect_eq(|| format!("n={n}"), &lhs, &binomial(n, n / 2)),
            Err(e) => check.abort(format!("n={n}: {e}")),
        }
    }
    check.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn int(v: i64) -> Integer {
        Integer::from(v)
    }

    fn p(c: &[i64]) -> QPoly {
        QPoly::from_i64s(c)
    }

    // Hoggatt triangle rows 0..=7 as printed.
    const HOGGATT: [&[i64]; 8] = [
        &[1],
        &[1, 1],
        &[1, 3, 1],
        &[1, 6, 6, 1],
        &[1, 10, 20, 10, 1],
        &[1, 15, 50, 50, 15, 1],
        &[1, 21, 105, 175, 105, 21, 1],
        &[1, 28, 196, 490, 490, 196, 28, 1],
    ];

    // The same triangle at q = -1.
    const HOGGATT_NEG1: [&[i64]; 8] = [
        &[1],
        &[1, 1],
        &[1, 1, 1],
        &[1, 2, 2, 1],
        &[1, 2, 4, 2, 1],
        &[1, 3, 6, 6, 3, 1],
        &[1, 3, 9, 9, 9, 3, 1],
        &[1, 4, 12, 18, 18, 12, 4, 1],
    ];

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(4, 2), int(6));
        assert_eq!(binomial(9, 0), int(1));
        assert_eq!(binomial(3, 5), int(0));
        assert_eq!(binomial(3, -1), int(0));
        assert_eq!(binomial_row(5), [1, 5, 10, 10, 5, 1].map(int));
    }

    #[test]
    fn narayana_examples() {
        assert_eq!(narayana(4, 2), int(6));
        assert_eq!(narayana(7, 3), int(175));
        for n in 1..10 {
            assert_eq!(narayana(n, 0), int(1));
            assert_eq!(narayana(n, n), int(0));
        }
        assert_eq!(narayana(1, 0), int(1));
        assert_eq!(narayana(0, 0), int(1));
    }

    #[test]
    fn catalan_examples() {
        assert_eq!(catalan(0), int(1));
        assert_eq!(catalan(3), int(5));
        assert_eq!(catalan(14), int(2_674_440));
        for n in 0..40 {
            let s: Integer = (0..=n).map(|k| narayana(n, k)).sum();
            assert_eq!(s, catalan(n), "n={n}");
        }
    }

    #[test]
    fn hoggatt_examples() {
        assert_eq!(hoggatt_angle(0), int(0));
        assert_eq!(hoggatt_angle(3), int(6));
        assert_eq!(hoggatt_angle(4), int(10));
        assert_eq!(hoggatt_binomial(6, 3), int(175));
        assert_eq!(hoggatt_binomial(7, 2), int(196));
        for n in 0..12 {
            assert_eq!(hoggatt_binomial(n, n), int(1));
        }
        for (n, row) in HOGGATT.iter().enumerate() {
            let got: Vec<Integer> = (0..=n as i64)
                .map(|k| hoggatt_binomial(n as i64, k))
                .collect();
            assert_eq!(got, row.iter().map(|&v| int(v)).collect::<Vec<_>>());
        }
    }

    #[test]
    fn q_integer_examples() {
        assert_eq!(q_integer(0), QPoly::zero());
        assert_eq!(q_integer(1), p(&[1]));
        assert_eq!(q_integer(3), p(&[1, 1, 1]));
        for m in 0..8 {
            assert_eq!(q_integer(2 * m).eval_i64(-1), int(0));
            assert_eq!(q_integer(2 * m + 1).eval_i64(-1), int(1));
        }
    }

    #[test]
    fn q_binomial_examples() {
        assert_eq!(q_binomial(4, 2).unwrap(), p(&[1, 1, 2, 1, 1]));
        assert_eq!(q_binomial(7, 0).unwrap(), QPoly::one());
        assert_eq!(q_binomial(4, 2).unwrap().eval_i64(1), int(6));
        assert_eq!(q_binomial(3, 4).unwrap(), QPoly::zero());
    }

    #[test]
    fn q_binomial_routes_agree() {
        let table = QBinomialTable::new(16);
        for n in 0..=16 {
            for k in -1..=n + 1 {
                let direct = q_binomial(n, k).unwrap();
                let ratio = if (0..=n).contains(&k) {
                    q_factorial(n)
                        .div_exact(&(&q_factorial(k) * &q_factorial(n - k)))
                        .unwrap()
                } else {
                    QPoly::zero()
                };
                assert_eq!(&direct, table.get(n, k), "n={n} k={k}");
                assert_eq!(direct, ratio, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn q_narayana_examples() {
        assert_eq!(q_narayana(2, 1).unwrap(), QPoly::one());
        assert_eq!(q_narayana(3, 1).unwrap(), p(&[1, 1, 1]));
        assert_eq!(q_narayana(3, 3).unwrap(), QPoly::zero());
    }

    #[test]
    fn q_hoggatt_examples() {
        assert_eq!(q_hoggatt_binomial(1, 1).unwrap(), QPoly::one());
        assert_eq!(q_hoggatt_binomial(2, 1).unwrap(), p(&[1, 1, 1]));
        assert_eq!(q_hoggatt_angle(2).unwrap(), p(&[1, 1, 1]));
    }

    #[test]
    fn q_catalan_examples() {
        assert_eq!(q_catalan(0).unwrap(), QPoly::one());
        assert_eq!(q_catalan(2).unwrap(), p(&[1, 0, 1]));
        // 1 + q^2 + q^3 + q^4 + q^6
        assert_eq!(q_catalan(3).unwrap(), p(&[1, 0, 1, 1, 1, 0, 1]));
        for n in 0..12 {
            assert_eq!(q_catalan(n).unwrap().eval_i64(1), catalan(n));
        }
    }

    #[test]
    fn neg1_closed_examples() {
        assert_eq!(hoggatt_neg1_closed(7, 3), int(18));
        assert_eq!(hoggatt_neg1_closed(6, 2), int(9));
        assert_eq!(hoggatt_neg1_closed(4, 2), int(4));
        assert_eq!(hoggatt_neg1_closed(4, 5), int(0));
        assert_eq!(symmetric_narayana_closed(4, 1), int(2));
        assert_eq!(symmetric_narayana_closed(4, 2), int(2));
        assert_eq!(symmetric_narayana_closed(5, 3), int(2));
        for n in 1..20 {
            assert_eq!(symmetric_narayana_closed(n, 0), int(1));
            assert_eq!(symmetric_narayana_closed(n, 1), int(n / 2));
            assert_eq!(symmetric_narayana_closed(n, n), int(0));
            let row: Vec<_> = (0..n).map(|k| symmetric_narayana_closed(n, k)).collect();
            assert_eq!(symmetric_narayana_row(n), row);
        }
    }

    #[test]
    fn printed_neg1_rows() {
        let closed = hoggatt_neg1_closed_table(7);
        let rec = hoggatt_neg1_table_recurrence(7);
        let eval = hoggatt_neg1_by_evaluation(7).unwrap();
        for (n, row) in HOGGATT_NEG1.iter().enumerate() {
            let want: Vec<Integer> = row.iter().map(|&v| int(v)).collect();
            assert_eq!(closed.row(n).unwrap(), &want[..]);
            assert_eq!(rec.row(n).unwrap(), &want[..]);
            assert_eq!(eval.row(n).unwrap(), &want[..]);
        }
    }

    #[test]
    fn recurrence_worked_cells() {
        let t = hoggatt_neg1_table_recurrence(6);
        assert_eq!(t.row(5).unwrap(), [1, 3, 6, 6, 3, 1].map(int));
        // T(6,3) = T(5,3) + T(5,2) - N(3,1)
        assert_eq!(t.get(6, 3), Some(&int(6 + 6 - 3)));
        // T(4,1) = T(3,1) + T(3,0) - N(2,0)
        assert_eq!(t.get(4, 1), Some(&int(2 + 1 - 1)));
    }

    #[test]
    fn recurrence_and_evaluation_match_closed_form() {
        let closed = hoggatt_neg1_closed_table(60);
        assert_eq!(hoggatt_neg1_table_recurrence(60), closed);
        assert_eq!(hoggatt_neg1_by_evaluation(60).unwrap(), closed);
    }

    #[test]
    fn jets_match_full_polynomials() {
        let table = QBinomialTable::new(24);
        let jets = NegOneBinomials::new(24);
        for n in 0..=24 {
            for k in 0..=n {
                assert_eq!(table.get(n, k).jet_at_neg_one(), jets.get(n, k));
            }
        }
        for n in 1..=20 {
            for k in 0..n {
                let full = q_narayana(n, k).unwrap().eval_i64(-1);
                assert_eq!(jets.q_narayana_value(n, k).unwrap(), full, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn row_sums() {
        assert_eq!(row_sum_s(4).unwrap(), int(10));
        assert_eq!(row_sum_s(0).unwrap(), int(1));
        assert_eq!(row_sum_s(6).unwrap(), int(35));
        for n in 1..60 {
            let s = |m| row_sum_s(m).unwrap();
            if n % 2 == 1 {
                assert_eq!(s(n), s(n - 1) * 2);
            } else {
                assert_eq!(s(n), s(n - 1) * 2 - catalan(n / 2));
            }
        }
    }

    #[test]
    fn identity_checks() {
        for n in [0, 2, 3] {
            assert!(check_q_catalan_identity(n).passed());
        }
        let expected = &(&QPoly::one() + &q_integer(3).shifted(2)) + &QPoly::monomial(6, 1);
        assert_eq!(q_catalan(3).unwrap(), expected);
        for n in [1, 5, 7] {
            assert!(check_neg1_sum_identity(n).passed());
        }
        assert!(check_q_catalan_identity_range(0, 20).passed());
        assert!(check_neg1_sum_identity_range(1, 100).passed());
    }

    proptest! {
        #[test]
        fn hoggatt_is_shifted_narayana(n in 0i64..40, k in -2i64..42) {
            prop_assert_eq!(hoggatt_binomial(n, k), narayana(n + 1, k));
        }

        #[test]
        fn triangles_are_symmetric(n in 0i64..60, k in 0i64..60) {
            prop_assume!(k <= n);
            prop_assert_eq!(hoggatt_binomial(n, k), hoggatt_binomial(n, n - k));
            prop_assert_eq!(hoggatt_neg1_closed(n, k), hoggatt_neg1_closed(n, n - k));
        }

        #[test]
        fn q_one_degenerations(n in 1i64..14, k in 0i64..14) {
            prop_assert_eq!(q_narayana(n, k).unwrap().eval_i64(1), narayana(n, k));
            prop_assert_eq!(q_hoggatt_binomial(n, k).unwrap().eval_i64(1), hoggatt_binomial(n, k));
        }

        #[test]
        fn q_hoggatt_routes(n in 0i64..12, k in 0i64..12) {
            let via_angles = q_hoggatt_binomial(n, k).unwrap();
            prop_assert_eq!(&via_angles, &q_narayana(n + 1, k).unwrap());
            prop_assert_eq!(via_angles.eval_i64(-1), hoggatt_neg1_closed(n, k));
        }
    }
}
