//! Sweeps over powers `I^k` comparing `e(A/I^k)` with the Betti bound
//! `U(I^k)`.
//!
//! The sweep records regularity strands `reg_i(I^k)`, detects the eventual
//! linear behaviour `reg(I^k) = qk + r`, and compares the observed ratios with
//! the predicted limit `E(I) / q^c`. Ideals are classified as squarefree,
//! non-equigenerated, or zero-dimensional non-equigenerated; on those classes
//! the limit is expected to be strictly below 1.

use serde::{Serialize, Serializer};

use crate::decomposition::{self, finite_differences};
use crate::hilbert;
use crate::io::IdealFile;
use crate::linalg::FieldChar;
use crate::monomial::MonomialIdeal;
use crate::resolution::{self, Caps};
use crate::{Error, Rational, Result};

fn ser_rational<S: Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(r)
}

fn ser_opt_rational<S: Serializer>(
    r: &Option<Rational>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match r {
        Some(r) => s.collect_str(r),
        None => s.serialize_none(),
    }
}

pub const DEFAULT_K: u32 = 4;

/// Invariants of a single power `I^k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct PowerRecord {
    pub k: u32,
    pub num_gens: usize,
    pub p: usize,
    pub reg: i64,
    /// `reg_i(I^k)` for `i = 0..c-1`
    pub reg_i: Vec<i64>,
    pub e: u64,
    #[serde(rename = "U", serialize_with = "ser_rational")]
    pub upper: Rational,
    #[serde(rename = "L", serialize_with = "ser_rational")]
    pub lower: Rational,
    /// `e / U`
    #[serde(serialize_with = "ser_rational")]
    pub ratio: Rational,
}

/// Why a sweep stopped early.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Truncation {
    pub k: u32,
    pub error: String,
    pub resource: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Sweep {
    pub c: usize,
    pub records: Vec<PowerRecord>,
    pub truncated: Option<Truncation>,
}

fn power_record(
    ideal: &MonomialIdeal,
    k: u32,
    c: usize,
    field: FieldChar,
    caps: &Caps,
) -> Result<PowerRecord> {
    let pk = ideal.power(k)?;
    let data = hilbert::hilbert_data(&pk)?;
    if data.c != c {
        return Err(Error::internal(format!(
            "height of I^{k} is {}, expected {c}",
            data.c
        )));
    }
    let table = resolution::betti_table(&pk, field, caps)?;
    let (upper, lower) = table.bounds(c)?;
    let reg_i = (0..c).map(|i| table.reg_i(i)).collect::<Result<Vec<_>>>()?;
    let ratio = Rational::from_integer(data.e.into()) / upper.clone();
    Ok(PowerRecord {
        k,
        num_gens: pk.num_gens(),
        p: table.projective_dimension(),
        reg: table.regularity()?,
        reg_i,
        e: data.e,
        upper,
        lower,
        ratio,
    })
}

/// Records for `k = 1..=max_k`. Resource failures truncate the sweep and
/// are reported with the `k` where they occurred; inconsistencies are errors.
pub fn power_sweep(
    ideal: &MonomialIdeal,
    max_k: u32,
    field: FieldChar,
    caps: &Caps,
) -> Result<Sweep> {
    ideal.require_proper_nonzero("power-sweep")?;
    if max_k == 0 {
        return Err(Error::domain("power-sweep needs K >= 1"));
    }
    let c = hilbert::height(ideal)?;
    let mut records = Vec::with_capacity(max_k as usize);
    let mut truncated = None;
    for k in 1..=max_k {
        match power_record(ideal, k, c, field, caps) {
            Ok(r) => records.push(r),
            Err(e @ (Error::Resource { .. } | Error::Overflow)) => {
                truncated = Some(Truncation {
                    k,
                    resource: true,
                    error: e.to_string(),
                });
                break;
            }
            Err(e) => return Err(e),
        }
    }
    Ok(Sweep {
        c,
        records,
        truncated,
    })
}

/// Exact-linear tail `v(k) = q k + r` for `k >= k0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct LinearFit {
    pub q: i64,
    pub r: i64,
    pub k0: u32,
    /// Number of trailing points on the line.
    pub tail_len: usize,
    /// `tail_len >= 3` and `q > 0`.
    pub validated: bool,
}

impl LinearFit {
    /// Longest exact-linear suffix of `values`, where `values[0]` is the value
    /// at `k = first_k`. `None` for fewer than two values.
    pub fn longest_tail(values: &[i64], first_k: u32) -> Option<LinearFit> {
        let len = values.len();
        if len < 2 {
            return None;
        }
        let q = values[len - 1] - values[len - 2];
        let mut start = len - 2;
        while start > 0 && values[start] - values[start - 1] == q {
            start -= 1;
        }
        let k0 = first_k + start as u32;
        let tail_len = len - start;
        Some(LinearFit {
            q,
            r: values[start] - q * i64::from(k0),
            k0,
            tail_len,
            validated: tail_len >= 3 && q > 0,
        })
    }
}

fn fit_values(values: Vec<i64>, first_k: u32) -> Result<LinearFit> {
    match LinearFit::longest_tail(&values, first_k) {
        Some(fit) if fit.validated => Ok(fit),
        _ => Err(Error::FitFailure { values }),
    }
}

/// Fit `reg(I^k) = qk + r` on the sweep.
pub fn fit_regularity(records: &[PowerRecord]) -> Result<LinearFit> {
    let first = records.first().map_or(1, |r| r.k);
    fit_values(records.iter().map(|r| r.reg).collect(), first)
}

/// Fit `reg_i(I^k) = qk + r_i` on the sweep.
pub fn fit_reg_i(records: &[PowerRecord], i: usize) -> Result<LinearFit> {
    let first = records.first().map_or(1, |r| r.k);
    let values = records
        .iter()
        .map(|r| {
            r.reg_i
                .get(i)
                .copied()
                .ok_or_else(|| Error::domain(format!("no reg_{i} strand recorded")))
        })
        .collect::<Result<Vec<_>>>()?;
    fit_values(values, first)
}

/// Membership in the classes covered by the asymptotic upper bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Classification {
    /// Squarefree, i.e. radical.
    pub radical_squarefree: bool,
    /// Not all generators share one degree.
    pub monomial_different_degrees: bool,
    /// Zero-dimensional and not equigenerated.
    pub zero_dim_different_degrees: bool,
    /// The stricter reading: all generator degrees pairwise distinct.
    pub pairwise_distinct_degrees: bool,
    /// `|G(I)| = height(I)`, so the generators form a regular sequence.
    pub complete_intersection: bool,
    pub theorem_applies: bool,
}

impl Classification {
    /// A limit strictly below 1 is predicted.
    pub fn strict_expected(&self) -> bool {
        self.monomial_different_degrees
            || self.zero_dim_different_degrees
            || (self.radical_squarefree && !self.complete_intersection)
    }
}

pub fn classify(ideal: &MonomialIdeal) -> Result<Classification> {
    let radical_squarefree = ideal.is_squarefree()?;
    let equigenerated = ideal.is_equigenerated()?;
    let zero_dim = ideal.is_zero_dimensional()?;
    let c = hilbert::height(ideal)?;
    let monomial_different_degrees = !equigenerated;
    let zero_dim_different_degrees = zero_dim && !equigenerated;
    Ok(Classification {
        radical_squarefree,
        monomial_different_degrees,
        zero_dim_different_degrees,
        pairwise_distinct_degrees: ideal.has_pairwise_distinct_degrees()?,
        complete_intersection: ideal.num_gens() == c,
        theorem_applies: radical_squarefree
            || monomial_different_degrees
            || zero_dim_different_degrees,
    })
}

/// The predicted limit of `e(A/I^k) / U(I^k)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct LimitReport {
    #[serde(rename = "E")]
    pub e_invariant: u64,
    pub q: i64,
    pub c: usize,
    /// `E / q^c`
    #[serde(serialize_with = "ser_rational")]
    pub limit: Rational,
    pub strict_expected: bool,
    /// Some generator has degree below `q`.
    pub min_degree_below_q: bool,
}

pub fn limit_ratio(ideal: &MonomialIdeal, fit: &LinearFit) -> Result<LimitReport> {
    if !fit.validated {
        return Err(Error::domain(
            "limit-ratio needs a validated regularity fit",
        ));
    }
    let e_invariant = decomposition::e_invariant(ideal)?;
    let c = hilbert::height(ideal)?;
    let class = classify(ideal)?;
    let q_pow: num_bigint::BigInt = num_bigint::BigInt::from(fit.q).pow(c as u32);
    Ok(LimitReport {
        e_invariant,
        q: fit.q,
        c,
        limit: Rational::new(e_invariant.into(), q_pow),
        strict_expected: class.strict_expected(),
        min_degree_below_q: ideal.min_degree().is_some_and(|d| (d as i64) < fit.q),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Pass,
    Violation,
    Inconclusive,
}

/// The three checks behind a verdict; `None` when not evaluated.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Checks {
    /// `e(A/I^k) <= U(I^k)` for every computed `k >= k0`.
    pub e_at_most_u_on_tail: Option<bool>,
    pub limit_at_most_one: Option<bool>,
    /// `limit < 1`, evaluated only when a strict limit is expected.
    pub strict_when_expected: Option<bool>,
}

/// Full report of [`verify_theorem`]. Field order is the serialization order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Verdict {
    pub ideal: IdealFile,
    pub field_char: FieldChar,
    #[serde(rename = "K")]
    pub max_k: u32,
    pub c: usize,
    pub records: Vec<PowerRecord>,
    pub fit: Option<LinearFit>,
    pub strand_fits: Vec<Option<LinearFit>>,
    pub classification: Classification,
    #[serde(rename = "E")]
    pub e_invariant: Option<u64>,
    #[serde(serialize_with = "ser_opt_rational")]
    pub limit: Option<Rational>,
    pub limit_num: Option<String>,
    pub limit_den: Option<String>,
    pub strict_expected: bool,
    pub checks: Checks,
    pub truncated: Option<Truncation>,
    pub notes: Vec<String>,
    pub verdict: Status,
}

impl Verdict {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }
}

/// Runs the sweep, fits, limit and checks for one ideal.
///
/// Only invalid input is an `Err`; resource exhaustion, fit failures and
/// non-stabilization produce an `INCONCLUSIVE` verdict.
pub fn verify_theorem(
    ideal: &MonomialIdeal,
    max_k: u32,
    field: FieldChar,
    caps: &Caps,
) -> Result<Verdict> {
    let classification = classify(ideal)?;
    let sweep = power_sweep(ideal, max_k, field, caps)?;
    let strict_expected = classification.strict_expected();
    let mut verdict = Verdict {
        ideal: IdealFile::from_ideal(ideal),
        field_char: field,
        max_k,
        c: sweep.c,
        records: sweep.records,
        fit: None,
        strand_fits: Vec::new(),
        classification,
        e_invariant: None,
        limit: None,
        limit_num: None,
        limit_den: None,
        strict_expected,
        checks: Checks::default(),
        truncated: sweep.truncated,
        notes: Vec::new(),
        verdict: Status::Inconclusive,
    };
    if let Some(t) = &verdict.truncated {
        verdict
            .notes
            .push(format!("sweep truncated at k = {}: {}", t.k, t.error));
    }
    if !classification.theorem_applies {
        verdict.notes.push("outside the proven classes".into());
    }

    let fit = match fit_regularity(&verdict.records) {
        Ok(fit) => fit,
        Err(e) => {
            verdict.notes.push(format!("{e}; try K = {}", max_k + 2));
            return Ok(verdict);
        }
    };
    verdict.fit = Some(fit);
    verdict.strand_fits = (0..verdict.c)
        .map(|i| fit_reg_i(&verdict.records, i).ok())
        .collect();
    let disagreeing: Vec<usize> = verdict
        .strand_fits
        .iter()
        .enumerate()
        .filter_map(|(i, f)| f.filter(|f| f.q != fit.q).map(|_| i))
        .collect();
    if !disagreeing.is_empty() {
        verdict.notes.push(format!(
            "reg_i strands {disagreeing:?} have a slope different from q = {}",
            fit.q
        ));
        return Ok(verdict);
    }

    let limit = match limit_ratio(ideal, &fit) {
        Ok(l) => l,
        Err(e) => {
            verdict.notes.push(e.to_string());
            return Ok(verdict);
        }
    };
    if classification.monomial_different_degrees && !limit.min_degree_below_q {
        verdict.notes.push(format!(
            "not equigenerated, but no generator has degree below q = {}",
            limit.q
        ));
    }

    let one = Rational::from_integer(1.into());
    let mut tail_ok = true;
    for r in &verdict.records {
        let holds = Rational::from_integer(r.e.into()) <= r.upper;
        if r.k >= fit.k0 {
            tail_ok &= holds;
        } else if !holds {
            verdict
                .notes
                .push(format!("e > U at k = {} (before the linear tail)", r.k));
        }
    }
    let at_most_one = limit.limit <= one;
    let strict = strict_expected.then(|| limit.limit < one);
    verdict.checks = Checks {
        e_at_most_u_on_tail: Some(tail_ok),
        limit_at_most_one: Some(at_most_one),
        strict_when_expected: strict,
    };
    if limit.limit == one {
        verdict.notes.push("extremal: limit equals 1".into());
    }
    verdict.e_invariant = Some(limit.e_invariant);
    verdict.limit_num = Some(limit.limit.numer().to_string());
    verdict.limit_den = Some(limit.limit.denom().to_string());
    verdict.limit = Some(limit.limit);
    verdict.verdict = if tail_ok && at_most_one && strict != Some(false) {
        Status::Pass
    } else {
        Status::Violation
    };
    Ok(verdict)
}

/// `k -> e(A/I^k)` against its predicted leading term.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct PolynomialityCheck {
    pub c: usize,
    /// `e(A/I^k)` for `k = 1..=K`
    pub values: Vec<u64>,
    /// `c`-th forward differences
    pub leading_differences: Vec<i64>,
    /// `(c+1)`-th forward differences
    pub vanishing_differences: Vec<i64>,
    pub tail_constant: Option<i64>,
    #[serde(rename = "E")]
    pub e_invariant: u64,
    pub passed: bool,
}

/// Number of trailing `c`-th differences that must agree.
pub const POLYNOMIAL_TAIL: usize = 3;

/// Checks that the `c`-th differences of `e(A/I^k)` are constant on the
/// last [`POLYNOMIAL_TAIL`] values and equal to `E(I)`, and that the
/// `(c+1)`-th differences vanish there.
pub fn e_polynomial_check(ideal: &MonomialIdeal, max_k: u32) -> Result<PolynomialityCheck> {
    ideal.require_proper_nonzero("e-polynomial-check")?;
    let c = hilbert::height(ideal)?;
    let e_invariant = decomposition::e_invariant(ideal)?;
    let mut values = Vec::with_capacity(max_k as usize);
    let mut power = ideal.clone();
    for k in 1..=max_k {
        if k > 1 {
            power = power.product(ideal)?;
        }
        values.push(hilbert::multiplicity(&power)?);
    }
    let leading = finite_differences(&values, c);
    let vanishing = finite_differences(&values, c + 1);
    let tail_constant = (leading.len() >= POLYNOMIAL_TAIL)
        .then(|| &leading[leading.len() - POLYNOMIAL_TAIL..])
        .filter(|t| t.iter().all(|&d| d == t[0]))
        .map(|t| t[0]);
    let vanishes = vanishing.len() >= POLYNOMIAL_TAIL - 1
        && vanishing[vanishing.len() - (POLYNOMIAL_TAIL - 1)..]
            .iter()
            .all(|&d| d == 0);
    Ok(PolynomialityCheck {
        c,
        passed: vanishes && tail_constant == Some(e_invariant as i64),
        values,
        leading_differences: leading,
        vanishing_differences: vanishing,
        tail_constant,
        e_invariant,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational;
    use crate::Ring;
    use std::sync::Arc;

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(
            Arc::new(Ring::with_vars(n)),
            gens.iter().map(|g| g.to_vec()).collect(),
        )
        .unwrap()
    }

    fn tri() -> MonomialIdeal {
        ideal(3, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]])
    }

    fn m2() -> MonomialIdeal {
        ideal(2, &[&[2, 0], &[1, 1], &[0, 2]])
    }

    fn ci23() -> MonomialIdeal {
        ideal(2, &[&[2, 0], &[0, 3]])
    }

    #[test]
    fn fit_examples() {
        let f = LinearFit::longest_tail(&[2, 4, 6, 8], 1).unwrap();
        assert_eq!((f.q, f.r, f.k0, f.validated), (2, 0, 1, true));
        let f = LinearFit::longest_tail(&[4, 7, 10, 13], 1).unwrap();
        assert_eq!((f.q, f.r, f.validated), (3, 1, true));
        let f = LinearFit::longest_tail(&[3, 5, 8, 11], 1).unwrap();
        // tail 5, 8, 11 at k = 2, 3, 4: reg = 3k - 1
        assert_eq!((f.q, f.r, f.k0, f.validated), (3, -1, 2, true));
        let f = LinearFit::longest_tail(&[3, 5, 8], 1).unwrap();
        assert!(!f.validated);
        assert!(matches!(
            fit_values(vec![3, 5, 8], 1),
            Err(Error::FitFailure { values }) if values == vec![3, 5, 8]
        ));
        assert!(LinearFit::longest_tail(&[1], 1).is_none());
        assert!(!LinearFit::longest_tail(&[5, 5, 5], 1).unwrap().validated);
    }

    #[test]
    fn m2_sweep_is_extremal() {
        let sweep = power_sweep(&m2(), 4, FieldChar::Zero, &Caps::default()).unwrap();
        assert!(sweep.truncated.is_none());
        for r in &sweep.records {
            let k = i64::from(r.k);
            let expected = (k * (2 * k + 1)) as u64;
            assert_eq!(r.e, expected);
            assert_eq!(r.upper, Rational::from_integer(expected.into()));
            assert_eq!(r.ratio, rational(1, 1));
        }
        let regs: Vec<i64> = sweep.records.iter().map(|r| r.reg).collect();
        assert_eq!(regs, vec![2, 4, 6, 8]);
    }

    #[test]
    fn triangle_sweep() {
        let sweep = power_sweep(&tri(), 4, FieldChar::Zero, &Caps::default()).unwrap();
        assert_eq!(sweep.records[0].e, 3);
        assert_eq!(sweep.records[0].ratio, rational(1, 1));
        assert!(sweep.records.iter().all(|r| r.ratio <= rational(1, 1)));
    }

    #[test]
    fn koszul_sweep_smoke() {
        let m = MonomialIdeal::maximal(Arc::new(Ring::with_vars(3)));
        let sweep = power_sweep(&m, 3, FieldChar::Zero, &Caps::default()).unwrap();
        let r1 = &sweep.records[0];
        assert_eq!(
            (r1.e, r1.upper.clone(), r1.lower.clone()),
            (1, rational(1, 1), rational(1, 1))
        );
        // e(A/m^k) = C(k + 2, 3)
        let es: Vec<u64> = sweep.records.iter().map(|r| r.e).collect();
        assert_eq!(es, vec![1, 4, 10]);
    }

    #[test]
    fn sweep_truncates_on_caps() {
        let caps = Caps {
            max_gens: 3,
            ..Caps::default()
        };
        let sweep = power_sweep(&tri(), 4, FieldChar::Zero, &caps).unwrap();
        assert_eq!(sweep.records.len(), 1);
        let t = sweep.truncated.unwrap();
        assert_eq!(t.k, 2);
        assert!(t.resource);
        let v = verify_theorem(&tri(), 4, FieldChar::Zero, &caps).unwrap();
        assert_eq!(v.verdict, Status::Inconclusive);
    }

    #[test]
    fn limit_examples() {
        let fit = |q| LinearFit {
            q,
            r: 0,
            k0: 1,
            tail_len: 3,
            validated: true,
        };
        let l = limit_ratio(&tri(), &fit(2)).unwrap();
        assert_eq!(
            (l.e_invariant, l.c, l.limit.clone(), l.strict_expected),
            (3, 2, rational(3, 4), true)
        );
        let l = limit_ratio(&m2(), &fit(2)).unwrap();
        assert_eq!(
            (l.e_invariant, l.limit.clone(), l.strict_expected),
            (4, rational(1, 1), false)
        );
        let l = limit_ratio(&ci23(), &fit(3)).unwrap();
        assert_eq!(
            (l.e_invariant, l.limit.clone(), l.strict_expected),
            (6, rational(2, 3), true)
        );
        let unvalidated = LinearFit {
            validated: false,
            ..fit(2)
        };
        assert!(limit_ratio(&tri(), &unvalidated).is_err());
    }

    #[test]
    fn classify_examples() {
        let c = classify(&tri()).unwrap();
        assert!(c.radical_squarefree && !c.monomial_different_degrees && !c.complete_intersection);
        assert!(c.theorem_applies && c.strict_expected());
        let c = classify(&ci23()).unwrap();
        assert!(
            c.zero_dim_different_degrees && c.monomial_different_degrees && c.complete_intersection
        );
        let c = classify(&m2()).unwrap();
        assert!(!c.theorem_applies && !c.strict_expected());
    }

    #[test]
    fn verify_examples() {
        let caps = Caps::default();
        let v = verify_theorem(&tri(), 4, FieldChar::Zero, &caps).unwrap();
        assert_eq!(v.verdict, Status::Pass);
        assert_eq!(v.limit, Some(rational(3, 4)));
        assert_eq!(v.fit.unwrap().q, 2);

        let v = verify_theorem(&m2(), 4, FieldChar::Zero, &caps).unwrap();
        assert_eq!(v.verdict, Status::Pass);
        assert_eq!(v.limit, Some(rational(1, 1)));
        assert!(!v.strict_expected);
        assert!(v.notes.iter().any(|n| n.contains("extremal")));

        let v = verify_theorem(&ci23(), 4, FieldChar::Zero, &caps).unwrap();
        assert_eq!(v.verdict, Status::Pass);
        assert_eq!(v.limit, Some(rational(2, 3)));
        assert_eq!(
            (v.limit_num.as_deref(), v.limit_den.as_deref()),
            (Some("2"), Some("3"))
        );
    }

    #[test]
    fn verify_is_deterministic() {
        let caps = Caps::default();
        let a = verify_theorem(&tri(), 4, FieldChar::Zero, &caps)
            .unwrap()
            .to_json();
        let b = verify_theorem(&tri(), 4, FieldChar::Zero, &caps)
            .unwrap()
            .to_json();
        assert_eq!(a, b);
    }

    #[test]
    fn short_sweep_is_inconclusive() {
        let v = verify_theorem(&tri(), 2, FieldChar::Zero, &Caps::default()).unwrap();
        assert_eq!(v.verdict, Status::Inconclusive);
        assert!(v.notes.iter().any(|n| n.contains("K = 4")));
    }

    #[test]
    fn polynomiality_examples() {
        let check = e_polynomial_check(&m2(), 6).unwrap();
        assert_eq!(&check.values[..4], &[3, 10, 21, 36]);
        assert_eq!(check.tail_constant, Some(4));
        assert!(check.passed);

        // e(A/(x^2, y^3)^k) by standard monomial counting
        let ci = ci23();
        let counted: Vec<u64> = (1..=6)
            .map(|k| hilbert::artinian_length(&ci.power(k).unwrap()).unwrap())
            .collect();
        let check = e_polynomial_check(&ci, 6).unwrap();
        assert_eq!(check.values, counted);
        assert_eq!(
            check.tail_constant,
            Some(decomposition::e_invariant(&ci).unwrap() as i64)
        );
        assert!(check.passed);

        let check = e_polynomial_check(&tri(), 6).unwrap();
        assert!(check.passed);
        assert_eq!(check.e_invariant, hilbert::multiplicity(&tri()).unwrap());

        let short = e_polynomial_check(&tri(), 3).unwrap();
        assert!(!short.passed);
    }
}
