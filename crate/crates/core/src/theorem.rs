//! The factorization of twisted characters and the identities around it.
//!
//! For a GL_mn weight `lambda`, the value `Theta_lambda(t . c_n)` is
//! identically zero unless `lambda + delta_mn` hits every residue class mod
//! `n` exactly `m` times. When it does, class `i` yields a GL_m weight `mu_i`
//! with `mu_i + delta_m = sorted((a - i) / n for a in class i)`, and
//! `Theta_lambda(t . c_n) = sign * prod_i Theta_{mu_i}(t^n)`.
//!
//! The sign is found by exact evaluation at one point and then checked
//! everywhere else; no closed formula is assumed.

use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactnum::rational::serde_vec;
use crate::exactnum::{lcm, CycloMatrix, CycloNumber, CyclotomicField, ExactError, Rational};
use crate::schur::{character_at, CharacterValue, SchurError};
use crate::verify::{random_nonzero_rational, random_regular_point, stream_rng};
use crate::weights::{
    add_staircase, check_shape, eigenvalues_of_twisted_point, residue_condition, ResidueClasses,
    TwistedPoint, Weight, WeightError,
};

/// Default bound on sign-determination retries.
pub const DEFAULT_MAX_RETRIES: usize = 32;
/// Default height of random rational evaluation points.
pub const DEFAULT_HEIGHT: u32 = 7;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TheoremError {
    #[error(transparent)]
    Weight(#[from] WeightError),
    #[error(transparent)]
    Schur(#[from] SchurError),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error("no valid evaluation point found after {0} attempts")]
    NoValidPoint(usize),
    #[error("ratio {ratio} at t = {point} is not +1 or -1")]
    NotUnit { ratio: String, point: String },
    #[error("Kostant value {0} is not in {{-1, 0, 1}}")]
    KostantOutOfRange(String),
    #[error("{0}")]
    Shape(String),
    #[error("{0}")]
    Config(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "i8", try_from = "i8")]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn apply(self, value: CycloNumber) -> CycloNumber {
        match self {
            Sign::Plus => value,
            Sign::Minus => -value,
        }
    }
}

impl From<Sign> for i8 {
    fn from(sign: Sign) -> i8 {
        sign.as_i8()
    }
}

impl TryFrom<i8> for Sign {
    type Error = String;

    fn try_from(value: i8) -> Result<Self, String> {
        match value {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            other => Err(format!("sign must be 1 or -1, got {other}")),
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}

/// Outcome of the factorization for one `(lambda, m, n)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorizationResult {
    pub vanishes: bool,
    pub classes: ResidueClasses,
    /// `mus[i]` is the GL_m weight from residue class `i`; empty when vanishing.
    pub mus: Vec<Weight>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sign: Option<Sign>,
}

impl FactorizationResult {
    /// `sign * prod_i Theta_{mu_i}(xs)`, or zero when vanishing.
    pub fn predicted_value(&self, xs: &[CycloNumber]) -> Result<CharacterValue, TheoremError> {
        let field = xs
            .first()
            .ok_or_else(|| TheoremError::Shape("no eigenvalues".into()))?
            .field();
        if self.vanishes {
            return Ok(field.zero());
        }
        let product = factor_product(&self.mus, xs)?;
        Ok(self.sign.unwrap_or(Sign::Plus).apply(product))
    }
}

fn factor_product(mus: &[Weight], xs: &[CycloNumber]) -> Result<CycloNumber, TheoremError> {
    let field = xs[0].field();
    let mut product = field.one();
    for mu in mus {
        product *= &character_at(mu, xs)?;
    }
    Ok(product)
}

/// Residue classes and factor weights, without the sign.
fn factor_weights(
    lambda: &Weight,
    m: usize,
    n: usize,
) -> Result<(bool, ResidueClasses, Vec<Weight>), TheoremError> {
    let (holds, classes) = residue_condition(lambda, m, n)?;
    if !holds {
        return Ok((false, classes, Vec::new()));
    }
    let mut mus = Vec::with_capacity(n);
    for i in 0..n {
        // class entries are already decreasing and distinct
        let quotients: Vec<i64> = classes
            .class(i)
            .iter()
            .map(|a| (a - i as i64).div_euclid(n as i64))
            .collect();
        let entries: Vec<i64> = quotients
            .iter()
            .enumerate()
            .map(|(k, q)| q - (m - 1 - k) as i64)
            .collect();
        let mu = Weight::new(entries)
            .map_err(|e| TheoremError::Shape(format!("mu_{i} not dominant: {e}")))?;
        mus.push(mu);
    }
    Ok((true, classes, mus))
}

pub fn factorize(lambda: &Weight, m: usize, n: usize) -> Result<FactorizationResult, TheoremError> {
    factorize_with_retries(lambda, m, n, DEFAULT_MAX_RETRIES)
}

pub fn factorize_with_retries(
    lambda: &Weight,
    m: usize,
    n: usize,
    max_retries: usize,
) -> Result<FactorizationResult, TheoremError> {
    let (holds, classes, mus) = factor_weights(lambda, m, n)?;
    let mut result = FactorizationResult {
        vanishes: !holds,
        classes,
        mus,
        sign: None,
    };
    if holds {
        result.sign = Some(determine_sign(lambda, m, n, &result, max_retries)?);
    }
    Ok(result)
}

fn first_primes(count: usize) -> Vec<i64> {
    let mut primes = Vec::with_capacity(count);
    let mut candidate = 2i64;
    while primes.len() < count {
        if primes
            .iter()
            .take_while(|&&p| p * p <= candidate)
            .all(|&p| candidate % p != 0)
        {
            primes.push(candidate);
        }
        candidate += 1;
    }
    primes
}

/// The sign in the factorization, by evaluating both sides at
/// `t = (2, 3, 5, 7, ...) + attempt` until the product side is nonzero.
pub fn determine_sign(
    lambda: &Weight,
    m: usize,
    n: usize,
    result: &FactorizationResult,
    max_retries: usize,
) -> Result<Sign, TheoremError> {
    check_shape(lambda, m, n)?;
    if result.vanishes {
        return Err(TheoremError::Shape(
            "the character vanishes; there is no sign".into(),
        ));
    }
    let primes = first_primes(m);
    for attempt in 0..max_retries.max(1) {
        let t: Vec<i64> = primes.iter().map(|p| p + attempt as i64).collect();
        let point = TwistedPoint::from_ints(&t, n)?;
        let lhs = twisted_character(lambda, &point)?;
        let rhs = factor_product(&result.mus, &point.nth_powers())?.lift(lhs.field())?;
        if rhs.is_zero() {
            continue;
        }
        let ratio = lhs.checked_div(&rhs)?;
        let one = lhs.field().one();
        return if ratio == one {
            Ok(Sign::Plus)
        } else if ratio == -one {
            Ok(Sign::Minus)
        } else {
            Err(TheoremError::NotUnit {
                ratio: ratio.to_string(),
                point: format!("{t:?}"),
            })
        };
    }
    Err(TheoremError::NoValidPoint(max_retries))
}

/// `Theta_lambda(t . c_n)`.
pub fn twisted_character(
    lambda: &Weight,
    point: &TwistedPoint,
) -> Result<CharacterValue, TheoremError> {
    check_shape(lambda, point.m(), point.twist_order())?;
    let xs = eigenvalues_of_twisted_point(point)?;
    Ok(character_at(lambda, &xs)?)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrialRecord {
    #[serde(with = "serde_vec")]
    pub t: Vec<Rational>,
    pub lhs: CycloNumber,
    pub rhs: CycloNumber,
    pub ok: bool,
}

/// Factorization plus every evaluation made while checking it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    #[serde(flatten)]
    pub factorization: FactorizationResult,
    pub trials: Vec<TrialRecord>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.trials.iter().all(|t| t.ok)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

pub fn verify_identity(
    lambda: &Weight,
    m: usize,
    n: usize,
    trials: usize,
    seed: u64,
) -> Result<VerificationReport, TheoremError> {
    verify_identity_with(lambda, m, n, trials, seed, DEFAULT_HEIGHT)
}

/// Checks `Theta(t . c_n) = sign * prod Theta_{mu_i}(t^n)` (or `= 0`) at
/// `trials` random regular rational points. Trial `k` draws from stream `k`
/// of `seed`.
pub fn verify_identity_with(
    lambda: &Weight,
    m: usize,
    n: usize,
    trials: usize,
    seed: u64,
    height: u32,
) -> Result<VerificationReport, TheoremError> {
    let factorization = factorize(lambda, m, n)?;
    let mut records = Vec::with_capacity(trials);
    for trial in 0..trials {
        let mut rng = stream_rng(seed, trial as u64);
        let t = random_regular_point(m, n, height, &mut rng);
        let point = TwistedPoint::from_rationals(&t, n)?;
        let lhs = twisted_character(lambda, &point)?;
        let rhs = factorization
            .predicted_value(&point.nth_powers())?
            .lift(lhs.field())?;
        records.push(TrialRecord {
            ok: lhs == rhs,
            t,
            lhs,
            rhs,
        });
    }
    Ok(VerificationReport {
        factorization,
        trials: records,
    })
}

/// `(g_1, ..., g_n)`: `n` square matrices of one size over one field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixTuple {
    gs: Vec<CycloMatrix>,
}

impl MatrixTuple {
    pub fn new(gs: Vec<CycloMatrix>) -> Result<Self, TheoremError> {
        let first = gs
            .first()
            .ok_or_else(|| TheoremError::Shape("empty matrix tuple".into()))?;
        if !first.is_square() {
            return Err(ExactError::NotSquare {
                rows: first.rows(),
                cols: first.cols(),
            }
            .into());
        }
        for g in &gs {
            if g.rows() != first.rows() || g.cols() != first.cols() {
                return Err(TheoremError::Shape(
                    "matrices in a tuple must share one size".into(),
                ));
            }
            if g.field() != first.field() {
                return Err(ExactError::ConductorMismatch {
                    left: first.field().conductor(),
                    right: g.field().conductor(),
                }
                .into());
            }
        }
        Ok(MatrixTuple { gs })
    }

    pub fn matrices(&self) -> &[CycloMatrix] {
        &self.gs
    }

    pub fn len(&self) -> usize {
        self.gs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gs.is_empty()
    }

    pub fn size(&self) -> usize {
        self.gs[0].rows()
    }

    pub fn field(&self) -> &CyclotomicField {
        self.gs[0].field()
    }

    /// The element `(g_1, ..., g_n) x sigma` acting on `(C^m)^n`: block row
    /// `r` holds `g_r` in block column `r - 1 (mod n)`.
    pub fn twisted_element(&self) -> CycloMatrix {
        let n = self.len();
        let size = self.size();
        let field = self.field();
        CycloMatrix::from_fn(field, n * size, n * size, |r, c| {
            let (br, bc) = (r / size, c / size);
            if bc == (br + n - 1) % n {
                self.gs[br].get(r % size, c % size).clone()
            } else {
                field.zero()
            }
        })
    }
}

/// `g_1 g_2 ... g_n`.
pub fn norm_map(g: &MatrixTuple) -> CycloMatrix {
    g.gs[1..].iter().fold(g.gs[0].clone(), |acc, x| {
        acc.mul(x).expect("tuple shares size and field")
    })
}

/// Twisted conjugation by `(h_1, ..., h_n)`: `g_k -> h_k g_k h_{k+1}^{-1}`,
/// indices mod `n`. The norm changes by conjugation with `h_1`.
pub fn twisted_conjugate(g: &MatrixTuple, h: &MatrixTuple) -> Result<MatrixTuple, TheoremError> {
    if g.len() != h.len() || g.size() != h.size() || g.field() != h.field() {
        return Err(TheoremError::Shape(
            "g and h must have the same length, size and field".into(),
        ));
    }
    let inverses =
        h.gs.iter()
            .map(CycloMatrix::inverse)
            .collect::<Result<Vec<_>, _>>()?;
    let n = g.len();
    let gs = (0..n)
        .map(|k| h.gs[k].mul(&g.gs[k])?.mul(&inverses[(k + 1) % n]))
        .collect::<Result<Vec<_>, _>>()?;
    MatrixTuple::new(gs)
}

fn rational_diag(entries: &[Rational]) -> CycloMatrix {
    let q = CyclotomicField::rationals();
    let diag: Vec<_> = entries.iter().map(|v| q.from_rational(v.clone())).collect();
    CycloMatrix::diagonal(&q, &diag)
}

/// Coefficients (low degree first) of `prod_k (x^n - c_k)`.
fn expected_block_char_poly(constants: &[Rational], n: usize) -> Vec<Rational> {
    let mut poly = vec![Rational::one()];
    for c in constants {
        let mut next = vec![Rational::zero(); poly.len() + n];
        for (i, a) in poly.iter().enumerate() {
            next[i + n] += a;
            next[i] -= a * c;
        }
        poly = next;
    }
    poly
}

/// The general-element form `Theta(g x sigma) = Theta'(Nm g)` on diagonal
/// tuples whose norm has exact n-th power eigenvalues `s_k^n`.
///
/// Each trial draws `s` and `g_1 .. g_{n-1}`, solves for `g_n`, checks that the
/// characteristic polynomial of `g x sigma` is `prod_k (x^n - s_k^n)` (so its
/// eigenvalues are `s_k zeta_n^j`), and compares the character there with
/// `sign * prod_i Theta_{mu_i}` at the eigenvalues of `Nm g`.
pub fn verify_general_form(
    lambda: &Weight,
    m: usize,
    n: usize,
    trials: usize,
    seed: u64,
) -> Result<VerificationReport, TheoremError> {
    let factorization = factorize(lambda, m, n)?;
    let q = CyclotomicField::rationals();
    let mut records = Vec::with_capacity(trials);
    for trial in 0..trials {
        let mut rng = stream_rng(seed, trial as u64);
        let s: Vec<Rational> = (0..m)
            .map(|_| random_nonzero_rational(DEFAULT_HEIGHT, &mut rng))
            .collect();
        let norms: Vec<Rational> = s.iter().map(|x| num_traits::pow(x.clone(), n)).collect();
        let mut diagonals: Vec<Vec<Rational>> = (0..n.saturating_sub(1))
            .map(|_| {
                (0..m)
                    .map(|_| random_nonzero_rational(DEFAULT_HEIGHT, &mut rng))
                    .collect()
            })
            .collect();
        let last: Vec<Rational> = (0..m)
            .map(|k| {
                diagonals
                    .iter()
                    .fold(norms[k].clone(), |acc, d| acc / &d[k])
            })
            .collect();
        diagonals.push(last);
        let tuple = MatrixTuple::new(diagonals.iter().map(|d| rational_diag(d)).collect())?;

        let norm = norm_map(&tuple);
        let norm_eigenvalues: Vec<CycloNumber> = (0..m).map(|k| norm.get(k, k).clone()).collect();
        let norm_is_diag = (0..m).all(|r| (0..m).all(|c| r == c || norm.get(r, c).is_zero()));

        let char_poly = tuple.twisted_element().char_poly()?;
        let expected: Vec<CycloNumber> = expected_block_char_poly(&norms, n)
            .into_iter()
            .map(|c| q.from_rational(c))
            .collect();
        let eigenvalues_ok = norm_is_diag && char_poly == expected;

        let point = TwistedPoint::from_rationals(&s, n)?;
        let lhs = twisted_character(lambda, &point)?;
        let rhs = factorization
            .predicted_value(&norm_eigenvalues)?
            .lift(lhs.field())?;
        records.push(TrialRecord {
            ok: eigenvalues_ok && lhs == rhs,
            t: s,
            lhs,
            rhs,
        });
    }
    Ok(VerificationReport {
        factorization,
        trials: records,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockDetCheck {
    pub lhs: CycloNumber,
    pub rhs: CycloNumber,
    pub c: CycloNumber,
}

impl BlockDetCheck {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// `prod_{0 <= i < j < n} (omega^i - omega^j)^m` in `field`, with
/// `omega = zeta_n`.
pub fn block_constant(n: usize, m: usize, field: &CyclotomicField) -> CycloNumber {
    let step = (field.conductor() / n as u64) as i64;
    let mut c = field.one();
    for i in 0..n as i64 {
        for j in i + 1..n as i64 {
            c *= &(&field.root_of_unity(i * step) - &field.root_of_unity(j * step));
        }
    }
    c.pow_u(m as u64)
}

/// Determinant of the `mn x mn` matrix with block `(r, j) = omega^{r (n-1-j)} X_r`
/// (`r, j` from 0) against `c * prod det X_r`.
///
/// This is the familiar layout (row `r` scaled by successive powers of
/// `omega^r`) with the column blocks in reverse order, which makes the scalar
/// factor exactly `c` for every `m` and `n`.
pub fn block_det_identity_check(xs: &[CycloMatrix]) -> Result<BlockDetCheck, TheoremError> {
    let tuple = MatrixTuple::new(xs.to_vec())?;
    let n = xs.len();
    let field = CyclotomicField::new(lcm(tuple.field().conductor(), n as u64))?;
    let step = (field.conductor() / n as u64) as i64;
    let lifted = xs
        .iter()
        .map(|x| x.lift(&field))
        .collect::<Result<Vec<_>, _>>()?;
    let blocks: Vec<Vec<CycloMatrix>> = (0..n)
        .map(|r| {
            (0..n)
                .map(|j| lifted[r].scale(&field.root_of_unity(step * (r * (n - 1 - j)) as i64)))
                .collect()
        })
        .collect();
    let lhs = CycloMatrix::from_blocks(&blocks)?.det()?;
    let c = block_constant(n, tuple.size(), &field);
    let mut rhs = c.clone();
    for x in &lifted {
        rhs *= &x.det()?;
    }
    Ok(BlockDetCheck { lhs, rhs, c })
}

/// Whether `{zeta_n^{(lambda + delta)_k}}` contains every n-th root of unity
/// exactly `m` times, decided by comparing field elements.
pub fn cocharacter_test(lambda: &Weight, m: usize, n: usize) -> Result<bool, TheoremError> {
    check_shape(lambda, m, n)?;
    let field = CyclotomicField::new(n as u64)?;
    let values: Vec<CycloNumber> = add_staircase(lambda)
        .iter()
        .map(|&a| field.root_of_unity(a))
        .collect();
    Ok((0..n as i64).all(|j| {
        let root = field.root_of_unity(j);
        values.iter().filter(|v| **v == root).count() == m
    }))
}

/// `Theta_lambda(c_n)` for a GL_n weight; always -1, 0 or 1.
pub fn kostant_value(lambda: &Weight, n: usize) -> Result<i64, TheoremError> {
    let point = TwistedPoint::from_ints(&[1], n)?;
    let value = twisted_character(lambda, &point)?;
    let integer = value
        .to_rational()
        .filter(|q| q.is_integer())
        .map(|q| q.to_integer())
        .ok_or_else(|| TheoremError::KostantOutOfRange(value.to_string()))?;
    match i64::try_from(integer) {
        Ok(v @ -1..=1) => Ok(v),
        _ => Err(TheoremError::KostantOutOfRange(value.to_string())),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PowerKind {
    Sym,
    Ext,
}

impl std::str::FromStr for PowerKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "sym" => Ok(PowerKind::Sym),
            "ext" => Ok(PowerKind::Ext),
            other => Err(format!("expected sym or ext, got {other:?}")),
        }
    }
}

/// A character value computed twice: from the weight, and from a closed form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedFormCheck {
    pub twisted: CharacterValue,
    pub closed_form: CharacterValue,
    pub ok: bool,
}

impl ClosedFormCheck {
    pub fn value(&self) -> &CharacterValue {
        &self.twisted
    }
}

/// `Sym^k` or `Lambda^k` of `C^{mn}` at `t . c_n`. The closed form: zero unless
/// `n | k`; for `k = n l` it is `h_l(t^n)`, respectively
/// `(-1)^{(n+1) l} e_l(t^n)` (so `(-1)^l` for `n = 2`).
pub fn sym_lambda_check(
    kind: PowerKind,
    k: usize,
    point: &TwistedPoint,
) -> Result<ClosedFormCheck, TheoremError> {
    let (m, n) = (point.m(), point.twist_order());
    let weight = match kind {
        PowerKind::Sym => Weight::symmetric_power(k as i64, m * n),
        PowerKind::Ext if k <= m * n => Weight::exterior_power(k, m * n),
        PowerKind::Ext => {
            return Err(TheoremError::Shape(format!(
                "Lambda^{k} of C^{} is zero",
                m * n
            )))
        }
    };
    let twisted = twisted_character(&weight, point)?;
    let closed_form = if !k.is_multiple_of(n) {
        twisted.field().zero()
    } else {
        let l = k / n;
        let powers = point.nth_powers();
        let value = match kind {
            PowerKind::Sym => character_at(&Weight::symmetric_power(l as i64, m), &powers)?,
            PowerKind::Ext => {
                let v = character_at(&Weight::exterior_power(l, m), &powers)?;
                if ((n + 1) * l) % 2 == 1 {
                    -v
                } else {
                    v
                }
            }
        };
        value.lift(twisted.field())?
    };
    Ok(ClosedFormCheck {
        ok: twisted == closed_form,
        twisted,
        closed_form,
    })
}

/// `Sym^k(C^{4m})` at eigenvalues `(t, t^{-1}, -t, -t^{-1})` against
/// `Sym^{k/2}(C^{2m})` at `(t^2, t^{-2})`; zero for odd `k`.
pub fn siegel_levi_check(k: usize, t: &[Rational]) -> Result<ClosedFormCheck, TheoremError> {
    let m = t.len();
    if m == 0 || t.iter().any(Zero::is_zero) {
        return Err(TheoremError::Shape(
            "t must be a non-empty list of nonzero rationals".into(),
        ));
    }
    let mut doubled = t.to_vec();
    doubled.extend(t.iter().map(|x| x.recip()));
    let point = TwistedPoint::from_rationals(&doubled, 2)?;
    let twisted = twisted_character(&Weight::symmetric_power(k as i64, 4 * m), &point)?;
    let closed_form = if k % 2 == 1 {
        twisted.field().zero()
    } else {
        let q = CyclotomicField::rationals();
        let squares: Vec<CycloNumber> = doubled.iter().map(|x| q.from_rational(x * x)).collect();
        character_at(&Weight::symmetric_power((k / 2) as i64, 2 * m), &squares)?
            .lift(twisted.field())?
    };
    Ok(ClosedFormCheck {
        ok: twisted == closed_form,
        twisted,
        closed_form,
    })
}

/// `sum_{i<mn} i = m sum_{i<n} i + n^2 sum_{i<m} i`, both sides.
pub fn staircase_sum_identity(m: u64, n: u64) -> (u64, u64) {
    let tri = |k: u64| k * k.saturating_sub(1) / 2;
    (tri(m * n), m * tri(n) + n * n * tri(m))
}

/// Additive form of `z_pi = (z_1 ... z_n)^n`: `sum lambda = n * sum_i sum mu_i`.
pub fn central_characters_consistent(lambda: &Weight, result: &FactorizationResult) -> bool {
    let n = result.classes.modulus() as i64;
    let total: i64 = result
        .mus
        .iter()
        .map(crate::weights::central_character)
        .sum();
    crate::weights::central_character(lambda) == n * total
}
