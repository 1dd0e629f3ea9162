//! Cumulants of `i[s,x]`, `s + i[s,x]` and `x + i[x,s]` for free `s`, `x` with
//! `s` semicircular.
//!
//! Everything here is checked against the brute-force multilinear expansion
//! in [`crate::cumulant`]: the additivity of `s + i[s,x]`, the nonvanishing
//! mixed cumulant showing `s` and `i[s,x]` are not free, the signed sums that
//! must cancel order by order, and the closed form for `x + i[x,s]`.

use std::collections::BTreeSet;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::cumulant::{cumulant_of_polynomials, cumulant_of_word_products, CumulantSequence};
use crate::error::{Error, Result};
use crate::partitions::{self, assign_by_blocks, compose_interval, PartitionKind};
use crate::poly::{Letter, Polynomial, Word};
use crate::rational::{self, GaussianRational, Rational};

/// Default highest order for brute-force expansions.
pub const DEFAULT_MAX_ORDER: usize = 8;

/// Default highest order for [`cancellation_sum`].
pub const CANCELLATION_MAX_ORDER: usize = 7;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CommutatorKind {
    /// `i[s,x] = i·sx - i·xs`
    ISX,
    /// `i[x,s] = i·xs - i·sx`
    IXS,
}

pub fn commutator_polynomial(which: CommutatorKind) -> Polynomial {
    let sx: Word = Word::new(vec![Letter::S, Letter::X]).expect("nonempty");
    let xs: Word = Word::new(vec![Letter::X, Letter::S]).expect("nonempty");
    let (plus, minus) = match which {
        CommutatorKind::ISX => (sx, xs),
        CommutatorKind::IXS => (xs, sx),
    };
    Polynomial::from_terms([
        (GaussianRational::i(), plus),
        (-GaussianRational::i(), minus),
    ])
}

/// `s + i[s,x]`
pub fn s_plus_commutator() -> Polynomial {
    Polynomial::letter(Letter::S).add(&commutator_polynomial(CommutatorKind::ISX))
}

/// `x + i[x,s]`
pub fn x_plus_commutator() -> Polynomial {
    Polynomial::letter(Letter::X).add(&commutator_polynomial(CommutatorKind::IXS))
}

/// Free cumulants of the two free variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistributionPair {
    pub s: CumulantSequence,
    pub x: CumulantSequence,
}

impl DistributionPair {
    pub fn new(s: CumulantSequence, x: CumulantSequence) -> Self {
        Self { s, x }
    }

    /// Standard semicircular `s` (`κ_2 = 1`).
    pub fn standard(x: CumulantSequence) -> Self {
        Self::new(CumulantSequence::semicircle(Rational::one()), x)
    }

    pub fn s_is_semicircular(&self) -> bool {
        self.s.is_semicircular()
    }
}

/// `κ_1..κ_N` of `p` by full multilinear expansion.
pub fn cumulant_sequence_of(
    p: &Polynomial,
    pair: &DistributionPair,
    order: usize,
) -> Result<CumulantSequence> {
    let self_adjoint = p.is_self_adjoint();
    let mut values = Vec::with_capacity(order);
    for n in 1..=order {
        let args = vec![p.clone(); n];
        let k = cumulant_of_polynomials(&args, &pair.s, &pair.x)?;
        if !k.is_real() {
            let msg = format!("κ_{n}({p}) = {k}");
            return Err(if self_adjoint {
                Error::InternalConsistency(msg)
            } else {
                Error::NotReal(msg)
            });
        }
        values.push(k.re);
    }
    Ok(CumulantSequence::new(values))
}

/// Number of term choices the expansion of `κ_n(p, …, p)` walks.
pub fn expansion_size(p: &Polynomial, n: usize) -> u128 {
    (p.num_terms() as u128).saturating_pow(n as u32)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AdditivityReport {
    pub n: usize,
    /// `κ_n(s + i[s,x])`
    #[serde(with = "rational::as_string")]
    pub lhs: Rational,
    /// `κ_n(s)`
    #[serde(rename = "rhs_s", with = "rational::as_string")]
    pub rhs_s: Rational,
    /// `κ_n(i[s,x])`
    #[serde(rename = "rhs_c", with = "rational::as_string")]
    pub rhs_c: Rational,
    pub holds: bool,
}

impl AdditivityReport {
    pub fn new(n: usize, lhs: Rational, rhs_s: Rational, rhs_c: Rational) -> Self {
        let holds = lhs == &rhs_s + &rhs_c;
        Self {
            n,
            lhs,
            rhs_s,
            rhs_c,
            holds,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AdditivityRun {
    /// Set when `s` is not semicircular; the reports are then exploratory.
    pub hypothesis_violated: bool,
    pub reports: Vec<AdditivityReport>,
}

impl AdditivityRun {
    pub fn holds(&self) -> bool {
        self.reports.iter().all(|r| r.holds)
    }
}

/// Compares `κ_n(s + i[s,x])` with `κ_n(s) + κ_n(i[s,x])` for `n = 1..=order`.
pub fn verify_additivity(pair: &DistributionPair, order: usize) -> Result<AdditivityRun> {
    let sum = cumulant_sequence_of(&s_plus_commutator(), pair, order)?;
    let comm = cumulant_sequence_of(&commutator_polynomial(CommutatorKind::ISX), pair, order)?;
    let reports = (1..=order)
        .map(|n| {
            Ok(AdditivityReport::new(
                n,
                sum.get(n)?,
                pair.s.get(n)?,
                comm.get(n)?,
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(AdditivityRun {
        hypothesis_violated: !pair.s_is_semicircular(),
        reports,
    })
}

/// `κ_4(s, i[s,x], i[s,x], s)`; nonzero means `s` and `i[s,x]` are not free.
pub fn freeness_witness(pair: &DistributionPair) -> Result<Rational> {
    let s = Polynomial::letter(Letter::S);
    let c = commutator_polynomial(CommutatorKind::ISX);
    let k = cumulant_of_polynomials(&[s.clone(), c.clone(), c, s], &pair.s, &pair.x)?;
    if !k.is_real() {
        return Err(Error::InternalConsistency(format!(
            "κ_4(s, i[s,x], i[s,x], s) = {k}"
        )));
    }
    Ok(k.re)
}

/// Predicted value of [`freeness_witness`] for semicircular `s`: `κ_2(s)²·κ_2(x)`.
pub fn freeness_witness_expected(pair: &DistributionPair) -> Result<Rational> {
    let ks = pair.s.get(2)?;
    Ok(&ks * &ks * pair.x.get(2)?)
}

fn subsets_of_size(n: usize, k: usize) -> Vec<BTreeSet<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<BTreeSet<usize>>) {
        if cur.len() == k {
            out.push(cur.iter().copied().collect());
            return;
        }
        for j in start..=n {
            if n - j + 1 < k - cur.len() {
                break;
            }
            cur.push(j);
            rec(j + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, n, k, &mut Vec::new(), &mut out);
    out
}

fn all_subsets(set: &BTreeSet<usize>) -> Vec<BTreeSet<usize>> {
    let items: Vec<usize> = set.iter().copied().collect();
    (0u32..1 << items.len())
        .map(|mask| {
            items
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect()
        })
        .collect()
}

/// `Σ_{|B|=k} Σ_{D⊆B} (-1)^{|D|} κ_n(sx on B∖D, xs on D, s elsewhere)`, which
/// vanishes for `1 <= k < n` when `s` is semicircular.
pub fn cancellation_sum(n: usize, k: usize, pair: &DistributionPair) -> Result<GaussianRational> {
    cancellation_sum_with_cap(n, k, pair, CANCELLATION_MAX_ORDER)
}

pub fn cancellation_sum_with_cap(
    n: usize,
    k: usize,
    pair: &DistributionPair,
    cap: usize,
) -> Result<GaussianRational> {
    if n > cap {
        return Err(Error::SizeLimit {
            what: "cancellation sum order",
            requested: n,
            limit: cap,
        });
    }
    if k == 0 || k >= n {
        return Err(Error::Domain(format!(
            "need 1 <= k < n, got n = {n}, k = {k}"
        )));
    }
    let sx: Word = Word::new(vec![Letter::S, Letter::X]).expect("nonempty");
    let xs: Word = Word::new(vec![Letter::X, Letter::S]).expect("nonempty");
    let s = Word::letter(Letter::S);
    let mut total = Rational::zero();
    for b in subsets_of_size(n, k) {
        let rest: Vec<usize> = (1..=n).filter(|j| !b.contains(j)).collect();
        for d in all_subsets(&b) {
            let plain: Vec<usize> = b.difference(&d).copied().collect();
            let flipped: Vec<usize> = d.iter().copied().collect();
            let mut assignment = vec![(rest.clone(), vec![s.clone()])];
            if !plain.is_empty() {
                assignment.push((plain, vec![sx.clone()]));
            }
            if !flipped.is_empty() {
                assignment.push((flipped, vec![xs.clone()]));
            }
            let args = assign_by_blocks(&assignment)?;
            let value = cumulant_of_word_products(&args, &pair.s, &pair.x)?;
            if d.len() % 2 == 0 {
                total += value;
            } else {
                total -= value;
            }
        }
    }
    Ok(GaussianRational::real(total))
}

/// Closed form for `κ_n(x + i[x,s])` with `κ_2(s) = 1`:
/// `κ_n(x) + Σ_{σ ∈ Int≥2(n)} Σ_{π ∈ NC(|σ|)} |V_1| κ_{π(σ)}(x)`, where `V_1` is
/// the first block of `σ`.
pub fn prop41_closed_form(n: usize, dist_x: &CumulantSequence) -> Result<Rational> {
    closed_form_with(n, dist_x, PartitionKind::NonCrossing)
}

pub(crate) fn closed_form_with(
    n: usize,
    dist_x: &CumulantSequence,
    inner: PartitionKind,
) -> Result<Rational> {
    if n == 0 {
        return Err(Error::Domain("cumulant order must be at least 1".into()));
    }
    let mut total = dist_x.get(n)?;
    if n < 2 {
        return Ok(total);
    }
    for sigma in partitions::enumerate(n, PartitionKind::IntervalMin2)? {
        let first_len = Rational::from_integer((sigma.blocks()[0].len() as i64).into());
        for pi in partitions::enumerate(sigma.num_blocks(), inner)? {
            let rho = compose_interval(&pi, &sigma)?;
            let mut value = first_len.clone();
            for block in rho.blocks() {
                value *= dist_x.get(block.len())?;
                if value.is_zero() {
                    break;
                }
            }
            total += value;
        }
    }
    Ok(total)
}

/// `κ_n(x + i[x,s])` by brute-force expansion, `s` semicircular of variance `var_s`.
pub fn prop41_oracle(n: usize, dist_x: &CumulantSequence, var_s: &Rational) -> Result<Rational> {
    if n == 0 {
        return Err(Error::Domain("cumulant order must be at least 1".into()));
    }
    let pair = DistributionPair::new(CumulantSequence::semicircle(var_s.clone()), dist_x.clone());
    let p = x_plus_commutator();
    let k = cumulant_of_polynomials(&vec![p; n], &pair.s, &pair.x)?;
    if !k.is_real() {
        return Err(Error::InternalConsistency(format!(
            "κ_{n}(x + i[x,s]) = {k}"
        )));
    }
    Ok(k.re)
}
