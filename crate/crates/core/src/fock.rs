//! Operator model on tensors of powers of a random variable `Y ~ ρ`.
//!
//! A basis tensor `Y^{a_1} ⊗ … ⊗ Y^{a_n}` is stored as its exponent list; only
//! moments `m_k = E(Y^k)` ever enter, both in the inner product
//! `⟨a, b⟩ = δ_{n,m} Π_j m_{a_j + b_j}` and in the contractions performed by the
//! operators. The vacuum is the length-one tensor `1 = Y^0`.
//!
//! Starting from the vacuum, `n` operator applications never produce tensors
//! longer than `n + 1` or exponents above `n`, so every computation here is
//! exact with no truncation parameter.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fid;
use crate::partitions::{self, PartitionKind};
use crate::rational::{self, Rational};

/// Moments `m_0 = 1, m_1, …, m_N` of the driving measure `ρ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RhoMoments {
    #[serde(with = "rational::vec_as_strings")]
    values: Vec<Rational>,
}

impl RhoMoments {
    pub fn new(values: Vec<Rational>) -> Result<Self> {
        match values.first() {
            Some(m0) if m0.is_one() => Ok(Self { values }),
            _ => Err(Error::Domain(
                "ρ must be a probability measure (m_0 = 1)".into(),
            )),
        }
    }

    /// `1, m_1, m_2, …` from the moments of positive order.
    pub fn from_positive_orders(tail: Vec<Rational>) -> Self {
        let mut values = vec![Rational::one()];
        values.extend(tail);
        Self { values }
    }

    /// Moments up to `order` of `Σ weight · δ_atom`. Weights are expected to sum to one.
    pub fn of_atoms(atoms: &[(Rational, Rational)], order: usize) -> Self {
        let values = (0..=order)
            .map(|k| {
                atoms
                    .iter()
                    .map(|(w, a)| w * rational::pow(a, k))
                    .fold(Rational::zero(), |acc, v| acc + v)
            })
            .collect();
        Self { values }
    }

    pub fn get(&self, k: usize) -> Result<&Rational> {
        self.values.get(k).ok_or(Error::Truncation {
            what: "moment of ρ",
            order: k,
            available: self.max_order(),
        })
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn max_order(&self) -> usize {
        self.values.len() - 1
    }

    /// The largest Hankel truncation `[m_{i+j}]` that fits is positive
    /// semidefinite, as it must be for the moments of a measure.
    pub fn is_genuine_measure(&self) -> Result<bool> {
        let size = self.max_order() / 2 + 1;
        let matrix: Vec<Vec<Rational>> = (0..size)
            .map(|i| (0..size).map(|j| self.values[i + j].clone()).collect())
            .collect();
        Ok(fid::psd_check(&matrix)?.psd)
    }
}

/// `Y^{e_1} ⊗ … ⊗ Y^{e_n}`, `n >= 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct FockBasisTensor(Vec<u32>);

impl FockBasisTensor {
    pub fn new(exponents: Vec<u32>) -> Result<Self> {
        if exponents.is_empty() {
            return Err(Error::Domain("tensors have at least one slot".into()));
        }
        Ok(Self(exponents))
    }

    pub fn vacuum() -> Self {
        Self(vec![0])
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    fn with_last_raised(&self) -> Self {
        let mut e = self.0.clone();
        *e.last_mut().expect("nonempty") += 1;
        Self(e)
    }

    fn appended(&self, exponent: u32) -> Self {
        let mut e = self.0.clone();
        e.push(exponent);
        Self(e)
    }

    /// Drops the last slot, returning the shortened tensor and the dropped exponent.
    fn split_last(&self) -> (Self, u32) {
        let (&last, rest) = self.0.split_last().expect("nonempty");
        (Self(rest.to_vec()), last)
    }
}

impl fmt::Display for FockBasisTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, "⊗")?;
            }
            match e {
                0 => write!(f, "1")?,
                1 => write!(f, "Y")?,
                k => write!(f, "Y^{k}")?,
            }
        }
        Ok(())
    }
}

/// Finite linear combination of basis tensors.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct FockVector {
    terms: BTreeMap<FockBasisTensor, Rational>,
}

#[derive(Serialize)]
struct FockTermView<'a> {
    exponents: &'a [u32],
    #[serde(serialize_with = "as_string_ref::serialize")]
    coeff: &'a Rational,
}

impl Serialize for FockVector {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.terms.iter().map(|(t, c)| FockTermView {
            exponents: t.exponents(),
            coeff: c,
        }))
    }
}

mod as_string_ref {
    use super::Rational;
    use serde::Serializer;

    pub fn serialize<S: Serializer>(value: &&Rational, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&value.to_string())
    }
}

impl FockVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn vacuum() -> Self {
        Self::basis(FockBasisTensor::vacuum())
    }

    pub fn basis(t: FockBasisTensor) -> Self {
        let mut v = Self::zero();
        v.add_term(t, Rational::one());
        v
    }

    pub fn add_term(&mut self, t: FockBasisTensor, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(t).or_insert_with(Rational::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&FockBasisTensor, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (t, c) in &other.terms {
            out.add_term(t.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        let mut out = Self::zero();
        for (t, c) in &self.terms {
            out.add_term(t.clone(), c * factor);
        }
        out
    }
}

/// The operators acting on the tensor space, including the split parts of
/// the two mixed hat operators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum OperatorName {
    Xhat,
    Xshat,
    Sxhat,
    Xtilde,
    Xstilde,
    Sxtilde,
    XshatU,
    XshatD,
    SxhatU,
    SxhatD,
}

impl OperatorName {
    pub const ALL: [OperatorName; 10] = [
        OperatorName::Xhat,
        OperatorName::Xshat,
        OperatorName::Sxhat,
        OperatorName::Xtilde,
        OperatorName::Xstilde,
        OperatorName::Sxtilde,
        OperatorName::XshatU,
        OperatorName::XshatD,
        OperatorName::SxhatU,
        OperatorName::SxhatD,
    ];

    /// The adjoint with respect to the tensor inner product.
    pub fn adjoint(self) -> Self {
        use OperatorName::*;
        match self {
            Xhat => Xhat,
            Xtilde => Xtilde,
            Xshat => Sxhat,
            Sxhat => Xshat,
            Xstilde => Sxtilde,
            Sxtilde => Xstilde,
            XshatU => SxhatD,
            SxhatD => XshatU,
            XshatD => SxhatU,
            SxhatU => XshatD,
        }
    }

    pub fn as_str(self) -> &'static str {
        use OperatorName::*;
        match self {
            Xhat => "XHAT",
            Xshat => "XSHAT",
            Sxhat => "SXHAT",
            Xtilde => "XTILDE",
            Xstilde => "XSTILDE",
            Sxtilde => "SXTILDE",
            XshatU => "XSHAT_U",
            XshatD => "XSHAT_D",
            SxhatU => "SXHAT_U",
            SxhatD => "SXHAT_D",
        }
    }
}

impl fmt::Display for OperatorName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for OperatorName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let upper = s.to_ascii_uppercase().replace('-', "_");
        Self::ALL
            .into_iter()
            .find(|op| op.as_str() == upper)
            .ok_or_else(|| Error::Domain(format!("unknown operator {s:?}")))
    }
}

fn moment(rho: &RhoMoments, k: u32) -> Result<Rational> {
    rho.get(k as usize).cloned()
}

/// Multiplies the last slot by `Y`.
fn raise_last(t: &FockBasisTensor, out: &mut FockVector, c: &Rational) {
    out.add_term(t.with_last_raised(), c.clone());
}

/// `… ⊗ Y_n ⊗ Y`
fn append_y(t: &FockBasisTensor, out: &mut FockVector, c: &Rational) {
    out.add_term(t.appended(1), c.clone());
}

/// `… ⊗ Y_{n-1}Y · E(Y_n)`
fn contract_into_previous(
    t: &FockBasisTensor,
    rho: &RhoMoments,
    out: &mut FockVector,
    c: &Rational,
) -> Result<()> {
    let (rest, last) = t.split_last();
    let m = moment(rho, last)?;
    if !m.is_zero() {
        out.add_term(rest.with_last_raised(), c * m);
    }
    Ok(())
}

/// `… ⊗ Y_n Y ⊗ 1`
fn raise_and_open(t: &FockBasisTensor, out: &mut FockVector, c: &Rational) {
    out.add_term(t.with_last_raised().appended(0), c.clone());
}

/// `Y_1 ⊗ … ⊗ Y_{n-1} · E(Y Y_n)`
fn contract_with_y(
    t: &FockBasisTensor,
    rho: &RhoMoments,
    out: &mut FockVector,
    c: &Rational,
) -> Result<()> {
    let (rest, last) = t.split_last();
    let m = moment(rho, last + 1)?;
    if !m.is_zero() {
        out.add_term(rest, c * m);
    }
    Ok(())
}

fn apply_basis(
    op: OperatorName,
    t: &FockBasisTensor,
    c: &Rational,
    rho: &RhoMoments,
    out: &mut FockVector,
) -> Result<()> {
    use OperatorName::*;
    let n = t.len();
    let odd = n % 2 == 1;
    match op {
        Xhat if odd => raise_last(t, out, c),
        Xtilde if !odd => raise_last(t, out, c),
        Xshat if !odd => {
            append_y(t, out, c);
            contract_into_previous(t, rho, out, c)?;
        }
        XshatU if !odd => append_y(t, out, c),
        XshatD if !odd => contract_into_previous(t, rho, out, c)?,
        Sxhat if odd => {
            raise_and_open(t, out, c);
            if n > 1 {
                contract_with_y(t, rho, out, c)?;
            }
        }
        SxhatU if odd => raise_and_open(t, out, c),
        SxhatD if odd && n > 1 => contract_with_y(t, rho, out, c)?,
        Xstilde if odd => {
            append_y(t, out, c);
            if n > 1 {
                contract_into_previous(t, rho, out, c)?;
            }
        }
        Sxtilde if !odd => {
            raise_and_open(t, out, c);
            contract_with_y(t, rho, out, c)?;
        }
        _ => {}
    }
    Ok(())
}

/// Applies `op` linearly to `v`.
pub fn apply(op: OperatorName, v: &FockVector, rho: &RhoMoments) -> Result<FockVector> {
    let mut out = FockVector::zero();
    for (t, c) in v.terms() {
        apply_basis(op, t, c, rho, &mut out)?;
    }
    Ok(out)
}

/// Applies the sum of several operators.
pub fn apply_sum(ops: &[OperatorName], v: &FockVector, rho: &RhoMoments) -> Result<FockVector> {
    let mut out = FockVector::zero();
    for (t, c) in v.terms() {
        for &op in ops {
            apply_basis(op, t, c, rho, &mut out)?;
        }
    }
    Ok(out)
}

fn basis_inner(a: &FockBasisTensor, b: &FockBasisTensor, rho: &RhoMoments) -> Result<Rational> {
    if a.len() != b.len() {
        return Ok(Rational::zero());
    }
    let mut product = Rational::one();
    for (x, y) in a.exponents().iter().zip(b.exponents()) {
        product *= moment(rho, x + y)?;
        if product.is_zero() {
            break;
        }
    }
    Ok(product)
}

/// Bilinear extension of `⟨a, b⟩ = δ_{n,m} Π_j m_{a_j + b_j}`.
pub fn inner_product(u: &FockVector, v: &FockVector, rho: &RhoMoments) -> Result<Rational> {
    let mut sum = Rational::zero();
    for (a, ca) in u.terms() {
        for (b, cb) in v.terms() {
            if a.len() == b.len() {
                let ip = basis_inner(a, b, rho)?;
                if !ip.is_zero() {
                    sum += ca * cb * ip;
                }
            }
        }
    }
    Ok(sum)
}

pub const HAT_SUM: [OperatorName; 3] =
    [OperatorName::Xhat, OperatorName::Xshat, OperatorName::Sxhat];
pub const TILDE_SUM: [OperatorName; 3] = [
    OperatorName::Xtilde,
    OperatorName::Xstilde,
    OperatorName::Sxtilde,
];

/// `⟨T^n 1, 1⟩` for `T` the sum of `ops`.
pub fn vacuum_moment(ops: &[OperatorName], n: usize, rho: &RhoMoments) -> Result<Rational> {
    let mut v = FockVector::vacuum();
    for _ in 0..n {
        v = apply_sum(ops, &v, rho)?;
    }
    inner_product(&v, &FockVector::vacuum(), rho)
}

/// The hat and tilde vacuum moments at order `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModelParts {
    #[serde(with = "rational::as_string")]
    pub hat: Rational,
    #[serde(with = "rational::as_string")]
    pub tilde: Rational,
}

impl ModelParts {
    pub fn total(&self) -> Rational {
        &self.hat + &self.tilde
    }
}

pub fn model_cumulant_parts(n: usize, rho: &RhoMoments) -> Result<ModelParts> {
    if n == 0 {
        return Err(Error::Domain("order must be at least 1".into()));
    }
    Ok(ModelParts {
        hat: vacuum_moment(&HAT_SUM, n, rho)?,
        tilde: vacuum_moment(&TILDE_SUM, n, rho)?,
    })
}

/// `⟨(x̂ + x̂s + ŝx)^n 1, 1⟩ + ⟨(x̃ + x̃s + s̃x)^n 1, 1⟩`, which equals
/// `κ_n(x + i[x,s])` for `κ_k(x) = m_k(ρ)` and `κ_2(s) = 1`.
pub fn model_cumulant(n: usize, rho: &RhoMoments) -> Result<Rational> {
    Ok(model_cumulant_parts(n, rho)?.total())
}

/// Compositions of `n` into `parts` parts with per-position lower bounds.
fn compositions(n: usize, mins: &[usize], f: &mut dyn FnMut(&[usize]) -> Result<()>) -> Result<()> {
    fn rec(
        remaining: usize,
        mins: &[usize],
        cur: &mut Vec<usize>,
        f: &mut dyn FnMut(&[usize]) -> Result<()>,
    ) -> Result<()> {
        let idx = cur.len();
        if idx == mins.len() {
            return if remaining == 0 { f(cur) } else { Ok(()) };
        }
        let rest_min: usize = mins[idx + 1..].iter().sum();
        if remaining < mins[idx] + rest_min {
            return Ok(());
        }
        for part in mins[idx]..=remaining - rest_min {
            cur.push(part);
            rec(remaining - part, mins, cur, f)?;
            cur.pop();
        }
        Ok(())
    }
    rec(n, mins, &mut Vec::with_capacity(mins.len()), f)
}

/// `φ_π(Y^{i_1}, …, Y^{i_k}) = Π_{V∈π} m_{Σ_{j∈V} i_j}`.
fn phi_pi(pi: &partitions::Partition, parts: &[usize], rho: &RhoMoments) -> Result<Rational> {
    let mut product = Rational::one();
    for block in pi.blocks() {
        let order: usize = block.iter().map(|&j| parts[j - 1]).sum();
        product *= rho.get(order)?;
        if product.is_zero() {
            break;
        }
    }
    Ok(product)
}

fn partition_sum(parts: &[usize], kind: PartitionKind, rho: &RhoMoments) -> Result<Rational> {
    let mut sum = Rational::zero();
    for pi in partitions::enumerate(parts.len(), kind)? {
        sum += phi_pi(&pi, parts, rho)?;
    }
    Ok(sum)
}

/// Hat part of the composition formula: compositions `i_0 + … + i_k = n` with
/// `i_0, i_k >= 1` and inner parts `>= 2`, summed over irreducible `π`.
pub fn composition_formula_hat(n: usize, rho: &RhoMoments) -> Result<Rational> {
    let mut total = Rational::zero();
    for k in 0..=n / 2 {
        let mins: Vec<usize> = (0..=k)
            .map(|j| if j == 0 || j == k { 1 } else { 2 })
            .collect();
        compositions(n, &mins, &mut |parts| {
            total += partition_sum(parts, PartitionKind::NonCrossingIrreducible, rho)?;
            Ok(())
        })?;
    }
    Ok(total)
}

/// Tilde part: compositions `i_1 + … + i_k = n`, all parts `>= 2`, summed over
/// `π` of the given kind.
pub(crate) fn composition_formula_tilde_with(
    n: usize,
    rho: &RhoMoments,
    kind: PartitionKind,
) -> Result<Rational> {
    let mut total = Rational::zero();
    for k in 1..=n / 2 {
        compositions(n, &vec![2; k], &mut |parts| {
            total += partition_sum(parts, kind, rho)?;
            Ok(())
        })?;
    }
    Ok(total)
}

pub fn composition_formula_tilde(n: usize, rho: &RhoMoments) -> Result<Rational> {
    composition_formula_tilde_with(n, rho, PartitionKind::NonCrossing)
}

/// Hat plus tilde composition sums; must agree with [`model_cumulant`].
pub fn composition_formula_cumulant(n: usize, rho: &RhoMoments) -> Result<Rational> {
    if n == 0 {
        return Err(Error::Domain("order must be at least 1".into()));
    }
    Ok(composition_formula_hat(n, rho)? + composition_formula_tilde(n, rho)?)
}

fn random_vector(rng: &mut ChaCha8Rng) -> FockVector {
    let mut v = FockVector::zero();
    let terms = rng.gen_range(1..=3);
    for _ in 0..terms {
        let len = rng.gen_range(1..=5);
        let exps: Vec<u32> = (0..len).map(|_| rng.gen_range(0..=3)).collect();
        let num: i64 = rng.gen_range(-3..=3);
        let den: i64 = rng.gen_range(1..=3);
        v.add_term(
            FockBasisTensor::new(exps).expect("nonempty"),
            Rational::new(BigInt::from(num), BigInt::from(den)),
        );
    }
    v
}

/// Checks `⟨A u, v⟩ = ⟨u, B v⟩` for each `(A, B)` on `samples` seeded random
/// pairs of small vectors (lengths up to 5, exponents up to 3). `rho` needs
/// moments up to order 8.
pub fn verify_adjointness(
    pairs: &[(OperatorName, OperatorName)],
    samples: usize,
    rho: &RhoMoments,
    seed: u64,
) -> Result<bool> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let u = random_vector(&mut rng);
        let v = random_vector(&mut rng);
        for &(a, b) in pairs {
            let left = inner_product(&apply(a, &u, rho)?, &v, rho)?;
            let right = inner_product(&u, &apply(b, &v, rho)?, rho)?;
            if left != right {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn delta(at: i64, order: usize) -> RhoMoments {
        RhoMoments::of_atoms(&[(int(1), int(at))], order)
    }

    fn t(e: &[u32]) -> FockBasisTensor {
        FockBasisTensor::new(e.to_vec()).unwrap()
    }

    #[test]
    fn inner_product_examples() {
        let rho = RhoMoments::from_positive_orders(vec![rat(1, 2), int(3), int(7)]);
        let y = FockVector::basis(t(&[1]));
        let one = FockVector::vacuum();
        assert_eq!(inner_product(&y, &one, &rho).unwrap(), rat(1, 2));
        assert_eq!(
            inner_product(&FockVector::basis(t(&[1, 0])), &one, &rho).unwrap(),
            int(0)
        );
        assert_eq!(
            inner_product(&FockVector::basis(t(&[2])), &y, &rho).unwrap(),
            int(7)
        );
        assert!(inner_product(
            &FockVector::basis(t(&[2])),
            &FockVector::basis(t(&[2])),
            &rho
        )
        .is_err());
    }

    #[test]
    fn operator_examples() {
        let rho = delta(1, 8);
        let out = apply(OperatorName::Xhat, &FockVector::vacuum(), &rho).unwrap();
        assert_eq!(out, FockVector::basis(t(&[1])));

        let even = FockVector::basis(t(&[2, 1]));
        assert!(apply(OperatorName::Sxhat, &even, &rho).unwrap().is_empty());

        let out = apply(OperatorName::Xshat, &FockVector::basis(t(&[1, 0])), &rho).unwrap();
        let expected = FockVector::basis(t(&[1, 0, 1])).add(&FockVector::basis(t(&[2])));
        assert_eq!(out, expected);
    }

    #[test]
    fn special_length_one_cases() {
        let rho = delta(2, 8);
        let out = apply(OperatorName::Sxhat, &FockVector::basis(t(&[3])), &rho).unwrap();
        assert_eq!(out, FockVector::basis(t(&[4, 0])));
        let out = apply(OperatorName::Xstilde, &FockVector::basis(t(&[3])), &rho).unwrap();
        assert_eq!(out, FockVector::basis(t(&[3, 1])));
        assert!(
            apply(OperatorName::SxhatD, &FockVector::basis(t(&[3])), &rho)
                .unwrap()
                .is_empty()
        );
    }

    #[test]
    fn model_values_small_orders() {
        let rho = delta(1, 8);
        let p1 = model_cumulant_parts(1, &rho).unwrap();
        assert_eq!((p1.hat, p1.tilde), (int(1), int(0)));
        let p2 = model_cumulant_parts(2, &rho).unwrap();
        assert_eq!((p2.hat, p2.tilde), (int(2), int(1)));
        let sym = RhoMoments::of_atoms(&[(rat(1, 2), int(-1)), (rat(1, 2), int(1))], 8);
        assert_eq!(model_cumulant(2, &sym).unwrap(), int(3));
    }

    #[test]
    fn composition_values_small_orders() {
        let rho = delta(1, 8);
        assert_eq!(composition_formula_cumulant(1, &rho).unwrap(), int(1));
        assert_eq!(composition_formula_cumulant(2, &rho).unwrap(), int(3));
        assert_eq!(composition_formula_cumulant(3, &rho).unwrap(), int(4));
    }

    #[test]
    fn adjoint_pairs_hold() {
        let rho = delta(1, 8);
        let pairs: Vec<_> = OperatorName::ALL
            .iter()
            .map(|&op| (op, op.adjoint()))
            .collect();
        assert!(verify_adjointness(&pairs, 50, &rho, 7).unwrap());
    }

    #[test]
    fn wrong_adjoint_pair_is_detected() {
        let rho = RhoMoments::of_atoms(&[(rat(1, 2), int(0)), (rat(1, 2), int(3))], 8);
        assert!(
            !verify_adjointness(&[(OperatorName::Xshat, OperatorName::Xshat)], 50, &rho, 3)
                .unwrap()
        );
    }

    #[test]
    fn operator_names_round_trip() {
        for op in OperatorName::ALL {
            assert_eq!(op.as_str().parse::<OperatorName>().unwrap(), op);
            assert_eq!(op.adjoint().adjoint(), op);
        }
        assert!("YHAT".parse::<OperatorName>().is_err());
    }

    #[test]
    fn genuine_measure_check() {
        assert!(delta(2, 8).is_genuine_measure().unwrap());
        let bad = RhoMoments::from_positive_orders(vec![int(0), int(-1)]);
        assert!(!bad.is_genuine_measure().unwrap());
        assert!(RhoMoments::new(vec![int(2)]).is_err());
    }

    #[test]
    fn tensors_are_nonempty() {
        assert!(FockBasisTensor::new(vec![]).is_err());
    }
}
