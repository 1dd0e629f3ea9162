//! Free-cumulant calculus for two free variables `s` and `x`.
//!
//! Mixed free cumulants of free variables vanish, so a block of a non-crossing
//! partition contributes `κ_k(s)`, `κ_k(x)` or zero. Cumulants whose entries are
//! products of letters are evaluated with the products-as-entries formula: a
//! sum of `κ_π` over non-crossing `π` of the flattened letters whose join with
//! the interval partition grouping each entry is the full partition.
//!
//! [`cumulant_of_word_products`] never materializes `NC(L)`. It builds
//! partitions left to right with a stack of open blocks and abandons a branch
//! as soon as some block is certain to evaluate to zero: a mixed block, or a
//! closed block whose size has a vanishing cumulant. Surviving partitions are
//! tallied by their block shape and only then evaluated in exact arithmetic.

use std::collections::{BTreeMap, HashMap};
use std::sync::OnceLock;

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{self, Partition, PartitionKind};
use crate::poly::{Letter, Polynomial, Word};
use crate::rational::{self, GaussianRational, Rational};

/// Largest total letter count accepted by the pruned word-cumulant search.
pub const MAX_TOTAL_LETTERS: usize = 32;

/// `κ_1, κ_2, …` of one variable. With `zero_tail` every order past the stored
/// values is known to vanish; otherwise asking for it is a truncation error.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CumulantSequence {
    #[serde(with = "rational::vec_as_strings")]
    values: Vec<Rational>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    zero_tail: bool,
}

impl CumulantSequence {
    /// `values[k - 1]` is `κ_k`.
    pub fn new(values: Vec<Rational>) -> Self {
        Self {
            values,
            zero_tail: false,
        }
    }

    pub fn with_zero_tail(values: Vec<Rational>) -> Self {
        Self {
            values,
            zero_tail: true,
        }
    }

    /// All cumulants zero (the law `δ_0`).
    pub fn zero() -> Self {
        Self::with_zero_tail(Vec::new())
    }

    /// Semicircular law of the given variance: only `κ_2` is nonzero.
    pub fn semicircle(variance: Rational) -> Self {
        Self::with_zero_tail(vec![Rational::zero(), variance])
    }

    pub fn point_mass(at: Rational) -> Self {
        Self::with_zero_tail(vec![at])
    }

    /// Free Poisson law with rate `lambda`: `κ_n = lambda` for `n <= order`.
    pub fn free_poisson(lambda: Rational, order: usize) -> Self {
        Self::new(vec![lambda; order])
    }

    /// `κ_k` for `k >= 1`.
    pub fn get(&self, k: usize) -> Result<Rational> {
        self.get_ref(k)
            .map(|v| v.cloned().unwrap_or_else(Rational::zero))
    }

    fn get_ref(&self, k: usize) -> Result<Option<&Rational>> {
        if k == 0 {
            return Err(Error::Domain("cumulants are indexed from 1".into()));
        }
        match self.values.get(k - 1) {
            Some(v) => Ok(Some(v)),
            None if self.zero_tail => Ok(None),
            None => Err(Error::Truncation {
                what: "cumulant",
                order: k,
                available: self.values.len(),
            }),
        }
    }

    /// Stored values `κ_1..κ_N`.
    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn has_zero_tail(&self) -> bool {
        self.zero_tail
    }

    /// Highest order that can be queried, `None` when every order is known.
    pub fn max_order(&self) -> Option<usize> {
        if self.zero_tail {
            None
        } else {
            Some(self.values.len())
        }
    }

    /// `κ_1..κ_n` materialized as a finite sequence.
    pub fn truncated(&self, n: usize) -> Result<Self> {
        let values = (1..=n).map(|k| self.get(k)).collect::<Result<Vec<_>>>()?;
        Ok(Self::new(values))
    }

    /// Only `κ_2` can be nonzero, among every order that is known.
    pub fn is_semicircular(&self) -> bool {
        self.zero_tail
            && self
                .values
                .iter()
                .enumerate()
                .all(|(i, v)| i == 1 || v.is_zero())
    }

    pub fn scaled(&self, c: &Rational) -> Self {
        let mut power = Rational::one();
        let values = self
            .values
            .iter()
            .map(|v| {
                power *= c;
                v * &power
            })
            .collect();
        Self {
            values,
            zero_tail: self.zero_tail,
        }
    }
}

/// `m_0, m_1, …` with `m_0 = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MomentSequence {
    #[serde(with = "rational::vec_as_strings")]
    values: Vec<Rational>,
}

impl MomentSequence {
    /// `values[k]` is `m_k`; `values[0]` must be one.
    pub fn new(values: Vec<Rational>) -> Result<Self> {
        match values.first() {
            Some(m0) if m0.is_one() => Ok(Self { values }),
            _ => Err(Error::Domain(
                "moment sequences must start with m_0 = 1".into(),
            )),
        }
    }

    /// Builds `1, m_1, m_2, …` from the moments of positive order.
    pub fn from_positive_orders(tail: Vec<Rational>) -> Self {
        let mut values = Vec::with_capacity(tail.len() + 1);
        values.push(Rational::one());
        values.extend(tail);
        Self { values }
    }

    /// Moments of the atomic law `Σ weight · δ_atom`.
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
            what: "moment",
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
}

fn cumulant_for(
    letter: Letter,
    s: &CumulantSequence,
    x: &CumulantSequence,
    k: usize,
) -> Result<Rational> {
    match letter {
        Letter::S => s.get(k),
        Letter::X => x.get(k),
    }
}

/// Cumulant of a single block: zero when letters are mixed, otherwise the
/// cumulant of that letter's variable at the block size.
pub fn kappa_block(
    letters: &[Letter],
    s: &CumulantSequence,
    x: &CumulantSequence,
) -> Result<Rational> {
    let first = *letters
        .first()
        .ok_or_else(|| Error::Domain("a block must be nonempty".into()))?;
    if letters.iter().any(|&l| l != first) {
        return Ok(Rational::zero());
    }
    cumulant_for(first, s, x, letters.len())
}

/// `κ_π[letters]`: product of block cumulants, stopping at the first zero block.
pub fn kappa_pi(
    pi: &Partition,
    letters: &[Letter],
    s: &CumulantSequence,
    x: &CumulantSequence,
) -> Result<Rational> {
    if pi.n() != letters.len() {
        return Err(Error::Dimension {
            expected: letters.len(),
            found: pi.n(),
        });
    }
    if !pi.is_noncrossing() {
        return Err(Error::Kind("κ_π is only defined for non-crossing π".into()));
    }
    let mut product = Rational::one();
    let mut block_letters = Vec::new();
    for block in pi.blocks() {
        block_letters.clear();
        block_letters.extend(block.iter().map(|&e| letters[e - 1]));
        let value = kappa_block(&block_letters, s, x)?;
        if value.is_zero() {
            return Ok(value);
        }
        product *= value;
    }
    Ok(product)
}

/// The flattened letters of `words` and the interval partition grouping them.
pub fn flatten_words(words: &[Word]) -> (Vec<Letter>, Partition) {
    let mut letters = Vec::new();
    let mut blocks = Vec::with_capacity(words.len());
    for w in words {
        let start = letters.len() + 1;
        letters.extend_from_slice(w.letters());
        blocks.push((start..start + w.len()).collect());
    }
    let grouping = Partition::new(letters.len(), blocks).expect("words tile the letter positions");
    (letters, grouping)
}

/// `κ_m(w_1, …, w_m)` for words in `s, x`, by the products-as-entries formula
/// with pruned generation of the non-crossing partitions.
pub fn cumulant_of_word_products(
    words: &[Word],
    s: &CumulantSequence,
    x: &CumulantSequence,
) -> Result<Rational> {
    if words.is_empty() {
        return Err(Error::Domain(
            "a cumulant needs at least one argument".into(),
        ));
    }
    let total: usize = words.iter().map(Word::len).sum();
    if total > MAX_TOTAL_LETTERS {
        return Err(Error::SizeLimit {
            what: "word-product cumulant letters",
            requested: total,
            limit: MAX_TOTAL_LETTERS,
        });
    }
    if words.len() > 64 {
        return Err(Error::SizeLimit {
            what: "word-product cumulant arguments",
            requested: words.len(),
            limit: 64,
        });
    }
    PrunedSearch::new(words, s, x).run()
}

/// Reference route for [`cumulant_of_word_products`]: walks all of `NC(L)`,
/// tests the join condition for each and multiplies block cumulants directly.
pub fn cumulant_of_word_products_unpruned(
    words: &[Word],
    s: &CumulantSequence,
    x: &CumulantSequence,
) -> Result<Rational> {
    if words.is_empty() {
        return Err(Error::Domain(
            "a cumulant needs at least one argument".into(),
        ));
    }
    let (letters, grouping) = flatten_words(words);
    let mut sum = Rational::zero();
    for pi in noncrossing_cached(letters.len())?.iter() {
        if partitions::joins_to_full(pi, &grouping)? {
            sum += kappa_pi(pi, &letters, s, x)?;
        }
    }
    Ok(sum)
}

const NC_CACHE_MAX: usize = 12;

fn noncrossing_cached(n: usize) -> Result<std::borrow::Cow<'static, [Partition]>> {
    static CACHE: [OnceLock<Vec<Partition>>; NC_CACHE_MAX + 1] =
        [const { OnceLock::new() }; NC_CACHE_MAX + 1];
    if n > NC_CACHE_MAX {
        return Ok(partitions::enumerate(n, PartitionKind::NonCrossing)?.into());
    }
    if let Some(list) = CACHE[n].get() {
        return Ok(list.as_slice().into());
    }
    let list = partitions::enumerate(n, PartitionKind::NonCrossing)?;
    Ok(CACHE[n].get_or_init(|| list).as_slice().into())
}

#[derive(Clone, Copy, Debug)]
struct OpenBlock {
    letter: u8,
    size: u8,
    words: u64,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum BlockValue {
    Zero,
    NonZero,
    Unknown,
}

struct PrunedSearch {
    letters: Vec<u8>,
    word_bit: Vec<u64>,
    all_words: u64,
    /// `value[letter][k]` classifies `κ_k` of that letter's variable.
    value: [Vec<BlockValue>; 2],
    cumulants: [Vec<Rational>; 2],
    max_size: [usize; 2],
    open: Vec<OpenBlock>,
    closed: Vec<OpenBlock>,
    /// Closed-block tally by `letter * stride + size`.
    shape: Vec<u8>,
    stride: usize,
    tally: HashMap<Vec<u8>, u64>,
    missing: Option<(u8, usize)>,
}

impl PrunedSearch {
    fn new(words: &[Word], s: &CumulantSequence, x: &CumulantSequence) -> Self {
        let mut letters = Vec::new();
        let mut word_bit = Vec::new();
        for (i, w) in words.iter().enumerate() {
            for l in w.letters() {
                letters.push(l.index() as u8);
                word_bit.push(1u64 << i);
            }
        }
        let total = letters.len();
        let all_words = if words.len() == 64 {
            u64::MAX
        } else {
            (1u64 << words.len()) - 1
        };
        let mut value: [Vec<BlockValue>; 2] = [
            vec![BlockValue::Zero; total + 1],
            vec![BlockValue::Zero; total + 1],
        ];
        let mut cumulants: [Vec<Rational>; 2] = [
            vec![Rational::zero(); total + 1],
            vec![Rational::zero(); total + 1],
        ];
        let mut max_size = [0usize; 2];
        for (li, seq) in [s, x].into_iter().enumerate() {
            let count = letters.iter().filter(|&&l| l as usize == li).count();
            for k in 1..=count {
                match seq.get(k) {
                    Ok(v) if v.is_zero() => {}
                    Ok(v) => {
                        value[li][k] = BlockValue::NonZero;
                        cumulants[li][k] = v;
                        max_size[li] = k;
                    }
                    Err(_) => {
                        value[li][k] = BlockValue::Unknown;
                        max_size[li] = k;
                    }
                }
            }
        }
        let stride = total + 1;
        Self {
            letters,
            word_bit,
            all_words,
            value,
            cumulants,
            max_size,
            open: Vec::with_capacity(total),
            closed: Vec::with_capacity(total),
            shape: vec![0; 2 * stride],
            stride,
            tally: HashMap::new(),
            missing: None,
        }
    }

    fn run(mut self) -> Result<Rational> {
        self.visit(0);
        if let Some((letter, order)) = self.missing {
            return Err(Error::Truncation {
                what: if letter == 0 {
                    "cumulant of s"
                } else {
                    "cumulant of x"
                },
                order,
                available: order - 1,
            });
        }
        let mut sum = Rational::zero();
        for (shape, count) in &self.tally {
            let mut term = Rational::from_integer((*count).into());
            for (idx, &mult) in shape.iter().enumerate() {
                if mult > 0 {
                    let (letter, size) = (idx / self.stride, idx % self.stride);
                    term *= rational::pow(&self.cumulants[letter][size], mult as usize);
                }
            }
            sum += term;
        }
        Ok(sum)
    }

    /// Whether a block of this shape may be closed without forcing zero.
    fn closable(&mut self, block: &OpenBlock) -> bool {
        match self.value[block.letter as usize][block.size as usize] {
            BlockValue::NonZero => true,
            BlockValue::Zero => false,
            BlockValue::Unknown => {
                if self.missing.is_none() {
                    self.missing = Some((block.letter, block.size as usize));
                }
                false
            }
        }
    }

    fn close_top(&mut self, count: usize) {
        for _ in 0..count {
            let b = self.open.pop().expect("closing an open block");
            self.shape[b.letter as usize * self.stride + b.size as usize] += 1;
            self.closed.push(b);
        }
    }

    fn reopen(&mut self, count: usize) {
        for _ in 0..count {
            let b = self.closed.pop().expect("reopening a closed block");
            self.shape[b.letter as usize * self.stride + b.size as usize] -= 1;
            self.open.push(b);
        }
    }

    fn visit(&mut self, pos: usize) {
        if pos == self.letters.len() {
            self.leaf();
            return;
        }
        let letter = self.letters[pos];
        let bit = self.word_bit[pos];

        // Start a new block at `pos`.
        if self.max_size[letter as usize] >= 1 {
            self.open.push(OpenBlock {
                letter,
                size: 1,
                words: bit,
            });
            self.visit(pos + 1);
            self.open.pop();
        }

        // Extend an open block; everything opened above it closes for good.
        let depth = self.open.len();
        for d in (0..depth).rev() {
            if d + 1 < depth {
                let above = self.open[d + 1];
                if !self.closable(&above) {
                    break;
                }
            }
            let target = self.open[d];
            if target.letter != letter || target.size as usize + 1 > self.max_size[letter as usize]
            {
                continue;
            }
            let closing = depth - d - 1;
            self.close_top(closing);
            self.open[d].size += 1;
            self.open[d].words |= bit;
            self.visit(pos + 1);
            self.open[d] = target;
            self.reopen(closing);
        }
    }

    fn leaf(&mut self) {
        for i in 0..self.open.len() {
            let b = self.open[i];
            if !self.closable(&b) {
                return;
            }
        }
        if !self.connected() {
            return;
        }
        let mut shape = self.shape.clone();
        for b in &self.open {
            shape[b.letter as usize * self.stride + b.size as usize] += 1;
        }
        *self.tally.entry(shape).or_insert(0) += 1;
    }

    /// `π ∨ σ̂ = 1`: the blocks, viewed as hyperedges on the words, connect
    /// every word.
    fn connected(&self) -> bool {
        let blocks = || self.closed.iter().chain(self.open.iter());
        let mut reached = match blocks().next() {
            Some(b) => b.words,
            None => return false,
        };
        loop {
            let before = reached;
            for b in blocks() {
                if b.words & reached != 0 {
                    reached |= b.words;
                }
            }
            if reached == self.all_words {
                return true;
            }
            if reached == before {
                return false;
            }
        }
    }
}

/// Lexicographically least rotation of an argument list.
fn least_rotation(words: &[Word]) -> Vec<Word> {
    let n = words.len();
    (0..n)
        .map(|r| {
            let mut rotated = Vec::with_capacity(n);
            rotated.extend_from_slice(&words[r..]);
            rotated.extend_from_slice(&words[..r]);
            rotated
        })
        .min()
        .unwrap_or_default()
}

/// `κ_n(p_1, …, p_n)` by multilinear expansion over the terms of each slot.
///
/// For `n >= 2` constant terms drop out; for `n = 1` they are added to `κ_1`.
/// Argument lists that are cyclic rotations of each other have equal cumulants
/// (the joint law of `s` and `x` is tracial), so each rotation class is
/// evaluated once with its coefficients summed.
pub fn cumulant_of_polynomials(
    args: &[Polynomial],
    s: &CumulantSequence,
    x: &CumulantSequence,
) -> Result<GaussianRational> {
    if args.is_empty() {
        return Err(Error::Domain(
            "a cumulant needs at least one argument".into(),
        ));
    }
    let mut classes: BTreeMap<Vec<Word>, GaussianRational> = BTreeMap::new();
    let mut choice: Vec<Word> = Vec::with_capacity(args.len());
    collect_choices(args, &mut choice, GaussianRational::one(), &mut classes);

    let values = classes
        .into_par_iter()
        .map(|(words, coeff)| {
            let k = cumulant_of_word_products(&words, s, x)?;
            Ok(coeff.scale(&k))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut sum: GaussianRational = values.into_iter().sum();
    if args.len() == 1 {
        sum += args[0].constant_term();
    }
    Ok(sum)
}

fn collect_choices(
    args: &[Polynomial],
    choice: &mut Vec<Word>,
    coeff: GaussianRational,
    classes: &mut BTreeMap<Vec<Word>, GaussianRational>,
) {
    let slot = choice.len();
    if slot == args.len() {
        let key = least_rotation(choice);
        let entry = classes.entry(key).or_default();
        *entry += coeff;
        return;
    }
    for (word, c) in args[slot].terms() {
        choice.push(word.clone());
        collect_choices(args, choice, &coeff * c, classes);
        choice.pop();
    }
}

/// `[z^r] M(z)^j` for `j, r <= order`, given `m_0..m_order` with `m_0 = 1`.
/// Row `j = 0` is the constant series `1`.
fn compositional_table(moments: &[Rational], order: usize) -> Vec<Vec<Rational>> {
    let mut table = vec![vec![Rational::zero(); order + 1]; order + 1];
    table[0][0] = Rational::one();
    for j in 1..=order {
        for r in 0..=order {
            let mut acc = Rational::zero();
            for i in 0..=r {
                if i < moments.len() && !table[j - 1][r - i].is_zero() {
                    acc += &moments[i] * &table[j - 1][r - i];
                }
            }
            table[j][r] = acc;
        }
    }
    table
}

/// Moments from free cumulants: `m_n = Σ_j κ_j [z^{n-j}] M(z)^j`, the block
/// containing `1` having size `j`.
pub fn moments_from_cumulants(seq: &CumulantSequence, order: usize) -> Result<MomentSequence> {
    let kappas = (1..=order)
        .map(|k| seq.get(k))
        .collect::<Result<Vec<_>>>()?;
    let mut moments = vec![Rational::one()];
    for n in 1..=order {
        let table = compositional_table(&moments, n);
        let mut m = Rational::zero();
        for j in 1..=n {
            if !kappas[j - 1].is_zero() {
                m += &kappas[j - 1] * &table[j][n - j];
            }
        }
        moments.push(m);
    }
    MomentSequence::new(moments)
}

/// Inverse of [`moments_from_cumulants`].
pub fn cumulants_from_moments(mseq: &MomentSequence, order: usize) -> Result<CumulantSequence> {
    if order > mseq.max_order() {
        return Err(Error::Truncation {
            what: "moment",
            order,
            available: mseq.max_order(),
        });
    }
    let moments = &mseq.values()[..=order];
    let table = compositional_table(moments, order);
    let mut kappas: Vec<Rational> = Vec::with_capacity(order);
    for n in 1..=order {
        let mut k = moments[n].clone();
        for j in 1..n {
            k -= &kappas[j - 1] * &table[j][n - j];
        }
        kappas.push(k);
    }
    Ok(CumulantSequence::new(kappas))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn words(list: &[&str]) -> Vec<Word> {
        list.iter().map(|s| w(s)).collect()
    }

    fn std_s() -> CumulantSequence {
        CumulantSequence::semicircle(int(1))
    }

    #[test]
    fn kappa_block_examples() {
        let s = std_s();
        let x = CumulantSequence::free_poisson(int(1), 6);
        assert_eq!(
            kappa_block(&[Letter::S, Letter::S], &s, &x).unwrap(),
            int(1)
        );
        assert_eq!(
            kappa_block(&[Letter::S, Letter::X], &s, &x).unwrap(),
            int(0)
        );
        assert_eq!(kappa_block(&[Letter::S; 3], &s, &x).unwrap(), int(0));
        assert!(matches!(
            kappa_block(&[Letter::X; 7], &s, &x),
            Err(Error::Truncation { order: 7, .. })
        ));
    }

    #[test]
    fn kappa_pi_examples() {
        let s = std_s();
        let x = CumulantSequence::new(vec![int(0), rat(5, 2)]);
        let pi = Partition::from_blocks(vec![vec![1, 4], vec![2, 3]]).unwrap();
        let letters = [Letter::S, Letter::X, Letter::X, Letter::S];
        assert_eq!(kappa_pi(&pi, &letters, &s, &x).unwrap(), rat(5, 2));

        let mixed = Partition::from_blocks(vec![vec![1, 2], vec![3, 4]]).unwrap();
        assert_eq!(kappa_pi(&mixed, &letters, &s, &x).unwrap(), int(0));

        let crossing = Partition::from_blocks(vec![vec![1, 3], vec![2, 4]]).unwrap();
        assert!(matches!(
            kappa_pi(&crossing, &letters, &s, &x),
            Err(Error::Kind(_))
        ));
    }

    #[test]
    fn word_product_examples() {
        let s = std_s();
        let x = CumulantSequence::new(vec![rat(1, 3), int(2), int(5), int(7)]);
        let v = cumulant_of_word_products(&words(&["s", "sx", "xs", "s"]), &s, &x).unwrap();
        assert_eq!(v, int(2));
        let v = cumulant_of_word_products(&words(&["s", "sx", "sx", "s"]), &s, &x).unwrap();
        assert_eq!(v, int(0));
        // κ₂(s)·(κ₂(x) + κ₁(x)²)
        let v = cumulant_of_word_products(&words(&["sx", "xs"]), &s, &x).unwrap();
        assert_eq!(v, int(2) + rat(1, 9));
        let v = cumulant_of_word_products(&words(&["s"]), &s, &x).unwrap();
        assert_eq!(v, int(0));
    }

    #[test]
    fn word_product_limits() {
        let s = std_s();
        let x = CumulantSequence::free_poisson(int(1), 40);
        let long = vec![w(&"s".repeat(33))];
        assert!(matches!(
            cumulant_of_word_products(&long, &s, &x),
            Err(Error::SizeLimit { .. })
        ));
        assert!(cumulant_of_word_products(&[], &s, &x).is_err());
        let short_x = CumulantSequence::new(vec![int(0), int(1)]);
        assert!(matches!(
            cumulant_of_word_products(&words(&["xxx"]), &s, &short_x),
            Err(Error::Truncation { .. })
        ));
    }

    #[test]
    fn polynomial_examples() {
        let s = std_s();
        let x = CumulantSequence::new(vec![rat(2, 3), int(3), int(-1), int(4)]);
        let c: Polynomial = "i[s,x]".parse().unwrap();
        let k2 = cumulant_of_polynomials(&[c.clone(), c.clone()], &s, &x).unwrap();
        assert_eq!(k2, GaussianRational::real(int(6)));
        let k1 = cumulant_of_polynomials(std::slice::from_ref(&c), &s, &x).unwrap();
        assert!(k1.is_zero());
        let sp = Polynomial::letter(Letter::S);
        let k4 = cumulant_of_polynomials(&[sp.clone(), c.clone(), c, sp], &s, &x).unwrap();
        assert_eq!(k4, GaussianRational::real(int(3)));
    }

    #[test]
    fn constants_only_shift_the_mean() {
        let s = std_s();
        let x = CumulantSequence::free_poisson(int(1), 4);
        let p: Polynomial = "5 + x".parse().unwrap();
        let k1 = cumulant_of_polynomials(std::slice::from_ref(&p), &s, &x).unwrap();
        assert_eq!(k1, GaussianRational::real(int(6)));
        let k2 = cumulant_of_polynomials(&[p.clone(), p], &s, &x).unwrap();
        assert_eq!(k2, GaussianRational::real(int(1)));
    }

    #[test]
    fn moment_cumulant_examples() {
        let m = moments_from_cumulants(&std_s(), 4).unwrap();
        assert_eq!(m.get(4).unwrap(), &int(2));
        let m = moments_from_cumulants(&CumulantSequence::free_poisson(int(1), 3), 3).unwrap();
        assert_eq!(m.get(3).unwrap(), &int(5));
        let c = rat(-3, 2);
        let m = moments_from_cumulants(&CumulantSequence::point_mass(c.clone()), 6).unwrap();
        assert_eq!(m.get(6).unwrap(), &rational::pow(&c, 6));

        let k = cumulants_from_moments(
            &MomentSequence::from_positive_orders(vec![int(1), int(2), int(5), int(14)]),
            4,
        )
        .unwrap();
        assert_eq!(k.values(), &[int(1), int(1), int(1), int(1)]);
        let k = cumulants_from_moments(
            &MomentSequence::from_positive_orders(vec![int(0), int(1), int(0), int(1)]),
            4,
        )
        .unwrap();
        assert_eq!(k.values(), &[int(0), int(1), int(0), int(-1)]);
        let k =
            cumulants_from_moments(&MomentSequence::of_atoms(&[(int(1), int(1))], 5), 5).unwrap();
        assert_eq!(k.values(), &[int(1), int(0), int(0), int(0), int(0)]);
    }

    #[test]
    fn truncation_errors() {
        let short = CumulantSequence::new(vec![int(1), int(1)]);
        assert!(moments_from_cumulants(&short, 3).is_err());
        let m = MomentSequence::from_positive_orders(vec![int(1)]);
        assert!(cumulants_from_moments(&m, 2).is_err());
        assert!(MomentSequence::new(vec![int(2)]).is_err());
    }
}
