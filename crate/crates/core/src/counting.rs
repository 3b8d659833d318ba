//! Closed-form and combinatorial class counts for `A_n`, `GL_n(q)`,
//! `SL_2(q)` and `SL_n(q)`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::field::prime_power;
use crate::group::FqField;

/// Largest `n` accepted by the partition-based counts.
pub const MAX_PARTITION_N: usize = 64;
/// Largest `n` accepted by the `GL_n(q)` counts.
pub const MAX_GL_DEGREE: usize = 8;
/// Largest number of candidate polynomials enumerated by
/// [`self_reciprocal_count`].
pub const MAX_RECIPROCAL_CANDIDATES: u64 = 50_000_000;

/// An integer partition stored by multiplicities: `multiplicity(i)` parts
/// of size `i`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Partition {
    multiplicities: Vec<usize>,
}

impl Partition {
    /// Builds a partition from its parts in any order. Zero parts are ignored.
    pub fn from_parts(parts: &[usize]) -> Self {
        let largest = parts.iter().copied().max().unwrap_or(0);
        let mut multiplicities = vec![0; largest];
        for &p in parts.iter().filter(|&&p| p > 0) {
            multiplicities[p - 1] += 1;
        }
        Partition { multiplicities }
    }

    /// Number of parts equal to `i`.
    pub fn multiplicity(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.multiplicities.get(i - 1).copied().unwrap_or(0)
    }

    /// `(i, n_i)` for every part size `i` with `n_i > 0`.
    pub fn multiplicities(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.multiplicities
            .iter()
            .enumerate()
            .filter(|&(_, &m)| m > 0)
            .map(|(i, &m)| (i + 1, m))
    }

    /// The integer being partitioned, `Σ i n_i`.
    pub fn size(&self) -> usize {
        self.multiplicities().map(|(i, m)| i * m).sum()
    }

    /// Number of parts, `Σ n_i`.
    pub fn len(&self) -> usize {
        self.multiplicities.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Parts in non-increasing order.
    pub fn parts(&self) -> Vec<usize> {
        let mut parts = Vec::with_capacity(self.len());
        for (i, m) in self.multiplicities().collect::<Vec<_>>().into_iter().rev() {
            parts.extend(std::iter::repeat_n(i, m));
        }
        parts
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Exponential notation, e.g. `1^4 3`.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, m) in self.multiplicities() {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            if m == 1 {
                write!(f, "{i}")?;
            } else {
                write!(f, "{i}^{m}")?;
            }
        }
        if first {
            write!(f, "()")?;
        }
        Ok(())
    }
}

/// Partitions of `n` with parts in non-increasing order, from `(n)` down to
/// `1^n` in reverse lexicographic order.
pub struct Partitions {
    parts: Vec<usize>,
    done: bool,
}

impl Partitions {
    pub fn new(n: usize) -> Self {
        Partitions {
            parts: if n == 0 { Vec::new() } else { vec![n] },
            done: false,
        }
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        if self.done {
            return None;
        }
        let current = Partition::from_parts(&self.parts);
        // strip trailing ones, decrement the last larger part and refill
        let mut ones = 0;
        while self.parts.last() == Some(&1) {
            self.parts.pop();
            ones += 1;
        }
        match self.parts.pop() {
            None => self.done = true,
            Some(k) => {
                let k = k - 1;
                let mut rest = ones + 1 + k;
                while rest > 0 {
                    let part = k.min(rest);
                    self.parts.push(part);
                    rest -= part;
                }
            }
        }
        Some(current)
    }
}

/// All partitions of `n`, in the order of [`Partitions`].
pub fn partitions(n: usize) -> Vec<Partition> {
    Partitions::new(n).collect()
}

fn check_prime_power(q: u64) -> Result<()> {
    prime_power(q).map(|_| ()).ok_or(Error::NotPrimePower(q))
}

fn check_partition_n(n: usize, limit: usize, what: &'static str) -> Result<()> {
    if n > limit {
        return Err(Error::BudgetExceeded {
            what,
            limit: limit as u64,
        });
    }
    Ok(())
}

/// Number of conjugacy classes of `GL_n(q)`:
/// `Σ_ν Π_{n_i > 0} (q^{n_i} - q^{n_i - 1})` over partitions `ν` of `n`.
pub fn gl_class_count(n: usize, q: u64) -> Result<u64> {
    check_prime_power(q)?;
    check_partition_n(n, MAX_GL_DEGREE, "GL degree")?;
    let mut total = 0u64;
    for nu in Partitions::new(n) {
        let mut term = 1u64;
        for (_, m) in nu.multiplicities() {
            let top = q.checked_pow(m as u32).ok_or(Error::Overflow)?;
            term = term.checked_mul(top - top / q).ok_or(Error::Overflow)?;
        }
        total = total.checked_add(term).ok_or(Error::Overflow)?;
    }
    Ok(total)
}

/// Meaning of "self-reciprocal" for `u(t) = a_m t^m + ... + a_1 t + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Reciprocity {
    /// Coefficient palindrome `a_i = a_{m-i}`, which forces `a_m = 1`.
    Palindrome,
    /// The reversal `t^m u(1/t)` is a scalar multiple of `u`, i.e.
    /// `a_{m-i} = a_m a_i` for all `i`. The roots are closed under inversion.
    UpToScalar,
}

/// Counts degree-`m` polynomials `a_m t^m + ... + a_1 t + 1` over `F_q`,
/// `a_m != 0`, that are self-reciprocal under `convention`, by enumerating
/// every candidate.
pub fn self_reciprocal_count(q: u64, m: usize, convention: Reciprocity) -> Result<u64> {
    check_prime_power(q)?;
    if m == 0 {
        return Ok(1);
    }
    let candidates = (q - 1)
        .checked_mul(q.checked_pow(m as u32 - 1).ok_or(Error::Overflow)?)
        .ok_or(Error::Overflow)?;
    if candidates > MAX_RECIPROCAL_CANDIDATES {
        return Err(Error::BudgetExceeded {
            what: "self-reciprocal candidates",
            limit: MAX_RECIPROCAL_CANDIDATES,
        });
    }
    let field = FqField::new(q as u32)?;
    let q8 = q as u8;
    // coeffs[i] = a_i, coeffs[0] = 1
    let mut coeffs = vec![0u8; m + 1];
    coeffs[0] = 1;
    coeffs[m] = 1;
    let mut count = 0;
    loop {
        let lead = coeffs[m];
        let ok = (0..=m).all(|i| match convention {
            Reciprocity::Palindrome => coeffs[i] == coeffs[m - i],
            Reciprocity::UpToScalar => coeffs[m - i] == field.mul(lead, coeffs[i]),
        });
        count += ok as u64;
        // odometer over a_1..a_{m-1}, then a_m over 1..q
        let mut i = 1;
        loop {
            if i == m {
                coeffs[m] += 1;
                if coeffs[m] == q8 {
                    return Ok(count);
                }
                break;
            }
            coeffs[i] += 1;
            if coeffs[i] < q8 {
                break;
            }
            coeffs[i] = 0;
            i += 1;
        }
    }
}

/// Number of real conjugacy classes of `GL_n(q)`:
/// `Σ_ν Π_{n_i > 0} n_{q, n_i}` with `n_{q,m}` the number of self-reciprocal
/// polynomials of degree `m` (up to scalar; see [`Reciprocity`]).
pub fn gl_real_class_count(n: usize, q: u64) -> Result<u64> {
    gl_real_class_count_with(n, q, Reciprocity::UpToScalar)
}

pub fn gl_real_class_count_with(n: usize, q: u64, convention: Reciprocity) -> Result<u64> {
    check_prime_power(q)?;
    check_partition_n(n, MAX_GL_DEGREE, "GL degree")?;
    let mut cache = vec![None; n + 1];
    let mut total = 0u64;
    for nu in Partitions::new(n) {
        let mut term = 1u64;
        for (_, m) in nu.multiplicities() {
            let factor = match cache[m] {
                Some(v) => v,
                None => {
                    let v = self_reciprocal_count(q, m, convention)?;
                    cache[m] = Some(v);
                    v
                }
            };
            term = term.checked_mul(factor).ok_or(Error::Overflow)?;
        }
        total = total.checked_add(term).ok_or(Error::Overflow)?;
    }
    Ok(total)
}

/// How the `S_n`-class of a cycle type behaves in `A_n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnPartitionReport {
    pub partition: Partition,
    /// The class consists of even permutations: `n - r` even.
    pub in_an: bool,
    /// The class splits into two `A_n`-classes: all parts odd and distinct.
    pub splits: bool,
    /// The two halves are not real: splitting and `(n - r)/2` odd.
    pub nonreal: bool,
}

pub fn an_partition_report(partition: &Partition) -> AnPartitionReport {
    let n = partition.size();
    let r = partition.len();
    let in_an = (n - r).is_multiple_of(2);
    let odd_distinct = partition.multiplicities().all(|(i, m)| i % 2 == 1 && m == 1);
    // A_1 = S_1 has a single class
    let splits = in_an && odd_distinct && n >= 2;
    let nonreal = splits && ((n - r) / 2) % 2 == 1;
    AnPartitionReport {
        partition: partition.clone(),
        in_an,
        splits,
        nonreal,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct AnCounts {
    pub total_classes: u64,
    pub real_classes: u64,
}

/// Class and real class counts of `A_n` from the per-partition reports.
pub fn an_counts(n: usize) -> Result<AnCounts> {
    check_partition_n(n, MAX_PARTITION_N, "partition size")?;
    let mut counts = AnCounts {
        total_classes: 0,
        real_classes: 0,
    };
    for nu in Partitions::new(n) {
        let report = an_partition_report(&nu);
        if !report.in_an {
            continue;
        }
        let classes = if report.splits { 2 } else { 1 };
        counts.total_classes += classes;
        if !report.nonreal {
            counts.real_classes += classes;
        }
    }
    Ok(counts)
}

/// `A_n` has only real classes.
pub fn an_is_ambivalent(n: usize) -> Result<bool> {
    let counts = an_counts(n)?;
    Ok(counts.real_classes == counts.total_classes)
}

/// Class-side and character-side facts about `SL_2(q)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Sl2Profile {
    pub classes: u64,
    pub real: u64,
    pub strongly_real: u64,
    pub has_symplectic: bool,
    pub ortho_ambivalent: bool,
}

pub fn sl2_expected_profile(q: u64) -> Result<Sl2Profile> {
    check_prime_power(q)?;
    Ok(if q.is_multiple_of(2) {
        Sl2Profile {
            classes: q + 1,
            real: q + 1,
            strongly_real: q + 1,
            has_symplectic: false,
            ortho_ambivalent: true,
        }
    } else {
        Sl2Profile {
            classes: q + 4,
            real: if q % 4 == 1 { q + 4 } else { q },
            strongly_real: 2,
            has_symplectic: true,
            ortho_ambivalent: false,
        }
    })
}

/// Largest power of two dividing `n`.
pub fn two_part(n: u64) -> u64 {
    if n == 0 {
        0
    } else {
        1 << n.trailing_zeros()
    }
}

/// Whether every real character of `SL_n(q)` is orthogonal: `n` odd, or
/// `4 | n`, or `|n|_2 > |q-1|_2`.
pub fn sln_all_real_orthogonal(n: u64, q: u64) -> Result<bool> {
    check_prime_power(q)?;
    Ok(n % 2 == 1 || n.is_multiple_of(4) || two_part(n) > two_part(q - 1))
}
