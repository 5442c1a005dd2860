//! Integer partitions and the counting functions used throughout.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::diagrams::Family;
use crate::{Error, Result};

/// A weakly decreasing list of positive parts. The empty list is the partition of 0.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct IntPartition(Vec<usize>);

impl IntPartition {
    /// Sorts the parts into decreasing order. Zero parts are rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidParameter("partition parts must be positive".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(IntPartition(parts))
    }

    pub fn empty() -> Self {
        IntPartition(Vec::new())
    }

    /// `[1, 1, ..., 1]` with `n` parts.
    pub fn ones(n: usize) -> Self {
        IntPartition(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_all_ones(&self) -> bool {
        self.0.iter().all(|&p| p == 1)
    }

    /// `i -> m_i(self)`, the number of parts equal to `i`.
    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        multiplicities(&self.0)
    }

    /// Product of all parts (1 for the empty partition).
    pub fn parts_product(&self) -> BigInt {
        self.0.iter().map(|&p| BigInt::from(p)).product()
    }

    /// Parses `"3,2,1"`, `"[3,2,1]"` or `""`/`"[]"`.
    pub fn parse(text: &str) -> Result<Self> {
        let t = text.trim().trim_start_matches('[').trim_end_matches(']').trim();
        if t.is_empty() || t == "0" {
            return Ok(Self::empty());
        }
        let parts = t
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .map(|s| s.parse::<usize>().map_err(|_| Error::SyntaxError(format!("bad partition part `{s}`"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }

    /// Conjugate (transposed) partition.
    pub fn conjugate(&self) -> Self {
        let width = self.0.first().copied().unwrap_or(0);
        IntPartition((0..width).map(|c| self.0.iter().filter(|&&p| p > c).count()).collect())
    }
}

impl TryFrom<Vec<usize>> for IntPartition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        IntPartition::new(v)
    }
}

impl From<IntPartition> for Vec<usize> {
    fn from(p: IntPartition) -> Vec<usize> {
        p.0
    }
}

impl fmt::Display for IntPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// Multiplicities of any list of positive integers (partition or composition).
pub fn multiplicities(parts: &[usize]) -> BTreeMap<usize, usize> {
    let mut m = BTreeMap::new();
    for &p in parts {
        *m.entry(p).or_insert(0) += 1;
    }
    m
}

/// All partitions of `n`, lexicographically decreasing: `[n], [n-1,1], ..., [1^n]`.
pub fn partitions_of(n: usize) -> Vec<IntPartition> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<IntPartition>) {
        if rest == 0 {
            out.push(IntPartition(cur.clone()));
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Partitions of every size in `sizes`, grouped by size in the given order and
/// lexicographically decreasing within a size. This is the row and column
/// order of character tables.
pub fn table_order(sizes: impl IntoIterator<Item = usize>) -> Vec<IntPartition> {
    sizes.into_iter().flat_map(partitions_of).collect()
}

fn divisors_of(n: usize) -> Vec<usize> {
    (1..=n).filter(|&d| n.is_multiple_of(d)).collect()
}

/// Every composition `nu` with `nu[i] | kappa[i]`, in lexicographic order.
pub fn divisors(kappa: &IntPartition) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for &part in kappa.parts() {
        let ds = divisors_of(part);
        out = out
            .into_iter()
            .flat_map(|prefix| {
                ds.iter().map(move |&d| {
                    let mut v = prefix.clone();
                    v.push(d);
                    v
                })
            })
            .collect();
    }
    out
}

/// Binomial coefficient, zero outside `0 <= b <= a`.
pub fn binom(a: i64, b: i64) -> BigInt {
    if a < 0 || b < 0 || b > a {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    let mut r = BigInt::one();
    for i in 0..b {
        r = r * BigInt::from(a - i) / BigInt::from(i + 1);
    }
    r
}

/// Stirling number of the second kind `S(a, b)`.
pub fn stirling2(a: usize, b: usize) -> BigInt {
    if b > a {
        return BigInt::zero();
    }
    let mut row = vec![BigInt::one()];
    for n in 1..=a {
        let mut next = vec![BigInt::zero(); n + 1];
        for j in 1..=n {
            let keep = if j < n { &row[j] * BigInt::from(j) } else { BigInt::zero() };
            next[j] = keep + &row[j - 1];
        }
        row = next;
    }
    row[b].clone()
}

/// `a!! = a (a-2) (a-4) ...`, with `0!! = (-1)!! = 1`.
pub fn double_factorial(a: i64) -> BigInt {
    let mut r = BigInt::one();
    let mut i = a;
    while i > 1 {
        r *= BigInt::from(i);
        i -= 2;
    }
    r
}

/// Bell number via the Bell triangle.
pub fn bell(a: usize) -> BigInt {
    let mut row = vec![BigInt::one()];
    for _ in 0..a {
        let mut next = vec![row.last().unwrap().clone()];
        for x in &row {
            let v = next.last().unwrap() + x;
            next.push(v);
        }
        row = next;
    }
    row[0].clone()
}

pub fn factorial(a: usize) -> BigInt {
    (1..=a).map(BigInt::from).product()
}

/// Number of standard Young tableaux of shape `mu`, by the hook length formula.
pub fn num_syt(mu: &IntPartition) -> BigInt {
    let conj = mu.conjugate();
    let mut hooks = BigInt::one();
    for (r, &len) in mu.parts().iter().enumerate() {
        for c in 0..len {
            hooks *= BigInt::from(len - c + conj.parts()[c] - r - 1);
        }
    }
    factorial(mu.size()) / hooks
}

/// The admissible ranks of diagrams in the family, ascending.
pub fn rank_set(f: Family, k: usize) -> Vec<usize> {
    match f {
        Family::Brauer | Family::TemperleyLieb => (0..=k).filter(|m| (k - m).is_multiple_of(2)).collect(),
        Family::SymmetricGroup => vec![k],
        _ => (0..=k).collect(),
    }
}

/// The partitions `lambda*` labelling irreducible modules, in table order.
pub fn lambda_stars(f: Family, k: usize) -> Result<Vec<IntPartition>> {
    let ranks = rank_set(f, k);
    match f {
        Family::PlanarPartition => Err(Error::FamilyUnsupported(f)),
        Family::TemperleyLieb | Family::Motzkin | Family::PlanarRook => {
            Ok(ranks.into_iter().map(|m| if m == 0 { IntPartition::empty() } else { IntPartition(vec![m]) }).collect())
        }
        _ => Ok(table_order(ranks)),
    }
}

/// A label `lambda = [n - |lambda*|, lambda*]` of an irreducible module.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Label {
    pub n: usize,
    pub lambda_star: IntPartition,
}

impl Label {
    /// The full partition of `n`.
    pub fn lambda(&self) -> Vec<usize> {
        let mut v = vec![self.n - self.lambda_star.size()];
        v.extend_from_slice(self.lambda_star.parts());
        v
    }
}

/// The index set of irreducible modules as partitions of `n`. Needs `n >= 2k`.
pub fn index_set(f: Family, k: usize, n: usize) -> Result<Vec<Label>> {
    if n < 2 * k {
        return Err(Error::InvalidParameter(format!("need n >= 2k, got n = {n}, k = {k}")));
    }
    Ok(lambda_stars(f, k)?.into_iter().map(|lambda_star| Label { n, lambda_star }).collect())
}
