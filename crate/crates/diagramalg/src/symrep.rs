//! Young's natural representation of the symmetric group.
//!
//! Basis vectors `n_t` are polytabloids indexed by standard tableaux. A
//! permutation relabels the entries of `t`; the result is rewritten in the
//! standard basis by column sorting and Garnir relations.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::partitions::IntPartition;
use crate::{Error, Result};

/// `images[i-1] = sigma(i)` on `1..=m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let m = images.len();
        let mut seen = vec![false; m + 1];
        for &x in &images {
            if x == 0 || x > m || seen[x] {
                return Err(Error::InvalidParameter(format!("{images:?} is not a permutation")));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(m: usize) -> Self {
        Permutation { images: (1..=m).collect() }
    }

    /// Product of cycles on `1..=m`, each cycle `(a b c)` sending `a -> b -> c -> a`.
    pub fn from_cycles(m: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (1..=m).collect();
        for cyc in cycles {
            for (i, &a) in cyc.iter().enumerate() {
                if a == 0 || a > m {
                    return Err(Error::IndexOutOfRange { index: a, max: m });
                }
                images[a - 1] = cyc[(i + 1) % cyc.len()];
            }
        }
        Self::new(images)
    }

    /// The standard element of cycle type `mu`: consecutive blocks of sizes
    /// `mu_1, mu_2, ...`, each the cycle `(r, r-1, ..., 1)` on its block.
    pub fn of_cycle_type(mu: &IntPartition) -> Self {
        let mut images = Vec::with_capacity(mu.size());
        let mut base = 0;
        for &r in mu.parts() {
            images.push(base + r);
            for i in 2..=r {
                images.push(base + i - 1);
            }
            base += r;
        }
        Permutation { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    /// `self o other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Result<Self> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch { left: self.degree(), right: other.degree() });
        }
        Ok(Permutation { images: other.images.iter().map(|&i| self.apply(i)).collect() })
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.degree()];
        for (i, &s) in self.images.iter().enumerate() {
            inv[s - 1] = i + 1;
        }
        Permutation { images: inv }
    }

    pub fn cycle_type(&self) -> IntPartition {
        let m = self.degree();
        let mut seen = vec![false; m + 1];
        let mut lens = Vec::new();
        for s in 1..=m {
            if seen[s] {
                continue;
            }
            let mut len = 0;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                x = self.apply(x);
                len += 1;
            }
            lens.push(len);
        }
        IntPartition::new(lens).expect("positive cycle lengths")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.degree();
        let mut seen = vec![false; m + 1];
        let mut any = false;
        for s in 1..=m {
            if seen[s] || self.apply(s) == s {
                continue;
            }
            any = true;
            write!(f, "(")?;
            let mut x = s;
            let mut first = true;
            while !seen[x] {
                seen[x] = true;
                if !first {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
                first = false;
                x = self.apply(x);
            }
            write!(f, ")")?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

/// A filling of a Young diagram by `1..=m`, rows listed top to bottom.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct YoungTableau {
    rows: Vec<Vec<usize>>,
}

impl YoungTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape: Vec<usize> = rows.iter().map(Vec::len).collect();
        if shape.windows(2).any(|w| w[0] < w[1]) || shape.contains(&0) {
            return Err(Error::ShapeMismatch);
        }
        let m: usize = shape.iter().sum();
        let mut seen = vec![false; m + 1];
        for &x in rows.iter().flatten() {
            if x == 0 || x > m || seen[x] {
                return Err(Error::InvalidParameter(format!("{rows:?} is not a filling of 1..={m}")));
            }
            seen[x] = true;
        }
        Ok(YoungTableau { rows })
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> IntPartition {
        IntPartition::new(self.rows.iter().map(Vec::len).collect()).expect("valid shape")
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_standard(&self) -> bool {
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]));
        let cols_ok = self.rows.windows(2).all(|w| w[1].iter().enumerate().all(|(c, &x)| w[0][c] < x));
        rows_ok && cols_ok
    }

    /// `(row, column)` of each entry, indexed by `entry - 1`.
    pub fn positions(&self) -> Vec<(usize, usize)> {
        let mut pos = vec![(0, 0); self.size()];
        for (r, row) in self.rows.iter().enumerate() {
            for (c, &x) in row.iter().enumerate() {
                pos[x - 1] = (r, c);
            }
        }
        pos
    }

    /// Relabels each entry `i` to `sigma(i)`.
    pub fn relabel(&self, sigma: &Permutation) -> Result<Self> {
        if sigma.degree() != self.size() {
            return Err(Error::DegreeMismatch { left: sigma.degree(), right: self.size() });
        }
        Ok(YoungTableau { rows: self.rows.iter().map(|r| r.iter().map(|&x| sigma.apply(x)).collect()).collect() })
    }
}

impl TryFrom<Vec<Vec<usize>>> for YoungTableau {
    type Error = Error;
    fn try_from(rows: Vec<Vec<usize>>) -> Result<Self> {
        YoungTableau::new(rows)
    }
}

impl From<YoungTableau> for Vec<Vec<usize>> {
    fn from(t: YoungTableau) -> Self {
        t.rows
    }
}

impl fmt::Display for YoungTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> =
            self.rows.iter().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")).collect();
        write!(f, "[{}]", rows.join("/"))
    }
}

/// Standard tableaux of shape `mu`, ordered so the column-reading tableau
/// comes first and the row-reading tableau last.
///
/// The order is decreasing lexicographic order of the row-index word
/// `(row of 1, row of 2, ..., row of m)`.
pub fn standard_tableaux(mu: &IntPartition) -> Vec<YoungTableau> {
    let shape = mu.parts().to_vec();
    let m = mu.size();
    let mut words = Vec::new();
    fn rec(
        i: usize,
        m: usize,
        shape: &[usize],
        fill: &mut Vec<usize>,
        word: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if i > m {
            out.push(word.clone());
            return;
        }
        for r in 0..shape.len() {
            let ok = fill[r] < shape[r] && (r == 0 || fill[r - 1] > fill[r]);
            if ok {
                fill[r] += 1;
                word.push(r);
                rec(i + 1, m, shape, fill, word, out);
                word.pop();
                fill[r] -= 1;
            }
        }
    }
    rec(1, m, &shape, &mut vec![0; shape.len()], &mut Vec::new(), &mut words);
    words.sort_by(|a, b| b.cmp(a));
    words
        .into_iter()
        .map(|word| {
            let mut rows = vec![Vec::new(); shape.len()];
            for (i, &r) in word.iter().enumerate() {
                rows[r].push(i + 1);
            }
            YoungTableau { rows }
        })
        .collect()
}

type Rows = Vec<Vec<usize>>;

/// Rewrites polytabloids of one shape in the standard basis.
pub struct Straightener {
    basis: Vec<YoungTableau>,
    index: HashMap<YoungTableau, usize>,
    memo: HashMap<Rows, Vec<(usize, i64)>>,
}

impl Straightener {
    pub fn new(shape: &IntPartition) -> Self {
        let basis = standard_tableaux(shape);
        let index = basis.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
        Straightener { basis, index, memo: HashMap::new() }
    }

    pub fn basis(&self) -> &[YoungTableau] {
        &self.basis
    }

    /// Coefficients of `e_t` on the standard basis, by basis index.
    pub fn straighten(&mut self, t: &YoungTableau) -> Vec<(usize, i64)> {
        self.straighten_rows(t.rows.clone())
    }

    fn straighten_rows(&mut self, rows: Rows) -> Vec<(usize, i64)> {
        if let Some(v) = self.memo.get(&rows) {
            return v.clone();
        }
        let (sorted, sign) = column_sort(&rows);
        let result = if sorted != rows {
            self.straighten_rows(sorted.clone()).into_iter().map(|(i, c)| (i, c * sign)).collect()
        } else if let Some((r, c)) = first_row_descent(&rows) {
            let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
            for (term, sgn) in garnir_terms(&rows, r, c) {
                for (i, coef) in self.straighten_rows(term) {
                    *acc.entry(i).or_insert(0) -= sgn * coef;
                }
            }
            acc.into_iter().filter(|&(_, v)| v != 0).collect()
        } else {
            let t = YoungTableau { rows: rows.clone() };
            vec![(self.index[&t], 1)]
        };
        self.memo.insert(rows, result.clone());
        result
    }

    /// Matrix of `sigma` on the standard basis; column `j` is `sigma . n_{t_j}`.
    pub fn matrix(&mut self, sigma: &Permutation) -> Result<Vec<Vec<i64>>> {
        let f = self.basis.len();
        let mut mat = vec![vec![0i64; f]; f];
        let moved = self.basis.iter().map(|t| t.relabel(sigma)).collect::<Result<Vec<_>>>()?;
        for (j, t) in moved.iter().enumerate() {
            for (i, c) in self.straighten(t) {
                mat[i][j] = c;
            }
        }
        Ok(mat)
    }
}

/// Sorts each column increasingly, returning the sign of the rearrangement.
fn column_sort(rows: &Rows) -> (Rows, i64) {
    let mut out = rows.clone();
    let mut sign = 1;
    let width = rows.first().map_or(0, Vec::len);
    for c in 0..width {
        let height = rows.iter().take_while(|r| r.len() > c).count();
        let mut col: Vec<usize> = (0..height).map(|r| rows[r][c]).collect();
        // bubble sort to track the sign
        for i in 0..col.len() {
            for j in 0..col.len() - 1 - i {
                if col[j] > col[j + 1] {
                    col.swap(j, j + 1);
                    sign = -sign;
                }
            }
        }
        for (r, x) in col.into_iter().enumerate() {
            out[r][c] = x;
        }
    }
    (out, sign)
}

fn first_row_descent(rows: &Rows) -> Option<(usize, usize)> {
    for (r, row) in rows.iter().enumerate() {
        for c in 0..row.len().saturating_sub(1) {
            if row[c] > row[c + 1] {
                return Some((r, c));
            }
        }
    }
    None
}

/// The non-identity terms `(pi t, sgn pi)` of the Garnir relation at the row
/// descent `(r, c)`: `A` is column `c` from row `r` down, `B` is column `c+1`
/// from the top through row `r`, and `pi` runs over shuffles of `A u B`.
fn garnir_terms(rows: &Rows, r: usize, c: usize) -> Vec<(Rows, i64)> {
    let height_c = rows.iter().take_while(|row| row.len() > c).count();
    let mut cells: Vec<(usize, usize)> = (r..height_c).map(|i| (i, c)).collect();
    let a_len = cells.len();
    cells.extend((0..=r).map(|i| (i, c + 1)));
    let values: Vec<usize> = cells.iter().map(|&(i, j)| rows[i][j]).collect();
    let mut pool = values.clone();
    pool.sort_unstable();
    let total = pool.len();
    let mut out = Vec::new();
    for mask in 0u32..(1 << total) {
        if mask.count_ones() as usize != a_len {
            continue;
        }
        let mut a: Vec<usize> = Vec::new();
        let mut b: Vec<usize> = Vec::new();
        for (i, &x) in pool.iter().enumerate() {
            if mask & (1 << i) != 0 {
                a.push(x);
            } else {
                b.push(x);
            }
        }
        let new_values: Vec<usize> = a.into_iter().chain(b).collect();
        if new_values == values {
            continue;
        }
        let mut t = rows.clone();
        for (&(i, j), &x) in cells.iter().zip(&new_values) {
            t[i][j] = x;
        }
        out.push((t, permutation_sign(&values, &new_values)));
    }
    out
}

/// Sign of the permutation taking `from[i]` to `to[i]` (same value set).
fn permutation_sign(from: &[usize], to: &[usize]) -> i64 {
    let pos: HashMap<usize, usize> = from.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let perm: Vec<usize> = to.iter().map(|x| pos[x]).collect();
    let mut seen = vec![false; perm.len()];
    let mut sign = 1;
    for s in 0..perm.len() {
        if seen[s] {
            continue;
        }
        let mut len = 0;
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            x = perm[x];
            len += 1;
        }
        if len % 2 == 0 {
            sign = -sign;
        }
    }
    sign
}

/// A vector in the Specht module of one shape.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpechtVector {
    pub shape: IntPartition,
    pub combo: BTreeMap<YoungTableau, BigRational>,
}

impl SpechtVector {
    /// The basis vector `n_t` for a standard tableau `t`.
    pub fn basis(t: &YoungTableau) -> Result<Self> {
        if !t.is_standard() {
            return Err(Error::InvalidParameter(format!("{t} is not standard")));
        }
        let mut combo = BTreeMap::new();
        combo.insert(t.clone(), BigRational::from_integer(1.into()));
        Ok(SpechtVector { shape: t.shape(), combo })
    }
}

/// `sigma . v`, straightened into the standard basis.
pub fn act(sigma: &Permutation, v: &SpechtVector) -> Result<SpechtVector> {
    if sigma.degree() != v.shape.size() {
        return Err(Error::DegreeMismatch { left: sigma.degree(), right: v.shape.size() });
    }
    let mut st = Straightener::new(&v.shape);
    let mut combo: BTreeMap<YoungTableau, BigRational> = BTreeMap::new();
    for (t, c) in &v.combo {
        let moved = t.relabel(sigma)?;
        for (i, coef) in st.straighten(&moved) {
            let slot = combo.entry(st.basis[i].clone()).or_insert_with(BigRational::zero);
            *slot += c * BigRational::from_integer(coef.into());
        }
    }
    combo.retain(|_, c| !c.is_zero());
    Ok(SpechtVector { shape: v.shape.clone(), combo })
}

/// `f^mu x f^mu` matrix of `sigma` in the natural basis.
pub fn rep_matrix(sigma: &Permutation, mu: &IntPartition) -> Result<Vec<Vec<BigRational>>> {
    if sigma.degree() != mu.size() {
        return Err(Error::DegreeMismatch { left: sigma.degree(), right: mu.size() });
    }
    let mat = Straightener::new(mu).matrix(sigma)?;
    Ok(mat.into_iter().map(|row| row.into_iter().map(|x| BigRational::from_integer(x.into())).collect()).collect())
}

/// `chi^lambda(mu)` by the Murnaghan-Nakayama rule on beta-sets.
pub fn sym_character(lambda: &IntPartition, mu: &IntPartition) -> Result<BigInt> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch { left: lambda.size(), right: mu.size() });
    }
    let len = lambda.len();
    let beta: Vec<usize> = lambda.parts().iter().enumerate().map(|(i, &p)| p + len - 1 - i).collect();
    let mut memo = HashMap::new();
    Ok(BigInt::from(mn(beta, mu.parts(), &mut memo)))
}

fn mn(beta: Vec<usize>, hooks: &[usize], memo: &mut HashMap<(Vec<usize>, usize), i64>) -> i64 {
    let Some((&h, rest)) = hooks.split_first() else {
        return 1;
    };
    let key = (beta.clone(), hooks.len());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let mut total = 0;
    for (i, &b) in beta.iter().enumerate() {
        if b < h || beta.contains(&(b - h)) {
            continue;
        }
        let target = b - h;
        let between = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut next = beta.clone();
        next[i] = target;
        next.sort_unstable_by(|a, b| b.cmp(a));
        let sign = if between % 2 == 0 { 1 } else { -1 };
        total += sign * mn(next, rest, memo);
    }
    memo.insert(key, total);
    total
}
