//! Irreducible characters of diagram algebras.
//!
//! Characters are determined by their values on the class diagrams
//! `gamma_kappa (x) e^{(x) s}`. Each value is a sum over `mu |- m` of a
//! fixed-point count `F^{mu,kappa}` times a symmetric group character, and the
//! counts have closed forms per family.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::coeff::{Element, LaurentPoly};
use crate::diagrams::{Diagram, Family, GenKind};
use crate::irreps::{conjugate, enumerate_symmetric, BasisChoice, Irrep, SymmetricMDiagram};
use crate::partitions::{
    binom, divisors, double_factorial, lambda_stars, multiplicities, partitions_of, rank_set, stirling2, IntPartition,
};
use crate::symrep::{sym_character, Permutation};
use crate::{Error, Result};

/// `gamma_kappa (x) e^{(x) s}` for a family.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ClassLabel {
    pub kappa: IntPartition,
    pub s: usize,
    pub family: Family,
}

impl ClassLabel {
    /// The label for `kappa` on `k` strands, solving for `s`.
    pub fn for_k(family: Family, k: usize, kappa: IntPartition) -> Result<Self> {
        let r = kappa.size();
        let pad = if family.uses_e_padding() { 2 } else { 1 };
        if r > k || !(k - r).is_multiple_of(pad) {
            return Err(Error::InvalidClassLabel(format!("{kappa} does not fit k = {k} for {family}")));
        }
        let label = ClassLabel { kappa, s: (k - r) / pad, family };
        label.validate()?;
        Ok(label)
    }

    pub fn k(&self) -> usize {
        let pad = if self.family.uses_e_padding() { 2 } else { 1 };
        self.kappa.size() + pad * self.s
    }

    pub fn validate(&self) -> Result<()> {
        if self.family.is_planar() && !self.kappa.is_all_ones() {
            return Err(Error::InvalidClassLabel(format!(
                "{} classes use kappa = [1,...,1], got {}",
                self.family, self.kappa
            )));
        }
        if self.family == Family::SymmetricGroup && self.s > 0 {
            return Err(Error::InvalidClassLabel("the symmetric group has no padded classes".into()));
        }
        Ok(())
    }
}

/// The diagram of `gamma_kappa`: the juxtaposed cycles `(r, r-1, ..., 1)`.
pub fn gamma(kappa: &IntPartition) -> Diagram {
    Diagram::from_permutation(Permutation::of_cycle_type(kappa).images())
}

/// `n^{-s} gamma_kappa (x) x^{(x) s}` with `x = e_1` (Brauer, Temperley-Lieb) or `p_1`.
pub fn class_diagram(label: &ClassLabel) -> Result<Element> {
    label.validate()?;
    let pad = if label.family.uses_e_padding() {
        Diagram::generator(GenKind::E, 1, 2)?
    } else {
        Diagram::generator(GenKind::P, 1, 1)?
    };
    let mut d = gamma(&label.kappa);
    for _ in 0..label.s {
        d = d.tensor(&pad);
    }
    Element::term(label.family, d, LaurentPoly::n_pow(-(label.s as i64)))
}

/// Symmetric m-diagrams fixed by conjugation with `gamma_kappa`, grouped by
/// the cycle type of their twist. Every `mu |- m` appears as a key.
pub fn fixed_points(
    f: Family,
    k: usize,
    m: usize,
    kappa: &IntPartition,
) -> Result<BTreeMap<IntPartition, Vec<SymmetricMDiagram>>> {
    if kappa.size() != k {
        return Err(Error::SizeMismatch { left: kappa.size(), right: k });
    }
    let g = gamma(kappa);
    if !g.in_family(f) {
        return Err(Error::InvalidClassLabel(format!("gamma_{kappa} is not in the {f} family")));
    }
    let mut out: BTreeMap<IntPartition, Vec<SymmetricMDiagram>> =
        partitions_of(m).into_iter().map(|mu| (mu, Vec::new())).collect();
    for w in enumerate_symmetric(f, k, m)? {
        let c = conjugate(&g, &w)?;
        if c.w_prime != w {
            continue;
        }
        if let Some(sigma) = c.twist {
            out.get_mut(&sigma.cycle_type()).expect("cycle type of degree m").push(w);
        }
    }
    Ok(out)
}

fn pow(base: i64, e: usize) -> BigInt {
    num_traits::pow(BigInt::from(base), e)
}

/// `F^{mu,kappa}`: the number of symmetric `|mu|`-diagrams on `|kappa|`
/// strands fixed by `gamma_kappa` with twist of cycle type `mu`.
pub fn f_coeff(f: Family, kappa: &IntPartition, mu: &IntPartition) -> Result<BigInt> {
    let mk = kappa.multiplicities();
    let mm = mu.multiplicities();
    let parts: Vec<usize> = mk.keys().chain(mm.keys()).copied().collect();
    let get = |m: &BTreeMap<usize, usize>, i: usize| m.get(&i).copied().unwrap_or(0);
    let brauer_like = |even_weight: i64, odd_weight: i64| -> BigInt {
        let mut prod = BigInt::one();
        let mut seen = Vec::new();
        for &i in &parts {
            if seen.contains(&i) {
                continue;
            }
            seen.push(i);
            let (a, b) = (get(&mk, i), get(&mm, i));
            if b > a {
                return BigInt::zero();
            }
            let d = a - b;
            let weight = if i % 2 == 0 { even_weight } else { odd_weight };
            let mut inner = BigInt::zero();
            for t in 0..=d / 2 {
                inner += binom(d as i64, 2 * t as i64)
                    * double_factorial(2 * t as i64 - 1)
                    * pow(i as i64, t)
                    * pow(weight, d - 2 * t);
            }
            prod *= binom(a as i64, b as i64) * inner;
        }
        prod
    };
    match f {
        Family::Partition => {
            let mut total = BigInt::zero();
            for nu in divisors(kappa) {
                let mn = multiplicities(&nu);
                let mut prod = BigInt::one();
                let keys: std::collections::BTreeSet<usize> = mn.keys().chain(mm.keys()).copied().collect();
                for i in keys {
                    let (a, b) = (get(&mn, i), get(&mm, i));
                    let mut inner = BigInt::zero();
                    for t in 0..=a {
                        inner += stirling2(a, t) * binom(t as i64, b as i64) * pow(i as i64, a - t);
                    }
                    prod *= inner;
                }
                total += prod;
            }
            Ok(total)
        }
        Family::Brauer => Ok(brauer_like(1, 0)),
        Family::RookBrauer => Ok(brauer_like(2, 1)),
        Family::Rook => {
            let mut prod = BigInt::one();
            for (&i, &a) in &mk {
                prod *= binom(a as i64, get(&mm, i) as i64);
            }
            if mm.keys().any(|i| !mk.contains_key(i)) {
                return Ok(BigInt::zero());
            }
            Ok(prod)
        }
        Family::SymmetricGroup => Ok(if kappa == mu { BigInt::one() } else { BigInt::zero() }),
        Family::TemperleyLieb | Family::Motzkin | Family::PlanarRook => {
            if !kappa.is_all_ones() {
                return Err(Error::InvalidClassLabel(format!("{f} classes use kappa = [1,...,1]")));
            }
            if !mu.is_all_ones() {
                return Ok(BigInt::zero());
            }
            f_coeff_planar(f, kappa.size(), mu.size())
        }
        Family::PlanarPartition => Err(Error::FamilyUnsupported(f)),
    }
}

/// The planar coefficient: symmetric `m`-diagrams on `r` strands.
pub fn f_coeff_planar(f: Family, r: usize, m: usize) -> Result<BigInt> {
    let (r, m) = (r as i64, m as i64);
    match f {
        Family::TemperleyLieb => {
            if m > r || (r - m) % 2 != 0 {
                return Ok(BigInt::zero());
            }
            let h = (r - m) / 2;
            Ok(binom(r, h) - binom(r, h - 1))
        }
        Family::Motzkin => {
            let mut total = BigInt::zero();
            let mut t = 0;
            while m + 2 * t <= r {
                total += binom(r, m + 2 * t) * (binom(m + 2 * t, t) - binom(m + 2 * t, t - 1));
                t += 1;
            }
            Ok(total)
        }
        Family::PlanarRook => Ok(binom(r, m)),
        _ => Err(Error::FamilyUnsupported(f)),
    }
}

fn check_lambda(f: Family, k: usize, lambda_star: &IntPartition) -> Result<()> {
    if !lambda_stars(f, k)?.contains(lambda_star) {
        return Err(Error::LabelNotInFamily { family: f, k, lambda_star: lambda_star.to_string() });
    }
    Ok(())
}

fn check_class(f: Family, k: usize, label: &ClassLabel) -> Result<()> {
    label.validate()?;
    if label.family != f || label.k() != k {
        return Err(Error::InvalidClassLabel(format!(
            "{} on {} strands does not match {f} with k = {k}",
            label.kappa,
            label.k()
        )));
    }
    Ok(())
}

/// The character of the irreducible labelled by `lambda*` on a class diagram.
pub fn irr_character(f: Family, k: usize, lambda_star: &IntPartition, label: &ClassLabel) -> Result<BigInt> {
    check_lambda(f, k, lambda_star)?;
    check_class(f, k, label)?;
    let m = lambda_star.size();
    if label.kappa.size() < m {
        return Ok(BigInt::zero());
    }
    let mut total = BigInt::zero();
    for mu in partitions_of(m) {
        let coeff = f_coeff(f, &label.kappa, &mu)?;
        if !coeff.is_zero() {
            total += coeff * sym_character(lambda_star, &mu)?;
        }
    }
    Ok(total)
}

/// Trace of the class diagram on the twisted basis. Small `k` only.
pub fn character_oracle(f: Family, k: usize, lambda_star: &IntPartition, label: &ClassLabel) -> Result<LaurentPoly> {
    check_class(f, k, label)?;
    let irr = Irrep::new(f, k, lambda_star)?;
    Ok(irr.element_matrix(&class_diagram(label)?, BasisChoice::Twisted)?.trace())
}

/// Class labels in table order: `|kappa|` ascending, then lexicographically decreasing.
pub fn class_labels(f: Family, k: usize) -> Result<Vec<ClassLabel>> {
    if f == Family::PlanarPartition {
        return Err(Error::FamilyUnsupported(f));
    }
    let sizes: Vec<usize> = match f {
        Family::Brauer | Family::TemperleyLieb => rank_set(f, k),
        Family::SymmetricGroup => vec![k],
        _ => (0..=k).collect(),
    };
    let mut out = Vec::new();
    for r in sizes {
        let kappas = if f.is_planar() { vec![IntPartition::ones(r)] } else { partitions_of(r) };
        for kappa in kappas {
            out.push(ClassLabel::for_k(f, k, kappa)?);
        }
    }
    Ok(out)
}

/// The character table with its factorization `table = block * f`, where
/// `block` is the direct sum of symmetric group tables.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CharacterTable {
    pub family: Family,
    pub k: usize,
    pub rows: Vec<IntPartition>,
    pub cols: Vec<ClassLabel>,
    /// Middle index of the factorization: the classes `mu` of each `S_m`.
    pub mus: Vec<IntPartition>,
    pub values: Vec<Vec<BigInt>>,
    pub block: Vec<Vec<BigInt>>,
    pub f_matrix: Vec<Vec<BigInt>>,
}

pub fn character_table(f: Family, k: usize) -> Result<CharacterTable> {
    crate::diagrams::check_cap(f, k)?;
    let rows = lambda_stars(f, k)?;
    let cols = class_labels(f, k)?;
    let mus: Vec<IntPartition> =
        if f.is_planar() { rows.iter().map(|l| IntPartition::ones(l.size())).collect() } else { rows.clone() };
    let values = rows
        .iter()
        .map(|l| cols.iter().map(|c| irr_character(f, k, l, c)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    let block = rows
        .iter()
        .map(|l| {
            mus.iter()
                .map(|mu| if mu.size() == l.size() { sym_character(l, mu) } else { Ok(BigInt::zero()) })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let f_matrix = mus
        .iter()
        .map(|mu| cols.iter().map(|c| f_coeff(f, &c.kappa, mu)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    Ok(CharacterTable { family: f, k, rows, cols, mus, values, block, f_matrix })
}

impl CharacterTable {
    /// Whether `values == block * f_matrix` exactly.
    pub fn factorization_holds(&self) -> bool {
        let n = self.values.len();
        (0..n).all(|i| {
            (0..self.cols.len()).all(|j| {
                let s: BigInt = (0..self.mus.len()).map(|l| &self.block[i][l] * &self.f_matrix[l][j]).sum();
                s == self.values[i][j]
            })
        })
    }
}

/// Exact determinant by fraction-free (Bareiss) elimination.
pub fn determinant(matrix: &[Vec<BigInt>]) -> BigInt {
    let n = matrix.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = matrix.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for i in 0..n {
        if a[i][i].is_zero() {
            let Some(p) = (i + 1..n).find(|&r| !a[r][i].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(i, p);
            sign = -sign;
        }
        for r in i + 1..n {
            for c in i + 1..n {
                a[r][c] = (&a[r][c] * &a[i][i] - &a[r][i] * &a[i][c]) / &prev;
            }
            a[r][i] = BigInt::zero();
        }
        prev = a[i][i].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// `|det table|` against the product of all parts of all `lambda*`
/// (non-planar) or 1 (planar).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeterminantCheck {
    pub lhs: BigInt,
    pub rhs: BigInt,
    pub ok: bool,
}

pub fn table_determinant_check(f: Family, k: usize) -> Result<DeterminantCheck> {
    let table = character_table(f, k)?;
    let lhs = determinant(&table.values).abs();
    let rhs = if f.is_planar() { BigInt::one() } else { table.rows.iter().map(IntPartition::parts_product).product() };
    Ok(DeterminantCheck { ok: lhs == rhs, lhs, rhs })
}
