//! Exact coefficients: Laurent polynomials in `n` over the rationals, and
//! sparse linear combinations of diagrams.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Serialize, Serializer};

use crate::diagrams::{Diagram, Family};
use crate::{Error, Result};

pub type Rational = BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(v: i64) -> Rational {
    BigRational::from_integer(BigInt::from(v))
}

/// `sum c_e n^e`, zero coefficients never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, Rational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(0, c)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(int(c))
    }

    /// `c n^exp`.
    pub fn monomial(exp: i64, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        LaurentPoly { terms }
    }

    /// `n^exp`.
    pub fn n_pow(exp: i64) -> Self {
        Self::monomial(exp, Rational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<i64, Rational> {
        &self.terms
    }

    /// The value if the polynomial has no non-constant terms.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&0).cloned(),
            _ => None,
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly { terms: self.terms.iter().map(|(&e, v)| (e, v * c)).collect() }
    }

    /// Multiplies by `n^shift`.
    pub fn shift(&self, shift: i64) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(&e, v)| (e + shift, v.clone())).collect() }
    }

    pub fn add_assign_ref(&mut self, other: &LaurentPoly) {
        for (&e, c) in &other.terms {
            let slot = self.terms.entry(e).or_insert_with(Rational::zero);
            *slot += c;
            if slot.is_zero() {
                self.terms.remove(&e);
            }
        }
    }

    /// Substitutes `n = n0`.
    pub fn evaluate(&self, n0: &Rational) -> Result<Rational> {
        if n0.is_zero() && self.terms.keys().any(|&e| e < 0) {
            return Err(Error::ZeroSubstitutionWithNegativeExponent);
        }
        let mut acc = Rational::zero();
        for (&e, c) in &self.terms {
            let p = if e >= 0 {
                num_traits::pow(n0.clone(), e as usize)
            } else {
                num_traits::pow(n0.recip(), (-e) as usize)
            };
            acc += c * p;
        }
        Ok(acc)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self.add_assign_ref(&rhs);
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect() }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &rhs.terms {
                out.add_assign_ref(&LaurentPoly::monomial(e1 + e2, c1 * c2));
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (&e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let unit = abs.is_one();
            match (e, unit) {
                (0, _) => write!(f, "{abs}")?,
                (1, true) => write!(f, "n")?,
                (_, true) => write!(f, "n^{e}")?,
                (1, false) => write!(f, "{abs}*n")?,
                (_, false) => write!(f, "{abs}*n^{e}")?,
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct Term {
    exp: i64,
    num: String,
    den: String,
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (&exp, c) in &self.terms {
            seq.serialize_element(&Term { exp, num: c.numer().to_string(), den: c.denom().to_string() })?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let terms = Vec::<Term>::deserialize(d)?;
        let mut out = LaurentPoly::zero();
        for t in terms {
            let num: BigInt = t.num.parse().map_err(serde::de::Error::custom)?;
            let den: BigInt = t.den.parse().map_err(serde::de::Error::custom)?;
            if den.is_zero() {
                return Err(serde::de::Error::custom("zero denominator"));
            }
            out.add_assign_ref(&LaurentPoly::monomial(t.exp, BigRational::new(num, den)));
        }
        Ok(out)
    }
}

/// A linear combination of diagrams of one family on `k` strands.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Element {
    k: usize,
    family: Family,
    combo: BTreeMap<Diagram, LaurentPoly>,
}

#[derive(Serialize)]
struct ElementTerm<'a> {
    coeff: &'a LaurentPoly,
    diagram: &'a Diagram,
}

impl Serialize for Element {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.combo.len()))?;
        for (diagram, coeff) in &self.combo {
            seq.serialize_element(&ElementTerm { coeff, diagram })?;
        }
        seq.end()
    }
}

impl Element {
    pub fn zero(k: usize, family: Family) -> Self {
        Element { k, family, combo: BTreeMap::new() }
    }

    /// `c d`, rejecting diagrams outside the family.
    pub fn term(family: Family, d: Diagram, c: LaurentPoly) -> Result<Self> {
        if d.in_family(family) {
            let mut e = Self::zero(d.k(), family);
            if !c.is_zero() {
                e.combo.insert(d, c);
            }
            Ok(e)
        } else {
            Err(Error::NotInFamily { diagram: d.to_string(), family })
        }
    }

    pub fn from_diagram(family: Family, d: Diagram) -> Result<Self> {
        Self::term(family, d, LaurentPoly::one())
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn terms(&self) -> &BTreeMap<Diagram, LaurentPoly> {
        &self.combo
    }

    pub fn is_zero(&self) -> bool {
        self.combo.is_empty()
    }

    fn check(&self, other: &Element) -> Result<()> {
        if self.k != other.k || self.family != other.family {
            return Err(Error::AlgebraMismatch);
        }
        Ok(())
    }

    fn accumulate(&mut self, d: Diagram, c: LaurentPoly) {
        if let Some(slot) = self.combo.get_mut(&d) {
            slot.add_assign_ref(&c);
            if slot.is_zero() {
                self.combo.remove(&d);
            }
        } else if !c.is_zero() {
            self.combo.insert(d, c);
        }
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut out = Self::zero(self.k, self.family);
        for (d, v) in &self.combo {
            let p = v * c;
            if !p.is_zero() {
                out.combo.insert(d.clone(), p);
            }
        }
        out
    }

    pub fn add(&self, other: &Element) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (d, c) in &other.combo {
            out.accumulate(d.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Element) -> Result<Self> {
        self.add(&other.scale(&LaurentPoly::from_int(-1)))
    }

    /// Bilinear extension of `d1 d2 = n^l (d1 o d2)`.
    pub fn multiply(&self, other: &Element) -> Result<Self> {
        self.check(other)?;
        let mut out = Self::zero(self.k, self.family);
        for (d1, c1) in &self.combo {
            for (d2, c2) in &other.combo {
                let r = d1.concat(d2)?;
                out.accumulate(r.product, (c1 * c2).shift(r.deleted as i64));
            }
        }
        Ok(out)
    }

    /// Substitutes `n = n0` in every coefficient.
    pub fn evaluate(&self, n0: &Rational) -> Result<BTreeMap<Diagram, Rational>> {
        let mut out = BTreeMap::new();
        for (d, c) in &self.combo {
            let v = c.evaluate(n0)?;
            if !v.is_zero() {
                out.insert(d.clone(), v);
            }
        }
        Ok(out)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.combo.is_empty() {
            return write!(f, "0");
        }
        for (i, (d, c)) in self.combo.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if c.terms().len() > 1 {
                write!(f, "({c}) * <{d}>")?;
            } else {
                write!(f, "{c} * <{d}>")?;
            }
        }
        Ok(())
    }
}

/// Sparse matrix with Laurent polynomial entries. Serializes as dense rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), LaurentPoly>,
}

impl LaurentMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        LaurentMatrix { rows, cols, entries: BTreeMap::new() }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries.insert((i, i), LaurentPoly::one());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> LaurentPoly {
        self.entries.get(&(i, j)).cloned().unwrap_or_default()
    }

    /// Nonzero entries keyed by `(row, column)`.
    pub fn entries(&self) -> &BTreeMap<(usize, usize), LaurentPoly> {
        &self.entries
    }

    pub fn add_to(&mut self, i: usize, j: usize, v: &LaurentPoly) {
        assert!(i < self.rows && j < self.cols, "entry out of bounds");
        if let Some(slot) = self.entries.get_mut(&(i, j)) {
            slot.add_assign_ref(v);
            if slot.is_zero() {
                self.entries.remove(&(i, j));
            }
        } else if !v.is_zero() {
            self.entries.insert((i, j), v.clone());
        }
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut out = Self::zeros(self.rows, self.cols);
        for (&(i, j), v) in &self.entries {
            out.add_to(i, j, &(v * c));
        }
        out
    }

    pub fn add(&self, other: &LaurentMatrix) -> Result<Self> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::SizeMismatch { left: self.rows, right: other.rows });
        }
        let mut out = self.clone();
        for (&(i, j), v) in &other.entries {
            out.add_to(i, j, v);
        }
        Ok(out)
    }

    pub fn mul(&self, other: &LaurentMatrix) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::SizeMismatch { left: self.cols, right: other.rows });
        }
        let mut by_row: BTreeMap<usize, Vec<(usize, &LaurentPoly)>> = BTreeMap::new();
        for (&(i, j), v) in &other.entries {
            by_row.entry(i).or_default().push((j, v));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for (&(i, l), a) in &self.entries {
            if let Some(row) = by_row.get(&l) {
                for &(j, b) in row {
                    out.add_to(i, j, &(a * b));
                }
            }
        }
        Ok(out)
    }

    pub fn trace(&self) -> LaurentPoly {
        let mut t = LaurentPoly::zero();
        for (&(i, j), v) in &self.entries {
            if i == j {
                t.add_assign_ref(v);
            }
        }
        t
    }

    pub fn to_dense(&self) -> Vec<Vec<LaurentPoly>> {
        let mut d = vec![vec![LaurentPoly::zero(); self.cols]; self.rows];
        for (&(i, j), v) in &self.entries {
            d[i][j] = v.clone();
        }
        d
    }
}

impl Serialize for LaurentMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_dense().serialize(s)
    }
}

impl fmt::Display for LaurentMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let dense: Vec<Vec<String>> =
            self.to_dense().iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect();
        let width = dense.iter().flatten().map(String::len).max().unwrap_or(1);
        for row in dense {
            let cells: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            writeln!(f, "{}", cells.join("  "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::GenKind;

    #[test]
    fn laurent_arithmetic() {
        let n = LaurentPoly::n_pow(1);
        let ninv = LaurentPoly::n_pow(-1);
        let s = &n + &ninv;
        assert_eq!(s.evaluate(&int(2)).unwrap(), rat(5, 2));
        assert_eq!(ninv.evaluate(&int(0)), Err(Error::ZeroSubstitutionWithNegativeExponent));
        assert!((&s - &s).is_zero());
        assert_eq!(&n * &ninv, LaurentPoly::one());
        assert_eq!(s.to_string(), "n + n^-1");
        assert_eq!((-&LaurentPoly::monomial(2, rat(3, 2))).to_string(), "-3/2*n^2");
    }

    #[test]
    fn laurent_json_round_trip() {
        let p = &LaurentPoly::monomial(-2, rat(-1, 3)) + &LaurentPoly::from_int(4);
        let j = serde_json::to_string(&p).unwrap();
        assert_eq!(j, r#"[{"exp":-2,"num":"-1","den":"3"},{"exp":0,"num":"4","den":"1"}]"#);
        assert_eq!(serde_json::from_str::<LaurentPoly>(&j).unwrap(), p);
    }

    #[test]
    fn element_examples() {
        let f = Family::Partition;
        let p = Diagram::generator(GenKind::P, 2, 3).unwrap();
        let e = Element::from_diagram(f, p.clone()).unwrap();
        assert!(e.add(&e.scale(&LaurentPoly::from_int(-1))).unwrap().is_zero());
        let sq = e.multiply(&e).unwrap();
        assert_eq!(sq, Element::term(f, p.clone(), LaurentPoly::n_pow(1)).unwrap());
        let id = Element::from_diagram(f, Diagram::identity(3)).unwrap();
        assert_eq!(id.multiply(&e).unwrap(), e);
        let mixed = Element::term(f, p.clone(), LaurentPoly::n_pow(1))
            .unwrap()
            .add(&Element::term(f, p.clone(), LaurentPoly::n_pow(-1)).unwrap())
            .unwrap();
        assert_eq!(mixed.terms()[&p], &LaurentPoly::n_pow(1) + &LaurentPoly::n_pow(-1));
        let sum = e.add(&id).unwrap();
        assert_eq!(sum.terms().len(), 2);
        assert!(Element::from_diagram(Family::Brauer, p).is_err());
        assert_eq!(id.add(&Element::zero(3, Family::Brauer)), Err(Error::AlgebraMismatch));
        let nine = Element::term(f, Diagram::identity(3), LaurentPoly::n_pow(2)).unwrap();
        assert_eq!(nine.evaluate(&int(3)).unwrap()[&Diagram::identity(3)], int(9));
    }

    #[test]
    fn matrix_basics() {
        let mut a = LaurentMatrix::zeros(2, 2);
        a.add_to(0, 1, &LaurentPoly::n_pow(1));
        a.add_to(1, 0, &LaurentPoly::n_pow(-1));
        let sq = a.mul(&a).unwrap();
        assert_eq!(sq, LaurentMatrix::identity(2));
        assert_eq!(a.trace(), LaurentPoly::zero());
        assert_eq!(sq.trace(), LaurentPoly::from_int(2));
        assert!(a.mul(&LaurentMatrix::zeros(3, 3)).is_err());
    }
}
