//! Self-checks bundled for the command line.
//!
//! Each suite compares two independent computations, or a computation against
//! the published reference tables, and reports every disagreement.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::characters::{
    character_oracle, character_table, class_labels, f_coeff, fixed_points, irr_character, table_determinant_check,
    CharacterTable,
};
use crate::coeff::{Element, LaurentPoly};
use crate::diagrams::{enumerate_basis, Diagram, Family};
use crate::irreps::{dimension, enumerate_symmetric, symmetric_count, BasisChoice, Irrep};
use crate::partitions::{lambda_stars, num_syt, partitions_of, rank_set, IntPartition};
use crate::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    RingAxioms,
    ModuleAxiom,
    BasisEquivalence,
    Wedderburn,
    FixedpointVsFormula,
    TableRegression,
    Determinant,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::RingAxioms,
        Suite::ModuleAxiom,
        Suite::BasisEquivalence,
        Suite::Wedderburn,
        Suite::FixedpointVsFormula,
        Suite::TableRegression,
        Suite::Determinant,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::RingAxioms => "ring-axioms",
            Suite::ModuleAxiom => "module-axiom",
            Suite::BasisEquivalence => "basis-equivalence",
            Suite::Wedderburn => "wedderburn",
            Suite::FixedpointVsFormula => "fixedpoint-vs-formula",
            Suite::TableRegression => "table-regression",
            Suite::Determinant => "determinant",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Options {
    /// Random samples for the ring and module suites.
    pub samples: usize,
    pub seed: u64,
}

impl Default for Options {
    fn default() -> Self {
        Options { samples: 50, seed: 0 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub suite: Suite,
    pub family: Family,
    pub k: usize,
    pub checks: usize,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
}

impl Report {
    fn new(suite: Suite, family: Family, k: usize) -> Self {
        Report { suite, family, k, checks: 0, failures: Vec::new(), notes: Vec::new() }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ok() {
            write!(f, "OK {} {} k={}: {} checks", self.suite, self.family, self.k, self.checks)?;
        } else {
            write!(
                f,
                "FAIL {} {} k={}: {} of {} checks failed",
                self.suite,
                self.family,
                self.k,
                self.failures.len(),
                self.checks
            )?;
        }
        for n in &self.notes {
            write!(f, "\n  note: {n}")?;
        }
        for x in &self.failures {
            write!(f, "\n  - {x}")?;
        }
        Ok(())
    }
}

pub fn run(suite: Suite, f: Family, k: usize, opts: &Options) -> Result<Report> {
    let mut r = Report::new(suite, f, k);
    match suite {
        Suite::RingAxioms => ring_axioms(&mut r, opts)?,
        Suite::ModuleAxiom => module_axiom(&mut r, opts)?,
        Suite::BasisEquivalence => basis_equivalence(&mut r)?,
        Suite::Wedderburn => wedderburn(&mut r)?,
        Suite::FixedpointVsFormula => fixedpoint_vs_formula(&mut r)?,
        Suite::TableRegression => table_regression(&mut r)?,
        Suite::Determinant => {
            let c = table_determinant_check(f, k)?;
            r.check(c.ok, || format!("|det| = {} but the parts product is {}", c.lhs, c.rhs));
        }
    }
    Ok(r)
}

fn random_poly(rng: &mut StdRng) -> LaurentPoly {
    let mut p = LaurentPoly::zero();
    for _ in 0..rng.random_range(1..=2) {
        let c = rng.random_range(-3i64..=3);
        p.add_assign_ref(&LaurentPoly::monomial(rng.random_range(-1..=2), crate::coeff::int(c)));
    }
    p
}

fn random_element(f: Family, basis: &[Diagram], rng: &mut StdRng, terms: usize) -> Result<Element> {
    let mut e = Element::zero(basis[0].k(), f);
    for _ in 0..terms {
        let d = basis[rng.random_range(0..basis.len())].clone();
        e = e.add(&Element::term(f, d, random_poly(rng))?)?;
    }
    Ok(e)
}

fn ring_axioms(r: &mut Report, opts: &Options) -> Result<()> {
    let (f, k) = (r.family, r.k);
    let basis = enumerate_basis(f, k)?;
    let mut rng = StdRng::seed_from_u64(opts.seed);
    let one = Element::from_diagram(f, Diagram::identity(k))?;
    for _ in 0..opts.samples {
        let a = random_element(f, &basis, &mut rng, 2)?;
        let b = random_element(f, &basis, &mut rng, 2)?;
        let c = random_element(f, &basis, &mut rng, 2)?;
        let lhs = a.multiply(&b)?.multiply(&c)?;
        let rhs = a.multiply(&b.multiply(&c)?)?;
        r.check(lhs == rhs, || format!("(ab)c != a(bc) for a = {a}, b = {b}, c = {c}"));
        let lhs = a.multiply(&b.add(&c)?)?;
        let rhs = a.multiply(&b)?.add(&a.multiply(&c)?)?;
        r.check(lhs == rhs, || format!("a(b+c) != ab+ac for a = {a}, b = {b}, c = {c}"));
        let lhs = a.add(&b)?.multiply(&c)?;
        let rhs = a.multiply(&c)?.add(&b.multiply(&c)?)?;
        r.check(lhs == rhs, || format!("(a+b)c != ac+bc for a = {a}, b = {b}, c = {c}"));
        r.check(one.multiply(&a)? == a && a.multiply(&one)? == a, || format!("identity fails on {a}"));
    }
    Ok(())
}

fn irreps_of(f: Family, k: usize) -> Result<Vec<Irrep>> {
    lambda_stars(f, k)?.iter().map(|l| Irrep::new(f, k, l)).collect()
}

fn module_axiom(r: &mut Report, opts: &Options) -> Result<()> {
    let (f, k) = (r.family, r.k);
    let basis = enumerate_basis(f, k)?;
    let irreps = irreps_of(f, k)?;
    let mut rng = StdRng::seed_from_u64(opts.seed);
    for _ in 0..opts.samples {
        let a = Element::from_diagram(f, basis[rng.random_range(0..basis.len())].clone())?;
        let b = Element::from_diagram(f, basis[rng.random_range(0..basis.len())].clone())?;
        let ab = a.multiply(&b)?;
        for irr in &irreps {
            for choice in [BasisChoice::Twisted, BasisChoice::Tableau] {
                let lhs = irr.element_matrix(&a, choice)?.mul(&irr.element_matrix(&b, choice)?)?;
                let rhs = irr.element_matrix(&ab, choice)?;
                r.check(lhs == rhs, || {
                    format!("M(a)M(b) != M(ab) on {} ({choice:?}) for a = {a}, b = {b}", irr.lambda_star())
                });
            }
        }
    }
    Ok(())
}

fn basis_equivalence(r: &mut Report) -> Result<()> {
    let (f, k) = (r.family, r.k);
    let irreps = irreps_of(f, k)?;
    let mut gens = f.generators(k);
    gens.push(Diagram::identity(k));
    for irr in &irreps {
        for g in &gens {
            let tw = irr.matrix(g, BasisChoice::Twisted)?;
            let tb = irr.matrix(g, BasisChoice::Tableau)?;
            r.check(tw == tb, || format!("bases disagree on {} for <{g}>", irr.lambda_star()));
        }
    }
    Ok(())
}

fn wedderburn(r: &mut Report) -> Result<()> {
    let (f, k) = (r.family, r.k);
    let mut total = BigInt::zero();
    for l in lambda_stars(f, k)? {
        let m = l.size();
        let enumerated = BigInt::from(enumerate_symmetric(f, k, m)?.len());
        let formula = symmetric_count(f, k, m)?;
        r.check(enumerated == formula, || {
            format!("{enumerated} symmetric {m}-diagrams enumerated, closed form gives {formula}")
        });
        let dim = enumerated * num_syt(&l);
        let closed = dimension(f, k, &l)?;
        r.check(dim == closed, || format!("dimension of {l}: {dim} vs closed form {closed}"));
        total += &dim * &dim;
    }
    let basis = BigInt::from(enumerate_basis(f, k)?.len());
    r.check(total == basis, || format!("sum of squared dimensions {total} != basis size {basis}"));
    Ok(())
}

fn fixedpoint_vs_formula(r: &mut Report) -> Result<()> {
    let (f, k) = (r.family, r.k);
    let kappas = if f.is_planar() { vec![IntPartition::ones(k)] } else { partitions_of(k) };
    for kappa in &kappas {
        for m in rank_set(f, k) {
            for (mu, fixed) in fixed_points(f, k, m, kappa)? {
                let formula = f_coeff(f, kappa, &mu)?;
                let count = BigInt::from(fixed.len());
                r.check(formula == count, || format!("F^({mu},{kappa}) = {formula} but {count} fixed points"));
            }
        }
    }
    for l in lambda_stars(f, k)? {
        for label in class_labels(f, k)? {
            let closed = irr_character(f, k, &l, &label)?;
            let trace = character_oracle(f, k, &l, &label)?;
            let want = LaurentPoly::constant(closed.clone().into());
            r.check(trace == want, || {
                format!("chi^{l} on ({}, s={}): trace {trace}, formula {closed}", label.kappa, label.s)
            });
        }
    }
    Ok(())
}

/// A character table as printed in the literature.
#[derive(Clone, Debug)]
pub struct PublishedTable {
    pub family: Family,
    pub k: usize,
    pub values: Vec<Vec<i64>>,
    pub block: Vec<Vec<i64>>,
    pub f_matrix: Vec<Vec<i64>>,
}

/// A published cell that disagrees with the symmetric group character table.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Erratum {
    pub family: Family,
    pub k: usize,
    pub row: usize,
    pub col: usize,
    pub published: i64,
    pub corrected: i64,
}

/// `chi^{[2,1,1]}` on a 4-cycle is `+1`; the printed `B_4` table has 0 in
/// both `Xi` and the block factor.
pub const ERRATA: [Erratum; 1] = [Erratum { family: Family::Brauer, k: 4, row: 6, col: 3, published: 0, corrected: 1 }];

fn s_tables(ms: &[usize], size: usize) -> Vec<Vec<i64>> {
    let s2 = [[1, 1], [-1, 1]];
    let s3 = [[1, 1, 1], [-1, 0, 2], [1, -1, 1]];
    let s4 = [[1, 1, 1, 1, 1], [-1, 0, -1, 1, 3], [0, -1, 2, 0, 2], [0, 0, -1, -1, 3], [-1, 1, 1, -1, 1]];
    let mut out = vec![vec![0; size]; size];
    let mut at = 0;
    for &m in ms {
        let t: Vec<Vec<i64>> = match m {
            0 | 1 => vec![vec![1]],
            2 => s2.iter().map(|r| r.to_vec()).collect(),
            3 => s3.iter().map(|r| r.to_vec()).collect(),
            _ => s4.iter().map(|r| r.to_vec()).collect(),
        };
        for (i, row) in t.iter().enumerate() {
            out[at + i][at..at + row.len()].copy_from_slice(row);
        }
        at += t.len();
    }
    out
}

fn rows(v: &[&[i64]]) -> Vec<Vec<i64>> {
    v.iter().map(|r| r.to_vec()).collect()
}

/// The four published tables, verbatim (errata not applied).
pub fn published_tables() -> Vec<PublishedTable> {
    let s3_tail: [&[i64]; 3] = [&[0, 0, 0, 0, 1, 1, 1], &[0, 0, 0, 0, -1, 0, 2], &[0, 0, 0, 0, 1, -1, 1]];
    let unit_tail: [&[i64]; 3] = [&[0, 0, 0, 0, 1, 0, 0], &[0, 0, 0, 0, 0, 1, 0], &[0, 0, 0, 0, 0, 0, 1]];
    let with_tail = |head: [&'static [i64]; 4], tail: [&'static [i64]; 3]| {
        let mut v = rows(&head);
        v.extend(rows(&tail));
        v
    };
    let mut b4_block = s_tables(&[0, 2, 4], 8);
    b4_block[6][3] = 0;
    vec![
        PublishedTable {
            family: Family::Partition,
            k: 3,
            values: with_tail(
                [&[1, 1, 2, 2, 2, 3, 5], &[0, 1, 1, 3, 1, 4, 10], &[0, 0, 1, 1, 0, 2, 6], &[0, 0, -1, 1, 0, 0, 6]],
                s3_tail,
            ),
            block: s_tables(&[0, 1, 2, 3], 7),
            f_matrix: with_tail(
                [&[1, 1, 2, 2, 2, 3, 5], &[0, 1, 1, 3, 1, 4, 10], &[0, 0, 1, 0, 0, 1, 0], &[0, 0, 0, 1, 0, 1, 6]],
                unit_tail,
            ),
        },
        PublishedTable {
            family: Family::RookBrauer,
            k: 3,
            values: with_tail(
                [&[1, 1, 2, 2, 1, 2, 4], &[0, 1, 0, 2, 0, 2, 6], &[0, 0, 1, 1, 0, 1, 3], &[0, 0, -1, 1, 0, -1, 3]],
                s3_tail,
            ),
            block: s_tables(&[0, 1, 2, 3], 7),
            f_matrix: with_tail(
                [&[1, 1, 2, 2, 1, 2, 4], &[0, 1, 0, 2, 0, 2, 6], &[0, 0, 1, 0, 0, 1, 0], &[0, 0, 0, 1, 0, 0, 3]],
                unit_tail,
            ),
        },
        PublishedTable {
            family: Family::Rook,
            k: 3,
            values: with_tail(
                [&[1, 1, 1, 1, 1, 1, 1], &[0, 1, 0, 2, 0, 1, 3], &[0, 0, 1, 1, 0, 1, 3], &[0, 0, -1, 1, 0, -1, 3]],
                s3_tail,
            ),
            block: s_tables(&[0, 1, 2, 3], 7),
            f_matrix: with_tail(
                [&[1, 1, 1, 1, 1, 1, 1], &[0, 1, 0, 2, 0, 1, 3], &[0, 0, 1, 0, 0, 1, 0], &[0, 0, 0, 1, 0, 0, 3]],
                unit_tail,
            ),
        },
        PublishedTable {
            family: Family::Brauer,
            k: 4,
            values: rows(&[
                &[1, 1, 1, 1, 0, 3, 1, 3],
                &[0, 1, 1, 0, 0, 2, 2, 6],
                &[0, -1, 1, 0, 0, -2, 0, 6],
                &[0, 0, 0, 1, 1, 1, 1, 1],
                &[0, 0, 0, -1, 0, -1, 1, 3],
                &[0, 0, 0, 0, -1, 2, 0, 2],
                &[0, 0, 0, 0, 0, -1, -1, 3],
                &[0, 0, 0, -1, 1, 1, -1, 1],
            ]),
            block: b4_block,
            f_matrix: rows(&[
                &[1, 1, 1, 1, 0, 3, 1, 3],
                &[0, 1, 0, 0, 0, 2, 1, 0],
                &[0, 0, 1, 0, 0, 0, 1, 6],
                &[0, 0, 0, 1, 0, 0, 0, 0],
                &[0, 0, 0, 0, 1, 0, 0, 0],
                &[0, 0, 0, 0, 0, 1, 0, 0],
                &[0, 0, 0, 0, 0, 0, 1, 0],
                &[0, 0, 0, 0, 0, 0, 0, 1],
            ]),
        },
    ]
}

impl PublishedTable {
    /// The table with every erratum for it applied to `values` and `block`.
    pub fn corrected(&self) -> PublishedTable {
        let mut t = self.clone();
        for e in ERRATA.iter().filter(|e| e.family == self.family && e.k == self.k) {
            t.values[e.row][e.col] = e.corrected;
            t.block[e.row][e.col] = e.corrected;
        }
        t
    }
}

fn to_i64(m: &[Vec<BigInt>]) -> Vec<Vec<i64>> {
    m.iter().map(|r| r.iter().map(|x| i64::try_from(x).expect("small table entry")).collect()).collect()
}

/// Cells where `computed` differs from `reference`, as `(row, col, computed, reference)`.
pub fn table_diff(computed: &[Vec<BigInt>], reference: &[Vec<i64>]) -> Vec<(usize, usize, i64, i64)> {
    let c = to_i64(computed);
    let mut out = Vec::new();
    if c.len() != reference.len() {
        out.push((c.len(), 0, 0, reference.len() as i64));
        return out;
    }
    for (i, (a, b)) in c.iter().zip(reference).enumerate() {
        for j in 0..a.len().max(b.len()) {
            let (x, y) = (a.get(j).copied().unwrap_or(0), b.get(j).copied().unwrap_or(0));
            if x != y || a.len() != b.len() {
                out.push((i, j, x, y));
            }
        }
    }
    out
}

fn table_regression(r: &mut Report) -> Result<()> {
    let (f, k) = (r.family, r.k);
    let t: CharacterTable = character_table(f, k)?;
    r.check(t.factorization_holds(), || "table != block * F".into());
    let n = t.f_matrix.len();
    let unitriangular = t.f_matrix.len() == t.cols.len()
        && (0..n).all(|i| {
            t.f_matrix[i][i].is_one()
                && (0..i).all(|j| t.f_matrix[i][j].is_zero())
                && t.f_matrix[i].iter().all(|x| *x >= BigInt::zero())
        });
    r.check(unitriangular, || "F is not nonnegative unitriangular".into());
    if let Some(published) = published_tables().into_iter().find(|p| p.family == f && p.k == k) {
        for e in ERRATA.iter().filter(|e| e.family == f && e.k == k) {
            r.notes.push(format!(
                "published entry ({}, {}) reads {}; the symmetric group character is {}",
                t.rows[e.row], t.cols[e.col].kappa, e.published, e.corrected
            ));
        }
        let want = published.corrected();
        for (name, got, reference) in
            [("values", &t.values, &want.values), ("block", &t.block, &want.block), ("F", &t.f_matrix, &want.f_matrix)]
        {
            let diff = table_diff(got, reference);
            r.check(diff.is_empty(), || format!("{name} differs from the published table at {diff:?}"));
        }
    } else {
        r.notes.push(format!("no published table for {f} k={k}; checked the factorization only"));
    }
    Ok(())
}
