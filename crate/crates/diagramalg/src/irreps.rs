//! Irreducible modules, built two ways.
//!
//! The twisted model has basis `w (x) n_t` with `w` a symmetric m-diagram and
//! `t` a standard tableau of shape `lambda*`. A diagram acts by conjugating `w`
//! and twisting `t` by the induced permutation of propagating blocks.
//!
//! The tableau model has basis `N_T` with `T` a standard set-partition
//! tableau, acted on combinatorially and straightened with Garnir relations.
//! The two models are identified by placing the `i`-th propagating block of
//! `w` (max-entry order) where `t` has entry `i`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Mutex;

use num_bigint::BigInt;
use num_traits::One;
use petgraph::unionfind::UnionFind;
use serde::{Deserialize, Serialize};

use crate::coeff::{Element, LaurentMatrix, LaurentPoly};
use crate::diagrams::{set_partitions, Diagram, Family};
use crate::partitions::{binom, double_factorial, lambda_stars, num_syt, rank_set, stirling2, IntPartition};
use crate::symrep::{standard_tableaux, Permutation, Straightener, YoungTableau};
use crate::{Error, Result};

fn max_entry(block: &[usize]) -> usize {
    *block.iter().max().expect("nonempty block")
}

fn sort_by_max(blocks: &mut [Vec<usize>]) {
    for b in blocks.iter_mut() {
        b.sort_unstable();
    }
    blocks.sort_by_key(|b| max_entry(b));
}

fn fmt_block(b: &[usize]) -> String {
    format!("{{{}}}", b.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
}

/// Largest `k` for symmetric-diagram and tableau enumeration
/// (`DIAGRAMALG_CAP` overrides the default of 10).
pub fn symmetric_cap() -> usize {
    std::env::var("DIAGRAMALG_CAP").ok().and_then(|s| s.trim().parse().ok()).unwrap_or(10)
}

/// A diagram equal to its mirror image whose propagating blocks are each
/// joined to their own mirror image. Stored as its top row (blocks in
/// max-entry order) plus a flag for each propagating block.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SymmetricMDiagram {
    k: usize,
    top: Vec<Vec<usize>>,
    propagating: Vec<bool>,
}

impl SymmetricMDiagram {
    /// `top` must partition `1..=k`; `propagating` lists the blocks that propagate.
    pub fn new(k: usize, top: Vec<Vec<usize>>, propagating: &[Vec<usize>]) -> Result<Self> {
        let mut top = top;
        sort_by_max(&mut top);
        let mut seen = vec![false; k + 1];
        for &x in top.iter().flatten() {
            if x == 0 || x > k {
                return Err(Error::IndexOutOfRange { index: x, max: k });
            }
            if seen[x] {
                return Err(Error::DuplicateVertex(x.to_string()));
            }
            seen[x] = true;
        }
        if let Some(x) = (1..=k).find(|&x| !seen[x]) {
            return Err(Error::MissingVertex(x.to_string()));
        }
        let mut props: Vec<Vec<usize>> = propagating.to_vec();
        for b in &mut props {
            b.sort_unstable();
        }
        let flags: Vec<bool> = top.iter().map(|b| props.contains(b)).collect();
        if flags.iter().filter(|&&f| f).count() != props.len() {
            return Err(Error::InvalidParameter("propagating blocks must be blocks of the top row".into()));
        }
        Ok(SymmetricMDiagram { k, top, propagating: flags })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn m(&self) -> usize {
        self.propagating.iter().filter(|&&p| p).count()
    }

    /// Top-row blocks in max-entry order.
    pub fn top(&self) -> &[Vec<usize>] {
        &self.top
    }

    pub fn is_block_propagating(&self, i: usize) -> bool {
        self.propagating[i]
    }

    /// Propagating blocks in max-entry order.
    pub fn propagating_blocks(&self) -> Vec<&Vec<usize>> {
        self.top.iter().zip(&self.propagating).filter(|(_, &p)| p).map(|(b, _)| b).collect()
    }

    pub fn non_propagating_blocks(&self) -> Vec<&Vec<usize>> {
        self.top.iter().zip(&self.propagating).filter(|(_, &p)| !p).map(|(b, _)| b).collect()
    }

    /// The full symmetric diagram on `2k` vertices.
    pub fn to_diagram(&self) -> Diagram {
        let k = self.k;
        let mut blocks = Vec::new();
        for (b, &p) in self.top.iter().zip(&self.propagating) {
            let mirror: Vec<usize> = b.iter().map(|&x| x + k).collect();
            if p {
                blocks.push(b.iter().copied().chain(mirror).collect());
            } else {
                blocks.push(b.clone());
                blocks.push(mirror);
            }
        }
        Diagram::from_blocks(k, blocks).expect("symmetric diagram is a set partition")
    }

    /// Recognises a symmetric m-diagram, or returns `None`.
    pub fn from_diagram(d: &Diagram) -> Option<Self> {
        let k = d.k();
        let mut top = Vec::new();
        let mut props = Vec::new();
        for b in d.blocks() {
            let tops: Vec<usize> = b.iter().copied().filter(|&v| v <= k).collect();
            let bots: Vec<usize> = b.iter().filter(|&&v| v > k).map(|&v| v - k).collect();
            match (tops.is_empty(), bots.is_empty()) {
                (false, false) => {
                    if tops != bots {
                        return None;
                    }
                    props.push(tops.clone());
                    top.push(tops);
                }
                (false, true) => top.push(tops),
                _ => {}
            }
        }
        let w = SymmetricMDiagram::new(k, top, &props).ok()?;
        (w.to_diagram() == *d).then_some(w)
    }
}

impl fmt::Display for SymmetricMDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .top
            .iter()
            .zip(&self.propagating)
            .map(|(b, &p)| if p { format!("{}*", fmt_block(b)) } else { fmt_block(b) })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Every symmetric m-diagram of the family, in canonical order.
pub fn enumerate_symmetric(f: Family, k: usize, m: usize) -> Result<Vec<SymmetricMDiagram>> {
    if !rank_set(f, k).contains(&m) {
        return Err(Error::InvalidRank { family: f, k, m });
    }
    let cap = symmetric_cap();
    if k > cap {
        return Err(Error::CapExceeded { k, cap });
    }
    let mut out = Vec::new();
    for mut top in set_partitions(k) {
        sort_by_max(&mut top);
        let nb = top.len();
        if m > nb {
            continue;
        }
        for_each_subset(nb, m, &mut |chosen| {
            let mut flags = vec![false; nb];
            for &i in chosen {
                flags[i] = true;
            }
            let w = SymmetricMDiagram { k, top: top.clone(), propagating: flags };
            if w.to_diagram().in_family(f) {
                out.push(w);
            }
        });
    }
    out.sort();
    Ok(out)
}

/// Closed-form count of symmetric m-diagrams, without enumerating.
pub fn symmetric_count(f: Family, k: usize, m: usize) -> Result<BigInt> {
    if !rank_set(f, k).contains(&m) {
        return Err(Error::InvalidRank { family: f, k, m });
    }
    let (ki, mi) = (k as i64, m as i64);
    Ok(match f {
        Family::Partition => (m..=k).map(|t| stirling2(k, t) * binom(t as i64, mi)).sum(),
        Family::Brauer => binom(ki, mi) * double_factorial(ki - mi - 1),
        Family::RookBrauer => (0..=(k - m) / 2)
            .map(|t| binom(ki, mi) * binom(ki - mi, 2 * t as i64) * double_factorial(2 * t as i64 - 1))
            .sum(),
        Family::Rook | Family::PlanarRook => binom(ki, mi),
        Family::TemperleyLieb | Family::Motzkin => crate::characters::f_coeff_planar(f, k, m)?,
        Family::SymmetricGroup => BigInt::one(),
        Family::PlanarPartition => return Err(Error::FamilyUnsupported(f)),
    })
}

/// `|W^m| * f^{lambda*}`, the dimension of the irreducible module.
pub fn dimension(f: Family, k: usize, lambda_star: &IntPartition) -> Result<BigInt> {
    if !lambda_stars(f, k)?.contains(lambda_star) {
        return Err(Error::LabelNotInFamily { family: f, k, lambda_star: lambda_star.to_string() });
    }
    Ok(symmetric_count(f, k, lambda_star.size())? * num_syt(lambda_star))
}

fn for_each_subset(n: usize, m: usize, f: &mut dyn FnMut(&[usize])) {
    fn rec(start: usize, n: usize, m: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if cur.len() == m {
            f(cur);
            return;
        }
        for i in start..n {
            if n - i < m - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, m, cur, f);
            cur.pop();
        }
    }
    rec(0, n, m, &mut Vec::new(), f);
}

/// Result of conjugating a symmetric diagram `w` by `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Conjugation {
    /// `d o w o d^T`.
    pub w_prime: SymmetricMDiagram,
    pub m_prime: usize,
    /// Components removed while forming `d o w`.
    pub deleted: usize,
    /// The permutation of propagating blocks, defined when no rank is lost.
    pub twist: Option<Permutation>,
}

/// Conjugates `w` by `d`, recording the deleted count and the twist.
pub fn conjugate(d: &Diagram, w: &SymmetricMDiagram) -> Result<Conjugation> {
    if d.k() != w.k {
        return Err(Error::RankMismatch { left: d.k(), right: w.k });
    }
    let k = w.k;
    let dw = d.concat(&w.to_diagram())?;
    let wp = dw.product.concat(&d.transpose())?.product;
    let w_prime = SymmetricMDiagram::from_diagram(&wp)
        .ok_or_else(|| Error::InvalidParameter(format!("{wp} is not symmetric")))?;
    let m_prime = w_prime.m();
    let m = w.m();
    let twist = if m_prime == m {
        let labels = dw.product.labels();
        let wp_props = w_prime.propagating_blocks();
        let mut images = Vec::with_capacity(m);
        for b in w.propagating_blocks() {
            let block = &dw.product.blocks()[labels[k + b[0] - 1]];
            let Some(&x) = block.iter().find(|&&v| v <= k) else {
                break;
            };
            match wp_props.iter().position(|pb| pb.contains(&x)) {
                Some(j) => images.push(j + 1),
                None => break,
            }
        }
        if images.len() == m {
            Permutation::new(images).ok()
        } else {
            None
        }
    } else {
        None
    };
    Ok(Conjugation { w_prime, m_prime, deleted: dw.deleted, twist })
}

/// A vector of the twisted model, keyed by `(w, t)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TwistedVector {
    pub combo: BTreeMap<(SymmetricMDiagram, YoungTableau), LaurentPoly>,
}

impl TwistedVector {
    pub fn basis(w: SymmetricMDiagram, t: YoungTableau) -> Self {
        let mut combo = BTreeMap::new();
        combo.insert((w, t), LaurentPoly::one());
        TwistedVector { combo }
    }

    fn accumulate(&mut self, key: (SymmetricMDiagram, YoungTableau), c: LaurentPoly) {
        let slot = self.combo.entry(key).or_default();
        slot.add_assign_ref(&c);
        self.combo.retain(|_, v| !v.is_zero());
    }
}

/// `d . (w (x) n_t) = n^l (d o w o d^T) (x) sigma_{d,w} n_t`, or zero when rank drops.
pub fn act_twisted(d: &Diagram, v: &TwistedVector) -> Result<TwistedVector> {
    let mut out = TwistedVector::default();
    let mut straighteners: HashMap<IntPartition, Straightener> = HashMap::new();
    for ((w, t), c) in &v.combo {
        let conj = conjugate(d, w)?;
        let Some(sigma) = conj.twist else { continue };
        let st = straighteners.entry(t.shape()).or_insert_with(|| Straightener::new(&t.shape()));
        let moved = t.relabel(&sigma)?;
        for (i, coef) in st.straighten(&moved) {
            let term = c.shift(conj.deleted as i64).scale(&crate::coeff::int(coef));
            out.accumulate((conj.w_prime.clone(), st.basis()[i].clone()), term);
        }
    }
    Ok(out)
}

/// A filling of the skew shape `lambda / [n - |lambda*|]` by the blocks of a set
/// partition of `1..=k`. The first row holds the non-propagating blocks; the
/// body, of shape `lambda*`, holds the propagating ones.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SetPartitionTableau {
    pub lambda_star: IntPartition,
    pub first_row: Vec<Vec<usize>>,
    pub body: Vec<Vec<Vec<usize>>>,
}

impl SetPartitionTableau {
    pub fn k(&self) -> usize {
        self.first_row.iter().chain(self.body.iter().flatten()).map(Vec::len).sum()
    }

    /// Body blocks in reading order.
    pub fn propagating_blocks(&self) -> Vec<&Vec<usize>> {
        self.body.iter().flatten().collect()
    }

    /// Rows and columns of the body, and the first row, increase in max-entry order.
    pub fn is_standard(&self) -> bool {
        let inc = |v: &[Vec<usize>]| v.windows(2).all(|w| max_entry(&w[0]) < max_entry(&w[1]));
        let rows_ok = self.body.iter().all(|r| inc(r));
        let cols_ok =
            self.body.windows(2).all(|w| w[1].iter().enumerate().all(|(c, b)| max_entry(&w[0][c]) < max_entry(b)));
        inc(&self.first_row) && rows_ok && cols_ok
    }
}

impl fmt::Display for SetPartitionTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let row = |r: &[Vec<usize>]| r.iter().map(|b| fmt_block(b)).collect::<Vec<_>>().join(" ");
        write!(f, "{}", row(&self.first_row))?;
        for r in &self.body {
            write!(f, " / {}", row(r))?;
        }
        Ok(())
    }
}

/// Places the `i`-th propagating block of `w` where `t` has entry `i`.
pub fn tableau_from_pair(w: &SymmetricMDiagram, t: &YoungTableau) -> Result<SetPartitionTableau> {
    if t.size() != w.m() {
        return Err(Error::ShapeMismatch);
    }
    let props = w.propagating_blocks();
    Ok(SetPartitionTableau {
        lambda_star: t.shape(),
        first_row: w.non_propagating_blocks().into_iter().cloned().collect(),
        body: t.rows().iter().map(|r| r.iter().map(|&i| props[i - 1].clone()).collect()).collect(),
    })
}

/// Inverse of [`tableau_from_pair`]; `t` need not be standard.
pub fn pair_from_tableau(tab: &SetPartitionTableau) -> Result<(SymmetricMDiagram, YoungTableau)> {
    let k = tab.k();
    let mut props: Vec<Vec<usize>> = tab.propagating_blocks().into_iter().cloned().collect();
    sort_by_max(&mut props);
    let index_of = |b: &Vec<usize>| {
        let mut s = b.clone();
        s.sort_unstable();
        props.iter().position(|p| *p == s).expect("block present") + 1
    };
    let rows: Vec<Vec<usize>> = tab.body.iter().map(|r| r.iter().map(index_of).collect()).collect();
    let t = YoungTableau::new(rows)?;
    if t.shape() != tab.lambda_star {
        return Err(Error::ShapeMismatch);
    }
    let top: Vec<Vec<usize>> = tab.first_row.iter().cloned().chain(props.iter().cloned()).collect();
    Ok((SymmetricMDiagram::new(k, top, &props)?, t))
}

/// Computes `d(T)` and the number of removed components, or `None` when `d`
/// acts as zero (two propagating blocks merge, or one fails to reach the top).
pub fn act_tableau(d: &Diagram, tab: &SetPartitionTableau) -> Result<Option<(SetPartitionTableau, usize)>> {
    let k = tab.k();
    if d.k() != k {
        return Err(Error::RankMismatch { left: d.k(), right: k });
    }
    // nodes 0..k are the top of d, k..2k the bottom of d carrying T's content
    let mut uf = UnionFind::<usize>::new(2 * k);
    for b in d.blocks() {
        for w in b.windows(2) {
            uf.union(w[0] - 1, w[1] - 1);
        }
    }
    // T blocks: body positions first (propagating), then the first row
    let body_pos: Vec<(usize, usize)> =
        tab.body.iter().enumerate().flat_map(|(r, row)| (0..row.len()).map(move |c| (r, c))).collect();
    let t_blocks: Vec<&Vec<usize>> =
        body_pos.iter().map(|&(r, c)| &tab.body[r][c]).chain(tab.first_row.iter()).collect();
    let n_prop = body_pos.len();
    let mut owner = vec![usize::MAX; k + 1];
    for (bi, b) in t_blocks.iter().enumerate() {
        for w in b.windows(2) {
            uf.union(k + w[0] - 1, k + w[1] - 1);
        }
        for &x in b.iter() {
            owner[x] = bi;
        }
    }
    struct Comp {
        tops: Vec<usize>,
        props: Vec<usize>,
    }
    let mut comps: BTreeMap<usize, Comp> = BTreeMap::new();
    for x in 0..2 * k {
        let c = comps.entry(uf.find(x)).or_insert(Comp { tops: Vec::new(), props: Vec::new() });
        if x < k {
            c.tops.push(x + 1);
        } else {
            let bi = owner[x - k + 1];
            if bi < n_prop && !c.props.contains(&bi) {
                c.props.push(bi);
            }
        }
    }
    let mut deleted = 0;
    let mut replaced: Vec<Option<Vec<usize>>> = vec![None; n_prop];
    let mut first_row = Vec::new();
    for comp in comps.into_values() {
        if comp.tops.is_empty() {
            if !comp.props.is_empty() {
                return Ok(None);
            }
            deleted += 1;
            continue;
        }
        match comp.props.as_slice() {
            [] => first_row.push(comp.tops),
            [p] => replaced[*p] = Some(comp.tops),
            _ => return Ok(None),
        }
    }
    sort_by_max(&mut first_row);
    let mut body: Vec<Vec<Vec<usize>>> = tab.body.iter().map(|r| vec![Vec::new(); r.len()]).collect();
    for (i, &(r, c)) in body_pos.iter().enumerate() {
        body[r][c] = replaced[i].take().expect("each propagating block lands in one component");
    }
    Ok(Some((SetPartitionTableau { lambda_star: tab.lambda_star.clone(), first_row, body }, deleted)))
}

/// A vector of the tableau model, keyed by standard tableaux.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TableauVector {
    pub combo: BTreeMap<SetPartitionTableau, LaurentPoly>,
}

impl TableauVector {
    pub fn basis(t: SetPartitionTableau) -> Self {
        let mut combo = BTreeMap::new();
        combo.insert(t, LaurentPoly::one());
        TableauVector { combo }
    }
}

/// Writes `N_T` for any tableau `T` in the standard basis.
fn straighten_tableau(st: &mut Straightener, tab: &SetPartitionTableau) -> Result<Vec<(SetPartitionTableau, i64)>> {
    let (w, t) = pair_from_tableau(tab)?;
    let terms = st.straighten(&t);
    terms.into_iter().map(|(i, c)| Ok((tableau_from_pair(&w, &st.basis()[i])?, c))).collect()
}

/// `d . N_T = n^l N_{d(T)}`, straightened, extended linearly.
pub fn act_natural(d: &Diagram, v: &TableauVector) -> Result<TableauVector> {
    let mut out: BTreeMap<SetPartitionTableau, LaurentPoly> = BTreeMap::new();
    let mut straighteners: HashMap<IntPartition, Straightener> = HashMap::new();
    for (tab, c) in &v.combo {
        let Some((image, deleted)) = act_tableau(d, tab)? else { continue };
        let st = straighteners.entry(tab.lambda_star.clone()).or_insert_with(|| Straightener::new(&tab.lambda_star));
        for (s, coef) in straighten_tableau(st, &image)? {
            let term = c.shift(deleted as i64).scale(&crate::coeff::int(coef));
            out.entry(s).or_default().add_assign_ref(&term);
        }
    }
    out.retain(|_, v| !v.is_zero());
    Ok(TableauVector { combo: out })
}

/// Standard set-partition tableaux of shape `lambda*` with family-legal blocks.
pub fn enumerate_sspt(f: Family, k: usize, lambda_star: &IntPartition) -> Result<Vec<SetPartitionTableau>> {
    check_label(f, k, lambda_star)?;
    let syt = standard_tableaux(lambda_star);
    let mut out = Vec::new();
    for w in enumerate_symmetric(f, k, lambda_star.size())? {
        for t in &syt {
            out.push(tableau_from_pair(&w, t)?);
        }
    }
    Ok(out)
}

fn check_label(f: Family, k: usize, lambda_star: &IntPartition) -> Result<()> {
    if !lambda_stars(f, k)?.contains(lambda_star) {
        return Err(Error::LabelNotInFamily { family: f, k, lambda_star: lambda_star.to_string() });
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum BasisChoice {
    Twisted,
    Tableau,
}

/// One irreducible module with both bases laid out in matching order:
/// basis vector `i * f + j` is `w_i (x) n_{t_j}`, equivalently the tableau
/// built from `(w_i, t_j)`.
pub struct Irrep {
    family: Family,
    k: usize,
    lambda_star: IntPartition,
    diagrams: Vec<SymmetricMDiagram>,
    diagram_index: HashMap<SymmetricMDiagram, usize>,
    tableaux: Vec<SetPartitionTableau>,
    tableau_index: HashMap<SetPartitionTableau, usize>,
    straightener: Mutex<Straightener>,
    perm_cache: Mutex<HashMap<Permutation, Vec<Vec<i64>>>>,
}

impl Irrep {
    pub fn new(f: Family, k: usize, lambda_star: &IntPartition) -> Result<Self> {
        check_label(f, k, lambda_star)?;
        let diagrams = enumerate_symmetric(f, k, lambda_star.size())?;
        let diagram_index = diagrams.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        let straightener = Straightener::new(lambda_star);
        let mut tableaux = Vec::new();
        for w in &diagrams {
            for t in straightener.basis() {
                tableaux.push(tableau_from_pair(w, t)?);
            }
        }
        let tableau_index = tableaux.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
        Ok(Irrep {
            family: f,
            k,
            lambda_star: lambda_star.clone(),
            diagrams,
            diagram_index,
            tableaux,
            tableau_index,
            straightener: Mutex::new(straightener),
            perm_cache: Mutex::new(HashMap::new()),
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn lambda_star(&self) -> &IntPartition {
        &self.lambda_star
    }

    pub fn symmetric_diagrams(&self) -> &[SymmetricMDiagram] {
        &self.diagrams
    }

    pub fn young_tableaux(&self) -> Vec<YoungTableau> {
        self.straightener.lock().expect("lock").basis().to_vec()
    }

    pub fn tableau_basis(&self) -> &[SetPartitionTableau] {
        &self.tableaux
    }

    pub fn dim(&self) -> usize {
        self.tableaux.len()
    }

    fn f(&self) -> usize {
        self.tableaux.len() / self.diagrams.len().max(1)
    }

    fn perm_matrix(&self, sigma: &Permutation) -> Result<Vec<Vec<i64>>> {
        if let Some(m) = self.perm_cache.lock().expect("lock").get(sigma) {
            return Ok(m.clone());
        }
        let m = self.straightener.lock().expect("lock").matrix(sigma)?;
        self.perm_cache.lock().expect("lock").insert(sigma.clone(), m.clone());
        Ok(m)
    }

    fn check_diagram(&self, d: &Diagram) -> Result<()> {
        if d.k() != self.k {
            return Err(Error::RankMismatch { left: d.k(), right: self.k });
        }
        if !d.in_family(self.family) {
            return Err(Error::NotInFamily { diagram: d.to_string(), family: self.family });
        }
        Ok(())
    }

    /// Matrix of a single diagram in the chosen basis.
    pub fn matrix(&self, d: &Diagram, basis: BasisChoice) -> Result<LaurentMatrix> {
        self.check_diagram(d)?;
        match basis {
            BasisChoice::Twisted => self.twisted_matrix(d),
            BasisChoice::Tableau => self.tableau_matrix(d),
        }
    }

    /// Matrix of a linear combination of diagrams.
    pub fn element_matrix(&self, a: &Element, basis: BasisChoice) -> Result<LaurentMatrix> {
        if a.family() != self.family || a.k() != self.k {
            return Err(Error::AlgebraMismatch);
        }
        let mut out = LaurentMatrix::zeros(self.dim(), self.dim());
        for (d, c) in a.terms() {
            out = out.add(&self.matrix(d, basis)?.scale(c))?;
        }
        Ok(out)
    }

    fn twisted_matrix(&self, d: &Diagram) -> Result<LaurentMatrix> {
        let f = self.f();
        let mut out = LaurentMatrix::zeros(self.dim(), self.dim());
        for (wi, w) in self.diagrams.iter().enumerate() {
            let conj = conjugate(d, w)?;
            let Some(sigma) = conj.twist else { continue };
            let row_w = *self.diagram_index.get(&conj.w_prime).ok_or_else(|| Error::NotInFamily {
                diagram: conj.w_prime.to_diagram().to_string(),
                family: self.family,
            })?;
            let pm = self.perm_matrix(&sigma)?;
            let scale = LaurentPoly::n_pow(conj.deleted as i64);
            for (i, row) in pm.iter().enumerate() {
                for (j, &x) in row.iter().enumerate() {
                    if x != 0 {
                        out.add_to(row_w * f + i, wi * f + j, &scale.scale(&crate::coeff::int(x)));
                    }
                }
            }
        }
        Ok(out)
    }

    fn tableau_matrix(&self, d: &Diagram) -> Result<LaurentMatrix> {
        let mut out = LaurentMatrix::zeros(self.dim(), self.dim());
        let mut st = self.straightener.lock().expect("lock");
        for (j, tab) in self.tableaux.iter().enumerate() {
            let Some((image, deleted)) = act_tableau(d, tab)? else { continue };
            let scale = LaurentPoly::n_pow(deleted as i64);
            for (s, coef) in straighten_tableau(&mut st, &image)? {
                let i = *self
                    .tableau_index
                    .get(&s)
                    .ok_or_else(|| Error::NotInFamily { diagram: s.to_string(), family: self.family })?;
                out.add_to(i, j, &scale.scale(&crate::coeff::int(coef)));
            }
        }
        Ok(out)
    }
}
