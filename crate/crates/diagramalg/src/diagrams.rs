//! Set-partition diagrams on two rows of `k` vertices.
//!
//! Vertices are stored as integers `1..=2k`: top vertex `i` is `i`, bottom
//! vertex `j'` is `k + j`. Blocks are kept sorted, and sorted by least vertex,
//! so derived equality, hashing and ordering all act on the canonical form.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use petgraph::unionfind::UnionFind;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Row {
    Top,
    Bottom,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Vertex {
    pub index: usize,
    pub row: Row,
}

impl Vertex {
    pub fn encode(self, k: usize) -> usize {
        match self.row {
            Row::Top => self.index,
            Row::Bottom => k + self.index,
        }
    }

    pub fn decode(v: usize, k: usize) -> Vertex {
        if v <= k {
            Vertex { index: v, row: Row::Top }
        } else {
            Vertex { index: v - k, row: Row::Bottom }
        }
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.row {
            Row::Top => write!(f, "{}", self.index),
            Row::Bottom => write!(f, "{}'", self.index),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    Partition,
    Brauer,
    RookBrauer,
    Rook,
    TemperleyLieb,
    Motzkin,
    PlanarRook,
    PlanarPartition,
    SymmetricGroup,
}

impl Family {
    pub const ALL: [Family; 9] = [
        Family::Partition,
        Family::Brauer,
        Family::RookBrauer,
        Family::Rook,
        Family::TemperleyLieb,
        Family::Motzkin,
        Family::PlanarRook,
        Family::PlanarPartition,
        Family::SymmetricGroup,
    ];

    pub fn is_planar(self) -> bool {
        matches!(self, Family::TemperleyLieb | Family::Motzkin | Family::PlanarRook | Family::PlanarPartition)
    }

    /// Brauer-type families pad class diagrams with `e_1` instead of `p_1`.
    pub fn uses_e_padding(self) -> bool {
        matches!(self, Family::Brauer | Family::TemperleyLieb)
    }

    pub fn generator_kinds(self) -> &'static [GenKind] {
        use GenKind::*;
        match self {
            Family::Partition => &[S, B, P],
            Family::SymmetricGroup => &[S],
            Family::Rook => &[S, P],
            Family::Brauer => &[S, E],
            Family::RookBrauer => &[S, E, P],
            Family::PlanarPartition => &[P, B],
            Family::TemperleyLieb => &[E],
            Family::Motzkin => &[E, L, R],
            Family::PlanarRook => &[L, R],
        }
    }

    /// All generators of the family on `k` strands.
    pub fn generators(self, k: usize) -> Vec<Diagram> {
        let mut out = Vec::new();
        for &kind in self.generator_kinds() {
            let top = if kind == GenKind::P { k } else { k.saturating_sub(1) };
            for i in 1..=top {
                out.push(Diagram::generator(kind, i, k).expect("index in range"));
            }
        }
        out
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::Partition => "partition",
            Family::Brauer => "brauer",
            Family::RookBrauer => "rook-brauer",
            Family::Rook => "rook",
            Family::TemperleyLieb => "temperley-lieb",
            Family::Motzkin => "motzkin",
            Family::PlanarRook => "planar-rook",
            Family::PlanarPartition => "planar-partition",
            Family::SymmetricGroup => "symmetric-group",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase().replace(['_', ' '], "-");
        Ok(match key.as_str() {
            "partition" | "p" => Family::Partition,
            "brauer" | "b" => Family::Brauer,
            "rook-brauer" | "rookbrauer" | "rb" => Family::RookBrauer,
            "rook" | "r" => Family::Rook,
            "temperley-lieb" | "temperleylieb" | "tl" => Family::TemperleyLieb,
            "motzkin" | "m" => Family::Motzkin,
            "planar-rook" | "planarrook" | "pr" => Family::PlanarRook,
            "planar-partition" | "planarpartition" | "pp" => Family::PlanarPartition,
            "symmetric-group" | "symmetric" | "s" => Family::SymmetricGroup,
            _ => return Err(Error::InvalidParameter(format!("unknown family `{s}`"))),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GenKind {
    S,
    P,
    B,
    E,
    L,
    R,
}

impl FromStr for GenKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.trim().to_ascii_lowercase().as_str() {
            "s" => GenKind::S,
            "p" => GenKind::P,
            "b" => GenKind::B,
            "e" => GenKind::E,
            "l" => GenKind::L,
            "r" => GenKind::R,
            _ => return Err(Error::InvalidParameter(format!("unknown generator `{s}`"))),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawDiagram")]
pub struct Diagram {
    k: usize,
    blocks: Vec<Vec<usize>>,
}

#[derive(Deserialize)]
struct RawDiagram {
    k: usize,
    blocks: Vec<Vec<usize>>,
}

impl TryFrom<RawDiagram> for Diagram {
    type Error = Error;
    fn try_from(raw: RawDiagram) -> Result<Self> {
        Diagram::from_blocks(raw.k, raw.blocks)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConcatResult {
    pub product: Diagram,
    pub deleted: usize,
}

impl Diagram {
    /// Builds a diagram from blocks in the `1..=2k` encoding, validating coverage.
    pub fn from_blocks(k: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; 2 * k + 1];
        for block in &blocks {
            if block.is_empty() {
                return Err(Error::SyntaxError("empty block".into()));
            }
            for &v in block {
                if v == 0 || v > 2 * k {
                    return Err(Error::IndexOutOfRange { index: v, max: 2 * k });
                }
                if seen[v] {
                    return Err(Error::DuplicateVertex(Vertex::decode(v, k).to_string()));
                }
                seen[v] = true;
            }
        }
        if let Some(v) = (1..=2 * k).find(|&v| !seen[v]) {
            return Err(Error::MissingVertex(Vertex::decode(v, k).to_string()));
        }
        Ok(Self::canonical(k, blocks))
    }

    fn canonical(k: usize, mut blocks: Vec<Vec<usize>>) -> Self {
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.sort_unstable();
        Diagram { k, blocks }
    }

    /// Builds a diagram from a block label for each vertex `1..=2k` (`labels[v-1]`).
    pub fn from_labels(k: usize, labels: &[usize]) -> Self {
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (i, &l) in labels.iter().enumerate() {
            groups.entry(l).or_default().push(i + 1);
        }
        Self::canonical(k, groups.into_values().collect())
    }

    /// Parses `block | block | ...` where a block lists vertices like `3` or `3'`.
    pub fn parse(text: &str, k: usize) -> Result<Self> {
        let mut blocks = Vec::new();
        for chunk in text.split('|') {
            let mut block = Vec::new();
            for tok in chunk.split_whitespace() {
                let (digits, row) = match tok.strip_suffix('\'') {
                    Some(d) => (d, Row::Bottom),
                    None => (tok, Row::Top),
                };
                let index: usize = digits.parse().map_err(|_| Error::SyntaxError(format!("bad vertex `{tok}`")))?;
                if index == 0 || index > k {
                    return Err(Error::IndexOutOfRange { index, max: k });
                }
                block.push(Vertex { index, row }.encode(k));
            }
            if block.is_empty() {
                return Err(Error::SyntaxError("empty block".into()));
            }
            blocks.push(block);
        }
        Self::from_blocks(k, blocks)
    }

    pub fn identity(k: usize) -> Self {
        Self::canonical(k, (1..=k).map(|i| vec![i, k + i]).collect())
    }

    /// The permutation diagram joining top `sigma(i)` to bottom `i'`.
    /// `images[i-1] = sigma(i)`.
    pub fn from_permutation(images: &[usize]) -> Self {
        let k = images.len();
        Self::canonical(k, images.iter().enumerate().map(|(i, &s)| vec![s, k + i + 1]).collect())
    }

    /// One of the generators `s_i, p_i, b_i, e_i, l_i, r_i` on `k` strands.
    pub fn generator(kind: GenKind, i: usize, k: usize) -> Result<Self> {
        let max = if kind == GenKind::P { k } else { k.saturating_sub(1) };
        if i == 0 || i > max {
            return Err(Error::IndexOutOfRange { index: i, max });
        }
        let mut blocks: Vec<Vec<usize>> =
            (1..=k).filter(|&j| j != i && (kind == GenKind::P || j != i + 1)).map(|j| vec![j, k + j]).collect();
        let (top, bot) = (i, k + i);
        match kind {
            GenKind::S => blocks.extend([vec![top, bot + 1], vec![top + 1, bot]]),
            GenKind::P => blocks.extend([vec![top], vec![bot]]),
            GenKind::B => blocks.push(vec![top, top + 1, bot, bot + 1]),
            GenKind::E => blocks.extend([vec![top, top + 1], vec![bot, bot + 1]]),
            GenKind::L => blocks.extend([vec![top, bot + 1], vec![top + 1], vec![bot]]),
            GenKind::R => blocks.extend([vec![top + 1, bot], vec![top], vec![bot + 1]]),
        }
        Ok(Self::canonical(k, blocks))
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Blocks in the `1..=2k` encoding, canonical order.
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Blocks as vertices.
    pub fn vertex_blocks(&self) -> Vec<Vec<Vertex>> {
        self.blocks.iter().map(|b| b.iter().map(|&v| Vertex::decode(v, self.k)).collect()).collect()
    }

    pub fn is_propagating(&self, block: &[usize]) -> bool {
        block.first().is_some_and(|&v| v <= self.k) && block.last().is_some_and(|&v| v > self.k)
    }

    pub fn rank(&self) -> usize {
        self.blocks.iter().filter(|b| self.is_propagating(b)).count()
    }

    /// Label of the block containing each vertex, indexed by `v - 1`.
    pub fn labels(&self) -> Vec<usize> {
        let mut lab = vec![0; 2 * self.k];
        for (bi, b) in self.blocks.iter().enumerate() {
            for &v in b {
                lab[v - 1] = bi;
            }
        }
        lab
    }

    /// The set partition induced on the top row, as blocks of `1..=k`.
    pub fn top_partition(&self) -> Vec<Vec<usize>> {
        self.blocks
            .iter()
            .map(|b| b.iter().copied().filter(|&v| v <= self.k).collect::<Vec<_>>())
            .filter(|b| !b.is_empty())
            .collect()
    }

    /// Stacks `self` on top of `other`, identifying `self`'s bottom row with
    /// `other`'s top row, and counts the components lost in the middle.
    pub fn concat(&self, other: &Diagram) -> Result<ConcatResult> {
        if self.k != other.k {
            return Err(Error::RankMismatch { left: self.k, right: other.k });
        }
        let k = self.k;
        // 0..k top of self, k..2k middle, 2k..3k bottom of other
        let mut uf = UnionFind::<usize>::new(3 * k);
        for b in &self.blocks {
            for w in b.windows(2) {
                uf.union(w[0] - 1, w[1] - 1);
            }
        }
        for b in &other.blocks {
            for w in b.windows(2) {
                uf.union(w[0] - 1 + k, w[1] - 1 + k);
            }
        }
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        let mut middle_roots = std::collections::BTreeSet::new();
        for x in 0..3 * k {
            let root = uf.find(x);
            if (k..2 * k).contains(&x) {
                middle_roots.insert(root);
            } else {
                let v = if x < k { x + 1 } else { x - 2 * k + k + 1 };
                groups.entry(root).or_default().push(v);
            }
        }
        let deleted = middle_roots.iter().filter(|r| !groups.contains_key(r)).count();
        Ok(ConcatResult { product: Self::canonical(k, groups.into_values().collect()), deleted })
    }

    /// Mirror image across the horizontal axis.
    pub fn transpose(&self) -> Self {
        let k = self.k;
        let flip = |v: usize| if v <= k { v + k } else { v - k };
        Self::canonical(k, self.blocks.iter().map(|b| b.iter().map(|&v| flip(v)).collect()).collect())
    }

    /// Side-by-side juxtaposition, `self` on the left.
    pub fn tensor(&self, other: &Diagram) -> Self {
        let (a, b) = (self.k, other.k);
        let k = a + b;
        let lift_a = |v: usize| if v <= a { v } else { v - a + k };
        let lift_b = |v: usize| if v <= b { v + a } else { v - b + k + a };
        let mut blocks: Vec<Vec<usize>> =
            self.blocks.iter().map(|bl| bl.iter().map(|&v| lift_a(v)).collect()).collect();
        blocks.extend(other.blocks.iter().map(|bl| bl.iter().map(|&v| lift_b(v)).collect()));
        Self::canonical(k, blocks)
    }

    /// Position of a vertex when the boundary is read `1..k, k'..1'`.
    fn boundary_position(&self, v: usize) -> usize {
        if v <= self.k {
            v - 1
        } else {
            3 * self.k - v
        }
    }

    /// Non-crossing test on the boundary order `1..k, k'..1'`.
    pub fn is_planar(&self) -> bool {
        let pos: Vec<Vec<usize>> = self
            .blocks
            .iter()
            .map(|b| {
                let mut p: Vec<usize> = b.iter().map(|&v| self.boundary_position(v)).collect();
                p.sort_unstable();
                p
            })
            .collect();
        for i in 0..pos.len() {
            for j in i + 1..pos.len() {
                if blocks_cross(&pos[i], &pos[j]) {
                    return false;
                }
            }
        }
        true
    }

    pub fn in_family(&self, f: Family) -> bool {
        let k = self.k;
        let tb = |b: &Vec<usize>| {
            let t = b.iter().filter(|&&v| v <= k).count();
            (t, b.len() - t)
        };
        match f {
            Family::Partition => true,
            Family::Brauer => self.blocks.iter().all(|b| b.len() == 2),
            Family::RookBrauer => self.blocks.iter().all(|b| b.len() <= 2),
            Family::Rook => self.blocks.iter().all(|b| {
                let (t, bo) = tb(b);
                t <= 1 && bo <= 1
            }),
            Family::SymmetricGroup => self.blocks.iter().all(|b| tb(b) == (1, 1)),
            Family::TemperleyLieb => self.in_family(Family::Brauer) && self.is_planar(),
            Family::Motzkin => self.in_family(Family::RookBrauer) && self.is_planar(),
            Family::PlanarRook => self.in_family(Family::Rook) && self.is_planar(),
            Family::PlanarPartition => self.is_planar(),
        }
    }

    /// Builds the diagram of a family member by relabelling via a per-vertex map.
    #[allow(dead_code)]
    pub(crate) fn map_vertices(&self, f: impl Fn(usize) -> usize) -> Self {
        Self::canonical(self.k, self.blocks.iter().map(|b| b.iter().map(|&v| f(v)).collect()).collect())
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("diagram serializes")
    }
}

/// Blocks given as sorted positions cross iff they alternate at least as ABAB.
fn blocks_cross(a: &[usize], b: &[usize]) -> bool {
    let (mut i, mut j) = (0, 0);
    let mut runs = 0;
    let mut last = None;
    while i < a.len() || j < b.len() {
        let take_a = j >= b.len() || (i < a.len() && a[i] < b[j]);
        if take_a {
            i += 1;
        } else {
            j += 1;
        }
        if last != Some(take_a) {
            runs += 1;
            last = Some(take_a);
        }
    }
    runs >= 4
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (bi, b) in self.blocks.iter().enumerate() {
            if bi > 0 {
                write!(f, " | ")?;
            }
            for (vi, &v) in b.iter().enumerate() {
                if vi > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", Vertex::decode(v, self.k))?;
            }
        }
        Ok(())
    }
}

/// Largest `k` the enumerators accept. `DIAGRAMALG_CAP` overrides the default
/// of 5 for the partition family and 7 elsewhere.
pub fn enumeration_cap(f: Family) -> usize {
    if let Some(cap) = std::env::var("DIAGRAMALG_CAP").ok().and_then(|s| s.trim().parse().ok()) {
        return cap;
    }
    match f {
        Family::Partition => 5,
        _ => 7,
    }
}

pub(crate) fn check_cap(f: Family, k: usize) -> Result<()> {
    let cap = enumeration_cap(f);
    if k > cap {
        return Err(Error::CapExceeded { k, cap });
    }
    Ok(())
}

/// Every diagram of the family on `k` strands, in canonical order.
///
/// Restricted-growth strings over the `2k` vertices are extended one vertex at
/// a time. Constraints that can only get worse as blocks grow (block sizes,
/// crossings) prune the search; the full membership test runs at the leaves.
pub fn enumerate_basis(f: Family, k: usize) -> Result<Vec<Diagram>> {
    check_cap(f, k)?;
    let n = 2 * k;
    let mut out = Vec::new();
    let mut labels = vec![0usize; n];
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let pos = |v: usize| if v <= k { v - 1 } else { 3 * k - v };
    let ok_partial = |blocks: &Vec<Vec<usize>>, changed: usize| -> bool {
        let b = &blocks[changed];
        let tops = b.iter().filter(|&&v| v <= k).count();
        let bots = b.len() - tops;
        let size_ok = match f {
            Family::Brauer | Family::TemperleyLieb | Family::RookBrauer | Family::Motzkin => b.len() <= 2,
            Family::Rook | Family::PlanarRook | Family::SymmetricGroup => tops <= 1 && bots <= 1,
            Family::Partition | Family::PlanarPartition => true,
        };
        if !size_ok {
            return false;
        }
        if f.is_planar() {
            let mut pb: Vec<usize> = b.iter().map(|&v| pos(v)).collect();
            pb.sort_unstable();
            for (ci, c) in blocks.iter().enumerate() {
                if ci == changed {
                    continue;
                }
                let mut pc: Vec<usize> = c.iter().map(|&v| pos(v)).collect();
                pc.sort_unstable();
                if blocks_cross(&pb, &pc) {
                    return false;
                }
            }
        }
        true
    };
    #[allow(clippy::too_many_arguments)]
    fn rec(
        v: usize,
        n: usize,
        k: usize,
        f: Family,
        labels: &mut Vec<usize>,
        blocks: &mut Vec<Vec<usize>>,
        ok: &dyn Fn(&Vec<Vec<usize>>, usize) -> bool,
        out: &mut Vec<Diagram>,
    ) {
        if v > n {
            let d = Diagram::from_labels(k, labels);
            if d.in_family(f) {
                out.push(d);
            }
            return;
        }
        for b in 0..=blocks.len() {
            if b == blocks.len() {
                blocks.push(vec![v]);
            } else {
                blocks[b].push(v);
            }
            if ok(blocks, b) {
                labels[v - 1] = b;
                rec(v + 1, n, k, f, labels, blocks, ok, out);
            }
            if b == blocks.len() - 1 && blocks[b].len() == 1 {
                blocks.pop();
            } else {
                blocks[b].pop();
            }
        }
    }
    rec(1, n, k, f, &mut labels, &mut blocks, &ok_partial, &mut out);
    out.sort();
    Ok(out)
}

/// All set partitions of `1..=k` as restricted-growth strings, each block sorted,
/// blocks ordered by least element.
pub fn set_partitions(k: usize) -> Vec<Vec<Vec<usize>>> {
    fn rec(v: usize, k: usize, cur: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        if v > k {
            out.push(cur.clone());
            return;
        }
        for b in 0..=cur.len() {
            if b == cur.len() {
                cur.push(vec![v]);
                rec(v + 1, k, cur, out);
                cur.pop();
            } else {
                cur[b].push(v);
                rec(v + 1, k, cur, out);
                cur[b].pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(1, k, &mut Vec::new(), &mut out);
    out
}
