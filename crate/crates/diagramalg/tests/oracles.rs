//! Library results against brute-force reimplementations.

use std::collections::{BTreeMap, BTreeSet};

use diagramalg::characters::{determinant, irr_character, ClassLabel};
use diagramalg::diagrams::{enumerate_basis, set_partitions, Diagram, Family, GenKind};
use diagramalg::irreps::{act_tableau, conjugate, enumerate_sspt, pair_from_tableau, SetPartitionTableau};
use diagramalg::partitions::{
    binom, divisors, double_factorial, factorial, lambda_stars, num_syt, partitions_of, stirling2, IntPartition,
};
use diagramalg::symrep::{rep_matrix, standard_tableaux, sym_character, Permutation, YoungTableau};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn p(v: &[usize]) -> IntPartition {
    IntPartition::new(v.to_vec()).unwrap()
}

/// Components of the stacked graph found by flood fill over explicit vertices.
fn naive_concat(a: &Diagram, b: &Diagram) -> (Diagram, usize) {
    let k = a.k();
    // 0..k top of a, k..2k middle, 2k..3k bottom of b
    let mut adj = vec![Vec::new(); 3 * k];
    let mut link = |blocks: &[Vec<usize>], top_off: usize, bot_off: usize| {
        for blk in blocks {
            let ids: Vec<usize> =
                blk.iter().map(|&v| if v <= k { top_off + v - 1 } else { bot_off + v - k - 1 }).collect();
            for w in ids.windows(2) {
                adj[w[0]].push(w[1]);
                adj[w[1]].push(w[0]);
            }
        }
    };
    link(a.blocks(), 0, k);
    link(b.blocks(), k, 2 * k);
    let mut seen = vec![false; 3 * k];
    let mut blocks = Vec::new();
    let mut deleted = 0;
    for s in 0..3 * k {
        if seen[s] {
            continue;
        }
        let mut stack = vec![s];
        seen[s] = true;
        let mut comp = Vec::new();
        while let Some(v) = stack.pop() {
            comp.push(v);
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        let outer: Vec<usize> = comp
            .iter()
            .filter_map(|&v| match v {
                v if v < k => Some(v + 1),
                v if v >= 2 * k => Some(v - k + 1),
                _ => None,
            })
            .collect();
        if outer.is_empty() {
            deleted += 1;
        } else {
            blocks.push(outer);
        }
    }
    (Diagram::from_blocks(k, blocks).unwrap(), deleted)
}

#[test]
fn concatenation_matches_flood_fill() {
    let mut rng = StdRng::seed_from_u64(11);
    for k in 1..=4 {
        let basis = enumerate_basis(Family::Partition, k).unwrap();
        for _ in 0..400 {
            let a = &basis[rng.random_range(0..basis.len())];
            let b = &basis[rng.random_range(0..basis.len())];
            let r = a.concat(b).unwrap();
            assert_eq!((r.product, r.deleted), naive_concat(a, b), "{a} * {b}");
        }
    }
}

/// Position of a vertex when walking 1..k then k'..1'.
fn boundary(v: usize, k: usize) -> usize {
    if v <= k {
        v
    } else {
        3 * k + 1 - v
    }
}

fn crosses(x: &[usize], y: &[usize], k: usize) -> bool {
    let xs: Vec<usize> = x.iter().map(|&v| boundary(v, k)).collect();
    let ys: Vec<usize> = y.iter().map(|&v| boundary(v, k)).collect();
    for &a in &xs {
        for &c in &xs {
            for &b in &ys {
                for &d in &ys {
                    if a < b && b < c && c < d {
                        return true;
                    }
                }
            }
        }
    }
    for &a in &ys {
        for &c in &ys {
            for &b in &xs {
                for &d in &xs {
                    if a < b && b < c && c < d {
                        return true;
                    }
                }
            }
        }
    }
    false
}

fn naive_in_family(d: &Diagram, f: Family) -> bool {
    let k = d.k();
    let tops = |b: &Vec<usize>| b.iter().filter(|&&v| v <= k).count();
    let bots = |b: &Vec<usize>| b.iter().filter(|&&v| v > k).count();
    let planar = d.blocks().iter().enumerate().all(|(i, x)| d.blocks()[i + 1..].iter().all(|y| !crosses(x, y, k)));
    let all = |pred: &dyn Fn(&Vec<usize>) -> bool| d.blocks().iter().all(pred);
    match f {
        Family::Partition => true,
        Family::Brauer => all(&|b| b.len() == 2),
        Family::RookBrauer => all(&|b| b.len() <= 2),
        Family::Rook => all(&|b| tops(b) <= 1 && bots(b) <= 1),
        Family::SymmetricGroup => all(&|b| tops(b) == 1 && bots(b) == 1),
        Family::TemperleyLieb => planar && all(&|b| b.len() == 2),
        Family::Motzkin => planar && all(&|b| b.len() <= 2),
        Family::PlanarRook => planar && all(&|b| tops(b) <= 1 && bots(b) <= 1),
        Family::PlanarPartition => planar,
    }
}

#[test]
fn membership_and_enumeration_match_filtering() {
    for k in 0..=4 {
        let all: Vec<Diagram> =
            set_partitions(2 * k).into_iter().map(|b| Diagram::from_blocks(k, b).unwrap()).collect();
        for f in Family::ALL {
            let want: BTreeSet<Diagram> = all.iter().filter(|d| naive_in_family(d, f)).cloned().collect();
            for d in &all {
                assert_eq!(d.in_family(f), want.contains(d), "{f} {d}");
            }
            let got: BTreeSet<Diagram> = enumerate_basis(f, k).unwrap().into_iter().collect();
            assert_eq!(got, want, "{f} k={k}");
        }
    }
}

fn catalan(n: usize) -> BigInt {
    binom(2 * n as i64, n as i64) / BigInt::from(n + 1)
}

fn motzkin_number(n: usize) -> BigInt {
    (0..=n / 2).map(|t| binom(n as i64, 2 * t as i64) * catalan(t)).sum()
}

#[test]
fn basis_sizes_match_closed_forms() {
    for k in 0..=4usize {
        let ki = k as i64;
        let want = |f: Family| -> BigInt {
            match f {
                Family::Partition => diagramalg::partitions::bell(2 * k),
                Family::Brauer => double_factorial(2 * ki - 1),
                Family::RookBrauer => {
                    (0..=k).map(|t| binom(2 * ki, 2 * t as i64) * double_factorial(2 * t as i64 - 1)).sum()
                }
                Family::Rook => (0..=k).map(|i| binom(ki, i as i64).pow(2) * factorial(i)).sum(),
                Family::TemperleyLieb => catalan(k),
                Family::Motzkin => motzkin_number(2 * k),
                Family::PlanarRook => binom(2 * ki, ki),
                Family::PlanarPartition => catalan(2 * k),
                Family::SymmetricGroup => factorial(k),
            }
        };
        for f in Family::ALL {
            assert_eq!(BigInt::from(enumerate_basis(f, k).unwrap().len()), want(f), "{f} k={k}");
        }
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n);
            out.push(q);
        }
    }
    out
}

#[test]
fn standard_tableaux_match_all_fillings() {
    for n in 0..=6 {
        for shape in partitions_of(n) {
            let mut want = BTreeSet::new();
            for perm in permutations(n) {
                let mut rows = Vec::new();
                let mut it = perm.into_iter();
                for &len in shape.parts() {
                    rows.push(it.by_ref().take(len).collect::<Vec<_>>());
                }
                let t = YoungTableau::new(rows).unwrap();
                if t.is_standard() {
                    want.insert(t);
                }
            }
            let got: BTreeSet<YoungTableau> = standard_tableaux(&shape).into_iter().collect();
            assert_eq!(got, want, "{shape}");
            assert_eq!(num_syt(&shape), BigInt::from(want.len()));
        }
    }
}

#[test]
fn murnaghan_nakayama_matches_traces() {
    for n in 1..=5 {
        for lam in partitions_of(n) {
            for mu in partitions_of(n) {
                let m = rep_matrix(&Permutation::of_cycle_type(&mu), &lam).unwrap();
                let trace: BigRational = (0..m.len()).map(|i| m[i][i].clone()).sum();
                assert_eq!(trace, BigRational::from(sym_character(&lam, &mu).unwrap()), "{lam} {mu}");
            }
        }
    }
}

#[test]
fn symmetric_group_orthogonality() {
    for n in 1..=6 {
        let parts = partitions_of(n);
        for mu in &parts {
            let z: BigInt =
                mu.multiplicities().iter().map(|(&i, &m)| BigInt::from(i).pow(m as u32) * factorial(m)).product();
            let norm: BigInt = parts.iter().map(|l| sym_character(l, mu).unwrap().pow(2)).sum();
            assert_eq!(norm, z, "column {mu}");
        }
    }
}

fn leibniz(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    permutations(n)
        .into_iter()
        .map(|perm| {
            let sigma = Permutation::new(perm.clone()).unwrap();
            let inversions =
                (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| perm[i] > perm[j]).count();
            let sign = if inversions % 2 == 0 { BigInt::one() } else { -BigInt::one() };
            (0..n).map(|i| m[i][sigma.apply(i + 1) - 1].clone()).product::<BigInt>() * sign
        })
        .sum()
}

#[test]
fn bareiss_matches_leibniz() {
    let mut rng = StdRng::seed_from_u64(3);
    for n in 0..=5 {
        for _ in 0..30 {
            let m: Vec<Vec<BigInt>> =
                (0..n).map(|_| (0..n).map(|_| BigInt::from(rng.random_range(-3i64..=3))).collect()).collect();
            assert_eq!(determinant(&m), leibniz(&m));
        }
    }
}

/// Zero exactly when stacking `d` on the underlying symmetric diagram loses a
/// propagating block.
#[test]
fn tableau_action_is_zero_iff_rank_drops() {
    let mut rng = StdRng::seed_from_u64(5);
    for (f, k) in [(Family::Partition, 4), (Family::RookBrauer, 4), (Family::Brauer, 4), (Family::Motzkin, 4)] {
        let basis = enumerate_basis(f, k).unwrap();
        for lam in lambda_stars(f, k).unwrap() {
            for tab in enumerate_sspt(f, k, &lam).unwrap() {
                let (w, _) = pair_from_tableau(&tab).unwrap();
                for _ in 0..20 {
                    let d = &basis[rng.random_range(0..basis.len())];
                    let drops = d.concat(&w.to_diagram()).unwrap().product.rank() < w.m();
                    let zero = act_tableau(d, &tab).unwrap().is_none();
                    assert_eq!(zero, drops, "{d} on {tab}");
                    assert!(conjugate(d, &w).unwrap().w_prime.m() <= w.m());
                }
            }
        }
    }
}

/// A tableau as a list of blocks, each tagged with its body cell if any.
type Cells = Vec<(Vec<usize>, Option<(usize, usize)>)>;

fn cells(t: &SetPartitionTableau) -> Cells {
    let mut out: Cells = t.first_row.iter().map(|b| (b.clone(), None)).collect();
    for (r, row) in t.body.iter().enumerate() {
        for (c, b) in row.iter().enumerate() {
            out.push((b.clone(), Some((r, c))));
        }
    }
    out
}

fn rebuild(t: &SetPartitionTableau, cells: Cells) -> SetPartitionTableau {
    let mut first_row = Vec::new();
    let mut body = t.body.clone();
    for (mut b, pos) in cells {
        b.sort_unstable();
        match pos {
            Some((r, c)) => body[r][c] = b,
            None => first_row.push(b),
        }
    }
    first_row.sort_by_key(|b: &Vec<usize>| *b.iter().max().unwrap());
    SetPartitionTableau { lambda_star: t.lambda_star.clone(), first_row, body }
}

/// The generator rules for `s_i`, `p_i`, `b_i` and `e_i` on tableaux.
fn rule(kind: GenKind, i: usize, t: &SetPartitionTableau) -> Option<(SetPartitionTableau, usize)> {
    let mut cs = cells(t);
    let find = |cs: &Cells, x: usize| cs.iter().position(|(b, _)| b.contains(&x)).unwrap();
    match kind {
        GenKind::S => {
            for (b, _) in cs.iter_mut() {
                for v in b.iter_mut() {
                    if *v == i {
                        *v = i + 1;
                    } else if *v == i + 1 {
                        *v = i;
                    }
                }
            }
            Some((rebuild(t, cs), 0))
        }
        GenKind::P => {
            let a = find(&cs, i);
            if cs[a].0.len() == 1 {
                return if cs[a].1.is_some() { None } else { Some((t.clone(), 1)) };
            }
            cs[a].0.retain(|&x| x != i);
            cs.push((vec![i], None));
            Some((rebuild(t, cs), 0))
        }
        GenKind::B => {
            let (a, b) = (find(&cs, i), find(&cs, i + 1));
            if a == b {
                return Some((t.clone(), 0));
            }
            if cs[a].1.is_some() && cs[b].1.is_some() {
                return None;
            }
            let (keep, gone) = if cs[b].1.is_some() { (b, a) } else { (a, b) };
            let moved = cs[gone].0.clone();
            cs[keep].0.extend(moved);
            cs.remove(gone);
            Some((rebuild(t, cs), 0))
        }
        GenKind::E => {
            let (a, b) = (find(&cs, i), find(&cs, i + 1));
            if a != b && cs[a].1.is_some() && cs[b].1.is_some() {
                return None;
            }
            let pos = cs[a].1.or(cs[b].1);
            let other: &[usize] = if a == b { &[] } else { &cs[b].0 };
            let rest: Vec<usize> = cs[a].0.iter().chain(other).copied().filter(|&x| x != i && x != i + 1).collect();
            if rest.is_empty() && pos.is_some() {
                return None;
            }
            let scalar = usize::from(rest.is_empty());
            for idx in [a.max(b), a.min(b)] {
                cs.remove(idx);
                if a == b {
                    break;
                }
            }
            cs.push((vec![i, i + 1], None));
            if !rest.is_empty() {
                cs.push((rest, pos));
            }
            Some((rebuild(t, cs), scalar))
        }
        _ => unreachable!(),
    }
}

#[test]
fn generator_actions_follow_the_case_rules() {
    for (f, k) in [(Family::Partition, 4), (Family::RookBrauer, 4), (Family::Brauer, 4), (Family::Partition, 5)] {
        for lam in lambda_stars(f, k).unwrap() {
            for tab in enumerate_sspt(f, k, &lam).unwrap() {
                for kind in [GenKind::S, GenKind::P, GenKind::B, GenKind::E] {
                    let top = if kind == GenKind::P { k } else { k - 1 };
                    for i in 1..=top {
                        let g = Diagram::generator(kind, i, k).unwrap();
                        assert_eq!(act_tableau(&g, &tab).unwrap(), rule(kind, i, &tab), "{kind:?}{i} on {tab}");
                    }
                }
            }
        }
    }
}

#[test]
fn trivial_and_top_characters() {
    for k in 1..=4 {
        for kappa in partitions_of(k) {
            let label = ClassLabel::for_k(Family::Partition, k, kappa.clone()).unwrap();
            let want: BigInt = divisors(&kappa)
                .iter()
                .map(|nu| {
                    let m: BTreeMap<usize, usize> = diagramalg::partitions::multiplicities(nu);
                    m.iter()
                        .map(|(&i, &mi)| {
                            (0..=mi).map(|t| stirling2(mi, t) * BigInt::from(i).pow((mi - t) as u32)).sum::<BigInt>()
                        })
                        .product::<BigInt>()
                })
                .sum();
            assert_eq!(irr_character(Family::Partition, k, &p(&[]), &label).unwrap(), want, "{kappa}");
            for lam in partitions_of(k) {
                for f in [Family::Partition, Family::Brauer, Family::RookBrauer, Family::Rook] {
                    let l = ClassLabel::for_k(f, k, kappa.clone()).unwrap();
                    assert_eq!(irr_character(f, k, &lam, &l).unwrap(), sym_character(&lam, &kappa).unwrap());
                }
            }
        }
    }
}

#[test]
fn padded_classes_reduce_to_smaller_k() {
    for f in [Family::Partition, Family::Brauer, Family::RookBrauer, Family::Rook] {
        let pad = if f.uses_e_padding() { 2 } else { 1 };
        for r in 0..=3 {
            for kappa in partitions_of(r) {
                let base = ClassLabel::for_k(f, r, kappa.clone()).unwrap();
                for s in 1..=2 {
                    let k = r + pad * s;
                    let label = ClassLabel { kappa: kappa.clone(), s, family: f };
                    for lam in lambda_stars(f, r).unwrap() {
                        if !lambda_stars(f, k).unwrap().contains(&lam) {
                            continue;
                        }
                        assert_eq!(
                            irr_character(f, k, &lam, &label).unwrap(),
                            irr_character(f, r, &lam, &base).unwrap(),
                            "{f} {lam} {kappa} s={s}"
                        );
                    }
                }
            }
        }
    }
}
