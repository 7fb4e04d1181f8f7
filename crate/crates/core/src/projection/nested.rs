//! Nested decompositions and the particle labeling of the e8 roots.

use std::collections::BTreeSet;
use std::fmt;

use crate::exactnum::{linalg, FieldScalar, Rational};
use crate::rootspace::{cartan_integers, generate_roots, inner, AlgebraName, RootSystem, RootVector};

use super::listed::{resolve_family, SignFamily};
use super::{decompose, decompose_roots, parse, sorted, Decomposition, PartTag, ProjectionError};

/// A node of a nested decomposition. Leaves carry the final root sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NestedNode {
    pub label: String,
    pub roots: Vec<RootVector>,
    pub children: Vec<NestedNode>,
}

impl NestedNode {
    fn leaf(label: impl Into<String>, roots: Vec<RootVector>) -> Self {
        NestedNode { label: label.into(), roots, children: Vec::new() }
    }

    pub fn leaves(&self) -> Vec<&NestedNode> {
        if self.children.is_empty() {
            return vec![self];
        }
        self.children.iter().flat_map(NestedNode::leaves).collect()
    }

    pub fn leaf_counts(&self) -> Vec<(String, usize)> {
        self.leaves().into_iter().map(|n| (n.label.clone(), n.roots.len())).collect()
    }

    pub fn find(&self, label: &str) -> Option<&NestedNode> {
        if self.label == label {
            return Some(self);
        }
        self.children.iter().find_map(|c| c.find(label))
    }
}

fn plane_children(dec: &Decomposition, outer: &str) -> Vec<NestedNode> {
    dec.parts
        .iter()
        .map(|p| {
            let label = match p.tag {
                PartTag::OuterA2 => outer.to_string(),
                t => t.to_string(),
            };
            NestedNode::leaf(label, p.roots.clone())
        })
        .collect()
}

/// Connected components of a root set under non-orthogonality.
fn components(roots: &[RootVector]) -> Vec<Vec<RootVector>> {
    let n = roots.len();
    let mut comp = vec![usize::MAX; n];
    let mut out = Vec::new();
    for start in 0..n {
        if comp[start] != usize::MAX {
            continue;
        }
        let id = out.len();
        let mut stack = vec![start];
        comp[start] = id;
        let mut members = Vec::new();
        while let Some(i) = stack.pop() {
            members.push(roots[i].clone());
            for j in 0..n {
                if comp[j] == usize::MAX && !inner(&roots[i], &roots[j]).is_zero() {
                    comp[j] = id;
                    stack.push(j);
                }
            }
        }
        out.push(sorted(members));
    }
    out
}

/// A three-grading `g0 = J' ⊕ g0' ⊕ J̄'` by a coweight.
#[derive(Debug, Clone)]
pub struct ThreeGrading {
    pub plus: Vec<RootVector>,
    pub zero: Vec<RootVector>,
    pub minus: Vec<RootVector>,
    /// Simple roots whose coefficient defines the grading, one per simple
    /// component.
    pub chosen: Vec<RootVector>,
}

/// Grades `roots` by the sum, over simple components, of a minuscule
/// fundamental coweight; in each component the coweight with the largest
/// degree-one part is used.
pub fn three_grading(name: AlgebraName, roots: &[RootVector]) -> Result<ThreeGrading, ProjectionError> {
    let rs = RootSystem::from_roots(name, roots.to_vec());
    let cm = cartan_integers(&rs)?;
    let simple = &cm.simple_roots;
    let r = simple.len();
    let a: Vec<Vec<FieldScalar>> = (0..8).map(|k| simple.iter().map(|s| s.0[k].clone()).collect()).collect();
    let coeffs: Vec<Vec<i64>> = rs
        .roots
        .iter()
        .map(|root| {
            let c = linalg::solve(&a, &root.0).expect("roots lie in the span of the simple roots");
            c.iter()
                .map(|x| {
                    let q: Rational = x.to_rational().expect("integral coefficients");
                    q.as_small().map(|(n, _)| n).expect("small integer")
                })
                .collect()
        })
        .collect();
    let mut seen = vec![false; r];
    let mut chosen = Vec::new();
    for start in 0..r {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut k = 0;
        while k < comp.len() {
            let i = comp[k];
            for j in 0..r {
                if !seen[j] && cm.entries[i][j] != 0 {
                    seen[j] = true;
                    comp.push(j);
                }
            }
            k += 1;
        }
        comp.sort_unstable();
        let best = comp
            .iter()
            .copied()
            .filter(|&i| coeffs.iter().all(|c| c[i].abs() <= 1))
            .max_by_key(|&i| (coeffs.iter().filter(|c| c[i] == 1).count(), std::cmp::Reverse(i)))
            .ok_or_else(|| ProjectionError::NotDecomposable(format!("{name}: no minuscule coweight")))?;
        chosen.push(best);
    }
    let (mut plus, mut zero, mut minus) = (Vec::new(), Vec::new(), Vec::new());
    for (root, c) in rs.roots.iter().zip(&coeffs) {
        match chosen.iter().map(|&i| c[i]).sum::<i64>() {
            1 => plus.push(root.clone()),
            0 => zero.push(root.clone()),
            -1 => minus.push(root.clone()),
            _ => return Err(ProjectionError::NotDecomposable(format!("{name}: grading is not a three-grading"))),
        }
    }
    Ok(ThreeGrading { plus, zero, minus, chosen: chosen.into_iter().map(|i| simple[i].clone()).collect() })
}

/// Recursively decomposes the `g0` part.
///
/// For e8 the second level uses the a2 plane of `k4, k5, k6` inside `g0 = e6`
/// and the third level splits the remaining `a2 ⊕ a2` into its simple
/// factors; the factor containing `k7 + k8` is `a2^g1`. For f4, e6 and e7 the
/// `g0` part is three-graded by a coweight.
pub fn nested_decomposition(name: AlgebraName) -> Result<NestedNode, ProjectionError> {
    let dec = decompose(name)?;
    let all: Vec<RootVector> = sorted(dec.parts.iter().flat_map(|p| p.roots.clone()).collect());
    let mut children = plane_children(&dec, if name == AlgebraName::E8 { "a2^c" } else { "a2" });
    let g0 = children.pop().expect("g0 is last");
    let g0 = if name == AlgebraName::E8 {
        let inner_dec = decompose_roots("g0", &g0.roots, [4, 5, 6])?;
        let mut sub = plane_children(&inner_dec, "a2^f");
        let rest = sub.pop().expect("g0 is last");
        let mut comps = components(&rest.roots);
        let g1_root = parse("k7+k8");
        comps.sort_by_key(|c| !c.contains(&g1_root));
        if comps.len() != 2 {
            return Err(ProjectionError::NotDecomposable(format!("g0' has {} components", comps.len())));
        }
        let leaves = vec![NestedNode::leaf("a2^g1", comps[0].clone()), NestedNode::leaf("a2^g2", comps[1].clone())];
        sub.push(NestedNode { label: "g0'".into(), roots: rest.roots, children: leaves });
        NestedNode { label: "g0".into(), roots: g0.roots, children: sub }
    } else {
        let sub_name = match name {
            AlgebraName::F4 => AlgebraName::A2,
            AlgebraName::E6 => AlgebraName::A2A2,
            _ => AlgebraName::A5,
        };
        let tg = three_grading(sub_name, &g0.roots)?;
        let leaves = vec![
            NestedNode::leaf("J'", sorted(tg.plus)),
            NestedNode::leaf("Jbar'", sorted(tg.minus)),
            NestedNode::leaf("g0'", sorted(tg.zero)),
        ];
        NestedNode { label: "g0".into(), roots: g0.roots, children: leaves }
    };
    children.push(g0);
    Ok(NestedNode { label: name.as_str().to_string(), roots: all, children })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ParticleKind {
    Quark(usize),
    Antiquark(usize),
    Lepton(usize),
    Antilepton(usize),
    A2c,
    A2f,
    A2g1,
    A2g2,
}

impl fmt::Display for ParticleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParticleKind::Quark(c) => write!(f, "quark({c})"),
            ParticleKind::Antiquark(c) => write!(f, "antiquark({c})"),
            ParticleKind::Lepton(l) => write!(f, "lepton({l})"),
            ParticleKind::Antilepton(l) => write!(f, "antilepton({l})"),
            ParticleKind::A2c => write!(f, "a2^c"),
            ParticleKind::A2f => write!(f, "a2^f"),
            ParticleKind::A2g1 => write!(f, "a2^g1"),
            ParticleKind::A2g2 => write!(f, "a2^g2"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParticleLabel {
    pub root: RootVector,
    pub kind: ParticleKind,
}

fn a2_list(pos: &[&str]) -> Vec<RootVector> {
    sorted(pos.iter().flat_map(|s| {
        let v = parse(s);
        [-&v, v]
    }).collect())
}

fn neg(v: &[RootVector]) -> Vec<RootVector> {
    sorted(v.iter().map(|r| -r).collect())
}

/// The labeled root lists: quarks of color `c = 1, 2, 3`, leptons of family
/// `f = 4, 5, 6`, their reversed-sign partners and the four a2's.
pub fn particle_lists() -> Result<Vec<(ParticleKind, Vec<RootVector>)>, ProjectionError> {
    let e8 = generate_roots(AlgebraName::E8)?;
    let k = RootVector::k;
    let mut out = Vec::new();
    for c in 1..=3 {
        let mc = -&k(c);
        let mut q = vec![&(&(&mc + &k(1)) + &k(2)) + &k(3)];
        for j in 4..=8 {
            q.push(&mc + &k(j));
            q.push(&mc - &k(j));
        }
        let fam = SignFamily {
            label: format!("quark({c}) half-sums"),
            base: mc.clone(),
            fixed: vec![(1, 1), (2, 1), (3, 1)],
            slots: (4..=8).map(|j| vec![j]).collect(),
            scaled: None,
            even: true,
            overall_pm: false,
        };
        q.extend(resolve_family(&fam, &e8, 16)?.roots);
        let q = sorted(q);
        out.push((ParticleKind::Antiquark(c), neg(&q)));
        out.push((ParticleKind::Quark(c), q));
    }
    for f in 4..=6 {
        let mf = -&k(f);
        let mut l = vec![&(&(&mf + &k(4)) + &k(5)) + &k(6)];
        for j in 7..=8 {
            l.push(&mf + &k(j));
            l.push(&mf - &k(j));
        }
        let fam = SignFamily {
            label: format!("lepton({f}) half-sums"),
            base: mf.clone(),
            fixed: vec![(4, 1), (5, 1), (6, 1)],
            slots: vec![vec![1, 2, 3], vec![7], vec![8]],
            scaled: None,
            even: true,
            overall_pm: false,
        };
        l.extend(resolve_family(&fam, &e8, 4)?.roots);
        let l = sorted(l);
        out.push((ParticleKind::Antilepton(f), neg(&l)));
        out.push((ParticleKind::Lepton(f), l));
    }
    out.push((ParticleKind::A2c, a2_list(&["k1-k2", "k1-k3", "k2-k3"])));
    out.push((ParticleKind::A2f, a2_list(&["k4-k5", "k4-k6", "k5-k6"])));
    out.push((ParticleKind::A2g1, a2_list(&["k7+k8", "1/2(k1+k2+k3+k4+k5+k6-k7-k8)", "1/2(k1+k2+k3+k4+k5+k6+k7+k8)"])));
    out.push((ParticleKind::A2g2, a2_list(&["k7-k8", "1/2(-k1-k2-k3+k4+k5+k6-k7+k8)", "1/2(-k1-k2-k3+k4+k5+k6+k7-k8)"])));
    out.sort_by_key(|(kind, _)| *kind);
    Ok(out)
}

/// One label per e8 root; fails unless the lists partition the roots.
pub fn label_particles() -> Result<Vec<ParticleLabel>, ProjectionError> {
    let e8 = generate_roots(AlgebraName::E8)?;
    let lists = particle_lists()?;
    let mut labels = Vec::with_capacity(e8.len());
    for root in &e8.roots {
        let kinds: Vec<ParticleKind> =
            lists.iter().filter(|(_, roots)| roots.binary_search(root).is_ok()).map(|(k, _)| *k).collect();
        match kinds.as_slice() {
            [kind] => labels.push(ParticleLabel { root: root.clone(), kind: *kind }),
            [] => return Err(ProjectionError::NotAPartition(format!("{root} is unlabeled"))),
            _ => return Err(ProjectionError::NotAPartition(format!("{root} has labels {kinds:?}"))),
        }
    }
    let listed: BTreeSet<&RootVector> = lists.iter().flat_map(|(_, r)| r.iter()).collect();
    if let Some(extra) = listed.iter().find(|r| !e8.contains(r)) {
        return Err(ProjectionError::NotARoot((*extra).clone(), "e8".into()));
    }
    Ok(labels)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a5_grading_has_nine_roots_in_degree_one() {
        let dec = decompose(AlgebraName::E7).unwrap();
        let tg = three_grading(AlgebraName::A5, dec.part(PartTag::G0)).unwrap();
        assert_eq!((tg.plus.len(), tg.zero.len(), tg.minus.len()), (9, 12, 9));
    }
}
