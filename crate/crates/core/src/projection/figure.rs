//! Point data for the projection diagrams.
//!
//! Plane coordinates use `e1 = (k1 − k2)/√2` and `e2 = (k1 + k2 − 2k3)/√6`.
//! Distinct roots often share a projection, so each point carries its
//! multiplicity.

use std::collections::BTreeMap;

use crate::exactnum::{FieldScalar, Rational, Surd};
use crate::rootspace::{generate_roots, inner, AlgebraName, RootVector};

use super::planes::build_planes;
use super::{decompose, decompose_roots, parse, PartTag, ProjectionError};

#[derive(Debug, Clone, PartialEq)]
pub struct FigurePoint {
    pub exact: (FieldScalar, FieldScalar),
    pub x: f64,
    pub y: f64,
    pub multiplicity: usize,
    pub tag: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FigureSet {
    pub name: String,
    pub points: Vec<FigurePoint>,
    /// Rank of the algebra; the centre stands for the zero roots plus the
    /// Cartan subalgebra.
    pub rank: usize,
}

impl FigureSet {
    pub fn total_roots(&self) -> usize {
        self.points.iter().map(|p| p.multiplicity).sum()
    }

    pub fn center(&self) -> Option<&FigurePoint> {
        self.points.iter().find(|p| p.exact.0 == FieldScalar::from(0) && p.exact.1 == FieldScalar::from(0))
    }
}

fn plane_axes() -> [RootVector; 2] {
    [
        parse("k1-k2").scale(&FieldScalar::surd(Rational::frac(1, 2), Surd::R2)),
        parse("k1+k2-2k3").scale(&FieldScalar::surd(Rational::frac(1, 6), Surd::R6)),
    ]
}

fn collect(name: &str, tagged: Vec<(RootVector, String)>, rank: usize) -> FigureSet {
    let axes = plane_axes();
    let mut groups: BTreeMap<(FieldScalar, FieldScalar), (usize, String)> = BTreeMap::new();
    for (r, tag) in tagged {
        let key = (inner(&r, &axes[0]), inner(&r, &axes[1]));
        groups.entry(key).or_insert((0, tag)).0 += 1;
    }
    let points = groups
        .into_iter()
        .map(|((a, b), (multiplicity, tag))| FigurePoint {
            x: a.to_f64().0,
            y: b.to_f64().0,
            exact: (a, b),
            multiplicity,
            tag,
        })
        .collect();
    FigureSet { name: name.to_string(), points, rank }
}

/// Projection points for `g2`, `f4`, `e6`, `e7`, `e8` or `c3` (the f4
/// subsystem `g0 ∪ J(1) ∪ J̄(1)`).
pub fn figure_points(name: &str) -> Result<FigureSet, ProjectionError> {
    if name == "c3" {
        let dec = decompose(AlgebraName::F4)?;
        let tagged = [PartTag::JBar(1), PartTag::G0, PartTag::J(1)]
            .into_iter()
            .flat_map(|t| dec.part(t).iter().map(move |r| (r.clone(), t.to_string())))
            .collect();
        return Ok(collect(name, tagged, 3));
    }
    let alg: AlgebraName = name.parse()?;
    let rs = generate_roots(alg)?;
    let dec = decompose_roots(name, &rs.roots, [1, 2, 3])?;
    let tagged = dec.parts.iter().flat_map(|p| p.roots.iter().map(|r| (r.clone(), p.tag.to_string()))).collect();
    Ok(collect(name, tagged, rs.rank))
}

/// A root of c3 in the coordinates `(s, t)` of its plane.
#[derive(Debug, Clone, PartialEq)]
pub struct PanelPoint {
    pub root: RootVector,
    pub st: (FieldScalar, FieldScalar),
    pub x: f64,
    pub y: f64,
}

/// The three parallel planes of c3 in f4 (`Pi+`, `Pi0`, `Pi-`), each with its
/// roots in plane coordinates.
pub fn c3_panels() -> Result<Vec<(String, Vec<PanelPoint>)>, ProjectionError> {
    let dec = decompose(AlgebraName::F4)?;
    let planes = build_planes(AlgebraName::F4)?;
    let mut out = Vec::new();
    for (label, tag) in [("Pi+", PartTag::J(1)), ("Pi0", PartTag::G0), ("Pi-", PartTag::JBar(1))] {
        let s = planes.subspace(label).expect("built");
        let mut pts = Vec::new();
        for r in dec.part(tag) {
            let c = s.coordinates(r).ok_or_else(|| ProjectionError::NoPlanePair(r.clone()))?;
            pts.push(PanelPoint { root: r.clone(), x: c[0].to_f64().0, y: c[1].to_f64().0, st: (c[0].clone(), c[1].clone()) });
        }
        out.push((label.to_string(), pts));
    }
    Ok(out)
}
