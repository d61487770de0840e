//! Sufficient conditions on a planar `H` for `ex_P(n, H) = 3n − 6`, each paired
//! with an `H`-free triangulation that certifies it.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::FormulaError;
use crate::constructions::{build, FamilyId};
use crate::embedding::is_planar;
use crate::graph::Graph;
use crate::patterns::{contains_subgraph, has_three_disjoint_cycles, is_colorable};

/// The three triangulation families used as certificates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WitnessFamily {
    /// `2K_1 + C_{n−2}`: `K_4`-free, 3-colourable, two non-adjacent vertices
    /// of degree above 4.
    TwoApexCycle,
    /// `K_1 + O_{n−1}`: every subgraph has two vertices of degree at most 3.
    ApexSerpentine,
    /// `O*_n`: maximum degree 6.
    DoubleSerpentine,
}

impl WitnessFamily {
    pub fn min_n(self) -> usize {
        5
    }

    pub fn at(self, n: usize) -> FamilyId {
        match self {
            WitnessFamily::TwoApexCycle => FamilyId::TwoApexCycle(n),
            WitnessFamily::ApexSerpentine => FamilyId::ApexSerpentine(n),
            WitnessFamily::DoubleSerpentine => FamilyId::DoubleSerpentine(n),
        }
    }
}

impl fmt::Display for WitnessFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WitnessFamily::TwoApexCycle => "two-apex-cycle",
            WitnessFamily::ApexSerpentine => "apex-serpentine",
            WitnessFamily::DoubleSerpentine => "double-serpentine",
        })
    }
}

/// Which condition matched. Evaluated in declaration order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Condition {
    ContainsK4,
    /// `χ(H) = 4` and `n ≥ |H| + 2`.
    FourChromatic,
    /// `Δ(H) ≥ 7`.
    MaxDegreeAtLeast7,
    /// `Δ(H) = 6` with a second vertex of degree at least 5, or with one
    /// 6-vertex and at least five 4-vertices.
    MaxDegree6,
    /// `Δ(H) = 5` with three 5-vertices or two adjacent ones.
    MaxDegree5,
    /// `Δ(H) = 4` with at least seven 4-vertices.
    ManyDegree4,
    /// 3-regular on at least 9 vertices.
    LargeCubic,
    ThreeDisjointCycles,
    /// A unique vertex `u` of maximum degree 4, 5 or 6 with
    /// `Δ(H[N(u)]) ≥ 3`.
    DenseUniqueHub,
    /// `δ(H) ≥ 4`, or exactly one vertex of degree at most 3.
    FewLowDegree,
    NotCovered,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Condition::ContainsK4 => "contains-k4",
            Condition::FourChromatic => "four-chromatic",
            Condition::MaxDegreeAtLeast7 => "max-degree-at-least-7",
            Condition::MaxDegree6 => "max-degree-6",
            Condition::MaxDegree5 => "max-degree-5",
            Condition::ManyDegree4 => "many-degree-4",
            Condition::LargeCubic => "large-cubic",
            Condition::ThreeDisjointCycles => "three-disjoint-cycles",
            Condition::DenseUniqueHub => "dense-unique-hub",
            Condition::FewLowDegree => "few-low-degree",
            Condition::NotCovered => "not-covered",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub condition: Condition,
    pub family: Option<WitnessFamily>,
    /// Smallest `n` for which the guarantee holds.
    pub min_n: Option<usize>,
}

impl Verdict {
    fn covered(condition: Condition, family: WitnessFamily, min_n: usize) -> Self {
        Verdict {
            condition,
            family: Some(family),
            min_n: Some(min_n.max(family.min_n())),
        }
    }

    fn not_covered() -> Self {
        Verdict {
            condition: Condition::NotCovered,
            family: None,
            min_n: None,
        }
    }

    pub fn is_covered(&self) -> bool {
        self.condition != Condition::NotCovered
    }
}

/// First matching condition for `H` on `n` host vertices.
pub fn classify_pattern(h: &Graph, n: usize) -> Result<Verdict, FormulaError> {
    use Condition::*;
    use WitnessFamily::*;

    if !is_planar(h) {
        return Err(FormulaError::NotPlanar);
    }
    let order = h.n();
    if n < order {
        return Err(FormulaError::BelowRange {
            pattern: format!("g6:{}", h.to_graph6()),
            n,
            min: order,
        });
    }
    if contains_subgraph(h, &Graph::complete(4)).is_some() {
        return Ok(Verdict::covered(ContainsK4, TwoApexCycle, order.max(6)));
    }
    if n >= order + 2 && h.edge_count() > 0 && !is_colorable(h, 3) {
        return Ok(Verdict::covered(FourChromatic, TwoApexCycle, order + 2));
    }

    let max = h.max_degree();
    let count = |d| h.count_degree(d);
    let of_degree = |d: usize| (0..order).filter(move |&v| h.degree(v) == d);

    if max >= 7 {
        return Ok(Verdict::covered(MaxDegreeAtLeast7, DoubleSerpentine, order));
    }
    if max == 6 {
        let high = count(6) + count(5);
        if high >= 2 {
            // a 6-vertex and another vertex of degree ≥ 5: adjacent ones cannot
            // sit in 2K_1 + C_{n−2}, non-adjacent ones cannot sit in K_1 + O_{n−1}
            let adjacent = of_degree(6).any(|x| h.neighbors(x).iter().any(|&y| h.degree(y) >= 5));
            let family = if adjacent { TwoApexCycle } else { ApexSerpentine };
            return Ok(Verdict::covered(MaxDegree6, family, order));
        }
        if count(4) >= 5 {
            let s: Vec<usize> = (0..order).filter(|&v| matches!(h.degree(v), 4 | 6)).collect();
            let family = if count(4) >= 6 || !is_double_apex_path(&h.induced_subgraph(&s).expect("in range")) {
                TwoApexCycle
            } else {
                DoubleSerpentine
            };
            return Ok(Verdict::covered(MaxDegree6, family, order));
        }
    }
    if max == 5 {
        let fives: Vec<usize> = of_degree(5).collect();
        if fives.len() >= 3 || (fives.len() == 2 && h.has_edge(fives[0], fives[1])) {
            return Ok(Verdict::covered(MaxDegree5, TwoApexCycle, order));
        }
    }
    if max == 4 && count(4) >= 7 {
        return Ok(Verdict::covered(ManyDegree4, TwoApexCycle, order));
    }
    if order >= 9 && h.min_degree() == 3 && max == 3 {
        return Ok(Verdict::covered(LargeCubic, TwoApexCycle, order));
    }
    if has_three_disjoint_cycles(h)? {
        return Ok(Verdict::covered(ThreeDisjointCycles, TwoApexCycle, order));
    }
    if (4..=6).contains(&max) && count(max) == 1 {
        let u = of_degree(max).next().expect("one hub");
        if h.neighborhood_subgraph(u).expect("in range").max_degree() >= 3 {
            return Ok(Verdict::covered(DenseUniqueHub, TwoApexCycle, order));
        }
    }
    let low = (0..order).filter(|&v| h.degree(v) <= 3).count();
    if low <= 1 && order > 0 {
        return Ok(Verdict::covered(FewLowDegree, ApexSerpentine, order));
    }
    Ok(Verdict::not_covered())
}

/// `H[S] ≅ 2K_1 + P_4`.
fn is_double_apex_path(g: &Graph) -> bool {
    let target = Graph::empty(2).join(&Graph::path(4).expect("4 vertices"));
    g.is_isomorphic(&target)
}

/// Builds the verdict's family on `n` vertices and confirms it is a
/// triangulation-sized `H`-free graph.
pub fn verify_verdict(v: &Verdict, h: &Graph, n: usize) -> Result<bool, FormulaError> {
    let (Some(family), Some(min)) = (v.family, v.min_n) else {
        return Err(FormulaError::NotCovered);
    };
    if n < min {
        return Err(FormulaError::BelowRange {
            pattern: format!("g6:{}", h.to_graph6()),
            n,
            min,
        });
    }
    let g = build(&family.at(n)).map_err(|e| FormulaError::Construction(e.to_string()))?;
    Ok(g.edge_count() == 3 * n - 6 && contains_subgraph(&g, h).is_none())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::icosahedron;
    use crate::patterns::PatternSpec;

    fn octahedron() -> Graph {
        Graph::empty(2).join(&Graph::cycle(4).unwrap())
    }

    #[test]
    fn named_examples() {
        let v = classify_pattern(&icosahedron(), 12).unwrap();
        assert_eq!((v.condition, v.family), (Condition::MaxDegree5, Some(WitnessFamily::TwoApexCycle)));
        assert!(verify_verdict(&v, &icosahedron(), 14).unwrap());

        let v = classify_pattern(&octahedron(), 6).unwrap();
        assert_eq!((v.condition, v.family), (Condition::FewLowDegree, Some(WitnessFamily::ApexSerpentine)));
        assert!(verify_verdict(&v, &octahedron(), 10).unwrap());

        let c6 = Graph::cycle(6).unwrap();
        assert!(!classify_pattern(&c6, 8).unwrap().is_covered());
    }

    #[test]
    fn k5_minus_edge() {
        let h = Graph::complete(5).delete_edge(0, 1).unwrap();
        let v = classify_pattern(&h, 5).unwrap();
        assert_eq!(v.condition, Condition::ContainsK4);
        assert_eq!(v.min_n, Some(6));
        assert!(verify_verdict(&v, &h, 7).unwrap());
        assert!(verify_verdict(&v, &h, 5).is_err());
    }

    #[test]
    fn four_chromatic_needs_room() {
        // odd wheel, K_4-free for k ≥ 5
        let w5 = PatternSpec::Wheel(5).realize();
        assert_eq!(classify_pattern(&w5, 8).unwrap().condition, Condition::FourChromatic);
        // at n = |H| nothing else applies: one 5-vertex over a rim of 3-vertices
        assert!(!classify_pattern(&w5, 6).unwrap().is_covered());
    }

    #[test]
    fn degree_six_subcases() {
        let star7 = Graph::star(7).unwrap();
        assert_eq!(classify_pattern(&star7, 8).unwrap().condition, Condition::MaxDegreeAtLeast7);

        // K_{1,6} plus a vertex joined to five of the leaves: non-adjacent
        let mut edges: Vec<(usize, usize)> = (1..=6).map(|i| (0, i)).collect();
        edges.extend((1..=5).map(|i| (7, i)));
        let h = Graph::from_edges(8, edges).unwrap();
        let v = classify_pattern(&h, 8).unwrap();
        assert_eq!((v.condition, v.family), (Condition::MaxDegree6, Some(WitnessFamily::ApexSerpentine)));
        assert!(verify_verdict(&v, &h, 8).unwrap());
    }

    #[test]
    fn rejects_non_planar() {
        assert_eq!(classify_pattern(&Graph::complete(5), 6), Err(FormulaError::NotPlanar));
    }
}
