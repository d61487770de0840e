//! Piecewise values for wheels, stars and small fans, and the cone bound for
//! linear forests.

use num_rational::Ratio;

use super::{classify_pattern, planar_max, strict_floor_bound, FormulaError, TuranValue};
use crate::embedding::is_planar;
use crate::graph::Graph;
use crate::patterns::{is_linear_forest, PatternSpec};

/// `ex_P(n, H)` for `H` given symbolically.
///
/// Exact where a closed form is known, an interval where only bounds are.
/// Patterns without a dedicated table fall back to the `3n − 6` classifier.
pub fn formula_value(p: &PatternSpec, n: usize) -> Result<TuranValue, FormulaError> {
    p.validate()?;
    let name = p.to_string();
    match p {
        PatternSpec::Wheel(k) if *k >= 4 => wheel(*k, n, &name),
        PatternSpec::Star(t) | PatternSpec::Fan { t, r: 2 } if *t >= 3 => star(*t, n, &name),
        PatternSpec::Fan { t: 2, r: 3 } => fan_pair(n, &name),
        PatternSpec::Fan { t: 3, r: 3 } => fan_triple(n, &name),
        PatternSpec::ConePath(t) if (4..=6).contains(t) => cone_bound(*t, n, &name),
        PatternSpec::ConeGraph(h) if h.n() >= 3 && h.edge_count() == 0 => star(h.n(), n, &name),
        PatternSpec::ConeGraph(h) if (4..=6).contains(&h.n()) => cone_bound(h.n(), n, &name),
        PatternSpec::Explicit(h) => match recognize(h) {
            Some(q) => formula_value(&q, n).map(|mut v| {
                v.provenance = format!("{} (as {q})", v.provenance);
                v
            }),
            None => fallback(h, n, &name),
        },
        _ => fallback(&p.realize(), n, &name),
    }
}

fn need(n: usize, min: usize, name: &str) -> Result<(), FormulaError> {
    if n < min {
        Err(FormulaError::BelowRange {
            pattern: name.to_string(),
            n,
            min,
        })
    } else {
        Ok(())
    }
}

fn wheel(k: usize, n: usize, name: &str) -> Result<TuranValue, FormulaError> {
    need(n, k + 1, name)?;
    let gap = match (k, n) {
        (4, 5 | 6) | (5, 7) => 1,
        (4, 7..=11) => 2,
        _ => 0,
    };
    Ok(TuranValue::exact(3 * n - 6 - gap, true, "wheel".into()))
}

/// `ex_P(n, K_{1,t})` for `t ≥ 3`, `n ≥ t + 1`.
pub(crate) fn star_value(t: usize, n: usize) -> usize {
    match (t, n) {
        (7.., _) => 3 * n - 6,
        (6, 7..=10 | 12) => 3 * n - 6,
        (6, 11) => 3 * n - 7,
        (6, 13 | 14) | (5, 7) => 3 * n - 8,
        _ => (t - 1) * n / 2,
    }
}

fn star(t: usize, n: usize, name: &str) -> Result<TuranValue, FormulaError> {
    need(n, t + 1, name)?;
    Ok(TuranValue::exact(star_value(t, n), true, "star".into()))
}

/// `K_1 + 2K_2`: between `2n − 3` and `19n/8 − 4`, the upper bound attained
/// exactly when `8 | n`.
fn fan_pair(n: usize, name: &str) -> Result<TuranValue, FormulaError> {
    need(n, 5, name)?;
    let bound = Ratio::new(19 * n as i64, 8) - 4;
    if n.is_multiple_of(8) {
        return Ok(TuranValue::exact(bound.to_integer() as usize, true, "fan-pair".into()));
    }
    Ok(TuranValue::interval(2 * n - 3, strict_floor_bound(bound), "fan-pair".into()))
}

/// `K_1 + 3K_2`: a table for `7 ≤ n ≤ 14`, then `⌊5n/2⌋ ≤ ex < 17n/6 − 4`.
fn fan_triple(n: usize, name: &str) -> Result<TuranValue, FormulaError> {
    need(n, 7, name)?;
    let exact = |v| Ok(TuranValue::exact(v, true, "fan-triple".into()));
    match n {
        7..=10 | 12 => exact(3 * n - 6),
        11 => exact(3 * n - 7),
        13 | 14 => exact(3 * n - 8),
        _ => {
            let bound = Ratio::new(17 * n as i64, 6) - 4;
            Ok(TuranValue::interval(5 * n / 2, strict_floor_bound(bound), "fan-triple".into()))
        }
    }
}

/// `K_1 + X` with `X` a linear forest on `t ∈ {4, 5, 6}` vertices. The star
/// `K_{1,t}` is a subgraph, so its value is a lower bound.
fn cone_bound(t: usize, n: usize, name: &str) -> Result<TuranValue, FormulaError> {
    need(n, t + 1, name)?;
    let (t, m) = (t as i64, n as i64);
    let bound = Ratio::new(13 * (t - 1) * m, 4 * t - 2) - Ratio::new(12 * (t - 1), 2 * t - 1);
    let lo = star_value(t as usize, n);
    let hi = super::floor_bound(bound).min(planar_max(n));
    debug_assert!(lo <= hi, "cone bound below the star value at t={t}, n={n}");
    let mut v = TuranValue::interval(lo, hi, "cone-bound".into());
    v.sharp = v.exact && bound == Ratio::from_integer(lo as i64);
    Ok(v)
}

fn fallback(h: &Graph, n: usize, name: &str) -> Result<TuranValue, FormulaError> {
    if !is_planar(h) {
        return Ok(TuranValue::exact(planar_max(n), true, "non-planar pattern".into()));
    }
    need(n, h.n(), name)?;
    let verdict = classify_pattern(h, n)?;
    match verdict.min_n {
        Some(min) if verdict.is_covered() => {
            need(n, min, name)?;
            Ok(TuranValue::exact(3 * n - 6, true, format!("classifier:{}", verdict.condition)))
        }
        _ => Err(FormulaError::NoTheorem {
            pattern: name.to_string(),
            n,
        }),
    }
}

/// Names an explicit graph that is a cone over a known base.
fn recognize(h: &Graph) -> Option<PatternSpec> {
    let n = h.n();
    let apex = (0..n).find(|&v| h.degree(v) + 1 == n)?;
    let base = h.delete_vertices(&[apex]).ok()?;
    let m = base.n();
    if m == 0 {
        return None;
    }
    if base.edge_count() == 0 {
        return Some(PatternSpec::Star(m));
    }
    if m >= 3 && base.is_connected() && (0..m).all(|v| base.degree(v) == 2) {
        return Some(PatternSpec::Wheel(m));
    }
    let comps = base.components();
    let s = comps[0].len();
    let cliques = comps
        .iter()
        .all(|c| c.len() == s && c.iter().all(|&v| base.degree(v) + 1 == s));
    if cliques && comps.len() >= 2 {
        return Some(PatternSpec::Fan { t: comps.len(), r: s + 1 });
    }
    if is_linear_forest(&base) {
        return Some(if comps.len() == 1 {
            PatternSpec::ConePath(m)
        } else {
            PatternSpec::ConeGraph(base)
        });
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn value(p: PatternSpec, n: usize) -> TuranValue {
        formula_value(&p, n).unwrap()
    }

    fn exact(p: PatternSpec, n: usize) -> usize {
        let v = value(p, n);
        assert!(v.exact, "{v:?}");
        v.lo
    }

    #[test]
    fn wheel_table() {
        let w4: Vec<_> = (5..=13).map(|n| exact(PatternSpec::Wheel(4), n)).collect();
        assert_eq!(w4, vec![8, 11, 13, 16, 19, 22, 25, 30, 33]);
        assert_eq!(exact(PatternSpec::Wheel(5), 7), 14);
        assert_eq!(exact(PatternSpec::Wheel(5), 6), 12);
        assert_eq!(exact(PatternSpec::Wheel(5), 8), 18);
        assert_eq!(exact(PatternSpec::Wheel(6), 7), 15);
        assert_eq!(exact(PatternSpec::Wheel(9), 10), 24);
        assert!(matches!(
            formula_value(&PatternSpec::Wheel(5), 5),
            Err(FormulaError::BelowRange { min: 6, .. })
        ));
    }

    #[test]
    fn star_table() {
        let t6: Vec<_> = (7..=16).map(|n| exact(PatternSpec::Star(6), n)).collect();
        assert_eq!(t6, vec![15, 18, 21, 24, 26, 30, 31, 34, 37, 40]);
        assert_eq!(exact(PatternSpec::Star(5), 7), 13);
        assert_eq!(exact(PatternSpec::Star(5), 20), 40);
        assert_eq!(exact(PatternSpec::Star(3), 7), 7);
        assert_eq!(exact(PatternSpec::Star(4), 7), 10);
        assert_eq!(exact(PatternSpec::Star(7), 8), 18);
        assert_eq!(exact(PatternSpec::Fan { t: 4, r: 2 }, 9), 13);
    }

    #[test]
    fn fan_pair_sharp_exactly_on_multiples_of_eight() {
        let v = value(PatternSpec::Fan { t: 2, r: 3 }, 16);
        assert!(v.exact && v.sharp);
        assert_eq!(v.lo, 34);
        let v = value(PatternSpec::Fan { t: 2, r: 3 }, 5);
        assert!(v.exact && !v.sharp);
        assert_eq!(v.lo, 7);
        for n in 5..200 {
            let v = value(PatternSpec::Fan { t: 2, r: 3 }, n);
            assert_eq!(v.sharp, n % 8 == 0, "n = {n}");
            assert_eq!(v.lo, if n % 8 == 0 { (19 * n / 8) - 4 } else { 2 * n - 3 });
        }
        assert_eq!(value(PatternSpec::Fan { t: 2, r: 3 }, 6).hi, 10);
    }

    #[test]
    fn fan_triple_table() {
        let small: Vec<_> = (7..=14).map(|n| exact(PatternSpec::Fan { t: 3, r: 3 }, n)).collect();
        assert_eq!(small, vec![15, 18, 21, 24, 26, 30, 31, 34]);
        let v = value(PatternSpec::Fan { t: 3, r: 3 }, 15);
        assert_eq!((v.lo, v.hi), (37, 38));
        // 17·24/6 − 4 = 64 is integral, so the strict bound drops to 63
        let v = value(PatternSpec::Fan { t: 3, r: 3 }, 24);
        assert_eq!((v.lo, v.hi), (60, 63));
    }

    #[test]
    fn cone_bound_values() {
        let v = value(PatternSpec::ConePath(4), 10);
        assert_eq!((v.lo, v.hi), (15, 22));
        for t in 4..=6 {
            for n in t + 1..300 {
                let v = value(PatternSpec::ConePath(t), n);
                assert!(v.lo <= v.hi && v.hi <= 3 * n - 6, "t={t} n={n} {v:?}");
            }
        }
    }

    #[test]
    fn fallbacks() {
        // contains K_4: 3n − 6 from n = 6 on
        assert_eq!(exact(PatternSpec::Wheel(3), 6), 12);
        assert!(matches!(
            formula_value(&PatternSpec::Wheel(3), 5),
            Err(FormulaError::BelowRange { min: 6, .. })
        ));
        assert_eq!(exact(PatternSpec::Fan { t: 4, r: 3 }, 9), 21);
        assert_eq!(exact(PatternSpec::Fan { t: 2, r: 6 }, 11), 27);
        assert!(matches!(
            formula_value(&PatternSpec::ConePath(3), 8),
            Err(FormulaError::NoTheorem { .. })
        ));
    }

    #[test]
    fn explicit_graphs_are_recognized() {
        let w5 = PatternSpec::Wheel(5).realize().canonical_form();
        assert_eq!(exact(PatternSpec::Explicit(w5), 7), 14);
        let fan = PatternSpec::Fan { t: 3, r: 3 }.realize().relabel(&[6, 5, 4, 3, 2, 1, 0]);
        assert_eq!(exact(PatternSpec::Explicit(fan), 11), 26);
        let forest = Graph::from_edges(5, [(0, 1), (2, 3)]).unwrap();
        let v = value(PatternSpec::ConeGraph(forest), 10);
        assert!(v.lo <= v.hi);
    }
}
