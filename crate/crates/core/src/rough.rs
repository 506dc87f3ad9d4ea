//! Lower and upper approximations over a neighborhood operator.

use alloc::vec::Vec;

use crate::logic::{Family, Logic};
use crate::neighborhood::{build_operator, Group, NeighborhoodOperator};
use crate::{Error, FuzzyCovering, FuzzySet, Result, EPS_EQ};

/// A rough set model: a neighborhood operator tagged with its group.
#[derive(Clone, Debug, PartialEq)]
pub struct ApproximationModel {
    operator: NeighborhoodOperator,
    family: Family,
    group: Option<Group>,
}

/// Lower and upper approximation of one target set.
#[derive(Clone, Debug, PartialEq)]
pub struct ApproximationPair {
    pub lower: FuzzySet,
    pub upper: FuzzySet,
}

impl ApproximationModel {
    /// Wraps an operator, looking its group up in the static table.
    pub fn new(operator: NeighborhoodOperator, family: Family) -> Self {
        let group = Group::of(operator.index(), operator.variant(), family);
        ApproximationModel {
            operator,
            family,
            group,
        }
    }

    /// Builds the representative operator of `group` over `c`.
    pub fn from_group(c: &FuzzyCovering, group: Group, logic: &Logic) -> Result<Self> {
        let family = logic.family();
        let (i, v) = group.representative(family)?;
        let operator = build_operator(c, i, v, logic)?;
        Ok(ApproximationModel {
            operator,
            family,
            group: Some(group),
        })
    }

    pub fn operator(&self) -> &NeighborhoodOperator {
        &self.operator
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn group(&self) -> Option<Group> {
        self.group
    }

    pub fn universe_len(&self) -> usize {
        self.operator.universe_len()
    }

    fn check(&self, x: &FuzzySet) -> Result<()> {
        if x.len() != self.universe_len() {
            return Err(Error::UniverseMismatch {
                expected: self.universe_len(),
                found: x.len(),
            });
        }
        Ok(())
    }

    /// `x ↦ min_y max(1 - N(x)(y), X(y))`.
    pub fn lower(&self, target: &FuzzySet) -> Result<FuzzySet> {
        self.check(target)?;
        let n = self.universe_len();
        let v = (0..n)
            .map(|x| {
                (0..n)
                    .map(|y| f64::max(1.0 - self.operator.get(x, y), target[y]))
                    .fold(1.0, f64::min)
            })
            .collect();
        Ok(FuzzySet::clamped(v))
    }

    /// `x ↦ max_y min(N(x)(y), X(y))`.
    pub fn upper(&self, target: &FuzzySet) -> Result<FuzzySet> {
        self.check(target)?;
        let n = self.universe_len();
        let v = (0..n)
            .map(|x| {
                (0..n)
                    .map(|y| f64::min(self.operator.get(x, y), target[y]))
                    .fold(0.0, f64::max)
            })
            .collect();
        Ok(FuzzySet::clamped(v))
    }

    pub fn approximate(&self, target: &FuzzySet) -> Result<ApproximationPair> {
        Ok(ApproximationPair {
            lower: self.lower(target)?,
            upper: self.upper(target)?,
        })
    }

    /// `|lower(K)| / |upper(K)|` with sigma counts.
    pub fn precision(&self, target: &FuzzySet) -> Result<f64> {
        let p = self.approximate(target)?;
        precision_of(&p)
    }
}

pub fn precision_of(p: &ApproximationPair) -> Result<f64> {
    let up = p.upper.sigma_count();
    if up <= EPS_EQ {
        return Err(Error::ZeroUpperCardinality);
    }
    Ok(p.lower.sigma_count() / up)
}

/// Order of two approximation pairs on one target.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ModelOrder {
    Equal,
    /// Larger lower and smaller upper approximation.
    Finer,
    Coarser,
    Incomparable,
}

pub fn compare_models(
    a: &ApproximationModel,
    b: &ApproximationModel,
    target: &FuzzySet,
) -> Result<ModelOrder> {
    if a.universe_len() != b.universe_len() {
        return Err(Error::UniverseMismatch {
            expected: a.universe_len(),
            found: b.universe_len(),
        });
    }
    let pa = a.approximate(target)?;
    let pb = b.approximate(target)?;
    let a_finer = pb.lower.subset_of(&pa.lower) && pa.upper.subset_of(&pb.upper);
    let b_finer = pa.lower.subset_of(&pb.lower) && pb.upper.subset_of(&pa.upper);
    Ok(match (a_finer, b_finer) {
        (true, true) => ModelOrder::Equal,
        (true, false) => ModelOrder::Finer,
        (false, true) => ModelOrder::Coarser,
        (false, false) => ModelOrder::Incomparable,
    })
}

/// Precision of every target under one model.
pub fn precisions(m: &ApproximationModel, targets: &[FuzzySet]) -> Result<Vec<f64>> {
    targets.iter().map(|k| m.precision(k)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::{O2V, OD};
    use crate::neighborhood::Variant;

    fn set(v: &[f64]) -> FuzzySet {
        FuzzySet::from_slice(v).unwrap()
    }

    fn six_point() -> FuzzyCovering {
        FuzzyCovering::from_rows(&[
            &[1.0, 0.4, 0.7, 0.3, 0.6, 1.0],
            &[0.4, 1.0, 0.1, 1.0, 1.0, 0.5],
            &[0.8, 0.2, 1.0, 0.5, 1.0, 1.0],
            &[0.1, 0.7, 0.4, 1.0, 1.0, 1.0],
        ])
        .unwrap()
    }

    #[test]
    fn n4_approximations_on_six_points() {
        let l = Logic::new(O2V).unwrap();
        let m = ApproximationModel::new(
            build_operator(&six_point(), 4, Variant::Original, &l).unwrap(),
            Family::Overlap,
        );
        assert_eq!(m.group(), Some(Group::H1));
        let x = set(&[0.3, 0.4, 0.7, 0.5, 0.6, 0.1]);
        let p = m.approximate(&x).unwrap();
        assert!(p
            .lower
            .approx_eq(&set(&[0.1, 0.4, 0.1, 0.1, 0.1, 0.1]), 5e-4));
        assert!(p
            .upper
            .approx_eq(&set(&[0.68, 0.6, 0.7, 0.6, 0.7, 0.7]), 5e-4));
    }

    #[test]
    fn bounds_and_errors() {
        let l = Logic::new(OD).unwrap();
        let m = ApproximationModel::from_group(&six_point(), Group::A1, &l).unwrap();
        assert_eq!(m.lower(&FuzzySet::full(6)).unwrap(), FuzzySet::full(6));
        assert_eq!(m.upper(&FuzzySet::empty(6)).unwrap(), FuzzySet::empty(6));
        assert_eq!(
            m.precision(&FuzzySet::empty(6)),
            Err(Error::ZeroUpperCardinality)
        );
        assert!(matches!(
            m.lower(&FuzzySet::full(3)),
            Err(Error::UniverseMismatch { .. })
        ));
        assert_eq!(m.precision(&FuzzySet::full(6)).unwrap(), 1.0);
        let x = set(&[0.2, 0.9, 0.4, 0.5, 0.3, 0.7]);
        assert_eq!(compare_models(&m, &m, &x).unwrap(), ModelOrder::Equal);
    }
}
