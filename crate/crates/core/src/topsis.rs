//! TOPSIS ranking with weights taken from approximation precisions.
//!
//! Attributes are the columns of the decision matrix, each a fuzzy set over
//! the alternatives. Together they form the covering the rough set model is
//! built on.

use alloc::string::String;
use alloc::vec::Vec;

use crate::logic::Logic;
use crate::neighborhood::Group;
use crate::rough::ApproximationModel;
use crate::{Error, FuzzyCovering, FuzzySet, Result, Universe};

#[derive(Clone, Debug, PartialEq)]
pub struct DecisionProblem {
    alternatives: Universe,
    attribute_names: Vec<String>,
    attributes: FuzzyCovering,
    benefit: Vec<bool>,
}

impl DecisionProblem {
    /// `attributes` holds one fuzzy set per attribute; `benefit[s]` is false for cost attributes.
    pub fn new(
        alternatives: Universe,
        attribute_names: Vec<String>,
        attributes: FuzzyCovering,
        benefit: Vec<bool>,
    ) -> Result<Self> {
        if attributes.universe_len() != alternatives.len() {
            return Err(Error::UniverseMismatch {
                expected: alternatives.len(),
                found: attributes.universe_len(),
            });
        }
        for len in [attribute_names.len(), benefit.len()] {
            if len != attributes.len() {
                return Err(Error::LengthMismatch {
                    left: attributes.len(),
                    right: len,
                });
            }
        }
        Ok(DecisionProblem {
            alternatives,
            attribute_names,
            attributes,
            benefit,
        })
    }

    /// All-benefit problem from a row-per-alternative matrix with labels `x1..`, `K1..`.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        let m = rows.first().map_or(0, Vec::len);
        if let Some(r) = rows.iter().find(|r| r.len() != m) {
            return Err(Error::LengthMismatch {
                left: m,
                right: r.len(),
            });
        }
        let cols = (0..m)
            .map(|s| FuzzySet::new(rows.iter().map(|r| r[s]).collect()))
            .collect::<Result<Vec<_>>>()?;
        let names = (1..=m).map(|s| alloc::format!("K{s}")).collect();
        DecisionProblem::new(
            Universe::indexed(n)?,
            names,
            FuzzyCovering::new(cols)?,
            alloc::vec![true; m],
        )
    }

    pub fn with_cost(mut self, cost: &[usize]) -> Result<Self> {
        for &s in cost {
            if s >= self.benefit.len() {
                return Err(Error::LengthMismatch {
                    left: self.benefit.len(),
                    right: s + 1,
                });
            }
            self.benefit[s] = false;
        }
        Ok(self)
    }

    pub fn alternatives(&self) -> &Universe {
        &self.alternatives
    }

    pub fn attribute_names(&self) -> &[String] {
        &self.attribute_names
    }

    pub fn attributes(&self) -> &FuzzyCovering {
        &self.attributes
    }

    pub fn benefit(&self) -> &[bool] {
        &self.benefit
    }

    pub fn n_alternatives(&self) -> usize {
        self.alternatives.len()
    }

    pub fn n_attributes(&self) -> usize {
        self.attributes.len()
    }

    /// `K_s(x_t)`.
    pub fn value(&self, s: usize, t: usize) -> f64 {
        self.attributes.member(s)[t]
    }

    /// Row-per-alternative view.
    pub fn rows(&self) -> Vec<Vec<f64>> {
        (0..self.n_alternatives())
            .map(|t| (0..self.n_attributes()).map(|s| self.value(s, t)).collect())
            .collect()
    }
}

/// Per-attribute positive and negative ideal values.
pub fn ideal_solutions(p: &DecisionProblem) -> (Vec<f64>, Vec<f64>) {
    p.attributes
        .members()
        .iter()
        .zip(&p.benefit)
        .map(|(k, &b)| {
            let hi = k.memberships().iter().copied().fold(0.0, f64::max);
            let lo = k.memberships().iter().copied().fold(1.0, f64::min);
            if b {
                (hi, lo)
            } else {
                (lo, hi)
            }
        })
        .unzip()
}

/// `(d_up, d_down)` indexed `[s][t]`.
pub fn ideal_distances(p: &DecisionProblem) -> (Vec<Vec<f64>>, Vec<Vec<f64>>) {
    let (pis, nis) = ideal_solutions(p);
    let dist = |ideal: &[f64]| -> Vec<Vec<f64>> {
        (0..p.n_attributes())
            .map(|s| {
                (0..p.n_alternatives())
                    .map(|t| (p.value(s, t) - ideal[s]).abs())
                    .collect()
            })
            .collect()
    };
    (dist(&pis), dist(&nis))
}

/// Precision of each attribute under `m`.
pub fn attribute_precisions(p: &DecisionProblem, m: &ApproximationModel) -> Result<Vec<f64>> {
    crate::rough::precisions(m, p.attributes.members())
}

pub fn normalize(precisions: &[f64]) -> Result<Vec<f64>> {
    let total: f64 = precisions.iter().sum();
    if total <= 0.0 {
        return Err(Error::DegenerateWeights);
    }
    Ok(precisions.iter().map(|a| a / total).collect())
}

pub fn attribute_weights(p: &DecisionProblem, m: &ApproximationModel) -> Result<Vec<f64>> {
    normalize(&attribute_precisions(p, m)?)
}

#[derive(Clone, Debug, PartialEq)]
pub struct Closeness {
    pub h_up: f64,
    pub h_down: f64,
    pub values: Vec<f64>,
}

fn weighted(d: &[Vec<f64>], w: &[f64], t: usize) -> f64 {
    d.iter().zip(w).map(|(row, ws)| ws * row[t]).sum()
}

/// Closeness coefficients from weighted distances, all `<= 0`.
pub fn closeness(d_up: &[Vec<f64>], d_down: &[Vec<f64>], weights: &[f64]) -> Result<Closeness> {
    for len in [d_up.len(), d_down.len()] {
        if len != weights.len() {
            return Err(Error::LengthMismatch {
                left: weights.len(),
                right: len,
            });
        }
    }
    let n = d_up.first().map_or(0, Vec::len);
    let up: Vec<f64> = (0..n).map(|t| weighted(d_up, weights, t)).collect();
    let down: Vec<f64> = (0..n).map(|t| weighted(d_down, weights, t)).collect();
    let h_up = up.iter().copied().fold(f64::INFINITY, f64::min);
    let h_down = down.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if !(h_up > 0.0 && h_down > 0.0) {
        return Err(Error::DegenerateIdeal);
    }
    let values = up
        .iter()
        .zip(&down)
        .map(|(u, d)| d / h_down - u / h_up)
        .collect();
    Ok(Closeness {
        h_up,
        h_down,
        values,
    })
}

/// Alternative indices by descending closeness, ties to the lower index.
pub fn rank(closeness: &[f64]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..closeness.len()).collect();
    order.sort_by(|&a, &b| closeness[b].total_cmp(&closeness[a]).then(a.cmp(&b)));
    order
}

/// Rank position of each alternative given an ordering from [`rank`].
pub fn positions(order: &[usize]) -> Vec<usize> {
    let mut pos = alloc::vec![0; order.len()];
    for (r, &t) in order.iter().enumerate() {
        pos[t] = r;
    }
    pos
}

/// Spearman's rho between two orderings of the same alternatives.
pub fn spearman_rho(a: &[usize], b: &[usize]) -> Result<f64> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    let n = a.len();
    if n < 2 {
        return Ok(1.0);
    }
    let (pa, pb) = (positions(a), positions(b));
    let d2: f64 = pa
        .iter()
        .zip(&pb)
        .map(|(&x, &y)| {
            let d = x as f64 - y as f64;
            d * d
        })
        .sum();
    let n = n as f64;
    Ok(1.0 - 6.0 * d2 / (n * (n * n - 1.0)))
}

/// A model group together with the logic it runs on.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ModelSelector {
    pub group: Group,
    pub logic: Logic,
}

impl ModelSelector {
    pub fn new(group: Group, logic: Logic) -> Self {
        ModelSelector { group, logic }
    }

    pub fn model(&self, p: &DecisionProblem) -> Result<ApproximationModel> {
        ApproximationModel::from_group(&p.attributes, self.group, &self.logic)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct DecisionResult {
    pub pis: Vec<f64>,
    pub nis: Vec<f64>,
    /// `[s][t]`
    pub d_up: Vec<Vec<f64>>,
    /// `[s][t]`
    pub d_down: Vec<Vec<f64>>,
    pub precisions: Vec<f64>,
    pub weights: Vec<f64>,
    pub h_up: f64,
    pub h_down: f64,
    pub closeness: Vec<f64>,
    /// Alternative indices, best first.
    pub ranking: Vec<usize>,
}

pub fn run_pipeline(p: &DecisionProblem, sel: &ModelSelector) -> Result<DecisionResult> {
    let (pis, nis) = ideal_solutions(p);
    let (d_up, d_down) = ideal_distances(p);
    let model = sel.model(p)?;
    let precisions = attribute_precisions(p, &model)?;
    let weights = normalize(&precisions)?;
    let c = closeness(&d_up, &d_down, &weights)?;
    Ok(DecisionResult {
        pis,
        nis,
        d_up,
        d_down,
        precisions,
        weights,
        h_up: c.h_up,
        h_down: c.h_down,
        ranking: rank(&c.values),
        closeness: c.values,
    })
}
