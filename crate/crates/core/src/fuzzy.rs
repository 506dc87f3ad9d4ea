//! Fuzzy sets over a finite universe and fuzzy coverings.

use alloc::string::String;
use alloc::vec::Vec;

use crate::{Error, Result};

/// Tolerance for membership equality and inclusion.
pub const EPS_EQ: f64 = 1e-9;
/// Tolerance used when comparing against four-decimal reference tables.
pub const REPORT_TOL: f64 = 5e-4;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Universe {
    labels: Vec<String>,
}

impl Universe {
    pub fn new(labels: Vec<String>) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::EmptyUniverse);
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        Ok(Universe { labels })
    }

    /// Universe labelled `x1..xn`.
    pub fn indexed(n: usize) -> Result<Self> {
        Self::new((1..=n).map(|i| alloc::format!("x{i}")).collect())
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn position(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

/// Membership vector indexed by universe position.
#[derive(Clone, Debug, PartialEq)]
pub struct FuzzySet(Vec<f64>);

impl FuzzySet {
    pub fn new(memberships: Vec<f64>) -> Result<Self> {
        for (index, &value) in memberships.iter().enumerate() {
            if !(0.0..=1.0).contains(&value) {
                return Err(Error::Range { index, value });
            }
        }
        Ok(FuzzySet(memberships))
    }

    pub fn from_slice(m: &[f64]) -> Result<Self> {
        Self::new(m.to_vec())
    }

    /// Clamps into [0, 1]. For values produced by arithmetic that may drift by an ulp.
    pub(crate) fn clamped(mut m: Vec<f64>) -> Self {
        for v in &mut m {
            *v = v.clamp(0.0, 1.0);
        }
        FuzzySet(m)
    }

    pub fn constant(n: usize, value: f64) -> Result<Self> {
        Self::new(alloc::vec![value; n])
    }

    pub fn empty(n: usize) -> Self {
        FuzzySet(alloc::vec![0.0; n])
    }

    pub fn full(n: usize) -> Self {
        FuzzySet(alloc::vec![1.0; n])
    }

    /// The crisp singleton `1_y`.
    pub fn singleton(n: usize, y: usize) -> Self {
        let mut m = alloc::vec![0.0; n];
        m[y] = 1.0;
        FuzzySet(m)
    }

    /// The crisp set `1_X` for the listed positions.
    pub fn crisp(n: usize, positions: &[usize]) -> Self {
        let mut m = alloc::vec![0.0; n];
        for &p in positions {
            m[p] = 1.0;
        }
        FuzzySet(m)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, x: usize) -> f64 {
        self.0[x]
    }

    pub fn memberships(&self) -> &[f64] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.0
    }

    /// True when every membership is zero.
    pub fn is_null(&self) -> bool {
        self.0.iter().all(|&v| v <= 0.0)
    }

    fn check_len(&self, other: &FuzzySet) -> Result<()> {
        if self.len() != other.len() {
            return Err(Error::UniverseMismatch {
                expected: self.len(),
                found: other.len(),
            });
        }
        Ok(())
    }

    pub fn complement(&self) -> FuzzySet {
        FuzzySet(self.0.iter().map(|v| 1.0 - v).collect())
    }

    /// Sigma-count: the sum of memberships.
    pub fn sigma_count(&self) -> f64 {
        self.0.iter().sum()
    }

    pub fn union(&self, other: &FuzzySet) -> Result<FuzzySet> {
        self.check_len(other)?;
        Ok(FuzzySet(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.max(*b))
                .collect(),
        ))
    }

    pub fn intersection(&self, other: &FuzzySet) -> Result<FuzzySet> {
        self.check_len(other)?;
        Ok(FuzzySet(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.min(*b))
                .collect(),
        ))
    }

    /// `self ⊆ other` up to [`EPS_EQ`].
    pub fn is_subset(&self, other: &FuzzySet) -> Result<bool> {
        self.check_len(other)?;
        Ok(self.subset_of(other))
    }

    pub(crate) fn subset_of(&self, other: &FuzzySet) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a <= b + EPS_EQ)
    }

    /// Pointwise equality within `eps`. Sets of different length are never equal.
    pub fn approx_eq(&self, other: &FuzzySet, eps: f64) -> bool {
        self.len() == other.len()
            && self
                .0
                .iter()
                .zip(&other.0)
                .all(|(a, b)| (a - b).abs() <= eps)
    }

    pub fn max_abs_diff(&self, other: &FuzzySet) -> f64 {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

impl core::ops::Index<usize> for FuzzySet {
    type Output = f64;

    fn index(&self, x: usize) -> &f64 {
        &self.0[x]
    }
}

fn fold_sets(sets: &[FuzzySet], op: fn(f64, f64) -> f64) -> Result<FuzzySet> {
    let (first, rest) = sets.split_first().ok_or(Error::EmptyFamily)?;
    let mut acc = first.clone();
    for s in rest {
        acc.check_len(s)?;
        for (a, b) in acc.0.iter_mut().zip(&s.0) {
            *a = op(*a, *b);
        }
    }
    Ok(acc)
}

pub fn union(sets: &[FuzzySet]) -> Result<FuzzySet> {
    fold_sets(sets, f64::max)
}

pub fn intersection(sets: &[FuzzySet]) -> Result<FuzzySet> {
    fold_sets(sets, f64::min)
}

/// Non-empty family of fuzzy sets whose pointwise maximum is 1 at every element.
#[derive(Clone, Debug, PartialEq)]
pub struct FuzzyCovering {
    n: usize,
    members: Vec<FuzzySet>,
}

impl FuzzyCovering {
    pub fn new(members: Vec<FuzzySet>) -> Result<Self> {
        let n = members.first().ok_or(Error::EmptyFamily)?.len();
        if n == 0 {
            return Err(Error::EmptyUniverse);
        }
        for (k, m) in members.iter().enumerate() {
            if m.len() != n {
                return Err(Error::UniverseMismatch {
                    expected: n,
                    found: m.len(),
                });
            }
            if m.is_null() {
                return Err(Error::EmptyMember(k));
            }
        }
        for x in 0..n {
            let top = members.iter().map(|m| m.get(x)).fold(0.0, f64::max);
            if top < 1.0 - EPS_EQ {
                return Err(Error::NotACovering(x));
            }
        }
        Ok(FuzzyCovering { n, members })
    }

    /// Additionally requires one member equal to 1 on the whole universe.
    pub fn new_strict(members: Vec<FuzzySet>) -> Result<Self> {
        let c = Self::new(members)?;
        if !c
            .members
            .iter()
            .any(|m| m.0.iter().all(|&v| v >= 1.0 - EPS_EQ))
        {
            return Err(Error::NoUniversalMember);
        }
        Ok(c)
    }

    pub fn from_rows(rows: &[&[f64]]) -> Result<Self> {
        let members = rows
            .iter()
            .map(|r| FuzzySet::from_slice(r))
            .collect::<Result<Vec<_>>>()?;
        Self::new(members)
    }

    pub fn universe_len(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[FuzzySet] {
        &self.members
    }

    pub fn member(&self, k: usize) -> &FuzzySet {
        &self.members[k]
    }

    /// Drops later members equal (within [`EPS_EQ`]) to an earlier one.
    pub fn dedup(&self) -> FuzzyCovering {
        FuzzyCovering {
            n: self.n,
            members: dedup_sets(self.members.iter().cloned()),
        }
    }

    /// Same members as `other`, as sets of values.
    pub fn same_members(&self, other: &FuzzyCovering) -> bool {
        let has =
            |c: &FuzzyCovering, k: &FuzzySet| c.members.iter().any(|m| m.approx_eq(k, EPS_EQ));
        self.members.iter().all(|k| has(other, k)) && other.members.iter().all(|k| has(self, k))
    }

    pub fn contains_member(&self, k: &FuzzySet) -> bool {
        self.members.iter().any(|m| m.approx_eq(k, EPS_EQ))
    }
}

pub(crate) fn dedup_sets(sets: impl IntoIterator<Item = FuzzySet>) -> Vec<FuzzySet> {
    let mut out: Vec<FuzzySet> = Vec::new();
    for s in sets {
        if !out.iter().any(|q| q.approx_eq(&s, EPS_EQ)) {
            out.push(s);
        }
    }
    out
}

pub fn validate_covering(members: Vec<FuzzySet>, u: &Universe) -> Result<FuzzyCovering> {
    if let Some(m) = members.iter().find(|m| m.len() != u.len()) {
        return Err(Error::UniverseMismatch {
            expected: u.len(),
            found: m.len(),
        });
    }
    FuzzyCovering::new(members)
}
