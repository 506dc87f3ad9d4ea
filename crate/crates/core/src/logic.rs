//! Binary aggregators (overlap functions, t-norms), their residual implicators,
//! and grid checks for the axioms O1..O8 and for adjointness.

use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result, EPS_EQ};

/// Bisection tolerance of the numeric residual.
pub const EPS_SUP: f64 = 1e-7;
/// Grid step used by default for axiom and adjointness checks.
pub const STANDARD_GRID: f64 = 0.01;

pub type BinaryFn = fn(f64, f64) -> f64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Overlap,
    TNorm,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Overlap => "overlap",
            Family::TNorm => "tnorm",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axiom {
    /// Commutativity.
    O1,
    /// `O(x,y) = 0` iff `xy = 0`.
    O2,
    /// `O(x,y) = 1` iff `xy = 1`.
    O3,
    /// Non-decreasing.
    O4,
    /// Continuity.
    O5,
    /// Exchange principle.
    O6,
    /// `O(x,1) <= x`.
    O7,
    /// `O(x,1) >= x`.
    O8,
}

impl Axiom {
    pub const ALL: [Axiom; 8] = [
        Axiom::O1,
        Axiom::O2,
        Axiom::O3,
        Axiom::O4,
        Axiom::O5,
        Axiom::O6,
        Axiom::O7,
        Axiom::O8,
    ];

    pub fn name(self) -> &'static str {
        ["O1", "O2", "O3", "O4", "O5", "O6", "O7", "O8"][self as usize]
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct AxiomSet(u8);

impl AxiomSet {
    pub const fn of(axioms: &[Axiom]) -> Self {
        let mut bits = 0u8;
        let mut i = 0;
        while i < axioms.len() {
            bits |= 1 << axioms[i] as u8;
            i += 1;
        }
        AxiomSet(bits)
    }

    pub fn contains(self, a: Axiom) -> bool {
        self.0 & (1 << a as u8) != 0
    }

    pub fn iter(self) -> impl Iterator<Item = Axiom> {
        Axiom::ALL.into_iter().filter(move |a| self.contains(*a))
    }
}

const OVERLAP_BASE: [Axiom; 5] = [Axiom::O1, Axiom::O2, Axiom::O3, Axiom::O4, Axiom::O5];

/// A binary function on the unit square with its declared axioms.
#[derive(Clone, Copy)]
pub struct Aggregator {
    name: &'static str,
    family: Family,
    eval: BinaryFn,
    declared: AxiomSet,
    residual: Option<BinaryFn>,
}

impl fmt::Debug for Aggregator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Aggregator")
            .field("name", &self.name)
            .field("family", &self.family)
            .finish()
    }
}

impl PartialEq for Aggregator {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name && self.family == other.family
    }
}

impl Aggregator {
    /// A user-supplied aggregator. Its residual is computed numerically.
    pub const fn custom(
        name: &'static str,
        family: Family,
        eval: BinaryFn,
        declared: AxiomSet,
    ) -> Self {
        Aggregator {
            name,
            family,
            eval,
            declared,
            residual: None,
        }
    }

    #[inline]
    pub fn eval(&self, x: f64, y: f64) -> f64 {
        (self.eval)(x, y)
    }

    pub fn name(&self) -> &'static str {
        self.name
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn declared(&self) -> AxiomSet {
        self.declared
    }

    pub fn declares(&self, a: Axiom) -> bool {
        self.declared.contains(a)
    }

    pub fn has_closed_residual(&self) -> bool {
        self.residual.is_some()
    }
}

fn sq(v: f64) -> f64 {
    v * v
}

fn sqrt(v: f64) -> f64 {
    libm::sqrt(v)
}

fn o2v(x: f64, y: f64) -> f64 {
    if x > 0.5 && y > 0.5 {
        (1.0 + sq(2.0 * x - 1.0) * sq(2.0 * y - 1.0)) / 2.0
    } else {
        x.min(y)
    }
}

// The last two branches are shared by the O2V and OmMV residuals.
fn low_branches(x: f64, y: f64) -> f64 {
    if y < 0.5 && x > y {
        y
    } else {
        debug_assert!(x <= 0.5 && x <= y);
        1.0
    }
}

fn i_o2v(x: f64, y: f64) -> f64 {
    if x > 0.5 && y >= 0.5 {
        (sqrt(2.0 * y - 1.0) / (2.0 * (2.0 * x - 1.0)) + 0.5).min(1.0)
    } else {
        low_branches(x, y)
    }
}

fn om12(x: f64, y: f64) -> f64 {
    sqrt(x).min(sqrt(y))
}

fn i_om12(x: f64, y: f64) -> f64 {
    if sqrt(x) <= y {
        1.0
    } else {
        y * y
    }
}

fn ommv(x: f64, y: f64) -> f64 {
    if x > 0.5 && y > 0.5 {
        let (a, b) = (2.0 * x - 1.0, 2.0 * y - 1.0);
        (1.0 + a.min(b) * sq(a).max(sq(b))) / 2.0
    } else {
        x.min(y)
    }
}

fn i_ommv(x: f64, y: f64) -> f64 {
    if x > 0.5 && y >= 0.5 {
        let (a, c) = (2.0 * x - 1.0, 2.0 * y - 1.0);
        let t = (sqrt(c) / (2.0 * sqrt(a))).min(c / (2.0 * sq(a)));
        (t + 0.5).min(1.0)
    } else {
        low_branches(x, y)
    }
}

fn od(x: f64, y: f64) -> f64 {
    x * x * y * y
}

fn i_od(x: f64, y: f64) -> f64 {
    if x * x <= y {
        1.0
    } else {
        sqrt(y / (x * x))
    }
}

fn om2(x: f64, y: f64) -> f64 {
    (x * x).min(y * y)
}

fn i_om2(x: f64, y: f64) -> f64 {
    if x * x <= y {
        1.0
    } else {
        sqrt(y)
    }
}

fn tprod(x: f64, y: f64) -> f64 {
    x * y
}

fn goguen(x: f64, y: f64) -> f64 {
    if x <= y {
        1.0
    } else {
        y / x
    }
}

fn tmin(x: f64, y: f64) -> f64 {
    x.min(y)
}

fn godel(x: f64, y: f64) -> f64 {
    if x <= y {
        1.0
    } else {
        y
    }
}

const fn builtin(
    name: &'static str,
    family: Family,
    eval: BinaryFn,
    residual: BinaryFn,
    extra: &[Axiom],
) -> Aggregator {
    let mut bits = AxiomSet::of(&OVERLAP_BASE).0;
    bits |= AxiomSet::of(extra).0;
    Aggregator {
        name,
        family,
        eval,
        declared: AxiomSet(bits),
        residual: Some(residual),
    }
}

pub const O2V: Aggregator = builtin("O2V", Family::Overlap, o2v, i_o2v, &[Axiom::O7]);
pub const OM12: Aggregator = builtin("Om12", Family::Overlap, om12, i_om12, &[Axiom::O8]);
pub const OMMV: Aggregator = builtin(
    "OmMV",
    Family::Overlap,
    ommv,
    i_ommv,
    &[Axiom::O7, Axiom::O8],
);
pub const OD: Aggregator = builtin("OD", Family::Overlap, od, i_od, &[Axiom::O7]);
pub const OM2: Aggregator = builtin("Om2", Family::Overlap, om2, i_om2, &[Axiom::O7]);
pub const TPROD: Aggregator = builtin(
    "Tprod",
    Family::TNorm,
    tprod,
    goguen,
    &[Axiom::O6, Axiom::O7, Axiom::O8],
);
pub const TMIN: Aggregator = builtin(
    "Tmin",
    Family::TNorm,
    tmin,
    godel,
    &[Axiom::O6, Axiom::O7, Axiom::O8],
);

pub const BUILTINS: [Aggregator; 7] = [O2V, OM12, OMMV, OD, OM2, TPROD, TMIN];

/// Looks up a built-in aggregator by name, ignoring ASCII case.
pub fn builtin_aggregator(name: &str) -> Result<Aggregator> {
    BUILTINS
        .iter()
        .find(|a| a.name.eq_ignore_ascii_case(name))
        .copied()
        .ok_or_else(|| Error::UnknownAggregator(name.to_string()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ImplicatorForm {
    ClosedForm,
    NumericSup,
}

/// Residual implicator `I(x,y) = sup{z : O(x,z) <= y}`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Implicator {
    source: Aggregator,
    form: ImplicatorForm,
}

impl Implicator {
    /// The bisection form, regardless of whether a closed form exists.
    pub fn numeric(source: Aggregator) -> Self {
        Implicator {
            source,
            form: ImplicatorForm::NumericSup,
        }
    }

    #[inline]
    pub fn eval(&self, x: f64, y: f64) -> f64 {
        match (self.form, self.source.residual) {
            (ImplicatorForm::ClosedForm, Some(f)) => f(x, y),
            _ => numeric_residual(&self.source, x, y),
        }
    }

    pub fn source(&self) -> &Aggregator {
        &self.source
    }

    pub fn form(&self) -> ImplicatorForm {
        self.form
    }
}

/// Bisection on the section `z -> O(x,z)`. Returns the upper bracket.
pub fn numeric_residual(a: &Aggregator, x: f64, y: f64) -> f64 {
    if a.eval(x, 1.0) <= y {
        return 1.0;
    }
    if a.eval(x, 0.0) > y {
        return 0.0;
    }
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    while hi - lo > EPS_SUP {
        let mid = 0.5 * (lo + hi);
        if a.eval(x, mid) <= y {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    hi
}

pub fn residual_implicator(a: &Aggregator) -> Result<Implicator> {
    if a.residual.is_none() {
        if let Outcome::Fail(w) = check_o4(a, &grid(STANDARD_GRID)) {
            return Err(Error::NonMonotoneAggregator { x: w.x, y: w.y });
        }
    }
    Ok(Implicator {
        source: *a,
        form: if a.residual.is_some() {
            ImplicatorForm::ClosedForm
        } else {
            ImplicatorForm::NumericSup
        },
    })
}

/// An aggregator together with its residual implicator.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Logic {
    pub aggregator: Aggregator,
    pub implicator: Implicator,
}

impl Logic {
    pub fn new(aggregator: Aggregator) -> Result<Self> {
        Ok(Logic {
            implicator: residual_implicator(&aggregator)?,
            aggregator,
        })
    }

    pub fn builtin(name: &str) -> Result<Self> {
        Self::new(builtin_aggregator(name)?)
    }

    #[inline]
    pub fn o(&self, x: f64, y: f64) -> f64 {
        self.aggregator.eval(x, y)
    }

    #[inline]
    pub fn i(&self, x: f64, y: f64) -> f64 {
        self.implicator.eval(x, y)
    }

    pub fn family(&self) -> Family {
        self.aggregator.family
    }

    pub fn has_o7(&self) -> bool {
        self.aggregator.declares(Axiom::O7)
    }
}

/// Grid points `0, step, .., 1` computed as `i / m` to avoid accumulation.
pub fn grid(step: f64) -> Vec<f64> {
    let m = libm::round(1.0 / step).max(1.0) as usize;
    (0..=m).map(|i| i as f64 / m as f64).collect()
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Witness {
    pub x: f64,
    pub y: f64,
    pub z: Option<f64>,
}

impl Witness {
    fn pair(x: f64, y: f64) -> Self {
        Witness { x, y, z: None }
    }

    fn triple(x: f64, y: f64, z: f64) -> Self {
        Witness { x, y, z: Some(z) }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Outcome {
    Pass,
    Fail(Witness),
    /// Continuity cannot be decided from samples; the largest adjacent jump is reported.
    Reported {
        max_jump: f64,
    },
}

impl Outcome {
    pub fn holds(&self) -> bool {
        !matches!(self, Outcome::Fail(_))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct AxiomReport {
    pub aggregator: &'static str,
    pub grid_step: f64,
    pub results: Vec<(Axiom, Outcome)>,
}

impl AxiomReport {
    pub fn outcome(&self, a: Axiom) -> Outcome {
        self.results
            .iter()
            .find(|(ax, _)| *ax == a)
            .map(|r| r.1)
            .unwrap_or(Outcome::Pass)
    }

    pub fn holds(&self, a: Axiom) -> bool {
        self.outcome(a).holds()
    }

    /// Declared axioms that failed on the grid.
    pub fn declared_failures(&self, declared: AxiomSet) -> Vec<Axiom> {
        declared.iter().filter(|a| !self.holds(*a)).collect()
    }
}

fn check_o4(a: &Aggregator, g: &[f64]) -> Outcome {
    for &y in g {
        for w in g.windows(2) {
            if a.eval(w[0], y) > a.eval(w[1], y) + EPS_EQ {
                return Outcome::Fail(Witness::pair(w[0], y));
            }
            if a.eval(y, w[0]) > a.eval(y, w[1]) + EPS_EQ {
                return Outcome::Fail(Witness::pair(y, w[0]));
            }
        }
    }
    Outcome::Pass
}

fn first_pair(g: &[f64], bad: impl Fn(f64, f64) -> bool) -> Outcome {
    for &x in g {
        for &y in g {
            if bad(x, y) {
                return Outcome::Fail(Witness::pair(x, y));
            }
        }
    }
    Outcome::Pass
}

pub fn check_axioms(a: &Aggregator, grid_step: f64) -> AxiomReport {
    let g = grid(grid_step);
    let o = |x, y| a.eval(x, y);
    let mut results = Vec::with_capacity(8);

    results.push((
        Axiom::O1,
        first_pair(&g, |x, y| (o(x, y) - o(y, x)).abs() > EPS_EQ),
    ));
    results.push((
        Axiom::O2,
        first_pair(&g, |x, y| {
            if x == 0.0 || y == 0.0 {
                o(x, y).abs() > EPS_EQ
            } else {
                o(x, y) <= 0.0
            }
        }),
    ));
    results.push((
        Axiom::O3,
        first_pair(&g, |x, y| {
            if x == 1.0 && y == 1.0 {
                o(x, y) < 1.0 - EPS_EQ
            } else {
                o(x, y) >= 1.0
            }
        }),
    ));
    results.push((Axiom::O4, check_o4(a, &g)));

    let mut max_jump = 0.0f64;
    for &y in &g {
        for w in g.windows(2) {
            max_jump = max_jump.max((o(w[1], y) - o(w[0], y)).abs());
        }
    }
    results.push((Axiom::O5, Outcome::Reported { max_jump }));

    let mut o6 = Outcome::Pass;
    'outer: for &x in &g {
        for &y in &g {
            for &z in &g {
                if (o(x, o(y, z)) - o(y, o(x, z))).abs() > EPS_EQ {
                    o6 = Outcome::Fail(Witness::triple(x, y, z));
                    break 'outer;
                }
            }
        }
    }
    results.push((Axiom::O6, o6));

    let section = |bad: &dyn Fn(f64) -> bool| {
        g.iter()
            .find(|&&x| bad(x))
            .map_or(Outcome::Pass, |&x| Outcome::Fail(Witness::pair(x, 1.0)))
    };
    results.push((Axiom::O7, section(&|x| o(x, 1.0) > x + EPS_EQ)));
    results.push((Axiom::O8, section(&|x| o(x, 1.0) < x - EPS_EQ)));

    AxiomReport {
        aggregator: a.name,
        grid_step,
        results,
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct AdjointnessReport {
    pub holds: bool,
    pub checked: usize,
    /// Up to [`AdjointnessReport::MAX_WITNESSES`] triples `(x, y, z)`.
    pub witnesses: Vec<Witness>,
}

impl AdjointnessReport {
    pub const MAX_WITNESSES: usize = 8;
}

/// Checks `O(x,z) <= y  <=>  I(x,y) >= z` on all grid triples.
///
/// A triple fails only when both sides disagree by more than [`EPS_EQ`].
pub fn check_adjointness(a: &Aggregator, i: &Implicator, grid_step: f64) -> AdjointnessReport {
    let g = grid(grid_step);
    let mut witnesses = Vec::new();
    let mut checked = 0;
    let mut failed = false;
    for &x in &g {
        for &y in &g {
            let imp = i.eval(x, y);
            for &z in &g {
                checked += 1;
                let o = a.eval(x, z);
                let forward = o < y - EPS_EQ && imp < z - EPS_EQ;
                let backward = imp > z + EPS_EQ && o > y + EPS_EQ;
                if forward || backward {
                    failed = true;
                    if witnesses.len() < AdjointnessReport::MAX_WITNESSES {
                        witnesses.push(Witness::triple(x, y, z));
                    }
                }
            }
        }
    }
    AdjointnessReport {
        holds: !failed,
        checked,
        witnesses,
    }
}

/// Largest `|closed - numeric|` over the grid, with its location.
///
/// `None` when the aggregator has no catalogued closed form.
pub fn closed_vs_numeric(a: &Aggregator, grid_step: f64) -> Option<(f64, Witness)> {
    let closed = a.residual?;
    let g = grid(grid_step);
    let mut worst = (0.0, Witness::pair(0.0, 0.0));
    for &x in &g {
        for &y in &g {
            let d = (closed(x, y) - numeric_residual(a, x, y)).abs();
            if d > worst.0 {
                worst = (d, Witness::pair(x, y));
            }
        }
    }
    Some(worst)
}
