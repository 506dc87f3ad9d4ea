//! Neighborhood systems, minimal and maximal descriptions, derived coverings,
//! the operators `N1..N4` and their grouping and comparison.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::fuzzy::dedup_sets;
use crate::logic::{Aggregator, Family, Logic};
use crate::{Error, FuzzyCovering, FuzzySet, Result, EPS_EQ};

/// Largest covering accepted by the intersection and union reductions.
pub const ENUMERATION_CAP: usize = 20;

/// Members with `K(x) > 0`.
pub fn neighborhood_system(c: &FuzzyCovering, x: usize) -> Vec<usize> {
    (0..c.len()).filter(|&k| c.member(k)[x] > EPS_EQ).collect()
}

fn description(c: &FuzzyCovering, x: usize, minimal: bool) -> Vec<usize> {
    let sys = neighborhood_system(c, x);
    sys.iter()
        .copied()
        .filter(|&k| {
            let kk = c.member(k);
            !sys.iter().any(|&s| {
                let ss = c.member(s);
                (ss[x] - kk[x]).abs() <= EPS_EQ
                    && !ss.approx_eq(kk, EPS_EQ)
                    && if minimal {
                        ss.subset_of(kk)
                    } else {
                        kk.subset_of(ss)
                    }
            })
        })
        .collect()
}

/// `md(C, x)`: members of the neighborhood system with no strictly smaller
/// member sharing their value at `x`.
pub fn minimal_description(c: &FuzzyCovering, x: usize) -> Vec<usize> {
    description(c, x, true)
}

/// `MD(C, x)`: the dual of [`minimal_description`].
pub fn maximal_description(c: &FuzzyCovering, x: usize) -> Vec<usize> {
    description(c, x, false)
}

/// Neighborhood system and both descriptions for every element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DescriptionFamily {
    pub system: Vec<Vec<usize>>,
    pub minimal: Vec<Vec<usize>>,
    pub maximal: Vec<Vec<usize>>,
}

impl DescriptionFamily {
    pub fn of(c: &FuzzyCovering) -> Self {
        let n = c.universe_len();
        DescriptionFamily {
            system: (0..n).map(|x| neighborhood_system(c, x)).collect(),
            minimal: (0..n).map(|x| minimal_description(c, x)).collect(),
            maximal: (0..n).map(|x| maximal_description(c, x)).collect(),
        }
    }
}

/// The covering an operator is built on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variant {
    /// `C` itself.
    Original,
    /// Union of the minimal descriptions.
    MinimalUnion,
    /// Union of the maximal descriptions.
    MaximalUnion,
    /// Rows of `N1` over `C`.
    Implied,
    /// Rows of `N4` over `C`.
    Aggregated,
    /// Intersection-irreducible members.
    Intersection,
}

impl Variant {
    pub const ALL: [Variant; 6] = [
        Variant::Original,
        Variant::MinimalUnion,
        Variant::MaximalUnion,
        Variant::Implied,
        Variant::Aggregated,
        Variant::Intersection,
    ];

    pub fn index(self) -> u8 {
        self as u8
    }

    pub fn from_index(j: u8) -> Result<Self> {
        Self::ALL
            .get(j as usize)
            .copied()
            .ok_or(Error::InvalidVariant { index: j })
    }
}

fn check_cap(c: &FuzzyCovering) -> Result<FuzzyCovering> {
    let d = c.dedup();
    if d.len() > ENUMERATION_CAP {
        return Err(Error::CoveringTooLarge {
            size: d.len(),
            cap: ENUMERATION_CAP,
        });
    }
    Ok(d)
}

/// Drops every member equal to the intersection of some non-empty family of
/// other members.
///
/// Only supersets of `K` can take part in such a family, and intersecting all
/// of them gives the smallest candidate, so one test per member suffices.
pub fn intersection_reduct(c: &FuzzyCovering) -> Result<FuzzyCovering> {
    let d = check_cap(c)?;
    let keep = (0..d.len()).filter(|&a| {
        let k = d.member(a);
        let sup: Vec<FuzzySet> = (0..d.len())
            .filter(|&b| b != a && k.subset_of(d.member(b)))
            .map(|b| d.member(b).clone())
            .collect();
        sup.is_empty() || !crate::fuzzy::intersection(&sup).is_ok_and(|m| m.approx_eq(k, EPS_EQ))
    });
    FuzzyCovering::new(keep.map(|a| d.member(a).clone()).collect())
}

/// Dual of [`intersection_reduct`] with unions of subsets.
pub fn union_reduct(c: &FuzzyCovering) -> Result<FuzzyCovering> {
    let d = check_cap(c)?;
    let keep = (0..d.len()).filter(|&a| {
        let k = d.member(a);
        let sub: Vec<FuzzySet> = (0..d.len())
            .filter(|&b| b != a && d.member(b).subset_of(k))
            .map(|b| d.member(b).clone())
            .collect();
        sub.is_empty() || !crate::fuzzy::union(&sub).is_ok_and(|m| m.approx_eq(k, EPS_EQ))
    });
    FuzzyCovering::new(keep.map(|a| d.member(a).clone()).collect())
}

pub fn derived_covering(c: &FuzzyCovering, v: Variant, logic: &Logic) -> Result<FuzzyCovering> {
    let n = c.universe_len();
    let gather = |pick: fn(&FuzzyCovering, usize) -> Vec<usize>| {
        let sets = (0..n).flat_map(|x| pick(c, x)).map(|k| c.member(k).clone());
        FuzzyCovering::new(dedup_sets(sets))
    };
    let rows = |i: u8| -> Result<FuzzyCovering> {
        if !logic.has_o7() {
            return Err(Error::MissingO7);
        }
        let op = NeighborhoodOperator::on(c.clone(), i, Variant::Original, logic)?;
        FuzzyCovering::new(dedup_sets((0..n).map(|x| op.row(x))))
    };
    match v {
        Variant::Original => Ok(c.clone()),
        Variant::MinimalUnion => gather(minimal_description),
        Variant::MaximalUnion => gather(maximal_description),
        Variant::Implied => rows(1),
        Variant::Aggregated => rows(4),
        Variant::Intersection => intersection_reduct(c),
    }
}

fn check_index(i: u8) -> Result<()> {
    if (1..=4).contains(&i) {
        Ok(())
    } else {
        Err(Error::InvalidOperator { index: i })
    }
}

fn row_values(c: &FuzzyCovering, i: u8, logic: &Logic, x: usize) -> Vec<f64> {
    let n = c.universe_len();
    let members = c.members();
    let inf_i = |ks: &mut dyn Iterator<Item = &FuzzySet>, y: usize| {
        ks.map(|k| logic.i(k[x], k[y])).fold(1.0, f64::min)
    };
    let sup_o = |ks: &mut dyn Iterator<Item = &FuzzySet>, y: usize| {
        ks.map(|k| logic.o(k[x], k[y])).fold(0.0, f64::max)
    };
    match i {
        1 => (0..n).map(|y| inf_i(&mut members.iter(), y)).collect(),
        2 => {
            let md = minimal_description(c, x);
            (0..n)
                .map(|y| sup_o(&mut md.iter().map(|&k| &members[k]), y))
                .collect()
        }
        3 => {
            let mx = maximal_description(c, x);
            (0..n)
                .map(|y| inf_i(&mut mx.iter().map(|&k| &members[k]), y))
                .collect()
        }
        _ => (0..n).map(|y| sup_o(&mut members.iter(), y)).collect(),
    }
}

/// `N_i(x)` over `c` as a fuzzy set in `y`.
pub fn neighborhood(c: &FuzzyCovering, i: u8, logic: &Logic, x: usize) -> Result<FuzzySet> {
    check_index(i)?;
    Ok(FuzzySet::clamped(row_values(c, i, logic, x)))
}

/// The matrix `N_i^{C_j}(x)(y)` together with the covering it was built on.
#[derive(Clone, Debug, PartialEq)]
pub struct NeighborhoodOperator {
    covering: FuzzyCovering,
    index: u8,
    variant: Variant,
    n: usize,
    matrix: Vec<f64>,
}

impl NeighborhoodOperator {
    /// Builds `N_i` directly on `covering`, which is recorded as variant `v`.
    fn on(covering: FuzzyCovering, i: u8, v: Variant, logic: &Logic) -> Result<Self> {
        check_index(i)?;
        let n = covering.universe_len();
        let mut matrix = Vec::with_capacity(n * n);
        for x in 0..n {
            matrix.extend(
                row_values(&covering, i, logic, x)
                    .into_iter()
                    .map(|v| v.clamp(0.0, 1.0)),
            );
        }
        Ok(NeighborhoodOperator {
            covering,
            index: i,
            variant: v,
            n,
            matrix,
        })
    }

    pub fn index(&self) -> u8 {
        self.index
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    /// The derived covering the matrix was computed on.
    pub fn covering(&self) -> &FuzzyCovering {
        &self.covering
    }

    pub fn universe_len(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> f64 {
        self.matrix[x * self.n + y]
    }

    pub fn row(&self, x: usize) -> FuzzySet {
        FuzzySet::clamped(self.matrix[x * self.n..(x + 1) * self.n].to_vec())
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        self.matrix.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    /// `"N<i>^C<j>"`.
    pub fn label(&self) -> String {
        operator_label(self.index, self.variant)
    }

    /// Pointwise equality within `eps`.
    pub fn approx_eq(&self, other: &Self, eps: f64) -> bool {
        self.n == other.n
            && self
                .matrix
                .iter()
                .zip(&other.matrix)
                .all(|(a, b)| (a - b).abs() <= eps)
    }
}

pub fn operator_label(i: u8, v: Variant) -> String {
    format!("N{}^C{}", i, v.index())
}

pub fn build_operator(
    c: &FuzzyCovering,
    i: u8,
    v: Variant,
    logic: &Logic,
) -> Result<NeighborhoodOperator> {
    check_index(i)?;
    let cj = derived_covering(c, v, logic)?;
    NeighborhoodOperator::on(cj, i, v, logic)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Property {
    Reflexive,
    Symmetric,
    /// `O(N(x)(y), N(y)(z)) <= N(x)(z)`.
    Transitive(Aggregator),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyCheck {
    pub holds: bool,
    /// First failing element, pair or triple.
    pub witness: Option<Vec<usize>>,
}

pub fn check_property(op: &NeighborhoodOperator, p: Property) -> PropertyCheck {
    let n = op.n;
    let witness = match p {
        Property::Reflexive => (0..n)
            .find(|&x| op.get(x, x) < 1.0 - EPS_EQ)
            .map(|x| alloc::vec![x]),
        Property::Symmetric => (0..n)
            .flat_map(|x| (0..n).map(move |y| (x, y)))
            .find(|&(x, y)| (op.get(x, y) - op.get(y, x)).abs() > EPS_EQ)
            .map(|(x, y)| alloc::vec![x, y]),
        Property::Transitive(agg) => {
            let mut found = None;
            'outer: for x in 0..n {
                for y in 0..n {
                    for z in 0..n {
                        if agg.eval(op.get(x, y), op.get(y, z)) > op.get(x, z) + EPS_EQ {
                            found = Some(alloc::vec![x, y, z]);
                            break 'outer;
                        }
                    }
                }
            }
            found
        }
    };
    PropertyCheck {
        holds: witness.is_none(),
        witness,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Relation {
    Equal,
    /// `a <= b` pointwise, and not equal.
    Leq,
    /// `a >= b` pointwise, and not equal.
    Geq,
    Incomparable,
}

impl Relation {
    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Equal => "=",
            Relation::Leq => "<=",
            Relation::Geq => ">=",
            Relation::Incomparable => "||",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Comparison {
    pub relation: Relation,
    /// A pair with `a(x)(y) > b(x)(y) + eps`.
    pub a_above: Option<(usize, usize)>,
    /// A pair with `b(x)(y) > a(x)(y) + eps`.
    pub b_above: Option<(usize, usize)>,
}

pub fn compare_operators(a: &NeighborhoodOperator, b: &NeighborhoodOperator) -> Result<Comparison> {
    compare_operators_eps(a, b, EPS_EQ)
}

pub fn compare_operators_eps(
    a: &NeighborhoodOperator,
    b: &NeighborhoodOperator,
    eps: f64,
) -> Result<Comparison> {
    if a.n != b.n {
        return Err(Error::UniverseMismatch {
            expected: a.n,
            found: b.n,
        });
    }
    let n = a.n;
    let pairs = || (0..n).flat_map(move |x| (0..n).map(move |y| (x, y)));
    let a_above = pairs().find(|&(x, y)| a.get(x, y) > b.get(x, y) + eps);
    let b_above = pairs().find(|&(x, y)| b.get(x, y) > a.get(x, y) + eps);
    let relation = match (a_above, b_above) {
        (None, None) => Relation::Equal,
        (None, Some(_)) => Relation::Leq,
        (Some(_), None) => Relation::Geq,
        (Some(_), Some(_)) => Relation::Incomparable,
    };
    Ok(Comparison {
        relation,
        a_above,
        b_above,
    })
}

/// Equality classes of the 24 operators `N_i^{C_j}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Group {
    A1,
    A2,
    A3,
    B,
    C,
    D,
    E,
    F1,
    F2,
    G,
    H1,
    H2,
    I,
    J,
    K,
    L,
    M,
}

use Variant::{
    Aggregated as V4, Implied as V3, Intersection as V5, MaximalUnion as V2, MinimalUnion as V1,
    Original as V0,
};

const OVERLAP_TABLE: [(Group, &[(u8, Variant)]); 17] = [
    (Group::A1, &[(1, V0), (1, V1), (1, V5)]),
    (Group::A2, &[(2, V3)]),
    (Group::A3, &[(1, V3)]),
    (Group::B, &[(3, V1)]),
    (Group::C, &[(3, V3)]),
    (Group::D, &[(4, V3)]),
    (Group::E, &[(2, V0), (2, V1)]),
    (Group::F1, &[(3, V0), (3, V2), (3, V5)]),
    (Group::F2, &[(1, V2)]),
    (Group::G, &[(1, V4)]),
    (Group::H1, &[(4, V0), (4, V2), (4, V5)]),
    (Group::H2, &[(2, V2)]),
    (Group::I, &[(2, V4)]),
    (Group::J, &[(3, V4)]),
    (Group::K, &[(4, V4)]),
    (Group::L, &[(4, V1)]),
    (Group::M, &[(2, V5)]),
];

const TNORM_A1: &[(u8, Variant)] = &[(1, V0), (1, V1), (1, V3), (1, V5)];

impl Group {
    pub const ALL: [Group; 17] = [
        Group::A1,
        Group::A2,
        Group::A3,
        Group::B,
        Group::C,
        Group::D,
        Group::E,
        Group::F1,
        Group::F2,
        Group::G,
        Group::H1,
        Group::H2,
        Group::I,
        Group::J,
        Group::K,
        Group::L,
        Group::M,
    ];

    pub fn label(self) -> &'static str {
        [
            "A1", "A2", "A3", "B", "C", "D", "E", "F1", "F2", "G", "H1", "H2", "I", "J", "K", "L",
            "M",
        ][self as usize]
    }

    pub fn parse(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|g| g.label().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::UnknownGroup(s.to_string()))
    }

    /// Groups present for a family: 17 for overlap functions, 16 for t-norms.
    pub fn all(family: Family) -> Vec<Group> {
        Self::ALL
            .into_iter()
            .filter(|g| family == Family::Overlap || *g != Group::A3)
            .collect()
    }

    /// Operators `(i, j)` in the group, empty when the group does not exist for `family`.
    pub fn members(self, family: Family) -> &'static [(u8, Variant)] {
        match (family, self) {
            (Family::TNorm, Group::A1) => TNORM_A1,
            (Family::TNorm, Group::A3) => &[],
            _ => OVERLAP_TABLE[self as usize].1,
        }
    }

    /// First-listed operator of the group.
    pub fn representative(self, family: Family) -> Result<(u8, Variant)> {
        self.members(family)
            .first()
            .copied()
            .ok_or_else(|| Error::GroupNotInFamily(self.label().to_string()))
    }

    pub fn of(i: u8, v: Variant, family: Family) -> Option<Group> {
        Self::all(family)
            .into_iter()
            .find(|g| g.members(family).contains(&(i, v)))
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// `(lower, upper)` edges of the lattice of overlap-based groups.
///
/// `(M, H2)` can fail when some member takes the value 0.
pub const LATTICE_EDGES: [(Group, Group); 14] = [
    (Group::A1, Group::F1),
    (Group::E, Group::H1),
    (Group::A1, Group::B),
    (Group::E, Group::L),
    (Group::F2, Group::F1),
    (Group::H2, Group::H1),
    (Group::A3, Group::C),
    (Group::A2, Group::D),
    (Group::I, Group::K),
    (Group::G, Group::J),
    (Group::M, Group::H1),
    (Group::A1, Group::F2),
    (Group::L, Group::H1),
    (Group::M, Group::H2),
];

/// All 24 operators in `(i, j)` order.
pub fn all_operators(c: &FuzzyCovering, logic: &Logic) -> Result<Vec<NeighborhoodOperator>> {
    let mut out = Vec::with_capacity(24);
    for v in Variant::ALL {
        let cj = derived_covering(c, v, logic)?;
        for i in 1..=4 {
            out.push(NeighborhoodOperator::on(cj.clone(), i, v, logic)?);
        }
    }
    out.sort_by_key(|op| (op.index, op.variant));
    Ok(out)
}

#[derive(Clone, Debug, PartialEq)]
pub struct GroupCheck {
    pub group: Group,
    pub holds: bool,
    /// Labels of two members that differ.
    pub witness: Option<(String, String)>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct GroupingReport {
    pub family: Family,
    /// `N<i>^C<j>` labels in `(i, j)` order.
    pub labels: Vec<String>,
    /// Observed equality classes as indices into `labels`.
    pub classes: Vec<Vec<usize>>,
    pub checks: Vec<GroupCheck>,
}

impl GroupingReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }
}

fn position(ops: &[NeighborhoodOperator], i: u8, v: Variant) -> usize {
    ops.iter()
        .position(|o| o.index == i && o.variant == v)
        .expect("all 24 operators present")
}

/// Partitions already built operators and checks the expected within-group equalities.
pub fn group_built(ops: &[NeighborhoodOperator], family: Family) -> GroupingReport {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for (a, op) in ops.iter().enumerate() {
        match classes
            .iter_mut()
            .find(|cl| ops[cl[0]].approx_eq(op, EPS_EQ))
        {
            Some(cl) => cl.push(a),
            None => classes.push(alloc::vec![a]),
        }
    }
    let checks = Group::all(family)
        .into_iter()
        .map(|g| {
            let mem = g.members(family);
            let first = &ops[position(ops, mem[0].0, mem[0].1)];
            let witness = mem[1..]
                .iter()
                .map(|&(i, v)| &ops[position(ops, i, v)])
                .find(|op| !op.approx_eq(first, EPS_EQ))
                .map(|op| (first.label(), op.label()));
            GroupCheck {
                group: g,
                holds: witness.is_none(),
                witness,
            }
        })
        .collect();
    GroupingReport {
        family,
        labels: ops.iter().map(|o| o.label()).collect(),
        classes,
        checks,
    }
}

pub fn group_operators(c: &FuzzyCovering, logic: &Logic) -> Result<GroupingReport> {
    let ops = all_operators(c, logic)?;
    Ok(group_built(&ops, logic.family()))
}

/// The representative operator of `g` picked out of [`all_operators`].
pub fn representative(
    ops: &[NeighborhoodOperator],
    g: Group,
    family: Family,
) -> Result<&NeighborhoodOperator> {
    let (i, v) = g.representative(family)?;
    Ok(&ops[position(ops, i, v)])
}
