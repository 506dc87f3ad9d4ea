use rayon::prelude::*;

use fuzzycover::logic::{
    check_adjointness, check_axioms, closed_vs_numeric, residual_implicator, Aggregator, Axiom,
    ImplicatorForm, Outcome,
};
use fuzzycover::neighborhood::{
    build_operator, compare_operators_eps, group_built, representative, NeighborhoodOperator,
};
use fuzzycover::rough::ApproximationModel;
use fuzzycover::topsis::{self, DecisionProblem, DecisionResult};
use fuzzycover::{
    Error as CoreError, FuzzyCovering, FuzzySet, Group, Logic, ModelSelector, Variant, EPS_EQ,
};

use crate::config::{ModelSpec, RunConfig};
use crate::error::{CliError, Result};
use crate::input::Table;
use crate::report::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Validate,
    Axioms,
    Neighborhoods,
    Approx,
    Decide,
    Compare,
}

/// A report plus an optional failure that still warrants a nonzero exit.
#[derive(Debug)]
pub struct CommandOutcome {
    pub report: Report,
    pub failure: Option<CliError>,
}

impl From<Report> for CommandOutcome {
    fn from(report: Report) -> Self {
        CommandOutcome {
            report,
            failure: None,
        }
    }
}

pub fn execute(cmd: Command, cfg: &RunConfig) -> Result<CommandOutcome> {
    match cmd {
        Command::Validate => validate(cfg).map(Into::into),
        Command::Axioms => axioms(cfg),
        Command::Neighborhoods => neighborhoods(cfg).map(Into::into),
        Command::Approx => approx(cfg).map(Into::into),
        Command::Decide => decide(cfg).map(Into::into),
        Command::Compare => compare(cfg).map(Into::into),
    }
}

pub fn validate(cfg: &RunConfig) -> Result<Report> {
    let t = Table::read(cfg.input()?)?;
    t.universe()?;
    let c = t.covering(cfg.strict)?;
    Ok(Report::Validate(ValidateReport {
        elements: t.row_labels.clone(),
        members: t.col_labels.clone(),
        covering: true,
        universal_member: c
            .members()
            .iter()
            .any(|k| k.memberships().iter().all(|&v| v >= 1.0 - EPS_EQ)),
        strict: cfg.strict,
    }))
}

fn axioms_of(agg: &Aggregator, grid: f64) -> Result<AggregatorAxioms> {
    let report = check_axioms(agg, grid);
    let imp = residual_implicator(agg)?;
    let adj = check_adjointness(agg, &imp, grid);
    let axioms = report
        .results
        .iter()
        .map(|(a, o)| AxiomEntry {
            axiom: a.name().to_owned(),
            declared: agg.declares(*a),
            holds: o.holds(),
            witness: match o {
                Outcome::Fail(w) => Some((*w).into()),
                _ => None,
            },
            max_jump: match o {
                Outcome::Reported { max_jump } => Some(*max_jump),
                _ => None,
            },
        })
        .collect();
    Ok(AggregatorAxioms {
        aggregator: agg.name().to_owned(),
        family: agg.family().name().to_owned(),
        grid_step: grid,
        declared: Axiom::ALL
            .iter()
            .filter(|a| agg.declares(**a))
            .map(|a| a.name().to_owned())
            .collect(),
        axioms,
        declared_failures: report
            .declared_failures(agg.declared())
            .iter()
            .map(|a| a.name().to_owned())
            .collect(),
        adjointness: Adjointness {
            implicator: match imp.form() {
                ImplicatorForm::ClosedForm => "closed".into(),
                ImplicatorForm::NumericSup => "numeric".into(),
            },
            holds: adj.holds,
            checked: adj.checked,
            witnesses: adj.witnesses.into_iter().map(Into::into).collect(),
        },
        residual_deviation: closed_vs_numeric(agg, grid).map(|(d, _)| d),
    })
}

pub fn axioms(cfg: &RunConfig) -> Result<CommandOutcome> {
    let results = cfg
        .aggregators
        .par_iter()
        .map(|a| axioms_of(a, cfg.grid))
        .collect::<Result<Vec<_>>>()?;
    let bad: Vec<String> = results
        .iter()
        .flat_map(|r| {
            let adj = (!r.adjointness.holds).then(|| format!("{}: adjointness", r.aggregator));
            r.declared_failures
                .iter()
                .map(move |a| format!("{}: {a}", r.aggregator))
                .chain(adj)
        })
        .collect();
    Ok(CommandOutcome {
        report: Report::Axioms(AxiomsReport { results }),
        failure: (!bad.is_empty()).then(|| CliError::AxiomFailure(bad.join(", "))),
    })
}

fn covering_input(cfg: &RunConfig) -> Result<(Table, FuzzyCovering)> {
    let t = Table::read(cfg.input()?)?;
    t.universe()?;
    let c = t.covering(cfg.strict)?;
    Ok((t, c))
}

/// All operators that can be built; variants 3 and 4 are skipped without O7.
fn operators(c: &FuzzyCovering, logic: &Logic) -> Result<Vec<NeighborhoodOperator>> {
    let pairs: Vec<(u8, Variant)> = (1..=4)
        .flat_map(|i| Variant::ALL.into_iter().map(move |v| (i, v)))
        .collect();
    let built: Vec<Option<NeighborhoodOperator>> = pairs
        .par_iter()
        .map(|&(i, v)| match build_operator(c, i, v, logic) {
            Ok(op) => Ok(Some(op)),
            Err(CoreError::MissingO7) => Ok(None),
            Err(e) => Err(CliError::from(e)),
        })
        .collect::<Result<_>>()?;
    Ok(built.into_iter().flatten().collect())
}

fn classes(ops: &[NeighborhoodOperator]) -> Vec<Vec<String>> {
    let mut out: Vec<(usize, Vec<String>)> = Vec::new();
    for (a, op) in ops.iter().enumerate() {
        match out
            .iter_mut()
            .find(|(first, _)| ops[*first].approx_eq(op, EPS_EQ))
        {
            Some((_, cl)) => cl.push(op.label()),
            None => out.push((a, vec![op.label()])),
        }
    }
    out.into_iter().map(|(_, cl)| cl).collect()
}

pub fn neighborhoods(cfg: &RunConfig) -> Result<Report> {
    let (t, c) = covering_input(cfg)?;
    let logic = Logic::new(cfg.aggregator)?;
    let family = logic.family();
    let ops = operators(&c, &logic)?;
    let mut groups = Vec::new();
    let mut relations = Vec::new();
    if ops.len() == 24 {
        let g = group_built(&ops, family);
        groups = g
            .checks
            .iter()
            .map(|chk| GroupOut {
                group: chk.group.label().to_owned(),
                members: chk
                    .group
                    .members(family)
                    .iter()
                    .map(|&(i, v)| fuzzycover::neighborhood::operator_label(i, v))
                    .collect(),
                holds: chk.holds,
                witness: chk.witness.clone(),
            })
            .collect();
        let all = Group::all(family);
        for (k, &a) in all.iter().enumerate() {
            for &b in &all[k + 1..] {
                let ra = representative(&ops, a, family)?;
                let rb = representative(&ops, b, family)?;
                relations.push(RelationOut {
                    a: a.label().to_owned(),
                    b: b.label().to_owned(),
                    relation: compare_operators_eps(ra, rb, cfg.tolerance)?
                        .relation
                        .symbol()
                        .to_owned(),
                });
            }
        }
    }
    Ok(Report::Neighborhoods(NeighborhoodsReport {
        aggregator: cfg.aggregator.name().to_owned(),
        family: family.name().to_owned(),
        elements: t.row_labels.clone(),
        classes: classes(&ops),
        operators: ops
            .iter()
            .map(|op| OperatorOut {
                label: op.label(),
                group: Group::of(op.index(), op.variant(), family).map(|g| g.label().to_owned()),
                covering_size: op.covering().len(),
                matrix: op.rows(),
            })
            .collect(),
        groups,
        relations,
    }))
}

pub fn build_model(
    c: &FuzzyCovering,
    spec: ModelSpec,
    logic: &Logic,
) -> Result<ApproximationModel> {
    Ok(match spec {
        ModelSpec::Group(g) => ApproximationModel::from_group(c, g, logic)?,
        ModelSpec::Operator(i, v) => {
            ApproximationModel::new(build_operator(c, i, v, logic)?, logic.family())
        }
    })
}

pub fn approx(cfg: &RunConfig) -> Result<Report> {
    let (t, c) = covering_input(cfg)?;
    let logic = Logic::new(cfg.aggregator)?;
    let model = build_model(&c, cfg.model, &logic)?;
    let targets: Vec<(String, FuzzySet)> = match &cfg.target {
        Some(v) => vec![("X".to_owned(), FuzzySet::new(v.clone())?)],
        None => t
            .col_labels
            .iter()
            .cloned()
            .zip(c.members().iter().cloned())
            .collect(),
    };
    let targets = targets
        .into_iter()
        .map(|(name, x)| {
            let pair = model.approximate(&x)?;
            let precision = match fuzzycover::rough::precision_of(&pair) {
                Ok(p) => Some(p),
                Err(CoreError::ZeroUpperCardinality) => None,
                Err(e) => return Err(e.into()),
            };
            Ok(TargetOut {
                name,
                values: x.into_vec(),
                lower: pair.lower.into_vec(),
                upper: pair.upper.into_vec(),
                precision,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Report::Approx(ApproxReport {
        model: cfg.model.label(),
        operator: model.operator().label(),
        aggregator: cfg.aggregator.name().to_owned(),
        elements: t.row_labels,
        targets,
    }))
}

fn problem(cfg: &RunConfig) -> Result<DecisionProblem> {
    let p = crate::input::read_matrix(cfg.input()?, cfg.strict)?;
    let cost = cfg
        .cost
        .iter()
        .map(|name| {
            p.attribute_names()
                .iter()
                .position(|a| a == name)
                .or_else(|| {
                    name.parse::<usize>()
                        .ok()
                        .filter(|&k| (1..=p.n_attributes()).contains(&k))
                        .map(|k| k - 1)
                })
                .ok_or_else(|| CliError::Config(format!("unknown cost attribute {name:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(p.with_cost(&cost)?)
}

/// The decision pipeline for any model spec.
pub fn decide_with(p: &DecisionProblem, spec: ModelSpec, logic: &Logic) -> Result<DecisionResult> {
    if let ModelSpec::Group(g) = spec {
        return Ok(topsis::run_pipeline(p, &ModelSelector::new(g, *logic))?);
    }
    let model = build_model(p.attributes(), spec, logic)?;
    let (pis, nis) = topsis::ideal_solutions(p);
    let (d_up, d_down) = topsis::ideal_distances(p);
    let precisions = topsis::attribute_precisions(p, &model)?;
    let weights = topsis::normalize(&precisions)?;
    let c = topsis::closeness(&d_up, &d_down, &weights)?;
    Ok(DecisionResult {
        pis,
        nis,
        d_up,
        d_down,
        precisions,
        weights,
        h_up: c.h_up,
        h_down: c.h_down,
        ranking: topsis::rank(&c.values),
        closeness: c.values,
    })
}

fn labels(p: &DecisionProblem, order: &[usize]) -> Vec<String> {
    order
        .iter()
        .map(|&t| p.alternatives().labels()[t].clone())
        .collect()
}

pub fn decide(cfg: &RunConfig) -> Result<Report> {
    let p = problem(cfg)?;
    let logic = Logic::new(cfg.aggregator)?;
    let r = decide_with(&p, cfg.model, &logic)?;
    Ok(Report::Decide(DecideReport {
        model: cfg.model.label(),
        aggregator: cfg.aggregator.name().to_owned(),
        family: logic.family().name().to_owned(),
        alternatives: p.alternatives().labels().to_vec(),
        attributes: p.attribute_names().to_vec(),
        benefit: p.benefit().to_vec(),
        ranking: labels(&p, &r.ranking),
        pis: r.pis,
        nis: r.nis,
        d_up: r.d_up,
        d_down: r.d_down,
        precisions: r.precisions,
        weights: r.weights,
        h_up: r.h_up,
        h_down: r.h_down,
        closeness: r.closeness,
    }))
}

/// `GROUP[:AGG]`, `N<i>^C<j>[:AGG]`, or `all` for every group of the configured family.
pub fn parse_models(entries: &[String], cfg: &RunConfig) -> Result<Vec<(ModelSpec, Aggregator)>> {
    let mut out = Vec::new();
    for e in entries {
        if e.eq_ignore_ascii_case("all") {
            out.extend(
                Group::all(cfg.family())
                    .into_iter()
                    .map(|g| (ModelSpec::Group(g), cfg.aggregator)),
            );
            continue;
        }
        let (m, agg) = match e.rsplit_once(':') {
            Some((m, a)) => (m, fuzzycover::logic::builtin_aggregator(a)?),
            None => (e.as_str(), cfg.aggregator),
        };
        out.push((ModelSpec::parse(m)?, agg));
    }
    if out.len() < 2 {
        return Err(CliError::Config("compare needs at least two models".into()));
    }
    Ok(out)
}

fn consistency(p: &DecisionProblem, rankings: &[Vec<usize>]) -> Vec<ConsistencyOut> {
    let positions: Vec<Vec<usize>> = rankings.iter().map(|r| topsis::positions(r)).collect();
    (0..p.n_alternatives())
        .map(|t| {
            let mut counts = vec![0usize; p.n_alternatives()];
            for pos in &positions {
                counts[pos[t]] += 1;
            }
            let best = counts.iter().copied().max().unwrap_or(0);
            let modal = counts.iter().position(|&c| c == best).unwrap_or(0);
            ConsistencyOut {
                alternative: p.alternatives().labels()[t].clone(),
                modal_rank: modal + 1,
                agreeing: best,
            }
        })
        .collect()
}

pub fn compare(cfg: &RunConfig) -> Result<Report> {
    let p = problem(cfg)?;
    let models = parse_models(&cfg.models, cfg)?;
    let results = models
        .par_iter()
        .map(|&(spec, agg)| decide_with(&p, spec, &Logic::new(agg)?))
        .collect::<Result<Vec<_>>>()?;
    let rankings: Vec<Vec<usize>> = results.iter().map(|r| r.ranking.clone()).collect();
    let spearman = rankings
        .iter()
        .map(|a| {
            rankings
                .iter()
                .map(|b| topsis::spearman_rho(a, b))
                .collect::<std::result::Result<Vec<_>, _>>()
        })
        .collect::<std::result::Result<Vec<_>, _>>()?;
    Ok(Report::Compare(CompareReport {
        alternatives: p.alternatives().labels().to_vec(),
        consistency: consistency(&p, &rankings),
        models: models
            .iter()
            .zip(results)
            .map(|((spec, agg), r)| RankingOut {
                model: format!("{}:{}", spec.label(), agg.name()),
                aggregator: agg.name().to_owned(),
                ranking: labels(&p, &r.ranking),
                closeness: r.closeness,
            })
            .collect(),
        spearman,
    }))
}
