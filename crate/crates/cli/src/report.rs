//! Serializable reports. JSON carries `schema_version`; CSV flattens the
//! main table of each report.

use serde::Serialize;

use crate::config::Format;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, Serialize)]
pub struct WitnessOut {
    pub x: f64,
    pub y: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub z: Option<f64>,
}

impl From<fuzzycover::logic::Witness> for WitnessOut {
    fn from(w: fuzzycover::logic::Witness) -> Self {
        WitnessOut {
            x: w.x,
            y: w.y,
            z: w.z,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ValidateReport {
    pub elements: Vec<String>,
    pub members: Vec<String>,
    pub covering: bool,
    pub universal_member: bool,
    pub strict: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct AxiomEntry {
    pub axiom: String,
    pub declared: bool,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_jump: Option<f64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Adjointness {
    pub implicator: String,
    pub holds: bool,
    pub checked: usize,
    pub witnesses: Vec<WitnessOut>,
}

#[derive(Clone, Debug, Serialize)]
pub struct AggregatorAxioms {
    pub aggregator: String,
    pub family: String,
    pub grid_step: f64,
    pub declared: Vec<String>,
    pub axioms: Vec<AxiomEntry>,
    pub declared_failures: Vec<String>,
    pub adjointness: Adjointness,
    /// Largest gap between the closed-form and bisection residuals.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual_deviation: Option<f64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct AxiomsReport {
    pub results: Vec<AggregatorAxioms>,
}

#[derive(Clone, Debug, Serialize)]
pub struct OperatorOut {
    pub label: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub group: Option<String>,
    pub covering_size: usize,
    pub matrix: Vec<Vec<f64>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct GroupOut {
    pub group: String,
    pub members: Vec<String>,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<(String, String)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationOut {
    pub a: String,
    pub b: String,
    pub relation: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct NeighborhoodsReport {
    pub aggregator: String,
    pub family: String,
    pub elements: Vec<String>,
    pub operators: Vec<OperatorOut>,
    /// Observed equality classes of operator labels.
    pub classes: Vec<Vec<String>>,
    pub groups: Vec<GroupOut>,
    /// Pointwise order between group representatives at the report tolerance.
    pub relations: Vec<RelationOut>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TargetOut {
    pub name: String,
    pub values: Vec<f64>,
    pub lower: Vec<f64>,
    pub upper: Vec<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub precision: Option<f64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ApproxReport {
    pub model: String,
    pub operator: String,
    pub aggregator: String,
    pub elements: Vec<String>,
    pub targets: Vec<TargetOut>,
}

#[derive(Clone, Debug, Serialize)]
pub struct DecideReport {
    pub model: String,
    pub aggregator: String,
    pub family: String,
    pub alternatives: Vec<String>,
    pub attributes: Vec<String>,
    pub benefit: Vec<bool>,
    pub pis: Vec<f64>,
    pub nis: Vec<f64>,
    /// Indexed `[attribute][alternative]`.
    pub d_up: Vec<Vec<f64>>,
    pub d_down: Vec<Vec<f64>>,
    pub precisions: Vec<f64>,
    pub weights: Vec<f64>,
    pub h_up: f64,
    pub h_down: f64,
    pub closeness: Vec<f64>,
    /// Alternative labels, best first.
    pub ranking: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RankingOut {
    pub model: String,
    pub aggregator: String,
    pub closeness: Vec<f64>,
    pub ranking: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConsistencyOut {
    pub alternative: String,
    /// Most frequent 1-based rank, the smallest on ties.
    pub modal_rank: usize,
    /// Number of models placing the alternative at `modal_rank`.
    pub agreeing: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct CompareReport {
    pub alternatives: Vec<String>,
    pub models: Vec<RankingOut>,
    pub spearman: Vec<Vec<f64>>,
    pub consistency: Vec<ConsistencyOut>,
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "command", rename_all = "lowercase")]
pub enum Report {
    Validate(ValidateReport),
    Axioms(AxiomsReport),
    Neighborhoods(NeighborhoodsReport),
    Approx(ApproxReport),
    Decide(DecideReport),
    Compare(CompareReport),
}

#[derive(Serialize)]
struct Envelope<'a> {
    schema_version: u32,
    #[serde(flatten)]
    report: &'a Report,
}

#[derive(Serialize)]
struct ErrorRecord<'a> {
    kind: &'a str,
    message: String,
}

#[derive(Serialize)]
struct ErrorEnvelope<'a> {
    schema_version: u32,
    error: ErrorRecord<'a>,
}

pub fn error_json(e: &crate::CliError) -> String {
    let env = ErrorEnvelope {
        schema_version: SCHEMA_VERSION,
        error: ErrorRecord {
            kind: e.kind(),
            message: e.to_string(),
        },
    };
    serde_json::to_string(&env).expect("serializable")
}

fn csv_table(header: Vec<String>, rows: Vec<Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(&header).expect("in-memory write");
    for r in rows {
        w.write_record(&r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 output")
}

fn labelled(head: &str, labels: &[String]) -> Vec<String> {
    std::iter::once(head.to_owned())
        .chain(labels.iter().cloned())
        .collect()
}

fn nums(v: &[f64]) -> impl Iterator<Item = String> + '_ {
    v.iter().map(f64::to_string)
}

impl Report {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&Envelope {
                    schema_version: SCHEMA_VERSION,
                    report: self,
                })
                .expect("serializable");
                s.push('\n');
                s
            }
            Format::Csv => self.to_csv(),
        }
    }

    fn to_csv(&self) -> String {
        match self {
            Report::Validate(r) => csv_table(
                vec!["key".into(), "value".into()],
                vec![
                    vec!["elements".into(), r.elements.len().to_string()],
                    vec!["members".into(), r.members.len().to_string()],
                    vec!["covering".into(), r.covering.to_string()],
                    vec!["universal_member".into(), r.universal_member.to_string()],
                    vec!["strict".into(), r.strict.to_string()],
                ],
            ),
            Report::Axioms(r) => {
                let opt = |v: Option<f64>| v.map(|v| v.to_string()).unwrap_or_default();
                let mut rows = Vec::new();
                for a in &r.results {
                    for e in &a.axioms {
                        let w = e.witness.as_ref();
                        rows.push(vec![
                            a.aggregator.clone(),
                            e.axiom.clone(),
                            e.declared.to_string(),
                            e.holds.to_string(),
                            opt(w.map(|w| w.x)),
                            opt(w.map(|w| w.y)),
                            opt(w.and_then(|w| w.z)),
                        ]);
                    }
                    rows.push(vec![
                        a.aggregator.clone(),
                        "adjointness".into(),
                        "true".into(),
                        a.adjointness.holds.to_string(),
                        String::new(),
                        String::new(),
                        String::new(),
                    ]);
                }
                csv_table(
                    ["aggregator", "axiom", "declared", "holds", "x", "y", "z"]
                        .map(String::from)
                        .to_vec(),
                    rows,
                )
            }
            Report::Neighborhoods(r) => {
                let mut header = vec!["operator".to_owned(), "group".to_owned()];
                header.extend(
                    labelled("x", &r.elements)
                        .into_iter()
                        .skip(1)
                        .map(|e| format!("y={e}")),
                );
                header.insert(2, "x".into());
                let mut rows = Vec::new();
                for op in &r.operators {
                    for (x, row) in op.matrix.iter().enumerate() {
                        let mut rec = vec![
                            op.label.clone(),
                            op.group.clone().unwrap_or_default(),
                            r.elements[x].clone(),
                        ];
                        rec.extend(nums(row));
                        rows.push(rec);
                    }
                }
                csv_table(header, rows)
            }
            Report::Approx(r) => {
                let mut header = vec!["target".to_owned(), "kind".to_owned()];
                header.extend(r.elements.iter().cloned());
                header.push("precision".into());
                let mut rows = Vec::new();
                for t in &r.targets {
                    for (kind, v) in [("lower", &t.lower), ("upper", &t.upper)] {
                        let mut rec = vec![t.name.clone(), kind.to_owned()];
                        rec.extend(nums(v));
                        rec.push(t.precision.map(|p| p.to_string()).unwrap_or_default());
                        rows.push(rec);
                    }
                }
                csv_table(header, rows)
            }
            Report::Decide(r) => {
                let rank_of = |label: &String| {
                    r.ranking
                        .iter()
                        .position(|l| l == label)
                        .map_or(0, |p| p + 1)
                };
                let rows = r
                    .alternatives
                    .iter()
                    .zip(&r.closeness)
                    .map(|(a, h)| vec![a.clone(), h.to_string(), rank_of(a).to_string()])
                    .collect();
                csv_table(
                    vec!["alternative".into(), "closeness".into(), "rank".into()],
                    rows,
                )
            }
            Report::Compare(r) => {
                let header = labelled(
                    "rank",
                    &r.models.iter().map(|m| m.model.clone()).collect::<Vec<_>>(),
                );
                let rows = (0..r.alternatives.len())
                    .map(|k| {
                        let mut rec = vec![(k + 1).to_string()];
                        rec.extend(r.models.iter().map(|m| m.ranking[k].clone()));
                        rec
                    })
                    .collect();
                csv_table(header, rows)
            }
        }
    }
}
