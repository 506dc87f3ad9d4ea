#![allow(dead_code)]

use std::path::{Path, PathBuf};

use fuzzycover::topsis::DecisionProblem;
use fuzzycover::Group;
use fuzzycover_cli::input::{read_matrix, Table};

pub const TOL: f64 = 5e-4;

pub fn data_path(rel: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join(rel)
}

pub fn case_study() -> DecisionProblem {
    read_matrix(&data_path("data/case_study.csv"), false).unwrap()
}

pub fn fixture(name: &str) -> Table {
    Table::read(&data_path(&format!("tests/fixtures/{name}"))).unwrap()
}

pub const NIS: [f64; 15] = [
    0.01, 0.09, 0.01, 0.07, 0.16, 0.18, 0.02, 0.01, 0.28, 0.12, 0.29, 0.21, 0.1, 0.02, 0.02,
];

pub const PRECISION_OD: [f64; 15] = [
    0.4679, 0.4662, 0.4470, 0.4248, 0.5617, 0.5368, 0.3906, 0.4421, 0.5060, 0.5076, 0.6081, 0.5381,
    0.5226, 0.5338, 0.4712,
];
pub const PRECISION_GOGUEN: [f64; 15] = [
    0.8329, 0.8322, 0.7459, 0.7447, 0.8802, 0.8951, 0.7786, 0.7100, 0.8664, 0.8400, 0.8608, 0.8737,
    0.8213, 0.8977, 0.8395,
];

pub const WEIGHTS_OD: [f64; 15] = [
    0.0630, 0.0627, 0.0602, 0.0572, 0.0756, 0.0723, 0.0526, 0.0595, 0.0681, 0.0683, 0.0818, 0.0724,
    0.0703, 0.0718, 0.0634,
];
pub const WEIGHTS_GOGUEN: [f64; 15] = [
    0.0670, 0.0670, 0.0600, 0.0599, 0.0708, 0.0720, 0.0626, 0.0571, 0.0697, 0.0676, 0.0693, 0.0703,
    0.0661, 0.0722, 0.0675,
];

/// `(h_up, h_down)` for OD and for Goguen.
pub const H_OD: (f64, f64) = (0.3106, 0.5757);
pub const H_GOGUEN: (f64, f64) = (0.3099, 0.5805);

pub const CLOSENESS_OD: [f64; 15] = [
    -1.0706, -0.6625, 0.0, -0.9999, -0.7258, -0.2563, -0.9546, -0.7387, -0.9359, -0.2376, -0.3026,
    -1.1245, -0.7663, -0.5034, -1.3351,
];
pub const CLOSENESS_GOGUEN: [f64; 15] = [
    -1.0194, -0.7060, 0.0, -1.0500, -0.7609, -0.2525, -0.9768, -0.7731, -0.9848, -0.2281, -0.3290,
    -1.1547, -0.7781, -0.5549, -1.3317,
];

type Ranking = [usize; 15];

const O_A: Ranking = [3, 10, 6, 11, 14, 2, 5, 8, 13, 9, 7, 4, 1, 12, 15];
const O_A2: Ranking = [3, 10, 6, 11, 14, 2, 5, 13, 8, 7, 9, 4, 1, 12, 15];
const O_A3: Ranking = [3, 6, 10, 11, 14, 2, 5, 13, 8, 4, 9, 7, 12, 1, 15];
const O_E: Ranking = [3, 10, 6, 11, 14, 5, 13, 2, 8, 7, 4, 9, 12, 1, 15];
const O_G: Ranking = [3, 10, 6, 11, 14, 5, 2, 13, 8, 7, 9, 4, 12, 1, 15];
const O_I: Ranking = [3, 10, 6, 11, 14, 13, 2, 5, 8, 4, 7, 9, 12, 1, 15];

const T_A: Ranking = [3, 10, 6, 11, 14, 2, 5, 8, 13, 7, 9, 1, 4, 12, 15];
const T_C: Ranking = [3, 10, 6, 11, 14, 2, 5, 8, 13, 7, 9, 4, 1, 12, 15];
const T_E: Ranking = [3, 6, 10, 11, 14, 5, 13, 2, 8, 7, 4, 9, 12, 1, 15];
const T_G: Ranking = [3, 6, 10, 11, 14, 5, 13, 2, 8, 7, 9, 4, 12, 1, 15];
const T_I: Ranking = [3, 6, 10, 11, 5, 13, 14, 4, 2, 8, 7, 9, 12, 1, 15];

/// Published ranking per overlap-based model group (1-based alternatives, best first).
pub fn overlap_rankings() -> Vec<(Group, Ranking)> {
    use Group::*;
    vec![
        (A1, O_A),
        (A2, O_A2),
        (A3, O_A3),
        (B, O_A),
        (C, O_A3),
        (D, O_A2),
        (E, O_E),
        (F1, O_A),
        (F2, O_A),
        (G, O_G),
        (H1, O_E),
        (H2, O_E),
        (I, O_I),
        (J, O_G),
        (K, O_I),
        (L, O_E),
        (M, O_E),
    ]
}

pub fn tnorm_rankings() -> Vec<(Group, Ranking)> {
    use Group::*;
    vec![
        (A1, T_A),
        (A2, T_A),
        (B, T_A),
        (C, T_C),
        (D, T_A),
        (E, T_E),
        (F1, T_A),
        (F2, T_A),
        (G, T_G),
        (H1, T_E),
        (H2, T_E),
        (I, T_I),
        (J, T_G),
        (K, T_I),
        (L, T_E),
        (M, T_E),
    ]
}

/// Rankings for a model group under several logics: `(group, aggregator, ranking)`.
/// A1 uses implicators, so its rows are named by the residual's source aggregator.
pub fn logic_variation() -> Vec<(Group, &'static str, &'static str, Ranking)> {
    const A1_OM2: Ranking = [3, 10, 6, 11, 14, 2, 5, 8, 13, 7, 9, 1, 4, 12, 15];
    vec![
        (Group::A1, "OD", "I_OD", O_A),
        (Group::A1, "Om2", "I_Om2", A1_OM2),
        (Group::H1, "OD", "OD", O_E),
        (Group::H1, "Om2", "Om2", O_E),
        (Group::A1, "Tprod", "Goguen", T_A),
        (Group::A1, "Tmin", "Godel", T_A),
        (Group::H1, "Tprod", "Tprod", T_E),
        (Group::H1, "Tmin", "Tmin", T_E),
    ]
}

/// Upper triangle of the rank correlation matrix among
/// (A1, OD), (H1, OD), (A1, Tprod), (H1, Tprod).
pub const RHO: [((usize, usize), f64); 6] = [
    ((0, 1), 0.9678),
    ((0, 2), 0.9928),
    ((0, 3), 0.9642),
    ((1, 2), 0.9642),
    ((1, 3), 0.9964),
    ((2, 3), 0.9607),
];

pub fn to_zero_based(r: &Ranking) -> Vec<usize> {
    r.iter().map(|t| t - 1).collect()
}

pub fn fmt_ranking(r: &[usize]) -> String {
    r.iter()
        .map(|t| (t + 1).to_string())
        .collect::<Vec<_>>()
        .join(" ")
}
