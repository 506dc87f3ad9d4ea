#![allow(dead_code)]

use fuzzycover::{FuzzyCovering, FuzzySet};
use proptest::prelude::*;

/// Grid value in hundredths, skewed towards 0, 1 and a few repeated levels so
/// that ties and containments show up often.
fn cell() -> impl Strategy<Value = u8> {
    prop_oneof![
        3 => Just(100u8),
        2 => Just(0u8),
        2 => prop::sample::select(vec![30u8, 50, 70, 90]),
        5 => 0u8..=100,
    ]
}

fn repair(mut cells: Vec<Vec<u8>>, picks: &[usize]) -> Vec<Vec<u8>> {
    let m = cells.len();
    let n = cells[0].len();
    for x in 0..n {
        if cells.iter().all(|k| k[x] < 100) {
            cells[picks[x] % m][x] = 100;
        }
    }
    for (k, row) in cells.iter_mut().enumerate() {
        if row.iter().all(|&v| v == 0) {
            row[k % n] = 100;
        }
    }
    cells
}

pub fn to_covering(cells: &[Vec<u8>]) -> FuzzyCovering {
    let members = cells
        .iter()
        .map(|r| FuzzySet::new(r.iter().map(|&v| f64::from(v) / 100.0).collect()).unwrap())
        .collect();
    FuzzyCovering::new(members).unwrap()
}

/// Coverings with `n <= max_n` elements and `|C| <= max_m` members on the 0.01 grid.
pub fn covering(max_n: usize, max_m: usize) -> impl Strategy<Value = FuzzyCovering> {
    (1..=max_n, 1..=max_m).prop_flat_map(|(n, m)| {
        (
            prop::collection::vec(prop::collection::vec(cell(), n), m),
            prop::collection::vec(any::<usize>(), n),
        )
            .prop_map(|(cells, picks)| to_covering(&repair(cells, &picks)))
    })
}

pub fn fuzzy_set(n: usize) -> impl Strategy<Value = FuzzySet> {
    prop::collection::vec(cell(), n)
        .prop_map(|v| FuzzySet::new(v.into_iter().map(|c| f64::from(c) / 100.0).collect()).unwrap())
}

pub fn level() -> impl Strategy<Value = f64> {
    (0u8..=100).prop_map(|v| f64::from(v) / 100.0)
}

/// Like [`covering`] but with every membership at least 0.01.
pub fn positive_covering(max_n: usize, max_m: usize) -> impl Strategy<Value = FuzzyCovering> {
    covering(max_n, max_m).prop_map(|c| {
        let members = c
            .members()
            .iter()
            .map(|k| FuzzySet::new(k.memberships().iter().map(|&v| v.max(0.01)).collect()).unwrap())
            .collect();
        FuzzyCovering::new(members).unwrap()
    })
}
