#![allow(dead_code)]

use std::path::PathBuf;

use adrg::graph::families;
use adrg::{encode_graph6, parse_graph6, Graph};
use rand::seq::SliceRandom;
use rand::Rng;

/// Random connected `k`-regular graph by the pairing model.
pub fn random_regular<R: Rng>(n: usize, k: usize, rng: &mut R) -> Graph {
    assert!(n * k % 2 == 0 && k < n);
    loop {
        let mut points: Vec<usize> = (0..n * k).map(|p| p / k).collect();
        points.shuffle(rng);
        let mut seen = std::collections::BTreeSet::new();
        let ok = points.chunks(2).all(|e| {
            let (u, v) = (e[0].min(e[1]), e[0].max(e[1]));
            u != v && seen.insert((u, v))
        });
        if ok {
            let g = Graph::from_edges(n, seen);
            if g.clone().validate(usize::MAX).is_ok() {
                return g;
            }
        }
    }
}

pub fn drg_corpus() -> Vec<Graph> {
    vec![
        families::complete(2),
        families::cycle(4),
        families::cycle(5),
        families::cycle(6),
        families::complete_bipartite(3, 3),
        families::hypercube(3),
        families::petersen(),
    ]
}

/// Where a named census graph came from.
pub enum Source {
    Census(PathBuf),
    Reconstruction,
}

fn census_lookup(name: &str) -> Option<(Graph, PathBuf)> {
    let dir = PathBuf::from(std::env::var_os("ADRG_FIXTURES")?);
    let own = dir.join(format!("{name}.g6"));
    let mut files = vec![own.clone()];
    if let Ok(entries) = std::fs::read_dir(&dir) {
        let mut rest: Vec<PathBuf> = entries.filter_map(|e| e.ok().map(|e| e.path())).filter(|p| *p != own).collect();
        rest.sort();
        files.extend(rest);
    }
    for path in files {
        let Ok(text) = std::fs::read_to_string(&path) else { continue };
        let single = path.file_stem().is_some_and(|s| s == name);
        for line in text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
            let mut parts = line.split_whitespace();
            let (first, second) = (parts.next().unwrap(), parts.next());
            let g6 = match second {
                Some(g6) if first == name => g6,
                None if single => first,
                _ => continue,
            };
            if let Ok(g) = parse_graph6(g6) {
                return Some((g.with_name(name), path));
            }
        }
    }
    None
}

/// Census graph `name` from `$ADRG_FIXTURES`, falling back to the built-in
/// reconstruction with a warning.
pub fn fixture(name: &str) -> (Graph, Source) {
    if let Some((g, path)) = census_lookup(name) {
        return (g, Source::Census(path));
    }
    static WARNED: std::sync::Mutex<std::collections::BTreeSet<String>> =
        std::sync::Mutex::new(std::collections::BTreeSet::new());
    if WARNED.lock().unwrap().insert(name.to_string()) {
        eprintln!("warning: census data for {name} not found (set ADRG_FIXTURES); using the built-in reconstruction");
    }
    let g = match name {
        "F026A" => families::foster_f026a(),
        "F084A" => families::psl28_cubic_84(),
        "F168F" => families::bipartite_double(&families::psl28_cubic_84()),
        "F234B" => families::pg23_triangle_graph(),
        _ => panic!("no reconstruction for {name}"),
    };
    (g.with_name(name), Source::Reconstruction)
}

pub fn fixture_lines() -> String {
    ["F026A", "F084A", "F168F", "F234B"]
        .into_iter()
        .map(|name| format!("{name} {}\n", encode_graph6(&fixture(name).0)))
        .collect()
}
