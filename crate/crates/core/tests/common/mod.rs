//! Test-only walk oracle: scans every sequence of `n` incidences and keeps
//! the ones that form a walk. Shares no code with the depth-first engine.

#![allow(dead_code)]

use ohgraph::{HypergraphBuilder, OrientedHypergraph, Sign};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum End {
    V(usize),
    E(usize),
}

/// `(total, positive, negative)` for walks `from -> to` with `n` incidences.
pub fn brute_counts(g: &OrientedHypergraph, from: End, to: End, n: usize, weak: bool) -> (u64, u64, u64) {
    let incs = g.incidences();
    let m = incs.len();
    let mut totals = (0, 0, 0);
    if n == 0 {
        return if from == to { (1, 1, 0) } else { (0, 0, 0) };
    }
    if m == 0 {
        return totals;
    }
    let mut seq = vec![0usize; n];
    loop {
        let mut at = from;
        let mut ok = true;
        for (h, &p) in seq.iter().enumerate() {
            let inc = incs[p];
            at = match at {
                End::V(v) if inc.vertex == v => End::E(inc.edge),
                End::E(e) if inc.edge == e => End::V(inc.vertex),
                _ => {
                    ok = false;
                    break;
                }
            };
            // positions 2h-1, 2h (1-based) must differ
            if !weak && h % 2 == 1 && seq[h - 1] == p {
                ok = false;
                break;
            }
        }
        if ok && at == to {
            let minus = seq.iter().filter(|&&p| incs[p].sign == Sign::Minus).count() + n / 2;
            totals.0 += 1;
            if minus % 2 == 0 {
                totals.1 += 1;
            } else {
                totals.2 += 1;
            }
        }
        // odometer increment
        let mut i = 0;
        loop {
            if i == n {
                return totals;
            }
            seq[i] += 1;
            if seq[i] < m {
                break;
            }
            seq[i] = 0;
            i += 1;
        }
    }
}

pub fn net(c: (u64, u64, u64)) -> i64 {
    c.1 as i64 - c.2 as i64
}

pub fn two_vertex_edge() -> OrientedHypergraph {
    HypergraphBuilder::new()
        .vertices(["v1", "v2"])
        .edge("e1")
        .incidence("v1", "e1", Sign::Plus)
        .incidence("v2", "e1", Sign::Plus)
        .build()
        .unwrap()
}

pub fn three_uniform_all_plus() -> OrientedHypergraph {
    HypergraphBuilder::new()
        .vertices(["v1", "v2", "v3"])
        .edge("e1")
        .incidence("v1", "e1", Sign::Plus)
        .incidence("v2", "e1", Sign::Plus)
        .incidence("v3", "e1", Sign::Plus)
        .build()
        .unwrap()
}

pub fn double_incidence() -> OrientedHypergraph {
    HypergraphBuilder::new()
        .vertex("v1")
        .edge("e1")
        .incidence("v1", "e1", Sign::Plus)
        .incidence("v1", "e1", Sign::Minus)
        .build()
        .unwrap()
}

/// v1 -e1- v2 -e2- v3 with orientations +,- and +,-.
pub fn bidirected_path() -> OrientedHypergraph {
    HypergraphBuilder::new()
        .vertices(["v1", "v2", "v3"])
        .edges(["e1", "e2"])
        .incidence("v1", "e1", Sign::Plus)
        .incidence("v2", "e1", Sign::Minus)
        .incidence("v2", "e2", Sign::Plus)
        .incidence("v3", "e2", Sign::Minus)
        .build()
        .unwrap()
}
