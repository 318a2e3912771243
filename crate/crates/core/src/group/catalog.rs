//! Every group of order at most 24, up to isomorphism, built from cyclic
//! groups by direct, metacyclic and semidirect constructions plus a few
//! named permutation groups. Completeness is checked against the known
//! counts of groups of each order.

use std::collections::HashMap;

use super::perm::Perm;
use super::perm_group::Group;
use super::table::TableGroup;
use crate::arith::integer::gcd_u64;

pub const MAX_CATALOG_ORDER: usize = 24;

/// Number of isomorphism classes of groups of order `n` for `n = 1..=24`.
pub const GROUP_COUNTS: [usize; 24] = [
    1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1, 14, 1, 5, 1, 5, 2, 2, 1, 15,
];

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: String,
    pub table: TableGroup,
}

/// Isomorphism classes of groups of order `≤ max_order` (at most 24),
/// sorted by order.
pub fn small_groups(max_order: usize) -> Vec<CatalogEntry> {
    assert!(
        max_order <= MAX_CATALOG_ORDER,
        "catalog is complete only up to order {MAX_CATALOG_ORDER}"
    );
    let mut out: Vec<CatalogEntry> = Vec::new();
    let mut auts: HashMap<usize, Vec<Vec<u16>>> = HashMap::new();
    for n in 1..=max_order {
        let start = out.len();
        let mut found: Vec<CatalogEntry> = Vec::new();
        let offer = |name: String, t: TableGroup, found: &mut Vec<CatalogEntry>| {
            if !found.iter().any(|e| e.table.is_isomorphic(&t)) {
                found.push(CatalogEntry { name, table: t });
            }
        };
        offer(format!("C{n}"), TableGroup::cyclic(n), &mut found);
        for (name, t) in named_groups(n) {
            offer(name, t, &mut found);
        }
        for a in 0..start {
            for b in a..start {
                let (ea, eb) = (&out[a], &out[b]);
                if ea.table.order() > 1 && ea.table.order() * eb.table.order() == n {
                    offer(
                        format!("{}x{}", ea.name, eb.name),
                        TableGroup::direct_product(&ea.table, &eb.table),
                        &mut found,
                    );
                }
            }
        }
        for m in 1..=n {
            if n % m != 0 || m == n {
                continue;
            }
            let k = n / m;
            for r in 1..m.max(2) {
                if gcd_u64(r as u64, m as u64) != 1 {
                    continue;
                }
                for t in 0..m {
                    if let Some(g) = TableGroup::metacyclic(m, k, r, t) {
                        offer(format!("Meta({m},{k},{r},{t})"), g, &mut found);
                    }
                }
            }
        }
        for h in 0..start {
            let hn = out[h].table.order();
            if hn < 2 || n % hn != 0 || hn == n {
                continue;
            }
            let k = n / hn;
            let list = auts
                .entry(h)
                .or_insert_with(|| out[h].table.automorphisms());
            for phi in list.iter() {
                if let Some(g) = TableGroup::semidirect(&out[h].table, k, phi) {
                    offer(format!("{}:C{k}", out[h].name), g, &mut found);
                }
            }
        }
        out.extend(found);
    }
    out
}

fn named_groups(n: usize) -> Vec<(String, TableGroup)> {
    let perm_group = |deg: usize, gens: &[&str]| {
        let gens: Vec<Perm> = gens
            .iter()
            .map(|s| Perm::parse(s, deg).expect("literal"))
            .collect();
        TableGroup::from_perm_group(&Group::closure(deg, &gens).expect("small group"))
    };
    match n {
        6 => vec![("S3".into(), perm_group(3, &["(0 1 2)", "(0 1)"]))],
        8 => vec![
            ("D8".into(), perm_group(4, &["(0 1 2 3)", "(1 3)"])),
            ("Q8".into(), TableGroup::metacyclic(4, 2, 3, 2).expect("Q8")),
        ],
        12 => vec![("A4".into(), perm_group(4, &["(0 1 2)", "(0 1)(2 3)"]))],
        24 => vec![
            ("S4".into(), perm_group(4, &["(0 1 2 3)", "(0 1)"])),
            ("SL(2,3)".into(), sl23()),
        ],
        _ => vec![],
    }
}

/// `SL(2, 3)` acting on the eight nonzero vectors of `F_3²`.
fn sl23() -> TableGroup {
    use super::linalg::Mat;
    let gens = [
        Mat::from_rows(3, &[&[1, 1], &[0, 1]]),
        Mat::from_rows(3, &[&[1, 0], &[1, 1]]),
    ];
    let perms: Vec<Perm> = gens.iter().map(Mat::to_perm).collect();
    TableGroup::from_perm_group(&Group::closure(9, &perms).expect("SL(2,3)"))
}
