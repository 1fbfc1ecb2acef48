//! Combinatorial model of the 16_6 configuration of nodes and tropes on a
//! Kummer quartic.
//!
//! Classes are subsets of the six Weierstrass points modulo complement:
//! even classes are the 16 nodes (two-torsion points), odd classes the 16
//! trope planes (theta characteristics). A node lies on a trope exactly
//! when their symmetric difference has size 1 or 5.

use std::fmt;

const POINTS: u8 = 6;
const FULL: u16 = (1 << POINTS) - 1;

/// A subset of {1,...,6} modulo complement, stored canonically: the
/// representative has size at most 3, and a size-3 representative
/// contains the point 1.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeierstrassSet(u16);

impl WeierstrassSet {
    /// Canonicalize an arbitrary bitmask over the 6 points.
    pub fn new(mask: u16) -> Self {
        let mask = mask & FULL;
        let complement = !mask & FULL;
        let size = mask.count_ones();
        let canonical = match size.cmp(&complement.count_ones()) {
            std::cmp::Ordering::Less => mask,
            std::cmp::Ordering::Greater => complement,
            // size three: keep the side containing point 1
            std::cmp::Ordering::Equal => {
                if mask & 1 != 0 {
                    mask
                } else {
                    complement
                }
            }
        };
        WeierstrassSet(canonical)
    }

    pub fn from_points(points: &[u8]) -> Self {
        let mut mask = 0u16;
        for &p in points {
            assert!((1..=POINTS).contains(&p), "Weierstrass points are 1..=6");
            mask |= 1 << (p - 1);
        }
        WeierstrassSet::new(mask)
    }

    pub fn empty() -> Self {
        WeierstrassSet(0)
    }

    pub fn representative_size(&self) -> u32 {
        self.0.count_ones()
    }

    /// Symmetric difference, well defined modulo complement.
    pub fn sym_diff(&self, rhs: &WeierstrassSet) -> WeierstrassSet {
        WeierstrassSet::new(self.0 ^ rhs.0)
    }

    pub fn points(&self) -> Vec<u8> {
        (1..=POINTS)
            .filter(|p| self.0 & (1 << (p - 1)) != 0)
            .collect()
    }
}

impl fmt::Debug for WeierstrassSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, p) in self.points().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}

/// A node of the Kummer quartic: an even class.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Node(pub WeierstrassSet);

/// A trope plane: an odd class.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Trope(pub WeierstrassSet);

/// The 16 nodes: the empty set and the 15 pairs.
pub fn enumerate_nodes() -> Vec<Node> {
    let mut out: Vec<Node> = (0..=FULL)
        .map(WeierstrassSet::new)
        .filter(|s| s.representative_size() % 2 == 0)
        .map(Node)
        .collect();
    out.sort();
    out.dedup();
    out
}

/// The 16 tropes: the 6 singletons and the 10 triples through point 1.
pub fn enumerate_tropes() -> Vec<Trope> {
    let mut out: Vec<Trope> = (0..=FULL)
        .map(WeierstrassSet::new)
        .filter(|s| s.representative_size() % 2 == 1)
        .map(Trope)
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Incidence: the node lies on the trope plane when the symmetric
/// difference of representatives has size 1 (equivalently 5).
pub fn incident(node: &Node, trope: &Trope) -> bool {
    node.0.sym_diff(&trope.0).representative_size() == 1
}

/// The full 16 x 16 incidence matrix, nodes indexing rows.
pub fn incidence_matrix() -> Vec<Vec<bool>> {
    let nodes = enumerate_nodes();
    let tropes = enumerate_tropes();
    nodes
        .iter()
        .map(|n| tropes.iter().map(|t| incident(n, t)).collect())
        .collect()
}

/// The incidence matrix rebuilt from the classical description instead of
/// the symmetric-difference rule: a singleton trope {j} carries the origin
/// node and the five pairs through j; a triple trope carries the pairs
/// inside it and the pairs in its complement.
pub fn incidence_matrix_from_case_analysis() -> Vec<Vec<bool>> {
    let nodes = enumerate_nodes();
    let tropes = enumerate_tropes();
    nodes
        .iter()
        .map(|n| {
            tropes
                .iter()
                .map(|t| {
                    let node_points = n.0.points();
                    let trope_points = t.0.points();
                    match trope_points.len() {
                        1 => {
                            node_points.is_empty()
                                || (node_points.len() == 2
                                    && node_points.contains(&trope_points[0]))
                        }
                        3 => {
                            node_points.len() == 2
                                && (node_points.iter().all(|p| trope_points.contains(p))
                                    || node_points.iter().all(|p| !trope_points.contains(p)))
                        }
                        _ => unreachable!("trope representatives have size 1 or 3"),
                    }
                })
                .collect()
        })
        .collect()
}

/// Render an incidence matrix as a JSON-style array of 0/1 rows.
pub fn render_matrix(matrix: &[Vec<bool>]) -> String {
    let rows: Vec<String> = matrix
        .iter()
        .map(|row| {
            let cells: Vec<&str> = row.iter().map(|&x| if x { "1" } else { "0" }).collect();
            format!("[{}]", cells.join(","))
        })
        .collect();
    format!("[{}]", rows.join(","))
}

#[derive(Debug, Clone, PartialEq)]
pub struct IncidenceSummary {
    pub node_count: usize,
    pub trope_count: usize,
    pub row_sums: Vec<usize>,
    pub col_sums: Vec<usize>,
    pub total_incidences: usize,
}

pub fn verify_16_6() -> IncidenceSummary {
    let matrix = incidence_matrix();
    let node_count = matrix.len();
    let trope_count = matrix.first().map(|r| r.len()).unwrap_or(0);
    let row_sums: Vec<usize> = matrix
        .iter()
        .map(|r| r.iter().filter(|&&x| x).count())
        .collect();
    let col_sums: Vec<usize> = (0..trope_count)
        .map(|j| matrix.iter().filter(|r| r[j]).count())
        .collect();
    let total_incidences = row_sums.iter().sum();
    IncidenceSummary {
        node_count,
        trope_count,
        row_sums,
        col_sums,
        total_incidences,
    }
}

/// For one trope: the lines cut by the other trope planes are the lines
/// through pairs of its six incident nodes, and each pair of Weierstrass
/// indices moves the trope to another trope.
#[derive(Debug, Clone, PartialEq)]
pub struct TropeLineCount {
    pub incident_nodes: usize,
    pub lines: usize,
    pub pair_map_closed: bool,
}

pub fn trope_line_count(trope: &Trope) -> TropeLineCount {
    let nodes = enumerate_nodes();
    let tropes = enumerate_tropes();
    let incident_nodes = nodes.iter().filter(|n| incident(n, trope)).count();
    let lines = incident_nodes * (incident_nodes - 1) / 2;
    let mut pair_map_closed = true;
    for i in 1..=POINTS {
        for j in (i + 1)..=POINTS {
            let moved = Trope(
                trope
                    .0
                    .sym_diff(&WeierstrassSet::from_points(&[i]))
                    .sym_diff(&WeierstrassSet::from_points(&[j])),
            );
            if !tropes.contains(&moved) {
                pair_map_closed = false;
            }
        }
    }
    TropeLineCount {
        incident_nodes,
        lines,
        pair_map_closed,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_representatives() {
        // a size-4 set canonicalizes to its complement pair
        let s = WeierstrassSet::from_points(&[2, 3, 4, 5]);
        assert_eq!(s.points(), vec![1, 6]);
        // size-3 keeps the side containing 1
        let t = WeierstrassSet::from_points(&[4, 5, 6]);
        assert_eq!(t.points(), vec![1, 2, 3]);
        assert!(t.representative_size() <= 3);
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_nodes().len(), 16);
        assert_eq!(enumerate_tropes().len(), 16);
        assert!(enumerate_nodes().contains(&Node(WeierstrassSet::empty())));
        assert!(enumerate_tropes().contains(&Trope(WeierstrassSet::from_points(&[1]))));
    }

    #[test]
    fn incidence_examples() {
        let origin = Node(WeierstrassSet::empty());
        for j in 1..=6u8 {
            assert!(incident(&origin, &Trope(WeierstrassSet::from_points(&[j]))));
        }
        let n12 = Node(WeierstrassSet::from_points(&[1, 2]));
        assert!(incident(&n12, &Trope(WeierstrassSet::from_points(&[1]))));
        assert!(!incident(
            &Node(WeierstrassSet::from_points(&[3, 4])),
            &Trope(WeierstrassSet::from_points(&[1]))
        ));
        assert!(incident(
            &n12,
            &Trope(WeierstrassSet::from_points(&[1, 2, 3]))
        ));
    }

    #[test]
    fn sixteen_six() {
        let summary = verify_16_6();
        assert_eq!(summary.node_count, 16);
        assert_eq!(summary.trope_count, 16);
        assert!(summary.row_sums.iter().all(|&s| s == 6));
        assert!(summary.col_sums.iter().all(|&s| s == 6));
        assert_eq!(summary.total_incidences, 96);
    }

    #[test]
    fn trope_one_row() {
        let trope = Trope(WeierstrassSet::from_points(&[1]));
        let nodes = enumerate_nodes();
        let incident_nodes: Vec<&Node> = nodes.iter().filter(|n| incident(n, &trope)).collect();
        let mut expected = vec![Node(WeierstrassSet::empty())];
        for j in 2..=6u8 {
            expected.push(Node(WeierstrassSet::from_points(&[1, j])));
        }
        expected.sort();
        let mut found: Vec<Node> = incident_nodes.into_iter().copied().collect();
        found.sort();
        assert_eq!(found, expected);
    }

    #[test]
    fn trope_lines() {
        for trope in enumerate_tropes() {
            let count = trope_line_count(&trope);
            assert_eq!(count.incident_nodes, 6);
            assert_eq!(count.lines, 15);
            assert!(count.pair_map_closed);
        }
        // every pair of the 16 planes meets in a line
        assert_eq!(16 * 15 / 2, 120);
        // the pair {1,2} moves trope {1} to trope {2}
        let moved = WeierstrassSet::from_points(&[1])
            .sym_diff(&WeierstrassSet::from_points(&[1]))
            .sym_diff(&WeierstrassSet::from_points(&[2]));
        assert_eq!(moved, WeierstrassSet::from_points(&[2]));
    }

    #[test]
    fn nodes_form_two_torsion_group() {
        let nodes = enumerate_nodes();
        let zero = WeierstrassSet::empty();
        for a in &nodes {
            // every element is its own inverse
            assert_eq!(a.0.sym_diff(&a.0), zero);
            for b in &nodes {
                // closure
                let c = a.0.sym_diff(&b.0);
                assert_eq!(c.representative_size() % 2, 0);
                assert!(nodes.contains(&Node(c)));
                for d in &nodes {
                    // associativity, exhaustively
                    assert_eq!(
                        a.0.sym_diff(&b.0).sym_diff(&d.0),
                        a.0.sym_diff(&b.0.sym_diff(&d.0))
                    );
                }
            }
        }
    }

    #[test]
    fn translation_invariance() {
        let nodes = enumerate_nodes();
        let tropes = enumerate_tropes();
        for g in &nodes {
            for n in &nodes {
                for t in &tropes {
                    let moved_n = Node(n.0.sym_diff(&g.0));
                    let moved_t = Trope(t.0.sym_diff(&g.0));
                    assert_eq!(incident(n, t), incident(&moved_n, &moved_t));
                }
            }
        }
    }
}
