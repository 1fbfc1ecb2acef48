//! The 16_6 configuration: nodes and trope planes as even and odd subsets
//! of the six Weierstrass points modulo complement, with incidence given
//! by symmetric difference of size one.
//!
//! ```bash
//! cargo run -p prymcalc --example kummer_configuration
//! ```

use prymcalc::kummer::{
    enumerate_nodes, enumerate_tropes, incidence_matrix, incident, trope_line_count, verify_16_6,
    Trope, WeierstrassSet,
};

fn main() {
    let nodes = enumerate_nodes();
    let tropes = enumerate_tropes();
    println!("{} nodes, {} tropes", nodes.len(), tropes.len());

    // print the incidence matrix, nodes as rows
    let matrix = incidence_matrix();
    for (n, row) in nodes.iter().zip(&matrix) {
        let cells: String = row.iter().map(|&x| if x { '#' } else { '.' }).collect();
        println!("{:<12} {cells}", format!("{:?}", n.0));
    }

    let summary = verify_16_6();
    println!(
        "row sums {:?}, column sums {:?}, total {}",
        summary.row_sums.first().unwrap(),
        summary.col_sums.first().unwrap(),
        summary.total_incidences
    );

    // the six nodes on the trope {1}, and its 15 intersection lines
    let trope = Trope(WeierstrassSet::from_points(&[1]));
    let on_plane: Vec<String> = nodes
        .iter()
        .filter(|n| incident(n, &trope))
        .map(|n| format!("{:?}", n.0))
        .collect();
    println!("nodes on trope {{1}}: {}", on_plane.join(" "));
    let lines = trope_line_count(&trope);
    println!(
        "trope {{1}}: {} incident nodes, {} lines, pair moves closed: {}",
        lines.incident_nodes, lines.lines, lines.pair_map_closed
    );
}
