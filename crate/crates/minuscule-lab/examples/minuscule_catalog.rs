//! Enumerate the minuscule fundamental weights of every simple type in the
//! rank sweep, with orbit sizes computed twice: by breadth-first closure
//! and by the index formula |W| / |W_lambda|.
//!
//! Run with: cargo run -p minuscule-lab --example minuscule_catalog

use minuscule_lab::rootsys::{RootSystem, Weight};
use minuscule_lab::verify::sweep_simple_types;

fn main() {
    println!("{:<6} {:<18} {:<30}", "type", "minuscule nodes", "orbit sizes");
    for t in sweep_simple_types(8) {
        let rs = RootSystem::simple(t);
        let nodes = rs.list_minuscule();
        if nodes.is_empty() {
            println!("{:<6} {:<18} {:<30}", t.to_string(), "none", "-");
            continue;
        }
        let labels: Vec<String> = nodes.iter().map(|n| (n + 1).to_string()).collect();
        let sizes: Vec<String> = nodes
            .iter()
            .map(|&n| {
                let lambda = Weight::fundamental(rs.stype().clone(), n).unwrap();
                let by_orbit = rs.orbit(&lambda).unwrap().len();
                let by_index = rs.orbit_size_by_index(&lambda).unwrap();
                assert_eq!(by_index.to_string(), by_orbit.to_string());
                by_orbit.to_string()
            })
            .collect();
        println!(
            "{:<6} {:<18} {:<30}",
            t.to_string(),
            labels.join(" "),
            sizes.join(" ")
        );
    }
}
