//! Instantiate the adapted-real-form tables at a small parameter, render
//! each Satake diagram, and run the per-row verification: node deletion
//! against the quasi-compact catalog, Levi type against subdiagram
//! deletion, and the freeness cross-check on the dual side.
//!
//! Run with: cargo run -p minuscule-lab --example satake_tables

use minuscule_lab::realforms::{instantiate_tables, verify_row};
use minuscule_lab::report::Status;

fn main() {
    let rows = instantiate_tables(2..=2);
    for row in &rows {
        println!(
            "table {}  {:<22} {:<14} node {}  {}",
            row.table,
            row.real_form.to_string(),
            row.dual_type.to_string(),
            row.node + 1,
            row.satake.render(Some(row.node)),
        );
        for rec in verify_row(row) {
            let mark = match rec.status {
                Status::Pass => "ok",
                Status::Fail => "FAIL",
                Status::Uncertified => "uncertified",
            };
            println!("    {:<34} {}", rec.id.split("::").last().unwrap(), mark);
            assert_ne!(rec.status, Status::Fail, "{}", rec.id);
        }
    }
    println!("\n{} rows verified", rows.len());
}
