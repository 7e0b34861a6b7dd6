//! Writes the Hasse diagrams of all four quotient lattices as DOT files.
//!
//! Usage: cargo run --example lattices -- [regex] [output-dir]

use std::path::PathBuf;

use quotlat::atoms::decompose;
use quotlat::automata::{parse_regex, Alphabet};
use quotlat::lattice::{build_lattice, LatticeKind};
use quotlat::render::{lattice_labels, render_lattice_dot};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let regex = args.next().unwrap_or_else(|| "_|a|aa|ba".to_string());
    let dir = PathBuf::from(
        args.next()
            .unwrap_or_else(|| std::env::temp_dir().display().to_string()),
    );
    let sigma = Alphabet::new("ab")?;
    let d = decompose(&parse_regex(&regex, &sigma)?)?;
    for kind in LatticeKind::ALL {
        let l = build_lattice(&d, kind);
        let path = dir.join(format!("{}.dot", kind.name()));
        std::fs::write(&path, render_lattice_dot(&l, &lattice_labels(&d, &l, 3)))?;
        println!(
            "{kind}: {} elements, {} covers -> {}",
            l.len(),
            l.covers().len(),
            path.display()
        );
    }
    Ok(())
}
