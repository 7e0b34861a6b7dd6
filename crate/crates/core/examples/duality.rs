//! Ψ and Φ on a small language, followed by a check of both dualities.

use quotlat::atoms::decompose;
use quotlat::automata::{parse_regex, Alphabet};
use quotlat::lattice::{build_lattice, phi, psi, verify_duality, DualityPart, LatticeKind, Side};
use quotlat::render::atom_union_label;

fn main() -> quotlat::Result<()> {
    let sigma = Alphabet::new("ab")?;
    let d = decompose(&parse_regex("_|a|aa|ba", &sigma)?)?;
    let label = |side, x: &quotlat::set::IndexSet| atom_union_label(&d, side, x, 3);

    println!("Ψ on unions of left quotients:");
    for x in build_lattice(&d, LatticeKind::UNION_LEFT).iter() {
        let y = psi(&d, &x)?;
        println!(
            "  Ψ({}) = {}",
            label(Side::Left, &x.atoms),
            label(Side::Right, &y.atoms)
        );
    }
    println!("Φ on intersections of left quotients:");
    for x in build_lattice(&d, LatticeKind::INTERSECTION_LEFT).iter() {
        let y = phi(&d, &x)?;
        println!(
            "  Φ({}) = {}",
            label(Side::Left, &x.atoms),
            label(Side::Right, &y.atoms)
        );
    }
    for part in [DualityPart::A, DualityPart::B] {
        let r = verify_duality(&d, part);
        println!("{part:?}: {} elements, verified {}", r.left_size, r.success());
    }
    Ok(())
}
