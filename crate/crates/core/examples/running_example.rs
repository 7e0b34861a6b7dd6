//! Quotients and atoms of L = {ε, a, aa, ba}.

use quotlat::atoms::{decompose, quotient_atom_matrix};
use quotlat::automata::{parse_regex, Alphabet};

fn main() -> quotlat::Result<()> {
    let sigma = Alphabet::new("ab")?;
    let d = decompose(&parse_regex("_|a|aa|ba", &sigma)?)?;

    println!("{} left quotients:", d.n());
    for j in 0..d.n() {
        println!("  L{j} = {}", d.left_quotient_summary(j, 4));
    }
    println!("{} right quotients:", d.m());
    for i in 0..d.m() {
        println!("  R{i} = {}", d.right_quotient_summary(i, 4));
    }
    println!("left atoms (with the quotients each one lies in):");
    for i in 0..d.m() {
        println!(
            "  A{i} = {}  inside L_j for j in {}",
            d.left_atom_summary(i, 4),
            d.left_atom_set(i)
        );
    }
    println!("right atoms:");
    for j in 0..d.n() {
        println!("  B{j} = {}", d.right_atom_summary(j, 4));
    }
    println!("quotient-atom matrix:\n{}", quotient_atom_matrix(&d));
    Ok(())
}
