//! The atom pairing and the matrix it induces, compared with the
//! quotient-atom matrix and with concatenations of actual words.

use quotlat::atoms::{decompose, quotient_atom_matrix};
use quotlat::automata::{minimize, parse_regex, shortest_words, Alphabet};
use quotlat::pairing::{matrix_via_pairing, pair_atoms, pair_words, PairingContext};

fn main() -> quotlat::Result<()> {
    let sigma = Alphabet::new("ab")?;
    let l = parse_regex("a*b|ba", &sigma)?;
    let d = decompose(&l)?;
    let ctx = PairingContext::new(&d);
    let lang = minimize(&l);

    for i in 0..d.n() {
        for j in 0..d.m() {
            let w = shortest_words(&d.right_atom_machine(i), 1, 16);
            let v = shortest_words(&d.left_atom_machine(j), 1, 16);
            println!(
                "<B{i}, A{j}> = {}   (w = {:?}, v = {:?}, wv in L: {})",
                pair_atoms(&ctx, i, j)?,
                w,
                v,
                pair_words(&lang, &w, &v)
            );
        }
    }
    let m = matrix_via_pairing(&ctx);
    println!("pairing matrix:\n{m}");
    println!("equals quotient-atom matrix: {}", m == quotient_atom_matrix(&d));
    Ok(())
}
