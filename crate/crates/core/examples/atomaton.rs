//! The átomaton of a language, checked against the minimal DFA.
//!
//! Usage: cargo run --example atomaton -- '(a|b)*ab'

use quotlat::atoms::decompose;
use quotlat::automata::io::to_dot;
use quotlat::automata::{minimize, parse_regex, Alphabet};

fn main() -> quotlat::Result<()> {
    let regex = std::env::args().nth(1).unwrap_or_else(|| "(a|b)*ab".to_string());
    let sigma = Alphabet::new("ab")?;
    let d = decompose(&parse_regex(&regex, &sigma)?)?;
    let a = d.atomaton();
    println!("{regex}: {} quotients, {} atoms", d.n(), d.m());
    // determinizing the átomaton gives back the minimal DFA
    println!("determinized átomaton is minimal DFA: {}", &minimize(a) == d.dfa());
    println!("átomaton is deterministic: {}", a.is_deterministic());
    print!("{}", to_dot(a, "atomaton"));
    Ok(())
}
