//! Double-reversal minimization next to partition refinement.

use quotlat::automata::{determinize, minimize, parse_regex, Alphabet, Automaton};
use quotlat::oracle::minimize_refinement;

fn main() -> quotlat::Result<()> {
    let sigma = Alphabet::new("ab")?;
    for regex in ["(a|b)*a(a|b)(a|b)", "(ab|ba)*", "a*b*a*", "(a|b)*(aa|bb)(a|b)*"] {
        let n = parse_regex(regex, &sigma)?;
        let subset = determinize(&n);
        let m = minimize(&n);
        let same = m == minimize_refinement(&subset);
        println!(
            "{regex:24} nfa {:2}  subset {:2}  minimal {:2}  refinement agrees: {same}",
            n.state_count(),
            subset.state_count(),
            m.state_count()
        );
    }
    Ok(())
}
