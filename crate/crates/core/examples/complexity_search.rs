//! Random search for 3-state DFAs whose left quotients have 2^3 unions and
//! 2^3 intersections.

use quotlat::atoms::decompose;
use quotlat::automata::{minimize, Alphabet, Automaton, Dfa};
use quotlat::complexity::complexity_report;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn main() -> quotlat::Result<()> {
    let sigma = Alphabet::new("ab")?;
    let mut rng = StdRng::seed_from_u64(3);
    let mut found = 0;
    for _ in 0..20_000 {
        let table: Vec<Vec<usize>> = (0..3)
            .map(|_| vec![rng.random_range(0..3), rng.random_range(0..3)])
            .collect();
        let finals: Vec<usize> = (0..3).filter(|_| rng.random_bool(0.5)).collect();
        let dfa = minimize(&Dfa::from_table(sigma.clone(), table, 0, &finals)?);
        if dfa.state_count() != 3 {
            continue;
        }
        let r = complexity_report(&decompose(&dfa)?);
        if r.union_maximal && r.intersection_maximal {
            found += 1;
            if found == 1 {
                println!(
                    "first witness: transitions {:?}, final {:?}",
                    dfa.table(),
                    dfa.final_states()
                );
                print!("{r}");
            }
        }
    }
    println!("{found} witnesses among 20000 draws");
    Ok(())
}
