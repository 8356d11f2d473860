//! Deciding conjugacy from the triplet data: enumeration for finite groups
//! and the closed form on Z².

use tbshift::catalog::{triplet_q, triplet_theta};
use tbshift::classify::decide_conjugacy;
use tbshift::dynamics::Triplet;
use tbshift::Phase;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let t = triplet_q(3);
    let squared = Triplet::new(t.mu().clone(), t.chi().pow(2))?;
    let r = decide_conjugacy(&t, &squared, None)?;
    println!(
        "chi_3 vs chi_3^2: {:?} via {}, witness {:?}",
        r.verdict,
        r.method,
        r.witness.map(|w| w.matrix().to_vec())
    );

    let r = decide_conjugacy(&t, &triplet_q(5), None)?;
    println!("q = 3 vs q = 5: {:?}", r.verdict);

    let chi = [Phase::new(1, 3), Phase::ZERO];
    for (a, b) in [((1, 16), (3, 16)), ((1, 16), (15, 16)), ((1, 16), (9, 16))] {
        let (ta, tb) = (Phase::new(a.0, a.1), Phase::new(b.0, b.1));
        let r = decide_conjugacy(&triplet_theta(ta, chi), &triplet_theta(tb, chi), None)?;
        println!("theta {ta} vs {tb}: {:?}", r.verdict);
    }
    Ok(())
}
