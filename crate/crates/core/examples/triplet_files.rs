//! Loading, validating and writing triplet definition files.

use tbshift::catalog::triplet_q;
use tbshift::io::TripletFile;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/data");
    let f = TripletFile::load(format!("{dir}/mu_5.json"))?;
    println!("loaded {:?} over {}", f.label, f.triplet.group());

    for bad in ["normalization", "character", "parse"] {
        let err = TripletFile::load(format!("{dir}/invalid/{bad}.json")).unwrap_err();
        println!("{bad}: {err}");
    }

    let text = serde_json::to_string_pretty(&TripletFile::new("mu_3", triplet_q(3)).to_json())?;
    println!("{text}");
    Ok(())
}
