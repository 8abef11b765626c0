use std::time::Instant;
fn main() {
    let t = Instant::now();
    let n = torelli::graphs::raw_candidate_count(8);
    println!("v=8 raw connected candidates: {n} in {:?}", t.elapsed());
}
