use std::time::Instant;
fn main() {
    let t = Instant::now();
    let n = torelli::graphs::enumerate_trivalent(8).unwrap().len();
    println!("v=8: {n} classes in {:?}", t.elapsed());
}
