use torelli::mcg::*;
fn main() {
    let gens = twist_generators(3).unwrap();
    for (i, s) in gens.iter().enumerate() {
        for t in gens.iter().skip(i + 1) {
            let st = s.pair.compose(&t.pair).unwrap();
            let ts = t.pair.compose(&s.pair).unwrap();
            let commute = st == ts;
            let braid = st.compose(&s.pair).unwrap() == ts.compose(&t.pair).unwrap();
            println!("{} {}: commute={commute} braid={braid}", s.name, t.name);
        }
    }
}
