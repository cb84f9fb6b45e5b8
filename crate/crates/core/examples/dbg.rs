use tetraq::threedim_r::*;

fn main() {
    // Ngm over all ≤3, classified by k
    for k in 0..=4i64 {
        let mut fails = 0;
        let mut cases = 0;
        for a in 0..=3 { for b in 0..=3 { for c in 0..=3 { for i in 0..=3 { for j in 0..=3 {
            let r = check_lemma_identity("Ngm", tetraq::threedim_r::LemmaIndices::Linear([a,b,c,i,j,k])).unwrap();
            cases += 1;
            if !r.pass { fails += 1; }
        }}}}}
        println!("Ngm k={k}: {fails}/{cases} failures");
    }
    // hnt boundary: sweep ≤3 fully
    let r = check_lemma_sweep("hnt", 3, 0).unwrap();
    println!("hnt ≤3: pass={} {:?}", r.pass, r.failures.first().map(|f| f.indices.clone()));
    let r = check_lemma_sweep("Li", 3, 0).unwrap();
    println!("Li ≤3: pass={}", r.pass);
    let r = check_lemma_sweep("Ymi", 3, 0).unwrap();
    println!("Ymi ≤3: pass={}", r.pass);
    let r = check_lemma_sweep("Ask", 3, 0).unwrap();
    println!("Ask ≤3: pass={}", r.pass);
    let r = check_lemma_sweep("hmk", 3, 0).unwrap();
    println!("hmk ≤3: pass={}", r.pass);
}
