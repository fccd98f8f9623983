//! Prints random-graph fact frequencies at a given size.

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let n: u32 = args.get(1).map_or(4096, |s| s.parse().unwrap());
    let m: usize = args.get(2).map_or(4096, |s| s.parse().unwrap());
    let trials: usize = args.get(3).map_or(200, |s| s.parse().unwrap());
    let seed: u64 = args.get(4).map_or(0, |s| s.parse().unwrap());
    let t = std::time::Instant::now();
    let r = graphcore::montecarlo_facts(n, m, 3, trials, seed).unwrap();
    println!("{r:?} in {:?}", t.elapsed());
}
