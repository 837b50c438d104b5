fn main() {
    let path = std::path::Path::new("data/flock12/flock12.flock");
    let t = flock_cli::formats::load_flock(path).unwrap();
    let spec = t.flock_spec().unwrap();
    let start = std::time::Instant::now();
    let basis = flock_core::cochain::cocycle_space_1(spec, 3, 1 << 30).unwrap();
    println!("dimension {} in {:?}", basis.len(), start.elapsed());
}
