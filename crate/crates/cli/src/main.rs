use std::io::Write;

fn main() {
    if let Some(n) = std::env::var("WITTKIT_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        // build_global fails only when a pool already exists
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
    let outcome = wittkit_cli::run(std::env::args_os());
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(outcome.stdout.as_bytes());
    let _ = stdout.flush();
    std::process::exit(outcome.code);
}
