//! Writes every built-in corpus space to `corpus/<name>.json`.
//!
//! Usage: `cargo run -p wittkit-core --example gen_corpus [out_dir]`

use std::path::PathBuf;

fn main() -> std::io::Result<()> {
    let dir = std::env::args().nth(1).map(PathBuf::from).unwrap_or_else(|| PathBuf::from("corpus"));
    std::fs::create_dir_all(&dir)?;
    for (name, space) in wittkit_core::corpus::all() {
        let path = dir.join(format!("{name}.json"));
        std::fs::write(&path, space.to_document().to_json() + "\n")?;
        println!("{}", path.display());
    }
    Ok(())
}
