//! Writes every corpus graph as a JSON file into the given directory.

use std::path::PathBuf;

use capcol::corpus::corpus;

fn main() -> std::io::Result<()> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "corpus-out".into()));
    std::fs::create_dir_all(&dir)?;
    for entry in corpus() {
        let g = entry.graph().expect("corpus graphs build");
        std::fs::write(dir.join(format!("{}.json", entry.name)), g.to_json() + "\n")?;
    }
    println!("wrote {} graphs to {}", corpus().len(), dir.display());
    Ok(())
}
