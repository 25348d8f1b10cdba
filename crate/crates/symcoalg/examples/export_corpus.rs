//! Writes every built-in coalgebra and Hopf algebra to exchange files.
//!
//! ```bash
//! cargo run --example export_corpus -- out_dir
//! ```
//!
//! The files feed the `symcoalg` binary:
//!
//! ```bash
//! symcoalg is-symmetric out_dir/Mc2.json
//! symcoalg hopf out_dir/H4.json
//! ```

use std::env;
use std::fs;
use std::path::PathBuf;

use symcoalg::corpus;
use symcoalg::exchange::{emit_document, from_coalgebra, from_hopf, Document};

fn main() -> std::io::Result<()> {
    let dir: PathBuf = env::args().nth(1).unwrap_or_else(|| "corpus".into()).into();
    fs::create_dir_all(&dir)?;
    let mut written = Vec::new();
    for c in corpus::coalgebras() {
        let path = dir.join(format!("{}.json", sanitize(c.name())));
        let text = emit_document(&Document::Coalgebra(from_coalgebra(&c))).expect("corpus emits");
        fs::write(&path, text)?;
        written.push(path);
    }
    for h in corpus::hopf_algebras() {
        let path = dir.join(format!("{}.json", sanitize(h.name())));
        let text = emit_document(&Document::Hopf(from_hopf(&h))).expect("corpus emits");
        fs::write(&path, text)?;
        written.push(path);
    }
    for p in &written {
        println!("{}", p.display());
    }
    Ok(())
}

fn sanitize(name: &str) -> String {
    name.chars()
        .map(|c| if c.is_alphanumeric() { c } else { '_' })
        .collect()
}
