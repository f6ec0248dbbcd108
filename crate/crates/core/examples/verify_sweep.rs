//! Exhaustive theorem checking over every connected graph of one order,
//! with per-graph JSON for a few reports.
//!
//! cargo run --release --example verify_sweep [n] [theorem] [k]

use twofactor::theorem::{enumerated_corpus, verify_corpus_with, TheoremId, TheoremInstance, VerifyOptions};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().map(|s| s.parse()).transpose()?.unwrap_or(8);
    let theorem: TheoremId = args.next().unwrap_or_else(|| "main".into()).parse()?;
    let k: usize = args.next().map(|s| s.parse()).transpose()?.unwrap_or(2);

    let graphs = enumerated_corpus(n, true)?;
    let mut shown = 0;
    let summary = verify_corpus_with(&graphs, &TheoremInstance::new(theorem, k), &VerifyOptions::default(), |r| {
        if r.hypothesis_holds && shown < 3 {
            println!("{}", serde_json::to_string(r)?);
            shown += 1;
        }
        Ok(())
    })?;
    println!("{summary}");
    summary.write_csv(std::io::stdout())?;
    Ok(())
}
