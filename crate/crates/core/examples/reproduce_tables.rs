//! Reruns the four desk-scale experiments and prints, for every start, the
//! first iteration at which the error drops below each threshold.

use parti_dfo::tables::TableSpec;

fn main() -> parti_dfo::error::Result<()> {
    let seed = 1;
    for t in 1..=4 {
        let spec = TableSpec::get(t).expect("tables 1 to 4");
        let rows = spec.run(seed)?;
        let [a, b, c] = spec.thresholds;
        println!(
            "table {t}: {} (thresholds {a:e}, {b:e}, {c:e})",
            spec.problem
        );
        for r in &rows {
            let first = r
                .first_below
                .map(|k| k.map_or("/".to_string(), |k| k.to_string()));
            println!(
                "  {:<16} {:>4} {:>4} {:>4}   k={:<4} error {:+.3e}",
                r.label, first[0], first[1], first[2], r.returned_k, r.returned_error
            );
        }
    }
    Ok(())
}
