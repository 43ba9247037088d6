//! Drives the batch commands from code instead of the `oscfield` binary.
//!
//! ```bash
//! cargo run -p oscfield --example batch -- /tmp/oscfield-batch
//! ```

use clap::Parser;
use oscfield::cli::{execute, Cli};

fn main() {
    let out = std::env::args().nth(1).unwrap_or_else(|| "oscfield-batch".into());
    let configs = concat!(env!("CARGO_MANIFEST_DIR"), "/examples/configs");
    let runs = [
        ("verify-algebra", None),
        ("vacuum-energy", None),
        ("field-identities", Some("box.json")),
        ("field-sweep", Some("coherent.json")),
        ("emission", Some("emission.json")),
        ("emission", Some("jaynes_cummings.json")),
        ("compare-standard", Some("compare.json")),
    ];
    for (command, config) in runs {
        let dir = format!("{out}/{command}-{}", config.unwrap_or("default.json").trim_end_matches(".json"));
        let mut args = vec!["oscfield".to_string(), command.into(), "--out".into(), dir];
        if let Some(c) = config {
            args.extend(["--config".into(), format!("{configs}/{c}")]);
        }
        match execute(&Cli::parse_from(args)) {
            Ok(o) => println!("{command:<17} {:<4} {}", if o.pass { "pass" } else { "FAIL" }, o.message),
            Err(e) => println!("{command:<17} error {e}"),
        }
    }
}
