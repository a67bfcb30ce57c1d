use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use qgc::args::Format;
use qgc::{cache, commands, parse};
use qgc_core::qgroup::QuantumGroup;

fn main() -> ExitCode {
    let req = match parse(std::env::args_os()) {
        Ok(r) => r,
        Err(e) => {
            if e.exit_code() == 0 {
                print!("{e}");
            } else {
                eprintln!("{e}");
            }
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    let quiet = req.quiet;
    let progress = |m: &str| {
        if !quiet {
            eprintln!("[qgc] {m}");
        }
    };
    let start = Instant::now();
    let q = QuantumGroup::new(req.n).expect("rank validated by the parser");
    let cache_dir = std::env::var_os(cache::ENV).map(PathBuf::from);
    if let Some(dir) = &cache_dir {
        match cache::load(&q, dir) {
            Ok(k) if k > 0 => progress(&format!("loaded {k} graded bases from cache")),
            Ok(_) => {}
            Err(e) => eprintln!("[qgc] ignoring cache: {e}"),
        }
    }
    let report = commands::run(&req, &q, &progress);
    if let Some(dir) = &cache_dir {
        if let Err(e) = cache::store(&q, dir) {
            eprintln!("[qgc] could not write cache: {e}");
        }
    }
    match req.format {
        Format::Json => print!("{}", report.render_json()),
        Format::Text => print!("{}", report.render_text()),
    }
    progress(&format!("{} finished in {:.3}s", req.task.name(), start.elapsed().as_secs_f64()));
    ExitCode::from(report.status.exit_code() as u8)
}
