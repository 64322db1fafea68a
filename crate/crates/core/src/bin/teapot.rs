use std::fs::File;
use std::io::BufWriter;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use teapot::config::{FiguresConfig, RunConfig};
use teapot::dataset::{
    build_point_cloud, build_point_cloud_to, read_points, CloudSource, CloudStats, PointFormat,
    PointWriter,
};
use teapot::ifs::{exclusion_test, gap_radius, verify_gap, Ring};
use teapot::poly::{polynomial_of, remove_trivial_factors};
use teapot::roots::{all_roots, leading_root};
use teapot::symbolic::{is_admissible, period_double};
use teapot::{Complex64, Flavor, IntPoly, Word};

const VERSION: &str = concat!(env!("CARGO_PKG_VERSION"), " (tpot format v1)");

#[derive(Parser)]
#[command(name = "teapot", version = VERSION, about = "Tent-map growth rates, Galois conjugates and the Master Teapot")]
struct Cli {
    /// Worker threads (defaults to the number of logical cores).
    #[arg(long, global = true, env = "TEAPOT_THREADS")]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Bulk {
    /// Length bound on the words.
    #[arg(long)]
    max_len: usize,
    #[arg(long)]
    out: PathBuf,
    /// csv or tpot.
    #[arg(long, default_value = "csv")]
    format: PointFormat,
}

#[derive(Subcommand)]
enum Command {
    /// Write the Ω₂ cloud: conjugates of all superattracting growth rates.
    Enumerate(Bulk),
    /// Write the Master Teapot cloud: (z, λ) for every conjugate; the teapot is the |z| ≤ 1 part.
    Teapot(Bulk),
    /// Write the preperiodic cloud; --max-len bounds preperiod + period.
    Preperiodic(Bulk),
    /// IFS exclusion test for a point of the unit disk.
    Membership {
        /// Complex point as re,im.
        #[arg(long, allow_hyphen_values = true)]
        z: String,
        #[arg(long, default_value_t = 12)]
        depth: usize,
    },
    /// Check the gap radius around a ring element against an Ω₂ cloud.
    Gaps {
        /// Z, sqrt:D or half:D.
        #[arg(long)]
        ring: Ring,
        /// Ring element as re,im.
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long)]
        n: usize,
        /// Point file to check; built on the fly when omitted.
        #[arg(long)]
        cloud: Option<PathBuf>,
    },
    /// Period-doubled word.
    Double {
        #[arg(long)]
        word: Word,
    },
    /// Polynomial, leading root and all roots of a word or polynomial.
    Roots {
        /// Periodic `100` or preperiodic `10(1)` word.
        #[arg(long, conflicts_with = "poly", required_unless_present = "poly")]
        word: Option<Word>,
        /// Integer coefficients, highest degree first, comma separated.
        #[arg(long, allow_hyphen_values = true)]
        poly: Option<String>,
    },
    /// Rebuild every point file listed in a figures config.
    Figures {
        #[arg(long, default_value = "figures.cfg")]
        config: PathBuf,
    },
}

fn parse_complex(s: &str) -> Result<Complex64, String> {
    let (re, im) = s
        .split_once(',')
        .ok_or_else(|| format!("expected re,im, got {s:?}"))?;
    let part = |t: &str| {
        t.trim()
            .parse::<f64>()
            .map_err(|_| format!("bad number {t:?} in {s:?}"))
    };
    Ok(Complex64::new(part(re)?, part(im)?))
}

fn parse_poly(s: &str) -> Result<IntPoly, String> {
    let coeffs = s
        .split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|_| format!("bad coefficient {t:?}")))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(IntPoly::from_descending(&coeffs))
}

fn print<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string(value).expect("serializable output"));
}

fn write_cloud(source: CloudSource, out: &Path, format: PointFormat) -> Result<CloudStats, String> {
    if let Some(dir) = out.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir).map_err(|e| format!("{}: {e}", dir.display()))?;
    }
    let file = File::create(out).map_err(|e| format!("{}: {e}", out.display()))?;
    let mut writer = PointWriter::new(BufWriter::new(file), format).map_err(|e| e.to_string())?;
    let stats = build_point_cloud_to(source, |pts| writer.write(pts)).map_err(|e| e.to_string())?;
    writer.finish().map_err(|e| e.to_string())?;
    Ok(stats)
}

fn bulk(threads: Option<usize>, source: CloudSource, args: &Bulk) -> Result<(), String> {
    let cfg = RunConfig::new(threads, args.format, args.out.clone()).map_err(|e| e.to_string())?;
    let stats = write_cloud(source, &cfg.out, cfg.format)?;
    print(&json!({ "source": source, "out": cfg.out, "format": cfg.format.to_string(), "stats": stats }));
    Ok(())
}

fn roots_report(p: &IntPoly, flavor: Flavor) -> Result<serde_json::Value, String> {
    let (reduced, trivial) =
        remove_trivial_factors(p, flavor == Flavor::Preperiodic).map_err(|e| e.to_string())?;
    let leading = leading_root(p).map_err(|e| e.to_string())?;
    let roots = if reduced.degree() >= 1 {
        all_roots(&reduced).map_err(|e| e.to_string())?.roots
    } else {
        Vec::new()
    };
    Ok(json!({
        "polynomial": p.to_string(),
        "reduced": reduced.to_string(),
        "removed": { "z-1": trivial.minus_one, "z+1": trivial.plus_one },
        "leading": leading,
        "roots": roots
            .iter()
            .map(|r| json!({ "re": r.z.re, "im": r.z.im, "abs": r.z.norm(), "multiplicity": r.multiplicity }))
            .collect::<Vec<_>>(),
    }))
}

fn run(cli: Cli) -> Result<(), String> {
    match cli.command {
        Command::Enumerate(a) => bulk(cli.threads, CloudSource::Periodic { max_len: a.max_len }, &a),
        Command::Teapot(a) => bulk(cli.threads, CloudSource::Teapot { max_len: a.max_len }, &a),
        Command::Preperiodic(a) => bulk(cli.threads, CloudSource::Preperiodic { max_total: a.max_len }, &a),
        Command::Membership { z, depth } => {
            let q = exclusion_test(parse_complex(&z)?, depth).map_err(|e| e.to_string())?;
            print(&q);
            Ok(())
        }
        Command::Gaps { ring, x, n, cloud } => {
            let spec = gap_radius(ring, parse_complex(&x)?, n).map_err(|e| e.to_string())?;
            let zs: Vec<Complex64> = match cloud {
                Some(path) => read_points(&path)
                    .map_err(|e| format!("{}: {e}", path.display()))?
                    .iter()
                    .filter(|p| p.flavor == Flavor::Periodic && p.word_len() <= n)
                    .map(|p| p.z())
                    .collect(),
                None => build_point_cloud(CloudSource::Periodic { max_len: n }).zs(),
            };
            let check = verify_gap(&spec, &zs, n).map_err(|e| e.to_string())?;
            print(&json!({ "gap": spec, "points": zs.len(), "check": check }));
            Ok(())
        }
        Command::Double { word } => {
            let d = period_double(&word).map_err(|e| e.to_string())?;
            print(&json!({ "word": word.to_string(), "double": d.to_string(), "admissible": is_admissible(&d) }));
            Ok(())
        }
        Command::Roots { word, poly } => {
            let report = match (word, poly) {
                (Some(w), _) => {
                    let p = polynomial_of(&w).map_err(|e| e.to_string())?;
                    let flavor = if w.is_periodic() { Flavor::Periodic } else { Flavor::Preperiodic };
                    let mut r = roots_report(&p, flavor)?;
                    r["word"] = json!(w.to_string());
                    r
                }
                (None, Some(s)) => roots_report(&parse_poly(&s)?, Flavor::Periodic)?,
                (None, None) => unreachable!("clap requires one of --word, --poly"),
            };
            print(&report);
            Ok(())
        }
        Command::Figures { config } => {
            let cfg = FiguresConfig::load(&config).map_err(|e| e.to_string())?;
            let base = config.parent().unwrap_or(Path::new(""));
            for fig in &cfg.figure {
                let out = base.join(&fig.out);
                let format = fig.point_format().map_err(|e| e.to_string())?;
                let stats = write_cloud(fig.source(), &out, format)?;
                print(&json!({ "figure": fig.name, "out": out, "stats": stats }));
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let threads = match &cli.command {
        Command::Figures { config } => {
            cli.threads.or_else(|| FiguresConfig::load(config).ok().and_then(|c| c.threads))
        }
        _ => cli.threads,
    };
    if threads == Some(0) {
        eprintln!("error: thread count must be at least 1");
        return ExitCode::from(2);
    }
    if let Some(t) = threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn version_names_tpot_format() {
        assert!(VERSION.ends_with(&format!("(tpot format v{})", teapot::TPOT_VERSION)));
    }

    #[test]
    fn complex_arguments() {
        assert_eq!(parse_complex("0.5,-0.25").unwrap(), Complex64::new(0.5, -0.25));
        assert!(parse_complex("0.5").is_err());
        assert_eq!(parse_poly("1,-2,0,1").unwrap().to_string(), "z^3 - 2z^2 + 1");
    }
}
