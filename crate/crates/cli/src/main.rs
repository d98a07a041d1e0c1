use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use onecenter_cli::config::Config;
use onecenter_cli::{
    cmd_eval, cmd_plot, cmd_seb, cmd_trace, cmd_verify, CliError, Derivative, Output, PlotFormat,
};

/// Exact piecewise-rational 1-center of static and moving points.
#[derive(Parser)]
#[command(name = "onecenter", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Left,
    Right,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Svg,
    Csv,
}

#[derive(Subcommand)]
enum Cmd {
    /// Trace the center over the domain and print it as JSON.
    Trace { config: PathBuf },
    /// Compare a trace with the smallest enclosing ball at sampled times.
    Verify {
        config: PathBuf,
        /// Check this trace file instead of tracing the instance.
        #[arg(long)]
        trace: Option<PathBuf>,
        /// Number of samples; overrides the config.
        #[arg(long)]
        samples: Option<usize>,
    },
    /// Evaluate the center at one time.
    Eval {
        config: PathBuf,
        /// Integer, decimal or p/q time.
        #[arg(long = "t", allow_hyphen_values = true)]
        t: String,
        /// Also report one-sided derivatives.
        #[arg(long, value_enum)]
        derivative: Option<SideArg>,
    },
    /// Write the planar trace as SVG or CSV.
    Plot {
        config: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value = "svg")]
        format: FormatArg,
        /// Intervals per arc; each arc gets samples + 1 points.
        #[arg(long, default_value_t = 64)]
        samples: usize,
    },
    /// Smallest enclosing ball of a point set.
    Seb {
        points: PathBuf,
        /// Compare with the brute-force ball.
        #[arg(long)]
        check: bool,
    },
}

fn run(cli: Cli) -> Result<Output, CliError> {
    match cli.cmd {
        Cmd::Trace { config } => cmd_trace(&Config::load(&config)?),
        Cmd::Verify {
            config,
            trace,
            samples,
        } => cmd_verify(&Config::load(&config)?, trace.as_deref(), samples),
        Cmd::Eval {
            config,
            t,
            derivative,
        } => {
            let d = derivative.map(|s| match s {
                SideArg::Left => Derivative::Left,
                SideArg::Right => Derivative::Right,
                SideArg::Both => Derivative::Both,
            });
            cmd_eval(&Config::load(&config)?, &t, d)
        }
        Cmd::Plot {
            config,
            out,
            format,
            samples,
        } => {
            let f = match format {
                FormatArg::Svg => PlotFormat::Svg,
                FormatArg::Csv => PlotFormat::Csv,
            };
            cmd_plot(&Config::load(&config)?, &out, f, samples)
        }
        Cmd::Seb { points, check } => cmd_seb(&points, check),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            print!("{}", out.stdout);
            std::io::stdout().flush().ok();
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("{}", e.to_json());
            ExitCode::from(e.exit_code())
        }
    }
}
