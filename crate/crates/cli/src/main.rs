use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use crossmod_cli::commands::{self, Degrees, Theorem};
use crossmod_cli::report::{Report, Status};

#[derive(Parser)]
#[command(
    name = "crossmod",
    version,
    about = "Exact verification of enveloping crossed modules of Leibniz algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args, Clone, Copy)]
struct Truncation {
    /// Working degree D.
    #[arg(long, short = 'D', default_value_t = 3)]
    degree: usize,
    /// Extra degrees used when computing ideals.
    #[arg(long, short = 'S', default_value_t = 2)]
    slack: usize,
    /// Degree d up to which results are reported (default D − 2).
    #[arg(long, short = 'd')]
    report_degree: Option<usize>,
}

impl Truncation {
    fn degrees(self) -> Degrees {
        Degrees::new(self.degree, self.slack, self.report_degree)
    }
}

#[derive(Args)]
struct Output {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Include class bases in the report.
    #[arg(long)]
    dump_basis: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    LeibnizAlgebra,
    AssocAlgebra,
    LeibnizRep,
    LeibnizXmod,
    AssocXmod,
    XmodRep,
    XmodModule,
}

impl Kind {
    fn tag(self) -> &'static str {
        match self {
            Kind::LeibnizAlgebra => "leibniz_algebra",
            Kind::AssocAlgebra => "assoc_algebra",
            Kind::LeibnizRep => "leibniz_rep",
            Kind::LeibnizXmod => "leibniz_xmod",
            Kind::AssocXmod => "assoc_xmod",
            Kind::XmodRep => "xmod_rep",
            Kind::XmodModule => "xmod_module",
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum TheoremArg {
    Lemma41,
    Prop42,
    Thm5,
    Theta,
    Squares,
}

#[derive(Subcommand)]
enum Command {
    /// Run the axiom checks for a file.
    Check {
        path: PathBuf,
        /// Expected kind; defaults to the file's own tag.
        #[arg(long, value_enum)]
        kind: Option<Kind>,
        #[command(flatten)]
        output: Output,
    },
    /// Truncated UL of a Leibniz algebra.
    Ul {
        path: PathBuf,
        #[command(flatten)]
        trunc: Truncation,
        #[command(flatten)]
        output: Output,
    },
    /// Truncated XUL of a Leibniz crossed module.
    Xul {
        path: PathBuf,
        #[command(flatten)]
        trunc: Truncation,
        #[command(flatten)]
        output: Output,
    },
    /// Enveloping constructions in the category LM.
    Lm {
        path: PathBuf,
        #[command(flatten)]
        trunc: Truncation,
        #[command(flatten)]
        output: Output,
    },
    /// Check a theorem on an input file.
    Verify {
        #[arg(value_enum)]
        theorem: TheoremArg,
        path: PathBuf,
        #[command(flatten)]
        trunc: Truncation,
        #[command(flatten)]
        output: Output,
    },
    /// Print the module over XUL of a representation file.
    Module {
        path: PathBuf,
        #[command(flatten)]
        trunc: Truncation,
    },
    /// Print a file in canonical form with references inlined.
    Dump { path: PathBuf },
}

fn emit(report: Report, output: &Output) -> ExitCode {
    match output.format {
        Format::Text => print!("{}", report.to_text()),
        Format::Json => print!("{}", report.to_json()),
    }
    ExitCode::from(report.exit_code as u8)
}

fn print_file(result: crossmod::Result<String>) -> ExitCode {
    match result {
        Ok(s) => {
            print!("{s}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(Status::Error.exit_code() as u8)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Check { path, kind, output } => {
            emit(commands::check(&path, kind.map(Kind::tag)), &output)
        }
        Command::Ul {
            path,
            trunc,
            output,
        } => emit(
            commands::ul_cmd(&path, trunc.degrees(), output.dump_basis),
            &output,
        ),
        Command::Xul {
            path,
            trunc,
            output,
        } => emit(
            commands::xul_cmd(&path, trunc.degrees(), output.dump_basis),
            &output,
        ),
        Command::Lm {
            path,
            trunc,
            output,
        } => emit(
            commands::lm_cmd(&path, trunc.degrees(), output.dump_basis),
            &output,
        ),
        Command::Verify {
            theorem,
            path,
            trunc,
            output,
        } => {
            let t = match theorem {
                TheoremArg::Lemma41 => Theorem::Lemma41,
                TheoremArg::Prop42 => Theorem::Prop42,
                TheoremArg::Thm5 => Theorem::Thm5,
                TheoremArg::Theta => Theorem::Theta,
                TheoremArg::Squares => Theorem::Squares,
            };
            emit(commands::verify(t, &path, trunc.degrees()), &output)
        }
        Command::Module { path, trunc } => {
            print_file(commands::module_file(&path, trunc.degrees()))
        }
        Command::Dump { path } => print_file(commands::canonical(&path)),
    }
}
