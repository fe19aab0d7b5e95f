use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use kolchin::io::{run, Command, Format, IlArgs, DEFAULT_SEARCH_BOUND};

/// Filtered graph maps, essential axes and twist coordinates.
///
/// Group words compose right to left: `D.~E` applies `E⁻¹` first, then `D`.
#[derive(Parser, Debug)]
#[command(name = "kolchin", version)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,

    /// Report format.
    #[arg(long, value_enum, default_value_t = OutputFormat::Text, global = true)]
    format: OutputFormat,

    /// Reserved. No command uses randomness.
    #[arg(long, global = true)]
    seed: Option<u64>,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Validate every graph, map and group in the document.
    Check(Input),
    /// Homology matrices, unipotence, mod 3 triviality and growth degrees.
    Upg(GroupInput),
    /// Commutation certificate for the generators of a group.
    Abelian(GroupInput),
    /// Normalize the graph of a group and print the rewritten document.
    Condition(GroupInput),
    /// Essential edges, essential axes and the invariance checks.
    Axes {
        #[command(flatten)]
        input: GroupInput,
        #[arg(long, default_value_t = DEFAULT_SEARCH_BOUND)]
        search_bound: usize,
    },
    /// Twist coordinates of group words.
    Embed {
        #[command(flatten)]
        input: GroupInput,
        /// Comma separated group words, e.g. `D,D^2,~D`.
        #[arg(long, value_delimiter = ',', required = true)]
        words: Vec<String>,
        #[arg(long, default_value_t = DEFAULT_SEARCH_BOUND)]
        search_bound: usize,
    },
    /// Lifts that commute with the axis translation and fix at least three ends.
    Il {
        #[command(flatten)]
        input: GroupInput,
        #[arg(long)]
        element: String,
        /// Axis period, or its index in the `axes` listing; defaults to the first.
        #[arg(long)]
        axis: Option<String>,
        #[arg(long, default_value_t = 5)]
        exp_bound: i64,
        #[arg(long, default_value_t = 6)]
        radius: usize,
        #[arg(long, default_value_t = 64)]
        depth: usize,
        #[arg(long, default_value_t = DEFAULT_SEARCH_BOUND)]
        search_bound: usize,
    },
    /// Index arithmetic for rank n.
    Bound {
        #[arg(long)]
        rank: u32,
    },
}

#[derive(clap::Args, Debug)]
struct Input {
    /// Document path; reads stdin when omitted or `-`.
    file: Option<PathBuf>,
}

#[derive(clap::Args, Debug)]
struct GroupInput {
    #[command(flatten)]
    input: Input,
    /// Group name; may be omitted when the document has exactly one group.
    #[arg(long)]
    group: Option<String>,
}

fn read_input(input: &Input) -> std::io::Result<String> {
    match &input.file {
        Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p),
        _ => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = match cli.format {
        OutputFormat::Text => Format::Text,
        OutputFormat::Json => Format::Json,
    };
    let (input, command) = match cli.command {
        Cmd::Check(i) => (Some(i), Command::Check),
        Cmd::Upg(g) => (Some(g.input), Command::Upg { group: g.group }),
        Cmd::Abelian(g) => (Some(g.input), Command::Abelian { group: g.group }),
        Cmd::Condition(g) => (Some(g.input), Command::Condition { group: g.group }),
        Cmd::Axes { input, search_bound } => (
            Some(input.input),
            Command::Axes {
                group: input.group,
                search_bound,
            },
        ),
        Cmd::Embed {
            input,
            words,
            search_bound,
        } => (
            Some(input.input),
            Command::Embed {
                group: input.group,
                words,
                search_bound,
            },
        ),
        Cmd::Il {
            input,
            element,
            axis,
            exp_bound,
            radius,
            depth,
            search_bound,
        } => (
            Some(input.input),
            Command::Il(IlArgs {
                group: input.group,
                element,
                axis,
                exp_bound,
                radius,
                depth,
                search_bound,
            }),
        ),
        Cmd::Bound { rank } => (None, Command::Bound { rank }),
    };
    let text = match input.as_ref().map(read_input).transpose() {
        Ok(t) => t.unwrap_or_default(),
        Err(e) => {
            eprintln!("error: cannot read input: {e}");
            return ExitCode::from(1);
        }
    };
    let out = run(&text, &command, format);
    print!("{}", out.stdout);
    ExitCode::from(out.exit_code as u8)
}
