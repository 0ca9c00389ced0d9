use std::fs::File;
use std::io::BufReader;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use quotekit::emit::{query_corpus, read_jsonl_file, term_frequencies, write_jsonl_file, write_wordcloud_svg, QuerySpec};
use quotekit::ingest::{parse_tsv, LanguageProfile};
use quotekit::{Error, Pipeline, PipelineConfig};

#[derive(Parser)]
#[command(name = "quotekit", version, about = "Enrich and query quote corpora")]
struct Cli {
    /// Log more detail (repeat for more)
    #[arg(short, long, action = clap::ArgAction::Count, global = true)]
    verbose: u8,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Clean, normalize, impute and annotate a raw quote TSV
    Enrich {
        #[arg(long)]
        input: PathBuf,
        /// TOML pipeline config; bundled defaults when omitted
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long)]
        output: PathBuf,
        #[arg(long)]
        stats: Option<PathBuf>,
    },
    /// Select records whose KEY value contains any of TERMS
    Query {
        #[arg(long)]
        corpus: PathBuf,
        #[arg(long)]
        key: String,
        /// comma-delimited search words
        #[arg(long)]
        terms: String,
        /// write a word cloud of the matching values here
        #[arg(long)]
        cloud: Option<PathBuf>,
    },
    /// Build a language profile from sample text
    Profile {
        #[arg(long)]
        code: String,
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: PathBuf,
    },
}

fn enrich(input: &Path, config: Option<&Path>, output: &Path, stats: Option<&Path>) -> quotekit::Result<()> {
    let config = match config {
        Some(p) => PipelineConfig::load(p)?,
        None => PipelineConfig::default(),
    };
    let pipeline = Pipeline::from_config(config)?;
    let file = File::open(input).map_err(|e| Error::Io { path: input.into(), source: e })?;
    let parsed = parse_tsv(BufReader::new(file), &input.display().to_string())?;
    let out = pipeline.run(parsed);
    let n = write_jsonl_file(output, &out.records)?;
    if let Some(path) = stats {
        out.stats.write_tsv(path)?;
    }
    log::info!("wrote {n} records to {}", output.display());
    Ok(())
}

fn query(corpus: &Path, key: &str, terms: &str, cloud: Option<PathBuf>) -> quotekit::Result<()> {
    let spec = QuerySpec::parse(key, terms, cloud)?;
    let read = read_jsonl_file(corpus)?;
    if !read.errors.is_empty() {
        eprintln!("skipped {} malformed line(s)", read.errors.len());
    }
    let hits = query_corpus(&read.records, &spec);
    for r in &hits {
        for value in spec.key.values(r) {
            println!("{}\t{}\t{}", r.id, r.speaker, value);
        }
    }
    if let Some(path) = &spec.output_path {
        let stopwords = quotekit::Resources::bundled()?.stopwords;
        let table = term_frequencies(&hits, spec.key, &stopwords);
        write_wordcloud_svg(&table, path)?;
    }
    Ok(())
}

fn profile(code: &str, input: &Path, output: &Path) -> quotekit::Result<()> {
    let text = std::fs::read_to_string(input).map_err(|e| Error::Io { path: input.into(), source: e })?;
    let p = LanguageProfile::from_text(code, &text);
    std::fs::write(output, p.to_file_string()).map_err(|e| Error::Io { path: output.into(), source: e })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let level = match cli.verbose {
        0 => "warn",
        1 => "info",
        _ => "debug",
    };
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or(level)).init();

    let result = match cli.command {
        Command::Enrich { input, config, output, stats } => {
            enrich(&input, config.as_deref(), &output, stats.as_deref())
        }
        Command::Query { corpus, key, terms, cloud } => query(&corpus, &key, &terms, cloud),
        Command::Profile { code, input, output } => profile(&code, &input, &output),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_data_error() { 2 } else { 1 })
        }
    }
}
