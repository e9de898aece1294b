//! The `patterns` subcommands: list, show, graph.

use clap::{Args, Subcommand, ValueEnum};

use qpatterns::patterns::{find_pattern, pattern_catalog, pattern_graph};

use crate::CliError;

#[derive(Subcommand)]
pub enum PatternsCommand {
    /// List all patterns with their intents
    List(ListArgs),
    /// Show one pattern document in full
    Show(ShowArgs),
    /// Emit the link graph as DOT
    Graph,
}

#[derive(Args)]
pub struct ListArgs {
    #[arg(long, value_enum, default_value_t = CatalogFormat::Text)]
    format: CatalogFormat,
}

#[derive(Args)]
pub struct ShowArgs {
    /// Pattern name, id or alias (case-insensitive)
    name: String,
    #[arg(long, value_enum, default_value_t = CatalogFormat::Text)]
    format: CatalogFormat,
}

#[derive(Clone, Copy, ValueEnum)]
enum CatalogFormat {
    Text,
    Json,
}

pub fn execute(command: PatternsCommand) -> Result<(), CliError> {
    match command {
        PatternsCommand::List(args) => list(args),
        PatternsCommand::Show(args) => show(args),
        PatternsCommand::Graph => graph(),
    }
}

fn list(args: ListArgs) -> Result<(), CliError> {
    match args.format {
        CatalogFormat::Json => println!(
            "{}",
            serde_json::to_string_pretty(pattern_catalog()).expect("catalog serializes")
        ),
        CatalogFormat::Text => {
            for doc in pattern_catalog() {
                println!("{} — {}", doc.full_name(), doc.intent);
            }
        }
    }
    Ok(())
}

fn show(args: ShowArgs) -> Result<(), CliError> {
    let Some(doc) = find_pattern(&args.name) else {
        let names: Vec<&str> = pattern_catalog().iter().map(|d| d.id).collect();
        return Err(CliError::Usage(format!(
            "unknown pattern {:?}; valid names: {}",
            args.name,
            names.join(", ")
        )));
    };
    match args.format {
        CatalogFormat::Json => println!(
            "{}",
            serde_json::to_string_pretty(doc).expect("pattern doc serializes")
        ),
        CatalogFormat::Text => {
            println!("{}", doc.full_name());
            println!("  intent:   {}", doc.intent);
            println!("  icon:     {}", doc.icon);
            println!("  problem:  {}", doc.problem);
            println!("  context:  {}", doc.context);
            println!("  solution: {}", doc.solution);
            println!("  known uses: {}", doc.known_uses);
            println!("  next:");
            for link in doc.next {
                println!("    -> {} ({})", link.to, link.note);
            }
        }
    }
    Ok(())
}

fn graph() -> Result<(), CliError> {
    println!("digraph pattern_language {{");
    println!("  rankdir=LR;");
    for doc in pattern_catalog() {
        println!("  \"{}\" [label=\"{}\"];", doc.id, doc.name);
    }
    for (from, to, note) in pattern_graph() {
        println!("  \"{from}\" -> \"{to}\" [label=\"{note}\"];");
    }
    println!("}}");
    Ok(())
}
