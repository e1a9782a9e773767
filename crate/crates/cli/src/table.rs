//! The N(m, e) table renderer: rows m, columns e, exact values or lo-hi
//! brackets from the bound aggregator plus (optionally) the clique search.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::Args;

use ftsnd::bounds::{self, AggregateOptions};
use ftsnd::error::Error;
use ftsnd::format::AndTable;
use ftsnd::search::{self, SearchBudget, SearchStatus};

/// Search is only attempted at orders where the compatibility graph stays
/// small enough to resolve within sane budgets.
const SEARCH_ORDER_CAP: usize = 12;

#[derive(Args)]
pub struct TableArgs {
    /// Largest ground-set order (row) to include.
    #[arg(long, default_value_t = 16)]
    m_max: usize,
    /// Per-cell search budget in seconds; 0 disables search and reports
    /// the closed-form bracket only. Default: 600, or FTSND_BUDGET_SECS.
    #[arg(long)]
    budget: Option<f64>,
    /// File of best-known A(n, d) values, lines `n d value`.
    #[arg(long)]
    andw_table: Option<PathBuf>,
}

struct Cell {
    m: usize,
    e: usize,
    lower: u128,
    upper: u128,
    provenance: String,
}

impl Cell {
    fn rendered(&self) -> String {
        if self.lower == self.upper {
            self.lower.to_string()
        } else {
            format!("{}-{}", self.lower, self.upper)
        }
    }
}

pub fn run(tsv: bool, quiet: bool, args: &TableArgs) -> Result<ExitCode, Error> {
    if args.m_max == 0 || args.m_max > 16 {
        return Err(Error::Usage(format!(
            "table rows are limited to 1 <= m <= 16, got m_max = {}",
            args.m_max
        )));
    }
    let budget = args.budget.unwrap_or_else(crate::default_budget_secs);
    let and_table = match &args.andw_table {
        Some(p) => Some(AndTable::parse(&std::fs::read_to_string(p)?)?),
        None => None,
    };

    let mut cells: Vec<Cell> = Vec::new();
    for m in 1..=args.m_max {
        for e in 0..m {
            cells.push(compute_cell(m, e, budget, and_table.as_ref())?);
        }
    }

    let e_max = args.m_max - 1;
    if tsv {
        let header: Vec<String> = std::iter::once("m".to_string())
            .chain((0..=e_max).map(|e| format!("e={e}")))
            .collect();
        println!("{}", header.join("\t"));
        for m in 1..=args.m_max {
            let row: Vec<String> = std::iter::once(m.to_string())
                .chain((0..=e_max).map(|e| cell_text(&cells, m, e)))
                .collect();
            println!("{}", row.join("\t"));
        }
    } else {
        let mut widths = vec![2usize; e_max + 2];
        for m in 1..=args.m_max {
            widths[0] = widths[0].max(m.to_string().len());
            for e in 0..=e_max {
                widths[e + 1] = widths[e + 1].max(cell_text(&cells, m, e).len());
            }
        }
        let mut header = format!("{:>w$}", "m", w = widths[0]);
        for e in 0..=e_max {
            header.push_str(&format!("  {:>w$}", format!("e={e}"), w = widths[e + 1]));
        }
        println!("{header}");
        for m in 1..=args.m_max {
            let mut row = format!("{m:>w$}", w = widths[0]);
            for e in 0..=e_max {
                row.push_str(&format!("  {:>w$}", cell_text(&cells, m, e), w = widths[e + 1]));
            }
            println!("{row}");
        }
    }

    if !quiet {
        println!();
        println!("cells with e >= m are blank; unfilled entries equal 1 (single block).");
        println!("provenance:");
        for cell in &cells {
            println!("  ({}, {}): {}", cell.m, cell.e, cell.provenance);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cell_text(cells: &[Cell], m: usize, e: usize) -> String {
    cells
        .iter()
        .find(|c| c.m == m && c.e == e)
        .map(|c| c.rendered())
        .unwrap_or_default()
}

fn compute_cell(
    m: usize,
    e: usize,
    budget_secs: f64,
    and_table: Option<&AndTable>,
) -> Result<Cell, Error> {
    let options = AggregateOptions {
        and_table,
        ..AggregateOptions::default()
    };
    let bracket = bounds::aggregate(m, e, &options)?;
    if let Some(v) = bracket.exact {
        return Ok(Cell {
            m,
            e,
            lower: v,
            upper: v,
            provenance: format!("{} / {}", bracket.lower_by, bracket.upper_by),
        });
    }
    if budget_secs > 0.0 && m <= SEARCH_ORDER_CAP {
        let result = search::max_ftsnd_exact(m, e, SearchBudget::time_limit(budget_secs))?;
        let (lower, upper, label) = match result.status {
            SearchStatus::Exact => (result.lower, result.lower, "search (exact)"),
            SearchStatus::Bracket => (
                // The aggregate bracket stays valid; keep the tighter ends.
                result.lower.max(bracket.lower),
                result.upper.min(bracket.upper),
                "search (bracket, budget exhausted)",
            ),
        };
        return Ok(Cell {
            m,
            e,
            lower,
            upper,
            provenance: label.to_string(),
        });
    }
    Ok(Cell {
        m,
        e,
        lower: bracket.lower,
        upper: bracket.upper,
        provenance: format!("{} / {}", bracket.lower_by, bracket.upper_by),
    })
}
