use std::fmt::Write;
use std::io::IsTerminal;

use crate::args::OutputFormat;

/// Table styling; ANSI only on a terminal and only without `NO_COLOR`.
#[derive(Debug, Clone, Copy)]
pub struct Style {
    pub color: bool,
}

impl Style {
    pub fn detect() -> Self {
        let no_color = std::env::var_os("NO_COLOR").is_some_and(|v| !v.is_empty());
        Self {
            color: !no_color && std::io::stdout().is_terminal(),
        }
    }

    pub fn key(&self, s: &str) -> String {
        if self.color {
            format!("\x1b[1m{s}\x1b[0m")
        } else {
            s.to_string()
        }
    }

    pub fn alert(&self, s: &str) -> String {
        if self.color {
            format!("\x1b[31m{s}\x1b[0m")
        } else {
            s.to_string()
        }
    }
}

pub fn resolve_format(requested: Option<OutputFormat>) -> OutputFormat {
    requested.unwrap_or(if std::io::stdout().is_terminal() {
        OutputFormat::Table
    } else {
        OutputFormat::Json
    })
}

/// A command result in both machine and human form.
#[derive(Debug, Clone)]
pub struct Output {
    pub json: String,
    pub table: String,
}

impl Output {
    pub fn new<S: serde::Serialize>(value: &S, table: String) -> Self {
        Self {
            json: serde_json::to_string(value).expect("outputs serialize"),
            table,
        }
    }

    pub fn render(&self, format: OutputFormat) -> &str {
        match format {
            OutputFormat::Table => &self.table,
            OutputFormat::Json | OutputFormat::Jsonl => &self.json,
        }
    }
}

/// Two aligned columns of `key value`.
pub fn key_values(style: Style, rows: &[(&str, String)]) -> String {
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    let mut out = String::new();
    for (i, (k, v)) in rows.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        let pad = " ".repeat(width - k.len());
        write!(out, "{}{pad}  {v}", style.key(k)).unwrap();
    }
    out
}
