//! File ingestion for graph6 lists and embedding diagrams.

use std::fs;
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::graph::{graph6, Graph};
use crate::torus::TorusDiagram;

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_owned(),
        source,
    })
}

/// One graph per non-empty line, in file order.
pub fn load_graph6_file(path: &Path) -> Result<Vec<Graph>> {
    let text = read(path)?;
    graph6::parse_lines(&text).map_err(|e| with_path(path, e))
}

pub fn write_graph6_file(path: &Path, graphs: &[Graph]) -> Result<()> {
    let mut text = String::new();
    for g in graphs {
        text.push_str(&g.to_graph6());
        text.push('\n');
    }
    fs::write(path, text).map_err(|source| Error::Io {
        path: path.to_owned(),
        source,
    })
}

pub fn load_embedding_file(path: &Path) -> Result<TorusDiagram> {
    let text = read(path)?;
    TorusDiagram::parse(&text).map_err(|e| with_path(path, e))
}

/// Every `*.emb` file in `dir`, sorted by file name.
pub fn load_embedding_dir(dir: &Path) -> Result<Vec<(PathBuf, TorusDiagram)>> {
    let entries = fs::read_dir(dir).map_err(|source| Error::Io {
        path: dir.to_owned(),
        source,
    })?;
    let mut paths = Vec::new();
    for entry in entries {
        let entry = entry.map_err(|source| Error::Io {
            path: dir.to_owned(),
            source,
        })?;
        let path = entry.path();
        if path.extension().is_some_and(|e| e == "emb") {
            paths.push(path);
        }
    }
    paths.sort();
    paths
        .into_iter()
        .map(|p| load_embedding_file(&p).map(|d| (p, d)))
        .collect()
}

fn with_path(path: &Path, err: Error) -> Error {
    match err {
        Error::Parse { line, message } => Error::Parse {
            line,
            message: format!("{}: {message}", path.display()),
        },
        Error::Validation(m) => Error::Validation(format!("{}: {m}", path.display())),
        other => other,
    }
}
