use std::io::Read;

use domfree::format::{parse_edge_list, parse_graph6};
use domfree::generators::Family;
use domfree::Graph;

use crate::{GraphInput, InputFormat};

/// Parses `family:size` or a graph6 string. graph6 never contains `:`.
pub fn parse_graph_arg(text: &str) -> Result<Graph, String> {
    match text.split_once(':') {
        Some((family, size)) => {
            let family: Family = family.parse()?;
            let size: usize = size.trim().parse().map_err(|_| format!("invalid size in {text:?}"))?;
            family.generate(size).map_err(|e| e.to_string())
        }
        None => parse_graph6(text).map_err(|e| format!("malformed graph6 {text:?}: {e}")),
    }
}

pub fn read_graph(input: &GraphInput) -> Result<Graph, String> {
    if let Some(inline) = &input.graph {
        return parse_graph_arg(inline);
    }
    let Some(path) = &input.input else {
        return Err("no graph given; use --graph or --input".into());
    };
    let text = if path.as_os_str() == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| format!("cannot read standard input: {e}"))?;
        buf
    } else {
        std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?
    };
    let parsed = match input.format {
        InputFormat::Graph6 => parse_graph6(&text),
        InputFormat::Edgelist => parse_edge_list(&text),
    };
    parsed.map_err(|e| format!("malformed graph in {}: {e}", path.display()))
}
