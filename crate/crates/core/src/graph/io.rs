//! Edge-list text format and graph-input format detection.
//!
//! Edge lists: a header line `<n> <m>` (the form `n <n>` is also accepted,
//! in which case the edge count is not checked), then one `u v` pair per
//! line. `#` starts a comment; blank lines are ignored.

use std::fmt::Write as _;

use super::{parse_graph6, FormatError, Graph};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    Graph6,
    EdgeList,
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

pub fn parse_edge_list(text: &str) -> Result<Graph, FormatError> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or_else(|| FormatError::new(1, "missing header line"))?;
    let head: Vec<&str> = header.split_whitespace().collect();
    let parse_num = |tok: &str, line: usize| {
        tok.parse::<usize>()
            .map_err(|_| FormatError::new(line, format!("expected a non-negative integer, found {tok:?}")))
    };
    let (n, declared) = match head.as_slice() {
        ["n", n] => (parse_num(n, hline)?, None),
        [n, m] => (parse_num(n, hline)?, Some(parse_num(m, hline)?)),
        _ => return Err(FormatError::new(hline, "header must be `<n> <m>` or `n <n>`")),
    };
    let mut g = Graph::discrete(n);
    let mut count = 0;
    for (line, body) in lines {
        let toks: Vec<&str> = body.split_whitespace().collect();
        let [a, b] = toks.as_slice() else {
            return Err(FormatError::new(line, "edge lines hold exactly two vertex indices"));
        };
        let (a, b) = (parse_num(a, line)?, parse_num(b, line)?);
        g.add_edge(a, b).map_err(|e| FormatError::new(line, e.to_string()))?;
        count += 1;
    }
    if let Some(m) = declared {
        if m != count {
            return Err(FormatError::new(
                hline,
                format!("header declares {m} edges, found {count}"),
            ));
        }
    }
    Ok(g)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for e in g.edges() {
        writeln!(out, "{} {}", e.u(), e.v()).unwrap();
    }
    out
}

/// Decides between graph6 and edge-list by content: an edge list's header
/// holds whitespace, a graph6 line never does. Anything else is an error.
pub fn detect_graph_format(text: &str) -> Result<GraphFormat, FormatError> {
    let Some((line, first)) = content_lines(text).next() else {
        return Err(FormatError::new(1, "no graph data"));
    };
    if first.split_whitespace().count() == 2 {
        return Ok(GraphFormat::EdgeList);
    }
    let body = first.strip_prefix(">>graph6<<").unwrap_or(first);
    if first.len() != body.len() || body.bytes().all(|b| (63..=126).contains(&b)) {
        return Ok(GraphFormat::Graph6);
    }
    Err(FormatError::new(
        line,
        "cannot tell whether the input is graph6 or an edge list",
    ))
}

/// Reads one or more graphs: every non-blank line of a graph6 file, or the
/// single graph of an edge-list file. Errors carry the offending line.
pub fn parse_graphs(text: &str, format: Option<GraphFormat>) -> Result<Vec<Graph>, FormatError> {
    let format = match format {
        Some(f) => f,
        None => detect_graph_format(text)?,
    };
    match format {
        GraphFormat::EdgeList => parse_edge_list(text).map(|g| vec![g]),
        GraphFormat::Graph6 => parse_graph6_lines(text).map(|r| r.map(|(_, g)| g)).collect(),
    }
}

/// graph6 lines with their 1-based line numbers. A `>>graph6<<` header and
/// blank lines are skipped.
pub fn parse_graph6_lines(text: &str) -> impl Iterator<Item = Result<(usize, Graph), FormatError>> + '_ {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let mut line = raw.trim();
        if i == 0 {
            line = line.strip_prefix(">>graph6<<").unwrap_or(line);
        }
        if line.is_empty() {
            return None;
        }
        Some(
            parse_graph6(line)
                .map(|g| (i + 1, g))
                .map_err(|e| FormatError::new(i + 1, e.message)),
        )
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_list_round_trip() {
        let c5 = Graph::cycle(5);
        let text = write_edge_list(&c5);
        assert!(text.starts_with("5 5\n"));
        assert_eq!(parse_edge_list(&text).unwrap(), c5);
    }

    #[test]
    fn edge_list_accepts_comments_and_named_header() {
        let g = parse_edge_list("# K2\nn 2\n0 1 # the edge\n\n").unwrap();
        assert_eq!(g, Graph::complete(2));
        assert_eq!(parse_edge_list("0 0\n").unwrap(), Graph::empty());
    }

    #[test]
    fn edge_list_errors_report_lines() {
        let e = parse_edge_list("3 1\n0 3\n").unwrap_err();
        assert_eq!(e.line, 2);
        let e = parse_edge_list("3 2\n0 1\n").unwrap_err();
        assert_eq!(e.line, 1);
        let e = parse_edge_list("3 1\n0 1 2\n").unwrap_err();
        assert_eq!(e.line, 2);
        assert_eq!(parse_edge_list("3 1\n1 1\n").unwrap_err().line, 2);
    }

    #[test]
    fn format_detection() {
        assert_eq!(detect_graph_format("A_\n").unwrap(), GraphFormat::Graph6);
        assert_eq!(detect_graph_format("2 1\n0 1\n").unwrap(), GraphFormat::EdgeList);
        assert!(detect_graph_format("a b c\n").is_err());
        assert!(detect_graph_format("\n# nothing\n").is_err());
    }

    #[test]
    fn graph6_lines_keep_line_numbers() {
        let out: Vec<_> = parse_graph6_lines(">>graph6<<A_\n\nB!\nD??\n").collect();
        assert_eq!(out.len(), 3);
        assert_eq!(out[0].as_ref().unwrap().0, 1);
        assert_eq!(out[1].as_ref().unwrap_err().line, 3);
        assert_eq!(out[2].as_ref().unwrap().0, 4);
    }
}
