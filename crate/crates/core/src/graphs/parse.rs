use super::{valid_name, GraphError, Multigraph};

/// Vertex created on first use without a `vertex` line.
pub const IMPLICIT_VERTEX: &str = "outside";

/// Reads the line format:
///
/// ```text
/// # comment
/// vertex <name>
/// edge <name1> <name2> [label]
/// ```
///
/// Names match `[A-Za-z0-9_]+`. `outside` is declared implicitly the first
/// time an edge uses it.
pub fn parse_graph(text: &str) -> Result<Multigraph, GraphError> {
    let mut g = Multigraph::new();
    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        let content = raw.split('#').next().unwrap_or_default();
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let syntax = |message: String| GraphError::Syntax { line, message };
        match tokens.as_slice() {
            [] => {}
            ["vertex", name] => {
                if !valid_name(name) {
                    return Err(syntax(format!("invalid vertex name {name:?}")));
                }
                if g.vertex(name).is_some() {
                    // `outside` may be declared after an edge already created it.
                    if *name != IMPLICIT_VERTEX {
                        return Err(syntax(format!("vertex {name:?} is declared twice")));
                    }
                } else {
                    g.add_vertex(name)?;
                }
            }
            ["vertex", ..] => return Err(syntax("expected `vertex <name>`".into())),
            ["edge", a, b, rest @ ..] if rest.len() <= 1 => {
                let mut endpoint = |name: &str| match g.vertex(name) {
                    Some(id) => Ok(id),
                    None if name == IMPLICIT_VERTEX => g.add_vertex(name),
                    None => Err(GraphError::UndeclaredVertex { line, name: name.to_string() }),
                };
                let a = endpoint(a)?;
                let b = endpoint(b)?;
                g.add_edge(a, b, rest.first().map(|l| l.to_string()));
            }
            ["edge", ..] => return Err(syntax("expected `edge <name1> <name2> [label]`".into())),
            [keyword, ..] => return Err(syntax(format!("unknown directive {keyword:?}"))),
        }
    }
    Ok(g)
}
