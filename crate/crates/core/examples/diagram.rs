//! The (a + b, a) lattice picture; pass `svg` for SVG output.

use repfn::diagram::{render_diagram, DiagramFormat};
use repfn::IntegerSet;

fn main() -> repfn::Result<()> {
    let set: IntegerSet = "complement(finite:2,4,8)".parse()?;
    let format = match std::env::args().nth(1).as_deref() {
        Some("svg") => DiagramFormat::Svg,
        _ => DiagramFormat::Ascii,
    };
    print!("{}", render_diagram(&set, 16, format)?);
    Ok(())
}
