//! Young diagram rendering in ASCII, LaTeX (`\yng`) and the reflection
//! filling used to read off reduced words.
//!
//! Shapes store row 1 (the shortest) first; every rendering here prints the
//! top row `r` first, the way the diagrams are usually drawn.

use gitquot_core::PartitionShape;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RenderOptions {
    pub filled: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DiagramRendering {
    pub ascii: String,
    pub latex: String,
    /// Reflection indices per row, row 1 first: row `i` holds `i, i+1, ...`.
    pub filled: Option<Vec<Vec<usize>>>,
}

impl DiagramRendering {
    /// The filling as text, top row first, e.g. `s4 s5 s6 s7 s8`.
    pub fn filled_text(&self) -> Option<String> {
        let rows = self.filled.as_ref()?;
        let lines: Vec<String> = rows
            .iter()
            .rev()
            .filter(|row| !row.is_empty())
            .map(|row| {
                row.iter()
                    .map(|j| format!("s{j}"))
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        Some(lines.join("\n"))
    }
}

pub fn render(shape: &PartitionShape, options: RenderOptions) -> DiagramRendering {
    let nonzero: Vec<usize> = shape
        .parts()
        .iter()
        .rev()
        .copied()
        .filter(|&p| p > 0)
        .collect();

    let ascii = nonzero
        .iter()
        .map(|&p| "[ ]".repeat(p))
        .collect::<Vec<_>>()
        .join("\n");

    let latex = if nonzero.is_empty() {
        String::new()
    } else {
        let rows: Vec<String> = nonzero.iter().map(ToString::to_string).collect();
        format!("\\yng({})", rows.join(","))
    };

    let filled = options.filled.then(|| {
        shape
            .parts()
            .iter()
            .enumerate()
            .map(|(i, &len)| (i + 1..i + 1 + len).collect())
            .collect()
    });

    DiagramRendering {
        ascii,
        latex,
        filled,
    }
}
