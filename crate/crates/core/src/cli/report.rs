//! Check records and their two renderings.

use std::fmt::Write;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Record {
    pub name: String,
    pub inputs: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub records: Vec<Record>,
    pub notes: Vec<String>,
}

fn verdict(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

/// Quotes a field value so that a record stays on one line.
fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

impl Report {
    pub fn check(
        &mut self,
        name: impl Into<String>,
        inputs: impl Into<String>,
        expected: impl ToString,
        computed: impl ToString,
    ) {
        let expected = expected.to_string();
        let computed = computed.to_string();
        let pass = expected == computed;
        self.records.push(Record {
            name: name.into(),
            inputs: inputs.into(),
            expected,
            computed,
            pass,
        });
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    pub fn extend(&mut self, other: Report) {
        self.records.extend(other.records);
        self.notes.extend(other.notes);
    }

    pub fn failures(&self) -> usize {
        self.records.iter().filter(|r| !r.pass).count()
    }

    pub fn passed(&self) -> bool {
        self.failures() == 0
    }

    pub fn render_structured(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            writeln!(
                out,
                "record name={} inputs={} expected={} computed={} verdict={}",
                quote(&r.name),
                quote(&r.inputs),
                quote(&r.expected),
                quote(&r.computed),
                verdict(r.pass)
            )
            .unwrap();
        }
        for n in &self.notes {
            writeln!(out, "note text={}", quote(n)).unwrap();
        }
        writeln!(
            out,
            "summary records={} failed={} verdict={}",
            self.records.len(),
            self.failures(),
            verdict(self.passed())
        )
        .unwrap();
        out
    }

    pub fn render_table(&self) -> String {
        let header = ["check", "inputs", "expected", "computed", "verdict"];
        let rows: Vec<[String; 5]> = self
            .records
            .iter()
            .map(|r| {
                [
                    r.name.clone(),
                    r.inputs.clone(),
                    r.expected.clone(),
                    r.computed.clone(),
                    verdict(r.pass).to_string(),
                ]
            })
            .collect();
        let mut widths = header.map(|h| h.chars().count());
        for row in &rows {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.chars().count());
            }
        }
        let line = |cells: &[String]| {
            let padded: Vec<String> = cells
                .iter()
                .zip(&widths)
                .map(|(c, w)| format!("{c:<w$}"))
                .collect();
            padded.join("  ").trim_end().to_string()
        };
        let mut out = String::new();
        writeln!(out, "{}", line(&header.map(String::from))).unwrap();
        writeln!(out, "{}", widths.map(|w| "-".repeat(w)).join("  ")).unwrap();
        for row in &rows {
            writeln!(out, "{}", line(row)).unwrap();
        }
        for n in &self.notes {
            writeln!(out, "note: {n}").unwrap();
        }
        writeln!(
            out,
            "{} of {} checks passed: {}",
            self.records.len() - self.failures(),
            self.records.len(),
            verdict(self.passed())
        )
        .unwrap();
        out
    }
}
