use clap::ValueEnum;
use gerstenhaber::bracket::CohomClass;
use gerstenhaber::{AlgElem, Algebra, Cyc, CycField, Mono};
use serde_json::{json, Map, Value};

use crate::Task;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

const NOTES: &[&str] = &[
    "scalars lie in Q(w), w a primitive p-th root of unity; a scalar is the list of its rational coefficients [num, den] on 1, w, ..., w^(p-2)",
    "phi_p_coefficients lists the cyclotomic polynomial defining w, lowest degree first",
    "Taft algebra: x^p = 0, g^p = 1, g x = w x g, D(x) = 1(x)x + x(x)g, D(g) = g(x)g, S(x) = -x g^(p-1)",
    "[f, g] = f o g - (-1)^((m-1)(n-1)) g o f for f of degree m and g of degree n",
    "small-resolution cochains are recorded by their value on the generator of degree n",
    "Taft cochains f~_v are T^e-linear, so the values on x^l xi_n x^r g^k pick up powers of w",
];

/// One computed item.
pub enum Entry {
    Check { name: String, algebra: String, degree: Option<i64>, pass: bool },
    Bracket { algebra: String, f: String, g: String, degree: usize, value: AlgElem, class: CohomClass },
    Compare { algebra: String, f: String, g: String, small: CohomClass, transported: CohomClass, bar_equal: bool },
    HopfBracket { f: usize, g: usize, is_cocycle: bool, class_zero: bool, zero: bool },
    Dims { name: String, dims: Vec<usize> },
}

pub struct Report {
    p: usize,
    task: Task,
    entries: Vec<Entry>,
    failures: Vec<String>,
}

impl Report {
    pub fn new(p: usize, task: Task) -> Report {
        Report { p, task, entries: Vec::new(), failures: Vec::new() }
    }

    pub fn push(&mut self, e: Entry) {
        if let Entry::Check { name, algebra, degree, pass: false } = &e {
            let at = degree.map(|d| format!(" at degree {d}")).unwrap_or_default();
            self.failures.push(format!("{name} on {algebra}{at}"));
        }
        self.entries.push(e);
    }

    pub fn check(&mut self, name: &str, algebra: &str, degree: Option<i64>, pass: bool) {
        self.push(Entry::Check { name: name.into(), algebra: algebra.into(), degree, pass });
    }

    pub fn fail(&mut self, msg: String) {
        self.failures.push(msg);
    }

    pub fn failures(&self) -> &[String] {
        &self.failures
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.to_json()).expect("serializable");
                s.push('\n');
                s
            }
            Format::Csv => self.to_csv(),
            Format::Text => self.to_text(),
        }
    }

    fn to_json(&self) -> Value {
        let phi: Vec<Value> = CycField::get(self.p as u32)
            .map(|f| f.phi().iter().map(|c| int_json(&c.to_string())).collect())
            .unwrap_or_default();
        let mut top = Map::new();
        top.insert("paper_convention_notes".into(), json!(NOTES));
        top.insert("p".into(), json!(self.p));
        top.insert("phi_p_coefficients".into(), Value::Array(phi));
        let mut results: Vec<Value> = self.entries.iter().map(entry_json).collect();
        results.push(json!({
            "kind": "summary",
            "task": self.task.name(),
            "status": if self.failures.is_empty() { "pass" } else { "fail" },
            "failures": self.failures,
        }));
        top.insert("results".into(), Value::Array(results));
        Value::Object(top)
    }

    fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        let task = self.task.name();
        let hopf = format!("H(T_{},k)", self.p);
        let mut row = |fields: &[&str]| w.write_record(fields).expect("in-memory csv");
        row(&["task", "algebra", "f", "g", "basis", "coordinate"]);
        for e in &self.entries {
            match e {
                Entry::Bracket { algebra, f, g, class, .. }
                | Entry::Compare { algebra, f, g, small: class, .. } => {
                    for (c, l) in class.coords.iter().zip(&class.labels) {
                        row(&[task, algebra, f, g, l, &c.to_string()]);
                    }
                }
                Entry::HopfBracket { f, g, class_zero, .. } => {
                    let c = if *class_zero { "0" } else { "nonzero" };
                    row(&[task, &hopf, &format!("u{f}"), &format!("u{g}"), "class", c]);
                }
                Entry::Check { name, algebra, degree, pass } => {
                    let d = degree.map(|d| d.to_string()).unwrap_or_default();
                    row(&[task, algebra, name, &d, "pass", &pass.to_string()]);
                }
                Entry::Dims { name, dims } => {
                    for (n, d) in dims.iter().enumerate() {
                        row(&[task, name, "", "", &format!("dim {n}"), &d.to_string()]);
                    }
                }
            }
        }
        let body = String::from_utf8(w.into_inner().expect("in-memory csv")).expect("utf-8 fields");
        format!(
            "# lossy: only cohomology class coordinates are written; cochain values are omitted. \
             Checks and dimensions appear with their verdict or value in the coordinate column.\n{body}"
        )
    }

    fn to_text(&self) -> String {
        let mut out = format!("task {} at p = {}\n", self.task.name(), self.p);
        for e in &self.entries {
            let line = match e {
                Entry::Check { name, algebra, degree, pass } => {
                    let d = degree.map(|d| format!(" n={d}")).unwrap_or_default();
                    format!("[{}] {name} on {algebra}{d}", if *pass { "PASS" } else { "FAIL" })
                }
                Entry::Bracket { algebra, f, g, class, .. } => format!("{algebra}: [{f}, {g}] = {class}"),
                Entry::Compare { algebra, f, g, small, transported, bar_equal } => format!(
                    "{algebra}: [{f}, {g}] small {small}, bar {transported}, cohomologous in bar: {bar_equal}"
                ),
                Entry::HopfBracket { f, g, is_cocycle, class_zero, zero } => format!(
                    "H(T_{},k): [u{f}, u{g}] cocycle {is_cocycle}, class zero {class_zero}, zero cochain {zero}",
                    self.p
                ),
                Entry::Dims { name, dims } => format!("{name}: {dims:?}"),
            };
            out.push_str(&line);
            out.push('\n');
        }
        if self.failures.is_empty() {
            out.push_str("all checks passed\n");
        } else {
            for f in &self.failures {
                out.push_str(&format!("failed: {f}\n"));
            }
        }
        out
    }
}

fn int_json(s: &str) -> Value {
    s.parse::<i64>().map(Value::from).unwrap_or_else(|_| Value::String(s.to_string()))
}

pub fn cyc_json(c: &Cyc) -> Value {
    Value::Array(
        c.to_pairs()
            .iter()
            .map(|(n, d)| Value::Array(vec![int_json(&n.to_string()), int_json(&d.to_string())]))
            .collect(),
    )
}

pub fn mono_label(alg: &Algebra, m: Mono) -> String {
    if alg.is_taft() {
        format!("x^{} g^{}", m.x, m.g)
    } else {
        format!("x^{}", m.x)
    }
}

fn elem_json(v: &AlgElem) -> Value {
    let alg = v.algebra();
    Value::Array(
        v.iter()
            .map(|(m, c)| json!({"mono": mono_label(alg, *m), "coeff": cyc_json(c)}))
            .collect(),
    )
}

fn class_json(c: &CohomClass) -> Value {
    json!({
        "degree": c.deg,
        "basis": c.labels,
        "coords": c.coords.iter().map(cyc_json).collect::<Vec<_>>(),
    })
}

fn entry_json(e: &Entry) -> Value {
    match e {
        Entry::Check { name, algebra, degree, pass } => json!({
            "kind": "check", "check": name, "algebra": algebra, "degree": degree, "pass": pass,
        }),
        Entry::Bracket { algebra, f, g, degree, value, class } => json!({
            "kind": "bracket", "algebra": algebra, "f": f, "g": g, "degree": degree,
            "value": elem_json(value), "class": class.to_string(), "class_coords": class_json(class),
        }),
        Entry::Compare { algebra, f, g, small, transported, bar_equal } => json!({
            "kind": "oracle", "algebra": algebra, "f": f, "g": g,
            "class": small.to_string(), "class_coords": class_json(small),
            "bar_class": transported.to_string(), "bar_class_coords": class_json(transported),
            "cohomologous_in_bar": bar_equal, "agree": *bar_equal && small == transported,
        }),
        Entry::HopfBracket { f, g, is_cocycle, class_zero, zero } => json!({
            "kind": "hopf_bracket", "f": format!("u{f}"), "g": format!("u{g}"),
            "is_cocycle": is_cocycle, "class": if *class_zero { "0" } else { "nonzero" },
            "zero_cochain": zero,
        }),
        Entry::Dims { name, dims } => json!({ "kind": "dims", "name": name, "dims": dims }),
    }
}
