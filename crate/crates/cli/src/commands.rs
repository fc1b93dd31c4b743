use std::fmt::Write as _;

use serde_json::{json, Value};

use blob_core::alcove::{
    degree_word, m_set, render_triangle, wall_word_of, AlcoveSystem, Side, WeightClass,
    WeightPosition,
};
use blob_core::repdims::{
    cell_dims_subalgebra, decomposition_matrix, verify_consistency, verify_recovery, DecompMatrix,
};
use blob_core::tableaux::{
    degree_g, degree_walk, residue_of_tableau, tableau_of, walk_of, Bitableau, OneLineBipartition,
    Walk,
};
use blob_core::{validate_params, BlobParams};

use crate::{AlgebraArgs, CliError, Format, Output, WeightArgs};

fn ok(text: String) -> Result<Output, CliError> {
    Ok(Output {
        text,
        success: true,
    })
}

fn unsupported(f: Format, cmd: &str) -> CliError {
    CliError::Invalid(format!("format {f:?} is not supported by `{cmd}`").to_lowercase())
}

fn to_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json value serializes");
    s.push('\n');
    s
}

fn validated(alg: &AlgebraArgs, n: i64) -> Result<BlobParams, CliError> {
    Ok(validate_params(alg.l, alg.m, n)?)
}

fn join(xs: &[i64]) -> String {
    xs.iter().map(i64::to_string).collect::<Vec<_>>().join(", ")
}

fn resolve_weight(w: &WeightArgs, p: &BlobParams) -> Result<i64, CliError> {
    let lambda = match (&w.lambda, &w.bipartition) {
        (Some(l), _) => *l,
        (None, Some(s)) => {
            let parts: Vec<&str> = s.split(',').map(str::trim).collect();
            let [a, b] = parts[..] else {
                return Err(CliError::Invalid(format!(
                    "bipartition {s:?} should look like a,b"
                )));
            };
            let a: usize = a.parse()?;
            let b: usize = b.parse()?;
            if a + b != p.n() {
                return Err(CliError::Invalid(format!(
                    "bipartition (({a}),({b})) has size {}, expected n = {}",
                    a + b,
                    p.n()
                )));
            }
            OneLineBipartition::new(a, b).weight()
        }
        (None, None) => {
            return Err(CliError::Invalid(
                "one of --lambda or --bipartition is required".into(),
            ))
        }
    };
    OneLineBipartition::from_weight(lambda, p.n())?;
    Ok(lambda)
}

pub fn params(alg: &AlgebraArgs, n: i64, f: Format) -> Result<Output, CliError> {
    let p = validated(alg, n)?;
    let sys = AlcoveSystem::new(&p);
    let walls = sys.walls_in(-(p.n() as i64), p.n() as i64);
    let (lo, hi) = sys.fundamental_walls();
    match f {
        Format::Pretty => {
            let mut s = format!("l = {}, m = {}, n = {}\n", p.l(), p.m(), p.n());
            writeln!(s, "k = {}", p.k()).unwrap();
            writeln!(s, "fundamental alcove: ({lo}, {hi})").unwrap();
            writeln!(s, "walls in [-{n}, {n}]: {}", join(&walls), n = p.n()).unwrap();
            ok(s)
        }
        Format::Json => ok(to_json(&json!({
            "l": p.l(), "m": p.m(), "n": p.n(), "k": p.k(),
            "fundamental_alcove": [lo, hi],
            "walls": walls,
        }))),
        _ => Err(unsupported(f, "params")),
    }
}

pub fn walk(
    input: &str,
    alg: &AlgebraArgs,
    as_weights: bool,
    f: Format,
) -> Result<Output, CliError> {
    let t: Bitableau = if as_weights {
        tableau_of(&input.parse::<Walk>()?)
    } else {
        input.parse()?
    };
    let p = validated(alg, t.len() as i64)?;
    let w = walk_of(&t);
    let residues = residue_of_tableau(&t, &p);
    let by_nodes = degree_g(&t, &p);
    let by_walk = degree_walk(&t, &p);
    let by_word = wall_word_of(&t, t.weight(), &p)
        .ok()
        .map(|word| (word.to_string(), degree_word(&word)));
    let sys = AlcoveSystem::new(&p);
    let fmt_set = |xs: &[usize]| {
        format!(
            "{{{}}}",
            xs.iter()
                .map(usize::to_string)
                .collect::<Vec<_>>()
                .join(", ")
        )
    };
    match f {
        Format::Ascii => ok(render_triangle(&sys, p.n(), Some(&w))),
        Format::Pretty => {
            let mut s = render_triangle(&sys, p.n(), Some(&w));
            writeln!(s).unwrap();
            writeln!(s, "tableau:  {t}").unwrap();
            writeln!(s, "shape:    {}", t.shape()).unwrap();
            writeln!(s, "weights:  {w}").unwrap();
            writeln!(s, "residues: {residues}").unwrap();
            writeln!(s, "A = {}", fmt_set(&by_walk.a_positions)).unwrap();
            writeln!(s, "R = {}", fmt_set(&by_walk.r_positions)).unwrap();
            writeln!(s, "degree (nodes): {by_nodes}").unwrap();
            writeln!(s, "degree (walk):  {}", by_walk.degree).unwrap();
            if let Some((word, d)) = &by_word {
                writeln!(s, "degree (wall word {word:?}): {d}").unwrap();
            }
            ok(s)
        }
        Format::Json => ok(to_json(&json!({
            "tableau": t.to_string(),
            "weights": w.weights(),
            "residues": residues.entries(),
            "a_positions": by_walk.a_positions,
            "r_positions": by_walk.r_positions,
            "degree": by_nodes,
            "degree_walk": by_walk.degree,
            "degree_word": by_word.map(|(_, d)| d),
        }))),
        Format::Csv => Err(unsupported(f, "walk")),
    }
}

fn describe(pos: &WeightPosition) -> String {
    let class = match pos.class {
        WeightClass::OnFundamentalWall => "on a fundamental wall",
        WeightClass::OnOuterWall => "on a wall",
        WeightClass::InFundamentalAlcove => "in the fundamental alcove",
        WeightClass::InOuterAlcove => "in an alcove",
    };
    match pos.side {
        Some(Side::Negative) => format!("{class}, negative side"),
        Some(Side::Positive) => format!("{class}, positive side"),
        None => class.to_string(),
    }
}

pub fn orbit(alg: &AlgebraArgs, n: i64, w: &WeightArgs, f: Format) -> Result<Output, CliError> {
    let p = validated(alg, n)?;
    let lambda = resolve_weight(w, &p)?;
    let sys = AlcoveSystem::new(&p);
    let pos = sys.classify(lambda);
    let orbit = sys.orbit(lambda, p.n());
    let index = m_set(lambda, &p)?;
    match f {
        Format::Pretty => {
            let mut s = format!(
                "lambda = {lambda} {}\n",
                OneLineBipartition::from_weight(lambda, p.n())?
            );
            writeln!(s, "class: {}", describe(&pos)).unwrap();
            writeln!(s, "kappa: {}", pos.kappa).unwrap();
            writeln!(s, "orbit: {}", join(&orbit)).unwrap();
            writeln!(s, "M_n(lambda): ({})", join(index.entries())).unwrap();
            ok(s)
        }
        Format::Json => ok(to_json(&json!({
            "lambda": lambda,
            "class": format!("{:?}", pos.class),
            "side": pos.side.map(|s| format!("{s:?}")),
            "kappa": pos.kappa,
            "orbit": orbit,
            "m_set": index.entries(),
        }))),
        _ => Err(unsupported(f, "orbit")),
    }
}

pub fn dims(alg: &AlgebraArgs, n: i64, w: &WeightArgs, f: Format) -> Result<Output, CliError> {
    let p = validated(alg, n)?;
    let lambda = resolve_weight(w, &p)?;
    let dims = cell_dims_subalgebra(lambda, &p);
    let rows = dims
        .index
        .entries()
        .iter()
        .zip(dims.cell.iter().zip(&dims.simple))
        .enumerate();
    match f {
        Format::Pretty => {
            let mut s = format!("lambda = {lambda}, kappa = {}\n", dims.index.kappa());
            writeln!(s, "{:>3}  {:>6}  {:<20}  simple", "k", "mu", "cell").unwrap();
            for (k, (mu, (cell, simple))) in rows {
                writeln!(
                    s,
                    "{:>3}  {:>6}  {:<20}  {}",
                    k + 1,
                    mu,
                    cell.to_string(),
                    simple
                )
                .unwrap();
            }
            ok(s)
        }
        Format::Csv => {
            let mut s = String::from("k,mu,cell,simple\n");
            for (k, (mu, (cell, simple))) in rows {
                writeln!(s, "{},{mu},{cell},{simple}", k + 1).unwrap();
            }
            ok(s)
        }
        Format::Json => {
            let entries: Vec<Value> = rows
                .map(|(k, (mu, (cell, simple)))| json!({"k": k + 1, "mu": mu, "cell": cell, "simple": simple}))
                .collect();
            ok(to_json(
                &json!({"lambda": lambda, "kappa": dims.index.kappa(), "entries": entries}),
            ))
        }
        Format::Ascii => Err(unsupported(f, "dims")),
    }
}

fn ascii_grid(matrix: &DecompMatrix) -> String {
    let cells: Vec<Vec<String>> = matrix
        .weights
        .iter()
        .map(|&mu| {
            matrix
                .weights
                .iter()
                .map(|&lambda| {
                    let e = matrix.entry(mu, lambda);
                    if e.is_zero() {
                        ".".to_string()
                    } else {
                        e.to_string()
                    }
                })
                .collect()
        })
        .collect();
    let width = cells
        .iter()
        .flatten()
        .map(String::len)
        .chain(matrix.weights.iter().map(|w| w.to_string().len()))
        .max()
        .unwrap_or(1);
    let mut s = format!("{:>width$} |", "");
    for w in &matrix.weights {
        write!(s, " {w:>width$}").unwrap();
    }
    s.push('\n');
    s.push_str(&"-".repeat(width + 2 + (width + 1) * matrix.weights.len()));
    s.push('\n');
    for (mu, row) in matrix.weights.iter().zip(cells) {
        write!(s, "{mu:>width$} |").unwrap();
        for c in row {
            write!(s, " {c:>width$}").unwrap();
        }
        s.push('\n');
    }
    s
}

pub fn decomp(alg: &AlgebraArgs, n: i64, f: Format) -> Result<Output, CliError> {
    let p = validated(alg, n)?;
    let matrix = decomposition_matrix(&p);
    match f {
        Format::Json => {
            let mut s = matrix.to_json();
            s.push('\n');
            ok(s)
        }
        Format::Csv => ok(matrix.to_csv()),
        Format::Ascii => ok(ascii_grid(&matrix)),
        Format::Pretty => {
            let mut s = format!("l = {}, m = {}, n = {}\n", p.l(), p.m(), p.n());
            for col in &matrix.columns {
                let entries: Vec<String> = col
                    .entries
                    .iter()
                    .map(|e| format!("{}: {}", e.mu, e.poly))
                    .collect();
                writeln!(
                    s,
                    "lambda = {} (kappa {}): {}",
                    col.lambda,
                    col.kappa,
                    entries.join(", ")
                )
                .unwrap();
            }
            ok(s)
        }
    }
}

pub fn verify(alg: &AlgebraArgs, max_n: i64, f: Format) -> Result<Output, CliError> {
    validated(alg, max_n)?;
    let mut text = String::new();
    let mut reports = Vec::new();
    let mut success = true;
    for n in 1..=max_n {
        let p = validated(alg, n)?;
        let mut report = verify_consistency(&p);
        report.push(verify_recovery(&p));
        success &= report.all_passed();
        if f == Format::Pretty {
            let warnings = report
                .checks
                .iter()
                .filter(|c| c.warning_only && !c.passed)
                .count();
            let status = match (report.all_passed(), warnings) {
                (false, _) => "FAIL".to_string(),
                (true, 0) => "ok".to_string(),
                (true, w) => format!("ok ({w} warnings)"),
            };
            writeln!(text, "n = {n}: {status}").unwrap();
            if status != "ok" {
                text.push_str(&report.render());
            }
        }
        reports.push(report);
    }
    match f {
        Format::Pretty => {
            text.push_str(if success {
                "all checks passed\n"
            } else {
                "verification failed\n"
            });
            Ok(Output { text, success })
        }
        Format::Json => Ok(Output {
            text: to_json(&json!({"passed": success, "reports": reports})),
            success,
        }),
        _ => Err(unsupported(f, "verify")),
    }
}
