use std::fmt::Write as _;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use num_bigint::BigInt;
use serde_json::{json, Number, Value};
use thiserror::Error;
use vposet::enumeration::{self, AsymptoticError, MAX_CENSUS};
use vposet::poset::{self, Certificate, ForbiddenPattern, PosetError, PosetPolyError};
use vposet::tree::{self, TreeParseError};
use vposet::{BivariatePoly, BoundExceeded, Evaluations, Poset, RootedTree, ORACLE_BOUND};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("invalid tree: {0}")]
    Tree(#[from] TreeParseError),
    #[error("invalid poset: {0}")]
    Poset(#[from] PosetError),
    #[error("not a V-poset: contains {0}")]
    NotVPoset(ForbiddenPattern),
    #[error(transparent)]
    Bound(#[from] BoundExceeded),
    #[error(transparent)]
    Asymptotic(#[from] AsymptoticError),
    #[error("direct count disagrees with the polynomial at {point}: {poly} vs {direct}")]
    Mismatch {
        point: &'static str,
        poly: String,
        direct: String,
    },
}

impl CliError {
    pub fn status(&self) -> u8 {
        match self {
            CliError::NotVPoset(_) => 1,
            CliError::Io { .. }
            | CliError::Tree(_)
            | CliError::Poset(_)
            | CliError::Asymptotic(_) => 2,
            CliError::Bound(_) => 3,
            CliError::Mismatch { .. } => 4,
        }
    }
}

impl From<PosetPolyError> for CliError {
    fn from(e: PosetPolyError) -> Self {
        match e {
            PosetPolyError::NotVPoset(w) => CliError::NotVPoset(w),
            PosetPolyError::Bound(b) => CliError::Bound(b),
        }
    }
}

/// Text for standard output and the exit status.
pub struct Outcome {
    pub stdout: String,
    pub status: u8,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self { stdout, status: 0 }
    }
}

fn read_input(path: &Path) -> Result<String, CliError> {
    let io = |source| CliError::Io {
        path: path.to_path_buf(),
        source,
    };
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(io)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(io)
    }
}

fn big(n: &BigInt) -> Value {
    Value::Number(Number::from_str(&n.to_string()).expect("integers are valid JSON numbers"))
}

fn poly_json(p: &BivariatePoly) -> Value {
    let terms: Vec<Value> = p
        .to_triples()
        .iter()
        .map(|(c, i, j)| json!({ "coeff": big(c), "x": i, "y": j }))
        .collect();
    json!({ "text": p.to_string(), "terms": terms })
}

fn render_poly(
    input: Value,
    method: &str,
    p: &BivariatePoly,
    point: Option<(BigInt, BigInt)>,
    as_json: bool,
) -> String {
    let value = point.as_ref().map(|(x, y)| (x, y, p.eval(x, y)));
    if as_json {
        let mut doc = json!({ "input": input, "method": method, "poly": poly_json(p) });
        if let Some((x, y, v)) = &value {
            doc["eval"] = json!({ "x": big(x), "y": big(y), "value": big(v) });
        }
        format!("{doc}\n")
    } else {
        let mut out = format!("{p}\n");
        if let Some((x, y, v)) = value {
            writeln!(out, "P({x},{y}) = {v}").unwrap();
        }
        out
    }
}

pub fn tree_poly(
    path: &Path,
    dc: bool,
    point: Option<(BigInt, BigInt)>,
    as_json: bool,
) -> Result<Outcome, CliError> {
    let t: RootedTree = read_input(path)?.parse()?;
    let (p, method) = if dc {
        (tree::poly_by_deletion_contraction(&t), "deletion-contraction")
    } else {
        (t.poly(), "recursion")
    };
    Ok(Outcome::ok(render_poly(
        json!(t.to_string()),
        method,
        &p,
        point,
        as_json,
    )))
}

pub fn poset_poly(
    path: &Path,
    expansion: bool,
    point: Option<(BigInt, BigInt)>,
    as_json: bool,
) -> Result<Outcome, CliError> {
    let p: Poset = read_input(path)?.parse()?;
    let (poly, method) = if expansion {
        (poset::antichain_expansion(&p)?, "antichain-expansion")
    } else {
        (poset::poset_poly(&p)?, "recursion")
    };
    Ok(Outcome::ok(render_poly(
        json!(p.len()),
        method,
        &poly,
        point,
        as_json,
    )))
}

pub fn check(path: &Path) -> Result<Outcome, CliError> {
    let p: Poset = read_input(path)?.parse()?;
    let cert = poset::is_v_poset(&p);
    let status = match cert {
        Certificate::VPoset(_) => 0,
        Certificate::Forbidden(_) => 1,
    };
    Ok(Outcome {
        stdout: format!("{cert}\n"),
        status,
    })
}

const MEANINGS: [(&str, &str); 6] = [
    ("maximal antichains", "maximal antichains"),
    ("x^leaves", "x^basic elements"),
    ("maximal antichains without leaves", "maximal antichains without basic elements"),
    ("antichains, empty included", "antichains, empty included"),
    ("cutsets", "cutsets"),
    ("all subsets", "all subsets"),
];

fn table(
    header: String,
    from_poly: &Evaluations,
    direct: Option<&Evaluations>,
    is_tree: bool,
) -> Result<String, CliError> {
    let mut out = header;
    out.push_str("point\tpolynomial\tdirect\tmeaning\n");
    let direct_rows = direct.map(Evaluations::rows);
    for (k, (point, value)) in from_poly.rows().into_iter().enumerate() {
        let direct_value = match &direct_rows {
            Some(rows) => {
                let d = rows[k].1.clone();
                if d != value {
                    return Err(CliError::Mismatch {
                        point,
                        poly: value,
                        direct: d,
                    });
                }
                d
            }
            None => "-".to_string(),
        };
        let meaning = if is_tree { MEANINGS[k].0 } else { MEANINGS[k].1 };
        writeln!(out, "{point}\t{value}\t{direct_value}\t{meaning}").unwrap();
    }
    Ok(out)
}

/// Evaluations of the polynomial next to direct counts; direct counts are
/// skipped for inputs beyond the exhaustive-search bound.
pub fn counts(path: &Path) -> Result<Outcome, CliError> {
    let text = read_input(path)?;
    if text.trim_start().starts_with('(') {
        let t: RootedTree = text.parse()?;
        let from_poly = Evaluations::of_poly(&t.poly());
        let direct = (t.size() <= ORACLE_BOUND)
            .then(|| Evaluations::tree_oracle(&t))
            .transpose()?;
        let header = format!("# rooted tree, {} vertices\n", t.size());
        Ok(Outcome::ok(table(header, &from_poly, direct.as_ref(), true)?))
    } else {
        let p: Poset = text.parse()?;
        let from_poly = Evaluations::of_poly(&poset::poset_poly(&p)?);
        let direct = (p.len() <= ORACLE_BOUND)
            .then(|| poset::evaluations(&p))
            .transpose()?;
        let header = format!("# V-poset, {} elements\n", p.len());
        Ok(Outcome::ok(table(header, &from_poly, direct.as_ref(), false)?))
    }
}

/// TSV of `n`, `v_n` from the series, and the constructive count for
/// `n <= 8` (`-` beyond).
pub fn census(max: usize) -> Result<Outcome, CliError> {
    let v = enumeration::v_series(max).expect("the recurrence is integral");
    let built = enumeration::census_counts(max.min(MAX_CENSUS))?;
    let mut out = String::from("# n\tv_n\tcensus\n");
    for n in 1..=max {
        let c = built
            .get(n - 1)
            .map_or_else(|| "-".to_string(), |c| c.to_string());
        writeln!(out, "{n}\t{}\t{c}", v.coeff(n)).unwrap();
    }
    Ok(Outcome::ok(out))
}

pub fn asymptotics(order: usize) -> Result<Outcome, CliError> {
    let a = enumeration::asymptotic_constant(order)?;
    let doc = json!({
        "rho": a.rho,
        "rhoInv": a.rho_inv,
        "constant": a.constant,
        "truncationOrder": a.truncation_order,
    });
    Ok(Outcome::ok(format!("{doc}\n")))
}

fn write_classes(out: &mut String, title: &str, classes: &[tree::CollisionClass]) {
    writeln!(out, "{title}: {} classes", classes.len()).unwrap();
    for c in classes {
        let trees: Vec<String> = c.trees.iter().map(ToString::to_string).collect();
        writeln!(out, "  {}\t{}", c.poly, trees.join(" ")).unwrap();
    }
}

pub fn collide(max: usize) -> Result<Outcome, CliError> {
    let report = tree::collision_search(max)?;
    let mut out = format!(
        "trees examined: {} (1 to {} vertices)\n",
        report.trees_examined, report.max_size
    );
    write_classes(&mut out, "P(x,y)", &report.full);
    write_classes(&mut out, "P(x,1)", &report.at_y_one);
    write_classes(&mut out, "P(1,y)", &report.at_x_one);
    Ok(Outcome::ok(out))
}
