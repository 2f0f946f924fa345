//! One function per subcommand. Each returns the text and JSON forms of the
//! same report.

use deristab_core::automorphism::{is_inverse_pair, jacobian_det, PolyMap};
use deristab_core::corpus::CORPUS;
use deristab_core::derivation::{recognize_pairwise, Derivation};
use deristab_core::isotropy::{self, classify_shift, commutation_defect, decompose_triangular, IsotropyElementB};
use deristab_core::poly::{parse, parse_named, MultiPoly, Rat};
use deristab_core::simplicity::{
    bounded_isotropy_enumeration_with_cap, necessary_condition_witness, pairwise_witness, plane_witness,
    shamsuddin_simple_n2, EnumerationLimits, NonSimplicityWitness, ShamsuddinDecision,
};
use serde_json::{json, Value};

use crate::DerivationArgs;

pub struct Report {
    pub text: String,
    pub json: Value,
}

type CmdResult = Result<Report, String>;

const MAX_ENUM_VAR: &str = "DERISTAB_MAX_ENUM";

fn split(list: &str) -> Vec<&str> {
    list.split(',').map(str::trim).collect()
}

fn parse_list(list: &str, n: usize, what: &str) -> Result<Vec<MultiPoly>, String> {
    split(list)
        .into_iter()
        .enumerate()
        .map(|(i, s)| parse(s, n).map_err(|e| format!("{what} component {}: {e}", i + 1)))
        .collect()
}

fn parse_rat(text: &str, what: &str) -> Result<Rat, String> {
    text.trim()
        .parse::<Rat>()
        .map_err(|_| format!("{what}: expected a rational such as 3 or -1/2, got {text:?}"))
}

fn derivation(args: &DerivationArgs) -> Result<Derivation, String> {
    let count = split(&args.derivation).len();
    let n = args.n.unwrap_or(count);
    if count != n {
        return Err(format!("-D has {count} coefficients but -n is {n}"));
    }
    Derivation::new(parse_list(&args.derivation, n, "-D")?).map_err(|e| e.to_string())
}

fn map(text: &str, n: usize) -> Result<PolyMap, String> {
    let comps = parse_list(text, n, "-f")?;
    if comps.len() != n {
        return Err(format!("-f has {} components but D has {n}", comps.len()));
    }
    PolyMap::new(comps).map_err(|e| e.to_string())
}

fn tuple(c: &[Rat]) -> String {
    let parts: Vec<String> = c.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(","))
}

fn strings(polys: &[MultiPoly]) -> Vec<String> {
    polys.iter().map(ToString::to_string).collect()
}

pub fn commutes(args: &DerivationArgs, f: &str) -> CmdResult {
    let d = derivation(args)?;
    let f = map(f, d.n())?;
    match commutation_defect(&f, &d).map_err(|e| e.to_string())? {
        None => Ok(Report {
            text: "true".into(),
            json: json!({"command": "commutes", "commutes": true}),
        }),
        Some(defect) => {
            let j = defect.component + 1;
            Ok(Report {
                text: format!(
                    "false\ncomponent {j}: D(f{j}) = {} but p{j}(f) = {}",
                    defect.lhs, defect.rhs
                ),
                json: json!({
                    "command": "commutes",
                    "commutes": false,
                    "failure": {
                        "component": j,
                        "lhs": defect.lhs.to_string(),
                        "rhs": defect.rhs.to_string(),
                    },
                }),
            })
        }
    }
}

pub fn invariant_translations(args: &DerivationArgs) -> CmdResult {
    let d = derivation(args)?;
    let basis = isotropy::invariant_translations(&d);
    let rows: Vec<String> = basis.iter().map(|c| tuple(c)).collect();
    let json_rows: Vec<Vec<String>> = basis
        .iter()
        .map(|c| c.iter().map(ToString::to_string).collect())
        .collect();
    Ok(Report {
        text: format!("[{}]", rows.join(", ")),
        json: json!({"command": "invariant-translations", "basis": json_rows}),
    })
}

fn witness_report(w: &NonSimplicityWitness) -> Report {
    Report {
        text: w.to_string(),
        json: json!({
            "command": "witness",
            "result": "witness",
            "rationale": w.rationale().as_str(),
            "generators": strings(w.generators()),
            "cofactor": w.cofactor().to_string(),
            "stable": w.is_stable(),
        }),
    }
}

/// Tries the necessary conditions first, then an invariant translation
/// (given or computed) through the pairwise or plane construction.
pub fn witness(args: &DerivationArgs, translation: Option<&str>) -> CmdResult {
    let d = derivation(args)?;
    if let Some(w) = necessary_condition_witness(&d).map_err(|e| e.to_string())? {
        return Ok(witness_report(&w));
    }
    let c = match translation {
        Some(text) => Some(
            split(text)
                .into_iter()
                .map(|s| parse_rat(s, "-c"))
                .collect::<Result<Vec<_>, _>>()?,
        ),
        None => isotropy::invariant_translations(&d).into_iter().next(),
    };
    if let Some(c) = c {
        let w = if let Some(form) = recognize_pairwise(&d) {
            pairwise_witness(&form, &c).map_err(|e| e.to_string())?
        } else if d.n() == 2 {
            Some(plane_witness(&d, &c).map_err(|e| e.to_string())?)
        } else {
            None
        };
        if let Some(w) = w {
            return Ok(witness_report(&w));
        }
    }
    Ok(Report {
        text: "inconclusive".into(),
        json: json!({"command": "witness", "result": "inconclusive"}),
    })
}

pub fn classify(args: &DerivationArgs, f: &str) -> CmdResult {
    let d = derivation(args)?;
    let f = map(f, d.n())?;
    let class = classify_shift(&f, &d).map_err(|e| e.to_string())?;
    Ok(Report {
        text: class.to_string(),
        json: json!({"command": "classify", "class": class.as_str()}),
    })
}

pub fn shamsuddin(a: &str, b: &str) -> CmdResult {
    let a = parse(a, 1).map_err(|e| format!("-a: {e}"))?;
    let b = parse(b, 1).map_err(|e| format!("-b: {e}"))?;
    let decision = shamsuddin_simple_n2(&a, &b).map_err(|e| e.to_string())?;
    let json = match &decision {
        ShamsuddinDecision::Simple => json!({"command": "shamsuddin", "decision": "simple"}),
        ShamsuddinDecision::NotSimple { y } => {
            json!({"command": "shamsuddin", "decision": "not-simple", "y": y.to_string()})
        }
    };
    Ok(Report {
        text: decision.to_string(),
        json,
    })
}

fn element_report(e: &IsotropyElementB, command: &str) -> Result<Report, String> {
    let f = e.to_map();
    let inv = e.inverse_map();
    let commutes = isotropy::commutes(&f, &e.derivation()).map_err(|e| e.to_string())?;
    let inverse_ok = is_inverse_pair(&f, &inv).map_err(|e| e.to_string())?;
    let jac = jacobian_det(&f);
    let text = format!(
        "map: {f}\np: {}\nctilde: {}\ncbar: {}\ninverse: {inv}\njacobian: {jac}\ncommutes: {commutes}\ninverse verified: {inverse_ok}",
        e.p_display(),
        e.c_tilde,
        e.c_bar
    );
    Ok(Report {
        text,
        json: json!({
            "command": command,
            "result": "element",
            "map": f.to_strings(),
            "p": e.p_display(),
            "ctilde": e.c_tilde.to_string(),
            "cbar": e.c_bar.to_string(),
            "inverse": inv.to_strings(),
            "jacobian": jac.to_string(),
            "commutes": commutes,
            "inverse_verified": inverse_ok,
        }),
    })
}

pub fn isotropy_build(b: &str, p: &str, ctilde: &str, cbar: &str) -> CmdResult {
    let b = parse(b, 1).map_err(|e| format!("-b: {e}"))?;
    let p = parse_named(p, 'w').map_err(|e| format!("-p: {e}"))?;
    let e = IsotropyElementB::new(b, p, parse_rat(ctilde, "--ctilde")?, parse_rat(cbar, "--cbar")?)
        .map_err(|e| e.to_string())?;
    element_report(&e, "isotropy-b")
}

pub fn isotropy_decompose(b: &str, f: &str) -> CmdResult {
    let b = parse(b, 1).map_err(|e| format!("-b: {e}"))?;
    let f = map(f, 2)?;
    match decompose_triangular(&f, &b).map_err(|e| e.to_string())? {
        Some(e) => element_report(&e, "isotropy-b"),
        None => Ok(Report {
            text: "not an isotropy element".into(),
            json: json!({"command": "isotropy-b", "result": "not-an-element"}),
        }),
    }
}

fn limits() -> Result<EnumerationLimits, String> {
    let mut limits = EnumerationLimits::default();
    if let Ok(v) = std::env::var(MAX_ENUM_VAR) {
        limits.max_candidates_per_component = v
            .trim()
            .parse()
            .map_err(|_| format!("{MAX_ENUM_VAR} must be a positive integer, got {v:?}"))?;
    }
    Ok(limits)
}

pub fn enumerate(args: &DerivationArgs, deg: u32, coeff: i64) -> CmdResult {
    let d = derivation(args)?;
    let maps = bounded_isotropy_enumeration_with_cap(&d, deg, coeff, limits()?).map_err(|e| e.to_string())?;
    let shown: Vec<String> = maps
        .iter()
        .map(|f| {
            if f.is_identity() {
                "identity".to_string()
            } else {
                f.to_string()
            }
        })
        .collect();
    let json_maps: Vec<Vec<String>> = maps.iter().map(PolyMap::to_strings).collect();
    Ok(Report {
        text: format!("[{}]", shown.join(", ")),
        json: json!({"command": "enumerate", "count": maps.len(), "maps": json_maps}),
    })
}

pub fn corpus() -> Report {
    let mut lines = Vec::new();
    let mut entries = Vec::new();
    for e in CORPUS {
        let d = e.derivation();
        lines.push(match e.translation() {
            Some(c) => format!("{}: {d} c = {}", e.name, tuple(&c)),
            None => format!("{}: {d}", e.name),
        });
        entries.push(json!({
            "name": e.name,
            "derivation": d.to_strings(),
            "translation": e.translation().map(|c| c.iter().map(ToString::to_string).collect::<Vec<_>>()),
        }));
    }
    Report {
        text: lines.join("\n"),
        json: json!({"command": "corpus", "entries": entries}),
    }
}
