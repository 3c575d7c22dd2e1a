use serde_json::json;
use vndim_core::fuchsian::{covolume_real, formal_dimension_real, h2_heuristic, vn_dimension_real};
use vndim_core::oracles::{run_verification, EnumerationBudget, VerifyConfig};
use vndim_core::padic::{
    covolume_padic, dimension_spectrum, formal_dimension_padic, inducing_datum, vn_dimension_padic, SpectrumFamily,
};
use vndim_core::{ExactScalar, LatticeSpec, PadicField, Rational, RealWeight, RepLabel, Result};

use crate::args::{PadicArgs, RealArgs, SpectrumArgs, TableArgs, VerifyArgs};
use crate::output::{aligned, Kind, OutputRecord, Report};

const BUDGET_VAR: &str = "VNDIM_BUDGET";

fn exact(r: &Rational) -> ExactScalar {
    ExactScalar::rational(r.clone())
}

pub fn real(args: &RealArgs) -> Result<Report> {
    let weight = RealWeight::new(args.k)?;
    let h2_trivial = if args.h2_auto {
        h2_heuristic(&args.sig)
    } else {
        args.h2_trivial
    };
    let covolume = covolume_real(&args.sig)?;
    let formal_dim = formal_dimension_real(weight);
    let value = exact(&vn_dimension_real(&args.sig, weight, h2_trivial)?);
    Ok(Report {
        record: OutputRecord {
            kind: Kind::Value,
            payload: json!({
                "signature": args.sig.to_string(),
                "k": weight.get(),
                "h2_trivial": h2_trivial,
                "covolume": covolume,
                "formal_dimension": formal_dim,
                "vn_dimension": value,
            }),
            provenance: vec![
                "gauss-bonnet-covolume",
                "holomorphic-discrete-series-formal-dimension",
                "covolume-times-formal-dimension",
            ],
        },
        text: value.to_string(),
        header: vec!["signature", "k", "covolume", "formal_dimension", "vn_dimension"],
        rows: vec![vec![
            args.sig.to_string(),
            weight.to_string(),
            covolume.to_string(),
            formal_dim.to_string(),
            value.to_string(),
        ]],
    })
}

pub fn padic(args: &PadicArgs) -> Result<Report> {
    let field = args.q;
    let lattice = match (args.rank, args.vertices) {
        (Some(n), _) => LatticeSpec::Rank(n),
        (None, Some(c)) => LatticeSpec::VertexCount(c),
        (None, None) => unreachable!("clap requires one of --rank and --vertices"),
    };
    let n = lattice.rank(&field)?;
    let covolume = exact(&covolume_padic(n)?);
    let formal_dim = exact(&formal_dimension_padic(&field, args.rep)?);
    let value = exact(&vn_dimension_padic(&field, lattice, args.rep)?);
    let mut provenance = Vec::new();
    if args.vertices.is_some() {
        provenance.push("ihara-rank");
    }
    provenance.push("free-lattice-covolume");
    provenance.push(match args.rep {
        RepLabel::Steinberg => "steinberg-formal-dimension",
        _ => "compact-induction-formal-dimension",
    });
    provenance.push("covolume-times-formal-dimension");
    Ok(Report {
        record: OutputRecord {
            kind: Kind::Value,
            payload: json!({
                "q": field.q(),
                "rank": n,
                "label": args.rep.to_string(),
                "covolume": covolume,
                "formal_dimension": formal_dim,
                "vn_dimension": value,
            }),
            provenance,
        },
        text: value.to_string(),
        header: vec!["q", "rank", "label", "covolume", "formal_dimension", "vn_dimension"],
        rows: vec![vec![
            field.q().to_string(),
            n.to_string(),
            args.rep.to_string(),
            covolume.to_string(),
            formal_dim.to_string(),
            value.to_string(),
        ]],
    })
}

struct TableRow {
    label: RepLabel,
    order: &'static str,
    extension: &'static str,
    level: String,
    parity: &'static str,
    dim_lambda: Option<ExactScalar>,
    vol: Option<ExactScalar>,
    formal_dim: ExactScalar,
}

fn table_row(field: &PadicField, label: RepLabel) -> Result<TableRow> {
    if label == RepLabel::Steinberg {
        return Ok(TableRow {
            label,
            order: "-",
            extension: "-",
            level: "-".into(),
            parity: "-",
            dim_lambda: None,
            vol: None,
            formal_dim: exact(&formal_dimension_padic(field, label)?),
        });
    }
    let datum = inducing_datum(field, label)?;
    let (order, extension, level, parity) = match label {
        RepLabel::UnramifiedSupercuspidal { level } => (
            "M",
            "unramified",
            level.to_string(),
            if level % 2 == 0 { "even" } else { "odd" },
        ),
        RepLabel::RamifiedSupercuspidal { level } => ("J", "ramified", level.to_string(), "odd"),
        _ => ("M", "-", "0".to_string(), "-"),
    };
    Ok(TableRow {
        label,
        order,
        extension,
        level,
        parity,
        dim_lambda: Some(ExactScalar::integer(datum.dim_lambda)),
        vol: Some(exact(&datum.vol_j_mod_z)),
        formal_dim: exact(&datum.formal_dim),
    })
}

pub fn table(args: &TableArgs) -> Result<Report> {
    let field = args.q;
    let mut labels = vec![RepLabel::Steinberg, RepLabel::DepthZeroSupercuspidal];
    for i in 1..=args.max_i {
        labels.push(RepLabel::UnramifiedSupercuspidal { level: 2 * i });
        labels.push(RepLabel::UnramifiedSupercuspidal { level: 2 * i - 1 });
        labels.push(RepLabel::RamifiedSupercuspidal { level: 2 * i - 1 });
    }
    let rows = labels
        .into_iter()
        .map(|label| table_row(&field, label))
        .collect::<Result<Vec<_>>>()?;

    let dash = |v: &Option<ExactScalar>| v.as_ref().map_or("-".to_string(), ExactScalar::to_string);
    let header = vec!["label", "U", "E/F", "n", "parity", "dim_lambda", "vol_J_mod_Z", "d_pi"];
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            vec![
                r.label.to_string(),
                r.order.to_string(),
                r.extension.to_string(),
                r.level.clone(),
                r.parity.to_string(),
                dash(&r.dim_lambda),
                dash(&r.vol),
                r.formal_dim.to_string(),
            ]
        })
        .collect();
    let json_rows: Vec<_> = rows
        .iter()
        .map(|r| {
            json!({
                "label": r.label.to_string(),
                "U": r.order,
                "E/F": r.extension,
                "n": r.level,
                "parity": r.parity,
                "dim_lambda": r.dim_lambda,
                "vol_J_mod_Z": r.vol,
                "d_pi": r.formal_dim,
            })
        })
        .collect();
    Ok(Report {
        record: OutputRecord {
            kind: Kind::Table,
            payload: json!({ "q": field.q(), "vol_K_mod_Z": exact(&Rational::new((field.q() - 1).into(), 2.into())), "rows": json_rows }),
            provenance: vec![
                "index-chain",
                "compact-induction-formal-dimension",
                "steinberg-formal-dimension",
            ],
        },
        text: format!("q = {}, vol(Z.K/Z) = (q-1)/2\n{}", field.q(), aligned(&header, &cells)),
        header,
        rows: cells,
    })
}

pub fn spectrum(args: &SpectrumArgs) -> Result<Report> {
    let field = args.q;
    let entries = dimension_spectrum(&field, args.rank, args.max_k)?;
    let family = |f: SpectrumFamily| match f {
        SpectrumFamily::Steinberg => ("steinberg", "-".to_string()),
        SpectrumFamily::Unramified { k } => ("unramified", k.to_string()),
        SpectrumFamily::Ramified { k } => ("ramified", k.to_string()),
    };
    let header = vec!["value", "family", "k", "label"];
    let rows: Vec<Vec<String>> = entries
        .iter()
        .map(|e| {
            let (name, k) = family(e.family);
            vec![e.value.to_string(), name.to_string(), k, e.label.to_string()]
        })
        .collect();
    let json_entries: Vec<_> = entries
        .iter()
        .map(|e| {
            let (name, _) = family(e.family);
            let k = match e.family {
                SpectrumFamily::Steinberg => None,
                SpectrumFamily::Unramified { k } | SpectrumFamily::Ramified { k } => Some(k),
            };
            json!({
                "value": ExactScalar::integer(e.value.clone()),
                "family": name,
                "k": k,
                "label": e.label.to_string(),
            })
        })
        .collect();
    Ok(Report {
        record: OutputRecord {
            kind: Kind::Spectrum,
            payload: json!({ "q": field.q(), "rank": args.rank, "max_k": args.max_k, "entries": json_entries }),
            provenance: vec![
                "free-lattice-covolume",
                "steinberg-formal-dimension",
                "compact-induction-formal-dimension",
            ],
        },
        text: aligned(&header, &rows),
        header,
        rows,
    })
}

pub fn budget_from_env() -> std::result::Result<EnumerationBudget, String> {
    match std::env::var(BUDGET_VAR) {
        Ok(raw) => raw
            .trim()
            .parse::<u64>()
            .map(EnumerationBudget)
            .map_err(|_| format!("{BUDGET_VAR} must be a nonnegative integer, got {raw:?}")),
        Err(_) => Ok(EnumerationBudget::DEFAULT),
    }
}

pub fn verify(args: &VerifyArgs, budget: EnumerationBudget) -> Result<Report> {
    let config = VerifyConfig {
        p: args.p,
        max_i: args.max_i,
        trials: args.trials,
        seed: args.seed,
        budget,
        perturb: args.perturb.clone(),
    };
    let report = run_verification(&config)?;
    let passed = report.checks.iter().filter(|c| c.pass).count();
    let mut text = String::new();
    for c in &report.checks {
        let status = if c.pass { "PASS" } else { "FAIL" };
        text.push_str(&format!(
            "{status}  {}  expected={} actual={}\n",
            c.name, c.expected, c.actual
        ));
    }
    text.push_str(&format!("{passed}/{} checks passed\n", report.checks.len()));
    let rows = report
        .checks
        .iter()
        .map(|c| vec![c.name.clone(), c.expected.clone(), c.actual.clone(), c.pass.to_string()])
        .collect();
    Ok(Report {
        record: OutputRecord {
            kind: Kind::Verification,
            payload: json!({
                "p": args.p,
                "max_i": args.max_i,
                "trials": args.trials,
                "seed": args.seed,
                "budget": budget.0,
                "all_passed": report.all_passed(),
                "checks": report.checks,
            }),
            provenance: vec![
                "index-chain",
                "ihara-rank",
                "steinberg-formal-dimension",
                "cms-crosscheck",
            ],
        },
        text,
        header: vec!["name", "expected", "actual", "pass"],
        rows,
    })
}
