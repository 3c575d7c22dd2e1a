//! Acceptance gate. Runs every criterion and prints one PASS/FAIL line each.
//!
//!     cargo test -p vndim-cli --test acceptance

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use vndim_core::exact::parse_rational;
use vndim_core::fuchsian::{covolume_real, formal_dimension_real, vn_dimension_real};
use vndim_core::oracles::{
    quadratic_unit_filtration, random_regular_rank_check, residue_group_orders, steinberg_series_sum,
    EnumerationBudget, FiltrationCounts,
};
use vndim_core::padic::{
    cms_crosscheck, dimension_spectrum, index_chain, inducing_datum, inducing_datum_with, steinberg_intermediate,
    vn_dimension_padic, vn_dimension_padic_with, HaarNormalization, LatticeSpec,
};
use vndim_core::{FuchsianSignature, PadicField, Rational, RealWeight, RepLabel};

type Check = std::result::Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn r(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

fn pow(q: u64, e: i64) -> Rational {
    let base = Rational::from_integer(BigInt::from(q));
    if e >= 0 {
        Rational::from_integer(base.to_integer().pow(e as u32))
    } else {
        Rational::from_integer(base.to_integer().pow((-e) as u32)).recip()
    }
}

fn field(q: u64) -> PadicField {
    PadicField::new(q).unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn vndim(args: &[&str]) -> std::result::Result<(String, Duration), String> {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_vndim"))
        .args(args)
        .env_remove("VNDIM_BUDGET")
        .output()
        .map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    if !out.status.success() {
        return Err(format!("vndim {} exited {:?}", args.join(" "), out.status.code()));
    }
    Ok((String::from_utf8_lossy(&out.stdout).into_owned(), elapsed))
}

fn golden_table() -> Check {
    let mut rows = 0;
    let mut slowest = Duration::ZERO;
    for q in [3u64, 5, 7] {
        let qs = q.to_string();
        let (csv, elapsed) = vndim(&["table", "--q", &qs, "--max-i", "3", "--format", "csv"])?;
        slowest = slowest.max(elapsed);
        ensure(elapsed < Duration::from_secs(1), || {
            format!("table --q {q} took {elapsed:?}")
        })?;
        let mut reader = csv::Reader::from_reader(csv.as_bytes());
        for record in reader.records() {
            let record = record.map_err(|e| e.to_string())?;
            let label: RepLabel = record[0].parse().map_err(|e| format!("{e}"))?;
            let (vol, d) = match label {
                RepLabel::UnramifiedSupercuspidal { level } => {
                    let i = (level as i64 + 1) / 2;
                    (r(1, 2) * pow(q, -(2 * i - 1)), r(2, 1) * pow(q, level as i64))
                }
                RepLabel::RamifiedSupercuspidal { level } => {
                    let i = (level as i64 + 1) / 2;
                    (
                        pow(q, -(i - 1)) / r(q as i64 + 1, 1),
                        r(q as i64 + 1, 1) * pow(q, i - 1),
                    )
                }
                _ => continue,
            };
            let got_vol = parse_rational(&record[6]).map_err(|e| e.to_string())?;
            let got_d = parse_rational(&record[7]).map_err(|e| e.to_string())?;
            ensure(got_vol == vol && got_d == d, || {
                format!("q={q} {label}: got ({got_vol}, {got_d}), want ({vol}, {d})")
            })?;
            rows += 1;
        }
    }
    ensure(rows == 27, || format!("expected 27 catalog rows, saw {rows}"))?;
    Ok(format!("27 rows exact, slowest {:.0?}", slowest))
}

fn spectrum() -> Check {
    let got: Vec<BigInt> = dimension_spectrum(&field(3), 2, 2)
        .map_err(|e| e.to_string())?
        .into_iter()
        .map(|e| e.value)
        .collect();
    let want: Vec<BigInt> = [1, 2, 4, 6, 12, 18, 36].into_iter().map(BigInt::from).collect();
    ensure(got == want, || format!("got {got:?}"))?;
    Ok("{1,2,4,6,12,18,36}".into())
}

fn steinberg_chain() -> Check {
    let start = Instant::now();
    for q in [3u64, 5, 7, 9, 11] {
        let f = field(q);
        let chain = steinberg_intermediate(&f);
        let qi = q as i64;
        ensure(chain.series_value == r(2 * (qi + 1), qi - 1), || {
            format!("series q={q}")
        })?;
        ensure(chain.iwahori_normalized_dim == r(qi - 1, 2 * (qi + 1)), || {
            format!("iwahori q={q}")
        })?;
        let d = chain.formal_dimension(&HaarNormalization::canonical(&f));
        ensure(d == r(1, 1), || format!("renormalized q={q}: {d}"))?;
    }
    let mut worst = 0f64;
    for q in [2u64, 3, 5] {
        let qi = q as f64;
        let err = (steinberg_series_sum(q, 1e-12).map_err(|e| e.to_string())? - 2.0 * (qi + 1.0) / (qi - 1.0)).abs();
        worst = worst.max(err);
        ensure(err < 1e-9, || format!("float series q={q} off by {err:e}"))?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(1), || format!("took {elapsed:?}"))?;
    Ok(format!("d_St = 1, float error {worst:.1e}, {elapsed:.0?}"))
}

fn enumeration() -> Check {
    let budget = EnumerationBudget::DEFAULT;
    let o1 = residue_group_orders(3, 1, budget).map_err(|e| e.to_string())?;
    ensure(o1.gl2_order == 48, || format!("|GL2(Z/3)| = {}", o1.gl2_order))?;
    let o2 = residue_group_orders(3, 2, budget).map_err(|e| e.to_string())?;
    ensure((o2.gl2_order, o2.reduction_kernel_order) == (3888, 81), || {
        format!("{o2:?}")
    })?;

    let f3 = field(3);
    for (ramified, want) in [(false, (8, 9)), (true, (2, 3))] {
        let got = quadratic_unit_filtration(3, 2, ramified, budget).map_err(|e| e.to_string())?;
        ensure((got.u_mod_u1, got.u1_mod_ui) == want, || {
            format!("ramified={ramified}: {got:?}")
        })?;
        let chain = index_chain(&f3, ramified, 2).map_err(|e| e.to_string())?;
        let closed = FiltrationCounts {
            u_mod_u1: chain.ue_mod_ue1.clone().try_into().unwrap(),
            u1_mod_ui: chain.ue1_mod_uei.clone().try_into().unwrap(),
        };
        ensure(got == closed, || {
            format!("ramified={ramified}: oracle {got:?} vs closed form {closed:?}")
        })?;
    }
    let gl2_closed: u64 = index_chain(&f3, false, 1)
        .map_err(|e| e.to_string())?
        .u_mod_u1
        .try_into()
        .unwrap();
    ensure(gl2_closed == 48, || "index_chain disagrees with enumeration".into())?;

    let (_, t3) = vndim(&["verify", "--p", "3", "--max-i", "2"])?;
    ensure(t3 < Duration::from_secs(60), || format!("verify p=3 took {t3:?}"))?;
    let (_, t5) = vndim(&["verify", "--p", "5", "--max-i", "2"])?;
    ensure(t5 < Duration::from_secs(300), || format!("verify p=5 took {t5:?}"))?;
    Ok(format!("verify p=3 in {t3:.1?}, p=5 in {t5:.1?}"))
}

fn ihara_rank() -> Check {
    let mut total = 0;
    for (q, cs) in [(3u64, &[1u64, 2, 4, 10][..]), (5, &[2, 4][..])] {
        for &c in cs {
            let report = random_regular_rank_check(q, c, 100, 0).map_err(|e| e.to_string())?;
            ensure(report.trials_run == 100 && report.failures == 0, || {
                format!("q={q} c={c}: {report:?}")
            })?;
            ensure(report.expected_rank == (q - 1) * c / 2 + 1, || {
                format!("q={q} c={c}: rank formula")
            })?;
            total += report.trials_run;
        }
    }
    Ok(format!("{total} trials, 0 failures"))
}

fn real_closed_forms() -> Check {
    for n in 2..=10i64 {
        for k in 2..=10i64 {
            let sig = FuchsianSignature::new(0, Vec::new(), n as u64 + 1);
            let got = vn_dimension_real(&sig, RealWeight::new(k).unwrap(), true).map_err(|e| e.to_string())?;
            ensure(got == r((n - 1) * (k - 1), 2), || {
                format!("free rank {n}, k={k}: {got}")
            })?;
        }
    }
    for qp in [3i64, 5, 7, 11] {
        for k in 2..=6i64 {
            let sig = FuchsianSignature::new(0, vec![2, qp as u64], 1);
            let got = vn_dimension_real(&sig, RealWeight::new(k).unwrap(), true).map_err(|e| e.to_string())?;
            let want = (r(1, 1) - r(2, qp)) * r(k - 1, 4);
            ensure(got == want, || format!("(0,[2,{qp}],1), k={k}: {got}"))?;
        }
    }
    Ok("81 free-group + 20 triangle-type cases exact".into())
}

fn invariance() -> Check {
    let lambdas = [r(1, 2), r(2, 1), r(7, 3)];
    let sigs = ["g=0;m=;h=3", "g=0;m=2,7;h=1", "g=2;m=;h=0", "g=1;m=3,3;h=2"];
    for lambda in &lambdas {
        for s in sigs {
            let sig: FuchsianSignature = s.parse().map_err(|e| format!("{e}"))?;
            for k in 2..=6 {
                let w = RealWeight::new(k).unwrap();
                let base = vn_dimension_real(&sig, w, true).map_err(|e| e.to_string())?;
                let covol = covolume_real(&sig).map_err(|e| e.to_string())?.scale(lambda);
                let dim = formal_dimension_real(w).scale(&lambda.recip());
                let scaled = (covol * dim).to_rational().map_err(|e| e.to_string())?;
                ensure(scaled == base, || format!("real {s} k={k} lambda={lambda}"))?;
            }
        }
        for q in [3u64, 5, 7, 9] {
            let f = field(q);
            let norm = HaarNormalization::scaled(&f, lambda).map_err(|e| e.to_string())?;
            let labels = [RepLabel::Steinberg, RepLabel::DepthZeroSupercuspidal]
                .into_iter()
                .chain((1..=6).map(|level| RepLabel::UnramifiedSupercuspidal { level }))
                .chain(
                    (1..=6)
                        .step_by(2)
                        .map(|level| RepLabel::RamifiedSupercuspidal { level }),
                );
            for label in labels {
                let lattice = LatticeSpec::Rank(3);
                let base = vn_dimension_padic(&f, lattice, label).map_err(|e| e.to_string())?;
                let scaled = vn_dimension_padic_with(&f, lattice, label, &norm).map_err(|e| e.to_string())?;
                ensure(scaled == base, || format!("padic q={q} {label} lambda={lambda}"))?;
            }
        }
    }

    let mut entries = 0;
    for q in [3u64, 5, 7, 9] {
        let f = field(q);
        let mut labels = vec![RepLabel::DepthZeroSupercuspidal];
        for level in 1..=6 {
            labels.push(RepLabel::UnramifiedSupercuspidal { level });
            if level % 2 == 1 {
                labels.push(RepLabel::RamifiedSupercuspidal { level });
            }
        }
        for label in labels {
            for norm in [
                HaarNormalization::canonical(&f),
                HaarNormalization::scaled(&f, &r(7, 3)).unwrap(),
            ] {
                let datum = inducing_datum_with(&f, label, &norm).map_err(|e| e.to_string())?;
                let product = &datum.formal_dim * &datum.vol_j_mod_z;
                ensure(product == Rational::from_integer(datum.dim_lambda.clone()), || {
                    format!("q={q} {label}: d*vol = {product}, dim = {}", datum.dim_lambda)
                })?;
            }
            ensure(inducing_datum(&f, label).is_ok(), || format!("q={q} {label}"))?;
            entries += 1;
        }
    }

    for q in [3u64, 5, 7] {
        let cms = cms_crosscheck(&field(q));
        let want = r(q as i64 - 1, 2);
        ensure(cms.agree && cms.lhs == want && cms.rhs == want, || {
            format!("CMS q={q}: {cms:?}")
        })?;
    }
    Ok(format!("3 scalings, {entries} catalog entries, CMS q=3,5,7"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("golden table", golden_table),
        ("dimension spectrum", spectrum),
        ("Steinberg chain", steinberg_chain),
        ("enumeration oracles", enumeration),
        ("Ihara rank", ihara_rank),
        ("real closed forms", real_closed_forms),
        ("invariance", invariance),
    ];
    let mut failed = 0;
    for (n, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS  {}. {name}: {detail}", n + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL  {}. {name}: {detail}", n + 1);
            }
        }
    }
    println!(
        "{}/{} acceptance criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
