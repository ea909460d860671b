//! Comparisons of computed tables against the shipped reference data.

use crate::classify::{self, CompositeContext, HermitianPairData, SimpleReport};
use crate::dadok::fundamental_k_values;
use crate::descriptor::RepDescriptor;
use crate::error::Result;
use crate::golden::DataDir;
use crate::linalg::{q, Q};
use crate::osc::{self, CTables};
use crate::rootsys::{fmt_theta, LieType, RootDatum};
use crate::sorth::build_sorth;
use serde::Serialize;
use std::collections::BTreeSet;

#[derive(Clone, Debug, Serialize)]
pub struct TableCheck {
    pub table: String,
    pub checked: usize,
    pub mismatches: Vec<String>,
}

impl TableCheck {
    fn new(table: &str) -> Self {
        TableCheck { table: table.into(), checked: 0, mismatches: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }

    fn compare_sets(&mut self, label: &str, got: &BTreeSet<RepDescriptor>, want: &BTreeSet<RepDescriptor>) {
        self.checked += want.len();
        for extra in got.difference(want) {
            self.mismatches.push(format!("{label}: computed but not listed: {extra}"));
        }
        for missing in want.difference(got) {
            self.mismatches.push(format!("{label}: listed but not computed: {missing}"));
        }
    }
}

/// Strongly orthogonal sets, in order, against the θ-expressions listed per type.
pub fn check_sorth_table(dir: &DataDir) -> Result<TableCheck> {
    let table = dir.sorth_sets()?;
    let mut check = TableCheck::new("a");
    for (name, exprs) in &table.sets {
        let d = RootDatum::new(name.parse::<LieType>()?);
        let b = build_sorth(&d)?;
        let got: Vec<Vec<Q>> = b.betas.iter().map(|r| d.root_to_theta(r)).collect();
        let want: Vec<Vec<Q>> = exprs.iter().map(|e| Ok(d.to_theta(&d.parse_vector(e)?))).collect::<Result<_>>()?;
        check.checked += 1;
        if got != want {
            let shown: Vec<String> = got.iter().map(|v| fmt_theta(v)).collect();
            check.mismatches.push(format!("{name}: computed [{}], listed [{}]", shown.join(", "), exprs.join(", ")));
        }
    }
    Ok(check)
}

/// k of every fundamental weight against the listed integers.
pub fn check_k_table(dir: &DataDir) -> Result<TableCheck> {
    let table = dir.k_table()?;
    let mut check = TableCheck::new("b1");
    for (name, ks) in &table.k {
        let d = RootDatum::new(name.parse::<LieType>()?);
        let got = fundamental_k_values(&d, &build_sorth(&d)?);
        let want: Vec<Q> = ks.iter().map(|&k| q(k)).collect();
        check.checked += 1;
        if got != want {
            let shown: Vec<String> = got.iter().map(ToString::to_string).collect();
            check.mismatches.push(format!("{name}: computed [{}], listed {ks:?}", shown.join(", ")));
        }
    }
    Ok(check)
}

pub fn check_c_tables(dir: &DataDir, tables: &CTables) -> Result<TableCheck> {
    let mut check = TableCheck::new("ctables");
    let set = |v: &[RepDescriptor]| v.iter().cloned().collect::<BTreeSet<_>>();
    check.compare_sets("C1/2", &set(&tables.c_half), &dir.c_half()?.canonical());
    check.compare_sets("C1", &set(&tables.c1), &dir.c1()?.canonical());
    check.compare_sets("C3/2", &set(&tables.c1_half), &dir.c1_half()?.canonical());
    for u in &tables.undecided {
        check.mismatches.push(format!("undecided: {u}"));
    }
    Ok(check)
}

pub fn check_k4(dir: &DataDir, rank_cap: usize) -> Result<TableCheck> {
    let mut check = TableCheck::new("k4");
    let got: BTreeSet<RepDescriptor> =
        classify::enumerate_k4_real(rank_cap)?.into_iter().map(|r| r.descriptor).collect();
    check.compare_sets("k = 4", &got, &dir.k4_table()?.canonical());
    Ok(check)
}

pub fn check_simple(dir: &DataDir, report: &SimpleReport) -> Result<TableCheck> {
    let mut check = TableCheck::new("simple");
    let got: BTreeSet<RepDescriptor> = report.survivors.iter().cloned().collect();
    check.compare_sets("survivors", &got, &dir.simple_survivors()?.canonical());
    for rec in &report.records {
        if rec.status == classify::Status::Eliminated && rec.primary_failure().and_then(|v| v.witness.as_ref()).is_none() {
            check.mismatches.push(format!("{}: eliminated without a witness", rec.descriptor));
        }
    }
    Ok(check)
}

pub fn check_composite(dir: &DataDir, records: &[classify::CandidateRecord]) -> Result<TableCheck> {
    let mut check = TableCheck::new("c");
    let mut want = dir.candidate_tables()?.canonical();
    want.extend(dir.orbit_equivalent_pairs()?.canonical());
    check.compare_sets("candidates", &classify::candidates(records), &want);
    Ok(check)
}

pub fn check_spheres(dir: &DataDir, rank_cap: usize, dim_cap: u64) -> Result<TableCheck> {
    let mut check = TableCheck::new("bms");
    let scan = classify::sphere_scan(rank_cap, dim_cap)?;
    let tables = dir.spheres()?;
    let canon = |rows: &[crate::golden::SphereRow]| rows.iter().map(|r| r.rep.canonical()).collect::<BTreeSet<_>>();
    check.compare_sets("real", &scan.real, &canon(&tables.table_real));
    check.compare_sets("complex", &scan.complex, &canon(&tables.table_complex));
    Ok(check)
}

/// Part (a) cases must come out circle-redundant, part (b) cases
/// Γ-orthogonal, never both.
pub fn check_hermitian(dir: &DataDir) -> Result<TableCheck> {
    let mut check = TableCheck::new("hermitian");
    for case in dir.hermitian_pairs()?.cases {
        for inst in &case.instances {
            let v = classify::hermitian_redundancy(&HermitianPairData::from_instance(inst)?)?;
            let expected = case.part == "a";
            check.checked += 1;
            if v.circle_redundant != expected || v.gamma_orthogonal == expected {
                check.mismatches.push(format!("{} ({}): {v:?}", case.case, inst.rep));
            }
        }
    }
    Ok(check)
}

/// Everything needed for the composite comparison, computed once.
pub struct FullRun {
    pub ctables: CTables,
    pub simple: SimpleReport,
    pub records: Vec<classify::CandidateRecord>,
}

pub fn full_run(dir: &DataDir, rank_cap: usize, dim_cap: u64) -> Result<FullRun> {
    let symmetric = dir.symmetric_spaces()?.index();
    let ctables = osc::classify_c_tables(rank_cap, osc_scan_cap(dim_cap))?;
    let simple = classify::simple_pipeline(rank_cap, &symmetric, dim_cap)?;
    let ctx = CompositeContext::new(rank_cap, dim_cap, &symmetric, &ctables);
    let records = classify::composite_pipeline(&ctx, &simple)?;
    Ok(FullRun { ctables, simple, records })
}

/// Module cap for the C-condition scan; the largest listed entry has
/// dimension 64, so 256 leaves room.
pub fn osc_scan_cap(dim_cap: u64) -> u64 {
    dim_cap.min(256)
}
