//! Subcommand bodies. Each returns a report; computation errors from the
//! core become failed verdicts, never usage errors.

use liecyclic_core::complex::{build_mixed, mixed_check, total_complexes, MixedData, Side};
use liecyclic_core::duality::duality_square_check;
use liecyclic_core::enveloping::suite::{self, SuiteConfig, SuiteOutcome};
use liecyclic_core::enveloping::CocyclicModule;
use liecyclic_core::io::write_matrix_block;
use liecyclic_core::sayd::{check_comodule, check_module, solve_ayd_linear, solve_ayd_only};
use liecyclic_core::{Q, Sayd};

use crate::report::Report;
use crate::workspace::WorkspaceSpec;

pub fn check(spec: &WorkspaceSpec, r: &mut Report) {
    let v = spec.sayd();
    let module = check_module(&v.action);
    let comodule = check_comodule(&v.coaction);
    let pairs = |p: &[(usize, usize)]| p.iter().map(|(a, b)| format!("({},{})", a + 1, b + 1)).collect::<Vec<_>>().join(" ");
    r.require("module", module.is_ok(), pairs(&module.violations));
    r.require("comodule", comodule.is_ok(), pairs(&comodule.noncommuting));
    r.inform("conilpotent", comodule.conilpotent, "");
    let sayd = v.check();
    let witness = |w: &Option<(String, liecyclic_core::QMatrix)>| w.as_ref().map(|(l, _)| l.clone()).unwrap_or_default();
    r.require("ayd", sayd.ayd.ok, witness(&sayd.ayd.witness));
    r.require("stability", sayd.stability.ok, witness(&sayd.stability.witness));
    r.inform("unimodular_stability", sayd.unimodular_stability.ok, witness(&sayd.unimodular_stability.witness));
    let mixed = mixed_check(&v);
    r.inform("chain_total_square_zero", mixed.chain.total_squared_zero(), "");
    r.inform("cochain_total_square_zero", mixed.cochain.total_squared_zero(), "");
    r.require("chain_prediction_agrees", mixed.chain.agrees(), "");
    r.require("cochain_prediction_agrees", mixed.cochain.agrees(), "");
    r.value("dimension", v.dim().to_string());
}

pub fn solve_sayd(spec: &WorkspaceSpec, ayd_only: bool, r: &mut Report) {
    let v = spec.sayd();
    let sol = if ayd_only { solve_ayd_only(&v.action) } else { solve_ayd_linear(&v.action) };
    let system = if ayd_only { "ayd" } else { "ayd+stability" };
    r.value("system", system);
    r.value("solution_dimension", sol.dim().to_string());
    r.body.push_str(&format!("solution space dimension: {}\n", sol.dim()));
    for (k, s) in sol.basis.iter().enumerate() {
        r.body.push_str(&format!("# solution {}\n", k + 1));
        write_matrix_block(&mut r.body, "coaction", s);
    }
    let obstructions: Vec<String> = sol.commutativity.obstructions().iter().map(|(a, b)| format!("t{}*t{}", a + 1, b + 1)).collect();
    r.inform("commutative_on_span", sol.commutativity.identically(), obstructions.join(" "));
    if !obstructions.is_empty() {
        r.value("commutativity_obstructions", obstructions.join(" "));
    }
}

pub fn side_of(cochain: bool) -> Side {
    if cochain {
        Side::Cochain
    } else {
        Side::Chain
    }
}

fn side_name(side: Side) -> &'static str {
    match side {
        Side::Chain => "chain",
        Side::Cochain => "cochain",
    }
}

#[derive(Clone, Copy, Debug)]
pub struct CohomologyRequest {
    pub ce: bool,
    pub hc: bool,
    pub hp: bool,
    pub side: Side,
    pub max_degree: Option<usize>,
}

pub fn cohomology(spec: &WorkspaceSpec, req: CohomologyRequest, r: &mut Report) {
    let v = spec.sayd();
    let side = side_name(req.side);
    let data = match build_mixed(&v, req.side) {
        Ok(d) => d,
        Err(e) => {
            r.require("coefficients", false, e.to_string());
            return;
        }
    };
    if req.ce {
        let (name, complex) = match req.side {
            Side::Chain => ("ce_homology", data.down_complex()),
            Side::Cochain => ("ce_cohomology", data.up_complex()),
        };
        match complex.cohomology_dims() {
            Ok(d) => {
                r.require(&format!("{side}_ce_square_zero"), true, "");
                r.table(name, d);
            }
            Err(e) => r.require(&format!("{side}_ce_square_zero"), false, e.to_string()),
        }
    }
    if req.hc || req.hp {
        let top = req.max_degree.unwrap_or(2 * spec.lie_algebra().dim() + 6);
        match total_complexes(&v, req.side, top) {
            Ok((staircase, periodic)) => {
                r.require(&format!("{side}_mixed"), true, "");
                if req.hc {
                    match staircase.cohomology_dims() {
                        Ok(d) => r.table("hc", d),
                        Err(e) => r.require("hc", false, e.to_string()),
                    }
                }
                if req.hp {
                    match periodic.cohomology_dims() {
                        Ok(d) => {
                            r.value("hp_even", d[0].to_string());
                            r.value("hp_odd", d[1].to_string());
                            r.table("hp", d);
                        }
                        Err(e) => r.require("hp", false, e.to_string()),
                    }
                }
            }
            Err(e) => r.require(&format!("{side}_mixed"), false, e.to_string()),
        }
    }
}

fn betti(data: &MixedData<Q>, up: bool) -> Result<Vec<usize>, String> {
    let c = if up { data.up_complex() } else { data.down_complex() };
    c.cohomology_dims().map_err(|e| e.to_string())
}

fn mirrored(a: &[usize], b: &[usize]) -> bool {
    a.len() == b.len() && a.iter().zip(b.iter().rev()).all(|(x, y)| x == y)
}

/// Squares between `Λg ⊗ V` and `Λg* ⊗ V ⊗ ℂ_{−δ}`, then the Betti tables.
pub fn duality(spec: &WorkspaceSpec, r: &mut Report) {
    let v = spec.sayd();
    match duality_square_check(&v) {
        Ok(rep) => {
            let bad = |xs: &[(usize, bool)]| xs.iter().filter(|x| !x.1).map(|x| x.0.to_string()).collect::<Vec<_>>().join(" ");
            r.require("ce_square_commutes", rep.ce_ok(), bad(&rep.ce));
            r.require("koszul_square_commutes", rep.koszul_ok(), bad(&rep.koszul));
        }
        Err(e) => {
            r.require("duality_squares", false, e.to_string());
            return;
        }
    }
    let (chain, cochain) = match (build_mixed(&v, Side::Chain), build_mixed(&v.delta_twist(-1), Side::Cochain)) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => {
            r.require("betti_tables", false, e.to_string());
            return;
        }
    };
    for (label, chain_up) in [("ce", false), ("koszul", true)] {
        // the chain-side CE differential lowers degree, its dual raises it
        match (betti(&chain, chain_up), betti(&cochain, !chain_up)) {
            (Ok(hc), Ok(hk)) => {
                r.require(&format!("betti_{label}_mirror"), mirrored(&hc, &hk), "p ↔ N−p");
                r.table(&format!("chain_{label}"), hc);
                r.table(&format!("cochain_{label}"), hk);
            }
            (Err(e), _) | (_, Err(e)) => r.require(&format!("betti_{label}_mirror"), false, e),
        }
    }
}

pub fn weil_summary(v: &Sayd, r: &mut Report) {
    let (ayd, stability, unimodular) = v.check().verdicts();
    r.value("dimension", v.dim().to_string());
    r.inform("ayd", ayd, "");
    r.inform("stability", stability, "");
    r.inform("unimodular_stability", unimodular, "");
}

#[derive(Clone, Copy, Debug)]
pub struct UgRequest {
    pub simplicial: bool,
    pub cyclic: bool,
    pub b_b: bool,
    pub filtration: bool,
    pub antisym: bool,
    /// Every pass was requested implicitly.
    pub all: bool,
    pub config: SuiteConfig,
}

fn outcome(r: &mut Report, name: &str, o: liecyclic_core::Result<SuiteOutcome>) {
    match o {
        Ok(o) => {
            let detail = o.first_failure.clone().unwrap_or_else(|| format!("{} relations", o.checked));
            r.require(name, o.ok(), detail);
        }
        Err(e) => r.require(name, false, e.to_string()),
    }
}

pub fn ug_verify(spec: &WorkspaceSpec, req: UgRequest, r: &mut Report) {
    let v = spec.sayd();
    let c = match CocyclicModule::with_cap(v.clone(), spec.cap) {
        Ok(c) => c,
        Err(e) => {
            r.require("cocyclic_module", false, e.to_string());
            return;
        }
    };
    let cfg = &req.config;
    r.value("samples_per_level", cfg.samples.to_string());
    r.value("max_level", cfg.max_level.to_string());
    if req.simplicial {
        outcome(r, "cosimplicial", suite::cosimplicial(&c, cfg));
    }
    if req.cyclic {
        outcome(r, "cyclic", suite::cyclic(&c, cfg));
    }
    if req.b_b {
        outcome(r, "b_and_connes_b", suite::b_and_connes_b(&c, cfg));
    }
    if req.filtration {
        match suite::filtration_pass(&c, cfg) {
            Ok(f) => {
                r.table("filtration", f.dims.clone());
                r.require("koszul_drops_filtration", f.koszul_drops, "");
                outcome(r, "filtration_preserved", Ok(f.preserved));
            }
            Err(e) => {
                if req.all {
                    r.inform("filtration", false, format!("skipped: {e}"));
                } else {
                    r.require("filtration", false, e.to_string());
                }
            }
        }
    }
    if req.antisym {
        if v.coaction.is_zero() {
            outcome(r, "antisymmetrization", suite::antisymmetrization(&c, 3));
        } else if req.all {
            r.inform("antisymmetrization", false, "skipped: needs the zero coaction");
        } else {
            r.require("antisymmetrization", false, "needs the zero coaction");
        }
    }
}
