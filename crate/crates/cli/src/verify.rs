use std::collections::BTreeMap;

use qutrit_braids::braid::BraidSimulator;
use qutrit_braids::groups::identity_suite;
use qutrit_braids::presentation::DEFAULT_COSET_LIMIT;
use qutrit_braids::tqft::{AnyonCharge, Theory};
use qutrit_braids::{
    closure, Catalog, ClosureMode, ClosureOptions, CyclotomicNumber, ExactMatrix, Execution, FusionSpace,
    GroupClosure, GroupPresentation, Result,
};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    All,
    Identities,
    Tqft,
    Presentation,
    Closure,
}

#[derive(Debug, Serialize)]
pub struct Check {
    pub suite: &'static str,
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Debug, Serialize)]
pub struct VerifyReport {
    pub passed: bool,
    pub total: usize,
    pub failed: Vec<String>,
    pub checks: Vec<Check>,
}

struct Collector {
    suite: &'static str,
    checks: Vec<Check>,
}

impl Collector {
    fn push(&mut self, name: impl Into<String>, passed: bool, detail: Option<String>) {
        self.checks.push(Check { suite: self.suite, name: name.into(), passed, detail });
    }

    /// Records `f`'s verdict; an error counts as a failure with its message.
    fn check(&mut self, name: &str, f: impl FnOnce() -> Result<bool>) {
        match f() {
            Ok(p) => self.push(name, p, None),
            Err(e) => self.push(name, false, Some(e.to_string())),
        }
    }
}

pub fn run(suite: Suite, catalog: &Catalog, exec: Execution) -> VerifyReport {
    let mut checks = Vec::new();
    let wants = |s: Suite| suite == Suite::All || suite == s;
    if wants(Suite::Identities) {
        checks.extend(identities(catalog, exec));
    }
    if wants(Suite::Tqft) {
        checks.extend(tqft(catalog, exec));
    }
    if wants(Suite::Presentation) {
        checks.extend(presentation(catalog));
    }
    if wants(Suite::Closure) {
        checks.extend(closures(catalog, exec));
    }
    let failed: Vec<String> = checks.iter().filter(|c| !c.passed).map(|c| format!("{}/{}", c.suite, c.name)).collect();
    VerifyReport { passed: failed.is_empty(), total: checks.len(), failed, checks }
}

fn identities(catalog: &Catalog, exec: Execution) -> Vec<Check> {
    identity_suite(catalog, exec)
        .checks
        .into_iter()
        .map(|c| Check { suite: "identities", name: c.name, passed: c.passed, detail: c.detail })
        .collect()
}

fn tqft(catalog: &Catalog, exec: Execution) -> Vec<Check> {
    let mut c = Collector { suite: "tqft", checks: Vec::new() };
    let theory = match Theory::new(catalog.field()) {
        Ok(t) => t,
        Err(e) => {
            c.push("theory", false, Some(e.to_string()));
            return c.checks;
        }
    };
    match theory.consistency_check(exec) {
        Ok(r) => c.push(
            "pentagon_hexagon_ribbon",
            true,
            Some(format!("pentagon {}, hexagon {}+{}, ribbon {}", r.pentagon, r.hexagon, r.hexagon_inverse, r.ribbon)),
        ),
        Err(e) => c.push("pentagon_hexagon_ribbon", false, Some(e.to_string())),
    }
    let sim = BraidSimulator::new(theory.clone());
    let field = catalog.field().clone();
    let q = |v: u8| AnyonCharge::new(v);
    c.check("sigma1_matches_G1", || {
        let s = FusionSpace::from_values(&[2, 2, 2, 2], 0)?;
        Ok(sim.sigma_matrix(&s, 1, 1)?.0.scalar_multiple_of(catalog.get("G1")?).is_some())
    });
    c.check("sigma2_matches_G2", || {
        let s = FusionSpace::from_values(&[2, 2, 2, 2], 0)?;
        Ok(sim.sigma_matrix(&s, 2, 1)?.0.scalar_multiple_of(catalog.get("G2")?).is_some())
    });
    c.check("d1_eq_d3", || Ok(theory.quantum_dimension(q(1)?) == theory.quantum_dimension(q(3)?)));
    c.check("theta_121_eq_theta_123", || {
        Ok(theory.theta_symbol(q(1)?, q(2)?, q(1)?)? == theory.theta_symbol(q(1)?, q(2)?, q(3)?)?)
    });
    c.check("qubit_1221_sigma2", || {
        let s = FusionSpace::from_values(&[1, 2, 2, 1], 0)?;
        let h = CyclotomicNumber::from_int(&field, 2).inverse()?;
        let i = CyclotomicNumber::root_of_unity(&field, 1, 4)?;
        let off = &(&CyclotomicNumber::sqrt_constant(&field, 3)? * &i) * &h;
        let expected = ExactMatrix::from_rows(vec![vec![-h.clone(), off.clone()], vec![off, -h]])?;
        Ok(sim.sigma_matrix(&s, 2, 1)?.0.scalar_multiple_of(&expected).is_some())
    });
    c.check("middle_braid_2211", || {
        let r = &CyclotomicNumber::sqrt_constant(&field, 2)? * &CyclotomicNumber::from_int(&field, 2).inverse()?;
        let e = |k, n| CyclotomicNumber::root_of_unity(&field, k, n);
        let expected =
            ExactMatrix::from_rows(vec![vec![&e(1, 3)? * &r, r.clone()], vec![&e(-5, 12)? * &r, &-e(1, 4)? * &r]])?;
        Ok(sim.middle_braid_2211()?.scalar_multiple_of(&expected).is_some())
    });
    c.check("full_twist_swaps_0_and_2", || {
        let t = sim.full_twist(&FusionSpace::from_values(&[2, 2, 1, 1], 0)?, 2)?;
        Ok(t.get(0, 0).is_zero() && t.get(1, 1).is_zero())
    });
    c.checks
}

fn presentation(catalog: &Catalog) -> Vec<Check> {
    let mut c = Collector { suite: "presentation", checks: Vec::new() };
    let p = GroupPresentation::qutrit_648();
    let assign: Result<BTreeMap<String, ExactMatrix>> =
        p.generators().iter().map(|g| catalog.get(g).map(|m| (g.clone(), m.clone()))).collect();
    match assign.and_then(|a| p.check_relations(&a)) {
        Ok(r) => {
            for e in r.entries {
                c.push(format!("relator {}", e.relator), e.passed, None);
            }
        }
        Err(e) => c.push("relators", false, Some(e.to_string())),
    }
    match p.todd_coxeter(&[], DEFAULT_COSET_LIMIT) {
        Ok(r) => c.push("todd_coxeter_648", r.index == 648, Some(format!("{} cosets", r.index))),
        Err(e) => c.push("todd_coxeter_648", false, Some(e.to_string())),
    }
    c.checks
}

fn closures(catalog: &Catalog, exec: Execution) -> Vec<Check> {
    let mut c = Collector { suite: "closure", checks: Vec::new() };
    let build = |names: &str, mode: ClosureMode| -> Result<GroupClosure> {
        closure(&catalog.resolve(names)?, ClosureOptions::default().mode(mode).exec(exec))
    };
    let gamma = build("G1t,G2t,FUMt", ClosureMode::Exact);
    let fr = build("G1,G2,FUM", ClosureMode::Exact);
    c.check("gamma_order_648", || Ok(gamma.clone()?.order() == 648));
    c.check("n_in_gamma", || Ok(gamma.clone()?.contains(catalog.get("N")?)));
    c.check("blichfeld_equal_as_sets", || Ok(build("F18,E,Btilde", ClosureMode::Exact)?.equal_as_sets(&gamma.clone()?)));
    c.check("braid_subgroup_162", || Ok(build("G1,G2", ClosureMode::Exact)?.order() == 162));
    c.check("o_conjugates_fr_to_gamma", || {
        Ok(fr.clone()?.conjugate_group_by_transpose(catalog.get("O")?)?.equal_as_sets(&gamma.clone()?))
    });
    c.check("row_swap_preserves_fr", || {
        let fr = fr.clone()?;
        Ok(fr.conjugate_group(catalog.get("J")?)?.equal_as_sets(&fr))
    });
    c.check("pu_gamma_216", || Ok(build("G1t,G2t,FUMt", ClosureMode::ModCenter)?.order() == 216));
    c.check("pu_braid_subgroup_54", || Ok(build("G1,G2", ClosureMode::ModCenter)?.order() == 54));
    c.check("center_order_3", || Ok(gamma.clone()?.center()?.order() == 3));
    c.check("fingerprint_gamma_eq_fr", || Ok(gamma.clone()?.fingerprint() == fr.clone()?.fingerprint()));
    c.checks
}
