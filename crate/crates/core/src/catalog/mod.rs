//! Built-in example data: quantum function algebras, their dual-side
//! L-operator algebra, standard Lie bialgebras and the rank-two Stokes data.

use serde::Serialize;
use thiserror::Error;

use crate::coeff::LaurentScalar;
use crate::hopf::{HopfError, HopfPresentation, Role, TensorElement};
use crate::liebialg::{LieBialgebra, LieError, Subspace};
use crate::ncalg::{GeneratorSet, NCElement, NcError, RewriteSystem, Word};
use crate::report::CheckReport;
use stokes::{quantum_stokes, stokes_bracket, BracketTable, QuantumStokes};

pub mod duality;
pub mod lops;
pub mod stokes;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("unknown example `{0}`")]
    UnknownExample(String),
    #[error("n = {0} is not supported")]
    UnsupportedN(usize),
    #[error("catalog entry failed to build: {0}")]
    Build(String),
}

impl From<NcError> for CatalogError {
    fn from(e: NcError) -> Self {
        CatalogError::Build(e.to_string())
    }
}

impl From<HopfError> for CatalogError {
    fn from(e: HopfError) -> Self {
        CatalogError::Build(e.to_string())
    }
}

impl From<LieError> for CatalogError {
    fn from(e: LieError) -> Self {
        CatalogError::Build(e.to_string())
    }
}

/// Degree up to which catalog rewrite systems are completed.
pub const COMPLETION_DEGREE: usize = 8;

fn word(ix: &[usize]) -> Word {
    Word(ix.iter().map(|&i| i as u16).collect())
}

fn mono(ix: &[usize], c: LaurentScalar) -> NCElement {
    NCElement::term(word(ix), c)
}

fn one() -> LaurentScalar {
    LaurentScalar::one()
}

/// Index of `t_ij` (1-based) in the diagonal-by-diagonal generator order.
pub fn frt_order(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(n * n);
    for level in 2..=2 * n {
        for i in 1..=n {
            if level > i && level - i <= n {
                out.push((i, level - i));
            }
        }
    }
    out
}

fn frt_names(n: usize) -> Vec<String> {
    if n == 2 {
        return ["a", "b", "c", "d"].map(String::from).to_vec();
    }
    frt_order(n).iter().map(|(i, j)| format!("t{i}{j}")).collect()
}

struct Frt {
    n: usize,
    pos: Vec<Vec<usize>>,
}

impl Frt {
    fn new(n: usize) -> Self {
        let mut pos = vec![vec![0; n + 1]; n + 1];
        for (k, (i, j)) in frt_order(n).into_iter().enumerate() {
            pos[i][j] = k;
        }
        Frt { n, pos }
    }

    fn t(&self, i: usize, j: usize) -> usize {
        self.pos[i][j]
    }

    /// Quantum minor on rows `rows` and columns `cols`, both increasing.
    fn minor(&self, rows: &[usize], cols: &[usize]) -> NCElement {
        let mut out = NCElement::zero();
        for (perm, inversions) in permutations(cols.len()) {
            let ix: Vec<usize> = rows.iter().zip(&perm).map(|(&r, &p)| self.t(r, cols[p])).collect();
            let c = LaurentScalar::monomial(crate::coeff::rat(if inversions % 2 == 0 { 1 } else { -1 }), inversions as i32);
            out.add_term(word(&ix), c);
        }
        out
    }

    fn relations(&self) -> Vec<NCElement> {
        let n = self.n;
        let mut rels = Vec::new();
        for i in 1..=n {
            for j in 1..=n {
                for k in 1..=n {
                    for l in 1..=n {
                        let (a, b) = (self.t(i, j), self.t(k, l));
                        if i == k && j < l {
                            rels.push(mono(&[a, b], one()).sub(&mono(&[b, a], LaurentScalar::q())));
                        } else if j == l && i < k {
                            rels.push(mono(&[a, b], one()).sub(&mono(&[b, a], LaurentScalar::q())));
                        } else if i < k && j > l {
                            rels.push(mono(&[a, b], one()).sub(&mono(&[b, a], one())));
                        } else if i < k && j < l {
                            let cross = mono(&[self.t(i, l), self.t(k, j)], LaurentScalar::q_minus_q_inv());
                            rels.push(mono(&[a, b], one()).sub(&mono(&[b, a], one())).sub(&cross));
                        }
                    }
                }
            }
        }
        let all: Vec<usize> = (1..=n).collect();
        rels.push(self.minor(&all, &all).sub(&NCElement::one()));
        rels
    }

    fn antipode(&self, i: usize, j: usize) -> NCElement {
        let rows: Vec<usize> = (1..=self.n).filter(|&r| r != j).collect();
        let cols: Vec<usize> = (1..=self.n).filter(|&c| c != i).collect();
        let e = i as i32 - j as i32;
        let sign = if e.rem_euclid(2) == 0 { 1 } else { -1 };
        let c = LaurentScalar::monomial(crate::coeff::rat(sign), e);
        if rows.is_empty() {
            return NCElement::scalar(c);
        }
        self.minor(&rows, &cols).scale(&c)
    }
}

/// Permutations of `0..n` with their inversion counts.
fn permutations(n: usize) -> Vec<(Vec<usize>, usize)> {
    fn go(rest: &mut Vec<usize>, cur: &mut Vec<usize>, out: &mut Vec<(Vec<usize>, usize)>) {
        if rest.is_empty() {
            let inv = (0..cur.len())
                .flat_map(|a| (a + 1..cur.len()).map(move |b| (a, b)))
                .filter(|&(a, b)| cur[a] > cur[b])
                .count();
            out.push((cur.clone(), inv));
            return;
        }
        for k in 0..rest.len() {
            let x = rest.remove(k);
            cur.push(x);
            go(rest, cur, out);
            cur.pop();
            rest.insert(k, x);
        }
    }
    let mut out = Vec::new();
    go(&mut (0..n).collect(), &mut Vec::new(), &mut out);
    out
}

/// `F_q[SL_n]`: FRT relations plus `det_q = 1`, matrix coproduct.
pub fn fq_sl(n: usize) -> Result<HopfPresentation, CatalogError> {
    if !(2..=3).contains(&n) {
        return Err(CatalogError::UnsupportedN(n));
    }
    let frt = Frt::new(n);
    let gens = GeneratorSet::new(frt_names(n))?;
    let mut sys = RewriteSystem::free(gens);
    let defining = frt.relations();
    for rel in &defining {
        sys.add_relation(rel)?;
    }
    sys.interreduce()?;
    // the determinant rule spawns an infinite family for n = 3; complete within the checked range
    sys.complete(COMPLETION_DEGREE, COMPLETION_DEGREE)?;
    let mut counit = vec![LaurentScalar::zero(); n * n];
    let mut coproduct = vec![TensorElement::zero(2); n * n];
    let mut antipode = vec![NCElement::zero(); n * n];
    for i in 1..=n {
        for j in 1..=n {
            let g = frt.t(i, j);
            if i == j {
                counit[g] = one();
            }
            for k in 1..=n {
                coproduct[g].add_term(vec![word(&[frt.t(i, k)]), word(&[frt.t(k, j)])], one());
            }
            antipode[g] = frt.antipode(i, j);
        }
    }
    let p = HopfPresentation::new(format!("fq_sl{n}"), sys, counit, coproduct, antipode)?;
    Ok(p.with_role(Role::FunctionAlgebra).with_dimension(n * n - 1).with_defining_relations(defining))
}

/// Upper Borel quotient of `F_q[SL_2]`: generators `a, b, d` with `ad = da = 1`.
pub fn borel_sl2() -> Result<HopfPresentation, CatalogError> {
    let gens = GeneratorSet::new(["a", "b", "d"])?;
    let (a, b, d) = (0, 1, 2);
    let mut sys = RewriteSystem::free(gens);
    let rels = [
        mono(&[a, b], one()).sub(&mono(&[b, a], LaurentScalar::q())),
        mono(&[b, d], one()).sub(&mono(&[d, b], LaurentScalar::q())),
        mono(&[a, d], one()).sub(&NCElement::one()),
        mono(&[d, a], one()).sub(&NCElement::one()),
    ];
    for r in &rels {
        sys.add_relation(r)?;
    }
    sys.complete(6, 4)?;
    let defining = rels.to_vec();
    let counit = vec![one(), LaurentScalar::zero(), one()];
    let coproduct = vec![
        TensorElement::pure(vec![word(&[a]), word(&[a])], one()),
        TensorElement::pure(vec![word(&[a]), word(&[b])], one()).add(&TensorElement::pure(vec![word(&[b]), word(&[d])], one())),
        TensorElement::pure(vec![word(&[d]), word(&[d])], one()),
    ];
    let antipode = vec![
        NCElement::generator(d),
        mono(&[b], LaurentScalar::monomial(crate::coeff::rat(-1), -1)),
        NCElement::generator(a),
    ];
    let p = HopfPresentation::new("borel_sl2", sys, counit, coproduct, antipode)?;
    Ok(p.with_role(Role::FunctionAlgebra).with_dimension(2).with_defining_relations(defining))
}

/// `R[t]` with `t` primitive.
pub fn abelian_toy() -> Result<HopfPresentation, CatalogError> {
    let gens = GeneratorSet::new(["t"])?;
    let sys = RewriteSystem::free(gens);
    let t = word(&[0]);
    let delta = TensorElement::pure(vec![t.clone(), Word::unit()], one()).add(&TensorElement::pure(vec![Word::unit(), t], one()));
    let p = HopfPresentation::new("abelian_toy", sys, vec![LaurentScalar::zero()], vec![delta], vec![NCElement::generator(0).neg()])?;
    Ok(p.with_role(Role::FunctionAlgebra).with_dimension(1))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EntryKind {
    HopfPresentation,
    LieBialgebra,
    SubgroupDatum,
    StokesInstance,
}

impl std::fmt::Display for EntryKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            EntryKind::HopfPresentation => "hopf_presentation",
            EntryKind::LieBialgebra => "lie_bialgebra",
            EntryKind::SubgroupDatum => "subgroup_datum",
            EntryKind::StokesInstance => "stokes_instance",
        })
    }
}

#[derive(Debug, Clone)]
pub enum Payload {
    Hopf(HopfPresentation),
    Lie(LieBialgebra),
    /// Subalgebra `sub` of the bialgebra `ambient`.
    Subgroup { ambient: LieBialgebra, sub: Subspace },
    Stokes { classical: BracketTable, quantum: Box<QuantumStokes> },
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: String,
    pub kind: EntryKind,
    pub payload: Payload,
    pub provenance: &'static str,
    /// Validation run when the entry was built.
    pub validation: CheckReport,
}

/// Degree at which Hopf presentations are validated on load.
pub const VALIDATION_DEGREE: usize = 3;

const FRT_NOTE: &str = "R T1 T2 = T2 T1 R with R = q sum E_ii(x)E_ii + sum_{i!=j} E_ii(x)E_jj + (q - q^-1) sum_{i>j} E_ij(x)E_ji; det_q = 1; matrix coproduct";
const LOP_NOTE: &str = "same R; R L1 L2 = L2 L1 R within each triangular family, R L1- L2+ = L2+ L1- R, l+_ii l-_ii = 1; L+ upper, L- lower";
const STD_NOTE: &str = "basis E_ij (i<j), H_i, E_ij (i>j); cobracket x -> ad_x(r), r = sum_{i<j} E_ji ^ E_ij";
const STOKES_NOTE: &str = "classical r = sum E_ii(x)E_ii + 2 sum_{i>j} E_ij(x)E_ji on pairs (b+, b-) with b-_ii = 1/b+_ii; s_ij entries of b+ b-^T; quantum S = L+ (L-)^T in lop_gl3";

/// `(name, kind, provenance)` for every published entry.
pub const CATALOG: &[(&str, EntryKind, &str)] = &[
    ("fq_sl2", EntryKind::HopfPresentation, FRT_NOTE),
    ("fq_sl3", EntryKind::HopfPresentation, FRT_NOTE),
    ("borel_sl2", EntryKind::HopfPresentation, "upper triangular quotient of fq_sl2: c = 0, a d = d a = 1"),
    ("abelian_toy", EntryKind::HopfPresentation, "polynomial algebra on one primitive generator"),
    ("lop_gl2", EntryKind::HopfPresentation, LOP_NOTE),
    ("lop_gl3", EntryKind::HopfPresentation, LOP_NOTE),
    ("sl2_std_bialg", EntryKind::LieBialgebra, STD_NOTE),
    ("sl3_std_bialg", EntryKind::LieBialgebra, STD_NOTE),
    ("so3_in_sl3", EntryKind::SubgroupDatum, "antisymmetric matrices inside standard sl3"),
    ("stokes3", EntryKind::StokesInstance, STOKES_NOTE),
];

fn hopf_entry(p: HopfPresentation) -> (Payload, CheckReport) {
    let mut rep = p.check_hopf_axioms(VALIDATION_DEGREE);
    let bad = p.relations().check_confluence(2 * VALIDATION_DEGREE);
    rep.record("confluence", bad.first().map(|c| format!("overlap {} does not resolve", c.word.display(p.generators()))));
    (Payload::Hopf(p), rep)
}

/// Builds and validates the named entry.
pub fn load_example(name: &str) -> Result<CatalogEntry, CatalogError> {
    let &(_, kind, provenance) = CATALOG
        .iter()
        .find(|(n, _, _)| *n == name)
        .ok_or_else(|| CatalogError::UnknownExample(name.to_string()))?;
    let (payload, validation) = match name {
        "fq_sl2" => hopf_entry(fq_sl(2)?),
        "fq_sl3" => hopf_entry(fq_sl(3)?),
        "borel_sl2" => hopf_entry(borel_sl2()?),
        "abelian_toy" => hopf_entry(abelian_toy()?),
        "lop_gl2" => hopf_entry(lops::l_operators(2)?),
        "lop_gl3" => hopf_entry(lops::l_operators(3)?),
        "sl2_std_bialg" | "sl3_std_bialg" => {
            let g = LieBialgebra::standard_sl(if name == "sl2_std_bialg" { 2 } else { 3 })?;
            let rep = g.check_bialgebra();
            (Payload::Lie(g), rep)
        }
        "so3_in_sl3" => {
            let ambient = LieBialgebra::standard_sl(3)?;
            let sub = ambient.so_subspace().ok_or_else(|| CatalogError::Build("missing matrix realization".into()))?;
            let mut rep = ambient.check_bialgebra();
            rep.record("subalgebra", (!ambient.is_subalgebra(&sub)).then(|| "not closed under the bracket".to_string()));
            (Payload::Subgroup { ambient, sub }, rep)
        }
        "stokes3" => {
            let classical = stokes_bracket(3)?;
            let quantum = quantum_stokes()?;
            let mut rep = CheckReport::new();
            rep.record("jacobi", classical.jacobi_defect().map(|(a, b, c, _)| format!("coordinates {a}, {b}, {c}")));
            let bad = quantum.relations.check_confluence(6);
            rep.record("quantum relations confluent", (!bad.is_empty()).then(|| format!("{} ambiguities", bad.len())));
            (Payload::Stokes { classical, quantum: Box::new(quantum) }, rep)
        }
        _ => unreachable!("catalog table and builder disagree"),
    };
    if !validation.passed() {
        return Err(CatalogError::Build(format!("{name} failed validation:\n{validation}")));
    }
    Ok(CatalogEntry { name: name.to_string(), kind, payload, provenance, validation })
}
