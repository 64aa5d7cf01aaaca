//! Finite-dimensional Lie bialgebras over `Q`: validation, duality,
//! annihilators, bracket closure, coisotropy and the infinitesimal Galois maps.

use std::fmt;

use num_traits::{One, Signed, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::coeff::{rat, Rational};
use crate::linalg::{rank, rref};
use crate::report::CheckReport;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    #[error("subspace is not a Lie subalgebra")]
    NotASubalgebra,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("span is not a sub-bialgebra")]
    NotASubBialgebra,
    #[error("n = {0} is not supported")]
    UnsupportedN(usize),
}

pub type Matrix = Vec<Vec<Rational>>;

/// Structure constants: `[x_i, x_j] = sum_k bracket[i][j][k] x_k` and
/// `gamma(x_i) = sum_{j<k} cobracket[i][j][k] x_j ^ x_k`, both stored as full
/// arrays antisymmetric in the last two indices of the cobracket.
#[derive(Debug, Clone)]
pub struct LieBialgebra {
    pub labels: Vec<String>,
    bracket: Vec<Vec<Vec<Rational>>>,
    cobracket: Vec<Vec<Vec<Rational>>>,
    /// Optional faithful matrix realization of the basis.
    pub matrices: Option<Vec<Matrix>>,
}

impl PartialEq for LieBialgebra {
    fn eq(&self, o: &Self) -> bool {
        self.labels == o.labels && self.bracket == o.bracket && self.cobracket == o.cobracket
    }
}

fn cube(n: usize) -> Vec<Vec<Vec<Rational>>> {
    vec![vec![vec![Rational::zero(); n]; n]; n]
}

impl LieBialgebra {
    /// Zero bracket and cobracket on `labels`.
    pub fn abelian(labels: Vec<String>) -> Self {
        let n = labels.len();
        Self { labels, bracket: cube(n), cobracket: cube(n), matrices: None }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    /// Sets `[x_i, x_j] = v` and `[x_j, x_i] = -v`.
    pub fn set_bracket(&mut self, i: usize, j: usize, v: Vec<Rational>) {
        self.bracket[j][i] = v.iter().map(|x| -x).collect();
        self.bracket[i][j] = v;
    }

    /// Sets the `x_j ^ x_k` coefficient of `gamma(x_i)`.
    pub fn set_cobracket(&mut self, i: usize, j: usize, k: usize, v: Rational) {
        self.cobracket[i][k][j] = -v.clone();
        self.cobracket[i][j][k] = v;
    }

    pub fn bracket_coeff(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.bracket[i][j][k]
    }

    pub fn cobracket_coeff(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.cobracket[i][j][k]
    }

    pub fn bracket_of_basis(&self, i: usize, j: usize) -> &[Rational] {
        &self.bracket[i][j]
    }

    /// `[u, v]` for coordinate vectors.
    pub fn bracket(&self, u: &[Rational], v: &[Rational]) -> Vec<Rational> {
        let n = self.dim();
        let mut out = vec![Rational::zero(); n];
        for (i, ui) in u.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, vj) in v.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                let s = ui * vj;
                for (k, slot) in out.iter_mut().enumerate() {
                    let c = &self.bracket[i][j][k];
                    if !c.is_zero() {
                        *slot += &s * c;
                    }
                }
            }
        }
        out
    }

    /// `gamma(u)` in the basis `x_j ^ x_k`, `j < k`, ordered lexicographically.
    pub fn cobracket(&self, u: &[Rational]) -> Vec<Rational> {
        let n = self.dim();
        let mut out = Vec::with_capacity(n * (n - 1) / 2);
        for j in 0..n {
            for k in j + 1..n {
                let mut s = Rational::zero();
                for (i, ui) in u.iter().enumerate() {
                    s += ui * &self.cobracket[i][j][k];
                }
                out.push(s);
            }
        }
        out
    }

    pub fn check_bialgebra(&self) -> CheckReport {
        let n = self.dim();
        let mut report = CheckReport::new();
        let triples = |pred: &dyn Fn(usize, usize, usize) -> bool| -> Option<String> {
            let bad: Vec<String> = (0..n)
                .flat_map(|i| (0..n).flat_map(move |j| (0..n).map(move |k| (i, j, k))))
                .filter(|&(i, j, k)| pred(i, j, k))
                .map(|(i, j, k)| format!("({i},{j},{k})"))
                .collect();
            (!bad.is_empty()).then(|| bad.join(" "))
        };
        report.record(
            "bracket antisymmetry",
            triples(&|i, j, k| self.bracket[i][j][k] != -self.bracket[j][i][k].clone()),
        );
        report.record("Jacobi", triples(&|i, j, k| i < j && j < k && !jacobi_zero(&self.bracket, i, j, k)));
        report.record(
            "cobracket antisymmetry",
            triples(&|i, j, k| self.cobracket[i][j][k] != -self.cobracket[i][k][j].clone()),
        );
        let dual = self.dual_bracket();
        report.record("co-Jacobi", triples(&|i, j, k| i < j && j < k && !jacobi_zero(&dual, i, j, k)));
        let mut bad = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let lhs = self.cobracket_full(&self.bracket[i][j]);
                let gi = self.cobracket_full(&unit(n, i));
                let gj = self.cobracket_full(&unit(n, j));
                let rhs = sub_mat(&self.act(i, &gj), &self.act(j, &gi));
                for a in 0..n {
                    for b in a + 1..n {
                        if lhs[a][b] != rhs[a][b] {
                            bad.push(format!("({i},{j};{a},{b})"));
                        }
                    }
                }
            }
        }
        report.record("cocycle", (!bad.is_empty()).then(|| bad.join(" ")));
        report
    }

    fn dual_bracket(&self) -> Vec<Vec<Vec<Rational>>> {
        let n = self.dim();
        let mut d = cube(n);
        for (i, gi) in self.cobracket.iter().enumerate() {
            for j in 0..n {
                for k in 0..n {
                    d[j][k][i] = gi[j][k].clone();
                }
            }
        }
        d
    }

    /// `gamma(u)` as a full antisymmetric matrix.
    fn cobracket_full(&self, u: &[Rational]) -> Matrix {
        let n = self.dim();
        let mut m = vec![vec![Rational::zero(); n]; n];
        for (i, ui) in u.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for a in 0..n {
                for b in 0..n {
                    m[a][b] += ui * &self.cobracket[i][a][b];
                }
            }
        }
        m
    }

    /// Adjoint action of `x_i` on a 2-tensor.
    fn act(&self, i: usize, t: &Matrix) -> Matrix {
        let n = self.dim();
        let mut out = vec![vec![Rational::zero(); n]; n];
        for m in 0..n {
            for a in 0..n {
                let c = &self.bracket[i][m][a];
                if c.is_zero() {
                    continue;
                }
                for b in 0..n {
                    out[a][b] += c * &t[m][b];
                    out[b][a] += c * &t[b][m];
                }
            }
        }
        out
    }

    /// Bracket and cobracket transposed under the dual-basis pairing.
    pub fn dual_bialgebra(&self) -> LieBialgebra {
        let n = self.dim();
        let mut cob = cube(n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    cob[k][i][j] = self.bracket[i][j][k].clone();
                }
            }
        }
        LieBialgebra {
            labels: self.labels.iter().map(|l| dual_label(l)).collect(),
            bracket: self.dual_bracket(),
            cobracket: cob,
            matrices: None,
        }
    }

    /// The sub-bialgebra spanned by the basis vectors at `indices`.
    pub fn restrict(&self, indices: &[usize]) -> Result<LieBialgebra, LieError> {
        let outside = |v: &[Rational]| v.iter().enumerate().any(|(k, c)| !c.is_zero() && !indices.contains(&k));
        let mut out = LieBialgebra::abelian(indices.iter().map(|&i| self.labels[i].clone()).collect());
        for (a, &i) in indices.iter().enumerate() {
            for (b, &j) in indices.iter().enumerate() {
                if outside(&self.bracket[i][j]) {
                    return Err(LieError::NotASubalgebra);
                }
                if b > a {
                    out.set_bracket(a, b, indices.iter().map(|&k| self.bracket[i][j][k].clone()).collect());
                }
            }
            let leaks = (0..self.dim()).filter(|j| !indices.contains(j)).any(|j| self.cobracket[i][j].iter().any(|c| !c.is_zero()));
            if leaks {
                return Err(LieError::NotASubBialgebra);
            }
            for (b, &j) in indices.iter().enumerate() {
                for (c, &k) in indices.iter().enumerate().skip(b + 1) {
                    out.set_cobracket(a, b, c, self.cobracket[i][j][k].clone());
                }
            }
        }
        Ok(out)
    }

    /// Whether `x_i -> images[i]` (coordinates in `other`) is a bijective
    /// map of Lie bialgebras.
    pub fn is_isomorphic_via(&self, other: &LieBialgebra, images: &[Vec<Rational>]) -> bool {
        let n = self.dim();
        if other.dim() != n || images.len() != n || Subspace::new(n, images.to_vec()).dim() != n {
            return false;
        }
        let push = |v: &[Rational]| -> Vec<Rational> {
            let mut out = vec![Rational::zero(); n];
            for (i, c) in v.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                for (slot, x) in out.iter_mut().zip(&images[i]) {
                    *slot += c * x;
                }
            }
            out
        };
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (j + 1..n).map(move |k| (j, k))).collect();
        for i in 0..n {
            for j in i + 1..n {
                if push(&self.bracket[i][j]) != other.bracket(&images[i], &images[j]) {
                    return false;
                }
            }
            // (phi ^ phi) of gamma(x_i), in the `j < k` wedge basis of `other`.
            let mut lhs = vec![Rational::zero(); pairs.len()];
            for &(j, k) in &pairs {
                let c = &self.cobracket[i][j][k];
                if c.is_zero() {
                    continue;
                }
                for (slot, &(a, b)) in lhs.iter_mut().zip(&pairs) {
                    *slot += c * (&images[j][a] * &images[k][b] - &images[j][b] * &images[k][a]);
                }
            }
            if lhs != other.cobracket(&images[i]) {
                return false;
            }
        }
        true
    }

    /// Copy with one cobracket constant shifted (antisymmetrically).
    pub fn perturbed_cobracket(&self, i: usize, j: usize, k: usize, by: Rational) -> LieBialgebra {
        let mut out = self.clone();
        let v = &out.cobracket[i][j][k] + &by;
        out.set_cobracket(i, j, k, v);
        out
    }

    pub fn subspace(&self, rows: Vec<Vec<Rational>>) -> Subspace {
        Subspace::new(self.dim(), rows)
    }

    pub fn coordinate_subspace(&self, indices: &[usize]) -> Subspace {
        let n = self.dim();
        Subspace::new(n, indices.iter().map(|&i| unit(n, i)).collect())
    }

    pub fn is_subalgebra(&self, k: &Subspace) -> bool {
        let b = k.basis();
        b.iter()
            .enumerate()
            .all(|(i, u)| b[i + 1..].iter().all(|v| k.contains(&self.bracket(u, v))))
    }

    fn require_subalgebra(&self, k: &Subspace) -> Result<(), LieError> {
        if k.ambient_dim() != self.dim() {
            return Err(LieError::Dimension { expected: self.dim(), got: k.ambient_dim() });
        }
        if !self.is_subalgebra(k) {
            return Err(LieError::NotASubalgebra);
        }
        Ok(())
    }

    /// `gamma(k)` contained in `k ^ g`.
    pub fn is_coisotropic(&self, k: &Subspace) -> Result<bool, LieError> {
        self.require_subalgebra(k)?;
        Ok(self.cobracket_lands_in(k, &wedge_span(k, &Subspace::full(self.dim()))))
    }

    /// `gamma(k)` contained in `k ^ k`.
    pub fn is_sub_bialgebra(&self, k: &Subspace) -> Result<bool, LieError> {
        self.require_subalgebra(k)?;
        Ok(self.cobracket_lands_in(k, &wedge_span(k, k)))
    }

    fn cobracket_lands_in(&self, k: &Subspace, target: &[Vec<Rational>]) -> bool {
        let r = rank(target);
        k.basis().iter().all(|u| {
            let g = self.cobracket(u);
            if g.iter().all(Zero::is_zero) {
                return true;
            }
            let mut m = target.to_vec();
            m.push(g);
            rank(&m) == r
        })
    }

    /// Smallest subalgebra containing `s`.
    pub fn generated_subalgebra(&self, s: &Subspace) -> Subspace {
        let mut cur = s.clone();
        loop {
            let b = cur.basis().to_vec();
            let mut rows = b.clone();
            for (i, u) in b.iter().enumerate() {
                for v in &b[i + 1..] {
                    rows.push(self.bracket(u, v));
                }
            }
            let next = Subspace::new(self.dim(), rows);
            if next.dim() == cur.dim() {
                return next;
            }
            cur = next;
        }
    }

    /// Bracket closure of `k^perp` inside the dual bialgebra.
    pub fn complementary_dual(&self, k: &Subspace) -> Result<Subspace, LieError> {
        self.require_subalgebra(k)?;
        Ok(self.dual_bialgebra().generated_subalgebra(&k.orthogonal()))
    }

    /// Complementary dual taken twice, landing back in `g`.
    pub fn galois_composite(&self, k: &Subspace) -> Result<Subspace, LieError> {
        let once = self.complementary_dual(k)?;
        self.dual_bialgebra().complementary_dual(&once)
    }

    /// `sl_n` with basis `E_ij` (i < j), `H_1..H_{n-1}`, `E_ij` (i > j) and
    /// cobracket `x -> ad_x(r)`, `r = sum_{i<j} E_ji ^ E_ij`.
    pub fn standard_sl(n: usize) -> Result<LieBialgebra, LieError> {
        if !(2..=4).contains(&n) {
            return Err(LieError::UnsupportedN(n));
        }
        let (labels, mats) = sl_basis(n);
        let dim = labels.len();
        let mut g = LieBialgebra::abelian(labels);
        let coords = |m: &Matrix| matrix_coords(&mats, m);
        for i in 0..dim {
            for j in i + 1..dim {
                let c = coords(&commutator(&mats[i], &mats[j]));
                g.set_bracket(i, j, c);
            }
        }
        // r as a full antisymmetric 2-tensor in basis coordinates
        let mut r = vec![vec![Rational::zero(); dim]; dim];
        for a in 1..=n {
            for b in a + 1..=n {
                let lo = coords(&elementary(n, b, a));
                let up = coords(&elementary(n, a, b));
                for (p, lp) in lo.iter().enumerate() {
                    for (s, us) in up.iter().enumerate() {
                        let v = lp * us;
                        if !v.is_zero() {
                            r[p][s] += &v;
                            r[s][p] -= &v;
                        }
                    }
                }
            }
        }
        for i in 0..dim {
            let d = g.act(i, &r);
            for a in 0..dim {
                for b in a + 1..dim {
                    if !d[a][b].is_zero() {
                        g.set_cobracket(i, a, b, d[a][b].clone());
                    }
                }
            }
        }
        g.matrices = Some(mats);
        Ok(g)
    }

    /// Coordinates of `so_n` (antisymmetric matrices) inside a matrix realization.
    pub fn so_subspace(&self) -> Option<Subspace> {
        let mats = self.matrices.as_ref()?;
        let n = mats[0].len();
        let rows = (1..=n)
            .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
            .map(|(i, j)| {
                let m = sub_mat(&elementary(n, i, j), &elementary(n, j, i));
                matrix_coords(mats, &m)
            })
            .collect();
        Some(self.subspace(rows))
    }

    /// Image of `k` under `Ad_g`, using the matrix realization.
    pub fn conjugate(&self, k: &Subspace, g: &Matrix, g_inv: &Matrix) -> Option<Subspace> {
        let mats = self.matrices.as_ref()?;
        let rows = k
            .basis()
            .iter()
            .map(|u| {
                let n = g.len();
                let mut x = vec![vec![Rational::zero(); n]; n];
                for (ui, m) in u.iter().zip(mats) {
                    if !ui.is_zero() {
                        for a in 0..n {
                            for b in 0..n {
                                x[a][b] += ui * &m[a][b];
                            }
                        }
                    }
                }
                matrix_coords(mats, &mat_mul(&mat_mul(g, &x), g_inv))
            })
            .collect();
        Some(self.subspace(rows))
    }
}

impl fmt::Display for LieBialgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-dimensional Lie bialgebra on {}", self.dim(), self.labels.join(", "))
    }
}

fn dual_label(l: &str) -> String {
    match l.strip_suffix('*') {
        Some(base) => base.to_string(),
        None => format!("{l}*"),
    }
}

fn unit(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[i] = Rational::one();
    v
}

fn sub_mat(a: &Matrix, b: &Matrix) -> Matrix {
    a.iter().zip(b).map(|(r, s)| r.iter().zip(s).map(|(x, y)| x - y).collect()).collect()
}

/// `[[x_i, x_j], x_k]`-type cyclic sum vanishes for structure constants `c`.
fn jacobi_zero(c: &[Vec<Vec<Rational>>], i: usize, j: usize, k: usize) -> bool {
    let n = c.len();
    (0..n).all(|l| {
        let mut s = Rational::zero();
        for m in 0..n {
            s += &c[j][k][m] * &c[i][m][l];
            s += &c[k][i][m] * &c[j][m][l];
            s += &c[i][j][m] * &c[k][m][l];
        }
        s.is_zero()
    })
}

/// Spanning set of `a ^ b` in the basis `x_j ^ x_k`, `j < k`.
fn wedge_span(a: &Subspace, b: &Subspace) -> Vec<Vec<Rational>> {
    let n = a.ambient_dim();
    let mut out = Vec::new();
    for u in a.basis() {
        for v in b.basis() {
            let mut w = Vec::with_capacity(n * (n - 1) / 2);
            for j in 0..n {
                for k in j + 1..n {
                    w.push(&u[j] * &v[k] - &u[k] * &v[j]);
                }
            }
            out.push(w);
        }
    }
    out
}

pub fn elementary(n: usize, i: usize, j: usize) -> Matrix {
    let mut m = vec![vec![Rational::zero(); n]; n];
    m[i - 1][j - 1] = Rational::one();
    m
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let mut out = vec![vec![Rational::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                out[i][j] += &a[i][k] * &b[k][j];
            }
        }
    }
    out
}

fn commutator(a: &Matrix, b: &Matrix) -> Matrix {
    sub_mat(&mat_mul(a, b), &mat_mul(b, a))
}

fn sl_basis(n: usize) -> (Vec<String>, Vec<Matrix>) {
    let mut labels = Vec::new();
    let mut mats = Vec::new();
    let named = n == 2;
    for i in 1..=n {
        for j in i + 1..=n {
            labels.push(if named { "e".into() } else { format!("E{i}{j}") });
            mats.push(elementary(n, i, j));
        }
    }
    for i in 1..n {
        labels.push(if named { "h".into() } else { format!("H{i}") });
        mats.push(sub_mat(&elementary(n, i, i), &elementary(n, i + 1, i + 1)));
    }
    for i in 1..=n {
        for j in 1..i {
            labels.push(if named { "f".into() } else { format!("E{i}{j}") });
            mats.push(elementary(n, i, j));
        }
    }
    (labels, mats)
}

/// Coordinates of a traceless matrix in the given basis.
fn matrix_coords(basis: &[Matrix], m: &Matrix) -> Vec<Rational> {
    let flat = |x: &Matrix| x.iter().flatten().cloned().collect::<Vec<_>>();
    let vectors: Vec<Vec<Rational>> = basis.iter().map(flat).collect();
    crate::linalg::solve_in_span(&vectors, &flat(m)).expect("matrix lies in the span of the basis")
}

/// Linear subspace of `Q^n`, kept in reduced row echelon form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    rows: Vec<Vec<Rational>>,
}

impl Subspace {
    pub fn new(ambient: usize, mut rows: Vec<Vec<Rational>>) -> Self {
        rows.retain(|r| r.iter().any(|x| !x.is_zero()));
        if rows.is_empty() {
            return Self::zero(ambient);
        }
        rref(&mut rows);
        Self { ambient, rows }
    }

    pub fn zero(ambient: usize) -> Self {
        Self { ambient, rows: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Self { ambient, rows: (0..ambient).map(|i| unit(ambient, i)).collect() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        if v.iter().all(Zero::is_zero) {
            return true;
        }
        let mut m = self.rows.clone();
        m.push(v.to_vec());
        rank(&m) == self.rows.len()
    }

    pub fn is_within(&self, other: &Subspace) -> bool {
        self.rows.iter().all(|r| other.contains(r))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        Subspace::new(self.ambient, self.rows.iter().chain(&other.rows).cloned().collect())
    }

    /// Annihilator under the dual-basis pairing.
    pub fn orthogonal(&self) -> Subspace {
        let n = self.ambient;
        if self.rows.is_empty() {
            return Subspace::full(n);
        }
        let mut m = self.rows.clone();
        let pivots = rref(&mut m);
        let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        let rows = free
            .iter()
            .map(|&f| {
                let mut v = unit(n, f);
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = -m[r][f].clone();
                }
                v
            })
            .collect();
        Subspace::new(n, rows)
    }

    /// Rows rendered against basis labels.
    pub fn describe(&self, labels: &[String]) -> Vec<String> {
        self.rows
            .iter()
            .map(|r| {
                let mut s = String::new();
                for (c, l) in r.iter().zip(labels).filter(|(c, _)| !c.is_zero()) {
                    let neg = c.is_negative();
                    let a = c.abs();
                    if s.is_empty() {
                        if neg {
                            s.push('-');
                        }
                    } else {
                        s.push_str(if neg { " - " } else { " + " });
                    }
                    if a.is_one() {
                        s.push_str(l);
                    } else {
                        s.push_str(&format!("{a}*{l}"));
                    }
                }
                s
            })
            .collect()
    }
}

/// One subalgebra examined by [`census`].
#[derive(Debug, Clone, Serialize)]
pub struct CensusEntry {
    pub ambient: String,
    pub origin: String,
    pub dim: usize,
    pub coisotropic: bool,
    pub galois_fixed: bool,
    pub image_coisotropic: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct CensusReport {
    pub seed: u64,
    pub entries: Vec<CensusEntry>,
}

impl CensusReport {
    /// Entries where coisotropy and Galois-fixedness disagree.
    pub fn fixed_point_exceptions(&self) -> Vec<&CensusEntry> {
        self.entries.iter().filter(|e| e.coisotropic != e.galois_fixed).collect()
    }

    pub fn image_exceptions(&self) -> Vec<&CensusEntry> {
        self.entries.iter().filter(|e| !e.image_coisotropic).collect()
    }
}

/// Every coordinate subalgebra of `g`.
pub fn coordinate_subalgebras(g: &LieBialgebra) -> Vec<(Vec<usize>, Subspace)> {
    let n = g.dim();
    (0u32..1 << n)
        .map(|mask| (0..n).filter(|i| mask >> i & 1 == 1).collect::<Vec<_>>())
        .map(|ix| {
            let k = g.coordinate_subspace(&ix);
            (ix, k)
        })
        .filter(|(_, k)| g.is_subalgebra(k))
        .collect()
}

fn examine(g: &LieBialgebra, name: &str, origin: String, k: &Subspace) -> CensusEntry {
    let coisotropic = g.is_coisotropic(k).expect("census members are subalgebras");
    let galois_fixed = g.galois_composite(k).expect("subalgebra") == *k;
    let image = g.complementary_dual(k).expect("subalgebra");
    let image_coisotropic = g.dual_bialgebra().is_coisotropic(&image).expect("closure is a subalgebra");
    CensusEntry { ambient: name.into(), origin, dim: k.dim(), coisotropic, galois_fixed, image_coisotropic }
}

/// Random unipotent `g = prod (I + t E_ij)` and its inverse.
fn random_unipotent<R: Rng>(n: usize, rng: &mut R) -> (Matrix, Matrix, String) {
    let id: Matrix = (0..n).map(|i| unit(n, i)).collect();
    let (mut g, mut g_inv) = (id.clone(), id.clone());
    let mut desc = Vec::new();
    for _ in 0..rng.gen_range(1..=3) {
        let i = rng.gen_range(1..=n);
        let mut j = rng.gen_range(1..n);
        if j >= i {
            j += 1;
        }
        let t = rng.gen_range(-3i64..=3);
        if t == 0 {
            continue;
        }
        let step = |s: i64| {
            let mut m = id.clone();
            m[i - 1][j - 1] = rat(s);
            m
        };
        g = mat_mul(&g, &step(t));
        g_inv = mat_mul(&step(-t), &g_inv);
        desc.push(format!("(I{t:+}E{i}{j})"));
    }
    (g, g_inv, desc.join(""))
}

/// Coordinate subalgebras of every ambient plus `random` conjugates of them.
pub fn census(ambients: &[(&str, &LieBialgebra)], random: usize, seed: u64) -> CensusReport {
    let mut entries = Vec::new();
    let mut pool = Vec::new();
    for (name, g) in ambients {
        for (ix, k) in coordinate_subalgebras(g) {
            let labels: Vec<&str> = ix.iter().map(|&i| g.labels[i].as_str()).collect();
            entries.push(examine(g, name, format!("span({})", labels.join(",")), &k));
            pool.push((*name, *g, k));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut made = 0;
    while made < random {
        let (name, g, k) = pool.choose(&mut rng).expect("nonempty pool");
        let Some(mats) = g.matrices.as_ref() else { continue };
        let (m, m_inv, desc) = random_unipotent(mats[0].len(), &mut rng);
        let conj = g.conjugate(k, &m, &m_inv).expect("realized");
        entries.push(examine(g, name, format!("Ad{desc}"), &conj));
        made += 1;
    }
    CensusReport { seed, entries }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn sl2_constants() {
        let g = LieBialgebra::standard_sl(2).unwrap();
        assert_eq!(g.labels, ["e", "h", "f"]);
        // [h,e] = 2e, [e,f] = h, delta(e) = h^e
        assert_eq!(g.bracket_of_basis(1, 0), &v(&[2, 0, 0])[..]);
        assert_eq!(g.bracket_of_basis(0, 2), &v(&[0, 1, 0])[..]);
        assert_eq!(g.cobracket(&v(&[1, 0, 0])), v(&[-1, 0, 0]));
        assert_eq!(g.cobracket(&v(&[0, 0, 1])), v(&[0, 0, 1]));
        assert!(g.check_bialgebra().passed());
    }

    #[test]
    fn orthogonal_examples() {
        let g = LieBialgebra::standard_sl(2).unwrap();
        let k = g.coordinate_subspace(&[0, 1]);
        assert_eq!(k.orthogonal(), g.coordinate_subspace(&[2]));
        assert_eq!(Subspace::zero(3).orthogonal(), Subspace::full(3));
    }

    #[test]
    fn sl3_checks() {
        let g = LieBialgebra::standard_sl(3).unwrap();
        assert!(g.check_bialgebra().passed(), "{}", g.check_bialgebra());
        let so = g.so_subspace().unwrap();
        assert!(g.is_subalgebra(&so));
        assert_eq!(g.is_coisotropic(&so), Ok(true));
        assert_eq!(g.is_sub_bialgebra(&so), Ok(false));
        assert_eq!(g.complementary_dual(&so).unwrap().dim(), 5);
    }
}
