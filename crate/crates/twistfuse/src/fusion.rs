//! The level-truncated fusion ring of LSU(2N), the module of twisted
//! representations over it, and the verification suite tying the two
//! independent computation routes together.
//!
//! Route A is combinatorial: the level-truncated branching rules of
//! [`crate::branching`], applied column by column over the twisted basis.
//! Route B is character-theoretic: the evaluation matrix
//! `Psi[g, h] = psi_h(D(g))` over the evaluation set simultaneously
//! diagonalizes the module action, so the matrix of multiplication by an
//! untwisted signature `f` solves `Psi M = Lambda_f Psi` with
//! `Lambda_f = diag(chi_f(D(g)))`. Entries of `M` must round to nonnegative
//! integers; route B is the authoritative route for general `f`, while
//! route A cross-checks every fundamental.
//!
//! Products of general untwisted signatures are expanded through the dual
//! Jacobi-Trudi determinant in the commuting fundamental fusion matrices,
//! with the conventions e_0 = e_2N = 1 and e_k = 0 outside [0, 2N].

use itertools::Itertools;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::branching::{pieri_level, sundaram_level};
use crate::characters::{
    base_point, chi_gl, eval_point, psi_sp, quantum_dims, wall_signatures, EvalPoint, QuantumDims,
};
use crate::error::{Error, Result};
use crate::linalg::{inf_norm, LuReal};
use crate::sig::{
    enumerate_eval_set, enumerate_paired, enumerate_twisted_basis, enumerate_untwisted_basis,
    FormalCombination, GlSignature, LevelContext, SpSignature,
};
use crate::tol::{ASSERT_TOL, COND_MAX, CONSISTENCY_TOL, DET_MIN, ROUND_TOL};

/// A square nonnegative-integer matrix indexed by a canonical basis list,
/// recording the action of the signature `label`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FusionMatrix {
    label: GlSignature,
    dim: usize,
    entries: Vec<i64>,
}

impl FusionMatrix {
    fn from_raw(label: GlSignature, dim: usize, entries: Vec<i64>) -> Result<Self> {
        debug_assert_eq!(entries.len(), dim * dim);
        if entries.iter().any(|&e| e < 0) {
            return Err(Error::Internal(format!(
                "fusion matrix for {label} has a negative entry"
            )));
        }
        Ok(FusionMatrix {
            label,
            dim,
            entries,
        })
    }

    fn identity(label: GlSignature, dim: usize) -> Self {
        FusionMatrix {
            label,
            dim,
            entries: mat_identity(dim),
        }
    }

    /// The acting signature.
    pub fn label(&self) -> &GlSignature {
        &self.label
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, row: usize, col: usize) -> i64 {
        self.entries[row * self.dim + col]
    }

    pub fn column(&self, col: usize) -> Vec<i64> {
        (0..self.dim).map(|r| self.entry(r, col)).collect()
    }

    /// Entries as nested rows, for serialization.
    pub fn rows(&self) -> Vec<Vec<i64>> {
        (0..self.dim)
            .map(|r| self.entries[r * self.dim..(r + 1) * self.dim].to_vec())
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        self.entries == mat_identity(self.dim)
    }

    fn raw(&self) -> &[i64] {
        &self.entries
    }
}

fn mat_identity(dim: usize) -> Vec<i64> {
    let mut m = vec![0i64; dim * dim];
    for i in 0..dim {
        m[i * dim + i] = 1;
    }
    m
}

fn mat_mul(a: &[i64], b: &[i64], dim: usize) -> Vec<i64> {
    let mut out = vec![0i64; dim * dim];
    for i in 0..dim {
        for k in 0..dim {
            let aik = a[i * dim + k];
            if aik == 0 {
                continue;
            }
            let brow = &b[k * dim..(k + 1) * dim];
            let orow = &mut out[i * dim..(i + 1) * dim];
            for j in 0..dim {
                orow[j] += aik * brow[j];
            }
        }
    }
    out
}

fn mat_add_scaled(acc: &mut [i64], m: &[i64], scale: i64) {
    for (a, &v) in acc.iter_mut().zip(m) {
        *a += scale * v;
    }
}

/// Conjugate (transposed) partition of a normalized signature.
fn conjugate_partition(parts: &[i64]) -> Vec<i64> {
    let width = parts.first().copied().unwrap_or(0);
    (1..=width)
        .map(|col| parts.iter().filter(|&&p| p >= col).count() as i64)
        .collect()
}

fn permutation_sign(perm: &[usize]) -> i64 {
    let mut inversions = 0;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Precomputed untwisted data: the canonical basis and the matrices of the
/// fundamental generators, from which any action matrix is assembled.
struct RingTables {
    ctx: LevelContext,
    basis: Vec<GlSignature>,
    dim: usize,
    /// Index k in 0..=2N; `None` never occurs inside the range, the option
    /// mirrors the e_k = 0 convention outside it.
    e_mats: Vec<Vec<i64>>,
}

impl RingTables {
    fn new(ctx: &LevelContext) -> Result<Self> {
        let basis = enumerate_untwisted_basis(ctx);
        let dim = basis.len();
        let mut e_mats = Vec::with_capacity(ctx.gl_rank() + 1);
        for k in 0..=ctx.gl_rank() {
            if k == 0 || k == ctx.gl_rank() {
                e_mats.push(mat_identity(dim));
                continue;
            }
            let mut entries = vec![0i64; dim * dim];
            for (col, f) in basis.iter().enumerate() {
                for (g, mult) in pieri_level(f, k, ctx)?.iter() {
                    let row = basis
                        .binary_search(g)
                        .map_err(|_| Error::Internal(format!("{g} missing from basis")))?;
                    entries[row * dim + col] = mult;
                }
            }
            e_mats.push(entries);
        }
        Ok(RingTables {
            ctx: *ctx,
            basis,
            dim,
            e_mats,
        })
    }

    fn index_of(&self, f: &GlSignature) -> Result<usize> {
        self.basis.binary_search(f).map_err(|_| {
            Error::NotPermissible(format!(
                "signature {f} is not in the untwisted basis at {}",
                self.ctx
            ))
        })
    }

    /// Action matrix of `f` via the dual Jacobi-Trudi determinant in the
    /// commuting fundamental matrices.
    fn action_matrix(&self, f: &GlSignature) -> Result<Vec<i64>> {
        let f = f.normalized();
        if !f.is_level_permissible(&self.ctx) {
            return Err(Error::NotPermissible(format!(
                "signature {f} violates the level constraint at {}",
                self.ctx
            )));
        }
        let width = f.parts()[0] as usize;
        if width == 0 {
            return Ok(mat_identity(self.dim));
        }
        let conj = conjugate_partition(f.parts());
        let max_index = self.ctx.gl_rank() as i64;
        let mut acc = vec![0i64; self.dim * self.dim];
        for perm in (0..width).permutations(width) {
            let mut factors: Vec<usize> = Vec::with_capacity(width);
            let mut vanishes = false;
            for i in 0..width {
                let idx = conj[i] - i as i64 + perm[i] as i64;
                if !(0..=max_index).contains(&idx) {
                    vanishes = true;
                    break;
                }
                let idx = idx as usize;
                // e_0 and e_2N act as the identity; skip them.
                if idx != 0 && idx != self.ctx.gl_rank() {
                    factors.push(idx);
                }
            }
            if vanishes {
                continue;
            }
            let sign = permutation_sign(&perm);
            let mut product: Option<Vec<i64>> = None;
            for &idx in &factors {
                product = Some(match product {
                    None => self.e_mats[idx].clone(),
                    Some(p) => mat_mul(&p, &self.e_mats[idx], self.dim),
                });
            }
            match product {
                Some(p) => mat_add_scaled(&mut acc, &p, sign),
                None => mat_add_scaled(&mut acc, &mat_identity(self.dim), sign),
            }
        }
        Ok(acc)
    }

    fn fusion_matrix(&self, f: &GlSignature) -> Result<FusionMatrix> {
        let entries = self.action_matrix(f)?;
        FusionMatrix::from_raw(f.normalized(), self.dim, entries)
    }
}

/// Matrix of fusion by the k-th exterior power over the untwisted basis.
/// k = 0 and k = 2N give the identity.
pub fn fundamental_matrix_untwisted(k: usize, ctx: &LevelContext) -> Result<FusionMatrix> {
    if k > ctx.gl_rank() {
        return Err(Error::OutOfRange(format!(
            "exterior power {} out of range 0..={}",
            k,
            ctx.gl_rank()
        )));
    }
    let tables = RingTables::new(ctx)?;
    let label = GlSignature::fundamental(k, ctx.gl_rank())?;
    if k == 0 || k == ctx.gl_rank() {
        return Ok(FusionMatrix::identity(label.normalized(), tables.dim));
    }
    FusionMatrix::from_raw(label, tables.dim, tables.e_mats[k].clone())
}

/// Fusion product of two untwisted representations, expanded through the
/// Jacobi-Trudi determinant. Commutative and associative; the unit is the
/// zero signature.
pub fn general_fusion_untwisted(
    f: &GlSignature,
    g: &GlSignature,
    ctx: &LevelContext,
) -> Result<FormalCombination<GlSignature>> {
    let tables = RingTables::new(ctx)?;
    let matrix = tables.fusion_matrix(&f.normalized())?;
    let col = tables.index_of(&g.normalized())?;
    Ok(tables
        .basis
        .iter()
        .enumerate()
        .map(|(row, e)| (e.clone(), matrix.entry(row, col)))
        .collect())
}

/// Matrix of the module action of the k-th exterior power over the twisted
/// basis, by the level-truncated branching rule (route A).
pub fn module_matrix_route_a(k: usize, ctx: &LevelContext) -> Result<FusionMatrix> {
    if k > ctx.gl_rank() {
        return Err(Error::OutOfRange(format!(
            "exterior power {} out of range 0..={}",
            k,
            ctx.gl_rank()
        )));
    }
    let basis = enumerate_twisted_basis(ctx);
    let dim = basis.len();
    let mut entries = vec![0i64; dim * dim];
    for (col, h) in basis.iter().enumerate() {
        for (g, mult) in sundaram_level(h, k, ctx)?.iter() {
            let row = basis
                .binary_search(g)
                .map_err(|_| Error::Internal(format!("{g} missing from twisted basis")))?;
            entries[row * dim + col] = mult;
        }
    }
    FusionMatrix::from_raw(GlSignature::fundamental(k, ctx.gl_rank())?, dim, entries)
}

/// Outcome of the evaluation-route solve, with the numerical evidence that
/// went into accepting it.
#[derive(Clone, Debug)]
pub struct RouteBSolve {
    pub matrix: FusionMatrix,
    /// Largest distance of any solved entry from its rounded integer.
    pub rounding_residual: f64,
    /// Determinant of the evaluation matrix.
    pub det_psi: f64,
    /// Infinity-norm condition number of the evaluation matrix.
    pub cond_psi: f64,
}

/// Shared factorization of the evaluation matrix, reused when many action
/// matrices are solved against the same context.
struct EvalSolver {
    points: Vec<EvalPoint>,
    dim: usize,
    psi: Vec<f64>,
    lu: LuReal,
    cond: f64,
}

impl EvalSolver {
    fn new(ctx: &LevelContext) -> Result<Self> {
        let twisted = enumerate_twisted_basis(ctx);
        let evals = enumerate_eval_set(ctx);
        if twisted.len() != evals.len() {
            return Err(Error::BasisFailure(format!(
                "evaluation set has {} points but the twisted basis has {} elements at {ctx}",
                evals.len(),
                twisted.len()
            )));
        }
        let dim = twisted.len();
        let points: Vec<EvalPoint> = evals
            .iter()
            .map(|g| eval_point(g, ctx))
            .collect::<Result<_>>()?;
        let mut psi = vec![0f64; dim * dim];
        for (r, pt) in points.iter().enumerate() {
            for (c, h) in twisted.iter().enumerate() {
                psi[r * dim + c] = psi_sp(h, pt)?.real()?;
            }
        }
        let lu = LuReal::factor(psi.clone(), dim);
        if lu.det().abs() <= DET_MIN {
            return Err(Error::BasisFailure(format!(
                "evaluation matrix is numerically singular (|det| = {:.3e}) at {ctx}",
                lu.det().abs()
            )));
        }
        let cond = inf_norm(&psi, dim) * inf_norm(&lu.inverse(), dim);
        Ok(EvalSolver {
            points,
            dim,
            psi,
            lu,
            cond,
        })
    }

    /// Solve `Psi M = diag(lambda) Psi` and round to a nonnegative integer
    /// matrix.
    fn solve(&self, label: &GlSignature, lambda: &[f64]) -> Result<RouteBSolve> {
        let dim = self.dim;
        let mut entries = vec![0i64; dim * dim];
        let mut residual = 0f64;
        let mut rhs = vec![0f64; dim];
        for col in 0..dim {
            for r in 0..dim {
                rhs[r] = lambda[r] * self.psi[r * dim + col];
            }
            let x = self.lu.solve(&rhs);
            for (row, &v) in x.iter().enumerate() {
                let rounded = v.round();
                residual = residual.max((v - rounded).abs());
                entries[row * dim + col] = rounded as i64;
            }
        }
        if residual >= ROUND_TOL {
            return Err(Error::RouteFailure(format!(
                "entries of the action of {label} are {residual:.3e} away from integers"
            )));
        }
        if entries.iter().any(|&e| e < 0) {
            return Err(Error::RouteFailure(format!(
                "action of {label} has a negative rounded entry"
            )));
        }
        Ok(RouteBSolve {
            matrix: FusionMatrix::from_raw(label.clone(), dim, entries)?,
            rounding_residual: residual,
            det_psi: self.lu.det(),
            cond_psi: self.cond,
        })
    }

    fn solve_for(&self, f: &GlSignature, ctx: &LevelContext) -> Result<RouteBSolve> {
        let f = f.normalized();
        if !f.is_level_permissible(ctx) {
            return Err(Error::NotPermissible(format!(
                "signature {f} violates the level constraint at {ctx}"
            )));
        }
        let lambda: Vec<f64> = self
            .points
            .iter()
            .map(|pt| chi_gl(&f, pt)?.real())
            .collect::<Result<_>>()?;
        self.solve(&f, &lambda)
    }
}

/// Matrix of the module action of an arbitrary untwisted signature over the
/// twisted basis, by diagonalizing on the evaluation set (route B).
pub fn module_matrix_route_b(f: &GlSignature, ctx: &LevelContext) -> Result<RouteBSolve> {
    EvalSolver::new(ctx)?.solve_for(f, ctx)
}

/// Module action of `f` on the twisted representation `h`, as a nonnegative
/// combination of twisted signatures. Route B is authoritative.
pub fn fuse_module(
    f: &GlSignature,
    h: &SpSignature,
    ctx: &LevelContext,
) -> Result<FormalCombination<SpSignature>> {
    if !h.is_level_permissible(ctx) {
        return Err(Error::NotPermissible(format!(
            "twisted signature {h} violates h_1 + h_2 <= {} at {ctx}",
            ctx.level()
        )));
    }
    let basis = enumerate_twisted_basis(ctx);
    let col = basis
        .binary_search(h)
        .map_err(|_| Error::Internal(format!("{h} missing from twisted basis")))?;
    let solve = module_matrix_route_b(f, ctx)?;
    Ok(basis
        .iter()
        .enumerate()
        .map(|(row, g)| (g.clone(), solve.matrix.entry(row, col)))
        .collect())
}

/// The square of the basic twisted representation, together with the
/// quantum-dimension consistency record for it.
#[derive(Clone, Debug)]
pub struct K0Square {
    /// Multiplicity-one sum over the paired permissible signatures.
    pub decomposition: FormalCombination<GlSignature>,
    /// Squared normalization constant, from the quantum dimensions.
    pub c_squared: f64,
    /// Sum of the untwisted quantum dimensions over the decomposition.
    pub paired_sum: f64,
    pub abs_diff: f64,
}

pub fn k0_square(ctx: &LevelContext) -> Result<K0Square> {
    let qd = quantum_dims(ctx)?;
    let base = base_point(ctx)?;
    let paired = enumerate_paired(ctx);
    let mut decomposition = FormalCombination::new();
    let mut paired_sum = 0.0;
    for f in &paired {
        paired_sum += chi_gl(f, &base)?.real()?;
        decomposition.add(f.clone(), 1);
    }
    let c_squared = qd.c * qd.c;
    Ok(K0Square {
        decomposition,
        c_squared,
        paired_sum,
        abs_diff: (c_squared - paired_sum).abs(),
    })
}

/// Result of one named verification check.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    /// Measured residual; its meaning is check-specific and spelled out in
    /// `detail`.
    pub residual: f64,
    pub tolerance: f64,
    pub detail: String,
}

impl CheckResult {
    fn measured(name: &str, residual: f64, tolerance: f64, detail: String) -> Self {
        CheckResult {
            name: name.to_string(),
            passed: residual < tolerance,
            residual,
            tolerance,
            detail,
        }
    }

    fn failed(name: &str, tolerance: f64, detail: String) -> Self {
        CheckResult {
            name: name.to_string(),
            passed: false,
            residual: f64::INFINITY,
            tolerance,
            detail,
        }
    }
}

/// Machine-readable verification report for one (N, level) cell.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct VerifyReport {
    pub n: usize,
    pub level: i64,
    pub passed: bool,
    pub checks: Vec<CheckResult>,
}

const CHECK_NAMES: [&str; 7] = [
    "route_agreement",
    "perron_frobenius",
    "boundary_vanishing",
    "basis_property",
    "ring_action",
    "k0_consistency",
    "commutativity_associativity",
];

impl VerifyReport {
    fn broken(ctx: &LevelContext, error: &Error) -> Self {
        let checks = CHECK_NAMES
            .iter()
            .map(|name| CheckResult::failed(name, 0.0, format!("setup failed: {error}")))
            .collect();
        VerifyReport {
            n: ctx.n(),
            level: ctx.level(),
            passed: false,
            checks,
        }
    }
}

struct VerifyData {
    ctx: LevelContext,
    tables: RingTables,
    solver: EvalSolver,
    /// Jacobi-Trudi action matrix per untwisted basis element.
    ring_mats: Vec<Vec<i64>>,
    /// Route-B module matrix per untwisted basis element.
    module_mats: Vec<FusionMatrix>,
    module_residual: f64,
    qd: QuantumDims,
}

impl VerifyData {
    fn build(ctx: &LevelContext) -> Result<Self> {
        let tables = RingTables::new(ctx)?;
        let solver = EvalSolver::new(ctx)?;
        let mut ring_mats = Vec::with_capacity(tables.dim);
        let mut module_mats = Vec::with_capacity(tables.dim);
        let mut module_residual = 0f64;
        for f in &tables.basis {
            ring_mats.push(tables.action_matrix(f)?);
            let solve = solver.solve_for(f, ctx)?;
            module_residual = module_residual.max(solve.rounding_residual);
            module_mats.push(solve.matrix);
        }
        let qd = quantum_dims(ctx)?;
        Ok(VerifyData {
            ctx: *ctx,
            tables,
            solver,
            ring_mats,
            module_mats,
            module_residual,
            qd,
        })
    }

    fn check_route_agreement(&self) -> CheckResult {
        let name = "route_agreement";
        let mut residual = 0f64;
        for k in 1..self.ctx.gl_rank() {
            let a = match module_matrix_route_a(k, &self.ctx) {
                Ok(m) => m,
                Err(e) => {
                    return CheckResult::failed(name, ROUND_TOL, format!("route A at k={k}: {e}"))
                }
            };
            let label = GlSignature::fundamental(k, self.ctx.gl_rank()).expect("valid k");
            let idx = self
                .tables
                .basis
                .binary_search(&label)
                .expect("fundamental is in the basis");
            let b = &self.module_mats[idx];
            if a.raw() != b.raw() {
                return CheckResult::failed(
                    name,
                    ROUND_TOL,
                    format!("matrices differ for exterior power {k}"),
                );
            }
            residual = residual.max(self.module_residual);
        }
        CheckResult::measured(
            name,
            residual,
            ROUND_TOL,
            format!(
                "branching route equals evaluation route for k = 1..{}; worst rounding residual {residual:.3e}",
                self.ctx.gl_rank() - 1
            ),
        )
    }

    fn check_perron_frobenius(&self) -> CheckResult {
        let name = "perron_frobenius";
        let d_untwisted: Vec<f64> = self
            .tables
            .basis
            .iter()
            .map(|f| self.qd.untwisted[f])
            .collect();
        let twisted_basis = enumerate_twisted_basis(&self.ctx);
        let d_twisted: Vec<f64> = twisted_basis.iter().map(|h| self.qd.twisted[h]).collect();
        let norm_u = d_untwisted.iter().fold(0f64, |m, v| m.max(v.abs()));
        let norm_t = d_twisted.iter().fold(0f64, |m, v| m.max(v.abs()));
        let mut residual = 0f64;
        for (idx, f) in self.tables.basis.iter().enumerate() {
            let eigenvalue = self.qd.untwisted[f];
            let ring = &self.ring_mats[idx];
            for r in 0..self.tables.dim {
                let row_sum: f64 = (0..self.tables.dim)
                    .map(|c| ring[r * self.tables.dim + c] as f64 * d_untwisted[c])
                    .sum();
                residual = residual.max((row_sum - eigenvalue * d_untwisted[r]).abs() / norm_u);
            }
            let module = &self.module_mats[idx];
            for r in 0..module.dim() {
                let row_sum: f64 = (0..module.dim())
                    .map(|c| module.entry(r, c) as f64 * d_twisted[c])
                    .sum();
                residual = residual.max((row_sum - eigenvalue * d_twisted[r]).abs() / norm_t);
            }
        }
        CheckResult::measured(
            name,
            residual,
            ASSERT_TOL,
            "quantum dimensions are eigenvectors of every action matrix".to_string(),
        )
    }

    fn check_boundary_vanishing(&self) -> CheckResult {
        let name = "boundary_vanishing";
        let mut residual = 0f64;
        let walls = wall_signatures(&self.ctx);
        for h in &walls {
            for pt in &self.solver.points {
                match psi_sp(h, pt) {
                    Ok(v) => residual = residual.max(v.complex().norm()),
                    Err(e) => return CheckResult::failed(name, ASSERT_TOL, e.to_string()),
                }
            }
        }
        CheckResult::measured(
            name,
            residual,
            ASSERT_TOL,
            format!(
                "characters of all {} wall signatures vanish on all {} points",
                walls.len(),
                self.solver.points.len()
            ),
        )
    }

    fn check_basis_property(&self) -> CheckResult {
        let name = "basis_property";
        let det = self.solver.lu.det().abs();
        let cond = self.solver.cond;
        let sizes_match = self.solver.dim == enumerate_twisted_basis(&self.ctx).len();
        let passed = det > DET_MIN && cond < COND_MAX && sizes_match;
        CheckResult {
            name: name.to_string(),
            passed,
            residual: cond,
            tolerance: COND_MAX,
            detail: format!(
                "|det Psi| = {det:.6e} (> {DET_MIN:.0e} required), condition number {cond:.3e}, {} points for {} basis elements",
                self.solver.dim,
                self.solver.dim
            ),
        }
    }

    /// Checks 5 and 7 share the per-pair products, so they are computed in
    /// one sweep: `ring_action` compares N_f N_g against the expansion of
    /// f x g over structure constants, `commutativity_associativity`
    /// compares the two bracketings of every triple (through the same
    /// matrices) and the two orders of every pair.
    fn check_pairwise(&self) -> (CheckResult, CheckResult) {
        let dim = self.tables.dim;
        let mut ring_residual = 0i64;
        let mut comm_residual = 0i64;
        for i in 0..dim {
            let nf = &self.ring_mats[i];
            for j in 0..dim {
                let ng = &self.ring_mats[j];
                // Structure constants of f x g: column j of N_f.
                let product = mat_mul(nf, ng, dim);
                let mut expansion = vec![0i64; dim * dim];
                for e in 0..dim {
                    let coeff = nf[e * dim + j];
                    if coeff != 0 {
                        mat_add_scaled(&mut expansion, &self.ring_mats[e], coeff);
                    }
                }
                for idx in 0..dim * dim {
                    ring_residual = ring_residual.max((product[idx] - expansion[idx]).abs());
                }
                // f x g against g x f, as columns.
                for r in 0..dim {
                    comm_residual = comm_residual.max((nf[r * dim + j] - ng[r * dim + i]).abs());
                }
            }
        }
        let ring = CheckResult {
            name: "ring_action".to_string(),
            passed: ring_residual == 0,
            residual: ring_residual as f64,
            tolerance: 0.5,
            detail: format!(
                "N_f N_g = sum_e c_fg^e N_e exactly over {dim}x{dim} integer matrices, all pairs"
            ),
        };
        let comm = CheckResult {
            name: "commutativity_associativity".to_string(),
            passed: ring_residual == 0 && comm_residual == 0,
            residual: (ring_residual.max(comm_residual)) as f64,
            tolerance: 0.5,
            detail: format!(
                "f x g = g x f for all {} pairs; bracketings of all {} triples agree through the action matrices",
                dim * dim,
                dim * dim * dim
            ),
        };
        (ring, comm)
    }

    fn check_k0(&self) -> CheckResult {
        let name = "k0_consistency";
        match k0_square(&self.ctx) {
            Ok(k0) => CheckResult::measured(
                name,
                k0.abs_diff,
                CONSISTENCY_TOL,
                format!(
                    "C^2 = {:.9} against paired character sum {:.9} over {} terms",
                    k0.c_squared,
                    k0.paired_sum,
                    k0.decomposition.len()
                ),
            ),
            Err(e) => CheckResult::failed(name, CONSISTENCY_TOL, e.to_string()),
        }
    }

    fn run(&self) -> VerifyReport {
        let (ring, comm) = self.check_pairwise();
        let checks = vec![
            self.check_route_agreement(),
            self.check_perron_frobenius(),
            self.check_boundary_vanishing(),
            self.check_basis_property(),
            ring,
            self.check_k0(),
            comm,
        ];
        VerifyReport {
            n: self.ctx.n(),
            level: self.ctx.level(),
            passed: checks.iter().all(|c| c.passed),
            checks,
        }
    }
}

/// Run every verification check for one context. Failures are carried in the
/// report, not returned as errors.
pub fn verify_suite(ctx: &LevelContext) -> VerifyReport {
    match VerifyData::build(ctx) {
        Ok(data) => data.run(),
        Err(e) => VerifyReport::broken(ctx, &e),
    }
}

/// The default verification grid: N in 1..=3, level in 1..=4, with N = 3
/// capped at level 3.
pub fn default_grid() -> Vec<(usize, i64)> {
    let mut cells = Vec::new();
    for n in 1..=3usize {
        let max_level = if n == 3 { 3 } else { 4 };
        for level in 1..=max_level {
            cells.push((n, level));
        }
    }
    cells
}

/// Aggregated report over a grid of cells.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct GridReport {
    pub cells: Vec<VerifyReport>,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub warning: Option<String>,
}

/// Run [`verify_suite`] for every cell, in parallel. An empty grid passes
/// vacuously, with a warning recorded in the report.
pub fn run_grid_verify(cells: &[(usize, i64)]) -> Result<GridReport> {
    let contexts: Vec<LevelContext> = cells
        .iter()
        .map(|&(n, level)| LevelContext::new(n, level))
        .collect::<Result<_>>()?;
    let reports: Vec<VerifyReport> = contexts.par_iter().map(verify_suite).collect();
    let passed = reports.iter().all(|r| r.passed);
    Ok(GridReport {
        passed,
        warning: if reports.is_empty() {
            Some("empty verification grid: passing vacuously".to_string())
        } else {
            None
        },
        cells: reports,
    })
}
