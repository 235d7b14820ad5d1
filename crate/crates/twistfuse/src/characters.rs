//! Numerical character evaluation at the special diagonal points, quantum
//! dimensions, classical dimension formulas, and closed-form diagnostics.
//!
//! The evaluation point attached to a label g is the diagonal symplectic
//! matrix with eigenvalue pairs exp(+-2 pi i x_i) where
//!
//! ```text
//! x_i = (g_i + N + 1/2 - i) / (2N + level),   i = 1..N
//! ```
//!
//! kept as exact rationals. The x_i are strictly decreasing inside (0, 1/2),
//! so all 2N eigenvalues are distinct and neither character denominator can
//! vanish. Characters are evaluated straight from the Weyl alternant
//! formulas: a pivoted determinant for the numerator over an exact product
//! denominator. Because the eigenvalue multiset is closed under inversion,
//! every value is real up to rounding noise; [`CharValue`] carries the
//! tolerance that the imaginary part is checked against.

use std::collections::BTreeMap;

use num::complex::Complex64;
use num::rational::Ratio;
use num::ToPrimitive;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::det_complex;
use crate::sig::{
    enumerate_paired, enumerate_twisted_basis, enumerate_untwisted_basis, GlSignature,
    HalfIntVector, LevelContext, SpSignature,
};
use crate::tol::{ASSERT_TOL, DENOM_MIN};

/// An evaluation point: exact rational angle fractions (in turns, so the
/// eigenvalue is exp(2 pi i x)) together with the label it came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvalPoint {
    angles: Vec<Ratio<i64>>,
    origin: HalfIntVector,
}

impl EvalPoint {
    /// Angle fractions x_1 > ... > x_N.
    pub fn angles(&self) -> &[Ratio<i64>] {
        &self.angles
    }

    pub fn origin(&self) -> &HalfIntVector {
        &self.origin
    }

    pub fn sp_rank(&self) -> usize {
        self.angles.len()
    }

    pub fn gl_rank(&self) -> usize {
        2 * self.angles.len()
    }

    /// Signed angle fractions of all 2N eigenvalues:
    /// x_1, ..., x_N, -x_N, ..., -x_1.
    pub fn gl_angles(&self) -> Vec<Ratio<i64>> {
        let mut out = self.angles.clone();
        out.extend(self.angles.iter().rev().map(|x| -x));
        out
    }

    /// Angle fractions as `num/den` strings, e.g. `"3/10"`.
    pub fn angle_strings(&self) -> Vec<String> {
        self.angles
            .iter()
            .map(|x| format!("{}/{}", x.numer(), x.denom()))
            .collect()
    }
}

/// A character value that is real by symmetry: the imaginary part is kept so
/// it can be checked against `tol`.
#[derive(Clone, Copy, Debug)]
pub struct CharValue {
    value: Complex64,
    tol: f64,
}

impl CharValue {
    fn new(value: Complex64) -> Self {
        CharValue {
            value,
            tol: ASSERT_TOL,
        }
    }

    pub fn complex(&self) -> Complex64 {
        self.value
    }

    pub fn imag_magnitude(&self) -> f64 {
        self.value.im.abs()
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    /// The real part, failing if the imaginary part exceeds the tolerance.
    pub fn real(&self) -> Result<f64> {
        if self.value.im.abs() >= self.tol {
            return Err(Error::Internal(format!(
                "character value {} has imaginary part above {}",
                self.value, self.tol
            )));
        }
        Ok(self.value.re)
    }
}

/// exp(2 pi i r) for an exact rational number of turns, reduced mod 1 before
/// any floating-point arithmetic.
fn unit(r: Ratio<i64>) -> Complex64 {
    let frac = r - r.floor();
    let theta = std::f64::consts::TAU * frac.to_f64().expect("small rational");
    Complex64::new(theta.cos(), theta.sin())
}

/// The evaluation point for a label in the evaluation set.
pub fn eval_point(g: &HalfIntVector, ctx: &LevelContext) -> Result<EvalPoint> {
    // Re-validate so callers cannot sneak in vectors from another context.
    let g = HalfIntVector::from_doubled(g.doubled().to_vec(), ctx)?;
    let n = ctx.sp_rank() as i64;
    let two_kappa = 2 * ctx.kappa();
    let angles: Vec<Ratio<i64>> = g
        .doubled()
        .iter()
        .enumerate()
        .map(|(i, &d)| Ratio::new(d + 2 * n - 1 - 2 * i as i64, two_kappa))
        .collect();
    let half = Ratio::new(1, 2);
    let zero = Ratio::new(0, 1);
    let ordered = angles.windows(2).all(|w| w[0] > w[1])
        && angles.first().map(|x| *x < half).unwrap_or(false)
        && angles.last().map(|x| *x > zero).unwrap_or(false);
    if !ordered {
        return Err(Error::Internal(format!(
            "evaluation angles for {} not strictly ordered inside (0, 1/2)",
            g
        )));
    }
    Ok(EvalPoint { angles, origin: g })
}

/// The base point D(0), always a member of the evaluation set.
pub fn base_point(ctx: &LevelContext) -> Result<EvalPoint> {
    eval_point(&HalfIntVector::zero(ctx.sp_rank()), ctx)
}

/// Character of the SU(2N) representation with signature `f` at the point,
/// as the alternant quotient det(z_j^(f_i + 2N - i)) / prod_(i<j)(z_i - z_j).
pub fn chi_gl(f: &GlSignature, pt: &EvalPoint) -> Result<CharValue> {
    let m = pt.gl_rank();
    if f.rank() != m {
        return Err(Error::InvalidSignature(format!(
            "expected {} parts, got {}",
            m,
            f.rank()
        )));
    }
    let angles = pt.gl_angles();
    let exponents: Vec<i64> = f
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p + (m - 1 - i) as i64)
        .collect();
    let mut numerator = Vec::with_capacity(m * m);
    for &e in &exponents {
        for angle in &angles {
            numerator.push(unit(angle * e));
        }
    }
    let det = det_complex(numerator, m);
    let z: Vec<Complex64> = angles.iter().map(|&a| unit(a)).collect();
    let mut denom = Complex64::new(1.0, 0.0);
    for i in 0..m {
        for j in i + 1..m {
            denom *= z[i] - z[j];
        }
    }
    if denom.norm() < DENOM_MIN {
        return Err(Error::Internal(
            "vanishing alternant denominator".to_string(),
        ));
    }
    Ok(CharValue::new(det / denom))
}

/// Character of the Sp(N) representation with signature `h` at the point:
/// det(zeta_j^(h_i + N - i + 1) - zeta_j^-(h_i + N - i + 1)) over the
/// symplectic Weyl denominator.
pub fn psi_sp(h: &SpSignature, pt: &EvalPoint) -> Result<CharValue> {
    let n = pt.sp_rank();
    if h.rank() != n {
        return Err(Error::InvalidSignature(format!(
            "expected {} parts, got {}",
            n,
            h.rank()
        )));
    }
    let exponents: Vec<i64> = h
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p + (n - i) as i64)
        .collect();
    let mut numerator = Vec::with_capacity(n * n);
    for &e in &exponents {
        for angle in pt.angles() {
            numerator.push(unit(angle * e) - unit(-(angle * e)));
        }
    }
    let det = det_complex(numerator, n);
    let zeta: Vec<Complex64> = pt.angles().iter().map(|&a| unit(a)).collect();
    let zeta_inv: Vec<Complex64> = pt.angles().iter().map(|&a| unit(-a)).collect();
    let mut denom = Complex64::new(1.0, 0.0);
    for i in 0..n {
        denom *= zeta[i] - zeta_inv[i];
    }
    for i in 0..n {
        for j in i + 1..n {
            denom *= zeta[i] + zeta_inv[i] - zeta[j] - zeta_inv[j];
        }
    }
    if denom.norm() < DENOM_MIN {
        return Err(Error::Internal(
            "vanishing symplectic denominator".to_string(),
        ));
    }
    Ok(CharValue::new(det / denom))
}

/// Exact dimension of the GL(m) representation with the given signature, by
/// the product formula over shifted part differences.
pub fn weyl_dim_gl(parts: &[i64]) -> i128 {
    let m = parts.len();
    let shifted: Vec<i128> = parts
        .iter()
        .enumerate()
        .map(|(i, &p)| p as i128 + (m - 1 - i) as i128)
        .collect();
    let mut num = 1i128;
    let mut den = 1i128;
    for i in 0..m {
        for j in i + 1..m {
            num *= shifted[i] - shifted[j];
            den *= (j - i) as i128;
        }
    }
    debug_assert_eq!(num % den, 0);
    num / den
}

/// Exact dimension of the Sp(N) representation with the given signature.
pub fn weyl_dim_sp(parts: &[i64]) -> i128 {
    let n = parts.len();
    let shifted: Vec<i128> = parts
        .iter()
        .enumerate()
        .map(|(i, &p)| p as i128 + (n - i) as i128)
        .collect();
    let rho: Vec<i128> = (0..n).map(|i| (n - i) as i128).collect();
    let mut num = 1i128;
    let mut den = 1i128;
    for i in 0..n {
        num *= shifted[i];
        den *= rho[i];
        for j in i + 1..n {
            num *= shifted[i] * shifted[i] - shifted[j] * shifted[j];
            den *= rho[i] * rho[i] - rho[j] * rho[j];
        }
    }
    debug_assert_eq!(num % den, 0);
    num / den
}

/// Quantum dimensions of both bases and the constant relating twisted
/// character values at the base point to twisted quantum dimensions.
#[derive(Clone, Debug)]
pub struct QuantumDims {
    /// d(H_f) = chi_f(D(0)) per untwisted basis signature.
    pub untwisted: BTreeMap<GlSignature, f64>,
    /// d(K_h) = C psi_h(D(0)) per twisted basis signature.
    pub twisted: BTreeMap<SpSignature, f64>,
    /// The normalization constant C > 0, fixed by matching the two sums of
    /// squared quantum dimensions.
    pub c: f64,
}

pub fn quantum_dims(ctx: &LevelContext) -> Result<QuantumDims> {
    let base = base_point(ctx)?;
    let mut untwisted = BTreeMap::new();
    let mut sum_chi_sq = 0.0;
    for f in enumerate_untwisted_basis(ctx) {
        let d = chi_gl(&f, &base)?.real()?;
        if d <= 0.0 {
            return Err(Error::Internal(format!(
                "untwisted quantum dimension for {f} is not positive: {d}"
            )));
        }
        sum_chi_sq += d * d;
        untwisted.insert(f, d);
    }
    let mut psi_at_base = BTreeMap::new();
    let mut sum_psi_sq = 0.0;
    for h in enumerate_twisted_basis(ctx) {
        let v = psi_sp(&h, &base)?.real()?;
        if v <= 0.0 {
            return Err(Error::Internal(format!(
                "twisted character value at the base point for {h} is not positive: {v}"
            )));
        }
        sum_psi_sq += v * v;
        psi_at_base.insert(h, v);
    }
    let c = (sum_chi_sq / sum_psi_sq).sqrt();
    let twisted = psi_at_base.into_iter().map(|(h, v)| (h, c * v)).collect();
    Ok(QuantumDims {
        untwisted,
        twisted,
        c,
    })
}

/// One diagnostic comparison: a directly computed value against a literal
/// evaluation of a printed closed-form product (for the fourth pair, the
/// squared constant against the paired character sum).
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct DiagnosticPair {
    pub name: String,
    pub direct: f64,
    pub closed_form: f64,
    pub abs_diff: f64,
}

impl DiagnosticPair {
    fn new(name: &str, direct: f64, closed_form: f64) -> Self {
        DiagnosticPair {
            name: name.to_string(),
            direct,
            closed_form,
            abs_diff: (direct - closed_form).abs(),
        }
    }
}

/// Diagnostics report; comparisons are recorded, never asserted.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct DiagnosticsReport {
    pub n: usize,
    pub level: i64,
    pub pairs: Vec<DiagnosticPair>,
}

/// Compare directly computed normalization sums against the printed
/// closed-form products, evaluated literally (empty products are 1), and the
/// squared constant against the paired character sum. Known to disagree at
/// small N; the direct sums are the authoritative values everywhere else in
/// the crate.
pub fn closed_form_diagnostics(ctx: &LevelContext) -> Result<DiagnosticsReport> {
    let qd = quantum_dims(ctx)?;
    let base = base_point(ctx)?;
    let n = ctx.sp_rank();
    let kappa = ctx.kappa() as f64;
    let sin_k = |t: f64| (t * std::f64::consts::PI / kappa).sin();

    let sum_chi_sq: f64 = qd.untwisted.values().map(|d| d * d).sum();
    let sum_psi_sq: f64 = qd.twisted.values().map(|d| (d / qd.c) * (d / qd.c)).sum();

    // Untwisted closed form:
    // (2N)^(-1/2) kappa^(-N + 1/2) 2^(N(2N-1)) prod_{1<=i<j<=2N-1} sin((j-i) pi / kappa)
    let mut untwisted_closed = (2.0 * n as f64).powf(-0.5)
        * kappa.powf(-(n as f64) + 0.5)
        * 2f64.powi((n * (2 * n - 1)) as i32);
    for i in 1..=(2 * n - 1) {
        for j in (i + 1)..=(2 * n - 1) {
            untwisted_closed *= sin_k((j - i) as f64);
        }
    }

    // Twisted closed form:
    // kappa^(-N/2) 2^(N^2) prod_{i in 1/2+Z, 0<i<N} sin(2 i pi / kappa)
    //   prod_{i<j in 1/2+Z, 0<i,j<N} sin((i+j) pi / kappa) sin((j-i) pi / kappa)
    let halves: Vec<f64> = (0..n).map(|k| k as f64 + 0.5).collect();
    let mut twisted_closed = kappa.powf(-(n as f64) / 2.0) * 2f64.powi((n * n) as i32);
    for &i in &halves {
        twisted_closed *= sin_k(2.0 * i);
    }
    for a in 0..halves.len() {
        for b in (a + 1)..halves.len() {
            twisted_closed *= sin_k(halves[a] + halves[b]) * sin_k(halves[b] - halves[a]);
        }
    }

    // Closed form for 1/C:
    // (2N)^(1/2) kappa^((N-1)/2) 2^(-N(N-1))
    //   prod_{1<=2k+1<2N} sin^(k+1)((2k+1) pi / kappa)
    //   prod_{k=1}^{N-1} sin^(N-k)(k pi / kappa)
    //   / prod_{k=1}^{2N-2} sin^(2N-k-1)(k pi / kappa)
    let mut c_inv_closed = (2.0 * n as f64).powf(0.5)
        * kappa.powf((n as f64 - 1.0) / 2.0)
        * 2f64.powi(-((n * (n - 1)) as i32));
    for k in 0.. {
        let odd = 2 * k + 1;
        if odd >= 2 * n {
            break;
        }
        c_inv_closed *= sin_k(odd as f64).powi(k as i32 + 1);
    }
    for k in 1..n {
        c_inv_closed *= sin_k(k as f64).powi((n - k) as i32);
    }
    for k in 1..=(2 * n).saturating_sub(2) {
        c_inv_closed /= sin_k(k as f64).powi((2 * n - k - 1) as i32);
    }

    let paired_sum: f64 = enumerate_paired(ctx)
        .iter()
        .map(|f| chi_gl(f, &base).and_then(|v| v.real()))
        .sum::<Result<f64>>()?;

    Ok(DiagnosticsReport {
        n: ctx.n(),
        level: ctx.level(),
        pairs: vec![
            DiagnosticPair::new(
                "untwisted_sum_inverse_sqrt",
                sum_chi_sq.powf(-0.5),
                untwisted_closed,
            ),
            DiagnosticPair::new(
                "twisted_sum_inverse_sqrt",
                sum_psi_sq.powf(-0.5),
                twisted_closed,
            ),
            DiagnosticPair::new("c_inverse", 1.0 / qd.c, c_inv_closed),
            DiagnosticPair::new("k0_square_consistency", qd.c * qd.c, paired_sum),
        ],
    })
}

/// All twisted signatures sitting exactly on the vanishing wall
/// h_1 + h_2 = level + 1 (h_2 read as 0 when N = 1).
pub fn wall_signatures(ctx: &LevelContext) -> Vec<SpSignature> {
    let n = ctx.sp_rank();
    let target = ctx.level() + 1;
    let mut out = Vec::new();
    if n == 1 {
        out.push(SpSignature::new(vec![target]).expect("valid"));
        return out;
    }
    // h_1 >= h_2 with h_1 + h_2 = target, then arbitrary dominant tails.
    let mut h2 = 0;
    while 2 * h2 <= target {
        let h1 = target - h2;
        for tail in dominant_tails(n - 2, h2) {
            let mut parts = vec![h1, h2];
            parts.extend(tail);
            out.push(SpSignature::new(parts).expect("valid"));
        }
        h2 += 1;
    }
    out
}

fn dominant_tails(len: usize, bound: i64) -> Vec<Vec<i64>> {
    fn rec(out: &mut Vec<Vec<i64>>, cur: &mut Vec<i64>, len: usize, bound: i64) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for v in 0..=bound {
            cur.push(v);
            rec(out, cur, len, v);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut out, &mut Vec::new(), len, bound);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sig::enumerate_eval_set;

    fn ctx(n: usize, level: i64) -> LevelContext {
        LevelContext::new(n, level).unwrap()
    }

    fn gl(parts: &[i64]) -> GlSignature {
        GlSignature::new(parts.to_vec()).unwrap()
    }

    fn sp(parts: &[i64]) -> SpSignature {
        SpSignature::new(parts.to_vec()).unwrap()
    }

    fn point(ctx: &LevelContext, doubled: &[i64]) -> EvalPoint {
        eval_point(
            &HalfIntVector::from_doubled(doubled.to_vec(), ctx).unwrap(),
            ctx,
        )
        .unwrap()
    }

    #[test]
    fn eval_point_examples() {
        let pt = point(&ctx(1, 1), &[0]);
        assert_eq!(pt.angles(), &[Ratio::new(1, 6)]);

        let pt = point(&ctx(2, 1), &[0, 0]);
        assert_eq!(pt.angles(), &[Ratio::new(3, 10), Ratio::new(1, 10)]);

        let pt = point(&ctx(2, 1), &[1, 1]);
        assert_eq!(pt.angles(), &[Ratio::new(2, 5), Ratio::new(1, 5)]);
    }

    #[test]
    fn chi_examples() {
        let c = ctx(1, 1);
        let base = base_point(&c).unwrap();
        assert!((chi_gl(&gl(&[0, 0]), &base).unwrap().real().unwrap() - 1.0).abs() < 1e-12);
        // 2 cos(pi/3) = 1.
        assert!((chi_gl(&gl(&[1, 0]), &base).unwrap().real().unwrap() - 1.0).abs() < 1e-12);

        let c = ctx(2, 1);
        let base = base_point(&c).unwrap();
        assert!((chi_gl(&gl(&[1, 1, 0, 0]), &base).unwrap().real().unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn psi_examples() {
        let c = ctx(2, 1);
        let pt = point(&c, &[1, 1]);
        assert!((psi_sp(&sp(&[0, 0]), &pt).unwrap().real().unwrap() - 1.0).abs() < 1e-12);
        // 2 cos(4 pi/5) + 2 cos(2 pi/5) = -1.
        assert!((psi_sp(&sp(&[1, 0]), &pt).unwrap().real().unwrap() + 1.0).abs() < 1e-12);

        // On the wall h_1 + h_2 = level + 1 the character vanishes.
        let c = ctx(1, 1);
        let base = base_point(&c).unwrap();
        assert!(psi_sp(&sp(&[2]), &base).unwrap().real().unwrap().abs() < 1e-12);
    }

    #[test]
    fn characters_are_real_on_the_full_grid() {
        for n in 1..=3usize {
            for level in 1..=4i64 {
                let c = ctx(n, level);
                let points: Vec<EvalPoint> = enumerate_eval_set(&c)
                    .iter()
                    .map(|g| eval_point(g, &c).unwrap())
                    .collect();
                for pt in &points {
                    for f in enumerate_untwisted_basis(&c) {
                        assert!(chi_gl(&f, pt).unwrap().imag_magnitude() < ASSERT_TOL);
                    }
                    for h in enumerate_twisted_basis(&c) {
                        assert!(psi_sp(&h, pt).unwrap().imag_magnitude() < ASSERT_TOL);
                    }
                }
            }
        }
    }

    /// Constant shifts of the signature leave the value unchanged (the
    /// evaluation points have determinant one).
    #[test]
    fn chi_is_normalization_invariant() {
        for (n, level) in [(1usize, 3i64), (2, 1), (2, 2)] {
            let c = ctx(n, level);
            for g in enumerate_eval_set(&c) {
                let pt = eval_point(&g, &c).unwrap();
                for f in enumerate_untwisted_basis(&c) {
                    let shifted = gl(&f.parts().iter().map(|p| p + 2).collect::<Vec<_>>());
                    let a = chi_gl(&shifted, &pt).unwrap().real().unwrap();
                    let b = chi_gl(&f, &pt).unwrap().real().unwrap();
                    assert!((a - b).abs() < ASSERT_TOL, "f={f} at D({g})");
                }
            }
        }
    }

    /// For N = 1 both characters reduce to the same sine ratio.
    #[test]
    fn rank_one_closed_form() {
        for level in 1..=4i64 {
            let c = ctx(1, level);
            for g in enumerate_eval_set(&c) {
                let pt = eval_point(&g, &c).unwrap();
                let theta = std::f64::consts::TAU * pt.angles()[0].to_f64().unwrap();
                for a in 0..=level {
                    let expected = ((a + 1) as f64 * theta).sin() / theta.sin();
                    let chi = chi_gl(&gl(&[a, 0]), &pt).unwrap().real().unwrap();
                    let psi = psi_sp(&sp(&[a]), &pt).unwrap().real().unwrap();
                    assert!((chi - expected).abs() < ASSERT_TOL, "chi a={a}");
                    assert!((psi - expected).abs() < ASSERT_TOL, "psi a={a}");
                }
            }
        }
    }

    #[test]
    fn weyl_dims() {
        assert_eq!(weyl_dim_gl(&[0, 0, 0, 0]), 1);
        assert_eq!(weyl_dim_gl(&[1, 0, 0, 0]), 4);
        assert_eq!(weyl_dim_gl(&[1, 1, 0, 0]), 6);
        assert_eq!(weyl_dim_gl(&[2, 1, 0, 0]), 20);
        assert_eq!(weyl_dim_sp(&[0, 0]), 1);
        assert_eq!(weyl_dim_sp(&[1, 0]), 4);
        assert_eq!(weyl_dim_sp(&[1, 1]), 5);
        assert_eq!(weyl_dim_sp(&[2, 0]), 10);
        assert_eq!(weyl_dim_sp(&[2, 1]), 16);
    }

    #[test]
    fn quantum_dims_anchors() {
        let qd = quantum_dims(&ctx(1, 1)).unwrap();
        for d in qd.untwisted.values().chain(qd.twisted.values()) {
            assert!((d - 1.0).abs() < ASSERT_TOL);
        }
        assert!((qd.c - 1.0).abs() < ASSERT_TOL);

        let qd = quantum_dims(&ctx(2, 1)).unwrap();
        assert_eq!(qd.untwisted.len(), 4);
        for d in qd.untwisted.values() {
            assert!((d - 1.0).abs() < ASSERT_TOL);
        }
        let sqrt2 = 2f64.sqrt();
        assert_eq!(qd.twisted.len(), 2);
        for d in qd.twisted.values() {
            assert!((d - sqrt2).abs() < ASSERT_TOL);
        }
        assert!((qd.c - sqrt2).abs() < ASSERT_TOL);
    }

    #[test]
    fn diagnostics_record_known_rank_one_discrepancy() {
        let report = closed_form_diagnostics(&ctx(1, 1)).unwrap();
        let untwisted = &report.pairs[0];
        // Direct: 1/sqrt(2). Literal printed product: 2/sqrt(6).
        assert!((untwisted.direct - 0.5f64.sqrt()).abs() < 1e-5);
        assert!((untwisted.closed_form - 2.0 / 6f64.sqrt()).abs() < 1e-5);
        // The consistency pair agrees everywhere.
        let k0 = &report.pairs[3];
        assert!(k0.abs_diff < 1e-9);
    }

    #[test]
    fn wall_signatures_vanish_on_every_point() {
        for n in 1..=3usize {
            for level in 1..=3i64 {
                let c = ctx(n, level);
                for h in wall_signatures(&c) {
                    assert_eq!(h.top_two(), level + 1);
                    for g in enumerate_eval_set(&c) {
                        let pt = eval_point(&g, &c).unwrap();
                        let v = psi_sp(&h, &pt).unwrap();
                        assert!(
                            v.complex().norm() < ASSERT_TOL,
                            "psi_{h} at D({g}) = {}",
                            v.complex()
                        );
                    }
                }
            }
        }
    }
}
