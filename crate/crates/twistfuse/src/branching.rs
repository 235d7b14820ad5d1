//! Tensor-product branching rules for the exterior powers of the vector
//! representation, classically and with level truncation.
//!
//! Classically, tensoring an SU(2N) representation by the k-th exterior
//! power adds a vertical k-strip to the signature; for Sp(N) the rule
//! (due to Sundaram) goes through an intermediate signature reached by
//! adding a vertical p-strip and then removing a vertical q-strip with
//! p + q = k.
//!
//! At level `l` the untwisted rule simply discards terms beyond the wall
//! (a vertical strip can overshoot the untwisted constraint by at most one,
//! landing exactly on the wall where the corresponding term vanishes). The
//! twisted rule needs one genuine affine correction: terms with
//! g_1 + g_2 = l + 1 sit on a wall where the symplectic character vanishes
//! identically on the evaluation set and are dropped, while terms with
//! g_1 + g_2 = l + 2 reflect back to (l + 1 - g_2, l + 1 - g_1, g_3, ...)
//! with sign -1. A vertical strip raises g_1 + g_2 by at most 2, so no
//! deeper orbit can occur.

use crate::error::{Error, Result};
use crate::sig::{
    add_vertical_strips, remove_vertical_strips, FormalCombination, GlSignature, LevelContext,
    SpSignature,
};

fn check_exterior_power(k: usize, ctx: &LevelContext) -> Result<()> {
    if k > ctx.gl_rank() {
        return Err(Error::OutOfRange(format!(
            "exterior power {} out of range 0..={}",
            k,
            ctx.gl_rank()
        )));
    }
    Ok(())
}

/// Classical Pieri rule: the tensor product of `f` with the k-th exterior
/// power, as a multiplicity-free sum of normalized signatures.
pub fn pieri_classical(
    f: &GlSignature,
    k: usize,
    ctx: &LevelContext,
) -> Result<FormalCombination<GlSignature>> {
    check_exterior_power(k, ctx)?;
    if f.rank() != ctx.gl_rank() {
        return Err(Error::InvalidSignature(format!(
            "expected {} parts, got {}",
            ctx.gl_rank(),
            f.rank()
        )));
    }
    let mut out = FormalCombination::new();
    for parts in add_vertical_strips(f.parts(), k, ctx.gl_rank()) {
        let g = GlSignature::new(parts).expect("strip results stay monotone");
        out.add(g.normalized(), 1);
    }
    Ok(out)
}

/// Level-truncated Pieri rule: classical terms that violate the level
/// constraint are dropped. Overshoot lands at most on the wall, so no
/// reflection is ever needed here.
pub fn pieri_level(
    f: &GlSignature,
    k: usize,
    ctx: &LevelContext,
) -> Result<FormalCombination<GlSignature>> {
    if !f.is_level_permissible(ctx) {
        return Err(Error::NotPermissible(format!(
            "untwisted signature {} violates f_1 - f_2N <= {} at {ctx}",
            f,
            ctx.level()
        )));
    }
    let classical = pieri_classical(f, k, ctx)?;
    Ok(classical
        .iter()
        .filter(|(g, _)| g.is_level_permissible(ctx))
        .map(|(g, m)| (g.clone(), m))
        .collect())
}

/// Classical Sundaram rule: the tensor product of the Sp(N) representation
/// `h` with the k-th exterior power of the vector representation of the
/// ambient SU(2N). Multiplicities count the intermediate signatures.
pub fn sundaram_classical(
    h: &SpSignature,
    k: usize,
    ctx: &LevelContext,
) -> Result<FormalCombination<SpSignature>> {
    check_exterior_power(k, ctx)?;
    if h.rank() != ctx.sp_rank() {
        return Err(Error::InvalidSignature(format!(
            "expected {} parts, got {}",
            ctx.sp_rank(),
            h.rank()
        )));
    }
    let mut out = FormalCombination::new();
    for p in 0..=k {
        let q = k - p;
        for mid in add_vertical_strips(h.parts(), p, ctx.sp_rank()) {
            for parts in remove_vertical_strips(&mid, q) {
                out.add(
                    SpSignature::new(parts).expect("strip results stay valid"),
                    1,
                );
            }
        }
    }
    Ok(out)
}

/// Reflection through the affine wall: (g_1, g_2) -> (l + 1 - g_2, l + 1 - g_1)
/// with the remaining parts fixed. Returns `None` when the reflected tuple is
/// not a dominant signature; in that case its shifted exponents collide and
/// the corresponding character vanishes identically, so the term contributes
/// nothing.
fn reflect_once(parts: &[i64], level: i64) -> Option<SpSignature> {
    let mut reflected = parts.to_vec();
    reflected[0] = level + 1 - parts[1];
    reflected[1] = level + 1 - parts[0];
    if reflected[1] < reflected.get(2).copied().unwrap_or(0) || reflected[1] < 0 {
        return None;
    }
    Some(SpSignature::new(reflected).expect("reflected tuple checked dominant"))
}

/// Level-truncated Sundaram rule with the affine-wall correction. Final
/// multiplicities are always nonnegative; a negative total would mean the
/// reflection rule is wrong and is reported as an internal error.
pub fn sundaram_level(
    h: &SpSignature,
    k: usize,
    ctx: &LevelContext,
) -> Result<FormalCombination<SpSignature>> {
    if !h.is_level_permissible(ctx) {
        return Err(Error::NotPermissible(format!(
            "twisted signature {} violates h_1 + h_2 <= {} at {ctx}",
            h,
            ctx.level()
        )));
    }
    let level = ctx.level();
    let mut signed: FormalCombination<SpSignature> = FormalCombination::new();
    for (g, mult) in sundaram_classical(h, k, ctx)?.iter() {
        let wall_coord = g.top_two();
        if wall_coord <= level {
            signed.add(g.clone(), mult);
        } else if wall_coord == level + 1 {
            // On the wall: the character vanishes, the term is dropped.
        } else if wall_coord == level + 2 {
            match reflect_once(g.parts(), level) {
                Some(reflected) => signed.add(reflected, -mult),
                None => {
                    log::warn!(
                        "dropping non-dominant reflection of {} at {ctx} (vanishing orbit)",
                        g
                    );
                }
            }
        } else {
            return Err(Error::Internal(format!(
                "term {} overshoots the wall by more than one reflection at {ctx}",
                g
            )));
        }
    }
    if !signed.all_nonnegative() {
        return Err(Error::Internal(format!(
            "negative multiplicity after reflection for {} x exterior power {} at {ctx}",
            h, k
        )));
    }
    Ok(signed)
}
