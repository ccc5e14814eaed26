use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::set_system::SetSystem;

/// Checks that `u` (indexed from `t = 1`) can be a graded Helly profile:
/// positive, non-decreasing, `u_t <= t`, and any increase lands on `t`.
pub fn validate_helly_sequence(u: &[usize]) -> Result<()> {
    for (idx, &v) in u.iter().enumerate() {
        let t = idx + 1;
        if v == 0 {
            return Err(Error::Validation(format!(
                "u_{t} = 0 but values must be positive"
            )));
        }
        if v > t {
            return Err(Error::Validation(format!("u_{t} = {v} violates u_t <= t")));
        }
        if idx > 0 {
            let prev = u[idx - 1];
            if v < prev {
                return Err(Error::Validation(format!(
                    "u_{t} = {v} < u_{} = {prev} violates monotonicity",
                    t - 1
                )));
            }
            if v > prev && v != t {
                return Err(Error::Validation(format!(
                    "u_{t} = {v} increases from {prev} without equalling t"
                )));
            }
        }
    }
    Ok(())
}

/// The family `F_k^(i) = {1..u_i} \ {k}` for `i = 1..=len(u)`, `k = 1..=u_i`,
/// on the ground set `{1..max u}` (stored as `0..max u`). Members are ordered
/// by `i`, then `k`, and named `F{i}_{k}`.
pub fn gen_helly_sequence(u: &[usize]) -> Result<SetSystem> {
    validate_helly_sequence(u)?;
    let ground = u.iter().copied().max().unwrap_or(0);
    let mut sets = Vec::new();
    let mut names = Vec::new();
    for (idx, &ui) in u.iter().enumerate() {
        for k in 1..=ui {
            sets.push(Bits::from_indices(ground, (0..ui).filter(|&x| x != k - 1)));
            names.push(format!("F{}_{}", idx + 1, k));
        }
    }
    SetSystem::with_names(ground, sets, names)
}
