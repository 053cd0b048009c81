//! Bounds obtained by feeding specific arguments into `F`, `G` and `H`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::binomial::trunc_binomial;
use super::functions::eval_g;
use super::hilbert::{eval_h, HilbertCoefficients};
use super::BoundError;

fn inner_sum(len: usize, x: &[BigInt], top: usize) -> BigInt {
    // sum_{l=0}^{len} binom(len, l) x[top - l]
    (0..=len)
        .map(|l| trunc_binomial(&BigInt::from(len), &BigInt::from(l)) * &x[top - l])
        .sum()
}

fn check_caps(i: i64, x: &[BigInt]) -> Result<usize, BoundError> {
    if i < 0 {
        return Err(BoundError::InvalidArgument(format!("i must be >= 0, got {i}")));
    }
    let i = i as usize;
    if x.len() != i + 1 {
        return Err(BoundError::InvalidArgument(format!(
            "expected {} caps x_0..x_{i}, got {}",
            i + 1,
            x.len()
        )));
    }
    if x.iter().any(Signed::is_negative) {
        return Err(BoundError::InvalidArgument("caps must be nonnegative".into()));
    }
    Ok(i)
}

/// Upper bound for `length(K^{i+1}(M)_n)`, `n >= i`, where `x[k]` caps
/// `d^k_M(-k)`.
pub fn lemma33_bound(i: i64, n: i64, x: &[BigInt]) -> Result<BigInt, BoundError> {
    let iu = check_caps(i, x)?;
    if n < i {
        return Err(BoundError::InvalidArgument(format!("need n >= i, got n = {n}, i = {i}")));
    }
    Ok((0..=iu)
        .map(|j| {
            let outer = trunc_binomial(&BigInt::from(n - j as i64 - 1), &BigInt::from(iu - j));
            outer * inner_sum(iu - j, x, iu)
        })
        .sum())
}

/// Upper bound for `d^i_M(n)`, `n <= -i`, in terms of the diagonal caps.
pub fn diagonal_cohomology_bound(i: i64, n: i64, x: &[BigInt]) -> Result<BigInt, BoundError> {
    let iu = check_caps(i, x)?;
    if n > -i {
        return Err(BoundError::InvalidArgument(format!("need n <= -i, got n = {n}, i = {i}")));
    }
    Ok((0..=iu)
        .map(|j| {
            let outer = trunc_binomial(&BigInt::from(-n - j as i64 - 1), &BigInt::from(iu - j));
            outer * inner_sum(iu - j, x, iu)
        })
        .sum())
}

fn require_positive(name: &str, v: &BigInt) -> Result<(), BoundError> {
    if v.is_positive() {
        Ok(())
    } else {
        Err(BoundError::InvalidArgument(format!("{name} must be >= 1, got {v}")))
    }
}

/// `G^i_d(binom(m+r-1, r-1) lambda, 0, r)`: bound for ideals in terms of
/// `reg^2`, for a ring generated by `m` linear forms.
pub fn gamma_ideal_bound(i: i64, d: i64, m: &BigInt, r: &BigInt, lambda: &BigInt) -> Result<BigInt, BoundError> {
    require_positive("m", m)?;
    require_positive("r", r)?;
    require_positive("lambda", lambda)?;
    let u = trunc_binomial(&(m + r - 1), &(r - 1)) * lambda;
    eval_g(i, d, &u, &BigInt::zero(), r)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubmoduleGendegBound {
    pub rho: BigInt,
    pub pi: BigInt,
    pub delta: BigInt,
}

fn two_pow_minus(d: i64, minus: u32) -> Result<u32, BoundError> {
    if !(1..=30).contains(&d) {
        return Err(BoundError::InvalidArgument(format!("d = {d} outside 1..=30")));
    }
    Ok((1u32 << d) - minus)
}

/// Bound for submodules of an `m`-generated module `U` with `beg(U) = b`
/// and `reg(U) < r`, in terms of the generating degree:
/// `rho = (r + (m+1) lambda - b)^(2^d - 1)`,
/// `pi = m binom(d+rho-1, rho-1) lambda`, `delta = G^i_d(pi, b, rho + b)`.
pub fn submodule_gendeg_bound(
    i: i64,
    d: i64,
    m: &BigInt,
    lambda: &BigInt,
    b: &BigInt,
    r: &BigInt,
) -> Result<SubmoduleGendegBound, BoundError> {
    require_positive("m", m)?;
    require_positive("lambda", lambda)?;
    if r <= b {
        return Err(BoundError::InvalidArgument(format!("need r > b, got r = {r}, b = {b}")));
    }
    let exp = two_pow_minus(d, 1)?;
    let base = r + (m + 1) * lambda - b;
    let rho = num_traits::pow(base, exp as usize);
    let pi = m * trunc_binomial(&(&rho + d - 1), &(&rho - 1)) * lambda;
    let delta = eval_g(i, d, &pi, b, &(&rho + b))?;
    Ok(SubmoduleGendegBound { rho, pi, delta })
}

/// Bound from the discrete data of a presentation `F -> N` with `F` free of
/// rank `m`: `r = max{gendeg(F) + 1, gendeg(ker)}` and then the submodule bound
/// with `b = beg(F)`.
pub fn presentation_bound(
    i: i64,
    d: i64,
    m: &BigInt,
    lambda: &BigInt,
    beg_f: &BigInt,
    gendeg_f: &BigInt,
    gendeg_ker: &BigInt,
) -> Result<BigInt, BoundError> {
    let r = BigInt::max(gendeg_f + 1, gendeg_ker.clone());
    Ok(submodule_gendeg_bound(i, d, m, lambda, beg_f, &r)?.delta)
}

/// Bound for ideals of positive height in terms of their generating degree
/// `g`: `r = (g (1 + lambda))^(2^d - 2)` and `gamma = G^i_d(binom(d+r-1, r-1) lambda, 0, r)`.
/// Returns `(r, gamma)`.
pub fn ideal_gendeg_bound(i: i64, d: i64, g: &BigInt, lambda: &BigInt) -> Result<(BigInt, BigInt), BoundError> {
    if d <= 1 || i <= 1 {
        return Err(BoundError::InvalidArgument(format!("need d > 1 and i > 1, got d = {d}, i = {i}")));
    }
    require_positive("gendeg", g)?;
    require_positive("lambda", lambda)?;
    let exp = two_pow_minus(d, 2)?;
    let r = num_traits::pow(g * (BigInt::one() + lambda), exp as usize);
    let u = trunc_binomial(&(&r + d - 1), &(&r - 1)) * lambda;
    let gamma = eval_g(i, d, &u, &BigInt::zero(), &r)?;
    Ok((r, gamma))
}

/// The Mumford-type number `t` together with the two additive offsets it
/// yields for `reg^1(U/M)` and `reg^2(M)` (the caller adds `r`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MumfordT {
    /// The argument vector passed to `H^m_d`.
    pub args: HilbertCoefficients,
    pub t: BigInt,
    pub reg1_offset: BigInt,
    pub reg2_offset: BigInt,
}

/// `t = H^m_d(m lambda - (-1)^h e_{-h}, (-1)^h e_{1-h}, .., (-1)^h e_{d-1-h})`
/// where `e` are the Hilbert coefficients of `L(r)` and `h = d - dim L`.
pub fn mumford_t(m: &BigInt, d: i64, lambda: &BigInt, h: i64, e_l: &HilbertCoefficients) -> Result<MumfordT, BoundError> {
    if d < 2 {
        return Err(BoundError::InvalidArgument(format!("need d >= 2, got {d}")));
    }
    if h < 0 || h > d {
        return Err(BoundError::IndexOutOfRange { i: h, max: d });
    }
    let sign = if h % 2 == 0 { BigInt::one() } else { -BigInt::one() };
    let mut args = Vec::with_capacity(d as usize);
    args.push(m * lambda - &sign * e_l.get(-h));
    for k in 1..d {
        args.push(&sign * e_l.get(k - h));
    }
    let args = HilbertCoefficients::new(args);
    let t = eval_h(m, lambda, &args)?;
    let reg1_offset = BigInt::max(&t - 1, BigInt::zero());
    let reg2_offset = t.clone().max(BigInt::one());
    Ok(MumfordT { args, t, reg1_offset, reg2_offset })
}

/// `G^i_d(p, b, max{1, t} + r)`.
pub fn submodule_mumford_bound(i: i64, d: i64, p: &BigInt, b: &BigInt, t: &BigInt, r: &BigInt) -> Result<BigInt, BoundError> {
    let w = t.clone().max(BigInt::one()) + r;
    eval_g(i, d, p, b, &w)
}

/// `G^i_d(1, 0, max{1, t})`.
pub fn ideal_mumford_bound(i: i64, d: i64, t: &BigInt) -> Result<BigInt, BoundError> {
    let w = t.clone().max(BigInt::one());
    eval_g(i, d, &BigInt::one(), &BigInt::zero(), &w)
}
