use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::binomial::trunc_binomial;
use super::{check_index, BoundError, DiagonalVector};

/// Intermediate numbers of one recursive step `2 <= i <= d-1`, `d >= 3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceStep {
    pub i: usize,
    pub d: usize,
    pub x: Vec<BigInt>,
    pub y: BigInt,
    pub m: BigInt,
    pub n: BigInt,
    pub t: BigInt,
    /// `deltas[j]` for `j = 0..i`.
    pub deltas: Vec<BigInt>,
}

/// Every recursive step taken while evaluating, in the order the steps were
/// first computed (memo hits are not repeated).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RecursionTrace {
    pub steps: Vec<TraceStep>,
}

type MemoKey = (usize, Vec<BigInt>, BigInt);

/// Memoizing evaluator for the family `F^i_d`.
///
/// The memo table lives in the evaluator, so one evaluator per thread (or per
/// evaluation context) is the intended use. Results do not depend on what is
/// already cached.
#[derive(Debug, Default)]
pub struct BoundEvaluator {
    memo: HashMap<MemoKey, BigInt>,
    trace: Option<RecursionTrace>,
}

impl BoundEvaluator {
    pub fn new() -> Self {
        BoundEvaluator::default()
    }

    /// An evaluator that also records a [`RecursionTrace`].
    pub fn traced() -> Self {
        BoundEvaluator { memo: HashMap::new(), trace: Some(RecursionTrace::default()) }
    }

    pub fn take_trace(&mut self) -> Option<RecursionTrace> {
        self.trace.take()
    }

    pub fn cache_len(&self) -> usize {
        self.memo.len()
    }

    /// `F^i_d(diag)` with `d = diag.dim()`.
    pub fn eval(&mut self, i: i64, diag: &DiagonalVector) -> Result<BigInt, BoundError> {
        let i = check_index(i, diag.dim() as i64)?;
        Ok(self.f(i, diag.entries(), diag.basedeg()))
    }

    fn f(&mut self, i: usize, x: &[BigInt], y: &BigInt) -> BigInt {
        let d = x.len();
        debug_assert!(i <= d);
        if i == 0 {
            return -y;
        }
        if i == 1 {
            return first_level(x, y);
        }
        let key = (i, x.to_vec(), y.clone());
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let value = if i == 2 && d == 2 {
            first_level(x, y) + 2
        } else {
            let sums = pairwise_sums(x);
            let m: BigInt = BigInt::max(self.f(i - 1, &sums, y), self.f(i - 1, x, y) + 1) + 1;
            if i == d {
                m
            } else {
                let n = self.f(i, &sums, y);
                let t = m.clone().max(n.clone());
                let deltas: Vec<BigInt> = (0..i).map(|j| delta(i, j, x)).collect();
                let tail: BigInt = deltas
                    .iter()
                    .enumerate()
                    .map(|(j, dl)| {
                        let top = &t - BigInt::from(j + 1);
                        trunc_binomial(&top, &BigInt::from(i - j - 1)) * dl
                    })
                    .sum();
                let value = &t + tail;
                if let Some(trace) = self.trace.as_mut() {
                    trace.steps.push(TraceStep {
                        i,
                        d,
                        x: x.to_vec(),
                        y: y.clone(),
                        m,
                        n,
                        t,
                        deltas,
                    });
                }
                value
            }
        };
        self.memo.insert(key, value.clone());
        value
    }
}

/// `F^1_d`: `1 - y` for `d = 1`, else `max{0, 1-y} + sum_k binom(d-1, k) x_{d-k-2}`.
fn first_level(x: &[BigInt], y: &BigInt) -> BigInt {
    let d = x.len();
    let base = BigInt::one() - y;
    if d == 1 {
        return base;
    }
    let head = base.max(BigInt::zero());
    let tail: BigInt = (0..=d - 2)
        .map(|k| trunc_binomial(&BigInt::from(d - 1), &BigInt::from(k)) * &x[d - k - 2])
        .sum();
    head + tail
}

fn pairwise_sums(x: &[BigInt]) -> Vec<BigInt> {
    x.windows(2).map(|w| &w[0] + &w[1]).collect()
}

/// `Delta_{ij} = sum_{l=0}^{i-j-1} binom(i-j-1, l) x_{i-l-1}`.
fn delta(i: usize, j: usize, x: &[BigInt]) -> BigInt {
    let top = BigInt::from(i - j - 1);
    (0..i - j)
        .map(|l| trunc_binomial(&top, &BigInt::from(l)) * &x[i - l - 1])
        .sum()
}

/// `F^i_d(x_0, .., x_{d-1}, y)`; rejects `i` outside `0..=d`.
pub fn eval_f(i: i64, diag: &DiagonalVector) -> Result<BigInt, BoundError> {
    BoundEvaluator::new().eval(i, diag)
}

/// Like [`eval_f`] but also returns the recursion trace.
pub fn eval_f_traced(i: i64, diag: &DiagonalVector) -> Result<(BigInt, RecursionTrace), BoundError> {
    let mut ev = BoundEvaluator::traced();
    let v = ev.eval(i, diag)?;
    Ok((v, ev.take_trace().unwrap_or_default()))
}

/// `G^i_d(u, v, w) = F^i_d(u, 0, .., 0, v - w) - w`.
pub fn eval_g(i: i64, d: i64, u: &BigInt, v: &BigInt, w: &BigInt) -> Result<BigInt, BoundError> {
    if d < 1 {
        return Err(BoundError::InvalidArgument(format!("G needs d >= 1, got {d}")));
    }
    let mut entries = vec![BigInt::zero(); d as usize];
    entries[0] = u.clone();
    let diag = DiagonalVector::new(entries, v - w)?;
    Ok(eval_f(i, &diag)? - w)
}

/// `E^i_d(x) = -F^{i+1}_d(x, 0)` for `0 <= i <= d-1`.
pub fn eval_e(i: i64, x: &[BigInt]) -> Result<BigInt, BoundError> {
    let d = x.len() as i64;
    check_index(i, d - 1)?;
    let diag = DiagonalVector::new(x.to_vec(), BigInt::zero())?;
    Ok(-eval_f(i + 1, &diag)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(i: i64, x: &[i64], y: i64) -> i64 {
        let v = eval_f(i, &DiagonalVector::from_i64(x, y).unwrap()).unwrap();
        i64::try_from(v).unwrap()
    }

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn hand_values() {
        assert_eq!(f(0, &[1, 2, 3], 5), -5);
        assert_eq!(f(1, &[1], 0), 1);
        assert_eq!(f(1, &[3, 5], 0), 4);
        assert_eq!(f(2, &[1, 0], 0), 4);
        assert_eq!(f(2, &[0, 0, 0], 0), 3);
        assert_eq!(f(3, &[0, 0, 0], 0), 5);
        assert_eq!(f(2, &[2, 0], 0), 5);
    }

    #[test]
    fn out_of_range_index_is_rejected() {
        let diag = DiagonalVector::from_i64(&[0, 0], 0).unwrap();
        assert!(matches!(eval_f(3, &diag), Err(BoundError::IndexOutOfRange { i: 3, max: 2 })));
        assert!(eval_f(-1, &diag).is_err());
        assert!(DiagonalVector::from_i64(&[1, -1], 0).is_err());
    }

    #[test]
    fn g_examples() {
        assert_eq!(eval_g(0, 3, &big(7), &big(4), &big(9)).unwrap(), big(-4));
        assert_eq!(eval_g(1, 1, &big(5), &big(0), &big(3)).unwrap(), big(1));
        assert_eq!(eval_g(1, 2, &big(1), &big(0), &big(1)).unwrap(), big(2));
    }

    #[test]
    fn e_examples() {
        assert_eq!(eval_e(0, &[big(4)]).unwrap(), big(-1));
        assert_eq!(eval_e(1, &[big(2), big(0)]).unwrap(), big(-5));
        assert_eq!(eval_e(1, &[big(0), big(0), big(0)]).unwrap(), big(-3));
        assert!(eval_e(2, &[big(0), big(0)]).is_err());
    }

    #[test]
    fn trace_only_covers_inner_steps() {
        let diag = DiagonalVector::from_i64(&[0, 0, 0], 0).unwrap();
        let (v, trace) = eval_f_traced(2, &diag).unwrap();
        assert_eq!(v, big(3));
        assert_eq!(trace.steps.len(), 1);
        let step = &trace.steps[0];
        assert_eq!((step.m.clone(), step.n.clone(), step.t.clone()), (big(3), big(3), big(3)));
        assert!(step.deltas.iter().all(|d| d == &big(0)));

        let (_, top) = eval_f_traced(3, &diag).unwrap();
        assert_eq!(top.steps.len(), 1);
        let (_, none) = eval_f_traced(2, &DiagonalVector::from_i64(&[1, 2], 0).unwrap()).unwrap();
        assert!(none.steps.is_empty());
    }

    #[test]
    fn memo_is_reused_across_calls() {
        let mut ev = BoundEvaluator::new();
        let diag = DiagonalVector::from_i64(&[1, 2, 3, 4], -1).unwrap();
        let a = ev.eval(3, &diag).unwrap();
        let cached = ev.cache_len();
        assert!(cached > 0);
        assert_eq!(ev.eval(3, &diag).unwrap(), a);
        assert_eq!(ev.cache_len(), cached);
    }
}
