//! Brute-force definitional semantics on small prime-field universes.
//!
//! Every function here recomputes a defining condition element by
//! element, with no use of the level-chain representation or the
//! subspace lattice. These are the independent referees that the
//! structural algorithms are checked against: slow, obvious, and
//! trusting nothing but scalar and vector arithmetic.

use crate::error::{Defect, Error};
use crate::linalg::{LinearMap, Vector};
use crate::mset::{FiniteMSet, Universe};
use crate::scalar::Scalar;

/// Upper bound on coefficient tuples enumerated by
/// [`oracle_multi_indep`].
const TUPLE_BUDGET: u64 = 1 << 20;

/// Exhaustively checks that a count table respects the vector space
/// operations: `count(x+y) >= min(count(x), count(y))` for every pair,
/// `count(lambda*x) >= count(x)` for every scalar, and every nonempty
/// level set closed under both. Returns the first failure as a witness,
/// or `None` when the table is a multi vector space.
pub fn oracle_is_mvspace(m: &FiniteMSet) -> Option<Defect> {
    let u = m.universe();
    let size = u.size();
    for xr in 0..size {
        let x = u.element(xr);
        let cx = m.count_rank(xr);
        for yr in 0..size {
            let y = u.element(yr);
            let cy = m.count_rank(yr);
            if m.count(&x.add(&y)).unwrap() < cx.min(cy) {
                return Some(Defect::Addition { x, y });
            }
        }
        for lambda in u.scalars() {
            if m.count(&x.scale(&lambda)).unwrap() < cx {
                return Some(Defect::Scaling { lambda, x });
            }
        }
    }
    // Implied by the two laws over a field, but the point of an oracle is
    // not to rely on implications.
    for n in 1..=m.omega() {
        let level = m.level_set(n).unwrap();
        for x in &level {
            for y in &level {
                if m.count(&x.add(y)).unwrap() < n {
                    return Some(Defect::LevelNotSubspace { count: n });
                }
            }
            for lambda in u.scalars() {
                if !lambda.is_zero() && m.count(&x.scale(&lambda)).unwrap() < n {
                    return Some(Defect::LevelNotSubspace { count: n });
                }
            }
        }
    }
    None
}

/// The definitional multiset sum: per element, the best
/// `min(count_a(x), count_b(y))` over all decompositions `z = x + y`.
pub fn oracle_sum(a: &FiniteMSet, b: &FiniteMSet) -> Result<FiniteMSet, Error> {
    a.sum(b)
}

/// The definitional image: each codomain point keeps the largest count
/// among its preimages.
pub fn oracle_image(
    m: &FiniteMSet,
    f: &LinearMap,
    codomain: Universe,
) -> Result<FiniteMSet, Error> {
    let u = m.universe();
    if f.field() != u.field() || codomain.field() != u.field() {
        return Err(Error::FieldMismatch(u.field(), f.field()));
    }
    if f.domain_dim() != u.dim() {
        return Err(Error::DimensionMismatch {
            expected: u.dim(),
            got: f.domain_dim(),
        });
    }
    if f.codomain_dim() != codomain.dim() {
        return Err(Error::DimensionMismatch {
            expected: codomain.dim(),
            got: f.codomain_dim(),
        });
    }
    m.image(|x| f.apply(x), codomain)
}

/// Decides multi linear independence by enumerating every nonzero
/// coefficient tuple over GF(p) and checking that each combination's
/// count equals the smallest count on the tuple's support (a vanishing
/// combination means plain linear dependence and also fails).
///
/// Restricted to families with fewer vectors than field elements — the
/// window within which finite-field verdicts are cross-checked against
/// the symbolic route.
pub fn oracle_multi_indep(m: &FiniteMSet, xs: &[Vector]) -> Result<bool, Error> {
    let u = m.universe();
    for x in xs {
        if x.field() != u.field() {
            return Err(Error::FieldMismatch(u.field(), x.field()));
        }
        if x.dim() != u.dim() {
            return Err(Error::DimensionMismatch {
                expected: u.dim(),
                got: x.dim(),
            });
        }
    }
    let p = u.p();
    if xs.len() as u64 >= p {
        return Err(Error::EnumerationWindow { len: xs.len(), p });
    }
    if xs.is_empty() {
        return Ok(true);
    }
    let total = p
        .checked_pow(xs.len() as u32)
        .filter(|&t| t <= TUPLE_BUDGET)
        .ok_or(Error::BudgetExceeded(TUPLE_BUDGET))?;
    let counts: Vec<u32> = xs.iter().map(|x| m.count(x)).collect::<Result<_, _>>()?;
    let mut digits = vec![0u64; xs.len()];
    for _ in 1..total {
        let mut i = 0;
        loop {
            digits[i] += 1;
            if digits[i] < p {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
        let mut combination = Vector::zero(u.field(), u.dim());
        let mut min_count = u32::MAX;
        for (i, &d) in digits.iter().enumerate() {
            if d != 0 {
                let c = Scalar::from_integer(u.field(), d as i64);
                combination = combination.add(&xs[i].scale(&c));
                min_count = min_count.min(counts[i]);
            }
        }
        if combination.is_zero() {
            return Ok(false);
        }
        if m.count(&combination)? != min_count {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The multi dimension as defined: the maximum, over all bases of the
/// ambient space, of the summed counts of the basis vectors. Feasible
/// only by exhaustive basis enumeration, so restricted to GF(2) with
/// dimension at most 3.
pub fn oracle_mdim(m: &FiniteMSet) -> Result<u64, Error> {
    let u = m.universe();
    let n = u.dim();
    if u.p() != 2 || n > 3 {
        return Err(Error::BudgetExceeded(u.size().saturating_pow(n as u32)));
    }
    if n == 0 {
        return Ok(0);
    }
    let size = u.size();
    let mut best: Option<u64> = None;
    let mut ranks = vec![0u64; n];
    loop {
        if is_basis_tuple(&u, &ranks) {
            let s: u64 = ranks.iter().map(|&r| m.count_rank(r) as u64).sum();
            best = Some(best.map_or(s, |b| b.max(s)));
        }
        let mut i = 0;
        loop {
            ranks[i] += 1;
            if ranks[i] < size {
                break;
            }
            ranks[i] = 0;
            i += 1;
            if i == n {
                return Ok(best.expect("every universe has at least one basis"));
            }
        }
    }
}

/// Whether the elements at the given ranks are linearly independent,
/// decided by checking every 0/1 subset sum (which over GF(2) is every
/// combination).
fn is_basis_tuple(u: &Universe, ranks: &[u64]) -> bool {
    let n = ranks.len();
    for mask in 1u32..(1 << n) {
        let mut combination = Vector::zero(u.field(), u.dim());
        for (i, &r) in ranks.iter().enumerate() {
            if mask & (1 << i) != 0 {
                combination = combination.add(&u.element(r));
            }
        }
        if combination.is_zero() {
            return false;
        }
    }
    true
}
