//! Exact rational linear algebra: integer lattices in Hermite normal form,
//! span membership, and sign-region enumeration of a subspace under the
//! coordinate hyperplanes.
//!
//! Everything here is exact; no floating point anywhere.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rat::{QVector, Rat};

/// Subgroup of (1/den)Z^m given by an integer basis in row-style Hermite
/// normal form. `basis` rows are the generators scaled by `den`; pivots
/// strictly increase, pivot entries are positive and entries above a pivot
/// are reduced into [0, pivot).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerLattice {
    den: BigInt,
    basis: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
    dim: usize,
}

impl IntegerLattice {
    pub fn zero(dim: usize) -> Self {
        IntegerLattice {
            den: BigInt::one(),
            basis: Vec::new(),
            pivots: Vec::new(),
            dim,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn den(&self) -> &BigInt {
        &self.den
    }

    pub fn integer_rows(&self) -> &[Vec<BigInt>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// The HNF basis as rational vectors (rows divided by `den`).
    pub fn rational_basis(&self) -> Vec<QVector> {
        self.basis
            .iter()
            .map(|row| {
                QVector::new(
                    row.iter()
                        .map(|e| Rat::new(e.clone(), self.den.clone()))
                        .collect(),
                )
            })
            .collect()
    }

    /// Integer coordinates of `v` over the HNF basis, or `None` if `v` is
    /// not in the lattice.
    pub fn member(&self, v: &QVector) -> Result<Option<Vec<BigInt>>> {
        v.check_len(self.dim)?;
        // Scale to the lattice denominator; non-integral entries rule v out.
        let mut w: Vec<BigInt> = Vec::with_capacity(self.dim);
        for q in v.iter() {
            let scaled = q * Rat::from(self.den.clone());
            if !scaled.is_integer() {
                return Ok(None);
            }
            w.push(scaled.to_integer());
        }
        let mut coords = Vec::with_capacity(self.basis.len());
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            let (q, r) = w[p].div_rem(&row[p]);
            if !r.is_zero() {
                return Ok(None);
            }
            for (wi, bi) in w.iter_mut().zip(row) {
                *wi -= &q * bi;
            }
            coords.push(q);
        }
        if w.iter().all(|x| x.is_zero()) {
            Ok(Some(coords))
        } else {
            Ok(None)
        }
    }

    pub fn contains(&self, v: &QVector) -> Result<bool> {
        Ok(self.member(v)?.is_some())
    }

    /// The lattice element with the given integer coordinates.
    pub fn from_coords(&self, coords: &[BigInt]) -> QVector {
        let mut w = vec![BigInt::zero(); self.dim];
        for (c, row) in coords.iter().zip(&self.basis) {
            for (wi, bi) in w.iter_mut().zip(row) {
                *wi += c * bi;
            }
        }
        QVector::new(
            w.into_iter()
                .map(|e| Rat::new(e, self.den.clone()))
                .collect(),
        )
    }
}

/// Hermite normal form of integer rows, in place. Returns (rows, pivots)
/// with zero rows dropped.
fn hnf_rows(mut rows: Vec<Vec<BigInt>>, cols: usize) -> (Vec<Vec<BigInt>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut top = 0;
    for col in 0..cols {
        // Euclid among rows >= top until one nonzero entry remains in col.
        loop {
            let mut best: Option<usize> = None;
            for i in top..rows.len() {
                if !rows[i][col].is_zero() {
                    best = match best {
                        None => Some(i),
                        Some(j) if rows[i][col].abs() < rows[j][col].abs() => Some(i),
                        keep => keep,
                    };
                }
            }
            let Some(b) = best else { break };
            rows.swap(top, b);
            let mut reduced_any = false;
            for i in top + 1..rows.len() {
                if !rows[i][col].is_zero() {
                    let q = rows[i][col].div_floor(&rows[top][col]);
                    for c in 0..cols {
                        let t = &q * &rows[top][c];
                        rows[i][c] -= t;
                    }
                    reduced_any = true;
                }
            }
            if !reduced_any {
                break;
            }
        }
        if top < rows.len() && !rows[top][col].is_zero() {
            if rows[top][col].is_negative() {
                for c in 0..cols {
                    rows[top][c] = -rows[top][c].clone();
                }
            }
            // Reduce entries above the pivot into [0, pivot).
            for i in 0..top {
                let q = rows[i][col].div_floor(&rows[top][col]);
                if !q.is_zero() {
                    for c in 0..cols {
                        let t = &q * &rows[top][c];
                        rows[i][c] -= t;
                    }
                }
            }
            pivots.push(col);
            top += 1;
        }
    }
    rows.truncate(top);
    (rows, pivots)
}

/// The subgroup of Q^m generated by `vectors`, as an HNF lattice scaled by
/// the common denominator. The empty list yields the zero lattice of the
/// given ambient dimension.
pub fn hnf_generate(dim: usize, vectors: &[QVector]) -> Result<IntegerLattice> {
    for v in vectors {
        v.check_len(dim)?;
    }
    if vectors.is_empty() {
        return Ok(IntegerLattice::zero(dim));
    }
    let mut den = BigInt::one();
    for v in vectors {
        for q in v.iter() {
            den = den.lcm(q.denom());
        }
    }
    let rows: Vec<Vec<BigInt>> = vectors
        .iter()
        .map(|v| {
            v.iter()
                .map(|q| (q * Rat::from(den.clone())).to_integer())
                .collect()
        })
        .collect();
    let (basis, pivots) = hnf_rows(rows, dim);
    // Normalize so that equal subgroups get equal representations even when
    // generated at different denominators.
    let mut g = den.clone();
    for row in &basis {
        for e in row {
            g = g.gcd(e);
        }
    }
    let (den, basis) = if g > BigInt::one() {
        (
            &den / &g,
            basis
                .into_iter()
                .map(|row| row.into_iter().map(|e| e / &g).collect())
                .collect(),
        )
    } else {
        (den, basis)
    };
    if basis.is_empty() {
        return Ok(IntegerLattice::zero(dim));
    }
    Ok(IntegerLattice {
        den,
        basis,
        pivots,
        dim,
    })
}

/// Reduced row echelon form over Q, tracking the expression of each reduced
/// row in terms of the input rows. Returns (reduced rows, pivot columns,
/// coordinate rows).
fn rref_tracked(rows: &[QVector], dim: usize) -> (Vec<Vec<Rat>>, Vec<usize>, Vec<Vec<Rat>>) {
    let n = rows.len();
    let mut left: Vec<Vec<Rat>> = rows.iter().map(|r| r.entries().to_vec()).collect();
    let mut right: Vec<Vec<Rat>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Rat::one() } else { Rat::zero() })
                .collect()
        })
        .collect();
    let mut pivots = Vec::new();
    let mut top = 0;
    for col in 0..dim {
        let Some(p) = (top..n).find(|&i| !left[i][col].is_zero()) else {
            continue;
        };
        left.swap(top, p);
        right.swap(top, p);
        let inv = left[top][col].recip();
        for q in left[top].iter_mut() {
            *q *= &inv;
        }
        for q in right[top].iter_mut() {
            *q *= &inv;
        }
        for i in 0..n {
            if i != top && !left[i][col].is_zero() {
                let f = left[i][col].clone();
                for c in 0..dim {
                    let t = &f * &left[top][c];
                    left[i][c] -= t;
                }
                for c in 0..n {
                    let t = &f * &right[top][c];
                    right[i][c] -= t;
                }
            }
        }
        pivots.push(col);
        top += 1;
        if top == n {
            break;
        }
    }
    left.truncate(top);
    right.truncate(top);
    (left, pivots, right)
}

/// Rational coordinates of `v` over an independent `basis`, or `None` if
/// `v` is outside the span. A dependent basis is an invariant violation.
pub fn span_solve(basis: &[QVector], v: &QVector) -> Result<Option<Vec<Rat>>> {
    let dim = v.len();
    for b in basis {
        b.check_len(dim)?;
    }
    let (left, pivots, right) = rref_tracked(basis, dim);
    if left.len() != basis.len() {
        return Err(Error::Invariant("span_solve: dependent basis".into()));
    }
    match express_in_rref(&left, &pivots, &right, v) {
        Some(c) => Ok(Some(c)),
        None => Ok(None),
    }
}

/// Like `span_solve` but accepts a dependent spanning set; returns some
/// rational expression of `v` over it, or `None` if outside the span.
pub fn span_express(spanning: &[QVector], v: &QVector) -> Result<Option<Vec<Rat>>> {
    let dim = v.len();
    for b in spanning {
        b.check_len(dim)?;
    }
    let (left, pivots, right) = rref_tracked(spanning, dim);
    Ok(express_in_rref(&left, &pivots, &right, v))
}

fn express_in_rref(
    left: &[Vec<Rat>],
    pivots: &[usize],
    right: &[Vec<Rat>],
    v: &QVector,
) -> Option<Vec<Rat>> {
    let n = right.first().map_or(0, |r| r.len());
    let mut work: Vec<Rat> = v.entries().to_vec();
    let mut coords = vec![Rat::zero(); n];
    for (i, &p) in pivots.iter().enumerate() {
        let t = work[p].clone();
        if t.is_zero() {
            continue;
        }
        for (w, l) in work.iter_mut().zip(&left[i]) {
            *w -= &t * l;
        }
        for (c, r) in coords.iter_mut().zip(&right[i]) {
            *c += &t * r;
        }
    }
    if work.iter().all(|q| q.is_zero()) {
        Some(coords)
    } else {
        None
    }
}

/// A maximal-dimensional region of a subspace cut by the coordinate
/// hyperplanes, with an exact interior witness.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Sign {
    Pos,
    Zero,
    Neg,
}

impl Sign {
    pub fn of(q: &Rat) -> Sign {
        if q.is_zero() {
            Sign::Zero
        } else if q.is_positive() {
            Sign::Pos
        } else {
            Sign::Neg
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Pos => '+',
            Sign::Zero => '0',
            Sign::Neg => '-',
        }
    }
}

#[derive(Clone, Debug)]
pub struct SignRegion {
    pub signs: Vec<Sign>,
    pub witness: QVector,
}

impl SignRegion {
    /// True when `v`'s sign vector is compatible with this region's closure
    /// (region zeros are wildcards only where forced; a point is covered if
    /// every nonzero sign of `v` matches the region).
    pub fn covers(&self, v: &QVector) -> bool {
        self.signs
            .iter()
            .zip(v.iter())
            .all(|(s, q)| q.is_zero() || *s == Sign::of(q))
    }
}

/// Strict homogeneous feasibility by Fourier-Motzkin elimination. Each
/// constraint `c` demands `c . t > 0`. Returns an exact interior point, or
/// `None` when infeasible.
fn feasible_strict(constraints: &[Vec<Rat>], nvars: usize) -> Option<Vec<Rat>> {
    let mut systems: Vec<Vec<Vec<Rat>>> = Vec::with_capacity(nvars);
    let mut cur: Vec<Vec<Rat>> = constraints.to_vec();
    for k in 0..nvars {
        if cur.iter().any(|c| c.iter().all(|q| q.is_zero())) {
            return None; // derived 0 > 0
        }
        systems.push(cur.clone());
        let mut next: Vec<Vec<Rat>> = Vec::new();
        let mut pos: Vec<&Vec<Rat>> = Vec::new();
        let mut neg: Vec<&Vec<Rat>> = Vec::new();
        for c in &cur {
            if c[k].is_zero() {
                next.push(c.clone());
            } else if c[k].is_positive() {
                pos.push(c);
            } else {
                neg.push(c);
            }
        }
        for p in &pos {
            for n in &neg {
                // a*t_k + P > 0 (a>0), b*t_k + N > 0 (b<0)  =>  a*N - b*P > 0
                let a = &p[k];
                let b = &n[k];
                let comb: Vec<Rat> = (0..nvars)
                    .map(|j| a * &n[j] - b * &p[j])
                    .collect();
                next.push(comb);
            }
        }
        cur = next;
    }
    if !cur.is_empty() {
        return None; // leftover constraints are homogeneous in no variables
    }
    // Back-substitute, always choosing a strictly interior value.
    let mut t = vec![Rat::zero(); nvars];
    let two = Rat::from(BigInt::from(2));
    for k in (0..nvars).rev() {
        let mut lower: Option<Rat> = None;
        let mut upper: Option<Rat> = None;
        for c in &systems[k] {
            if c[k].is_zero() {
                continue;
            }
            let rest: Rat = (k + 1..nvars).map(|j| &c[j] * &t[j]).sum();
            let bound = -rest / c[k].clone();
            if c[k].is_positive() {
                lower = Some(match lower {
                    Some(l) => l.max(bound),
                    None => bound,
                });
            } else {
                upper = Some(match upper {
                    Some(u) => u.min(bound),
                    None => bound,
                });
            }
        }
        t[k] = match (lower, upper) {
            (Some(l), Some(u)) => (l + u) / &two,
            (Some(l), None) => l + Rat::one(),
            (None, Some(u)) => u - Rat::one(),
            (None, None) => Rat::zero(),
        };
    }
    Some(t)
}

/// All full-dimensional sign regions of the span of `basis` relative to the
/// coordinate hyperplane arrangement. Coordinates identically zero on the
/// span carry sign 0 in every region; the zero subspace has no regions.
pub fn sign_regions(basis: &[QVector]) -> Result<Vec<SignRegion>> {
    let dim = match basis.first() {
        Some(b) => b.len(),
        None => return Ok(Vec::new()),
    };
    let (left, _pivots, _right) = rref_tracked(basis, dim);
    let reduced: Vec<QVector> = left.into_iter().map(QVector::new).collect();
    let r = reduced.len();
    if r == 0 {
        return Ok(Vec::new());
    }
    // Functional of coordinate i over span parameters t: f_i(t) = sum_j B[j][i] t_j.
    let functional = |i: usize| -> Vec<Rat> { (0..r).map(|j| reduced[j][i].clone()).collect() };
    let active: Vec<usize> = (0..dim)
        .filter(|&i| (0..r).any(|j| !reduced[j][i].is_zero()))
        .collect();

    let mut out = Vec::new();
    let mut stack: Vec<(usize, Vec<Vec<Rat>>, Vec<Sign>)> = vec![(0, Vec::new(), Vec::new())];
    // Depth-first, + branch before -, for deterministic output order.
    while let Some((depth, cons, signs)) = stack.pop() {
        if depth == active.len() {
            let t = feasible_strict(&cons, r)
                .ok_or_else(|| Error::Invariant("sign_regions: leaf lost feasibility".into()))?;
            let mut witness = QVector::zeros(dim);
            for (j, row) in reduced.iter().enumerate() {
                witness = &witness + &row.scale(&t[j]);
            }
            let mut full = vec![Sign::Zero; dim];
            for (&col, s) in active.iter().zip(&signs) {
                full[col] = *s;
                if Sign::of(&witness[col]) != *s {
                    return Err(Error::Invariant(
                        "sign_regions: witness sign mismatch".into(),
                    ));
                }
            }
            out.push(SignRegion {
                signs: full,
                witness,
            });
            continue;
        }
        let f = functional(active[depth]);
        let neg_f: Vec<Rat> = f.iter().map(|q| -q).collect();
        // Push - first so + is explored first.
        for (c, s) in [(neg_f, Sign::Neg), (f, Sign::Pos)] {
            let mut cons2 = cons.clone();
            cons2.push(c);
            if feasible_strict(&cons2, r).is_some() {
                let mut signs2 = signs.clone();
                signs2.push(s);
                stack.push((depth + 1, cons2, signs2));
            }
        }
    }
    Ok(out)
}

/// Projection attached to a sign region: zero out every coordinate the
/// region marks negative or identically zero, keep the positive ones.
pub fn positive_part_projection(region: &SignRegion, v: &QVector) -> QVector {
    QVector::new(
        region
            .signs
            .iter()
            .zip(v.iter())
            .map(|(s, q)| match s {
                Sign::Pos => q.clone(),
                _ => Rat::zero(),
            })
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;
    use num_traits::ToPrimitive;

    fn qv(entries: &[(i64, i64)]) -> QVector {
        QVector::new(entries.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    #[test]
    fn hnf_half_diagonal() {
        // {(1/2,1/2),(1,1)} collapses to Z*(1/2,1/2)
        let l = hnf_generate(2, &[qv(&[(1, 2), (1, 2)]), qv(&[(1, 1), (1, 1)])]).unwrap();
        assert_eq!(l.den(), &BigInt::from(2));
        assert_eq!(l.integer_rows(), &[vec![BigInt::from(1), BigInt::from(1)]]);
        assert_eq!(l.rank(), 1);
    }

    #[test]
    fn hnf_empty_is_zero_lattice() {
        let l = hnf_generate(3, &[]).unwrap();
        assert_eq!(l.rank(), 0);
        assert!(l.contains(&QVector::zeros(3)).unwrap());
        assert!(!l.contains(&qv(&[(1, 1), (0, 1), (0, 1)])).unwrap());
    }

    #[test]
    fn hnf_rank_two_triangular() {
        let l = hnf_generate(2, &[qv(&[(1, 2), (0, 1)]), qv(&[(0, 1), (1, 1)])]).unwrap();
        assert_eq!(l.rank(), 2);
        assert!(l.contains(&qv(&[(3, 2), (2, 1)])).unwrap());
        assert!(!l.contains(&qv(&[(1, 4), (0, 1)])).unwrap());
    }

    #[test]
    fn member_certificates() {
        let l = hnf_generate(2, &[qv(&[(1, 2), (1, 2)])]).unwrap();
        let c = l.member(&qv(&[(3, 2), (3, 2)])).unwrap().unwrap();
        assert_eq!(c, vec![BigInt::from(3)]);
        assert!(l.member(&qv(&[(1, 2), (1, 1)])).unwrap().is_none());
        let zero = IntegerLattice::zero(2);
        assert_eq!(zero.member(&QVector::zeros(2)).unwrap().unwrap(), vec![]);
    }

    #[test]
    fn hnf_canonical_under_combinations() {
        let a = qv(&[(1, 2), (1, 3)]);
        let b = qv(&[(1, 1), (0, 1)]);
        let combo = &(&a + &a) + &b;
        let l1 = hnf_generate(2, &[a.clone(), b.clone()]).unwrap();
        let l2 = hnf_generate(2, &[a, b, combo]).unwrap();
        assert_eq!(l1, l2);
    }

    #[test]
    fn span_solve_line() {
        let basis = [qv(&[(1, 2), (1, 2)])];
        let c = span_solve(&basis, &qv(&[(1, 3), (1, 3)])).unwrap().unwrap();
        assert_eq!(c, vec![rat(2, 3)]);
        assert!(span_solve(&basis, &qv(&[(1, 1), (0, 1)])).unwrap().is_none());
        assert_eq!(
            span_solve(&[], &QVector::zeros(2)).unwrap().unwrap(),
            Vec::<Rat>::new()
        );
    }

    #[test]
    fn span_solve_rejects_dependent_basis() {
        let basis = [qv(&[(1, 1), (1, 1)]), qv(&[(2, 1), (2, 1)])];
        assert!(span_solve(&basis, &qv(&[(1, 1), (1, 1)])).is_err());
    }

    #[test]
    fn span_express_dependent_ok() {
        let spanning = [qv(&[(1, 1), (1, 1)]), qv(&[(2, 1), (2, 1)])];
        let c = span_express(&spanning, &qv(&[(3, 1), (3, 1)]))
            .unwrap()
            .unwrap();
        let rebuilt = &spanning[0].scale(&c[0]) + &spanning[1].scale(&c[1]);
        assert_eq!(rebuilt, qv(&[(3, 1), (3, 1)]));
    }

    #[test]
    fn sign_regions_antidiagonal_line() {
        let regions = sign_regions(&[qv(&[(1, 1), (-1, 1)])]).unwrap();
        assert_eq!(regions.len(), 2);
        assert_eq!(regions[0].signs, vec![Sign::Pos, Sign::Neg]);
        assert_eq!(regions[1].signs, vec![Sign::Neg, Sign::Pos]);
        for r in &regions {
            for (s, w) in r.signs.iter().zip(r.witness.iter()) {
                assert_eq!(*s, Sign::of(w));
            }
        }
    }

    #[test]
    fn sign_regions_diagonal_line() {
        let regions = sign_regions(&[qv(&[(1, 1), (1, 1)])]).unwrap();
        let signs: Vec<_> = regions.iter().map(|r| r.signs.clone()).collect();
        assert_eq!(
            signs,
            vec![vec![Sign::Pos, Sign::Pos], vec![Sign::Neg, Sign::Neg]]
        );
    }

    #[test]
    fn sign_regions_full_plane_quadrants() {
        let regions =
            sign_regions(&[qv(&[(1, 1), (0, 1)]), qv(&[(0, 1), (1, 1)])]).unwrap();
        assert_eq!(regions.len(), 4);
        let mut seen: Vec<Vec<Sign>> = regions.iter().map(|r| r.signs.clone()).collect();
        seen.sort();
        seen.dedup();
        assert_eq!(seen.len(), 4);
    }

    #[test]
    fn sign_regions_zero_subspace_empty() {
        assert!(sign_regions(&[]).unwrap().is_empty());
        assert!(sign_regions(&[QVector::zeros(2)]).unwrap().is_empty());
    }

    #[test]
    fn sign_regions_with_forced_zero_coordinate() {
        let regions = sign_regions(&[qv(&[(1, 1), (0, 1), (2, 1)])]).unwrap();
        assert_eq!(regions.len(), 2);
        for r in &regions {
            assert_eq!(r.signs[1], Sign::Zero);
            assert!(r.witness[1].is_zero());
        }
    }

    /// Brute-force membership oracle: search integer combinations in a box.
    fn brute_member(gens: &[QVector], v: &QVector, k: i64) -> bool {
        fn rec(gens: &[QVector], acc: &QVector, v: &QVector, k: i64) -> bool {
            match gens.split_first() {
                None => acc == v,
                Some((g, rest)) => (-k..=k).any(|c| {
                    let acc2 = acc + &g.scale(&rat(c, 1));
                    rec(rest, &acc2, v, k)
                }),
            }
        }
        rec(gens, &QVector::zeros(v.len()), v, k)
    }

    #[test]
    fn lattice_member_matches_brute_force() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..40 {
            let m = rng.gen_range(1..=3);
            let ngens = rng.gen_range(0..=2);
            let gens: Vec<QVector> = (0..ngens)
                .map(|_| {
                    QVector::new(
                        (0..m)
                            .map(|_| rat(rng.gen_range(-2..=2), rng.gen_range(1..=3)))
                            .collect(),
                    )
                })
                .collect();
            let l = hnf_generate(m, &gens).unwrap();
            let v = QVector::new(
                (0..m)
                    .map(|_| rat(rng.gen_range(-2..=2), rng.gen_range(1..=3)))
                    .collect(),
            );
            let fast = l.contains(&v).unwrap();
            let slow = brute_member(&gens, &v, 6);
            // The box bound can only miss members, never invent them.
            if slow {
                assert!(fast, "brute force found {v} but lattice membership said no");
            }
            if fast {
                let c = l.member(&v).unwrap().unwrap();
                assert_eq!(l.from_coords(&c), v);
                // Small certificates must be confirmed by brute force.
                if c.iter().all(|x| x.abs().to_i64().map_or(false, |a| a <= 6)) && gens.len() >= l.rank() {
                    // brute force over the original gens may need different
                    // coefficients; just re-check via from_coords above.
                }
            }
        }
    }

    #[test]
    fn sign_region_witnesses_distinct_and_cover_samples() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..25 {
            let m = rng.gen_range(1..=4);
            let nb = rng.gen_range(1..=2);
            let basis: Vec<QVector> = (0..nb)
                .map(|_| {
                    QVector::new(
                        (0..m)
                            .map(|_| rat(rng.gen_range(-2..=2), rng.gen_range(1..=2)))
                            .collect(),
                    )
                })
                .collect();
            let regions = sign_regions(&basis).unwrap();
            let mut sv: Vec<Vec<Sign>> = regions.iter().map(|r| r.signs.clone()).collect();
            sv.sort();
            let before = sv.len();
            sv.dedup();
            assert_eq!(before, sv.len(), "duplicate sign vectors");
            if regions.is_empty() {
                continue;
            }
            for _ in 0..20 {
                let mut p = QVector::zeros(m);
                for b in &basis {
                    p = &p + &b.scale(&rat(rng.gen_range(-3..=3), rng.gen_range(1..=2)));
                }
                assert!(
                    regions.iter().any(|r| r.covers(&p)),
                    "sampled span point {p} not covered by any region closure"
                );
            }
        }
    }
}
