use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{BigInt, Rational};
use crate::error::{Error, Result};
use crate::operator::ShiftOperator;
use crate::poly::{FieldElement, Polynomial};

/// Basis of the right nullspace of `rows`, by exact Gauss-Jordan
/// elimination. Vectors are ordered by their free column, so the first one
/// has the smallest largest support index.
pub fn nullspace(mut rows: Vec<Vec<Rational>>, ncols: usize) -> Vec<Vec<Rational>> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for v in rows[r].iter_mut() {
            *v = &*v * &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (v, pv) in row.iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *v = &*v - &(&f * pv);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    (0..ncols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![Rational::zero(); ncols];
            v[free] = Rational::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -rows[row][free].clone();
            }
            v
        })
        .collect()
}

fn to_primitive_integers(v: &[Rational]) -> Vec<BigInt> {
    let l = v.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let ints: Vec<BigInt> = v
        .iter()
        .map(|q| (q * Rational::from_integer(l.clone())).to_integer())
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, n| acc.gcd(n));
    ints.into_iter().map(|n| n / &g).collect()
}

/// Smallest operator `sum_{i<=J} a_i(k) σ^i` with `J <= max_order` and
/// `deg a_i <= max_deg` annihilating `terms`, searching by order and then
/// degree. Coefficients come out as coprime integers with a positive leading
/// coefficient of `a_J`.
pub fn guess_annihilator(
    terms: &[Rational],
    max_order: usize,
    max_deg: usize,
) -> Result<Option<ShiftOperator>> {
    let needed = (max_order + 1) * (max_deg + 2) + max_order;
    if terms.len() < needed {
        return Err(Error::InsufficientTerms {
            needed,
            got: terms.len(),
        });
    }
    for order in 1..=max_order {
        for deg in 0..=max_deg {
            if let Some(op) = try_shape(terms, order, deg) {
                return Ok(Some(op));
            }
        }
    }
    Ok(None)
}

fn try_shape(terms: &[Rational], order: usize, deg: usize) -> Option<ShiftOperator> {
    let ncols = (order + 1) * (deg + 1);
    let rows: Vec<Vec<Rational>> = (0..terms.len() - order)
        .map(|k| {
            let kq = Rational::from_integer(BigInt::from(k));
            let mut row = Vec::with_capacity(ncols);
            for i in 0..=order {
                let mut pw = terms[k + i].clone();
                for _ in 0..=deg {
                    row.push(pw.clone());
                    pw = &pw * &kq;
                }
            }
            row
        })
        .collect();
    let basis = nullspace(rows, ncols);
    let v = basis.into_iter().next()?;
    let mut ints = to_primitive_integers(&v);
    let chunks: Vec<&[BigInt]> = ints.chunks(deg + 1).collect();
    let top = chunks
        .iter()
        .rposition(|c| c.iter().any(|n| !n.is_zero()))?;
    let lead = chunks[top].iter().rev().find(|n| !n.is_zero())?.clone();
    if lead.is_negative() {
        ints.iter_mut().for_each(|n| *n = -n.clone());
    }
    let coeffs = ints
        .chunks(deg + 1)
        .take(top + 1)
        .map(|c| Polynomial::new(c.iter().cloned().map(FieldElement::from).collect()))
        .collect();
    let op = ShiftOperator::new(coeffs).ok()?;
    let check: Vec<FieldElement> = terms.iter().cloned().map(FieldElement::from).collect();
    debug_assert!(op.annihilates(&check));
    Some(op)
}
