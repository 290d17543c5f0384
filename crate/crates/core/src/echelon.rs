//! Sparse row echelon forms for the large coefficient systems of the
//! cohomology computations.
//!
//! Rows are inserted one at a time and reduced against the pivot rows
//! already present, so sparse rows stay sparse. Over `Q` every row is kept
//! as a primitive integer vector and combined without division; over `F_p`
//! rows hold residues.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::field::{Field, Scalar};
use crate::matrix::Matrix;

type Row<E> = Vec<(usize, E)>;

/// Pivot rows keyed by their leading column.
pub(crate) struct Echelon {
    field: Field,
    pivots: BTreeMap<usize, Row<Scalar>>,
}

fn insert_all<E>(
    rows: Vec<Row<E>>,
    eliminate: impl Fn(&Row<E>, &Row<E>) -> Row<E>,
) -> BTreeMap<usize, Row<E>> {
    let mut pivots: BTreeMap<usize, Row<E>> = BTreeMap::new();
    for mut row in rows {
        while let Some(&(c, _)) = row.first() {
            match pivots.get(&c) {
                Some(p) => row = eliminate(p, &row),
                None => {
                    pivots.insert(c, row);
                    break;
                }
            }
        }
    }
    pivots
}

/// `a * row - b * pivot`, dropping zeros.
fn combine<E: Clone>(
    row: &Row<E>,
    pivot: &Row<E>,
    scale_row: impl Fn(&E) -> E,
    scale_pivot: impl Fn(&E) -> E,
    sub: impl Fn(E, E) -> E,
    neg: impl Fn(E) -> E,
    is_zero: impl Fn(&E) -> bool,
) -> Row<E> {
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot.len() {
        let ci = row.get(i).map_or(usize::MAX, |x| x.0);
        let cj = pivot.get(j).map_or(usize::MAX, |x| x.0);
        let (c, v) = if ci < cj {
            i += 1;
            (ci, scale_row(&row[i - 1].1))
        } else if cj < ci {
            j += 1;
            (cj, neg(scale_pivot(&pivot[j - 1].1)))
        } else {
            i += 1;
            j += 1;
            (ci, sub(scale_row(&row[i - 1].1), scale_pivot(&pivot[j - 1].1)))
        };
        if !is_zero(&v) {
            out.push((c, v));
        }
    }
    out
}

fn integer_rows(m: &Matrix<Scalar>) -> Vec<Row<BigInt>> {
    (0..m.rows())
        .map(|i| {
            let row = m.row(i);
            let mut lcm = BigInt::one();
            for s in row.iter().filter(|s| !s.is_zero()) {
                lcm = lcm.lcm(&s.as_fraction().1);
            }
            let mut out: Row<BigInt> = row
                .iter()
                .enumerate()
                .filter(|(_, s)| !s.is_zero())
                .map(|(j, s)| {
                    let (n, d) = s.as_fraction();
                    (j, n * (&lcm / d))
                })
                .collect();
            make_primitive(&mut out);
            out
        })
        .collect()
}

fn make_primitive(row: &mut Row<BigInt>) {
    let mut g = BigInt::zero();
    for (_, v) in row.iter() {
        g = g.gcd(v);
        if g.is_one() {
            return;
        }
    }
    if !g.is_zero() {
        for (_, v) in row.iter_mut() {
            *v = &*v / &g;
        }
    }
}

fn eliminate_integer(pivot: &Row<BigInt>, row: &Row<BigInt>) -> Row<BigInt> {
    let a = &pivot[0].1;
    let b = &row[0].1;
    let g = a.gcd(b);
    let (a, b) = (a / &g, b / &g);
    let mut out = combine(
        row,
        pivot,
        |x| x * &a,
        |x| x * &b,
        |x, y| x - y,
        |x| -x,
        |x| x.is_zero(),
    );
    make_primitive(&mut out);
    out
}

fn eliminate_mod(p: u64) -> impl Fn(&Row<u64>, &Row<u64>) -> Row<u64> {
    move |pivot, row| {
        let inv = Scalar::Mod {
            value: pivot[0].1,
            modulus: p,
        }
        .inv()
        .expect("pivot is nonzero");
        let Scalar::Mod { value: inv, .. } = inv else { unreachable!() };
        let factor = ((row[0].1 as u128 * inv as u128) % p as u128) as u64;
        combine(
            row,
            pivot,
            |&x| x,
            |&x| ((x as u128 * factor as u128) % p as u128) as u64,
            |x, y| (x + p - y) % p,
            |x| (p - x) % p,
            |&x| x == 0,
        )
    }
}

impl Echelon {
    pub(crate) fn of(m: &Matrix<Scalar>) -> Self {
        let field = m.field();
        let pivots: BTreeMap<usize, Row<Scalar>> = match field {
            Field::Rational => {
                let mut rows = integer_rows(m);
                rows.retain(|r| !r.is_empty());
                rows.sort_by_key(|r| (r[0].0, r.len()));
                insert_all(rows, eliminate_integer)
                    .into_iter()
                    .map(|(c, r)| {
                        let r = r
                            .into_iter()
                            .map(|(j, v)| (j, Scalar::Rational(BigRational::from_integer(v))))
                            .collect();
                        (c, r)
                    })
                    .collect()
            }
            Field::Prime(p) => {
                let mut rows: Vec<Row<u64>> = (0..m.rows())
                    .map(|i| {
                        m.row(i)
                            .iter()
                            .enumerate()
                            .filter_map(|(j, s)| match s {
                                Scalar::Mod { value, .. } if *value != 0 => Some((j, *value)),
                                _ => None,
                            })
                            .collect()
                    })
                    .filter(|r: &Row<u64>| !r.is_empty())
                    .collect();
                rows.sort_by_key(|r| (r[0].0, r.len()));
                insert_all(rows, eliminate_mod(p))
                    .into_iter()
                    .map(|(c, r)| (c, r.into_iter().map(|(j, v)| (j, Scalar::Mod { value: v, modulus: p })).collect()))
                    .collect()
            }
        };
        Echelon { field, pivots }
    }

    pub(crate) fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub(crate) fn pivot_columns(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivots.keys().copied()
    }

    /// Back substitution for the first `n` columns, with column `n` (if
    /// present in the rows) as right-hand side and the given values for the
    /// free columns.
    pub(crate) fn back_substitute(&self, n: usize, free_values: impl Fn(usize) -> Scalar) -> Vec<Scalar> {
        let mut x: Vec<Scalar> = (0..n)
            .map(|j| if self.pivots.contains_key(&j) { self.field.zero() } else { free_values(j) })
            .collect();
        for (&c, row) in self.pivots.iter().rev() {
            if c >= n {
                continue;
            }
            let mut acc = self.field.zero();
            let mut lead = None;
            for (j, v) in row {
                if *j == c {
                    lead = Some(v);
                } else if *j < n {
                    acc = acc.sub(&v.mul(&x[*j]));
                } else if *j == n {
                    acc = acc.add(v);
                }
            }
            x[c] = acc.div(lead.expect("pivot row leads with its column"));
        }
        x
    }
}
