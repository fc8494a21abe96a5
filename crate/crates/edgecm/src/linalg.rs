//! Exact rank computation for the sparse boundary matrices of the homology
//! engine.
//!
//! Over the rationals the elimination is fraction-free: rows are integer
//! vectors normalized by their content, cross-multiplied row updates keep
//! them integral, and content stripping keeps entries small. An `i128` fast
//! path covers all realistic inputs; arithmetic overflow triggers one
//! recomputation with arbitrary-precision integers. Prime fields use plain
//! modular elimination.

use num_bigint::BigInt;

/// A sparse matrix as `(row, col, value)` triples with explicit dimensions.
#[derive(Debug, Clone, Default)]
pub struct SparseMatrix {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<(usize, usize, i64)>,
}

impl SparseMatrix {
    pub fn new(rows: usize, cols: usize) -> Self {
        SparseMatrix { rows, cols, entries: Vec::new() }
    }

    pub fn push(&mut self, r: usize, c: usize, v: i64) {
        debug_assert!(r < self.rows && c < self.cols);
        if v != 0 {
            self.entries.push((r, c, v));
        }
    }
}

/// Rank over the rationals.
pub fn rank_rational(m: &SparseMatrix) -> usize {
    match rank_i128(m) {
        Some(r) => r,
        None => rank_bigint(m),
    }
}

/// Rank over GF(p), p prime.
pub fn rank_mod_p(m: &SparseMatrix, p: u64) -> usize {
    assert!(p >= 2, "modulus must be a prime");
    let mut rows: Vec<Vec<(u32, u64)>> = build_rows(m, |v| {
        let r = v.rem_euclid(p as i64) as u64;
        (r != 0).then_some(r)
    });
    let mut rank = 0;
    while let Some(pi) = pick_pivot_row(&rows) {
        let row = rows.swap_remove(pi);
        let &(pc, pv) = row.first().expect("pivot row nonempty");
        let pinv = mod_inverse(pv, p);
        rank += 1;
        for other in rows.iter_mut() {
            if let Some(val) = get_coeff(other, pc) {
                // other -= (val / pv) * row
                let factor = mul_mod(val, pinv, p);
                *other = merge_rows(other, &row, |a, b| {
                    let s = (a + p - mul_mod(factor, b, p)) % p;
                    (s != 0).then_some(s)
                });
            }
        }
        rows.retain(|r| !r.is_empty());
    }
    rank
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2) mod p.
    let mut base = a % p;
    let mut exp = p - 2;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

fn build_rows<T: Clone>(
    m: &SparseMatrix,
    conv: impl Fn(i64) -> Option<T>,
) -> Vec<Vec<(u32, T)>> {
    let mut rows: Vec<Vec<(u32, T)>> = vec![Vec::new(); m.rows];
    let mut sorted = m.entries.clone();
    sorted.sort_unstable_by_key(|&(r, c, _)| (r, c));
    for (r, c, v) in sorted {
        if let Some(t) = conv(v) {
            rows[r].push((c as u32, t));
        }
    }
    rows.retain(|r| !r.is_empty());
    rows
}

/// Shortest remaining row; breaks elimination fill-in on these incidence
/// matrices well enough.
fn pick_pivot_row<T>(rows: &[Vec<(u32, T)>]) -> Option<usize> {
    rows.iter()
        .enumerate()
        .min_by_key(|(_, r)| r.len())
        .map(|(i, _)| i)
}

fn get_coeff<T: Clone>(row: &[(u32, T)], col: u32) -> Option<T> {
    row.binary_search_by_key(&col, |&(c, _)| c)
        .ok()
        .map(|i| row[i].1.clone())
}

fn merge_rows<T: Clone + Default>(
    a: &[(u32, T)],
    b: &[(u32, T)],
    combine: impl Fn(T, T) -> Option<T>,
) -> Vec<(u32, T)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        match (a.get(i), b.get(j)) {
            (Some(&(ca, ref va)), Some(&(cb, ref vb))) => {
                if ca < cb {
                    if let Some(v) = combine(va.clone(), T::default()) {
                        out.push((ca, v));
                    }
                    i += 1;
                } else if cb < ca {
                    if let Some(v) = combine(T::default(), vb.clone()) {
                        out.push((cb, v));
                    }
                    j += 1;
                } else {
                    if let Some(v) = combine(va.clone(), vb.clone()) {
                        out.push((ca, v));
                    }
                    i += 1;
                    j += 1;
                }
            }
            (Some(&(ca, ref va)), None) => {
                if let Some(v) = combine(va.clone(), T::default()) {
                    out.push((ca, v));
                }
                i += 1;
            }
            (None, Some(&(cb, ref vb))) => {
                if let Some(v) = combine(T::default(), vb.clone()) {
                    out.push((cb, v));
                }
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

fn gcd_i128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn normalize_content_i128(row: &mut [(u32, i128)]) {
    let mut g: i128 = 0;
    for &(_, v) in row.iter() {
        g = gcd_i128(g, v);
        if g == 1 {
            break;
        }
    }
    if g > 1 {
        for e in row.iter_mut() {
            e.1 /= g;
        }
    }
}

/// `None` signals overflow; the caller retries with big integers.
fn rank_i128(m: &SparseMatrix) -> Option<usize> {
    let mut rows: Vec<Vec<(u32, i128)>> =
        build_rows(m, |v| (v != 0).then_some(v as i128));
    let mut rank = 0;
    while let Some(pi) = pick_pivot_row(&rows) {
        let row = rows.swap_remove(pi);
        let &(pc, pv) = row.first().expect("pivot row nonempty");
        rank += 1;
        let mut overflow = false;
        for other in rows.iter_mut() {
            if overflow {
                break;
            }
            if let Some(val) = get_coeff(other, pc) {
                // other := pv * other - val * row, then strip content.
                let mut merged: Vec<(u32, i128)> = Vec::with_capacity(other.len() + row.len());
                let ok = (|| {
                    for (c, v) in merge_signed(other, &row) {
                        let a = v.0.checked_mul(pv)?;
                        let b = v.1.checked_mul(val)?;
                        let s = a.checked_sub(b)?;
                        if s != 0 {
                            merged.push((c, s));
                        }
                    }
                    Some(())
                })();
                if ok.is_none() {
                    overflow = true;
                    break;
                }
                normalize_content_i128(&mut merged);
                *other = merged;
            }
        }
        if overflow {
            return None;
        }
        rows.retain(|r| !r.is_empty());
    }
    Some(rank)
}

/// Pairs `(col, (a_val, b_val))` over the union of supports.
fn merge_signed<'a, T: Clone + Default>(
    a: &'a [(u32, T)],
    b: &'a [(u32, T)],
) -> impl Iterator<Item = (u32, (T, T))> + 'a {
    let mut i = 0;
    let mut j = 0;
    std::iter::from_fn(move || {
        match (a.get(i), b.get(j)) {
            (Some(&(ca, ref va)), Some(&(cb, ref vb))) => {
                if ca < cb {
                    i += 1;
                    Some((ca, (va.clone(), T::default())))
                } else if cb < ca {
                    j += 1;
                    Some((cb, (T::default(), vb.clone())))
                } else {
                    i += 1;
                    j += 1;
                    Some((ca, (va.clone(), vb.clone())))
                }
            }
            (Some(&(ca, ref va)), None) => {
                i += 1;
                Some((ca, (va.clone(), T::default())))
            }
            (None, Some(&(cb, ref vb))) => {
                j += 1;
                Some((cb, (T::default(), vb.clone())))
            }
            (None, None) => None,
        }
    })
}

fn rank_bigint(m: &SparseMatrix) -> usize {
    use num_bigint::Sign;
    let zero = BigInt::from(0);
    let mut rows: Vec<Vec<(u32, BigInt)>> =
        build_rows(m, |v| (v != 0).then(|| BigInt::from(v)));
    let mut rank = 0;
    while let Some(pi) = pick_pivot_row(&rows) {
        let row = rows.swap_remove(pi);
        let (pc, pv) = row.first().cloned().expect("pivot row nonempty");
        rank += 1;
        for other in rows.iter_mut() {
            if let Some(val) = get_coeff(other, pc) {
                let mut merged: Vec<(u32, BigInt)> = Vec::with_capacity(other.len() + row.len());
                for (c, (a, b)) in merge_signed(other, &row) {
                    let s = &a * &pv - &b * &val;
                    if s != zero {
                        merged.push((c, s));
                    }
                }
                // Strip content.
                let mut g = zero.clone();
                for (_, v) in &merged {
                    g = num_bigint::BigInt::from_biguint(
                        Sign::Plus,
                        num_integer_gcd(g.magnitude().clone(), v.magnitude().clone()),
                    );
                    if g == BigInt::from(1) {
                        break;
                    }
                }
                if g > BigInt::from(1) {
                    for e in merged.iter_mut() {
                        e.1 = &e.1 / &g;
                    }
                }
                *other = merged;
            }
        }
        rows.retain(|r| !r.is_empty());
    }
    rank
}

fn num_integer_gcd(
    mut a: num_bigint::BigUint,
    mut b: num_bigint::BigUint,
) -> num_bigint::BigUint {
    use num_bigint::BigUint;
    let zero = BigUint::from(0u32);
    while b != zero {
        let r = &a % &b;
        a = b;
        b = r;
    }
    a
}
