//! A fixed recursive bijection `ℤ² → ℕ ⊂ ℤ`: zigzag each coordinate, then
//! apply the Cantor pairing.

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PairingError {
    #[error("{0} is not in the range of the pairing")]
    OutOfRange(i64),
    #[error("pairing of ({0}, {1}) overflows")]
    Overflow(i64, i64),
}

/// `2n` for `n ≥ 0`, `−2n − 1` otherwise.
pub fn zigzag(n: i64) -> u64 {
    if n >= 0 {
        (n as u64) << 1
    } else {
        ((-(n + 1)) as u64) * 2 + 1
    }
}

pub fn unzigzag(z: u64) -> i64 {
    if z % 2 == 0 {
        (z / 2) as i64
    } else {
        -((z / 2) as i64) - 1
    }
}

pub fn cantor(a: u64, b: u64) -> Option<u64> {
    let s = a.checked_add(b)?;
    s.checked_mul(s + 1).map(|t| t / 2)?.checked_add(b)
}

pub fn uncantor(n: u64) -> (u64, u64) {
    // Largest w with w(w+1)/2 <= n.
    let mut w = (((8.0 * n as f64 + 1.0).sqrt() - 1.0) / 2.0) as u64;
    while w * (w + 1) / 2 > n {
        w -= 1;
    }
    while (w + 1) * (w + 2) / 2 <= n {
        w += 1;
    }
    let b = n - w * (w + 1) / 2;
    (w - b, b)
}

pub fn try_pairing_int(i: i64, j: i64) -> Result<i64, PairingError> {
    cantor(zigzag(i), zigzag(j))
        .and_then(|n| i64::try_from(n).ok())
        .ok_or(PairingError::Overflow(i, j))
}

/// Panics only when the result exceeds `i64`, which needs `|i|, |j| > 2³⁰`.
pub fn pairing_int(i: i64, j: i64) -> i64 {
    try_pairing_int(i, j).expect("pairing argument too large")
}

pub fn unpair_int(n: i64) -> Result<(i64, i64), PairingError> {
    if n < 0 {
        return Err(PairingError::OutOfRange(n));
    }
    let (a, b) = uncantor(n as u64);
    Ok((unzigzag(a), unzigzag(b)))
}
