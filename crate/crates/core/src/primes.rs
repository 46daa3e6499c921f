use crate::error::{Error, Result};

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let n = n as u64;
    (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// Accepts any prime, including 2.
pub fn check_prime(p: u32) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

/// Accepts odd primes only; `what` names the operation in the error.
pub fn check_odd_prime(p: u32, what: &'static str) -> Result<()> {
    check_prime(p)?;
    if p == 2 {
        return Err(Error::EvenPrime(what));
    }
    Ok(())
}
