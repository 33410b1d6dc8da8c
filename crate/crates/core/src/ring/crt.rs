use crate::ring::{factorize, RingElement, RingSpec};

#[derive(Clone, Debug, PartialEq, Eq)]
struct Part {
    source_factor: usize,
    prime_power: u64,
}

/// The decomposition of each `Z_n` factor into `Z_{p^e}` factors, together with
/// the element bijection between the two presentations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrtSplit {
    source: RingSpec,
    split: RingSpec,
    parts: Vec<Part>,
}

fn inverse_mod(a: u64, m: u64) -> u64 {
    let (mut old_r, mut r) = (a as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    debug_assert_eq!(old_r, 1, "{a} is not invertible mod {m}");
    old_s.rem_euclid(m as i128) as u64
}

impl CrtSplit {
    pub(crate) fn new(source: &RingSpec) -> Self {
        let mut parts = Vec::new();
        for (i, &n) in source.moduli().iter().enumerate() {
            for (p, e) in factorize(n) {
                parts.push(Part {
                    source_factor: i,
                    prime_power: p.pow(e),
                });
            }
        }
        let split = RingSpec::new(parts.iter().map(|p| p.prime_power).collect())
            .expect("prime-power factors of a valid spec form a valid spec");
        CrtSplit {
            source: source.clone(),
            split,
            parts,
        }
    }

    pub fn source(&self) -> &RingSpec {
        &self.source
    }

    pub fn split(&self) -> &RingSpec {
        &self.split
    }

    /// Maps an element of the source ring to the split ring.
    pub fn forward(&self, a: &RingElement) -> RingElement {
        RingElement(
            self.parts
                .iter()
                .map(|p| a.0[p.source_factor] % p.prime_power)
                .collect(),
        )
    }

    /// Maps an element of the split ring back to the source ring.
    pub fn backward(&self, b: &RingElement) -> RingElement {
        let mut residues = vec![0u64; self.source.factor_count()];
        let mut modulus = vec![1u64; self.source.factor_count()];
        for (part, &r) in self.parts.iter().zip(&b.0) {
            let i = part.source_factor;
            let (x, m, q) = (residues[i], modulus[i], part.prime_power);
            // x' = x + m * t with x + m * t = r (mod q)
            let diff = (r as i128 - x as i128).rem_euclid(q as i128) as u128;
            let t = diff * inverse_mod(m % q, q) as u128 % q as u128;
            residues[i] = (x as u128 + m as u128 * t) as u64;
            modulus[i] = m * q;
        }
        RingElement(residues)
    }
}
