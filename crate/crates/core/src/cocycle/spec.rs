use std::collections::BTreeMap;

use num_bigint::BigUint;
use serde_json::{json, Map, Value};

use crate::algebra::{FiniteAbelianGroup, GroupElement, Phase};
use crate::error::{Error, Result};
use crate::resolution::chain_map::eta_unchecked;
use crate::resolution::{KoszulChain, KoszulIndex};

/// Coefficients `a_key ∈ [0, m_{r_1})` of a normalized `k`-cocycle, one per
/// Koszul index of degree `k` whose first exponent is odd. Missing keys are 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CocycleSpec {
    group: FiniteAbelianGroup,
    degree: usize,
    coeffs: BTreeMap<KoszulIndex, u64>,
}

impl CocycleSpec {
    pub fn zero(group: FiniteAbelianGroup, degree: usize) -> Self {
        CocycleSpec {
            group,
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn new(
        group: FiniteAbelianGroup,
        degree: usize,
        coeffs: impl IntoIterator<Item = (KoszulIndex, u64)>,
    ) -> Result<Self> {
        let mut spec = Self::zero(group, degree);
        for (k, a) in coeffs {
            spec.set(k, a)?;
        }
        Ok(spec)
    }

    /// Sets one coefficient after validating the key and range.
    pub fn set(&mut self, key: KoszulIndex, a: u64) -> Result<()> {
        let bad = |why: String| Err(Error::InvalidSpec(why));
        if key.degree() != self.degree {
            return bad(format!("key {key} has degree {}, expected {}", key.degree(), self.degree));
        }
        if !key.fits(&self.group) {
            return bad(format!("key {key} refers to a position beyond rank {}", self.group.rank()));
        }
        if !key.leading_exponent_odd() {
            return bad(format!("key {key} has an even leading exponent"));
        }
        let m = self.group.modulus(key.leading_position().expect("nonempty key"));
        if a >= m {
            return bad(format!("coefficient {a} of {key} is not reduced mod {m}"));
        }
        if a == 0 {
            self.coeffs.remove(&key);
        } else {
            self.coeffs.insert(key, a);
        }
        Ok(())
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Nonzero coefficients.
    pub fn coeffs(&self) -> &BTreeMap<KoszulIndex, u64> {
        &self.coeffs
    }

    pub fn coefficient(&self, key: &KoszulIndex) -> u64 {
        self.coeffs.get(key).copied().unwrap_or(0)
    }

    pub fn is_trivial(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `{"group": [...], "degree": k, "coeffs": {"1^3": 1, ...}}` with zero
    /// coefficients omitted.
    pub fn to_json(&self) -> Value {
        let coeffs: Map<String, Value> = self
            .coeffs
            .iter()
            .map(|(k, &a)| (k.to_string(), json!(a)))
            .collect();
        json!({
            "group": self.group.moduli(),
            "degree": self.degree,
            "coeffs": coeffs,
        })
    }

    /// Loads the JSON form. `group` and `degree` may be omitted when defaults
    /// are supplied; the degree can also be read off the keys.
    pub fn from_json(
        v: &Value,
        default_group: Option<&FiniteAbelianGroup>,
        default_degree: Option<usize>,
    ) -> Result<Self> {
        let bad = |why: &str| Error::InvalidSpec(why.to_string());
        let obj = v.as_object().ok_or_else(|| bad("expected a JSON object"))?;
        for key in obj.keys() {
            if !matches!(key.as_str(), "group" | "degree" | "coeffs") {
                return Err(bad(&format!("unknown field {key:?}")));
            }
        }
        let group = match obj.get("group") {
            Some(g) => {
                let moduli: Vec<u64> = serde_json::from_value(g.clone())
                    .map_err(|_| bad("group must be a list of positive integers"))?;
                let g = FiniteAbelianGroup::new(moduli)?;
                if let Some(d) = default_group {
                    if d != &g {
                        return Err(bad(&format!("params are for {g}, not {d}")));
                    }
                }
                g
            }
            None => default_group.cloned().ok_or_else(|| bad("missing group"))?,
        };
        let mut parsed = Vec::new();
        if let Some(c) = obj.get("coeffs") {
            let c = c.as_object().ok_or_else(|| bad("coeffs must be an object"))?;
            for (k, a) in c {
                let key: KoszulIndex = k.parse()?;
                let a = a
                    .as_u64()
                    .ok_or_else(|| bad(&format!("coefficient of {k} must be a nonnegative integer")))?;
                parsed.push((key, a));
            }
        }
        let degree = match obj.get("degree") {
            Some(d) => d.as_u64().ok_or_else(|| bad("degree must be a positive integer"))? as usize,
            None => match (default_degree, parsed.first()) {
                (Some(d), _) => d,
                (None, Some((k, _))) => k.degree(),
                (None, None) => return Err(bad("missing degree")),
            },
        };
        if let Some(d) = default_degree {
            if d != degree {
                return Err(bad(&format!("params have degree {degree}, expected {d}")));
            }
        }
        if degree == 0 {
            return Err(bad("degree must be positive"));
        }
        CocycleSpec::new(group, degree, parsed)
    }
}

/// `∏_r m_r^{N_{k,r}}`: the number of representatives of degree `k`.
pub fn representative_count(group: &FiniteAbelianGroup, k: usize) -> BigUint {
    KoszulIndex::cocycle_keys(group.rank(), k)
        .iter()
        .map(|key| BigUint::from(group.modulus(key.leading_position().expect("nonempty"))))
        .product()
}

/// Every coefficient assignment over the valid keys of degree `k`, the last
/// key varying fastest.
pub fn enumerate_representatives(group: &FiniteAbelianGroup, k: usize) -> impl Iterator<Item = CocycleSpec> + '_ {
    let keys = KoszulIndex::cocycle_keys(group.rank(), k);
    let radix: Vec<u64> = keys
        .iter()
        .map(|key| group.modulus(key.leading_position().expect("nonempty")))
        .collect();
    let mut digits = vec![0u64; keys.len()];
    let mut done = k == 0;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let coeffs = keys.iter().cloned().zip(digits.iter().copied());
        let spec = CocycleSpec::new(group.clone(), k, coeffs).expect("enumerated keys are valid");
        // advance the mixed-radix counter
        done = true;
        for i in (0..digits.len()).rev() {
            digits[i] += 1;
            if digits[i] < radix[i] {
                done = false;
                break;
            }
            digits[i] = 0;
        }
        Some(spec)
    })
}

/// The closed formula: `Σ_key (-1)^{Σ_{i<j} λ_i λ_j} ∏_u η_{r_u,[a_u,b_u]} · a_key / m_{r_1}`.
pub fn eval_cocycle(spec: &CocycleSpec, args: &[GroupElement]) -> Result<Phase> {
    if args.len() != spec.degree {
        return Err(Error::DegreeMismatch {
            expected: spec.degree,
            found: args.len(),
        });
    }
    for g in args {
        spec.group.check(g)?;
    }
    Ok(eval_unchecked(spec, args))
}

pub(crate) fn eval_unchecked(spec: &CocycleSpec, args: &[GroupElement]) -> Phase {
    let g = &spec.group;
    let mut total = Phase::ZERO;
    for (key, &a) in &spec.coeffs {
        let mut prod: i128 = 1;
        for blk in key.blocks() {
            let e = eta_unchecked(g, blk.position, blk.a, blk.b, args);
            if e == 0 {
                prod = 0;
                break;
            }
            prod *= e as i128;
        }
        if prod == 0 {
            continue;
        }
        if key.sign_exponent() % 2 == 1 {
            prod = -prod;
        }
        let m = g.modulus(key.leading_position().expect("nonempty"));
        total += Phase::new(prod * a as i128, m);
    }
    total
}

/// Pairs the Koszul cocycle `f(Φ_key) = a_key / m_{r_1}` with a chain. The
/// action on `Q/Z` is trivial, so coefficients act through their augmentation.
pub fn eval_koszul_pairing(spec: &CocycleSpec, chain: &KoszulChain) -> Result<Phase> {
    let mut total = Phase::ZERO;
    for (key, coeff) in chain.terms() {
        if key.degree() != spec.degree {
            return Err(Error::DegreeMismatch {
                expected: spec.degree,
                found: key.degree(),
            });
        }
        let a = spec.coefficient(key);
        if a == 0 {
            continue;
        }
        let m = spec.group.modulus(key.leading_position().expect("nonempty"));
        total += Phase::from_bigint(&(coeff.augmentation() * a), m);
    }
    Ok(total)
}
