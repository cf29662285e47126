use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// A Goresky–MacPherson perversity `p(2), ..., p(n)` for an `n`-dimensional
/// space. Spaces of dimension below 2 carry the empty perversity.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Perversity {
    dimension: usize,
    values: Vec<i64>,
}

impl Perversity {
    /// Validates `p(2) = 0` and `p(k) <= p(k+1) <= p(k) + 1`.
    pub fn new(dimension: usize, values: Vec<i64>) -> Result<Self> {
        let expected = dimension.saturating_sub(1);
        if values.len() != expected {
            return Err(Error::InvalidPerversity(format!(
                "dimension {dimension} needs {expected} values p(2)..p({dimension}), got {}",
                values.len()
            )));
        }
        if values.first().is_some_and(|v| *v != 0) {
            return Err(Error::InvalidPerversity(format!("p(2) must be 0, got {}", values[0])));
        }
        if let Some(k) = values.windows(2).position(|w| w[1] < w[0] || w[1] > w[0] + 1) {
            return Err(Error::InvalidPerversity(format!(
                "p({}) = {} does not follow p({}) = {} by a step of 0 or 1",
                k + 3,
                values[k + 1],
                k + 2,
                values[k]
            )));
        }
        Ok(Self { dimension, values })
    }

    fn from_formula(dimension: usize, f: impl Fn(i64) -> i64) -> Self {
        let values = (2..=dimension as i64).map(f).collect();
        Self { dimension, values }
    }

    /// `m(k) = floor((k - 2) / 2)`.
    pub fn lower_middle(dimension: usize) -> Self {
        Self::from_formula(dimension, |k| (k - 2).div_euclid(2))
    }

    /// `n(k) = ceil((k - 2) / 2)`.
    pub fn upper_middle(dimension: usize) -> Self {
        Self::from_formula(dimension, |k| (k - 1).div_euclid(2))
    }

    pub fn zero(dimension: usize) -> Self {
        Self::from_formula(dimension, |_| 0)
    }

    /// `t(k) = k - 2`.
    pub fn top(dimension: usize) -> Self {
        Self::from_formula(dimension, |k| k - 2)
    }

    /// Parses `lower-middle`, `upper-middle`, `zero`, `top` or
    /// `custom:v2,...,vn`.
    pub fn parse(spec: &str, dimension: usize) -> Result<Self> {
        match spec.trim() {
            "lower-middle" => Ok(Self::lower_middle(dimension)),
            "upper-middle" => Ok(Self::upper_middle(dimension)),
            "zero" => Ok(Self::zero(dimension)),
            "top" => Ok(Self::top(dimension)),
            other => {
                let body = other
                    .strip_prefix("custom:")
                    .ok_or_else(|| Error::InvalidPerversity(format!("unknown perversity `{other}`")))?;
                let values = if body.trim().is_empty() {
                    Vec::new()
                } else {
                    body.split(',')
                        .map(|v| {
                            v.trim()
                                .parse::<i64>()
                                .map_err(|_| Error::InvalidPerversity(format!("`{v}` is not an integer")))
                        })
                        .collect::<Result<Vec<_>>>()?
                };
                Self::new(dimension, values)
            }
        }
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    /// `p(k)` for `2 <= k <= n`.
    pub fn value(&self, k: usize) -> i64 {
        self.values[k - 2]
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    /// The complementary perversity `t - p`.
    pub fn complement(&self) -> Self {
        Self::from_formula(self.dimension, |k| k - 2 - self.values[(k - 2) as usize])
    }

    /// Pointwise `self <= other`.
    pub fn le(&self, other: &Self) -> bool {
        self.dimension == other.dimension && self.values.iter().zip(&other.values).all(|(a, b)| a <= b)
    }

    /// All perversities of the given dimension.
    pub fn all(dimension: usize) -> Vec<Self> {
        if dimension < 2 {
            return vec![Self::zero(dimension)];
        }
        let mut out: Vec<Vec<i64>> = vec![vec![0]];
        for _ in 3..=dimension {
            out = out
                .into_iter()
                .flat_map(|v| {
                    let last = *v.last().expect("starts with p(2)");
                    [0, 1].map(|step| {
                        let mut w = v.clone();
                        w.push(last + step);
                        w
                    })
                })
                .collect();
        }
        out.into_iter().map(|values| Self { dimension, values }).collect()
    }
}

impl fmt::Display for Perversity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let named = [
            ("lower-middle", Self::lower_middle(self.dimension)),
            ("upper-middle", Self::upper_middle(self.dimension)),
            ("zero", Self::zero(self.dimension)),
            ("top", Self::top(self.dimension)),
        ];
        if let Some((name, _)) = named.iter().find(|(_, p)| p == self) {
            return f.write_str(name);
        }
        let vals: Vec<String> = self.values.iter().map(i64::to_string).collect();
        write!(f, "custom:{}", vals.join(","))
    }
}

/// The lower and upper middle perversities.
pub fn middle_perversities(dimension: usize) -> (Perversity, Perversity) {
    (Perversity::lower_middle(dimension), Perversity::upper_middle(dimension))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn middle_values() {
        let (m, u) = middle_perversities(3);
        assert_eq!(m.values(), &[0, 0]);
        assert_eq!(u.values(), &[0, 1]);
        let (m, u) = middle_perversities(4);
        assert_eq!((m.value(4), u.value(4)), (1, 1));
    }

    #[test]
    fn middle_perversities_are_complementary() {
        for n in 2..9 {
            let (m, u) = middle_perversities(n);
            assert_eq!(m.complement(), u);
            let t = Perversity::top(n);
            assert!((2..=n).all(|k| m.value(k) + u.value(k) == t.value(k)));
        }
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(Perversity::parse("custom:0,0,1", 4).unwrap(), Perversity::lower_middle(4));
        assert_eq!(Perversity::parse("top", 5).unwrap().to_string(), "top");
        assert_eq!(Perversity::parse("custom:0,1,1,1", 5).unwrap().to_string(), "custom:0,1,1,1");
        for bad in ["custom:1,1", "custom:0,2", "custom:0,1,0", "custom:0", "middle", "custom:a,b"] {
            assert_eq!(Perversity::parse(bad, 3).unwrap_err().code(), "InvalidPerversity", "{bad}");
        }
    }

    #[test]
    fn enumerates_every_perversity() {
        let all = Perversity::all(5);
        assert_eq!(all.len(), 8);
        assert!(all.iter().all(|p| Perversity::new(5, p.values().to_vec()).is_ok()));
        assert_eq!(Perversity::all(2), vec![Perversity::zero(2)]);
    }
}
