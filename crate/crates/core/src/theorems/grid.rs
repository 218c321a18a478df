use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// One grid cell: parameter name to value.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Params(BTreeMap<String, i64>);

impl Params {
    pub fn new() -> Self {
        Params::default()
    }

    pub fn with(mut self, name: &str, value: i64) -> Self {
        self.0.insert(name.to_string(), value);
        self
    }

    pub fn set(&mut self, name: &str, value: i64) {
        self.0.insert(name.to_string(), value);
    }

    pub fn get(&self, name: &str) -> Option<i64> {
        self.0.get(name).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, i64)> {
        self.0.iter().map(|(k, v)| (k.as_str(), *v))
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(k, v)| format!("{k}={v}")).collect();
        write!(f, "{}", parts.join(" "))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn admits(self, v: i64) -> bool {
        match self {
            Parity::Even => v % 2 == 0,
            Parity::Odd => v % 2 != 0,
        }
    }
}

/// A parsed range expression such as `3..25`, `even`, `2..12,even` or `3,5,7`.
///
/// Ranges are inclusive. A spec with only a parity filter applies that filter
/// to the statement's default values.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ParamSpec {
    pub values: Option<BTreeSet<i64>>,
    pub parity: Option<Parity>,
}

impl ParamSpec {
    pub fn values(values: impl IntoIterator<Item = i64>) -> Self {
        ParamSpec {
            values: Some(values.into_iter().collect()),
            parity: None,
        }
    }

    pub fn range(lo: i64, hi: i64) -> Self {
        ParamSpec::values(lo..=hi)
    }

    pub fn filtered(mut self, parity: Parity) -> Self {
        self.parity = Some(parity);
        self
    }

    pub fn resolve(&self, defaults: &[i64]) -> Vec<i64> {
        let base: Vec<i64> = match &self.values {
            Some(v) => v.iter().copied().collect(),
            None => defaults.to_vec(),
        };
        base.into_iter()
            .filter(|&v| self.parity.is_none_or(|p| p.admits(v)))
            .collect()
    }
}

impl FromStr for ParamSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut spec = ParamSpec::default();
        for item in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            match item {
                "even" | "odd" => {
                    let p = if item == "even" { Parity::Even } else { Parity::Odd };
                    if spec.parity.is_some_and(|q| q != p) {
                        return Err("conflicting parity filters".into());
                    }
                    spec.parity = Some(p);
                }
                _ => {
                    let set = spec.values.get_or_insert_with(BTreeSet::new);
                    if let Some((lo, hi)) = item.split_once("..") {
                        let lo: i64 = lo.trim().parse().map_err(|_| format!("bad range {item:?}"))?;
                        let hi: i64 = hi.trim().parse().map_err(|_| format!("bad range {item:?}"))?;
                        if lo > hi {
                            return Err(format!("empty range {item:?}"));
                        }
                        set.extend(lo..=hi);
                    } else {
                        let v: i64 = item.parse().map_err(|_| format!("bad value {item:?}"))?;
                        set.insert(v);
                    }
                }
            }
        }
        if spec.values.is_none() && spec.parity.is_none() {
            return Err("empty parameter specification".into());
        }
        Ok(spec)
    }
}

/// Named axes, enumerated as a cartesian product in axis order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ParamGrid {
    axes: Vec<(String, Vec<i64>)>,
}

impl ParamGrid {
    pub fn new() -> Self {
        ParamGrid::default()
    }

    pub fn axis(mut self, name: &str, values: impl IntoIterator<Item = i64>) -> Self {
        self.set_axis(name, values);
        self
    }

    pub fn set_axis(&mut self, name: &str, values: impl IntoIterator<Item = i64>) {
        let values: Vec<i64> = values.into_iter().collect();
        if let Some(slot) = self.axes.iter_mut().find(|(n, _)| n == name) {
            slot.1 = values;
        } else {
            self.axes.push((name.to_string(), values));
        }
    }

    pub fn axes(&self) -> &[(String, Vec<i64>)] {
        &self.axes
    }

    pub fn values(&self, name: &str) -> Option<&[i64]> {
        self.axes
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, v)| v.as_slice())
    }

    pub fn cells(&self) -> Vec<Params> {
        let mut out = vec![Params::new()];
        for (name, values) in &self.axes {
            out = out
                .into_iter()
                .flat_map(|cell| values.iter().map(move |&v| cell.clone().with(name, v)))
                .collect();
        }
        if self.axes.is_empty() {
            return Vec::new();
        }
        out
    }
}

/// Odd values in `lo..=hi`.
pub fn odd_range(lo: i64, hi: i64) -> Vec<i64> {
    (lo..=hi).filter(|v| v % 2 != 0).collect()
}

/// Even values in `lo..=hi`.
pub fn even_range(lo: i64, hi: i64) -> Vec<i64> {
    (lo..=hi).filter(|v| v % 2 == 0).collect()
}

pub fn is_prime(n: i64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}
