//! Instance caps and timeouts, overridable from a TOML config file.

use std::path::Path;

use anyhow::Context;
use serde::Deserialize;

#[derive(Debug, Clone, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Caps {
    pub max_leaf: usize,
    pub bandwidth: usize,
    pub pathwidth: usize,
    pub treewidth: usize,
    pub linear_forest: usize,
    pub doubling: usize,
    pub hd12: usize,
    pub hd3: usize,
    pub catalog: usize,
    pub kappa_oracle: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_leaf: atlas_core::params::MAX_LEAF_CAP,
            bandwidth: atlas_core::params::BANDWIDTH_CAP,
            pathwidth: atlas_core::params::WIDTH_CAP,
            treewidth: atlas_core::params::WIDTH_CAP,
            linear_forest: atlas_core::params::LINEAR_FOREST_CAP,
            doubling: atlas_core::params::DOUBLING_CAP,
            hd12: atlas_core::highway::HD12_CAP,
            hd3: atlas_core::highway::HD3_CAP,
            catalog: atlas_core::highway::CATALOG_CAP,
            kappa_oracle: atlas_core::skeleton::BRUTE_FORCE_CAP,
        }
    }
}

#[derive(Debug, Clone, Deserialize, Default)]
#[serde(default, deny_unknown_fields)]
pub struct Config {
    /// Per-parameter wall-clock timeout in seconds; 0 disables timeouts.
    pub timeout_secs: Option<u64>,
    pub caps: Caps,
}

impl Config {
    pub fn effective_timeout(&self) -> Option<std::time::Duration> {
        match self.timeout_secs {
            None => Some(std::time::Duration::from_secs(60)),
            Some(0) => None,
            Some(s) => Some(std::time::Duration::from_secs(s)),
        }
    }

    pub fn load(path: &Path) -> anyhow::Result<Self> {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("reading config {}", path.display()))?;
        toml::from_str(&text).with_context(|| format!("parsing config {}", path.display()))
    }

    /// No timeouts; used where byte-identical reruns matter more than
    /// wall-clock protection.
    pub fn untimed() -> Self {
        Config { timeout_secs: Some(0), caps: Caps::default() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_and_overrides() {
        let c: Config = toml::from_str("timeout_secs = 5\n[caps]\nhd3 = 12\n").unwrap();
        assert_eq!(c.caps.hd3, 12);
        assert_eq!(c.caps.bandwidth, 14);
        assert_eq!(c.effective_timeout(), Some(std::time::Duration::from_secs(5)));
        let d = Config::default();
        assert_eq!(d.effective_timeout(), Some(std::time::Duration::from_secs(60)));
        assert_eq!(Config::untimed().effective_timeout(), None);
    }

    #[test]
    fn rejects_unknown_keys() {
        assert!(toml::from_str::<Config>("nonsense = 1\n").is_err());
    }
}
