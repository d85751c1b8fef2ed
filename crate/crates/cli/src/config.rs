//! `--config` files: one `key=value` per line, `#` starts a comment.
//!
//! Keys mirror the long flag names of the subcommand they are given to, and
//! flags win over file values. Every key must be consumed by the subcommand;
//! a leftover key is an error naming it, so a typo fails loudly instead of
//! silently running with defaults.

use std::collections::BTreeMap;
use std::str::FromStr;

use crate::errors::{usage, CliResult};
use crate::formats::read_file;

#[derive(Debug, Default)]
pub struct FileConfig {
    entries: BTreeMap<String, String>,
}

impl FileConfig {
    pub fn empty() -> FileConfig {
        FileConfig::default()
    }

    pub fn load(path: &str) -> CliResult<FileConfig> {
        let text = read_file(path)?;
        let mut entries = BTreeMap::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line.split_once('=').ok_or_else(|| {
                usage(format!("config {path} line {}: expected key=value, got `{line}`", i + 1))
            })?;
            let (k, v) = (k.trim().to_string(), v.trim().to_string());
            if k.is_empty() {
                return Err(usage(format!("config {path} line {}: empty key", i + 1)));
            }
            if entries.insert(k.clone(), v).is_some() {
                return Err(usage(format!("config {path}: duplicate key `{k}`")));
            }
        }
        Ok(FileConfig { entries })
    }

    fn take(&mut self, key: &str) -> Option<String> {
        self.entries.remove(key)
    }

    /// Call after all keys were taken; names the first leftover.
    pub fn finish(self) -> CliResult<()> {
        match self.entries.keys().next() {
            None => Ok(()),
            Some(k) => Err(usage(format!("config: unknown key `{k}`"))),
        }
    }
}

/// Flag value if given, else the parsed config value under `key`, else None.
pub fn opt<T: FromStr>(flag: Option<T>, cfg: &mut FileConfig, key: &str) -> CliResult<Option<T>> {
    let file_value = cfg.take(key);
    if flag.is_some() {
        return Ok(flag);
    }
    match file_value {
        None => Ok(None),
        Some(v) => v
            .parse()
            .map(Some)
            .map_err(|_| usage(format!("config key `{key}`: cannot parse `{v}`"))),
    }
}

pub fn required<T>(v: Option<T>, flag: &str) -> CliResult<T> {
    v.ok_or_else(|| usage(format!("missing required --{flag}")))
}
