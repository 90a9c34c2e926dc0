//! Optional key-value config file, pointed at by `GURLAND_KIT_CONFIG`.
//!
//! Precedence everywhere: command-line flags, then config values, then
//! built-in defaults. Lines are `key = value`; `#` starts a comment.

use std::collections::HashMap;

use crate::CliError;

pub const ENV_VAR: &str = "GURLAND_KIT_CONFIG";

const KNOWN_KEYS: [&str; 6] = ["m", "tol", "rel_tol", "scale", "format", "product_terms"];

#[derive(Debug, Default)]
pub struct Config {
    values: HashMap<String, String>,
}

impl Config {
    /// Loads the file named by `GURLAND_KIT_CONFIG`, or an empty config when
    /// the variable is unset.
    pub fn from_env() -> Result<Self, CliError> {
        match std::env::var(ENV_VAR) {
            Ok(path) => Self::from_file(&path),
            Err(_) => Ok(Self::default()),
        }
    }

    pub fn from_file(path: &str) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Io(format!("cannot read config {path}: {e}")))?;
        let mut values = HashMap::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                CliError::Usage(format!("config {path}:{}: expected key = value", lineno + 1))
            })?;
            let key = key.trim();
            if !KNOWN_KEYS.contains(&key) {
                return Err(CliError::Usage(format!(
                    "config {path}:{}: unknown key `{key}`",
                    lineno + 1
                )));
            }
            values.insert(key.to_string(), value.trim().to_string());
        }
        Ok(Self { values })
    }

    /// Flag value if given, else config value parsed as `T`, else default.
    pub fn resolve<T: std::str::FromStr>(
        &self,
        flag: Option<T>,
        key: &str,
        default: T,
    ) -> Result<T, CliError> {
        if let Some(v) = flag {
            return Ok(v);
        }
        match self.values.get(key) {
            Some(raw) => raw
                .parse()
                .map_err(|_| CliError::Usage(format!("config key `{key}`: cannot parse `{raw}`"))),
            None => Ok(default),
        }
    }

    pub fn get_raw(&self, key: &str) -> Option<&str> {
        self.values.get(key).map(|s| s.as_str())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    fn write_config(content: &str) -> tempfile::NamedTempFile {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        f.write_all(content.as_bytes()).unwrap();
        f
    }

    #[test]
    fn parses_keys_and_comments() {
        let f = write_config("# pinned sweep settings\nm = 3\n tol=1e-9 # inline\n");
        let cfg = Config::from_file(f.path().to_str().unwrap()).unwrap();
        assert_eq!(cfg.get_raw("m"), Some("3"));
        assert_eq!(cfg.resolve(None, "tol", 1e-10).unwrap(), 1e-9);
        // flag wins over config
        assert_eq!(cfg.resolve(Some(2u32), "m", 5).unwrap(), 2);
        // absent key falls back to the default
        assert_eq!(cfg.resolve::<u32>(None, "product_terms", 17).unwrap(), 17);
    }

    #[test]
    fn rejects_unknown_keys_and_bad_lines() {
        let f = write_config("bogus = 1\n");
        assert!(matches!(
            Config::from_file(f.path().to_str().unwrap()),
            Err(CliError::Usage(_))
        ));
        let f = write_config("just words\n");
        assert!(matches!(
            Config::from_file(f.path().to_str().unwrap()),
            Err(CliError::Usage(_))
        ));
    }

    #[test]
    fn missing_file_is_io_error() {
        assert!(matches!(
            Config::from_file("/nonexistent/gurland.conf"),
            Err(CliError::Io(_))
        ));
    }
}
