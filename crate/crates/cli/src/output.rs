use std::io::Write;
use std::path::Path;

use anyhow::{Context, Result};

/// Write `contents` to `dir/name` through a temporary file in the same
/// directory, so readers never observe a partial file.
pub fn write_atomic(dir: &Path, name: &str, contents: &str) -> Result<()> {
    std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    let mut tmp = tempfile::NamedTempFile::new_in(dir)
        .with_context(|| format!("creating a temporary file in {}", dir.display()))?;
    tmp.write_all(contents.as_bytes())?;
    tmp.as_file().sync_all()?;
    let target = dir.join(name);
    tmp.persist(&target)
        .with_context(|| format!("writing {}", target.display()))?;
    Ok(())
}

/// Named artifacts go to files under `out`, or to stdout in order. Several
/// artifacts on stdout are each preceded by a `# <name>` line.
pub fn emit(out: Option<&Path>, artifacts: &[(String, String)]) -> Result<()> {
    match out {
        Some(dir) => {
            for (name, body) in artifacts {
                write_atomic(dir, name, body)?;
            }
        }
        None => {
            let stdout = std::io::stdout();
            let mut w = stdout.lock();
            let labelled = artifacts.len() > 1;
            for (name, body) in artifacts {
                if labelled {
                    writeln!(w, "# {name}")?;
                }
                w.write_all(body.as_bytes())?;
                if !body.ends_with('\n') {
                    writeln!(w)?;
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn atomic_write_replaces_contents() {
        let dir = tempfile::tempdir().unwrap();
        write_atomic(dir.path(), "a.txt", "one").unwrap();
        write_atomic(dir.path(), "a.txt", "two").unwrap();
        assert_eq!(
            std::fs::read_to_string(dir.path().join("a.txt")).unwrap(),
            "two"
        );
        assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
    }
}
