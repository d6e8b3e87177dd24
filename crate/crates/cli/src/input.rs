use std::fs;
use std::path::Path;

use lcsk::Sequence;

use crate::CliError;

/// Sequence of the first (and only) FASTA record: header skipped, sequence
/// lines concatenated, whitespace dropped.
pub fn parse_fasta(text: &[u8], origin: &str) -> Result<Vec<u8>, CliError> {
    let mut header_seen = false;
    let mut seq = Vec::new();
    for (n, line) in text.split(|&c| c == b'\n').enumerate() {
        let line = line.trim_ascii();
        if line.is_empty() || line[0] == b';' {
            continue;
        }
        if line[0] == b'>' {
            if header_seen {
                return Err(CliError::Input(format!(
                    "{origin}: line {}: second FASTA record; only one record per file is supported",
                    n + 1
                )));
            }
            header_seen = true;
        } else if !header_seen {
            return Err(CliError::Input(format!(
                "{origin}: line {}: malformed FASTA, expected a `>` header",
                n + 1
            )));
        } else {
            seq.extend(line.iter().filter(|c| !c.is_ascii_whitespace()));
        }
    }
    if !header_seen {
        return Err(CliError::Input(format!("{origin}: malformed FASTA, no `>` header")));
    }
    Ok(seq)
}

/// Plain text input: line breaks are removed, everything else is kept.
pub fn parse_plain(text: &[u8]) -> Vec<u8> {
    text.iter().copied().filter(|&c| c != b'\n' && c != b'\r').collect()
}

pub fn read_file(path: &Path, fasta: bool) -> Result<Vec<u8>, CliError> {
    let text = fs::read(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    if fasta {
        parse_fasta(&text, &path.display().to_string())
    } else {
        Ok(parse_plain(&text))
    }
}

/// Loads one side of the comparison; `None` when neither flag was given.
pub fn load(
    path: Option<&Path>,
    inline: Option<&str>,
    fasta: bool,
    fold_case: bool,
) -> Result<Option<(Sequence, String)>, CliError> {
    let (bytes, label) = match (path, inline) {
        (Some(p), _) => (read_file(p, fasta)?, p.display().to_string()),
        (None, Some(s)) => (s.as_bytes().to_vec(), "inline".to_string()),
        (None, None) => return Ok(None),
    };
    let seq = Sequence::from_bytes(&bytes);
    Ok(Some((if fold_case { seq.fold_case() } else { seq }, label)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fasta_single_record() {
        let text = b">chr1 test\nACGT\nacgt\n\nTT\n";
        assert_eq!(parse_fasta(text, "x").unwrap(), b"ACGTacgtTT");
        assert_eq!(parse_fasta(b">empty\n", "x").unwrap(), b"");
        assert_eq!(parse_fasta(b">crlf\r\nAC\r\nGT\r\n", "x").unwrap(), b"ACGT");
    }

    #[test]
    fn fasta_rejections() {
        let err = parse_fasta(b">a\nAC\n>b\nGT\n", "x").unwrap_err();
        assert!(err.to_string().contains("second FASTA record"), "{err}");
        assert!(parse_fasta(b"ACGT\n", "x").is_err());
        assert!(parse_fasta(b"", "x").is_err());
    }

    #[test]
    fn plain_strips_line_breaks() {
        assert_eq!(parse_plain(b"AB\r\nCD\n"), b"ABCD");
    }
}
