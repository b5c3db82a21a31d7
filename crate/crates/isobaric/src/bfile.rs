//! Reader for the plain-text b-file sequence format: one `n a(n)` pair per
//! line, `#` starts a comment, blank lines are skipped. The offset is
//! whatever index the first data line carries, and later indices must march
//! up by one.

use std::str::FromStr;

use crate::error::{Error, Result};
use crate::ring::Int;
use crate::transform::ValueSeq;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BFile {
    /// Index of the first value.
    pub offset: i64,
    pub values: Vec<Int>,
}

impl BFile {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// View the run as a value sequence. Only offsets 0 and 1 make sense
    /// for fitting, so anything else is refused.
    pub fn value_seq(&self) -> Result<ValueSeq> {
        match self.offset {
            0 | 1 => Ok(ValueSeq::from_ints(self.offset as usize, &self.values)),
            other => Err(Error::UnsupportedOffset(other)),
        }
    }
}

pub fn parse_bfile(text: &str) -> Result<BFile> {
    let mut offset: Option<i64> = None;
    let mut next_index = 0i64;
    let mut values = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let data = raw.split('#').next().unwrap_or("").trim();
        if data.is_empty() {
            continue;
        }
        let mut fields = data.split_whitespace();
        let index_tok = fields.next().unwrap();
        let value_tok = fields.next().ok_or_else(|| Error::MalformedBFile {
            line,
            detail: format!("expected `n a(n)`, got a single field {index_tok:?}"),
        })?;
        if let Some(extra) = fields.next() {
            return Err(Error::MalformedBFile {
                line,
                detail: format!("trailing field {extra:?} after the value"),
            });
        }
        let index: i64 = index_tok.parse().map_err(|_| Error::MalformedBFile {
            line,
            detail: format!("index {index_tok:?} is not an integer"),
        })?;
        let value = Int::from_str(value_tok).map_err(|_| Error::MalformedBFile {
            line,
            detail: format!("value {value_tok:?} is not an integer"),
        })?;
        match offset {
            None => {
                offset = Some(index);
                next_index = index;
            }
            Some(_) if index != next_index => {
                return Err(Error::MalformedBFile {
                    line,
                    detail: format!("index {index} breaks the run (expected {next_index})"),
                });
            }
            Some(_) => {}
        }
        next_index += 1;
        values.push(value);
    }
    let offset = offset.ok_or(Error::MalformedBFile {
        line: 0,
        detail: "no data lines".into(),
    })?;
    Ok(BFile { offset, values })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{int, rat};

    #[test]
    fn parses_comments_blanks_and_negatives() {
        let text = "# divisor counts at a prime\n\n0 1\n1 2 # inline note\n2 3\n3 -4\n";
        let b = parse_bfile(text).unwrap();
        assert_eq!(b.offset, 0);
        assert_eq!(b.values, vec![int(1), int(2), int(3), int(-4)]);
        assert_eq!(b.len(), 4);
        assert!(!b.is_empty());
        let seq = b.value_seq().unwrap();
        assert_eq!(seq.start(), 0);
        assert_eq!(seq.get(3), &rat(-4));
    }

    #[test]
    fn offset_comes_from_the_first_line() {
        let b = parse_bfile("1 2\n2 6\n3 14\n").unwrap();
        assert_eq!(b.offset, 1);
        assert_eq!(b.value_seq().unwrap().start(), 1);
        let far = parse_bfile("5 1\n6 1\n").unwrap();
        assert_eq!(far.offset, 5);
        assert!(matches!(far.value_seq(), Err(Error::UnsupportedOffset(5))));
    }

    #[test]
    fn big_values_survive() {
        let b = parse_bfile("0 123456789012345678901234567890\n").unwrap();
        assert_eq!(
            b.values[0],
            Int::from_str("123456789012345678901234567890").unwrap()
        );
    }

    #[test]
    fn malformed_lines_are_reported_with_their_line_number() {
        let gap = parse_bfile("0 1\n2 3\n");
        match gap {
            Err(Error::MalformedBFile { line, detail }) => {
                assert_eq!(line, 2);
                assert!(detail.contains("expected 1"), "{detail}");
            }
            other => panic!("expected a gap error, got {other:?}"),
        }
        assert!(matches!(
            parse_bfile("0 1\n1\n"),
            Err(Error::MalformedBFile { line: 2, .. })
        ));
        assert!(matches!(
            parse_bfile("0 1 7\n"),
            Err(Error::MalformedBFile { line: 1, .. })
        ));
        assert!(matches!(
            parse_bfile("zero 1\n"),
            Err(Error::MalformedBFile { line: 1, .. })
        ));
        assert!(matches!(
            parse_bfile("0 one\n"),
            Err(Error::MalformedBFile { line: 1, .. })
        ));
        assert!(matches!(
            parse_bfile("# nothing here\n"),
            Err(Error::MalformedBFile { line: 0, .. })
        ));
    }
}
