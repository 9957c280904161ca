use super::{DiagramError, EdgeLabel, LinkDiagram};

/// Parses a PD body: whitespace-separated `X[a,b,c,d]` tuples followed by an
/// optional `O<k>` declaring `k` crossingless loops.
pub fn parse_pd(text: &str) -> Result<LinkDiagram, DiagramError> {
    let (tuples, loops) = parse_tokens(text)?;
    LinkDiagram::new(tuples, loops)
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Cursor<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn err(&self, msg: impl Into<String>) -> DiagramError {
        DiagramError::Syntax { pos: self.pos, msg: msg.into() }
    }

    fn expect(&mut self, b: u8) -> Result<(), DiagramError> {
        self.skip_ws();
        if self.peek() == Some(b) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(format!("expected `{}`", b as char)))
        }
    }

    fn int(&mut self) -> Result<u32, DiagramError> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| DiagramError::Syntax { pos: start, msg: "expected an integer".into() })
    }
}

fn parse_tokens(text: &str) -> Result<(Vec<[EdgeLabel; 4]>, u32), DiagramError> {
    let mut cur = Cursor { bytes: text.as_bytes(), pos: 0 };
    let mut tuples = Vec::new();
    let mut loops = None;
    loop {
        cur.skip_ws();
        match cur.peek() {
            None => break,
            Some(_) if loops.is_some() => return Err(cur.err("nothing may follow the free-loop count")),
            Some(b'X') => {
                cur.pos += 1;
                cur.expect(b'[')?;
                let mut t = [0; 4];
                for (i, slot) in t.iter_mut().enumerate() {
                    if i > 0 {
                        cur.expect(b',')?;
                    }
                    *slot = cur.int()?;
                }
                cur.expect(b']')?;
                tuples.push(t);
            }
            Some(b'O') => {
                cur.pos += 1;
                loops = Some(cur.int()?);
            }
            Some(_) => return Err(cur.err("expected `X[` or `O`")),
        }
    }
    Ok((tuples, loops.unwrap_or(0)))
}
