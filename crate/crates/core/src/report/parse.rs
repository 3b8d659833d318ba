//! Text syntax for group specifications.
//!
//! ```text
//! spec  := term ( 'x' term )*
//! term  := '(' spec ')' | 'S' n | 'A' n | 'D' n | 'C' n | 'Q8'
//!        | 'SL(' n ',' q ')' | 'GL(' n ',' q ')'
//!        | 'sdp(' spec ',' spec ',' k ')'
//!        | 'perm:' gen ( (',' | ';') gen )*
//! gen   := cycle+            cycle := '(' point* ')'
//! ```
//!
//! Family tags are case-insensitive and whitespace between tokens is
//! ignored. Permutation points are 1-based and separated by spaces or
//! commas inside a cycle.

use crate::error::{Error, Result};
use crate::families::FamilySpec;
use crate::group::{Permutation, MAX_DEGREE};

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

fn err<T>(position: usize, message: impl Into<String>) -> Result<T> {
    Err(Error::Parse {
        position,
        message: message.into(),
    })
}

impl Parser {
    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn expect(&mut self, want: char) -> Result<()> {
        match self.peek() {
            Some(c) if c.eq_ignore_ascii_case(&want) => {
                self.pos += 1;
                Ok(())
            }
            Some(c) => err(self.pos, format!("expected '{want}', found '{c}'")),
            None => err(self.pos, format!("expected '{want}', found end of input")),
        }
    }

    /// Consumes `word` case-insensitively if it comes next.
    fn eat_word(&mut self, word: &str) -> bool {
        self.skip_ws();
        let end = self.pos + word.chars().count();
        if end > self.chars.len() {
            return false;
        }
        let matches = self.chars[self.pos..end]
            .iter()
            .zip(word.chars())
            .all(|(a, b)| a.eq_ignore_ascii_case(&b));
        if matches {
            self.pos = end;
        }
        matches
    }

    fn number(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(char::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return match self.chars.get(start) {
                Some(c) => err(start, format!("expected a number, found '{c}'")),
                None => err(start, "expected a number, found end of input"),
            };
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        digits
            .parse()
            .or_else(|_| err(start, format!("number {digits} is too large")))
    }

    fn spec(&mut self) -> Result<FamilySpec> {
        let mut left = self.term()?;
        while matches!(self.peek(), Some('x' | 'X')) {
            self.pos += 1;
            let right = self.term()?;
            left = FamilySpec::Product(Box::new(left), Box::new(right));
        }
        Ok(left)
    }

    fn term(&mut self) -> Result<FamilySpec> {
        let start = {
            self.skip_ws();
            self.pos
        };
        if self.peek() == Some('(') {
            self.pos += 1;
            let inner = self.spec()?;
            self.expect(')')?;
            return Ok(inner);
        }
        if self.eat_word("sdp") {
            self.expect('(')?;
            let a = self.spec()?;
            self.expect(',')?;
            let b = self.spec()?;
            self.expect(',')?;
            let k = self.number()?;
            self.expect(')')?;
            return Ok(FamilySpec::Semidirect(Box::new(a), Box::new(b), k));
        }
        if self.eat_word("perm") {
            self.expect(':')?;
            return self.permutations();
        }
        for (word, special) in [("SL", true), ("GL", false)] {
            if self.eat_word(word) {
                self.expect('(')?;
                let n = self.number()?;
                self.expect(',')?;
                let q_pos = self.pos;
                let q = self.number()?;
                self.expect(')')?;
                let q = u32::try_from(q).or_else(|_| err(q_pos, "field order too large"))?;
                return Ok(if special {
                    FamilySpec::SpecialLinear { n, q }
                } else {
                    FamilySpec::GeneralLinear { n, q }
                });
            }
        }
        if self.eat_word("Q8") {
            return Ok(FamilySpec::Quaternion);
        }
        let tag = match self.peek() {
            Some(c) => c.to_ascii_uppercase(),
            None => return err(start, "expected a group, found end of input"),
        };
        let make: fn(usize) -> FamilySpec = match tag {
            'S' => FamilySpec::Symmetric,
            'A' => FamilySpec::Alternating,
            'D' => FamilySpec::Dihedral,
            'C' => FamilySpec::Cyclic,
            other => return err(start, format!("unknown group family '{other}'")),
        };
        self.pos += 1;
        Ok(make(self.number()?))
    }

    fn permutations(&mut self) -> Result<FamilySpec> {
        let mut cycle_lists: Vec<(usize, Vec<Vec<usize>>)> = Vec::new();
        loop {
            let gen_start = {
                self.skip_ws();
                self.pos
            };
            let mut cycles = Vec::new();
            while self.peek() == Some('(') {
                self.pos += 1;
                let mut cycle = Vec::new();
                loop {
                    match self.peek() {
                        Some(')') => {
                            self.pos += 1;
                            break;
                        }
                        Some(',') => self.pos += 1,
                        Some(c) if c.is_ascii_digit() => {
                            let at = self.pos;
                            let point = self.number()?;
                            if point == 0 || point > MAX_DEGREE {
                                return err(at, format!("point {point} outside 1..={MAX_DEGREE}"));
                            }
                            if cycle.contains(&(point - 1)) {
                                return err(at, format!("point {point} repeated in a cycle"));
                            }
                            cycle.push(point - 1);
                        }
                        Some(c) => return err(self.pos, format!("unexpected '{c}' in a cycle")),
                        None => return err(self.pos, "unterminated cycle"),
                    }
                }
                cycles.push(cycle);
            }
            if cycles.is_empty() {
                return err(gen_start, "expected a permutation in cycle notation");
            }
            cycle_lists.push((gen_start, cycles));
            // another generator follows only if a separator precedes '('
            let save = self.pos;
            if matches!(self.peek(), Some(',' | ';')) {
                self.pos += 1;
                if self.peek() == Some('(') {
                    continue;
                }
            }
            self.pos = save;
            break;
        }
        let degree = cycle_lists
            .iter()
            .flat_map(|(_, cs)| cs.iter().flatten())
            .map(|&p| p + 1)
            .max()
            .unwrap_or(1);
        let mut generators = Vec::with_capacity(cycle_lists.len());
        for (at, cycles) in cycle_lists {
            let slices: Vec<&[usize]> = cycles.iter().map(Vec::as_slice).collect();
            let perm = Permutation::from_cycles(degree, &slices).or_else(|e| err(at, e.to_string()))?;
            generators.push(perm);
        }
        Ok(FamilySpec::Permutation { degree, generators })
    }
}

/// Parses a group specification such as `A7`, `SL(2,5)`, `C2xQ8`,
/// `sdp(C2xQ8,C2,3)` or `perm:(1 2)(3 4),(1 2 3)`.
pub fn parse_group_spec(text: &str) -> Result<FamilySpec> {
    let mut parser = Parser {
        chars: text.chars().collect(),
        pos: 0,
    };
    let spec = parser.spec()?;
    if let Some(c) = parser.peek() {
        return err(parser.pos, format!("unexpected '{c}' after the group"));
    }
    Ok(spec)
}
