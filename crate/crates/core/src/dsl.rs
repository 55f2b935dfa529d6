//! Text syntax for groups.
//!
//! ```text
//! EXPR := NAME | wr(EXPR, EXPR) | wrp(EXPR, EXPR) | x(EXPR, EXPR)
//!       | par(EXPR, INT) | perm(INT; CYCLES, CYCLES, ...)
//! NAME := S<n> | A<n> | C<n> | D<n> | I<n> | K4
//! ```
//!
//! `wr` is the imprimitive wreath product, `wrp` the product action and `x`
//! the direct product. `perm(4; (0 1)(2 3), (0 2)(1 3))` lists generators
//! in cycle notation on points `0..n`.

use crate::catalog::catalog_group;
use crate::error::{Error, Result};
use crate::group::{Limits, PermGroup};
use crate::perm::Permutation;
use crate::product::{
    direct_product, parallel_multiple, wreath_imprimitive, wreath_product_action,
};

pub fn parse_group_spec(text: &str) -> Result<PermGroup> {
    parse_group_spec_with(text, Limits::default())
}

pub fn parse_group_spec_with(text: &str, limits: Limits) -> Result<PermGroup> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        limits,
    };
    let g = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(g)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    limits: Limits,
}

impl Parser<'_> {
    fn error(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(format!("expected '{}'", c as char)))
        }
    }

    fn word(&mut self) -> String {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn int(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .expect("ascii digits")
            .parse()
            .map_err(|_| Error::Parse {
                pos: start,
                msg: "integer out of range".into(),
            })
    }

    fn expr(&mut self) -> Result<PermGroup> {
        self.skip_ws();
        let start = self.pos;
        let name = self.word();
        if name.is_empty() {
            return Err(self.error("expected a group expression"));
        }
        if self.peek() != Some(b'(') {
            return catalog_group(&name)
                .map(|g| g.with_limits(self.limits))
                .map_err(|e| match e {
                    Error::Parse { msg, .. } => Error::Parse { pos: start, msg },
                    other => other,
                });
        }
        self.pos += 1;
        let g = match name.as_str() {
            "wr" | "wrp" | "x" => {
                let a = self.expr()?;
                self.expect(b',')?;
                let b = self.expr()?;
                match name.as_str() {
                    "wr" => wreath_imprimitive(&a, &b)?,
                    "wrp" => wreath_product_action(&a, &b)?,
                    _ => direct_product(&a, &b)?,
                }
            }
            "par" => {
                let b = self.expr()?;
                self.expect(b',')?;
                let t = self.int()?;
                parallel_multiple(&b, t)?
            }
            "perm" => self.perm_body()?,
            _ => {
                return Err(Error::Parse {
                    pos: start,
                    msg: format!("unknown operator '{name}'"),
                })
            }
        };
        self.expect(b')')?;
        Ok(g.with_limits(self.limits))
    }

    fn perm_body(&mut self) -> Result<PermGroup> {
        let n = self.int()?;
        self.expect(b';')?;
        let mut gens = Vec::new();
        loop {
            gens.push(self.cycle_product(n)?);
            if self.peek() == Some(b',') {
                self.pos += 1;
            } else {
                break;
            }
        }
        PermGroup::from_generators(n, gens)
    }

    fn cycle_product(&mut self, n: usize) -> Result<Permutation> {
        let start = self.pos;
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        while self.peek() == Some(b'(') {
            self.pos += 1;
            let mut cycle = Vec::new();
            while self.peek() != Some(b')') {
                if self.peek() == Some(b',') {
                    self.pos += 1;
                }
                self.skip_ws();
                let at = self.pos;
                let x = self.int()?;
                if x >= n {
                    return Err(Error::Parse {
                        pos: at,
                        msg: format!("point {x} out of range 0..{n}"),
                    });
                }
                cycle.push(x);
            }
            self.pos += 1;
            cycles.push(cycle);
        }
        if cycles.is_empty() {
            return Err(self.error("expected a cycle"));
        }
        Permutation::from_cycles(n, &cycles).map_err(|e| Error::Parse {
            pos: start,
            msg: e.to_string(),
        })
    }
}
