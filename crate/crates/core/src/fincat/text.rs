//! Line-oriented category format.
//!
//! ```text
//! # the walking arrow
//! obj 0
//! obj 1
//! mor a : 0 -> 1
//! id 0 = id0
//! comp id0 ; a = a
//! ```

use std::fmt::Write;

use super::RawCategory;
use crate::ParseError;

pub fn parse_category(src: &str) -> Result<RawCategory, ParseError> {
    let mut raw = RawCategory::default();
    for (lineno, line) in src.lines().enumerate() {
        let line = strip_comment(line);
        if line.is_empty() {
            continue;
        }
        let err = |msg: &str| ParseError::new(lineno + 1, msg);
        let (keyword, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        let rest = rest.trim();
        match keyword {
            "obj" => {
                let name = single_token(rest).ok_or_else(|| err("expected `obj <id>`"))?;
                raw.objects.push(name);
            }
            "mor" => {
                let (name, sig) = rest
                    .split_once(':')
                    .ok_or_else(|| err("expected `mor <id> : <dom> -> <cod>`"))?;
                let (dom, cod) = sig
                    .split_once("->")
                    .ok_or_else(|| err("expected `<dom> -> <cod>`"))?;
                let name = single_token(name).ok_or_else(|| err("bad morphism id"))?;
                let dom = single_token(dom).ok_or_else(|| err("bad domain"))?;
                let cod = single_token(cod).ok_or_else(|| err("bad codomain"))?;
                raw.morphisms.push((name, dom, cod));
            }
            "id" => {
                let (obj, mor) = rest
                    .split_once('=')
                    .ok_or_else(|| err("expected `id <obj> = <mor>`"))?;
                let obj = single_token(obj).ok_or_else(|| err("bad object id"))?;
                let mor = single_token(mor).ok_or_else(|| err("bad morphism id"))?;
                raw.identities.push((obj, mor));
            }
            "comp" => {
                let (lhs, h) = rest
                    .split_once('=')
                    .ok_or_else(|| err("expected `comp <f> ; <g> = <h>`"))?;
                let (f, g) = lhs
                    .split_once(';')
                    .ok_or_else(|| err("expected `<f> ; <g>`"))?;
                let f = single_token(f).ok_or_else(|| err("bad morphism id"))?;
                let g = single_token(g).ok_or_else(|| err("bad morphism id"))?;
                let h = single_token(h).ok_or_else(|| err("bad morphism id"))?;
                raw.compositions.push((f, g, h));
            }
            other => return Err(err(&format!("unknown directive `{other}`"))),
        }
    }
    Ok(raw)
}

pub fn write_category(raw: &RawCategory) -> String {
    let mut out = String::new();
    for o in &raw.objects {
        let _ = writeln!(out, "obj {o}");
    }
    for (m, d, c) in &raw.morphisms {
        let _ = writeln!(out, "mor {m} : {d} -> {c}");
    }
    for (o, m) in &raw.identities {
        let _ = writeln!(out, "id {o} = {m}");
    }
    for (f, g, h) in &raw.compositions {
        let _ = writeln!(out, "comp {f} ; {g} = {h}");
    }
    out
}

pub(crate) fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("").trim()
}

fn single_token(s: &str) -> Option<String> {
    let mut it = s.split_whitespace();
    let tok = it.next()?;
    it.next().is_none().then(|| tok.to_string())
}
