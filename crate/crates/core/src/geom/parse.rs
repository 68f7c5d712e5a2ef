//! Text forms for points and lines used by the CLI and scene files.

use super::{Line, Point};
use crate::error::{Error, Result};

/// Parses `"x,y"`.
pub fn parse_point(s: &str) -> Result<Point> {
    let mut parts = s.split(',').map(str::trim);
    let (Some(x), Some(y), None) = (parts.next(), parts.next(), parts.next()) else {
        return Err(Error::Parse(format!("expected \"x,y\", got {s:?}")));
    };
    let num = |t: &str| {
        t.parse::<f64>()
            .map_err(|_| Error::Parse(format!("bad number {t:?} in {s:?}")))
    };
    Point::try_new(num(x)?, num(y)?)
}

/// Parses `"x1,y1;x2,y2;..."`.
pub fn parse_point_list(s: &str) -> Result<Vec<Point>> {
    s.split(';')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(parse_point)
        .collect()
}

/// Parses a linear equation in `x` and `y`, for example `"y=0"`,
/// `"y = 2x - 3"`, `"x=1"` or `"3x + 4y - 5 = 0"`, or bare coefficients
/// `"a,b,c"`.
pub fn parse_line(s: &str) -> Result<Line> {
    let s = s.trim();
    if !s.contains('=') {
        let coeffs: Vec<f64> = s
            .split(',')
            .map(|t| t.trim().parse::<f64>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| Error::Parse(format!("bad line {s:?}")))?;
        let [a, b, c] = coeffs[..] else {
            return Err(Error::Parse(format!("expected three coefficients, got {s:?}")));
        };
        return Line::new(a, b, c);
    }
    let (lhs, rhs) = s
        .split_once('=')
        .ok_or_else(|| Error::Parse(format!("bad line {s:?}")))?;
    let l = parse_linear(lhs)?;
    let r = parse_linear(rhs)?;
    Line::new(l[0] - r[0], l[1] - r[1], l[2] - r[2])
        .map_err(|_| Error::Parse(format!("{s:?} does not describe a line")))
}

/// Coefficients `[x, y, constant]` of a sum of terms like `2.5x`, `-y`, `3`.
fn parse_linear(expr: &str) -> Result<[f64; 3]> {
    let bad = || Error::Parse(format!("bad linear expression {expr:?}"));
    let chars: Vec<char> = expr.chars().filter(|c| !c.is_whitespace()).collect();
    if chars.is_empty() {
        return Err(bad());
    }
    let mut out = [0.0; 3];
    let mut i = 0;
    while i < chars.len() {
        let mut sign = 1.0;
        while i < chars.len() && (chars[i] == '+' || chars[i] == '-') {
            if chars[i] == '-' {
                sign = -sign;
            }
            i += 1;
        }
        let start = i;
        while i < chars.len() {
            let c = chars[i];
            let exp_sign = (c == '+' || c == '-') && i > start && matches!(chars[i - 1], 'e' | 'E');
            if c.is_ascii_digit() || c == '.' || c == 'e' || c == 'E' || exp_sign {
                i += 1;
            } else {
                break;
            }
        }
        let coef = if i > start {
            let text: String = chars[start..i].iter().collect();
            text.parse::<f64>().map_err(|_| bad())?
        } else {
            1.0
        };
        if i < chars.len() && chars[i] == '*' {
            i += 1;
        }
        let slot = match chars.get(i) {
            Some('x') | Some('X') => {
                i += 1;
                0
            }
            Some('y') | Some('Y') => {
                i += 1;
                1
            }
            _ if i > start => 2,
            _ => return Err(bad()),
        };
        out[slot] += sign * coef;
        if i < chars.len() && chars[i] != '+' && chars[i] != '-' {
            return Err(bad());
        }
    }
    Ok(out)
}
