//! JSON form of Laurent polynomials and rational functions:
//! `{"num": {exp: "rational"}, "den": {...}, "root_order": r}` with
//! exponents counted in `s`.

use num_rational::BigRational;
use serde_json::{Map, Value};

use super::{LaurentPoly, RationalFn};
use crate::error::{Error, Result};

pub fn laurent_to_json(p: &LaurentPoly) -> Value {
    let mut m = Map::new();
    for (e, c) in p.terms() {
        m.insert(e.to_string(), Value::String(c.to_string()));
    }
    Value::Object(m)
}

pub fn laurent_from_json(v: &Value) -> Result<LaurentPoly> {
    let obj = v.as_object().ok_or_else(|| Error::Parse("expected an object of terms".into()))?;
    let mut p = LaurentPoly::zero();
    for (k, c) in obj {
        let e: i64 = k.parse().map_err(|_| Error::Parse(format!("bad exponent {k:?}")))?;
        let s = c.as_str().ok_or_else(|| Error::Parse("coefficients must be strings".into()))?;
        let r: BigRational = s.parse().map_err(|_| Error::Parse(format!("bad rational {s:?}")))?;
        p.add_term(e, r);
    }
    Ok(p)
}

pub fn ratfn_to_json(f: &RationalFn, root_order: u32) -> Value {
    let mut m = Map::new();
    m.insert("num".into(), laurent_to_json(&f.num()));
    m.insert("den".into(), laurent_to_json(&f.den()));
    m.insert("root_order".into(), Value::from(root_order));
    Value::Object(m)
}

pub fn ratfn_from_json(v: &Value) -> Result<(RationalFn, u32)> {
    let get = |k: &str| v.get(k).ok_or_else(|| Error::Parse(format!("missing field {k:?}")));
    let num = laurent_from_json(get("num")?)?;
    let den = laurent_from_json(get("den")?)?;
    let r = get("root_order")?
        .as_u64()
        .ok_or_else(|| Error::Parse("root_order must be an integer".into()))? as u32;
    Ok((RationalFn::from_parts(&num, &den)?, r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Field;

    #[test]
    fn round_trip() {
        let f = RationalFn::from_int_coeffs(&[3, 0, -1])
            .checked_div(&RationalFn::from_int_coeffs(&[2, 5]))
            .unwrap()
            * RationalFn::s().powi(-2).unwrap();
        let v = ratfn_to_json(&f, 4);
        let (g, r) = ratfn_from_json(&v).unwrap();
        assert_eq!(f, g);
        assert_eq!(r, 4);
        assert_eq!(v["den"]["0"], "1");
    }
}
