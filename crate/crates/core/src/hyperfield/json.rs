use serde_json::Value;

use crate::error::{Error, Result};
use crate::valuation::Valuation;

use super::{Krasner, RealTropVal, Sign, TropVal};

/// JSON representation of single hyperfield elements.
pub trait ElementJson: Sized {
    fn to_json(&self) -> Value;
    fn from_json(v: &Value) -> Result<Self>;
}

fn text(v: &Value) -> Result<String> {
    match v {
        Value::String(s) => Ok(s.clone()),
        Value::Number(n) => Ok(n.to_string()),
        _ => Err(Error::Invalid(format!("expected a string, got {v}"))),
    }
}

impl ElementJson for RealTropVal {
    fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("serializable")
    }
    fn from_json(v: &Value) -> Result<Self> {
        serde_json::from_value(v.clone()).map_err(|e| Error::Invalid(e.to_string()))
    }
}

impl ElementJson for TropVal {
    fn to_json(&self) -> Value {
        Value::String(self.0.to_string())
    }
    fn from_json(v: &Value) -> Result<Self> {
        Valuation::parse(&text(v)?).map(TropVal)
    }
}

impl ElementJson for Sign {
    fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }
    fn from_json(v: &Value) -> Result<Self> {
        match v {
            Value::Number(n) if n.as_i64() == Some(1) => Ok(Sign::Plus),
            Value::Number(n) if n.as_i64() == Some(-1) => Ok(Sign::Minus),
            _ => Sign::parse(&text(v)?),
        }
    }
}

impl ElementJson for Krasner {
    fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }
    fn from_json(v: &Value) -> Result<Self> {
        match v {
            Value::Bool(b) => Ok(Krasner(*b)),
            _ => match text(v)?.as_str() {
                "0" => Ok(Krasner(false)),
                "1" => Ok(Krasner(true)),
                other => Err(Error::Invalid(format!("invalid Krasner element {other:?}"))),
            },
        }
    }
}
