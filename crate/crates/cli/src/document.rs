//! Text format for arrangements.

use serde::{Deserialize, Serialize};

use orthocircle::arrangement::Arrangement;
use orthocircle::geom::{Circle, Point, Tolerance};

use crate::CliError;

pub const FORMAT_VERSION: &str = "1";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CircleRecord {
    pub id: String,
    pub cx: f64,
    pub cy: f64,
    pub r: f64,
}

/// Floats are written in shortest round-trip form, so parsing a written
/// document reproduces every coordinate bit for bit.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrangementDocument {
    pub format_version: String,
    pub tolerance: f64,
    pub circles: Vec<CircleRecord>,
}

impl ArrangementDocument {
    pub fn from_arrangement(arr: &Arrangement) -> Self {
        ArrangementDocument {
            format_version: FORMAT_VERSION.to_string(),
            tolerance: arr.tol().rel_eps(),
            circles: arr
                .circles()
                .iter()
                .map(|c| CircleRecord { id: c.id.to_string(), cx: c.center.x, cy: c.center.y, r: c.radius })
                .collect(),
        }
    }

    /// Builds the arrangement, optionally overriding the stored tolerance.
    pub fn to_arrangement(&self, tolerance: Option<f64>) -> Result<Arrangement, CliError> {
        if self.format_version != FORMAT_VERSION {
            return Err(CliError::Format(format!("unsupported format_version {:?}", self.format_version)));
        }
        let tol = Tolerance::new(tolerance.unwrap_or(self.tolerance))?;
        let circles = self
            .circles
            .iter()
            .map(|c| Circle::new(c.id.as_str(), Point::new(c.cx, c.cy), c.r))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Arrangement::new(circles, tol)?)
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_text(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("documents always serialize");
        s.push('\n');
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use orthocircle::generators::make_b;

    #[test]
    fn round_trip_is_exact() {
        let arr = make_b(3, 7).unwrap();
        let text = ArrangementDocument::from_arrangement(&arr).to_text();
        let back = ArrangementDocument::parse(&text).unwrap().to_arrangement(None).unwrap();
        assert_eq!(back, arr);
    }

    #[test]
    fn rejects_bad_documents() {
        let bad_version = r#"{"format_version":"2","tolerance":1e-9,"circles":[]}"#;
        assert!(ArrangementDocument::parse(bad_version).unwrap().to_arrangement(None).is_err());
        let bad_radius = r#"{"format_version":"1","tolerance":1e-9,"circles":[{"id":"a","cx":0,"cy":0,"r":-1}]}"#;
        assert!(ArrangementDocument::parse(bad_radius).unwrap().to_arrangement(None).is_err());
        let dup = r#"{"format_version":"1","tolerance":1e-9,"circles":[
            {"id":"a","cx":0,"cy":0,"r":1},{"id":"a","cx":5,"cy":0,"r":1}]}"#;
        assert!(ArrangementDocument::parse(dup).unwrap().to_arrangement(None).is_err());
        assert!(ArrangementDocument::parse("{").is_err());
    }
}
