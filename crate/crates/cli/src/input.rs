//! Reading element and request files.

use std::path::Path;
use std::sync::Arc;

use serde::de::DeserializeOwned;
use serde::Deserialize;
use vinberg::graded::{graded_from_labels, GradedAlgebra, KacLabels};
use vinberg::kernel::Rational;
use vinberg::lie::{Element, ElementJson};
use vinberg::rootsys::chevalley_of;
use vinberg::trivector::{e8_model, TrivectorJson};

use crate::CliError;

/// An element of a Chevalley algebra, optionally with the grading it lives in.
#[derive(Clone, Debug, Deserialize)]
pub struct GradedElementJson {
    #[serde(default)]
    pub grading: Option<String>,
    pub algebra: String,
    pub coeffs: Vec<(String, Rational)>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum ElementFile {
    Trivector(TrivectorJson),
    Element(GradedElementJson),
}

pub struct Loaded {
    pub g: GradedAlgebra,
    pub x: Vec<Rational>,
}

impl Loaded {
    pub fn grading_name(&self) -> Option<String> {
        self.g.labels.as_ref().map(ToString::to_string)
    }

    pub fn json_of(&self, v: &[Rational]) -> ElementJson {
        Element::from_dense(&self.g.algebra, v).to_json(&self.g.algebra)
    }
}

pub fn read_text(path: &Path) -> Result<String, CliError> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::Read::read_to_string(&mut std::io::stdin(), &mut s).map_err(|e| CliError::Input(format!("stdin: {e}")))?;
        return Ok(s);
    }
    std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = read_text(path)?;
    serde_json::from_str(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn grading_for(algebra: &str, grading: Option<&str>) -> Result<GradedAlgebra, CliError> {
    if algebra == e8_model().graded.algebra.id() {
        if grading.is_some() {
            return Err(CliError::Input("the trivector model carries its own grading".into()));
        }
        return Ok(e8_model().graded.clone());
    }
    match grading {
        Some(text) => {
            let labels: KacLabels = text.parse()?;
            if labels.cartan_type.to_string() != algebra {
                return Err(CliError::Input(format!("grading {text} does not belong to {algebra}")));
            }
            Ok(graded_from_labels(&labels)?)
        }
        None => Ok(GradedAlgebra::ungraded(chevalley_of(algebra)?.algebra)),
    }
}

pub fn load_element(path: &Path) -> Result<Loaded, CliError> {
    match read_json::<ElementFile>(path)? {
        ElementFile::Trivector(t) => {
            let g = e8_model().graded.clone();
            let x = t.terms.to_vector(t.dual);
            Ok(Loaded { g, x })
        }
        ElementFile::Element(e) => {
            let g = grading_for(&e.algebra, e.grading.as_deref())?;
            let j = ElementJson { algebra: e.algebra, coeffs: e.coeffs };
            let x = Element::from_json(&j, &g.algebra)?.to_dense(g.dim());
            Ok(Loaded { g, x })
        }
    }
}

/// Loads two elements that must share an algebra and grading.
pub fn load_pair(a: &Path, b: &Path) -> Result<(Loaded, Vec<Rational>), CliError> {
    let x = load_element(a)?;
    let y = load_element(b)?;
    if !Arc::ptr_eq(&x.g.algebra, &y.g.algebra) && x.g.algebra.id() != y.g.algebra.id() {
        return Err(CliError::Input(format!("{} and {} live in different algebras", a.display(), b.display())));
    }
    if x.grading_name() != y.grading_name() {
        return Err(CliError::Input(format!("{} and {} use different gradings", a.display(), b.display())));
    }
    Ok((x, y.x))
}
