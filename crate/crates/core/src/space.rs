use std::collections::HashMap;

use crate::error::{Error, Result};

/// A finite measure space: atoms with strictly positive weights.
#[derive(Debug, Clone)]
pub struct DiscreteMeasureSpace {
    ids: Vec<String>,
    weights: Vec<f64>,
    index: HashMap<String, usize>,
}

impl DiscreteMeasureSpace {
    pub fn new(atoms: Vec<(String, f64)>) -> Result<Self> {
        let mut ids = Vec::with_capacity(atoms.len());
        let mut weights = Vec::with_capacity(atoms.len());
        let mut index = HashMap::new();
        for (id, w) in atoms {
            if !(w.is_finite() && w > 0.0) {
                return Err(Error::InvalidSpace(format!(
                    "atom {id:?} has non-positive or non-finite weight {w}"
                )));
            }
            if index.insert(id.clone(), ids.len()).is_some() {
                return Err(Error::InvalidSpace(format!("duplicate atom id {id:?}")));
            }
            ids.push(id);
            weights.push(w);
        }
        Ok(Self {
            ids,
            weights,
            index,
        })
    }

    /// Space with `n` anonymous unit-weight atoms.
    pub fn uniform(n: usize) -> Self {
        Self::new((0..n).map(|i| (format!("a{i}"), 1.0)).collect()).expect("unit weights")
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn ids(&self) -> &[String] {
        &self.ids
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn total_measure(&self) -> f64 {
        self.weights.iter().sum()
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }
}

/// A measurable function given by one extended-real value per atom,
/// aligned with the atom order of its space.
#[derive(Debug, Clone)]
pub struct MeasurableFunction {
    values: Vec<f64>,
}

impl MeasurableFunction {
    /// Values aligned with `space.ids()`. Infinities are allowed (they force
    /// every Lorentz norm to be infinite); NaN is rejected.
    pub fn new(space: &DiscreteMeasureSpace, values: Vec<f64>) -> Result<Self> {
        if values.len() != space.len() {
            return Err(Error::DomainMismatch(format!(
                "function has {} values but space has {} atoms",
                values.len(),
                space.len()
            )));
        }
        if values.iter().any(|v| v.is_nan()) {
            return Err(Error::Domain("function value is NaN".into()));
        }
        Ok(Self { values })
    }

    pub fn from_map(space: &DiscreteMeasureSpace, map: &HashMap<String, f64>) -> Result<Self> {
        if map.len() != space.len() {
            return Err(Error::DomainMismatch(format!(
                "function defined on {} atoms but space has {}",
                map.len(),
                space.len()
            )));
        }
        let mut values = Vec::with_capacity(space.len());
        for id in space.ids() {
            match map.get(id) {
                Some(v) => values.push(*v),
                None => {
                    return Err(Error::DomainMismatch(format!(
                        "function missing atom {id:?}"
                    )))
                }
            }
        }
        Self::new(space, values)
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_spaces() {
        assert!(DiscreteMeasureSpace::new(vec![("a".into(), 0.0)]).is_err());
        assert!(DiscreteMeasureSpace::new(vec![("a".into(), -1.0)]).is_err());
        assert!(
            DiscreteMeasureSpace::new(vec![("a".into(), 1.0), ("a".into(), 2.0)]).is_err(),
            "duplicate ids"
        );
    }

    #[test]
    fn function_must_cover_atoms() {
        let space = DiscreteMeasureSpace::uniform(2);
        assert!(MeasurableFunction::new(&space, vec![1.0]).is_err());
        let mut map = HashMap::new();
        map.insert("a0".to_string(), 1.0);
        map.insert("bogus".to_string(), 2.0);
        assert!(MeasurableFunction::from_map(&space, &map).is_err());
    }
}
