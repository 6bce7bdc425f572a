//! Name-keyed registry of stratification recursions.

use super::strata::{ComplexPoincare, HodgeT1, HodgeXy, RealPoincare, Stratification};
use crate::error::{Error, Result};
use crate::hn::{check_genus, CurveData};
use crate::series::{BiSeries, TruncatedSeries, UniSeries};

/// Curve parameters a recursion may need.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CurveParams {
    pub genus: u32,
    pub real_components: Option<u32>,
}

impl CurveParams {
    pub fn complex(genus: u32) -> Self {
        CurveParams {
            genus,
            real_components: None,
        }
    }

    pub fn real(genus: u32, real_components: u32) -> Self {
        CurveParams {
            genus,
            real_components: Some(real_components),
        }
    }
}

pub type Factory<S> = fn(&CurveParams) -> Result<Box<dyn Stratification<Series = S>>>;

pub struct Entry<S: TruncatedSeries> {
    pub name: &'static str,
    pub summary: &'static str,
    pub needs_real_components: bool,
    factory: Factory<S>,
}

impl<S: TruncatedSeries> Entry<S> {
    pub fn new(name: &'static str, summary: &'static str, needs_real_components: bool, factory: Factory<S>) -> Self {
        Entry {
            name,
            summary,
            needs_real_components,
            factory,
        }
    }
}

pub struct Registry<S: TruncatedSeries> {
    entries: Vec<Entry<S>>,
}

impl<S: TruncatedSeries> Default for Registry<S> {
    fn default() -> Self {
        Registry { entries: Vec::new() }
    }
}

impl<S: TruncatedSeries> Registry<S> {
    /// Adds an entry, replacing any existing one with the same name.
    pub fn register(&mut self, entry: Entry<S>) {
        self.entries.retain(|e| e.name != entry.name);
        self.entries.push(entry);
    }

    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.entries.iter().map(|e| e.name)
    }

    pub fn entries(&self) -> &[Entry<S>] {
        &self.entries
    }

    pub fn get(&self, name: &str) -> Result<&Entry<S>> {
        self.entries
            .iter()
            .find(|e| e.name == name)
            .ok_or_else(|| Error::Unknown {
                kind: "recursion",
                name: name.to_string(),
                known: self.names().collect::<Vec<_>>().join(", "),
            })
    }

    pub fn build(&self, name: &str, params: &CurveParams) -> Result<Box<dyn Stratification<Series = S>>> {
        let entry = self.get(name)?;
        check_genus(params.genus)?;
        if entry.needs_real_components && params.real_components.is_none() {
            return Err(Error::MissingParameter("n"));
        }
        (entry.factory)(params)
    }
}

/// `poincare`, `hodge-t1` and `real`.
pub fn univariate() -> Registry<UniSeries> {
    let mut reg = Registry::default();
    reg.register(Entry::new(
        "poincare",
        "complex Poincaré polynomial Q_t(r,d), weight t^2",
        false,
        |p| Ok(Box::new(ComplexPoincare { genus: p.genus })),
    ));
    reg.register(Entry::new(
        "hodge-t1",
        "Hodge polynomial at x=t, y=1, weight t",
        false,
        |p| Ok(Box::new(HodgeT1 { genus: p.genus })),
    ));
    reg.register(Entry::new(
        "real",
        "mod 2 Poincaré polynomial of the real locus, weight t",
        true,
        |p| {
            let n = p.real_components.ok_or(Error::MissingParameter("n"))?;
            Ok(Box::new(RealPoincare {
                curve: CurveData::real(p.genus, n)?,
            }))
        },
    ));
    reg
}

/// `hodge-xy`.
pub fn bivariate() -> Registry<BiSeries> {
    let mut reg = Registry::default();
    reg.register(Entry::new(
        "hodge-xy",
        "Hodge polynomial in x and y, weight xy",
        false,
        |p| Ok(Box::new(HodgeXy { genus: p.genus })),
    ));
    reg
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lookup_by_name() {
        let reg = univariate();
        assert_eq!(reg.names().collect::<Vec<_>>(), ["poincare", "hodge-t1", "real"]);
        let s = reg.build("hodge-t1", &CurveParams::complex(3)).unwrap();
        assert_eq!(s.name(), "hodge-t1");
        assert_eq!(s.genus(), 3);
        assert_eq!(
            bivariate()
                .build("hodge-xy", &CurveParams::complex(2))
                .unwrap()
                .weight(),
            (1, 1)
        );
    }

    #[test]
    fn unknown_and_missing_parameters() {
        let reg = univariate();
        let err = reg.build("zagier", &CurveParams::complex(2)).err().unwrap();
        assert!(err.to_string().contains("known: poincare, hodge-t1, real"));
        assert_eq!(
            reg.build("real", &CurveParams::complex(2)).err(),
            Some(Error::MissingParameter("n"))
        );
        assert!(reg.build("real", &CurveParams::real(2, 4)).is_err());
        assert!(reg.build("poincare", &CurveParams::complex(0)).is_err());
    }

    #[test]
    fn register_replaces_by_name() {
        let mut reg = univariate();
        reg.register(Entry::new("poincare", "override", false, |p| {
            Ok(Box::new(HodgeT1 { genus: p.genus }))
        }));
        assert_eq!(reg.entries().len(), 3);
        assert_eq!(reg.get("poincare").unwrap().summary, "override");
    }
}
