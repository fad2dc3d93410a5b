use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linalg::BipartiteState;
use crate::twoqubit;

use super::{maximally_mixed, phi_plus, rank_counterexample, werner, werner_counterpart};

/// A named family of states, built from numeric parameters.
pub trait StateBuilder: Send + Sync {
    fn name(&self) -> &'static str;

    /// Parameter names, in the order `build` expects them.
    fn params(&self) -> &'static [&'static str];

    fn build(&self, args: &[f64]) -> Result<BipartiteState>;
}

fn as_dim(name: &str, v: f64) -> Result<usize> {
    if v.fract() != 0.0 || v < 1.0 {
        return Err(Error::InvalidParameter(format!(
            "{name} = {v} is not a positive integer"
        )));
    }
    Ok(v as usize)
}

macro_rules! builder {
    ($ty:ident, $name:literal, [$($p:literal),*], |$args:ident| $body:expr) => {
        struct $ty;

        impl StateBuilder for $ty {
            fn name(&self) -> &'static str {
                $name
            }

            fn params(&self) -> &'static [&'static str] {
                &[$($p),*]
            }

            fn build(&self, $args: &[f64]) -> Result<BipartiteState> {
                $body
            }
        }
    };
}

builder!(Werner, "werner", ["d", "p"], |a| werner(as_dim("d", a[0])?, a[1]));
builder!(Counterpart, "counterpart", ["d", "p"], |a| werner_counterpart(
    as_dim("d", a[0])?,
    a[1]
));
builder!(Family, "family", ["r"], |a| twoqubit::family_state(a[0]));
builder!(FamilyPrime, "family-prime", ["r"], |a| twoqubit::family_transformed(
    a[0]
));
builder!(RankCounterexample, "rank-counterexample", [], |_a| rank_counterexample(
));
builder!(PhiPlus, "phi-plus", [], |_a| Ok(phi_plus()));
builder!(MaximallyMixed, "mixed", ["dA", "dB"], |a| Ok(maximally_mixed(
    as_dim("dA", a[0])?,
    as_dim("dB", a[1])?
)));

/// Builders looked up by name; specs look like `werner:3:0.9`.
#[derive(Clone, Default)]
pub struct StateRegistry {
    builders: BTreeMap<&'static str, Arc<dyn StateBuilder>>,
}

impl StateRegistry {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn with_defaults() -> Self {
        let mut r = Self::empty();
        r.register(Arc::new(Werner));
        r.register(Arc::new(Counterpart));
        r.register(Arc::new(Family));
        r.register(Arc::new(FamilyPrime));
        r.register(Arc::new(RankCounterexample));
        r.register(Arc::new(PhiPlus));
        r.register(Arc::new(MaximallyMixed));
        r
    }

    /// Replaces any builder already registered under the same name.
    pub fn register(&mut self, builder: Arc<dyn StateBuilder>) {
        self.builders.insert(builder.name(), builder);
    }

    pub fn get(&self, name: &str) -> Option<&Arc<dyn StateBuilder>> {
        self.builders.get(name)
    }

    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.builders.keys().copied()
    }

    /// Splits `name:arg:arg` and checks the argument count.
    pub fn parse<'a>(&'a self, spec: &str) -> Result<(&'a dyn StateBuilder, Vec<f64>)> {
        let mut parts = spec.split(':');
        let name = parts.next().unwrap_or_default();
        let builder = self.get(name).ok_or_else(|| Error::Unknown {
            kind: "state builder",
            name: name.to_string(),
        })?;
        let args = parts
            .map(|s| {
                s.trim()
                    .parse::<f64>()
                    .map_err(|_| Error::InvalidParameter(format!("'{s}' in '{spec}' is not a number")))
            })
            .collect::<Result<Vec<_>>>()?;
        if args.len() != builder.params().len() {
            return Err(Error::InvalidParameter(format!(
                "'{name}' takes {} parameter(s) ({}), got {}",
                builder.params().len(),
                builder.params().join(", "),
                args.len()
            )));
        }
        Ok((builder.as_ref(), args))
    }

    pub fn build(&self, spec: &str) -> Result<BipartiteState> {
        let (builder, args) = self.parse(spec)?;
        builder.build(&args)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_builds() {
        let reg = StateRegistry::with_defaults();
        let s = reg.build("werner:3:0.9").unwrap();
        assert_eq!(s.dim_a(), 3);
        assert!(reg.build("rank-counterexample").is_ok());
        assert!(reg.build("family:0.3").is_ok());
        assert!(reg.build("family-prime:0.3").is_ok());
    }

    #[test]
    fn rejects_bad_specs() {
        let reg = StateRegistry::with_defaults();
        assert!(matches!(reg.build("nonsense:1"), Err(Error::Unknown { .. })));
        assert!(matches!(reg.build("werner:3"), Err(Error::InvalidParameter(_))));
        assert!(matches!(reg.build("werner:x:0.5"), Err(Error::InvalidParameter(_))));
        assert!(matches!(reg.build("werner:2.5:0.5"), Err(Error::InvalidParameter(_))));
        assert!(reg.build("counterpart:2:0.5").is_err());
    }
}
