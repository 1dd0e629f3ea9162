//! Distribution specs such as `semicircle(2)`, `atomic(1/2:0, 1/2:1)` or
//! `rho-moments[1,1,1]`.

use std::fmt;
use std::str::FromStr;

use freecommutant_core::cumulant::{cumulants_from_moments, CumulantSequence, MomentSequence};
use freecommutant_core::fock::RhoMoments;
use freecommutant_core::rational::{parse_rational, Rational};
use num_traits::{One, Signed};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DistributionSpec {
    Semicircle(Rational),
    FreePoisson(Rational),
    /// `(weight, atom)` pairs.
    Atomic(Vec<(Rational, Rational)>),
    Cumulants(Vec<Rational>),
    /// Moments `m_1, m_2, …` of a driving measure.
    RhoMoments(Vec<Rational>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpecError {
    Syntax { position: usize, message: String },
    Validation(String),
}

impl fmt::Display for SpecError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpecError::Syntax { position, message } => {
                write!(f, "syntax error at position {position}: {message}")
            }
            SpecError::Validation(message) => write!(f, "invalid distribution: {message}"),
        }
    }
}

impl std::error::Error for SpecError {}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn err(&self, message: impl Into<String>) -> SpecError {
        SpecError::Syntax {
            position: self.pos,
            message: message.into(),
        }
    }

    fn rest(&self) -> &'a str {
        &self.text[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.text.len() - trimmed.len();
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.rest().starts_with(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), SpecError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(format!("expected '{c}'")))
        }
    }

    fn name(&mut self) -> &'a str {
        self.skip_ws();
        let len = self
            .rest()
            .find(|c: char| !(c.is_ascii_alphanumeric() || c == '-' || c == '_'))
            .unwrap_or(self.rest().len());
        let name = &self.rest()[..len];
        self.pos += len;
        name
    }

    fn rational(&mut self) -> Result<Rational, SpecError> {
        self.skip_ws();
        let start = self.pos;
        let len = self
            .rest()
            .find(|c: char| !(c.is_ascii_digit() || matches!(c, '-' | '+' | '/' | '\u{2212}')))
            .unwrap_or(self.rest().len());
        let token = &self.rest()[..len];
        let value = parse_rational(token).ok_or_else(|| SpecError::Syntax {
            position: start,
            message: format!("expected a rational \"p\" or \"p/q\", found {token:?}"),
        })?;
        self.pos += len;
        Ok(value)
    }

    /// Items separated by commas up to `close`; at least one item.
    fn list<T>(
        &mut self,
        close: char,
        mut item: impl FnMut(&mut Self) -> Result<T, SpecError>,
    ) -> Result<Vec<T>, SpecError> {
        let mut out = vec![item(self)?];
        while self.eat(',') {
            out.push(item(self)?);
        }
        self.expect(close)?;
        Ok(out)
    }
}

pub fn parse_spec(text: &str) -> Result<DistributionSpec, SpecError> {
    let mut c = Cursor { text, pos: 0 };
    let name_pos = {
        c.skip_ws();
        c.pos
    };
    let name = c.name().to_ascii_lowercase();
    let spec = match name.as_str() {
        "semicircle" => {
            c.expect('(')?;
            let v = c.rational()?;
            c.expect(')')?;
            if !v.is_positive() {
                return Err(SpecError::Validation("semicircle variance must be positive".into()));
            }
            DistributionSpec::Semicircle(v)
        }
        "free-poisson" => {
            c.expect('(')?;
            let l = c.rational()?;
            c.expect(')')?;
            if !l.is_positive() {
                return Err(SpecError::Validation("free Poisson rate must be positive".into()));
            }
            DistributionSpec::FreePoisson(l)
        }
        "atomic" => {
            c.expect('(')?;
            let atoms = c.list(')', |c| {
                let w = c.rational()?;
                c.expect(':')?;
                Ok((w, c.rational()?))
            })?;
            if atoms.iter().any(|(w, _)| !w.is_positive()) {
                return Err(SpecError::Validation("atomic weights must be positive".into()));
            }
            let total: Rational = atoms.iter().map(|(w, _)| w.clone()).sum();
            if !total.is_one() {
                return Err(SpecError::Validation(format!("atomic weights sum to {total}, not 1")));
            }
            DistributionSpec::Atomic(atoms)
        }
        "cumulants" => {
            c.expect('[')?;
            DistributionSpec::Cumulants(c.list(']', Cursor::rational)?)
        }
        "rho-moments" => {
            c.expect('[')?;
            DistributionSpec::RhoMoments(c.list(']', Cursor::rational)?)
        }
        "" => return Err(c.err("expected a distribution name")),
        other => {
            return Err(SpecError::Syntax {
                position: name_pos,
                message: format!(
                    "unknown distribution {other:?}; expected semicircle, free-poisson, atomic, cumulants or rho-moments"
                ),
            })
        }
    };
    c.skip_ws();
    if !c.rest().is_empty() {
        return Err(c.err("unexpected trailing input"));
    }
    Ok(spec)
}

fn join(values: &[Rational]) -> String {
    values
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

impl fmt::Display for DistributionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DistributionSpec::Semicircle(v) => write!(f, "semicircle({v})"),
            DistributionSpec::FreePoisson(l) => write!(f, "free-poisson({l})"),
            DistributionSpec::Atomic(atoms) => {
                let items: Vec<String> = atoms.iter().map(|(w, a)| format!("{w}:{a}")).collect();
                write!(f, "atomic({})", items.join(", "))
            }
            DistributionSpec::Cumulants(values) => write!(f, "cumulants[{}]", join(values)),
            DistributionSpec::RhoMoments(values) => write!(f, "rho-moments[{}]", join(values)),
        }
    }
}

impl FromStr for DistributionSpec {
    type Err = SpecError;

    fn from_str(s: &str) -> Result<Self, SpecError> {
        parse_spec(s)
    }
}

impl DistributionSpec {
    /// Free cumulants up to `order`. Literal lists are used as given, so
    /// orders beyond them are reported as missing when needed.
    pub fn cumulants(&self, order: usize) -> freecommutant_core::Result<CumulantSequence> {
        Ok(match self {
            DistributionSpec::Semicircle(v) => CumulantSequence::semicircle(v.clone()),
            DistributionSpec::FreePoisson(l) => CumulantSequence::free_poisson(l.clone(), order),
            DistributionSpec::Atomic(atoms) => {
                cumulants_from_moments(&MomentSequence::of_atoms(atoms, order), order)?
            }
            DistributionSpec::Cumulants(values) => CumulantSequence::new(values.clone()),
            // compound free Poisson law driven by ρ
            DistributionSpec::RhoMoments(values) => CumulantSequence::new(values.clone()),
        })
    }

    /// Moments of a driving measure `ρ`, for specs that describe one.
    pub fn rho(&self, order: usize) -> Result<RhoMoments, SpecError> {
        match self {
            DistributionSpec::Atomic(atoms) => Ok(RhoMoments::of_atoms(atoms, order)),
            DistributionSpec::RhoMoments(values) => {
                Ok(RhoMoments::from_positive_orders(values.clone()))
            }
            _ => Err(SpecError::Validation(
                "a driving measure must be given as atomic(...) or rho-moments[...]".into(),
            )),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use freecommutant_core::rational::{int, rat};

    #[test]
    fn parses_examples() {
        let fp = parse_spec("free-poisson(1)").unwrap();
        assert_eq!(
            fp.cumulants(5).unwrap().values(),
            vec![int(1); 5].as_slice()
        );

        let bern = parse_spec("atomic(1/2:0, 1/2:1)").unwrap();
        let m =
            freecommutant_core::cumulant::moments_from_cumulants(&bern.cumulants(6).unwrap(), 6)
                .unwrap();
        assert!(m.values()[1..].iter().all(|v| *v == rat(1, 2)));

        let semi = parse_spec("cumulants[0,1,0,0,0]").unwrap();
        assert_eq!(
            semi.cumulants(5).unwrap().values(),
            &[int(0), int(1), int(0), int(0), int(0)]
        );
        assert_eq!(semi.to_string(), "cumulants[0, 1, 0, 0, 0]");
        assert_eq!(bern.to_string(), "atomic(1/2:0, 1/2:1)");

        assert_eq!(
            parse_spec(" semicircle( 3/2 ) ").unwrap(),
            DistributionSpec::Semicircle(rat(3, 2))
        );
        assert_eq!(
            parse_spec("rho-moments[1,-2/3]").unwrap(),
            DistributionSpec::RhoMoments(vec![int(1), rat(-2, 3)])
        );
    }

    #[test]
    fn reports_positions_and_validation() {
        match parse_spec("atomic(1/2:0, 1/2 1)") {
            Err(SpecError::Syntax { position, .. }) => assert_eq!(position, 18),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            parse_spec("atomic(1/2:0, 1/3:1)"),
            Err(SpecError::Validation(_))
        ));
        assert!(matches!(
            parse_spec("atomic(-1/2:0, 3/2:1)"),
            Err(SpecError::Validation(_))
        ));
        assert!(matches!(
            parse_spec("gaussian(1)"),
            Err(SpecError::Syntax { position: 0, .. })
        ));
        assert!(parse_spec("semicircle(1) x").is_err());
        assert!(parse_spec("cumulants[]").is_err());
        assert!(parse_spec("semicircle(0)").is_err());
    }

    #[test]
    fn rho_only_from_measures() {
        let rho = parse_spec("atomic(1:2)").unwrap().rho(4).unwrap();
        assert_eq!(rho.values(), &[int(1), int(2), int(4), int(8), int(16)]);
        assert!(parse_spec("semicircle(1)").unwrap().rho(4).is_err());
    }
}
