#![allow(dead_code)]

pub mod formulas;

use std::collections::HashMap;

use proptest::strategy::{Strategy, ValueTree};
use proptest::test_runner::{Config, TestRng, TestRunner, RngAlgorithm};
use thomforge::algebra::{rat, Rational};
use thomforge::chern::GermSignature;
use thomforge::database::{Database, EntryKind, SingularityKey};
use thomforge::invariants::{count_stable, mu_discriminant, mu_image, mu_image2};

/// Evaluates `+ - * / ^ ( )` expressions over integers and named variables exactly.
pub fn eval(expr: &str, env: &HashMap<String, Rational>) -> Rational {
    let tokens: Vec<char> = expr.chars().filter(|c| !c.is_whitespace()).collect();
    let mut p = Evaluator { t: &tokens, i: 0, env };
    let v = p.sum();
    assert_eq!(p.i, tokens.len(), "trailing input in {expr}");
    v
}

struct Evaluator<'a> {
    t: &'a [char],
    i: usize,
    env: &'a HashMap<String, Rational>,
}

impl Evaluator<'_> {
    fn peek(&self) -> Option<char> {
        self.t.get(self.i).copied()
    }

    fn sum(&mut self) -> Rational {
        let mut v = self.product();
        while let Some(c @ ('+' | '-')) = self.peek() {
            self.i += 1;
            let r = self.product();
            v = if c == '+' { v + r } else { v - r };
        }
        v
    }

    fn product(&mut self) -> Rational {
        let mut v = self.unary();
        while let Some(c @ ('*' | '/')) = self.peek() {
            self.i += 1;
            let r = self.unary();
            v = if c == '*' { v * r } else { v / r };
        }
        v
    }

    fn unary(&mut self) -> Rational {
        if self.peek() == Some('-') {
            self.i += 1;
            return -self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Rational {
        let base = self.atom();
        if self.peek() == Some('^') {
            self.i += 1;
            let e = self.integer();
            return (0..e).fold(rat(1), |acc, _| acc * &base);
        }
        base
    }

    fn integer(&mut self) -> u32 {
        let start = self.i;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.i += 1;
        }
        self.t[start..self.i].iter().collect::<String>().parse().unwrap()
    }

    fn atom(&mut self) -> Rational {
        match self.peek() {
            Some('(') => {
                self.i += 1;
                let v = self.sum();
                assert_eq!(self.peek(), Some(')'));
                self.i += 1;
                v
            }
            Some(c) if c.is_ascii_digit() => rat(self.integer() as i64),
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.i;
                while self.peek().is_some_and(|c| c.is_ascii_alphanumeric()) {
                    self.i += 1;
                }
                let name: String = self.t[start..self.i].iter().collect();
                self.env.get(&name).unwrap_or_else(|| panic!("unbound {name}")).clone()
            }
            other => panic!("unexpected {other:?} at {}", self.i),
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub enum Pipeline {
    Count(&'static str),
    MuImage,
    MuImage2,
    MuDiscriminant,
}

/// A closed form together with the signature it applies to.
///
/// `weights` and `degrees` name the variables supplying each entry; a name may
/// appear in both (e.g. corank-one germs whose first components are coordinates).
#[derive(Clone, Copy, Debug)]
pub struct Fixture {
    pub name: &'static str,
    pub formula: &'static str,
    pub weights: &'static [&'static str],
    pub degrees: &'static [&'static str],
    pub pipeline: Pipeline,
}

impl Fixture {
    pub fn variables(&self) -> Vec<&'static str> {
        let mut vars: Vec<&'static str> = Vec::new();
        for v in self.weights.iter().chain(self.degrees) {
            if !vars.contains(v) {
                vars.push(v);
            }
        }
        vars
    }

    /// Compares the closed form and the pipeline at one assignment.
    pub fn check(&self, db: &Database, values: &[i64]) -> Result<(), String> {
        let vars = self.variables();
        let env: HashMap<String, Rational> =
            vars.iter().zip(values).map(|(k, &v)| (k.to_string(), rat(v))).collect();
        let pick = |names: &[&str]| names.iter().map(|n| values[vars.iter().position(|v| v == n).unwrap()] as u64).collect::<Vec<_>>();
        let (w, d) = (pick(self.weights), pick(self.degrees));
        let sig = GermSignature::new(w.clone(), d.clone()).map_err(|e| e.to_string())?;
        let got = match self.pipeline {
            Pipeline::Count(name) => {
                count_stable(db, &sig, &SingularityKey::new(name, sig.kappa(), EntryKind::TpSource))
            }
            Pipeline::MuImage => mu_image(db, &sig),
            Pipeline::MuImage2 => mu_image2(db, &sig),
            Pipeline::MuDiscriminant => mu_discriminant(db, &sig),
        }
        .map_err(|e| e.to_string())?
        .value;
        let expected = eval(self.formula, &env);
        if got == expected {
            Ok(())
        } else {
            Err(format!("{}: w={w:?} d={d:?}: pipeline {got}, closed form {expected}", self.name))
        }
    }

    /// Checks `cases` signatures with entries in `1..=30`, deterministically seeded.
    pub fn check_random(&self, db: &Database, cases: u32) -> Result<(), String> {
        let config = Config { cases, ..Config::default() };
        let mut runner = TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha));
        let strategy = proptest::collection::vec(1i64..=30, self.variables().len());
        for _ in 0..cases {
            let values = strategy.new_tree(&mut runner).map_err(|e| e.to_string())?.current();
            self.check(db, &values)?;
        }
        Ok(())
    }
}

use formulas::*;
use Pipeline::*;

const W2: &[&str] = &["w1", "w2"];
const W3: &[&str] = &["w1", "w2", "w3"];
const W3C: &[&str] = &["w1", "w2", "w0"];

pub const COUNTING: &[Fixture] = &[
    Fixture { name: "A2 at (2,2)", formula: A2_22, weights: W2, degrees: &["d1", "d2"], pipeline: Count("A2") },
    Fixture { name: "A1^2 at (2,2)", formula: A11_22, weights: W2, degrees: &["d1", "d2"], pipeline: Count("A1^2") },
    Fixture { name: "A1 at (2,3)", formula: A1_23, weights: W2, degrees: &["d1", "d2", "d3"], pipeline: Count("A1") },
    Fixture { name: "A0^3 at (2,3)", formula: A03_23, weights: W2, degrees: &["d1", "d2", "d3"], pipeline: Count("A0^3") },
    Fixture { name: "A3 at (3,3)", formula: A3_33, weights: W3, degrees: &["d1", "d2", "d3"], pipeline: Count("A3") },
    Fixture { name: "A1A2 at (3,3)", formula: A12_33, weights: W3, degrees: &["d1", "d2", "d3"], pipeline: Count("A1A2") },
    Fixture { name: "A1^3 at (3,3)", formula: A111_33, weights: W3, degrees: &["d1", "d2", "d3"], pipeline: Count("A1^3") },
    Fixture { name: "A0^4 at (3,4)", formula: T8, weights: W3, degrees: &["d1", "d2", "d3", "d4"], pipeline: Count("A0^4") },
    Fixture { name: "A3 corank one", formula: A3_C1, weights: W3C, degrees: &["w1", "w2", "d"], pipeline: Count("A3") },
    Fixture { name: "A1A2 corank one", formula: A12_C1, weights: W3C, degrees: &["w1", "w2", "d"], pipeline: Count("A1A2") },
    Fixture { name: "A1^3 corank one", formula: A111_C1, weights: W3C, degrees: &["w1", "w2", "d"], pipeline: Count("A1^3") },
    Fixture { name: "A0^4 corank one", formula: A04_C1, weights: W3C, degrees: &["d1", "d2", "w1", "w2"], pipeline: Count("A0^4") },
];

pub const IMAGE: &[Fixture] = &[
    Fixture { name: "mu_I at (2,3)", formula: MUI_23, weights: W2, degrees: &["d1", "d2", "d3"], pipeline: MuImage },
    Fixture { name: "mu_I at (3,4)", formula: MUI_34, weights: W3, degrees: &["d1", "d2", "d3", "d4"], pipeline: MuImage },
    Fixture { name: "mu_I2 at (3,4)", formula: MUI2_34, weights: W3, degrees: &["d1", "d2", "d3", "d4"], pipeline: MuImage2 },
    Fixture { name: "mu_I corank one", formula: MUI_C1, weights: W3C, degrees: &["d1", "d2", "w1", "w2"], pipeline: MuImage },
];

pub const DISCRIMINANT: &[Fixture] = &[
    Fixture { name: "mu_D at (2,2)", formula: MUD_22, weights: W2, degrees: &["d1", "d2"], pipeline: MuDiscriminant },
    Fixture { name: "mu_D at (3,3)", formula: MUD_33, weights: W3, degrees: &["d1", "d2", "d3"], pipeline: MuDiscriminant },
    Fixture { name: "mu_D corank one", formula: MUD_C1, weights: W3C, degrees: &["w1", "w2", "d"], pipeline: MuDiscriminant },
];

pub fn sig(w: &[u64], d: &[u64]) -> GermSignature {
    GermSignature::new(w.to_vec(), d.to_vec()).unwrap()
}

pub fn count(db: &Database, s: &GermSignature, name: &str) -> Rational {
    count_stable(db, s, &SingularityKey::new(name, s.kappa(), EntryKind::TpSource))
        .unwrap()
        .value
}
