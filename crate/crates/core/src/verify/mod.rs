//! Exhaustive verification suite.
//!
//! Each [`Check`] is run over every basis element (or pair, or triple) up to
//! the configured degree, never a sample, and the report is identical across
//! runs and execution modes.

pub mod laws;

use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::classical::{self, direct, ssyt, Composition, Partition};
use crate::exec::Execution;
use crate::hopf::{self, GradedHopf, NSymA, PSymA, QSymA, SymA};
use crate::linear::{bilinear, LinComb, Tensor};
use crate::poly::{realize_m_basis, realize_sym_m};
use crate::sentence::{count_sentences, Alphabet, PSentence, Sentence};
use crate::tableaux::{colored_kostka, dual_schur_in_m, KostkaMatrix, SchurTables};
use laws::{flat, levels, pairs, render_sum, scan, tensor_map, Outcome};

pub const DEFAULT_KEY_CAP: u128 = 100_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Check {
    Assoc,
    Coassoc,
    CounitLaws,
    BialgebraCompat,
    AntipodeAxiom,
    AntipodeSquaredCommutative,
    DualityProductCoproduct,
    DualityAntipode,
    ChiMorphism,
    Adjointness,
    DiagramCommute,
    SymaClosure,
    UnarySpecialization,
    OracleProductEquivalence,
    KostkaUnitriangular,
    SchurDuality,
}

impl Check {
    pub const ALL: [Check; 16] = [
        Check::Assoc,
        Check::Coassoc,
        Check::CounitLaws,
        Check::BialgebraCompat,
        Check::AntipodeAxiom,
        Check::AntipodeSquaredCommutative,
        Check::DualityProductCoproduct,
        Check::DualityAntipode,
        Check::ChiMorphism,
        Check::Adjointness,
        Check::DiagramCommute,
        Check::SymaClosure,
        Check::UnarySpecialization,
        Check::OracleProductEquivalence,
        Check::KostkaUnitriangular,
        Check::SchurDuality,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Assoc => "assoc",
            Check::Coassoc => "coassoc",
            Check::CounitLaws => "counit-laws",
            Check::BialgebraCompat => "bialgebra-compat",
            Check::AntipodeAxiom => "antipode-axiom",
            Check::AntipodeSquaredCommutative => "antipode-squared-commutative",
            Check::DualityProductCoproduct => "duality-product-coproduct",
            Check::DualityAntipode => "duality-antipode",
            Check::ChiMorphism => "chi-morphism",
            Check::Adjointness => "adjointness",
            Check::DiagramCommute => "diagram-commute",
            Check::SymaClosure => "syma-closure",
            Check::UnarySpecialization => "unary-specialization",
            Check::OracleProductEquivalence => "oracle-product-equivalence",
            Check::KostkaUnitriangular => "kostka-unitriangular",
            Check::SchurDuality => "schur-duality",
        }
    }

    /// The identity being checked, in words.
    pub fn identity(self) -> &'static str {
        match self {
            Check::Assoc => "(xy)z = x(yz) and 1x = x = x1 in NSymA, QSymA, SymA, PSymA",
            Check::Coassoc => "(Δ⊗id)Δ = (id⊗Δ)Δ as expanded triple tensors",
            Check::CounitLaws => "(ε⊗id)Δ = id = (id⊗ε)Δ and ε(1) = 1",
            Check::BialgebraCompat => "Δ(xy) = Δ(x)Δ(y), ε(xy) = ε(x)ε(y), Δ(1) = 1⊗1",
            Check::AntipodeAxiom => "μ(S⊗id)Δ = ηε = μ(id⊗S)Δ",
            Check::AntipodeSquaredCommutative => "S∘S = id on every commutative algebra in the suite",
            Check::DualityProductCoproduct => "⟨xy, z⟩ = ⟨x⊗y, Δz⟩ both ways for H/M and h/m",
            Check::DualityAntipode => "⟨S(x), y⟩ = ⟨x, S*(y)⟩ for H/M and h/m",
            Check::ChiMorphism => "χ: NSymA → PSymA preserves product, coproduct, counit and antipode",
            Check::Adjointness => "⟨χ(H_I), m_P⟩ = ⟨H_I, ι(m_P)⟩",
            Check::DiagramCommute => "υ∘χ = χ∘υ on H and ι∘υ = υ∘ι on m",
            Check::SymaClosure => "ι(m_P)ι(m_Q), S(ι(m_P)) and both legs of Δι(m_P) lie in the image of ι",
            Check::UnarySpecialization => "υ matches the classical structure constants (bijectively when |A| = 1)",
            Check::OracleProductEquivalence => "M and m products agree with the polynomial realization",
            Check::KostkaUnitriangular => "colored Kostka matrix is upper unitriangular in the fixed order",
            Check::SchurDuality => "⟨s_P, s*_Q⟩ = δ_{P,Q}",
        }
    }
}

impl FromStr for Check {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Check::ALL.into_iter().find(|c| c.name() == s).ok_or_else(|| ConfigError::UnknownCheck(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("unknown check `{0}`")]
    UnknownCheck(String),
    #[error("degree {degree} over {letters} letters needs {keys} basis keys, above the cap of {cap}")]
    TooLarge { degree: usize, letters: usize, keys: u128, cap: u128 },
}

/// `all` or a comma-separated list of check names.
pub fn parse_checks(spec: &str) -> Result<Vec<Check>, ConfigError> {
    if spec.trim() == "all" {
        return Ok(Check::ALL.to_vec());
    }
    let mut out: Vec<Check> = spec.split(',').map(|s| s.trim().parse()).collect::<Result<_, _>>()?;
    out.sort();
    out.dedup();
    Ok(out)
}

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub alphabet: Alphabet,
    pub max_degree: usize,
    pub checks: Vec<Check>,
    pub key_cap: u128,
    pub exec: Execution,
}

impl VerifyConfig {
    pub fn new(alphabet: Alphabet, max_degree: usize, checks: Vec<Check>) -> Self {
        Self { alphabet, max_degree, checks, key_cap: DEFAULT_KEY_CAP, exec: Execution::default() }
    }

    /// Sentences up to the maximal degree: the largest basis any check enumerates.
    pub fn key_count(&self) -> u128 {
        (0..=self.max_degree).map(|n| count_sentences(n, self.alphabet.len())).fold(0, u128::saturating_add)
    }

    fn guard(&self) -> Result<(), ConfigError> {
        let keys = self.key_count();
        if keys > self.key_cap {
            return Err(ConfigError::TooLarge {
                degree: self.max_degree,
                letters: self.alphabet.len(),
                keys,
                cap: self.key_cap,
            });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub name: &'static str,
    pub identity: &'static str,
    pub passed: bool,
    pub cases: u64,
    pub witness: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub alphabet: String,
    pub max_degree: usize,
    pub passed: bool,
    pub checks: Vec<CheckReport>,
}

impl Report {
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "verify: alphabet {}, max degree {}", self.alphabet, self.max_degree);
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            let _ = writeln!(out, "{status}  {:<30} {:>8} cases  {}", c.name, c.cases, c.identity);
            if let Some(w) = &c.witness {
                let _ = writeln!(out, "      witness: {w}");
            }
        }
        let ok = self.checks.iter().filter(|c| c.passed).count();
        let _ = writeln!(out, "{ok}/{} checks passed", self.checks.len());
        out
    }

    pub fn render_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

struct Suite {
    nsym: NSymA,
    qsym: QSymA,
    sym: SymA,
    psym: PSymA,
    max: usize,
    exec: Execution,
}

pub fn run_suite(config: &VerifyConfig) -> Result<Report, ConfigError> {
    config.guard()?;
    let a = config.alphabet.clone();
    let suite = Suite {
        nsym: NSymA::new(a.clone()),
        qsym: QSymA::new(a.clone()),
        sym: SymA::new(a.clone()),
        psym: PSymA::new(a.clone()),
        max: config.max_degree,
        exec: config.exec,
    };
    let outcomes = config.exec.map(&config.checks, |c| suite.run(*c));
    let checks: Vec<CheckReport> = config
        .checks
        .iter()
        .zip(outcomes)
        .map(|(c, o)| CheckReport {
            name: c.name(),
            identity: c.identity(),
            passed: o.witness.is_none(),
            cases: o.cases,
            witness: o.witness,
        })
        .collect();
    Ok(Report {
        alphabet: a.colors().iter().collect(),
        max_degree: config.max_degree,
        passed: checks.iter().all(|c| c.passed),
        checks,
    })
}

macro_rules! each_algebra {
    ($s:expr, $f:path) => {
        Outcome::chain([
            $f(&$s.nsym, $s.max, $s.exec).prefixed("NSymA"),
            $f(&$s.qsym, $s.max, $s.exec).prefixed("QSymA"),
            $f(&$s.sym, $s.max, $s.exec).prefixed("SymA"),
            $f(&$s.psym, $s.max, $s.exec).prefixed("PSymA"),
        ])
    };
}

impl Suite {
    fn run(&self, check: Check) -> Outcome {
        match check {
            Check::Assoc => each_algebra!(self, laws::associativity),
            Check::Coassoc => each_algebra!(self, laws::coassociativity),
            Check::CounitLaws => each_algebra!(self, laws::counit_laws),
            Check::BialgebraCompat => each_algebra!(self, laws::bialgebra_compat),
            Check::AntipodeAxiom => each_algebra!(self, laws::antipode_axiom),
            Check::AntipodeSquaredCommutative => each_algebra!(self, laws::antipode_squared),
            Check::DualityProductCoproduct => Outcome::chain([
                laws::duality_product_coproduct(&self.nsym, &self.qsym, self.max, self.exec).prefixed("H/M"),
                laws::duality_product_coproduct(&self.psym, &self.sym, self.max, self.exec).prefixed("h/m"),
            ]),
            Check::DualityAntipode => Outcome::chain([
                laws::duality_antipode(&self.nsym, &self.qsym, self.max, self.exec).prefixed("H/M"),
                laws::duality_antipode(&self.psym, &self.sym, self.max, self.exec).prefixed("h/m"),
            ]),
            Check::ChiMorphism => self.chi_morphism(),
            Check::Adjointness => self.adjointness(),
            Check::DiagramCommute => self.diagram_commute(),
            Check::SymaClosure => self.syma_closure(),
            Check::UnarySpecialization => self.unary_specialization(),
            Check::OracleProductEquivalence => self.oracle_products(),
            Check::KostkaUnitriangular => self.kostka_unitriangular(),
            Check::SchurDuality => self.schur_duality(),
        }
    }

    fn chi_morphism(&self) -> Outcome {
        let (n, p) = (&self.nsym, &self.psym);
        let lv = levels(n, self.max);
        let chi = |f: &LinComb<Sentence>| hopf::chi(f);
        let products = scan(self.exec, &pairs(&lv, self.max), |(x, y)| {
            let left = chi(&n.mul_keys(x, y));
            let right = p.mul(&chi(&LinComb::singleton(x.clone())), &chi(&LinComb::singleton(y.clone())));
            (left != right).then(|| format!("χ(xy) = χ(x)χ(y) at ({}, {})", n.render(x), n.render(y)))
        });
        let singles = scan(self.exec, &flat(&lv), |x| {
            let one = LinComb::singleton(x.clone());
            let cx = chi(&one);
            if tensor_map(&n.delta_key(x), chi) != p.delta(&cx) {
                return Some(format!("(χ⊗χ)Δ = Δχ at {}", n.render(x)));
            }
            if chi(&n.antipode_key(x)) != p.antipode(&cx) {
                return Some(format!("χS = Sχ at {}", n.render(x)));
            }
            (n.counit(&one) != p.counit(&cx)).then(|| format!("εχ = ε at {}", n.render(x)))
        });
        Outcome::chain([products, singles])
    }

    fn adjointness(&self) -> Outcome {
        let cases: Vec<(usize, Sentence)> =
            (0..=self.max).flat_map(|d| self.nsym.basis(d).into_iter().map(move |i| (d, i))).collect();
        let iotas: Vec<Vec<(PSentence, LinComb<Sentence>)>> = (0..=self.max)
            .map(|d| {
                self.sym.basis(d).into_iter().map(|p| {
                    let i = hopf::iota(&LinComb::singleton(p.clone()));
                    (p, i)
                }).collect()
            })
            .collect();
        scan(self.exec, &cases, |(d, i)| {
            let chi_i = hopf::chi(&LinComb::singleton(i.clone()));
            iotas[*d].iter().find_map(|(p, iota_p)| {
                let l = chi_i.coeff(p);
                let r = iota_p.coeff(i);
                (l != r).then(|| {
                    format!("⟨χ(H_I), m_P⟩ = ⟨H_I, ι(m_P)⟩ at I = {}, P = {}: {} vs {}", self.nsym.render(i), self.sym.render(p), l, r)
                })
            })
        })
    }

    fn diagram_commute(&self) -> Outcome {
        let lv = levels(&self.nsym, self.max);
        let chi_side = scan(self.exec, &flat(&lv), |i| {
            let one = LinComb::singleton(i.clone());
            let left = hopf::uncolor_h(&hopf::chi(&one));
            let right = classical::chi_classical(&hopf::uncolor_sentence(&one));
            (left != right).then(|| format!("υχ = χυ at {}", self.nsym.render(i)))
        });
        let sv = levels(&self.sym, self.max);
        let iota_side = scan(self.exec, &flat(&sv), |p| {
            let one = LinComb::singleton(p.clone());
            let left = classical::iota_classical(&hopf::uncolor_m_psentence(&one));
            let right = hopf::uncolor_sentence(&hopf::iota(&one));
            (left != right).then(|| format!("ιυ = υι at {}", self.sym.render(p)))
        });
        Outcome::chain([chi_side, iota_side])
    }

    fn syma_closure(&self) -> Outcome {
        let (q, s) = (&self.qsym, &self.sym);
        let lv = levels(s, self.max);
        let iota = |p: &PSentence| hopf::iota(&LinComb::singleton(p.clone()));
        let products = scan(self.exec, &pairs(&lv, self.max), |(x, y)| {
            let through = q.mul(&iota(x), &iota(y));
            match hopf::m_from_m_basis(&through) {
                Err(_) => Some(format!("ι(m_P)ι(m_Q) is not symmetric at ({}, {})", s.render(x), s.render(y))),
                Ok(m) => {
                    let direct = s.mul_keys(x, y);
                    (m != direct).then(|| {
                        format!(
                            "m_P m_Q through QSymA = r-formula at ({}, {}): {} vs {}",
                            s.render(x),
                            s.render(y),
                            render_sum(s, &m),
                            render_sum(s, &direct)
                        )
                    })
                }
            }
        });
        let singles = scan(self.exec, &flat(&lv), |p| {
            let ip = iota(p);
            if hopf::m_from_m_basis(&q.antipode(&ip)).is_err() {
                return Some(format!("S(ι(m_P)) is not symmetric at {}", s.render(p)));
            }
            let through = q.delta(&ip);
            let pushed = tensor_map(&s.delta_key(p), hopf::iota);
            (through != pushed).then(|| format!("Δι(m_P) = (ι⊗ι)Δ(m_P) at {}", s.render(p)))
        });
        Outcome::chain([products, singles])
    }

    fn unary_specialization(&self) -> Outcome {
        let unary = self.nsym.alphabet.len() == 1;
        let comp = |i: &Sentence| Composition(i.word_lengths());
        let part = |p: &PSentence| Partition(p.word_lengths());
        let up_s = |f: &LinComb<Sentence>| f.map_keys(comp);
        let up_p = |f: &LinComb<PSentence>| f.map_keys(part);
        let up_st = |t: &Tensor<Sentence>| t.map_keys(|(a, b)| (comp(a), comp(b)));
        let up_pt = |t: &Tensor<PSentence>| t.map_keys(|(a, b)| (part(a), part(b)));
        let sl = levels(&self.nsym, self.max);
        let pl = levels(&self.sym, self.max);
        let s_pairs = pairs(&sl, self.max);
        let p_pairs = pairs(&pl, self.max);
        let cprod = |f: &LinComb<Composition>, g: &LinComb<Composition>, op: fn(&Composition, &Composition) -> LinComb<Composition>| bilinear(f, g, op);
        let pprod = |f: &LinComb<Partition>, g: &LinComb<Partition>, op: fn(&Partition, &Partition) -> LinComb<Partition>| bilinear(f, g, op);
        let one_c = |x: &Sentence| LinComb::singleton(comp(x));
        let one_p = |x: &PSentence| LinComb::singleton(part(x));
        let m_up = |x: &PSentence| hopf::uncolor_m_psentence(&LinComb::singleton(x.clone()));

        let products = Outcome::chain([
            scan(self.exec, &s_pairs, |(x, y)| {
                (up_s(&self.nsym.mul_keys(x, y)) != cprod(&one_c(x), &one_c(y), direct::nsym_h_product))
                    .then(|| format!("υ(H_I H_J) at ({}, {})", self.nsym.render(x), self.nsym.render(y)))
            }),
            scan(self.exec, &s_pairs, |(x, y)| {
                (up_s(&self.qsym.mul_keys(x, y)) != cprod(&one_c(x), &one_c(y), direct::qsym_m_product))
                    .then(|| format!("υ(M_I M_J) at ({}, {})", self.qsym.render(x), self.qsym.render(y)))
            }),
            scan(self.exec, &p_pairs, |(x, y)| {
                (hopf::uncolor_m_psentence(&self.sym.mul_keys(x, y))
                    != pprod(&m_up(x), &m_up(y), direct::m_product))
                    .then(|| format!("υ(m_P m_Q) at ({}, {})", self.sym.render(x), self.sym.render(y)))
            }),
            scan(self.exec, &p_pairs, |(x, y)| {
                (up_p(&self.psym.mul_keys(x, y)) != pprod(&one_p(x), &one_p(y), direct::h_product))
                    .then(|| format!("υ(h_P h_Q) at ({}, {})", self.psym.render(x), self.psym.render(y)))
            }),
        ]);
        let cop_c = |f: &LinComb<Composition>, op: fn(&Composition) -> Tensor<Composition>| f.extend_linear(op);
        let cop_p = |f: &LinComb<Partition>, op: fn(&Partition) -> Tensor<Partition>| f.extend_linear(op);
        let coproducts = Outcome::chain([
            scan(self.exec, &flat(&sl), |x| {
                (up_st(&self.nsym.delta_key(x)) != cop_c(&one_c(x), direct::nsym_h_coproduct))
                    .then(|| format!("(υ⊗υ)Δ(H_I) at {}", self.nsym.render(x)))
            }),
            scan(self.exec, &flat(&sl), |x| {
                (up_st(&self.qsym.delta_key(x)) != cop_c(&one_c(x), direct::qsym_m_coproduct))
                    .then(|| format!("(υ⊗υ)Δ(M_I) at {}", self.qsym.render(x)))
            }),
            scan(self.exec, &flat(&pl), |x| {
                (tensor_map(&self.sym.delta_key(x), hopf::uncolor_m_psentence) != cop_p(&m_up(x), direct::m_coproduct))
                    .then(|| format!("(υ⊗υ)Δ(m_P) at {}", self.sym.render(x)))
            }),
            scan(self.exec, &flat(&pl), |x| {
                (up_pt(&self.psym.delta_key(x)) != cop_p(&one_p(x), direct::h_coproduct))
                    .then(|| format!("(υ⊗υ)Δ(h_P) at {}", self.psym.render(x)))
            }),
        ]);
        if !unary {
            return Outcome::chain([products, coproducts]);
        }
        // One letter: υ must also be a bijection on every basis and carry
        // colored Kostka numbers to the classical ones.
        let sizes = scan(self.exec, &(0..=self.max).collect::<Vec<_>>(), |&n| {
            let c = Composition::all(n).len();
            let p = Partition::all(n).len();
            (self.nsym.basis(n).len() != c || self.sym.basis(n).len() != p)
                .then(|| format!("basis sizes differ from the classical ones in degree {n}"))
        });
        let kostka_cases: Vec<(PSentence, PSentence)> = (0..=self.max)
            .flat_map(|n| {
                let b = self.sym.basis(n);
                b.iter().flat_map(|x| b.iter().map(move |y| (x.clone(), y.clone()))).collect::<Vec<_>>()
            })
            .collect();
        let kostka = scan(self.exec, &kostka_cases, |(x, y)| {
            let colored = colored_kostka(x, y);
            let classical = ssyt::kostka(&part(x), &part(y));
            (colored != classical).then(|| {
                format!("𝒦 = K at ({}, {}): {} vs {}", self.sym.render(x), self.sym.render(y), colored, classical)
            })
        });
        Outcome::chain([sizes, products, coproducts, kostka])
    }

    fn oracle_products(&self) -> Outcome {
        let (q, s) = (&self.qsym, &self.sym);
        let sl = levels(q, self.max);
        let m_side = scan(self.exec, &pairs(&sl, self.max), |(x, y)| {
            let slots = x.len() + y.len();
            let poly = realize_m_basis(x, slots).mul(&realize_m_basis(y, slots)).expect("same slots");
            let want = q.mul_keys(x, y);
            match poly.to_m_basis() {
                Ok(got) if got == want => None,
                Ok(got) => Some(format!(
                    "M_I M_J at ({}, {}): realization {} vs {}",
                    q.render(x),
                    q.render(y),
                    render_sum(q, &got),
                    render_sum(q, &want)
                )),
                Err(e) => Some(format!("M_I M_J at ({}, {}): {e}", q.render(x), q.render(y))),
            }
        });
        let pl = levels(s, self.max);
        let sym_side = scan(self.exec, &pairs(&pl, self.max), |(x, y)| {
            let slots = x.len() + y.len();
            let poly = realize_sym_m(x, slots).mul(&realize_sym_m(y, slots)).expect("same slots");
            let want = s.mul_keys(x, y);
            match poly.to_sym_m() {
                Ok(got) if got == want => None,
                Ok(got) => Some(format!(
                    "m_P m_Q at ({}, {}): realization {} vs {}",
                    s.render(x),
                    s.render(y),
                    render_sum(s, &got),
                    render_sum(s, &want)
                )),
                Err(e) => Some(format!("m_P m_Q at ({}, {}): {e}", s.render(x), s.render(y))),
            }
        });
        Outcome::chain([m_side, sym_side])
    }

    fn kostka_unitriangular(&self) -> Outcome {
        let a = &self.sym.alphabet;
        Outcome::chain((0..=self.max).map(|n| {
            let k = KostkaMatrix::of_size(n, a, self.exec);
            let bad = (0..k.order.len()).find_map(|i| {
                (0..k.order.len()).find(|&j| (j < i && k.rows[i][j] != 0) || (j == i && k.rows[i][j] != 1)).map(|j| (i, j))
            });
            Outcome {
                cases: (k.order.len() * k.order.len()) as u64,
                witness: bad.map(|(i, j)| {
                    format!(
                        "entry ({}, {}) = {}",
                        a.render_sentence(k.order[i].as_sentence()),
                        a.render_sentence(k.order[j].as_sentence()),
                        k.rows[i][j]
                    )
                }),
            }
        }))
    }

    fn schur_duality(&self) -> Outcome {
        let a = &self.sym.alphabet;
        let tables = SchurTables::new(a);
        Outcome::chain((0..=self.max).map(|n| {
            let order = self.sym.basis(n);
            let s_in_h: Vec<LinComb<PSentence>> =
                self.exec.map(&order, |p| tables.s_to_h(&LinComb::singleton(p.clone())));
            let sstar_in_m: Vec<LinComb<PSentence>> = self.exec.map(&order, dual_schur_in_m);
            let idx: Vec<usize> = (0..order.len()).collect();
            let mut o = scan(self.exec, &idx, |&i| {
                (0..order.len()).find_map(|j| {
                    let v = s_in_h[i].dot(&sstar_in_m[j]);
                    let want = if i == j { 1 } else { 0 };
                    (v != crate::linear::q(want)).then(|| {
                        format!(
                            "⟨s_P, s*_Q⟩ at P = {}, Q = {}: {}",
                            a.render_sentence(order[i].as_sentence()),
                            a.render_sentence(order[j].as_sentence()),
                            v
                        )
                    })
                })
            });
            o.cases = (order.len() * order.len()) as u64;
            o
        }))
    }
}
