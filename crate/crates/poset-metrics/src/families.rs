//! Deterministic generators for named poset families and the fixed witness
//! posets used by tests and the harness.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{PosetError, Result};
use crate::poset::{build_poset, Poset};

/// A named family instance, addressable from the CLI as a string such as
/// `chain:5`, `boolean:3`, `grid:3x4`, `pentagon`, `prop4-witness`,
/// `chebyshev-witness`, or `random:8:0.3:42`.
#[derive(Clone, PartialEq, Debug)]
pub enum FamilySpec {
    Chain(usize),
    Antichain(usize),
    Boolean(usize),
    Grid(Vec<usize>),
    Pentagon,
    Prop4Witness,
    ChebyshevWitness,
    Random { n: usize, p: f64, seed: u64 },
}

impl std::fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FamilySpec::Chain(n) => write!(f, "chain:{n}"),
            FamilySpec::Antichain(n) => write!(f, "antichain:{n}"),
            FamilySpec::Boolean(k) => write!(f, "boolean:{k}"),
            FamilySpec::Grid(dims) => {
                let s: Vec<String> = dims.iter().map(|d| d.to_string()).collect();
                write!(f, "grid:{}", s.join("x"))
            }
            FamilySpec::Pentagon => write!(f, "pentagon"),
            FamilySpec::Prop4Witness => write!(f, "prop4-witness"),
            FamilySpec::ChebyshevWitness => write!(f, "chebyshev-witness"),
            FamilySpec::Random { n, p, seed } => write!(f, "random:{n}:{p}:{seed}"),
        }
    }
}

impl std::str::FromStr for FamilySpec {
    type Err = PosetError;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |m: &str| PosetError::InvalidParameter(m.to_string());
        let mut parts = s.split(':');
        let head = parts.next().unwrap_or("");
        let rest: Vec<&str> = parts.collect();
        let one_usize = |rest: &[&str]| -> Result<usize> {
            match rest {
                [v] => v.parse().map_err(|_| bad(&format!("bad integer `{v}`"))),
                _ => Err(bad(&format!("`{s}` needs exactly one integer parameter"))),
            }
        };
        let spec = match head {
            "chain" => FamilySpec::Chain(one_usize(&rest)?),
            "antichain" => FamilySpec::Antichain(one_usize(&rest)?),
            "boolean" => FamilySpec::Boolean(one_usize(&rest)?),
            "grid" => match rest.as_slice() {
                [dims] => FamilySpec::Grid(
                    dims.split('x')
                        .map(|d| d.parse().map_err(|_| bad(&format!("bad grid dimension `{d}`"))))
                        .collect::<Result<Vec<usize>>>()?,
                ),
                _ => return Err(bad("grid takes dimensions like grid:3x4")),
            },
            "pentagon" if rest.is_empty() => FamilySpec::Pentagon,
            "prop4-witness" if rest.is_empty() => FamilySpec::Prop4Witness,
            "chebyshev-witness" if rest.is_empty() => FamilySpec::ChebyshevWitness,
            "random" => match rest.as_slice() {
                [n, p, seed] => FamilySpec::Random {
                    n: n.parse().map_err(|_| bad(&format!("bad integer `{n}`")))?,
                    p: p.parse().map_err(|_| bad(&format!("bad probability `{p}`")))?,
                    seed: seed.parse().map_err(|_| bad(&format!("bad seed `{seed}`")))?,
                },
                _ => return Err(bad("random takes random:N:P:SEED")),
            },
            _ => return Err(bad(&format!("unknown family `{s}`"))),
        };
        validate(&spec)?;
        Ok(spec)
    }
}

fn validate(spec: &FamilySpec) -> Result<()> {
    let bad = |m: String| Err(PosetError::InvalidParameter(m));
    match spec {
        FamilySpec::Chain(n) | FamilySpec::Antichain(n) if *n < 1 => {
            bad(format!("size {n} must be at least 1"))
        }
        FamilySpec::Boolean(k) if !(1..=10).contains(k) => {
            bad(format!("boolean exponent {k} out of range 1..=10"))
        }
        FamilySpec::Grid(dims) if dims.is_empty() || dims.iter().any(|&d| d < 2) => {
            bad("grid dimensions must each be at least 2".to_string())
        }
        FamilySpec::Grid(dims) if dims.iter().product::<usize>() > 4096 => {
            bad("grid has more than 4096 elements".to_string())
        }
        FamilySpec::Random { n, p, .. } if *n < 1 || !(0.0..=1.0).contains(p) => {
            bad(format!("random needs n >= 1 and p in [0,1], got n={n} p={p}"))
        }
        _ => Ok(()),
    }
}

/// Build the poset a spec names. Deterministic, including `random`.
pub fn generate(spec: &FamilySpec) -> Result<Poset> {
    validate(spec)?;
    match spec {
        FamilySpec::Chain(n) => {
            let names: Vec<String> = (0..*n).map(|i| format!("c{i}")).collect();
            let rels: Vec<(String, String)> =
                names.windows(2).map(|w| (w[0].clone(), w[1].clone())).collect();
            if rels.is_empty() {
                build_poset::<String>(&[], &names)
            } else {
                build_poset(&rels, &[])
            }
        }
        FamilySpec::Antichain(n) => {
            let names: Vec<String> = (0..*n).map(|i| format!("a{i}")).collect();
            build_poset::<String>(&[], &names)
        }
        FamilySpec::Boolean(k) => {
            // subsets of {0..k-1} named by k-bit strings, leftmost bit = element 0;
            // covers are single-element insertions
            let name = |mask: usize| -> String {
                (0..*k).map(|b| if mask >> b & 1 == 1 { '1' } else { '0' }).collect()
            };
            let mut rels = Vec::new();
            for mask in 0..1usize << k {
                for b in 0..*k {
                    if mask >> b & 1 == 0 {
                        rels.push((name(mask), name(mask | 1 << b)));
                    }
                }
            }
            build_poset(&rels, &[])
        }
        FamilySpec::Grid(dims) => {
            let name = |coords: &[usize]| -> String {
                coords.iter().map(|c| c.to_string()).collect::<Vec<_>>().join("_")
            };
            let mut rels = Vec::new();
            let mut coords = vec![0usize; dims.len()];
            loop {
                for (axis, &d) in dims.iter().enumerate() {
                    if coords[axis] + 1 < d {
                        let mut up = coords.clone();
                        up[axis] += 1;
                        rels.push((name(&coords), name(&up)));
                    }
                }
                // odometer increment
                let mut axis = 0;
                loop {
                    if axis == dims.len() {
                        return build_poset(&rels, &[]);
                    }
                    coords[axis] += 1;
                    if coords[axis] < dims[axis] {
                        break;
                    }
                    coords[axis] = 0;
                    axis += 1;
                }
            }
        }
        FamilySpec::Pentagon => build_poset(
            &[("0", "a"), ("a", "1"), ("0", "b"), ("b", "c"), ("c", "1")],
            &[],
        ),
        FamilySpec::Prop4Witness => build_poset(
            &[("y", "x"), ("y", "z"), ("x", "t"), ("t", "w"), ("z", "w")],
            &[],
        ),
        FamilySpec::ChebyshevWitness => build_poset(
            &[("y", "x"), ("y", "z"), ("x", "t1"), ("t1", "t2"), ("t2", "w"), ("z", "w")],
            &[],
        ),
        FamilySpec::Random { n, p, seed } => {
            // labeled upper-triangular sampling then transitive closure;
            // biased across isomorphism classes, adequate for fuzzing
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            let names: Vec<String> = (0..*n).map(|i| format!("r{i}")).collect();
            let mut rels = Vec::new();
            let mut touched = vec![false; *n];
            for i in 0..*n {
                for j in i + 1..*n {
                    if rng.gen_bool(*p) {
                        rels.push((names[i].clone(), names[j].clone()));
                        touched[i] = true;
                        touched[j] = true;
                    }
                }
            }
            let isolated: Vec<String> = (0..*n).filter(|&i| !touched[i]).map(|i| names[i].clone()).collect();
            build_poset(&rels, &isolated)
        }
    }
}
