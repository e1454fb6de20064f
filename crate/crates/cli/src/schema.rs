//! JSON input formats and their conversion into library values.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use serde::de::{self, Deserializer, Visitor};
use serde::{Deserialize, Serialize};
use slopeforge::exactnum::ExactScalar;
use slopeforge::groups::{
    compose, group_from_permutations_one_based, library, Elem, FiniteGroup, Subgroup, WreathElement,
};
use slopeforge::reptheory::{character_table, ClassFunction};
use slopeforge::{Cyclotomic, Limits, Rational};

/// Bad input: malformed JSON, schema violations and precondition failures.
#[derive(Debug)]
pub struct InputError(pub String);

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl<E: std::error::Error> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

pub fn bad(msg: impl Into<String>) -> InputError {
    InputError(msg.into())
}

/// Parses `text` as `T`, reporting the JSON path and position of the first
/// error.
pub fn parse<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T, InputError> {
    let mut de = serde_json::Deserializer::from_str(text);
    let value = serde_path_to_error::deserialize(&mut de).map_err(|e| {
        let path = e.path().to_string();
        let inner = e.into_inner();
        if path == "." {
            bad(format!("invalid input: {inner}"))
        } else {
            bad(format!("invalid input at {path}: {inner}"))
        }
    })?;
    de.end().map_err(|e| bad(format!("invalid input: {e}")))?;
    Ok(value)
}

/// A rational written as `"p/q"`, `"n"` or a JSON integer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Q(pub Rational);

impl<'de> Deserialize<'de> for Q {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = Q;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a rational such as \"3/4\" or an integer")
            }
            fn visit_str<E: de::Error>(self, s: &str) -> Result<Q, E> {
                Rational::parse(s.trim()).map(Q).ok_or_else(|| E::custom(format!("invalid rational {s:?}")))
            }
            fn visit_i64<E: de::Error>(self, n: i64) -> Result<Q, E> {
                Ok(Q(Rational::from_int(n)))
            }
            fn visit_u64<E: de::Error>(self, n: u64) -> Result<Q, E> {
                i64::try_from(n).map(|n| Q(Rational::from_int(n))).map_err(|_| E::custom("integer too large"))
            }
        }
        d.deserialize_any(V)
    }
}

pub fn q_str(q: &Rational) -> String {
    q.to_string()
}

/// A cyclotomic number, or a rational shorthand.
#[derive(Debug, Deserialize)]
#[serde(untagged)]
pub enum CycJson {
    Rational(Q),
    Full(Cyclotomic),
}

impl CycJson {
    pub fn value(self) -> Cyclotomic {
        match self {
            CycJson::Rational(q) => Cyclotomic::from_scalar(q.0),
            CycJson::Full(c) => c,
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupJson {
    /// Generators in 1-based image notation.
    pub permutation_generators: Option<Vec<Vec<u32>>>,
    /// Row `a`, column `b` holds `a * b`; element 0 is the identity.
    pub cayley_table: Option<Vec<Vec<u32>>>,
    /// A built-in group such as `"S4"`, `"C2^3"` or `"Heis3"`.
    pub library: Option<String>,
}

/// A resolved group with the permutation of each element, when known.
pub struct GroupInput {
    pub group: Arc<FiniteGroup>,
    pub permutations: Option<Vec<Vec<u32>>>,
}

impl GroupJson {
    pub fn build(&self, limits: &Limits) -> Result<GroupInput, InputError> {
        let given = [self.permutation_generators.is_some(), self.cayley_table.is_some(), self.library.is_some()];
        if given.iter().filter(|&&b| b).count() != 1 {
            return Err(bad("a group needs exactly one of permutation_generators, cayley_table, library"));
        }
        let group = if let Some(gens) = &self.permutation_generators {
            group_from_permutations_one_based(gens, limits)?
        } else if let Some(rows) = &self.cayley_table {
            FiniteGroup::from_cayley_table(rows, limits)?
        } else {
            let name = self.library.as_deref().unwrap_or_default();
            library_group(name).ok_or_else(|| bad(format!("unknown library group {name:?}")))?
        };
        if group.order() > limits.max_group_order {
            return Err(bad(format!("group order {} exceeds the bound {}", group.order(), limits.max_group_order)));
        }
        let permutations = element_permutations(&group);
        Ok(GroupInput { group: Arc::new(group), permutations })
    }
}

fn library_group(name: &str) -> Option<FiniteGroup> {
    let num = |prefix: &str| name.strip_prefix(prefix).and_then(|s| s.parse::<u32>().ok()).filter(|&n| n >= 1);
    if let Some((p, k)) = name.strip_prefix('C').and_then(|s| s.split_once('^')) {
        let (p, k) = (p.parse::<u32>().ok()?, k.parse::<usize>().ok()?);
        return (slopeforge::exactnum::is_prime(p as u64) && k >= 1).then(|| library::elementary_abelian(p, k));
    }
    match name {
        "Q8" => return Some(library::quaternion()),
        "SL(2,3)" | "SL23" => return Some(library::sl23()),
        "GL(2,3)" | "GL23" => return Some(library::gl23()),
        _ => {}
    }
    if let Some(n) = num("Dic") {
        return (n >= 2).then(|| library::dicyclic(n));
    }
    if let Some(p) = num("Heis").or_else(|| num("M")) {
        let p = p as u64;
        if !slopeforge::exactnum::is_prime(p) {
            return None;
        }
        return Some(if name.starts_with('H') { library::heisenberg(p) } else { library::metacyclic_p3(p) });
    }
    if let Some(n) = num("C") {
        return Some(library::cyclic(n));
    }
    if let Some(n) = num("D") {
        return (n >= 2).then(|| library::dihedral(n));
    }
    if let Some(n) = num("S") {
        return (n <= 7).then(|| library::symmetric(n as usize));
    }
    if let Some(n) = num("A") {
        return (n <= 7).then(|| library::alternating(n as usize));
    }
    None
}

/// 0-based permutation of every element of a permutation group.
fn element_permutations(g: &FiniteGroup) -> Option<Vec<Vec<u32>>> {
    let pres = g.permutation_presentation()?;
    let mut perms: Vec<Option<Vec<u32>>> = vec![None; g.order()];
    perms[g.identity() as usize] = Some((0..pres.degree as u32).collect());
    let mut queue = std::collections::VecDeque::from([g.identity()]);
    while let Some(x) = queue.pop_front() {
        for (&s, sp) in g.generators().iter().zip(&pres.generators) {
            let y = g.mul(x, s) as usize;
            if perms[y].is_none() {
                perms[y] = Some(compose(perms[x as usize].as_ref()?, sp));
                queue.push_back(y as Elem);
            }
        }
    }
    perms.into_iter().collect()
}

impl GroupInput {
    fn element_of_permutation(&self, one_based: &[u32]) -> Result<Elem, InputError> {
        let perms = self.permutations.as_ref().ok_or_else(|| bad("permutations given for a group without a permutation action"))?;
        let target: Vec<u32> = one_based.iter().map(|&i| i.wrapping_sub(1)).collect();
        let index: HashMap<&[u32], usize> = perms.iter().enumerate().map(|(i, p)| (p.as_slice(), i)).collect();
        index.get(target.as_slice()).map(|&i| i as Elem).ok_or_else(|| bad(format!("{one_based:?} is not in the group")))
    }

    pub fn permutation_of(&self, g: Elem) -> Option<Vec<u32>> {
        self.permutations.as_ref().map(|p| p[g as usize].iter().map(|i| i + 1).collect())
    }
}

/// A subgroup: its element indices, generating elements or generating
/// permutations, or `"whole"` / `"trivial"`.
#[derive(Debug, Deserialize)]
#[serde(untagged)]
pub enum SubgroupJson {
    Elements(Vec<Elem>),
    Named(String),
    Generators { generators: Vec<Elem> },
    Permutations { permutations: Vec<Vec<u32>> },
}

impl SubgroupJson {
    pub fn build(&self, g: &GroupInput) -> Result<Subgroup, InputError> {
        let parent = &g.group;
        let check = |x: Elem| {
            if (x as usize) < parent.order() {
                Ok(x)
            } else {
                Err(bad(format!("element {x} out of range for a group of order {}", parent.order())))
            }
        };
        Ok(match self {
            SubgroupJson::Elements(e) => {
                let e = e.iter().map(|&x| check(x)).collect::<Result<Vec<_>, _>>()?;
                Subgroup::from_elements(parent, &e)?
            }
            SubgroupJson::Named(n) if n == "whole" => Subgroup::whole(parent),
            SubgroupJson::Named(n) if n == "trivial" => Subgroup::trivial(parent),
            SubgroupJson::Named(n) => return Err(bad(format!("unknown subgroup {n:?}"))),
            SubgroupJson::Generators { generators } => {
                let e = generators.iter().map(|&x| check(x)).collect::<Result<Vec<_>, _>>()?;
                Subgroup::generated(parent, &e)?
            }
            SubgroupJson::Permutations { permutations } => {
                let e = permutations.iter().map(|p| g.element_of_permutation(p)).collect::<Result<Vec<_>, _>>()?;
                Subgroup::generated(parent, &e)?
            }
        })
    }
}

/// A character given by its values on the classes, by its index in the
/// character table, or as `"trivial"` / `"regular"`.
#[derive(Debug, Deserialize)]
#[serde(untagged)]
pub enum CharacterJson {
    Named(String),
    Irreducible { irreducible: usize },
    Values { values: Vec<CycJson> },
}

impl CharacterJson {
    pub fn build(self, group: &Arc<FiniteGroup>, limits: &Limits) -> Result<ClassFunction, InputError> {
        Ok(match self {
            CharacterJson::Named(n) if n == "trivial" => ClassFunction::trivial(group),
            CharacterJson::Named(n) if n == "regular" => ClassFunction::regular(group),
            CharacterJson::Named(n) => return Err(bad(format!("unknown character {n:?}"))),
            CharacterJson::Irreducible { irreducible } => {
                let t = character_table(group, limits)?;
                t.characters()
                    .get(irreducible)
                    .cloned()
                    .ok_or_else(|| bad(format!("the table has {} irreducibles", t.len())))?
            }
            CharacterJson::Values { values } => {
                ClassFunction::new(group.clone(), values.into_iter().map(CycJson::value).collect())?
            }
        })
    }
}

/// A wreath product element `(sigma, (h_1, ..., h_l))` with `sigma` in
/// 1-based image notation and `h_i` element indices of the base.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WreathElementJson {
    pub sigma: Vec<u32>,
    pub coords: Vec<Elem>,
}

impl WreathElementJson {
    pub fn element(&self) -> Result<WreathElement, InputError> {
        let sigma = self
            .sigma
            .iter()
            .map(|&i| i.checked_sub(1).ok_or_else(|| bad("sigma is written with 1-based images")))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(WreathElement { sigma, coords: self.coords.clone() })
    }
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct PolygonJson {
    pub vertices: Vec<(String, String)>,
    pub height: String,
    pub integral: bool,
}

impl PolygonJson {
    pub fn of(np: &slopeforge::NewtonPolygon) -> PolygonJson {
        PolygonJson {
            vertices: np.vertices().iter().map(|(x, y)| (q_str(x), q_str(y))).collect(),
            height: q_str(&np.height()),
            integral: np.is_integral(),
        }
    }
}

pub fn slopes_json(s: &slopeforge::SlopeMultiset) -> Vec<(String, u64)> {
    s.entries().iter().map(|(l, m)| (q_str(l), *m)).collect()
}
