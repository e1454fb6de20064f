//! The subcommands. Each returns its JSON report and whether the verdict it
//! carries (if any) is positive.

use serde::{Deserialize, Serialize};
use slopeforge::exactnum::ExactScalar;
use slopeforge::filtered::{
    hasse_arf_check, herbrand_phi, newton_polygon, slope_decomposition, swan, upper_from_lower, BreakChain, LowerChain,
};
use slopeforge::groups::{
    embed_in_wreath, goursat_classify, prop45_classify, wreath_cyclic, DirectPower, Elem, GoursatResult, Prop45Case,
    Subgroup,
};
use slopeforge::reptheory::{character_table, induce, irreducible_dims_gcd, mackey_check, tensor_induce, ClassFunction};
use slopeforge::suites::{self, SuiteConfig};
use slopeforge::weyl::{build_root_system, weyl_dim, Family};
use slopeforge::{Cyclotomic, Limits, Rational, RankOneOperator, SlopeMultiset};

use crate::schema::{
    bad, q_str, slopes_json, CharacterJson, GroupJson, InputError, PolygonJson, SubgroupJson, WreathElementJson, Q,
};

pub const FORMAT: u32 = 1;

pub struct Outcome {
    pub json: serde_json::Value,
    pub ok: bool,
}

fn done<T: Serialize>(value: &T) -> Result<Outcome, InputError> {
    Ok(Outcome { json: serde_json::to_value(value)?, ok: true })
}

fn verdict<T: Serialize>(value: &T, ok: bool) -> Result<Outcome, InputError> {
    Ok(Outcome { json: serde_json::to_value(value)?, ok })
}

#[derive(Deserialize)]
pub struct NpIn {
    pub slopes: Vec<(Q, u64)>,
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct NpOut {
    pub format: u32,
    pub slopes: Vec<(String, u64)>,
    #[serde(flatten)]
    pub polygon: PolygonJson,
}

pub fn multiset(input: NpIn) -> Result<SlopeMultiset, InputError> {
    Ok(SlopeMultiset::from_pairs(input.slopes.into_iter().map(|(q, m)| (q.0, m)))?)
}

pub fn np(input: NpIn) -> Result<(Outcome, SlopeMultiset), InputError> {
    let s = multiset(input)?;
    let out = NpOut { format: FORMAT, slopes: slopes_json(&s), polygon: PolygonJson::of(&s.polygon()) };
    Ok((done(&out)?, s))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SwanIn {
    pub group: GroupJson,
    pub breaks: Vec<Q>,
    pub subgroups: Vec<SubgroupJson>,
    pub character: CharacterJson,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct SwanOut {
    pub format: u32,
    pub slopes: Vec<(String, u64)>,
    pub polygon: PolygonJson,
    pub swan: String,
    pub hasse_arf: bool,
}

pub fn swan_cmd(input: SwanIn, limits: &Limits) -> Result<Outcome, InputError> {
    let g = input.group.build(limits)?;
    let subgroups = input.subgroups.iter().map(|s| s.build(&g)).collect::<Result<Vec<_>, _>>()?;
    let chain = BreakChain::new(g.group.clone(), input.breaks.into_iter().map(|q| q.0).collect(), subgroups)?;
    let chi = input.character.build(&g.group, limits)?;
    let out = SwanOut {
        format: FORMAT,
        slopes: slopes_json(&slope_decomposition(&chain, &chi)?),
        polygon: PolygonJson::of(&newton_polygon(&chain, &chi)?),
        swan: q_str(&swan(&chain, &chi)?),
        hasse_arf: hasse_arf_check(&chain, &chi)?,
    };
    done(&out)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HerbrandIn {
    pub group: GroupJson,
    /// `G_0, G_1, ...`; trivial past the end.
    pub lower: Vec<SubgroupJson>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct UpperChainJson {
    pub breaks: Vec<String>,
    pub subgroups: Vec<Vec<Elem>>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct HerbrandOut {
    pub format: u32,
    pub phi_breakpoints: Vec<(String, String)>,
    pub final_slope: String,
    pub upper: UpperChainJson,
}

pub fn herbrand(input: HerbrandIn, limits: &Limits) -> Result<Outcome, InputError> {
    let g = input.group.build(limits)?;
    let lower = input.lower.iter().map(|s| s.build(&g)).collect::<Result<Vec<_>, _>>()?;
    let chain = LowerChain::new(g.group.clone(), lower)?;
    let phi = herbrand_phi(&chain);
    let upper = upper_from_lower(&chain);
    let out = HerbrandOut {
        format: FORMAT,
        phi_breakpoints: phi.breakpoints().iter().map(|(u, v)| (q_str(u), q_str(v))).collect(),
        final_slope: q_str(phi.final_slope()),
        upper: UpperChainJson {
            breaks: upper.breaks().iter().map(q_str).collect(),
            subgroups: upper.subgroups().iter().map(|h| h.elements().to_vec()).collect(),
        },
    };
    done(&out)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InduceIn {
    pub group: GroupJson,
    pub subgroup: SubgroupJson,
    /// A character of the subgroup, on the classes of the subgroup.
    pub character: CharacterJson,
    pub transversal: Option<Vec<Elem>>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct CharacterOut {
    pub format: u32,
    pub degree: Option<u64>,
    pub values: Vec<Cyclotomic>,
}

fn character_out(chi: &ClassFunction) -> CharacterOut {
    CharacterOut { format: FORMAT, degree: chi.degree(), values: chi.values().to_vec() }
}

pub fn induce_cmd(input: InduceIn, tensor: bool, limits: &Limits) -> Result<Outcome, InputError> {
    let g = input.group.build(limits)?;
    let h = input.subgroup.build(&g)?;
    let chi = input.character.build(&h.as_group(), limits)?;
    let result = if tensor {
        tensor_induce(&chi, &h, input.transversal.as_deref())?
    } else {
        if input.transversal.is_some() {
            return Err(bad("induce takes no transversal"));
        }
        induce(&chi, &h)?
    };
    done(&character_out(&result))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MackeyIn {
    pub group: GroupJson,
    pub subgroup: SubgroupJson,
    pub characters: (CharacterJson, CharacterJson),
}

#[derive(Debug, Serialize, Deserialize)]
pub struct MackeyOut {
    pub format: u32,
    pub holds: bool,
    pub lhs: Vec<Cyclotomic>,
    pub rhs: Vec<Cyclotomic>,
    /// First class where the two sides differ.
    pub witness: Option<usize>,
}

pub fn mackey(input: MackeyIn, limits: &Limits) -> Result<Outcome, InputError> {
    let g = input.group.build(limits)?;
    let h = input.subgroup.build(&g)?;
    let own = h.as_group();
    let v = input.characters.0.build(&own, limits)?;
    let w = input.characters.1.build(&own, limits)?;
    let r = mackey_check(&v, &w, &h)?;
    let witness = r.lhs.values().iter().zip(r.rhs.values()).position(|(a, b)| a != b);
    let out = MackeyOut {
        format: FORMAT,
        holds: r.holds,
        lhs: r.lhs.values().to_vec(),
        rhs: r.rhs.values().to_vec(),
        witness,
    };
    verdict(&out, r.holds)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WreathIn {
    pub base: GroupJson,
    pub ell: usize,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct WreathOut {
    pub format: u32,
    pub order: usize,
    pub class_count: usize,
    pub base_order: usize,
    pub degree: usize,
}

pub fn wreath(input: WreathIn, limits: &Limits) -> Result<Outcome, InputError> {
    if input.ell == 0 {
        return Err(bad("ell must be positive"));
    }
    let base = input.base.build(limits)?;
    let w = wreath_cyclic(&base.group, input.ell, limits)?;
    let out = WreathOut {
        format: FORMAT,
        order: w.group().order(),
        class_count: w.group().conjugacy_classes().len(),
        base_order: base.group.order(),
        degree: input.ell,
    };
    done(&out)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EmbeddingJson {
    pub group: GroupJson,
    pub subgroup: SubgroupJson,
    pub transversal: Option<Vec<Elem>>,
}

/// Either a subgroup of `H^l` given by generating tuples, a subgroup of
/// `C_l wr H` given by generating elements, or the image of an embedding.
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassifyIn {
    pub base: Option<GroupJson>,
    pub ell: Option<usize>,
    pub tuples: Option<Vec<Vec<Elem>>>,
    pub generators: Option<Vec<WreathElementJson>>,
    pub embedding: Option<EmbeddingJson>,
    pub out: Option<u64>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct GoursatJson {
    pub kind: String,
    pub order: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub automorphisms: Option<Vec<Vec<Elem>>>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct Prop45Json {
    pub case: String,
    pub order: usize,
    pub base_is_abelian: bool,
    pub normal_subgroup_orders: Vec<usize>,
    pub max_normal_chain_length: usize,
    pub chain_bound_holds: bool,
    pub normal_list_matches: Option<bool>,
    pub direct_product: Option<bool>,
    pub outer_automorphism_order: Option<u64>,
    pub out_criterion_consistent: Option<bool>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ClassifyOut {
    pub format: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub goursat: Option<GoursatJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub prop45: Option<Prop45Json>,
}

pub fn classify(input: ClassifyIn, limits: &Limits) -> Result<Outcome, InputError> {
    let modes = [input.tuples.is_some(), input.generators.is_some(), input.embedding.is_some()];
    if modes.iter().filter(|&&b| b).count() != 1 {
        return Err(bad("classify needs exactly one of tuples, generators, embedding"));
    }
    if let Some(e) = input.embedding {
        if input.base.is_some() || input.ell.is_some() {
            return Err(bad("an embedding determines base and ell itself"));
        }
        let g = e.group.build(limits)?;
        let h = e.subgroup.build(&g)?;
        let transversal = e.transversal.unwrap_or_else(|| h.left_transversal());
        let emb = embed_in_wreath(&h, &transversal)?;
        let w = wreath_cyclic(emb.base(), h.index(), limits)?;
        let image = emb.image_in(&w)?;
        return prop45_out(&w, &image, input.out, limits);
    }
    let base = input.base.ok_or_else(|| bad("missing base"))?.build(limits)?;
    let ell = input.ell.ok_or_else(|| bad("missing ell"))?;
    if let Some(tuples) = input.tuples {
        let power = DirectPower::new(base.group.clone(), ell, limits)?;
        let mut gens = Vec::with_capacity(tuples.len());
        for t in &tuples {
            if t.len() != ell || t.iter().any(|&x| x as usize >= base.group.order()) {
                return Err(bad(format!("tuple {t:?} is not in H^{ell}")));
            }
            gens.push(power.encode(t));
        }
        let s = Subgroup::generated(power.group(), &gens)?;
        let goursat = match goursat_classify(&power, &s)? {
            GoursatResult::Full => GoursatJson { kind: "full".into(), order: s.order(), automorphisms: None },
            GoursatResult::TwistedDiagonal { automorphisms } => {
                GoursatJson { kind: "twisted_diagonal".into(), order: s.order(), automorphisms: Some(automorphisms) }
            }
            GoursatResult::Intermediate { order } => {
                GoursatJson { kind: "intermediate".into(), order, automorphisms: None }
            }
        };
        return done(&ClassifyOut { format: FORMAT, goursat: Some(goursat), prop45: None });
    }
    let w = wreath_cyclic(&base.group, ell, limits)?;
    let mut gens = Vec::new();
    for (k, e) in input.generators.unwrap_or_default().iter().enumerate() {
        let x = w.index_of(&e.element()?).ok_or_else(|| bad(format!("generator {k} is not in the wreath product")))?;
        gens.push(x);
    }
    let image = Subgroup::generated(w.group(), &gens)?;
    prop45_out(&w, &image, input.out, limits)
}

fn prop45_out(
    w: &slopeforge::groups::WreathProduct,
    image: &Subgroup,
    out: Option<u64>,
    limits: &Limits,
) -> Result<Outcome, InputError> {
    let r = prop45_classify(w, image, out, limits)?;
    let report = Prop45Json {
        case: match r.case {
            Prop45Case::FullBase => "full_base".into(),
            Prop45Case::Diagonal => "diagonal".into(),
        },
        order: image.order(),
        base_is_abelian: r.base_is_abelian,
        normal_subgroup_orders: r.normal_subgroups.iter().map(Subgroup::order).collect(),
        max_normal_chain_length: r.max_normal_chain_length,
        chain_bound_holds: r.chain_bound_holds,
        normal_list_matches: r.normal_list_matches,
        direct_product: r.direct_product,
        outer_automorphism_order: r.outer_automorphism_order,
        out_criterion_consistent: r.out_criterion_consistent,
    };
    done(&ClassifyOut { format: FORMAT, goursat: None, prop45: Some(report) })
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableIn {
    pub group: GroupJson,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ClassJson {
    pub representative: Elem,
    pub size: usize,
    pub element_order: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub permutation: Option<Vec<u32>>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct TableOut {
    pub format: u32,
    pub order: usize,
    pub classes: Vec<ClassJson>,
    pub degrees: Vec<u64>,
    pub characters: Vec<Vec<Cyclotomic>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gcd: Option<u64>,
}

pub fn table(input: TableIn, gcd: bool, limits: &Limits) -> Result<Outcome, InputError> {
    let g = input.group.build(limits)?;
    let t = character_table(&g.group, limits)?;
    let cc = g.group.conjugacy_classes();
    let classes = (0..cc.len())
        .map(|k| {
            let r = cc.representative(k);
            ClassJson {
                representative: r,
                size: cc.size(k),
                element_order: g.group.element_order(r),
                permutation: g.permutation_of(r),
            }
        })
        .collect();
    let out = TableOut {
        format: FORMAT,
        order: g.group.order(),
        classes,
        degrees: t.degrees(),
        characters: t.characters().iter().map(|c| c.values().to_vec()).collect(),
        gcd: if gcd { Some(irreducible_dims_gcd(&g.group, limits)?) } else { None },
    };
    done(&out)
}

#[derive(Debug, Serialize, Deserialize)]
pub struct OperatorJson {
    pub p: u64,
    pub coefficients: Vec<String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RobbaIn {
    pub p: u64,
    pub coefficients: Vec<Q>,
}

#[derive(Debug, Serialize, Deserialize)]
#[allow(non_snake_case)]
pub struct RobbaOut {
    pub format: u32,
    pub reduced: OperatorJson,
    pub slope: String,
    pub tame: bool,
    pub residue: String,
    pub p_power_N: u32,
    pub p_power_residue: String,
    /// Order of the residue of the tame twist `L^(p^N)`; for tame `L` this
    /// is the order of `L` itself.
    pub character_order: u64,
}

pub fn robba(input: RobbaIn) -> Result<Outcome, InputError> {
    let l = RankOneOperator::new(input.p, input.coefficients.into_iter().map(|q| q.0).collect())?;
    let r = l.reduce();
    let (n, residue) = l.p_power_reduce();
    let twist = l.tensor_power(l.prime().pow(n));
    let out = RobbaOut {
        format: FORMAT,
        reduced: OperatorJson { p: r.prime(), coefficients: r.coefficients().iter().map(q_str).collect() },
        slope: q_str(&l.slope()),
        tame: l.is_tame(),
        residue: q_str(&l.residue()),
        p_power_N: n,
        p_power_residue: q_str(&residue),
        character_order: twist.character_order()?,
    };
    done(&out)
}

#[derive(Debug, Serialize, Deserialize)]
pub struct WeylOut {
    pub format: u32,
    pub family: String,
    pub rank: usize,
    pub positive_roots: usize,
    pub weight: Vec<String>,
    pub dimension: String,
}

/// `weight` is `"<k>rho"` (e.g. `"2rho"`), `"0"`, or comma-separated
/// coordinates in the ambient space.
pub fn weyl(family: &str, rank: usize, weight: &str) -> Result<Outcome, InputError> {
    let family: Family = family.parse()?;
    let rs = build_root_system::<Rational>(family, rank)?;
    let w = weight.trim();
    let lambda: Vec<Rational> = if let Some(k) = w.strip_suffix("rho") {
        let k = if k.is_empty() { Rational::from_int(1) } else { Rational::parse(k).ok_or_else(|| bad(format!("invalid multiple {k:?}")))? };
        rs.rho().iter().map(|x| x * &k).collect()
    } else if w == "0" {
        vec![Rational::from_int(0); rs.ambient_dim()]
    } else {
        w.split(',')
            .map(|s| Rational::parse(s.trim()).ok_or_else(|| bad(format!("invalid coordinate {s:?}"))))
            .collect::<Result<_, _>>()?
    };
    let d = weyl_dim(&rs, &lambda)?;
    let out = WeylOut {
        format: FORMAT,
        family: family.to_string(),
        rank,
        positive_roots: rs.positive_roots().len(),
        weight: lambda.iter().map(q_str).collect(),
        dimension: q_str(&d),
    };
    done(&out)
}

#[derive(Debug, Serialize, Deserialize)]
pub struct SuiteJson {
    pub id: u8,
    pub name: String,
    pub title: String,
    pub passed: bool,
    pub checked: usize,
    pub time_limit_seconds: u64,
    pub failures: Vec<String>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct VerifyOut {
    pub format: u32,
    pub seed: u64,
    pub passed: bool,
    pub suites: Vec<SuiteJson>,
}

/// Runs one suite by name or id, or all of them for `"all"`. Timings go to
/// stderr so the report itself is deterministic.
pub fn verify(name: &str, config: &SuiteConfig) -> Result<Outcome, InputError> {
    let selected: Vec<&suites::Criterion> = if name == "all" {
        suites::CRITERIA.iter().collect()
    } else {
        vec![suites::criterion(name).ok_or_else(|| {
            let names: Vec<&str> = suites::CRITERIA.iter().map(|c| c.name).collect();
            bad(format!("unknown suite {name:?}; expected all or one of {}", names.join(", ")))
        })?]
    };
    let mut reports = Vec::new();
    for c in selected {
        let r = suites::run(c, config);
        eprintln!("{}", r.line());
        reports.push(SuiteJson {
            id: r.id,
            name: r.name.to_string(),
            title: r.title.to_string(),
            passed: r.passed,
            checked: r.checked,
            time_limit_seconds: r.time_limit.as_secs(),
            failures: r.failures,
        });
    }
    let passed = reports.iter().all(|r| r.passed);
    verdict(&VerifyOut { format: FORMAT, seed: config.seed, passed, suites: reports }, passed)
}
