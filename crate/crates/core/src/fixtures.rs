//! Built-in (G, H) fixtures with their standard test objects.

use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{center, FiniteGroup, GroupSpec, Subgroup};
use crate::linalg::Matrix;
use crate::rep::{RepObject, RepSpec};

/// A group, a normal subgroup, and named objects of Rep(G).
#[derive(Clone, Debug)]
pub struct Fixture {
    pub id: String,
    pub group: Arc<FiniteGroup>,
    pub subgroup: Subgroup,
    pub objects: Vec<(String, RepObject)>,
}

impl Fixture {
    pub fn object(&self, name: &str) -> Option<&RepObject> {
        self.objects.iter().find(|(n, _)| n == name).map(|(_, x)| x)
    }

    /// All ordered pairs of objects, by name.
    pub fn pairs(&self) -> Vec<(&str, &RepObject, &str, &RepObject)> {
        let mut out = Vec::new();
        for (a, x) in &self.objects {
            for (b, y) in &self.objects {
                out.push((a.as_str(), x, b.as_str(), y));
            }
        }
        out
    }
}

pub const FIXTURE_IDS: [&str; 5] = ["s3-a3", "c4-c2", "q8-z", "s4-v4", "s4-a4"];

pub fn all() -> Vec<Fixture> {
    vec![s3(), c4(), q8(), s4_v4(), s4_a4()]
}

pub fn by_id(id: &str) -> Option<Fixture> {
    match id {
        "s3-a3" => Some(s3()),
        "c4-c2" => Some(c4()),
        "q8-z" => Some(q8()),
        "s4-v4" => Some(s4_v4()),
        "s4-a4" => Some(s4_a4()),
        _ => None,
    }
}

/// Wire format of a fixture. `subgroup` lists element indices of the built
/// group; objects keep their order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FixtureSpec {
    pub id: String,
    pub group: GroupSpec,
    pub subgroup: Vec<usize>,
    pub objects: Vec<NamedRep>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NamedRep {
    pub name: String,
    pub rep: RepSpec,
}

impl FixtureSpec {
    pub fn from_fixture(fx: &Fixture) -> Self {
        FixtureSpec {
            id: fx.id.clone(),
            group: fx.group.spec().clone(),
            subgroup: fx.subgroup.elements().to_vec(),
            objects: fx
                .objects
                .iter()
                .map(|(name, x)| NamedRep { name: name.clone(), rep: RepSpec::from_object(&fx.id, x) })
                .collect(),
        }
    }

    pub fn build(&self) -> Result<Fixture> {
        let group = Arc::new(self.group.build()?);
        let subgroup = Subgroup::new(&group, &self.subgroup)?;
        let objects = self
            .objects
            .iter()
            .map(|o| Ok((o.name.clone(), o.rep.build(&group)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Fixture { id: self.id.clone(), group, subgroup, objects })
    }
}

/// `<dir>/<id>.json` if present, else the built-in fixture `id`.
pub fn load(dir: Option<&Path>, id: &str) -> Result<Option<Fixture>> {
    if let Some(dir) = dir {
        let path = dir.join(format!("{id}.json"));
        if path.is_file() {
            let text = std::fs::read_to_string(&path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
            let spec: FixtureSpec = serde_json::from_str(&text)?;
            if spec.id != id {
                return Err(Error::Parse(format!("{} declares fixture id {:?}", path.display(), spec.id)));
            }
            return spec.build().map(Some);
        }
    }
    Ok(by_id(id))
}

fn perm_group(degree: usize, gens: &[&[usize]]) -> Arc<FiniteGroup> {
    let gens: Vec<Vec<usize>> = gens.iter().map(|g| g.to_vec()).collect();
    Arc::new(FiniteGroup::from_permutations(degree, &gens).expect("fixture generators are permutations"))
}

fn elements_with_images(g: &FiniteGroup, images: &[&[usize]]) -> Vec<usize> {
    images
        .iter()
        .map(|img| g.elements().find(|&x| g.permutation(x) == Some(*img)).expect("element present"))
        .collect()
}

/// The sum-zero part of a permutation representation: the G-stable
/// complement of its invariants.
pub fn augmentation_complement(perm: &RepObject) -> RepObject {
    let whole = Subgroup::whole(perm.group());
    perm.invariants(&whole)
        .and_then(|w| w.complement())
        .and_then(|c| c.subrepresentation())
        .expect("permutation representation splits")
}

pub fn trivial_group() -> Arc<FiniteGroup> {
    perm_group(1, &[])
}

pub fn c2_group() -> Arc<FiniteGroup> {
    perm_group(2, &[&[1, 0]])
}

pub fn s3_group() -> Arc<FiniteGroup> {
    perm_group(3, &[&[1, 0, 2], &[1, 2, 0]])
}

pub fn s4_group() -> Arc<FiniteGroup> {
    perm_group(4, &[&[1, 0, 2, 3], &[1, 2, 3, 0]])
}

pub fn s3() -> Fixture {
    let g = s3_group();
    let a3 = Subgroup::new(&g, &elements_with_images(&g, &[&[0, 1, 2], &[1, 2, 0], &[2, 0, 1]])).expect("A3");
    let perm = RepObject::permutation(&g).expect("permutation group");
    let std2 = augmentation_complement(&perm);
    let objects = vec![
        ("unit".into(), RepObject::unit(&g)),
        ("sign".into(), RepObject::sign(&g).expect("sign")),
        ("std2^2".into(), std2.tensor(&std2).expect("same group")),
        ("std2".into(), std2),
        ("regular".into(), RepObject::regular(&g)),
    ];
    Fixture { id: "s3-a3".into(), group: g, subgroup: a3, objects }
}

pub fn c4() -> Fixture {
    let g = perm_group(4, &[&[1, 2, 3, 0]]);
    let c2 = Subgroup::new(&g, &elements_with_images(&g, &[&[0, 1, 2, 3], &[2, 3, 0, 1]])).expect("C2");
    let chi = RepObject::from_generators(&g, 1, vec![Matrix::from_ints(&[&[-1]])]).expect("order-2 character");
    let rot = RepObject::from_generators(&g, 2, vec![Matrix::from_ints(&[&[0, -1], &[1, 0]])]).expect("rotation");
    let objects = vec![
        ("unit".into(), RepObject::unit(&g)),
        ("chi".into(), chi),
        ("rot2^2".into(), rot.tensor(&rot).expect("same group")),
        ("rot2".into(), rot),
        ("regular".into(), RepObject::regular(&g)),
    ];
    Fixture { id: "c4-c2".into(), group: g, subgroup: c2, objects }
}

/// Quaternion units `1, i, j, k, -1, -i, -j, -k`, as (sign, basis index).
fn quaternion(x: usize) -> (i64, usize) {
    (if x < 4 { 1 } else { -1 }, x % 4)
}

fn quaternion_index(sign: i64, unit: usize) -> usize {
    if sign > 0 { unit } else { unit + 4 }
}

fn quaternion_mul(a: usize, b: usize) -> usize {
    // Products of basis units 1, i, j, k.
    const UNIT: [[(i64, usize); 4]; 4] = [
        [(1, 0), (1, 1), (1, 2), (1, 3)],
        [(1, 1), (-1, 0), (1, 3), (-1, 2)],
        [(1, 2), (-1, 3), (-1, 0), (1, 1)],
        [(1, 3), (1, 2), (-1, 1), (-1, 0)],
    ];
    let (sa, ua) = quaternion(a);
    let (sb, ub) = quaternion(b);
    let (s, u) = UNIT[ua][ub];
    quaternion_index(sa * sb * s, u)
}

pub fn q8_group() -> Arc<FiniteGroup> {
    let table: Vec<Vec<usize>> = (0..8).map(|a| (0..8).map(|b| quaternion_mul(a, b)).collect()).collect();
    let spec = crate::group::GroupSpec::Table {
        table,
        labels: Some(["1", "i", "j", "k", "-1", "-i", "-j", "-k"].iter().map(|s| s.to_string()).collect()),
    };
    Arc::new(spec.build().expect("quaternion table"))
}

pub fn q8() -> Fixture {
    let g = q8_group();
    let z = center(&g);
    // Greedy generators of the table are i and j.
    debug_assert_eq!(g.generators(), &[1, 2]);
    let character = |vi: i64, vj: i64| {
        RepObject::from_generators(&g, 1, vec![Matrix::from_ints(&[&[vi]]), Matrix::from_ints(&[&[vj]])])
            .expect("linear character of Q8")
    };
    // Left multiplication on ℍ with basis 1, i, j, k.
    let left_mult = |q: usize| {
        let mut m = Matrix::zeros(4, 4);
        for b in 0..4 {
            let (s, u) = quaternion(quaternion_mul(q, b));
            m[(u, b)] = crate::linalg::Rational::from_integer(s);
        }
        m
    };
    let quat = RepObject::from_element_matrices(&g, 4, g.elements().map(left_mult).collect()).expect("ℍ");
    let objects = vec![
        ("unit".into(), RepObject::unit(&g)),
        ("chi_i".into(), character(1, -1)),
        ("chi_j".into(), character(-1, 1)),
        ("chi_k".into(), character(-1, -1)),
        ("quat^2".into(), quat.tensor(&quat).expect("same group")),
        ("quat".into(), quat),
        ("regular".into(), RepObject::regular(&g)),
    ];
    Fixture { id: "q8-z".into(), group: g, subgroup: z, objects }
}

fn v4_elements(g: &FiniteGroup) -> Vec<usize> {
    elements_with_images(g, &[&[0, 1, 2, 3], &[1, 0, 3, 2], &[2, 3, 0, 1], &[3, 2, 1, 0]])
}

fn s4_objects(g: &Arc<FiniteGroup>) -> Vec<(String, RepObject)> {
    let sign = RepObject::sign(g).expect("sign");
    let std3 = augmentation_complement(&RepObject::permutation(g).expect("permutation group"));
    // S4 permutes the three involutions of V4 by conjugation; this action
    // factors through S4/V4 ≅ S3.
    let v4 = v4_elements(g);
    let inv: Vec<usize> = v4[1..].to_vec();
    let pairs = RepObject::from_action(g, 3, |x| {
        inv.iter()
            .map(|&t| inv.iter().position(|&u| u == g.conjugate(x, t)).expect("V4 is normal"))
            .collect()
    })
    .expect("conjugation action");
    let std2 = augmentation_complement(&pairs);
    vec![
        ("unit".into(), RepObject::unit(g)),
        ("sign".into(), sign),
        ("std2".into(), std2),
        ("std3^2".into(), std3.tensor(&std3).expect("same group")),
        ("std3".into(), std3),
        ("regular".into(), RepObject::regular(g)),
    ]
}

pub fn s4_v4() -> Fixture {
    let g = s4_group();
    let v4 = Subgroup::new(&g, &v4_elements(&g)).expect("V4");
    let objects = s4_objects(&g);
    Fixture { id: "s4-v4".into(), group: g, subgroup: v4, objects }
}

pub fn s4_a4() -> Fixture {
    let g = s4_group();
    let sign = RepObject::sign(&g).expect("sign");
    let a4 = sign.kernel();
    let objects = s4_objects(&g);
    Fixture { id: "s4-a4".into(), group: g, subgroup: a4, objects }
}
