//! The presentation of `R_3` by a quiver with three vertices.
//!
//! Vertices are the canonical sections of `(1³)`, `(2,1)` and `(3)`; arrows
//! are `s = (1 2)`, `t = (2 3)` at `(1³)`, `p, q` between `(1³)` and `(2,1)`,
//! and `x, y` between `(2,1)` and `(3)`.

use std::fmt;

use crate::error::Result;
use crate::kclasses::KClass;
use crate::partitions::SetPartition;
use crate::permgroup::Permutation;

use super::multiply;

type K = KClass<i64>;

#[derive(Clone, Debug)]
pub struct Arrow {
    pub name: &'static str,
    pub source: &'static str,
    pub target: &'static str,
    pub value: K,
}

#[derive(Clone, Debug)]
pub struct Relation {
    pub lhs: &'static str,
    pub rhs: &'static str,
    pub holds: bool,
}

#[derive(Clone, Debug)]
pub struct Quiver {
    pub vertices: Vec<(&'static str, SetPartition)>,
    pub arrows: Vec<Arrow>,
    pub relations: Vec<Relation>,
}

impl Quiver {
    pub fn all_hold(&self) -> bool {
        self.relations.iter().all(|r| r.holds)
    }
}

impl fmt::Display for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "vertices:")?;
        for (name, p) in &self.vertices {
            writeln!(f, "  {name} = {{{p}}}")?;
        }
        writeln!(f, "arrows:")?;
        for a in &self.arrows {
            writeln!(f, "  {}: {} -> {}", a.name, a.source, a.target)?;
        }
        writeln!(f, "relations:")?;
        for r in &self.relations {
            writeln!(f, "  {} = {}  [{}]", r.lhs, r.rhs, if r.holds { "holds" } else { "FAILS" })?;
        }
        Ok(())
    }
}

/// The named elements of `R_3`.
pub struct Generators {
    pub e1: K,
    pub e21: K,
    pub s: K,
    pub t: K,
    pub p: K,
    pub q: K,
    pub x: K,
    pub y: K,
}

pub fn generators() -> Generators {
    let min = SetPartition::minimal(3);
    let mid: SetPartition = "1 2|3".parse().expect("valid");
    let top = SetPartition::full(3);
    let perm = |s: &str| s.parse::<Permutation>().expect("valid");
    Generators {
        e1: K::idempotent(&min),
        e21: K::idempotent(&mid),
        s: K::gen_perm(&perm("2,1,3"), &min).expect("valid"),
        t: K::gen_perm(&perm("1,3,2"), &min).expect("valid"),
        p: K::gen_one(&mid, &min).expect("comparable"),
        q: K::gen_one(&min, &mid).expect("comparable"),
        x: K::gen_one(&top, &mid).expect("comparable"),
        y: K::gen_one(&mid, &top).expect("comparable"),
    }
}

fn prod(factors: &[&K]) -> Result<K> {
    let mut acc = factors[0].clone();
    for f in &factors[1..] {
        acc = multiply(&acc, f)?;
    }
    Ok(acc)
}

/// The quiver and its relations, each checked by multiplication.
pub fn quiver_n3() -> Result<Quiver> {
    let g = generators();
    let st = multiply(&g.s, &g.t)?;
    let st3 = prod(&[&st, &st, &st])?;
    let relations = vec![
        Relation { lhs: "s^2", rhs: "e_(1^3)", holds: multiply(&g.s, &g.s)? == g.e1 },
        Relation { lhs: "t^2", rhs: "e_(1^3)", holds: multiply(&g.t, &g.t)? == g.e1 },
        Relation { lhs: "(st)^3", rhs: "e_(1^3)", holds: st3 == g.e1 },
        Relation { lhs: "ps", rhs: "p", holds: multiply(&g.p, &g.s)? == g.p },
        Relation { lhs: "sq", rhs: "q", holds: multiply(&g.s, &g.q)? == g.q },
        Relation { lhs: "xp", rhs: "xpt", holds: multiply(&g.x, &g.p)? == prod(&[&g.x, &g.p, &g.t])? },
        Relation { lhs: "qy", rhs: "tqy", holds: multiply(&g.q, &g.y)? == prod(&[&g.t, &g.q, &g.y])? },
        Relation { lhs: "qp", rhs: "e_(1^3) + s", holds: multiply(&g.q, &g.p)? == g.e1.add(&g.s)? },
        Relation { lhs: "yx", rhs: "e_(21) + ptq", holds: multiply(&g.y, &g.x)? == g.e21.add(&prod(&[&g.p, &g.t, &g.q])?)? },
    ];
    let vertices = vec![
        ("(1^3)", SetPartition::minimal(3)),
        ("(21)", "1 2|3".parse().expect("valid")),
        ("(3)", SetPartition::full(3)),
    ];
    let arrows = vec![
        Arrow { name: "s", source: "(1^3)", target: "(1^3)", value: g.s },
        Arrow { name: "t", source: "(1^3)", target: "(1^3)", value: g.t },
        Arrow { name: "p", source: "(1^3)", target: "(21)", value: g.p },
        Arrow { name: "q", source: "(21)", target: "(1^3)", value: g.q },
        Arrow { name: "x", source: "(21)", target: "(3)", value: g.x },
        Arrow { name: "y", source: "(3)", target: "(21)", value: g.y },
    ];
    Ok(Quiver { vertices, arrows, relations })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_relations_hold() {
        let q = quiver_n3().unwrap();
        assert!(q.all_hold(), "{q}");
        assert_eq!(q.relations.len(), 9);
    }

    #[test]
    fn non_relations_fail() {
        // Sanity: the relations are not vacuous.
        let g = generators();
        assert_ne!(multiply(&g.q, &g.p).unwrap(), g.e1);
        assert_ne!(multiply(&g.p, &g.t).unwrap(), g.p);
        assert_ne!(g.s, g.t);
    }
}
