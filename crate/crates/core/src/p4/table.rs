use super::sym::*;
use super::R;
use crate::chow::{BasisElement, ChowClass, Kind};

fn zero(grade: u8) -> ChowClass {
    ChowClass::zero(R, grade)
}

fn one(e: BasisElement) -> ChowClass {
    ChowClass::basis(e)
}

fn minus(e: BasisElement) -> ChowClass {
    class(&[(e, -1)])
}

fn subset(a: &[u8], b: &[u8]) -> bool {
    a.iter().all(|x| b.contains(x))
}

/// Product of two basis elements, `a` listed before `b` in the basis.
pub(super) fn rule(a: &BasisElement, b: &BasisElement) -> ChowClass {
    if a.kind() == Kind::Fundamental {
        return one(*b);
    }
    match (a.grade(), b.grade()) {
        (1, 1) => divisor_divisor(a, b),
        (1, 2) => divisor_surface(a, b),
        (1, 3) => divisor_curve(a, b),
        (2, 2) => surface_surface(a, b),
        _ => unreachable!("grade sum above 4 is never tabulated"),
    }
}

fn divisor_divisor(a: &BasisElement, b: &BasisElement) -> ChowClass {
    let ia = a.indices().to_vec();
    let ib = b.indices().to_vec();
    if a.kind() == Kind::Hyperplane {
        return match ib.len() {
            0 => one(s()),
            1 => zero(2),
            2 => one(f2(ib[0], ib[1])),
            _ => one(hh(ib[0], ib[1], ib[2])),
        };
    }
    match (ia.len(), ib.len()) {
        (1, 1) if ia == ib => minus(si(ia[0])),
        (1, 2) if subset(&ia, &ib) => one(f2(ib[0], ib[1])),
        (1, 3) if subset(&ia, &ib) => one(v(ib[0], ib[1], ib[2], ia[0])),
        (2, 2) if ia == ib => class(&[(p(ia[0], ia[1]), -1), (f2(ia[0], ia[1]), -2)]),
        (2, 3) if subset(&ia, &ib) => {
            let (i, j, k) = (ib[0], ib[1], ib[2]);
            class(&[(hh(i, j, k), 1), (v(i, j, k, ia[0]), -1), (v(i, j, k, ia[1]), -1)])
        }
        (3, 3) if ia == ib => {
            let (i, j, k) = (ia[0], ia[1], ia[2]);
            let mut t = scaled(m(i, j, k), -1);
            t.extend(scaled(lambda(i, j, k), -1));
            class(&t)
        }
        _ => zero(2),
    }
}

fn divisor_surface(a: &BasisElement, b: &BasisElement) -> ChowClass {
    use Kind::*;
    let ib = b.indices().to_vec();
    if a.kind() == Hyperplane {
        return match b.kind() {
            Plane => one(l()),
            Section => one(lij(ib[0], ib[1])),
            RuledPlane => one(f3(ib[0], ib[1], ib[2])),
            _ => zero(3),
        };
    }
    let ia = a.indices().to_vec();
    let n = ia.len();
    let f_a = || one(f3(ia[0], ia[1], ia[2]));
    match b.kind() {
        Plane if n == 3 => f_a(),
        ExceptionalPlane => match n {
            1 if ia == ib => minus(li(ib[0])),
            3 if ia.contains(&ib[0]) => f_a(),
            _ => zero(3),
        },
        Section => match n {
            1 if ib.contains(&ia[0]) => one(lij(ib[0], ib[1])),
            2 if ia == ib => class(&[
                (lij(ib[0], ib[1]), -1),
                (l(), -1),
                (li(ib[0]), 1),
                (li(ib[1]), 1),
            ]),
            3 if subset(&ib, &ia) => minus(f3(ia[0], ia[1], ia[2])),
            _ => zero(3),
        },
        Fiber => match n {
            2 if ia == ib => minus(lij(ib[0], ib[1])),
            3 if subset(&ib, &ia) => f_a(),
            _ => zero(3),
        },
        RuledPlane => match n {
            2 if subset(&ia, &ib) => one(f3(ib[0], ib[1], ib[2])),
            3 if ia == ib => {
                let (i, j, k) = (ia[0], ia[1], ia[2]);
                class(&[
                    (f3(i, j, k), -4),
                    (l(), -1),
                    (lij(i, j), 1),
                    (lij(i, k), 1),
                    (lij(j, k), 1),
                ])
            }
            _ => zero(3),
        },
        RuledExceptional => {
            let t = b.distinguished().expect("V carries a distinguished index");
            let f_b = || f3(ib[0], ib[1], ib[2]);
            match n {
                1 if ia[0] == t => minus(f_b()),
                // Only lines of the plane through the distinguished point meet V.
                2 if ia.contains(&t) && subset(&ia, &ib) => one(f_b()),
                3 if ia == ib => {
                    let o: Vec<u8> = ib.iter().copied().filter(|&x| x != t).collect();
                    class(&[(f_b(), -2), (li(t), -1), (lij(t, o[0]), 1), (lij(t, o[1]), 1)])
                }
                _ => zero(3),
            }
        }
        _ => zero(3),
    }
}

fn divisor_curve(a: &BasisElement, b: &BasisElement) -> ChowClass {
    use Kind::*;
    match (a.kind(), b.kind()) {
        (Hyperplane, Line) => one(pt()),
        (Exceptional, ExceptionalLine) | (Exceptional, Fiber) if a.indices() == b.indices() => {
            minus(pt())
        }
        _ => zero(4),
    }
}

fn surface_surface(a: &BasisElement, b: &BasisElement) -> ChowClass {
    use Kind::*;
    let same = a.indices() == b.indices();
    match (a.kind(), b.kind()) {
        (Plane, Plane) => one(pt()),
        (ExceptionalPlane, ExceptionalPlane) if same => minus(pt()),
        (Section, Section) if same => one(pt()),
        (Section, Fiber) if same => minus(pt()),
        (RuledPlane, RuledPlane) if same => minus(pt()),
        (RuledExceptional, RuledExceptional) if same && a.distinguished() == b.distinguished() => {
            one(pt())
        }
        _ => zero(4),
    }
}
