//! Desk-scale probe of the epimorphism counts onto PSL2(q): exhaustive
//! enumeration of generating pairs with prescribed order divisibility, and
//! their partition into conjugacy classes under PSL2(q) itself (inner) or
//! PGL2(q) (adjoint).
//!
//! Only odd prime q is supported; prime fields keep the matrix arithmetic
//! trivial and the counting statement concerns X(p).

use std::collections::HashMap;

use serde::Serialize;

use crate::error::Error;
use crate::rigidity::is_prime;
use crate::triple::HyperbolicTriple;

/// Default cap on the field size; 61 keeps the group order near 10^5.
pub const DEFAULT_Q_BUDGET: u64 = 61;

/// Canonical representative of a PSL2(q) element: an SL2 matrix
/// (a, b, c, d) mod q whose first nonzero entry lies in 1..=(q-1)/2.
pub type Mat = [u64; 4];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Conjugation {
    Inner,
    Adjoint,
}

impl std::fmt::Display for Conjugation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Conjugation::Inner => write!(f, "inner"),
            Conjugation::Adjoint => write!(f, "adjoint"),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct EpiCount {
    pub q: u64,
    pub triple: HyperbolicTriple,
    pub conjugation: Conjugation,
    pub strict_orders: bool,
    pub group_order: u64,
    /// Generating pairs (x, y) with the order constraints satisfied.
    pub raw_count: u64,
    /// Orbits of those pairs under the chosen conjugation group.
    pub class_count: u64,
}

/// The group PSL2(q) with every canonical element enumerated and indexed.
#[derive(Debug)]
pub struct Psl2Group {
    q: u64,
    elems: Vec<Mat>,
    index: HashMap<Mat, u32>,
    orders: Vec<u32>,
}

const IDENTITY: Mat = [1, 0, 0, 1];

fn canonical(m: Mat, q: u64) -> Mat {
    for &entry in &m {
        if entry != 0 {
            if entry > (q - 1) / 2 {
                return [
                    (q - m[0]) % q,
                    (q - m[1]) % q,
                    (q - m[2]) % q,
                    (q - m[3]) % q,
                ];
            }
            return m;
        }
    }
    m
}

fn mat_mul(x: Mat, y: Mat, q: u64) -> Mat {
    canonical(
        [
            (x[0] * y[0] + x[1] * y[2]) % q,
            (x[0] * y[1] + x[1] * y[3]) % q,
            (x[2] * y[0] + x[3] * y[2]) % q,
            (x[2] * y[1] + x[3] * y[3]) % q,
        ],
        q,
    )
}

/// Inverse of a unimodular matrix: (d, -b, -c, a).
fn mat_inv(m: Mat, q: u64) -> Mat {
    canonical([m[3], (q - m[1]) % q, (q - m[2]) % q, m[0]], q)
}

fn conj(g: Mat, x: Mat, q: u64) -> Mat {
    mat_mul(mat_mul(g, x, q), mat_inv(g, q), q)
}

fn pow_mod(mut base: u64, mut exp: u64, q: u64) -> u64 {
    let mut acc = 1u64;
    base %= q;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % q;
        }
        base = base * base % q;
        exp >>= 1;
    }
    acc
}

fn inv_mod(a: u64, q: u64) -> u64 {
    pow_mod(a, q - 2, q)
}

fn is_odd_prime_power(q: u64) -> bool {
    let mut p = 3;
    while p * p <= q {
        if q.is_multiple_of(p) {
            let mut m = q;
            while m.is_multiple_of(p) {
                m /= p;
            }
            return m == 1;
        }
        p += 2;
    }
    false
}

fn validate_q(q: u64, q_budget: u64) -> Result<(), Error> {
    if q.is_multiple_of(2) {
        return Err(Error::UnsupportedField {
            q,
            reason: "even field sizes are unsupported".into(),
        });
    }
    if !is_prime(q) {
        let reason = if is_odd_prime_power(q) {
            "prime powers are unsupported (prime fields only)"
        } else {
            "q must be prime"
        };
        return Err(Error::UnsupportedField {
            q,
            reason: reason.into(),
        });
    }
    if q < 3 {
        return Err(Error::UnsupportedField {
            q,
            reason: "q must be an odd prime >= 3".into(),
        });
    }
    if q > q_budget {
        return Err(Error::BudgetExceeded {
            needed: q as u128,
            budget: q_budget,
        });
    }
    Ok(())
}

impl Psl2Group {
    /// Enumerate PSL2(q). Errors on even q, composite q, prime powers, or
    /// q beyond the budget.
    pub fn new(q: u64, q_budget: u64) -> Result<Psl2Group, Error> {
        validate_q(q, q_budget)?;
        let mut elems = Vec::new();
        let mut index = HashMap::new();
        let mut push = |m: Mat| {
            let m = canonical(m, q);
            if let std::collections::hash_map::Entry::Vacant(e) = index.entry(m) {
                e.insert(elems.len() as u32);
                elems.push(m);
            }
        };
        // det = 1: for a != 0, d is determined; for a = 0, bc = -1.
        for a in 0..q {
            for b in 0..q {
                for c in 0..q {
                    if a != 0 {
                        let d = (1 + b * c % q) % q * inv_mod(a, q) % q;
                        push([a, b, c, d]);
                    } else if b != 0 {
                        let c_forced = (q - inv_mod(b, q)) % q;
                        if c == c_forced {
                            for d in 0..q {
                                push([0, b, c, d]);
                            }
                        }
                    }
                }
            }
        }
        let expected = q * (q * q - 1) / 2;
        assert_eq!(elems.len() as u64, expected, "PSL2({q}) order");

        let mut orders = vec![0u32; elems.len()];
        for (i, &m) in elems.iter().enumerate() {
            let mut acc = m;
            let mut ord = 1;
            while acc != IDENTITY {
                acc = mat_mul(acc, m, q);
                ord += 1;
            }
            orders[i] = ord;
        }
        Ok(Psl2Group {
            q,
            elems,
            index,
            orders,
        })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn order(&self) -> u64 {
        self.elems.len() as u64
    }

    pub fn elements(&self) -> &[Mat] {
        &self.elems
    }

    pub fn element_order(&self, m: Mat) -> u32 {
        self.orders[self.index[&canonical(m, self.q)] as usize]
    }

    fn idx(&self, m: Mat) -> u32 {
        self.index[&m]
    }

    /// True iff x and y generate the whole group: breadth-first closure of
    /// words in x and y, with the group order as the stopping certificate.
    pub fn subgroup_generates(&self, x: Mat, y: Mat) -> bool {
        let x = canonical(x, self.q);
        let y = canonical(y, self.q);
        let mut seen = vec![false; self.elems.len()];
        let mut queue = Vec::with_capacity(self.elems.len());
        seen[self.idx(IDENTITY) as usize] = true;
        queue.push(IDENTITY);
        let mut count = 1usize;
        let mut head = 0;
        while head < queue.len() {
            let m = queue[head];
            head += 1;
            for g in [x, y] {
                let next = mat_mul(m, g, self.q);
                let i = self.idx(next) as usize;
                if !seen[i] {
                    seen[i] = true;
                    count += 1;
                    if count == self.elems.len() {
                        return true;
                    }
                    queue.push(next);
                }
            }
        }
        count == self.elems.len()
    }
}

/// A conjugacy class of x-candidates: representative, size, and a
/// transporter g_m (with g_m rep g_m^-1 = m) for every member.
struct XClass {
    rep: Mat,
    size: u64,
    transporter: HashMap<Mat, Mat>,
}

fn divides(d: u32, n: u64) -> bool {
    n.is_multiple_of(d as u64)
}

fn order_ok(ord: u32, bound: u64, strict: bool) -> bool {
    if strict {
        ord as u64 == bound
    } else {
        divides(ord, bound)
    }
}

/// Exact count of pairs (x, y) generating PSL2(q) with ord(x) dividing a,
/// ord(y) dividing b, ord(xy) dividing c (or exact orders in strict mode),
/// partitioned into orbits under the chosen conjugation action.
pub fn epi_count(
    t: HyperbolicTriple,
    q: u64,
    conjugation: Conjugation,
    strict_orders: bool,
    q_budget: u64,
) -> Result<EpiCount, Error> {
    let group = Psl2Group::new(q, q_budget)?;
    let (a, b, c) = (t.a(), t.b(), t.c());

    // Partition the x-candidates into conjugacy classes, remembering a
    // transporter from the representative to each member.
    let x_candidates: Vec<u32> = (0..group.elems.len() as u32)
        .filter(|&i| order_ok(group.orders[i as usize], a, strict_orders))
        .collect();
    let mut class_of: HashMap<Mat, usize> = HashMap::new();
    let mut classes: Vec<XClass> = Vec::new();
    for &i in &x_candidates {
        let rep = group.elems[i as usize];
        if class_of.contains_key(&rep) {
            continue;
        }
        let mut transporter = HashMap::new();
        for &g in &group.elems {
            let m = conj(g, rep, group.q);
            transporter.entry(m).or_insert(g);
        }
        for m in transporter.keys() {
            class_of.insert(*m, classes.len());
        }
        classes.push(XClass {
            rep,
            size: transporter.len() as u64,
            transporter,
        });
    }

    let y_candidates: Vec<Mat> = (0..group.elems.len())
        .filter(|&i| order_ok(group.orders[i], b, strict_orders))
        .map(|i| group.elems[i])
        .collect();

    // Per class: the valid generating partners of the representative, and
    // their orbits under the centralizer of the representative.
    let mut raw_count = 0u64;
    let mut inner_orbits: Vec<(usize, Mat)> = Vec::new(); // (class, orbit representative)
    let mut orbit_of: HashMap<(usize, Mat), usize> = HashMap::new();
    for (k, class) in classes.iter().enumerate() {
        let rep = class.rep;
        let valid: Vec<Mat> = y_candidates
            .iter()
            .copied()
            .filter(|&y| {
                let prod = mat_mul(rep, y, group.q);
                order_ok(group.element_order(prod), c, strict_orders)
                    && group.subgroup_generates(rep, y)
            })
            .collect();
        raw_count += class.size * valid.len() as u64;
        if valid.is_empty() {
            continue;
        }
        let centralizer: Vec<Mat> = group
            .elems
            .iter()
            .copied()
            .filter(|&g| conj(g, rep, group.q) == rep)
            .collect();
        let mut assigned: HashMap<Mat, usize> = HashMap::new();
        for &y in &valid {
            if assigned.contains_key(&y) {
                continue;
            }
            let orbit_id = inner_orbits.len();
            inner_orbits.push((k, y));
            for &g in &centralizer {
                assigned.entry(conj(g, y, group.q)).or_insert(orbit_id);
            }
        }
        for (y, id) in assigned {
            orbit_of.insert((k, y), id);
        }
    }

    let class_count = match conjugation {
        Conjugation::Inner => inner_orbits.len() as u64,
        Conjugation::Adjoint => {
            // Fuse inner orbits under a fixed outer element: conjugation by
            // diag(nu, 1) with nu a non-residue generates PGL2 over PSL2.
            let nu = (2..q)
                .find(|&x| pow_mod(x, (q - 1) / 2, q) == q - 1)
                .expect("odd prime fields have non-residues");
            let tau = move |m: Mat| -> Mat {
                canonical([m[0], m[1] * nu % q, m[2] * inv_mod(nu, q) % q, m[3]], q)
            };
            let mut parent: Vec<usize> = (0..inner_orbits.len()).collect();
            fn find(parent: &mut [usize], mut i: usize) -> usize {
                while parent[i] != i {
                    parent[i] = parent[parent[i]];
                    i = parent[i];
                }
                i
            }
            for (id, &(k, y)) in inner_orbits.iter().enumerate() {
                let x_img = tau(classes[k].rep);
                let y_img = tau(y);
                let k2 = class_of[&x_img];
                // Move the pair back onto the class representative.
                let g = mat_inv(classes[k2].transporter[&x_img], group.q);
                debug_assert_eq!(conj(g, x_img, group.q), classes[k2].rep);
                let y_back = conj(g, y_img, group.q);
                let other = orbit_of[&(k2, y_back)];
                let (ra, rb) = (find(&mut parent, id), find(&mut parent, other));
                parent[ra] = rb;
            }
            (0..inner_orbits.len())
                .filter(|&i| find(&mut parent, i) == i)
                .count() as u64
        }
    };

    Ok(EpiCount {
        q,
        triple: t,
        conjugation,
        strict_orders,
        group_order: group.order(),
        raw_count,
        class_count,
    })
}
