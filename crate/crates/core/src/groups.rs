//! Finite groups as dense multiplication tables, and orientations on them.
//!
//! Elements are the indices `0..order`; index 0 is always the identity. The
//! catalog groups (`C_n`, `D4`, `Q8`, `S3`) are built by explicit index
//! arithmetic and then pushed through the same validating constructor as
//! imported tables, so every group value satisfies the group axioms.

use std::collections::VecDeque;
use std::fmt;
use std::sync::Arc;

use crate::error::{invalid, Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    label: String,
    order: usize,
    /// Row-major: `table[a * order + b] = a·b`.
    table: Vec<usize>,
    inverses: Vec<usize>,
    names: Vec<String>,
    generators: Vec<(String, usize)>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("label", &self.label)
            .field("order", &self.order)
            .field("generators", &self.generators)
            .finish()
    }
}

impl FiniteGroup {
    /// Validates a multiplication table and builds the group.
    ///
    /// `rows[a][b]` is the index of `a·b`. Index 0 must be the identity, the
    /// table must be associative, and the generators must generate the whole
    /// group. When `names` is `None`, each element is named by its shortlex
    /// shortest word in the generators.
    pub fn from_table(
        label: impl Into<String>,
        rows: &[Vec<usize>],
        generators: Vec<(String, usize)>,
        names: Option<Vec<String>>,
    ) -> Result<Self> {
        let order = rows.len();
        if order == 0 {
            return Err(Error::Table("empty table".into()));
        }
        let mut table = Vec::with_capacity(order * order);
        for (a, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(Error::Table(format!(
                    "row {a} has {} entries, expected {order}",
                    row.len()
                )));
            }
            if let Some(&bad) = row.iter().find(|&&c| c >= order) {
                return Err(Error::Table(format!("row {a} references element {bad}")));
            }
            table.extend_from_slice(row);
        }
        let at = |a: usize, b: usize| table[a * order + b];

        for g in 0..order {
            if at(0, g) != g || at(g, 0) != g {
                return Err(Error::Table(format!("index 0 is not neutral for {g}")));
            }
        }
        let mut inverses = vec![usize::MAX; order];
        for g in 0..order {
            let right: Vec<usize> = (0..order).filter(|&h| at(g, h) == 0).collect();
            match right.as_slice() {
                [h] if at(*h, g) == 0 => inverses[g] = *h,
                _ => return Err(Error::Table(format!("element {g} has no unique inverse"))),
            }
        }
        for a in 0..order {
            for b in 0..order {
                let ab = at(a, b);
                for c in 0..order {
                    if at(ab, c) != at(a, at(b, c)) {
                        return Err(Error::Table(format!(
                            "associativity fails at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        for (name, g) in &generators {
            if *g >= order {
                return Err(Error::Table(format!("generator {name} = {g} out of range")));
            }
            if name.is_empty() || !name.chars().next().unwrap().is_ascii_alphabetic() {
                return Err(Error::Table(format!("bad generator name {name:?}")));
            }
        }

        let mut group = FiniteGroup {
            label: label.into(),
            order,
            table,
            inverses,
            names: Vec::new(),
            generators,
        };
        let words = group.shortest_words();
        if let Some(missing) = words.iter().position(Option::is_none) {
            return Err(Error::Table(format!(
                "element {missing} is not reachable from the generators"
            )));
        }
        group.names = match names {
            Some(names) if names.len() == order => names,
            Some(names) => {
                return Err(Error::Table(format!(
                    "{} names for {order} elements",
                    names.len()
                )))
            }
            None => words
                .into_iter()
                .map(|w| group.render_word(&w.unwrap()))
                .collect(),
        };
        Ok(group)
    }

    /// Cyclic group of order `n` generated by `x`; element `i` is `x^i`.
    pub fn cyclic(n: usize) -> Result<Self> {
        Self::cyclic_with_generator(n, "x")
    }

    pub fn cyclic_with_generator(n: usize, generator: &str) -> Result<Self> {
        if n == 0 {
            return Err(invalid("cyclic group order must be positive"));
        }
        let rows: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        let names = (0..n).map(|i| power_name(generator, i)).collect();
        let gens = if n == 1 {
            Vec::new()
        } else {
            vec![(generator.to_string(), 1)]
        };
        Self::from_table(format!("C{n}"), &rows, gens, Some(names))
    }

    /// Dihedral group of order 8: `x^4 = 1 = y^2`, `(xy)^2 = 1`.
    pub fn dihedral4() -> Self {
        Self::metacyclic("D4", 4, 0).expect("dihedral table is a group")
    }

    /// Quaternion group of order 8: `x^4 = 1`, `x^2 = y^2`, `y^-1 x y = x^-1`.
    pub fn quaternion8() -> Self {
        Self::metacyclic("Q8", 4, 2).expect("quaternion table is a group")
    }

    /// Symmetric group of degree 3: `x^3 = 1`, `y^2 = 1`, `y x y = x^-1`.
    pub fn symmetric3() -> Self {
        Self::metacyclic("S3", 3, 0).expect("symmetric table is a group")
    }

    /// Groups `<x, y | x^m = 1, y^2 = x^ysq, y x y^-1 = x^-1>` with elements
    /// `x^a y^b` stored at index `a + m*b`.
    fn metacyclic(label: &str, m: usize, ysq: usize) -> Result<Self> {
        let split = |g: usize| (g % m, g / m);
        let rows: Vec<Vec<usize>> = (0..2 * m)
            .map(|g| {
                let (a, b) = split(g);
                (0..2 * m)
                    .map(|h| {
                        let (c, d) = split(h);
                        // x^a y^b x^c y^d = x^(a ± c) y^(b+d), with y^2 = x^ysq
                        let twisted = if b == 1 { m - c } else { c };
                        let mut exp = a + twisted;
                        if b + d == 2 {
                            exp += ysq;
                        }
                        exp % m + m * ((b + d) % 2)
                    })
                    .collect()
            })
            .collect();
        let names = (0..2 * m)
            .map(|g| {
                let (a, b) = split(g);
                match (a, b) {
                    (_, 0) => power_name("x", a),
                    (0, _) => "y".to_string(),
                    _ => format!("{}*y", power_name("x", a)),
                }
            })
            .collect();
        let gens = vec![("x".to_string(), 1), ("y".to_string(), m)];
        Self::from_table(label, &rows, gens, Some(names))
    }

    /// Looks up `C<n>`, `D4`, `Q8` or `S3`.
    pub fn catalog(spec: &str) -> Result<Self> {
        match spec {
            "D4" => Ok(Self::dihedral4()),
            "Q8" => Ok(Self::quaternion8()),
            "S3" => Ok(Self::symmetric3()),
            _ => match spec.strip_prefix('C').map(str::parse::<usize>) {
                Some(Ok(n)) => Self::cyclic(n),
                _ => Err(invalid(format!(
                    "unknown group {spec:?}; expected C<n>, D4, Q8 or S3"
                ))),
            },
        }
    }

    /// Parses the plain-text table format: the order on the first line, one
    /// table row per line, then a line of generator indices. Generators are
    /// named `a`, `b`, `c`, ... in the order listed.
    pub fn parse_table(label: impl Into<String>, text: &str) -> Result<Self> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let parse_nums = |line: &str| -> Result<Vec<usize>> {
            line.split_whitespace()
                .map(|tok| {
                    tok.parse::<usize>()
                        .map_err(|_| Error::Table(format!("not an index: {tok:?}")))
                })
                .collect()
        };
        let order: usize = lines
            .next()
            .ok_or_else(|| Error::Table("missing order line".into()))?
            .parse()
            .map_err(|_| Error::Table("first line must be the group order".into()))?;
        let mut rows = Vec::with_capacity(order);
        for i in 0..order {
            let line = lines
                .next()
                .ok_or_else(|| Error::Table(format!("missing table row {i}")))?;
            rows.push(parse_nums(line)?);
        }
        let gens = match lines.next() {
            Some(line) => parse_nums(line)?,
            None if order == 1 => Vec::new(),
            None => return Err(Error::Table("missing generator line".into())),
        };
        if lines.next().is_some() {
            return Err(Error::Table("trailing content after generator line".into()));
        }
        let gens = gens
            .into_iter()
            .enumerate()
            .map(|(i, g)| (letter_name(i), g))
            .collect();
        Self::from_table(label, &rows, gens, None)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, g: usize) -> usize {
        self.inverses[g]
    }

    /// `g^k` for any integer `k`.
    pub fn pow(&self, g: usize, k: i64) -> usize {
        let base = if k < 0 { self.inv(g) } else { g };
        let mut acc = self.identity();
        for _ in 0..k.unsigned_abs() {
            acc = self.mul(acc, base);
        }
        acc
    }

    /// Least `n >= 1` with `g^n = 1`.
    pub fn element_order(&self, g: usize) -> usize {
        let mut acc = g;
        let mut n = 1;
        while acc != self.identity() {
            acc = self.mul(acc, g);
            n += 1;
        }
        n
    }

    pub fn name(&self, g: usize) -> &str {
        &self.names[g]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn element_by_name(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn generators(&self) -> &[(String, usize)] {
        &self.generators
    }

    pub fn generator(&self, name: &str) -> Option<usize> {
        self.generators
            .iter()
            .find(|(n, _)| n == name)
            .map(|&(_, g)| g)
    }

    /// Breadth-first search over right multiplication by generators; the
    /// first word to reach an element is its shortlex-minimal spelling.
    fn shortest_words(&self) -> Vec<Option<Vec<usize>>> {
        let mut words: Vec<Option<Vec<usize>>> = vec![None; self.order];
        words[0] = Some(Vec::new());
        let mut queue = VecDeque::from([0usize]);
        while let Some(g) = queue.pop_front() {
            for (i, &(_, s)) in self.generators.iter().enumerate() {
                let h = self.mul(g, s);
                if words[h].is_none() {
                    let mut w = words[g].clone().unwrap();
                    w.push(i);
                    words[h] = Some(w);
                    queue.push_back(h);
                }
            }
        }
        words
    }

    fn render_word(&self, word: &[usize]) -> String {
        if word.is_empty() {
            return "1".into();
        }
        let mut parts: Vec<String> = Vec::new();
        let mut i = 0;
        while i < word.len() {
            let run = word[i..].iter().take_while(|&&s| s == word[i]).count();
            parts.push(power_name(&self.generators[word[i]].0, run));
            i += run;
        }
        parts.join("*")
    }
}

fn power_name(generator: &str, exp: usize) -> String {
    match exp {
        0 => "1".into(),
        1 => generator.into(),
        _ => format!("{generator}^{exp}"),
    }
}

fn letter_name(i: usize) -> String {
    if i < 26 {
        ((b'a' + i as u8) as char).to_string()
    } else {
        format!("g{i}")
    }
}

/// A homomorphism `G -> {+1, -1}`.
///
/// Orientations built with [`Orientation::from_generators`] are always
/// non-trivial. [`Orientation::classical`] gives the all-`+1` map, under which
/// the oriented involution reduces to the classical one.
#[derive(Clone, PartialEq, Eq)]
pub struct Orientation {
    group: Arc<FiniteGroup>,
    signs: Vec<i8>,
}

impl fmt::Debug for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self
            .group
            .generators()
            .iter()
            .map(|(n, g)| format!("{n}:{:+}", self.signs[*g]))
            .collect();
        write!(f, "Orientation({}; {})", self.group.label(), gens.join(","))
    }
}

impl Orientation {
    /// Extends generator signs multiplicatively to the whole group.
    ///
    /// Every generator must be assigned exactly once. Fails with
    /// [`Error::InconsistentAssignment`] when the signs violate a relation of
    /// the group and with [`Error::TrivialOrientation`] when all are `+1`.
    pub fn from_generators(group: Arc<FiniteGroup>, assignment: &[(&str, i8)]) -> Result<Self> {
        let mut gen_signs: Vec<Option<i8>> = vec![None; group.generators().len()];
        for &(name, sign) in assignment {
            if sign != 1 && sign != -1 {
                return Err(invalid(format!("sign for {name} must be +1 or -1")));
            }
            let slot = group
                .generators()
                .iter()
                .position(|(n, _)| n == name)
                .ok_or_else(|| invalid(format!("unknown generator {name:?}")))?;
            if gen_signs[slot].replace(sign).is_some() {
                return Err(invalid(format!("generator {name:?} assigned twice")));
            }
        }
        if let Some(missing) = gen_signs.iter().position(Option::is_none) {
            return Err(invalid(format!(
                "no sign given for generator {:?}",
                group.generators()[missing].0
            )));
        }

        let mut signs: Vec<Option<i8>> = vec![None; group.order()];
        signs[0] = Some(1);
        let mut queue = VecDeque::from([0usize]);
        while let Some(g) = queue.pop_front() {
            let sg = signs[g].unwrap();
            for (i, &(_, s)) in group.generators().iter().enumerate() {
                let h = group.mul(g, s);
                let sh = sg * gen_signs[i].unwrap();
                match signs[h] {
                    None => {
                        signs[h] = Some(sh);
                        queue.push_back(h);
                    }
                    Some(prev) if prev != sh => {
                        return Err(Error::InconsistentAssignment(format!(
                            "element {} would have both signs",
                            group.name(h)
                        )))
                    }
                    Some(_) => {}
                }
            }
        }
        let signs: Vec<i8> = signs.into_iter().map(Option::unwrap).collect();
        for a in 0..group.order() {
            for b in 0..group.order() {
                if signs[group.mul(a, b)] != signs[a] * signs[b] {
                    return Err(Error::InconsistentAssignment(format!(
                        "sign is not multiplicative at ({}, {})",
                        group.name(a),
                        group.name(b)
                    )));
                }
            }
        }
        if signs.iter().all(|&s| s == 1) {
            return Err(Error::TrivialOrientation);
        }
        Ok(Orientation { group, signs })
    }

    /// The trivial orientation; the oriented involution becomes `g -> g^-1`.
    pub fn classical(group: Arc<FiniteGroup>) -> Self {
        let signs = vec![1; group.order()];
        Orientation { group, signs }
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    #[inline]
    pub fn sign(&self, g: usize) -> i8 {
        self.signs[g]
    }

    pub fn is_trivial(&self) -> bool {
        self.signs.iter().all(|&s| s == 1)
    }

    pub fn in_kernel(&self, g: usize) -> bool {
        self.signs[g] == 1
    }

    pub fn kernel(&self) -> Vec<usize> {
        (0..self.group.order())
            .filter(|&g| self.in_kernel(g))
            .collect()
    }

    /// Generator signs in `name:±1` form; `classical` for the trivial map.
    pub fn describe(&self) -> String {
        if self.is_trivial() {
            return "classical".into();
        }
        self.group
            .generators()
            .iter()
            .map(|(n, g)| format!("{n}:{:+}", self.signs[*g]))
            .collect::<Vec<_>>()
            .join(",")
    }
}
