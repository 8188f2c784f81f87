//! Eulerian trees: plane trees with black and white leaves, even inner
//! degrees, and exactly `i - 1` white leaves around each inner vertex of
//! degree `2i`.
//!
//! Trees are stored as rotation systems in the same dart convention as
//! [`PlanarMap`](crate::map::PlanarMap), relabeled from the root leaf so that
//! structural equality is isomorphism. Dart 0 always leaves the root leaf.
//! Leaves are addressed publicly by their position in the border word
//! (0-based, the root leaf is last).

use std::fmt;

use crate::darts::{Darts, NONE};
use crate::error::{ParseError, TreeError};
use crate::map::{Color, DegreeDistribution};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn from_bool(plus: bool) -> Sign {
        if plus {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

impl std::str::FromStr for Sign {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "+" | "plus" => Ok(Sign::Plus),
            "-" | "minus" => Ok(Sign::Minus),
            _ => Err(format!("invalid sign {s:?}")),
        }
    }
}

/// Bracket structure of a cyclic leaf word: `w` opens, `b` closes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BorderWord {
    pub letters: Vec<Color>,
    /// `partner[i]` is the position matched with `i`, `None` for free leaves.
    pub partner: Vec<Option<usize>>,
    /// The two unmatched black positions, in increasing order.
    pub free: [usize; 2],
}

impl BorderWord {
    /// Cyclic bracket matching of a word with exactly two more `b` than `w`.
    pub fn new(letters: Vec<Color>) -> BorderWord {
        let len = letters.len();
        let mut partner = vec![None; len];
        let mut stack = Vec::new();
        let mut unmatched_b = Vec::new();
        for (i, &c) in letters.iter().enumerate() {
            match c {
                Color::White => stack.push(i),
                Color::Black => match stack.pop() {
                    Some(w) => {
                        partner[w] = Some(i);
                        partner[i] = Some(w);
                    }
                    None => unmatched_b.push(i),
                },
            }
        }
        // leftover whites close around the end of the word
        let c = stack.len();
        assert_eq!(unmatched_b.len(), c + 2, "word does not have two excess black letters");
        for (k, w) in stack.into_iter().rev().enumerate() {
            let b = unmatched_b[k];
            partner[w] = Some(b);
            partner[b] = Some(w);
        }
        let free = [unmatched_b[c], unmatched_b[c + 1]];
        BorderWord { letters, partner, free }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_free(&self, i: usize) -> bool {
        self.free.contains(&i)
    }

    /// First free position strictly after `from`, walking backwards
    /// (clockwise) and wrapping around; `from` itself is tested last.
    pub fn first_free_clockwise(&self, from: usize) -> usize {
        let len = self.len();
        (1..=len).map(|k| (from + len - k) % len).find(|&i| self.is_free(i)).unwrap()
    }

    pub fn first_free_counterclockwise(&self, from: usize) -> usize {
        let len = self.len();
        (1..=len).map(|k| (from + k) % len).find(|&i| self.is_free(i)).unwrap()
    }
}

impl fmt::Display for BorderWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.letters {
            f.write_str(match c {
                Color::White => "w",
                Color::Black => "b",
            })?;
        }
        Ok(())
    }
}

/// Unrooted working form shared by the tree surgeries.
#[derive(Clone, Debug)]
pub(crate) struct LooseTree {
    pub darts: Darts,
    /// Color of the leaf at the origin of each dart, `None` for inner darts.
    pub color: Vec<Option<Color>>,
}

impl LooseTree {
    pub fn is_leaf(&self, h: usize) -> bool {
        self.darts.alive[h] && self.darts.is_leaf(h)
    }

    /// Leaf darts in border order, starting after `from` and walking the
    /// face counterclockwise; `from` itself comes last if it is a leaf.
    pub fn leaves_after(&self, from: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut h = self.darts.face_next(from);
        loop {
            if self.darts.is_leaf(h) {
                out.push(h);
            }
            if h == from {
                break;
            }
            h = self.darts.face_next(h);
        }
        out
    }

    pub fn word_after(&self, from: usize) -> (Vec<usize>, BorderWord) {
        let leaves = self.leaves_after(from);
        let letters = leaves.iter().map(|&h| self.color[h].unwrap()).collect();
        (leaves, BorderWord::new(letters))
    }

    pub fn free_leaves(&self, any: usize) -> [usize; 2] {
        let (leaves, w) = self.word_after(any);
        [leaves[w.free[0]], leaves[w.free[1]]]
    }

    /// First free leaf met walking the border from the side of dart `h`.
    /// Counterclockwise visits `h`, `face_next(h)`, ...; clockwise visits
    /// `h`, `face_prev(h)`, ....
    pub fn first_free_from(&self, h: usize, counterclockwise: bool) -> usize {
        let free = self.free_leaves(h);
        let mut x = h;
        loop {
            if free.contains(&x) {
                return x;
            }
            x = if counterclockwise { self.darts.face_next(x) } else { self.darts.face_prev(x) };
        }
    }

    /// Root at the leaf `root_dart` and canonicalize.
    pub fn rooted(&self, root_dart: usize) -> (EulerianTree, Vec<usize>) {
        assert!(self.is_leaf(root_dart));
        let (rotation, map) = self.darts.compact_from(root_dart);
        let mut color = vec![None; rotation.len()];
        for (old, &new) in map.iter().enumerate() {
            if new != NONE {
                color[new] = self.color[old];
            }
        }
        (EulerianTree { rotation, color }, map)
    }

    /// Disjoint union; returns the offset of `other`'s darts.
    pub fn append(&mut self, other: &LooseTree) -> usize {
        self.color.extend_from_slice(&other.color);
        self.darts.append(&other.darts)
    }

    /// Validate and canonicalize with `root` as the root leaf.
    pub fn into_tree(&self, root: usize) -> Result<(EulerianTree, Vec<usize>), TreeError> {
        let keep = self.component(root);
        EulerianTree::from_loose(&self.restrict(&keep), root)
    }

    /// Split a dart set into the component containing `h`.
    pub fn component(&self, h: usize) -> Vec<bool> {
        let mut seen = vec![false; self.darts.len()];
        let mut stack = vec![h];
        seen[h] = true;
        while let Some(x) = stack.pop() {
            for y in [self.darts.next[x], self.darts.opp[x]] {
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        seen
    }

    /// Restrict to the darts flagged in `keep`.
    pub fn restrict(&self, keep: &[bool]) -> LooseTree {
        let mut t = self.clone();
        for (h, &k) in keep.iter().enumerate() {
            if !k {
                t.darts.alive[h] = false;
            }
        }
        t
    }

    /// Cut the edge of `x`: each side gets a new black leaf. Returns the new
    /// leaf darts `(at origin of x, at end of x)`.
    pub fn cut_edge(&mut self, x: usize) -> (usize, usize) {
        let y = self.darts.opp[x];
        let lx = self.darts.push();
        let ly = self.darts.push();
        self.color.push(Some(Color::Black));
        self.color.push(Some(Color::Black));
        self.darts.opp[x] = lx;
        self.darts.opp[lx] = x;
        self.darts.opp[y] = ly;
        self.darts.opp[ly] = y;
        (lx, ly)
    }

    /// Merge two leaves into an edge. Returns the dart of the new edge going
    /// from the neighbour of `a` to the neighbour of `b`.
    pub fn merge_leaves(&mut self, a: usize, b: usize) -> usize {
        let xa = self.darts.opp[a];
        let xb = self.darts.opp[b];
        self.darts.opp[xa] = xb;
        self.darts.opp[xb] = xa;
        self.darts.alive[a] = false;
        self.darts.alive[b] = false;
        self.color[a] = None;
        self.color[b] = None;
        xa
    }
}

/// A rooted eulerian tree in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EulerianTree {
    rotation: Vec<usize>,
    color: Vec<Option<Color>>,
}

impl EulerianTree {
    /// Build from a rotation (pairing `h ^ 1`), the leaf color of each dart
    /// (`Some` exactly on darts leaving a leaf) and the root leaf's dart.
    pub fn new(
        rotation: Vec<usize>,
        color: Vec<Option<Color>>,
        root: usize,
    ) -> Result<(EulerianTree, Vec<usize>), TreeError> {
        let loose = LooseTree { darts: Darts::paired(&rotation), color };
        Self::from_loose(&loose, root)
    }

    pub(crate) fn from_loose(
        t: &LooseTree,
        root: usize,
    ) -> Result<(EulerianTree, Vec<usize>), TreeError> {
        validate(t, root)?;
        Ok(t.rooted(root))
    }

    pub(crate) fn loose(&self) -> LooseTree {
        LooseTree { darts: Darts::paired(&self.rotation), color: self.color.clone() }
    }

    pub fn rotation(&self) -> &[usize] {
        &self.rotation
    }

    pub fn color(&self, h: usize) -> Option<Color> {
        self.color[h]
    }

    pub fn dart_count(&self) -> usize {
        self.rotation.len()
    }

    pub fn is_leaf_dart(&self, h: usize) -> bool {
        self.rotation[h] == h
    }

    /// True for an edge whose two ends are inner vertices.
    pub fn is_inner_edge(&self, h: usize) -> bool {
        !self.is_leaf_dart(h) && !self.is_leaf_dart(h ^ 1)
    }

    /// One dart per inner edge (the even one).
    pub fn inner_edges(&self) -> Vec<usize> {
        (0..self.rotation.len()).step_by(2).filter(|&h| self.is_inner_edge(h)).collect()
    }

    /// Leaf darts in border order, root leaf last.
    pub fn leaves(&self) -> Vec<usize> {
        self.loose().leaves_after(0)
    }

    pub fn word(&self) -> BorderWord {
        self.loose().word_after(0).1
    }

    pub fn leaf_dart(&self, pos: usize) -> Result<usize, TreeError> {
        self.leaves().get(pos).copied().ok_or(TreeError::LeafOutOfRange(pos))
    }

    pub fn leaf_position(&self, dart: usize) -> Option<usize> {
        self.leaves().iter().position(|&h| h == dart)
    }

    /// Border positions of the two free leaves.
    pub fn free_leaves(&self) -> (usize, usize) {
        let w = self.word();
        (w.free[0], w.free[1])
    }

    pub fn is_balanced(&self) -> bool {
        let w = self.word();
        w.is_free(w.len() - 1)
    }

    pub fn black_leaves(&self) -> usize {
        self.color.iter().filter(|c| **c == Some(Color::Black)).count()
    }

    pub fn white_leaves(&self) -> usize {
        self.color.iter().filter(|c| **c == Some(Color::White)).count()
    }

    pub fn degree_distribution(&self) -> DegreeDistribution {
        let d = self.loose().darts;
        let (lab, count) = d.vertex_labels();
        let mut deg = vec![0; count];
        for &l in &lab {
            deg[l] += 1;
        }
        DegreeDistribution::from_degrees(deg.into_iter().filter(|&k| k > 1))
    }

    /// Reroot at the leaf with dart `leaf`.
    pub fn reroot(&self, leaf: usize) -> Result<(EulerianTree, Vec<usize>), TreeError> {
        if self.color.get(leaf).copied().flatten() != Some(Color::Black) {
            return Err(TreeError::MarkNotBlackLeaf);
        }
        Ok(self.loose().rooted(leaf))
    }

    /// Rerooting bijection: a balanced tree with a marked black leaf becomes
    /// the tree rooted at that leaf together with a sign, `+` when the old
    /// root is the first free leaf met walking clockwise from the mark.
    pub fn reroot_with_sign(&self, leaf: usize) -> Result<(EulerianTree, Sign), TreeError> {
        if !self.is_balanced() {
            return Err(TreeError::NotBalanced);
        }
        let sign = self.sign_of_mark(leaf)?;
        Ok((self.reroot(leaf)?.0, sign))
    }

    /// Sign part of [`EulerianTree::reroot_with_sign`].
    pub fn sign_of_mark(&self, leaf: usize) -> Result<Sign, TreeError> {
        if self.color.get(leaf).copied().flatten() != Some(Color::Black) {
            return Err(TreeError::MarkNotBlackLeaf);
        }
        let w = self.word();
        let pos = self.leaf_position(leaf).unwrap();
        Ok(Sign::from_bool(w.first_free_clockwise(pos) == w.len() - 1))
    }

    /// Inverse of [`EulerianTree::reroot_with_sign`]: returns the balanced
    /// tree and the dart of the former root (now the marked leaf).
    pub fn unreroot(&self, sign: Sign) -> (EulerianTree, usize) {
        let (t, map) = self.unreroot_traced(sign);
        (t, map[0])
    }

    /// [`EulerianTree::unreroot`] with the full dart relabeling.
    pub(crate) fn unreroot_traced(&self, sign: Sign) -> (EulerianTree, Vec<usize>) {
        let w = self.word();
        let leaves = self.leaves();
        let first = w.first_free_clockwise(w.len() - 1);
        let root_pos = match sign {
            Sign::Plus => first,
            Sign::Minus => {
                if w.free[0] == first {
                    w.free[1]
                } else {
                    w.free[0]
                }
            }
        };
        self.loose().rooted(leaves[root_pos])
    }

    /// The other balanced rooting of the same unrooted tree.
    pub fn balanced_conjugate(&self) -> EulerianTree {
        let (leaves, w) = self.loose().word_after(0);
        let other = if w.free[1] == w.len() - 1 { w.free[0] } else { w.free[1] };
        self.loose().rooted(leaves[other]).0
    }

    /// Nested text form hung from the root leaf, e.g. `b(wbb)`.
    pub fn shape(&self) -> String {
        fn rec(t: &EulerianTree, into: usize, out: &mut String) {
            // `into` points at an inner vertex; list the other darts there
            out.push('(');
            let mut h = t.rotation[into];
            while h != into {
                let far = h ^ 1;
                if t.is_leaf_dart(far) {
                    out.push(t.color[far].unwrap().letter());
                } else {
                    rec(t, far, out);
                }
                h = t.rotation[h];
            }
            out.push(')');
        }
        let mut out = String::new();
        out.push(self.color[0].unwrap().letter());
        rec(self, 1, &mut out);
        out
    }

    /// Parse the nested form produced by [`EulerianTree::shape`]; the first
    /// letter is the leaf the shape hangs from, which becomes the root.
    pub fn from_shape(s: &str) -> Result<EulerianTree, ParseError> {
        parse_shape(s, 1).and_then(|t| {
            EulerianTree::from_loose(&t, 0)
                .map(|(t, _)| t)
                .map_err(|e| ParseError { line: 1, column: 1, message: e.to_string() })
        })
    }
}


/// Parse a shape into a loose tree whose dart 0 leaves the anchor leaf.
pub(crate) fn parse_shape(s: &str, line: usize) -> Result<LooseTree, ParseError> {
    let chars: Vec<char> = s.trim().chars().collect();
    let err = |col: usize, m: &str| ParseError { line, column: col + 1, message: m.to_string() };
    let color_of = |c: char| match c {
        'b' => Some(Color::Black),
        'w' => Some(Color::White),
        _ => None,
    };
    let anchor = chars.first().and_then(|&c| color_of(c)).ok_or_else(|| err(0, "expected leaf color"))?;
    let mut darts = Darts::new(Vec::new(), Vec::new());
    let mut color = Vec::new();
    let new_edge = |darts: &mut Darts, color: &mut Vec<Option<Color>>| {
        let a = darts.push();
        let b = darts.push();
        darts.opp[a] = b;
        darts.opp[b] = a;
        color.push(None);
        color.push(None);
        (a, b)
    };
    // edge from anchor into the first inner vertex
    let (a0, b0) = new_edge(&mut darts, &mut color);
    color[a0] = Some(anchor);
    // stack of (rotation list being built at an inner vertex)
    let mut stack: Vec<Vec<usize>> = Vec::new();
    let mut pending = Some(b0);
    for (i, &c) in chars.iter().enumerate().skip(1) {
        match c {
            '(' => {
                let into = match pending.take() {
                    Some(into) => into,
                    None => {
                        let top = stack.last_mut().ok_or_else(|| err(i, "unexpected '('"))?;
                        let (a, b) = new_edge(&mut darts, &mut color);
                        top.push(a);
                        b
                    }
                };
                stack.push(vec![into]);
            }
            ')' => {
                let ring = stack.pop().ok_or_else(|| err(i, "unbalanced ')'"))?;
                if ring.len() < 2 {
                    return Err(err(i, "inner vertex without children"));
                }
                for k in 0..ring.len() {
                    darts.next[ring[k]] = ring[(k + 1) % ring.len()];
                }
                if stack.is_empty() && i + 1 != chars.len() {
                    return Err(err(i + 1, "trailing characters"));
                }
            }
            'b' | 'w' => {
                let top = stack.last_mut().ok_or_else(|| err(i, "leaf outside a vertex"))?;
                let (a, b) = new_edge(&mut darts, &mut color);
                top.push(a);
                color[b] = color_of(c);
            }
            _ => return Err(err(i, "unexpected character")),
        }
    }
    if !stack.is_empty() {
        return Err(err(chars.len(), "unclosed '('"));
    }
    if pending.is_some() {
        return Err(err(1, "expected '(' after the anchor leaf"));
    }
    Ok(LooseTree { darts, color })
}

fn validate(t: &LooseTree, root: usize) -> Result<(), TreeError> {
    let d = &t.darts;
    let live: Vec<usize> = (0..d.len()).filter(|&h| d.alive[h]).collect();
    if !d.alive[root] {
        return Err(TreeError::NotATree);
    }
    let comp = t.component(root);
    if live.iter().any(|&h| !comp[h]) {
        return Err(TreeError::NotATree);
    }
    let (vlab, v) = d.vertex_labels();
    let edges = live.len() / 2;
    if edges + 1 != v {
        return Err(TreeError::NotATree);
    }
    let mut degree = vec![0; v];
    for &h in &live {
        degree[vlab[h]] += 1;
    }
    for &h in &live {
        let leaf = degree[vlab[h]] == 1;
        if leaf != t.color[h].is_some() {
            return Err(TreeError::ColorsNotOnLeaves);
        }
    }
    if t.color[root] != Some(Color::Black) {
        return Err(TreeError::RootNotBlackLeaf);
    }
    let mut whites = vec![0; v];
    let mut inner = false;
    for &h in &live {
        let o = d.opp[h];
        if degree[vlab[h]] > 1 && t.color[o] == Some(Color::White) {
            whites[vlab[h]] += 1;
        }
    }
    for &h in &live {
        let k = degree[vlab[h]];
        if k == 1 {
            continue;
        }
        inner = true;
        if k % 2 != 0 {
            return Err(TreeError::OddInnerDegree { degree: k });
        }
        if whites[vlab[h]] != k / 2 - 1 {
            return Err(TreeError::WhiteLeafCountMismatch {
                degree: k,
                found: whites[vlab[h]],
                expected: k / 2 - 1,
            });
        }
    }
    if !inner {
        return Err(TreeError::NoInnerVertex);
    }
    Ok(())
}

