//! Line-oriented text format for describing a space and its companions.
//!
//! ```text
//! # a three-point space
//! elements: a b c
//! topology: {} {a c} {a b c}     # or: topology basis: {a c}
//! ideal: {} {a} {b} {a b}        # or: ideal generated: {a b}
//! set A: {a}
//! family J: {a} {a c}
//! elements other: 0 1
//! topology other: {} {0} {0 1}
//! map f -> other: a:0 b:0 c:1
//! ```
//!
//! `#` starts a comment, `{}` is the empty set, and everything resolves
//! against the `elements:` line, which must come first. Families and
//! auxiliary spaces (`elements NAME:` / `topology NAME:`) carry the extra
//! objects counterexample documents need; a map whose codomain is the
//! primary ground set uses the reserved name `self`. Parsing an explicit
//! topology or ideal runs the kernel validators, so axiom violations come
//! back as positioned diagnostics. Printing is canonical (members ascending,
//! bindings alphabetical), and parse -> print -> parse is the identity on
//! the parsed document.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::continuity::FiniteMap;
use crate::family::SetFamily;
use crate::ground::{GroundSet, Subset};
use crate::ideal::{Ideal, IdealViolation};
use crate::space::IdealSpace;
use crate::topology::{Topology, TopologyViolation};

/// A parse problem at a 1-based line and character column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.col, self.message)
    }
}

/// An auxiliary named space: a second ground set, optionally with a topology,
/// usable as a map codomain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuxSpace {
    pub ground: Arc<GroundSet>,
    pub topology: Option<Topology>,
}

/// Everything a document defines. Equality is semantic: a topology given as
/// a basis compares equal to the same topology given member by member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpaceDocument {
    pub ground: Arc<GroundSet>,
    pub topology: Option<Topology>,
    pub ideal: Option<Ideal>,
    pub sets: BTreeMap<String, Subset>,
    pub families: BTreeMap<String, SetFamily>,
    pub aux: BTreeMap<String, AuxSpace>,
    pub maps: BTreeMap<String, FiniteMap>,
}

impl SpaceDocument {
    /// Fresh document over a ground set, for building programmatically.
    pub fn over(ground: Arc<GroundSet>) -> SpaceDocument {
        SpaceDocument {
            ground,
            topology: None,
            ideal: None,
            sets: BTreeMap::new(),
            families: BTreeMap::new(),
            aux: BTreeMap::new(),
            maps: BTreeMap::new(),
        }
    }

    /// The space (X, tau, I), if the document defines both parts.
    pub fn space(&self) -> Result<IdealSpace, String> {
        let topology = self.topology.clone().ok_or("document defines no topology")?;
        let ideal = self.ideal.clone().ok_or("document defines no ideal")?;
        IdealSpace::new(topology, ideal).map_err(|e| e.to_string())
    }
}

/// Render one subset with its labels: `{}`, `{a}`, `{a c}`.
pub fn set_to_string(ground: &GroundSet, s: Subset) -> String {
    let labels: Vec<&str> = s.iter().map(|i| ground.label(i)).collect();
    format!("{{{}}}", labels.join(" "))
}

/// Render a family as its members in canonical order, space-separated.
pub fn family_to_string(family: &SetFamily) -> String {
    family
        .iter()
        .map(|m| set_to_string(family.ground(), m))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Labeled rendering for topology axiom violations.
pub fn topology_violation_to_string(ground: &GroundSet, v: &TopologyViolation) -> String {
    match v {
        TopologyViolation::MissingEmpty => "the empty set {} is not a member".into(),
        TopologyViolation::MissingFull => format!(
            "the full set {} is not a member",
            set_to_string(ground, ground.full())
        ),
        TopologyViolation::NotUnionClosed(a, b) => format!(
            "union of members {} and {} is not a member",
            set_to_string(ground, *a),
            set_to_string(ground, *b)
        ),
        TopologyViolation::NotIntersectionClosed(a, b) => format!(
            "intersection of members {} and {} is not a member",
            set_to_string(ground, *a),
            set_to_string(ground, *b)
        ),
    }
}

/// Labeled rendering for ideal axiom violations.
pub fn ideal_violation_to_string(ground: &GroundSet, v: &IdealViolation) -> String {
    match v {
        IdealViolation::MissingEmpty => "the empty set {} is not a member".into(),
        IdealViolation::NotDownwardClosed(m, sub) => format!(
            "member {} has non-member subset {}",
            set_to_string(ground, *m),
            set_to_string(ground, *sub)
        ),
        IdealViolation::NotUnionClosed(a, b) => format!(
            "union of members {} and {} is not a member",
            set_to_string(ground, *a),
            set_to_string(ground, *b)
        ),
    }
}

/// Canonical text for a document; see the module docs for the layout.
pub fn print_space(doc: &SpaceDocument) -> String {
    let mut out = String::new();
    let g = &doc.ground;
    out.push_str("elements: ");
    out.push_str(&g.labels().join(" "));
    out.push('\n');
    if let Some(t) = &doc.topology {
        out.push_str(&format!("topology: {}\n", family_to_string(t.family())));
    }
    if let Some(i) = &doc.ideal {
        out.push_str(&format!("ideal: {}\n", family_to_string(i.family())));
    }
    for (name, s) in &doc.sets {
        out.push_str(&format!("set {name}: {}\n", set_to_string(g, *s)));
    }
    for (name, f) in &doc.families {
        out.push_str(&format!("family {name}: {}\n", family_to_string(f)));
    }
    for (name, aux) in &doc.aux {
        out.push_str(&format!("elements {name}: {}\n", aux.ground.labels().join(" ")));
        if let Some(t) = &aux.topology {
            out.push_str(&format!("topology {name}: {}\n", family_to_string(t.family())));
        }
    }
    for (name, f) in &doc.maps {
        let codomain_name = doc
            .aux
            .iter()
            .find(|(_, a)| &a.ground == f.codomain())
            .map(|(n, _)| n.clone())
            .unwrap_or_else(|| {
                assert_eq!(f.codomain(), g, "map codomain must be the primary or an auxiliary ground set");
                "self".to_string()
            });
        let assignments: Vec<String> = f
            .image_indices()
            .iter()
            .enumerate()
            .map(|(x, &y)| format!("{}:{}", f.domain().label(x), f.codomain().label(y)))
            .collect();
        out.push_str(&format!("map {name} -> {codomain_name}: {}\n", assignments.join(" ")));
    }
    out
}

/// One header-resolved line, cut at the first `:`.
struct Line<'a> {
    number: usize,
    header: Vec<Token>,
    payload: &'a str,
    /// Column of the first payload character.
    payload_col: usize,
}

#[derive(Debug, Clone)]
struct Token {
    text: String,
    col: usize,
}

fn tokenize(text: &str, start_col: usize) -> Vec<Token> {
    let mut tokens = Vec::new();
    let mut current = String::new();
    let mut current_col = 0;
    for (col, c) in (start_col..).zip(text.chars()) {
        if c.is_whitespace() {
            if !current.is_empty() {
                tokens.push(Token { text: std::mem::take(&mut current), col: current_col });
            }
        } else {
            if current.is_empty() {
                current_col = col;
            }
            current.push(c);
        }
    }
    if !current.is_empty() {
        tokens.push(Token { text: current, col: current_col });
    }
    tokens
}

struct Parser {
    diagnostics: Vec<Diagnostic>,
    ground: Option<Arc<GroundSet>>,
    topology: Option<Topology>,
    ideal: Option<Ideal>,
    sets: BTreeMap<String, Subset>,
    families: BTreeMap<String, SetFamily>,
    aux: BTreeMap<String, AuxSpace>,
    maps: BTreeMap<String, FiniteMap>,
}

impl Parser {
    fn report(&mut self, line: usize, col: usize, message: impl Into<String>) {
        self.diagnostics.push(Diagnostic { line, col, message: message.into() });
    }

    /// Parse the set literals in a payload: `{} {a c} ...`.
    fn set_literals(
        &mut self,
        ground: &Arc<GroundSet>,
        line: &Line<'_>,
    ) -> Option<Vec<Subset>> {
        let mut out = Vec::new();
        let mut bits: u16 = 0;
        let mut inside = false;
        let mut label = String::new();
        let mut label_col = 0;
        let mut col = line.payload_col;
        let mut ok = true;
        let flush_label =
            |label: &mut String, label_col: usize, bits: &mut u16, parser: &mut Parser, ok: &mut bool| {
                if label.is_empty() {
                    return;
                }
                match ground.index_of(label) {
                    Some(i) => *bits |= 1 << i,
                    None => {
                        parser.report(
                            line.number,
                            label_col,
                            format!("unknown element label `{label}`"),
                        );
                        *ok = false;
                    }
                }
                label.clear();
            };
        for c in line.payload.chars() {
            match c {
                '{' if !inside => {
                    inside = true;
                    bits = 0;
                }
                '{' => {
                    self.report(line.number, col, "nested `{` inside a set literal");
                    return None;
                }
                '}' if inside => {
                    flush_label(&mut label, label_col, &mut bits, self, &mut ok);
                    inside = false;
                    out.push(ground.subset_from_bits(bits).expect("resolved labels fit"));
                }
                '}' => {
                    self.report(line.number, col, "`}` without a matching `{`");
                    return None;
                }
                c if c.is_whitespace() => {
                    flush_label(&mut label, label_col, &mut bits, self, &mut ok);
                }
                c if inside => {
                    if label.is_empty() {
                        label_col = col;
                    }
                    label.push(c);
                }
                _ => {
                    self.report(line.number, col, format!("unexpected `{c}` outside a set literal"));
                    return None;
                }
            }
            col += 1;
        }
        if inside {
            self.report(line.number, col, "unterminated set literal, missing `}`");
            return None;
        }
        ok.then_some(out)
    }

    fn parse_ground(&mut self, line: &Line<'_>) -> Option<Arc<GroundSet>> {
        let labels = tokenize(line.payload, line.payload_col);
        if labels.is_empty() {
            self.report(line.number, line.payload_col, "no element labels given");
            return None;
        }
        for (i, t) in labels.iter().enumerate() {
            if labels[..i].iter().any(|p| p.text == t.text) {
                self.report(line.number, t.col, format!("duplicate element `{}`", t.text));
                return None;
            }
        }
        match GroundSet::new(labels.iter().map(|t| t.text.clone())) {
            Ok(g) => Some(g),
            Err(e) => {
                self.report(line.number, line.payload_col, e.to_string());
                None
            }
        }
    }

    fn primary_ground(&mut self, line: &Line<'_>) -> Option<Arc<GroundSet>> {
        match &self.ground {
            Some(g) => Some(g.clone()),
            None => {
                self.report(line.number, 1, "no `elements:` line seen yet");
                None
            }
        }
    }

    fn handle_topology(&mut self, line: &Line<'_>) {
        // header: topology [NAME] [basis]
        let name = line.header.get(1).filter(|t| t.text != "basis");
        let basis = line.header.iter().skip(1).any(|t| t.text == "basis");
        if line.header.len() > 1 + usize::from(name.is_some()) + usize::from(basis) {
            let t = &line.header[1];
            self.report(line.number, t.col, "too many words before `:` in a topology line");
            return;
        }
        match name {
            None => {
                let Some(ground) = self.primary_ground(line) else { return };
                let Some(members) = self.set_literals(&ground, line) else { return };
                if self.topology.is_some() {
                    self.report(line.number, 1, "topology defined twice");
                    return;
                }
                let topology = if basis {
                    Topology::generate(ground, &members)
                } else {
                    match Topology::validate(SetFamily::new(ground.clone(), members)) {
                        Ok(t) => t,
                        Err(v) => {
                            let msg = topology_violation_to_string(&ground, &v);
                            self.report(line.number, line.payload_col, format!("not a topology: {msg}"));
                            return;
                        }
                    }
                };
                self.topology = Some(topology);
            }
            Some(name_token) => {
                let name = name_token.text.clone();
                let Some(aux) = self.aux.get(&name).cloned() else {
                    self.report(
                        line.number,
                        name_token.col,
                        format!("unknown auxiliary space `{name}`; add `elements {name}: ...` first"),
                    );
                    return;
                };
                if aux.topology.is_some() {
                    self.report(line.number, name_token.col, format!("topology for `{name}` defined twice"));
                    return;
                }
                let Some(members) = self.set_literals(&aux.ground, line) else { return };
                let topology = if basis {
                    Topology::generate(aux.ground.clone(), &members)
                } else {
                    match Topology::validate(SetFamily::new(aux.ground.clone(), members)) {
                        Ok(t) => t,
                        Err(v) => {
                            let msg = topology_violation_to_string(&aux.ground, &v);
                            self.report(line.number, line.payload_col, format!("not a topology: {msg}"));
                            return;
                        }
                    }
                };
                self.aux.get_mut(&name).expect("present above").topology = Some(topology);
            }
        }
    }

    fn handle_ideal(&mut self, line: &Line<'_>) {
        let generated = line.header.get(1).map(|t| t.text.as_str()) == Some("generated");
        if line.header.len() > 1 + usize::from(generated) {
            let t = &line.header[1];
            self.report(line.number, t.col, "too many words before `:` in an ideal line");
            return;
        }
        let Some(ground) = self.primary_ground(line) else { return };
        let Some(members) = self.set_literals(&ground, line) else { return };
        if self.ideal.is_some() {
            self.report(line.number, 1, "ideal defined twice");
            return;
        }
        let ideal = if generated {
            if members.len() != 1 {
                self.report(
                    line.number,
                    line.payload_col,
                    "`ideal generated:` takes exactly one set literal",
                );
                return;
            }
            Ideal::generated(ground, members[0])
        } else {
            match Ideal::validate(SetFamily::new(ground.clone(), members)) {
                Ok(i) => i,
                Err(v) => {
                    let msg = ideal_violation_to_string(&ground, &v);
                    self.report(line.number, line.payload_col, format!("not an ideal: {msg}"));
                    return;
                }
            }
        };
        self.ideal = Some(ideal);
    }

    fn handle_map(&mut self, line: &Line<'_>) {
        // header: map NAME -> CODOMAIN
        let bad_header = line.header.len() != 4 || line.header[2].text != "->";
        if bad_header {
            self.report(line.number, 1, "map lines look like `map NAME -> CODOMAIN: x:y ...`");
            return;
        }
        let name = line.header[1].text.clone();
        let codomain_token = &line.header[3];
        let Some(domain) = self.primary_ground(line) else { return };
        let codomain = if codomain_token.text == "self" {
            domain.clone()
        } else {
            match self.aux.get(&codomain_token.text) {
                Some(a) => a.ground.clone(),
                None => {
                    self.report(
                        line.number,
                        codomain_token.col,
                        format!(
                            "unknown codomain `{}`; use `self` or declare `elements {}: ...` first",
                            codomain_token.text, codomain_token.text
                        ),
                    );
                    return;
                }
            }
        };
        if self.maps.contains_key(&name) {
            self.report(line.number, line.header[1].col, format!("map `{name}` defined twice"));
            return;
        }
        let mut image: Vec<Option<usize>> = vec![None; domain.size()];
        for token in tokenize(line.payload, line.payload_col) {
            let Some((from, to)) = token.text.split_once(':') else {
                self.report(line.number, token.col, format!("expected `x:y`, got `{}`", token.text));
                return;
            };
            let Some(x) = domain.index_of(from) else {
                self.report(line.number, token.col, format!("unknown element label `{from}`"));
                return;
            };
            let Some(y) = codomain.index_of(to) else {
                self.report(
                    line.number,
                    token.col + from.chars().count() + 1,
                    format!("unknown element label `{to}` in the codomain"),
                );
                return;
            };
            if image[x].is_some() {
                self.report(line.number, token.col, format!("element `{from}` assigned twice"));
                return;
            }
            image[x] = Some(y);
        }
        let mut resolved = Vec::with_capacity(domain.size());
        for (x, y) in image.iter().enumerate() {
            match y {
                Some(y) => resolved.push(*y),
                None => {
                    self.report(
                        line.number,
                        line.payload_col,
                        format!("map does not assign element `{}`", domain.label(x)),
                    );
                    return;
                }
            }
        }
        let map = FiniteMap::new(domain, codomain, resolved).expect("indices resolved in range");
        self.maps.insert(name, map);
    }

    fn handle_line(&mut self, line: Line<'_>) {
        let head = line.header[0].text.as_str();
        match head {
            "elements" => match line.header.len() {
                1 => {
                    if self.ground.is_some() {
                        self.report(line.number, 1, "elements defined twice");
                        return;
                    }
                    self.ground = self.parse_ground(&line);
                }
                2 => {
                    let name = line.header[1].text.clone();
                    if name == "self" || name == "basis" || name == "generated" {
                        self.report(line.number, line.header[1].col, format!("`{name}` is a reserved name"));
                        return;
                    }
                    if self.ground.is_none() {
                        self.report(line.number, 1, "declare the primary `elements:` line first");
                        return;
                    }
                    if self.aux.contains_key(&name) {
                        self.report(line.number, line.header[1].col, format!("auxiliary space `{name}` defined twice"));
                        return;
                    }
                    if let Some(ground) = self.parse_ground(&line) {
                        self.aux.insert(name, AuxSpace { ground, topology: None });
                    }
                }
                _ => {
                    self.report(line.number, line.header[2].col, "too many words before `:` in an elements line");
                }
            },
            "topology" => self.handle_topology(&line),
            "ideal" => self.handle_ideal(&line),
            "set" => {
                if line.header.len() != 2 {
                    self.report(line.number, 1, "set lines look like `set NAME: {..}`");
                    return;
                }
                let name = line.header[1].text.clone();
                let Some(ground) = self.primary_ground(&line) else { return };
                let Some(mut members) = self.set_literals(&ground, &line) else { return };
                if members.len() != 1 {
                    self.report(line.number, line.payload_col, "`set` takes exactly one set literal");
                    return;
                }
                if self.sets.contains_key(&name) {
                    self.report(line.number, line.header[1].col, format!("set `{name}` defined twice"));
                    return;
                }
                self.sets.insert(name, members.pop().expect("checked length"));
            }
            "family" => {
                if line.header.len() != 2 {
                    self.report(line.number, 1, "family lines look like `family NAME: {..} {..}`");
                    return;
                }
                let name = line.header[1].text.clone();
                let Some(ground) = self.primary_ground(&line) else { return };
                let Some(members) = self.set_literals(&ground, &line) else { return };
                if self.families.contains_key(&name) {
                    self.report(line.number, line.header[1].col, format!("family `{name}` defined twice"));
                    return;
                }
                self.families.insert(name, SetFamily::new(ground, members));
            }
            "map" => self.handle_map(&line),
            _ => {
                self.report(
                    line.number,
                    line.header[0].col,
                    format!("unknown directive `{head}`; expected elements, topology, ideal, set, family, or map"),
                );
            }
        }
    }
}

/// Parse a document. On failure, every offending line contributes its first
/// problem; the parser never panics on arbitrary input.
pub fn parse_space(text: &str) -> Result<SpaceDocument, Vec<Diagnostic>> {
    let mut parser = Parser {
        diagnostics: Vec::new(),
        ground: None,
        topology: None,
        ideal: None,
        sets: BTreeMap::new(),
        families: BTreeMap::new(),
        aux: BTreeMap::new(),
        maps: BTreeMap::new(),
    };
    for (idx, raw) in text.lines().enumerate() {
        let number = idx + 1;
        let content = match raw.char_indices().find(|&(_, c)| c == '#') {
            Some((byte, _)) => &raw[..byte],
            None => raw,
        };
        if content.trim().is_empty() {
            continue;
        }
        let Some(colon_byte) = content.find(':') else {
            let col = content.chars().take_while(|c| c.is_whitespace()).count() + 1;
            parser.report(number, col, "missing `:` after the directive");
            continue;
        };
        let head_text = &content[..colon_byte];
        let header = tokenize(head_text, 1);
        debug_assert!(!header.is_empty() || head_text.trim().is_empty());
        if header.is_empty() {
            parser.report(number, 1, "missing directive before `:`");
            continue;
        }
        let payload = &content[colon_byte + 1..];
        let payload_col = head_text.chars().count() + 2;
        parser.handle_line(Line { number, header, payload, payload_col });
    }
    if parser.ground.is_none() && parser.diagnostics.is_empty() {
        parser.report(1, 1, "document has no `elements:` line");
    }
    match (parser.diagnostics.is_empty(), parser.ground) {
        (true, Some(ground)) => Ok(SpaceDocument {
            ground,
            topology: parser.topology,
            ideal: parser.ideal,
            sets: parser.sets,
            families: parser.families,
            aux: parser.aux,
            maps: parser.maps,
        }),
        _ => Err(parser.diagnostics),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const WORKED: &str = "\
# three points, topology from one basic open, co-singleton ideal
elements: a b c
topology basis: {a c}
ideal: {} {a} {b} {a b}
set A: {a}
family J: {a} {a c}
";

    #[test]
    fn parses_the_worked_document() {
        let doc = parse_space(WORKED).unwrap();
        assert_eq!(doc.ground.labels(), &["a", "b", "c"]);
        let t = doc.topology.as_ref().unwrap();
        let bits: Vec<u16> = t.opens().map(Subset::bits).collect();
        assert_eq!(bits, vec![0b000, 0b101, 0b111]);
        assert_eq!(doc.ideal.as_ref().unwrap().generator().bits(), 0b011);
        assert_eq!(doc.sets["A"].bits(), 0b001);
        assert_eq!(doc.families["J"].len(), 2);
    }

    #[test]
    fn round_trip_is_identity() {
        let doc = parse_space(WORKED).unwrap();
        let printed = print_space(&doc);
        let again = parse_space(&printed).unwrap();
        assert_eq!(doc, again);
        assert_eq!(printed, print_space(&again));
    }

    #[test]
    fn maps_and_aux_spaces_round_trip() {
        let text = "\
elements: a b c
topology: {} {a c} {a b c}
elements other: 0 1
topology other: {} {0} {0 1}
map f -> other: a:0 b:0 c:1
map id -> self: a:a b:b c:c
";
        let doc = parse_space(text).unwrap();
        let f = &doc.maps["f"];
        assert_eq!(f.image_indices(), &[0, 0, 1]);
        assert_eq!(doc.aux["other"].ground.labels(), &["0", "1"]);
        let again = parse_space(&print_space(&doc)).unwrap();
        assert_eq!(doc, again);
    }

    #[test]
    fn unknown_labels_carry_positions() {
        let err = parse_space("elements: a b\nset A: {a q}\n").unwrap_err();
        assert_eq!(err.len(), 1);
        assert_eq!((err[0].line, err[0].col), (2, 11));
        assert!(err[0].message.contains("unknown element label `q`"));
    }

    #[test]
    fn duplicate_elements_are_rejected() {
        let err = parse_space("elements: a b a\n").unwrap_err();
        assert_eq!(err[0].line, 1);
        assert_eq!(err[0].col, 15);
        assert!(err[0].message.contains("duplicate element `a`"));
    }

    #[test]
    fn axiom_violations_are_positioned_and_labeled() {
        let err = parse_space("elements: a b c\ntopology: {} {a} {b} {a b c}\n").unwrap_err();
        assert!(err[0].message.contains("not a topology"));
        assert!(err[0].message.contains("{a} and {b}"));
        let err = parse_space("elements: a b c\nideal: {} {a b}\n").unwrap_err();
        assert!(err[0].message.contains("not an ideal"));
        assert!(err[0].message.contains("{a b}"));
    }

    #[test]
    fn several_lines_report_independently() {
        let err = parse_space("elements: a b\nset A: {z}\nset B {a}\n").unwrap_err();
        assert_eq!(err.len(), 2);
        assert_eq!(err[0].line, 2);
        assert_eq!(err[1].line, 3);
        assert!(err[1].message.contains("missing `:`"));
    }

    #[test]
    fn junk_never_panics() {
        for junk in [
            "", ":", "::::", "map: x", "elements:", "elements: {",
            "elements: a\ntopology: }{",
            "elements: a\ntopology: {a", "elements: a\nmap f -> nowhere: a:a",
            "elements: a\nmap f self: a:a", "\u{0}\u{1}{}:#", "elements: a\nset A: {a} {a}",
        ] {
            let _ = parse_space(junk);
        }
    }
}
