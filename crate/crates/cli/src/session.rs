//! Session files: line-oriented declarations of a field, rings, ideals,
//! modules and glued sheaves.
//!
//! ```text
//! field 32003
//! ring R vars x y order grevlex mod [x*y]
//! ideal I over R gens [x]
//! module M over R rel [[x]] degrees 0
//! sheaf F
//!   chart C1 ring R module M
//!   glue C1 C2 loc y|x ringmap x->0,y->x inv x->y,y->0 modmap [[1]]
//! end
//! ```

use std::fmt::Write as _;
use std::sync::Arc;

use linkage_core::module::{Matrix, PresentedModule};
use linkage_core::ring::{
    localize_ring, parse_matrix_rows, parse_polynomial, parse_polynomial_list, MonomialOrder, PolyRing, Polynomial,
    PrimeField, QuotientRing, DEFAULT_PRIME,
};
use linkage_core::sheaf::{Chart, GluedSheaf, Transition};
use linkage_core::{Error, Result};

const KEYWORDS: &[&str] = &[
    "field", "ring", "vars", "order", "weights", "mod", "ideal", "over", "gens", "module", "rel", "degrees", "sheaf",
    "chart", "glue", "loc", "ringmap", "inv", "modmap", "end",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrderName {
    Grevlex,
    Lex,
}

impl OrderName {
    fn keyword(self) -> &'static str {
        match self {
            OrderName::Grevlex => "grevlex",
            OrderName::Lex => "lex",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RingDecl {
    pub name: String,
    pub vars: Vec<String>,
    pub order: OrderName,
    pub weights: Option<Vec<u32>>,
    pub relations: Vec<Polynomial>,
    pub ring: Arc<QuotientRing>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct IdealDecl {
    pub name: String,
    pub ring: String,
    /// Generators reduced in the ring.
    pub gens: Vec<Polynomial>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ModuleDecl {
    pub name: String,
    pub ring: String,
    pub relations: Matrix,
    pub degrees: Option<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ChartDecl {
    pub name: String,
    pub ring: String,
    pub module: String,
}

#[derive(Clone, Debug, PartialEq)]
pub struct GlueDecl {
    pub source: String,
    pub target: String,
    pub loc: (Polynomial, Polynomial),
    /// Images of the source chart variables, in variable order.
    pub ringmap: Vec<Polynomial>,
    /// Images of the target chart variables, in variable order.
    pub inv: Vec<Polynomial>,
    pub modmap: Matrix,
}

#[derive(Clone, Debug)]
pub struct SheafDecl {
    pub name: String,
    pub charts: Vec<ChartDecl>,
    pub glues: Vec<GlueDecl>,
    pub sheaf: GluedSheaf,
}

impl PartialEq for SheafDecl {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name && self.charts == other.charts && self.glues == other.glues
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Decl {
    Ring(RingDecl),
    Ideal(IdealDecl),
    Module(ModuleDecl),
    Sheaf(SheafDecl),
}

impl Decl {
    pub fn name(&self) -> &str {
        match self {
            Decl::Ring(d) => &d.name,
            Decl::Ideal(d) => &d.name,
            Decl::Module(d) => &d.name,
            Decl::Sheaf(d) => &d.name,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Session {
    pub field: u32,
    pub decls: Vec<Decl>,
}

impl Session {
    fn find(&self, name: &str) -> Option<&Decl> {
        self.decls.iter().find(|d| d.name() == name)
    }

    pub fn ring(&self, name: &str) -> Result<&RingDecl> {
        match self.find(name) {
            Some(Decl::Ring(r)) => Ok(r),
            _ => Err(Error::Structure(format!("no ring named {name}"))),
        }
    }

    pub fn ideal(&self, name: &str) -> Result<(&IdealDecl, Arc<QuotientRing>)> {
        match self.find(name) {
            Some(Decl::Ideal(i)) => Ok((i, self.ring(&i.ring)?.ring.clone())),
            _ => Err(Error::Structure(format!("no ideal named {name}"))),
        }
    }

    pub fn module(&self, name: &str) -> Result<PresentedModule> {
        match self.find(name) {
            Some(Decl::Module(m)) => build_module(self.ring(&m.ring)?, m),
            _ => Err(Error::Structure(format!("no module named {name}"))),
        }
    }

    pub fn sheaf(&self, name: &str) -> Result<&SheafDecl> {
        match self.find(name) {
            Some(Decl::Sheaf(s)) => Ok(s),
            _ => Err(Error::Structure(format!("no sheaf named {name}"))),
        }
    }
}

fn build_module(ring: &RingDecl, m: &ModuleDecl) -> Result<PresentedModule> {
    let module = PresentedModule::new(ring.ring.clone(), m.relations.clone());
    match &m.degrees {
        Some(d) => module.with_degrees(d.clone()),
        None => Ok(module),
    }
}

/// A whitespace-separated word with its byte offset in the line.
#[derive(Clone, Copy)]
struct Word<'a> {
    text: &'a str,
    at: usize,
}

struct Line<'a> {
    number: usize,
    text: &'a str,
    words: Vec<Word<'a>>,
}

impl<'a> Line<'a> {
    fn new(number: usize, raw: &'a str) -> Self {
        let text = raw.split('#').next().unwrap_or("");
        let mut words = Vec::new();
        let mut start = None;
        for (i, c) in text.char_indices() {
            match (c.is_whitespace(), start) {
                (true, Some(s)) => {
                    words.push(Word { text: &text[s..i], at: s });
                    start = None;
                }
                (false, None) => start = Some(i),
                _ => {}
            }
        }
        if let Some(s) = start {
            words.push(Word { text: &text[s..], at: s });
        }
        Line { number, text, words }
    }

    fn err<T>(&self, at: usize, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse { line: self.number, column: at + 1, message: message.into() })
    }

    fn end(&self) -> usize {
        self.text.trim_end().len()
    }

    /// Splits the words after the leading `head` words into sections opened
    /// by the given keywords, which must appear in order; optional ones may
    /// be absent. Returns the raw text and start offset of each section.
    fn sections(&self, head: usize, keys: &[(&str, bool)]) -> Result<Vec<Option<(&'a str, usize)>>> {
        let mut out = vec![None; keys.len()];
        let mut i = head;
        let mut k = 0;
        while i < self.words.len() {
            let w = self.words[i];
            let Some(pos) = keys[k..].iter().position(|(key, _)| *key == w.text) else {
                return self.err(w.at, format!("unexpected `{}`", w.text));
            };
            if let Some((key, _)) = keys[k..k + pos].iter().find(|(_, optional)| !optional) {
                return self.err(w.at, format!("expected `{key}`"));
            }
            k += pos;
            let start = self.words.get(i + 1).map_or(self.end(), |w| w.at);
            let mut j = i + 1;
            while j < self.words.len() && !keys[k + 1..].iter().any(|(key, _)| *key == self.words[j].text) {
                j += 1;
            }
            let stop = self.words.get(j).map_or(self.end(), |w| w.at);
            let body = self.text[start..stop].trim_end();
            if body.is_empty() {
                return self.err(w.at, format!("`{}` needs a value", w.text));
            }
            out[k] = Some((body, start));
            k += 1;
            i = j;
            if k == keys.len() && i < self.words.len() {
                return self.err(self.words[i].at, "unexpected trailing input");
            }
        }
        if let Some((key, _)) = keys[k..].iter().find(|(_, optional)| !optional) {
            return self.err(self.end(), format!("expected `{key}`"));
        }
        Ok(out)
    }

    fn syntax<T>(&self, at: usize, r: std::result::Result<T, linkage_core::ring::SyntaxError>) -> Result<T> {
        r.or_else(|e| self.err(at + e.column, e.message))
    }
}

fn parse_name(line: &Line, index: usize, what: &str) -> Result<String> {
    match line.words.get(index) {
        Some(w) if !KEYWORDS.contains(&w.text) && w.text.chars().all(|c| c.is_alphanumeric() || c == '_') => {
            Ok(w.text.to_string())
        }
        Some(w) => line.err(w.at, format!("invalid {what} name `{}`", w.text)),
        None => line.err(line.end(), format!("expected {what} name")),
    }
}

fn words_of(body: &str) -> Vec<&str> {
    body.split_whitespace().collect()
}

struct Parser {
    session: Session,
    open_sheaf: Option<(SheafDecl, usize)>,
}

impl Parser {
    fn declare(&mut self, line: &Line, at: usize, decl: Decl) -> Result<()> {
        if self.session.find(decl.name()).is_some() {
            return line.err(at, format!("`{}` is already declared", decl.name()));
        }
        self.session.decls.push(decl);
        Ok(())
    }

    fn ring_ref<'s>(&'s self, line: &Line, body: (&str, usize)) -> Result<&'s RingDecl> {
        let name = body.0.trim();
        match self.session.find(name) {
            Some(Decl::Ring(r)) => Ok(r),
            Some(_) => line.err(body.1, format!("`{name}` is not a ring")),
            None => line.err(body.1, format!("unknown ring `{name}`")),
        }
    }

    fn field(&mut self, line: &Line) -> Result<()> {
        if !self.session.decls.is_empty() {
            return line.err(line.words[0].at, "field must be declared before anything else");
        }
        let Some(w) = line.words.get(1) else { return line.err(line.end(), "expected a prime") };
        if line.words.len() > 2 {
            return line.err(line.words[2].at, "unexpected trailing input");
        }
        let p: u32 = w.text.parse().or_else(|_| line.err(w.at, "expected a prime"))?;
        PrimeField::new(p).or_else(|e| line.err(w.at, e.to_string()))?;
        self.session.field = p;
        Ok(())
    }

    fn ring(&mut self, line: &Line) -> Result<()> {
        let name = parse_name(line, 1, "ring")?;
        let s = line.sections(2, &[("vars", false), ("order", false), ("weights", true), ("mod", true)])?;
        let (vars_text, vars_at) = s[0].unwrap();
        let vars: Vec<String> = words_of(vars_text).into_iter().map(String::from).collect();
        for v in &vars {
            let ok = v.chars().next().is_some_and(|c| c.is_alphabetic())
                && v.chars().all(|c| c.is_alphanumeric() || c == '_')
                && !KEYWORDS.contains(&v.as_str());
            if !ok {
                return line.err(vars_at, format!("invalid variable name `{v}`"));
            }
        }
        let (order_text, order_at) = s[1].unwrap();
        let order = match order_text {
            "grevlex" => OrderName::Grevlex,
            "lex" => OrderName::Lex,
            other => return line.err(order_at, format!("unknown order `{other}`")),
        };
        let weights = match s[2] {
            None => None,
            Some((text, at)) => {
                let w: std::result::Result<Vec<u32>, _> = words_of(text).iter().map(|x| x.parse::<u32>()).collect();
                match w {
                    Ok(w) if w.len() == vars.len() && w.iter().all(|&x| x > 0) => Some(w),
                    _ => return line.err(at, "expected one positive weight per variable"),
                }
            }
        };
        let field = PrimeField::new(self.session.field).map_err(|e| Error::Structure(e.to_string()))?;
        let mono = match order {
            OrderName::Grevlex => MonomialOrder::Grevlex,
            OrderName::Lex => MonomialOrder::Lex,
        };
        let amb = match &weights {
            Some(w) => PolyRing::with_weights(field, vars.clone(), mono, w.clone()),
            None => PolyRing::new(field, vars.clone(), mono),
        };
        let amb = Arc::new(amb.or_else(|e| line.err(vars_at, e.to_string()))?);
        let relations = match s[3] {
            None => Vec::new(),
            Some((text, at)) => line.syntax(at, parse_polynomial_list(&amb, text))?,
        };
        let ring = QuotientRing::new(amb, relations.clone()).or_else(|e| line.err(line.words[0].at, e.to_string()))?;
        let decl = RingDecl { name, vars, order, weights, relations, ring: Arc::new(ring) };
        self.declare(line, line.words[1].at, Decl::Ring(decl))
    }

    fn ideal(&mut self, line: &Line) -> Result<()> {
        let name = parse_name(line, 1, "ideal")?;
        let s = line.sections(2, &[("over", false), ("gens", false)])?;
        let ring = self.ring_ref(line, s[0].unwrap())?;
        let (text, at) = s[1].unwrap();
        let gens = line.syntax(at, parse_polynomial_list(ring.ring.ambient(), text))?;
        let gens = gens.iter().map(|g| ring.ring.reduce(g)).collect();
        let decl = IdealDecl { name, ring: ring.name.clone(), gens };
        self.declare(line, line.words[1].at, Decl::Ideal(decl))
    }

    fn module(&mut self, line: &Line) -> Result<()> {
        let name = parse_name(line, 1, "module")?;
        let s = line.sections(2, &[("over", false), ("rel", false), ("degrees", true)])?;
        let ring = self.ring_ref(line, s[0].unwrap())?;
        let (text, at) = s[1].unwrap();
        let rows = line.syntax(at, parse_matrix_rows(ring.ring.ambient(), text))?;
        if rows.is_empty() {
            return line.err(at, "a module needs at least one generator row");
        }
        let relations = Matrix::from_rows(rows, 0).or_else(|e| line.err(at, e.to_string()))?.reduced(&ring.ring);
        let degrees = match s[2] {
            None => None,
            Some((text, at)) => {
                let d: std::result::Result<Vec<i64>, _> = words_of(text).iter().map(|x| x.parse::<i64>()).collect();
                match d {
                    Ok(d) if d.len() == relations.nrows() => Some(d),
                    _ => return line.err(at, "expected one integer degree per generator"),
                }
            }
        };
        let decl = ModuleDecl { name, ring: ring.name.clone(), relations, degrees };
        self.declare(line, line.words[1].at, Decl::Module(decl))
    }

    fn chart(&mut self, line: &Line) -> Result<()> {
        let name = parse_name(line, 1, "chart")?;
        let s = line.sections(2, &[("ring", false), ("module", false)])?;
        let ring = self.ring_ref(line, s[0].unwrap())?.name.clone();
        let (mname, mat) = s[1].unwrap();
        let module = match self.session.find(mname) {
            Some(Decl::Module(m)) if m.ring == ring => m.name.clone(),
            Some(Decl::Module(_)) => return line.err(mat, format!("module `{mname}` is not over ring `{ring}`")),
            _ => return line.err(mat, format!("unknown module `{mname}`")),
        };
        let (sheaf, _) = self.open_sheaf.as_mut().unwrap();
        if sheaf.charts.iter().any(|c| c.name == name) {
            return line.err(line.words[1].at, format!("chart `{name}` is already declared"));
        }
        sheaf.charts.push(ChartDecl { name, ring, module });
        Ok(())
    }

    fn glue(&mut self, line: &Line) -> Result<()> {
        let names = [parse_name(line, 1, "chart")?, parse_name(line, 2, "chart")?];
        let s = line.sections(3, &[("loc", false), ("ringmap", false), ("inv", false), ("modmap", false)])?;
        let (sheaf, _) = self.open_sheaf.as_ref().unwrap();
        let mut idx = [0usize; 2];
        for (k, n) in names.iter().enumerate() {
            idx[k] = match sheaf.charts.iter().position(|c| &c.name == n) {
                Some(i) => i,
                None => return line.err(line.words[k + 1].at, format!("unknown chart `{n}`")),
            };
        }
        if idx[0] == idx[1] {
            return line.err(line.words[2].at, "a chart cannot be glued to itself");
        }
        let charts = self.charts(sheaf)?;
        let (rs, rt) = (charts[idx[0]].ring().clone(), charts[idx[1]].ring().clone());
        let (loc_text, loc_at) = s[0].unwrap();
        let Some(bar) = loc_text.find('|') else { return line.err(loc_at, "expected `<poly>|<poly>`") };
        let fs = line.syntax(loc_at, rs.parse(&loc_text[..bar]))?;
        let ft = line.syntax(loc_at + bar + 1, rt.parse(&loc_text[bar + 1..]))?;
        let ls = localize_ring(&rs, &fs).or_else(|e| line.err(loc_at, e.to_string()))?;
        let lt = localize_ring(&rt, &ft).or_else(|e| line.err(loc_at + bar + 1, e.to_string()))?;
        let ringmap = assignments(line, s[1].unwrap(), &rs, lt.presentation())?;
        let inv = assignments(line, s[2].unwrap(), &rt, ls.presentation())?;
        let (mtext, mat) = s[3].unwrap();
        let rows = line.syntax(mat, parse_matrix_rows(lt.presentation().ambient(), mtext))?;
        let modmap = Matrix::from_rows(rows, charts[idx[0]].module.gens()).or_else(|e| line.err(mat, e.to_string()))?;
        Transition::new(&charts, idx[0], idx[1], &fs, &ft, ringmap.clone(), inv.clone(), modmap.clone())
            .or_else(|e| line.err(line.words[0].at, e.to_string()))?;
        let decl = GlueDecl {
            source: names[0].clone(),
            target: names[1].clone(),
            loc: (fs, ft),
            ringmap,
            inv,
            modmap: modmap.reduced(lt.presentation()),
        };
        let (sheaf, _) = self.open_sheaf.as_mut().unwrap();
        sheaf.glues.push(decl);
        Ok(())
    }

    fn charts(&self, sheaf: &SheafDecl) -> Result<Vec<Chart>> {
        sheaf.charts.iter().map(|c| Ok(Chart::new(c.name.clone(), self.session.module(&c.module)?))).collect()
    }

    fn close_sheaf(&mut self) -> Result<()> {
        let Some((mut sheaf, number)) = self.open_sheaf.take() else { return Ok(()) };
        let located = |e: Error| Error::Parse { line: number, column: 1, message: e.to_string() };
        if sheaf.charts.is_empty() {
            return Err(located(Error::Glueing("a sheaf needs at least one chart".into())));
        }
        let charts = self.charts(&sheaf)?;
        let mut transitions = Vec::new();
        for g in &sheaf.glues {
            let s = charts.iter().position(|c| c.name == g.source).unwrap();
            let t = charts.iter().position(|c| c.name == g.target).unwrap();
            let tr =
                Transition::new(&charts, s, t, &g.loc.0, &g.loc.1, g.ringmap.clone(), g.inv.clone(), g.modmap.clone())
                    .map_err(located)?;
            transitions.push(tr);
        }
        sheaf.sheaf = GluedSheaf::new(charts, transitions).map_err(located)?;
        self.session.decls.push(Decl::Sheaf(sheaf));
        Ok(())
    }

    fn sheaf(&mut self, line: &Line) -> Result<()> {
        let name = parse_name(line, 1, "sheaf")?;
        if line.words.len() > 2 {
            return line.err(line.words[2].at, "unexpected trailing input");
        }
        if self.session.find(&name).is_some() {
            return line.err(line.words[1].at, format!("`{name}` is already declared"));
        }
        let empty = SheafDecl {
            name,
            charts: Vec::new(),
            glues: Vec::new(),
            sheaf: GluedSheaf { charts: Vec::new(), transitions: Vec::new() },
        };
        self.open_sheaf = Some((empty, line.number));
        Ok(())
    }
}

/// `var->poly,var->poly,...` covering every variable of `ring` exactly once,
/// images parsed in `target`.
fn assignments(
    line: &Line,
    body: (&str, usize),
    ring: &QuotientRing,
    target: &QuotientRing,
) -> Result<Vec<Polynomial>> {
    let (text, at) = body;
    let vars = ring.ambient().variables();
    let mut images: Vec<Option<Polynomial>> = vec![None; vars.len()];
    let mut offset = 0;
    for part in text.split(',') {
        let here = at + offset;
        offset += part.len() + 1;
        let Some(arrow) = part.find("->") else { return line.err(here, "expected `<var>-><poly>`") };
        let var = part[..arrow].trim();
        let Some(i) = vars.iter().position(|v| v == var) else {
            return line.err(here, format!("`{var}` is not a variable of the chart ring"));
        };
        if images[i].is_some() {
            return line.err(here, format!("`{var}` is assigned twice"));
        }
        let img = line.syntax(here + arrow + 2, parse_polynomial(target.ambient(), &part[arrow + 2..]))?;
        images[i] = Some(target.reduce(&img));
    }
    if let Some(i) = images.iter().position(|x| x.is_none()) {
        return line.err(at, format!("no image given for `{}`", vars[i]));
    }
    Ok(images.into_iter().map(Option::unwrap).collect())
}

pub fn parse_session(text: &str) -> Result<Session> {
    let mut p = Parser { session: Session { field: DEFAULT_PRIME, decls: Vec::new() }, open_sheaf: None };
    let mut seen_field = false;
    for (i, raw) in text.lines().enumerate() {
        let line = Line::new(i + 1, raw);
        let Some(first) = line.words.first() else { continue };
        let in_sheaf = p.open_sheaf.is_some();
        match first.text {
            "chart" | "glue" if !in_sheaf => {
                return line.err(first.at, format!("`{}` outside a sheaf block", first.text))
            }
            "chart" => p.chart(&line)?,
            "glue" => p.glue(&line)?,
            "end" if in_sheaf && line.words.len() == 1 => p.close_sheaf()?,
            "end" => return line.err(first.at, "unexpected `end`"),
            other => {
                p.close_sheaf()?;
                match other {
                    "field" if seen_field => return line.err(first.at, "field declared twice"),
                    "field" => {
                        seen_field = true;
                        p.field(&line)?
                    }
                    "ring" => p.ring(&line)?,
                    "ideal" => p.ideal(&line)?,
                    "module" => p.module(&line)?,
                    "sheaf" => p.sheaf(&line)?,
                    _ => return line.err(first.at, format!("unknown declaration `{other}`")),
                }
            }
        }
    }
    p.close_sheaf()?;
    Ok(p.session)
}

fn poly_list(ring: &QuotientRing, ps: &[Polynomial]) -> String {
    let items: Vec<String> = ps.iter().map(|p| ring.display(p)).collect();
    format!("[{}]", items.join(", "))
}

/// Renders a session in the grammar accepted by [`parse_session`].
pub fn render_session(s: &Session) -> String {
    let mut out = format!("field {}\n", s.field);
    for d in &s.decls {
        match d {
            Decl::Ring(r) => {
                let _ = write!(out, "ring {} vars {} order {}", r.name, r.vars.join(" "), r.order.keyword());
                if let Some(w) = &r.weights {
                    let w: Vec<String> = w.iter().map(|x| x.to_string()).collect();
                    let _ = write!(out, " weights {}", w.join(" "));
                }
                if !r.relations.is_empty() {
                    let _ = write!(out, " mod {}", poly_list(&r.ring, &r.relations));
                }
                out.push('\n');
            }
            Decl::Ideal(i) => {
                let ring = &s.ring(&i.ring).unwrap().ring;
                let _ = writeln!(out, "ideal {} over {} gens {}", i.name, i.ring, poly_list(ring, &i.gens));
            }
            Decl::Module(m) => {
                let ring = &s.ring(&m.ring).unwrap().ring;
                let _ = write!(out, "module {} over {} rel {}", m.name, m.ring, m.relations.display(ring));
                if let Some(d) = &m.degrees {
                    let d: Vec<String> = d.iter().map(|x| x.to_string()).collect();
                    let _ = write!(out, " degrees {}", d.join(" "));
                }
                out.push('\n');
            }
            Decl::Sheaf(f) => {
                let _ = writeln!(out, "sheaf {}", f.name);
                for c in &f.charts {
                    let _ = writeln!(out, "  chart {} ring {} module {}", c.name, c.ring, c.module);
                }
                for (g, t) in f.glues.iter().zip(&f.sheaf.transitions) {
                    let (rs, rt) = (t.source_ring.base(), t.target_ring.base());
                    let (ls, lt) = (t.source_ring.presentation(), t.target_ring.presentation());
                    let assign = |r: &QuotientRing, target: &QuotientRing, images: &[Polynomial]| {
                        let parts: Vec<String> = r
                            .ambient()
                            .variables()
                            .iter()
                            .zip(images)
                            .map(|(v, p)| format!("{v}->{}", target.display(p)))
                            .collect();
                        parts.join(",")
                    };
                    let _ = writeln!(
                        out,
                        "  glue {} {} loc {}|{} ringmap {} inv {} modmap {}",
                        g.source,
                        g.target,
                        rs.display(&g.loc.0),
                        rt.display(&g.loc.1),
                        assign(rs, lt, &g.ringmap),
                        assign(rt, ls, &g.inv),
                        g.modmap.display(lt)
                    );
                }
                out.push_str("end\n");
            }
        }
    }
    out
}
