use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{BoundEvent, Formula, Interval, Invariant, Justification, RuleId, Side, SpaceRef};
use crate::error::{Error, Result};
use crate::field::FieldSpec;

/// Engine settings.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EngineConfig {
    /// Rules quantified over `m` are instantiated for `2..=m_max`.
    pub m_max: u32,
    /// Enables the externally cited rule R16.
    pub external_rules: bool,
    pub max_rounds: usize,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig { m_max: 6, external_rules: true, max_rounds: 256 }
    }
}

type Key = (String, Invariant);

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
struct Slot {
    lo: Option<usize>,
    hi: Option<usize>,
}

/// Spaces, invariant intervals and the append-only event log.
#[derive(Clone, Debug)]
pub struct FactBase {
    pub config: EngineConfig,
    spaces: BTreeMap<String, SpaceRef>,
    slots: BTreeMap<Key, Slot>,
    events: Vec<BoundEvent>,
}

/// Derivation tree of one bound.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Trace {
    pub event: BoundEvent,
    pub premises: Vec<Trace>,
}

impl Trace {
    pub fn render(&self) -> String {
        let mut out = String::new();
        self.render_into(0, &mut out);
        out
    }

    fn render_into(&self, depth: usize, out: &mut String) {
        let e = &self.event;
        let rel = match e.side {
            Side::Lo => "≥",
            Side::Hi => "≤",
        };
        out.push_str(&format!("{}{}({}) {rel} {}  by {}\n", "  ".repeat(depth), e.invariant, e.space, e.value, e.justification));
        for p in &self.premises {
            p.render_into(depth + 1, out);
        }
    }

    /// Number of rule applications.
    pub fn rule_count(&self) -> usize {
        let own = usize::from(matches!(self.event.justification, Justification::Rule { .. }));
        own + self.premises.iter().map(Trace::rule_count).sum::<usize>()
    }
}

/// Stored interval with derivations for both ends.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Derivation {
    pub space: String,
    pub invariant: Invariant,
    pub interval: Interval,
    pub lower: Option<Trace>,
    pub upper: Option<Trace>,
}

/// A space and `m` with `hi(iTC_m) < lo(dTC_m)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Separation {
    pub space: String,
    pub m: u32,
    pub itc: Interval,
    pub dtc: Interval,
}

impl Default for FactBase {
    fn default() -> Self {
        Self::new(EngineConfig::default())
    }
}

impl FactBase {
    pub fn new(config: EngineConfig) -> Self {
        FactBase { config, spaces: BTreeMap::new(), slots: BTreeMap::new(), events: Vec::new() }
    }

    /// Adds or merges a space declaration.
    pub fn declare(&mut self, s: SpaceRef) -> Result<()> {
        let name = s.name.clone();
        let entry = self.spaces.entry(name.clone()).or_insert_with(|| SpaceRef::named(&name));
        if let (Some(a), Some(b)) = (entry.contractible, s.contractible) {
            if a != b {
                return Err(Error::Contradiction(format!("{name}: declared both contractible and not")));
            }
        }
        entry.contractible = entry.contractible.or(s.contractible);
        entry.topological_group |= s.topological_group;
        for x in s.homotopy_equivalent {
            if !entry.homotopy_equivalent.contains(&x) {
                entry.homotopy_equivalent.push(x);
            }
        }
        if !s.product_of.is_empty() {
            entry.product_of = s.product_of;
        }
        if !s.wedge_of.is_empty() {
            entry.wedge_of = s.wedge_of;
        }
        if let Some((_, k)) = &s.power_of {
            if *k == 0 {
                return Err(Error::Parse(format!("{name}: power exponent must be positive")));
            }
        }
        if s.power_of.is_some() {
            entry.power_of = s.power_of;
        }
        for (e, k) in s.covered_by {
            if k == 0 {
                return Err(Error::Parse(format!("{name}: covering degree must be positive")));
            }
            if !entry.covered_by.contains(&(e.clone(), k)) {
                entry.covered_by.push((e, k));
            }
        }
        let refs: Vec<String> = {
            let e = &self.spaces[&name];
            e.homotopy_equivalent
                .iter()
                .chain(&e.product_of)
                .chain(&e.wedge_of)
                .chain(e.power_of.iter().map(|p| &p.0))
                .chain(e.covered_by.iter().map(|c| &c.0))
                .cloned()
                .collect()
        };
        for r in refs {
            self.spaces.entry(r.clone()).or_insert_with(|| SpaceRef::named(r));
        }
        self.check_acyclic()
    }

    fn check_acyclic(&self) -> Result<()> {
        type Edges = fn(&SpaceRef) -> Vec<String>;
        let kinds: [(&str, Edges); 3] = [
            ("product", |s| s.product_of.clone()),
            ("wedge", |s| s.wedge_of.clone()),
            ("power", |s| s.power_of.iter().map(|p| p.0.clone()).collect()),
        ];
        for (kind, edges) in kinds {
            let mut state: BTreeMap<&str, u8> = BTreeMap::new();
            fn visit<'a>(
                n: &'a str,
                spaces: &'a BTreeMap<String, SpaceRef>,
                edges: Edges,
                state: &mut BTreeMap<&'a str, u8>,
            ) -> bool {
                match state.get(n) {
                    Some(1) => return false,
                    Some(2) => return true,
                    _ => {}
                }
                state.insert(n, 1);
                if let Some(s) = spaces.get(n) {
                    for m in edges(s) {
                        let Some((key, _)) = spaces.get_key_value(&m) else { continue };
                        if !visit(key, spaces, edges, state) {
                            return false;
                        }
                    }
                }
                state.insert(n, 2);
                true
            }
            for n in self.spaces.keys() {
                if !visit(n, &self.spaces, edges, &mut state) {
                    return Err(Error::Parse(format!("{kind} relation through `{n}` is cyclic")));
                }
            }
        }
        Ok(())
    }

    pub fn space(&self, name: &str) -> Option<&SpaceRef> {
        self.spaces.get(name)
    }

    pub fn spaces(&self) -> impl Iterator<Item = &SpaceRef> {
        self.spaces.values()
    }

    pub fn events(&self) -> &[BoundEvent] {
        &self.events
    }

    fn slot(&self, space: &str, inv: Invariant) -> Slot {
        self.slots.get(&(space.to_string(), inv)).copied().unwrap_or_default()
    }

    fn lo_event(&self, space: &str, inv: Invariant) -> Option<&BoundEvent> {
        self.slot(space, inv).lo.map(|i| &self.events[i])
    }

    fn hi_event(&self, space: &str, inv: Invariant) -> Option<&BoundEvent> {
        self.slot(space, inv).hi.map(|i| &self.events[i])
    }

    /// Current interval; unknown pairs are `[0, ∞)`.
    pub fn interval(&self, space: &str, inv: Invariant) -> Interval {
        Interval {
            lo: self.lo_event(space, inv).map_or(0, |e| e.value),
            hi: self.hi_event(space, inv).map(|e| e.value),
        }
    }

    /// Intersects a cited axiom with the stored interval.
    pub fn assert_axiom(&mut self, space: &str, inv: Invariant, iv: Interval, citation: &str) -> Result<()> {
        if citation.trim().is_empty() {
            return Err(Error::Parse(format!("axiom {inv}({space}) has no citation")));
        }
        self.assert_fact(space, inv, iv, Justification::Axiom { citation: citation.trim().to_string() })
    }

    /// Records a value computed from a cohomology ring.
    pub fn assert_computed(&mut self, space: &str, inv: Invariant, iv: Interval, method: &str) -> Result<()> {
        self.assert_fact(space, inv, iv, Justification::Computed { method: method.to_string() })
    }

    /// Intersects `iv` with the stored interval; an empty intersection is an
    /// error naming both justifications.
    pub fn assert_fact(&mut self, space: &str, inv: Invariant, iv: Interval, just: Justification) -> Result<()> {
        if let Justification::Axiom { citation } = &just {
            if citation.trim().is_empty() {
                return Err(Error::Parse(format!("axiom {inv}({space}) has no citation")));
            }
        }
        if let Some(h) = iv.hi {
            if h < iv.lo {
                return Err(Error::Parse(format!("{inv}({space}): empty interval")));
            }
        }
        if !self.spaces.contains_key(space) {
            self.declare(SpaceRef::named(space))?;
        }
        let size = match &just {
            Justification::Rule { premises, .. } => 1 + premises.iter().map(|&p| self.events[p].size).sum::<usize>(),
            _ => 0,
        };
        if let Some(h) = iv.hi {
            self.check_consistent(space, inv, Side::Hi, h, &just)?;
        }
        if iv.lo > 0 {
            self.check_consistent(space, inv, Side::Lo, iv.lo, &just)?;
        }
        if iv.lo > 0 {
            self.offer(space, inv, Side::Lo, iv.lo, just.clone(), size);
        }
        if let Some(h) = iv.hi {
            self.offer(space, inv, Side::Hi, h, just, size);
        }
        Ok(())
    }

    fn check_consistent(&self, space: &str, inv: Invariant, side: Side, value: u32, just: &Justification) -> Result<()> {
        let clash = match side {
            Side::Lo => self.hi_event(space, inv).filter(|e| e.value < value),
            Side::Hi => self.lo_event(space, inv).filter(|e| e.value > value),
        };
        if let Some(e) = clash {
            let (new_rel, old_rel) = match side {
                Side::Lo => ("≥", "≤"),
                Side::Hi => ("≤", "≥"),
            };
            return Err(Error::Contradiction(format!(
                "{inv}({space}) {new_rel} {value} by {just} conflicts with {inv}({space}) {old_rel} {} by {}",
                e.value, e.justification
            )));
        }
        Ok(())
    }

    /// Stores a bound if it is tighter, or equally tight with a smaller derivation
    /// (ties broken by rule id). Returns whether anything changed.
    fn offer(&mut self, space: &str, inv: Invariant, side: Side, value: u32, just: Justification, size: usize) -> bool {
        let key = (space.to_string(), inv);
        let slot = self.slots.get(&key).copied().unwrap_or_default();
        let current = match side {
            Side::Lo => slot.lo,
            Side::Hi => slot.hi,
        }
        .map(|i| &self.events[i]);
        let better = match current {
            None => side == Side::Hi || value > 0,
            Some(c) => {
                let tighter = match side {
                    Side::Lo => value > c.value,
                    Side::Hi => value < c.value,
                };
                tighter || (value == c.value && (size, rule_rank(&just)) < (c.size, rule_rank(&c.justification)))
            }
        };
        if !better {
            return false;
        }
        let id = self.events.len();
        self.events.push(BoundEvent { id, space: space.to_string(), invariant: inv, side, value, justification: just, size });
        let s = self.slots.entry(key).or_default();
        match side {
            Side::Lo => s.lo = Some(id),
            Side::Hi => s.hi = Some(id),
        }
        true
    }

    fn m_range(&self) -> std::ops::RangeInclusive<u32> {
        2..=self.config.m_max.max(2)
    }

    /// Space that is the `k`-th power of `base` (`base` itself for `k = 1`).
    fn power_space(&self, base: &str, k: u32) -> Option<String> {
        if k == 1 {
            return Some(base.to_string());
        }
        self.spaces
            .values()
            .find(|s| s.power_of.as_ref().is_some_and(|(b, e)| b == base && *e == k))
            .map(|s| s.name.clone())
    }

    /// Runs all rules to a fixpoint.
    pub fn propagate(&mut self) -> Result<usize> {
        for round in 0..self.config.max_rounds {
            let offers = self.collect_offers();
            let mut changed = false;
            for o in offers {
                self.check_consistent(&o.space, o.inv, o.side, o.value, &o.just)?;
                let size = 1 + o.premises().iter().map(|&p| self.events[p].size).sum::<usize>();
                changed |= self.offer(&o.space.clone(), o.inv, o.side, o.value, o.just, size);
            }
            if !changed {
                return Ok(round + 1);
            }
        }
        Err(Error::Budget(format!("no fixpoint after {} rounds", self.config.max_rounds)))
    }

    fn collect_offers(&self) -> Vec<Offer> {
        let mut out = Vec::new();
        let names: Vec<String> = self.spaces.keys().cloned().collect();
        let q = FieldSpec::Rationals;
        for x in &names {
            let sp = &self.spaces[x];
            for m in self.m_range() {
                self.leq(&mut out, RuleId::R1, (x, Invariant::Itc(m)), (x, Invariant::Dtc(m)));
                self.leq(&mut out, RuleId::R1, (x, Invariant::Dtc(m)), (x, Invariant::Tc(m)));
            }
            self.leq(&mut out, RuleId::R2, (x, Invariant::Icat), (x, Invariant::Dcat));
            self.leq(&mut out, RuleId::R2, (x, Invariant::Dcat), (x, Invariant::Cat));
            self.leq(&mut out, RuleId::R3, (x, Invariant::Icat), (x, Invariant::Itc(2)));
            for m in self.m_range() {
                if let Some(p) = self.power_space(x, m) {
                    self.leq(&mut out, RuleId::R4, (x, Invariant::Itc(m)), (&p, Invariant::Icat));
                }
                if m < self.config.m_max {
                    self.leq(&mut out, RuleId::R5, (x, Invariant::Itc(m)), (x, Invariant::Itc(m + 1)));
                }
            }
            if sp.topological_group {
                for k in 1..self.config.m_max {
                    if let Some(p) = self.power_space(x, k) {
                        self.leq(&mut out, RuleId::R6, (x, Invariant::Itc(k + 1)), (&p, Invariant::Icat));
                    }
                }
            }
            for (e, k) in &sp.covered_by {
                self.covering(&mut out, x, Invariant::Icat, e, *k);
                for m in self.m_range() {
                    self.covering(&mut out, x, Invariant::Itc(m), e, k * m);
                }
            }
            for part in sp.product_of.iter().chain(&sp.wedge_of) {
                self.leq(&mut out, RuleId::R8, (part, Invariant::Icat), (x, Invariant::Icat));
                for m in self.m_range() {
                    self.leq(&mut out, RuleId::R8, (part, Invariant::Itc(m)), (x, Invariant::Itc(m)));
                }
            }
            for y in &sp.homotopy_equivalent {
                let invs: Vec<Invariant> = self
                    .slots
                    .keys()
                    .filter(|(s, _)| s == x || s == y)
                    .map(|(_, i)| *i)
                    .collect();
                for inv in invs {
                    self.leq(&mut out, RuleId::R9, (x, inv), (y, inv));
                    self.leq(&mut out, RuleId::R9, (y, inv), (x, inv));
                }
            }
            self.contractibility(&mut out, x);
            self.threshold(&mut out, RuleId::R11, (x, Invariant::Cl(q)), 2, (x, Invariant::Icat), 2);
            self.threshold(&mut out, RuleId::R12, (x, Invariant::Zcl(2, q)), 2, (x, Invariant::Itc(2)), 2);
            for m in self.m_range().filter(|&m| m >= 3) {
                self.threshold(&mut out, RuleId::R13, (x, Invariant::HPositive(q)), 1, (x, Invariant::Itc(m)), 2);
            }
            self.leq(&mut out, RuleId::R14, (x, Invariant::Cl(q)), (x, Invariant::Dcat));
            self.leq(&mut out, RuleId::R14, (x, Invariant::Zcl(2, q)), (x, Invariant::Dtc(2)));
            let fields: Vec<Invariant> = self
                .slots
                .keys()
                .filter(|(s, _)| s == x)
                .map(|(_, i)| *i)
                .filter(|i| matches!(i, Invariant::Cl(_) | Invariant::Zcl(..)))
                .collect();
            for inv in fields {
                match inv {
                    Invariant::Cl(_) => self.leq(&mut out, RuleId::R15, (x, inv), (x, Invariant::Cat)),
                    Invariant::Zcl(m, _) => self.leq(&mut out, RuleId::R15, (x, inv), (x, Invariant::Tc(m))),
                    _ => {}
                }
            }
            if self.config.external_rules {
                for m in self.m_range() {
                    if let Some(p) = self.power_space(x, m - 1) {
                        self.leq(&mut out, RuleId::R16, (&p, Invariant::Dcat), (x, Invariant::Dtc(m)));
                    }
                }
            }
        }
        out
    }

    /// `a ≤ b`: lower bounds flow from `a` to `b`, upper bounds from `b` to `a`.
    fn leq(&self, out: &mut Vec<Offer>, rule: RuleId, a: (&str, Invariant), b: (&str, Invariant)) {
        let note = format!("{}({}) ≤ {}({})", a.1, a.0, b.1, b.0);
        if let Some(e) = self.lo_event(a.0, a.1) {
            if e.value > self.interval(b.0, b.1).lo || self.improves(b, Side::Lo, e) {
                out.push(Offer::rule(b, Side::Lo, e.value, rule, Formula::Same, vec![e.id], &note));
            }
        }
        if let Some(e) = self.hi_event(b.0, b.1) {
            let cur = self.interval(a.0, a.1).hi;
            if cur.is_none_or(|h| e.value < h) || self.improves(a, Side::Hi, e) {
                out.push(Offer::rule(a, Side::Hi, e.value, rule, Formula::Same, vec![e.id], &note));
            }
        }
    }

    /// Whether deriving from premise `e` in one step could shorten the stored trace.
    fn improves(&self, target: (&str, Invariant), side: Side, e: &BoundEvent) -> bool {
        let cur = match side {
            Side::Lo => self.lo_event(target.0, target.1),
            Side::Hi => self.hi_event(target.0, target.1),
        };
        cur.is_some_and(|c| c.value == e.value && e.size + 1 < c.size)
    }

    fn threshold(
        &self,
        out: &mut Vec<Offer>,
        rule: RuleId,
        a: (&str, Invariant),
        at_least: u32,
        b: (&str, Invariant),
        value: u32,
    ) {
        if let Some(e) = self.lo_event(a.0, a.1) {
            if e.value >= at_least {
                let note = format!("{}({}) ≥ {at_least} ⇒ {}({}) ≥ {value}", a.1, a.0, b.1, b.0);
                out.push(Offer::rule(b, Side::Lo, value, rule, Formula::Threshold { at_least, value }, vec![e.id], &note));
            }
        }
    }

    fn covering(&self, out: &mut Vec<Offer>, x: &str, inv: Invariant, e: &str, factor: u32) {
        if let Some(ev) = self.hi_event(e, inv) {
            let value = factor * (ev.value + 1) - 1;
            let note = format!("covering {e} → {x}: {inv}({x}) ≤ {factor}·({inv}({e}) + 1) − 1");
            out.push(Offer::rule((x, inv), Side::Hi, value, RuleId::R7, Formula::Covering { factor }, vec![ev.id], &note));
        }
    }

    fn contractibility(&self, out: &mut Vec<Offer>, x: &str) {
        let sp = &self.spaces[x];
        let mut targets = vec![Invariant::Icat];
        targets.extend(self.m_range().map(Invariant::Itc));
        match sp.contractible {
            Some(true) => {
                for t in &targets {
                    out.push(Offer::rule(
                        (x, *t),
                        Side::Hi,
                        0,
                        RuleId::R10,
                        Formula::Constant { value: 0 },
                        vec![],
                        &format!("{x} is contractible"),
                    ));
                }
            }
            Some(false) => {
                for t in &targets {
                    out.push(Offer::rule(
                        (x, *t),
                        Side::Lo,
                        1,
                        RuleId::R10,
                        Formula::Constant { value: 1 },
                        vec![],
                        &format!("{x} is not contractible"),
                    ));
                }
            }
            None => {}
        }
        // Any positive lower bound, or nonzero cohomology, certifies non-contractibility.
        let witness = self
            .slots
            .iter()
            .filter(|((s, i), _)| s == x && (i.is_category_like() || matches!(i, Invariant::HPositive(_))))
            .filter_map(|(_, slot)| slot.lo.map(|id| &self.events[id]))
            .filter(|e| e.value >= 1)
            .min_by_key(|e| (!matches!(e.invariant, Invariant::HPositive(_)), e.size, e.id));
        if let Some(w) = witness {
            for t in targets {
                if t == w.invariant {
                    continue;
                }
                let note = format!("{}({x}) ≥ 1 ⇒ {x} is not contractible ⇒ {t}({x}) ≥ 1", w.invariant);
                out.push(Offer::rule((x, t), Side::Lo, 1, RuleId::R10, Formula::Threshold { at_least: 1, value: 1 }, vec![w.id], &note));
            }
        }
    }

    /// Stored interval and minimal traces for both ends.
    pub fn derive(&self, space: &str, inv: Invariant) -> Result<Derivation> {
        if !self.spaces.contains_key(space) {
            return Err(Error::Unknown(format!("space `{space}`")));
        }
        Ok(Derivation {
            space: space.to_string(),
            invariant: inv,
            interval: self.interval(space, inv),
            lower: self.slot(space, inv).lo.map(|i| self.trace(i)),
            upper: self.slot(space, inv).hi.map(|i| self.trace(i)),
        })
    }

    pub fn trace(&self, id: usize) -> Trace {
        let e = self.events[id].clone();
        let premises = match &e.justification {
            Justification::Rule { premises, .. } => premises.iter().map(|&p| self.trace(p)).collect(),
            _ => Vec::new(),
        };
        Trace { event: e, premises }
    }

    /// Recomputes a bound from its axioms by re-applying each rule formula.
    pub fn replay_event(&self, id: usize) -> Result<u32> {
        let e = self.events.get(id).ok_or_else(|| Error::Unknown(format!("event {id}")))?;
        match &e.justification {
            Justification::Axiom { .. } | Justification::Computed { .. } => Ok(e.value),
            Justification::Rule { formula, premises, rule, .. } => {
                if premises.iter().any(|&p| p >= id) {
                    return Err(Error::Contradiction(format!("event {id} depends on a later event")));
                }
                let vals = premises.iter().map(|&p| self.replay_event(p)).collect::<Result<Vec<_>>>()?;
                let v = match (formula, vals.as_slice()) {
                    (Formula::Same, [p]) => *p,
                    (Formula::Covering { factor }, [p]) => factor * (p + 1) - 1,
                    (Formula::Threshold { at_least, value }, [p]) if p >= at_least => *value,
                    (Formula::Constant { value }, []) => *value,
                    _ => return Err(Error::Contradiction(format!("event {id} ({rule}) does not replay"))),
                };
                if v != e.value {
                    return Err(Error::Contradiction(format!("event {id} replays to {v}, stored {}", e.value)));
                }
                Ok(v)
            }
        }
    }

    /// Interval reproduced by replaying both stored bounds.
    pub fn replay(&self, space: &str, inv: Invariant) -> Result<Interval> {
        let s = self.slot(space, inv);
        Ok(Interval {
            lo: match s.lo {
                Some(i) => self.replay_event(i)?,
                None => 0,
            },
            hi: s.hi.map(|i| self.replay_event(i)).transpose()?,
        })
    }

    /// All `(space, invariant)` pairs with a stored bound.
    pub fn known(&self) -> Vec<(String, Invariant)> {
        self.slots.keys().cloned().collect()
    }

    /// Pairs where the intertwining complexity is strictly below the distributional one.
    pub fn separations(&self) -> Vec<Separation> {
        let mut out = Vec::new();
        for x in self.spaces.keys() {
            for m in self.m_range() {
                let itc = self.interval(x, Invariant::Itc(m));
                let dtc = self.interval(x, Invariant::Dtc(m));
                if itc.hi.is_some_and(|h| h < dtc.lo) {
                    out.push(Separation { space: x.clone(), m, itc, dtc });
                }
            }
        }
        out
    }
}

fn rule_rank(j: &Justification) -> u32 {
    match j {
        Justification::Axiom { .. } => 0,
        Justification::Computed { .. } => 1,
        Justification::Rule { rule, .. } => 2 + *rule as u32,
    }
}

struct Offer {
    space: String,
    inv: Invariant,
    side: Side,
    value: u32,
    just: Justification,
}

impl Offer {
    fn rule(
        target: (&str, Invariant),
        side: Side,
        value: u32,
        rule: RuleId,
        formula: Formula,
        premises: Vec<usize>,
        note: &str,
    ) -> Self {
        Offer {
            space: target.0.to_string(),
            inv: target.1,
            side,
            value,
            just: Justification::Rule { rule, formula, premises, note: note.to_string() },
        }
    }

    fn premises(&self) -> &[usize] {
        match &self.just {
            Justification::Rule { premises, .. } => premises,
            _ => &[],
        }
    }
}
