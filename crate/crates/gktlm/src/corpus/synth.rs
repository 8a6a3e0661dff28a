//! Deterministic synthetic corpus generator for demos, tests and benches.
//!
//! Sentences are drawn from fixed templates over fixed word banks with a
//! Zipf-ish weighting. A configurable fraction of sentences mention a month,
//! weekday or season, so the private partition of
//! [`super::DEFAULT_PRIVATE_WORDS`] carves out a meaningful private side.

use rand::distributions::{Distribution, WeightedIndex};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone)]
pub struct SynthConfig {
    pub seed: u64,
    pub target_chars: usize,
    /// Fraction of sentences built from a private-word template.
    pub private_rate: f64,
}

impl Default for SynthConfig {
    fn default() -> Self {
        SynthConfig {
            seed: 42,
            target_chars: 100_000,
            private_rate: 0.14,
        }
    }
}

const NOUNS: [&str; 72] = [
    "MARKET", "COMPANY", "BANK", "PRICE", "TRADE", "SHARE", "REPORT", "BOARD", "PLAN", "DEAL",
    "PROFIT", "BUDGET", "OFFICE", "FACTORY", "PRODUCT", "SERVICE", "CONTRACT", "PROJECT",
    "AGENCY", "UNION", "COURT", "POLICY", "TAX", "LOAN", "FUND", "STOCK", "BOND", "RATE",
    "GROWTH", "DEMAND", "SUPPLY", "EXPORT", "IMPORT", "REVENUE", "LOSS", "MERGER", "VENTURE",
    "PARTNER", "CLIENT", "WORKER", "MANAGER", "DIRECTOR", "ANALYST", "INVESTOR", "ECONOMY",
    "INDUSTRY", "SECTOR", "REGION", "COUNTRY", "CITY", "STATE", "SYSTEM", "NETWORK", "PROGRAM",
    "RESULT", "FIGURE", "RECORD", "STATEMENT", "FORECAST", "OUTLOOK", "PRESSURE", "BALANCE",
    "CAPITAL", "CREDIT", "DEBT", "ASSET", "INCOME", "PAYMENT", "SETTLEMENT", "PROPOSAL",
    "DECISION", "AGREEMENT",
];

const VERBS: [&str; 36] = [
    "ROSE", "FELL", "GAINED", "DROPPED", "MOVED", "CLIMBED", "SLIPPED", "SURGED", "EASED",
    "JUMPED", "GREW", "SHRANK", "IMPROVED", "WEAKENED", "EXPANDED", "DECLINED", "RECOVERED",
    "STALLED", "CHANGED", "OPENED", "CLOSED", "TRADED", "SETTLED", "ADVANCED", "RETREATED",
    "STEADIED", "RALLIED", "TUMBLED", "FIRMED", "SOFTENED", "DOUBLED", "HALVED", "PEAKED",
    "REBOUNDED", "SLOWED", "ACCELERATED",
];

const ADJS: [&str; 28] = [
    "STRONG", "WEAK", "NEW", "OLD", "LARGE", "SMALL", "EARLY", "LATE", "HIGH", "LOW", "SHARP",
    "MILD", "BROAD", "NARROW", "STEADY", "VOLATILE", "FOREIGN", "DOMESTIC", "ANNUAL",
    "QUARTERLY", "FEDERAL", "PRIVATE", "PUBLIC", "MAJOR", "MINOR", "RECENT", "CURRENT", "FINAL",
];

const NAMES: [&str; 24] = [
    "HARPER", "COLLINS", "MORGAN", "BAKER", "FISHER", "HUNTER", "CARTER", "MASON", "PORTER",
    "TURNER", "WALKER", "PARKER", "COOPER", "BREWER", "TAYLOR", "MILLER", "WEBSTER", "FOSTER",
    "GARDNER", "SPENCER", "BARNES", "HAYES", "REED", "GRANT",
];

const EVENTS: [&str; 12] = [
    "MEETING", "CONFERENCE", "REVIEW", "AUDIT", "HEARING", "VOTE", "SESSION", "BRIEFING",
    "SUMMIT", "DEADLINE", "RELEASE", "OFFERING",
];

const MONTHS: [&str; 12] = [
    "JANUARY", "FEBRUARY", "MARCH", "APRIL", "MAY", "JUNE", "JULY", "AUGUST", "SEPTEMBER",
    "OCTOBER", "NOVEMBER", "DECEMBER",
];

const WEEKDAYS: [&str; 7] = [
    "MONDAY", "TUESDAY", "WEDNESDAY", "THURSDAY", "FRIDAY", "SATURDAY", "SUNDAY",
];

const SEASONS: [&str; 4] = ["SPRING", "SUMMER", "AUTUMN", "WINTER"];

enum Slot {
    Lit(&'static str),
    Noun,
    Verb,
    Adj,
    Name,
    Event,
    Month,
    Weekday,
    Season,
}

use Slot::*;

const PUBLIC_TEMPLATES: &[&[Slot]] = &[
    &[Lit("THE "), Adj, Lit(" "), Noun, Lit(" "), Verb, Lit(" AS THE "), Noun, Lit(" "), Verb],
    &[Name, Lit(" SAID THE "), Noun, Lit(" "), Verb, Lit(" AFTER THE "), Event],
    &[Lit("THE "), Noun, Lit(" "), Verb, Lit(" AND THE "), Adj, Lit(" "), Noun, Lit(" "), Verb],
    &[Name, Lit("'S "), Noun, Lit(" "), Verb, Lit(" ON "), Adj, Lit(" "), Noun, Lit(" FIGURES")],
    &[Lit("A "), Adj, Lit(" "), Noun, Lit(" FROM "), Name, Lit(" "), Verb],
    &[Lit("TRADERS SAID "), Noun, Lit(" PRICES "), Verb, Lit(" IN "), Adj, Lit(" TRADING")],
    &[Lit("THE "), Noun, Lit(" OF THE "), Adj, Lit(" "), Noun, Lit(" "), Verb],
    &[Name, Lit(" AND "), Name, Lit(" AGREED ON THE "), Adj, Lit(" "), Noun],
];

const PRIVATE_TEMPLATES: &[&[Slot]] = &[
    &[Lit("THE "), Event, Lit(" IS ON "), Weekday],
    &[Lit("THE "), Event, Lit(" BEGINS IN "), Month],
    &[Name, Lit(" LEFT THE "), Noun, Lit(" LAST "), Season],
    &[Lit("THE "), Noun, Lit(" "), Verb, Lit(" ON "), Weekday],
    &[Lit("THE "), Adj, Lit(" "), Noun, Lit(" "), Verb, Lit(" IN "), Month],
    &[Lit("EVERY "), Season, Lit(" THE "), Noun, Lit(" "), Verb],
    &[Name, Lit(" SET THE "), Event, Lit(" FOR "), Weekday],
];

struct Picker {
    weights: WeightedIndex<f64>,
}

impl Picker {
    fn new(n: usize) -> Self {
        // Zipf-ish: early bank entries are much more common
        let weights =
            WeightedIndex::new((0..n).map(|i| 1.0 / (i as f64 + 3.0))).expect("nonempty bank");
        Picker { weights }
    }

    fn pick<'a>(&self, rng: &mut ChaCha8Rng, bank: &[&'a str]) -> &'a str {
        bank[self.weights.sample(rng)]
    }
}

/// Generates raw text of roughly `target_chars` characters (always ending at
/// a sentence boundary). Same config, same output.
pub fn generate(cfg: &SynthConfig) -> String {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let nouns = Picker::new(NOUNS.len());
    let verbs = Picker::new(VERBS.len());
    let adjs = Picker::new(ADJS.len());
    let names = Picker::new(NAMES.len());
    let events = Picker::new(EVENTS.len());

    let mut out = String::with_capacity(cfg.target_chars + 80);
    // round-robin over the planted words so each appears regularly
    let mut planted_cursor = 0usize;
    while out.len() < cfg.target_chars {
        let private = rng.gen_bool(cfg.private_rate);
        let templates = if private {
            PRIVATE_TEMPLATES
        } else {
            PUBLIC_TEMPLATES
        };
        let template = &templates[rng.gen_range(0..templates.len())];
        for slot in template.iter() {
            match slot {
                Lit(s) => out.push_str(s),
                Noun => out.push_str(nouns.pick(&mut rng, &NOUNS)),
                Verb => out.push_str(verbs.pick(&mut rng, &VERBS)),
                Adj => out.push_str(adjs.pick(&mut rng, &ADJS)),
                Name => out.push_str(names.pick(&mut rng, &NAMES)),
                Event => out.push_str(events.pick(&mut rng, &EVENTS)),
                Month => {
                    let w = if rng.gen_bool(0.5) {
                        MONTHS[planted_cursor % MONTHS.len()]
                    } else {
                        MONTHS[rng.gen_range(0..MONTHS.len())]
                    };
                    planted_cursor += 1;
                    out.push_str(w);
                }
                Weekday => out.push_str(WEEKDAYS[rng.gen_range(0..WEEKDAYS.len())]),
                Season => out.push_str(SEASONS[rng.gen_range(0..SEASONS.len())]),
            }
        }
        out.push_str(".\n");
    }
    out
}
