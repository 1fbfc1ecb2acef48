//! Line-oriented text configuration for the geometric data: varieties
//! with their intersection tables and Chern classes, finite covers, and
//! branched-cover specifications.
//!
//! ```text
//! [variety X1] dim=3
//! gen H
//! pair H^3 = 4
//! c1 = 2H
//! c2 = 3H^2
//! todd = 1 + H + 7/12H^2
//!
//! [cover f1] source=Y1 target=X1 degree=8 pullback=F
//!
//! [ramcover trigonal] base_genus=0 degree=3 ram=2,2,2,2,2,2,2,2
//! ```

use crate::curves::CoverSpec;
use crate::rat::Rat;
use crate::ring::{parse_monomial, ChowPresentation, GradedClass, Monomial};
use crate::varieties::{BuiltinGeometry, CoverPresentation, VarietyPresentation};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug)]
pub struct ConfigError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "config error at line {}, column {}: {}",
            self.line, self.col, self.message
        )
    }
}

impl std::error::Error for ConfigError {}

fn err<T>(line: usize, col: usize, message: impl Into<String>) -> Result<T, ConfigError> {
    Err(ConfigError {
        line,
        col,
        message: message.into(),
    })
}

/// Everything a configuration file can describe.
#[derive(Debug, Clone)]
pub struct ParsedConfig {
    pub varieties: Vec<VarietyPresentation>,
    pub covers: Vec<CoverPresentation>,
    pub ram_covers: Vec<CoverSpec>,
}

impl ParsedConfig {
    pub fn variety(&self, name: &str) -> Option<&VarietyPresentation> {
        self.varieties.iter().find(|v| v.name == name)
    }

    pub fn cover(&self, name: &str) -> Option<&CoverPresentation> {
        self.covers.iter().find(|c| c.name == name)
    }

    /// Assemble the standard four-variety geometry; errors name whatever
    /// is missing.
    pub fn into_geometry(self) -> Result<BuiltinGeometry, String> {
        let need = |name: &str| {
            self.variety(name)
                .cloned()
                .ok_or_else(|| format!("configuration does not define variety {name}"))
        };
        let need_cover = |name: &str| {
            self.cover(name)
                .cloned()
                .ok_or_else(|| format!("configuration does not define cover {name}"))
        };
        Ok(BuiltinGeometry {
            x1: need("X1")?,
            y1: need("Y1")?,
            x0: need("X0")?,
            y0: need("Y0")?,
            cover1: need_cover("f1")?,
            cover0: need_cover("f0")?,
        })
    }
}

/// Parse a class expression like "1 + H + 7/12H^2" or "-2H + 13/6H^2".
fn parse_class(
    ring: &ChowPresentation,
    text: &str,
    line: usize,
) -> Result<GradedClass<Rat>, ConfigError> {
    let mut class = ring.zero();
    let mut rest = text.trim();
    if rest.is_empty() {
        return err(line, 0, "empty class expression");
    }
    let mut sign = Rat::one();
    let mut first = true;
    while !rest.is_empty() {
        if let Some(r) = rest.strip_prefix('+') {
            if first {
                return err(line, 0, "class expression starts with +");
            }
            rest = r.trim_start();
            sign = Rat::one();
            continue;
        }
        if let Some(r) = rest.strip_prefix('-') {
            rest = r.trim_start();
            sign = Rat::int(-1);
            continue;
        }
        // term: optional rational coefficient, then an optional monomial
        let term_end = rest.find(['+', '-']).unwrap_or(rest.len());
        let term = rest[..term_end].trim();
        rest = &rest[term_end..];
        if term.is_empty() {
            return err(line, 0, "empty term in class expression");
        }
        let split = term
            .find(|c: char| c.is_ascii_alphabetic())
            .unwrap_or(term.len());
        let (coeff_text, mono_text) = term.split_at(split);
        let coeff_text = coeff_text.trim().trim_end_matches('*').trim();
        let coeff = if coeff_text.is_empty() {
            Rat::one()
        } else {
            match coeff_text.parse::<Rat>() {
                Ok(c) => c,
                Err(e) => return err(line, 0, format!("bad coefficient {coeff_text:?}: {e}")),
            }
        };
        let mono = if mono_text.trim().is_empty() {
            Monomial::unit(ring.generators().len())
        } else {
            match parse_monomial(mono_text, &generator_names(ring)) {
                Some(m) => m,
                None => return err(line, 0, format!("bad monomial {:?}", mono_text.trim())),
            }
        };
        let term_class = monomial_class(ring, &mono).scale_rat(&(&sign * &coeff));
        class = class.add(&term_class);
        sign = Rat::one();
        first = false;
    }
    Ok(class)
}

fn generator_names(ring: &ChowPresentation) -> Vec<String> {
    ring.generators().to_vec()
}

fn monomial_class(ring: &ChowPresentation, mono: &Monomial) -> GradedClass<Rat> {
    let mut out = ring.one();
    for (idx, gen) in ring.generators().iter().enumerate() {
        let g: GradedClass<Rat> = ring.gen_class(gen);
        out = out.mul(&g.pow(mono.0[idx]));
    }
    out
}

/// key=value fields on a section header line.
fn header_fields(text: &str, line: usize) -> Result<BTreeMap<String, String>, ConfigError> {
    let mut out = BTreeMap::new();
    for piece in text.split_whitespace() {
        match piece.split_once('=') {
            Some((k, v)) => {
                out.insert(k.to_string(), v.to_string());
            }
            None => return err(line, 0, format!("expected key=value, found {piece:?}")),
        }
    }
    Ok(out)
}

struct VarietyDraft {
    name: String,
    dim: u32,
    line: usize,
    gens: Vec<String>,
    pairs: Vec<(String, Rat, usize)>,
    c1: Option<(String, usize)>,
    c2: Option<(String, usize)>,
    todd: Option<(String, usize)>,
}

impl VarietyDraft {
    fn build(self) -> Result<VarietyPresentation, ConfigError> {
        if self.gens.is_empty() {
            return err(
                self.line,
                0,
                format!("variety {} has no generators", self.name),
            );
        }
        let mut table = BTreeMap::new();
        for (mono_text, value, line) in &self.pairs {
            match parse_monomial(mono_text, &self.gens) {
                Some(m) => {
                    table.insert(m, value.clone());
                }
                None => return err(*line, 0, format!("bad monomial {mono_text:?}")),
            }
        }
        let ring =
            ChowPresentation::from_parts(self.gens.clone(), self.dim, table).map_err(|e| {
                ConfigError {
                    line: self.line,
                    col: 0,
                    message: e.to_string(),
                }
            })?;
        let (c1_text, c1_line) = match &self.c1 {
            Some(x) => x.clone(),
            None => return err(self.line, 0, format!("variety {} is missing c1", self.name)),
        };
        let (c2_text, c2_line) = match &self.c2 {
            Some(x) => x.clone(),
            None => return err(self.line, 0, format!("variety {} is missing c2", self.name)),
        };
        let c1 = parse_class(&ring, &c1_text, c1_line)?;
        let c2 = parse_class(&ring, &c2_text, c2_line)?;
        let variety = VarietyPresentation::new(&self.name, ring.clone(), c1, c2).map_err(|e| {
            ConfigError {
                line: self.line,
                col: 0,
                message: e.to_string(),
            }
        })?;
        if let Some((todd_text, todd_line)) = &self.todd {
            let declared = parse_class(&ring, todd_text, *todd_line)?;
            let computed = variety.todd.truncate_above(2);
            if declared != computed {
                return err(
                    *todd_line,
                    0,
                    format!(
                        "declared todd class {} does not match 1 + c1/2 + (c1^2+c2)/12 = {}",
                        declared.render(),
                        computed.render()
                    ),
                );
            }
        }
        Ok(variety)
    }
}

pub fn parse(text: &str) -> Result<ParsedConfig, ConfigError> {
    let mut config = ParsedConfig {
        varieties: Vec::new(),
        covers: Vec::new(),
        ram_covers: Vec::new(),
    };
    let mut draft: Option<VarietyDraft> = None;

    let finish =
        |draft: &mut Option<VarietyDraft>, config: &mut ParsedConfig| -> Result<(), ConfigError> {
            if let Some(d) = draft.take() {
                config.varieties.push(d.build()?);
            }
            Ok(())
        };

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw.find('#') {
            Some(p) => &raw[..p],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix('[') {
            let close = match rest.find(']') {
                Some(p) => p,
                None => return err(line_no, raw.len(), "unclosed section header"),
            };
            let header = &rest[..close];
            let after = rest[close + 1..].trim();
            let mut words = header.split_whitespace();
            let kind = words.next().unwrap_or("");
            let name = match words.next() {
                Some(n) => n.to_string(),
                None => return err(line_no, 1, "section header is missing a name"),
            };
            match kind {
                "variety" => {
                    finish(&mut draft, &mut config)?;
                    let fields = header_fields(after, line_no)?;
                    let dim: u32 = match fields.get("dim") {
                        Some(d) => d.parse().map_err(|_| ConfigError {
                            line: line_no,
                            col: 0,
                            message: format!("bad dimension {d:?}"),
                        })?,
                        None => return err(line_no, 0, "variety header needs dim=N"),
                    };
                    draft = Some(VarietyDraft {
                        name,
                        dim,
                        line: line_no,
                        gens: Vec::new(),
                        pairs: Vec::new(),
                        c1: None,
                        c2: None,
                        todd: None,
                    });
                }
                "cover" => {
                    finish(&mut draft, &mut config)?;
                    let fields = header_fields(after, line_no)?;
                    let get = |key: &str| {
                        fields.get(key).cloned().ok_or(ConfigError {
                            line: line_no,
                            col: 0,
                            message: format!("cover header needs {key}="),
                        })
                    };
                    let source_name = get("source")?;
                    let target_name = get("target")?;
                    let degree: i64 = get("degree")?.parse().map_err(|_| ConfigError {
                        line: line_no,
                        col: 0,
                        message: "bad degree".into(),
                    })?;
                    let pullback_gen = get("pullback")?;
                    let source = match config.variety(&source_name) {
                        Some(v) => v.clone(),
                        None => {
                            return err(line_no, 0, format!("unknown source variety {source_name}"))
                        }
                    };
                    let target = match config.variety(&target_name) {
                        Some(v) => v.clone(),
                        None => {
                            return err(line_no, 0, format!("unknown target variety {target_name}"))
                        }
                    };
                    if source.ring.generator_index(&pullback_gen).is_none() {
                        return err(
                            line_no,
                            0,
                            format!("unknown pullback generator {pullback_gen}"),
                        );
                    }
                    let pullback = source.ring.gen_class(&pullback_gen);
                    let cover = CoverPresentation::from_config_parts(
                        &name, source, target, degree, pullback,
                    )
                    .map_err(|e| ConfigError {
                        line: line_no,
                        col: 0,
                        message: e.to_string(),
                    })?;
                    config.covers.push(cover);
                }
                "ramcover" => {
                    finish(&mut draft, &mut config)?;
                    let fields = header_fields(after, line_no)?;
                    let base_genus: u32 = fields
                        .get("base_genus")
                        .ok_or(ConfigError {
                            line: line_no,
                            col: 0,
                            message: "ramcover header needs base_genus=".into(),
                        })?
                        .parse()
                        .map_err(|_| ConfigError {
                            line: line_no,
                            col: 0,
                            message: "bad base_genus".into(),
                        })?;
                    let degree: i64 = fields
                        .get("degree")
                        .ok_or(ConfigError {
                            line: line_no,
                            col: 0,
                            message: "ramcover header needs degree=".into(),
                        })?
                        .parse()
                        .map_err(|_| ConfigError {
                            line: line_no,
                            col: 0,
                            message: "bad degree".into(),
                        })?;
                    let ram: Vec<i64> = match fields.get("ram") {
                        Some(text) if !text.is_empty() => text
                            .split(',')
                            .map(|p| {
                                p.trim().parse().map_err(|_| ConfigError {
                                    line: line_no,
                                    col: 0,
                                    message: format!("bad ramification index {p:?}"),
                                })
                            })
                            .collect::<Result<_, _>>()?,
                        _ => Vec::new(),
                    };
                    config
                        .ram_covers
                        .push(CoverSpec::new(&name, base_genus, degree, &ram));
                }
                other => return err(line_no, 1, format!("unknown section kind {other:?}")),
            }
            continue;
        }
        // body lines belong to the current variety
        let d = match draft.as_mut() {
            Some(d) => d,
            None => return err(line_no, 0, "line outside of any [variety] section"),
        };
        if let Some(rest) = line.strip_prefix("gen ") {
            for g in rest.split_whitespace() {
                d.gens.push(g.to_string());
            }
        } else if let Some(rest) = line.strip_prefix("pair ") {
            let (mono, value) = match rest.split_once('=') {
                Some((m, v)) => (m.trim().to_string(), v.trim()),
                None => return err(line_no, 0, "pair line needs MONOMIAL = RATIONAL"),
            };
            let value: Rat = value.parse().map_err(|e| ConfigError {
                line: line_no,
                col: 0,
                message: format!("bad rational: {e}"),
            })?;
            d.pairs.push((mono, value, line_no));
        } else if let Some(rest) = line.strip_prefix("c1") {
            d.c1 = Some((strip_eq(rest, line_no)?, line_no));
        } else if let Some(rest) = line.strip_prefix("c2") {
            d.c2 = Some((strip_eq(rest, line_no)?, line_no));
        } else if let Some(rest) = line.strip_prefix("todd") {
            d.todd = Some((strip_eq(rest, line_no)?, line_no));
        } else {
            return err(line_no, 0, format!("unrecognized line {line:?}"));
        }
    }
    finish(&mut draft, &mut config)?;
    Ok(config)
}

fn strip_eq(rest: &str, line: usize) -> Result<String, ConfigError> {
    match rest.trim_start().strip_prefix('=') {
        Some(r) => Ok(r.trim().to_string()),
        None => err(line, 0, "expected '=' after key"),
    }
}

/// Render a configuration for the given data; load(dump(x)) == x.
pub fn dump(
    varieties: &[&VarietyPresentation],
    covers: &[&CoverPresentation],
    ram_covers: &[&CoverSpec],
) -> String {
    let mut out = String::new();
    for v in varieties {
        out.push_str(&format!(
            "[variety {}] dim={}\n",
            v.name,
            v.ring.dimension()
        ));
        for g in v.ring.generators() {
            out.push_str(&format!("gen {g}\n"));
        }
        for (mono, value) in v.ring.top_table() {
            out.push_str(&format!(
                "pair {} = {}\n",
                v.ring.render_monomial(mono),
                value
            ));
        }
        out.push_str(&format!("c1 = {}\n", v.tangent_c1.render()));
        out.push_str(&format!("c2 = {}\n", v.tangent_c2.render()));
        out.push_str(&format!("todd = {}\n", v.todd.truncate_above(2).render()));
        out.push('\n');
    }
    for c in covers {
        let pullback_gen = c
            .pullback_h
            .terms()
            .next()
            .map(|(m, _)| {
                let idx = m.0.iter().position(|&e| e == 1).unwrap_or(0);
                c.source.ring.generators()[idx].clone()
            })
            .unwrap_or_default();
        out.push_str(&format!(
            "[cover {}] source={} target={} degree={} pullback={}\n",
            c.name, c.source.name, c.target.name, c.degree, pullback_gen
        ));
    }
    if !covers.is_empty() {
        out.push('\n');
    }
    for r in ram_covers {
        let ram = r
            .ram_indices
            .iter()
            .map(|e| e.to_string())
            .collect::<Vec<_>>()
            .join(",");
        out.push_str(&format!(
            "[ramcover {}] base_genus={} degree={} ram={}\n",
            r.name, r.base_genus, r.degree, ram
        ));
    }
    out
}

/// Parse a configuration file from disk.
pub fn load_file(path: &std::path::Path) -> Result<ParsedConfig, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    parse(&text).map_err(|e| format!("{}: {e}", path.display()))
}

/// Write a configuration for the given data to disk.
pub fn dump_to_file(
    path: &std::path::Path,
    varieties: &[&VarietyPresentation],
    covers: &[&CoverPresentation],
    ram_covers: &[&CoverSpec],
) -> std::io::Result<()> {
    std::fs::write(path, dump(varieties, covers, ram_covers))
}

/// The built-in geometry rendered as a configuration.
pub fn dump_builtin() -> String {
    let g = crate::varieties::builtin_presentations();
    let suite = crate::curves::standard_genus_suite();
    let ram: Vec<&CoverSpec> = suite.iter().map(|(s, _)| s).collect();
    dump(&[&g.x1, &g.y1, &g.x0, &g.y0], &[&g.cover1, &g.cover0], &ram)
}
