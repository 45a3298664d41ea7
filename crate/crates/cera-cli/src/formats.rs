//! Input and output file formats.
//!
//! Events come as a CSV table with header `id,x1,...,xd,tau` or as JSON with
//! the same fields. Filtrations come as level-tagged edge lists: a CSV body
//! `u,v,level` preceded by optional directives `# vertices: …`,
//! `# instants: …` and `# levels: …`. Simplicial filtrations and morphism
//! maps are JSON.

use std::collections::BTreeSet;
use std::fs;
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use serde::Deserialize;

use cera_core::filtration::{Filtration, VertexMode};
use cera_core::functorial::VertexMap;
use cera_core::graph::{Event, VertexId};
use cera_core::simplicial::SimplicialComplex;

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn looks_like_json(text: &str) -> bool {
    matches!(text.trim_start().chars().next(), Some('{') | Some('['))
}

/// Kind of filtration input, inferred from the file when not forced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputKind {
    Events,
    Levels,
}

impl InputKind {
    pub fn name(&self) -> &'static str {
        match self {
            InputKind::Events => "events",
            InputKind::Levels => "levels",
        }
    }
}

/// Events JSON means an object with an `events` array (or a bare array);
/// a level file is CSV whose header row is `u,v,level`.
pub fn sniff_kind(path: &Path) -> Result<InputKind> {
    let text = read(path)?;
    if looks_like_json(&text) {
        return Ok(InputKind::Events);
    }
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let head = line.to_ascii_lowercase();
        return if head.starts_with("id") {
            Ok(InputKind::Events)
        } else if head.starts_with("u,") {
            Ok(InputKind::Levels)
        } else {
            Err(anyhow!(
                "{}: cannot infer input kind from header {line:?}; pass --format",
                path.display()
            ))
        };
    }
    bail!("{}: empty input file", path.display());
}

#[derive(Deserialize)]
struct EventRow {
    id: u64,
    #[serde(default)]
    coords: Vec<f64>,
    tau: f64,
}

#[derive(Deserialize)]
struct EventsFile {
    events: Vec<EventRow>,
}

pub fn parse_events(path: &Path) -> Result<Vec<Event>> {
    let text = read(path)?;
    let events = if looks_like_json(&text) {
        parse_events_json(&text).with_context(|| format!("{}: invalid events", path.display()))?
    } else {
        parse_events_csv(&text).with_context(|| format!("{}: invalid events", path.display()))?
    };
    Ok(events)
}

fn parse_events_json(text: &str) -> Result<Vec<Event>> {
    let rows: Vec<EventRow> = match serde_json::from_str::<EventsFile>(text) {
        Ok(file) => file.events,
        Err(_) => serde_json::from_str(text).context("expected {\"events\": […]} or […]")?,
    };
    let mut seen = BTreeSet::new();
    let mut events = Vec::with_capacity(rows.len());
    for (i, row) in rows.into_iter().enumerate() {
        if !seen.insert(row.id) {
            bail!("event {}: duplicate id {}", i + 1, row.id);
        }
        events.push(Event::new(row.id, row.coords, row.tau));
    }
    Ok(events)
}

fn parse_events_csv(text: &str) -> Result<Vec<Event>> {
    let mut events = Vec::new();
    let mut seen = BTreeSet::new();
    let mut dims: Option<usize> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split(',').map(str::trim).collect();
        if dims.is_none() {
            // header row: id, x1..xd, tau
            if fields.first() != Some(&"id") || fields.last() != Some(&"tau") {
                bail!("line {line_no}: header must be id,x1,…,xd,tau");
            }
            let coord_names = &fields[1..fields.len() - 1];
            for (i, name) in coord_names.iter().enumerate() {
                if *name != format!("x{}", i + 1) {
                    bail!("line {line_no}: coordinate columns must be named x1,x2,…");
                }
            }
            dims = Some(coord_names.len());
            continue;
        }
        let d = dims.unwrap();
        if fields.len() != d + 2 {
            bail!(
                "line {line_no}: expected {} fields, found {}",
                d + 2,
                fields.len()
            );
        }
        let id: u64 = fields[0]
            .parse()
            .map_err(|_| anyhow!("line {line_no}: invalid id {:?}", fields[0]))?;
        if !seen.insert(id) {
            bail!("line {line_no}: duplicate id {id}");
        }
        let mut coords = Vec::with_capacity(d);
        for field in &fields[1..=d] {
            coords.push(
                field
                    .parse()
                    .map_err(|_| anyhow!("line {line_no}: invalid coordinate {field:?}"))?,
            );
        }
        let tau: f64 = fields[d + 1]
            .parse()
            .map_err(|_| anyhow!("line {line_no}: invalid tau {:?}", fields[d + 1]))?;
        events.push(Event::new(id, coords, tau));
    }
    if dims.is_none() {
        bail!("missing header row");
    }
    Ok(events)
}

/// Contents of a level-tagged edge list before assembly.
#[derive(Debug, Clone, Default)]
pub struct LevelFileData {
    pub vertices: Option<Vec<u64>>,
    pub instants: Option<Vec<f64>>,
    pub declared_levels: Option<usize>,
    pub rows: Vec<(u64, u64, usize)>,
}

impl LevelFileData {
    /// Cumulative filtration over the declared universe (or the endpoints
    /// when none is declared). Declared instants are attached one per level.
    pub fn into_filtration(self, mode: VertexMode) -> Result<Filtration> {
        let max_row_level = self.rows.iter().map(|r| r.2).max().unwrap_or(0);
        let k = max_row_level
            .max(self.declared_levels.unwrap_or(0))
            .max(self.instants.as_ref().map_or(0, Vec::len));
        if k == 0 {
            bail!("no levels: the file declares no rows and no level count");
        }
        let mut diffs = vec![Vec::new(); k];
        for &(u, v, level) in &self.rows {
            diffs[level - 1].push((VertexId(u), VertexId(v)));
        }
        let universe: BTreeSet<VertexId> = match &self.vertices {
            Some(list) => list.iter().copied().map(VertexId).collect(),
            None => self
                .rows
                .iter()
                .flat_map(|&(u, v, _)| [VertexId(u), VertexId(v)])
                .collect(),
        };
        let filtration = Filtration::from_level_diffs(universe, diffs, mode)?;
        match self.instants {
            Some(instants) => Ok(filtration.with_instants(instants)?),
            None => Ok(filtration),
        }
    }
}

pub fn parse_edge_levels(path: &Path) -> Result<LevelFileData> {
    let text = read(path)?;
    let mut data = LevelFileData::default();
    let mut saw_header = false;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            let comment = comment.trim();
            if let Some(list) = comment.strip_prefix("vertices:") {
                let parsed: Result<Vec<u64>> = list
                    .split_whitespace()
                    .map(|t| {
                        t.parse()
                            .map_err(|_| anyhow!("line {line_no}: invalid vertex id {t:?}"))
                    })
                    .collect();
                data.vertices = Some(parsed?);
            } else if let Some(list) = comment.strip_prefix("instants:") {
                let parsed: Result<Vec<f64>> = list
                    .split_whitespace()
                    .map(|t| {
                        t.parse()
                            .map_err(|_| anyhow!("line {line_no}: invalid instant {t:?}"))
                    })
                    .collect();
                data.instants = Some(parsed?);
            } else if let Some(count) = comment.strip_prefix("levels:") {
                data.declared_levels = Some(
                    count
                        .trim()
                        .parse()
                        .map_err(|_| anyhow!("line {line_no}: invalid level count"))?,
                );
            }
            continue;
        }
        if !saw_header {
            if !line.eq_ignore_ascii_case("u,v,level") {
                bail!(
                    "{}: line {line_no}: expected header u,v,level, found {line:?}",
                    path.display()
                );
            }
            saw_header = true;
            continue;
        }
        let fields: Vec<&str> = line.split(',').map(str::trim).collect();
        if fields.len() != 3 {
            bail!(
                "{}: line {line_no}: expected u,v,level, found {line:?}",
                path.display()
            );
        }
        let mut numbers = [0u64; 3];
        for (slot, field) in numbers.iter_mut().zip(&fields) {
            *slot = field
                .parse()
                .map_err(|_| anyhow!("{}: line {line_no}: invalid integer {field:?}", path.display()))?;
        }
        let level = numbers[2] as usize;
        if level == 0 {
            bail!("{}: line {line_no}: levels start at 1", path.display());
        }
        data.rows.push((numbers[0], numbers[1], level));
    }
    if !saw_header {
        bail!("{}: missing u,v,level header", path.display());
    }
    Ok(data)
}

/// Renders a filtration as a level-tagged edge list, including the vertex
/// universe and, when known, the grid instants.
pub fn write_edge_levels(filtration: &Filtration) -> String {
    let mut out = String::new();
    let vertices: Vec<String> = filtration.vertices().iter().map(|v| v.to_string()).collect();
    out.push_str(&format!("# vertices: {}\n", vertices.join(" ")));
    if let Some(instants) = filtration.instants() {
        let rendered: Vec<String> = instants.iter().map(|t| t.to_string()).collect();
        out.push_str(&format!("# instants: {}\n", rendered.join(" ")));
    }
    out.push_str(&format!("# levels: {}\n", filtration.level_count()));
    out.push_str("u,v,level\n");
    for n in 1..=filtration.level_count() {
        for (u, v) in filtration.level_diff_ordered(n).expect("level in range") {
            out.push_str(&format!("{u},{v},{n}\n"));
        }
    }
    out
}

#[derive(Deserialize)]
struct ComplexesFile {
    #[serde(default)]
    vertices: Vec<u64>,
    levels: Vec<Vec<Vec<u64>>>,
}

/// Simplicial filtration: one complex per level, given by maximal faces over
/// a shared vertex set. Levels must be increasing.
pub fn parse_complexes(path: &Path) -> Result<Vec<SimplicialComplex>> {
    let text = read(path)?;
    let file: ComplexesFile = serde_json::from_str(&text)
        .with_context(|| format!("{}: invalid simplicial filtration", path.display()))?;
    if file.levels.is_empty() {
        bail!("{}: no levels", path.display());
    }
    let mut vertex_set: BTreeSet<VertexId> = file.vertices.iter().copied().map(VertexId).collect();
    for level in &file.levels {
        for face in level {
            vertex_set.extend(face.iter().copied().map(VertexId));
        }
    }
    let mut complexes = Vec::with_capacity(file.levels.len());
    for level in file.levels {
        let faces = level
            .into_iter()
            .map(|face| face.into_iter().map(VertexId).collect::<BTreeSet<_>>());
        complexes.push(SimplicialComplex::from_maximal_faces(
            vertex_set.iter().copied(),
            faces,
        )?);
    }
    for i in 0..complexes.len() - 1 {
        if !complexes[i].is_subcomplex_of(&complexes[i + 1]) {
            bail!(
                "{}: level {} is not contained in level {}",
                path.display(),
                i + 1,
                i + 2
            );
        }
    }
    Ok(complexes)
}

/// Vertex map file: `{"map": {"1": 5, …}}` or `{"map": [[1, 5], …]}`.
pub fn parse_morphism(path: &Path) -> Result<VertexMap> {
    let text = read(path)?;
    let value: serde_json::Value = serde_json::from_str(&text)
        .with_context(|| format!("{}: invalid morphism file", path.display()))?;
    let map_value = value
        .get("map")
        .ok_or_else(|| anyhow!("{}: missing \"map\" field", path.display()))?;
    let mut map = VertexMap::new();
    match map_value {
        serde_json::Value::Object(entries) => {
            for (key, val) in entries {
                let from: u64 = key
                    .parse()
                    .map_err(|_| anyhow!("{}: invalid vertex id {key:?}", path.display()))?;
                let to = val
                    .as_u64()
                    .ok_or_else(|| anyhow!("{}: invalid image for {key}", path.display()))?;
                map.insert(VertexId(from), VertexId(to));
            }
        }
        serde_json::Value::Array(pairs) => {
            for pair in pairs {
                let slice = pair
                    .as_array()
                    .filter(|a| a.len() == 2)
                    .ok_or_else(|| anyhow!("{}: map entries must be [from, to]", path.display()))?;
                let from = slice[0]
                    .as_u64()
                    .ok_or_else(|| anyhow!("{}: invalid vertex id", path.display()))?;
                let to = slice[1]
                    .as_u64()
                    .ok_or_else(|| anyhow!("{}: invalid vertex id", path.display()))?;
                map.insert(VertexId(from), VertexId(to));
            }
        }
        _ => bail!("{}: \"map\" must be an object or an array", path.display()),
    }
    Ok(map)
}
