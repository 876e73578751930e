//! JSON wire formats.

use braidbrick_core::braid::{parse_braid, StrandEnd};
use braidbrick_core::brick::BrickQuiver;
use braidbrick_core::classify::{ClassifyVerdict, TraceOp, TraceStep, Witness};
use braidbrick_core::cluster::{FillingReport, OrbitReport, Seed};
use braidbrick_core::{BraidWord, DynkinType, Error, ExchangeMatrix, TypeVerdict};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BraidJson {
    pub n: usize,
    pub letters: Vec<usize>,
}

impl From<&BraidWord> for BraidJson {
    fn from(w: &BraidWord) -> Self {
        BraidJson { n: w.strands(), letters: w.letters().iter().map(|&l| l as usize).collect() }
    }
}

impl TryFrom<&BraidJson> for BraidWord {
    type Error = Error;
    fn try_from(j: &BraidJson) -> Result<Self, Error> {
        BraidWord::from_indices(j.n, &j.letters)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexJson {
    pub level: usize,
    pub left: usize,
    pub right: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverJson {
    pub vertices: Vec<VertexJson>,
    pub arrows: Vec<[usize; 2]>,
}

impl From<&BrickQuiver> for QuiverJson {
    fn from(q: &BrickQuiver) -> Self {
        QuiverJson {
            vertices: q.bricks.iter().map(|b| VertexJson { level: b.level, left: b.left, right: b.right }).collect(),
            arrows: q.arrows.iter().map(|&(i, j)| [i, j]).collect(),
        }
    }
}

impl QuiverJson {
    pub fn to_matrix(&self) -> Result<ExchangeMatrix, Error> {
        let arrows: Vec<(usize, usize)> = self.arrows.iter().map(|a| (a[0], a[1])).collect();
        ExchangeMatrix::from_arrows(self.vertices.len(), &arrows)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub size: usize,
    pub b: Vec<Vec<i64>>,
}

impl From<&ExchangeMatrix> for MatrixJson {
    fn from(m: &ExchangeMatrix) -> Self {
        MatrixJson { size: m.size(), b: m.rows() }
    }
}

impl TryFrom<&MatrixJson> for ExchangeMatrix {
    type Error = Error;
    fn try_from(j: &MatrixJson) -> Result<Self, Error> {
        if j.b.len() != j.size {
            return Err(Error::BadShape);
        }
        ExchangeMatrix::from_rows(&j.b)
    }
}

/// Finite-type decision with its replayable mutation path.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictJson {
    /// `None` when the search hit its cap.
    pub finite: Option<bool>,
    pub path: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub terminal: Option<MatrixJson>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub types: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub pair: Option<[usize; 2]>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub explored: Option<usize>,
}

impl From<&TypeVerdict> for VerdictJson {
    fn from(v: &TypeVerdict) -> Self {
        let mut j = VerdictJson {
            finite: v.is_finite(),
            path: v.path().to_vec(),
            terminal: None,
            types: Vec::new(),
            pair: None,
            explored: None,
        };
        match v {
            TypeVerdict::Finite { terminal, components, .. } => {
                j.terminal = Some(terminal.into());
                j.types = type_names(components);
            }
            TypeVerdict::Infinite { terminal, pair, .. } => {
                j.terminal = Some(terminal.into());
                j.pair = Some([pair.0, pair.1]);
            }
            TypeVerdict::Indeterminate { explored, .. } => j.explored = Some(*explored),
        }
        j
    }
}

pub fn type_names(ts: &[DynkinType]) -> Vec<String> {
    ts.iter().map(|t| t.name()).collect()
}

/// `quiver` subcommand output: the quiver plus its recognition and type verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverReport {
    pub word: String,
    pub n: usize,
    #[serde(flatten)]
    pub quiver: QuiverJson,
    pub types: Vec<String>,
    pub acyclic: bool,
    pub verdict: VerdictJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrowthJson {
    pub numerator_bits: u64,
    pub denominator_bits: u64,
}

/// Orbit of the unit frieze point; coordinates are exact rationals as strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitJson {
    pub iterations: usize,
    pub period: Option<usize>,
    pub positive: bool,
    pub points: Vec<Vec<String>>,
    pub growth: Vec<GrowthJson>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
}

impl From<&OrbitReport> for OrbitJson {
    fn from(r: &OrbitReport) -> Self {
        OrbitJson {
            iterations: r.iterations(),
            period: r.period,
            positive: r.positive,
            points: r.points.iter().map(|p| p.iter().map(|x| x.to_string()).collect()).collect(),
            growth: r
                .growth
                .iter()
                .map(|g| GrowthJson { numerator_bits: g.numerator_bits, denominator_bits: g.denominator_bits })
                .collect(),
            note: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeedJson {
    pub b: Vec<Vec<i64>>,
    pub c: Vec<Vec<i64>>,
}

impl From<&Seed> for SeedJson {
    fn from(s: &Seed) -> Self {
        SeedJson { b: s.b.rows(), c: (0..s.size()).map(|i| (0..s.size()).map(|j| s.c_entry(i, j)).collect()).collect() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FillingsJson {
    pub m_max: usize,
    pub pairwise_distinct: bool,
    pub first_repeat: Option<[usize; 2]>,
    pub seeds: Vec<SeedJson>,
}

impl FillingsJson {
    pub fn new(r: &FillingReport, m_max: usize) -> Self {
        FillingsJson {
            m_max,
            pairwise_distinct: r.all_distinct(),
            first_repeat: r.first_repeat.map(|(i, j)| [i, j]),
            seeds: r.seeds.iter().map(SeedJson::from).collect(),
        }
    }
}

/// One classifier trace step: the piece it acts on, the move and its parameter.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceJson {
    pub piece: usize,
    #[serde(rename = "move")]
    pub mv: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub pos: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub k: Option<isize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub end: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub level: Option<usize>,
    pub result: Vec<String>,
}

impl From<&TraceStep> for TraceJson {
    fn from(s: &TraceStep) -> Self {
        let mut j = TraceJson {
            piece: s.piece,
            mv: s.op.name().to_string(),
            pos: None,
            k: None,
            end: None,
            level: None,
            result: s.result.iter().map(word_text).collect(),
        };
        match s.op {
            TraceOp::Rho(k) => j.k = Some(k),
            TraceOp::R3(p) | TraceOp::Commute(p) => j.pos = Some(p),
            TraceOp::R1(e) => j.end = Some(end_name(e).to_string()),
            TraceOp::SplitCut(i) | TraceOp::Splice(i) | TraceOp::ConnectCut(i) => j.level = Some(i),
        }
        j
    }
}

pub fn end_name(e: StrandEnd) -> &'static str {
    match e {
        StrandEnd::Top => "top",
        StrandEnd::Bottom => "bottom",
    }
}

/// Word text with `e` for the empty word.
pub fn word_text(w: &BraidWord) -> String {
    if w.is_empty() {
        "e".to_string()
    } else {
        w.to_text()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessJson {
    pub word: String,
    pub deleted: Vec<usize>,
    pub result: String,
    pub types: Vec<String>,
    pub trace: Vec<TraceJson>,
}

impl From<&Witness> for WitnessJson {
    fn from(w: &Witness) -> Self {
        WitnessJson {
            word: word_text(&w.word),
            deleted: w.deleted.clone(),
            result: word_text(&w.result),
            types: type_names(&w.types),
            trace: w.trace.iter().map(TraceJson::from).collect(),
        }
    }
}

/// Classification verdict. `factors` lists the standard summands of each
/// split component; `words` gives their table words in the same shape.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyJson {
    pub input: String,
    pub verdict: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub unknots: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub factors: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub words: Option<Vec<Vec<String>>>,
    pub trace: Vec<TraceJson>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<WitnessJson>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub certificate: Option<VerdictJson>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub warnings: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub reason: Option<String>,
}

impl ClassifyJson {
    pub fn new(input: &BraidWord, v: &ClassifyVerdict) -> Self {
        let mut j = ClassifyJson {
            input: word_text(input),
            verdict: String::new(),
            unknots: None,
            factors: None,
            words: None,
            trace: Vec::new(),
            witness: None,
            certificate: None,
            warnings: Vec::new(),
            reason: None,
        };
        match v {
            ClassifyVerdict::Finite { decomposition, trace, certificate, warnings } => {
                j.verdict = "finite".into();
                j.unknots = Some(decomposition.unknots);
                j.factors =
                    Some(decomposition.factors.iter().map(|f| f.iter().map(|s| s.ty.name()).collect()).collect());
                j.words = Some(
                    decomposition.factors.iter().map(|f| f.iter().map(|s| word_text(&s.word)).collect()).collect(),
                );
                j.trace = trace.iter().map(TraceJson::from).collect();
                j.certificate = Some(certificate.into());
                j.warnings = warnings.clone();
            }
            ClassifyVerdict::Infinite { witness, certificate } => {
                j.verdict = "infinite".into();
                j.witness = witness.as_ref().map(WitnessJson::from);
                j.certificate = Some(certificate.into());
            }
            ClassifyVerdict::Indeterminate { reason } => {
                j.verdict = "indeterminate".into();
                j.reason = Some(reason.clone());
            }
        }
        j
    }
}

/// Input accepted wherever a braid or quiver is expected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Input {
    Braid(BraidWord),
    Quiver(ExchangeMatrix),
}

#[derive(Deserialize)]
#[serde(untagged)]
enum InputJson {
    Braid(BraidJson),
    Matrix(MatrixJson),
    Quiver(QuiverJson),
}

/// Parses braid text, braid JSON, matrix JSON or quiver JSON.
pub fn parse_input(text: &str, n: Option<usize>) -> Result<Input, String> {
    let t = text.trim();
    if !t.starts_with('{') {
        return parse_braid(t, n).map(Input::Braid).map_err(|e| e.to_string());
    }
    match serde_json::from_str::<InputJson>(t).map_err(|e| e.to_string())? {
        InputJson::Braid(b) => {
            let b = match n {
                Some(n) => BraidJson { n, ..b },
                None => b,
            };
            BraidWord::try_from(&b).map(Input::Braid).map_err(|e| e.to_string())
        }
        InputJson::Matrix(m) => ExchangeMatrix::try_from(&m).map(Input::Quiver).map_err(|e| e.to_string()),
        InputJson::Quiver(q) => q.to_matrix().map(Input::Quiver).map_err(|e| e.to_string()),
    }
}
