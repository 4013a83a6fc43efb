use serde::Serialize;

/// Source position of a declaration. Positions take no part in equality or
/// serialization, so a reformatted file parses to an equal tree.
#[derive(Debug, Clone, Copy, Default, Eq)]
pub struct Pos {
    pub line: usize,
    pub column: usize,
}

impl PartialEq for Pos {
    fn eq(&self, _: &Self) -> bool {
        true
    }
}

impl std::fmt::Display for Pos {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Session {
    pub items: Vec<Item>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "item", rename_all = "lowercase")]
pub enum Item {
    Ring(RingDecl),
    Module(ModuleDecl),
    Run(RunDecl),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VarDecl {
    pub name: String,
    pub weight: Option<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RingDecl {
    /// `None` when the header omits the name; the ring is then called `R`.
    pub name: Option<String>,
    pub characteristic: u64,
    pub vars: Vec<VarDecl>,
    pub order: Option<String>,
    /// Ideal generators as canonical polynomial text.
    pub ideal: Vec<String>,
    #[serde(skip)]
    pub pos: Pos,
}

impl RingDecl {
    pub fn ring_name(&self) -> &str {
        self.name.as_deref().unwrap_or("R")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ModuleDecl {
    pub name: String,
    pub ring: String,
    pub body: ModuleBody,
    #[serde(skip)]
    pub pos: Pos,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ModuleBody {
    /// Generator degrees and relation columns, one entry per generator.
    Explicit { gens: Vec<i64>, rels: Vec<Vec<String>> },
    /// `= func(args)`.
    Call { func: String, args: Vec<String> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RunDecl {
    pub command: String,
    pub args: Vec<String>,
    pub config: Vec<Setting>,
    pub expects: Vec<Expect>,
    #[serde(skip)]
    pub pos: Pos,
}

impl RunDecl {
    /// `command(arg, arg)` as written in canonical form.
    pub fn signature(&self) -> String {
        format!("{}({})", self.command, self.args.join(", "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Setting {
    pub key: String,
    pub value: Value,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Value {
    Int(i64),
    Bool(bool),
    Str(String),
    Ident(String),
    List(Vec<Value>),
}

impl Value {
    pub fn to_json(&self) -> serde_json::Value {
        match self {
            Value::Int(n) => serde_json::Value::from(*n),
            Value::Bool(b) => serde_json::Value::from(*b),
            Value::Str(s) | Value::Ident(s) => serde_json::Value::from(s.as_str()),
            Value::List(v) => serde_json::Value::Array(v.iter().map(Value::to_json).collect()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Trivial,
    Derived,
    Paper,
}

impl Provenance {
    pub fn name(&self) -> &'static str {
        match self {
            Provenance::Trivial => "trivial",
            Provenance::Derived => "derived",
            Provenance::Paper => "paper",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Expect {
    /// Dotted path into the command's report, e.g. `certificate.verdict`.
    pub key: String,
    pub value: Value,
    pub provenance: Option<Provenance>,
    pub note: Option<String>,
}
