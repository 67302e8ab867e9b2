use std::fmt::Debug;

use serde_json::Value;

/// What a command produced: text lines for humans and a JSON document.
pub struct Report {
    pub lines: Vec<String>,
    pub json: Value,
}

#[derive(Debug)]
pub enum CliError {
    /// Bad input: unparsable literal, wrong model for a command. Exit 1.
    Usage(String),
    /// A typed failure from the library. Exit 2.
    Failure { name: String, message: String },
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError::Usage(message.into())
    }

    /// Wraps a library error, naming it by its innermost variant.
    pub fn failure<E: Debug + std::fmt::Display>(err: E) -> Self {
        let name = variant_name(&err);
        let text = err.to_string();
        let message = text.strip_prefix(&format!("{name}: ")).map(str::to_string).unwrap_or(text);
        CliError::Failure { name, message }
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Failure { .. } => 2,
        }
    }
}

const WRAPPERS: [&str; 5] = ["Axiom", "Core", "Cuntz", "Algebra", "Symmetric"];

/// `Axiom(Core(NotAUnit))` gives `NotAUnit`.
pub fn variant_name<E: Debug>(err: &E) -> String {
    let debug = format!("{err:?}");
    let mut rest = debug.as_str();
    loop {
        let end = rest.find(|c: char| !c.is_alphanumeric() && c != '_').unwrap_or(rest.len());
        let name = &rest[..end];
        if WRAPPERS.contains(&name) && rest[end..].starts_with('(') {
            rest = &rest[end + 1..];
            continue;
        }
        return name.to_string();
    }
}

/// Builds the JSON error document printed on typed failures.
pub fn error_json(err: &CliError) -> Value {
    match err {
        CliError::Usage(message) => serde_json::json!({ "error": "Usage", "message": message }),
        CliError::Failure { name, message } => serde_json::json!({ "error": name, "message": message }),
    }
}
