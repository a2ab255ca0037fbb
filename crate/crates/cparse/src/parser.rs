use std::collections::HashMap;

use nodevec::ast::{AstNode, NodeKind};
use thiserror::Error;

use crate::lexer::{Token, TokenCategory};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
#[error("{line}:{column}: {message} (expected {expected})")]
pub struct ParseError {
    pub message: String,
    pub line: usize,
    pub column: usize,
    pub expected: String,
}

type Result<T> = std::result::Result<T, ParseError>;

const STORAGE: &[&str] = &["auto", "register", "static", "extern", "typedef", "_Thread_local"];
const FUNCTION_SPEC: &[&str] = &["inline", "_Noreturn"];
const QUALIFIERS: &[&str] = &["const", "restrict", "volatile"];
const SIMPLE_TYPES: &[&str] = &[
    "void", "_Bool", "char", "short", "int", "long", "float", "double", "_Complex", "signed", "unsigned",
];
const UNSUPPORTED: &[&str] = &["_Alignas", "_Alignof", "_Atomic", "_Generic", "_Static_assert"];
const ASSIGNMENT_OPS: &[&str] = &["=", "^=", "*=", "/=", "%=", "+=", "-=", "<<=", ">>=", "&=", "|="];
const STATEMENT_KEYWORDS: &[&str] = &[
    "{", "if", "switch", "while", "do", "for", "goto", "break", "continue", "return", "case", "default", ";",
];

fn binary_precedence(op: &str) -> Option<u8> {
    Some(match op {
        "||" => 0,
        "&&" => 1,
        "|" => 2,
        "^" => 3,
        "&" => 4,
        "==" | "!=" => 5,
        "<" | ">" | "<=" | ">=" => 6,
        "<<" | ">>" => 7,
        "+" | "-" => 8,
        "*" | "/" | "%" => 9,
        _ => return None,
    })
}

fn node(kind: NodeKind, children: Vec<AstNode>) -> AstNode {
    AstNode::new(kind, children)
}

fn leaf(kind: NodeKind) -> AstNode {
    AstNode::leaf(kind)
}

/// One type-derivation step of a declarator.
#[derive(Clone, Debug)]
enum Modifier {
    Pointer,
    Array(Option<AstNode>),
    Function(Option<AstNode>),
}

/// A declarator before its base type is known. `modifiers` run from the
/// outermost derivation inward to the declared name.
#[derive(Clone, Debug, Default)]
struct Declarator {
    name: Option<String>,
    modifiers: Vec<Modifier>,
}

impl Declarator {
    fn modify(&mut self, chain: impl IntoIterator<Item = Modifier>) {
        self.modifiers.extend(chain);
    }

    fn is_function(&self) -> bool {
        matches!(self.modifiers.first(), Some(Modifier::Function(_)))
    }

    fn build(self, base: AstNode) -> AstNode {
        let mut tree = node(NodeKind::TypeDecl, vec![base]);
        for m in self.modifiers.into_iter().rev() {
            tree = match m {
                Modifier::Pointer => node(NodeKind::PtrDecl, vec![tree]),
                Modifier::Array(dim) => node(NodeKind::ArrayDecl, std::iter::once(tree).chain(dim).collect()),
                Modifier::Function(params) => node(NodeKind::FuncDecl, params.into_iter().chain([tree]).collect()),
            };
        }
        tree
    }
}

#[derive(Clone, Debug)]
enum TypeSpec {
    Word,
    Tagged(AstNode),
}

#[derive(Clone, Debug, Default)]
struct DeclSpec {
    storage: Vec<String>,
    types: Vec<TypeSpec>,
}

impl DeclSpec {
    fn is_typedef(&self) -> bool {
        self.storage.iter().any(|s| s == "typedef")
    }
}

struct InitDeclarator {
    declarator: Declarator,
    init: Option<AstNode>,
}

/// Recursive-descent parser over a token slice; one instance per parse.
pub struct Parser<'t> {
    tokens: &'t [Token],
    pos: usize,
    // name -> is a typedef name; innermost scope last.
    scopes: Vec<HashMap<String, bool>>,
    pending_params: Vec<String>,
}

/// Parses a whole translation unit into a `Root` node.
pub fn parse_program(tokens: &[Token]) -> Result<AstNode> {
    Parser::new(tokens).translation_unit()
}

impl<'t> Parser<'t> {
    pub fn new(tokens: &'t [Token]) -> Self {
        Parser {
            tokens,
            pos: 0,
            scopes: vec![HashMap::new()],
            pending_params: Vec::new(),
        }
    }

    // ---- token helpers ----

    fn peek_at(&self, k: usize) -> Option<&'t Token> {
        self.tokens.get(self.pos + k)
    }

    fn peek(&self) -> Option<&'t Token> {
        self.peek_at(0)
    }

    fn at(&self, lexeme: &str) -> bool {
        self.peek().is_some_and(|t| t.is(lexeme))
    }

    fn at_k(&self, k: usize, lexeme: &str) -> bool {
        self.peek_at(k).is_some_and(|t| t.is(lexeme))
    }

    fn advance(&mut self) -> Result<&'t Token> {
        let tok = self.peek().ok_or_else(|| self.error("unexpected end of input", "more input"))?;
        self.pos += 1;
        Ok(tok)
    }

    fn accept(&mut self, lexeme: &str) -> bool {
        if self.at(lexeme) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, lexeme: &str) -> Result<&'t Token> {
        if self.at(lexeme) {
            self.advance()
        } else {
            Err(self.unexpected(&format!("`{lexeme}`")))
        }
    }

    fn expect_identifier(&mut self) -> Result<&'t Token> {
        match self.peek() {
            Some(t) if t.category == TokenCategory::Identifier => self.advance(),
            _ => Err(self.unexpected("identifier")),
        }
    }

    fn position(&self) -> (usize, usize) {
        match self.peek() {
            Some(t) => (t.line, t.column),
            None => self
                .tokens
                .last()
                .map_or((1, 1), |t| (t.line, t.column + t.lexeme.chars().count())),
        }
    }

    fn error(&self, message: &str, expected: &str) -> ParseError {
        let (line, column) = self.position();
        ParseError {
            message: message.to_owned(),
            line,
            column,
            expected: expected.to_owned(),
        }
    }

    fn unexpected(&self, expected: &str) -> ParseError {
        let message = match self.peek() {
            Some(t) => format!("unexpected {t}"),
            None => "unexpected end of input".to_owned(),
        };
        self.error(&message, expected)
    }

    fn unsupported(&self, what: &str) -> ParseError {
        self.error(&format!("{what} are not supported"), "a construct of the supported C subset")
    }

    // ---- scopes ----

    fn push_scope(&mut self) {
        self.scopes.push(HashMap::new());
    }

    fn pop_scope(&mut self) {
        self.scopes.pop();
    }

    fn declare(&mut self, name: &str, is_type: bool) {
        self.scopes
            .last_mut()
            .expect("file scope")
            .insert(name.to_owned(), is_type);
    }

    fn is_type_name(&self, name: &str) -> bool {
        self.scopes
            .iter()
            .rev()
            .find_map(|s| s.get(name).copied())
            .unwrap_or(false)
    }

    fn is_typeid(&self, tok: Option<&Token>) -> bool {
        tok.is_some_and(|t| t.category == TokenCategory::Identifier && self.is_type_name(&t.lexeme))
    }

    fn is_plain_id(&self, tok: Option<&Token>) -> bool {
        tok.is_some_and(|t| t.category == TokenCategory::Identifier && !self.is_type_name(&t.lexeme))
    }

    fn starts_declaration_at(&self, k: usize) -> bool {
        let tok = self.peek_at(k);
        match tok {
            Some(t) if t.category == TokenCategory::Keyword => {
                let l = t.lexeme.as_str();
                STORAGE.contains(&l)
                    || FUNCTION_SPEC.contains(&l)
                    || QUALIFIERS.contains(&l)
                    || SIMPLE_TYPES.contains(&l)
                    || matches!(l, "struct" | "union" | "enum")
            }
            _ => self.is_typeid(tok),
        }
    }

    fn starts_declaration(&self) -> bool {
        self.starts_declaration_at(0)
    }

    fn starts_expression(&self) -> bool {
        match self.peek() {
            None => false,
            Some(t) => match t.category {
                TokenCategory::Constant => true,
                TokenCategory::Identifier => !self.is_type_name(&t.lexeme),
                TokenCategory::Keyword => t.lexeme == "sizeof",
                _ => matches!(t.lexeme.as_str(), "(" | "++" | "--" | "+" | "-" | "*" | "&" | "~" | "!"),
            },
        }
    }

    fn starts_statement(&self) -> bool {
        STATEMENT_KEYWORDS.iter().any(|k| self.at(k)) || self.starts_expression()
    }

    fn starts_declarator(&self, id_only: bool) -> bool {
        match self.peek() {
            None => false,
            Some(t) if t.is("*") || t.is("(") => true,
            Some(t) => {
                t.category == TokenCategory::Identifier && (!id_only || !self.is_type_name(&t.lexeme))
            }
        }
    }

    fn reject_unsupported_keyword(&self) -> Result<()> {
        match self.peek() {
            Some(t) if t.category == TokenCategory::Keyword && UNSUPPORTED.contains(&t.lexeme.as_str()) => {
                Err(self.error(&format!("`{}` is not supported", t.lexeme), "a construct of the supported C subset"))
            }
            _ => Ok(()),
        }
    }

    // ---- top level ----

    fn translation_unit(&mut self) -> Result<AstNode> {
        let mut items = Vec::new();
        while self.peek().is_some() {
            items.extend(self.external_declaration()?);
        }
        Ok(node(NodeKind::Root, items))
    }

    fn external_declaration(&mut self) -> Result<Vec<AstNode>> {
        if self.accept(";") {
            return Ok(Vec::new());
        }
        self.reject_unsupported_keyword()?;
        if !self.starts_declaration() {
            // Implicit `int` return type: `main() { ... }`.
            if !self.starts_declarator(true) {
                return Err(self.unexpected("declaration or function definition"));
            }
            let declarator = self.declarator()?;
            if !self.at("{") {
                return Err(self.unexpected("`{` of a function definition"));
            }
            let spec = DeclSpec {
                storage: Vec::new(),
                types: vec![TypeSpec::Word],
            };
            return Ok(vec![self.function_definition(spec, declarator, Vec::new())?]);
        }

        let (mut spec, saw_type) = self.declaration_specifiers(true)?;
        let (name, _) = self.peek_declarator_name();
        if name != Some(false) {
            let decls = self.decl_body_with_spec(spec, saw_type)?;
            self.expect(";")?;
            return Ok(decls);
        }

        let declarator = self.declarator()?;
        if self.at("{") || self.starts_declaration() {
            let param_decls = self.declaration_list()?;
            if !self.at("{") {
                return Err(self.unexpected("`{` of a function definition"));
            }
            if spec.types.is_empty() {
                spec.types.push(TypeSpec::Word);
            }
            return Ok(vec![self.function_definition(spec, declarator, param_decls)?]);
        }

        let mut init = None;
        if self.accept("=") {
            init = Some(self.initializer()?);
        }
        let decls = self.init_declarator_list(
            Some(InitDeclarator { declarator, init }),
            false,
        )?;
        let built = self.build_declarations(&spec, decls, true)?;
        self.expect(";")?;
        Ok(built)
    }

    fn function_definition(&mut self, spec: DeclSpec, declarator: Declarator, param_decls: Vec<AstNode>) -> Result<AstNode> {
        if spec.is_typedef() {
            return Err(self.error("a typedef cannot have a body", "declaration"));
        }
        let decl = self
            .build_declarations(&spec, vec![InitDeclarator { declarator, init: None }], true)?
            .remove(0);
        let body = self.compound_statement()?;
        let mut children = vec![decl, body];
        children.extend(param_decls);
        Ok(node(NodeKind::FuncDef, children))
    }

    fn declaration_list(&mut self) -> Result<Vec<AstNode>> {
        let mut decls = Vec::new();
        while self.starts_declaration() {
            decls.extend(self.declaration()?);
        }
        Ok(decls)
    }

    fn declaration(&mut self) -> Result<Vec<AstNode>> {
        let (spec, saw_type) = self.declaration_specifiers(true)?;
        let decls = self.decl_body_with_spec(spec, saw_type)?;
        self.expect(";")?;
        Ok(decls)
    }

    fn decl_body_with_spec(&mut self, spec: DeclSpec, saw_type: bool) -> Result<Vec<AstNode>> {
        let has_declarators = if saw_type {
            self.starts_declarator(false)
        } else {
            self.starts_declarator(true)
        };
        if has_declarators {
            let decls = self.init_declarator_list(None, !saw_type)?;
            return self.build_declarations(&spec, decls, true);
        }
        match spec.types.as_slice() {
            [TypeSpec::Tagged(tagged)] => Ok(vec![node(NodeKind::Decl, vec![tagged.clone()])]),
            _ => Err(self.error("invalid declaration", "declarator")),
        }
    }

    fn declaration_specifiers(&mut self, allow_no_type: bool) -> Result<(DeclSpec, bool)> {
        let mut spec = DeclSpec::default();
        let mut saw_type = false;
        let mut saw_any = false;
        loop {
            self.reject_unsupported_keyword()?;
            let Some(tok) = self.peek() else { break };
            let lexeme = tok.lexeme.as_str();
            if tok.category == TokenCategory::Keyword {
                if QUALIFIERS.contains(&lexeme) || FUNCTION_SPEC.contains(&lexeme) {
                    self.pos += 1;
                } else if STORAGE.contains(&lexeme) {
                    spec.storage.push(lexeme.to_owned());
                    self.pos += 1;
                } else if SIMPLE_TYPES.contains(&lexeme) {
                    spec.types.push(TypeSpec::Word);
                    saw_type = true;
                    self.pos += 1;
                } else if lexeme == "struct" || lexeme == "union" {
                    let tagged = self.struct_or_union_specifier()?;
                    spec.types.push(TypeSpec::Tagged(tagged));
                    saw_type = true;
                } else if lexeme == "enum" {
                    let tagged = self.enum_specifier()?;
                    spec.types.push(TypeSpec::Tagged(tagged));
                    saw_type = true;
                } else {
                    break;
                }
            } else if self.is_typeid(Some(tok)) && !saw_type {
                spec.types.push(TypeSpec::Word);
                saw_type = true;
                self.pos += 1;
            } else {
                break;
            }
            saw_any = true;
        }
        if !saw_any {
            return Err(self.unexpected("declaration specifiers"));
        }
        if !saw_type && !allow_no_type {
            return Err(self.error("missing type in declaration", "type specifier"));
        }
        Ok((spec, saw_type))
    }

    fn specifier_qualifier_list(&mut self) -> Result<DeclSpec> {
        let start = self.pos;
        let (spec, saw_type) = self.declaration_specifiers(false)?;
        if !spec.storage.is_empty() || !saw_type {
            self.pos = start;
            return Err(self.unexpected("type specifier"));
        }
        Ok(spec)
    }

    fn init_declarator_list(&mut self, first: Option<InitDeclarator>, id_only: bool) -> Result<Vec<InitDeclarator>> {
        let mut decls = match first {
            Some(d) => vec![d],
            None => vec![self.init_declarator(id_only)?],
        };
        while self.accept(",") {
            decls.push(self.init_declarator(id_only)?);
        }
        Ok(decls)
    }

    fn init_declarator(&mut self, id_only: bool) -> Result<InitDeclarator> {
        if id_only && !self.starts_declarator(true) {
            return Err(self.unexpected("declarator"));
        }
        let declarator = self.declarator()?;
        let init = if self.accept("=") { Some(self.initializer()?) } else { None };
        Ok(InitDeclarator { declarator, init })
    }

    // Completes declarations sharing `spec`, registering the declared names
    // when `register` is set.
    fn build_declarations(&mut self, spec: &DeclSpec, decls: Vec<InitDeclarator>, register: bool) -> Result<Vec<AstNode>> {
        let mut out = Vec::with_capacity(decls.len());
        for InitDeclarator { declarator, init } in decls {
            let Some(name) = declarator.name.clone() else {
                return Err(self.error("declarator has no name", "identifier"));
            };
            let functions = declarator
                .modifiers
                .iter()
                .filter(|m| matches!(m, Modifier::Function(_)))
                .count();
            if functions > 1 {
                return Err(self.unsupported("nested function declarators"));
            }
            let typ = self.fix_type(declarator, spec)?;
            let decl = if spec.is_typedef() {
                if init.is_some() {
                    return Err(self.error("a typedef cannot be initialized", "`;` or `,`"));
                }
                node(NodeKind::Typedef, vec![typ])
            } else {
                node(NodeKind::Decl, std::iter::once(typ).chain(init).collect())
            };
            if register {
                self.declare(&name, spec.is_typedef());
            }
            out.push(decl);
        }
        Ok(out)
    }

    fn fix_type(&self, declarator: Declarator, spec: &DeclSpec) -> Result<AstNode> {
        let base = match spec.types.as_slice() {
            [] if declarator.is_function() => leaf(NodeKind::IdentifierType),
            [] => return Err(self.error("missing type in declaration", "type specifier")),
            [TypeSpec::Tagged(t)] => t.clone(),
            types if types.iter().all(|t| matches!(t, TypeSpec::Word)) => leaf(NodeKind::IdentifierType),
            _ => return Err(self.error("invalid combination of type specifiers", "a single type")),
        };
        Ok(declarator.build(base))
    }

    // ---- struct / union / enum ----

    fn struct_or_union_specifier(&mut self) -> Result<AstNode> {
        let kind = if self.advance()?.lexeme == "struct" {
            NodeKind::Struct
        } else {
            NodeKind::Union
        };
        let named = self.peek().is_some_and(|t| t.category == TokenCategory::Identifier);
        if named {
            self.pos += 1;
        }
        if self.accept("{") {
            self.push_scope();
            let mut members = Vec::new();
            while !self.at("}") {
                if self.peek().is_none() {
                    return Err(self.unexpected("`}`"));
                }
                members.extend(self.struct_declaration()?);
            }
            self.pos += 1;
            self.pop_scope();
            return Ok(node(kind, members));
        }
        if !named {
            return Err(self.unexpected("struct or union name or `{`"));
        }
        Ok(leaf(kind))
    }

    fn struct_declaration(&mut self) -> Result<Vec<AstNode>> {
        if self.accept(";") {
            return Ok(Vec::new());
        }
        let spec = self.specifier_qualifier_list()?;
        if self.at(":") {
            return Err(self.unsupported("bit-fields"));
        }
        if self.starts_declarator(false) {
            let mut decls = vec![self.struct_declarator()?];
            while self.accept(",") {
                decls.push(self.struct_declarator()?);
            }
            self.expect(";")?;
            return self.build_declarations(&spec, decls, false);
        }
        let decl = match spec.types.as_slice() {
            [TypeSpec::Tagged(t)] => t.clone(),
            [TypeSpec::Word] => leaf(NodeKind::IdentifierType),
            _ => return Err(self.error("invalid member declaration", "declarator")),
        };
        self.expect(";")?;
        Ok(vec![node(NodeKind::Decl, vec![decl])])
    }

    fn struct_declarator(&mut self) -> Result<InitDeclarator> {
        let declarator = self.declarator()?;
        if self.at(":") {
            return Err(self.unsupported("bit-fields"));
        }
        Ok(InitDeclarator { declarator, init: None })
    }

    fn enum_specifier(&mut self) -> Result<AstNode> {
        self.expect("enum")?;
        let named = self.peek().is_some_and(|t| t.category == TokenCategory::Identifier);
        if named {
            self.pos += 1;
            if !self.at("{") {
                return Ok(leaf(NodeKind::Enum));
            }
        }
        self.expect("{")?;
        self.push_scope();
        let mut enumerators = vec![self.enumerator()?];
        while self.accept(",") {
            if self.at("}") {
                break;
            }
            enumerators.push(self.enumerator()?);
        }
        self.expect("}")?;
        self.pop_scope();
        Ok(node(NodeKind::Enum, vec![node(NodeKind::EnumeratorList, enumerators)]))
    }

    fn enumerator(&mut self) -> Result<AstNode> {
        if !self.is_plain_id(self.peek()) {
            return Err(self.unexpected("enumerator name"));
        }
        let name = self.advance()?.lexeme.clone();
        let value = if self.accept("=") {
            Some(self.conditional_expression()?)
        } else {
            None
        };
        self.declare(&name, false);
        Ok(node(NodeKind::Enumerator, value.into_iter().collect()))
    }

    // ---- declarators ----

    // Looks ahead for the declared name: Some(is_typedef_name) and whether
    // the name sits inside parentheses.
    fn peek_declarator_name(&self) -> (Option<bool>, bool) {
        let mut k = 0;
        self.scan_declarator_name(&mut k)
    }

    fn scan_declarator_name(&self, k: &mut usize) -> (Option<bool>, bool) {
        let mut saw_paren = false;
        while self.at_k(*k, "*") {
            *k += 1;
            while self.peek_at(*k).is_some_and(|t| QUALIFIERS.contains(&t.lexeme.as_str()) && t.category == TokenCategory::Keyword) {
                *k += 1;
            }
        }
        let Some(tok) = self.peek_at(*k) else {
            return (None, saw_paren);
        };
        if tok.category == TokenCategory::Identifier {
            *k += 1;
            return (Some(self.is_type_name(&tok.lexeme)), saw_paren);
        }
        if tok.is("(") {
            saw_paren = true;
            *k += 1;
            let (name, _) = self.scan_declarator_name(k);
            let mut depth = 1;
            while let Some(t) = self.peek_at(*k) {
                *k += 1;
                if t.is("(") {
                    depth += 1;
                } else if t.is(")") {
                    depth -= 1;
                    if depth == 0 {
                        break;
                    }
                }
            }
            return (name, saw_paren);
        }
        (None, saw_paren)
    }

    fn declarator(&mut self) -> Result<Declarator> {
        if self.peek_declarator_name().0.is_none() {
            return Err(self.unexpected("declarator"));
        }
        self.named_declarator(true)
    }

    fn named_declarator(&mut self, allow_paren: bool) -> Result<Declarator> {
        let pointers = self.pointer();
        let mut decl = if allow_paren && self.accept("(") {
            let inner = self.named_declarator(true)?;
            self.expect(")")?;
            inner
        } else {
            let name = self.expect_identifier()?.lexeme.clone();
            Declarator {
                name: Some(name),
                modifiers: Vec::new(),
            }
        };
        self.declarator_suffixes(&mut decl)?;
        decl.modify(pointers);
        Ok(decl)
    }

    fn pointer(&mut self) -> Vec<Modifier> {
        let mut stars = Vec::new();
        while self.accept("*") {
            while self.peek().is_some_and(|t| t.category == TokenCategory::Keyword && QUALIFIERS.contains(&t.lexeme.as_str())) {
                self.pos += 1;
            }
            stars.push(Modifier::Pointer);
        }
        stars
    }

    fn declarator_suffixes(&mut self, decl: &mut Declarator) -> Result<()> {
        loop {
            if self.at("[") {
                let array = self.array_suffix()?;
                decl.modify([array]);
            } else if self.at("(") {
                let function = self.function_suffix()?;
                decl.modify([function]);
            } else {
                return Ok(());
            }
        }
    }

    fn array_suffix(&mut self) -> Result<Modifier> {
        self.expect("[")?;
        if self.at("static") || self.peek().is_some_and(|t| t.category == TokenCategory::Keyword && QUALIFIERS.contains(&t.lexeme.as_str())) {
            return Err(self.unsupported("qualified array parameters"));
        }
        let dim = if self.starts_expression() {
            Some(self.assignment_expression()?)
        } else {
            None
        };
        self.expect("]")?;
        Ok(Modifier::Array(dim))
    }

    fn function_suffix(&mut self) -> Result<Modifier> {
        self.expect("(")?;
        if self.accept(")") {
            return Ok(Modifier::Function(None));
        }
        let (params, names) = if self.starts_declaration() {
            self.parameter_list()?
        } else {
            self.identifier_list()?
        };
        self.expect(")")?;
        if self.at("{") {
            self.pending_params = names;
        }
        Ok(Modifier::Function(Some(params)))
    }

    fn parameter_list(&mut self) -> Result<(AstNode, Vec<String>)> {
        let mut params = Vec::new();
        let mut names = Vec::new();
        loop {
            if self.at("...") {
                return Err(self.unsupported("variadic parameter lists"));
            }
            let (param, name) = self.parameter_declaration()?;
            params.push(param);
            names.extend(name);
            if !self.accept(",") {
                break;
            }
        }
        Ok((node(NodeKind::ParamList, params), names))
    }

    fn parameter_declaration(&mut self) -> Result<(AstNode, Option<String>)> {
        let (mut spec, _) = self.declaration_specifiers(true)?;
        if spec.types.is_empty() {
            spec.types.push(TypeSpec::Word);
        }
        if self.starts_declarator(false) {
            let (name, saw_paren) = self.peek_declarator_name();
            let abstract_decl = match name {
                None => true,
                Some(is_type) => is_type && saw_paren,
            };
            if !abstract_decl {
                let declarator = if name == Some(true) {
                    self.named_declarator(false)?
                } else {
                    self.named_declarator(true)?
                };
                let param_name = declarator.name.clone();
                let decl = self
                    .build_declarations(&spec, vec![InitDeclarator { declarator, init: None }], false)?
                    .remove(0);
                return Ok((decl, param_name));
            }
        }
        let declarator = self.abstract_declarator_opt()?.unwrap_or_default();
        Ok((self.typename_node(declarator, &spec)?, None))
    }

    // K&R identifier list: `f(a, b)`.
    fn identifier_list(&mut self) -> Result<(AstNode, Vec<String>)> {
        let mut ids = Vec::new();
        let mut names = Vec::new();
        loop {
            let tok = self.expect_identifier()?;
            names.push(tok.lexeme.clone());
            ids.push(leaf(NodeKind::Id));
            if !self.accept(",") {
                break;
            }
        }
        Ok((node(NodeKind::ParamList, ids), names))
    }

    fn typename_node(&self, declarator: Declarator, spec: &DeclSpec) -> Result<AstNode> {
        let typ = self.fix_type(declarator, spec)?;
        Ok(node(NodeKind::Typename, vec![typ]))
    }

    fn type_name(&mut self) -> Result<AstNode> {
        let spec = self.specifier_qualifier_list()?;
        let declarator = self.abstract_declarator_opt()?.unwrap_or_default();
        self.typename_node(declarator, &spec)
    }

    fn abstract_declarator_opt(&mut self) -> Result<Option<Declarator>> {
        if self.at("*") {
            let pointers = self.pointer();
            let mut decl = if self.at("(") || self.at("[") {
                self.direct_abstract_declarator()?
            } else {
                Declarator::default()
            };
            decl.modify(pointers);
            return Ok(Some(decl));
        }
        if self.at("(") || self.at("[") {
            return Ok(Some(self.direct_abstract_declarator()?));
        }
        Ok(None)
    }

    fn direct_abstract_declarator(&mut self) -> Result<Declarator> {
        let mut decl = if self.at("(") {
            if self.starts_declaration_at(1) || self.at_k(1, ")") {
                let Modifier::Function(params) = self.function_suffix()? else {
                    unreachable!()
                };
                Declarator {
                    name: None,
                    modifiers: vec![Modifier::Function(params)],
                }
            } else {
                self.pos += 1;
                let inner = self
                    .abstract_declarator_opt()?
                    .ok_or_else(|| self.unexpected("abstract declarator"))?;
                self.expect(")")?;
                inner
            }
        } else {
            let array = self.array_suffix()?;
            Declarator {
                name: None,
                modifiers: vec![array],
            }
        };
        self.declarator_suffixes(&mut decl)?;
        Ok(decl)
    }

    // ---- statements ----

    fn statement(&mut self) -> Result<AstNode> {
        self.reject_unsupported_keyword()?;
        let Some(tok) = self.peek() else {
            return Err(self.unexpected("statement"));
        };
        if tok.is("case") || tok.is("default") || (self.is_plain_id(Some(tok)) && self.at_k(1, ":")) {
            return self.labeled_statement();
        }
        match tok.lexeme.as_str() {
            "{" if tok.category == TokenCategory::Punctuation => self.compound_statement(),
            "if" | "switch" if tok.category == TokenCategory::Keyword => self.selection_statement(),
            "while" | "do" | "for" if tok.category == TokenCategory::Keyword => self.iteration_statement(),
            "goto" | "break" | "continue" | "return" if tok.category == TokenCategory::Keyword => self.jump_statement(),
            _ => self.expression_statement(),
        }
    }

    fn block_item(&mut self) -> Result<Vec<AstNode>> {
        if self.starts_declaration() {
            self.declaration()
        } else {
            Ok(vec![self.statement()?])
        }
    }

    fn compound_statement(&mut self) -> Result<AstNode> {
        self.expect("{")?;
        self.push_scope();
        for name in std::mem::take(&mut self.pending_params) {
            self.declare(&name, false);
        }
        let mut items = Vec::new();
        while !self.at("}") {
            if self.peek().is_none() {
                return Err(self.unexpected("`}`"));
            }
            items.extend(self.block_item()?);
        }
        self.pos += 1;
        self.pop_scope();
        Ok(node(NodeKind::Compound, items))
    }

    fn statement_or_empty(&mut self) -> Result<AstNode> {
        if self.starts_statement() {
            self.statement()
        } else {
            Ok(leaf(NodeKind::EmptyStatement))
        }
    }

    fn labeled_statement(&mut self) -> Result<AstNode> {
        let tok = self.advance()?;
        if tok.is("case") {
            let expr = self.conditional_expression()?;
            self.expect(":")?;
            let stmt = self.statement_or_empty()?;
            Ok(node(NodeKind::Case, vec![expr, stmt]))
        } else if tok.is("default") {
            self.expect(":")?;
            let stmt = self.statement_or_empty()?;
            Ok(node(NodeKind::Default, vec![stmt]))
        } else {
            self.expect(":")?;
            let stmt = self.statement_or_empty()?;
            Ok(node(NodeKind::Label, vec![stmt]))
        }
    }

    fn selection_statement(&mut self) -> Result<AstNode> {
        let tok = self.advance()?;
        self.expect("(")?;
        let cond = self.expression()?;
        self.expect(")")?;
        let body = self.statement()?;
        if tok.is("if") {
            let mut children = vec![cond, body];
            if self.accept("else") {
                children.push(self.statement()?);
            }
            Ok(node(NodeKind::If, children))
        } else {
            Ok(fix_switch_cases(node(NodeKind::Switch, vec![cond, body])))
        }
    }

    fn iteration_statement(&mut self) -> Result<AstNode> {
        let tok = self.advance()?;
        match tok.lexeme.as_str() {
            "while" => {
                self.expect("(")?;
                let cond = self.expression()?;
                self.expect(")")?;
                let body = self.statement()?;
                Ok(node(NodeKind::While, vec![cond, body]))
            }
            "do" => {
                let body = self.statement()?;
                self.expect("while")?;
                self.expect("(")?;
                let cond = self.expression()?;
                self.expect(")")?;
                self.expect(";")?;
                Ok(node(NodeKind::DoWhile, vec![cond, body]))
            }
            _ => {
                self.expect("(")?;
                let mut children = Vec::new();
                if self.starts_declaration() {
                    children.push(node(NodeKind::DeclList, self.declaration()?));
                } else {
                    children.extend(self.expression_opt()?);
                    self.expect(";")?;
                }
                children.extend(self.expression_opt()?);
                self.expect(";")?;
                children.extend(self.expression_opt()?);
                self.expect(")")?;
                children.push(self.statement()?);
                Ok(node(NodeKind::For, children))
            }
        }
    }

    fn jump_statement(&mut self) -> Result<AstNode> {
        let tok = self.advance()?;
        let result = match tok.lexeme.as_str() {
            "goto" => {
                self.expect_identifier()?;
                leaf(NodeKind::Goto)
            }
            "break" => leaf(NodeKind::Break),
            "continue" => leaf(NodeKind::Continue),
            _ => {
                if self.at(";") {
                    leaf(NodeKind::Return)
                } else {
                    node(NodeKind::Return, vec![self.expression()?])
                }
            }
        };
        self.expect(";")?;
        Ok(result)
    }

    fn expression_statement(&mut self) -> Result<AstNode> {
        let expr = self.expression_opt()?;
        if expr.is_none() && !self.at(";") {
            return Err(self.unexpected("statement"));
        }
        self.expect(";")?;
        Ok(expr.unwrap_or_else(|| leaf(NodeKind::EmptyStatement)))
    }

    // ---- expressions ----

    fn expression_opt(&mut self) -> Result<Option<AstNode>> {
        if self.starts_expression() {
            Ok(Some(self.expression()?))
        } else {
            Ok(None)
        }
    }

    fn expression(&mut self) -> Result<AstNode> {
        let first = self.assignment_expression()?;
        if !self.at(",") {
            return Ok(first);
        }
        let mut exprs = vec![first];
        while self.accept(",") {
            exprs.push(self.assignment_expression()?);
        }
        Ok(node(NodeKind::ExprList, exprs))
    }

    fn assignment_expression(&mut self) -> Result<AstNode> {
        if self.at("(") && self.at_k(1, "{") {
            return Err(self.unsupported("statement expressions"));
        }
        let lhs = self.conditional_expression()?;
        if ASSIGNMENT_OPS.iter().any(|op| self.at(op)) {
            self.pos += 1;
            let rhs = self.assignment_expression()?;
            return Ok(node(NodeKind::Assignment, vec![lhs, rhs]));
        }
        Ok(lhs)
    }

    fn conditional_expression(&mut self) -> Result<AstNode> {
        let cond = self.binary_expression(0, None)?;
        if self.accept("?") {
            let then = self.expression()?;
            self.expect(":")?;
            let otherwise = self.conditional_expression()?;
            return Ok(node(NodeKind::TernaryOp, vec![cond, then, otherwise]));
        }
        Ok(cond)
    }

    fn peek_precedence(&self) -> Option<u8> {
        self.peek()
            .filter(|t| t.category == TokenCategory::Operator)
            .and_then(|t| binary_precedence(&t.lexeme))
    }

    fn binary_expression(&mut self, min_prec: u8, lhs: Option<AstNode>) -> Result<AstNode> {
        let mut lhs = match lhs {
            Some(l) => l,
            None => self.cast_expression()?,
        };
        while let Some(prec) = self.peek_precedence() {
            if prec < min_prec {
                break;
            }
            self.pos += 1;
            let mut rhs = self.cast_expression()?;
            while let Some(next) = self.peek_precedence() {
                if next > prec {
                    rhs = self.binary_expression(next, Some(rhs))?;
                } else {
                    break;
                }
            }
            lhs = node(NodeKind::BinaryOp, vec![lhs, rhs]);
        }
        Ok(lhs)
    }

    // `( type-name )` if present; restores the position otherwise.
    fn try_paren_type_name(&mut self) -> Result<Option<(AstNode, usize)>> {
        let mark = self.pos;
        if !self.at("(") || !self.starts_declaration_at(1) {
            return Ok(None);
        }
        self.pos += 1;
        let typ = self.type_name()?;
        if !self.accept(")") {
            self.pos = mark;
            return Ok(None);
        }
        Ok(Some((typ, mark)))
    }

    fn cast_expression(&mut self) -> Result<AstNode> {
        if let Some((typ, mark)) = self.try_paren_type_name()? {
            if self.at("{") {
                self.pos = mark;
            } else {
                let expr = self.cast_expression()?;
                return Ok(node(NodeKind::Cast, vec![typ, expr]));
            }
        }
        self.unary_expression()
    }

    fn unary_expression(&mut self) -> Result<AstNode> {
        self.reject_unsupported_keyword()?;
        let Some(tok) = self.peek() else {
            return Err(self.unexpected("expression"));
        };
        if tok.category == TokenCategory::Operator {
            match tok.lexeme.as_str() {
                "++" | "--" => {
                    self.pos += 1;
                    let expr = self.unary_expression()?;
                    return Ok(node(NodeKind::UnaryOp, vec![expr]));
                }
                "&" | "*" | "+" | "-" | "~" | "!" => {
                    self.pos += 1;
                    let expr = self.cast_expression()?;
                    return Ok(node(NodeKind::UnaryOp, vec![expr]));
                }
                _ => {}
            }
        }
        if tok.is("sizeof") {
            self.pos += 1;
            if let Some((typ, _)) = self.try_paren_type_name()? {
                return Ok(node(NodeKind::UnaryOp, vec![typ]));
            }
            let expr = self.unary_expression()?;
            return Ok(node(NodeKind::UnaryOp, vec![expr]));
        }
        self.postfix_expression()
    }

    fn postfix_expression(&mut self) -> Result<AstNode> {
        if let Some((typ, mark)) = self.try_paren_type_name()? {
            if self.accept("{") {
                self.push_scope();
                let init = self.initializer_list()?;
                self.accept(",");
                self.expect("}")?;
                self.pop_scope();
                return Ok(node(NodeKind::CompoundLiteral, vec![typ, init]));
            }
            self.pos = mark;
        }
        let mut expr = self.primary_expression()?;
        loop {
            if self.accept("[") {
                let sub = self.expression()?;
                self.expect("]")?;
                expr = node(NodeKind::ArrayRef, vec![expr, sub]);
            } else if self.accept("(") {
                if self.accept(")") {
                    expr = node(NodeKind::FuncCall, vec![expr]);
                } else {
                    let mut args = vec![self.assignment_expression()?];
                    while self.accept(",") {
                        args.push(self.assignment_expression()?);
                    }
                    self.expect(")")?;
                    expr = node(NodeKind::FuncCall, vec![expr, node(NodeKind::ExprList, args)]);
                }
            } else if self.accept(".") || self.accept("->") {
                self.expect_identifier()?;
                expr = node(NodeKind::StructRef, vec![expr, leaf(NodeKind::Id)]);
            } else if self.accept("++") || self.accept("--") {
                expr = node(NodeKind::UnaryOp, vec![expr]);
            } else {
                return Ok(expr);
            }
        }
    }

    fn primary_expression(&mut self) -> Result<AstNode> {
        let Some(tok) = self.peek() else {
            return Err(self.unexpected("expression"));
        };
        match tok.category {
            TokenCategory::Identifier if !self.is_type_name(&tok.lexeme) => {
                self.pos += 1;
                Ok(leaf(NodeKind::Id))
            }
            TokenCategory::Constant => {
                self.pos += 1;
                if tok.is_string() {
                    while self.peek().is_some_and(Token::is_string) {
                        self.pos += 1;
                    }
                }
                Ok(leaf(NodeKind::Constant))
            }
            _ if tok.is("(") => {
                self.pos += 1;
                let expr = self.expression()?;
                self.expect(")")?;
                Ok(expr)
            }
            _ => Err(self.unexpected("expression")),
        }
    }

    // ---- initializers ----

    fn initializer(&mut self) -> Result<AstNode> {
        if self.accept("{") {
            self.push_scope();
            let list = if self.at("}") {
                leaf(NodeKind::InitList)
            } else {
                let list = self.initializer_list()?;
                self.accept(",");
                list
            };
            self.expect("}")?;
            self.pop_scope();
            return Ok(list);
        }
        self.assignment_expression()
    }

    fn initializer_list(&mut self) -> Result<AstNode> {
        let mut items = vec![self.initializer_item()?];
        while self.accept(",") {
            if self.at("}") {
                break;
            }
            items.push(self.initializer_item()?);
        }
        Ok(node(NodeKind::InitList, items))
    }

    fn initializer_item(&mut self) -> Result<AstNode> {
        if self.at("[") || self.at(".") {
            return Err(self.unsupported("designated initializers"));
        }
        self.initializer()
    }
}

/// Regroups the top-level statements of a switch body so that every
/// statement following a `case`/`default` label becomes a child of that
/// label, and stacked labels become siblings.
fn fix_switch_cases(mut switch: AstNode) -> AstNode {
    let body = &mut switch.children[1];
    if body.kind != NodeKind::Compound {
        return switch;
    }
    let mut items: Vec<AstNode> = Vec::new();
    let mut last_case: Option<usize> = None;
    for child in std::mem::take(&mut body.children) {
        if matches!(child.kind, NodeKind::Case | NodeKind::Default) {
            items.push(child);
            extract_nested_case(&mut items);
            last_case = Some(items.len() - 1);
        } else if let Some(i) = last_case {
            items[i].children.push(child);
        } else {
            items.push(child);
        }
    }
    body.children = items;
    switch
}

// The label at the end of `items` holds one statement; while that statement
// is itself a label, hoist it out as the next sibling.
fn extract_nested_case(items: &mut Vec<AstNode>) {
    loop {
        let label = items.last_mut().expect("label just pushed");
        let first = if label.kind == NodeKind::Case { 1 } else { 0 };
        match label.children.get(first) {
            Some(stmt) if matches!(stmt.kind, NodeKind::Case | NodeKind::Default) => {
                let nested = label.children.pop().expect("one statement");
                items.push(nested);
            }
            _ => return,
        }
    }
}
