"""Reader for the `.cq` (schema + query) and `.facts` (schema + database) text formats.

Grammar::

    document    := { line-break | declaration | atom-list }
    declaration := "rel" NAME "key" INT "val" INT
    atom-list   := ["{"] atom { ("," | line-break) atom } ["}"]
    atom        := NAME "[" [terms] ";" [terms] "]"
    terms       := term { "," term }
    term        := NAME | "?" NAME | "'" relation "'" | '"' text '"' | "<" ground-term "|" term ">"

A bare NAME is a variable when it starts with one of u, v, w, x, y, z and a symbolic constant otherwise.
Relations without a declaration take the signature of their first use.
"""
from dataclasses import dataclass, field
from typing import Optional

from ..model import (
    Atom,
    Constant,
    Database,
    Fact,
    Query,
    RelationConstant,
    RelationSymbol,
    Schema,
    Term,
    Variable,
    couple,
    is_ground,
)
from ..model.terms import reads_as_variable
from ..sharpcqa_core.exceptions import (
    ArityMismatchError,
    NonGroundFactError,
    QuerySyntaxError,
    SignatureMismatchError,
    UnknownRelationError,
)
from ..sharpcqa_core.logger import log
from .lexer import Token, TokenType, tokenize


@dataclass(frozen=True)
class ParsedAtom:
    """An atom with the position of its relation name"""

    atom: Atom
    line: int
    column: int


@dataclass
class SourceDocument:
    """The content of a query or fact text.

    Attributes:
        declarations (dict[str, RelationSymbol]): the explicitly declared relations.
        relations (dict[str, RelationSymbol]): every relation known after reading, declared or inferred.
        atoms (list[ParsedAtom]): the atoms in reading order, duplicates included.
    """

    declarations: dict[str, RelationSymbol] = field(default_factory=dict)
    relations: dict[str, RelationSymbol] = field(default_factory=dict)
    atoms: list[ParsedAtom] = field(default_factory=list)

    @property
    def schema(self) -> Schema:
        """The schema of all known relations"""
        return Schema(frozenset(self.relations.values()))


class _Parser:
    def __init__(self, text: str, schema: Optional[Schema], allow_inference: bool) -> None:
        self.tokens = tokenize(text)
        self.position = 0
        self.allow_inference = allow_inference
        self.document = SourceDocument()
        for relation in schema or ():
            self.document.relations[relation.name] = relation

    @property
    def current(self) -> Token:
        return self.tokens[self.position]

    def peek(self, offset: int = 1) -> Token:
        return self.tokens[min(self.position + offset, len(self.tokens) - 1)]

    def advance(self) -> Token:
        token = self.current
        if token.type is not TokenType.END:
            self.position += 1
        return token

    def expect(self, token_type: TokenType, what: Optional[str] = None) -> Token:
        token = self.current
        if token.type is not token_type:
            found = "end of input" if token.type is TokenType.END else repr(token.text or str(token.type))
            raise QuerySyntaxError(f"Expected {what or token_type} but found {found}", token.line, token.column)
        return self.advance()

    def skip_separators(self) -> None:
        while self.current.type in (TokenType.NEWLINE, TokenType.COMMA):
            self.advance()

    def parse_document(self) -> SourceDocument:
        braces = 0
        while True:
            self.skip_separators()
            token = self.current
            if token.type is TokenType.END:
                break
            if token.type is TokenType.LBRACE:
                braces += 1
                self.advance()
            elif token.type is TokenType.RBRACE:
                if braces == 0:
                    raise QuerySyntaxError("Unbalanced '}'", token.line, token.column)
                braces -= 1
                self.advance()
            elif token.type is TokenType.NAME and token.text == "rel" and self.peek().type is TokenType.NAME:
                self.parse_declaration()
            else:
                self.document.atoms.append(self.parse_atom())
                if self.current.type not in (TokenType.COMMA, TokenType.NEWLINE, TokenType.RBRACE, TokenType.END):
                    nxt = self.current
                    raise QuerySyntaxError(f"Expected ',' or a line break after an atom, found {nxt.text!r}", nxt.line, nxt.column)
        if braces:
            raise QuerySyntaxError("Unbalanced '{'", self.current.line, self.current.column)
        return self.document

    def parse_int(self, what: str) -> int:
        token = self.expect(TokenType.NAME, what)
        if not token.text.isdigit():
            raise QuerySyntaxError(f"Expected {what} but found {token.text!r}", token.line, token.column)
        return int(token.text)

    def parse_keyword(self, keyword: str) -> None:
        token = self.expect(TokenType.NAME, f"'{keyword}'")
        if token.text != keyword:
            raise QuerySyntaxError(f"Expected '{keyword}' but found {token.text!r}", token.line, token.column)

    def parse_declaration(self) -> None:
        start = self.advance()
        name = self.expect(TokenType.NAME, "a relation name")
        self.parse_keyword("key")
        key_arity = self.parse_int("a key arity")
        self.parse_keyword("val")
        nonkey_arity = self.parse_int("a non-key arity")
        if key_arity < 1:
            raise SignatureMismatchError(f"Relation {name.text} must have a nonempty key", start.line, start.column)
        relation = RelationSymbol(name.text, key_arity, nonkey_arity)
        known = self.document.relations.get(relation.name)
        if known is not None and known != relation:
            raise SignatureMismatchError(f"'{relation}' conflicts with '{known}'", start.line, start.column)
        self.document.declarations[relation.name] = relation
        self.document.relations[relation.name] = relation

    def parse_term(self) -> Term:
        token = self.current
        if token.type is TokenType.NAME:
            self.advance()
            return Variable(token.text) if reads_as_variable(token.text) else Constant(token.text)
        if token.type is TokenType.ESCAPED_VARIABLE:
            self.advance()
            return Variable(token.text)
        if token.type is TokenType.STRING:
            self.advance()
            return Constant(token.text)
        if token.type is TokenType.RELATION_CONSTANT:
            self.advance()
            return RelationConstant(token.text)
        if token.type is TokenType.LANGLE:
            self.advance()
            left = self.parse_term()
            if not is_ground(left):
                raise QuerySyntaxError("The left coordinate of a couple must be a constant", token.line, token.column)
            self.expect(TokenType.PIPE, "'|'")
            right = self.parse_term()
            self.expect(TokenType.RANGLE, "'>'")
            return couple(left, right)  # type: ignore[arg-type]
        found = "end of input" if token.type is TokenType.END else repr(token.text)
        raise QuerySyntaxError(f"Expected a term but found {found}", token.line, token.column)

    def parse_terms(self, closing: TokenType) -> list[Term]:
        terms: list[Term] = []
        if self.current.type is closing:
            return terms
        terms.append(self.parse_term())
        while self.current.type is TokenType.COMMA:
            self.advance()
            terms.append(self.parse_term())
        return terms

    def parse_atom(self) -> ParsedAtom:
        name = self.expect(TokenType.NAME, "a relation name")
        self.expect(TokenType.LBRACKET, "'['")
        key = self.parse_terms(TokenType.SEMICOLON)
        self.expect(TokenType.SEMICOLON, "';' between key and non-key terms")
        nonkey = self.parse_terms(TokenType.RBRACKET)
        self.expect(TokenType.RBRACKET, "']'")
        relation = self.resolve_relation(name, len(key), len(nonkey))
        return ParsedAtom(Atom(relation, tuple(key), tuple(nonkey)), name.line, name.column)

    def resolve_relation(self, name: Token, key_arity: int, nonkey_arity: int) -> RelationSymbol:
        known = self.document.relations.get(name.text)
        if known is None:
            if not self.allow_inference:
                raise UnknownRelationError(f"Unknown relation {name.text}", name.line, name.column)
            if key_arity < 1:
                raise SignatureMismatchError(f"{name.text} must have at least one key term", name.line, name.column)
            known = RelationSymbol(name.text, key_arity, nonkey_arity)
            log.debug(f"Inferred '{known}' from its first use at {name.line}:{name.column}")
            self.document.relations[name.text] = known
            return known
        if known.arity != key_arity + nonkey_arity:
            raise ArityMismatchError(
                f"{name.text} has arity {known.arity}, but {key_arity + nonkey_arity} terms were given",
                name.line,
                name.column,
            )
        if known.key_arity != key_arity:
            raise SignatureMismatchError(
                f"{name.text} has {known.key_arity} key position(s), but {key_arity} key term(s) were given",
                name.line,
                name.column,
            )
        return known


def parse_document(text: str, schema: Optional[Schema] = None, allow_inference: bool = True) -> SourceDocument:
    """Reads declarations and atoms from `text` without interpreting them as a query or a database.

    Args:
        text (str): the source text.
        schema (Optional[Schema], optional): relations known before reading. Defaults to `None`.
        allow_inference (bool, optional): whether undeclared relations take the signature of their first use.
            Defaults to `True`.

    Raises:
        ParseError: on any syntax or signature error, with the position of the offending token.

    Returns:
        SourceDocument: the parsed content.
    """
    return _Parser(text, schema, allow_inference).parse_document()


def parse_schema(text: str) -> Schema:
    """Reads a schema made of `rel NAME key K val M` lines.

    Raises:
        QuerySyntaxError: if the text contains atoms.
    """
    document = parse_document(text)
    if document.atoms:
        first = document.atoms[0]
        raise QuerySyntaxError("A schema text may only contain declarations", first.line, first.column)
    return document.schema


def parse_query(text: str, schema: Optional[Schema] = None) -> Query:
    """Reads a Boolean conjunctive query, merging duplicate atoms.

    Args:
        text (str): declarations and atoms, e.g. "R[x; y], S[y;]".
        schema (Optional[Schema], optional): relations known beforehand. Defaults to `None`.

    Raises:
        ParseError: on syntax errors and signature mismatches.

    Returns:
        Query: the query over the declared, given and inferred relations.
    """
    document = parse_document(text, schema)
    return Query(frozenset(parsed.atom for parsed in document.atoms), document.schema)


def parse_database(text: str, schema: Optional[Schema] = None, allow_inference: Optional[bool] = None) -> Database:
    """Reads a database, one fact per line.

    Args:
        text (str): declarations and facts, e.g. "R[a; 1]\\nS[1;]".
        schema (Optional[Schema], optional): when given, every fact must use one of its relations or a
            relation declared in `text`. Defaults to `None`, which infers undeclared relations.
        allow_inference (Optional[bool], optional): whether relations outside of `schema` take the signature of
            their first use. Defaults to `None`, which allows inference only when no schema is given.

    Raises:
        NonGroundFactError: if a fact contains a variable.
        UnknownRelationError: if a fact uses a relation outside of `schema` and inference is off.
        ParseError: on other syntax errors and signature mismatches.

    Returns:
        Database: the database over the known relations.
    """
    if allow_inference is None:
        allow_inference = schema is None
    document = parse_document(text, schema, allow_inference)
    facts: list[Fact] = []
    for parsed in document.atoms:
        if not parsed.atom.is_ground:
            variables = ", ".join(sorted(str(v) for v in parsed.atom.variables))
            raise NonGroundFactError(f"{parsed.atom} contains variable(s) {variables}", parsed.line, parsed.column)
        facts.append(Fact.from_atom(parsed.atom))
    return Database(frozenset(facts), document.schema)
