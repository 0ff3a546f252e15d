import re
from dataclasses import dataclass
from enum import Enum

from ..sharpcqa_core.exceptions import QuerySyntaxError


class TokenType(Enum):
    """Token types of the query/fact text format"""

    NEWLINE = "newline"
    LBRACE = "{"
    RBRACE = "}"
    LBRACKET = "["
    RBRACKET = "]"
    SEMICOLON = ";"
    COMMA = ","
    LANGLE = "<"
    PIPE = "|"
    RANGLE = ">"
    ESCAPED_VARIABLE = "?name"
    RELATION_CONSTANT = "'name'"
    STRING = '"text"'
    NAME = "name"
    END = "end of input"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Token:
    """A lexeme with its 1-based source position"""

    type: TokenType
    text: str
    line: int
    column: int


_TOKEN_SPEC = [
    ("SKIP", r"[ \t\r]+|%[^\n]*"),
    ("NEWLINE", r"\n"),
    ("LBRACE", r"\{"),
    ("RBRACE", r"\}"),
    ("LBRACKET", r"\["),
    ("RBRACKET", r"\]"),
    ("SEMICOLON", r";"),
    ("COMMA", r","),
    ("LANGLE", r"<"),
    ("PIPE", r"\|"),
    ("RANGLE", r">"),
    ("ESCAPED_VARIABLE", r"\?[A-Za-z0-9_][A-Za-z0-9_#]*"),
    ("RELATION_CONSTANT", r"'[^'\n]+'"),
    ("STRING", r'"(?:[^"\\\n]|\\.)*"'),
    ("NAME", r"[A-Za-z0-9_][A-Za-z0-9_#]*"),
    ("MISMATCH", r"."),
]
_TOKEN_RE = re.compile("|".join(f"(?P<{name}>{pattern})" for name, pattern in _TOKEN_SPEC))


_ESCAPES = {"n": "\n"}


def _unescape(literal: str) -> str:
    return re.sub(r"\\(.)", lambda m: _ESCAPES.get(m.group(1), m.group(1)), literal[1:-1])


def tokenize(text: str) -> list[Token]:
    """Splits `text` into tokens, ending with a single END token.

    Raises:
        QuerySyntaxError: on a character that starts no token.
    """
    tokens: list[Token] = []
    line, line_start = 1, 0
    for match in _TOKEN_RE.finditer(text):
        kind = match.lastgroup
        lexeme = match.group()
        column = match.start() - line_start + 1
        if kind == "SKIP":
            continue
        if kind == "MISMATCH":
            raise QuerySyntaxError(f"Unexpected character {lexeme!r}", line, column)
        token_type = TokenType[kind]  # type: ignore[misc]
        if token_type is TokenType.ESCAPED_VARIABLE:
            lexeme = lexeme[1:]
        elif token_type in (TokenType.RELATION_CONSTANT, TokenType.STRING):
            lexeme = _unescape(lexeme)
        tokens.append(Token(token_type, lexeme, line, column))
        if kind == "NEWLINE":
            line, line_start = line + 1, match.end()
    tokens.append(Token(TokenType.END, "", line, len(text) - line_start + 1))
    return tokens
