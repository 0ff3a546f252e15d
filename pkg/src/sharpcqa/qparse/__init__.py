from .lexer import Token, TokenType, tokenize
from .parser import ParsedAtom, SourceDocument, parse_database, parse_document, parse_query, parse_schema
from .report import ClassificationReport, TraceEntry
from .serialize import serialize, serialize_database, serialize_query, serialize_schema, tabulate_trace
