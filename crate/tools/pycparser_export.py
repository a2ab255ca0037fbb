#!/usr/bin/env python3
"""Dump C sources as canonical AST interchange documents using pycparser.

Used to produce the golden fixtures and the bundled corpus file. The output
format matches `dump_ast`: compact JSON, keys "kind" then "children".

    pycparser_export.py FILE.c            -> prints one document
    pycparser_export.py --corpus ROOT OUT -> writes a JSONL corpus
"""
import json
import os
import subprocess
import sys

from pycparser import c_parser

VOCAB = [
    "ID", "Constant", "BinaryOp", "UnaryOp", "ArrayRef", "Assignment",
    "StructRef", "ExprList", "FuncCall", "Cast", "TernaryOp",
    "CompoundLiteral", "If", "For", "While", "DoWhile", "Break", "Continue",
    "Case", "Default", "Switch", "Goto", "Label", "Return", "Compound",
    "EmptyStatement", "FuncDef", "Decl", "DeclList", "TypeDecl", "FuncDecl",
    "ArrayDecl", "PtrDecl", "ParamList", "IdentifierType", "Typedef",
    "Typename", "Struct", "Union", "Enum", "Enumerator", "EnumeratorList",
    "InitList", "Root",
]
KNOWN = set(VOCAB)


def convert(node):
    kind = type(node).__name__
    if kind == "FileAST":
        kind = "Root"
    if kind not in KNOWN:
        raise ValueError("node kind outside vocabulary: " + kind)
    return {"kind": kind, "children": [convert(c) for _, c in node.children()]}


def dump(tree):
    return json.dumps(tree, separators=(",", ":"))


def preprocess(text):
    """Strip comments the way the C preprocessor does; pycparser rejects them."""
    result = subprocess.run(
        ["cpp", "-P", "-undef", "-nostdinc", "-std=c99", "-"],
        input=text, capture_output=True, text=True, check=True,
    )
    return result.stdout


def parse_source(text, name):
    return convert(c_parser.CParser().parse(preprocess(text), name))


def main(argv):
    if len(argv) >= 2 and argv[1] == "--corpus":
        root, out = argv[2], argv[3]
        lines = []
        for label in sorted(os.listdir(root)):
            d = os.path.join(root, label)
            if not os.path.isdir(d):
                continue
            for fname in sorted(os.listdir(d)):
                if not fname.endswith(".c"):
                    continue
                path = os.path.join(d, fname)
                with open(path, encoding="utf-8") as f:
                    tree = parse_source(f.read(), path)
                rec = {"label": label, "source_id": label + "/" + fname, "ast": tree}
                lines.append(json.dumps(rec, separators=(",", ":")))
        with open(out, "w", encoding="utf-8") as f:
            for line in lines:
                f.write(line + "\n")
        return 0
    for path in argv[1:]:
        with open(path, encoding="utf-8") as f:
            print(dump(parse_source(f.read(), path)))
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv))
