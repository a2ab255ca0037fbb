#!/usr/bin/env python3
"""Generate the bundled program-classification corpus.

Four task families (sum, sorting, matrix, string), each written in several
algorithmic variants and coding styles, in the spirit of online-judge
submissions. Programs contain no preprocessor lines.

    gen_corpus.py OUT_DIR [--per-class N] [--seed S]
"""
import argparse
import os
import random


class Style:
    def __init__(self, rng):
        self.rng = rng
        self.loop = rng.choice(["for", "for", "while"])
        self.decl_in_for = rng.random() < 0.4
        self.helper = rng.random() < 0.5
        self.read_input = rng.random() < 0.6
        self.braces = rng.random() < 0.7
        self.comment = rng.random() < 0.3
        self.long_type = rng.choice(["int", "int", "long", "long long"])
        self.idx = rng.choice(["i", "k", "idx", "p"])
        self.jdx = rng.choice(["j", "q", "col", "m"]) if self.idx != "j" else "q"
        self.n = rng.choice(["n", "len", "size", "cnt", "num"])
        self.arr = rng.choice(["a", "arr", "v", "data", "nums", "x"])
        self.tmp = rng.choice(["t", "tmp", "temp", "sw"])

    def pick(self, *options):
        return self.rng.choice(options)

    def block(self, body, indent):
        """Wrap a statement list as a loop/if body."""
        pad = " " * indent
        lines = [l for l in body.split("\n") if l.strip()]
        if len(lines) == 1 and not self.braces:
            return "\n" + pad + "    " + lines[0].strip() + "\n"
        inner = "\n".join(pad + "    " + l.strip() if not l.startswith(" ") else pad + "    " + l for l in lines)
        return " {\n" + inner + "\n" + pad + "}\n"

    def count_loop(self, var, start, bound, body, indent=4, step="++"):
        pad = " " * indent
        inc = f"{var}++" if step == "++" else f"{var} += {step}"
        if self.loop == "for":
            init = f"int {var} = {start}" if self.decl_in_for else f"{var} = {start}"
            return f"{pad}for ({init}; {var} < {bound}; {inc})" + self.block(body, indent)
        body_lines = body + f"\n{inc};"
        return f"{pad}{var} = {start};\n{pad}while ({var} < {bound})" + " {\n" + "\n".join(
            pad + "    " + l.strip() for l in body_lines.split("\n") if l.strip()
        ) + "\n" + pad + "}\n"

    def needs_decl(self, *names):
        if self.loop == "for" and self.decl_in_for:
            return ""
        return "    int " + ", ".join(names) + ";\n"


def literal_array(rng, length, lo=-20, hi=99):
    return "{" + ", ".join(str(rng.randint(lo, hi)) for _ in range(length)) + "}"


def read_array(s, indent=4):
    return s.count_loop(s.idx, 0, s.n, f'scanf("%d", &{s.arr}[{s.idx}]);', indent)


def comment(s, text):
    if not s.comment:
        return ""
    return s.pick(f"/* {text} */\n", f"// {text}\n")


# ---------------------------------------------------------------- sum

def sum_array(s):
    r = s.rng
    acc = s.pick("sum", "total", "s", "res")
    t = s.long_type
    out = comment(s, "sum of the elements")
    if s.helper:
        out += f"{t} {s.pick('sum_of', 'add_all', 'total_of')}(int *{s.arr}, int {s.n})\n{{\n"
        out += f"    {t} {acc} = 0;\n" + s.needs_decl(s.idx)
        out += s.count_loop(s.idx, 0, s.n, f"{acc} += {s.arr}[{s.idx}];")
        out += f"    return {acc};\n}}\n\n"
        fname = out.split("(")[0].split()[-1]
        out += "int main()\n{\n"
        if s.read_input:
            out += f"    int {s.n}, {s.arr}[1000];\n" + s.needs_decl(s.idx)
            out += f'    scanf("%d", &{s.n});\n' + read_array(s)
        else:
            k = r.randint(4, 12)
            out += f"    int {s.arr}[{k}] = {literal_array(r, k)};\n    int {s.n} = {k};\n"
        out += f'    printf("%lld\\n", ({t}){fname}({s.arr}, {s.n}));\n    return 0;\n}}\n'
    else:
        out += "int main(void)\n{\n"
        if s.read_input:
            out += f"    int {s.n}, {s.arr}[500];\n"
        else:
            k = r.randint(4, 12)
            out += f"    int {s.arr}[] = {literal_array(r, k)};\n    int {s.n} = sizeof({s.arr}) / sizeof({s.arr}[0]);\n"
        out += f"    {t} {acc} = 0;\n" + s.needs_decl(s.idx)
        if s.read_input:
            out += f'    scanf("%d", &{s.n});\n' + read_array(s)
        out += s.count_loop(s.idx, 0, s.n, f"{acc} = {acc} + {s.arr}[{s.idx}];")
        out += f'    printf("%d\\n", (int){acc});\n    return 0;\n}}\n'
    return out


def sum_digits(s):
    d = s.pick("d", "digit", "r")
    num = s.pick("x", "m", "val", "number")
    acc = s.pick("sum", "s", "total")
    out = comment(s, "digit sum")
    loop = s.pick("while", "do")
    if loop == "while":
        core = f"    while ({num} > 0) {{\n        {d} = {num} % 10;\n        {acc} += {d};\n        {num} /= 10;\n    }}\n"
    else:
        core = f"    do {{\n        {acc} += {num} % 10;\n        {num} = {num} / 10;\n    }} while ({num} != 0);\n"
    if s.helper:
        out += f"int digit_sum(int {num})\n{{\n    int {acc} = 0, {d};\n" + core + f"    return {acc};\n}}\n\n"
        out += f"int main()\n{{\n    int {num};\n"
        out += f'    while (scanf("%d", &{num}) == 1)\n        printf("%d\\n", digit_sum({num}));\n    return 0;\n}}\n'
    else:
        out += f"int main()\n{{\n    int {num}, {acc} = 0, {d};\n    scanf(\"%d\", &{num});\n"
        out += f"    if ({num} < 0)\n        {num} = -{num};\n" + core
        out += f'    printf("%d\\n", {acc});\n    return 0;\n}}\n'
    return out


def sum_range(s):
    acc = s.pick("sum", "s", "ans")
    t = s.long_type
    out = comment(s, "sum from 1 to n")
    variant = s.pick("loop", "formula", "odd", "even", "squares")
    body = {
        "loop": f"{acc} += {s.idx};",
        "odd": f"if ({s.idx} % 2 == 1)\n{acc} += {s.idx};",
        "even": f"if ({s.idx} % 2 == 0) {acc} = {acc} + {s.idx};",
        "squares": f"{acc} += ({t}){s.idx} * {s.idx};",
    }
    out += "int main()\n{\n" + f"    int {s.n};\n    {t} {acc} = 0;\n"
    out += f'    scanf("%d", &{s.n});\n'
    if variant == "formula":
        out += f"    {acc} = ({t}){s.n} * ({s.n} + 1) / 2;\n"
    else:
        out += s.needs_decl(s.idx)
        out += s.count_loop(s.idx, 1, f"{s.n} + 1", body[variant])
    out += f'    printf("%lld\\n", {acc});\n    return 0;\n}}\n'
    return out


def sum_pairs(s):
    out = comment(s, "count pairs with a given sum")
    target = s.pick("target", "k", "goal")
    c = s.pick("count", "c", "pairs")
    inner = f"if ({s.arr}[{s.idx}] + {s.arr}[{s.jdx}] == {target})\n{c}++;"
    out += f"int main()\n{{\n    int {s.n}, {target}, {s.arr}[200], {c} = 0;\n" + s.needs_decl(s.idx, s.jdx)
    out += f'    scanf("%d %d", &{s.n}, &{target});\n' + read_array(s)
    inner_loop = s.count_loop(s.jdx, f"{s.idx} + 1", s.n, inner, 8)
    out += s.count_loop(s.idx, 0, s.n, inner_loop.strip("\n"), 4)
    out += f'    printf("%d\\n", {c});\n    return 0;\n}}\n'
    return out


def prefix_sums(s):
    pre = s.pick("pre", "prefix", "ps")
    q = s.pick("q", "queries", "m")
    l, r = s.pick(("l", "r"), ("lo", "hi"), ("from", "to"))
    t = s.long_type
    out = comment(s, "range sums with prefix sums")
    out += f"{t} {pre}[100005];\n\nint main()\n{{\n    int {s.n}, {q}, {l}, {r}, x;\n" + s.needs_decl(s.idx)
    out += f"    scanf(\"%d\", &{s.n});\n    {pre}[0] = 0;\n"
    out += s.count_loop(s.idx, 1, f"{s.n} + 1", f'scanf("%d", &x);\n{pre}[{s.idx}] = {pre}[{s.idx} - 1] + x;')
    out += f"    scanf(\"%d\", &{q});\n    while ({q}--) {{\n        scanf(\"%d %d\", &{l}, &{r});\n"
    out += f'        printf("%lld\\n", {pre}[{r}] - {pre}[{l} - 1]);\n    }}\n    return 0;\n}}\n'
    return out


def sum_struct(s):
    out = comment(s, "total score of all students")
    st = s.pick("student", "rec", "item")
    out += f"struct {st} {{\n    char name[20];\n    int score;\n}};\n\n"
    out += f"int main()\n{{\n    struct {st} list[50];\n    int {s.n}, total = 0;\n" + s.needs_decl(s.idx)
    out += f'    scanf("%d", &{s.n});\n'
    out += s.count_loop(s.idx, 0, s.n, f'scanf("%s %d", list[{s.idx}].name, &list[{s.idx}].score);\ntotal += list[{s.idx}].score;')
    out += f'    printf("%d %.2f\\n", total, (double)total / {s.n});\n    return 0;\n}}\n'
    return out


# ---------------------------------------------------------------- sorting

def swap_fn(s):
    return f"void swap(int *x, int *y)\n{{\n    int {s.tmp} = *x;\n    *x = *y;\n    *y = {s.tmp};\n}}\n\n"


def swap_inline(s, a, b):
    if s.helper:
        return f"swap(&{a}, &{b});"
    return f"{s.tmp} = {a};\n{a} = {b};\n{b} = {s.tmp};"


def print_array(s, indent=4):
    return s.count_loop(s.idx, 0, s.n, f'printf("%d ", {s.arr}[{s.idx}]);', indent) + " " * indent + 'printf("\\n");\n'


def sort_main_prologue(s, extra=""):
    out = f"int main()\n{{\n    int {s.n}, {s.arr}[1000]{extra};\n"
    if not s.helper:
        out += f"    int {s.tmp};\n"
    out += s.needs_decl(s.idx, s.jdx)
    out += f'    scanf("%d", &{s.n});\n' + read_array(s)
    return out


def bubble_sort(s):
    out = comment(s, "bubble sort")
    if s.helper:
        out += swap_fn(s)
    desc = s.rng.random() < 0.3
    cmp = ">" if not desc else "<"
    a, b = f"{s.arr}[{s.jdx}]", f"{s.arr}[{s.jdx} + 1]"
    inner = f"if ({a} {cmp} {b})" + s.block(swap_inline(s, a, b), 12).rstrip("\n")
    out += sort_main_prologue(s)
    inner_loop = s.count_loop(s.jdx, 0, f"{s.n} - 1 - {s.idx}", inner, 8)
    out += s.count_loop(s.idx, 0, f"{s.n} - 1", inner_loop.strip("\n"), 4)
    out += print_array(s) + "    return 0;\n}\n"
    return out


def selection_sort(s):
    out = comment(s, "selection sort")
    if s.helper:
        out += swap_fn(s)
    mi = s.pick("min", "mi", "best", "pos")
    a, b = f"{s.arr}[{s.idx}]", f"{s.arr}[{mi}]"
    out += sort_main_prologue(s, f", {mi}")
    inner = f"if ({s.arr}[{s.jdx}] < {s.arr}[{mi}])\n{mi} = {s.jdx};"
    inner_loop = s.count_loop(s.jdx, f"{s.idx} + 1", s.n, inner, 8)
    body = f"{mi} = {s.idx};\n" + inner_loop.strip("\n") + f"\nif ({mi} != {s.idx})" + s.block(swap_inline(s, a, b), 8).rstrip("\n")
    out += s.count_loop(s.idx, 0, f"{s.n} - 1", body, 4)
    out += print_array(s) + "    return 0;\n}\n"
    return out


def insertion_sort(s):
    out = comment(s, "insertion sort")
    key = s.pick("key", "cur", "val")
    fn = f"void insertion_sort(int {s.arr}[], int {s.n})\n{{\n    int {s.idx}, {s.jdx}, {key};\n"
    fn += f"    for ({s.idx} = 1; {s.idx} < {s.n}; {s.idx}++) {{\n        {key} = {s.arr}[{s.idx}];\n        {s.jdx} = {s.idx} - 1;\n"
    fn += f"        while ({s.jdx} >= 0 && {s.arr}[{s.jdx}] > {key}) {{\n            {s.arr}[{s.jdx} + 1] = {s.arr}[{s.jdx}];\n            {s.jdx}--;\n        }}\n"
    fn += f"        {s.arr}[{s.jdx} + 1] = {key};\n    }}\n}}\n\n"
    out += fn
    out += f"int main()\n{{\n    int {s.n}, {s.arr}[1000];\n" + s.needs_decl(s.idx)
    out += f'    scanf("%d", &{s.n});\n' + read_array(s)
    out += f"    insertion_sort({s.arr}, {s.n});\n" + print_array(s) + "    return 0;\n}\n"
    return out


def qsort_sort(s):
    out = comment(s, "sort with the library qsort")
    cmpname = s.pick("cmp", "compare", "by_value")
    x, y = s.pick(("a", "b"), ("p", "q"), ("left", "right"))
    if s.rng.random() < 0.5:
        body = f"    return *(const int *){x} - *(const int *){y};\n"
    else:
        body = f"    int u = *(int *){x}, w = *(int *){y};\n    if (u < w)\n        return -1;\n    return u > w;\n"
    out += f"int {cmpname}(const void *{x}, const void *{y})\n{{\n{body}}}\n\n"
    out += f"int main()\n{{\n    int {s.n}, {s.arr}[100000];\n" + s.needs_decl(s.idx)
    out += f'    scanf("%d", &{s.n});\n' + read_array(s)
    out += f"    qsort({s.arr}, {s.n}, sizeof(int), {cmpname});\n" + print_array(s) + "    return 0;\n}\n"
    return out


def counting_sort(s):
    out = comment(s, "counting sort for small values")
    cnt = s.pick("cnt", "freq", "bucket")
    v = s.pick("v", "val", "c")
    out += f"int {cnt}[1001];\n\nint main()\n{{\n    int {s.n}, {v};\n" + s.needs_decl(s.idx, s.jdx)
    out += f'    scanf("%d", &{s.n});\n'
    out += s.count_loop(s.idx, 0, s.n, f'scanf("%d", &{v});\n{cnt}[{v}]++;')
    inner = s.count_loop(s.jdx, 0, f"{cnt}[{v}]", f'printf("%d ", {v});', 8)
    out += s.count_loop(v, 0, 1001, inner.strip("\n"), 4)
    out += '    printf("\\n");\n    return 0;\n}\n'
    return out


def merge_sort(s):
    out = comment(s, "merge sort")
    buf = s.pick("buf", "aux", "tmp2")
    out += f"int {buf}[100000];\n\n"
    out += f"void merge_sort(int *{s.arr}, int lo, int hi)\n{{\n    int mid, {s.idx}, {s.jdx}, k;\n"
    out += "    if (hi - lo < 2)\n        return;\n    mid = (lo + hi) / 2;\n"
    out += f"    merge_sort({s.arr}, lo, mid);\n    merge_sort({s.arr}, mid, hi);\n"
    out += f"    {s.idx} = lo;\n    {s.jdx} = mid;\n    k = lo;\n"
    out += f"    while ({s.idx} < mid && {s.jdx} < hi) {{\n        if ({s.arr}[{s.idx}] <= {s.arr}[{s.jdx}])\n            {buf}[k++] = {s.arr}[{s.idx}++];\n        else\n            {buf}[k++] = {s.arr}[{s.jdx}++];\n    }}\n"
    out += f"    while ({s.idx} < mid)\n        {buf}[k++] = {s.arr}[{s.idx}++];\n"
    out += f"    while ({s.jdx} < hi)\n        {buf}[k++] = {s.arr}[{s.jdx}++];\n"
    out += f"    for (k = lo; k < hi; k++)\n        {s.arr}[k] = {buf}[k];\n}}\n\n"
    out += f"int main()\n{{\n    int {s.n}, {s.arr}[100000];\n" + s.needs_decl(s.idx)
    out += f'    scanf("%d", &{s.n});\n' + read_array(s)
    out += f"    merge_sort({s.arr}, 0, {s.n});\n" + print_array(s) + "    return 0;\n}\n"
    return out


def sort_strings_by_len(s):
    out = comment(s, "sort records by key")
    st = s.pick("node", "entry", "pair")
    out += f"typedef struct {{\n    int key;\n    int id;\n}} {st};\n\n"
    out += f"int main()\n{{\n    {st} {s.arr}[500], {s.tmp};\n    int {s.n};\n" + s.needs_decl(s.idx, s.jdx)
    out += f'    scanf("%d", &{s.n});\n'
    out += s.count_loop(s.idx, 0, s.n, f'scanf("%d", &{s.arr}[{s.idx}].key);\n{s.arr}[{s.idx}].id = {s.idx} + 1;')
    a, b = f"{s.arr}[{s.jdx}]", f"{s.arr}[{s.jdx} + 1]"
    inner = f"if ({a}.key > {b}.key)" + s.block(f"{s.tmp} = {a};\n{a} = {b};\n{b} = {s.tmp};", 12).rstrip("\n")
    inner_loop = s.count_loop(s.jdx, 0, f"{s.n} - 1 - {s.idx}", inner, 8)
    out += s.count_loop(s.idx, 0, f"{s.n} - 1", inner_loop.strip("\n"), 4)
    out += s.count_loop(s.idx, 0, s.n, f'printf("%d ", {s.arr}[{s.idx}].id);')
    out += "    return 0;\n}\n"
    return out


# ---------------------------------------------------------------- matrix

def dims(s):
    return s.pick(("r", "c"), ("rows", "cols"), ("n", "m"), ("h", "w"))


def matrix_read(s, name, rows, cols, indent=4):
    inner = s.count_loop(s.jdx, 0, cols, f'scanf("%d", &{name}[{s.idx}][{s.jdx}]);', indent + 4)
    return s.count_loop(s.idx, 0, rows, inner.strip("\n"), indent)


def matrix_print(s, name, rows, cols, indent=4):
    inner = s.count_loop(s.jdx, 0, cols, f'printf("%d ", {name}[{s.idx}][{s.jdx}]);', indent + 4)
    return s.count_loop(s.idx, 0, rows, inner.strip("\n") + '\nprintf("\\n");', indent)


def matrix_multiply(s):
    out = comment(s, "matrix product")
    A, B, C = s.pick(("a", "b", "c"), ("x", "y", "z"), ("m1", "m2", "res"))
    k = s.pick("k", "t", "l")
    out += f"int {A}[100][100], {B}[100][100], {C}[100][100];\n\nint main()\n{{\n"
    out += f"    int n, m, p, {s.idx}, {s.jdx}, {k};\n"
    out += '    scanf("%d %d %d", &n, &m, &p);\n'
    out += matrix_read(s, A, "n", "m") + matrix_read(s, B, "m", "p")
    body = f"{C}[{s.idx}][{s.jdx}] = 0;\nfor ({k} = 0; {k} < m; {k}++)\n    {C}[{s.idx}][{s.jdx}] += {A}[{s.idx}][{k}] * {B}[{k}][{s.jdx}];"
    inner = s.count_loop(s.jdx, 0, "p", body, 8)
    out += s.count_loop(s.idx, 0, "n", inner.strip("\n"), 4)
    out += matrix_print(s, C, "n", "p") + "    return 0;\n}\n"
    return out.replace(f"int {s.idx} = ", f"{s.idx} = ").replace(f"int {s.jdx} = ", f"{s.jdx} = ")


def matrix_transpose(s):
    out = comment(s, "transpose")
    r, c = dims(s)
    M, T = s.pick(("mat", "tr"), ("a", "b"), ("g", "h"))
    out += f"int main()\n{{\n    int {r}, {c}, {M}[50][50], {T}[50][50];\n" + s.needs_decl(s.idx, s.jdx)
    out += f'    scanf("%d %d", &{r}, &{c});\n' + matrix_read(s, M, r, c)
    inner = s.count_loop(s.jdx, 0, c, f"{T}[{s.jdx}][{s.idx}] = {M}[{s.idx}][{s.jdx}];", 8)
    out += s.count_loop(s.idx, 0, r, inner.strip("\n"), 4)
    out += matrix_print(s, T, c, r) + "    return 0;\n}\n"
    return out


def matrix_add(s):
    out = comment(s, "matrix sum")
    r, c = dims(s)
    op = s.pick("+", "-")
    out += f"int main()\n{{\n    int {r}, {c};\n    int a[20][20], b[20][20], sum[20][20];\n" + s.needs_decl(s.idx, s.jdx)
    out += f'    scanf("%d%d", &{r}, &{c});\n' + matrix_read(s, "a", r, c) + matrix_read(s, "b", r, c)
    inner = s.count_loop(s.jdx, 0, c, f"sum[{s.idx}][{s.jdx}] = a[{s.idx}][{s.jdx}] {op} b[{s.idx}][{s.jdx}];", 8)
    out += s.count_loop(s.idx, 0, r, inner.strip("\n"), 4)
    out += matrix_print(s, "sum", r, c) + "    return 0;\n}\n"
    return out


def matrix_diagonal(s):
    out = comment(s, "diagonal sums of a square matrix")
    g = s.pick("g", "mat", "sq")
    d1, d2 = s.pick(("d1", "d2"), ("main_d", "anti_d"), ("p", "q"))
    out += f"int {g}[100][100];\n\nint main()\n{{\n    int {s.n}, {d1} = 0, {d2} = 0;\n" + s.needs_decl(s.idx, s.jdx)
    out += f'    scanf("%d", &{s.n});\n' + matrix_read(s, g, s.n, s.n)
    out += s.count_loop(s.idx, 0, s.n, f"{d1} += {g}[{s.idx}][{s.idx}];\n{d2} += {g}[{s.idx}][{s.n} - 1 - {s.idx}];")
    out += f'    printf("%d %d\\n", {d1}, {d2});\n    return 0;\n}}\n'
    return out


def matrix_row_max(s):
    out = comment(s, "largest element of each row")
    r, c = dims(s)
    best = s.pick("best", "mx", "big")
    out += f"int main()\n{{\n    int {r}, {c}, a[30][30], {best};\n" + s.needs_decl(s.idx, s.jdx)
    out += f'    scanf("%d %d", &{r}, &{c});\n' + matrix_read(s, "a", r, c)
    inner = s.count_loop(s.jdx, 1, c, f"if (a[{s.idx}][{s.jdx}] > {best})\n{best} = a[{s.idx}][{s.jdx}];", 8)
    body = f"{best} = a[{s.idx}][0];\n" + inner.strip("\n") + f'\nprintf("%d\\n", {best});'
    out += s.count_loop(s.idx, 0, r, body, 4)
    out += "    return 0;\n}\n"
    return out


def matrix_det(s):
    out = comment(s, "determinant of a 3 by 3 matrix")
    m = s.pick("m", "a", "mat")
    if s.helper:
        out += f"int det3(int {m}[3][3])\n{{\n"
        out += f"    return {m}[0][0] * ({m}[1][1] * {m}[2][2] - {m}[1][2] * {m}[2][1])\n"
        out += f"         - {m}[0][1] * ({m}[1][0] * {m}[2][2] - {m}[1][2] * {m}[2][0])\n"
        out += f"         + {m}[0][2] * ({m}[1][0] * {m}[2][1] - {m}[1][1] * {m}[2][0]);\n}}\n\n"
        out += f"int main()\n{{\n    int {m}[3][3];\n" + s.needs_decl(s.idx, s.jdx)
        out += matrix_read(s, m, 3, 3)
        out += f'    printf("%d\\n", det3({m}));\n    return 0;\n}}\n'
    else:
        out += f"int main()\n{{\n    int {m}[3][3], d = 0, sgn = 1;\n" + s.needs_decl(s.idx, s.jdx)
        out += matrix_read(s, m, 3, 3)
        term = f"d += sgn * {m}[0][{s.idx}] * ({m}[1][({s.idx} + 1) % 3] * {m}[2][({s.idx} + 2) % 3] - {m}[1][({s.idx} + 2) % 3] * {m}[2][({s.idx} + 1) % 3]);"
        out += s.count_loop(s.idx, 0, 3, term)
        out += f'    printf("%d\\n", d);\n    return 0;\n}}\n'
        out = out.replace("d += sgn * ", "d += ")
    return out


def matrix_spiral(s):
    out = comment(s, "print a matrix in spiral order")
    out += "int a[50][50];\n\nint main()\n{\n    int r, c, top, bottom, left, right, i, j;\n"
    out += '    scanf("%d %d", &r, &c);\n'
    out += "    for (i = 0; i < r; i++)\n        for (j = 0; j < c; j++)\n            scanf(\"%d\", &a[i][j]);\n"
    out += "    top = 0;\n    bottom = r - 1;\n    left = 0;\n    right = c - 1;\n"
    out += "    while (top <= bottom && left <= right) {\n"
    out += "        for (j = left; j <= right; j++)\n            printf(\"%d \", a[top][j]);\n        top++;\n"
    out += "        for (i = top; i <= bottom; i++)\n            printf(\"%d \", a[i][right]);\n        right--;\n"
    out += "        if (top <= bottom) {\n            for (j = right; j >= left; j--)\n                printf(\"%d \", a[bottom][j]);\n            bottom--;\n        }\n"
    out += "        if (left <= right) {\n            for (i = bottom; i >= top; i--)\n                printf(\"%d \", a[i][left]);\n            left++;\n        }\n    }\n"
    out += "    return 0;\n}\n"
    return out


# ---------------------------------------------------------------- string

def str_decl(s):
    return s.pick("s", "str", "buf", "line", "word")


def string_length(s):
    st = str_decl(s)
    ln = s.pick("len", "l", "count")
    out = comment(s, "length of a string")
    if s.helper:
        out += f"int my_strlen(const char *{st})\n{{\n    int {ln} = 0;\n"
        out += s.pick(
            f"    while ({st}[{ln}] != '\\0')\n        {ln}++;\n",
            f"    while (*{st}++)\n        {ln}++;\n",
        )
        out += f"    return {ln};\n}}\n\n"
        out += f"int main()\n{{\n    char {st}[1000];\n    scanf(\"%s\", {st});\n"
        out += f'    printf("%d\\n", my_strlen({st}));\n    return 0;\n}}\n'
    else:
        out += f"int main()\n{{\n    char {st}[1000];\n    int {ln};\n    scanf(\"%s\", {st});\n"
        out += f"    for ({ln} = 0; {st}[{ln}]; {ln}++)\n        ;\n"
        out += f'    printf("%d\\n", {ln});\n    return 0;\n}}\n'
    return out


def string_reverse(s):
    st = str_decl(s)
    out = comment(s, "reverse a string in place")
    l, r = s.pick(("l", "r"), ("lo", "hi"), ("i", "j"))
    c = s.pick("c", "ch", "t")
    swap = f"        {c} = {st}[{l}];\n        {st}[{l}] = {st}[{r}];\n        {st}[{r}] = {c};\n"
    if s.helper:
        out += f"void reverse(char *{st})\n{{\n    int {l} = 0, {r} = strlen({st}) - 1;\n    char {c};\n"
        out += f"    while ({l} < {r}) {{\n" + swap + f"        {l}++;\n        {r}--;\n    }}\n}}\n\n"
        out += f"int main()\n{{\n    char {st}[256];\n    scanf(\"%s\", {st});\n    reverse({st});\n"
        out += f'    printf("%s\\n", {st});\n    return 0;\n}}\n'
    else:
        out += f"int main()\n{{\n    char {st}[256], {c};\n    int {l}, {r};\n    scanf(\"%s\", {st});\n"
        out += f"    for ({l} = 0, {r} = strlen({st}) - 1; {l} < {r}; {l}++, {r}--) {{\n" + swap + "    }\n"
        out += f'    puts({st});\n    return 0;\n}}\n'
    return out


def string_palindrome(s):
    st = str_decl(s)
    out = comment(s, "palindrome check")
    ok = s.pick("ok", "flag", "is_pal")
    n = s.pick("n", "len", "L")
    out += f"int main()\n{{\n    char {st}[500];\n    int {n}, {ok} = 1;\n" + s.needs_decl(s.idx)
    out += f"    scanf(\"%s\", {st});\n    {n} = strlen({st});\n"
    body = f"if ({st}[{s.idx}] != {st}[{n} - 1 - {s.idx}])" + s.block(f"{ok} = 0;\nbreak;", 8).rstrip("\n")
    out += s.count_loop(s.idx, 0, f"{n} / 2", body)
    out += s.pick(
        f'    printf("%s\\n", {ok} ? "YES" : "NO");\n',
        f'    if ({ok})\n        printf("yes\\n");\n    else\n        printf("no\\n");\n',
    )
    out += "    return 0;\n}\n"
    return out


def string_vowels(s):
    st = str_decl(s)
    out = comment(s, "count vowels")
    c = s.pick("cnt", "v", "vowels")
    ch = s.pick("ch", "c", "x")
    out += f"int main()\n{{\n    char {st}[1000], {ch};\n    int {c} = 0, {s.idx} = 0;\n"
    out += f"    gets({st});\n"
    if s.rng.random() < 0.5:
        out += f"    while (({ch} = {st}[{s.idx}++]) != '\\0') {{\n        switch ({ch}) {{\n"
        out += "        case 'a': case 'e': case 'i': case 'o': case 'u':\n"
        out += "        case 'A': case 'E': case 'I': case 'O': case 'U':\n"
        out += f"            {c}++;\n            break;\n        default:\n            break;\n        }}\n    }}\n"
    else:
        out += f"    for (; {st}[{s.idx}]; {s.idx}++) {{\n        {ch} = tolower({st}[{s.idx}]);\n"
        out += f"        if ({ch} == 'a' || {ch} == 'e' || {ch} == 'i' || {ch} == 'o' || {ch} == 'u')\n            {c}++;\n    }}\n"
    out += f'    printf("%d\\n", {c});\n    return 0;\n}}\n'
    return out


def string_upper(s):
    st = str_decl(s)
    out = comment(s, "convert to upper case")
    p = s.pick("p", "q", "ptr")
    if s.rng.random() < 0.5:
        out += f"int main()\n{{\n    char {st}[300];\n    char *{p};\n    scanf(\"%s\", {st});\n"
        out += f"    for ({p} = {st}; *{p}; {p}++)\n        if (*{p} >= 'a' && *{p} <= 'z')\n            *{p} = *{p} - 'a' + 'A';\n"
    else:
        out += f"int main()\n{{\n    char {st}[300];\n    int {s.idx};\n    scanf(\"%s\", {st});\n"
        out += f"    for ({s.idx} = 0; {st}[{s.idx}] != '\\0'; {s.idx}++) {{\n"
        out += f"        if ({st}[{s.idx}] >= 'a' && {st}[{s.idx}] <= 'z')\n            {st}[{s.idx}] -= 32;\n"
        out += f"        else if ({st}[{s.idx}] >= 'A' && {st}[{s.idx}] <= 'Z')\n            {st}[{s.idx}] += 32;\n    }}\n"
    out += f'    printf("%s\\n", {st});\n    return 0;\n}}\n'
    return out


def string_words(s):
    st = str_decl(s)
    out = comment(s, "count words in a line")
    w = s.pick("words", "wc", "n")
    inw = s.pick("in_word", "inside", "state")
    out += f"int main()\n{{\n    char {st}[2000];\n    int {s.idx}, {w} = 0, {inw} = 0;\n"
    out += f"    fgets({st}, sizeof({st}), stdin);\n"
    out += f"    for ({s.idx} = 0; {st}[{s.idx}] != '\\0'; {s.idx}++) {{\n"
    out += f"        if ({st}[{s.idx}] == ' ' || {st}[{s.idx}] == '\\n' || {st}[{s.idx}] == '\\t')\n            {inw} = 0;\n"
    out += f"        else if (!{inw}) {{\n            {inw} = 1;\n            {w}++;\n        }}\n    }}\n"
    out += f'    printf("%d\\n", {w});\n    return 0;\n}}\n'
    return out


def string_char_freq(s):
    st = str_decl(s)
    out = comment(s, "most frequent letter")
    f = s.pick("freq", "cnt", "times")
    best = s.pick("best", "top", "mx")
    out += f"int main()\n{{\n    char {st}[1000];\n    int {f}[26] = {{0}}, {s.idx}, {best} = 0;\n"
    out += f"    scanf(\"%s\", {st});\n"
    out += f"    for ({s.idx} = 0; {st}[{s.idx}]; {s.idx}++)\n        if ({st}[{s.idx}] >= 'a' && {st}[{s.idx}] <= 'z')\n            {f}[{st}[{s.idx}] - 'a']++;\n"
    out += f"    for ({s.idx} = 1; {s.idx} < 26; {s.idx}++)\n        if ({f}[{s.idx}] > {f}[{best}])\n            {best} = {s.idx};\n"
    out += f"    printf(\"%c %d\\n\", 'a' + {best}, {f}[{best}]);\n    return 0;\n}}\n"
    return out


def string_concat(s):
    a, b = s.pick(("s1", "s2"), ("a", "b"), ("first", "second"))
    out = comment(s, "concatenate two strings")
    out += f"void concat(char *dst, const char *src)\n{{\n    while (*dst)\n        dst++;\n"
    out += "    while ((*dst++ = *src++) != '\\0')\n        ;\n}\n\n"
    out += f"int main()\n{{\n    char {a}[200], {b}[100];\n    scanf(\"%s %s\", {a}, {b});\n    concat({a}, {b});\n"
    out += f'    printf("%s\\n", {a});\n    return 0;\n}}\n'
    return out


FAMILIES = {
    "sum": [sum_array, sum_digits, sum_range, sum_pairs, prefix_sums, sum_struct],
    "sorting": [bubble_sort, selection_sort, insertion_sort, qsort_sort, counting_sort, merge_sort, sort_strings_by_len],
    "matrix": [matrix_multiply, matrix_transpose, matrix_add, matrix_diagonal, matrix_row_max, matrix_det, matrix_spiral],
    "string": [string_length, string_reverse, string_palindrome, string_vowels, string_upper, string_words, string_char_freq, string_concat],
}


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("out")
    ap.add_argument("--per-class", type=int, default=60)
    ap.add_argument("--seed", type=int, default=20240607)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    for label, variants in FAMILIES.items():
        folder = os.path.join(args.out, label)
        os.makedirs(folder, exist_ok=True)
        seen = set()
        count = 0
        attempts = 0
        while count < args.per_class:
            variant = variants[attempts % len(variants)]
            attempts += 1
            program = variant(Style(rng))
            if program in seen:
                continue
            seen.add(program)
            count += 1
            with open(os.path.join(folder, f"{label}_{count:03d}.c"), "w") as fh:
                fh.write(program)


if __name__ == "__main__":
    main()
