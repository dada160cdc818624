"""Text formats for machines and instances, plus CLI word parsing.

Both formats are line oriented: tokens are whitespace-separated, a line
whose first non-blank character is ``#`` is a comment, ``~`` spells the
empty word.  Machine files start with ``sst``, instance files with
``hdt0l``; sections may appear in any order after that.

Machine grammar::

    sst
    input: 0 1
    output: e f
    states: q0 q1
    initial: q0
    final: q1
    vars: X_a X_b
    trans: q0 0 q1 { X_a := e ; X_b := ~ }
    out: q1 = X_a              (two-track machines: out: q1 = X_a | X_b)

Instance grammar::

    hdt0l
    alphabet A: a b c
    alphabet B: e f
    v: c
    w: c d
    pair 1: h: a -> a ; b -> ~ ; c -> a c b | g: a -> a ; b -> b ; c -> c a
    final: h: a -> e ; b -> f ; c -> ~ | g: a -> e ; b -> f ; c -> ~

Parsing assigns the canonical alphabet names ``in``/``out``/``var`` (machines)
and ``A``/``B`` (instances); printing a machine whose alphabets were built
elsewhere therefore re-parses to an isomorphic copy rather than an identical
one.  Printing is deterministic: machine sections are sorted, instance
sections keep declaration order (label order is meaningful to the engines).

The number of tracks is read off the ``out:`` lines, so a machine without
any output state reads back single-track; that is the one place the format
is coarser than the in-memory model.
"""

from __future__ import annotations

import re

from .errors import DomainViolation, ParseError
from .hdt0l import Hdt0lInstance
from .sst import Sst, Transition
from .words import Alphabet, Letter, Morphism, Substitution, Word

RESERVED = {"~", "{", "}", ";", ":=", "=", "|", "->", "sst", "hdt0l"}

Token = tuple[str, int, int]  # text, line, column


def _tokenize(text: str) -> list[list[Token]]:
    lines: list[list[Token]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.lstrip()
        if not stripped or stripped.startswith("#"):
            continue
        tokens = [
            (m.group(0), lineno, m.start() + 1) for m in re.finditer(r"\S+", raw)
        ]
        lines.append(tokens)
    return lines


def _check_plain(token: Token, what: str) -> str:
    text, line, col = token
    if text in RESERVED:
        raise ParseError(f"{what} may not be the reserved token {text!r}", line, col)
    return text


def _split_on(tokens: list[Token], sep: str) -> list[list[Token]]:
    groups: list[list[Token]] = [[]]
    for tok in tokens:
        if tok[0] == sep:
            groups.append([])
        else:
            groups[-1].append(tok)
    return groups


# -- machines -----------------------------------------------------------------


def _resolve_rhs(
    tokens: list[Token], variables: Alphabet, output: Alphabet
) -> Word:
    if len(tokens) == 1 and tokens[0][0] == "~":
        return Word(())
    letters: list[Letter] = []
    for text, line, col in tokens:
        if text == "~":
            raise ParseError("'~' must stand alone", line, col)
        hit = [l for l in variables if l.token == text] or [
            l for l in output if l.token == text
        ]
        if not hit:
            raise ParseError(f"unknown register or output letter {text!r}", line, col)
        letters.append(hit[0])
    return Word(tuple(letters))


def parse_sst(text: str) -> Sst:
    lines = _tokenize(text)
    if not lines or [t[0] for t in lines[0]] != ["sst"]:
        raise ParseError("machine files start with a line containing just 'sst'", 1)

    sections: dict[str, list[Token]] = {}
    trans_lines: list[list[Token]] = []
    out_lines: list[list[Token]] = []
    for tokens in lines[1:]:
        head = tokens[0]
        key = head[0]
        if key in ("input:", "output:", "states:", "initial:", "final:", "vars:"):
            if key in sections:
                raise ParseError(f"duplicate section {key!r}", head[1], head[2])
            sections[key] = tokens[1:]
        elif key == "trans:":
            trans_lines.append(tokens)
        elif key == "out:":
            out_lines.append(tokens)
        else:
            raise ParseError(f"unexpected token {key!r}", head[1], head[2])
    for required in ("input:", "output:", "states:", "initial:", "vars:"):
        if required not in sections:
            raise ParseError(f"missing section {required!r}")

    input_alphabet = Alphabet.make(
        "in", [_check_plain(t, "an input letter") for t in sections["input:"]]
    )
    output_alphabet = Alphabet.make(
        "out", [_check_plain(t, "an output letter") for t in sections["output:"]]
    )
    var_tokens = [_check_plain(t, "a register") for t in sections["vars:"]]
    variables = Alphabet.make("var", var_tokens)
    clash = set(var_tokens) & {l.token for l in output_alphabet}
    if clash:
        raise ParseError(
            f"token {sorted(clash)[0]!r} is both a register and an output letter"
        )
    states = tuple(_check_plain(t, "a state") for t in sections["states:"])
    if len(sections["initial:"]) != 1:
        raise ParseError("section 'initial:' needs exactly one state")
    initial = sections["initial:"][0][0]
    finals = frozenset(t[0] for t in sections.get("final:", []))

    transitions: list[Transition] = []
    update: dict[Transition, Substitution] = {}
    for tokens in trans_lines:
        head = tokens[0]
        body = tokens[1:]
        if len(body) < 5 or body[3][0] != "{" or body[-1][0] != "}":
            raise ParseError(
                "expected: trans: src letter dst { assignments }", head[1], head[2]
            )
        src, letter_tok, dst = body[0], body[1], body[2]
        try:
            letter = input_alphabet.lookup(letter_tok[0])
        except DomainViolation:
            raise ParseError(
                f"unknown input letter {letter_tok[0]!r}", letter_tok[1], letter_tok[2]
            ) from None
        t = Transition(src[0], letter, dst[0])
        images: dict[Letter, Word] = {}
        for group in _split_on(body[4:-1], ";"):
            if not group:
                raise ParseError("empty assignment", head[1], head[2])
            var_tok = group[0]
            if len(group) < 2 or group[1][0] != ":=":
                raise ParseError(
                    f"expected ':=' after {var_tok[0]!r}", var_tok[1], var_tok[2]
                )
            try:
                var = variables.lookup(var_tok[0])
            except DomainViolation:
                raise ParseError(
                    f"unknown register {var_tok[0]!r}", var_tok[1], var_tok[2]
                ) from None
            if var in images:
                raise ParseError(
                    f"register {var_tok[0]!r} assigned twice", var_tok[1], var_tok[2]
                )
            images[var] = _resolve_rhs(group[2:], variables, output_alphabet)
        missing = [v.token for v in variables if v not in images]
        if missing:
            raise ParseError(
                f"transition leaves register {missing[0]!r} unassigned",
                head[1],
                head[2],
            )
        if t in update:
            raise ParseError(f"duplicate transition {t.src} {t.letter.token} {t.dst}", head[1])
        transitions.append(t)
        update[t] = Substitution(variables, images)

    output: dict[str, tuple[Word, ...]] = {}
    arity: int | None = None
    for tokens in out_lines:
        head = tokens[0]
        body = tokens[1:]
        if len(body) < 2 or body[1][0] != "=":
            raise ParseError("expected: out: state = tracks", head[1], head[2])
        state = body[0][0]
        if state in output:
            raise ParseError(f"output of {state!r} given twice", head[1], head[2])
        segments = _split_on(body[2:], "|")
        if len(segments) not in (1, 2) or any(not seg for seg in segments):
            raise ParseError("output takes one or two register words", head[1], head[2])
        if arity is None:
            arity = len(segments)
        elif arity != len(segments):
            raise ParseError("output lines mix one and two tracks", head[1], head[2])
        empty_out = Alphabet("none", ())
        output[state] = tuple(_resolve_rhs(seg, variables, empty_out) for seg in segments)

    machine = Sst(
        input_alphabet=input_alphabet,
        output_alphabet=output_alphabet,
        states=states,
        initial=initial,
        finals=finals,
        variables=variables,
        transitions=tuple(transitions),
        update=update,
        output=output,
        output_arity=arity if arity is not None else 1,
    )
    machine.validate()
    return machine


def _display_map(groups: list[tuple[Letter, ...]]) -> dict[Letter, str]:
    """Stable letter -> token map; clashing or reserved tokens get primes."""
    used = set(RESERVED)
    mapping: dict[Letter, str] = {}
    for letters in groups:
        for letter in sorted(letters, key=lambda l: (l.token, l.alphabet_id)):
            token = letter.token
            while token in used:
                token += "'"
            used.add(token)
            mapping[letter] = token
    return mapping


def print_sst(machine: Sst) -> str:
    machine.validate()
    show = _display_map(
        [tuple(machine.variables), tuple(machine.output_alphabet)]
    )
    show_in = _display_map([tuple(machine.input_alphabet)])

    def word(w: Word) -> str:
        return " ".join(show[l] for l in w) if len(w) else "~"

    lines = ["sst"]
    lines.append("input: " + " ".join(sorted(show_in[l] for l in machine.input_alphabet)))
    lines.append(
        "output: " + " ".join(sorted(show[l] for l in machine.output_alphabet))
    )
    lines.append("states: " + " ".join(sorted(machine.states)))
    lines.append(f"initial: {machine.initial}")
    lines.append("final: " + " ".join(sorted(machine.finals)))
    lines.append("vars: " + " ".join(sorted(show[v] for v in machine.variables)))
    for t in sorted(machine.transitions, key=lambda t: (t.src, show_in[t.letter], t.dst)):
        sub = machine.update[t]
        body = " ; ".join(
            f"{show[v]} := {word(sub.image(v))}"
            for v in sorted(machine.variables, key=lambda v: show[v])
        )
        lines.append(f"trans: {t.src} {show_in[t.letter]} {t.dst} {{ {body} }}")
    for state in sorted(machine.output):
        tracks = " | ".join(word(w) for w in machine.output[state])
        lines.append(f"out: {state} = {tracks}")
    return "\n".join(lines) + "\n"


# -- instances ------------------------------------------------------------------


def _parse_side(
    tokens: list[Token],
    keyword: str,
    source: Alphabet,
    target: Alphabet,
) -> Morphism:
    if not tokens or tokens[0][0] != keyword:
        where = tokens[0] if tokens else (keyword, 0, 0)
        raise ParseError(f"expected {keyword!r}", where[1] or None, where[2] or None)
    images: dict[Letter, Word] = {}
    for group in _split_on(tokens[1:], ";"):
        if len(group) < 2 or group[1][0] != "->":
            where = group[0] if group else tokens[0]
            raise ParseError("expected: letter -> image", where[1], where[2])
        src_tok = group[0]
        try:
            letter = source.lookup(src_tok[0])
        except DomainViolation:
            raise ParseError(
                f"unknown letter {src_tok[0]!r}", src_tok[1], src_tok[2]
            ) from None
        if letter in images:
            raise ParseError(
                f"letter {src_tok[0]!r} mapped twice", src_tok[1], src_tok[2]
            )
        rhs = group[2:]
        if len(rhs) == 1 and rhs[0][0] == "~":
            images[letter] = Word(())
            continue
        out: list[Letter] = []
        for text, line, col in rhs:
            if text == "~":
                raise ParseError("'~' must stand alone", line, col)
            try:
                out.append(target.lookup(text))
            except DomainViolation:
                raise ParseError(f"unknown letter {text!r}", line, col) from None
        images[letter] = Word(tuple(out))
    missing = [l.token for l in source if l not in images]
    if missing:
        where = tokens[0]
        raise ParseError(f"no image for letter {missing[0]!r}", where[1], where[2])
    return Morphism(source, target, images)


def _parse_axiom(tokens: list[Token], alphabet: Alphabet) -> Word:
    if len(tokens) == 1 and tokens[0][0] == "~":
        return Word(())
    letters = []
    for text, line, col in tokens:
        try:
            letters.append(alphabet.lookup(text))
        except DomainViolation:
            raise ParseError(f"unknown letter {text!r}", line, col) from None
    return Word(tuple(letters))


def parse_hdt0l(text: str) -> Hdt0lInstance:
    lines = _tokenize(text)
    if not lines or [t[0] for t in lines[0]] != ["hdt0l"]:
        raise ParseError("instance files start with a line containing just 'hdt0l'", 1)

    alphabet_a: Alphabet | None = None
    alphabet_b: Alphabet | None = None
    axiom_lines: dict[str, list[Token]] = {}
    pair_lines: list[tuple[str, list[Token], Token]] = []
    final_tokens: list[Token] | None = None
    for tokens in lines[1:]:
        head = tokens[0]
        key = head[0]
        if key == "alphabet":
            if len(tokens) < 2 or tokens[1][0] not in ("A:", "B:"):
                raise ParseError("expected 'alphabet A:' or 'alphabet B:'", head[1], head[2])
            name = tokens[1][0][:-1]
            letters = [_check_plain(t, "a letter") for t in tokens[2:]]
            if name == "A":
                if alphabet_a is not None:
                    raise ParseError("alphabet A given twice", head[1], head[2])
                alphabet_a = Alphabet.make("A", letters)
            else:
                if alphabet_b is not None:
                    raise ParseError("alphabet B given twice", head[1], head[2])
                alphabet_b = Alphabet.make("B", letters)
        elif key in ("v:", "w:"):
            if key in axiom_lines:
                raise ParseError(f"axiom {key!r} given twice", head[1], head[2])
            axiom_lines[key] = tokens[1:]
        elif key == "pair":
            if len(tokens) < 2:
                raise ParseError("pair needs a label", head[1], head[2])
            label_tok = tokens[1]
            if not label_tok[0].endswith(":") or label_tok[0] == ":":
                raise ParseError(
                    "pair label must end with ':'", label_tok[1], label_tok[2]
                )
            pair_lines.append((label_tok[0][:-1], tokens[2:], label_tok))
        elif key == "final:":
            if final_tokens is not None:
                raise ParseError("final pair given twice", head[1], head[2])
            final_tokens = tokens[1:]
        else:
            raise ParseError(f"unexpected token {key!r}", head[1], head[2])

    if alphabet_a is None or alphabet_b is None:
        raise ParseError("both alphabets A and B are required")
    if "v:" not in axiom_lines or "w:" not in axiom_lines:
        raise ParseError("both axioms v: and w: are required")
    if final_tokens is None:
        raise ParseError("the final pair is required")

    labels: list[str] = []
    inner = {}
    for label, tokens, label_tok in pair_lines:
        if label in inner:
            raise ParseError(f"duplicate label {label!r}", label_tok[1], label_tok[2])
        sides = _split_on(tokens, "|")
        if len(sides) != 2:
            raise ParseError(
                f"pair {label!r} needs an h: side and a g: side",
                label_tok[1],
                label_tok[2],
            )
        labels.append(label)
        inner[label] = (
            _parse_side(sides[0], "h:", alphabet_a, alphabet_a),
            _parse_side(sides[1], "g:", alphabet_a, alphabet_a),
        )
    final_sides = _split_on(final_tokens, "|")
    if len(final_sides) != 2:
        raise ParseError("the final pair needs an h: side and a g: side")
    final = (
        _parse_side(final_sides[0], "h:", alphabet_a, alphabet_b),
        _parse_side(final_sides[1], "g:", alphabet_a, alphabet_b),
    )

    instance = Hdt0lInstance(
        alphabet_a=alphabet_a,
        alphabet_b=alphabet_b,
        labels=tuple(labels),
        inner=inner,
        final=final,
        axioms=(
            _parse_axiom(axiom_lines["v:"], alphabet_a),
            _parse_axiom(axiom_lines["w:"], alphabet_a),
        ),
    )
    instance.validate()
    return instance


def print_hdt0l(instance: Hdt0lInstance) -> str:
    instance.validate()
    show_a = _display_map([tuple(instance.alphabet_a)])
    show_b = _display_map([tuple(instance.alphabet_b)])

    def word(w: Word, show: dict[Letter, str]) -> str:
        return " ".join(show[l] for l in w) if len(w) else "~"

    def side(keyword: str, m: Morphism, show: dict[Letter, str]) -> str:
        images = " ; ".join(
            f"{show_a[a]} -> {word(m.image(a), show)}" for a in instance.alphabet_a
        )
        return f"{keyword} {images}"

    lines = ["hdt0l"]
    lines.append("alphabet A: " + " ".join(show_a[l] for l in instance.alphabet_a))
    lines.append("alphabet B: " + " ".join(show_b[l] for l in instance.alphabet_b))
    lines.append("v: " + word(instance.axioms[0], show_a))
    lines.append("w: " + word(instance.axioms[1], show_a))
    for label in instance.labels:
        h, g = instance.inner[label]
        lines.append(
            f"pair {label}: {side('h:', h, show_a)} | {side('g:', g, show_a)}"
        )
    h, g = instance.final
    lines.append(f"final: {side('h:', h, show_b)} | {side('g:', g, show_b)}")
    return "\n".join(lines) + "\n"


# -- CLI word syntax ----------------------------------------------------------------


def parse_input_word(text: str, alphabet: Alphabet) -> Word:
    """A word given on the command line.

    Tokens may be separated by whitespace or commas; when every alphabet
    token is a single character, an unseparated string like ``0111`` is
    split character by character.  ``~`` (or nothing) is the empty word.
    """
    stripped = text.strip()
    if stripped in ("", "~"):
        return Word(())
    pieces = [p for p in re.split(r"[,\s]+", stripped) if p]
    try:
        return Word(tuple(alphabet.lookup(p) for p in pieces))
    except DomainViolation:
        pass
    if all(len(l.token) == 1 for l in alphabet):
        try:
            return Word(tuple(alphabet.lookup(c) for piece in pieces for c in piece))
        except DomainViolation as exc:
            raise ParseError(f"not a word over the input alphabet: {exc}") from None
    raise ParseError(f"not a word over the input alphabet: {stripped!r}")
