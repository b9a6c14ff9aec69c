"""Stemmer selection: full Porter for English, light suffix tables elsewhere.

The light stemmers are deliberately conservative. They fold plural and a
final mute vowel so that inflectional variants land on a shared stem, and
never shorten a token below three characters.
"""

from __future__ import annotations

from .porter import porter_stem

ALGORITHMS = ("porter", "light", "none")

_MIN_STEM = 3


def _strip(token: str, suffix: str, replacement: str = "") -> str | None:
    if token.endswith(suffix) and len(token) - len(suffix) + len(replacement) >= _MIN_STEM:
        return token[: len(token) - len(suffix)] + replacement
    return None


def _light_stem_fr(token: str) -> str:
    # plural endings
    for suffix, repl in (("eaux", "eau"), ("aux", "al"), ("x", ""), ("s", "")):
        out = _strip(token, suffix, repl)
        if out is not None:
            token = out
            break
    # final mute vowel
    for suffix in ("é", "e"):
        out = _strip(token, suffix)
        if out is not None:
            token = out
            break
    # undouble the final consonant (belle -> bell -> bel)
    if (
        len(token) >= _MIN_STEM + 1
        and token[-1] == token[-2]
        and token[-1] not in "aeiouy"
    ):
        token = token[:-1]
    return token


def _light_stem_es(token: str) -> str:
    # plural endings: -es after the usual consonants, otherwise plain -s
    if len(token) >= 5 and token.endswith("es") and token[-3] in "rlndjszc":
        token = token[:-2]
    else:
        out = _strip(token, "s")
        if out is not None:
            token = out
    # final gender/theme vowel
    for suffix in ("ó", "á", "é", "o", "a", "e"):
        out = _strip(token, suffix)
        if out is not None:
            token = out
            break
    return token


def _light_stem_generic(token: str) -> str:
    out = _strip(token, "s")
    return token if out is None else out


_LIGHT_STEMMERS = {
    "fr": _light_stem_fr,
    "es": _light_stem_es,
}


def light_stem(token: str, language: str) -> str:
    return _LIGHT_STEMMERS.get(language, _light_stem_generic)(token)


def stem_token(token: str, language: str = "en", algorithm: str | None = None) -> str:
    """Stem one lowercase token.

    ``algorithm`` is one of "porter", "light" or "none"; when omitted it
    defaults to Porter for English and the light stemmer otherwise.
    """
    if algorithm is None:
        algorithm = "porter" if language == "en" else "light"
    if algorithm == "none":
        return token
    if algorithm == "porter":
        return porter_stem(token)
    if algorithm == "light":
        return light_stem(token, language)
    raise ValueError(f"unknown stemmer {algorithm!r}; expected one of {ALGORITHMS}")
