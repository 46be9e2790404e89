#!/usr/bin/env python3
"""Generate the bundled LID seed corpora.

Sentences are sampled from the wordfreq frequency lists (CC-BY-SA 4.0) so the
character n-gram statistics follow real usage. The output is deterministic for
a given wordfreq release and --seed.

    pip download wordfreq --no-deps && python -m zipfile -e wordfreq-*.whl wf
    python3 make_seed_corpora.py --wordfreq-data wf/wordfreq/data --out data/seed
"""
import argparse
import gzip
import random
import unicodedata
from pathlib import Path

import msgpack

# iso639-3 -> (wordfreq code, allowed scripts, joiner, terminator)
LANGS = {
    "eng": ("en", {"LATIN"}, " ", "."),
    "deu": ("de", {"LATIN"}, " ", "."),
    "fra": ("fr", {"LATIN"}, " ", "."),
    "spa": ("es", {"LATIN"}, " ", "."),
    "por": ("pt", {"LATIN"}, " ", "."),
    "ita": ("it", {"LATIN"}, " ", "."),
    "tur": ("tr", {"LATIN"}, " ", "."),
    "ind": ("id", {"LATIN"}, " ", "."),
    "vie": ("vi", {"LATIN"}, " ", "."),
    "rus": ("ru", {"CYRILLIC"}, " ", "."),
    "ell": ("el", {"GREEK"}, " ", "."),
    "arb": ("ar", {"ARABIC"}, " ", "."),
    "heb": ("he", {"HEBREW"}, " ", "."),
    "hin": ("hi", {"DEVANAGARI"}, " ", "।"),
    "cmn": ("zh", {"CJK"}, "", "。"),
    "jpn": ("ja", {"CJK", "HIRAGANA", "KATAKANA"}, "", "。"),
    "kor": ("ko", {"HANGUL"}, " ", "."),
}


def script_of(ch):
    name = unicodedata.name(ch, "")
    return name.split(" ")[0] if name else ""


def acceptable(word, scripts):
    letters = [c for c in word if unicodedata.category(c)[0] in "LM"]
    if not letters or len(letters) != len(word.replace("'", "")):
        return False
    return all(script_of(c) in scripts or unicodedata.category(c)[0] == "M" for c in letters)


def load_vocab(data_dir, code, scripts, limit):
    with gzip.open(data_dir / f"small_{code}.msgpack.gz") as fh:
        buckets = msgpack.load(fh, raw=False)[1:]
    vocab = []
    for index, bucket in enumerate(buckets, start=1):
        for word in bucket:
            if acceptable(word, scripts):
                vocab.append((word, 10 ** (-index / 100)))
            if len(vocab) >= limit:
                return vocab
    return vocab


def sentence(rng, words, weights, joiner, terminator, cased):
    n = rng.randint(5, 12)
    tokens = rng.choices(words, weights=weights, k=n)
    if joiner and n > 6 and rng.random() < 0.3:
        cut = rng.randint(2, n - 3)
        tokens[cut] = tokens[cut] + ","
    text = joiner.join(tokens)
    if cased:
        text = text[0].upper() + text[1:]
    return text + terminator


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--wordfreq-data", type=Path, required=True)
    parser.add_argument("--out", type=Path, required=True)
    parser.add_argument("--sentences", type=int, default=1000)
    parser.add_argument("--vocab", type=int, default=4000)
    parser.add_argument("--seed", type=int, default=20241)
    args = parser.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    for iso, (code, scripts, joiner, terminator) in LANGS.items():
        rng = random.Random(f"{args.seed}:{iso}")
        vocab = load_vocab(args.wordfreq_data, code, scripts, args.vocab)
        words = [w for w, _ in vocab]
        # flatten the Zipf curve so content words show up, not only function words
        weights = [f ** 0.6 for _, f in vocab]
        cased = scripts <= {"LATIN", "CYRILLIC", "GREEK"}
        lines = [sentence(rng, words, weights, joiner, terminator, cased) for _ in range(args.sentences)]
        (args.out / f"{iso}.txt").write_text("\n".join(lines) + "\n", encoding="utf-8")
        print(iso, len(vocab), lines[0])


if __name__ == "__main__":
    main()
