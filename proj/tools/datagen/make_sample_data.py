#!/usr/bin/env python3
"""Generate the bundled sample corpus and typology tables under data/sample.

The corpus reuses held-out seed sentences (every 4th line), so it never
overlaps the lines the n-gram profiles are trained on. Typology tables are
small hand-coded approximations meant for exercising the pipeline, not for
research use.

    python3 tools/datagen/make_sample_data.py --seed-dir data/seed --out data/sample
"""
import argparse
import json
import math
import random
from pathlib import Path

HOLDOUT_EVERY = 4

TARGETS = ["deu", "fra", "spa", "rus", "cmn", "jpn", "hin", "arb", "kor", "ell"]
MODELS = ["model-a", "model-b"]

# order, adjective-noun, adposition, definite article, gender, tone, polar question
FEATURES = {
    "eng": ["SVO", "AdjN", "Prep", "word", "none", "none", "order"],
    "deu": ["nodom", "AdjN", "Prep", "word", "three", "none", "order"],
    "fra": ["SVO", "NAdj", "Prep", "word", "two", "none", "particle"],
    "spa": ["SVO", "NAdj", "Prep", "word", "two", "none", "intonation"],
    "por": ["SVO", "NAdj", "Prep", "word", "two", "none", "intonation"],
    "ita": ["SVO", "NAdj", "Prep", "word", "two", "none", "intonation"],
    "tur": ["SOV", "AdjN", "Postp", "none", "none", "none", "particle"],
    "ind": ["SVO", "NAdj", "Prep", "demonstrative", "none", "none", "particle"],
    "vie": ["SVO", "NAdj", "Prep", "demonstrative", "none", "complex", "particle"],
    "rus": ["SVO", "AdjN", "Prep", "none", "three", "none", "particle"],
    "ell": ["nodom", "AdjN", "Prep", "word", "three", "none", "intonation"],
    "arb": ["VSO", "NAdj", "Prep", "affix", "two", "none", "particle"],
    "heb": ["SVO", "NAdj", "Prep", "affix", "two", "none", "particle"],
    "hin": ["SOV", "AdjN", "Postp", "none", "two", "none", "particle"],
    "cmn": ["SVO", "AdjN", "nodom", "none", "none", "complex", "particle"],
    "jpn": ["SOV", "AdjN", "Postp", "none", "none", "none", "particle"],
    "kor": ["SOV", "AdjN", "Postp", "none", "none", "none", "particle"],
}
FEATURE_IDS = ["word_order", "adj_noun", "adposition", "definite", "gender", "tone", "polar_q"]

GLOTTOCODES = {
    "eng": "stan1293", "deu": "stan1295", "fra": "stan1290", "spa": "stan1288",
    "por": "port1283", "ita": "ital1282", "tur": "nucl1301", "ind": "indo1316",
    "vie": "viet1252", "rus": "russ1263", "ell": "mode1248", "arb": "stan1318",
    "heb": "hebr1245", "hin": "hind1269", "cmn": "mand1415", "jpn": "nucl1643",
    "kor": "kore1280",
}


def held_out(seed_dir, lang):
    lines = (seed_dir / f"{lang}.txt").read_text(encoding="utf-8").splitlines()
    return [l for i, l in enumerate(lines, 1) if i % HOLDOUT_EVERY == 0 and l.strip()]


def make_corpus(seed_dir, rng):
    pools = {lang: held_out(seed_dir, lang) for lang in set(TARGETS) | {"eng"}}
    cursor = {lang: 0 for lang in pools}

    def take(lang):
        line = pools[lang][cursor[lang] % len(pools[lang])]
        cursor[lang] += 1
        return line

    records = []
    n = 0
    for model in MODELS:
        for setting in ("monolingual", "crosslingual"):
            for target in TARGETS:
                count = 1 if setting == "monolingual" else 2
                for _ in range(count):
                    n += 1
                    lines = [take(target) for _ in range(rng.randint(2, 4))]
                    mix = 0.1 if setting == "monolingual" else 0.4
                    if model == "model-b":
                        mix *= 1.5
                    if rng.random() < mix:
                        lines[rng.randrange(len(lines))] = take("eng")
                    if target not in ("deu", "fra", "spa") and rng.random() < mix:
                        i = rng.randrange(len(lines))
                        eng_word = take("eng").split()[0].strip(".").lower()
                        lines[i] = lines[i].rstrip("。.।") + " " + eng_word + "."
                    context = [target] if setting == "monolingual" else ["eng"]
                    records.append({
                        "id": f"r{n:03d}",
                        "model": model,
                        "dataset": "sample",
                        "setting": setting,
                        "task": "prompting",
                        "target_lang": target,
                        "context_langs": context,
                        "response_text": "\n".join(lines),
                    })
    # one empty response exercises the exclusion path
    records[-1]["response_text"] = ""
    return records


def write_tables(out, rng):
    with open(out / "typology_multivalued.tsv", "w", encoding="utf-8") as f:
        f.write("lang_id\tfeature_id\tvalue\n")
        for lang in sorted(FEATURES):
            for fid, value in zip(FEATURE_IDS, FEATURES[lang]):
                f.write(f"{lang}\t{fid}\t{value}\n")

    with open(out / "typology_binary.tsv", "w", encoding="utf-8") as f:
        f.write("lang_id\tfeature_id\tvalue\n")
        for lang in sorted(FEATURES):
            order, adj, adp, definite, gender, tone, polar = FEATURES[lang]
            flags = {
                "verb_final": order == "SOV",
                "adjective_after_noun": adj == "NAdj",
                "postpositions": adp == "Postp",
                "definite_marker": definite in ("word", "affix"),
                "grammatical_gender": gender != "none",
                "lexical_tone": tone != "none",
                "question_particle": polar == "particle",
            }
            for fid, on in flags.items():
                f.write(f"{lang}\t{fid}\t{int(on)}\n")

    values = sorted({(fid, v) for feats in FEATURES.values() for fid, v in zip(FEATURE_IDS, feats)})
    with open(out / "typology_embedding.tsv", "w", encoding="utf-8") as f:
        f.write("glottocode\t" + "\t".join(f"d{i}" for i in range(8)) + "\n")
        projection = [[rng.gauss(0, 1) for _ in range(8)] for _ in values]
        for lang in sorted(FEATURES):
            onehot = [1.0 if v in set(zip(FEATURE_IDS, FEATURES[lang])) else 0.0 for v in values]
            vec = [sum(o * p[k] for o, p in zip(onehot, projection)) for k in range(8)]
            norm = math.sqrt(sum(x * x for x in vec))
            f.write(GLOTTOCODES[lang] + "\t" + "\t".join(f"{x / norm:.6f}" for x in vec) + "\n")

    with open(out / "glottocode_map.tsv", "w", encoding="utf-8") as f:
        f.write("glottocode\tiso639_3\n")
        for lang in sorted(GLOTTOCODES):
            f.write(f"{GLOTTOCODES[lang]}\t{lang}\n")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed-dir", type=Path, default=Path("data/seed"))
    ap.add_argument("--out", type=Path, default=Path("data/sample"))
    ap.add_argument("--seed", type=int, default=7)
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    rng = random.Random(args.seed)
    records = make_corpus(args.seed_dir, rng)
    with open(args.out / "corpus_60.jsonl", "w", encoding="utf-8") as f:
        for r in records:
            f.write(json.dumps(r, ensure_ascii=False) + "\n")
    write_tables(args.out, rng)
    print(f"{len(records)} records")


if __name__ == "__main__":
    main()
