# Copyright 2026 The Bitext Filter Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Samples seed text for trigram profiles from wordfreq's word lists.

Each output line is a run of words drawn in proportion to their corpus
frequency, so trigram counts over the file approximate those of running
text. Usage:

    pip download --no-deps wordfreq==3.1.1 -d /tmp/wf
    python3 scripts/make_seed_corpora.py /tmp/wf/wordfreq-3.1.1-py3-none-any.whl data/seed
"""

import argparse
import gzip
import io
import pathlib
import random
import unicodedata
import zipfile

import msgpack

# Output code -> wordfreq list name.
LANGS = {
    "en": "en", "id": "id", "ms": "ms", "tl": "fil", "ta": "ta",
    "tr": "tr", "ar": "ar", "ja": "ja",
}
TOP_WORDS = 20000
TARGET_CHARS = 200000


def is_word(w):
    return all(unicodedata.category(c)[0] in "LM" for c in w)


def load(wheel, name):
    with zipfile.ZipFile(wheel) as z:
        raw = z.read(f"wordfreq/data/small_{name}.msgpack.gz")
    buckets = msgpack.unpackb(gzip.GzipFile(fileobj=io.BytesIO(raw)).read(), raw=False)[1:]
    words, weights = [], []
    for cb, bucket in enumerate(buckets):
        for w in bucket:
            if is_word(w):
                words.append(w)
                weights.append(10.0 ** (-cb / 100.0))
            if len(words) == TOP_WORDS:
                return words, weights
    return words, weights


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("wheel")
    ap.add_argument("out_dir")
    ap.add_argument("--seed", type=int, default=20260101)
    args = ap.parse_args()
    out = pathlib.Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    for code, name in LANGS.items():
        rng = random.Random(f"{args.seed}-{code}")
        words, weights = load(args.wheel, name)
        sep = "" if code == "ja" else " "
        lines, chars = [], 0
        target = TARGET_CHARS // 4 if code == "ja" else TARGET_CHARS
        while chars < target:
            line = sep.join(rng.choices(words, weights, k=rng.randint(8, 14)))
            lines.append(line)
            chars += len(line)
        (out / f"{code}.txt").write_text("\n".join(lines) + "\n", encoding="utf-8")
        print(code, len(lines), chars)


if __name__ == "__main__":
    main()
