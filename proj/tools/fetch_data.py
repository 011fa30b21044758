#!/usr/bin/env python3
"""Fetch the evaluation datasets into a local data/ directory.

Produces:
  iris.csv   -- 150 rows, 4 numeric features + species label (required)
  spine.csv  -- 310 rows, 6 numeric features + class label (optional)
  checksums.txt -- sha256 of every file written

Sources, in order of preference:
  1. scikit-learn's bundled copy (iris only; offline, Fisher-corrected values)
  2. the UCI repository over the network

The UCI iris file is verified against a pinned sha256 before use; a mismatch
is treated as a failed download (fail closed). The UCI copy also carries two
well-documented transcription errors relative to Fisher's paper (rows 35 and
38, 1-indexed); those two rows are corrected after download so both sources
yield identical data. Download hashes observed at fetch time are recorded in
checksums.txt either way.
"""

import argparse
import hashlib
import io
import sys
import urllib.request
import zipfile
from pathlib import Path

IRIS_URL = "https://archive.ics.uci.edu/ml/machine-learning-databases/iris/iris.data"
# Fail-closed pin: if the download does not match, it is discarded.
IRIS_SHA256 = "36d9f92fb45ed966161abebcbcf7b73a4ee41c799a93ad8c1c4a60eacd1e5b36"
SPINE_URL = (
    "https://archive.ics.uci.edu/ml/machine-learning-databases/00212/"
    "vertebral_column_data.zip"
)
SPINE_SHA256 = ""  # no pin available; structural validation + recorded hash

IRIS_HEADER = "sepal_length,sepal_width,petal_length,petal_width,species"
IRIS_NAMES = ["setosa", "versicolor", "virginica"]
# UCI row -> corrected feature values (Fisher's paper / the R datasets copy).
IRIS_FIXES = {34: [4.9, 3.1, 1.5, 0.2], 37: [4.9, 3.6, 1.4, 0.1]}

SPINE_HEADER = (
    "pelvic_incidence,pelvic_tilt,lumbar_lordosis_angle,sacral_slope,"
    "pelvic_radius,degree_spondylolisthesis,class"
)


def fmt(x):
    s = repr(float(x))
    return s[:-2] if s.endswith(".0") else s


def sha256_bytes(blob):
    return hashlib.sha256(blob).hexdigest()


def download(url, expected_sha, log):
    try:
        with urllib.request.urlopen(url, timeout=30) as resp:
            blob = resp.read()
    except Exception as exc:  # noqa: BLE001 - any network failure falls through
        log(f"download failed for {url}: {exc}")
        return None
    digest = sha256_bytes(blob)
    log(f"downloaded {url} sha256={digest}")
    if expected_sha and digest != expected_sha:
        log(f"checksum mismatch (expected {expected_sha}); discarding download")
        return None
    return blob


def iris_rows_from_sklearn(log):
    try:
        from sklearn.datasets import load_iris
    except ImportError:
        log("scikit-learn not available")
        return None
    data = load_iris()
    rows = []
    for features, target in zip(data.data, data.target):
        rows.append([float(v) for v in features] + [IRIS_NAMES[int(target)]])
    log("loaded iris from scikit-learn")
    return rows


def iris_rows_from_uci(log):
    blob = download(IRIS_URL, IRIS_SHA256, log)
    if blob is None:
        return None
    rows = []
    for line in blob.decode("utf-8").splitlines():
        line = line.strip()
        if not line:
            continue
        parts = line.split(",")
        if len(parts) != 5:
            log(f"unexpected iris line: {line!r}")
            return None
        features = [float(v) for v in parts[:4]]
        name = parts[4].replace("Iris-", "")
        if name not in IRIS_NAMES:
            log(f"unexpected iris label: {parts[4]!r}")
            return None
        rows.append(features + [name])
    for idx, fixed in IRIS_FIXES.items():
        rows[idx][:4] = fixed
    if len(rows) != 150:
        log(f"expected 150 iris rows, got {len(rows)}")
        return None
    return rows


def spine_rows_from_uci(log):
    blob = download(SPINE_URL, SPINE_SHA256, log)
    if blob is None:
        return None
    try:
        with zipfile.ZipFile(io.BytesIO(blob)) as zf:
            name = next(n for n in zf.namelist() if n.endswith("column_3C.dat"))
            text = zf.read(name).decode("utf-8")
    except Exception as exc:  # noqa: BLE001
        log(f"could not read spine archive: {exc}")
        return None
    rows = []
    for line in text.splitlines():
        parts = line.split()
        if len(parts) != 7:
            continue
        rows.append([float(v) for v in parts[:6]] + [parts[6]])
    if len(rows) != 310:
        log(f"expected 310 spine rows, got {len(rows)}")
        return None
    return rows


def write_csv(path, header, rows):
    lines = [header]
    for row in rows:
        lines.append(",".join(fmt(v) if isinstance(v, float) else str(v) for v in row))
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--dest", default=str(Path(__file__).resolve().parent.parent / "data"))
    parser.add_argument("--quiet", action="store_true")
    args = parser.parse_args()

    def log(msg):
        if not args.quiet:
            print(f"[fetch_data] {msg}", file=sys.stderr)

    dest = Path(args.dest)
    dest.mkdir(parents=True, exist_ok=True)
    written = []

    iris = iris_rows_from_sklearn(log) or iris_rows_from_uci(log)
    if iris is None:
        log("FATAL: could not obtain the iris dataset from any source")
        return 1
    iris_path = dest / "iris.csv"
    write_csv(iris_path, IRIS_HEADER, iris)
    written.append(iris_path)
    log(f"wrote {iris_path} ({len(iris)} rows)")

    spine = spine_rows_from_uci(log)
    if spine is None:
        log("spine dataset unavailable (optional); continuing without it")
    else:
        spine_path = dest / "spine.csv"
        write_csv(spine_path, SPINE_HEADER, spine)
        written.append(spine_path)
        log(f"wrote {spine_path} ({len(spine)} rows)")

    checks = dest / "checksums.txt"
    with checks.open("w", encoding="utf-8") as fh:
        for path in written:
            fh.write(f"{sha256_bytes(path.read_bytes())}  {path.name}\n")
    log(f"wrote {checks}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
