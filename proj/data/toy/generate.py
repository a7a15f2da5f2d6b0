"""Regenerates the toy audit fixture (deterministic)."""
import json
import random
from pathlib import Path

HERE = Path(__file__).parent
rng = random.Random(20240601)

NOUNS = ["buffer", "index", "count", "node", "value", "cache", "token", "frame", "queue", "entry",
         "state", "limit", "offset", "range", "score", "label", "chunk", "width", "depth", "total"]
VERBS = ["read", "write", "merge", "scan", "parse", "flush", "split", "check", "build", "update"]
TYPES = ["int", "long", "double", "String", "boolean"]


def ident():
    return rng.choice(VERBS) + rng.choice(NOUNS).capitalize() + rng.choice(NOUNS).capitalize()


def method():
    name, arg, other = ident(), rng.choice(NOUNS), rng.choice(NOUNS)
    t = rng.choice(TYPES[:3])
    lines = [f"    public {t} {name}({t} {arg}, {t} {other}) {{"]
    for _ in range(rng.randint(3, 6)):
        a, b = rng.choice(NOUNS), rng.choice(NOUNS)
        op = rng.choice(["+", "-", "*"])
        lines.append(f"        {t} {a}{rng.randint(0, 99)} = {arg} {op} {other} {op} {rng.randint(1, 500)};")
        if rng.random() < 0.4:
            lines.append(f"        if ({arg} > {rng.randint(0, 50)}) {{ {other} = {other} {op} {b.__len__()}; }}")
    lines.append(f"        return {arg} {rng.choice(['+', '-'])} {other};")
    lines.append("    }")
    return "\n".join(lines)


def java_file(cls):
    body = "\n\n".join(method() for _ in range(rng.randint(4, 7)))
    return f"package toy.{cls.lower()};\n\npublic class {cls} {{\n{body}\n}}\n"


def write_dataset(name, n, year, owners, repos_per_owner):
    docs = []
    for i in range(n):
        owner = owners[i % len(owners)]
        repo = f"{owner}/{name}-{i % repos_per_owner}"
        cls = ident()
        cls = cls[0].upper() + cls[1:]
        rel = f"files/{name}/{cls}{i}.java"
        content = java_file(cls)
        if name == "toy-seen" and i in (5, 6):
            # near-duplicate of file 4: a one-line edit
            content = docs[4][1].replace("return", "return /* tweak */", 1)
        (HERE / rel).parent.mkdir(parents=True, exist_ok=True)
        (HERE / rel).write_text(content)
        entry = {"id": f"{name}-{i:02d}", "dataset": name, "language": "java", "path": rel, "repo": repo,
                 "commit": f"{rng.getrandbits(40):010x}", "created_at": f"{year}-{1 + i % 12:02d}-{1 + i:02d}"}
        docs.append((entry, content))
    with open(HERE / f"{name}.jsonl", "w") as f:
        for entry, _ in docs:
            f.write(json.dumps(entry, sort_keys=True) + "\n")
    return docs


seen = write_dataset("toy-seen", 20, 2021, ["acme", "globex"], 5)
unseen = write_dataset("toy-unseen", 20, 2024, ["initech", "umbrella"], 4)

# The reference model trains on the "seen" benchmark files, so they are memorized.
with open(HERE / "train.jsonl", "w") as f:
    for entry, _ in seen:
        f.write(json.dumps({**entry, "id": "train-" + entry["id"], "dataset": "train"}, sort_keys=True) + "\n")

index = sorted({e["repo"] for e, _ in seen})
(HERE / "index").mkdir(exist_ok=True)
(HERE / "index" / "v1.0.txt").write_text("# toy index snapshot\n" + "\n".join(index[:6]) + "\n")
(HERE / "index" / "v2.0.txt").write_text("# toy index snapshot\n" + "\n".join(index + ["initech/toy-unseen-0"]) + "\n")
