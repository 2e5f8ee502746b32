#!/usr/bin/env python3
"""Regenerates the bundled fixture corpus under data/fixtures/.

The fixture is deterministic: sentences are built from fixed templates with
greek-letter variant suffixes, grouped into documents of five sentences, and
spread over three shards. Group sizes are chosen so the document-admission
rule has something to bite on (60/50/40 arguments for one topic+stance).
"""
import json
import os

GREEK = ["alpha", "beta", "gamma", "delta", "epsilon", "zeta", "eta", "theta"]

def variants(n):
    out = []
    for a in GREEK:
        for b in GREEK:
            out.append(f"in scenario {a} {b}")
            if len(out) == n:
                return out
    raise ValueError("too many variants requested")

def pool(template, n):
    return [template.format(v=v) for v in variants(n)]

NUKE = {
    "con_waste": pool("Nuclear energy should be banned because the waste problem keeps getting worse {v}.", 60),
    "con_cost": pool("Nuclear energy must be rejected because the cost keeps climbing every year {v}.", 50),
    "con_risk": pool("Nuclear energy ought to be opposed because the risk keeps growing steadily {v}.", 40),
    "pro_safety": pool("Nuclear energy should be supported because safety keeps improving every decade {v}.", 20),
    "pro_jobs": pool("Nuclear energy deserves support because jobs keep multiplying around every station {v}.", 16),
    "nonarg": pool("The nuclear energy station stands near the quiet river bend {v}.", 12),
    "offtopic": pool("The weather stayed calm over the long weekend {v}.", 8),
}

SCHOOL = {
    "con_expensive": pool("School uniforms should be abandoned because they stay expensive for families {v}.", 18),
    "con_individuality": pool("School uniforms should be rejected because they suppress individuality badly {v}.", 15),
    "pro_discipline": pool("School uniforms should be praised because discipline keeps improving visibly {v}.", 16),
    "con_cost_small": pool("School uniforms should be avoided because the cost keeps rising quietly {v}.", 5),
}

def interleave(pools):
    """Round-robin over the pools so documents mix groups."""
    out = []
    idx = [0] * len(pools)
    while True:
        advanced = False
        for i, p in enumerate(pools):
            if idx[i] < len(p):
                out.append(p[idx[i]])
                idx[i] += 1
                advanced = True
        if not advanced:
            return out

def docs_from(sentences, prefix, source, per_doc=5):
    docs = []
    for i in range(0, len(sentences), per_doc):
        body = " ".join(sentences[i : i + per_doc])
        docs.append({"id": f"{prefix}-{i // per_doc:03d}", "text": body, "source": source})
    return docs

def main():
    here = os.path.dirname(os.path.abspath(__file__))
    out_dir = os.path.join(here, "..", "data", "fixtures")
    os.makedirs(out_dir, exist_ok=True)

    nuke_sentences = interleave([
        NUKE["con_waste"], NUKE["con_cost"], NUKE["con_risk"],
        NUKE["pro_safety"], NUKE["pro_jobs"], NUKE["nonarg"], NUKE["offtopic"],
    ])
    # verbatim duplicates; dedup must drop them
    nuke_sentences += NUKE["con_waste"][:6]

    school_sentences = interleave([
        SCHOOL["con_expensive"], SCHOOL["con_individuality"],
        SCHOOL["pro_discipline"], SCHOOL["con_cost_small"],
    ])

    nuke_docs = docs_from(nuke_sentences, "nuke", "cc")
    school_docs = docs_from(school_sentences, "school", "reddit")
    unmatched = [
        {"id": "misc-000", "text": "The recipe calls for two cups of flour and a pinch of salt. Bake it until golden.", "source": "other"},
        {"id": "misc-001", "text": "The orchestra rehearsed the symphony twice before the premiere. Critics enjoyed it.", "source": "other"},
    ]

    all_docs = nuke_docs + school_docs + unmatched
    shards = [all_docs[0::3], all_docs[1::3], all_docs[2::3]]
    for name, docs in zip(["corpus_a.jsonl", "corpus_b.jsonl", "corpus_c.jsonl"], shards):
        with open(os.path.join(out_dir, name), "w") as f:
            for d in docs:
                f.write(json.dumps(d) + "\n")
        print(f"{name}: {len(docs)} documents")
    total = sum(len(s) for s in shards)
    print(f"total: {total} documents, {len(nuke_sentences) + len(school_sentences)} topical sentences")

if __name__ == "__main__":
    main()
