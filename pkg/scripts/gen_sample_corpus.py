#!/usr/bin/env python3
"""Generate the bundled sample corpus and verify its planted structure.

The corpus is engineered, not random: reader-count bands per category are
chosen so the default training labels produce a tree that puts the
planted top expert of information_retrieval alone in the best leaf,
leaves ranks 2 and 3 score-tied in the middle leaf, and pushes everyone
else low. The script rebuilds everything, trains, and asserts the whole
story (including the vote-swap behavior) before writing files.

Run from the repo root:  python scripts/gen_sample_corpus.py
"""

from __future__ import annotations

import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
OUT = ROOT / "src" / "expertnet" / "data" / "sample_corpus"
FIXTURE = ROOT / "src" / "expertnet" / "data" / "conference_call.txt"

sys.path.insert(0, str(ROOT / "src"))

from expertnet.corpus import Corpus  # noqa: E402
from expertnet.engine import Engine  # noqa: E402
from expertnet.graph import author_person_id  # noqa: E402
from expertnet.tree import Leaf  # noqa: E402

IR, ML, SN = "information_retrieval", "machine_learning", "social_networks"

# ---------------------------------------------------------------------------
# people
# ---------------------------------------------------------------------------
# (name, status, source-or-None, interests); profile assigned when source set
PEOPLE = {
    IR: {
        "planted": [
            ("Alice Reed", "professor", "mendeley", ["information retrieval", "ranking"]),
            ("Bob Stone", "postdoc", "mendeley", ["search engines", "indexing"]),
            ("Carol Diaz", "phd_student", "academia", ["relevance feedback", "query expansion"]),
        ],
        "lows": [
            ("Hana Kim", "phd_student", "mendeley", ["text retrieval"]),
            ("Ivan Petrov", "postdoc", "academia", ["indexing"]),
            ("Jill Novak", "other", None, []),
        ],
        "background": [
            ("Gwen Harper", "professor", "mendeley", ["search engines"]),
            ("Omar Haddad", "postdoc", None, []),
            ("Pria Nair", "phd_student", "academia", ["ranking"]),
            ("Quinn Foster", "other", None, []),
            ("Rosa Marin", "professor", "mendeley", ["information retrieval"]),
            ("Sven Larsen", "postdoc", None, []),
            ("Tara Wolfe", "phd_student", "mendeley", ["query expansion"]),
            ("Umar Farouk", "other", "academia", ["document ranking"]),
            ("Vera Lind", "professor", None, []),
            ("Wade Boone", "postdoc", "mendeley", ["evaluation"]),
            ("Xena Cruz", "phd_student", None, []),
            ("Yuri Volkov", "other", "academia", ["search engines"]),
        ],
    },
    ML: {
        "planted": [
            ("Milo Fox", "professor", "mendeley", ["machine learning", "decision trees"]),
            ("Tim Vance", "postdoc", "academia", ["classification", "neural networks"]),
        ],
        "lows": [
            ("Kira Sato", "phd_student", "mendeley", ["clustering"]),
            ("Liam Burke", "other", None, []),
            ("Mona Adel", "postdoc", "academia", ["feature selection"]),
        ],
        "background": [
            ("Noel Price", "professor", "mendeley", ["supervised learning"]),
            ("Oren Katz", "postdoc", None, []),
            ("Pablo Ruiz", "phd_student", "academia", ["regression"]),
            ("Queenie Lam", "other", None, []),
            ("Rhea Kapoor", "professor", "mendeley", ["decision trees"]),
            ("Sam Doyle", "postdoc", None, []),
            ("Tessa Young", "phd_student", "mendeley", ["clustering"]),
            ("Ugo Ricci", "other", None, []),
            ("Vik Sharma", "professor", "academia", ["neural networks"]),
            ("Wes Hardy", "postdoc", None, []),
            ("Yara Saleh", "phd_student", "mendeley", ["classification"]),
        ],
    },
    SN: {
        "planted": [
            ("Nina Silva", "professor", "academia", ["social networks", "centrality"]),
            ("Sue Park", "phd_student", "mendeley", ["community detection"]),
        ],
        "lows": [
            ("Asha Rao", "other", "academia", ["link prediction"]),
            ("Ben Cole", "phd_student", None, []),
            ("Cleo Frost", "postdoc", "mendeley", ["graph mining"]),
        ],
        "background": [
            ("Drew Hale", "professor", "mendeley", ["network analysis"]),
            ("Elif Demir", "postdoc", None, []),
            ("Finn Walsh", "phd_student", "academia", ["community detection"]),
            ("Gina Ros", "professor", "academia", ["community detection"]),
            # ^ author spelling; the profile record says "Gina Ross"
            ("Hugo Mendes", "other", "mendeley", ["graph mining"]),
            ("Iris Chen", "postdoc", "academia", ["centrality"]),
            ("Jack Monroe", "phd_student", None, []),
            ("Kay Bauer", "other", "mendeley", ["network topology"]),
            ("Leo Martins", "professor", None, []),
            ("Mira Patel", "postdoc", "academia", ["link prediction"]),
            ("Sam Hull", "other", None, []),  # ties against Sam Hill / Sam Hall profiles
        ],
    },
}

# Profiles that exist without any matching author (friend-only members).
PROFILE_ONLY = [
    ("Walter Gray", "professor", "mendeley", ["information retrieval"]),
    ("Zoe Quinn", "postdoc", "academia", ["social networks"]),
    ("Ravi Menon", "other", "mendeley", ["machine learning"]),
    ("Sam Hill", "professor", "mendeley", ["graph mining"]),
    ("Sam Hall", "postdoc", "academia", ["network analysis"]),
]

# The one intentionally noisy author spelling: profile display differs.
PROFILE_DISPLAY_OVERRIDES = {"Gina Ros": "Gina Ross"}

JOURNALS = [
    ("Journal of Information Retrieval", 0.92),
    ("Search Systems Review", 0.75),
    ("Machine Learning Letters", 0.88),
    ("Computational Intelligence Quarterly", 0.66),
    ("Network Science Journal", 0.85),
    ("Social Computing Review", 0.58),
    ("Workshop Notes on Data Mining", 0.30),
    ("Annals of Applied Informatics", 0.45),
]

TAXONOMY = [
    (IR, "Information Retrieval",
     ["information retrieval", "search", "search engines", "ranking", "indexing",
      "query", "relevance feedback", "text retrieval", "document ranking", "evaluation"]),
    (ML, "Machine Learning",
     ["machine learning", "classification", "decision trees", "neural networks",
      "clustering", "supervised learning", "regression", "feature selection"]),
    (SN, "Social Network Analysis",
     ["social networks", "network analysis", "centrality", "community detection",
      "link prediction", "graph mining", "network topology"]),
]

# Planted in-category reader totals (the bands the tree will split on).
TARGETS = {
    "Alice Reed": ("ir", [120, 100, 90, 80, 70, 60]),   # 520: alone above 460
    "Bob Stone": ("ir", [90, 80, 70, 60]),              # 300: middle leaf
    "Carol Diaz": ("ir", [80, 70, 60, 50]),             # 260: middle leaf
    "Milo Fox": ("ml", [200, 150, 120, 80, 60]),        # 610: top band
    "Tim Vance": ("ml", [150, 130, 120]),               # 400: middle band, non-expert
    "Nina Silva": ("sn", [180, 140, 120, 100]),         # 540: top band
    "Sue Park": ("sn", [90, 80, 70]),                   # 240: below root split
    "Hana Kim": ("ir", [70, 50]),
    "Ivan Petrov": ("ir", [60, 50]),
    "Jill Novak": ("ir", [60, 40]),
    "Kira Sato": ("ml", [50, 40]),
    "Liam Burke": ("ml", [45, 35]),
    "Mona Adel": ("ml", [40, 30]),
    "Asha Rao": ("sn", [35, 25]),
    "Ben Cole": ("sn", [30, 20]),
    "Cleo Frost": ("sn", [25, 15]),
}

LABELS = [
    ("Alice Reed", IR, 1), ("Bob Stone", IR, 1), ("Carol Diaz", IR, 1),
    ("Hana Kim", IR, 0), ("Ivan Petrov", IR, 0), ("Jill Novak", IR, 0),
    ("Milo Fox", ML, 1), ("Tim Vance", ML, 0),
    ("Kira Sato", ML, 0), ("Liam Burke", ML, 0), ("Mona Adel", ML, 0),
    ("Nina Silva", SN, 1), ("Sue Park", SN, 0),
    ("Asha Rao", SN, 0), ("Ben Cole", SN, 0), ("Cleo Frost", SN, 0),
]

TITLES = {
    IR: ["Adaptive ranking for federated document search",
         "Query reformulation under sparse relevance signals",
         "Index pruning strategies for interactive retrieval",
         "Session-aware evaluation of search interfaces",
         "Learning to rank with readership evidence",
         "Feedback loops in exploratory search"],
    ML: ["Threshold selection in decision tree induction",
         "Regularization effects in shallow classifiers",
         "Cluster stability under feature perturbation",
         "Benchmarking supervised learners on small corpora",
         "Feature interaction screening at scale",
         "Calibration of tree ensembles"],
    SN: ["Bridging ties in fragmented collaboration graphs",
         "Centrality drift in growing communities",
         "Link prediction with weighted neighborhoods",
         "Clique formation in coauthorship data",
         "Community boundaries and information flow",
         "Topology of reader-overlap networks"],
}


def main() -> None:
    # ---- people bookkeeping ------------------------------------------------
    profiles = []      # rows for profiles.txt
    pid_of = {}        # display name -> profile id
    next_pid = 1

    def add_profile(name, status, source, interests):
        nonlocal next_pid
        display = PROFILE_DISPLAY_OVERRIDES.get(name, name)
        pid = f"u{next_pid:02d}"
        next_pid += 1
        profiles.append((pid, display, status, source, interests))
        pid_of[name] = pid

    for cat in (IR, ML, SN):
        for group in ("planted", "lows", "background"):
            for name, status, source, interests in PEOPLE[cat][group]:
                if source is not None and name != "Sam Hull":
                    add_profile(name, status, source, interests)
    for name, status, source, interests in PROFILE_ONLY:
        add_profile(name, status, source, interests)

    authors_of = {cat: [n for g in ("planted", "lows", "background")
                        for (n, *_rest) in PEOPLE[cat][g]] for cat in (IR, ML, SN)}

    # ---- publications -------------------------------------------------------
    pubs = []          # (pub_id, title, [authors], journal, category, readers)
    totals = {}        # (name, category) -> reader sum
    counters = {"ir": 0, "ml": 0, "sn": 0, "xx": 0}

    def add_pub(prefix, category, authors, readers, journal):
        counters[prefix] += 1
        pub_id = f"{prefix}{counters[prefix]:03d}"
        title = TITLES.get(category, ["Notes on mixed-domain collaboration"])[
            counters[prefix] % 6 if category else 0
        ]
        pubs.append((pub_id, title, authors, journal, category, readers))
        if category:
            for a in set(authors):
                totals[(a, category)] = totals.get((a, category), 0) + readers

    def backgrounds(cat):
        return [n for (n, *_r) in PEOPLE[cat]["background"]]

    # Planted people. Coauthor choices and journal mixes are deliberate:
    # the labels must be separable by in-category readership but NOT by any
    # single centrality or by journal rank, so the two planted non-experts
    # (Tim, Sue) sit inside the experts' range on every other feature.
    def plant(name, prefix, cat, coauthors, journal_picks):
        readers_list = TARGETS[name][1]
        for i, readers in enumerate(readers_list):
            group = [name, coauthors[i % len(coauthors)]]
            add_pub(prefix, cat, group, readers, journal_picks[i % len(journal_picks)])

    # journal_rank means: alice .835, bob .60, carol .61, milo .825,
    # tim .78, nina .715, sue .79 (non-experts interior among experts)
    plant("Alice Reed", "ir", IR,
          ["Gwen Harper", "Omar Haddad", "Pria Nair", "Quinn Foster", "Rosa Marin", "Sven Larsen"],
          ["Journal of Information Retrieval", "Search Systems Review", ""])
    plant("Bob Stone", "ir", IR,
          ["Tara Wolfe", "Umar Farouk", "Vera Lind", "Wade Boone"],
          ["Search Systems Review", "Annals of Applied Informatics"])
    plant("Carol Diaz", "ir", IR,
          ["Xena Cruz", "Yuri Volkov"],  # repeated pair: strong ties, few neighbors
          ["Journal of Information Retrieval", "Workshop Notes on Data Mining"])
    plant("Milo Fox", "ml", ML,
          ["Noel Price", "Sam Doyle", "Oren Katz", "Tessa Young", "Vik Sharma"],
          ["Machine Learning Letters", "", "Machine Learning Letters",
           "Computational Intelligence Quarterly", "Machine Learning Letters"])
    plant("Tim Vance", "ml", ML,
          ["Queenie Lam", "Ugo Ricci", "Wes Hardy"],
          ["Machine Learning Letters", "Social Computing Review", "Machine Learning Letters"])
    plant("Nina Silva", "sn", SN,
          ["Finn Walsh", "Gina Ros", "Hugo Mendes", "Kay Bauer"],
          ["Network Science Journal", "Social Computing Review"])
    plant("Sue Park", "sn", SN,
          ["Elif Demir", "Jack Monroe", "Leo Martins"],
          ["Network Science Journal", "Machine Learning Letters", "Network Science Journal"])

    # Labeled lows: two small solo publications each, journals mixed on
    # purpose so journal_rank does not separate the classes; one 0-reader
    # collaboration ties each of them into the cluster so their
    # centralities are not uniformly zero.
    low_journals = ["Machine Learning Letters", "Journal of Information Retrieval",
                    "Workshop Notes on Data Mining", "", "Network Science Journal",
                    "Annals of Applied Informatics"]
    low_idx = 0
    for cat, prefix in ((IR, "ir"), (ML, "ml"), (SN, "sn")):
        bgs = backgrounds(cat)
        for li, (name, *_rest) in enumerate(PEOPLE[cat]["lows"]):
            for readers in TARGETS[name][1]:
                add_pub(prefix, cat, [name], readers, low_journals[low_idx % 6])
                low_idx += 1
            add_pub(prefix, cat, [name, bgs[(li * 4) % len(bgs)]], 0, "")

    # Background texture, one collaboration chain per category (plus a few
    # triangles), leaving room for the planted hubs and bridges. Tim's
    # coauthors stay out of the ML chain: they form a pendant group whose
    # paths to everyone else run through him.
    TIM_PENDANT = {"Queenie Lam", "Ugo Ricci", "Wes Hardy"}
    for cat, prefix in ((IR, "ir"), (ML, "ml"), (SN, "sn")):
        bgs = backgrounds(cat)
        if cat == ML:
            bgs = [b for b in bgs if b not in TIM_PENDANT]
        for i in range(len(bgs) - 1):
            group = [bgs[i], bgs[i + 1]]
            if i % 4 == 0 and i + 2 < len(bgs):
                group.append(bgs[i + 2])
            readers = 10 + (i * 7) % 26
            journal = JOURNALS[(i * 5) % len(JOURNALS)][0] if i % 4 else ""
            add_pub(prefix, cat, group, readers, journal)
            if cat == ML:  # ML pairs collaborate repeatedly (stronger ties)
                add_pub(prefix, cat, [bgs[i], bgs[i + 1]], 0, "")

    # Sue bridges two otherwise-distant SN members (betweenness without
    # readership); Tim does the same inside ML.
    add_pub("sn", SN, ["Sue Park", "Drew Hale"], 0, "Social Computing Review")
    add_pub("sn", SN, ["Sue Park", "Iris Chen"], 0, "")
    add_pub("ml", ML, ["Tim Vance", "Noel Price"], 0, "")
    add_pub("ml", ML, ["Tim Vance", "Noel Price"], 0, "")
    add_pub("ml", ML, ["Queenie Lam", "Ugo Ricci"], 0, "")
    add_pub("ml", ML, ["Milo Fox", "Oren Katz"], 0, "")
    add_pub("ml", ML, ["Milo Fox", "Tessa Young"], 0, "")
    # Sam Hull publishes once; his profile match is a planted tie.
    add_pub("sn", SN, ["Sam Hull", "Kay Bauer"], 12, "Social Computing Review")

    # A few uncategorized records exercise the optional fields.
    add_pub("xx", None, ["Gwen Harper", "Noel Price"], 8, "")
    add_pub("xx", None, ["Drew Hale"], 5, "Annals of Applied Informatics")
    add_pub("xx", None, ["Omar Haddad", "Elif Demir"], 3, "Workshop Notes on Data Mining")

    # ---- friendships ---------------------------------------------------------
    friend_pairs = [
        # reinforce existing coauthor ties (weight grows by alpha)
        ("Alice Reed", "Gwen Harper"), ("Milo Fox", "Noel Price"),
        ("Nina Silva", "Drew Hale"), ("Carol Diaz", "Tara Wolfe"),
        # fresh ties without coauthorship (weight exactly alpha)
        ("Alice Reed", "Bob Stone"), ("Alice Reed", "Rosa Marin"),
        ("Bob Stone", "Wade Boone"), ("Tim Vance", "Rhea Kapoor"),
        ("Nina Silva", "Iris Chen"), ("Sue Park", "Cleo Frost"),
        ("Milo Fox", "Vik Sharma"), ("Hana Kim", "Pria Nair"),
        ("Kira Sato", "Tessa Young"), ("Asha Rao", "Mira Patel"),
        # friend-only members hang off the clusters
        ("Walter Gray", "Alice Reed"), ("Walter Gray", "Gwen Harper"),
        ("Zoe Quinn", "Nina Silva"), ("Ravi Menon", "Milo Fox"),
        ("Sam Hill", "Sam Hall"),
    ]
    edges = []
    for a, b in friend_pairs:
        edges.append((pid_of[a], pid_of[b]))

    # ---- write files ---------------------------------------------------------
    OUT.mkdir(parents=True, exist_ok=True)

    lines = ["# profile_id|display_name|status|source|interest;interest;..."]
    for pid, display, status, source, interests in profiles:
        lines.append(f"{pid}|{display}|{status}|{source}|{';'.join(interests)}")
    (OUT / "profiles.txt").write_text("\n".join(lines) + "\n", encoding="utf-8")

    lines = ["# pub_id|title|author;author;...|journal|category_id|reader_count|status:count;..."]
    for pub_id, title, authors, journal, category, readers in pubs:
        hist = []
        if readers >= 3:
            hist.append(f"professor:{readers // 3}")
        if readers >= 4:
            hist.append(f"phd_student:{readers // 4}")
        if readers >= 6:
            hist.append(f"other:{readers // 6}")
        lines.append(
            f"{pub_id}|{title}|{';'.join(authors)}|{journal}|{category or ''}|"
            f"{readers}|{';'.join(hist)}"
        )
    (OUT / "publications.txt").write_text("\n".join(lines) + "\n", encoding="utf-8")

    lines = ["# profile_id_a,profile_id_b"]
    lines += [f"{a},{b}" for a, b in edges]
    (OUT / "profile_edges.txt").write_text("\n".join(lines) + "\n", encoding="utf-8")

    lines = ["# journal_name,rank"]
    lines += [f"{name},{rank}" for name, rank in JOURNALS]
    (OUT / "journal_ranks.txt").write_text("\n".join(lines) + "\n", encoding="utf-8")

    lines = ["# category_id|label|word;word;..."]
    lines += [f"{cid}|{label}|{';'.join(vocab)}" for cid, label, vocab in TAXONOMY]
    (OUT / "taxonomy.txt").write_text("\n".join(lines) + "\n", encoding="utf-8")

    lines = ["# person_ref,category_id,0|1"]
    lines += [f"{author_person_id(name)},{cat},{flag}" for name, cat, flag in LABELS]
    (OUT / "training_labels.txt").write_text("\n".join(lines) + "\n", encoding="utf-8")

    FIXTURE.write_text(
        "We are assembling the program committee for an interactive search "
        "symposium and need recognized experts in information retrieval. "
        "Relevant topics include query formulation, ranking models, indexing, "
        "relevance feedback, and the evaluation of search engines. Candidates "
        "should have published work on interactive information retrieval "
        "systems and user-centered search.\n",
        encoding="utf-8",
    )

    # ---- verify the planted structure ---------------------------------------
    corpus = Corpus.load(OUT, strict=True)
    report = corpus.validate(strict=True)
    print(report.render())

    for (name, cat), total in sorted(totals.items()):
        if name in TARGETS and TARGETS[name][0] == {"information_retrieval": "ir"}.get(cat, cat[:2]):
            pass
    # planted totals came out exactly as designed
    for name, (_prefix, parts) in TARGETS.items():
        cat = {"ir": IR, "ml": ML, "sn": SN}[_prefix]
        assert totals[(name, cat)] == sum(parts), (name, totals[(name, cat)])
    # no IR background drifted into the planted bands
    for bg in backgrounds(IR):
        assert totals.get((bg, IR), 0) <= 250, (bg, totals.get((bg, IR), 0))

    engine = Engine.from_corpus(OUT)

    # Diagnostic: per-feature value ordering over the labeled rows.
    from expertnet.centrality import FEATURE_NAMES
    from expertnet.tree import best_split

    rows = []
    for name, cat, flag in LABELS:
        fv = engine.category_features(cat)[author_person_id(name)]
        rows.append((name, fv.as_dict(), bool(flag)))
    print("\nroot-level split quality per feature:")
    for feat in FEATURE_NAMES:
        cand = best_split([r[1][feat] for r in rows], [r[2] for r in rows], feat)
        if cand:
            print(f"  {feat:13} t={cand.threshold:10.4f} gain={cand.gain:.4f} "
                  f"ratio={cand.gain_ratio:.4f}")
    node2 = [r for r in rows if r[1]["reader_count"] > 250]
    print("upper-node ordering per feature (labels):")
    for feat in FEATURE_NAMES:
        order = sorted(node2, key=lambda r: r[1][feat])
        print(f"  {feat:13} " + "  ".join(f"{n}={'+' if l else '-'}:{f[feat]:.3f}"
                                          for n, f, l in order))

    model = engine.train()
    print()
    print(model.to_text())

    # Expected shape: reader_count root at 250, second split at 460.
    assert model.root.feature == "reader_count", model.root.feature
    assert abs(model.root.threshold - 250.0) < 1e-9, model.root.threshold
    upper = model.root.right
    assert not isinstance(upper, Leaf) and upper.feature == "reader_count", upper
    assert abs(upper.threshold - 460.0) < 1e-9, upper.threshold
    leaves = []

    def collect(node):
        if isinstance(node, Leaf):
            leaves.append(node)
        else:
            collect(node.left)
            collect(node.right)

    collect(model.root)
    assert len(leaves) == 3, f"expected 3 leaves, got {len(leaves)}"
    assert [(lf.expert_count, lf.non_expert_count) for lf in leaves] == [(0, 10), (2, 1), (3, 0)]

    rows = engine.experts(IR, k=10)
    for rank, person, score in rows:
        print(rank, person.person_id, person.display_name, f"{score:.6f}")
    assert rows[0][1].display_name == "Alice Reed", "top expert must rank first"
    assert rows[0][2] > rows[1][2] + 1e-12, "rank 1 must be strictly ahead"
    assert abs(rows[1][2] - rows[2][2]) < 1e-12, "ranks 2 and 3 must tie"
    assert rows[1][1].display_name == "Bob Stone"
    assert rows[2][1].display_name == "Carol Diaz"

    # A +1 vote on rank 3 must swap ranks 2 and 3, leaving rank 1 alone.
    engine.vote("demo-voter", rows[2][1].person_id, +1)
    rows2 = engine.experts(IR, k=10)
    assert rows2[0][1].display_name == "Alice Reed"
    assert rows2[1][1].display_name == "Carol Diaz"
    assert rows2[2][1].display_name == "Bob Stone"

    # The bundled fixture text must categorize to information_retrieval.
    suggestions = engine.categorize(FIXTURE.read_text(encoding="utf-8"))
    print()
    for s in suggestions:
        print(s.rank, s.category_id, f"{s.score:.3f}")
    assert suggestions[0].category_id == IR

    # Tie-planted author resolved without a profile.
    hull = engine.resolution.persons[author_person_id("Sam Hull")]
    assert hull.profile_id is None
    assert "Sam Hull" in engine.resolution.tie_discards

    # Noisy spelling resolved to the intended profile.
    gina = engine.resolution.persons[author_person_id("Gina Ros")]
    assert gina.profile_id == pid_of["Gina Ros"]
    assert gina.display_name == "Gina Ross"

    stats = engine.stats()
    print()
    print(stats.render())
    print()
    print(f"persons: {len(engine.resolution.persons)}, pubs: {len(pubs)}, "
          f"profiles: {len(profiles)}, edges: {len(edges)}")
    print("sample corpus OK")


if __name__ == "__main__":
    main()
