#!/usr/bin/env python3
# One-off generator for the bundled fixtures (data/mini, data/fixtures).
# Not part of the build; run from the repo root.
import json, os

# ---------------------------------------------------------------- lexicon
# token -> (lemma, upos); tokens not listed fall back to (lower(token), X).
LEX = {}
def add(upos, *pairs):
    for item in pairs:
        if isinstance(item, tuple):
            tok, lemma = item
        else:
            tok, lemma = item, item.lower()
        LEX[tok] = (lemma, upos)

add("PRON", "We", "we", "They", "their", "Our", "its", "This")
add("DET", "The", "the", "A", "a", "an", "these", "such", "every", "Every")
add("PUNCT", ".", ",", ":", ";")
add("ADP", "for", "of", "on", "in", "to", "with", "over", "along", "from",
    "via", "by", "As", "throughout", "Unlike")
add("CCONJ", "and", "or")
add("SCONJ", "that")
add("AUX", ("is", "be"), ("are", "be"))
add("ADV", "also", "then")
add("NUM", "two")
add("VERB",
    "introduce", ("carries", "carry"), ("classifies", "classify"),
    "give", "admit", ("admits", "admit"), "provide", "prove", ("uses", "use"), "classify",
    "compute", ("relates", "relate"), "extend", "arise", "revisit",
    ("induces", "induce"), "characterize", ("yields", "yield"), "describe",
    "study", "relate", "organize", ("computes", "compute"), "include",
    "replace", "subsume", ("applies", "apply"), "carry", "encode",
    ("extends", "extend"), "present", "construct", ("detected", "detect"),
    "generalize", "correspond", ("determines", "determine"), "discuss",
    ("preserved", "preserve"), ("follows", "follow"), "compare",
    ("filtered", "filter"))
add("ADJ",
    "inverse", "canonical", "associated", "complete", "partial", "monoidal",
    "Monoidal", "lax", "planar", "braided", "constant", "spectral",
    "simplicial", "key", "derived", "global", "classical", "Adjoint",
    "pointwise", "dense", "new", "adjoint", "reversible", "discrete",
    "free", "little", "associative", "Enriched", "enriched", "Weighted",
    "ordinary", "horizontal", "vertical", "fibrant", "double", "Double",
    "framed", "Weak", "compatible", "left", "total", "commutative",
    "dualizing", "linear", "residuated", "higher", "many", "quotient",
    "Spectral", "known")
add("NOUN",
    ("torsors", "torsor"), "torsor", ("semigroups", "semigroup"),
    "semigroup", "action", ("actions", "action"), "topos", "category",
    ("categories", "category"), "description", ("groups", "group"), "group",
    ("symmetries", "symmetry"), "framework", "tensor",
    ("products", "product"), "coherence", "theorem", ("functors", "functor"),
    "functor", "proof", "rewriting", "argument", ("diagrams", "diagram"),
    "application", ("applications", "application"),
    ("Applications", "application"), ("structures", "structure"),
    "structure", "homology", "cohomology", ("sheaves", "sheaf"), "sheaf",
    "sequence", ("sequences", "sequence"), "tool", "section",
    ("results", "result"), ("computations", "computation"),
    ("presheaves", "presheaf"), "mathematics", ("extensions", "extension"),
    "adjunction", "monad", "base", ("colimits", "colimit"),
    ("adjoints", "adjoint"), "characterization",
    ("Groupoids", "groupoid"), ("groupoids", "groupoid"), "groupoid",
    ("processes", "process"), ("fibrations", "fibration"), "fibration",
    "nerve", ("spaces", "space"), "covering", ("stacks", "stack"),
    ("Operads", "operad"), ("operads", "operad"), "operad",
    ("operations", "operation"), ("inputs", "input"), ("terms", "term"),
    ("trees", "tree"), "bar", "construction", ("Examples", "example"),
    ("cubes", "cube"), "hom", ("sets", "set"), ("objects", "object"),
    ("limits", "limit"), "representability", "criterion",
    ("quantales", "quantale"), ("Quantales", "quantale"),
    ("morphisms", "morphism"), ("Companions", "companion"),
    ("companions", "companion"), ("conjoints", "conjoint"),
    ("pairs", "pair"), ("bicategories", "bicategory"),
    ("Model", "model"), "model", ("models", "model"),
    ("equivalences", "equivalence"), "equivalence", ("stalks", "stalk"),
    "localization", ("complexes", "complex"), "complex",
    ("filtrations", "filtration"), "convergence", ("Convergence", "convergence"),
    "boundedness", "condition", ("frames", "frame"),
    ("lattices", "lattice"), "element", "logic", "classification",
    "closure", ("operators", "operator"), ("invariants", "invariant"),
    "invariant", ("surfaces", "surface"), ("cobordisms", "cobordism"),
    "algebra", "correspondence", ("dimensions", "dimension"))
add("PROPN", "Kan", "Bousfield", "Serre", "Girard", "Frobenius")

def tag(token):
    if token in LEX:
        return LEX[token]
    return (token.lower(), "X")

# ---------------------------------------------------------------- abstracts
# (id, keywords, [sentence tokens], {sent_index: raw text override})
ABSTRACTS = [
    ("a01", ["Torsors", "inverse semigroups", "topos"], [
        "We introduce torsors for inverse semigroups .",
        "Every torsor carries a canonical semigroup action .",
        "The associated topos classifies these torsors .",
        "We give a complete description of the category of torsors .",
        "Unlike groups , inverse semigroups admit partial symmetries .",
    ], {1: "Every torsor $T$ carries a canonical semigroup action."}),
    ("a02", ["monoidal categories", "coherence"], [
        "Monoidal categories provide a framework for tensor products .",
        "We prove a coherence theorem for lax monoidal functors .",
        "The proof uses a rewriting argument on planar diagrams .",
        "As an application , we classify braided monoidal structures on group actions .",
    ], {}),
    ("a03", ["sheaf", "(co)homology"], [
        "We compute the homology and cohomology of constant sheaves .",
        "A spectral sequence relates sheaf cohomology to simplicial homology .",
        "The key tool is a derived functor of the global section functor .",
        "Our results extend classical computations for presheaves .",
    ], {0: "We compute the homology and cohomology of constant sheaves $\\underline{A}$."}),
    ("a04", ["adjoint functors", "Kan extensions"], [
        "Adjoint functors arise throughout mathematics .",
        "We revisit pointwise Kan extensions along dense functors .",
        "Every adjunction induces a monad on its base category .",
        "We characterize colimits preserved by left adjoints .",
        "The characterization yields a new proof of the adjoint functor theorem .",
    ], {}),
    ("a05", ["groupoids", "fibrations"], [
        "Groupoids describe reversible processes .",
        "We study fibrations of groupoids and their nerve spaces .",
        "A covering of groupoids is a discrete fibration .",
        "We relate groupoid actions to torsors over quotient stacks .",
    ], {}),
    ("a06", ["operads", "trees"], [
        "Operads organize operations with many inputs .",
        "We describe free operads in terms of planar trees .",
        "A bar construction computes the homology of an operad .",
        "Examples include the little cubes operad and the associative operad .",
    ], {}),
    ("a07", ["enriched categories", "weighted limits"], [
        "Enriched categories replace hom sets with hom objects .",
        "Weighted limits subsume ordinary limits and colimits .",
        "We prove a representability criterion for enriched presheaves .",
        "The criterion applies to categories enriched in quantales .",
    ], {0: "Enriched categories replace hom sets with hom objects $[x,y]$."}),
    ("a08", ["double categories", "companions"], [
        "Double categories carry horizontal and vertical morphisms .",
        "Companions and conjoints encode adjoint pairs of morphisms .",
        "We prove that every fibrant double category admits companions .",
        "This extends known results for framed bicategories .",
    ], {}),
    ("a09", ["model structures", "homotopy categories"], [
        "Model structures present homotopy categories .",
        "We construct a model structure on simplicial sheaves .",
        "Weak equivalences are detected on stalks .",
        "The construction is compatible with left Bousfield localization .",
    ], {}),
    ("a10", ["spectral sequences", "filtrations"], [
        "Spectral sequences compute homology of filtered complexes .",
        "We compare two filtrations on the total complex of a double complex .",
        "Convergence follows from a boundedness condition .",
        "Applications include the Serre spectral sequence .",
    ], {}),
    ("a11", ["quantales", "residuated lattices"], [
        "Quantales generalize frames and residuated lattices .",
        "We classify commutative quantales with a dualizing element .",
        "Girard quantales correspond to linear logic models .",
        "The classification uses a semigroup of closure operators .",
    ], {}),
    ("a12", ["topological quantum field theory", "cobordisms"], [
        "We study invariants of surfaces via cobordisms .",
        "A commutative Frobenius algebra determines such an invariant .",
        "The correspondence is an equivalence of categories .",
        "We discuss extensions to higher dimensions .",
    ], {0: "1. Introduction\nWe study invariants of surfaces via cobordisms."}),
]

# "homotopy" appears only in a09 keywords context; make sure the corpus also
# carries the words for them.
EXTRA_TAGS = {"homotopy": ("homotopy", "NOUN")}
LEX.update(EXTRA_TAGS)

def detok(tokens):
    out = []
    for t in tokens:
        if t in {".", ",", ":", ";"} and out:
            out[-1] += t
        else:
            out.append(t)
    return " ".join(out)

def make_jsonl():
    lines = []
    for doc_id, keywords, sentences, raw_override in ABSTRACTS:
        parts = []
        for i, sent in enumerate(sentences):
            parts.append(raw_override.get(i, detok(sent.split())))
        rec = {"id": doc_id, "text": " ".join(parts), "keywords": keywords}
        lines.append(json.dumps(rec, ensure_ascii=False))
    return "\n".join(lines) + "\n"

def token_line(i, form):
    lemma, upos = tag(form)
    return f"{i}\t{form}\t{lemma}\t{upos}\t_\t_\t_\t_\t_\t_"

def make_conllu():
    out = []
    unknown = set()
    for doc_id, keywords, sentences, _ in ABSTRACTS:
        out.append(f"# newdoc id = {doc_id}")
        out.append("# keywords = " + " | ".join(keywords))
        for s, sent in enumerate(sentences, start=1):
            out.append(f"# sent_id = {doc_id}-s{s}")
            for i, form in enumerate(sent.split(), start=1):
                lemma, upos = tag(form)
                if upos == "X":
                    unknown.add(form)
                out.append(token_line(i, form))
            out.append("")
    if unknown:
        raise SystemExit(f"untagged tokens: {sorted(unknown)}")
    return "\n".join(out) + "\n"

GAZETTEER = [
    "torsor", "inverse semigroup", "semigroup action", "topos",
    "category of torsors", "monoidal category", "tensor product",
    "coherence theorem", "sheaf", "spectral sequence", "derived functor",
    "adjoint functor", "Kan extension", "groupoid", "fibration",
    "nerve space", "operad", "planar tree", "bar construction",
    "enriched category", "weighted limit", "double category", "companion",
    "model structure", "homotopy category", "quantale", "residuated lattice",
    "Frobenius algebra", "cobordism", "elliptic curve",
]

TITLES = [
    "torsor", "Torsors", "inverse semigroup", "topos", "semigroup",
    "semigroup action", "group", "group action", "category",
    "monoidal category", "braided monoidal category", "tensor product",
    "functor", "adjoint functor", "natural transformation", "limit",
    "colimit", "Kan extension", "monad", "groupoid", "fibration", "sheaf",
    "presheaf", "cohomology", "homology", "spectral sequence", "operad",
    "enriched category", "weighted limit", "double category",
    "model structure", "homotopy category", "simplicial set", "quantale",
    "residuated lattice", "Frobenius algebra", "cobordism", "linear logic",
    "closure operator", "Yoneda lemma",
]

PIPELINE_CFG = """# End-to-end run over the bundled mini corpus.
corpus = corpus.conllu
extractors = textrank, chunker, gazetteer
gazetteer = gazetteer.txt
references = keywords, wiki, nounphrases
titles = titles.txt
combined = union
format = markdown
out_dir = results/mini
workers = 2
log = quiet
"""

def make_roundtrip():
    # 100 sentences in 10 documents, with skipped constructs sprinkled in.
    words = [
        ("torsors", "torsor", "NOUN"), ("acts", "act", "VERB"),
        ("on", "on", "ADP"), ("the", "the", "DET"),
        ("monoidal", "monoidal", "ADJ"), ("category", "category", "NOUN"),
        ("of", "of", "ADP"), ("sheaves", "sheaf", "NOUN"),
        ("over", "over", "ADP"), ("a", "a", "DET"),
        ("topos", "topos", "NOUN"), (".", ".", "PUNCT"),
        ("we", "we", "PRON"), ("prove", "prove", "VERB"),
        ("results", "result", "NOUN"), ("about", "about", "ADP"),
        ("limits", "limit", "NOUN"), (",", ",", "PUNCT"),
        ("colimits", "colimit", "NOUN"), ("and", "and", "CCONJ"),
    ]
    out = []
    n = 0
    for d in range(1, 11):
        out.append(f"# newdoc id = rt{d:02d}")
        if d % 3 == 0:
            out.append(f"# keywords = torsor | sheaf theory")
        for s in range(1, 11):
            n += 1
            out.append(f"# sent_id = rt{d:02d}-s{s}")
            out.append(f"# text = synthetic sentence {n}")
            length = 4 + (n % 7)
            idx = 0
            for i in range(1, length + 1):
                form, lemma, upos = words[(n * 3 + i) % len(words)]
                idx += 1
                # Sprinkle skipped constructs: a range line before token 2
                # and an empty node after token 3 in some sentences.
                if i == 2 and n % 5 == 0:
                    out.append(f"{i}-{i+1}\tdummy_range\t_\t_\t_\t_\t_\t_\t_\t_")
                out.append(f"{idx}\t{form}\t{lemma}\t{upos}\t_\t_\t_\t_\t_\t_")
                if i == 3 and n % 7 == 0:
                    out.append(f"{i}.1\tghost\t_\t_\t_\t_\t_\t_\t_\t_")
            out.append("")
    assert n == 100
    return "\n".join(out) + "\n"

def main():
    os.makedirs("data/mini", exist_ok=True)
    os.makedirs("data/fixtures", exist_ok=True)
    with open("data/mini/abstracts.jsonl", "w") as f:
        f.write(make_jsonl())
    with open("data/mini/corpus.conllu", "w") as f:
        f.write(make_conllu())
    with open("data/mini/gazetteer.txt", "w") as f:
        f.write("\n".join(GAZETTEER) + "\n")
    with open("data/mini/titles.txt", "w") as f:
        f.write("\n".join(TITLES) + "\n")
    with open("data/mini/pipeline.cfg", "w") as f:
        f.write(PIPELINE_CFG)
    with open("data/fixtures/roundtrip_100.conllu", "w") as f:
        f.write(make_roundtrip())
    print("fixtures written")

if __name__ == "__main__":
    main()
