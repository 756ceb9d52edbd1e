#!/usr/bin/env python3
"""Flatten a WN-LMF lexicon (Open English WordNet, OdeNet) into a word-pair TSV.

Two lemmas are adjacent when they share a synset. With --relations, lemmas of
synsets linked by the named synset relations are adjacent as well.
Multi-word lemmas are skipped.
"""
import argparse
import itertools
import sys
import xml.etree.ElementTree as ET
from collections import defaultdict


def read_lexicon(path):
    members = defaultdict(set)
    links = []
    for _, el in ET.iterparse(path, events=("end",)):
        if el.tag == "LexicalEntry":
            lemma = el.find("Lemma")
            if lemma is None:
                continue
            word = lemma.get("writtenForm", "").strip()
            if not word or any(c.isspace() for c in word):
                continue
            for sense in el.findall("Sense"):
                synset = sense.get("synset")
                if synset:
                    members[synset].add(word)
            el.clear()
        elif el.tag == "Synset":
            for rel in el.findall("SynsetRelation"):
                links.append((el.get("id"), rel.get("relType"), rel.get("target")))
            el.clear()
    return members, links


def edges(members, links, relations):
    out = set()
    for words in members.values():
        for a, b in itertools.combinations(sorted(words), 2):
            out.add((a, b))
    for src, kind, dst in links:
        if kind not in relations:
            continue
        for a in members.get(src, ()):
            for b in members.get(dst, ()):
                if a != b:
                    out.add(tuple(sorted((a, b))))
    return sorted(out)


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("lexicon", help="WN-LMF XML file")
    parser.add_argument("-o", "--out", help="output TSV (default stdout)")
    parser.add_argument("--relations", default="",
                        help="comma-separated synset relation types to include, e.g. similar,also")
    args = parser.parse_args(argv)
    relations = {r for r in args.relations.split(",") if r}
    members, links = read_lexicon(args.lexicon)
    rows = edges(members, links, relations)
    sink = open(args.out, "w", encoding="utf-8", newline="\n") if args.out else sys.stdout
    try:
        for a, b in rows:
            sink.write(f"{a}\t{b}\n")
    finally:
        if args.out:
            sink.close()


if __name__ == "__main__":
    main()
