#!/usr/bin/env python3
"""Regenerates the bundled sample resources under data/.

The lexical tables are assembled from hand-listed stems and a handful of
productive derivation rules, then trimmed to the inventory sizes the loader
reports for the bundled set. All strings are written in NFC, which keeps the
nukta letters (ড়, ঢ়, য়) in their two-code-point form.

Usage: python3 data/build_resources.py [outdir]
"""

import itertools
import os
import random
import sys
import unicodedata

OUT = sys.argv[1] if len(sys.argv) > 1 else os.path.dirname(os.path.abspath(__file__))


def nfc(s):
    return unicodedata.normalize("NFC", s)


def lev(a, b):
    prev = list(range(len(b) + 1))
    for i, ca in enumerate(a, 1):
        cur = [i]
        for j, cb in enumerate(b, 1):
            cur.append(min(prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (ca != cb)))
        prev = cur
    return prev[-1]


def write(name, header, rows):
    path = os.path.join(OUT, name)
    with open(path, "w", encoding="utf-8") as f:
        for h in header:
            f.write("# " + h + "\n")
        for r in rows:
            f.write("\t".join(nfc(x) for x in r) + "\n")


# ---------------------------------------------------------------------------
# Verb paradigm: 22 full verbs + 2 third-person-only verbs.
#
# Each full verb is described by (lemma, high stem, low stem, perfect stem,
# sadhu root) for consonant stems, or spelled out for the vowel stems.
# ---------------------------------------------------------------------------

PERSONS = ["1", "2", "3"]


def consonant_verb(high, low, perf):
    return {
        ("present", "simple"): [high + "ি", low + "ো", low + "ে"],
        ("present", "continuous"): [high + "ছি", high + "ছ", high + "ছে"],
        ("present", "perfect"): [perf + "েছি", perf + "েছ", perf + "েছে"],
        ("past", "simple"): [high + "লাম", high + "লে", high + "ল"],
        ("past", "perfect"): [perf + "েছিলাম", perf + "েছিলে", perf + "েছিল"],
        ("past", "habitual"): [high + "তাম", high + "তে", high + "ত"],
        ("future", "simple"): [high + "ব", high + "বে", high + "বে"],
    }


def consonant_sadhu(root):
    return {
        ("present", "continuous"): [root + "িতেছি", root + "িতেছ", root + "িতেছে"],
        ("present", "perfect"): [root + "িয়াছি", root + "িয়াছ", root + "িয়াছে"],
        ("past", "simple"): [root + "িলাম", root + "িলে", root + "িল"],
        ("past", "perfect"): [root + "িয়াছিলাম", root + "িয়াছিলে", root + "িয়াছিল"],
        ("past", "habitual"): [root + "িতাম", root + "িতে", root + "িত"],
        ("future", "simple"): [root + "িব", root + "িবে", root + "িবে"],
    }


def consonant_hon(high, perf, root):
    # honorific third-person forms, used only by the register table
    calita = [high + "ছেন", perf + "েছেন", high + "লেন", perf + "েছিলেন", high + "তেন", high + "বেন"]
    sadhu = [root + "িতেছেন", root + "িয়াছেন", root + "িলেন", root + "িয়াছিলেন", root + "িতেন", root + "িবেন"]
    return list(zip(calita, sadhu))


CONSONANT_VERBS = [
    # lemma, high, low, perfect stem
    ("কর্", "কর", "কর", "কর"),
    ("বল্", "বল", "বল", "বল"),
    ("পড়্", "পড়", "পড়", "পড়"),
    ("লিখ্", "লিখ", "লেখ", "লিখ"),
    ("দেখ্", "দেখ", "দেখ", "দেখ"),
    ("শুন্", "শুন", "শোন", "শুন"),
    ("আস্", "আস", "আস", "এস"),
    ("থাক্", "থাক", "থাক", "থেক"),
    ("বস্", "বস", "বস", "বস"),
    ("উঠ্", "উঠ", "ওঠ", "উঠ"),
    ("শিখ্", "শিখ", "শেখ", "শিখ"),
    ("ভাব্", "ভাব", "ভাব", "ভেব"),
    ("রাখ্", "রাখ", "রাখ", "রেখ"),
    ("ধর্", "ধর", "ধর", "ধর"),
    ("চল্", "চল", "চল", "চল"),
    ("কিন্", "কিন", "কেন", "কিন"),
]

# calita past simple of আস্ is suppletive
SUPPLETIVE = {("আস্", "past", "simple"): ["এলাম", "এলে", "এল"]}

VOWEL_VERBS = {
    "খা": {
        ("present", "simple"): ["খাই", "খাও", "খায়"],
        ("present", "continuous"): ["খাচ্ছি", "খাচ্ছ", "খাচ্ছে"],
        ("present", "perfect"): ["খেয়েছি", "খেয়েছ", "খেয়েছে"],
        ("past", "simple"): ["খেলাম", "খেলে", "খেল"],
        ("past", "perfect"): ["খেয়েছিলাম", "খেয়েছিলে", "খেয়েছিল"],
        ("past", "habitual"): ["খেতাম", "খেতে", "খেত"],
        ("future", "simple"): ["খাব", "খাবে", "খাবে"],
    },
    "পা": {
        ("present", "simple"): ["পাই", "পাও", "পায়"],
        ("present", "continuous"): ["পাচ্ছি", "পাচ্ছ", "পাচ্ছে"],
        ("present", "perfect"): ["পেয়েছি", "পেয়েছ", "পেয়েছে"],
        ("past", "simple"): ["পেলাম", "পেলে", "পেল"],
        ("past", "perfect"): ["পেয়েছিলাম", "পেয়েছিলে", "পেয়েছিল"],
        ("past", "habitual"): ["পেতাম", "পেতে", "পেত"],
        ("future", "simple"): ["পাব", "পাবে", "পাবে"],
    },
    "যা": {
        ("present", "simple"): ["যাই", "যাও", "যায়"],
        ("present", "continuous"): ["যাচ্ছি", "যাচ্ছ", "যাচ্ছে"],
        ("present", "perfect"): ["গিয়েছি", "গিয়েছ", "গিয়েছে"],
        ("past", "simple"): ["গেলাম", "গেলে", "গেল"],
        ("past", "perfect"): ["গিয়েছিলাম", "গিয়েছিলে", "গিয়েছিল"],
        ("past", "habitual"): ["যেতাম", "যেতে", "যেত"],
        ("future", "simple"): ["যাব", "যাবে", "যাবে"],
    },
    "দে": {
        ("present", "simple"): ["দিই", "দাও", "দেয়"],
        ("present", "continuous"): ["দিচ্ছি", "দিচ্ছ", "দিচ্ছে"],
        ("present", "perfect"): ["দিয়েছি", "দিয়েছ", "দিয়েছে"],
        ("past", "simple"): ["দিলাম", "দিলে", "দিল"],
        ("past", "perfect"): ["দিয়েছিলাম", "দিয়েছিলে", "দিয়েছিল"],
        ("past", "habitual"): ["দিতাম", "দিতে", "দিত"],
        ("future", "simple"): ["দেব", "দেবে", "দেবে"],
    },
    "নে": {
        ("present", "simple"): ["নিই", "নাও", "নেয়"],
        ("present", "continuous"): ["নিচ্ছি", "নিচ্ছ", "নিচ্ছে"],
        ("present", "perfect"): ["নিয়েছি", "নিয়েছ", "নিয়েছে"],
        ("past", "simple"): ["নিলাম", "নিলে", "নিল"],
        ("past", "perfect"): ["নিয়েছিলাম", "নিয়েছিলে", "নিয়েছিল"],
        ("past", "habitual"): ["নিতাম", "নিতে", "নিত"],
        ("future", "simple"): ["নেব", "নেবে", "নেবে"],
    },
    "হ": {
        ("present", "simple"): ["হই", "হও", "হয়"],
        ("present", "continuous"): ["হচ্ছি", "হচ্ছ", "হচ্ছে"],
        ("present", "perfect"): ["হয়েছি", "হয়েছ", "হয়েছে"],
        ("past", "simple"): ["হলাম", "হলে", "হল"],
        ("past", "perfect"): ["হয়েছিলাম", "হয়েছিলে", "হয়েছিল"],
        ("past", "habitual"): ["হতাম", "হতে", "হত"],
        ("future", "simple"): ["হব", "হবে", "হবে"],
    },
}

VOWEL_SADHU = {
    "খা": ("খাইতেছ", "খাইয়াছ", "খাইল", "খাইয়াছিল", "খাইত", "খাইব"),
    "পা": ("পাইতেছ", "পাইয়াছ", "পাইল", "পাইয়াছিল", "পাইত", "পাইব"),
    "যা": ("যাইতেছ", "গিয়াছ", None, "গিয়াছিল", "যাইত", "যাইব"),
    "দে": ("দিতেছ", "দিয়াছ", None, "দিয়াছিল", None, "দিব"),
    "নে": ("নিতেছ", "নিয়াছ", None, "নিয়াছিল", None, "নিব"),
    "হ": ("হইতেছ", "হইয়াছ", "হইল", "হইয়াছিল", "হইত", "হইব"),
}

VOWEL_HON = {
    "খা": [("খাচ্ছেন", "খাইতেছেন"), ("খেয়েছেন", "খাইয়াছেন"), ("খেলেন", "খাইলেন"), ("খাবেন", "খাইবেন")],
    "পা": [("পাচ্ছেন", "পাইতেছেন"), ("পেয়েছেন", "পাইয়াছেন"), ("পেলেন", "পাইলেন"), ("পাবেন", "পাইবেন")],
    "যা": [("যাচ্ছেন", "যাইতেছেন"), ("গিয়েছেন", "গিয়াছেন"), ("যাবেন", "যাইবেন")],
    "দে": [("দিচ্ছেন", "দিতেছেন"), ("দিয়েছেন", "দিয়াছেন"), ("দেবেন", "দিবেন")],
    "নে": [("নিচ্ছেন", "নিতেছেন"), ("নিয়েছেন", "নিয়াছেন"), ("নেবেন", "নিবেন")],
    "হ": [("হচ্ছেন", "হইতেছেন"), ("হয়েছেন", "হইয়াছেন"), ("হলেন", "হইলেন"), ("হবেন", "হইবেন")],
}


def vowel_sadhu_table(lemma):
    cont, perf, past, pperf, hab, fut = VOWEL_SADHU[lemma]
    t = {
        ("present", "continuous"): [cont + "ি", cont, cont + "ে"],
        ("present", "perfect"): [perf + "ি", perf, perf + "ে"],
        ("past", "perfect"): [pperf + "াম", pperf + "ে", pperf],
        ("future", "simple"): [fut, fut + "ে", fut + "ে"],
    }
    if past:
        t[("past", "simple")] = [past.replace("ল", "লাম") if False else past + "াম", past + "ে", past]
    if hab:
        t[("past", "habitual")] = [hab + "াম", hab + "ে", hab]
    return t


THIRD_ONLY = {
    "ফুট্": {
        ("present", "simple"): "ফোটে",
        ("present", "continuous"): "ফুটছে",
        ("present", "perfect"): "ফুটেছে",
        ("past", "simple"): "ফুটল",
        ("past", "perfect"): "ফুটেছিল",
        ("past", "habitual"): "ফুটত",
        ("future", "simple"): "ফুটবে",
    },
    "ঘট্": {
        ("present", "simple"): "ঘটে",
        ("present", "continuous"): "ঘটছে",
        ("present", "perfect"): "ঘটেছে",
        ("past", "simple"): "ঘটল",
        ("past", "perfect"): "ঘটেছিল",
        ("past", "habitual"): "ঘটত",
        ("future", "simple"): "ঘটবে",
    },
}
THIRD_ONLY_SADHU = {"ফুট্": "ফুট", "ঘট্": "ঘট"}

# habitual past was collected for all but these two
NO_HABITUAL = {"বস্", "উঠ্"}


def build_verbs():
    rows = []
    register_verbs = []  # (sadhu, calita)
    for lemma, high, low, perf in CONSONANT_VERBS:
        table = consonant_verb(high, low, perf)
        for key, forms in SUPPLETIVE.items():
            if key[0] == lemma:
                table[(key[1], key[2])] = forms
        sadhu = consonant_sadhu(high)
        for (tense, aspect), forms in table.items():
            if aspect == "habitual" and lemma in NO_HABITUAL:
                continue
            for p, form in zip(PERSONS, forms):
                rows.append((lemma, tense, p, form, aspect))
        for key, forms in sadhu.items():
            for c, s in zip(table[key], forms):
                register_verbs.append((s, c))
        for c, s in consonant_hon(high, perf, high):
            register_verbs.append((s, c))
    for lemma, table in VOWEL_VERBS.items():
        for (tense, aspect), forms in table.items():
            for p, form in zip(PERSONS, forms):
                rows.append((lemma, tense, p, form, aspect))
        for key, forms in vowel_sadhu_table(lemma).items():
            for c, s in zip(table[key], forms):
                register_verbs.append((s, c))
        for c, s in VOWEL_HON[lemma]:
            register_verbs.append((s, c))
    for lemma, table in THIRD_ONLY.items():
        root = THIRD_ONLY_SADHU[lemma]
        sadhu = consonant_sadhu(root)
        for (tense, aspect), form in table.items():
            rows.append((lemma, tense, "3", form, aspect))
            if (tense, aspect) in sadhu:
                register_verbs.append((sadhu[(tense, aspect)][2], form))
    return rows, register_verbs


# ---------------------------------------------------------------------------
# Pronouns
# ---------------------------------------------------------------------------

PRONOUN_NUMBER = [
    ("আমি", "আমরা"), ("আমার", "আমাদের"), ("আমাকে", "আমাদেরকে"),
    ("তুমি", "তোমরা"), ("তোমার", "তোমাদের"), ("তোমাকে", "তোমাদেরকে"),
    ("তুই", "তোরা"), ("তোর", "তোদের"), ("তোকে", "তোদেরকে"),
    ("সে", "তারা"), ("তার", "তাদের"), ("তাকে", "তাদেরকে"),
    ("আপনি", "আপনারা"), ("আপনার", "আপনাদের"), ("আপনাকে", "আপনাদেরকে"),
    ("তিনি", "তাঁরা"), ("তাঁর", "তাঁদের"), ("তাঁকে", "তাঁদেরকে"),
    ("ইনি", "এঁরা"), ("এঁর", "এঁদের"), ("উনি", "ওঁরা"), ("ওঁর", "ওঁদের"),
    ("কে", "কারা"),
]

# (sadhu, calita)
REGISTER_PRONOUNS = [
    ("ইহা", "এটা"), ("উহা", "ওটা"), ("তাহা", "সেটা"),
    ("ইহারা", "এরা"), ("উহারা", "ওরা"), ("তাহারা", "তারা"),
    ("ইহার", "এর"), ("উহার", "ওর"), ("তাহার", "তার"),
    ("ইহাদের", "এদের"), ("উহাদের", "ওদের"), ("তাহাদের", "তাদের"),
    ("ইহাকে", "একে"), ("উহাকে", "ওকে"), ("তাহাকে", "তাকে"),
    ("যাহা", "যা"), ("যাহার", "যার"), ("যাহাকে", "যাকে"), ("যাহারা", "যারা"),
    ("কাহার", "কার"), ("কাহাকে", "কাকে"),
    ("তাঁহার", "তাঁর"), ("তাঁহাকে", "তাঁকে"), ("তাঁহারা", "তাঁরা"),
    ("ইঁহার", "এঁর"), ("উঁহার", "ওঁর"),
    ("ইহাতে", "এতে"), ("তাহাতে", "তাতে"),
]

# ---------------------------------------------------------------------------
# Gender pairs (masculine, feminine)
# ---------------------------------------------------------------------------

GENDER_EXPLICIT = [
    ("বাবা", "মা"), ("পিতা", "মাতা"), ("ভাই", "বোন"), ("দাদা", "দিদি"),
    ("কাকা", "কাকি"), ("মামা", "মামি"), ("জ্যাঠা", "জেঠি"), ("পিসা", "পিসি"),
    ("মেসো", "মাসি"), ("ছেলে", "মেয়ে"), ("রাজা", "রানি"), ("পুত্র", "কন্যা"),
    ("স্বামী", "স্ত্রী"), ("বর", "কনে"), ("শ্বশুর", "শাশুড়ি"), ("নাতি", "নাতনি"),
    ("খোকা", "খুকি"), ("বুড়ো", "বুড়ি"), ("ষাঁড়", "গাভী"), ("ঘোড়া", "ঘুড়ি"),
    ("মোরগ", "মুরগি"), ("পুরুষ", "মহিলা"), ("নর", "নারী"), ("যুবক", "যুবতী"),
    ("মহাশয়", "মহাশয়া"), ("সম্রাট", "সম্রাজ্ঞী"), ("বিদ্বান", "বিদুষী"),
    ("ভগবান", "ভগবতী"), ("বেয়াই", "বেয়াইন"), ("ঠাকুরদা", "ঠাকুমা"),
    ("দাদু", "দিদিমা"), ("নানা", "নানি"), ("চাচা", "চাচি"), ("খালু", "খালা"),
    ("ফুফা", "ফুফু"), ("সাহেব", "মেম"), ("বাদশা", "বেগম"), ("কর্তা", "গিন্নি"),
    ("বন্ধু", "বান্ধবী"), ("সভাপতি", "সভানেত্রী"), ("অধ্যক্ষ", "অধ্যক্ষা"),
    ("গুরু", "গুরুমা"), ("ভ্রাতা", "ভগিনী"), ("জনক", "জননী"), ("শিশুপুত্র", "শিশুকন্যা"),
    ("মহান", "মহতী"), ("বেটা", "বেটি"), ("দেওর", "ননদ"), ("জামাই", "বউমা"),
    ("বাছুর", "বকনা"), ("পাঁঠা", "পাঁঠী"), ("মদ্দা", "মাদি"), ("হুলো", "মেনি"),
]

AGENT_K = [
    "বালক", "লেখক", "গায়ক", "নায়ক", "শিক্ষক", "পাঠক", "সেবক", "অধ্যাপক", "পরিচালক",
    "সম্পাদক", "প্রযোজক", "চালক", "পালক", "বাহক", "গ্রাহক", "সাধক", "উপাসক",
    "প্রচারক", "প্রকাশক", "সঞ্চালক", "প্রশিক্ষক", "পরীক্ষক", "নির্দেশক", "পরিদর্শক",
    "সহায়ক", "সমর্থক", "দর্শক", "অনুবাদক", "রক্ষক", "পূজক", "যাচক", "গবেষক",
    "আলোচক", "সমালোচক", "পরিবেশক", "প্রতিবেদক", "সংগ্রাহক", "প্রদর্শক", "শাসক",
    "প্রেমিক", "সহশিক্ষক", "প্রধানশিক্ষক", "সহঅধ্যাপক", "উপদেশক", "প্রবর্তক",
    "প্রতিপালক", "অভিভাবক", "আবেদক", "নিবেদক", "উদ্যোক্তা",
]

AGENT_TA = [
    "নেতা", "অভিনেতা", "দাতা", "বিধাতা", "শ্রোতা", "বক্তা", "ভোক্তা", "রচয়িতা",
    "পরিত্রাতা", "জেতা", "নির্মাতা", "প্রণেতা", "ত্রাতা", "অধ্যেতা", "প্রবক্তা",
    "বিজেতা", "প্রতিষ্ঠাতা", "প্রদাতা", "অন্নদাতা", "জন্মদাতা", "প্রাণদাতা",
    "জ্ঞানদাতা", "ভাগ্যবিধাতা", "সুখদাতা", "বরদাতা", "দ্রষ্টা", "স্রষ্টা",
    "আবিষ্কর্তা", "উদ্ধারকর্তা", "পরিচালনকর্তা",
]

AGENT_I = [
    "মালী", "তপস্বী", "মনস্বী", "যশস্বী", "তেজস্বী", "অভিমানী", "সহচারী", "অধিকারী",
    "ভিখারী", "সন্ন্যাসী", "বিলাসী", "সঙ্গী", "প্রবাসী", "অনুরাগী", "যোগী", "ভোগী",
    "ত্যাগী", "রোগী", "দুঃখী", "সুখী", "গুণী", "ধনী", "জ্ঞানী", "মানী", "অভিসারী",
    "অনুগামী", "সহযোগী", "সহপাঠী", "সহকারী", "ব্রহ্মচারী", "কাঙালী", "উদাসী",
    "প্রতিযোগী", "বিরহী", "পূজারী", "সহযাত্রী", "নিবাসী", "বনবাসী", "বিদেশী",
    "প্রতিবেশী", "অভিলাষী", "আশ্রমবাসী", "একাকী", "পাপী", "অপরাধী", "বন্দী",
]

WAN = [
    "গুণবান", "রূপবান", "ধনবান", "ভাগ্যবান", "দয়াবান", "জ্ঞানবান", "বলবান", "প্রাণবান",
    "পুণ্যবান", "শ্রদ্ধাবান", "ঐশ্বর্যবান", "বিত্তবান", "চরিত্রবান", "বিদ্যাবান", "শীলবান",
    "ধৈর্যবান", "সত্যবান", "গুণমান", "বুদ্ধিমান", "শ্রীমান", "শক্তিমান", "কীর্তিমান",
    "ধীমান", "কান্তিমান", "ভক্তিমান", "মতিমান", "রুচিমান", "আয়ুষ্মান", "হৃদয়বান",
    "মূল্যবান",
]

FEM_AA = [
    "প্রিয়", "কান্ত", "বৃদ্ধ", "শিষ্য", "মূর্খ", "চতুর", "দীন", "পূজ্য", "মান্য", "অনাথ",
    "আচার্য", "মৃত", "বিবাহিত", "অবিবাহিত", "পরিচিত", "অপরিচিত", "শিক্ষিত", "অশিক্ষিত",
    "লাঞ্ছিত", "নিপীড়িত", "অবহেলিত", "আমন্ত্রিত", "নির্বাচিত", "মনোনীত", "পরিত্যক্ত",
    "সুশিক্ষিত", "সুপরিচিত", "সম্মানিত", "পুরস্কৃত", "আহত", "নিহত", "জীবিত", "বঞ্চিত",
    "নির্যাতিত", "উপেক্ষিত", "প্রশংসিত", "বন্দিত", "নন্দিত", "সমাদৃত", "অপমানিত",
    "প্রতারিত", "বিতাড়িত", "আশ্রিত", "পালিত", "লালিত", "অনুগৃহীত", "বিখ্যাত", "প্রখ্যাত",
    "সুবিখ্যাত", "অভিজ্ঞ", "বিজ্ঞ", "প্রাজ্ঞ", "নবীন", "প্রবীণ", "চঞ্চল", "অচল",
    "সরল", "কোমল", "নিপুণ", "কুশল", "দক্ষ", "পণ্ডিত", "ধার্মিক", "সাধ্বী",
]

FEM_II = [
    "ছাত্র", "দেব", "কুমার", "তরুণ", "সুন্দর", "ব্রাহ্মণ", "নর্তক", "গোপ", "কিশোর",
    "নট", "হরিণ", "ময়ূর", "সিংহ", "মানব", "দাস", "বৈষ্ণব", "পাগল", "বানর", "মৃগ",
    "কপোত", "হংস", "ঘোটক", "শূকর", "নদ", "পিশাচ", "রাক্ষস", "দানব", "তাপস",
    "কুরঙ্গ", "মাতঙ্গ", "ভুজঙ্গ", "বিহঙ্গ", "শিশুছাত্র", "গৌর", "তনয়",
]

ANI = [
    ("চাকর", "চাকরানি"), ("ঠাকুর", "ঠাকুরানি"), ("মেথর", "মেথরানি"), ("ইন্দ্র", "ইন্দ্রাণী"),
    ("রুদ্র", "রুদ্রাণী"), ("ভব", "ভবানী"), ("শর্ব", "শর্বাণী"), ("মাতুল", "মাতুলানী"),
    ("ক্ষত্রিয়", "ক্ষত্রিয়াণী"), ("নাপিত", "নাপিতানী"), ("চৌধুরী", "চৌধুরানি"),
    ("বাঘ", "বাঘিনী"), ("সাপ", "সাপিনী"), ("কাঙাল", "কাঙালিনী"), ("নাগ", "নাগিনী"),
    ("গোয়ালা", "গোয়ালিনী"), ("ধোপা", "ধোপানী"), ("কলু", "কলুনী"), ("উট", "উটনী"),
    ("মজুর", "মজুরনি"), ("জেলে", "জেলেনি"), ("তাঁতি", "তাঁতিনি"), ("মুচি", "মুচিনি"),
    ("কামার", "কামারনি"), ("কুমোর", "কুমোরনি"), ("পুরোহিত", "পুরোহিতানী"),
    ("মহাজন", "মহাজনী"), ("ডাক্তার", "ডাক্তারনি"), ("মাস্টার", "মাস্টারনি"),
]

MOY = [
    "মধুময়", "আনন্দময়", "করুণাময়", "দয়াময়", "জ্যোতির্ময়", "মমতাময়", "লাবণ্যময়",
    "রহস্যময়", "চিন্ময়", "মৃন্ময়", "প্রেমময়", "কল্যাণময়", "মঙ্গলময়", "সুধাময়",
    "স্নেহময়", "শান্তিময়", "তেজোময়", "বাঙ্ময়",
]


def feminine_k(w):
    return w[:-1] + "িকা" if w.endswith("ক") else None


def feminine_ta(w):
    if w.endswith("ষ্টা"):
        return w[:-1] + "্রী"
    return w[:-1] + "্রী"


def feminine_i(w):
    base = w[:-1]
    suffix = "িণী" if any(c in base for c in "রষঋ") else "িনী"
    return base + suffix


def feminine_wan(w):
    if w.endswith("বান"):
        return w[:-3] + "বতী"
    if w.endswith("ষ্মান"):
        return w[:-3] + "মতী"
    return w[:-3] + "মতী"


def build_gender():
    pairs = list(GENDER_EXPLICIT)
    pairs += [(w, feminine_k(w)) for w in AGENT_K if w.endswith("ক")]
    pairs += [("উদ্যোক্তা", "উদ্যোক্ত্রী")] if "উদ্যোক্তা" in AGENT_K else []
    pairs += [(w, feminine_ta(w)) for w in AGENT_TA]
    pairs += [(w, feminine_i(w)) for w in AGENT_I]
    pairs += [(w, feminine_wan(w)) for w in WAN]
    pairs += [(w, w + "া") for w in FEM_AA if not w.endswith("ী")]
    pairs += [("সাধু", "সাধ্বী")]
    pairs += [(w, w + "ী") for w in FEM_II]
    pairs += ANI
    pairs += [(w, w + "ী") for w in MOY]
    return unique_bijective(pairs)


def unique_bijective(pairs):
    left, right, out = set(), set(), []
    for a, b in pairs:
        a, b = nfc(a), nfc(b)
        if not a or not b or a == b or a in left or b in right or a in right or b in left:
            continue
        left.add(a)
        right.add(b)
        out.append((a, b))
    return out


# ---------------------------------------------------------------------------
# Noun / adjective pairs (noun, adjective)
# ---------------------------------------------------------------------------

NOUN_ADJ_EXPLICIT = [
    ("সৌন্দর্য", "সুন্দর"), ("সাহস", "সাহসী"), ("দয়া", "দয়ালু"), ("অসাধারণত্ব", "অসাধারণ"),
    ("সমাজ", "সামাজিক"), ("ইতিহাস", "ঐতিহাসিক"), ("বিজ্ঞান", "বৈজ্ঞানিক"), ("দিন", "দৈনিক"),
    ("মন", "মানসিক"), ("শরীর", "শারীরিক"), ("ধর্ম", "ধার্মিক"), ("মাস", "মাসিক"),
    ("বৎসর", "বাৎসরিক"), ("সপ্তাহ", "সাপ্তাহিক"), ("নীতি", "নৈতিক"), ("অর্থ", "আর্থিক"),
    ("রাজনীতি", "রাজনৈতিক"), ("সংস্কৃতি", "সাংস্কৃতিক"), ("প্রকৃতি", "প্রাকৃতিক"),
    ("ভূগোল", "ভৌগোলিক"), ("দর্শন", "দার্শনিক"), ("বাণিজ্য", "বাণিজ্যিক"), ("শিল্প", "শৈল্পিক"),
    ("পরিবার", "পারিবারিক"), ("নগর", "নাগরিক"), ("দেশ", "দেশীয়"), ("জাতি", "জাতীয়"),
    ("রাষ্ট্র", "রাষ্ট্রীয়"), ("স্বর্গ", "স্বর্গীয়"), ("মানবতা", "মানবিক"), ("যন্ত্র", "যান্ত্রিক"),
    ("ক্রম", "ক্রমিক"), ("সময়", "সাময়িক"), ("স্থান", "স্থানীয়"), ("লোক", "লৌকিক"),
    ("বেদ", "বৈদিক"), ("ব্যবহার", "ব্যবহারিক"), ("বিভাগ", "বিভাগীয়"), ("অঞ্চল", "আঞ্চলিক"),
    ("সমুদ্র", "সামুদ্রিক"), ("পৃথিবী", "পার্থিব"), ("সংসার", "সাংসারিক"), ("মূল", "মৌলিক"),
    ("শাস্ত্র", "শাস্ত্রীয়"), ("আত্মা", "আত্মিক"), ("ঈশ্বর", "ঐশ্বরিক"), ("সংবিধান", "সাংবিধানিক"),
    ("প্রশাসন", "প্রশাসনিক"), ("বিশ্ব", "বৈশ্বিক"), ("গণিত", "গাণিতিক"), ("রসায়ন", "রাসায়নিক"),
    ("মুখ", "মৌখিক"), ("শব্দ", "শাব্দিক"), ("অক্ষর", "আক্ষরিক"), ("ব্যক্তি", "ব্যক্তিগত"),
    ("সমষ্টি", "সমষ্টিগত"), ("সততা", "সৎ"), ("মাধুর্য", "মধুর"), ("দারিদ্র্য", "দরিদ্র"),
    ("বীরত্ব", "বীর"), ("শান্তি", "শান্ত"), ("ক্লান্তি", "ক্লান্ত"), ("দুঃখ", "দুঃখিত"),
    ("আনন্দ", "আনন্দিত"), ("লজ্জা", "লজ্জিত"), ("ভয়", "ভীত"), ("রাগ", "রাগী"),
    ("ক্রোধ", "ক্রুদ্ধ"), ("উচ্চতা", "উচ্চ"), ("দৈর্ঘ্য", "দীর্ঘ"), ("গভীরতা", "গভীর"),
    ("বার্ধক্য", "বৃদ্ধ"), ("শক্তি", "শক্তিশালী"), ("গুরুত্ব", "গুরুত্বপূর্ণ"),
    ("প্রয়োজন", "প্রয়োজনীয়"), ("আবশ্যকতা", "আবশ্যক"), ("জনপ্রিয়তা", "জনপ্রিয়"),
    ("কাঠিন্য", "কঠিন"), ("স্মরণ", "স্মরণীয়"), ("পূজা", "পূজনীয়"), ("প্রশংসা", "প্রশংসনীয়"),
    ("আদর", "আদরণীয়"), ("শ্রদ্ধা", "শ্রদ্ধেয়"), ("বিশ্বাস", "বিশ্বাসযোগ্য"), ("গ্রহণ", "গ্রহণযোগ্য"),
    ("মূল্য", "মূল্যবান"), ("দাম", "দামি"), ("রঙ", "রঙিন"), ("জল", "জলীয়"), ("বন", "বন্য"),
    ("গ্রাম", "গ্রাম্য"), ("শহর", "শহুরে"), ("ঘর", "ঘরোয়া"), ("পাহাড়", "পাহাড়ি"),
    ("বিদেশ", "বৈদেশিক"), ("আকাশ", "আকাশি"), ("সোনা", "সোনালি"), ("রুপা", "রুপালি"),
    ("বেগুন", "বেগুনি"), ("গোলাপ", "গোলাপি"), ("জাফরান", "জাফরানি"), ("বুদ্ধি", "বুদ্ধিদীপ্ত"),
    ("পরিশ্রম", "পরিশ্রমী"), ("জ্ঞান", "জ্ঞানী"), ("ধন", "ধনী"), ("গুণ", "গুণী"),
    ("স্বাস্থ্য", "স্বাস্থ্যকর"), ("বিপদ", "বিপজ্জনক"), ("লাভ", "লাভজনক"), ("আরাম", "আরামদায়ক"),
    ("সুখ", "সুখকর"), ("ক্ষতি", "ক্ষতিকর"), ("উপকার", "উপকারী"), ("অভিমান", "অভিমানী"),
    ("লোভ", "লোভী"), ("বিদ্রোহ", "বিদ্রোহী"), ("বিজয়", "বিজয়ী"), ("সত্য", "সত্যবাদী"),
    ("কৃষি", "কৃষিজ"), ("খনি", "খনিজ"), ("জলবায়ু", "জলবায়ুগত"), ("উৎসব", "উৎসবমুখর"),
    ("বর্ষা", "বর্ষাকালীন"), ("শীত", "শীতকালীন"), ("গ্রীষ্ম", "গ্রীষ্মকালীন"), ("প্রাচীনত্ব", "প্রাচীন"),
    ("আধুনিকতা", "আধুনিক"), ("নূতনত্ব", "নূতন"), ("পুরাতনত্ব", "পুরাতন"), ("মহত্ত্ব", "মহৎ"),
    ("একাকিত্ব", "নিঃসঙ্গ"), ("স্বাধীনতা", "স্বাধীন"), ("পরাধীনতা", "পরাধীন"), ("শৈশব", "শিশুসুলভ"),
    ("যৌবন", "যৌবনোচিত"), ("কৌতূহল", "কৌতূহলী"), ("উৎসাহ", "উৎসাহী"), ("আগ্রহ", "আগ্রহী"),
    ("বিনয়", "বিনয়ী"), ("অহংকার", "অহংকারী"), ("সংযম", "সংযমী"), ("ঐক্য", "ঐক্যবদ্ধ"),
    ("শৃঙ্খলা", "শৃঙ্খলাবদ্ধ"), ("উন্নতি", "উন্নত"), ("অবনতি", "অবনত"), ("প্রসিদ্ধি", "প্রসিদ্ধ"),
    ("খ্যাতি", "খ্যাতিমান"), ("সমৃদ্ধি", "সমৃদ্ধ"), ("বৈচিত্র্য", "বিচিত্র"), ("ঔদার্য", "উদার"),
    ("চাতুর্য", "চতুর"), ("মৌনতা", "মৌন"), ("পবিত্রতা", "পবিত্র"), ("সৌভাগ্য", "সৌভাগ্যবান"),
    ("দুর্ভাগ্য", "দুর্ভাগা"), ("অভাব", "অভাবী"), ("দোষ", "দোষী"), ("নির্দোষিতা", "নির্দোষ"),
    ("সৌজন্য", "সৌজন্যমূলক"), ("বন্ধুত্ব", "বন্ধুত্বপূর্ণ"), ("শত্রুতা", "শত্রুভাবাপন্ন"),
]

ADJ_TA = [
    "সরল", "জটিল", "কোমল", "নম্র", "ভদ্র", "সভ্য", "নীরব", "সজীব", "সচেতন", "সক্রিয়",
    "স্থির", "চঞ্চল", "তীক্ষ্ণ", "উজ্জ্বল", "দক্ষ", "যোগ্য", "সফল", "ব্যর্থ", "নিষ্ঠুর",
    "নির্ভুল", "নিরপেক্ষ", "বিশ্বস্ত", "সুস্থ", "অসুস্থ", "নির্মল", "শীতল", "উষ্ণ", "আর্দ্র",
    "শুষ্ক", "স্পষ্ট", "অস্পষ্ট", "কঠোর", "নিপুণ", "সুন্দরতম", "দৃঢ়", "মলিন", "নগ্ন",
    "সহজ", "গম্ভীর", "উদাসীন", "নির্ভীক", "অলস", "চপল", "সতর্ক", "নিশ্চিন্ত", "ব্যস্ত",
    "শূন্য", "পূর্ণ", "স্বচ্ছ", "অস্বচ্ছ", "নীচ", "উগ্র", "তীব্র", "মৃদু", "স্নিগ্ধ",
    "প্রখর", "নিবিড়", "প্রবল", "দুর্বল", "সবল", "কৃপণ", "অক্ষম", "সক্ষম", "নিরাপদ",
    "অনিশ্চিত", "সংকীর্ণ", "প্রশস্ত", "বিস্তৃত", "সংক্ষিপ্ত", "গভীরতম", "অভিন্ন", "বিভিন্ন",
    "সমান", "অসমান", "উপযুক্ত", "অনুপযুক্ত", "প্রাসঙ্গিক", "অপ্রাসঙ্গিক", "নিয়মিত",
    "অনিয়মিত", "সুলভ", "দুর্লভ", "স্বাভাবিক", "অস্বাভাবিক", "নিষ্ক্রিয়", "কার্যকর",
    "সুনির্দিষ্ট", "নির্ভরযোগ্য", "গ্রহণীয়", "বর্জনীয়", "নমনীয়", "অনমনীয়", "দৃশ্যমান",
    "অদৃশ্য", "স্থায়ী", "অস্থায়ী", "সাবলীল", "প্রাঞ্জল", "মনোরম", "রমণীয়", "কমনীয়",
    "অপরূপ", "সুমধুর", "কর্কশ", "রুক্ষ", "মসৃণ", "উর্বর", "অনুর্বর", "সুগন্ধ", "দুর্গম",
    "সুগম", "অপরিহার্য", "নিখুঁত", "প্রত্যক্ষ", "পরোক্ষ", "আকস্মিক", "অপ্রত্যাশিত",
]

ADJ_TVA = [
    "মনুষ্য", "পশু", "দেব", "প্রভু", "নেতৃ", "কবি", "শিশু", "বন্ধু", "মাতৃ", "পিতৃ",
    "গুরু", "লঘু", "স্বতন্ত্র", "অমর", "নিজ", "সতী", "সম", "দাস", "মিত্র", "শত্রু",
    "আমিত্ব", "একক", "বহু", "অস্তি", "প্রধান", "বীর", "স্থির", "দৃঢ়", "কর্তৃ", "মহ",
]

ADJ_TA2 = [
    "একাগ্র", "আন্তরিক", "বাস্তব", "সার্থক", "নিরর্থক", "পরিষ্কার", "সংবেদনশীল", "সহনশীল",
    "দায়িত্বশীল", "গতিশীল", "উদ্ভাবনশীল", "সৃজনশীল", "চিন্তাশীল", "প্রগতিশীল", "রক্ষণশীল",
    "ধৈর্যশীল", "শ্রমশীল", "উন্নয়নশীল", "বিবেচক", "নিঃস্ব", "নিঃস্বার্থ", "স্বার্থপর",
    "উদাস", "হতাশ", "নিরাশ", "একঘেয়ে", "ক্ষুদ্র", "বৃহৎ", "বিশাল", "অসীম", "সসীম",
    "অনন্ত", "চিরন্তন", "নশ্বর", "অবিনশ্বর", "ক্ষণস্থায়ী", "দীর্ঘস্থায়ী", "প্রাণবন্ত",
    "জীবন্ত", "নিষ্প্রাণ", "উচ্ছল", "প্রফুল্ল", "বিষণ্ণ", "ক্ষুব্ধ", "ব্যাকুল", "অধীর",
    "স্থিতিশীল", "অস্থির", "সুশৃঙ্খল", "বিশৃঙ্খল", "সুসংগঠিত", "অসংগঠিত", "পরিপক্ব",
    "অপরিপক্ব", "সংকটময়", "নির্জন", "জনবহুল", "ঘন", "পাতলা", "হালকা", "ভারী", "নরম",
    "শক্ত", "ঠান্ডা", "গরম", "তিক্ত", "মিষ্ট", "অম্ল", "লবণাক্ত", "সুস্বাদু", "বিস্বাদ",
    "স্বাদু", "পুরোনো", "নতুন", "কাঁচা", "পাকা", "আলসে", "বোকা", "চালাক", "সাদা", "কালো",
    "লাল", "নীল", "সবুজ", "হলুদ",
]


def build_noun_adj():
    pairs = list(NOUN_ADJ_EXPLICIT)
    pairs += [(w + "তা", w) for w in ADJ_TA]
    pairs += [(w + "ত্ব", w) for w in ADJ_TVA if not w.endswith("ত্ব")]
    pairs += [(w + "তা", w) for w in ADJ_TA2]
    return unique_bijective(pairs)


# ---------------------------------------------------------------------------
# Homonyms: base groups, then inflected forms of the nominal ones
# ---------------------------------------------------------------------------

HOMONYM_BASE = [
    ("অংশ", "অংস"), ("অন্ন", "অন্য"), ("অনু", "অণু"), ("আবরণ", "আভরণ"), ("আপন", "আপণ"),
    ("আশা", "আসা"), ("কুল", "কূল"), ("চির", "চীর"), ("জাম", "যাম"), ("দিন", "দীন"),
    ("নীর", "নীড়"), ("পড়া", "পরা"), ("বাড়ি", "বারি", "শাড়ি"), ("বিষ", "বিশ"), ("শর", "সর", "স্বর"),
    ("শাপ", "সাপ"), ("শোনা", "সোনা"), ("হার", "হাড়"), ("কি", "কী"), ("শব", "সব"),
    ("শত", "সত"), ("কাটা", "কাঁটা"), ("দাড়ি", "দাঁড়ি"), ("শকল", "সকল"), ("শম", "সম"),
    ("সাক্ষর", "স্বাক্ষর"), ("সর্গ", "স্বর্গ"), ("আদি", "আধি"), ("কপাল", "কপোল"),
    ("কোষ", "কোশ"), ("চুত", "চ্যুত"), ("তরণী", "তরুণী"), ("দীপ", "দ্বীপ"), ("দার", "দ্বার"),
    ("নিচ", "নীচ"), ("প্রসাদ", "প্রাসাদ"), ("বিনা", "বীণা"), ("বাণ", "বান"), ("বাদ", "বাধ"),
    ("ভাড়া", "ভারা"), ("লক্ষ", "লক্ষ্য"), ("শুচি", "সূচি"), ("সুত", "সূত"), ("কুজন", "কূজন"),
    ("ক্রীত", "কৃত"), ("গুড়", "গুঁড়"), ("জ্বালা", "জালা"), ("তোড়া", "তোরা"), ("ধুম", "ধূম"),
    ("বড়", "বর"), ("ভীত", "ভিত"), ("শাড়ি", "সারি"), ("কড়া", "করা"), ("ঘোড়া", "ঘোরা"),
    ("পোড়া", "পোরা"), ("পাড়া", "পারা"), ("তাড়া", "তারা"), ("ওড়া", "ওরা"), ("চড়া", "চরা"),
    ("মরা", "মড়া"), ("শিল", "সিল"), ("শুর", "সুর"), ("ভাষা", "ভাসা"), ("কোণ", "কোন"),
    ("পানি", "পাণি"), ("শান", "শাণ"), ("শোন", "শোণ"), ("জোগ", "যোগ"), ("কুট", "কূট"),
    ("চুড়া", "চূড়া"), ("অবধান", "অবদান"), ("অশ্ব", "অশ্ম"), ("উদ্যত", "উদ্ধত"),
    ("আসন", "আশন"), ("কৃতি", "কৃতী"), ("গিরিশ", "গিরীশ"), ("চিত্র", "চিত্ত"),
    ("দেশ", "দ্বেষ"), ("নিরাশ", "নিরাস"), ("পরিচ্ছদ", "পরিচ্ছেদ"), ("বসন", "ব্যসন"),
    ("শঙ্কর", "সংকর"), ("শারদা", "সারদা"), ("শয্যা", "সজ্জা"), ("শিকার", "স্বীকার"),
    ("সম্প্রদান", "সম্প্রদায়"), ("হরিণ", "হরিন"), ("জোর", "জোড়"), ("মোড়া", "মোরা"),
    ("ছড়া", "ছরা"), ("পাশ", "পাস"), ("বাশ", "বাস"), ("আঁশ", "আস"), ("পেশ", "পেষ"),
    ("কাল", "কালো"), ("গাড়ি", "গারি"), ("নাড়ি", "নারী"), ("হাড়ি", "হারি"),
    ("বেড়া", "বেরা"), ("ঝাড়", "ঝার"), ("ষাঁড়", "শাঁড়"),
]

NOMINAL_SUFFIXES = ["র", "কে", "তে"]


def inflect(word, suffix):
    vowel_final = word[-1] in "ািীুূৃেৈোৌ"
    if suffix == "র":
        return word + ("র" if vowel_final else "ের")
    if suffix == "কে":
        return word + "কে"
    if suffix == "তে":
        return word + ("তে" if vowel_final else "ে")
    raise ValueError(suffix)


def build_homonyms(target):
    groups = []
    for g in HOMONYM_BASE:
        g = [nfc(w) for w in g]
        groups.append(g)
    pairs = []
    seen = set()

    def add(a, b):
        if a == b or lev(a, b) > 2:
            return
        key = tuple(sorted((a, b)))
        if key in seen:
            return
        seen.add(key)
        pairs.append(key)

    for g in groups:
        for a, b in itertools.combinations(g, 2):
            add(a, b)
    base_count = len(pairs)
    # inflected variants extend each base pair until the target is reached
    for suffix in NOMINAL_SUFFIXES:
        for g in groups:
            for a, b in itertools.combinations(g, 2):
                if len(pairs) >= target:
                    break
                add(inflect(a, suffix), inflect(b, suffix))
    return pairs[:target], base_count


# ---------------------------------------------------------------------------
# Gold sentence generator
# ---------------------------------------------------------------------------

SUBJECTS = [("আমি", "1"), ("আমরা", "1"), ("তুমি", "2"), ("তোমরা", "2"), ("সে", "3"), ("তারা", "3"), ("ওরা", "3")]
POSSESSIVES = ["তার", "ওর", "এর", "তাদের", "আমার", "তোমার"]
KIN = ["ভাই", "বোন", "দাদা", "দিদি", "বন্ধু", "ছেলে", "মেয়ে", "কাকা", "মামা"]
NAMES = ["রাম", "শ্যামল", "মানস", "রিনা", "অমর", "সুমন", "তানিয়া", "রাজু", "গীতা", "উত্তম"]

TIMES = {
    ("present", "simple"): ["রোজ", "প্রতিদিন", "সবসময়"],
    ("present", "continuous"): ["এখন", "এই মুহূর্তে"],
    ("present", "perfect"): ["আজ", "এইমাত্র"],
    ("past", "simple"): ["গতকাল", "সেদিন"],
    ("past", "perfect"): ["গতকাল", "গত বছর", "আগে"],
    ("past", "habitual"): ["ছোটবেলায়", "আগে"],
    ("future", "simple"): ["আগামীকাল", "পরে", "কাল"],
}

OBJECTS = {
    "কর্": ["কাজ", "পড়াশোনা", "রান্না", "বাড়ির কাজ", "এটা"],
    "বল্": ["কথা", "গল্প", "সব কথা", "সত্যি কথা", "এটা"],
    "পড়্": ["বই", "খবরের কাগজ", "চিঠি", "কবিতা", "সেটা"],
    "লিখ্": ["চিঠি", "গল্প", "কবিতা", "দিনের হিসাব", "এটা"],
    "দেখ্": ["সিনেমা", "ছবি", "সাপ", "ঘোড়া", "ওটা", "নদীর কূল"],
    "শুন্": ["গান", "খবর", "সব কথা", "সুর"],
    "খা": ["ভাত", "মাছ", "আম", "মিষ্টি"],
    "পা": ["চিঠি", "পুরস্কার", "টাকা", "সোনা"],
    "যা": ["বাড়ি", "বাজারে", "স্কুলে", "পাড়ায়", "মামার বাড়ি", "নদীর পাড়ে"],
    "দে": ["তাকে বই", "তাকে টাকা", "ওকে উপহার", "একে সব"],
    "নে": ["বই", "ছাতা", "টাকা", "সেটা"],
    "হ": ["খুশি", "অবাক", "দুঃখিত"],
    "আস্": ["বাড়ি", "এখানে", "স্কুলে"],
    "থাক্": ["এখানে", "গ্রামে", "বাড়িতে", "শহরে"],
    "বস্": ["চেয়ারে", "মাটিতে", "এখানে"],
    "উঠ্": ["গাছে", "ছাদে", "ভোরে"],
    "শিখ্": ["গান", "সাঁতার", "ইংরেজি"],
    "ভাব্": ["সব কথা", "তার কথা", "ভবিষ্যতের কথা"],
    "রাখ্": ["বই", "টাকা", "সোনা", "সেটা"],
    "ধর্": ["মাছ", "হাত", "সাপ"],
    "চল্": ["রাস্তায়", "ধীরে"],
    "কিন্": ["শাড়ি", "সোনা", "বই", "ঘোড়া", "আম", "ওটা"],
}

GENDER_NOUNS = ["শিক্ষক", "লেখক", "গায়ক", "অভিনেতা", "নেতা", "ছাত্র", "অধ্যাপক", "চালক",
                "পাঠক", "নায়ক", "বক্তা", "শ্রোতা", "সম্পাদক", "পরিচালক", "গবেষক"]
GENDER_ADJ = ["ভালো", "অসাধারণ", "বিখ্যাত", "পরিশ্রমী", "জনপ্রিয়", "সৎ", "উদার", "সাহসী", "দক্ষ"]

POS_PREDICATES = [
    ("হিমালয়ের", "সৌন্দর্য", "অবিস্মরণীয়"),
    ("তার", "সাহস", "প্রশংসনীয়"),
    ("ওর", "পরিশ্রম", "সত্যিই অসাধারণ"),
    ("এই গ্রামের", "শান্তি", "মনে রাখার মতো"),
    ("নদীর", "গভীরতা", "অনেক"),
    ("পাহাড়ের", "উচ্চতা", "অনেক"),
    ("তাদের", "সততা", "সবার জানা"),
    ("এর", "গুরুত্ব", "অনেক"),
]
POS_PEOPLE = ["এই গ্রামের মানুষ", "তার দাদা", "ওর বন্ধু", "আমার শিক্ষক", "তাদের নেতা", "এর মালিক"]
POS_ADJ = ["সরল", "ভদ্র", "সৎ", "উদার", "সাহসী", "দয়ালু", "পরিশ্রমী", "বিনয়ী", "সুন্দর", "জনপ্রিয়"]

TABLE1_GOLD = [
    "আমি কারখানায় কাজ করি।",
    "আমি কাল বাড়ি যাব।",
    "আমি গতকাল পড়াশোনা করেছিলাম।",
    "আমরা এখানে চারজন থাকি।",
    "উত্তম একজন অসাধারণ অভিনেতা।",
    "হিমালয়ের সৌন্দর্য অবিস্মরণীয়।",
    "নন্দবাবু এটা লক্ষ্য করেছেন।",
    "যখন শীত আসবে তখন ফুল ফুটবে।",
]


def verb_form(paradigm, lemma, tense, aspect, person):
    return paradigm.get((lemma, tense, aspect, person))


def build_gold(paradigm, rng, n):
    verb_sents, gender_sents, pos_sents = set(), set(), set()
    keys = list(TIMES.keys())
    for lemma, objs in OBJECTS.items():
        for (tense, aspect) in keys:
            for obj in objs:
                for t in TIMES[(tense, aspect)]:
                    for subj, person in SUBJECTS:
                        f = verb_form(paradigm, lemma, tense, aspect, person)
                        if f:
                            verb_sents.add(f"{subj} {t} {obj} {f}।")
                    for poss in POSSESSIVES:
                        for kin in KIN:
                            f = verb_form(paradigm, lemma, tense, aspect, "3")
                            if f:
                                verb_sents.add(f"{poss} {kin} {t} {obj} {f}।")
                    for name in NAMES:
                        f = verb_form(paradigm, lemma, tense, aspect, "3")
                        if f:
                            verb_sents.add(f"{name} {t} {obj} {f}।")
    for (tense, aspect) in keys:
        for t in TIMES[(tense, aspect)]:
            for lemma, tail in (("ফুট্", "বাগানে ফুল"), ("ঘট্", "সেখানে একটা দুর্ঘটনা")):
                f = verb_form(paradigm, lemma, tense, aspect, "3")
                if f:
                    verb_sents.add(f"{t} {tail} {f}।")
    for who in NAMES + [f"{p} {k}" for p in POSSESSIVES for k in ("দাদা", "ভাই", "বন্ধু", "ছেলে", "কাকা", "মামা")]:
        for adj in GENDER_ADJ:
            for noun in GENDER_NOUNS:
                gender_sents.add(f"{who} একজন {adj} {noun}।")
    for noun in GENDER_NOUNS:
        for (tense, aspect) in keys:
            for lemma in ("আস্", "থাক্"):
                f = verb_form(paradigm, lemma, tense, aspect, "3")
                if f:
                    for t in TIMES[(tense, aspect)]:
                        gender_sents.add(f"{t} একজন {noun} এখানে {f}।")
    for poss, noun, pred in POS_PREDICATES:
        pos_sents.add(f"{poss} {noun} {pred}।")
    for who in POS_PEOPLE:
        for adj in POS_ADJ:
            pos_sents.add(f"{who} খুব {adj}।")
            pos_sents.add(f"{who} সত্যিই {adj}।")
            pos_sents.add(f"{who} একজন {adj} মানুষ।")
    table1 = {nfc(x) for x in TABLE1_GOLD}
    verb_sents = sorted(verb_sents - table1)
    gender_sents -= table1
    pos_sents -= table1
    gender_sents = sorted(gender_sents)
    pos_sents = sorted(pos_sents)
    rng.shuffle(verb_sents)
    rng.shuffle(gender_sents)
    rng.shuffle(pos_sents)
    n_gender = n // 5
    n_pos = min(len(pos_sents), n // 10)
    n_verb = n - n_gender - n_pos - len(TABLE1_GOLD)
    out = TABLE1_GOLD + verb_sents[:n_verb] + gender_sents[:n_gender] + pos_sents[:n_pos]
    rest = out[len(TABLE1_GOLD):]
    rng.shuffle(rest)
    return [nfc(s) for s in TABLE1_GOLD + rest]


CASE_PAIRS = [
    ("আমি রান্নাঘরকে ভাত খাই।", "আমি রান্নাঘরে ভাত খাই।"),
    ("সে স্কুলকে যায়।", "সে স্কুলে যায়।"),
    ("আমরা মাঠকে খেলি।", "আমরা মাঠে খেলি।"),
    ("তিনি অফিসকে কাজ করেন।", "তিনি অফিসে কাজ করেন।"),
    ("আমি মায়ে চিঠি লিখলাম।", "আমি মাকে চিঠি লিখলাম।"),
    ("পাখিটা গাছকে বসে আছে।", "পাখিটা গাছে বসে আছে।"),
    ("সে কলমের লেখে।", "সে কলমে লেখে।"),
    ("আমি বাজারকে যাব।", "আমি বাজারে যাব।"),
    ("ছেলেটি নদীকে সাঁতার কাটে।", "ছেলেটি নদীতে সাঁতার কাটে।"),
    ("বাবা আমার একটি বই দিলেন।", "বাবা আমাকে একটি বই দিলেন।"),
    ("আমি তোমার দেখেছি।", "আমি তোমাকে দেখেছি।"),
    ("সে বাড়িকে ফিরল।", "সে বাড়িতে ফিরল।"),
    ("আমরা ট্রেনকে কলকাতা গেলাম।", "আমরা ট্রেনে কলকাতা গেলাম।"),
    ("মেয়েটি জলকে নামল।", "মেয়েটি জলে নামল।"),
    ("সে ছুরির আম কাটল।", "সে ছুরিতে আম কাটল।"),
    ("রাম শ্যামের একটি কলম দিল।", "রাম শ্যামকে একটি কলম দিল।"),
]

SEMANTIC_NAMES = ["মানস", "রিনা", "অমর", "সুমন", "তানিয়া", "রাজু"]
SEMANTIC_COMBOS = [("মাছ", "খেতে", "আকাশ"), ("বই", "পড়তে", "নদী"), ("গান", "শুনতে", "পাথর"),
                   ("ছবি", "আঁকতে", "বাতাস"), ("ফুটবল", "খেলতে", "মেঘ")]


def main():
    rng = random.Random(20240601)
    verb_rows, register_verbs = build_verbs()
    assert len({r[0] for r in verb_rows}) == 24, "lemma count"
    assert len(verb_rows) == 470, len(verb_rows)
    write("verbs.tsv",
          ["lemma<TAB>tense<TAB>person<TAB>form<TAB>aspect",
           "24 lemmas; aspect defaults to simple when the column is absent"],
          verb_rows)

    register_verbs = unique_bijective(register_verbs)
    register_pronouns = unique_bijective(REGISTER_PRONOUNS)
    sadhu = {s for s, _ in register_verbs + register_pronouns}
    calita = {c for _, c in register_verbs + register_pronouns}
    assert not (sadhu & calita)
    rows = [("verb", s, c) for s, c in register_verbs] + [("pronoun", s, c) for s, c in register_pronouns]
    write("registers.tsv", ["kind<TAB>sadhu<TAB>calita"], rows)

    assert len(PRONOUN_NUMBER) == 23
    write("pronoun_numbers.tsv", ["singular<TAB>plural"], PRONOUN_NUMBER)

    gender = build_gender()
    assert len(gender) >= 350, len(gender)
    gender = gender[:350]
    write("genders.tsv", ["masculine<TAB>feminine"], gender)

    noun_adj = build_noun_adj()
    assert len(noun_adj) >= 350, len(noun_adj)
    noun_adj = noun_adj[:350]
    write("noun_adjectives.tsv", ["noun<TAB>adjective"], noun_adj)

    homonyms, base = build_homonyms(300)
    assert len(homonyms) == 300, len(homonyms)
    write("homonyms.tsv", ["a<TAB>b  (similar-sounding words; rows may list groups of more than two)",
                           f"{base} base pairs followed by inflected variants"], homonyms)

    paradigm = {(l, t, a, p): f for l, t, p, f, a in verb_rows}
    gold = build_gold(paradigm, rng, 2500)
    assert len(gold) == len(set(gold)) == 2500
    with open(os.path.join(OUT, "gold_2500.txt"), "w", encoding="utf-8") as f:
        f.write("\n".join(gold) + "\n")
    with open(os.path.join(OUT, "gold_1000.txt"), "w", encoding="utf-8") as f:
        f.write("\n".join(gold[:1000]) + "\n")
    with open(os.path.join(OUT, "gold_100.txt"), "w", encoding="utf-8") as f:
        f.write("\n".join(gold[:100]) + "\n")

    case_rows = [(w, c, "case", "approved" if i % 2 == 0 else "") for i, (w, c) in enumerate(CASE_PAIRS)]
    write("handcrafted_case.tsv", ["wrong<TAB>correct<TAB>finer_label[<TAB>approved]"],
          [r if r[3] else r[:3] for r in case_rows])
    sem_rows = []
    for i, (name, (obj, verb, wrong_obj)) in enumerate(itertools.product(SEMANTIC_NAMES, SEMANTIC_COMBOS)):
        row = (f"{name} {wrong_obj} {verb} ভালোবাসে।", f"{name} {obj} {verb} ভালোবাসে।", "semantic")
        sem_rows.append(row + ("approved",) if i % 3 else row)
    # second exemplar for the same wrong sentence: the verb, not the object, is at fault
    sem_rows.append(("মানস আকাশ খেতে ভালোবাসে।", "মানস আকাশ দেখতে ভালোবাসে।", "semantic", "approved"))
    write("handcrafted_semantic.tsv", ["wrong<TAB>correct<TAB>finer_label[<TAB>approved]"], sem_rows)

    words = set()
    for r in verb_rows:
        words.add(r[3])
    for _, s, c in rows:
        words.update((s, c))
    for pair_list in (PRONOUN_NUMBER, gender, noun_adj, homonyms):
        for a, b in pair_list:
            words.update((a, b))
    for s in gold:
        for tok in s.replace("।", " ").split():
            words.add(tok)
    for w, c in CASE_PAIRS:
        for tok in c.replace("।", " ").split():
            words.add(tok)
    for name, (obj, verb, wrong_obj) in itertools.product(SEMANTIC_NAMES, SEMANTIC_COMBOS):
        words.update((name, obj, verb, wrong_obj, "ভালোবাসে"))
    words.update(["শাড়ি", "কাজ", "কাল", "বাড়ি", "বারি", "অবিস্মরণীয়", "একজন", "যখন", "তখন",
                  "রান্নাঘর", "দেখতে"])
    words = sorted(nfc(w) for w in words)
    assert "কাব" not in words
    with open(os.path.join(OUT, "wordlist.txt"), "w", encoding="utf-8") as f:
        f.write("# one word per line\n")
        f.write("\n".join(words) + "\n")

    print(f"verbs={len(verb_rows)} registers={len(rows)} pronouns={len(PRONOUN_NUMBER)} "
          f"genders={len(gender)} noun_adj={len(noun_adj)} homonyms={len(homonyms)} (base {base}) "
          f"words={len(words)} gold={len(gold)}")


if __name__ == "__main__":
    main()
