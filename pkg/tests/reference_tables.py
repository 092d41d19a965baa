"""Published per-corpus counts used as arithmetic fixtures.

Only raw counts live here; every average and share is recomputed by the
code under test and compared with the published two-decimal strings.
Pronoun counts are published as one group (relative-indefinite, personal,
demonstrative) and are filed under PnDm; comparative and superlative
adjectives are one group as well and are filed under AjCp.
"""
from kosana.tagging import FineTag as T

CORPORA = ("Eurovoc", "LCSH", "DDC", "CIDOC classes", "CIDOC properties")

TOTALS = {
    #                  entries  tokens  words
    "Eurovoc":          (6882, 15234, 15067),
    "LCSH":             (10308, 23670, 20497),
    "DDC":              (3811, 16414, 14613),
    "CIDOC classes":    (81, 129, 129),
    "CIDOC properties": (223, 552, 547),
}

TAG_COUNTS = {
    "Eurovoc": {
        T.NoCm: 8443, T.NoPr: 653, T.Abbr: 240, T.PnDm: 2, T.Rgf: 314,
        T.Vb: 18, T.Cj: 98, T.AsPp: 368, T.PtNg: 35, T.AjCp: 16, T.Ad: 82, T.PnPo: 5,
        T.AjBa: 3678,
    },
    "LCSH": {
        T.NoCm: 11825, T.NoPr: 1209, T.Abbr: 11, T.PnDm: 0, T.Rgf: 276,
        T.Vb: 34, T.Cj: 614, T.AsPp: 726, T.PtNg: 17, T.AjCp: 22, T.Ad: 213, T.PnPo: 27,
        T.AjBa: 4929,
    },
    "DDC": {
        T.NoCm: 6443, T.NoPr: 997, T.Abbr: 5, T.PnDm: 12, T.Rgf: 95,
        T.Vb: 166, T.Cj: 970, T.AsPp: 796, T.PtNg: 30, T.AjCp: 83, T.Ad: 220, T.PnPo: 12,
        T.AjBa: 3179,
    },
    "CIDOC classes": {
        T.NoCm: 105, T.NoPr: 1, T.Abbr: 1, T.PnDm: 0, T.Rgf: 1,
        T.Vb: 0, T.Cj: 0, T.AsPp: 0, T.PtNg: 0, T.AjCp: 0, T.Ad: 1, T.PnPo: 0,
        T.AjBa: 20,
    },
    "CIDOC properties": {
        T.NoCm: 111, T.NoPr: 0, T.Abbr: 0, T.PnDm: 0, T.Rgf: 1,
        T.Vb: 234, T.Cj: 14, T.AsPp: 93, T.PtNg: 0, T.AjCp: 6, T.Ad: 17, T.PnPo: 1,
        T.AjBa: 23,
    },
}

# published "(sum)" rows: (count, avg per entry, % of words)
ENTITY_SUMS = {
    "Eurovoc": (9652, "1.40", "64.06%"),
    "LCSH": (13321, "1.29", "64.99%"),
    "DDC": (7552, "1.98", "51.68%"),
    "CIDOC classes": (108, "1.33", "83.72%"),
    "CIDOC properties": (112, "0.50", "20.48%"),
}
RELATION_SUMS = {
    "Eurovoc": (637, "0.09", "4.23%"),
    "LCSH": (1671, "0.16", "8.15%"),
    "DDC": (2300, "0.60", "15.74%"),
    "CIDOC classes": (1, "0.01", "0.78%"),
    "CIDOC properties": (365, "1.64", "66.73%"),
}
WORDS_PER_ENTRY = {
    "Eurovoc": "2.19", "LCSH": "1.99", "DDC": "3.83", "CIDOC classes": "1.59", "CIDOC properties": "2.45",
}

# published per-tag cells (count, avg, pct) for the rows checked cell by cell
TAG_CELLS = {
    "Eurovoc": {T.NoCm: ("1.23", "56.04%"), T.NoPr: ("0.09", "4.33%"), T.Abbr: ("0.03", "1.59%"),
                T.Rgf: ("0.05", "2.08%"), T.Vb: ("0.00", "0.12%"), T.Cj: ("0.01", "0.75%"),
                T.AsPp: ("0.05", "2.44%"), T.PtNg: ("0.01", "0.23%"), T.Ad: ("0.01", "0.54%"),
                T.PnPo: ("0.00", "0.03%")},
    "LCSH": {T.NoCm: ("1.15", "57.69%"), T.NoPr: ("0.12", "5.90%"), T.Abbr: ("0.00", "0.05%"),
             T.Rgf: ("0.03", "1.35%"), T.Vb: ("0.00", "0.17%"), T.Cj: ("0.06", "3.00%"),
             T.AsPp: ("0.07", "3.54%"), T.PtNg: ("0.00", "0.08%"), T.Ad: ("0.02", "1.40%"),
             T.PnPo: ("0.00", "0.13%")},
    "DDC": {T.NoCm: ("1.69", "44.09%"), T.NoPr: ("0.26", "6.82%"), T.Abbr: ("0.00", "0.03%"),
            T.Rgf: ("0.02", "0.65%"), T.Vb: ("0.04", "1.14%"), T.Cj: ("0.25", "6.64%"),
            T.AsPp: ("0.21", "2.44%"), T.PtNg: ("0.01", "0.21%"), T.Ad: ("0.06", "1.51%"),
            T.PnPo: ("0.00", "0.08%")},
    "CIDOC properties": {T.NoCm: ("0.50", "20.29%"), T.Vb: ("1.05", "42.78%"), T.Cj: ("0.06", "2.56%"),
                         T.AsPp: ("0.42", "17.00%"), T.Ad: ("0.08", "3.11%"), T.Rgf: ("0.00", "0.18%")},
}
# published cells that contradict their own counts (documented in the report notes)
KNOWN_BAD_CELLS = {("DDC", T.AsPp), ("Eurovoc", T.Cj), ("LCSH", T.Ad)}

# pattern statistics
UNIQUE_PATTERNS = {"Eurovoc": 286, "LCSH": 474, "DDC": 1128, "CIDOC classes": 8, "CIDOC properties": 41}
PATTERNS_PER_ENTRY = {"Eurovoc": "24.06", "LCSH": "21.75", "DDC": "3.38", "CIDOC classes": "10.13",
                      "CIDOC properties": "5.44"}
TOP20_SUM = {"Eurovoc": (6068, "88.17%"), "LCSH": (8804, "85.41%"), "DDC": (1954, "51.27%"),
             "CIDOC classes": (81, "100.00%"), "CIDOC properties": (202, "90.58%")}

TOP_PATTERNS = {
    "Eurovoc": [
        ("Adj + N", 2182), ("N", 1364), ("N + N", 819), ("N + Art + N", 454), ("Res", 191),
        ("N + Adj + N", 171), ("Adj + Adj + N", 143), ("N + Adp + N", 118), ("Adj", 103),
        ("Adj + N + N", 93), ("N + Art + Adj + N", 68), ("Adj + Adj", 59), ("N + Adp + Art + N", 42),
        ("N + Art + Abr", 42), ("N + N + N", 39), ("Adj + N + Adj + N", 37), ("Adv + N", 37),
        ("Adj + N + OPunct + Abr + CPunct", 36), ("N + Adp + Adj + N", 36), ("N + Res", 34),
    ],
    "LCSH": [
        ("N", 3353), ("Adj + N", 1936), ("N + Punct + Adj", 677), ("N + N", 548),
        ("N + OPunct + N + CPunct", 369), ("N + Adp + N", 361), ("N + Conj + N", 311), ("Adj", 261),
        ("Adj + Adj", 134), ("Adj + N + Punct + Adj", 124), ("N + Punct + N", 120), ("N + Art + N", 108),
        ("N + Adj + N", 85), ("N + OPunct + Adj + N + CPunct", 77), ("N + Res", 72), ("Adv + N", 67),
        ("N + Punct + N + Art", 60), ("Adj + Adj + N", 48), ("Adj + N + Adp + N", 48),
        ("Adj + N + Conj + N", 45),
    ],
    "DDC": [
        ("N", 634), ("Adj + N", 387), ("N + N", 156), ("Dig", 112), ("N + Conj + N", 112), ("Adj", 63),
        ("N + Adj + N", 61), ("Adj + Adj + N", 50), ("N + Art + N", 44), ("Adj + N + Conj + N", 40),
        ("Adj + Conj + Adj + N", 37), ("N + Punct + N + Punct + N", 33), ("Adv + N", 31),
        ("N + Conj + Adj + N", 31), ("Adj + N + N", 28), ("N + Conj + N + N", 28), ("Adj + Adj", 27),
        ("N + Adp + Adj + N", 27), ("N + Adp + N", 27), ("Res", 26),
    ],
    "CIDOC classes": [
        ("N", 38), ("N + N", 23), ("Adj + N", 13), ("N + Adj + N", 2), ("Adj + Adj + N", 2),
        ("N + Res + Abr", 1), ("N + Adj", 1), ("Adv + N", 1),
    ],
    "CIDOC properties": [
        ("V + Adp", 59), ("V", 40), ("V + N + Art", 21), ("V + N", 17), ("V + N + Adp", 11),
        ("V + Adj + N", 8), ("V + N + N", 6), ("V + Conj + V + N + Art", 5), ("V + Adj + N + Art", 5),
        ("V + Conj + V + N", 4), ("V + Art + N + Adp", 4), ("V + Adv + N", 4), ("V + Adj + Adj", 4),
        ("N + V + Adp", 3), ("V + V + Adp", 2), ("V + Art + N + Art", 2), ("V + Adv", 2),
        ("V + Adp + N", 2), ("V + Adj + Adp", 2), ("V + V", 1),
    ],
}
