#!/usr/bin/env python3
# Copyright 2026 The Hyperlat Authors
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

"""Finds finite quotients of the genus-g surface group and writes them as
quotient files.

A quotient is a homomorphism gamma_j -> g_j into a permutation group that
kills the relator. The file holds the right-regular action of the image on
itself, so the index N equals the order of the image. Candidates are drawn
at random inside a few small groups; the first three images are random and
the fourth is found by exhaustive search over the group.

The output is meant to be filtered afterwards (for example by code
distance) before copying files into data/quotients.
"""

import argparse
import json
import random
from pathlib import Path


def relator(genus):
    word = []
    for i in range(genus):
        word += [2 * i + 1, -(2 * i + 2)]
    for i in range(genus):
        word += [-(2 * i + 1), 2 * i + 2]
    return word


def compose(a, b):
    """Apply a, then b."""
    return tuple(b[x] for x in a)


def inverse(a):
    r = [0] * len(a)
    for i, x in enumerate(a):
        r[x] = i
    return tuple(r)


def closure(gens, limit):
    identity = tuple(range(len(gens[0])))
    index = {identity: 0}
    order = [identity]
    head = 0
    while head < len(order):
        x = order[head]
        head += 1
        for g in gens:
            y = compose(x, g)
            if y not in index:
                index[y] = len(order)
                order.append(y)
                if len(order) > limit:
                    return None
    return order, index


def regular_action(gens, limit):
    c = closure(gens, limit)
    if c is None:
        return None
    order, index = c
    return [[index[compose(x, g)] for x in order] for g in gens]


def symmetric_group(k):
    return [tuple(range(1, k)) + (0,), (1, 0) + tuple(range(2, k))]


def alternating_group(k):
    gens = []
    for i in range(2, k):
        p = list(range(k))
        p[0], p[1], p[i] = p[1], p[i], p[0]
        gens.append(tuple(p))
    return gens


def psl2(p):
    """PSL(2, p) acting on the projective line over GF(p); point p is infinity."""
    def act(m):
        a, b, c, d = m
        img = []
        for x in range(p + 1):
            if x == p:
                num, den = a, c
            else:
                num, den = (a * x + b) % p, (c * x + d) % p
            img.append(p if den % p == 0 else (num * pow(den, p - 2, p)) % p)
        return tuple(img)
    return [act((1, 1, 0, 1)), act((0, p - 1, 1, 0))]


def dihedral(n):
    return [tuple((i + 1) % n for i in range(n)), tuple((-i) % n for i in range(n))]


GROUPS = {
    "S4": lambda: symmetric_group(4),
    "A5": lambda: alternating_group(5),
    "S5": lambda: symmetric_group(5),
    "PSL2_7": lambda: psl2(7),
    "A6": lambda: alternating_group(6),
    "PSL2_11": lambda: psl2(11),
    "S6": lambda: symmetric_group(6),
    "PSL2_13": lambda: psl2(13),
    "D4": lambda: dihedral(4),
    "D6": lambda: dihedral(6),
    "D8": lambda: dihedral(8),
}


def evaluate(word, gens):
    m = tuple(range(len(gens[0])))
    for letter in word:
        g = gens[abs(letter) - 1]
        m = compose(m, g if letter > 0 else inverse(g))
    return m


def search(group_gens, genus, samples, rng, limit):
    elements, _ = closure(group_gens, 10 ** 6)
    rel = relator(genus)
    identity = tuple(range(len(group_gens[0])))
    found = []
    for _ in range(samples):
        head = [rng.choice(elements) for _ in range(2 * genus - 1)]
        solutions = [g for g in elements if evaluate(rel, head + [g]) == identity]
        if not solutions:
            continue
        gens = head + [rng.choice(solutions)]
        action = regular_action(gens, limit)
        if action is not None:
            found.append(action)
    return found


def write(path, bravais, action):
    doc = {
        "bravais": {"p": bravais[0], "q": bravais[1], "genus": bravais[2]},
        "index": len(action[0]),
        "generators": [[x + 1 for x in perm] for perm in action],
    }
    path.write_text(json.dumps(doc, separators=(",", ":")) + "\n")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--group", choices=sorted(GROUPS))
    ap.add_argument("--cyclic", type=int, metavar="N", help="write the cyclic quotient of order N instead")
    ap.add_argument("--exponents", default="1,2,3,4", help="gamma_j -> sigma^a_j for --cyclic")
    ap.add_argument("--name", help="output file name for --cyclic")
    ap.add_argument("--bravais", default="8,8", help="pB,qB of a genus-2 Bravais lattice")
    ap.add_argument("--samples", type=int, default=20)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--limit", type=int, default=2000, help="largest index kept")
    ap.add_argument("--min-index", type=int, default=1)
    ap.add_argument("--out", type=Path, required=True)
    args = ap.parse_args()
    pb, qb = (int(x) for x in args.bravais.split(","))
    genus = 2
    if args.cyclic:
        n = args.cyclic
        exps = [int(x) for x in args.exponents.split(",")]
        action = [[(i + a) % n for i in range(n)] for a in exps]
        args.out.mkdir(parents=True, exist_ok=True)
        write(args.out / (args.name or f"cyclic_{n}.json"), (pb, qb, genus), action)
        return
    if not args.group:
        ap.error("one of --group or --cyclic is required")
    rng = random.Random(args.seed)
    args.out.mkdir(parents=True, exist_ok=True)
    seen = set()
    count = 0
    for action in search(GROUPS[args.group](), genus, args.samples, rng, args.limit):
        key = tuple(tuple(p) for p in action)
        n = len(action[0])
        if key in seen or n < args.min_index:
            continue
        seen.add(key)
        write(args.out / f"{args.group}_{n}_{count:03d}.json", (pb, qb, genus), action)
        count += 1
    print(f"wrote {count} quotients to {args.out}")


if __name__ == "__main__":
    main()
