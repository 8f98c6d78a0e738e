"""Shipped target models, the bundled homotopy table, and file formats.

The formal models (odd/even spheres and the infinite quaternionic
projective space) are free upper models: one generic generator of order
p**t per coordinate slot, together with the relation profile the target is
known to satisfy.  The concrete backend covers bracket-free targets (S^3
and friends), with coordinate groups looked up in the bundled table of
homotopy groups of spheres.
"""

import os
from importlib import resources

from .abelian import INFINITE, FgAbGroup, require_prime
from .whitehead import Generator, RelationProfile, TargetModel


class DataError(ValueError):
    """Raised on malformed model/table files or missing table entries."""


class HomotopyTable:
    """Cyclic-factor decompositions of pi_{n+k}(S^n), indexed by (n, k)."""

    def __init__(self, entries, provenance=""):
        checked = {}
        for (n, k), factors in entries.items():
            if n < 1 or k < 0:
                raise DataError(f"bad table index ({n}, {k})")
            factors = tuple(int(d) for d in factors)
            for d in factors:
                if d == 1 or d < 0:
                    raise DataError(f"entry ({n}, {k}): invalid cyclic factor {d}")
            checked[(n, k)] = factors
        for (n, k), factors in checked.items():
            if k == 0 and factors != (0,):
                raise DataError(f"pi_{n}(S^{n}) must be infinite cyclic, got {factors}")
        self.entries = checked
        self.provenance = provenance

    def get(self, n, k):
        """Factor tuple of pi_{n+k}(S^n), () for recorded-trivial, None if absent."""
        return self.entries.get((n, k))

    def group(self, n, k):
        factors = self.get(n, k)
        if factors is None:
            raise DataError(f"table has no entry pi {n} {k}")
        return FgAbGroup(factors)

    def __len__(self):
        return len(self.entries)


def load_table(path):
    entries = {}
    provenance = ""
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.strip()
            if line.startswith("#"):
                tag = line.lstrip("#").strip()
                if tag.startswith("provenance:"):
                    provenance = tag[len("provenance:"):].strip()
                continue
            if not line:
                continue
            parts = line.split()
            if len(parts) != 4 or parts[0] != "pi":
                raise DataError(f"{path}:{lineno}: expected `pi <n> <k> <factors>`")
            try:
                n, k = int(parts[1]), int(parts[2])
                factors = () if parts[3] == "-" else tuple(int(d) for d in parts[3].split(","))
            except ValueError as exc:
                raise DataError(f"{path}:{lineno}: {exc}") from None
            if (n, k) in entries:
                raise DataError(f"{path}:{lineno}: duplicate entry pi {n} {k}")
            entries[(n, k)] = factors
    try:
        return HomotopyTable(entries, provenance)
    except DataError as exc:
        raise DataError(f"{path}: {exc}") from None


def save_table(table, path):
    with open(path, "w", encoding="utf-8") as fh:
        if table.provenance:
            fh.write(f"# provenance: {table.provenance}\n")
        for (n, k) in sorted(table.entries):
            factors = table.entries[(n, k)]
            body = "-" if not factors else ",".join(str(d) for d in factors)
            fh.write(f"pi {n} {k} {body}\n")


_BUNDLED_CACHE = {}


def bundled_table():
    """The packaged table, or the file named by COHENEXP_TABLE if set."""
    override = os.environ.get("COHENEXP_TABLE")
    if override:
        path = override
    else:
        path = str(resources.files("cohenexp").joinpath("data/homotopy_spheres.txt"))
    if path not in _BUNDLED_CACHE:
        _BUNDLED_CACHE[path] = load_table(path)
    return _BUNDLED_CACHE[path]


def load_model(path):
    """Read a target model file.

    Header `model r=<int> trunc=<int> profile u2=<int> u3=<int>`, then one
    `gen <slot> order=<int|inf>` line per generator; generator ids are
    assigned 1-based in file order.
    """
    header = None
    gens = []
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if parts[0] == "model":
                if header is not None:
                    raise DataError(f"{path}:{lineno}: duplicate model header")
                kv = _parse_kv(parts[1:], path, lineno)
                for key in ("r", "trunc", "u2", "u3"):
                    if key not in kv:
                        raise DataError(f"{path}:{lineno}: header missing {key}=")
                header = kv
            elif parts[0] == "gen":
                if header is None:
                    raise DataError(f"{path}:{lineno}: gen line before model header")
                if len(parts) != 3:
                    raise DataError(f"{path}:{lineno}: expected `gen <slot> order=<int|inf>`")
                try:
                    slot = int(parts[1])
                except ValueError:
                    raise DataError(f"{path}:{lineno}: bad slot {parts[1]!r}") from None
                if not parts[2].startswith("order="):
                    raise DataError(f"{path}:{lineno}: expected order=<int|inf>")
                val = parts[2][len("order="):]
                if val == "inf":
                    order = INFINITE
                else:
                    try:
                        order = int(val)
                    except ValueError:
                        raise DataError(f"{path}:{lineno}: bad order {val!r}") from None
                gens.append((lineno, slot, order))
            else:
                raise DataError(f"{path}:{lineno}: unrecognized line {line!r}")
    if header is None:
        raise DataError(f"{path}: no model header found")
    r, trunc = header["r"], header["trunc"]
    try:
        profile = RelationProfile(u2=header["u2"], u3=header["u3"])
        generators = [
            Generator(gid=i, position=slot, dimension=slot * r + 1, order=order)
            for i, (_, slot, order) in enumerate(gens, 1)
        ]
        return TargetModel(r, trunc, profile, generators, name=os.path.basename(path))
    except ValueError as exc:
        raise DataError(f"{path}: {exc}") from None


def _parse_kv(tokens, path, lineno):
    out = {}
    for tok in tokens:
        if tok == "profile":
            continue
        if "=" not in tok:
            raise DataError(f"{path}:{lineno}: expected key=value, got {tok!r}")
        key, val = tok.split("=", 1)
        try:
            out[key] = int(val)
        except ValueError:
            raise DataError(f"{path}:{lineno}: bad integer {val!r} for {key}") from None
    return out


def save_model(model, path):
    with open(path, "w", encoding="utf-8") as fh:
        p = model.profile
        fh.write(f"model r={model.r} trunc={model.truncation} profile u2={p.u2} u3={p.u3}\n")
        for g in model.generators:
            body = "inf" if g.order is INFINITE else str(g.order)
            fh.write(f"gen {g.position} order={body}\n")


def _uniform_model(r, truncation, profile, order, name):
    gens = [
        Generator(gid=j, position=j, dimension=j * r + 1, order=order)
        for j in range(1, truncation + 1)
    ]
    return TargetModel(r, truncation, profile, gens, name=name)


def odd_sphere(N, p, t, r=1, truncation=12):
    """Free upper model for the torsion of an odd sphere S^N at p**t.

    S^3 is a group, so all brackets vanish there; larger odd spheres carry
    the universal relation killing twice every weight-2 bracket and all
    weight-3 brackets.
    """
    if N < 3 or N % 2 == 0:
        raise ValueError(f"odd_sphere needs odd N >= 3, got {N}")
    require_prime(p)
    if t < 1:
        raise ValueError("t must be >= 1")
    profile = RelationProfile(u2=1, u3=1) if N == 3 else RelationProfile(u2=2, u3=1)
    return _uniform_model(r, truncation, profile, p**t,
                          name=f"S{N} formal, p={p}, t={t}, r={r}")


def even_sphere(N, p, t, r=1, truncation=12):
    """Free upper model for the torsion of an even sphere S^N at p**t.

    S^2 shares the bracket relations of S^3 through the Hopf fibration;
    larger even spheres keep weight-2 brackets unconstrained and carry the
    relation killing three times every weight-3 bracket.
    """
    if N < 2 or N % 2 == 1:
        raise ValueError(f"even_sphere needs even N >= 2, got {N}")
    require_prime(p)
    if t < 1:
        raise ValueError("t must be >= 1")
    profile = RelationProfile(u2=0, u3=1) if N == 2 else RelationProfile(u2=0, u3=3)
    return _uniform_model(r, truncation, profile, p**t,
                          name=f"S{N} formal, p={p}, t={t}, r={r}")


def hp_infty_model(p, t, r=1, truncation=12):
    """Free upper model for HP^inf: 12 kills weight 2, 3 kills weight 3."""
    require_prime(p)
    if t < 1:
        raise ValueError("t must be >= 1")
    return _uniform_model(r, truncation, RelationProfile(u2=12, u3=3), p**t,
                          name=f"HP^inf formal, p={p}, t={t}, r={r}")


def concrete_h_space(r, truncation, table=None):
    """Concrete bracket-free model of S^3: slot j carries pi_{j*r+1}(S^3).

    Coordinate groups come from the table (bundled by default); each cyclic
    factor contributes one generator of that order.  Since the target is a
    topological group all brackets vanish, so the circled-star law is the
    plain direct product.
    """
    if table is None:
        table = bundled_table()
    gens = []
    gid = 0
    for j in range(1, truncation + 1):
        dim = j * r + 1
        k = dim - 3
        if k < 0:
            continue
        factors = table.get(3, k)
        if factors is None:
            raise DataError(f"table has no entry pi 3 {k}")
        for d in factors:
            gid += 1
            gens.append(Generator(gid=gid, position=j, dimension=dim,
                                  order=INFINITE if d == 0 else d))
    profile = RelationProfile(u2=1, u3=1)
    return TargetModel(r, truncation, profile, gens,
                       name=f"S3 concrete, r={r}, trunc={truncation}")
