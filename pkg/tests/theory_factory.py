"""Random propositional theories for the agreement and property suites."""

import random
from typing import List, Optional

from theorykit.models.formula import And, Formula, Iff, Implies, Not, Or, conjunction, symbol


def atom_names(count: int) -> List[str]:
    return [f"a{i}" for i in range(count)]


def random_literal(rng: random.Random, names: List[str]) -> Formula:
    ref = symbol(rng.choice(names))
    return Not(ref) if rng.random() < 0.5 else ref


def random_formula(rng: random.Random, names: List[str], depth: int = 2) -> Formula:
    """Mixed connectives over the given symbols, nesting at most `depth` levels."""
    if depth == 0 or rng.random() < 0.3:
        return random_literal(rng, names)
    kind = rng.choice(("and", "or", "implies", "iff", "not"))
    if kind == "not":
        return Not(random_formula(rng, names, depth - 1))
    left = random_formula(rng, names, depth - 1)
    right = random_formula(rng, names, depth - 1)
    return {"and": And, "or": Or, "implies": Implies, "iff": Iff}[kind](left, right)


def random_theory(
    rng: random.Random,
    max_atoms: int = 12,
    max_formulas: int = 12,
    depth: int = 2,
    names: Optional[List[str]] = None,
) -> List[Formula]:
    names = names or atom_names(rng.randint(1, max_atoms))
    return [random_formula(rng, names, depth) for _ in range(rng.randint(1, max_formulas))]


def random_implication_theory(rng: random.Random, max_atoms: int = 8) -> List[Formula]:
    """Hypotheses l -> l' between signed symbols; may contain cycles and l -> !l."""
    names = atom_names(rng.randint(1, max_atoms))
    count = rng.randint(1, 2 * len(names) + 2)
    return [Implies(random_literal(rng, names), random_literal(rng, names)) for _ in range(count)]


def random_horn_theory(rng: random.Random, max_atoms: int = 12) -> List[Formula]:
    """Facts, definite rules `body -> head` and goals `!(body)`."""
    names = atom_names(rng.randint(1, max_atoms))
    theory: List[Formula] = []
    for _ in range(rng.randint(1, 2 * len(names))):
        body = [symbol(name) for name in rng.sample(names, rng.randint(0, min(3, len(names))))]
        roll = rng.random()
        if not body or roll < 0.15:
            theory.append(symbol(rng.choice(names)))
        elif roll < 0.3:
            theory.append(Not(conjunction(body)))
        else:
            theory.append(Implies(conjunction(body), symbol(rng.choice(names))))
    return theory
