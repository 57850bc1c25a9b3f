"""Truth-table oracle: exhaustive semantic checks over opaque atoms.

A truth table over n atoms is held as one Python integer of 2**n bits: bit k
is the value under assignment k, where atom i is true iff bit i of k is set.
Connectives become bitwise operations, so every assignment is evaluated at once.
"""

import logging
from typing import Dict, Iterator, Optional, Sequence, Tuple, Union

from theorykit.core.config import BRUTE_FORCE_HARD_CAP, get_settings
from theorykit.core.errors import TooManyAtomsError
from theorykit.models.formula import (
    And,
    Atom,
    AtomRef,
    Formula,
    Iff,
    Implies,
    Not,
    Or,
    Theory,
    atoms_of,
)
from theorykit.services.deduction.clauses import ClausalTheory, Clause

logger = logging.getLogger(__name__)


def atom_cap(max_atoms: Optional[int] = None) -> int:
    """Effective atom cap, never above the hard cap."""
    cap = max_atoms if max_atoms is not None else get_settings().brute_force_max_atoms
    return min(cap, BRUTE_FORCE_HARD_CAP)


class TruthTable:
    """Bit-parallel truth tables over a fixed atom order."""

    def __init__(self, atoms: Sequence[Atom], max_atoms: Optional[int] = None):
        cap = atom_cap(max_atoms)
        if len(atoms) > cap:
            raise TooManyAtomsError(f"{len(atoms)} atoms exceed the truth-table cap of {cap}")
        self.atoms: Tuple[Atom, ...] = tuple(atoms)
        self.n = len(self.atoms)
        self.rows = 1 << self.n
        self.mask = (1 << self.rows) - 1
        self._index: Dict[Atom, int] = {atom: i for i, atom in enumerate(self.atoms)}
        self._columns = [self._column(i) for i in range(self.n)]

    def _column(self, i: int) -> int:
        # Within each period of 2**(i+1) rows the upper half has atom i true.
        half = 1 << i
        period = half << 1
        block = ((1 << half) - 1) << half
        return block * (self.mask // ((1 << period) - 1))

    def column(self, atom: Atom) -> int:
        return self._columns[self._index[atom]]

    def of(self, f: Formula) -> int:
        if isinstance(f, AtomRef):
            return self.column(f.atom)
        if isinstance(f, Not):
            return self.mask ^ self.of(f.operand)
        if isinstance(f, And):
            return self.of(f.left) & self.of(f.right)
        if isinstance(f, Or):
            return self.of(f.left) | self.of(f.right)
        if isinstance(f, Implies):
            return (self.mask ^ self.of(f.left)) | self.of(f.right)
        if isinstance(f, Iff):
            return self.mask ^ (self.of(f.left) ^ self.of(f.right))
        raise TypeError(f"not a formula: {f!r}")

    def of_theory(self, t: Theory) -> int:
        table = self.mask
        for f in t:
            table &= self.of(f)
        return table

    def of_clause(self, clause: Clause, ct: ClausalTheory) -> int:
        table = 0
        for lit in clause:
            col = self.column(ct.atoms[lit.atom])
            table |= col if lit.positive else self.mask ^ col
        return table

    def of_clausal(self, ct: ClausalTheory) -> int:
        table = self.mask
        for clause in ct.clauses:
            table &= self.of_clause(clause, ct)
        return table

    def assignment(self, row: int) -> Dict[Atom, bool]:
        return {atom: bool(row >> i & 1) for i, atom in enumerate(self.atoms)}

    def models(self, table: int) -> Iterator[Dict[Atom, bool]]:
        """Assignments whose bit is set, in row order."""
        for row in range(self.rows):
            if table >> row & 1:
                yield self.assignment(row)

    @staticmethod
    def count(table: int) -> int:
        return bin(table).count("1")


def _table_for(*parts: Union[Theory, Formula], max_atoms: Optional[int] = None) -> TruthTable:
    formulas = []
    for part in parts:
        formulas.extend([part] if isinstance(part, Formula) else list(part))
    return TruthTable(atoms_of(formulas), max_atoms=max_atoms)


def brute_force_entails(t: Theory, f: Formula, *, max_atoms: Optional[int] = None) -> bool:
    """Every assignment satisfying all of t satisfies f."""
    table = _table_for(t, f, max_atoms=max_atoms)
    entailed = table.of_theory(t) & ~table.of(f) & table.mask == 0
    logger.debug(f"Truth table over {table.n} atom(s): entailed={entailed}")
    return entailed


def brute_force_satisfiable(t: Union[Theory, ClausalTheory], *, max_atoms: Optional[int] = None) -> bool:
    if isinstance(t, ClausalTheory):
        table = TruthTable(t.atoms, max_atoms=max_atoms)
        return table.of_clausal(t) != 0
    table = _table_for(t, max_atoms=max_atoms)
    return table.of_theory(t) != 0


def equivalent(t1: Theory, t2: Theory, *, max_atoms: Optional[int] = None) -> bool:
    """Both theories have the same models over their joint atoms."""
    table = _table_for(t1, t2, max_atoms=max_atoms)
    return table.of_theory(t1) == table.of_theory(t2)
