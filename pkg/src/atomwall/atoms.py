"""Atom registry: built-in ground-state atoms and user-defined entries.

An atom is fully described here by its static polarizability alpha(0),
a Gaussian polarizability volume in m^3.  The built-in entries are
metastable helium (He*), sodium, rubidium, and cesium.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Mapping

from .errors import ConflictError, UnknownNameError, ValidationError


def canonical_name(name: str) -> str:
    """Map the file-safe spelling back to the canonical one.

    ``He*`` is written ``He_star`` in file formats (shells dislike the
    asterisk); both spellings are accepted everywhere names are read.
    """
    return name.replace("_star", "*")


def file_safe_name(name: str) -> str:
    """Spelling used in file names and config files (no asterisks)."""
    return name.replace("*", "_star")


@dataclass(frozen=True)
class Atom:
    """A neutral ground-state atom.

    name:   short identifier, e.g. ``"Rb"``.
    alpha0: static polarizability as a volume, m^3, strictly positive.
    """

    name: str
    alpha0: float

    def __post_init__(self) -> None:
        if not self.name:
            raise ValidationError("atom name must be non-empty")
        if not (math.isfinite(self.alpha0) and self.alpha0 > 0.0):
            raise ValidationError(
                f"atom {self.name!r}: alpha0 must be finite and > 0 m^3, got {self.alpha0}"
            )


class AtomRegistry(Mapping[str, Atom]):
    """Immutable name -> Atom mapping.

    Extension never mutates: :meth:`register` returns a new registry,
    so registries can be shared freely across threads.
    """

    def __init__(self, atoms: Iterator[Atom] | list[Atom]):
        entries: dict[str, Atom] = {}
        for atom in atoms:
            if atom.name in entries:
                raise ConflictError(f"duplicate atom name {atom.name!r}")
            entries[atom.name] = atom
        self._entries = entries

    def __getitem__(self, name: str) -> Atom:
        return self.lookup(name)

    def __iter__(self) -> Iterator[str]:
        return iter(self._entries)

    def __len__(self) -> int:
        return len(self._entries)

    def lookup(self, name: str) -> Atom:
        atom = self._entries.get(canonical_name(name))
        if atom is None:
            raise UnknownNameError(f"unknown atom {name!r}")
        return atom

    def register(self, atom: Atom) -> "AtomRegistry":
        """Return a new registry extended with ``atom``.

        Names already present (including the built-ins) are rejected.
        """
        name = canonical_name(atom.name)
        if name in self._entries:
            raise ConflictError(f"atom name {atom.name!r} already registered")
        return AtomRegistry(list(self._entries.values()) + [atom])


_BUILTIN_ATOMS = AtomRegistry(
    [
        Atom("He*", 4.678e-29),
        Atom("Na", 2.411e-29),
        Atom("Rb", 4.73e-29),
        Atom("Cs", 5.981e-29),
    ]
)


def builtin_atoms() -> AtomRegistry:
    """The built-in atom registry (shared immutable instance)."""
    return _BUILTIN_ATOMS
