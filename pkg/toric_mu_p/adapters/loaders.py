import logging
from pathlib import Path
from typing import Any, Generic, TypeVar

import yaml
from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from toric_mu_p.common.exceptions import InputParseError, InvalidClassError
from toric_mu_p.coxring.class_group import ClassGroup, class_group
from toric_mu_p.derivation.cox_derivation import CoxDerivation
from toric_mu_p.exactlin.finite_field import FiniteField
from toric_mu_p.fan.model import Fan

logger = logging.getLogger(__name__)

CORPUS_PREFIX = "corpus:"
CORPUS_DIR = Path(__file__).parent.parent / "resources" / "fans"


class FanDocument(BaseModel):
    """A fan as written in an input file."""

    model_config = ConfigDict(extra="forbid")

    rank: int = Field(ge=1)
    rays: list[list[int]]
    maxcones: list[list[int]]

    def to_fan(self) -> Fan:
        return Fan.from_lists(self.rank, self.rays, self.maxcones)


class TermDocument(BaseModel):
    model_config = ConfigDict(extra="forbid")

    monomial: list[int]
    coeff: int = 1


class DiagonalDocument(BaseModel):
    model_config = ConfigDict(extra="forbid")

    a: list[int]


class VectorFieldDocument(BaseModel):
    """
    A Cox-ring vector field: either one list of terms per ray under
    ``components``, or ``diagonal.a``.
    """

    model_config = ConfigDict(extra="forbid")

    p: int | None = None
    e: int = Field(default=1, ge=1)
    components: list[list[TermDocument]] | None = None
    diagonal: DiagonalDocument | None = None

    @model_validator(mode="after")
    def _exactly_one_form(self) -> "VectorFieldDocument":
        if (self.components is None) == (self.diagonal is None):
            raise ValueError("Give exactly one of 'components' or 'diagonal'.")
        return self

    def to_derivation(
        self, fan: Fan, p: int | None = None, e: int | None = None, cox: ClassGroup | None = None
    ) -> CoxDerivation:
        """
        Builds the derivation over F_{p^e}; explicit ``p``/``e`` override the document.

        Raises:
            InputParseError: If p is missing or the terms do not fit the fan.
        """
        characteristic = p if p is not None else self.p
        if characteristic is None:
            raise InputParseError("Vector field does not state p and none was given.")
        degree = e if e is not None else self.e
        try:
            field = FiniteField(characteristic, degree)
            cox = cox or class_group(fan)
            if self.diagonal is not None:
                return CoxDerivation.diagonal(fan, field, self.diagonal.a, cox)
            assert self.components is not None
            if len(self.components) != fan.n_rays:
                raise ValueError(
                    f"Vector field has {len(self.components)} components, fan has {fan.n_rays} rays."
                )
            terms = [[(t.monomial, t.coeff) for t in ray_terms] for ray_terms in self.components]
            return CoxDerivation.from_terms(fan, field, terms, cox)
        except (InvalidClassError, ValueError) as e:
            raise InputParseError(f"Vector field does not fit the fan: {e}") from e


ModelT = TypeVar("ModelT", bound=BaseModel)


class DocumentLoader(Generic[ModelT]):
    """Handles loading and validation of YAML/JSON input documents."""

    model: type[ModelT]
    kind = "document"

    def __init__(self, source: str) -> None:
        """
        Initialize the loader with a source.

        Args:
            source: Path to the document
        """
        self.source = source
        self.document: ModelT | None = None
        self._content: str | None = None

    def load_and_validate(self) -> ModelT:
        """
        Load the document from the source and validate it.

        Returns:
            The validated document model.

        Raises:
            InputParseError: If loading, parsing or validation fails.
        """
        logger.info("Loading %s from: %s", self.kind, self.source)
        self._load_content()
        self._parse_and_validate()
        assert self.document is not None
        return self.document

    def _resolve_path(self) -> Path:
        return Path(self.source)

    def _load_content(self) -> None:
        """
        Load the raw content from file.

        Raises:
            InputParseError: If the file cannot be read.
        """
        path = self._resolve_path()
        try:
            logger.debug("Reading %s from file: %s", self.kind, path)
            if not path.is_file():
                raise FileNotFoundError(f"File not found: {path}")
            self._content = path.read_text(encoding="utf-8")
        except FileNotFoundError as e:
            raise InputParseError(f"{self.kind.capitalize()} file not found at '{self.source}'") from e
        except OSError as e:
            raise InputParseError(f"Error reading {self.kind} file '{self.source}': {e}") from e

    def _parse_and_validate(self) -> None:
        """
        Parse the loaded content and validate it against the model.

        Raises:
            InputParseError: If parsing or validation fails.
        """
        if self._content is None:
            raise InputParseError(f"Internal error: {self.kind} content not loaded before parsing.")
        try:
            raw: Any = yaml.safe_load(self._content)
        except yaml.YAMLError as e:
            raise InputParseError(f"Error parsing {self.kind} '{self.source}' (YAML/JSON): {e}") from e
        if not isinstance(raw, dict):
            raise InputParseError(f"Parsed {self.kind} '{self.source}' is not a mapping.")
        try:
            self.document = self.model.model_validate(raw)
        except ValidationError as e:
            raise InputParseError(f"{self.kind.capitalize()} '{self.source}' is invalid: {e}") from e
        logger.debug("%s loaded and validated.", self.kind.capitalize())


class FanLoader(DocumentLoader[FanDocument]):
    """Loads fans from files or from the bundled corpus (``corpus:<name>``)."""

    model = FanDocument
    kind = "fan"

    def _resolve_path(self) -> Path:
        if self.source.startswith(CORPUS_PREFIX):
            name = self.source[len(CORPUS_PREFIX) :]
            if name not in corpus_names():
                raise InputParseError(
                    f"Unknown corpus fan '{name}'; available: {', '.join(corpus_names())}"
                )
            return CORPUS_DIR / f"{name}.yaml"
        return Path(self.source)

    def load(self) -> Fan:
        return self.load_and_validate().to_fan()


class VectorFieldLoader(DocumentLoader[VectorFieldDocument]):
    model = VectorFieldDocument
    kind = "vector field"


def corpus_names() -> list[str]:
    return sorted(path.stem for path in CORPUS_DIR.glob("*.yaml"))


def load_corpus_fan(name: str) -> Fan:
    """One of the fans shipped with the package, e.g. ``p2`` or ``hirzebruch_1``."""
    return FanLoader(f"{CORPUS_PREFIX}{name}").load()
