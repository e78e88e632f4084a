from pydantic import BaseModel, Field
from typing import Dict, List, Optional, Union

from ..exceptions import ActionError
from ..models import Alphabet, Automorphism, Endomorphism


class AutomorphismFile(BaseModel):
    """
    JSON form of a morphism: {"images": {"a": "ab", "b": "b"}, "inverse": {"a": "aB", "b": "b"}}.
    Without "inverse" the file describes an endomorphism.
    """

    images: Dict[str, str]
    inverse: Optional[Dict[str, str]] = None
    rank: Optional[int] = Field(None, ge=1, le=26, description="Alphabet rank override")

    @classmethod
    def from_morphism(cls, phi: Union[Automorphism, Endomorphism]) -> "AutomorphismFile":
        if isinstance(phi, Automorphism):
            return cls(
                images=dict(phi.forward.images),
                inverse=dict(phi.backward.images),
                rank=phi.alphabet.rank,
            )
        return cls(images=dict(phi.images), rank=phi.alphabet.rank)

    def to_morphism(self) -> Union[Automorphism, Endomorphism]:
        alphabet = Alphabet(rank=self.rank) if self.rank else None
        if self.inverse is None:
            return Endomorphism.from_rules(self.images, alphabet)
        return Automorphism.from_rules(self.images, self.inverse, alphabet)

    def to_automorphism(self) -> Automorphism:
        phi = self.to_morphism()
        if not isinstance(phi, Automorphism):
            raise ActionError("An automorphism file must give the inverse images")
        return phi


class AutomorphismSummary(BaseModel):
    description: str
    norm: int
    conorm: Optional[int] = None
    generators: List[str]
