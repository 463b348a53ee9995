"""
Utility module for content identifiers.
"""

import xxhash

from django.conf import settings


class AbstractIdentifier:
    """
    An abstract class for the immutable objects that deal with an identifier.

    The identifier is a hash of a canonical text of the content, so two objects
    with the same content share it and it is stable across runs.
    """

    def build_identifier(self) -> str:
        """
        Abstract method for building the text the identifier hashes.

        It varies from class to class.

        Returns
        -------
        str
            The canonical text of the content
        """
        raise NotImplementedError()

    @property
    def identifier(self) -> str:
        """
        Returns
        -------
        str
            The 16 characters hexadecimal identifier of the content.
        """
        return xxhash.xxh3_64_hexdigest(self.build_identifier(), seed=settings.XXHASH_SEED)

    def clean(self):
        """
        Validates the content. Raises ``django.core.exceptions.ValidationError``.
        """

    def full_clean(self):
        """
        Runs the validation, called once the object is built.
        """
        self.clean()
