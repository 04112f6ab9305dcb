from typing import Union

# mypy does not support recursive types so we can't say much about what's in
# the containers here.  No floats: every number we emit is exact.
JSON = Union[None, bool, int, str, list, dict]
