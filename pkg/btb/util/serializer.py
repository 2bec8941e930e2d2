import json
import math
from fractions import Fraction
from pathlib import Path
from typing import Any, Union, Mapping, Iterator

import numpy as np


def fraction_to_dict(x: Fraction) -> dict:
    x = Fraction(x)
    return {"num": str(x.numerator), "den": str(x.denominator)}


def dict_to_fraction(data: Mapping[str, str]) -> Fraction:
    return Fraction(int(data["num"]), int(data["den"]))


class JsonEncoder(json.JSONEncoder):
    """
    Encoder for exact results.

    Floats are refused, rationals become `{"num": "..", "den": ".."}`
    and objects with a `to_dict()` method are encoded through it.
    """
    def encode(self, o: Any) -> str:
        return super().encode(self._convert(o))

    def iterencode(self, o: Any, *args, **kwargs) -> Iterator[str]:
        return super().iterencode(self._convert(o), *args, **kwargs)

    def _convert(self, o):
        if isinstance(o, dict):
            return {str(k): self._convert(v) for k, v in o.items()}
        elif isinstance(o, (tuple, list)):
            return [self._convert(v) for v in o]
        elif isinstance(o, bool) or o is None or isinstance(o, str):
            return o
        elif isinstance(o, Fraction):
            return fraction_to_dict(o)
        elif isinstance(o, (int, np.integer)):
            return int(o)
        elif isinstance(o, float):
            if math.isinf(o):
                return "inf" if o > 0 else "-inf"
            raise TypeError(f"Refusing to serialize inexact float {o}")
        elif isinstance(o, np.ndarray):
            return self._convert(o.tolist())
        elif hasattr(o, "to_dict"):
            return self._convert(o.to_dict())
        return o

    def default(self, o: Any) -> Any:
        if isinstance(o, Path):
            return str(o)

        raise TypeError(f"Object of type '{type(o).__name__}' is not JSON serializable")


def to_json(
        data: Union[Mapping[str, Any], list, tuple],
        **kwargs,
) -> str:
    kwargs.setdefault("separators", (",", ":") if not kwargs.get("indent") else (",", ": "))
    return json.dumps(
        data,
        cls=JsonEncoder,
        ensure_ascii=False,
        **kwargs,
    )
