"""JSON encodings of matrices, descriptors, representations and reports.

Complex matrices are nested row-major lists of ``[re, im]`` pairs.  :func:`dumps`
writes floats with 17 significant digits and sorted keys, so equal inputs
give byte-identical output.
"""

import json
import math

import numpy as np

from .group_core import GroupDescriptor
from .representation import SurfaceRep


def matrix_to_json(m):
    m = np.asarray(m, dtype=complex)
    return [[[float(z.real), float(z.imag)] for z in row] for row in m]


def matrix_from_json(data):
    arr = np.asarray(data, dtype=float)
    if arr.ndim != 3 or arr.shape[2] != 2:
        raise ValueError("matrix must be a list of rows of [re, im] pairs")
    return arr[..., 0] + 1j * arr[..., 1]


def complex_to_json(z):
    return [float(z.real), float(z.imag)]


def descriptor_to_json(desc):
    return {"family": desc.family.value, "n": desc.n}


def descriptor_from_json(data):
    return GroupDescriptor(data["family"], int(data["n"]))


def rep_to_json(rep):
    return {
        "descriptor": descriptor_to_json(rep.descriptor),
        "genus": rep.genus,
        "A": [matrix_to_json(m) for m in rep.A],
        "B": [matrix_to_json(m) for m in rep.B],
    }


def rep_from_json(data, validate=True):
    try:
        desc = descriptor_from_json(data["descriptor"])
        genus = int(data["genus"])
        A = tuple(matrix_from_json(m) for m in data["A"])
        B = tuple(matrix_from_json(m) for m in data["B"])
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed representation: {exc}") from exc
    kwargs = {"tol": float(data["tol"])} if "tol" in data else {}
    return SurfaceRep(desc, genus, A, B, validate=validate, **kwargs)


def subspace_to_json(sub):
    return {
        "ambient_dim": sub.ambient_dim,
        "dim": sub.dim,
        "basis": [[complex_to_json(z) for z in col] for col in sub.basis.T],
    }


def dims_to_json(report):
    return {k: v for k, v in vars(report).items()}


def pairing_to_json(pm):
    return {
        "form": pm.form_kind.value,
        "dim": pm.dim,
        "rank": pm.rank,
        "entries": [[complex_to_json(z) for z in row] for row in pm.entries],
    }


def obstruction_to_json(cls):
    return {"zeta": complex_to_json(cls.value), "index": cls.index, "n": cls.n,
            "trivial": cls.trivial}


def word_ring_to_json(x):
    return [{"coef": c, "word": str(w)} for c, w in x.terms]


def _encode(obj, out):
    if obj is None or isinstance(obj, (bool, np.bool_)):
        out.append(json.dumps(bool(obj) if obj is not None else None))
    elif isinstance(obj, (int, np.integer)):
        out.append(str(int(obj)))
    elif isinstance(obj, (float, np.floating)):
        if not math.isfinite(obj):
            raise ValueError("non-finite float in report")
        text = "%.17g" % obj
        if "." not in text and "e" not in text:
            text += ".0"
        out.append(text)
    elif isinstance(obj, str):
        out.append(json.dumps(obj))
    elif isinstance(obj, dict):
        out.append("{")
        for i, key in enumerate(sorted(obj)):
            if i:
                out.append(", ")
            out.append(json.dumps(str(key)) + ": ")
            _encode(obj[key], out)
        out.append("}")
    elif isinstance(obj, (list, tuple)):
        out.append("[")
        for i, item in enumerate(obj):
            if i:
                out.append(", ")
            _encode(item, out)
        out.append("]")
    else:
        raise TypeError(f"cannot encode {type(obj).__name__}")


def dumps(obj):
    out = []
    _encode(obj, out)
    return "".join(out)
