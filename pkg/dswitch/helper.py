from __future__ import division, absolute_import, print_function

import os
import re
import sys
import json
import yaml
import inspect
import pkgutil
import importlib.util

from fractions import Fraction
from zipimport import zipimporter

from .errors import FormatError


ENV_THREADS = 'DSWITCH_THREADS'

_CYCLE_RE = re.compile(r'\(([^()]*)\)')


def load_json(filename):
    try:
        with open(filename, 'r') as file:
            res = json.load(file)
    except (OSError, ValueError) as e:
        raise FormatError(f'Cannot read {filename}: {e}')
    return res


def load_yaml(filename):
    with open(filename, 'r') as file:
        res = yaml.safe_load(file)
    return res


def dump_json(data, filename=None) -> str:
    '''
    Serializes data with sorted keys so reruns are byte identical

    Args:
    -----
    - data: JSON compatible data
    - filename (str): Optional, file to write to

    Returns:
    --------
    str
    '''
    txt = json.dumps(data, sort_keys=True, separators=(',', ': '))
    if filename:
        with open(filename, 'w') as file:
            file.write(txt + '\n')
    return txt


def merge_dicts(dict1: dict, dict2: dict) -> None:
    '''
    Merges dictionaries recursively

    Args:
    -----
    dict1: Base dictionary to merge
    dict2: Dictionary to merge on top of base dictionary

    Returns:
    --------
    None
    '''
    for k in dict2.keys():
        if (k in dict1 and isinstance(dict1[k], dict)
                and isinstance(dict2[k], dict)):
            merge_dicts(dict1[k], dict2[k])
        else:
            dict1[k] = dict2[k]


def get_classes(modules: list or str, register: bool = True) -> dict:
    '''
    Returns all classes from given search paths

    Args:
    -----
    - modules (list or str)
    - register (bool): Default=True

    Returns:
    --------
    dict
    '''

    def _iter_classes_submodules(path: str, register: bool) -> dict:
        '''
        Iterates over submodules and returns all contained classes
        '''
        spec = importlib.util.find_spec(path)
        if spec is None:
            return {}
        res = {}
        module = _import_module(spec, path)
        if register:
            sys.modules[module.__name__] = module
        for m in inspect.getmembers(module, inspect.isclass):
            res[m[0]] = m[1]
        for mod in pkgutil.iter_modules(spec.submodule_search_locations or []):
            res.update(_iter_classes_submodules(
                '.'.join([path, mod.name]), register))
        return res

    def _import_module(spec, path):
        '''
        Imports a module by spec, reusing already imported modules
        '''
        if path in sys.modules:
            return sys.modules[path]
        mod = importlib.util.module_from_spec(spec)
        if isinstance(spec.loader, zipimporter):
            exec(spec.loader.get_code(mod.__name__), mod.__dict__)
        else:
            spec.loader.exec_module(mod)
        return mod

    if isinstance(modules, str):
        modules = [modules]
    res = {}
    for x in modules:
        res.update(_iter_classes_submodules(x, register))
    return res


def default_threads() -> int:
    '''
    Returns the default worker count from the environment
    '''
    value = os.environ.get(ENV_THREADS, '')
    try:
        return max(1, int(value))
    except ValueError:
        return 1


def parse_cycles(txt: str, n: int) -> list:
    '''
    Parses 1-based cycle notation into a 0-based image list

    Args:
    -----
    - txt (str): Cycles like "(1 6)(2 5)(3 4)", "()" or "id"
    - n (int): Degree of the permutation

    Returns:
    --------
    list
    '''
    images = list(range(n))
    txt = (txt or '').strip()
    if txt in ('', 'id', '()'):
        return images
    rest = _CYCLE_RE.sub('', txt).strip()
    if rest:
        raise FormatError(f'Unexpected text in cycle notation: {rest!r}')
    seen = set()
    for body in _CYCLE_RE.findall(txt):
        items = [x for x in re.split(r'[\s,]+', body.strip()) if x]
        try:
            cycle = [int(x) - 1 for x in items]
        except ValueError:
            raise FormatError(f'Non-integer entry in cycle ({body})')
        for x in cycle:
            if x < 0 or x >= n:
                raise FormatError(f'Cycle entry {x + 1} outside 1..{n}')
            if x in seen:
                raise FormatError(f'Cycle entry {x + 1} repeated')
            seen.add(x)
        for i, x in enumerate(cycle):
            images[x] = cycle[(i + 1) % len(cycle)]
    return images


def format_cycles(images) -> str:
    '''
    Formats a 0-based image list as 1-based cycle notation
    '''
    seen = set()
    cycles = []
    for start in range(len(images)):
        if start in seen or images[start] == start:
            continue
        cycle = [start]
        seen.add(start)
        x = images[start]
        while x != start:
            cycle.append(x)
            seen.add(x)
            x = images[x]
        cycles.append('(' + ' '.join(str(x + 1) for x in cycle) + ')')
    return ''.join(cycles) if cycles else '()'


def rational_to_json(value: Fraction) -> list:
    return [value.numerator, value.denominator]


def rational_from_json(value) -> Fraction:
    if isinstance(value, int):
        return Fraction(value)
    if (not isinstance(value, (list, tuple)) or len(value) != 2
            or not all(isinstance(x, int) for x in value) or value[1] == 0):
        raise FormatError(f'Invalid rational {value!r}')
    return Fraction(value[0], value[1])


def popcount(x: int) -> int:
    return bin(x).count('1')


def mask_to_points(mask: int) -> list:
    res = []
    i = 0
    while mask:
        if mask & 1:
            res.append(i)
        mask >>= 1
        i += 1
    return res


def points_to_mask(points) -> int:
    mask = 0
    for p in points:
        mask |= 1 << p
    return mask


def parse_members(value) -> list:
    '''
    Parses vertex indices given as list or as "0,1,2" / "0 1 2"
    '''
    if isinstance(value, (list, tuple)):
        items = list(value)
    else:
        items = [x for x in re.split(r'[\s,]+', str(value).strip()) if x]
    try:
        return [int(x) for x in items]
    except (TypeError, ValueError):
        raise FormatError(f'Invalid vertex list {value!r}')
