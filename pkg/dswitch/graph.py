from __future__ import division, absolute_import, print_function

import random
import networkx as nx

from .errors import FormatError, MalformedGraph6
from .helper import popcount, mask_to_points, load_json, dump_json
from .core import RatMatrix

GRAPH6_HEADER = b'>>graph6<<'


class Graph:
    '''
    Simple undirected graph on the vertices 0..n-1

    Row i of the adjacency matrix is kept as a bit mask, bit j set iff
    i and j are adjacent.
    '''

    __slots__ = ('n', 'rows')

    def __init__(self, n: int, rows=None) -> None:
        rows = tuple(rows) if rows is not None else (0,) * n
        if len(rows) != n:
            raise FormatError(f'Expected {n} adjacency rows, got {len(rows)}')
        full = (1 << n) - 1
        for i, row in enumerate(rows):
            if row & ~full or row >> i & 1:
                raise FormatError(f'Invalid adjacency row {i}')
            for j in mask_to_points(row):
                if not rows[j] >> i & 1:
                    raise FormatError(f'Adjacency is not symmetric at ({i}, {j})')
        self.n = n
        self.rows = rows

    @classmethod
    def from_edges(cls, n: int, edges) -> 'Graph':
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n) or u == v:
                raise FormatError(f'Invalid edge ({u}, {v}) on {n} vertices')
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows)

    @classmethod
    def from_adjacency(cls, matrix) -> 'Graph':
        '''
        Creates a graph from a 0/1 matrix (list of rows or RatMatrix)
        '''
        if isinstance(matrix, RatMatrix):
            matrix = matrix.to_rows()
        n = len(matrix)
        rows = []
        for i, row in enumerate(matrix):
            if len(row) != n:
                raise FormatError('Adjacency matrix is not square')
            mask = 0
            for j, x in enumerate(row):
                if x == 1:
                    mask |= 1 << j
                elif x != 0:
                    raise FormatError(f'Adjacency entry ({i}, {j}) is {x}')
            rows.append(mask)
        return cls(n, rows)

    @classmethod
    def complete(cls, n: int) -> 'Graph':
        full = (1 << n) - 1
        return cls(n, [full & ~(1 << i) for i in range(n)])

    @classmethod
    def random(cls, n: int, seed=None, p: float = 0.5) -> 'Graph':
        '''
        Erdos-Renyi graph, deterministic in seed
        '''
        rng = random.Random(seed)
        edges = [(i, j) for i in range(n) for j in range(i + 1, n)
                 if rng.random() < p]
        return cls.from_edges(n, edges)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.n, self.rows))

    def __repr__(self) -> str:
        return f'Graph(n={self.n}, edges={self.edge_count})'

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        return popcount(self.rows[v])

    @property
    def edge_count(self) -> int:
        return sum(popcount(r) for r in self.rows) // 2

    def edges(self) -> list:
        return [(i, j) for i in range(self.n)
                for j in mask_to_points(self.rows[i] >> (i + 1) << (i + 1))]

    def adjacency(self) -> list:
        return [[r >> j & 1 for j in range(self.n)] for r in self.rows]

    def to_matrix(self) -> RatMatrix:
        return RatMatrix.from_rows(self.adjacency()) if self.n else RatMatrix.zeros(0)

    def complement(self) -> 'Graph':
        full = (1 << self.n) - 1
        return Graph(self.n, [full & ~r & ~(1 << i) for i, r in enumerate(self.rows)])

    def induced(self, vertices) -> 'Graph':
        '''
        Induced subgraph, vertex k of the result is vertices[k]
        '''
        return self.relabel(vertices, partial=True)

    def relabel(self, sigma, partial: bool = False) -> 'Graph':
        '''
        Vertex i of the result is vertex sigma[i] of this graph
        '''
        if not partial and sorted(sigma) != list(range(self.n)):
            raise FormatError('Relabeling is not a permutation')
        rows = []
        for a in sigma:
            row = self.rows[a]
            mask = 0
            for k, b in enumerate(sigma):
                if row >> b & 1:
                    mask |= 1 << k
            rows.append(mask)
        return Graph(len(sigma), rows)

    # conversion

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges())
        return g

    @classmethod
    def from_networkx(cls, g: nx.Graph) -> 'Graph':
        nodes = list(g.nodes())
        index = {x: i for i, x in enumerate(nodes)}
        return cls.from_edges(len(nodes), [(index[u], index[v]) for u, v in g.edges()])

    def to_json(self) -> dict:
        return {'n': self.n, 'edges': [list(e) for e in self.edges()]}

    @classmethod
    def from_json(cls, data: dict) -> 'Graph':
        try:
            n = data['n']
            edges = data['edges']
        except (KeyError, TypeError):
            raise FormatError('Graph JSON needs "n" and "edges"')
        if not isinstance(n, int) or n < 0:
            raise FormatError(f'Invalid vertex count {n!r}')
        try:
            return cls.from_edges(n, [(int(u), int(v)) for u, v in edges])
        except (TypeError, ValueError):
            raise FormatError('Edges must be pairs of vertex ids')


def _graph6_size(data: bytes) -> tuple:
    '''
    Decodes the size prefix, returns (n, offset of the body)
    '''
    if not data:
        raise MalformedGraph6('Empty graph6 string', offset=0)
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) > 1 and data[1] == 126:
        width, start = 6, 2
    else:
        width, start = 3, 1
    if len(data) < start + width:
        raise MalformedGraph6('Truncated size prefix', offset=len(data))
    n = 0
    for b in data[start:start + width]:
        n = n << 6 | (b - 63)
    return n, start + width


def parse_graph6(data) -> Graph:
    '''
    Parses one graph6 encoded graph

    Args:
    -----
    - data (bytes or str): graph6 bytes, optional header and newline

    Returns:
    --------
    Graph
    '''
    if isinstance(data, str):
        try:
            data = data.encode('ascii')
        except UnicodeEncodeError:
            raise MalformedGraph6('Non-ASCII input', offset=0)
    data = bytes(data).rstrip(b'\r\n')
    base = 0
    if data.startswith(GRAPH6_HEADER):
        data = data[len(GRAPH6_HEADER):]
        base = len(GRAPH6_HEADER)
    for i, b in enumerate(data):
        if not 63 <= b <= 126:
            raise MalformedGraph6(f'Byte {b} outside the printable range',
                                  offset=base + i)
    n, start = _graph6_size(data)
    expected = start + (n * (n - 1) // 2 + 5) // 6
    if len(data) != expected:
        raise MalformedGraph6(
            f'Expected {expected} bytes for {n} vertices, got {len(data)}',
            offset=base + min(len(data), expected))
    try:
        g = nx.from_graph6_bytes(data)
    except nx.NetworkXError as e:
        raise MalformedGraph6(str(e), offset=base)
    return Graph.from_networkx(g)


def emit_graph6(graph: Graph, header: bool = False) -> bytes:
    '''
    Encodes a graph as graph6 bytes without trailing newline
    '''
    return nx.to_graph6_bytes(
        graph.to_networkx(), nodes=list(range(graph.n)), header=header).rstrip(b'\n')


def load_graph(filename: str) -> Graph:
    '''
    Loads a graph from a .g6 file or a JSON edge list
    '''
    if filename.endswith('.json'):
        return Graph.from_json(load_json(filename))
    try:
        with open(filename, 'rb') as file:
            data = file.read().strip()
    except OSError as e:
        raise FormatError(f'Cannot read {filename}: {e}')
    return parse_graph6(data)


def save_graph(graph: Graph, filename: str) -> None:
    if filename.endswith('.json'):
        dump_json(graph.to_json(), filename)
        return
    with open(filename, 'wb') as file:
        file.write(emit_graph6(graph) + b'\n')
