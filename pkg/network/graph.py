"""Immutable undirected simple graph plus SNAP edge-list ingestion."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property
from os import PathLike

import networkx as nx
import numpy as np
from scipy import sparse
from scipy.sparse.csgraph import connected_components

from utils.errors import EdgeListParseError

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class Network:
    """Compressed adjacency of an undirected simple graph.

    ``indices[indptr[u]:indptr[u + 1]]`` is the sorted neighbor list of ``u``.
    ``labels`` keeps the original ids the dense ids were remapped from.
    """

    indptr: np.ndarray
    indices: np.ndarray
    labels: np.ndarray | None = None

    def __post_init__(self):
        for array in (self.indptr, self.indices, self.labels):
            if array is not None:
                array.setflags(write=False)

    @classmethod
    def from_edges(cls, node_count, edges, labels=None):
        """Build a network from an ``(E, 2)`` array of dense ids.

        Edges are symmetrized, self-loops dropped and duplicates removed.
        """
        edges = np.asarray(edges, dtype=np.int64).reshape(-1, 2)
        src = np.concatenate([edges[:, 0], edges[:, 1]])
        dst = np.concatenate([edges[:, 1], edges[:, 0]])
        keep = src != dst
        keys = np.unique(src[keep] * node_count + dst[keep])
        src, dst = np.divmod(keys, node_count)
        counts = np.bincount(src, minlength=node_count)
        indptr = np.zeros(node_count + 1, dtype=np.int64)
        np.cumsum(counts, out=indptr[1:])
        if labels is not None:
            labels = np.asarray(labels, dtype=np.int64).copy()
        return cls(indptr=indptr, indices=dst.astype(np.int64), labels=labels)

    @property
    def node_count(self):
        return len(self.indptr) - 1

    @property
    def edge_count(self):
        return len(self.indices) // 2

    @cached_property
    def degrees(self):
        degrees = np.diff(self.indptr)
        degrees.setflags(write=False)
        return degrees

    @property
    def max_degree(self):
        return int(self.degrees.max()) if self.node_count else 0

    def neighbors(self, u):
        return self.indices[self.indptr[u]:self.indptr[u + 1]]

    def adjacency(self):
        return [self.neighbors(u).tolist() for u in range(self.node_count)]

    def edges(self):
        """Each undirected edge once as ``(u, v)`` with ``u < v``, sorted."""
        src = np.repeat(np.arange(self.node_count), self.degrees)
        mask = src < self.indices
        return np.column_stack([src[mask], self.indices[mask]])

    @cached_property
    def csr(self):
        data = np.ones(len(self.indices), dtype=np.float64)
        return sparse.csr_matrix((data, self.indices, self.indptr),
                                 shape=(self.node_count, self.node_count))

    def to_networkx(self):
        graph = nx.Graph()
        graph.add_nodes_from(range(self.node_count))
        graph.add_edges_from(self.edges().tolist())
        return graph

    def induced_subgraph(self, nodes):
        """Subgraph on ``nodes`` with ids remapped densely in ascending order."""
        nodes = np.unique(np.asarray(nodes, dtype=np.int64))
        remap = np.full(self.node_count, -1, dtype=np.int64)
        remap[nodes] = np.arange(len(nodes))
        edges = self.edges()
        inside = (remap[edges[:, 0]] >= 0) & (remap[edges[:, 1]] >= 0)
        labels = self.labels[nodes] if self.labels is not None else nodes
        return Network.from_edges(len(nodes), remap[edges[inside]], labels=labels)

    def __repr__(self):
        return f"Network(N={self.node_count}, E={self.edge_count})"


def _parse_lines(lines):
    pairs = []
    for line_number, line in enumerate(lines, start=1):
        text = line.strip()
        if not text or text.startswith("#"):
            continue
        tokens = text.split()
        if len(tokens) != 2:
            raise EdgeListParseError(f"expected 2 node ids, got {len(tokens)} tokens", line_number)
        try:
            pairs.append((int(tokens[0]), int(tokens[1])))
        except ValueError:
            raise EdgeListParseError(f"non-integer token in {text!r}", line_number) from None
    return pairs


def load_edge_list(source):
    """Read a SNAP-style edge list (path or text stream) into a raw Network.

    The result is not reduced to its giant component.
    """
    if isinstance(source, (str, PathLike)):
        with open(source, "r", encoding="utf-8") as stream:
            pairs = _parse_lines(stream)
    else:
        pairs = _parse_lines(source)
    if not pairs:
        raise EdgeListParseError("edge list contains no edges")

    raw = np.asarray(pairs, dtype=np.int64)
    labels, dense = np.unique(raw, return_inverse=True)
    net = Network.from_edges(len(labels), dense.reshape(-1, 2), labels=labels)
    if net.edge_count == 0:
        raise EdgeListParseError("edge list contains only self-loops")
    logger.info("Loaded edge list: %d lines, N=%d, E=%d", len(pairs), net.node_count, net.edge_count)
    return net


def write_edge_list(net, sink):
    """Write each undirected edge once, smaller id first."""
    if isinstance(sink, (str, PathLike)):
        with open(sink, "w", encoding="utf-8") as stream:
            return write_edge_list(net, stream)
    sink.write(f"# Nodes: {net.node_count} Edges: {net.edge_count}\n")
    for u, v in net.edges():
        sink.write(f"{u} {v}\n")


def giant_component(net):
    """Largest connected component; ties go to the component holding the smallest id."""
    if net.node_count == 0:
        return net
    n_components, labels = connected_components(net.csr, directed=False)
    if n_components == 1:
        return net
    sizes = np.bincount(labels)
    keep = np.flatnonzero(labels == int(np.argmax(sizes)))
    logger.info("Giant component keeps %d of %d nodes (%d components)",
                len(keep), net.node_count, n_components)
    return net.induced_subgraph(keep)
