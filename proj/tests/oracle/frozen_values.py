"""Independent computations behind the frozen constants in the C++ tests.

Run with python3; prints every value the tests compare against.
"""
import itertools

import networkx as nx
import numpy as np
from scipy.linalg import null_space

MASK = (1 << 64) - 1


def finalize(z):
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK
    return z ^ (z >> 31)


class SplitMix64:
    def __init__(self, seed):
        self.state = seed & MASK

    def next(self):
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK
        return finalize(self.state)

    def uniform01(self):
        return (self.next() >> 11) * 2.0**-53


def mix_seed(seed, index):
    return finalize(seed ^ finalize((index + 0x9E3779B97F4A7C15) & MASK))


def laplacian(w):
    return np.diag(w.sum(axis=1)) - w


def restricted(w):
    q = null_space(np.ones((1, len(w))))
    return sorted(np.linalg.eigvalsh(q.T @ laplacian(w) @ q), reverse=True)


def show(label, values):
    print(label, " ".join(repr(float(v)) for v in values))


rng = SplitMix64(mix_seed(42, 0))
show("golden_uniform01_n5_seed42_i0", [rng.uniform01() for _ in range(10)])
print("first_raw_seed0", SplitMix64(0).next())

ex = np.zeros((4, 4))
for (i, j, x) in [(0, 1, -1), (0, 2, 2.1), (0, 3, 0), (1, 2, -4), (1, 3, 8), (2, 3, -7)]:
    ex[i, j] = ex[j, i] = x
show("example_mu", restricted(ex))

star = np.zeros((4, 4))
for leaf, x in zip((1, 2, 3), (3, 1, -2)):
    star[0, leaf] = star[leaf, 0] = x
show("star_3_1_m2_mu", restricted(star))

p4 = nx.to_numpy_array(nx.path_graph(4))
lam = sorted(np.linalg.eigvalsh(p4), reverse=True)
g2 = nx.path_graph(4)
for v in (0, 2):
    for r in range(2):
        g2.add_edge(v, f"p{v}{r}")
show("p4_lambda", lam)
show("p4_pendants_lambda", sorted(np.linalg.eigvalsh(nx.to_numpy_array(g2)), reverse=True)[:2])


def p4_value(g):
    a = nx.to_numpy_array(g)
    return np.trace(np.linalg.matrix_power(a, 4)) / 2


double_star = nx.Graph([(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)])
spider = nx.Graph([(0, 1), (1, 2), (0, 3), (0, 4), (0, 5)])
print("p4_double_star", p4_value(double_star), "p4_spider", p4_value(spider))

trees = list(itertools.islice(nx.nonisomorphic_trees(8), 10))
print("trees8_graph6")
for t in trees:
    print(nx.to_graph6_bytes(t, header=False).decode().strip())
print("sparse6_K2", nx.to_sparse6_bytes(nx.complete_graph(2), header=False).decode().strip())
g = nx.from_sparse6_bytes(b":Fa@x^")
print("sparse6_Fa@x^", g.number_of_nodes(), sorted(g.edges()))

mu_p4 = sorted(np.linalg.eigvalsh(laplacian(p4)), reverse=True)
show("p4_laplacian", mu_p4)
