import numpy as np

from motkit.constructions.kernels import random_walk_kernel
from motkit.constructions.measures import mu_m, theta_n
from motkit.measure.core import CONSOLIDATE_TOL, cluster_points
from motkit.models.coupling import Coupling
from motkit.models.measure import AtomicKernel, DiscreteMeasure


def kernel_coupling(mu: DiscreteMeasure, kernel: AtomicKernel) -> Coupling:
    """mu(Id, K): source atom x sends its mass along K(x)."""
    images = [kernel(x) for x, _ in mu.atoms()]
    all_points = np.vstack([image.points for image in images])
    targets, labels = cluster_points(all_points, CONSOLIDATE_TOL)

    mass = np.zeros((len(mu), targets.shape[0]))
    offset = 0
    for i, (image, w) in enumerate(zip(images, mu.weights)):
        np.add.at(mass[i], labels[offset:offset + len(image)], w * image.weights)
        offset += len(image)
    return Coupling(mu.points, targets, mass)


def pi_mn(m: int, n: int, dim: int = 2) -> Coupling:
    return kernel_coupling(mu_m(m, dim), random_walk_kernel(theta_n(n)))


def pi_prime() -> Coupling:
    """
    The martingale coupling of (mu_3, mu_3 P_0) that keeps the shared mass
    in place and only moves the excess of atoms 1 and 3 to 0 and 4.
    """
    source = np.array([[1.0, 0.0], [2.0, 0.0], [3.0, 0.0]])
    target = np.array([[0.0, 0.0], [1.0, 0.0], [2.0, 0.0], [3.0, 0.0], [4.0, 0.0]])
    mass = np.array([
        [3 / 24, 1 / 6, 0.0, 0.0, 1 / 24],
        [0.0, 0.0, 2 / 6, 0.0, 0.0],
        [1 / 24, 0.0, 0.0, 1 / 6, 3 / 24],
    ])
    return Coupling(source, target, mass)
