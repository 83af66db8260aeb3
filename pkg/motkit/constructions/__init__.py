from motkit.constructions.couplings import kernel_coupling, pi_mn, pi_prime
from motkit.constructions.kernels import identity_kernel, random_walk_kernel
from motkit.constructions.maps import embedding, projection_L
from motkit.constructions.measures import default_gamma, mu3_P0, mu_m, nu_mn, theta_n
from motkit.constructions.variants import mixture_variant, parallelogram_variant

__all__ = [
    "default_gamma",
    "embedding",
    "identity_kernel",
    "kernel_coupling",
    "mixture_variant",
    "mu3_P0",
    "mu_m",
    "nu_mn",
    "parallelogram_variant",
    "pi_mn",
    "pi_prime",
    "projection_L",
    "random_walk_kernel",
    "theta_n",
]
