from scipy.spatial.distance import pdist

from pruneclust.models.data import DataMatrix, DistanceMatrix


def pairwise_sq_distances(data: DataMatrix) -> DistanceMatrix:
    """Squared Euclidean distances, the D(x_i, x_i') of the dispersion loss."""
    return DistanceMatrix(n=data.n, entries=pdist(data.values, metric="sqeuclidean"))


def pairwise_distances(data: DataMatrix) -> DistanceMatrix:
    """Raw Euclidean distances; linkage heights are built from these."""
    return DistanceMatrix(n=data.n, entries=pdist(data.values, metric="euclidean"))
