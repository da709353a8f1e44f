import pytest

from simrank import correlation_matrix, load_reference_dataset, normalize


@pytest.fixture(scope="session")
def reference_dataset():
    return load_reference_dataset()


@pytest.fixture(scope="session")
def reference_matrix(reference_dataset):
    return normalize(reference_dataset)


@pytest.fixture(scope="session")
def reference_correlations(reference_dataset):
    return correlation_matrix(reference_dataset)
