"""Explicit matrices for the N=3 and N=4 worked examples, entered by hand."""
import numpy as np

s3 = np.sqrt(3)
i = 1j


def qutrit_M():
    return np.array(
        [
            [1, 0, 0, s3, 0, 0, 0, 0, 1],
            [0, s3, -s3 * i, 0, 0, 0, 0, 0, 0],
            [0, 0, 0, 0, s3, -s3 * i, 0, 0, 0],
            [0, s3, s3 * i, 0, 0, 0, 0, 0, 0],
            [1, 0, 0, -s3, 0, 0, 0, 0, 1],
            [0, 0, 0, 0, 0, 0, s3, -s3 * i, 0],
            [0, 0, 0, 0, s3, s3 * i, 0, 0, 0],
            [0, 0, 0, 0, 0, 0, s3, s3 * i, 0],
            [1, 0, 0, 0, 0, 0, 0, 0, -2],
        ]
    ) / 3


def qutrit_A(nu):
    n1, n2, n3, n4, n5, n6, n7, n8 = nu
    A = np.zeros((9, 9))
    A[0, 0] = A[4, 4] = 1 / 3 + n3 / 2 + n8 / 6
    A[0, 4] = A[4, 0] = 1 / 3 - n3 / 2 + n8 / 6
    A[0, 8] = A[4, 8] = A[8, 0] = A[8, 4] = 1 / 3 - n8 / 3
    A[8, 8] = 1 / 3 + 2 * n8 / 3
    A[1, 1] = A[3, 3] = (n1 + n2) / 2
    A[1, 3] = A[3, 1] = (n1 - n2) / 2
    A[2, 2] = A[6, 6] = (n4 + n5) / 2
    A[2, 6] = A[6, 2] = (n4 - n5) / 2
    A[5, 5] = A[7, 7] = (n6 + n7) / 2
    A[5, 7] = A[7, 5] = (n6 - n7) / 2
    return A


def qutrit_B(nu):
    n1, n2, n3, n4, n5, n6, n7, n8 = nu
    B = np.zeros((9, 9))
    B[0, 0] = B[4, 4] = (2 + 3 * n3 + n8) / 6
    B[1, 1] = B[3, 3] = (2 - 3 * n3 + n8) / 6
    B[2, 2] = B[5, 5] = B[6, 6] = B[7, 7] = 1 / 3 - n8 / 3
    B[8, 8] = (1 + 2 * n8) / 3
    B[0, 4] = B[4, 0] = (n1 + n2) / 2
    B[0, 8] = B[8, 0] = (n4 + n5) / 2
    B[4, 8] = B[8, 4] = (n6 + n7) / 2
    B[1, 3] = B[3, 1] = (n1 - n2) / 2
    B[2, 6] = B[6, 2] = (n4 - n5) / 2
    B[5, 7] = B[7, 5] = (n6 - n7) / 2
    return B


def quart_M():
    """The N=4 M matrix with unnormalized Pauli-tensor generators."""
    r = 1 / np.sqrt(6)
    rows = [
        [r, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1],
        [0, 1, -i, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -i, 0],
        [0, 0, 0, 0, 1, -i, 0, 0, 0, 1, 0, 0, -i, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, 1, -i, 0, -i, -1, 0, 0, 0, 0],
        [0, 1, i, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, i, 0],
        [r, 0, 0, -1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, -1],
        [0, 0, 0, 0, 0, 0, 0, 1, i, 0, -i, 1, 0, 0, 0, 0],
        [0, 0, 0, 0, 1, -i, 0, 0, 0, -1, 0, 0, i, 0, 0, 0],
        [0, 0, 0, 0, 1, i, 0, 0, 0, 1, 0, 0, i, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, 1, -i, 0, i, 1, 0, 0, 0, 0],
        [r, 0, 0, 1, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, -1],
        [0, 1, -i, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, i, 0],
        [0, 0, 0, 0, 0, 0, 0, 1, i, 0, i, -1, 0, 0, 0, 0],
        [0, 0, 0, 0, 1, i, 0, 0, 0, -1, 0, 0, -i, 0, 0, 0],
        [0, 1, i, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, -i, 0],
        [r, 0, 0, -1, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 1],
    ]
    return np.sqrt(6) / 4 * np.array(rows, dtype=complex)
