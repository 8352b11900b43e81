// Small dense exact linear algebra over Rat (row-major vectors of rows).
#pragma once

#include <vector>

#include "k3period/rat.hpp"

namespace k3p {

using QMat = std::vector<std::vector<Rat>>;
using QVec = std::vector<Rat>;

// Reduced row echelon form in place; returns pivot column indices.
std::vector<int> rref(QMat& m);

int rank(QMat m);

// Basis of the right nullspace (each vector has size = #columns).
std::vector<QVec> nullspace(const QMat& m);

// Solve m x = b; throws std::domain_error when singular/inconsistent.
QVec solve(QMat m, QVec b);

// Characteristic polynomial coefficients c0..cn of an n x n matrix
// (p(t) = c0 + c1 t + ... + cn t^n, cn = 1) via Faddeev-LeVerrier.
QVec char_poly(const QMat& a);

// Exact determinant.
Rat det(QMat m);

// For a symmetric matrix with integer entries: (positive, negative, zero)
// eigenvalue counts via Descartes' rule on the (real-rooted) char poly.
struct Signature {
    int positive = 0, negative = 0, zero = 0;
};
Signature symmetric_signature(const QMat& a);

}  // namespace k3p
