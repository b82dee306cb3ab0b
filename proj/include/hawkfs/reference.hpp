#pragma once

#include <span>
#include <vector>

#include "hawkfs/linalg.hpp"

namespace hawkfs::reference {

// Plain serial implementations, written independently of the production
// kernels. Tests compare the two paths; the benchmark tool measures them.

// Element-wise sigmoid-affine layer: H(i,k) = 1/(1+exp(-(<w_k,x_i>+b_k)))
Matrix hidden_activations(const Matrix& input_weights, const Vector& hidden_biases,
                          const Matrix& x);

// Exhaustive k-nearest-neighbour vote with a full sort per query; same tie
// rules as the production kernel (lower training index, then lower class).
std::vector<int> knn_predict(const Matrix& train, std::span<const int> labels, int k,
                             int n_classes, const Matrix& queries);

// Least squares through the normal equations; an algebraically different
// route to the same minimiser when the system has full column rank.
Matrix normal_equation_solve(const Matrix& a, const Matrix& b);

}  // namespace hawkfs::reference
