#ifndef ADLAB_APPS_JACOBI_HPP
#define ADLAB_APPS_JACOBI_HPP

#include <vector>

#include "core/matrix.hpp"

namespace adlab::apps {

struct EigenDecomposition {
    std::vector<double> values;  // descending
    Matrix vectors;              // column i pairs with values[i]
};

// Cyclic Jacobi rotations on a symmetric matrix. Sized for the small
// covariance problems here (dim ≤ 8); throws NumericError if the
// off-diagonal mass has not dropped below 1e−12 after the sweep limit.
EigenDecomposition jacobi_eigen_symmetric(Matrix a, std::size_t max_sweeps = 64);

} // namespace adlab::apps

#endif
