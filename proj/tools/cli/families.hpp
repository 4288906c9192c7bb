#pragma once

#include <cstddef>

#include "hadex/matrix.hpp"

namespace hadex::cli {

/// `copies` identical rows, each equal to `row` (whose entries must be
/// pairwise distinct). Any k-1 of them give a nonsingular Vandermonde system.
Matrix vandermonde_family(const Vector& row, std::size_t copies);

/// The l x 2^l sign matrix with entry (i, j) = (-1)^(bit i of j); its
/// extension is the Fourier matrix of (Z/2)^l.
Matrix hamming_family(unsigned l);

/// The (k-1) x k matrix with entry (i, j) = 1 if i < j and 1/2 otherwise
/// (1-based). Written with i <= j instead, the first row would be constant
/// and the NAE condition would fail, so the strict variant is used.
Matrix stairstep_family(std::size_t k);

}  // namespace hadex::cli
