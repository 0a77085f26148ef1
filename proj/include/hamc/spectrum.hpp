#pragma once

#include <cstdint>
#include <vector>

#include "hamc/graph.hpp"

namespace hamc {

// All adjacency eigenvalues, sorted descending.  Dense symmetric reduction;
// limited to n <= 4000 vertices (resource error above).
std::vector<double> dense_spectrum(const Graph& g);

// The k largest-magnitude adjacency eigenvalues, sorted by descending
// magnitude (ties broken toward the positive value first).  Dense for
// n <= 4000, iterative Krylov extremes above (k <= 2 in that regime).
std::vector<double> numeric_spectrum(const Graph& g, int k);

// Largest-magnitude adjacency eigenvalue on the orthogonal complement of
// the all-ones vector, for a regular graph: Lanczos with explicit deflation
// of the all-ones direction and full reorthogonalization, run to the given
// tolerance.  For a connected d-regular graph this bounds every eigenvalue
// except the simple Perron value d.
double orthogonal_extreme_magnitude(const Graph& g, double tol = 1e-8, int max_iter = 400,
                                    std::uint64_t seed = 1);

// Helper for regular graphs: drops one eigenvalue closest to the degree
// from a descending spectrum and returns the largest remaining magnitude.
double max_nontrivial_magnitude(const std::vector<double>& spectrum_desc, double degree);

} // namespace hamc
