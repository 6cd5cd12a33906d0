#pragma once

#include "mutalg/matrix.hpp"
#include "mutalg/telem.hpp"

#include <vector>

namespace mutalg {

// Fraction-free (Bareiss) elimination over Z.
Int determinant(Mat<Int> a);

// Leading principal minors 1..n, each computed exactly.
std::vector<Int> leading_minors(const Mat<Int>& a);

// Rows are vectors; rank of the span over Q. Works on rectangular input.
std::size_t rank_of(std::vector<std::vector<Rat>> rows);

// Reduced row echelon form over Q of the given rows, zero rows dropped.
// `pivots` receives the pivot column of each returned row.
std::vector<std::vector<Rat>> rref(std::vector<std::vector<Rat>> rows, std::vector<std::size_t>* pivots = nullptr);

// Basis of {x : A x = 0} for A given by its rows, over Q. `cols` is the width.
std::vector<std::vector<Rat>> nullspace(const std::vector<std::vector<Rat>>& rows, std::size_t cols);

}  // namespace mutalg
