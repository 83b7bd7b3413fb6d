#pragma once

#include "pinlift/rational.hpp"

namespace pinlift {

// dense exact matrices, row-major
using Mat = std::vector<Vec>;

Mat identity_mat(size_t n);
Mat transpose(const Mat& m);
Vec mat_apply(const Mat& m, const Vec& v);
Mat mat_mul(const Mat& a, const Mat& b);
bool mat_equal(const Mat& a, const Mat& b);

// reduced row echelon form in place; returns rank
size_t rref(Mat& m);

// solve A x = b for square invertible A; throws std::logic_error if singular
Vec solve(const Mat& a, const Vec& b);
Mat inverse(const Mat& a);

// basis of the row space (rref rows, scaled to primitive integer vectors)
Mat row_space_basis(const Mat& rows);

// basis of {x : A x = 0}
Mat null_space(const Mat& a);

// Gram-Schmidt without normalization, result rows scaled to primitive integer vectors.
// Input rows must be linearly independent.
Mat orthogonalize(const Mat& rows);

}  // namespace pinlift
