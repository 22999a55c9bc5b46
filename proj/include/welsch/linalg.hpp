#pragma once
#include <vector>

#include "welsch/rat.hpp"

namespace welsch {

using Vec = std::vector<Rat>;
using Mat = std::vector<Vec>;

Rat det(Mat m);
int rank(Mat m);
// Basis of {v : m v = 0}; each vector scaled to coprime integers with the
// last nonzero entry positive. Order follows the free columns.
std::vector<Vec> nullspace(const Mat& m, int cols);
// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(Mat& m, int cols);
// Inverse of a square matrix, or empty if singular.
Mat inverse(const Mat& m);

Vec integer_primitive(Vec v);

}  // namespace welsch
