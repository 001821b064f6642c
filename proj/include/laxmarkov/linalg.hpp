#pragma once

#include <Eigen/Dense>

#include "laxmarkov/errors.hpp"

namespace laxmarkov {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

inline void require_square(const Matrix& a, const char* who) {
    if (a.rows() != a.cols())
        throw DimensionMismatch(std::string(who) + ": matrix must be square");
}

inline void require_same_size(const Matrix& a, const Matrix& b, const char* who) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatch(std::string(who) + ": operand sizes differ");
}

inline Matrix commutator(const Matrix& a, const Matrix& b) {
    require_square(a, "commutator");
    require_same_size(a, b, "commutator");
    return a * b - b * a;
}

inline double max_abs(const Matrix& a) {
    return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

inline double max_abs(const Vector& v) {
    return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff();
}

}  // namespace laxmarkov
