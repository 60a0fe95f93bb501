#ifndef TWISTPROD_FRACTIONS_HPP
#define TWISTPROD_FRACTIONS_HPP

#include <Eigen/Dense>
#include <string>

namespace twistprod {

/// Human rendering of the small values these constructions produce:
/// p/q with q in {1, 2, 4, 8, 16, 64} and |p| <= 128, or p/sqrt(2), when
/// the value is within 1e-9 of such a form; 12 significant digits
/// otherwise.
std::string format_value(double v);

/// Matrix with format_value entries, columns aligned.
std::string format_matrix(const Eigen::MatrixXd& m);

}  // namespace twistprod

#endif
