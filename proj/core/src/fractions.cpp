#include "twistprod/fractions.hpp"

#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>
#include <vector>

namespace twistprod {

namespace {

constexpr double kMatchTol = 1e-9;

std::string fraction(long p, long q) {
  if (q == 1 || p == 0) return std::to_string(q == 1 ? p : 0L);
  const long g = std::gcd(std::labs(p), q);
  p /= g;
  q /= g;
  if (q == 1) return std::to_string(p);
  return std::to_string(p) + "/" + std::to_string(q);
}

}  // namespace

std::string format_value(double v) {
  for (long q : {1L, 2L, 4L, 8L, 16L, 64L}) {
    const double scaled = v * static_cast<double>(q);
    const long p = std::lround(scaled);
    if (std::labs(p) <= 128 && std::abs(v - static_cast<double>(p) / q) <= kMatchTol)
      return fraction(p, q);
  }
  const double root2 = std::sqrt(2.0);
  const long p = std::lround(v * root2);
  if (p != 0 && std::labs(p) <= 128 && std::abs(v - static_cast<double>(p) / root2) <= kMatchTol)
    return std::to_string(p) + "/sqrt(2)";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string format_matrix(const Eigen::MatrixXd& m) {
  std::vector<std::string> cells(static_cast<std::size_t>(m.rows()) * m.cols());
  std::vector<std::size_t> width(m.cols(), 0);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      std::string s = format_value(m(i, j));
      width[j] = std::max(width[j], s.size());
      cells[static_cast<std::size_t>(i) * m.cols() + j] = std::move(s);
    }
  std::ostringstream out;
  for (int i = 0; i < m.rows(); ++i) {
    out << "[ ";
    for (int j = 0; j < m.cols(); ++j) {
      const std::string& s = cells[static_cast<std::size_t>(i) * m.cols() + j];
      out << std::string(width[j] - s.size(), ' ') << s << (j + 1 < m.cols() ? "  " : " ");
    }
    out << "]\n";
  }
  return out.str();
}

}  // namespace twistprod
