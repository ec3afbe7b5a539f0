#include "tfde/matrix_market.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace tfde {

namespace {

constexpr int kDigits = 17;

std::string lowercase(std::string s) {
  for (auto& ch : s) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  return s;
}

}  // namespace

void write_matrix_market(std::ostream& os, const DenseMatrix& m, bool skip_zeros) {
  std::size_t nnz = 0;
  for (double v : m.data()) nnz += (!skip_zeros || v != 0.0) ? 1 : 0;
  os << "%%MatrixMarket matrix coordinate real general\n";
  os << m.rows() << ' ' << m.cols() << ' ' << nnz << '\n';
  os << std::setprecision(kDigits);
  for (std::size_t j = 0; j < m.cols(); ++j) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      const double v = m(i, j);
      if (skip_zeros && v == 0.0) continue;
      os << i + 1 << ' ' << j + 1 << ' ' << v << '\n';
    }
  }
}

void write_matrix_market_diagonal(std::ostream& os, std::span<const double> diag) {
  os << "%%MatrixMarket matrix coordinate real general\n";
  os << diag.size() << ' ' << diag.size() << ' ' << diag.size() << '\n';
  os << std::setprecision(kDigits);
  for (std::size_t i = 0; i < diag.size(); ++i)
    os << i + 1 << ' ' << i + 1 << ' ' << diag[i] << '\n';
}

void write_matrix_market_vector(std::ostream& os, std::span<const double> v) {
  os << "%%MatrixMarket matrix array real general\n";
  os << v.size() << " 1\n";
  os << std::setprecision(kDigits);
  for (double x : v) os << x << '\n';
}

DenseMatrix read_matrix_market(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw std::runtime_error("MatrixMarket: empty input");
  std::istringstream banner(line);
  std::string tag, object, format, field, symmetry;
  banner >> tag >> object >> format >> field >> symmetry;
  if (tag != "%%MatrixMarket" || lowercase(object) != "matrix")
    throw std::runtime_error("MatrixMarket: bad banner '" + line + "'");
  format = lowercase(format);
  if (lowercase(field) != "real" || lowercase(symmetry) != "general")
    throw std::runtime_error("MatrixMarket: only real general supported");

  while (std::getline(is, line)) {
    if (!line.empty() && line[0] != '%') break;
  }
  std::istringstream size_line(line);
  std::size_t rows = 0, cols = 0, nnz = 0;
  if (format == "coordinate") {
    if (!(size_line >> rows >> cols >> nnz))
      throw std::runtime_error("MatrixMarket: bad size line");
    DenseMatrix m(rows, cols);
    for (std::size_t k = 0; k < nnz; ++k) {
      std::size_t i = 0, j = 0;
      double v = 0.0;
      if (!(is >> i >> j >> v) || i == 0 || j == 0 || i > rows || j > cols)
        throw std::runtime_error("MatrixMarket: bad entry " + std::to_string(k + 1));
      m(i - 1, j - 1) = v;
    }
    return m;
  }
  if (format == "array") {
    if (!(size_line >> rows >> cols))
      throw std::runtime_error("MatrixMarket: bad size line");
    DenseMatrix m(rows, cols);
    for (std::size_t j = 0; j < cols; ++j)
      for (std::size_t i = 0; i < rows; ++i)
        if (!(is >> m(i, j))) throw std::runtime_error("MatrixMarket: short array");
    return m;
  }
  throw std::runtime_error("MatrixMarket: unknown format '" + format + "'");
}

void save_matrix_market(const std::string& path, const DenseMatrix& m) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open " + path);
  write_matrix_market(os, m);
}

DenseMatrix load_matrix_market(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open " + path);
  return read_matrix_market(is);
}

}  // namespace tfde
