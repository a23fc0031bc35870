#include "stabinfer/matio.hpp"

#include "stabinfer/errors.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>

namespace stabinfer {

std::string format_scalar(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

void write_matrix(std::ostream& out, const Matrix& m) {
  out << m.rows() << ' ' << m.cols() << '\n';
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      if (j > 0) out << ' ';
      out << format_scalar(m(i, j));
    }
    out << '\n';
  }
}

void write_matrix(const std::filesystem::path& path, const Matrix& m) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot open for writing: " + path.string());
  write_matrix(out, m);
  if (!out) throw FormatError("write failed: " + path.string());
}

namespace {

double parse_scalar(const std::string& token, const std::string& where) {
  double value = 0.0;
  const char* begin = token.data();
  const char* end = begin + token.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end) {
    throw FormatError(where + ": bad scalar '" + token + "'");
  }
  if (!std::isfinite(value)) {
    throw FormatError(where + ": non-finite scalar '" + token + "'");
  }
  return value;
}

}  // namespace

Matrix read_matrix(std::istream& in) {
  long long rows = -1;
  long long cols = -1;
  if (!(in >> rows >> cols) || rows < 0 || cols < 0) {
    throw FormatError("matrix header must be 'rows cols'");
  }
  Matrix m(rows, cols);
  std::string token;
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      if (!(in >> token)) {
        throw FormatError("matrix body truncated");
      }
      m(i, j) = parse_scalar(token, "matrix entry");
    }
  }
  return m;
}

Matrix read_matrix(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open: " + path.string());
  return read_matrix(in);
}

void write_complex_list(const std::filesystem::path& path,
                        const ComplexVector& values) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot open for writing: " + path.string());
  for (Index i = 0; i < values.size(); ++i) {
    out << format_scalar(values(i).real()) << ' '
        << format_scalar(values(i).imag()) << '\n';
  }
}

ComplexVector read_complex_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open: " + path.string());
  std::vector<Complex> values;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string re_token;
    std::string im_token;
    if (!(row >> re_token >> im_token)) {
      throw FormatError("complex list lines must be 're im'");
    }
    values.emplace_back(parse_scalar(re_token, "complex entry"),
                        parse_scalar(im_token, "complex entry"));
  }
  ComplexVector out(static_cast<Index>(values.size()));
  for (Index i = 0; i < out.size(); ++i) out(i) = values[i];
  return out;
}

}  // namespace stabinfer
