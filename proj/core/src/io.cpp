#include "symbath/io.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace symbath {

std::string format_float(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string format_complex(Cplx z) {
  std::string out = format_float(z.real());
  out += std::signbit(z.imag()) ? "-" : "+";
  out += format_float(std::abs(z.imag()));
  out += "j";
  return out;
}

Cplx parse_complex(const std::string& token) {
  if (token.empty() || token.back() != 'j') {
    throw std::invalid_argument("complex entry must end in 'j': " + token);
  }
  const std::string body = token.substr(0, token.size() - 1);
  // split at the sign that separates real and imaginary parts, skipping
  // exponent signs and a leading sign
  std::size_t split = std::string::npos;
  for (std::size_t k = 1; k < body.size(); ++k) {
    const char ch = body[k];
    if ((ch == '+' || ch == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;  // keep scanning: the last such sign starts the imaginary part
    }
  }
  if (split == std::string::npos) {
    throw std::invalid_argument("complex entry must be re+imj: " + token);
  }
  try {
    const double re = std::stod(body.substr(0, split));
    const double im = std::stod(body.substr(split));
    return {re, im};
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse complex entry: " + token);
  }
}

std::string matrix_to_text(const Mat& m) {
  std::ostringstream out;
  out << m.rows() << " " << m.cols() << "\n";
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (c) out << " ";
      out << format_complex(m(r, c));
    }
    out << "\n";
  }
  return out.str();
}

Mat matrix_from_text(const std::string& text) {
  std::istringstream in(text);
  Eigen::Index rows = 0, cols = 0;
  if (!(in >> rows >> cols) || rows <= 0 || cols <= 0) {
    throw std::invalid_argument("matrix text must start with 'rows cols'");
  }
  Mat m(rows, cols);
  std::string token;
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index c = 0; c < cols; ++c) {
      if (!(in >> token)) {
        throw std::invalid_argument("matrix text ended early");
      }
      m(r, c) = parse_complex(token);
    }
  }
  return m;
}

Mat read_matrix_file(const std::string& path) { return matrix_from_text(read_text_file(path)); }

void write_text_file_atomic(const std::string& path, const std::string& content) {
  const std::filesystem::path target(path);
  const std::filesystem::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw std::runtime_error("cannot open for writing: " + tmp.string());
    }
    out << content;
    if (!out) {
      throw std::runtime_error("write failed: " + tmp.string());
    }
  }
  std::filesystem::rename(tmp, target);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open for reading: " + path);
  }
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace symbath
