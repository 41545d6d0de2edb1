// Text formats: round-trip float formatting, the complex matrix file format
// ("rows cols" header, row-major re+imj cells), and atomic file writes so no
// partial output survives an error.
#pragma once

#include "symbath/algebra.hpp"

#include <string>

namespace symbath {

/// 17 significant digits; round-trips any double exactly.
std::string format_float(double v);

/// One complex entry as re+imj (e.g. "0.5+0j", "-0.25-0.1j").
std::string format_complex(Cplx z);
Cplx parse_complex(const std::string& token);

std::string matrix_to_text(const Mat& m);
Mat matrix_from_text(const std::string& text);

Mat read_matrix_file(const std::string& path);

/// Writes to a sibling temp file and renames into place.
void write_text_file_atomic(const std::string& path, const std::string& content);

std::string read_text_file(const std::string& path);

}  // namespace symbath
