#include "symbath/io.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>

using namespace symbath;

TEST_CASE("float formatting round-trips doubles") {
  Rng rng(61);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const double v = gauss(rng) * std::pow(10.0, trial % 17 - 8);
    CHECK(std::stod(format_float(v)) == v);
  }
  CHECK(format_float(0.0) == "0");
  CHECK(format_float(0.5) == "0.5");
}

TEST_CASE("complex entry formatting") {
  CHECK(format_complex(Cplx(0.5, 0.0)) == "0.5+0j");
  CHECK(format_complex(Cplx(-0.25, 0.5)) == "-0.25+0.5j");
  CHECK(format_complex(Cplx(0.0, -2.0)) == "0-2j");

  CHECK(parse_complex("0.5+0j") == Cplx(0.5, 0.0));
  CHECK(parse_complex("-1e-3-2.5e2j") == Cplx(-1e-3, -2.5e2));
  CHECK_THROWS_AS(parse_complex("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_complex("pearj"), std::invalid_argument);
}

TEST_CASE("matrix text round trip") {
  Rng rng(62);
  const Mat m = random_matrix(4, rng);
  const Mat back = matrix_from_text(matrix_to_text(m));
  CHECK(max_abs_diff(m, back) == 0.0);

  CHECK_THROWS_AS(matrix_from_text("not a matrix"), std::invalid_argument);
  CHECK_THROWS_AS(matrix_from_text("2 2\n1+0j"), std::invalid_argument);
}

TEST_CASE("atomic file write and read back") {
  const std::string path =
      (std::filesystem::temp_directory_path() / "symbath_io_test.txt").string();
  write_text_file_atomic(path, "payload\n");
  CHECK(read_text_file(path) == "payload\n");
  CHECK(!std::filesystem::exists(path + ".tmp"));
  std::remove(path.c_str());
}
