#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <sstream>

#include "phasekit/matrix_io.hpp"
#include "phasekit/phase_operators.hpp"

using namespace phasekit;

namespace {

Matrix sample_matrix() {
  TruncationConfig cfg(16, 2);
  Matrix m = build_cos2phi(cfg).mat;
  m(0, 0) = cx(-0.0, 1e-300);  // awkward values must survive a round trip
  m(1, 3) = cx(1.0 / 3.0, -7.0e88);
  return m;
}

}  // namespace

TEST_CASE("binary format round-trips to the bit") {
  Matrix m = sample_matrix();
  std::stringstream buf(std::ios::in | std::ios::out | std::ios::binary);
  write_matrix_binary(buf, m);
  Matrix back = read_matrix_binary(buf);
  CHECK(back.bit_equal(m));
}

TEST_CASE("binary format rejects junk") {
  std::stringstream bad(std::ios::in | std::ios::out | std::ios::binary);
  bad << "NOTMAGIC and some trailing bytes";
  CHECK_THROWS_AS(read_matrix_binary(bad), ParseError);

  // valid magic but truncated payload
  Matrix m = sample_matrix();
  std::stringstream buf(std::ios::in | std::ios::out | std::ios::binary);
  write_matrix_binary(buf, m);
  std::string bytes = buf.str();
  bytes.resize(bytes.size() / 2);
  std::stringstream cut(std::ios::in | std::ios::out | std::ios::binary);
  cut << bytes;
  CHECK_THROWS_AS(read_matrix_binary(cut), ParseError);
}

TEST_CASE("csv emission is stable and lossless in form") {
  Matrix m(2, 2);
  m(0, 0) = cx(0.1, -0.25);
  m(1, 0) = cx(3.0, 0.0);
  std::ostringstream a, b;
  write_matrix_csv(a, m);
  write_matrix_csv(b, m);
  CHECK(a.str() == b.str());
  CHECK(a.str().rfind("row,col,re,im\n", 0) == 0);
  CHECK(a.str().find("0,0,0.10000000000000001,-0.25\n") != std::string::npos);
}

TEST_CASE("file helpers") {
  namespace fs = std::filesystem;
  fs::path path = fs::temp_directory_path() / "phasekit_io_test.mat";
  Matrix m = sample_matrix();
  save_matrix(path.string(), m, true);
  Matrix back = load_matrix_binary(path.string());
  CHECK(back.bit_equal(m));
  fs::remove(path);
  CHECK_THROWS_AS(load_matrix_binary(path.string()), ParseError);
}
