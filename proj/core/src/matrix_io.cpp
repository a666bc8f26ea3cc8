#include "phasekit/matrix_io.hpp"

#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <ostream>

namespace phasekit {

namespace {

constexpr char kMagic[8] = {'P', 'H', 'O', 'P', 'M', 'A', 'T', '1'};

static_assert(sizeof(double) == 8);

void put_u64(std::ostream& out, std::uint64_t v) {
  unsigned char b[8];
  for (int i = 0; i < 8; ++i) b[i] = (v >> (8 * i)) & 0xff;
  out.write(reinterpret_cast<const char*>(b), 8);
}

std::uint64_t get_u64(std::istream& in) {
  unsigned char b[8];
  in.read(reinterpret_cast<char*>(b), 8);
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= std::uint64_t(b[i]) << (8 * i);
  return v;
}

void put_f64(std::ostream& out, double x) {
  std::uint64_t bits;
  std::memcpy(&bits, &x, 8);
  put_u64(out, bits);
}

double get_f64(std::istream& in) {
  std::uint64_t bits = get_u64(in);
  double x;
  std::memcpy(&x, &bits, 8);
  return x;
}

}  // namespace

void write_matrix_csv(std::ostream& out, const Matrix& m) {
  out << "row,col,re,im\n";
  char buf[128];
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      std::snprintf(buf, sizeof(buf), "%d,%d,%.17g,%.17g\n", i, j, m(i, j).real(),
                    m(i, j).imag());
      out << buf;
    }
}

void write_matrix_binary(std::ostream& out, const Matrix& m) {
  out.write(kMagic, 8);
  put_u64(out, std::uint64_t(m.rows()));
  put_u64(out, std::uint64_t(m.cols()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      put_f64(out, m(i, j).real());
      put_f64(out, m(i, j).imag());
    }
}

Matrix read_matrix_binary(std::istream& in) {
  char magic[8];
  in.read(magic, 8);
  if (!in || std::memcmp(magic, kMagic, 8) != 0)
    throw ParseError("matrix binary: bad magic header");
  std::uint64_t rows = get_u64(in);
  std::uint64_t cols = get_u64(in);
  if (!in || rows > (1u << 20) || cols > (1u << 20))
    throw ParseError("matrix binary: implausible dimensions");
  Matrix m(static_cast<int>(rows), static_cast<int>(cols));
  for (std::uint64_t i = 0; i < rows; ++i)
    for (std::uint64_t j = 0; j < cols; ++j) {
      double re = get_f64(in);
      double im = get_f64(in);
      m(static_cast<int>(i), static_cast<int>(j)) = cx(re, im);
    }
  if (!in) throw ParseError("matrix binary: truncated payload");
  return m;
}

void save_matrix(const std::string& path, const Matrix& m, bool binary) {
  std::ofstream out(path, binary ? std::ios::binary : std::ios::out);
  if (!out) throw ParseError("cannot open output file: " + path);
  if (binary)
    write_matrix_binary(out, m);
  else
    write_matrix_csv(out, m);
}

Matrix load_matrix_binary(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open input file: " + path);
  return read_matrix_binary(in);
}

}  // namespace phasekit
