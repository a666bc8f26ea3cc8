#pragma once

#include <iosfwd>
#include <string>

#include "phasekit/matrix.hpp"

namespace phasekit {

// Text form: header "row,col,re,im", one line per entry, 17 significant
// digits (lossless for doubles).
void write_matrix_csv(std::ostream& out, const Matrix& m);

// Compact form "PHOPMAT1": 8-byte magic, two little-endian u64 dimensions,
// then row-major little-endian f64 (re, im) pairs.
void write_matrix_binary(std::ostream& out, const Matrix& m);
Matrix read_matrix_binary(std::istream& in);

void save_matrix(const std::string& path, const Matrix& m, bool binary);
Matrix load_matrix_binary(const std::string& path);

}  // namespace phasekit
