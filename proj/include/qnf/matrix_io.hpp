#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qnf/gates.hpp"

namespace qnf {

// Contents of a matrix file before ring membership is checked.
//
//   {"version": 1, "p": 5,
//    "entries": [[{"num": ["1", "0", "0", "0"], "chi": 0}, ...], ...]}
//
// entries is a p x p array of rows; each num holds the p-1 coefficients of
// 1, w, ..., w^{p-2} as decimal strings, and the entry is num / chi^chi.
// Coefficients may also be written as fractions "a/b".
struct MatrixFile {
  unsigned p = 0;
  std::vector<RationalEntry> entries;  // row-major
  // Non-fatal findings, e.g. entries that were not in canonical form.
  std::vector<std::string> warnings;
};

// Throws FormatError on anything malformed, UnsupportedPrime for a bad p.
MatrixFile read_matrix_file(std::string_view text);
// Throws EntriesOutsideRing.
UMatrix to_umatrix(const MatrixFile& f);
// Every entry written in canonical form.
std::string write_matrix_file(const UMatrix& m);

}  // namespace qnf
