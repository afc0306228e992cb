#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace qnf {

enum class Gate { H, S, T, X, Z, W };

char gate_letter(Gate g) noexcept;
// H has order 4; every other generator has order p.
unsigned gate_order(Gate g, unsigned p) noexcept;

struct Token {
  Gate gate;
  unsigned power;  // in [1, gate_order)

  friend bool operator==(const Token&, const Token&) = default;
};

// A gate word over {H, S, T, X, Z, w}; tokens multiply left to right.
struct Word {
  unsigned p;
  std::vector<Token> tokens;

  // Appends g^power, reducing mod the gate order and dropping identities.
  void append(Gate g, unsigned power);
  void append(const Word& other);

  friend bool operator==(const Word&, const Word&) = default;
};

// Grammar: tokens are a gate letter (H S T X Z, w or W for the scalar w)
// optionally followed by ^k with k >= 1 decimal; tokens may be separated by
// whitespace. Powers are reduced mod the gate order and identity powers are
// dropped. Throws SyntaxError (with byte offset) or UnsupportedPrime.
Word parse(std::string_view text, unsigned p);
// Space-separated tokens, "T^2", "H", "w^3"; the empty word prints as "".
std::string print(const Word& w);

// Number of maximal T runs whose total power is nonzero mod p.
std::size_t t_count(const Word& w);

}  // namespace qnf
