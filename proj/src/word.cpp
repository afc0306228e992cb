#include "qnf/word.hpp"

#include <cctype>

#include "qnf/errors.hpp"
#include "qnf/residue.hpp"

namespace qnf {

char gate_letter(Gate g) noexcept {
  switch (g) {
    case Gate::H: return 'H';
    case Gate::S: return 'S';
    case Gate::T: return 'T';
    case Gate::X: return 'X';
    case Gate::Z: return 'Z';
    case Gate::W: return 'w';
  }
  return '?';
}

unsigned gate_order(Gate g, unsigned p) noexcept { return g == Gate::H ? 4U : p; }

void Word::append(Gate g, unsigned power) {
  const unsigned r = power % gate_order(g, p);
  if (r != 0) tokens.push_back({g, r});
}

void Word::append(const Word& other) {
  if (other.p != p) throw PrimeMismatch();
  tokens.insert(tokens.end(), other.tokens.begin(), other.tokens.end());
}

Word parse(std::string_view text, unsigned p) {
  require_supported_prime(p);
  Word w{p, {}};
  std::size_t i = 0;
  while (i < text.size()) {
    const char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    Gate g;
    switch (ch) {
      case 'H': g = Gate::H; break;
      case 'S': g = Gate::S; break;
      case 'T': g = Gate::T; break;
      case 'X': g = Gate::X; break;
      case 'Z': g = Gate::Z; break;
      case 'w':
      case 'W': g = Gate::W; break;
      default: throw SyntaxError(i, std::string("unknown gate '") + ch + "'");
    }
    const std::size_t start = i++;
    unsigned long long power = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      const std::size_t digits = i;
      power = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        power = (power * 10 + static_cast<unsigned>(text[i] - '0')) % (4ULL * p);
        ++i;
      }
      if (i == digits) throw SyntaxError(i, "expected a decimal exponent after '^'");
      bool literal_zero = true;
      for (std::size_t k = digits; k < i; ++k) literal_zero = literal_zero && text[k] == '0';
      if (literal_zero) throw SyntaxError(start, "zero exponents are not allowed");
    }
    w.append(g, static_cast<unsigned>(power % gate_order(g, p)));
  }
  return w;
}

std::string print(const Word& w) {
  std::string out;
  for (const auto& t : w.tokens) {
    if (!out.empty()) out += ' ';
    out += gate_letter(t.gate);
    if (t.power != 1) out += "^" + std::to_string(t.power);
  }
  return out;
}

std::size_t t_count(const Word& w) {
  std::size_t count = 0;
  std::size_t i = 0;
  while (i < w.tokens.size()) {
    if (w.tokens[i].gate != Gate::T) {
      ++i;
      continue;
    }
    unsigned run = 0;
    while (i < w.tokens.size() && w.tokens[i].gate == Gate::T) {
      run = (run + w.tokens[i].power) % w.p;
      ++i;
    }
    if (run != 0) ++count;
  }
  return count;
}

}  // namespace qnf
