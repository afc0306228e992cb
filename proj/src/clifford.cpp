#include "qnf/clifford.hpp"

#include <array>
#include <mutex>
#include <sstream>

#include "qnf/errors.hpp"
#include "qnf/rng.hpp"

namespace qnf {

namespace {

Residue half(unsigned p) { return inv_mod(Residue(2, p)); }

// N = w^e X^x Z^z exactly, i.e. entry (k + x, k) = w^{e + z k}.
struct DForm {
  Residue e, x, z;
};

UMatrix d_form_matrix(const DForm& f) {
  const unsigned p = f.e.modulus();
  std::vector<unsigned> exps(p);
  for (unsigned k = 0; k < p; ++k) exps[k] = (f.e + f.z * Residue(k, p)).value();
  return mul_X_left(f.x.value(), mul_diag_left(exps, UMatrix::identity(p)));
}

std::optional<DForm> read_d_form(const UMatrix& n) {
  const unsigned p = n.prime();
  if (n.chi_exp() != 0) return std::nullopt;
  unsigned row = 0;
  while (row < p && n.numerator(row, 0).is_zero()) ++row;
  if (row == p) return std::nullopt;
  const auto e = as_omega_power(n.numerator(row, 0));
  const auto e1 = as_omega_power(n.numerator((row + 1) % p, 1));
  if (!e || !e1) return std::nullopt;
  DForm f{Residue(*e, p), Residue(row, p), Residue(static_cast<std::int64_t>(*e1) - *e, p)};
  if (d_form_matrix(f) != n) return std::nullopt;
  return f;
}

struct Tables {
  std::once_flag once;
  std::vector<SL2> sl2;
  std::vector<CliffordElem> hd;
  std::vector<CliffordElem> hd_inv;
};

Tables& tables(unsigned p) {
  require_supported_prime(p);
  static std::array<Tables, kMaxPrime + 1> all;
  Tables& t = all[p];
  std::call_once(t.once, [&t, p] {
    for (unsigned a = 0; a < p; ++a)
      for (unsigned b = 0; b < p; ++b)
        for (unsigned c = 0; c < p; ++c)
          for (unsigned d = 0; d < p; ++d)
            if ((a * d + p * p - b * c) % p == 1)
              t.sl2.push_back({Residue(a, p), Residue(b, p), Residue(c, p), Residue(d, p)});
    CliffordElem sd = clifford_identity(p);
    const CliffordElem s = clifford_S(p);
    const CliffordElem h = clifford_H(p);
    for (unsigned d = 0; d < p; ++d) {
      const CliffordElem hd = clifford_mul(sd, h);
      t.hd.push_back(hd);
      t.hd_inv.push_back(clifford_inv(hd));
      sd = clifford_mul(sd, s);
    }
  });
  return t;
}

}  // namespace

SL2 SL2::identity(unsigned p) { return {Residue(1, p), Residue(0, p), Residue(0, p), Residue(1, p)}; }
SL2 SL2::hadamard(unsigned p) { return {Residue(0, p), Residue(-1, p), Residue(1, p), Residue(0, p)}; }
SL2 SL2::phase(unsigned p) { return {Residue(1, p), Residue(0, p), Residue(1, p), Residue(1, p)}; }

SL2 SL2::scaling(Residue alpha) {
  const unsigned p = alpha.modulus();
  return {alpha, Residue(0, p), Residue(0, p), inv_mod(alpha)};
}

SL2 SL2::make(Residue a, Residue b, Residue c, Residue d) {
  if (a * d - b * c != Residue(1, a.modulus())) throw DomainError("frame determinant is not 1");
  return {a, b, c, d};
}

SL2 SL2::operator*(const SL2& o) const {
  return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

std::uint32_t SL2::key() const noexcept {
  const std::uint32_t p = prime();
  return ((a.value() * p + b.value()) * p + c.value()) * p + d.value();
}

std::string to_string(const SL2& f) {
  std::ostringstream os;
  os << "[[" << f.a.value() << "," << f.b.value() << "],[" << f.c.value() << "," << f.d.value() << "]]";
  return os.str();
}

const std::vector<SL2>& enumerate_sl2(unsigned p) { return tables(p).sl2; }

std::string to_string(const CliffordElem& c) {
  std::ostringstream os;
  os << "w^" << c.phase.value() << " D(" << c.x.value() << "," << c.z.value() << ") V" << to_string(c.frame);
  return os.str();
}

CliffordElem clifford_identity(unsigned p) { return {Residue(0, p), Residue(0, p), Residue(0, p), SL2::identity(p)}; }
CliffordElem clifford_H(unsigned p) { return clifford_V(SL2::hadamard(p)); }
CliffordElem clifford_S(unsigned p) { return {Residue(0, p), Residue(0, p), half(p), SL2::phase(p)}; }
CliffordElem clifford_X(unsigned p) { return {Residue(0, p), Residue(1, p), Residue(0, p), SL2::identity(p)}; }
CliffordElem clifford_Z(unsigned p) { return {Residue(0, p), Residue(0, p), Residue(1, p), SL2::identity(p)}; }
CliffordElem clifford_omega(unsigned p) { return {Residue(1, p), Residue(0, p), Residue(0, p), SL2::identity(p)}; }

CliffordElem clifford_V(const SL2& f) {
  const unsigned p = f.prime();
  return {Residue(0, p), Residue(0, p), Residue(0, p), f};
}

CliffordElem clifford_Hd(unsigned d, unsigned p) { return tables(p).hd.at(d % p); }

UMatrix v_map(const SL2& f) {
  const unsigned p = f.prime();
  const Residue h = half(p);
  std::vector<CycloInt> num;
  num.reserve(static_cast<std::size_t>(p) * p);
  if (!f.b.is_zero()) {
    // gauss_sum(-2b) / p = (b/p) * gauss_sum(-2) / p
    CycloInt scalar = hinv_scalar_numerator(p);
    if (legendre(f.b) < 0) scalar = -scalar;
    const Residue s = h * inv_mod(f.b);
    for (unsigned j = 0; j < p; ++j) {
      const Residue jj(j, p);
      for (unsigned k = 0; k < p; ++k) {
        const Residue kk(k, p);
        const Residue e = s * (f.a * kk * kk - Residue(2, p) * jj * kk + f.d * jj * jj);
        num.push_back(scalar.mul_omega_power(e.value()));
      }
    }
    return UMatrix::from_scaled(p, std::move(num), h_scalar_chi_exp(p));
  }
  num.assign(static_cast<std::size_t>(p) * p, CycloInt(p));
  const bool negate = legendre(f.a) < 0;
  for (unsigned k = 0; k < p; ++k) {
    const Residue kk(k, p);
    CycloInt v = CycloInt::omega_power(p, (h * f.a * f.c * kk * kk).value());
    num[(f.a * kk).value() * p + k] = negate ? -v : v;
  }
  return UMatrix::from_scaled(p, std::move(num), 0);
}

UMatrix d_map(Residue x, Residue z) { return d_form_matrix({half(x.modulus()) * x * z, x, z}); }

UMatrix clifford_to_matrix(const CliffordElem& c) {
  const unsigned p = c.prime();
  std::vector<unsigned> exps(p);
  const Residue base = c.phase + half(p) * c.x * c.z;
  for (unsigned k = 0; k < p; ++k) exps[k] = (base + c.z * Residue(k, p)).value();
  return mul_X_left(c.x.value(), mul_diag_left(exps, v_map(c.frame)));
}

std::optional<CliffordElem> try_matrix_to_clifford(const UMatrix& m) {
  const unsigned p = m.prime();
  // Clifford matrices have lde 0 (frames with b = 0) or that of H.
  if (m.chi_exp() != 0 && m.chi_exp() != h_scalar_chi_exp(p)) return std::nullopt;
  const UMatrix md = dagger(m);
  std::vector<unsigned> k_exps(p);
  for (unsigned k = 0; k < p; ++k) k_exps[k] = k;
  const auto fx = read_d_form(mul_X_right(m, 1) * md);
  if (!fx) return std::nullopt;
  const auto fz = read_d_form(mul_diag_right(m, k_exps) * md);
  if (!fz) return std::nullopt;
  const Residue one(1, p);
  if (fx->x * fz->z - fz->x * fx->z != one) return std::nullopt;
  const SL2 frame{fx->x, fz->x, fx->z, fz->z};
  const auto disp = read_d_form(m * v_map(frame.inverse()));
  if (!disp) return std::nullopt;
  CliffordElem c{disp->e - half(p) * disp->x * disp->z, disp->x, disp->z, frame};
  if (clifford_to_matrix(c) != m) return std::nullopt;
  return c;
}

CliffordElem matrix_to_clifford(const UMatrix& m) {
  auto c = try_matrix_to_clifford(m);
  if (!c) throw NotClifford();
  return *c;
}

CliffordElem clifford_mul(const CliffordElem& c1, const CliffordElem& c2) {
  if (c1.prime() != c2.prime()) throw PrimeMismatch();
  // V(F) D(v) V(F)^dagger = D(F v), and D(u) D(v) = w^{(z_u x_v - x_u z_v)/2} D(u + v)
  const auto [x2, z2] = c1.frame.apply(c2.x, c2.z);
  const Residue cocycle = half(c1.prime()) * (c1.z * x2 - c1.x * z2);
  return {c1.phase + c2.phase + cocycle, c1.x + x2, c1.z + z2, c1.frame * c2.frame};
}

CliffordElem clifford_inv(const CliffordElem& c) {
  const SL2 fi = c.frame.inverse();
  const auto [x, z] = fi.apply(c.x, c.z);
  return {-c.phase, -x, -z, fi};
}

CliffordElem clifford_mul_reference(const CliffordElem& c1, const CliffordElem& c2) {
  return matrix_to_clifford(clifford_to_matrix(c1) * clifford_to_matrix(c2));
}

CliffordElem clifford_inv_reference(const CliffordElem& c) { return matrix_to_clifford(dagger(clifford_to_matrix(c))); }

CosetSplit coset_decompose(const CliffordElem& c) {
  if (in_P(c)) return {std::nullopt, c};
  // S^d H = [[0, -1], [1, -d]]; (S^d H)^{-1} F is lower triangular iff d = F.d / F.b
  const unsigned d = (c.frame.d * inv_mod(c.frame.b)).value();
  return {d, clifford_mul(tables(c.prime()).hd_inv[d], c)};
}

CliffordElem random_clifford(unsigned p, std::mt19937_64& rng) {
  const auto& all = enumerate_sl2(p);
  const Residue a(uniform_below(rng, p), p);
  const Residue x(uniform_below(rng, p), p);
  const Residue z(uniform_below(rng, p), p);
  return {a, x, z, all[uniform_below(rng, all.size())]};
}

CliffordElem random_P(unsigned p, std::mt19937_64& rng) {
  const Residue a(uniform_below(rng, p), p);
  const Residue x(uniform_below(rng, p), p);
  const Residue z(uniform_below(rng, p), p);
  const Residue alpha(1 + uniform_below(rng, p - 1), p);
  const Residue gamma(uniform_below(rng, p), p);
  return {a, x, z, {alpha, Residue(0, p), gamma, inv_mod(alpha)}};
}

}  // namespace qnf
