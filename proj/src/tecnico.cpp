#include "tlg/tecnico.hpp"

#include <algorithm>

#include "tlg/braided.hpp"
#include "tlg/lodha_moore.hpp"
#include "tlg/thompson.hpp"

namespace tlg {

std::vector<BigInt> primitive(const std::vector<BigInt>& v) {
  BigInt g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g == 0) throw DomainError("the zero character has no ray");
  std::vector<BigInt> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
  return out;
}

TecnicoResult tecnico_pipeline(const CharacterData& chars, const IntMatrix& m) {
  TecnicoResult out;
  const std::size_t n = m.rows();
  if (!m.is_square()) throw DomainError("the induced map must be square");
  if (chars.characters.empty()) throw DomainError("no characters given");
  std::vector<std::vector<BigInt>> reps;
  for (const auto& c : chars.characters) {
    if (c.size() != n) throw DomainError("character length does not match the matrix");
    reps.push_back(primitive(c));
  }
  IntMatrix mt = m.transpose();
  for (const auto& c : reps) {
    std::vector<BigInt> pulled = mt * c;
    bool zero = std::all_of(pulled.begin(), pulled.end(), [](const BigInt& x) { return x == 0; });
    if (zero) {
      out.failure = "a character pulls back to zero";
      return out;
    }
    auto p = primitive(pulled);
    auto it = std::find(reps.begin(), reps.end(), p);
    if (it == reps.end()) {
      out.failure = "the character set is not invariant up to positive scaling";
      return out;
    }
    out.permutation.push_back(static_cast<int>(it - reps.begin()));
  }
  out.f.assign(n, BigInt(0));
  for (const auto& c : reps) {
    for (std::size_t i = 0; i < n; ++i) out.f[i] += c[i];
  }
  if (mt * out.f != out.f) {
    out.failure = "f o M differs from f";
    return out;
  }
  IntMatrix kernel = integer_kernel(m - IntMatrix::identity(n));
  if (kernel.cols() == 0) {
    out.failure = "M has no eigenvalue 1";
    return out;
  }
  // Prefer a fixed vector on which f is nonzero.
  std::size_t pick = 0;
  for (std::size_t j = 0; j < kernel.cols(); ++j) {
    BigInt fv = 0;
    for (std::size_t i = 0; i < n; ++i) fv += out.f[i] * kernel.at(i, j);
    if (fv != 0) {
      pick = j;
      break;
    }
  }
  out.fixed_vector = primitive(kernel.col(pick));
  auto first = std::find_if(out.fixed_vector.begin(), out.fixed_vector.end(),
                            [](const BigInt& x) { return x != 0; });
  if (*first < 0) {
    for (auto& x : out.fixed_vector) x = -x;
  }
  out.ok = true;
  return out;
}

bool eigenvalue_one_check(const IntMatrix& m) {
  if (m.rows() != 2 || m.cols() != 2) throw DomainError("expected a 2x2 matrix");
  BigInt det = m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
  if (det != 1 && det != -1) throw DomainError("matrix is not unimodular");
  // The characteristic polynomial x^2 - tr x + det vanishes at 1.
  return 1 - (m.at(0, 0) + m.at(1, 1)) + det == 0;
}

IndependenceResult character_independence(const IntMatrix& values) {
  if (!values.is_square()) throw DomainError("value matrix must be square");
  IndependenceResult out;
  out.determinant = values.determinant();
  out.independent = out.determinant != 0;
  return out;
}


std::vector<CharacterTableRow> character_table() {
  std::vector<CharacterTableRow> rows;
  {
    auto x0 = phi_characters(BraidedDiagram::from_tree_pair(TreePair::x0()));
    auto x1 = phi_characters(BraidedDiagram::from_tree_pair(TreePair::x1()));
    rows.push_back({"Gamma0", {"phi0", "phi1"}, {"x0", "x1"},
                    IntMatrix::from_rows({{x0.phi0, x1.phi0}, {x0.phi1, x1.phi1}})});
  }
  for (LMVariant v : {LMVariant::G, LMVariant::yG, LMVariant::Gy, LMVariant::yGy}) {
    auto [c1, c2] = quotient_characters(v);
    // The basis element for each character is the generator it detects.
    auto basis_word = [v](LMCharacter c) {
      switch (c) {
        case LMCharacter::chi0:
          return std::pair{std::string("x0"), LMWord::x("0", v)};
        case LMCharacter::chi1:
          return std::pair{std::string("x1"), LMWord::x("1", v)};
        case LMCharacter::psi0:
          return std::pair{std::string("y0"), LMWord::y("0", v)};
        case LMCharacter::psi1:
          break;
      }
      return std::pair{std::string("y1"), LMWord::y("1", v)};
    };
    auto [b1, w1] = basis_word(c1.character);
    auto [b2, w2] = basis_word(c2.character);
    auto label = [](const QuotientCharacter& q) { return (q.sign < 0 ? "-" : "") + to_string(q.character); };
    IntMatrix values(2, 2);
    const QuotientCharacter cs[2] = {c1, c2};
    const LMWord* ws[2] = {&w1, &w2};
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) values.at(i, j) = cs[i].sign * lm_character(*ws[j], cs[i].character);
    }
    rows.push_back({"Gamma" + std::to_string(gamma_index(v)), {label(c1), label(c2)}, {b1, b2}, values});
  }
  return rows;
}

IntMatrix swap_action(const IntMatrix& c) {
  if (c.rows() != 2 || c.cols() != 2) throw DomainError("swap action needs a 2x2 character matrix");
  static const IntMatrix p = IntMatrix::parse("[[0,1],[1,0]]");
  return unimodular_inverse(c) * p * c;
}

}  // namespace tlg
