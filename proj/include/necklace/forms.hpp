#pragma once

/**
 * Polynomial exterior algebra on a simplex with one fiber coordinate.
 *
 * A form over Delta^n is written in the reduced coordinates l_0..l_{n-1};
 * the last barycentric coordinate is eliminated through
 * l_n = 1 - (l_0 + ... + l_{n-1}). The fiber circle is additive in x, so
 * the only fiber differential is dx and coefficients never depend on x.
 *
 * Differentials are a bitmask: bit 0 is dx, bit a+1 is dl_a. The canonical
 * wedge order is dx, dl_0, dl_1, ...
 */

#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "necklace/error.hpp"
#include "necklace/exact_linalg.hpp"
#include "necklace/rational.hpp"
#include "necklace/words.hpp"

namespace necklace {

using Monomial = std::vector<int>;  // exponent per variable

class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(int nvars) : nvars_(nvars) {}

  static Polynomial constant(int nvars, const Rational& c) {
    Polynomial p(nvars);
    if (c != 0) p.terms_[Monomial(nvars, 0)] = c;
    return p;
  }

  static Polynomial variable(int nvars, int a) {
    Polynomial p(nvars);
    Monomial m(nvars, 0);
    m[a] = 1;
    p.terms_[m] = 1;
    return p;
  }

  /// Barycentric coordinate a of Delta^nvars; a == nvars is the eliminated one.
  static Polynomial coordinate(int nvars, int a) {
    if (a < nvars) return variable(nvars, a);
    Polynomial p = constant(nvars, 1);
    for (int b = 0; b < nvars; ++b) p -= variable(nvars, b);
    return p;
  }

  int nvars() const noexcept { return nvars_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  const std::map<Monomial, Rational>& terms() const noexcept { return terms_; }

  Polynomial& operator+=(const Polynomial& o) {
    check(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    check(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Polynomial& operator*=(const Rational& c) {
    if (c == 0) {
      terms_.clear();
    } else {
      for (auto& [m, v] : terms_) v *= c;
    }
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check(b);
    Polynomial r(a.nvars_);
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        Monomial m(ma);
        for (int i = 0; i < a.nvars_; ++i) m[i] += mb[i];
        r.add_term(m, ca * cb);
      }
    }
    return r;
  }

  Polynomial derivative(int a) const {
    Polynomial r(nvars_);
    for (const auto& [m, c] : terms_) {
      if (m[a] == 0) continue;
      Monomial d(m);
      --d[a];
      r.add_term(d, c * m[a]);
    }
    return r;
  }

  /// p(images[0], ..., images[nvars-1]) with every image living in
  /// target_nvars variables.
  Polynomial substitute(const std::vector<Polynomial>& images, int target_nvars) const {
    if (static_cast<int>(images.size()) != nvars_) {
      throw error(errc::dimension_mismatch, "substitution arity mismatch");
    }
    Polynomial r(target_nvars);
    std::vector<std::vector<Polynomial>> powers(nvars_);
    auto power = [&](int a, int e) -> const Polynomial& {
      auto& cache = powers[a];
      if (cache.empty()) cache.push_back(constant(target_nvars, 1));
      while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[a]);
      return cache[e];
    };
    for (const auto& [m, c] : terms_) {
      Polynomial t = constant(target_nvars, c);
      for (int a = 0; a < nvars_; ++a)
        if (m[a]) t = t * power(a, m[a]);
      r += t;
    }
    return r;
  }

  std::string str(const char* var = "l") const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      std::string mono;
      for (int a = 0; a < nvars_; ++a) {
        if (!m[a]) continue;
        if (!mono.empty()) mono += "*";
        mono += var + std::to_string(a);
        if (m[a] > 1) mono += "^" + std::to_string(m[a]);
      }
      Rational coef = c;
      if (!first) s += coef < 0 ? " - " : " + ";
      if (!first && coef < 0) coef = -coef;
      if (mono.empty()) {
        s += to_string(coef);
      } else if (coef == 1) {
        s += mono;
      } else if (coef == -1) {
        s += "-" + mono;
      } else {
        s += to_string(coef) + "*" + mono;
      }
      first = false;
    }
    return s;
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void check(const Polynomial& o) const {
    if (o.nvars_ != nvars_) throw error(errc::dimension_mismatch, "polynomials over different variable sets");
  }

  void add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  int nvars_ = 0;
  std::map<Monomial, Rational> terms_;
};

using DiffMask = std::uint32_t;

inline constexpr DiffMask kDx = 1u;
inline constexpr DiffMask dl_bit(int a) { return DiffMask{1} << (a + 1); }

/// Sign of wedging the canonical monomials a and b into canonical order.
inline int wedge_sign(DiffMask a, DiffMask b) {
  int swaps = 0;
  for (DiffMask rest = b; rest; rest &= rest - 1) {
    const DiffMask low = rest & (~rest + 1);
    swaps += std::popcount(a & ~(low | (low - 1)));  // elements of a above low
  }
  return swaps % 2 ? -1 : 1;
}

class ExteriorForm {
 public:
  ExteriorForm() = default;
  ExteriorForm(int nvars, int degree) : nvars_(nvars), degree_(degree) {
    if (nvars > 30) throw error(errc::dimension_mismatch, "too many coordinates");
  }

  static ExteriorForm function(const Polynomial& p) {
    ExteriorForm f(p.nvars(), 0);
    f.add(0, p);
    return f;
  }
  static ExteriorForm constant(int nvars, const Rational& c) { return function(Polynomial::constant(nvars, c)); }

  static ExteriorForm dx(int nvars) {
    ExteriorForm f(nvars, 1);
    f.add(kDx, Polynomial::constant(nvars, 1));
    return f;
  }

  /// dl_a on Delta^nvars; a == nvars gives -(dl_0 + ... + dl_{nvars-1}).
  static ExteriorForm dl(int nvars, int a) {
    ExteriorForm f(nvars, 1);
    if (a < nvars) {
      f.add(dl_bit(a), Polynomial::constant(nvars, 1));
    } else {
      for (int b = 0; b < nvars; ++b) f.add(dl_bit(b), Polynomial::constant(nvars, -1));
    }
    return f;
  }

  int nvars() const noexcept { return nvars_; }
  int degree() const noexcept { return degree_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  const std::map<DiffMask, Polynomial>& terms() const noexcept { return terms_; }

  /// Coefficient of a canonical differential monomial (zero if absent).
  Polynomial coefficient(DiffMask m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Polynomial(nvars_) : it->second;
  }

  void add(DiffMask m, const Polynomial& p) {
    if (std::popcount(m) != degree_) throw error(errc::dimension_mismatch, "term degree mismatch");
    if (p.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, p);
    if (!inserted) {
      it->second += p;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  ExteriorForm& operator+=(const ExteriorForm& o) {
    check_sum(o);
    for (const auto& [m, p] : o.terms_) add(m, p);
    return *this;
  }
  ExteriorForm& operator-=(const ExteriorForm& o) {
    check_sum(o);
    for (const auto& [m, p] : o.terms_) add(m, -p);
    return *this;
  }
  ExteriorForm& operator*=(const Rational& c) {
    if (c == 0) terms_.clear();
    for (auto& [m, p] : terms_) p *= c;
    return *this;
  }

  friend ExteriorForm operator+(ExteriorForm a, const ExteriorForm& b) { return a += b; }
  friend ExteriorForm operator-(ExteriorForm a, const ExteriorForm& b) { return a -= b; }
  friend ExteriorForm operator-(ExteriorForm a) { return a *= Rational(-1); }
  friend ExteriorForm operator*(const Rational& c, ExteriorForm a) { return a *= c; }

  /// Multiplication by a function.
  friend ExteriorForm operator*(const Polynomial& p, const ExteriorForm& f) {
    ExteriorForm r(f.nvars_, f.degree_);
    for (const auto& [m, q] : f.terms_) r.add(m, p * q);
    return r;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [m, p] : terms_) {
      if (!s.empty()) s += " + ";
      std::string diff;
      if (m & kDx) diff = "dx";
      for (int a = 0; a < nvars_; ++a) {
        if (m & dl_bit(a)) diff += (diff.empty() ? "" : "^") + std::string("dl") + std::to_string(a);
      }
      s += "(" + p.str() + ")" + (diff.empty() ? "" : " " + diff);
    }
    return s;
  }

  friend bool operator==(const ExteriorForm&, const ExteriorForm&) = default;

 private:
  void check_sum(const ExteriorForm& o) const {
    if (o.nvars_ != nvars_ || o.degree_ != degree_) {
      throw error(errc::dimension_mismatch, "adding forms of different spaces or degrees");
    }
  }

  int nvars_ = 0;
  int degree_ = 0;
  std::map<DiffMask, Polynomial> terms_;
};

inline ExteriorForm wedge(const ExteriorForm& a, const ExteriorForm& b) {
  if (a.nvars() != b.nvars()) throw error(errc::dimension_mismatch, "wedge of forms on different simplices");
  ExteriorForm r(a.nvars(), a.degree() + b.degree());
  for (const auto& [ma, pa] : a.terms()) {
    for (const auto& [mb, pb] : b.terms()) {
      if (ma & mb) continue;
      Polynomial p = pa * pb;
      if (wedge_sign(ma, mb) < 0) p = -p;
      r.add(ma | mb, p);
    }
  }
  return r;
}

/// h-fold wedge power, h >= 1.
inline ExteriorForm wedge_power(const ExteriorForm& f, int h) {
  if (h < 1) throw error(errc::malformed_input, "wedge power needs h >= 1");
  ExteriorForm r = f;
  for (int i = 1; i < h; ++i) r = wedge(r, f);
  return r;
}

inline ExteriorForm exterior_derivative(const ExteriorForm& f) {
  ExteriorForm r(f.nvars(), f.degree() + 1);
  for (const auto& [m, p] : f.terms()) {
    for (int a = 0; a < f.nvars(); ++a) {
      if (m & dl_bit(a)) continue;
      Polynomial dp = p.derivative(a);
      if (dp.is_zero()) continue;
      if (wedge_sign(dl_bit(a), m) < 0) dp = -dp;
      r.add(m | dl_bit(a), dp);
    }
  }
  return r;
}

/// alpha_n = -dx - sum_{i<j<=n} l_i dl_j.
inline ExteriorForm connection_form(int n) {
  if (n < 0) throw error(errc::malformed_input, "simplex dimension must be >= 0");
  ExteriorForm a = -ExteriorForm::dx(n);
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) a -= Polynomial::coordinate(n, i) * ExteriorForm::dl(n, j);
  return a;
}

/// omega_n = -sum_{i<j<=n} dl_i ^ dl_j.
inline ExteriorForm curvature(int n) {
  if (n < 0) throw error(errc::malformed_input, "simplex dimension must be >= 0");
  ExteriorForm w(n, 2);
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) w -= wedge(ExteriorForm::dl(n, i), ExteriorForm::dl(n, j));
  return w;
}

/// Column-stochastic non-negative matrix read as Delta^k -> Delta^n in
/// barycentric coordinates.
class AffineSimplexMap {
 public:
  explicit AffineSimplexMap(ExactMatrix m) : m_(std::move(m)) {
    if (m_.rows() < 1 || m_.cols() < 1) throw error(errc::dimension_mismatch, "empty simplex map");
    for (int c = 0; c < m_.cols(); ++c) {
      Rational sum = 0;
      for (int r = 0; r < m_.rows(); ++r) {
        if (m_(r, c) < 0) throw error(errc::malformed_input, "simplex map has a negative entry");
        sum += m_(r, c);
      }
      if (sum != 1) throw error(errc::malformed_input, "column " + std::to_string(c) + " does not sum to 1");
    }
  }

  const ExactMatrix& matrix() const noexcept { return m_; }
  int source_dim() const noexcept { return m_.cols() - 1; }
  int target_dim() const noexcept { return m_.rows() - 1; }

 private:
  ExactMatrix m_;
};

/// Pullback along a polynomial map of reduced coordinates: source variable a
/// becomes images[a], and x becomes x + fiber_shift.
struct Substitution {
  int target_nvars = 0;
  std::vector<Polynomial> images;
  Polynomial fiber_shift;
};

inline ExteriorForm differential(const Polynomial& p) {
  ExteriorForm r(p.nvars(), 1);
  for (int a = 0; a < p.nvars(); ++a) r.add(dl_bit(a), p.derivative(a));
  return r;
}

inline ExteriorForm pullback(const ExteriorForm& f, const Substitution& s) {
  if (static_cast<int>(s.images.size()) != f.nvars()) {
    throw error(errc::dimension_mismatch, "substitution does not match the form's simplex");
  }
  const int t = s.target_nvars;
  std::vector<ExteriorForm> d_images;
  for (const auto& im : s.images) d_images.push_back(differential(im));
  ExteriorForm d_fiber = ExteriorForm::dx(t);
  if (!s.fiber_shift.is_zero()) d_fiber += differential(s.fiber_shift);

  ExteriorForm r(t, f.degree());
  for (const auto& [m, p] : f.terms()) {
    ExteriorForm term = ExteriorForm::function(p.substitute(s.images, t));
    if (m & kDx) term = wedge(term, d_fiber);
    for (int a = 0; a < f.nvars(); ++a)
      if (m & dl_bit(a)) term = wedge(term, d_images[a]);
    r += term;
  }
  return r;
}

/// Substitutes l_i = sum_j a_ij t_j (t_k eliminated) into a form on Delta^n.
inline ExteriorForm pullback_affine(const ExteriorForm& f, const AffineSimplexMap& a) {
  const ExactMatrix& m = a.matrix();
  if (a.target_dim() != f.nvars()) {
    throw error(errc::dimension_mismatch, "map lands in Delta^" + std::to_string(a.target_dim()) +
                                              ", form lives on Delta^" + std::to_string(f.nvars()));
  }
  if (a.source_dim() > a.target_dim()) throw error(errc::dimension_mismatch, "map source exceeds target dimension");
  const int k = a.source_dim();
  Substitution s{k, {}, Polynomial(k)};
  for (int i = 0; i < f.nvars(); ++i) {
    Polynomial li = Polynomial::constant(k, m(i, k));
    for (int j = 0; j < k; ++j) li += Polynomial::constant(k, m(i, j) - m(i, k)) * Polynomial::variable(k, j);
    s.images.push_back(std::move(li));
  }
  return pullback(f, s);
}

/// S_i^n = l_0 + ... + l_{i-1}.
inline Polynomial section_function(int n, int i) {
  Polynomial s(n);
  for (int a = 0; a < i; ++a) s += Polynomial::coordinate(n, a);
  return s;
}

/// Pullback along the gauge map of the cyclic shift tau_n^i: the fiber
/// turns by -S_i^n(l), moving section i to zero, and interval i becomes
/// interval 0, so x -> x - S_i^n(l) and l'_a = l_{a + i mod (n+1)}.
inline ExteriorForm pullback_cyclic_gauge(const ExteriorForm& f, int n, int i) {
  if (f.nvars() != n) throw error(errc::dimension_mismatch, "form does not live over Delta^" + std::to_string(n));
  i = mod(i, n + 1);
  Substitution s{n, {}, -section_function(n, i)};
  for (int a = 0; a < n; ++a) s.images.push_back(Polynomial::coordinate(n, mod(a + i, n + 1)));
  return pullback(f, s);
}

/// Pullback along the face inclusion |d| : Delta^m -> Delta^n; coordinates
/// outside the image of d vanish.
inline ExteriorForm pullback_face(const ExteriorForm& f, int n, const FaceOperator& face) {
  if (f.nvars() != n || face.codomain_size() != n + 1) {
    throw error(errc::dimension_mismatch, "face does not land in Delta^" + std::to_string(n));
  }
  const int m = face.domain_size() - 1;
  if (m < 0) throw error(errc::dimension_mismatch, "empty face");
  Substitution s{m, {}, Polynomial(m)};
  for (int a = 0; a < n; ++a) {
    const int j = face.preimage(a);
    s.images.push_back(j < 0 ? Polynomial(m) : Polynomial::coordinate(m, j));
  }
  return pullback(f, s);
}

}  // namespace necklace
