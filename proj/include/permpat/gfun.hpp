#pragma once

/// @file
/// Truncated generating functions and exact guessing of rational and
/// algebraic equations from a series prefix. All arithmetic is over exact
/// integers and rationals.

#include "permpat/classes.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace permpat {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class FitError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Coefficients c_0..c_N of a truncated power series.
struct SeriesPrefix {
  std::vector<Integer> coefficients;

  std::size_t degree() const { return coefficients.empty() ? 0 : coefficients.size() - 1; }
  std::size_t size() const { return coefficients.size(); }
  friend bool operator==(const SeriesPrefix&, const SeriesPrefix&) = default;
};

inline SeriesPrefix series_from_counts(const std::vector<std::uint64_t>& counts) {
  SeriesPrefix s;
  for (auto c : counts)
    s.coefficients.emplace_back(c);
  return s;
}

inline SeriesPrefix series_from_enumeration(const ClassEnumeration& e) {
  return series_from_counts(e.counts);
}

inline SeriesPrefix truncate(const SeriesPrefix& s, std::size_t degree) {
  SeriesPrefix out;
  const auto n = std::min(s.size(), degree + 1);
  out.coefficients.assign(s.coefficients.begin(), s.coefficients.begin() + static_cast<std::ptrdiff_t>(n));
  return out;
}

namespace series {

/// Product truncated to degree `degree`.
inline std::vector<Integer> multiply(const std::vector<Integer>& a, const std::vector<Integer>& b,
                                     std::size_t degree) {
  std::vector<Integer> out(degree + 1, 0);
  for (std::size_t i = 0; i < a.size() && i <= degree; ++i) {
    if (a[i] == 0)
      continue;
    for (std::size_t j = 0; j < b.size() && i + j <= degree; ++j)
      out[i + j] += a[i] * b[j];
  }
  return out;
}

/// Power series expansion of num/den through `degree`; den[0] must be nonzero.
inline std::vector<Rational> divide(const std::vector<Integer>& num, const std::vector<Integer>& den,
                                    std::size_t degree) {
  if (den.empty() || den[0] == 0)
    throw FitError("series division needs a nonzero constant term");
  std::vector<Rational> out(degree + 1);
  for (std::size_t n = 0; n <= degree; ++n) {
    Rational acc = n < num.size() ? Rational(num[n]) : Rational(0);
    for (std::size_t j = 1; j <= n && j < den.size(); ++j)
      acc -= Rational(den[j]) * out[n - j];
    out[n] = acc / Rational(den[0]);
  }
  return out;
}

} // namespace series

namespace linalg {

using Matrix = std::vector<std::vector<Rational>>;

/// In-place reduced row echelon form; returns the pivot column of each pivot
/// row.
inline std::vector<std::size_t> rref(Matrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0)
      ++sel;
    if (sel == m.size())
      continue;
    std::swap(m[sel], m[row]);
    const Rational inv = Rational(1) / m[row][col];
    for (auto& x : m[row])
      x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0)
        continue;
      const Rational f = m[r][col];
      for (std::size_t c = col; c < m[r].size(); ++c)
        m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

/// One solution of A x = b with free variables set to zero, if consistent.
/// `augmented` carries b as its last column.
inline std::optional<std::vector<Rational>> solve(Matrix augmented, std::size_t unknowns) {
  const auto pivots = rref(augmented, unknowns);
  for (std::size_t r = pivots.size(); r < augmented.size(); ++r)
    if (augmented[r][unknowns] != 0)
      return std::nullopt;
  std::vector<Rational> x(unknowns, 0);
  for (std::size_t r = 0; r < pivots.size(); ++r)
    x[pivots[r]] = augmented[r][unknowns];
  return x;
}

/// A nonzero kernel vector of A (the one with the first free column set to
/// 1 and the other free columns 0), if the kernel is nontrivial.
inline std::optional<std::vector<Rational>> kernel_vector(Matrix a, std::size_t cols) {
  const auto pivots = rref(a, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots)
    is_pivot[p] = true;
  std::size_t free = cols;
  for (std::size_t c = 0; c < cols; ++c)
    if (!is_pivot[c]) {
      free = c;
      break;
    }
  if (free == cols)
    return std::nullopt;
  std::vector<Rational> x(cols, 0);
  x[free] = 1;
  for (std::size_t r = 0; r < pivots.size(); ++r)
    x[pivots[r]] = -a[r][free];
  return x;
}

/// Scales rationals to coprime integers.
inline std::vector<Integer> clear_denominators(const std::vector<Rational>& v) {
  Integer l = 1;
  for (const auto& x : v)
    l = boost::multiprecision::lcm(l, Integer(boost::multiprecision::denominator(x)));
  std::vector<Integer> out;
  out.reserve(v.size());
  Integer g = 0;
  for (const auto& x : v) {
    Integer y = boost::multiprecision::numerator(x) * (l / boost::multiprecision::denominator(x));
    g = boost::multiprecision::gcd(g, abs(y));
    out.push_back(std::move(y));
  }
  if (g > 1)
    for (auto& y : out)
      y /= g;
  return out;
}

} // namespace linalg

inline void trim_trailing_zeros(std::vector<Integer>& p) {
  while (p.size() > 1 && p.back() == 0)
    p.pop_back();
}

/// numerator / denominator with integer coefficients (index = power of z),
/// content 1 and a positive constant term in the denominator.
struct RationalFit {
  std::vector<Integer> numerator;
  std::vector<Integer> denominator;

  std::size_t numerator_degree() const { return numerator.size() - 1; }
  std::size_t denominator_degree() const { return denominator.size() - 1; }
  friend bool operator==(const RationalFit&, const RationalFit&) = default;
};

/// P(z, y) = sum of coefficient(i, j) z^i y^j, content 1, with the leading
/// z-coefficient of the highest y-power positive.
struct AlgebraicFit {
  std::map<std::pair<std::size_t, std::size_t>, Integer> coefficients; // (i, j) -> c, nonzero only

  std::size_t degree_y() const {
    std::size_t d = 0;
    for (const auto& [ij, c] : coefficients)
      d = std::max(d, ij.second);
    return d;
  }
  std::size_t degree_z() const {
    std::size_t d = 0;
    for (const auto& [ij, c] : coefficients)
      d = std::max(d, ij.first);
    return d;
  }
  Integer coefficient(std::size_t i, std::size_t j) const {
    auto it = coefficients.find({i, j});
    return it == coefficients.end() ? Integer(0) : it->second;
  }
  friend bool operator==(const AlgebraicFit&, const AlgebraicFit&) = default;
};

/// True iff num/den expands to exactly the coefficients of s.
inline bool reexpands_to(const RationalFit& f, const SeriesPrefix& s) {
  const auto expansion = series::divide(f.numerator, f.denominator, s.degree());
  for (std::size_t n = 0; n < s.size(); ++n)
    if (expansion[n] != Rational(s.coefficients[n]))
      return false;
  return true;
}

/// Coefficients of P(z, S(z)) through degree N.
inline std::vector<Integer> algebraic_residue(const AlgebraicFit& f, const SeriesPrefix& s) {
  const auto degree = s.degree();
  std::vector<Integer> residue(degree + 1, 0);
  const auto dy = f.degree_y();
  std::vector<Integer> power{1}; // S^j truncated
  for (std::size_t j = 0; j <= dy; ++j) {
    for (const auto& [ij, c] : f.coefficients) {
      if (ij.second != j)
        continue;
      for (std::size_t n = 0; n + ij.first <= degree && n < power.size(); ++n)
        residue[n + ij.first] += c * power[n];
    }
    power = series::multiply(power, s.coefficients, degree);
  }
  return residue;
}

inline bool annihilates(const AlgebraicFit& f, const SeriesPrefix& s) {
  const auto r = algebraic_residue(f, s);
  return std::all_of(r.begin(), r.end(), [](const Integer& x) { return x == 0; });
}

/// Smallest prefix degree N accepted for the given degree bounds: the
/// p + q + 1 free coefficients plus two extra matched coefficients.
inline std::size_t rational_required_degree(std::size_t num_deg, std::size_t den_deg) {
  return num_deg + den_deg + 2;
}

/// (dz + 1)(dy + 1) - 1 free coefficients plus two extra matched ones.
inline std::size_t algebraic_required_degree(std::size_t deg_z, std::size_t deg_y) {
  return (deg_z + 1) * (deg_y + 1);
}

namespace detail {

inline std::optional<RationalFit> fit_rational_exact(const SeriesPrefix& s, std::size_t dn,
                                                     std::size_t dd) {
  const auto N = s.degree();
  // Unknowns: a_0..a_dn, then b_1..b_dd; b_0 = 1.
  const std::size_t unknowns = dn + 1 + dd;
  linalg::Matrix m(N + 1, std::vector<Rational>(unknowns + 1, 0));
  for (std::size_t n = 0; n <= N; ++n) {
    if (n <= dn)
      m[n][n] = -1;
    for (std::size_t j = 1; j <= dd && j <= n; ++j)
      m[n][dn + j] = Rational(s.coefficients[n - j]);
    m[n][unknowns] = -Rational(s.coefficients[n]);
  }
  auto x = linalg::solve(std::move(m), unknowns);
  if (!x)
    return std::nullopt;
  std::vector<Rational> all(x->begin(), x->begin() + static_cast<std::ptrdiff_t>(dn + 1));
  all.push_back(1);
  all.insert(all.end(), x->begin() + static_cast<std::ptrdiff_t>(dn + 1), x->end());
  auto ints = linalg::clear_denominators(all);
  RationalFit fit;
  fit.numerator.assign(ints.begin(), ints.begin() + static_cast<std::ptrdiff_t>(dn + 1));
  fit.denominator.assign(ints.begin() + static_cast<std::ptrdiff_t>(dn + 1), ints.end());
  if (fit.denominator[0] < 0) {
    for (auto& c : fit.numerator)
      c = -c;
    for (auto& c : fit.denominator)
      c = -c;
  }
  trim_trailing_zeros(fit.numerator);
  trim_trailing_zeros(fit.denominator);
  return fit;
}

inline std::optional<AlgebraicFit> fit_algebraic_exact(const SeriesPrefix& s, std::size_t dz,
                                                       std::size_t dy) {
  const auto N = s.degree();
  // powers[j] = S^j truncated to degree N.
  std::vector<std::vector<Integer>> powers{{Integer(1)}};
  for (std::size_t j = 1; j <= dy; ++j)
    powers.push_back(series::multiply(powers.back(), s.coefficients, N));

  const std::size_t cols = (dz + 1) * (dy + 1);
  auto column = [dz](std::size_t i, std::size_t j) { return j * (dz + 1) + i; };
  linalg::Matrix m(N + 1, std::vector<Rational>(cols, 0));
  for (std::size_t n = 0; n <= N; ++n)
    for (std::size_t j = 0; j <= dy; ++j)
      for (std::size_t i = 0; i <= dz && i <= n; ++i)
        if (n - i < powers[j].size())
          m[n][column(i, j)] = Rational(powers[j][n - i]);
  auto kernel = linalg::kernel_vector(std::move(m), cols);
  if (!kernel)
    return std::nullopt;
  auto ints = linalg::clear_denominators(*kernel);

  AlgebraicFit fit;
  for (std::size_t j = 0; j <= dy; ++j)
    for (std::size_t i = 0; i <= dz; ++i)
      if (ints[column(i, j)] != 0)
        fit.coefficients[{i, j}] = ints[column(i, j)];
  if (fit.degree_y() == 0)
    return std::nullopt;
  const auto top = fit.degree_y();
  std::size_t lead_z = 0;
  for (const auto& [ij, c] : fit.coefficients)
    if (ij.second == top)
      lead_z = std::max(lead_z, ij.first);
  if (fit.coefficient(lead_z, top) < 0)
    for (auto& [ij, c] : fit.coefficients)
      c = -c;
  return fit;
}

} // namespace detail

/// Finds num/den with deg num <= max_num_deg and deg den <= max_den_deg whose
/// expansion matches every supplied coefficient. Degree pairs are tried by
/// increasing total degree, so the result is in lowest terms. No fit is a
/// normal outcome (nullopt).
inline std::optional<RationalFit> fit_rational(const SeriesPrefix& s, std::size_t max_num_deg,
                                               std::size_t max_den_deg) {
  const auto required = rational_required_degree(max_num_deg, max_den_deg);
  if (s.coefficients.empty() || s.degree() < required)
    throw FitError("fit_rational: degrees (" + std::to_string(max_num_deg) + "," +
                   std::to_string(max_den_deg) + ") need a prefix through degree " +
                   std::to_string(required) + ", got " +
                   (s.coefficients.empty() ? std::string("none") : std::to_string(s.degree())));
  for (std::size_t total = 0; total <= max_num_deg + max_den_deg; ++total)
    for (std::size_t dd = 0; dd <= std::min(total, max_den_deg); ++dd) {
      const auto dn = total - dd;
      if (dn > max_num_deg)
        continue;
      auto fit = detail::fit_rational_exact(s, dn, dd);
      if (fit && reexpands_to(*fit, s))
        return fit;
    }
  return std::nullopt;
}

/// Finds P(z, y) with deg_z <= max_deg_z, 1 <= deg_y <= max_deg_y and
/// P(z, S(z)) = 0 through the prefix degree. Smallest y-degree first, then
/// smallest z-degree.
inline std::optional<AlgebraicFit> fit_algebraic(const SeriesPrefix& s, std::size_t max_deg_z,
                                                 std::size_t max_deg_y) {
  if (max_deg_y < 1)
    throw FitError("fit_algebraic: y-degree bound must be at least 1");
  const auto required = algebraic_required_degree(max_deg_z, max_deg_y);
  if (s.coefficients.empty() || s.degree() < required)
    throw FitError("fit_algebraic: degrees (" + std::to_string(max_deg_z) + "," +
                   std::to_string(max_deg_y) + ") need a prefix through degree " +
                   std::to_string(required) + ", got " +
                   (s.coefficients.empty() ? std::string("none") : std::to_string(s.degree())));
  for (std::size_t dy = 1; dy <= max_deg_y; ++dy)
    for (std::size_t dz = 0; dz <= max_deg_z; ++dz) {
      auto fit = detail::fit_algebraic_exact(s, dz, dy);
      if (fit && annihilates(*fit, s))
        return fit;
    }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Formatting

namespace detail {

inline void append_term(std::string& out, const Integer& c, const std::string& monomial) {
  if (c == 0)
    return;
  const bool negative = c < 0;
  const Integer mag = negative ? Integer(-c) : c;
  if (out.empty())
    out += negative ? "-" : "";
  else
    out += negative ? " - " : " + ";
  if (monomial.empty())
    out += mag.str();
  else if (mag == 1)
    out += monomial;
  else
    out += mag.str() + "*" + monomial;
}

inline std::string power(const char* var, std::size_t e) {
  if (e == 0)
    return {};
  if (e == 1)
    return var;
  return std::string(var) + "^" + std::to_string(e);
}

} // namespace detail

/// Ascending powers of z, e.g. "1 - z".
inline std::string format_polynomial(const std::vector<Integer>& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i)
    detail::append_term(out, p[i], detail::power("z", i));
  return out.empty() ? "0" : out;
}

/// "(1)/(1 - z)".
inline std::string to_string(const RationalFit& f) {
  return "(" + format_polynomial(f.numerator) + ")/(" + format_polynomial(f.denominator) + ")";
}

/// Descending powers of y, then of z, e.g. "z*y^2 - y + 1".
inline std::string to_string(const AlgebraicFit& f) {
  std::vector<std::pair<std::pair<std::size_t, std::size_t>, Integer>> terms(f.coefficients.begin(),
                                                                           f.coefficients.end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    if (a.first.second != b.first.second)
      return a.first.second > b.first.second;
    return a.first.first > b.first.first;
  });
  std::string out;
  for (const auto& [ij, c] : terms) {
    std::string mono = detail::power("z", ij.first);
    const auto ypart = detail::power("y", ij.second);
    if (!ypart.empty())
      mono = mono.empty() ? ypart : mono + "*" + ypart;
    detail::append_term(out, c, mono);
  }
  return out.empty() ? "0" : out;
}

/// Integer as a JSON number when it fits in 64 bits, else as a decimal string.
inline nlohmann::json integer_to_json(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return x.convert_to<std::int64_t>();
  return x.str();
}

inline Integer integer_from_json(const nlohmann::json& j) {
  if (j.is_string())
    return Integer(j.get<std::string>());
  return Integer(j.get<std::int64_t>());
}

inline nlohmann::json to_json(const SeriesPrefix& s) {
  auto arr = nlohmann::json::array();
  for (const auto& c : s.coefficients)
    arr.push_back(integer_to_json(c));
  return arr;
}

inline nlohmann::json to_json(const RationalFit& f) {
  auto num = nlohmann::json::array();
  auto den = nlohmann::json::array();
  for (const auto& c : f.numerator)
    num.push_back(integer_to_json(c));
  for (const auto& c : f.denominator)
    den.push_back(integer_to_json(c));
  return {{"numerator", num}, {"denominator", den}, {"text", to_string(f)}};
}

inline nlohmann::json to_json(const AlgebraicFit& f) {
  nlohmann::json table = nlohmann::json::object();
  for (const auto& [ij, c] : f.coefficients)
    table[std::to_string(ij.first) + "," + std::to_string(ij.second)] = integer_to_json(c);
  return {{"coefficients", table}, {"text", to_string(f)}};
}

inline RationalFit rational_fit_from_json(const nlohmann::json& j) {
  RationalFit f;
  for (const auto& c : j.at("numerator"))
    f.numerator.push_back(integer_from_json(c));
  for (const auto& c : j.at("denominator"))
    f.denominator.push_back(integer_from_json(c));
  return f;
}

inline AlgebraicFit algebraic_fit_from_json(const nlohmann::json& j) {
  AlgebraicFit f;
  for (const auto& [key, value] : j.at("coefficients").items()) {
    const auto comma = key.find(',');
    if (comma == std::string::npos)
      throw FitError("coefficient key '" + key + "' is not of the form i,j");
    f.coefficients[{std::stoul(key.substr(0, comma)), std::stoul(key.substr(comma + 1))}] =
        integer_from_json(value);
  }
  return f;
}

} // namespace permpat
