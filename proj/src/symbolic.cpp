#include "z2c/symbolic.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>
#include <tuple>

#include "z2c/error.hpp"

namespace z2c {

namespace {

// Exponents are packed one byte per variable, variable 1 in the most
// significant byte, so word-wise comparison is lexicographic on exponents and
// word-wise addition multiplies monomials while total degrees stay below 256.
constexpr unsigned kMaxDegree = 255;

struct IntPoly {
  std::vector<std::uint64_t> mono;  // size() * words entries, descending order
  std::vector<mpz_class> coeff;
  unsigned degree = 0;

  std::size_t size() const { return coeff.size(); }
  bool is_zero() const { return coeff.empty(); }
};

class Packing {
public:
  explicit Packing(std::size_t nvars) : nvars_(nvars), words_(std::max<std::size_t>(1, (nvars + 7) / 8)) {}

  std::size_t words() const { return words_; }

  IntPoly pack(const Poly& p, const mpz_class& scale) const {
    IntPoly out;
    out.mono.reserve(p.size() * words_);
    std::vector<std::pair<std::vector<std::uint64_t>, mpz_class>> terms;
    for (const auto& t : p.terms()) {
      std::vector<std::uint64_t> w(words_, 0);
      for (std::size_t i = 0; i < nvars_; ++i) {
        const unsigned e = t.monomial[i];
        w[i / 8] |= static_cast<std::uint64_t>(e) << (8 * (7 - i % 8));
      }
      out.degree = std::max(out.degree, t.monomial.degree());
      mpq_class c = t.coeff * scale;
      terms.emplace_back(std::move(w), c.get_num());
    }
    if (out.degree > kMaxDegree) throw BudgetError("symbolic rank: degree exceeds packed range");
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    for (auto& [w, c] : terms) {
      out.mono.insert(out.mono.end(), w.begin(), w.end());
      out.coeff.push_back(std::move(c));
    }
    return out;
  }

  unsigned exponent(const std::uint64_t* m, std::size_t var) const {
    return static_cast<unsigned>((m[var / 8] >> (8 * (7 - var % 8))) & 0xff);
  }

  unsigned degree_of(const std::uint64_t* m) const {
    unsigned d = 0;
    for (std::size_t i = 0; i < nvars_; ++i) d += exponent(m, i);
    return d;
  }

  int compare(const std::uint64_t* a, const std::uint64_t* b) const {
    for (std::size_t i = 0; i < words_; ++i)
      if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    return 0;
  }

  // Returns coeff * x^shift * p.
  IntPoly shifted(const IntPoly& p, const std::uint64_t* shift, const mpz_class& coeff, unsigned shift_degree) const {
    IntPoly out;
    out.mono.resize(p.mono.size());
    out.coeff.resize(p.size());
    for (std::size_t t = 0; t < p.size(); ++t) {
      for (std::size_t w = 0; w < words_; ++w) out.mono[t * words_ + w] = p.mono[t * words_ + w] + shift[w];
      out.coeff[t] = p.coeff[t] * coeff;
    }
    out.degree = p.degree + shift_degree;
    return out;
  }

  IntPoly add(const IntPoly& a, const IntPoly& b) const {
    IntPoly out;
    out.mono.reserve(a.mono.size() + b.mono.size());
    out.coeff.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    auto push = [&](const std::uint64_t* m, mpz_class c) {
      out.mono.insert(out.mono.end(), m, m + words_);
      out.coeff.push_back(std::move(c));
    };
    while (i < a.size() || j < b.size()) {
      const int cmp = i == a.size() ? -1 : j == b.size() ? 1 : compare(&a.mono[i * words_], &b.mono[j * words_]);
      if (cmp > 0) {
        push(&a.mono[i * words_], a.coeff[i]);
        ++i;
      } else if (cmp < 0) {
        push(&b.mono[j * words_], b.coeff[j]);
        ++j;
      } else {
        mpz_class c = a.coeff[i] + b.coeff[j];
        if (c != 0) push(&a.mono[i * words_], std::move(c));
        ++i;
        ++j;
      }
    }
    // An upper bound suffices; entries of a homogeneous input stay homogeneous.
    out.degree = out.is_zero() ? 0 : std::max(a.degree, b.degree);
    return out;
  }

  // Returns pivot * x - a * y.
  IntPoly cross(const IntPoly& pivot, const IntPoly& x, const IntPoly& a, const IntPoly& y) const {
    std::vector<IntPoly> parts;
    auto expand = [&](const IntPoly& s, const IntPoly& p, bool negate) {
      if (p.is_zero()) return;
      for (std::size_t t = 0; t < s.size(); ++t) {
        const std::uint64_t* m = &s.mono[t * words_];
        mpz_class c = negate ? mpz_class(-s.coeff[t]) : s.coeff[t];
        parts.push_back(shifted(p, m, c, degree_of(m)));
      }
    };
    if (pivot.degree + x.degree > kMaxDegree || a.degree + y.degree > kMaxDegree)
      throw BudgetError("symbolic rank: degree exceeds packed range");
    expand(pivot, x, false);
    expand(a, y, true);
    if (parts.empty()) return {};
    while (parts.size() > 1) {
      std::vector<IntPoly> next;
      next.reserve((parts.size() + 1) / 2);
      for (std::size_t i = 0; i + 1 < parts.size(); i += 2) next.push_back(add(parts[i], parts[i + 1]));
      if (parts.size() % 2 == 1) next.push_back(std::move(parts.back()));
      parts = std::move(next);
    }
    return std::move(parts.front());
  }

  // Divides the row by its common monomial factor and integer content.
  void make_primitive(std::vector<IntPoly>& row) const {
    std::vector<unsigned> common(nvars_, std::numeric_limits<unsigned>::max());
    mpz_class g = 0;
    bool any = false;
    for (const auto& p : row)
      for (std::size_t t = 0; t < p.size(); ++t) {
        any = true;
        const std::uint64_t* m = &p.mono[t * words_];
        for (std::size_t i = 0; i < nvars_; ++i) common[i] = std::min(common[i], exponent(m, i));
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), p.coeff[t].get_mpz_t());
      }
    if (!any) return;
    std::vector<std::uint64_t> shift(words_, 0);
    unsigned shift_degree = 0;
    for (std::size_t i = 0; i < nvars_; ++i) {
      shift[i / 8] |= static_cast<std::uint64_t>(common[i]) << (8 * (7 - i % 8));
      shift_degree += common[i];
    }
    if (shift_degree == 0 && g == 1) return;
    for (auto& p : row) {
      for (std::size_t t = 0; t < p.size(); ++t) {
        for (std::size_t w = 0; w < words_; ++w) p.mono[t * words_ + w] -= shift[w];
        if (g != 1) mpz_divexact(p.coeff[t].get_mpz_t(), p.coeff[t].get_mpz_t(), g.get_mpz_t());
      }
      if (!p.is_zero()) p.degree -= shift_degree;
    }
  }

private:
  std::size_t nvars_;
  std::size_t words_;
};

}  // namespace

std::size_t symbolic_rank(PolyMatrix input, const RankOptions& options) {
  const std::size_t rows = input.size();
  if (rows == 0) return 0;
  const std::size_t cols = input.front().size();
  std::size_t nvars = 0;
  for (const auto& row : input)
    for (const auto& e : row) nvars = std::max(nvars, e.nvars());
  const Packing pk(nvars);

  std::vector<std::vector<IntPoly>> m(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    mpz_class den = 1;
    for (const auto& e : input[r])
      for (const auto& t : e.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
    for (const auto& e : input[r]) m[r].push_back(pk.pack(e, den));
    pk.make_primitive(m[r]);
  }
  input.clear();

  const std::size_t max_product = options.budget.max_term_product;
  auto check_budget = [&](const IntPoly& a, const IntPoly& b) {
    if (max_product != 0 && a.size() * b.size() > max_product)
      throw BudgetError("symbolic product of " + std::to_string(a.size()) + " x " + std::to_string(b.size()) +
                        " terms exceeds the budget of " + std::to_string(max_product));
  };

  std::vector<bool> row_live(rows, true), col_live(cols, true);
  std::size_t rank = 0;
  while (true) {
    std::vector<std::size_t> row_fill(rows, 0), col_fill(cols, 0);
    for (std::size_t r = 0; r < rows; ++r) {
      if (!row_live[r]) continue;
      for (std::size_t c = 0; c < cols; ++c)
        if (col_live[c] && !m[r][c].is_zero()) {
          ++row_fill[r];
          ++col_fill[c];
        }
    }
    std::size_t pr = rows, pc = cols;
    std::tuple<std::size_t, std::size_t, std::size_t> best{std::numeric_limits<std::size_t>::max(), 0, 0};
    for (std::size_t r = 0; r < rows; ++r) {
      if (!row_live[r]) continue;
      for (std::size_t c = 0; c < cols; ++c) {
        if (!col_live[c] || m[r][c].is_zero()) continue;
        const std::size_t terms = m[r][c].size();
        const std::size_t degree = m[r][c].degree;
        const std::size_t fill = (row_fill[r] - 1) * (col_fill[c] - 1);
        std::tuple<std::size_t, std::size_t, std::size_t> key;
        switch (options.rule) {
          case PivotRule::FewestTerms: key = {terms, degree, fill}; break;
          case PivotRule::LowestDegree: key = {degree, terms, fill}; break;
          case PivotRule::LeastFill: key = {fill, terms, degree}; break;
        }
        if (key < best) {
          best = key;
          pr = r;
          pc = c;
        }
      }
    }
    if (pr == rows) break;
    ++rank;
    row_live[pr] = false;
    col_live[pc] = false;
    const IntPoly pivot = m[pr][pc];
    const IntPoly zero;
    for (std::size_t r = 0; r < rows; ++r) {
      if (!row_live[r] || m[r][pc].is_zero()) continue;
      const IntPoly a = m[r][pc];
      for (std::size_t c = 0; c < cols; ++c) {
        if (!col_live[c]) continue;
        if (m[pr][c].is_zero() && m[r][c].is_zero()) continue;
        check_budget(pivot, m[r][c]);
        check_budget(a, m[pr][c]);
        m[r][c] = pk.cross(pivot, m[r][c], a, m[pr][c].is_zero() ? zero : m[pr][c]);
      }
      m[r][pc] = IntPoly{};
      pk.make_primitive(m[r]);
      if (options.max_entry_terms != 0)
        for (const auto& e : m[r])
          if (e.size() > options.max_entry_terms) throw BudgetError("symbolic rank: entry exceeded the term cap");
    }
  }
  return rank;
}

std::size_t symbolic_rank_portfolio(const PolyMatrix& m, std::size_t first_cap, std::size_t last_cap,
                                    const TermBudget& budget) {
  const std::size_t limit = last_cap == 0 ? first_cap * 100 : last_cap;
  for (std::size_t cap = first_cap; cap <= limit; cap *= 10)
    for (auto rule : {PivotRule::FewestTerms, PivotRule::LowestDegree, PivotRule::LeastFill}) {
      try {
        return symbolic_rank(m, {cap, budget, rule});
      } catch (const BudgetError&) {
      }
    }
  if (last_cap != 0) throw BudgetError("symbolic rank: every pivot rule exceeded " + std::to_string(limit) + " terms");
  return symbolic_rank(m, {0, budget, PivotRule::FewestTerms});
}

}  // namespace z2c
