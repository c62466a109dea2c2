#include "z2c/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

#include "z2c/error.hpp"

namespace z2c {

Monomial::Monomial(std::vector<std::uint16_t> exps) : exps_(std::move(exps)) {
  for (auto e : exps_) degree_ += e;
}

void Monomial::set(std::size_t i, std::uint16_t e) {
  degree_ = degree_ - exps_[i] + e;
  exps_[i] = e;
}

Monomial Monomial::operator*(const Monomial& rhs) const {
  Monomial out(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] += rhs.exps_[i];
  out.degree_ += rhs.degree_;
  return out;
}

bool Monomial::grlex_greater(const Monomial& a, const Monomial& b) {
  if (a.degree_ != b.degree_) return a.degree_ > b.degree_;
  return a.exps_ > b.exps_;
}

namespace {

bool term_order(const Term& a, const Term& b) { return Monomial::grlex_greater(a.monomial, b.monomial); }

// Merges sorted term lists a + sign*b.
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && Monomial::grlex_greater(a[i].monomial, b[j].monomial))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || Monomial::grlex_greater(b[j].monomial, a[i].monomial)) {
      out.push_back(Term{b[j].monomial, sign > 0 ? b[j].coeff : Rational(-b[j].coeff)});
      ++j;
    } else {
      Rational c = sign > 0 ? Rational(a[i].coeff + b[j].coeff) : Rational(a[i].coeff - b[j].coeff);
      if (sgn(c) != 0) out.push_back(Term{a[i].monomial, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

// Exponents packed one byte per variable behind a leading total-degree word, so
// word-wise comparison is the grlex term order. Coefficients are integers over a
// common denominator.
struct PackedTerms {
  std::size_t words = 0;
  std::vector<std::uint64_t> keys;
  std::vector<mpz_class> num;
  mpz_class den = 1;
};

PackedTerms pack_terms(const std::vector<Term>& terms, std::size_t nvars) {
  PackedTerms p;
  p.words = 1 + (nvars + 7) / 8;
  p.keys.assign(terms.size() * p.words, 0);
  for (const auto& t : terms) mpz_lcm(p.den.get_mpz_t(), p.den.get_mpz_t(), t.coeff.get_den_mpz_t());
  p.num.reserve(terms.size());
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& t = terms[i];
    std::uint64_t* k = &p.keys[i * p.words];
    k[0] = t.monomial.degree();
    for (std::size_t v = 0; v < nvars; ++v)
      k[1 + v / 8] |= static_cast<std::uint64_t>(t.monomial[v]) << (8 * (7 - v % 8));
    p.num.push_back(t.coeff.get_num() * (p.den / t.coeff.get_den()));
  }
  return p;
}

// Heap merge of the rows a_i * b, each already sorted since multiplying by a
// monomial preserves the term order.
std::vector<Term> packed_product(const std::vector<Term>& a, const std::vector<Term>& b, std::size_t nvars) {
  const PackedTerms pa = pack_terms(a, nvars), pb = pack_terms(b, nvars);
  const std::size_t w = pa.words;
  std::vector<std::size_t> next(a.size(), 0);
  std::vector<std::uint64_t> cur(a.size() * w);
  auto load = [&](std::size_t i) {
    for (std::size_t k = 0; k < w; ++k) cur[i * w + k] = pa.keys[i * w + k] + pb.keys[next[i] * w + k];
  };
  auto greater = [&](std::size_t x, std::size_t y) {
    for (std::size_t k = 0; k < w; ++k)
      if (cur[x * w + k] != cur[y * w + k]) return cur[x * w + k] > cur[y * w + k];
    return false;
  };
  auto heap_less = [&](std::size_t x, std::size_t y) { return greater(y, x); };
  std::vector<std::size_t> heap(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    heap[i] = i;
    load(i);
  }
  std::make_heap(heap.begin(), heap.end(), heap_less);

  std::vector<std::uint64_t> out_keys;
  std::vector<mpz_class> out_num;
  std::vector<std::uint64_t> acc_key(w);
  mpz_class acc;
  bool open = false;
  auto flush = [&] {
    if (open && acc != 0) {
      out_keys.insert(out_keys.end(), acc_key.begin(), acc_key.end());
      out_num.push_back(acc);
    }
  };
  while (!heap.empty()) {
    std::pop_heap(heap.begin(), heap.end(), heap_less);
    const std::size_t i = heap.back();
    const std::uint64_t* k = &cur[i * w];
    if (!open || !std::equal(acc_key.begin(), acc_key.end(), k)) {
      flush();
      std::copy(k, k + w, acc_key.begin());
      acc = 0;
      open = true;
    }
    mpz_addmul(acc.get_mpz_t(), pa.num[i].get_mpz_t(), pb.num[next[i]].get_mpz_t());
    if (++next[i] < b.size()) {
      load(i);
      std::push_heap(heap.begin(), heap.end(), heap_less);
    } else {
      heap.pop_back();
    }
  }
  flush();

  const mpz_class den = pa.den * pb.den;
  std::vector<Term> out;
  out.reserve(out_num.size());
  for (std::size_t t = 0; t < out_num.size(); ++t) {
    std::vector<std::uint16_t> exps(nvars);
    const std::uint64_t* k = &out_keys[t * w];
    for (std::size_t v = 0; v < nvars; ++v) exps[v] = static_cast<std::uint16_t>((k[1 + v / 8] >> (8 * (7 - v % 8))) & 0xff);
    Rational c(out_num[t], den);
    c.canonicalize();
    out.push_back(Term{Monomial(std::move(exps)), std::move(c)});
  }
  return out;
}

}  // namespace

Poly Poly::constant(std::size_t nvars, const Rational& c) {
  Poly p(nvars);
  if (sgn(c) != 0) p.terms_.push_back(Term{Monomial(nvars), c});
  return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw Error("Poly::variable: index out of range");
  Monomial m(nvars);
  m.set(index, 1);
  Poly p(nvars);
  p.terms_.push_back(Term{std::move(m), Rational(1)});
  return p;
}

Poly Poly::linear(const RatVector& coeffs) {
  Poly p(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (sgn(coeffs[i]) == 0) continue;
    Monomial m(coeffs.size());
    m.set(i, 1);
    p.terms_.push_back(Term{std::move(m), coeffs[i]});
  }
  p.normalize();
  return p;
}

Poly Poly::from_terms(std::size_t nvars, std::vector<Term> terms) {
  Poly p(nvars);
  for (const auto& t : terms)
    if (t.monomial.nvars() != nvars) throw Error("Poly::from_terms: variable count mismatch");
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void Poly::normalize() {
  std::sort(terms_.begin(), terms_.end(), term_order);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().monomial == t.monomial) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && sgn(out.back().coeff) == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && sgn(out.back().coeff) == 0) out.pop_back();
  terms_ = std::move(out);
}

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.degree() == 0); }

int Poly::degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.front().monomial.degree()); }

bool Poly::is_homogeneous() const {
  return terms_.empty() || terms_.front().monomial.degree() == terms_.back().monomial.degree();
}

Poly Poly::operator+(const Poly& rhs) const {
  if (nvars_ != rhs.nvars_) throw Error("Poly: variable count mismatch");
  Poly out(nvars_);
  out.terms_ = merge(terms_, rhs.terms_, +1);
  return out;
}

Poly Poly::operator-(const Poly& rhs) const {
  if (nvars_ != rhs.nvars_) throw Error("Poly: variable count mismatch");
  Poly out(nvars_);
  out.terms_ = merge(terms_, rhs.terms_, -1);
  return out;
}

Poly Poly::operator-() const {
  Poly out(*this);
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

Poly Poly::operator*(const Poly& rhs) const {
  if (nvars_ != rhs.nvars_) throw Error("Poly: variable count mismatch");
  Poly out(nvars_);
  if (terms_.empty() || rhs.terms_.empty()) return out;
  if (degree() + rhs.degree() <= 255) {
    out.terms_ = packed_product(terms_, rhs.terms_, nvars_);
    return out;
  }
  out.terms_.reserve(terms_.size() * rhs.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : rhs.terms_) out.terms_.push_back(Term{a.monomial * b.monomial, a.coeff * b.coeff});
  out.normalize();
  return out;
}

Poly Poly::operator*(const Rational& s) const {
  if (sgn(s) == 0) return Poly(nvars_);
  Poly out(*this);
  for (auto& t : out.terms_) t.coeff *= s;
  return out;
}

Poly& Poly::operator+=(const Poly& rhs) { return *this = *this + rhs; }
Poly& Poly::operator-=(const Poly& rhs) { return *this = *this - rhs; }

bool Poly::operator==(const Poly& rhs) const {
  if (nvars_ != rhs.nvars_ || terms_.size() != rhs.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].monomial == rhs.terms_[i].monomial) || terms_[i].coeff != rhs.terms_[i].coeff) return false;
  return true;
}

Poly Poly::pow(unsigned e) const {
  Poly result = constant(nvars_, 1);
  Poly base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

Poly Poly::derivative(std::size_t var) const {
  Poly out(nvars_);
  for (const auto& t : terms_) {
    auto e = t.monomial[var];
    if (e == 0) continue;
    Monomial m = t.monomial;
    m.set(var, static_cast<std::uint16_t>(e - 1));
    out.terms_.push_back(Term{std::move(m), t.coeff * e});
  }
  // Subtracting the same unit vector keeps surviving terms distinct and in order.
  return out;
}

Poly Poly::derivation(std::size_t from, std::size_t to) const {
  Poly out(nvars_);
  for (const auto& t : terms_) {
    auto e = t.monomial[from];
    if (e == 0) continue;
    Monomial m = t.monomial;
    m.set(from, static_cast<std::uint16_t>(e - 1));
    m.set(to, static_cast<std::uint16_t>(m[to] + 1));
    out.terms_.push_back(Term{std::move(m), t.coeff * e});
  }
  // A fixed shift of exponent vectors preserves the order.
  return out;
}

Poly Poly::directional_derivative(const RatVector& dir) const {
  if (dir.size() != nvars_) throw Error("directional_derivative: dimension mismatch");
  Poly out(nvars_);
  for (const auto& t : terms_)
    for (std::size_t v = 0; v < nvars_; ++v) {
      auto e = t.monomial[v];
      if (e == 0 || sgn(dir[v]) == 0) continue;
      Monomial m = t.monomial;
      m.set(v, static_cast<std::uint16_t>(e - 1));
      out.terms_.push_back(Term{std::move(m), t.coeff * e * dir[v]});
    }
  out.normalize();
  return out;
}

Rational Poly::evaluate(const RatVector& point) const {
  if (point.size() != nvars_) throw Error("evaluate: dimension mismatch");
  Rational sum;
  for (const auto& t : terms_) {
    Rational v = t.coeff;
    for (std::size_t i = 0; i < nvars_ && sgn(v) != 0; ++i) {
      for (std::uint16_t k = 0; k < t.monomial[i]; ++k) v *= point[i];
    }
    sum += v;
  }
  return sum;
}

RatVector Poly::gradient_at(const RatVector& point) const {
  RatVector g(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) g[i] = derivative(i).evaluate(point);
  return g;
}

Poly Poly::homogeneous_component(unsigned d) const {
  Poly out(nvars_);
  for (const auto& t : terms_)
    if (t.monomial.degree() == d) out.terms_.push_back(t);
  return out;
}

int Poly::degree_in(const std::vector<bool>& mask) const {
  if (mask.size() != nvars_) throw Error("degree_in: mask size mismatch");
  int best = -1;
  for (const auto& t : terms_) {
    int d = 0;
    for (std::size_t i = 0; i < nvars_; ++i)
      if (mask[i]) d += t.monomial[i];
    best = std::max(best, d);
  }
  return best;
}

Poly Poly::top_component(const std::vector<bool>& mask) const {
  int top = degree_in(mask);
  Poly out(nvars_);
  for (const auto& t : terms_) {
    int d = 0;
    for (std::size_t i = 0; i < nvars_; ++i)
      if (mask[i]) d += t.monomial[i];
    if (d == top) out.terms_.push_back(t);
  }
  return out;
}

RatVector Poly::linear_coefficients() const {
  if (degree() > 1) throw Error("linear_coefficients: polynomial is not linear");
  RatVector v(nvars_);
  for (const auto& t : terms_) {
    if (t.monomial.degree() == 0) continue;
    for (std::size_t i = 0; i < nvars_; ++i)
      if (t.monomial[i] == 1) v[i] = t.coeff;
  }
  return v;
}

std::string Poly::to_string(const std::vector<std::string>& labels) const {
  if (labels.size() != nvars_) throw Error("to_string: label count mismatch");
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    bool negative = sgn(c) < 0;
    if (negative) c = -c;
    if (negative)
      os << '-';
    else if (!first)
      os << '+';
    first = false;
    bool need_star = false;
    if (t.monomial.degree() == 0 || c != 1) {
      os << c.get_str();
      need_star = true;
    }
    for (std::size_t i = 0; i < nvars_; ++i) {
      auto e = t.monomial[i];
      if (e == 0) continue;
      if (need_star) os << '*';
      os << labels[i];
      if (e > 1) os << '^' << e;
      need_star = true;
    }
  }
  return os.str();
}

std::vector<std::string> default_labels(std::size_t nvars) {
  std::vector<std::string> out;
  out.reserve(nvars);
  for (std::size_t i = 0; i < nvars; ++i) out.push_back("x" + std::to_string(i + 1));
  return out;
}

namespace {

class PolyParser {
public:
  PolyParser(std::string_view text, const std::vector<std::string>& labels) : text_(text), labels_(labels) {}

  Poly parse() {
    Poly p = sum();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("unexpected character '" + std::string(1, text_[pos_]) + "'", pos_);
    return p;
  }

private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly sum() {
    skip_ws();
    if (pos_ == text_.size()) throw ParseError("expected a term", pos_);
    Poly acc(labels_.size());
    bool negate = false;
    if (accept('-'))
      negate = true;
    else
      accept('+');
    acc = negate ? -product() : product();
    while (true) {
      if (accept('+'))
        acc += product();
      else if (accept('-'))
        acc -= product();
      else
        break;
    }
    return acc;
  }

  Poly product() {
    Poly acc = power();
    while (accept('*')) acc = acc * power();
    return acc;
  }

  Poly power() {
    Poly base = primary();
    if (accept('^')) {
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) throw ParseError("expected an exponent", pos_);
      unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
      if (e > 1000) throw ParseError("exponent too large", start);
      base = base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  Poly primary() {
    skip_ws();
    if (pos_ == text_.size()) throw ParseError("unexpected end of input", pos_);
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly inner = sum();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        std::size_t dstart = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (dstart == pos_) throw ParseError("expected a denominator", pos_);
      }
      std::string_view lit = text_.substr(start, pos_ - start);
      Rational value;
      try {
        value = parse_rational(lit);
      } catch (const ParseError&) {
        throw ParseError("malformed number '" + std::string(lit) + "'", start);
      }
      return Poly::constant(labels_.size(), value);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      auto it = std::find(labels_.begin(), labels_.end(), name);
      if (it == labels_.end()) throw ParseError("unknown variable '" + name + "'", start);
      return Poly::variable(labels_.size(), static_cast<std::size_t>(it - labels_.begin()));
    }
    throw ParseError("unexpected character '" + std::string(1, c) + "'", pos_);
  }

  std::string_view text_;
  const std::vector<std::string>& labels_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, const std::vector<std::string>& labels) {
  return PolyParser(text, labels).parse();
}

void TermBudget::check(const Poly& a, const Poly& b) const {
  if (max_term_product == 0) return;
  if (a.size() * b.size() > max_term_product)
    throw BudgetError("symbolic product of " + std::to_string(a.size()) + " x " + std::to_string(b.size()) +
                      " terms exceeds the budget of " + std::to_string(max_term_product));
}

}  // namespace z2c
