#include "z2c/lie_algebra.hpp"

#include <algorithm>
#include <random>

#include "z2c/error.hpp"

namespace z2c {

namespace {

void axpy(RatVector& y, const Rational& a, const SparseVector& x) {
  for (const auto& [k, c] : x) y[k] += a * c;
}

SparseVector to_sparse(const RatVector& v) {
  SparseVector s;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (sgn(v[k]) != 0) s.emplace_back(k, v[k]);
  return s;
}

}  // namespace

LieAlgebra::LieAlgebra(std::vector<std::string> labels)
    : labels_(std::move(labels)), table_(labels_.size() * labels_.size()) {}

void LieAlgebra::set_bracket(std::size_t i, std::size_t j, const RatVector& value) {
  if (i == j) throw ValidationError("bracket of a basis vector with itself is zero");
  if (value.size() != dim()) throw ValidationError("bracket value has the wrong length");
  if (i < j) {
    table_[i * dim() + j] = to_sparse(value);
  } else {
    RatVector neg(value.size());
    for (std::size_t k = 0; k < value.size(); ++k) neg[k] = -value[k];
    table_[j * dim() + i] = to_sparse(neg);
  }
}

SparseVector LieAlgebra::basis_bracket(std::size_t i, std::size_t j) const {
  if (i == j) return {};
  if (i < j) return table_[i * dim() + j];
  SparseVector s = table_[j * dim() + i];
  for (auto& [k, c] : s) c = -c;
  return s;
}

RatVector LieAlgebra::bracket(const RatVector& x, const RatVector& y) const {
  RatVector out(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (i == j || sgn(y[j]) == 0) continue;
      Rational a = x[i] * y[j];
      if (i < j) {
        axpy(out, a, table_[i * dim() + j]);
      } else {
        axpy(out, -a, table_[j * dim() + i]);
      }
    }
  }
  return out;
}

RatMatrix LieAlgebra::ad(const RatVector& x) const {
  RatMatrix m(dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) {
    RatVector e(dim());
    e[j] = 1;
    RatVector col = bracket(x, e);
    for (std::size_t i = 0; i < dim(); ++i) m(i, j) = col[i];
  }
  return m;
}

bool LieAlgebra::is_abelian() const {
  return std::all_of(table_.begin(), table_.end(), [](const SparseVector& s) { return s.empty(); });
}

void LieAlgebra::check_jacobi(std::uint64_t seed, std::size_t samples) const {
  const std::size_t n = dim();
  // [[a,b],c] + [[b,c],a] + [[c,a],b] on basis elements.
  auto cyclic = [&](std::size_t a, std::size_t b, std::size_t c) {
    RatVector sum(n);
    auto term = [&](std::size_t p, std::size_t q, std::size_t r) {
      for (const auto& [k, coef] : basis_bracket(p, q)) axpy(sum, coef, basis_bracket(k, r));
    };
    term(a, b, c);
    term(b, c, a);
    term(c, a, b);
    if (!is_zero(sum))
      throw CheckError("Jacobi identity fails on (" + labels_[a] + ", " + labels_[b] + ", " + labels_[c] + ")");
  };
  if (n <= 30) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        for (std::size_t c = b + 1; c < n; ++c) cyclic(a, b, c);
    return;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (std::size_t s = 0; s < samples; ++s) cyclic(pick(rng), pick(rng), pick(rng));
}

nlohmann::json LieAlgebra::to_json() const {
  nlohmann::json sc = nlohmann::json::array();
  for (std::size_t i = 0; i < dim(); ++i) {
    for (std::size_t j = i + 1; j < dim(); ++j) {
      const auto& s = table_[i * dim() + j];
      if (s.empty()) continue;
      nlohmann::json terms = nlohmann::json::array();
      for (const auto& [k, c] : s) terms.push_back({k + 1, to_string(c)});
      sc.push_back({i + 1, j + 1, terms});
    }
  }
  nlohmann::json j;
  j["dim"] = dim();
  j["labels"] = labels_;
  j["sc"] = sc;
  return j;
}

LieAlgebra LieAlgebra::from_json(const nlohmann::json& j) {
  LieAlgebra g;
  try {
    std::size_t n = j.at("dim").get<std::size_t>();
    if (n == 0) throw ValidationError("algebra dimension must be positive");
    std::vector<std::string> labels;
    if (j.contains("labels")) {
      labels = j.at("labels").get<std::vector<std::string>>();
      if (labels.size() != n) throw ValidationError("label count does not match dim");
    } else {
      for (std::size_t i = 1; i <= n; ++i) labels.push_back("x" + std::to_string(i));
    }
    g = LieAlgebra(std::move(labels));
    for (const auto& entry : j.at("sc")) {
      std::size_t i = entry.at(0).get<std::size_t>(), k = entry.at(1).get<std::size_t>();
      if (i < 1 || k < 1 || i > n || k > n || i >= k)
        throw ValidationError("structure constant index pair must satisfy 1 <= i < j <= dim");
      RatVector v(n);
      for (const auto& t : entry.at(2)) {
        std::size_t idx = t.at(0).get<std::size_t>();
        if (idx < 1 || idx > n) throw ValidationError("structure constant target index out of range");
        const auto& c = t.at(1);
        v[idx - 1] += c.is_string() ? parse_rational(c.get<std::string>()) : Rational(c.get<long>());
      }
      g.set_bracket(i - 1, k - 1, v);
    }
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed structure-constant JSON: ") + e.what());
  }
  try {
    g.check_jacobi();
  } catch (const CheckError& e) {
    throw ValidationError(e.what());
  }
  return g;
}

std::vector<int> Z2Grading::parity(std::size_t dim) const {
  std::vector<int> p(dim, -1);
  for (auto i : even) p.at(i) = 0;
  for (auto i : odd) {
    if (p.at(i) != -1) throw CheckError("grading index sets overlap");
    p[i] = 1;
  }
  if (std::find(p.begin(), p.end(), -1) != p.end()) throw CheckError("grading does not cover the basis");
  return p;
}

void Z2Grading::check(const LieAlgebra& g) const {
  auto p = parity(g.dim());
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j)
      for (const auto& [k, c] : g.stored(i, j))
        if (p[k] != (p[i] + p[j]) % 2)
          throw CheckError("grading closure fails: [" + g.labels()[i] + ", " + g.labels()[j] + "] leaves g_" +
                           std::to_string((p[i] + p[j]) % 2));
}

void Involution::check(const LieAlgebra& g) const {
  const std::size_t n = g.dim();
  if (matrix.rows() != n || matrix.cols() != n) throw CheckError("involution matrix has the wrong size");
  if (!(matrix * matrix == RatMatrix::identity(n))) throw CheckError("sigma^2 is not the identity");
  std::vector<RatVector> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = matrix.column(i);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      RatVector br(n);
      for (const auto& [k, c] : g.stored(i, j)) br[k] = c;
      if (!(matrix * br == g.bracket(images[i], images[j])))
        throw CheckError("sigma is not an automorphism on (" + g.labels()[i] + ", " + g.labels()[j] + ")");
    }
  }
}

LieAlgebra subalgebra(const LieAlgebra& g, const std::vector<RatVector>& basis, std::vector<std::string> labels) {
  const std::size_t m = basis.size();
  if (labels.empty())
    for (std::size_t i = 1; i <= m; ++i) labels.push_back("z" + std::to_string(i));
  LieAlgebra h(std::move(labels));
  RatMatrix b = RatMatrix::from_columns(basis, g.dim());
  if (b.rank() != m) throw CheckError("subalgebra basis is linearly dependent");
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      RatVector coords;
      if (!b.solve(g.bracket(basis[i], basis[j]), coords))
        throw CheckError("span is not closed under the bracket");
      h.set_bracket(i, j, coords);
    }
  }
  return h;
}

}  // namespace z2c
