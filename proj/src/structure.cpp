#include "z2c/structure.hpp"

#include <algorithm>
#include <functional>

#include "z2c/error.hpp"
#include "z2c/random.hpp"

namespace z2c {

namespace {

constexpr std::size_t kIndexEntryCap = 100;

RatMatrix unit(std::size_t n, std::size_t i, std::size_t j) {
  RatMatrix m(n, n);
  m(i, j) = 1;
  return m;
}

RatMatrix commutator(const RatMatrix& a, const RatMatrix& b) { return a * b - b * a; }

RatVector flatten(const RatMatrix& m) {
  RatVector v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

RatMatrix inverse(const RatMatrix& m) {
  const std::size_t n = m.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto piv = aug.rref();
  if (piv.size() < n || piv[n - 1] >= n) throw CheckError("matrix is singular");
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

// Scales a nonzero matrix so its entries are coprime integers with the first
// nonzero entry positive.
RatMatrix primitive(const RatMatrix& m) {
  mpz_class g = 0, l = 1;
  int first_sign = 0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rational& x = m(i, j);
      if (sgn(x) == 0) continue;
      if (first_sign == 0) first_sign = sgn(x);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num_mpz_t());
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    }
  Rational s(l, g);
  s.canonicalize();
  if (first_sign < 0) s = -s;
  return m.scaled(s);
}

// Incremental independence test on flattened vectors.
class Echelon {
public:
  bool add(RatVector v) {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Rational c = v[pivots_[r]];
      if (sgn(c) == 0) continue;
      for (std::size_t k = 0; k < v.size(); ++k)
        if (sgn(rows_[r][k]) != 0) v[k] -= c * rows_[r][k];
    }
    auto it = std::find_if(v.begin(), v.end(), [](const Rational& x) { return sgn(x) != 0; });
    if (it == v.end()) return false;
    const std::size_t p = static_cast<std::size_t>(it - v.begin());
    const Rational inv = 1 / v[p];
    for (auto& x : v) x *= inv;
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
  }

private:
  std::vector<RatVector> rows_;
  std::vector<std::size_t> pivots_;
};

std::vector<RatMatrix> ambient_basis(MatrixKind kind, std::size_t n) {
  std::vector<RatMatrix> out;
  switch (kind) {
    case MatrixKind::Sl:
      for (std::size_t i = 0; i + 1 < n; ++i) out.push_back(unit(n, i, i) - unit(n, i + 1, i + 1));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (i != j) out.push_back(unit(n, i, j));
      break;
    case MatrixKind::So:
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) out.push_back(unit(n, i, j) - unit(n, j, i));
      break;
    case MatrixKind::Sp: {
      const std::size_t h = n / 2;
      for (std::size_t i = 0; i < h; ++i) out.push_back(unit(n, i, i) - unit(n, h + i, h + i));
      for (std::size_t i = 0; i < h; ++i)
        for (std::size_t j = 0; j < h; ++j)
          if (i != j) out.push_back(unit(n, i, j) - unit(n, h + j, h + i));
      for (std::size_t i = 0; i < h; ++i)
        for (std::size_t j = i; j < h; ++j)
          out.push_back(i == j ? unit(n, i, h + i) : unit(n, i, h + j) + unit(n, j, h + i));
      for (std::size_t i = 0; i < h; ++i)
        for (std::size_t j = i; j < h; ++j)
          out.push_back(i == j ? unit(n, h + i, i) : unit(n, h + i, j) + unit(n, h + j, i));
      break;
    }
  }
  return out;
}

RatMatrix embed(const RatMatrix& m, std::size_t offset, std::size_t total) {
  RatMatrix out(total, total);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(offset + i, offset + j) = m(i, j);
  return out;
}

RatMatrix block(const RatMatrix& m, std::size_t offset, std::size_t size) {
  RatMatrix out(size, size);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) out(i, j) = m(offset + i, offset + j);
  return out;
}

RatMatrix signs(std::size_t n, const std::vector<std::size_t>& negative) {
  RatMatrix s = RatMatrix::identity(n);
  for (auto i : negative) s(i, i) = -1;
  return s;
}

std::vector<std::size_t> range(std::size_t from, std::size_t to) {
  std::vector<std::size_t> r;
  for (std::size_t i = from; i < to; ++i) r.push_back(i);
  return r;
}

RatMatrix symplectic_j(std::size_t h) {
  RatMatrix j(2 * h, 2 * h);
  for (std::size_t i = 0; i < h; ++i) {
    j(i, h + i) = 1;
    j(h + i, i) = -1;
  }
  return j;
}

// Cartan subalgebra of a classical simple matrix algebra.
std::vector<RatMatrix> toral_basis(MatrixKind kind, std::size_t n) {
  std::vector<RatMatrix> out;
  switch (kind) {
    case MatrixKind::Sl:
      for (std::size_t i = 0; i + 1 < n; ++i) out.push_back(unit(n, i, i) - unit(n, i + 1, i + 1));
      break;
    case MatrixKind::So:
      for (std::size_t j = 0; 2 * j + 1 < n; ++j) out.push_back(unit(n, 2 * j, 2 * j + 1) - unit(n, 2 * j + 1, 2 * j));
      break;
    case MatrixKind::Sp:
      for (std::size_t i = 0; i < n / 2; ++i) out.push_back(unit(n, i, i) - unit(n, n / 2 + i, n / 2 + i));
      break;
  }
  return out;
}

struct Setup {
  std::size_t size = 0;
  std::vector<MatrixBlock> blocks;
  std::vector<RatMatrix> ambient;
  std::function<RatMatrix(const RatMatrix&)> sigma;
  std::vector<RatMatrix> cartan;
};

std::pair<MatrixKind, std::size_t> classical_matrix(const DynkinComponent& c) {
  switch (c.type) {
    case DynkinType::A: return {MatrixKind::Sl, static_cast<std::size_t>(c.rank + 1)};
    case DynkinType::B: return {MatrixKind::So, static_cast<std::size_t>(2 * c.rank + 1)};
    case DynkinType::C: return {MatrixKind::Sp, static_cast<std::size_t>(2 * c.rank)};
    case DynkinType::D: return {MatrixKind::So, static_cast<std::size_t>(2 * c.rank)};
    default: throw UnsupportedError("exceptional Lie algebras are only available at the diagram level");
  }
}

Setup single(MatrixKind kind, std::size_t n) {
  Setup s;
  s.size = n;
  s.blocks = {{kind, 0, n}};
  s.ambient = ambient_basis(kind, n);
  return s;
}

Setup setup_for(const PairId& id) {
  const auto& a = id.params;
  auto conj = [](RatMatrix s) {
    return [s](const RatMatrix& x) { return s * x * s; };  // s is an involutive sign matrix
  };
  switch (id.family) {
    case Family::SlSo: {
      const std::size_t n = static_cast<std::size_t>(a[0]);
      Setup s = single(MatrixKind::Sl, n);
      s.sigma = [](const RatMatrix& x) { return x.transpose().scaled(-1); };
      s.cartan = toral_basis(MatrixKind::Sl, n);
      return s;
    }
    case Family::SlGl: {
      const std::size_t n = static_cast<std::size_t>(a[0]), k = static_cast<std::size_t>(a[1]);
      Setup s = single(MatrixKind::Sl, n);
      s.sigma = conj(signs(n, range(k, n)));
      for (std::size_t i = 0; i < k; ++i) s.cartan.push_back(unit(n, i, k + i) + unit(n, k + i, i));
      return s;
    }
    case Family::SlSp: {
      const std::size_t h = static_cast<std::size_t>(a[0]), n = 2 * h;
      Setup s = single(MatrixKind::Sl, n);
      RatMatrix j = symplectic_j(h);
      s.sigma = [j](const RatMatrix& x) { return j * x.transpose() * j; };
      for (std::size_t i = 0; i + 1 < h; ++i)
        s.cartan.push_back(unit(n, i, i) - unit(n, i + 1, i + 1) + unit(n, h + i, h + i) - unit(n, h + i + 1, h + i + 1));
      return s;
    }
    case Family::SoSo: {
      const std::size_t p = static_cast<std::size_t>(a[0]), n = static_cast<std::size_t>(a[0] + a[1]);
      Setup s = single(MatrixKind::So, n);
      s.sigma = conj(signs(n, range(p, n)));
      for (std::size_t i = 0; i < p; ++i) s.cartan.push_back(unit(n, i, p + i) - unit(n, p + i, i));
      return s;
    }
    case Family::SpSp: {
      const std::size_t h = static_cast<std::size_t>(a[0]), k = static_cast<std::size_t>(a[1]), n = 2 * h;
      Setup s = single(MatrixKind::Sp, n);
      std::vector<std::size_t> neg = range(k, h);
      for (auto i : range(h + k, n)) neg.push_back(i);
      s.sigma = conj(signs(n, neg));
      for (std::size_t i = 0; i < k; ++i)
        s.cartan.push_back(unit(n, i, k + i) + unit(n, k + i, i) - unit(n, h + i, h + k + i) - unit(n, h + k + i, h + i));
      return s;
    }
    case Family::SpGl: {
      const std::size_t h = static_cast<std::size_t>(a[0]), n = 2 * h;
      Setup s = single(MatrixKind::Sp, n);
      s.sigma = conj(signs(n, range(h, n)));
      for (std::size_t i = 0; i < h; ++i) s.cartan.push_back(unit(n, i, h + i) + unit(n, h + i, i));
      return s;
    }
    case Family::SoGl: {
      const std::size_t h = static_cast<std::size_t>(a[0]), n = 2 * h;
      Setup s = single(MatrixKind::So, n);
      RatMatrix j = symplectic_j(h);
      s.sigma = [j](const RatMatrix& x) { return (j * x * j).scaled(-1); };
      for (std::size_t t = 0; 2 * t + 1 < h; ++t) {
        RatMatrix at = unit(h, 2 * t, 2 * t + 1) - unit(h, 2 * t + 1, 2 * t);
        s.cartan.push_back(embed(at, 0, n) - embed(at, h, n));
      }
      return s;
    }
    case Family::Diagonal: {
      auto [kind, m] = classical_matrix({id.factor, a[0]});
      Setup s;
      s.size = 2 * m;
      s.blocks = {{kind, 0, m}, {kind, m, m}};
      for (std::size_t off : {std::size_t{0}, m})
        for (const auto& e : ambient_basis(kind, m)) s.ambient.push_back(embed(e, off, 2 * m));
      s.sigma = [m](const RatMatrix& x) {
        return embed(block(x, m, m), 0, 2 * m) + embed(block(x, 0, m), m, 2 * m);
      };
      for (const auto& t : toral_basis(kind, m)) s.cartan.push_back(embed(t, 0, 2 * m) - embed(t, m, 2 * m));
      return s;
    }
    default: throw UnsupportedError("exceptional symmetric pairs are only available at the diagram level");
  }
}

// Coefficients c_0..c_n of det(x I - m).
std::vector<Rational> char_poly(const RatMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  RatMatrix mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    RatMatrix next = m * mk;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    mk = std::move(next);
    c[n - k] = -(m * mk).trace() / Rational(static_cast<long>(k));
  }
  return c;
}

using UPoly = std::vector<Rational>;  // low degree first

void trim(UPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

UPoly poly_mod(UPoly a, const UPoly& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    Rational f = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    trim(a);
  }
  return a;
}

UPoly poly_div(UPoly a, const UPoly& b) {
  trim(a);
  if (a.size() < b.size()) return {};
  UPoly q(a.size() - b.size() + 1);
  while (a.size() >= b.size() && !a.empty()) {
    Rational f = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    trim(a);
  }
  return q;
}

UPoly poly_gcd(UPoly a, UPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::vector<RatVector> kernel_on(const RatMatrix& map, const std::vector<std::size_t>& cols, std::size_t dim) {
  RatMatrix restricted(map.rows(), cols.size());
  for (std::size_t i = 0; i < map.rows(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) restricted(i, j) = map(i, cols[j]);
  std::vector<RatVector> out;
  for (const auto& k : restricted.kernel()) {
    RatVector v(dim);
    for (std::size_t j = 0; j < cols.size(); ++j) v[cols[j]] = k[j];
    out.push_back(std::move(v));
  }
  return out;
}

// ad(sum_i c_i h_i) restricted to the columns `cols`, with entries linear in c.
PolyMatrix symbolic_ad(const LieAlgebra& g, const std::vector<RatVector>& elems, const std::vector<std::size_t>& cols) {
  const std::size_t r = elems.size();
  std::vector<RatMatrix> ads;
  for (const auto& e : elems) ads.push_back(g.ad(e));
  PolyMatrix m(g.dim(), std::vector<Poly>(cols.size(), Poly(r)));
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) {
      RatVector coeffs(r);
      for (std::size_t t = 0; t < r; ++t) coeffs[t] = ads[t](i, cols[j]);
      m[i][j] = Poly::linear(coeffs);
    }
  return m;
}

}  // namespace

// --- MatrixRealization ---------------------------------------------------------------

MatrixRealization::MatrixRealization(std::size_t size, std::vector<MatrixBlock> blocks, std::vector<RatMatrix> basis)
    : size_(size), blocks_(std::move(blocks)), basis_(std::move(basis)) {
  std::vector<RatVector> rows;
  for (const auto& b : basis_) rows.push_back(flatten(b));
  RatMatrix a = RatMatrix::from_rows(rows);
  RatMatrix reduced = a;
  pivots_ = reduced.rref();
  if (pivots_.size() != basis_.size()) throw CheckError("matrix basis is linearly dependent");
  const std::size_t d = basis_.size();
  RatMatrix pt(d, d);
  for (std::size_t t = 0; t < d; ++t)
    for (std::size_t i = 0; i < d; ++i) pt(t, i) = a(i, pivots_[t]);
  solve_ = inverse(pt);
}

RatMatrix MatrixRealization::element(const RatVector& coords) const {
  RatMatrix m(size_, size_);
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (sgn(coords[i]) != 0) m = m + basis_[i].scaled(coords[i]);
  return m;
}

RatVector MatrixRealization::coordinates(const RatMatrix& m) const {
  RatVector entries(pivots_.size());
  for (std::size_t t = 0; t < pivots_.size(); ++t) entries[t] = m(pivots_[t] / size_, pivots_[t] % size_);
  RatVector c = solve_ * entries;
  if (!(element(c) == m)) throw CheckError("matrix is not in the span of the realization");
  return c;
}

RatMatrix MatrixRealization::trace_form() const {
  const std::size_t d = basis_.size();
  RatMatrix g(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      Rational t = (basis_[i] * basis_[j]).trace();
      g(i, j) = t;
      g(j, i) = t;
    }
  return g;
}

// --- pairs ---------------------------------------------------------------------------

bool is_semisimple_matrix(const RatMatrix& m) {
  UPoly p = char_poly(m);
  UPoly dp;
  for (std::size_t i = 1; i < p.size(); ++i) dp.push_back(p[i] * Rational(static_cast<long>(i)));
  UPoly s = dp.empty() ? p : poly_div(p, poly_gcd(p, dp));
  RatMatrix acc(m.rows(), m.cols());
  for (std::size_t i = s.size(); i-- > 0;) {
    acc = acc * m;
    for (std::size_t r = 0; r < m.rows(); ++r) acc(r, r) += s[i];
  }
  return acc.is_zero();
}

PairRealization build_pair(const PairId& raw) {
  const PairId id = normalized(raw);
  Setup s = setup_for(id);

  Echelon e0, e1;
  std::vector<RatMatrix> g0, g1;
  for (const auto& x : s.ambient) {
    RatMatrix sx = s.sigma(x);
    RatMatrix plus = x + sx, minus = x - sx;
    if (!plus.is_zero() && e0.add(flatten(plus))) g0.push_back(primitive(plus));
    if (!minus.is_zero() && e1.add(flatten(minus))) g1.push_back(primitive(minus));
  }
  if (g0.size() + g1.size() != s.ambient.size()) throw CheckError("eigenspaces do not span the algebra");

  std::vector<std::string> labels;
  if (id.family == Family::SlSo && id.params[0] == 2) {
    labels = {"u", "v", "w"};
  } else {
    for (std::size_t i = 1; i <= g0.size(); ++i) labels.push_back("x" + std::to_string(i));
    for (std::size_t i = 1; i <= g1.size(); ++i) labels.push_back("y" + std::to_string(i));
  }
  std::vector<RatMatrix> basis = g0;
  basis.insert(basis.end(), g1.begin(), g1.end());

  PairRealization pr;
  pr.id = id;
  pr.rep = MatrixRealization(s.size, s.blocks, basis);
  pr.g = LieAlgebra(labels);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      pr.g.set_bracket(i, j, pr.rep.coordinates(commutator(basis[i], basis[j])));
  pr.grading.even = range(0, g0.size());
  pr.grading.odd = range(g0.size(), basis.size());
  pr.sigma.matrix = signs(basis.size(), pr.grading.odd);
  pr.satake = satake_of(id);

  for (const auto& c : s.cartan) {
    RatVector v = pr.rep.coordinates(c);
    for (auto i : pr.grading.even)
      if (sgn(v[i]) != 0) throw CheckError("Cartan subspace element is not in g1");
    if (!is_semisimple_matrix(c)) throw CheckError("Cartan subspace element is not semisimple");
    pr.cartan.push_back(std::move(v));
  }
  for (std::size_t i = 0; i < s.cartan.size(); ++i)
    for (std::size_t j = i + 1; j < s.cartan.size(); ++j)
      if (!commutator(s.cartan[i], s.cartan[j]).is_zero()) throw CheckError("Cartan subspace is not commutative");
  if (static_cast<int>(pr.cartan.size()) != rank(pr.satake))
    throw CheckError("Cartan subspace dimension differs from the diagram rank");
  return pr;
}

LieAlgebra contract(const LieAlgebra& g, const Z2Grading& grading) {
  grading.check(g);
  auto parity = grading.parity(g.dim());
  LieAlgebra k(g.labels());
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j) {
      if (parity[i] == 1 && parity[j] == 1) continue;
      RatVector v(g.dim());
      for (const auto& [t, c] : g.stored(i, j)) v[t] = c;
      k.set_bracket(i, j, v);
    }
  k.check_jacobi();
  return k;
}

RatMatrix kirillov_matrix(const LieAlgebra& q, const RatVector& xi) {
  const std::size_t n = q.dim();
  if (xi.size() != n) throw PreconditionError("covector has the wrong length");
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Rational s = 0;
      for (const auto& [k, c] : q.stored(i, j)) s += c * xi[k];
      m(i, j) = s;
      m(j, i) = -s;
    }
  return m;
}

PolyMatrix kirillov_symbolic(const LieAlgebra& q) {
  const std::size_t n = q.dim();
  PolyMatrix m(n, std::vector<Poly>(n, Poly(n)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      RatVector coeffs(n);
      for (const auto& [k, c] : q.stored(i, j)) coeffs[k] = c;
      m[i][j] = Poly::linear(coeffs);
      m[j][i] = -m[i][j];
    }
  return m;
}

std::size_t index(const LieAlgebra& q, const TermBudget& budget, std::size_t entry_cap_limit) {
  if (q.is_abelian()) return q.dim();
  return q.dim() - symbolic_rank_portfolio(kirillov_symbolic(q), kIndexEntryCap, entry_cap_limit, budget);
}

Rational b_value(const LieAlgebra& q, std::size_t ind) {
  if ((q.dim() + ind) % 2 != 0) throw CheckError("dim + index is odd");
  return Rational(static_cast<long>((q.dim() + ind) / 2));
}

Rational b_value(const LieAlgebra& q) { return b_value(q, index(q)); }

std::vector<RatVector> stabilizer(const LieAlgebra& q, const RatVector& xi) { return kirillov_matrix(q, xi).kernel(); }

bool is_regular(const LieAlgebra& q, const RatVector& xi, std::size_t ind) { return stabilizer(q, xi).size() == ind; }

GradedCentralizer graded_centralizer(const PairRealization& pr, const RatVector& v) {
  for (auto i : pr.grading.even)
    if (sgn(v.at(i)) != 0) throw PreconditionError("vector is not in g1");
  RatMatrix ad = pr.g.ad(v);
  return {kernel_on(ad, pr.grading.even, pr.g.dim()), kernel_on(ad, pr.grading.odd, pr.g.dim())};
}

StabilizerIndexReport check_regular_stabilizer_index(const PairRealization& pr, std::uint64_t seed) {
  StabilizerIndexReport rep;
  rep.seed = seed;
  rep.expected_dim_g1z = rank(pr.satake);
  rep.expected_index_g0z = pr.rank_g() - rep.expected_dim_g1z;
  const std::size_t r = pr.cartan.size();
  const std::size_t generic0 = pr.dim0() - symbolic_rank(symbolic_ad(pr.g, pr.cartan, pr.grading.even));
  const std::size_t generic1 = pr.dim1() - symbolic_rank(symbolic_ad(pr.g, pr.cartan, pr.grading.odd));
  Rng rng(seed);
  for (std::size_t attempt = 1; attempt <= 16; ++attempt) {
    RatVector c = random_vector(r, rng);
    RatVector z(pr.g.dim());
    for (std::size_t t = 0; t < r; ++t)
      for (std::size_t i = 0; i < z.size(); ++i) z[i] += c[t] * pr.cartan[t][i];
    GradedCentralizer gc = graded_centralizer(pr, z);
    if (gc.even.size() != generic0 || gc.odd.size() != generic1) continue;
    rep.z = z;
    rep.attempts = attempt;
    rep.dim_g1z = gc.odd.size();
    rep.index_g0z = gc.even.empty() ? 0 : index(subalgebra(pr.g, gc.even));
    rep.ok = static_cast<int>(rep.dim_g1z) == rep.expected_dim_g1z &&
             static_cast<int>(rep.index_g0z) == rep.expected_index_g0z;
    return rep;
  }
  throw CheckError("no generic point found in the Cartan subspace after 16 attempts");
}

bool coadjoint_check(const PairRealization& pr) {
  const LieAlgebra k = contract(pr.g, pr.grading);
  const RatMatrix gram = pr.rep.trace_form();
  const std::size_t n = pr.g.dim();
  auto parity = pr.grading.parity(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t z = 0; z < n; ++z) {
      // Left side: y -> -B(z, [x, y]_k).
      RatVector lhs(n);
      for (std::size_t y = 0; y < n; ++y)
        for (const auto& [t, c] : k.basis_bracket(x, y)) lhs[y] -= c * gram(z, t);
      // Right side: the element [x0,z0] + [x1,z1] + [x0,z1] paired by B.
      RatVector w(n);
      if (!(parity[x] == 1 && parity[z] == 0))
        for (const auto& [t, c] : pr.g.basis_bracket(x, z)) w[t] += c;
      RatVector rhs = gram * w;
      if (lhs != rhs) return false;
    }
  }
  return true;
}

std::vector<RatVector> cartan_centralizer_g0(const PairRealization& pr) {
  const std::size_t n = pr.g.dim();
  std::vector<RatVector> rows;
  for (const auto& h : pr.cartan) {
    RatMatrix ad = pr.g.ad(h);
    for (std::size_t i = 0; i < n; ++i) rows.push_back(ad.row(i));
  }
  if (rows.empty()) {
    std::vector<RatVector> all;
    for (auto i : pr.grading.even) {
      RatVector v(n);
      v[i] = 1;
      all.push_back(v);
    }
    return all;
  }
  return kernel_on(RatMatrix::from_rows(rows), pr.grading.even, n);
}

}  // namespace z2c
