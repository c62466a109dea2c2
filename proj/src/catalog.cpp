#include "z2c/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <regex>

#include "z2c/error.hpp"

namespace z2c {

namespace {

std::vector<Color> colors_of(std::string_view s) {
  std::vector<Color> c;
  for (char ch : s) c.push_back(ch == 'w' ? Color::White : Color::Black);
  return c;
}

SatakeDiagram make(std::vector<DynkinComponent> comps, std::string_view colors, std::vector<Arrow> arrows = {}) {
  return SatakeDiagram(DynkinGraph(std::move(comps)), colors_of(colors), std::move(arrows));
}

// D_l coloring mapped onto the isomorphic small cases (D3 = A3, D2 = A1 x A1).
SatakeDiagram embed_d(int l, std::string colors, std::vector<Arrow> arrows) {
  if (l >= 4) return make({{DynkinType::D, l}}, colors, arrows);
  if (l == 2) return make({{DynkinType::A, 1}, {DynkinType::A, 1}}, colors, arrows);
  // D3 node 1 is the branch node; it becomes the middle node of A3.
  const int to_a[4] = {0, 2, 1, 3};
  std::string c(3, 'b');
  for (int i = 1; i <= 3; ++i) c[static_cast<std::size_t>(to_a[i] - 1)] = colors[static_cast<std::size_t>(i - 1)];
  for (auto& [a, b] : arrows) {
    a = to_a[a];
    b = to_a[b];
  }
  return make({{DynkinType::A, 3}}, c, arrows);
}

// C_n coloring mapped onto C2 = B2 (nodes swapped) and C1 = A1.
SatakeDiagram embed_c(int n, const std::string& colors) {
  if (n >= 3) return make({{DynkinType::C, n}}, colors);
  if (n == 2) return make({{DynkinType::B, 2}}, std::string{colors[1], colors[0]});
  return make({{DynkinType::A, 1}}, colors);
}

SatakeDiagram orthogonal(int p, int q) {
  const int big_n = p + q;
  if (big_n % 2 == 1) {
    int l = (big_n - 1) / 2;
    std::string c(static_cast<std::size_t>(l), 'b');
    for (int i = 1; i <= std::min(p, l); ++i) c[static_cast<std::size_t>(i - 1)] = 'w';
    if (l == 1) return make({{DynkinType::A, 1}}, c);
    return make({{DynkinType::B, l}}, c);
  }
  int l = big_n / 2;
  std::string c(static_cast<std::size_t>(l), 'b');
  std::vector<Arrow> arrows;
  if (p <= l - 2) {
    for (int i = 1; i <= p; ++i) c[static_cast<std::size_t>(i - 1)] = 'w';
  } else {
    c.assign(static_cast<std::size_t>(l), 'w');
    if (p == l - 1) arrows.emplace_back(l - 1, l);
  }
  return embed_d(l, c, arrows);
}

std::string repeat_name(const std::string& base, int times) {
  if (times <= 0) return "";
  if (times == 1) return base;
  return "(" + base + ")^" + std::to_string(times);
}

std::string join_plus(std::vector<std::string> parts) {
  std::string s;
  for (const auto& p : parts) {
    if (p.empty()) continue;
    if (!s.empty()) s += "+";
    s += p;
  }
  return s.empty() ? "0" : s;
}

std::string classical_name(const DynkinComponent& c) {
  switch (c.type) {
    case DynkinType::A: return "sl" + std::to_string(c.rank + 1);
    case DynkinType::B: return "so" + std::to_string(2 * c.rank + 1);
    case DynkinType::C: return "sp" + std::to_string(2 * c.rank);
    case DynkinType::D: return "so" + std::to_string(2 * c.rank);
    default: return c.name();
  }
}

struct ExceptionalInfo {
  Family family;
  const char* id;
  DynkinComponent type;
  const char* colors;
  std::vector<Arrow> arrows;
};

const std::vector<ExceptionalInfo>& exceptional_table() {
  static const std::vector<ExceptionalInfo> table = {
      {Family::E6Sp8, "E6,sp8", {DynkinType::E, 6}, "wwwwww", {}},
      {Family::E6SlSl, "E6,sl6+sl2", {DynkinType::E, 6}, "wwwwww", {{1, 6}, {3, 5}}},
      {Family::E6So10, "E6,so10+t1", {DynkinType::E, 6}, "wwbbbw", {{1, 6}}},
      {Family::E6F4, "E6,F4", {DynkinType::E, 6}, "wbbbbw", {}},
      {Family::E7Sl8, "E7,sl8", {DynkinType::E, 7}, "wwwwwww", {}},
      {Family::E7So12Sl2, "E7,so12+sl2", {DynkinType::E, 7}, "wbwwbwb", {}},
      {Family::E7E6, "E7,E6+t1", {DynkinType::E, 7}, "wbbbbww", {}},
      {Family::E8So16, "E8,so16", {DynkinType::E, 8}, "wwwwwwww", {}},
      {Family::E8E7Sl2, "E8,E7+sl2", {DynkinType::E, 8}, "wbbbbwww", {}},
      {Family::F4SpSl, "F4,sp6+sl2", {DynkinType::F, 4}, "wwww", {}},
      {Family::F4So9, "F4,so9", {DynkinType::F, 4}, "bbbw", {}},
      {Family::G2SlSl, "G2,sl2+sl2", {DynkinType::G, 2}, "ww", {}},
  };
  return table;
}

const ExceptionalInfo& exceptional(Family f) {
  for (const auto& e : exceptional_table())
    if (e.family == f) return e;
  throw ValidationError("not an exceptional family");
}

void need(bool ok, const std::string& what) {
  if (!ok) throw ValidationError("invalid parameters: " + what);
}

void need_params(const PairId& p, std::size_t count) {
  need(p.params.size() == count, "expected " + std::to_string(count) + " parameter(s) for " + family_id(p));
}

}  // namespace

PairId normalized(PairId p) {
  switch (p.family) {
    case Family::SlSo:
      need_params(p, 1);
      need(p.params[0] >= 2, "(sl_n, so_n) needs n >= 2");
      break;
    case Family::SlGl:
      need_params(p, 2);
      need(p.params[0] >= 2 && p.params[1] >= 1 && p.params[1] < p.params[0], "(sl_n, s(gl_k+gl_n-k)) needs 0 < k < n");
      p.params[1] = std::min(p.params[1], p.params[0] - p.params[1]);
      break;
    case Family::SlSp:
      need_params(p, 1);
      need(p.params[0] >= 2, "(sl_2n, sp_2n) needs n >= 2");
      break;
    case Family::SoSo:
      need_params(p, 2);
      need(p.params[0] >= 1 && p.params[1] >= 1 && p.params[0] + p.params[1] >= 3,
           "(so_p+q, so_p+so_q) needs p, q >= 1 and p+q >= 3");
      if (p.params[0] > p.params[1]) std::swap(p.params[0], p.params[1]);
      break;
    case Family::SpSp:
      need_params(p, 2);
      need(p.params[0] >= 2 && p.params[1] >= 1 && p.params[1] < p.params[0], "(sp_2n, sp_2k+sp_2n-2k) needs 0 < k < n");
      p.params[1] = std::min(p.params[1], p.params[0] - p.params[1]);
      break;
    case Family::SpGl:
      need_params(p, 1);
      need(p.params[0] >= 1, "(sp_2n, gl_n) needs n >= 1");
      break;
    case Family::SoGl:
      need_params(p, 1);
      need(p.params[0] >= 2, "(so_2n, gl_n) needs n >= 2");
      break;
    case Family::Diagonal:
      need_params(p, 1);
      validate_component({p.factor, p.params[0]});
      break;
    default:
      need(p.params.empty(), "exceptional pairs take no parameters");
  }
  if (p.family != Family::Diagonal) p.factor = DynkinType::A;
  return p;
}

std::string family_id(const PairId& p) {
  switch (p.family) {
    case Family::SlSo: return "sl_n/so_n";
    case Family::SlGl: return "sl_n/s(gl_k+gl_n-k)";
    case Family::SlSp: return "sl_2n/sp_2n";
    case Family::SoSo: return "so_p+q/so_p+so_q";
    case Family::SpSp: return "sp_2n/sp_2k+sp_2n-2k";
    case Family::SpGl: return "sp_2n/gl_n";
    case Family::SoGl: return "so_2n/gl_n";
    case Family::Diagonal: return std::string("h+h/diag(") + type_letter(p.factor) + ")";
    default: {
      std::string id = exceptional(p.family).id;
      std::replace(id.begin(), id.end(), ',', '/');
      return id;
    }
  }
}

std::string pair_name(const PairId& p) {
  auto s = [](int v) { return std::to_string(v); };
  const auto& a = p.params;
  switch (p.family) {
    case Family::SlSo: return "(sl" + s(a[0]) + ", so" + s(a[0]) + ")";
    case Family::SlGl: return "(sl" + s(a[0]) + ", s(gl" + s(a[1]) + "+gl" + s(a[0] - a[1]) + "))";
    case Family::SlSp: return "(sl" + s(2 * a[0]) + ", sp" + s(2 * a[0]) + ")";
    case Family::SoSo:
      if (a[0] == 1) return "(so" + s(a[1] + 1) + ", so" + s(a[1]) + ")";
      return "(so" + s(a[0] + a[1]) + ", so" + s(a[0]) + "+so" + s(a[1]) + ")";
    case Family::SpSp: return "(sp" + s(2 * a[0]) + ", sp" + s(2 * a[1]) + "+sp" + s(2 * (a[0] - a[1])) + ")";
    case Family::SpGl: return "(sp" + s(2 * a[0]) + ", gl" + s(a[0]) + ")";
    case Family::SoGl: return "(so" + s(2 * a[0]) + ", gl" + s(a[0]) + ")";
    case Family::Diagonal: {
      std::string h = classical_name({p.factor, a[0]});
      return "(" + h + "+" + h + ", diag)";
    }
    default: return "(" + std::string(exceptional(p.family).id) + ")";
  }
}

DynkinComponent classical_type(std::string_view kind, int size) {
  auto bad = [&] {
    return ValidationError("no simple Lie algebra " + std::string(kind) + std::to_string(size));
  };
  if (kind == "sl") {
    if (size < 2) throw bad();
    return {DynkinType::A, size - 1};
  }
  if (kind == "so") {
    if (size == 3) return {DynkinType::A, 1};
    if (size == 5) return {DynkinType::B, 2};
    if (size == 6) return {DynkinType::A, 3};
    if (size >= 7) return size % 2 ? DynkinComponent{DynkinType::B, (size - 1) / 2} : DynkinComponent{DynkinType::D, size / 2};
    throw bad();
  }
  if (kind == "sp") {
    if (size < 2 || size % 2) throw bad();
    if (size == 2) return {DynkinType::A, 1};
    if (size == 4) return {DynkinType::B, 2};
    return {DynkinType::C, size / 2};
  }
  throw bad();
}

PairId parse_pair(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);

  for (const auto& e : exceptional_table()) {
    std::string id = e.id;
    std::transform(id.begin(), id.end(), id.begin(), [](unsigned char c) { return std::tolower(c); });
    if (s == id) return PairId{e.family, {}};
  }

  std::smatch m;
  auto num = [&](std::size_t i) { return std::stoi(m[i].str()); };
  static const std::regex sl_so(R"(sl(\d+),so(\d+))");
  static const std::regex sl_gl(R"(sl(\d+),gl(\d+))");
  static const std::regex sl_sgl(R"(sl(\d+),s\(gl(\d+)\+gl(\d+)\))");
  static const std::regex sl_sp(R"(sl(\d+),sp(\d+))");
  static const std::regex so_soso(R"(so(\d+),so(\d+)\+so(\d+))");
  static const std::regex so_gl(R"(so(\d+),gl(\d+))");
  static const std::regex sp_spsp(R"(sp(\d+),sp(\d+)\+sp(\d+))");
  static const std::regex sp_gl(R"(sp(\d+),gl(\d+))");
  static const std::regex diag(R"(([a-z]+)(\d+)\+([a-z]+)(\d+),(diag|([a-z]+)(\d+)))");

  auto mismatch = [&] { return ValidationError("inconsistent sizes in pair '" + std::string(text) + "'"); };
  try {
    if (std::regex_match(s, m, sl_so)) {
      if (num(1) != num(2)) throw mismatch();
      return normalized({Family::SlSo, {num(1)}});
    }
    if (std::regex_match(s, m, sl_gl)) return normalized({Family::SlGl, {num(1), num(2)}});
    if (std::regex_match(s, m, sl_sgl)) {
      if (num(2) + num(3) != num(1)) throw mismatch();
      return normalized({Family::SlGl, {num(1), num(2)}});
    }
    if (std::regex_match(s, m, sl_sp)) {
      if (num(1) != num(2) || num(1) % 2) throw mismatch();
      return normalized({Family::SlSp, {num(1) / 2}});
    }
    static const std::regex so_so(R"(so(\d+),so(\d+))");
    if (std::regex_match(s, m, so_so)) {
      if (num(2) + 1 != num(1)) throw mismatch();
      return normalized({Family::SoSo, {1, num(2)}});
    }
    if (std::regex_match(s, m, so_soso)) {
      if (num(2) + num(3) != num(1)) throw mismatch();
      return normalized({Family::SoSo, {num(2), num(3)}});
    }
    if (std::regex_match(s, m, so_gl)) {
      if (num(1) != 2 * num(2)) throw mismatch();
      return normalized({Family::SoGl, {num(2)}});
    }
    if (std::regex_match(s, m, sp_spsp)) {
      if (num(2) + num(3) != num(1) || num(1) % 2 || num(2) % 2) throw mismatch();
      return normalized({Family::SpSp, {num(1) / 2, num(2) / 2}});
    }
    if (std::regex_match(s, m, sp_gl)) {
      if (num(1) != 2 * num(2)) throw mismatch();
      return normalized({Family::SpGl, {num(2)}});
    }
    static const std::regex exc_diag(R"(([efg]\d)\+([efg]\d),(diag|[efg]\d))");
    if (std::regex_match(s, m, exc_diag)) {
      if (m[1] != m[2] || (m[3] != "diag" && m[3] != m[1])) throw mismatch();
      std::string t = m[1].str();
      DynkinType type = t[0] == 'e' ? DynkinType::E : t[0] == 'f' ? DynkinType::F : DynkinType::G;
      return normalized({Family::Diagonal, {t[1] - '0'}, type});
    }
    if (std::regex_match(s, m, diag)) {
      if (m[1] != m[3] || m[2] != m[4]) throw mismatch();
      if (m[5] != "diag" && (m[6] != m[1] || m[7] != m[2])) throw mismatch();
      auto t = classical_type(m[1].str(), num(2));
      return normalized({Family::Diagonal, {t.rank}, t.type});
    }
  } catch (const std::out_of_range&) {
    throw ParseError("number too large in pair '" + std::string(text) + "'", 0);
  }
  throw ParseError("unrecognized symmetric pair '" + std::string(text) + "'", 0);
}

SatakeDiagram satake_of(const PairId& pair) {
  const PairId p = normalized(pair);
  const auto& a = p.params;
  switch (p.family) {
    case Family::SlSo:
      return make({{DynkinType::A, a[0] - 1}}, std::string(static_cast<std::size_t>(a[0] - 1), 'w'));
    case Family::SlGl: {
      const int n = a[0], k = a[1];
      std::string c(static_cast<std::size_t>(n - 1), 'b');
      std::vector<Arrow> arrows;
      for (int i = 1; i <= k; ++i) {
        c[static_cast<std::size_t>(i - 1)] = 'w';
        c[static_cast<std::size_t>(n - i - 1)] = 'w';
        if (i != n - i) arrows.emplace_back(i, n - i);
      }
      return make({{DynkinType::A, n - 1}}, c, arrows);
    }
    case Family::SlSp: {
      std::string c;
      for (int i = 1; i <= 2 * a[0] - 1; ++i) c += i % 2 ? 'b' : 'w';
      return make({{DynkinType::A, 2 * a[0] - 1}}, c);
    }
    case Family::SoSo: return orthogonal(a[0], a[1]);
    case Family::SpSp: {
      std::string c(static_cast<std::size_t>(a[0]), 'b');
      for (int i = 1; i <= a[1]; ++i) c[static_cast<std::size_t>(2 * i - 1)] = 'w';
      return embed_c(a[0], c);
    }
    case Family::SpGl: return embed_c(a[0], std::string(static_cast<std::size_t>(a[0]), 'w'));
    case Family::SoGl: {
      const int l = a[0];
      std::string c(static_cast<std::size_t>(l), 'b');
      for (int i = 2; i <= l - 2; i += 2) c[static_cast<std::size_t>(i - 1)] = 'w';
      std::vector<Arrow> arrows;
      c[static_cast<std::size_t>(l - 1)] = 'w';
      if (l % 2 == 1) {
        c[static_cast<std::size_t>(l - 2)] = 'w';
        arrows.emplace_back(l - 1, l);
      }
      return embed_d(l, c, arrows);
    }
    case Family::Diagonal: {
      const int r = a[0];
      std::vector<Arrow> arrows;
      for (int i = 1; i <= r; ++i) arrows.emplace_back(i, r + i);
      return make({{p.factor, r}, {p.factor, r}}, std::string(static_cast<std::size_t>(2 * r), 'w'), arrows);
    }
    default: {
      const auto& e = exceptional(p.family);
      return make({e.type}, e.colors, e.arrows);
    }
  }
}

int algebra_rank(const PairId& pair) { return satake_of(pair).size(); }

PairId maximal_rank_pair(const DynkinComponent& c) {
  validate_component(c);
  switch (c.type) {
    case DynkinType::A: return {Family::SlSo, {c.rank + 1}};
    case DynkinType::B: return {Family::SoSo, {c.rank, c.rank + 1}};
    case DynkinType::C: return {Family::SpGl, {c.rank}};
    case DynkinType::D: return {Family::SoSo, {c.rank, c.rank}};
    case DynkinType::E: return {c.rank == 6 ? Family::E6Sp8 : c.rank == 7 ? Family::E7Sl8 : Family::E8So16, {}};
    case DynkinType::F: return {Family::F4SpSl, {}};
    case DynkinType::G: return {Family::G2SlSl, {}};
  }
  throw ValidationError("unknown Dynkin type");
}

std::string list_name(CatalogList list) {
  switch (list) {
    case CatalogList::Codim3Table: return "codim3";
    case CatalogList::NRegular: return "n_regular";
    case CatalogList::Remaining: return "remaining";
    case CatalogList::MaximalRank: return "maximal_rank";
  }
  return "";
}

std::vector<CatalogEntry> codim3_table(int max_rank) {
  std::vector<CatalogEntry> out;
  auto add = [&](PairId p, int row, int rank, std::string r) {
    p = normalized(std::move(p));
    if (algebra_rank(p) <= max_rank) out.push_back({p, CatalogList::Codim3Table, row, rank, std::nullopt, std::move(r)});
  };
  for (int n = 3; n <= max_rank + 1; ++n)
    for (int k = 1; 2 * k < n; ++k)
      add({Family::SlGl, {n, k}}, 1, k,
          join_plus({n - 2 * k >= 2 ? "sl" + std::to_string(n - 2 * k) : "", "t" + std::to_string(k)}));
  for (int n = 2; 2 * n - 1 <= max_rank; ++n) add({Family::SlSp, {n}}, 2, n - 1, repeat_name("sl2", n));
  for (int n = 2; 2 * n + 1 <= max_rank; ++n) add({Family::SoGl, {2 * n + 1}}, 3, n, repeat_name("sl2", n) + "+t1");
  for (int n = 5; n / 2 <= max_rank; ++n)
    add({Family::SoSo, {1, n - 1}}, 4, 1, "so" + std::to_string(n - 2));
  for (int n = 2; n <= max_rank; ++n)
    for (int k = 1; k <= n - k; ++k)
      add({Family::SpSp, {n, k}}, 5, k, join_plus({repeat_name("sl2", k), 2 * n - 4 * k > 0 ? "sp" + std::to_string(2 * n - 4 * k) : ""}));
  add({Family::E6F4, {}}, 6, 2, "so8");
  add({Family::E6So10, {}}, 7, 2, "sl4+t1");
  add({Family::F4So9, {}}, 8, 1, "so7");
  return out;
}

std::vector<CatalogEntry> n_regular_list(int max_rank) {
  std::vector<CatalogEntry> out;
  auto add = [&](PairId p, int row, int rank, int m) {
    p = normalized(std::move(p));
    if (algebra_rank(p) <= max_rank) out.push_back({p, CatalogList::NRegular, row, rank, m, ""});
  };
  for (int s = 2; s - 1 <= max_rank; ++s) add({Family::SlGl, {s, s / 2}}, 1, s / 2, s / 2);
  for (int n = 1; n + 1 <= max_rank; ++n) add({Family::SoSo, {n, n + 2}}, 2, n, 1);
  add({Family::E6SlSl, {}}, 3, 4, 2);
  const std::vector<DynkinType> types{DynkinType::A, DynkinType::B, DynkinType::C, DynkinType::D,
                                      DynkinType::E, DynkinType::F, DynkinType::G};
  for (auto t : types) {
    for (int r = 1; 2 * r <= max_rank; ++r) {
      try {
        validate_component({t, r});
      } catch (const ValidationError&) {
        continue;
      }
      add({Family::Diagonal, {r}, t}, 4, r, r);
    }
  }
  return out;
}

std::vector<CatalogEntry> remaining_list(int max_rank) {
  std::vector<CatalogEntry> out;
  auto add = [&](PairId p, int row, int rank) {
    p = normalized(std::move(p));
    if (algebra_rank(p) <= max_rank) out.push_back({p, CatalogList::Remaining, row, rank, std::nullopt, ""});
  };
  for (int n = 2; 2 * n <= max_rank; ++n) add({Family::SoGl, {2 * n}}, 1, n);
  for (int m = 2; m <= max_rank; ++m)
    for (int n = m + 3; (m + n) / 2 <= max_rank; ++n) add({Family::SoSo, {m, n}}, 2, m);
  add({Family::E7E6, {}}, 3, 3);
  add({Family::E7So12Sl2, {}}, 4, 4);
  add({Family::E8E7Sl2, {}}, 5, 4);
  return out;
}

std::vector<CatalogEntry> maximal_rank_list(int max_rank) {
  std::vector<CatalogEntry> out;
  const std::vector<DynkinType> types{DynkinType::A, DynkinType::B, DynkinType::C, DynkinType::D,
                                      DynkinType::E, DynkinType::F, DynkinType::G};
  int row = 0;
  for (auto t : types) {
    for (int r = 1; r <= max_rank; ++r) {
      try {
        validate_component({t, r});
      } catch (const ValidationError&) {
        continue;
      }
      out.push_back({normalized(maximal_rank_pair({t, r})), CatalogList::MaximalRank, ++row, r, 0, ""});
    }
  }
  return out;
}

std::vector<PairId> instances_with_nodes(int nodes) {
  std::vector<PairId> out;
  if (nodes < 1) return out;
  const int n = nodes;
  out.push_back({Family::SlSo, {n + 1}});
  for (int k = 1; 2 * k <= n + 1; ++k) out.push_back({Family::SlGl, {n + 1, k}});
  if (n % 2 == 1 && n >= 3) out.push_back({Family::SlSp, {(n + 1) / 2}});
  if (n >= 2) out.push_back({Family::SoGl, {n}});
  std::vector<int> so_sizes = n == 1 ? std::vector<int>{3} : std::vector<int>{2 * n, 2 * n + 1};
  for (int big_n : so_sizes)
    for (int p = 1; 2 * p <= big_n; ++p) out.push_back({Family::SoSo, {p, big_n - p}});
  for (int k = 1; 2 * k <= n && n >= 2; ++k) out.push_back({Family::SpSp, {n, k}});
  out.push_back({Family::SpGl, {n}});
  for (const auto& e : exceptional_table())
    if (e.type.rank == n) out.push_back({e.family, {}});
  if (n % 2 == 0) {
    const std::vector<DynkinType> types{DynkinType::A, DynkinType::B, DynkinType::C, DynkinType::D,
                                        DynkinType::E, DynkinType::F, DynkinType::G};
    for (auto t : types) {
      try {
        validate_component({t, n / 2});
      } catch (const ValidationError&) {
        continue;
      }
      out.push_back({Family::Diagonal, {n / 2}, t});
    }
  }
  std::vector<PairId> result;
  for (auto& p : out) {
    p = normalized(p);
    if (satake_of(p).size() == nodes && std::find(result.begin(), result.end(), p) == result.end()) result.push_back(p);
  }
  return result;
}

Classification classify(const SatakeDiagram& d) {
  if (d.empty() || !is_connected(d)) throw PreconditionError("classify requires a non-empty connected diagram");
  Classification c;
  const std::string key = canonical_key(d);
  for (const auto& p : instances_with_nodes(d.size()))
    if (canonical_key(satake_of(p)) == key) c.matches.push_back(p);
  if (!c.matches.empty()) c.family = c.matches.front();
  c.rank = rank(d);
  c.codim3 = has_codim3(d);
  c.n_regular = is_n_regular(d);
  if (c.n_regular) c.m = static_cast<int>(d.arrows().size());
  return c;
}

nlohmann::ordered_json to_json(const Classification& c) {
  nlohmann::ordered_json j;
  j["family"] = c.family ? family_id(*c.family) : "unrecognized";
  j["params"] = c.family ? c.family->params : std::vector<int>{};
  j["rank"] = c.rank;
  j["codim3"] = c.codim3;
  j["n_regular"] = c.n_regular;
  j["m"] = c.m ? nlohmann::ordered_json(*c.m) : nlohmann::ordered_json(nullptr);
  return j;
}

}  // namespace z2c
