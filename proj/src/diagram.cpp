#include "z2c/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <tuple>
#include <unordered_set>

#include "z2c/error.hpp"

namespace z2c {

char type_letter(DynkinType t) {
  return "ABCDEFG"[static_cast<int>(t)];
}

std::string DynkinComponent::name() const {
  return std::string(1, type_letter(type)) + std::to_string(rank);
}

void validate_component(const DynkinComponent& c) {
  bool ok = false;
  switch (c.type) {
    case DynkinType::A: ok = c.rank >= 1; break;
    case DynkinType::B: ok = c.rank >= 2; break;
    case DynkinType::C: ok = c.rank >= 3; break;
    case DynkinType::D: ok = c.rank >= 4; break;
    case DynkinType::E: ok = c.rank >= 6 && c.rank <= 8; break;
    case DynkinType::F: ok = c.rank == 4; break;
    case DynkinType::G: ok = c.rank == 2; break;
  }
  if (!ok) throw ValidationError("invalid rank for Dynkin type: " + c.name());
}

std::vector<DynkinEdge> bourbaki_edges(const DynkinComponent& c) {
  validate_component(c);
  std::vector<DynkinEdge> e;
  const int n = c.rank;
  auto simple = [&](int a, int b) { e.push_back({std::min(a, b), std::max(a, b), 1, 0}); };
  switch (c.type) {
    case DynkinType::A:
      for (int i = 1; i < n; ++i) simple(i, i + 1);
      break;
    case DynkinType::B:
      for (int i = 1; i + 1 < n; ++i) simple(i, i + 1);
      e.push_back({n - 1, n, 2, n});
      break;
    case DynkinType::C:
      for (int i = 1; i + 1 < n; ++i) simple(i, i + 1);
      e.push_back({n - 1, n, 2, n - 1});
      break;
    case DynkinType::D:
      for (int i = 1; i + 1 < n; ++i) simple(i, i + 1);
      simple(n - 2, n);
      break;
    case DynkinType::E:
      simple(1, 3);
      simple(2, 4);
      for (int i = 3; i < n; ++i) simple(i, i + 1);
      break;
    case DynkinType::F:
      simple(1, 2);
      e.push_back({2, 3, 2, 3});
      simple(3, 4);
      break;
    case DynkinType::G:
      e.push_back({1, 2, 3, 1});
      break;
  }
  std::sort(e.begin(), e.end(), [](const DynkinEdge& x, const DynkinEdge& y) {
    return std::tie(x.a, x.b) < std::tie(y.a, y.b);
  });
  return e;
}

DynkinGraph::DynkinGraph(std::vector<DynkinComponent> components) : components_(std::move(components)) {
  for (const auto& c : components_) {
    validate_component(c);
    offsets_.push_back(size_);
    for (auto edge : bourbaki_edges(c)) {
      edge.a += size_;
      edge.b += size_;
      if (edge.toward != 0) edge.toward += size_;
      edges_.push_back(edge);
    }
    size_ += c.rank;
  }
  adjacency_.assign(static_cast<std::size_t>(size_), {});
  for (const auto& edge : edges_) {
    adjacency_[static_cast<std::size_t>(edge.a - 1)].push_back(edge.b);
    adjacency_[static_cast<std::size_t>(edge.b - 1)].push_back(edge.a);
  }
  for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());
}

std::size_t DynkinGraph::component_of(int node) const {
  if (node < 1 || node > size_) throw std::out_of_range("node id out of range");
  auto it = std::upper_bound(offsets_.begin(), offsets_.end(), node - 1);
  return static_cast<std::size_t>(it - offsets_.begin()) - 1;
}

std::string DynkinGraph::label() const {
  if (components_.empty()) return "empty";
  std::string s;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i) s += " x ";
    s += components_[i].name();
  }
  return s;
}

// --- SatakeDiagram -------------------------------------------------------------

SatakeDiagram::SatakeDiagram(DynkinGraph graph, std::vector<Color> colors, std::vector<Arrow> arrows)
    : graph_(std::move(graph)), colors_(std::move(colors)) {
  const int n = graph_.size();
  if (static_cast<int>(colors_.size()) != n)
    throw ValidationError("color string length " + std::to_string(colors_.size()) +
                          " does not match the number of nodes " + std::to_string(n));
  partner_.assign(static_cast<std::size_t>(n), 0);
  for (auto [a, b] : arrows) {
    if (a < 1 || a > n || b < 1 || b > n)
      throw ValidationError("arrow endpoint out of range: (" + std::to_string(a) + "," + std::to_string(b) + ")");
    if (a == b) throw ValidationError("arrow joins a node to itself: " + std::to_string(a));
    if (a > b) std::swap(a, b);
    for (int v : {a, b}) {
      if (!is_white(v)) throw ValidationError("arrow endpoint is black: node " + std::to_string(v));
      if (partner_[static_cast<std::size_t>(v - 1)] != 0)
        throw ValidationError("node " + std::to_string(v) + " belongs to more than one arrow");
    }
    partner_[static_cast<std::size_t>(a - 1)] = b;
    partner_[static_cast<std::size_t>(b - 1)] = a;
    arrows_.emplace_back(a, b);
  }
  std::sort(arrows_.begin(), arrows_.end());
}

int SatakeDiagram::white_count() const {
  return static_cast<int>(std::count(colors_.begin(), colors_.end(), Color::White));
}

int SatakeDiagram::black_count() const { return size() - white_count(); }

std::string SatakeDiagram::colors_string() const {
  std::string s;
  for (Color c : colors_) s += c == Color::White ? 'w' : 'b';
  return s;
}

std::string SatakeDiagram::to_dsl() const {
  if (empty()) return "empty";
  std::string s = graph_.label() + " colors=" + colors_string() + " arrows=[";
  for (std::size_t i = 0; i < arrows_.size(); ++i) {
    if (i) s += ',';
    s += '(' + std::to_string(arrows_[i].first) + ',' + std::to_string(arrows_[i].second) + ')';
  }
  return s + ']';
}

bool SatakeDiagram::operator==(const SatakeDiagram& rhs) const {
  return graph_ == rhs.graph_ && colors_ == rhs.colors_ && arrows_ == rhs.arrows_;
}

// --- DSL -----------------------------------------------------------------------

namespace {

class DslParser {
public:
  explicit DslParser(std::string_view text) : s_(text) {}

  SatakeDiagram parse() {
    skip_ws();
    if (s_.substr(pos_).starts_with("empty")) {
      pos_ += 5;
      skip_ws();
      if (pos_ != s_.size()) fail("unexpected trailing input");
      return {};
    }
    std::vector<DynkinComponent> comps;
    comps.push_back(component());
    while (true) {
      skip_ws();
      if (pos_ < s_.size() && (s_[pos_] == 'x' || s_[pos_] == '*')) {
        ++pos_;
        skip_ws();
        comps.push_back(component());
      } else {
        break;
      }
    }
    expect_keyword("colors=");
    std::vector<Color> colors;
    while (pos_ < s_.size() && (s_[pos_] == 'w' || s_[pos_] == 'b')) {
      colors.push_back(s_[pos_] == 'w' ? Color::White : Color::Black);
      ++pos_;
    }
    if (pos_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[pos_])))
      fail("color string may only contain 'w' and 'b'");
    skip_ws();
    expect_keyword("arrows=");
    std::vector<Arrow> arrows;
    expect('[');
    skip_ws();
    if (peek() != ']') {
      while (true) {
        skip_ws();
        expect('(');
        skip_ws();
        int a = integer();
        skip_ws();
        expect(',');
        skip_ws();
        int b = integer();
        skip_ws();
        expect(')');
        arrows.emplace_back(a, b);
        skip_ws();
        if (peek() == ',') {
          ++pos_;
          continue;
        }
        break;
      }
    }
    skip_ws();
    expect(']');
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return SatakeDiagram(DynkinGraph(std::move(comps)), std::move(colors), std::move(arrows));
  }

private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void expect_keyword(std::string_view kw) {
    if (!s_.substr(pos_).starts_with(kw)) fail("expected '" + std::string(kw) + "'");
    pos_ += kw.size();
  }

  int integer() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    if (pos_ - start > 6) {
      pos_ = start;
      fail("integer too large");
    }
    return std::stoi(std::string(s_.substr(start, pos_ - start)));
  }

  DynkinComponent component() {
    std::size_t start = pos_;
    static const std::string letters = "ABCDEFG";
    auto k = letters.find(peek());
    if (peek() == '\0' || k == std::string::npos) fail("expected a Dynkin type letter A-G");
    ++pos_;
    DynkinComponent c{static_cast<DynkinType>(k), integer()};
    try {
      validate_component(c);
    } catch (const ValidationError&) {
      pos_ = start;
      throw;
    }
    return c;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

SatakeDiagram parse_satake(std::string_view text) { return DslParser(text).parse(); }

nlohmann::json to_json(const SatakeDiagram& d) {
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& c : d.graph().components())
    comps.push_back({{"type", std::string(1, type_letter(c.type))}, {"rank", c.rank}});
  nlohmann::json arrows = nlohmann::json::array();
  for (auto [a, b] : d.arrows()) arrows.push_back({a, b});
  nlohmann::json j;
  j["components"] = comps;
  j["colors"] = d.colors_string();
  j["arrows"] = arrows;
  return j;
}

SatakeDiagram satake_from_json(const nlohmann::json& j) {
  try {
    std::vector<DynkinComponent> comps;
    for (const auto& c : j.at("components")) {
      std::string t = c.at("type").get<std::string>();
      static const std::string letters = "ABCDEFG";
      if (t.size() != 1 || letters.find(t[0]) == std::string::npos)
        throw ValidationError("unknown Dynkin type: " + t);
      comps.push_back({static_cast<DynkinType>(letters.find(t[0])), c.at("rank").get<int>()});
    }
    std::vector<Color> colors;
    for (char ch : j.at("colors").get<std::string>()) {
      if (ch != 'w' && ch != 'b') throw ValidationError("color string may only contain 'w' and 'b'");
      colors.push_back(ch == 'w' ? Color::White : Color::Black);
    }
    std::vector<Arrow> arrows;
    for (const auto& a : j.at("arrows")) {
      if (!a.is_array() || a.size() != 2) throw ValidationError("arrow must be a pair of node ids");
      arrows.emplace_back(a[0].get<int>(), a[1].get<int>());
    }
    return SatakeDiagram(DynkinGraph(std::move(comps)), std::move(colors), std::move(arrows));
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed diagram JSON: ") + e.what());
  }
}

// --- component identification ----------------------------------------------------

namespace {

struct LocalEdge {
  int bond = 1;
  int toward = 0;  // parent node id or 0
};

// Induced Dynkin structure on a subset of the nodes of a parent graph.
struct SubGraph {
  std::map<std::pair<int, int>, LocalEdge> edges;  // key (a,b), a<b, parent ids
  std::map<int, std::vector<int>> adj;

  const LocalEdge* edge(int a, int b) const {
    auto it = edges.find({std::min(a, b), std::max(a, b)});
    return it == edges.end() ? nullptr : &it->second;
  }
};

SubGraph induced_graph(const DynkinGraph& g, const std::vector<int>& nodes) {
  SubGraph sg;
  std::set<int> in(nodes.begin(), nodes.end());
  for (int v : nodes) sg.adj[v];
  for (const auto& e : g.edges()) {
    if (in.count(e.a) && in.count(e.b)) {
      sg.edges[{e.a, e.b}] = {e.bond, e.toward};
      sg.adj[e.a].push_back(e.b);
      sg.adj[e.b].push_back(e.a);
    }
  }
  return sg;
}

// Type of a connected induced Dynkin subgraph.
DynkinComponent identify(const SubGraph& sg, const std::vector<int>& nodes) {
  const int n = static_cast<int>(nodes.size());
  if (n == 1) return {DynkinType::A, 1};
  const std::set<int> in(nodes.begin(), nodes.end());
  std::vector<std::pair<std::pair<int, int>, LocalEdge>> edges;
  for (const auto& [key, e] : sg.edges)
    if (in.count(key.first)) edges.emplace_back(key, e);
  for (const auto& [key, e] : edges) {
    if (e.bond == 3) return {DynkinType::G, 2};
  }
  for (const auto& [key, e] : edges) {
    if (e.bond != 2) continue;
    if (n == 2) return {DynkinType::B, 2};
    auto deg = [&](int v) { return static_cast<int>(sg.adj.at(v).size()); };
    int a = key.first, b = key.second;
    if (deg(a) == 2 && deg(b) == 2) return {DynkinType::F, 4};
    int leaf = deg(a) == 1 ? a : b;
    return {e.toward == leaf ? DynkinType::B : DynkinType::C, n};
  }
  for (int v : nodes) {
    if (sg.adj.at(v).size() != 3) continue;
    std::vector<int> arms;
    for (int start : sg.adj.at(v)) {
      int len = 1, prev = v, cur = start;
      while (true) {
        int next = 0;
        for (int w : sg.adj.at(cur))
          if (w != prev) next = w;
        if (next == 0) break;
        prev = cur;
        cur = next;
        ++len;
      }
      arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1) return {DynkinType::D, n};
    return {DynkinType::E, n};
  }
  return {DynkinType::A, n};
}

// All bijections std-node (1..rank) -> parent node preserving edges, bonds and
// directions; result[k][i-1] is the image of Bourbaki node i.
std::vector<std::vector<int>> labelings(const SubGraph& sg, const std::vector<int>& nodes,
                                        const DynkinComponent& type) {
  const int n = type.rank;
  std::vector<std::vector<int>> std_adj(static_cast<std::size_t>(n) + 1);
  std::map<std::pair<int, int>, DynkinEdge> std_edges;
  for (const auto& e : bourbaki_edges(type)) {
    std_adj[static_cast<std::size_t>(e.a)].push_back(e.b);
    std_adj[static_cast<std::size_t>(e.b)].push_back(e.a);
    std_edges[{e.a, e.b}] = e;
  }
  std::vector<std::vector<int>> out;
  std::vector<int> image(static_cast<std::size_t>(n) + 1, 0);
  std::set<int> used;

  auto consistent = [&](int i, int v) {
    if (sg.adj.at(v).size() != std_adj[static_cast<std::size_t>(i)].size()) return false;
    for (int j = 1; j < i; ++j) {
      int w = image[static_cast<std::size_t>(j)];
      auto se = std_edges.find({j, i});
      const LocalEdge* pe = sg.edge(v, w);
      if ((se == std_edges.end()) != (pe == nullptr)) return false;
      if (pe == nullptr) continue;
      const DynkinEdge& e = se->second;
      if (e.bond != pe->bond) return false;
      if (e.toward != 0) {
        int expected = e.toward == i ? v : w;
        if (pe->toward != expected) return false;
      }
    }
    return true;
  };

  auto rec = [&](auto&& self, int i) -> void {
    if (i > n) {
      out.emplace_back(image.begin() + 1, image.end());
      return;
    }
    for (int v : nodes) {
      if (used.count(v) || !consistent(i, v)) continue;
      image[static_cast<std::size_t>(i)] = v;
      used.insert(v);
      self(self, i + 1);
      used.erase(v);
    }
  };
  rec(rec, 1);
  return out;
}

std::vector<std::vector<int>> dynkin_components(const SubGraph& sg) {
  std::vector<std::vector<int>> comps;
  std::set<int> seen;
  for (const auto& [v, adj] : sg.adj) {
    if (seen.count(v)) continue;
    std::vector<int> comp{v}, stack{v};
    seen.insert(v);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : sg.adj.at(u)) {
        if (seen.insert(w).second) {
          comp.push_back(w);
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  std::sort(comps.begin(), comps.end());
  return comps;
}

// Builds a diagram from an ordered list of (type, parent node per Bourbaki id).
SatakeDiagram assemble(const SatakeDiagram& parent,
                       const std::vector<std::pair<DynkinComponent, std::vector<int>>>& parts) {
  std::vector<DynkinComponent> comps;
  std::map<int, int> renumber;
  std::vector<Color> colors;
  int next = 1;
  for (const auto& [type, image] : parts) {
    comps.push_back(type);
    for (int v : image) {
      renumber[v] = next++;
      colors.push_back(parent.colors()[static_cast<std::size_t>(v - 1)]);
    }
  }
  std::vector<Arrow> arrows;
  for (auto [a, b] : parent.arrows()) {
    auto ia = renumber.find(a), ib = renumber.find(b);
    if (ia != renumber.end() && ib != renumber.end()) arrows.emplace_back(ia->second, ib->second);
  }
  return SatakeDiagram(DynkinGraph(std::move(comps)), std::move(colors), std::move(arrows));
}

bool type_less(const DynkinComponent& x, const DynkinComponent& y) {
  return std::make_pair(static_cast<int>(x.type), x.rank) < std::make_pair(static_cast<int>(y.type), y.rank);
}

}  // namespace

SatakeDiagram induced_subdiagram(const SatakeDiagram& d, const std::vector<bool>& keep) {
  std::vector<int> nodes;
  for (int v = 1; v <= d.size(); ++v)
    if (keep.at(static_cast<std::size_t>(v - 1))) nodes.push_back(v);
  SubGraph sg = induced_graph(d.graph(), nodes);
  std::vector<std::pair<DynkinComponent, std::vector<int>>> parts;
  for (const auto& comp : dynkin_components(sg)) {
    DynkinComponent type = identify(sg, comp);
    auto labs = labelings(sg, comp, type);
    if (labs.empty()) throw CheckError("failed to label induced Dynkin component " + type.name());
    parts.emplace_back(type, labs.front());
  }
  return assemble(d, parts);
}

// --- canonical form ---------------------------------------------------------------

namespace {

struct Encoding {
  std::string colors;
  std::vector<Arrow> arrows;
  bool operator<(const Encoding& o) const { return std::tie(colors, arrows) < std::tie(o.colors, o.arrows); }
};

Encoding encode(const SatakeDiagram& d, const std::vector<int>& order) {
  std::map<int, int> pos;
  Encoding e;
  for (std::size_t i = 0; i < order.size(); ++i) {
    pos[order[i]] = static_cast<int>(i) + 1;
    e.colors += d.is_white(order[i]) ? 'w' : 'b';
  }
  for (auto [a, b] : d.arrows()) {
    auto ia = pos.find(a);
    if (ia == pos.end()) continue;
    int x = ia->second, y = pos.at(b);
    e.arrows.emplace_back(std::min(x, y), std::max(x, y));
  }
  std::sort(e.arrows.begin(), e.arrows.end());
  return e;
}

}  // namespace

SatakeDiagram canonical(const SatakeDiagram& d) {
  if (d.empty()) return d;
  const auto& g = d.graph();
  const std::size_t nc = g.components().size();

  // Automorphism-labelings of each component.
  std::vector<std::vector<std::vector<int>>> labs(nc);
  for (std::size_t c = 0; c < nc; ++c) {
    std::vector<int> nodes(static_cast<std::size_t>(g.components()[c].rank));
    std::iota(nodes.begin(), nodes.end(), g.offset(c) + 1);
    labs[c] = labelings(induced_graph(g, nodes), nodes, g.components()[c]);
  }

  // Components linked by arrows form pieces.
  std::vector<std::size_t> root(nc);
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](std::size_t x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  for (auto [a, b] : d.arrows()) root[find(g.component_of(a))] = find(g.component_of(b));
  std::map<std::size_t, std::vector<std::size_t>> pieces;
  for (std::size_t c = 0; c < nc; ++c) pieces[find(c)].push_back(c);

  struct Best {
    std::vector<DynkinComponent> types;
    Encoding enc;
    std::vector<std::pair<DynkinComponent, std::vector<int>>> parts;
  };
  std::vector<Best> bests;
  for (auto& [r, comps] : pieces) {
    std::stable_sort(comps.begin(), comps.end(), [&](std::size_t x, std::size_t y) {
      return type_less(g.components()[x], g.components()[y]);
    });
    std::optional<Best> best;
    std::vector<std::size_t> perm = comps;
    // Permute only within runs of equal type: iterate over all permutations of
    // `perm` and skip those that break the type ordering.
    std::sort(perm.begin(), perm.end());
    do {
      bool sorted_types = true;
      for (std::size_t i = 1; i < perm.size(); ++i)
        if (type_less(g.components()[perm[i]], g.components()[perm[i - 1]])) sorted_types = false;
      if (!sorted_types) continue;
      std::vector<std::size_t> choice(perm.size(), 0);
      while (true) {
        std::vector<int> order;
        for (std::size_t i = 0; i < perm.size(); ++i) {
          const auto& lab = labs[perm[i]][choice[i]];
          order.insert(order.end(), lab.begin(), lab.end());
        }
        Encoding enc = encode(d, order);
        if (!best || enc < best->enc) {
          Best b;
          for (std::size_t i = 0; i < perm.size(); ++i) {
            b.types.push_back(g.components()[perm[i]]);
            b.parts.emplace_back(g.components()[perm[i]], labs[perm[i]][choice[i]]);
          }
          b.enc = std::move(enc);
          best = std::move(b);
        }
        std::size_t k = 0;
        while (k < choice.size() && ++choice[k] == labs[perm[k]].size()) choice[k++] = 0;
        if (k == choice.size()) break;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    bests.push_back(std::move(*best));
  }
  auto types_less = [](const std::vector<DynkinComponent>& x, const std::vector<DynkinComponent>& y) {
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(), type_less);
  };
  std::sort(bests.begin(), bests.end(), [&](const Best& x, const Best& y) {
    if (types_less(x.types, y.types)) return true;
    if (types_less(y.types, x.types)) return false;
    return x.enc < y.enc;
  });
  std::vector<std::pair<DynkinComponent, std::vector<int>>> parts;
  for (const auto& b : bests) parts.insert(parts.end(), b.parts.begin(), b.parts.end());
  return assemble(d, parts);
}

std::string canonical_key(const SatakeDiagram& d) { return canonical(d).to_dsl(); }

// --- predicates -----------------------------------------------------------------

int rank(const SatakeDiagram& d) { return d.white_count() - static_cast<int>(d.arrows().size()); }

std::vector<int> trivial_nodes(const SatakeDiagram& d) {
  std::vector<int> out;
  for (int v = 1; v <= d.size(); ++v) {
    if (!d.is_white(v) || d.partner(v) != 0) continue;
    const auto& nb = d.graph().neighbors(v);
    if (std::all_of(nb.begin(), nb.end(), [&](int w) { return d.is_white(w); })) out.push_back(v);
  }
  return out;
}

bool has_codim3(const SatakeDiagram& d) { return trivial_nodes(d).empty(); }

bool is_n_regular(const SatakeDiagram& d) { return d.black_count() == 0; }

std::vector<SatakeDiagram> subdiagrams_one_step(const SatakeDiagram& d) {
  std::vector<SatakeDiagram> out;
  std::unordered_set<std::string> seen;
  auto add = [&](const std::vector<bool>& keep) {
    SatakeDiagram c = canonical(induced_subdiagram(d, keep));
    if (seen.insert(c.to_dsl()).second) out.push_back(std::move(c));
  };
  for (int v = 1; v <= d.size(); ++v) {
    if (!d.is_white(v)) continue;
    int p = d.partner(v);
    if (p != 0 && p < v) continue;
    std::vector<bool> keep(static_cast<std::size_t>(d.size()), true);
    keep[static_cast<std::size_t>(v - 1)] = false;
    if (p != 0) keep[static_cast<std::size_t>(p - 1)] = false;
    add(keep);
  }
  return out;
}

ReducedSubpairs reduced_subpairs(const SatakeDiagram& d) {
  ReducedSubpairs r;
  std::unordered_set<std::string> seen;
  r.diagrams.push_back(canonical(d));
  seen.insert(r.diagrams.front().to_dsl());
  for (std::size_t i = 0; i < r.diagrams.size(); ++i) {
    for (auto& s : subdiagrams_one_step(r.diagrams[i]))
      if (seen.insert(s.to_dsl()).second) r.diagrams.push_back(std::move(s));
  }
  return r;
}

bool has_bad_rank1_subpair(const SatakeDiagram& d) {
  for (const auto& s : reduced_subpairs(d).diagrams) {
    if (s.white_count() != 1 || !s.arrows().empty()) continue;
    for (int v = 1; v <= s.size(); ++v)
      if (s.is_white(v) && s.graph().neighbors(v).empty()) return true;
  }
  return false;
}

namespace {

std::vector<std::vector<int>> satake_pieces(const SatakeDiagram& d) {
  const int n = d.size();
  std::vector<int> comp(static_cast<std::size_t>(n) + 1, 0);
  std::vector<std::vector<int>> out;
  for (int s = 1; s <= n; ++s) {
    if (comp[static_cast<std::size_t>(s)]) continue;
    out.emplace_back();
    std::vector<int> stack{s};
    comp[static_cast<std::size_t>(s)] = static_cast<int>(out.size());
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      out.back().push_back(u);
      std::vector<int> next = d.graph().neighbors(u);
      if (d.partner(u)) next.push_back(d.partner(u));
      for (int w : next) {
        if (!comp[static_cast<std::size_t>(w)]) {
          comp[static_cast<std::size_t>(w)] = static_cast<int>(out.size());
          stack.push_back(w);
        }
      }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

}  // namespace

bool is_connected(const SatakeDiagram& d) { return satake_pieces(d).size() <= 1; }

std::vector<DiagramPiece> decompose(const SatakeDiagram& d) {
  std::vector<DiagramPiece> out;
  for (auto& nodes : satake_pieces(d)) {
    std::vector<bool> keep(static_cast<std::size_t>(d.size()), false);
    for (int v : nodes) keep[static_cast<std::size_t>(v - 1)] = true;
    DiagramPiece p;
    p.diagram = induced_subdiagram(d, keep);
    p.inert = p.diagram.white_count() == 0;
    p.nodes = std::move(nodes);
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<DynkinComponent> connected_types(int max_nodes) {
  std::vector<DynkinComponent> out;
  for (int n = 1; n <= max_nodes; ++n) {
    out.push_back({DynkinType::A, n});
    if (n >= 2) out.push_back({DynkinType::B, n});
    if (n >= 3) out.push_back({DynkinType::C, n});
    if (n >= 4) out.push_back({DynkinType::D, n});
    if (n >= 6 && n <= 8) out.push_back({DynkinType::E, n});
    if (n == 4) out.push_back({DynkinType::F, 4});
    if (n == 2) out.push_back({DynkinType::G, 2});
  }
  return out;
}

namespace {

void matchings(const std::vector<int>& free, std::size_t from, std::vector<bool>& used, std::vector<Arrow>& current,
               std::vector<std::vector<Arrow>>& out) {
  std::size_t i = from;
  while (i < free.size() && used[i]) ++i;
  if (i == free.size()) {
    out.push_back(current);
    return;
  }
  used[i] = true;
  matchings(free, i + 1, used, current, out);
  for (std::size_t j = i + 1; j < free.size(); ++j) {
    if (used[j]) continue;
    used[j] = true;
    current.emplace_back(free[i], free[j]);
    matchings(free, i + 1, used, current, out);
    current.pop_back();
    used[j] = false;
  }
  used[i] = false;
}

}  // namespace

std::vector<SatakeDiagram> enumerate_diagrams(const DynkinComponent& c) {
  validate_component(c);
  const DynkinGraph graph({c});
  const int n = graph.size();
  std::vector<SatakeDiagram> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<Color> colors(static_cast<std::size_t>(n));
    std::vector<int> white;
    for (int i = 0; i < n; ++i) {
      colors[static_cast<std::size_t>(i)] = (mask >> i) & 1u ? Color::Black : Color::White;
      if (!((mask >> i) & 1u)) white.push_back(i + 1);
    }
    std::vector<std::vector<Arrow>> all;
    std::vector<bool> used(white.size(), false);
    std::vector<Arrow> current;
    matchings(white, 0, used, current, all);
    for (auto& arrows : all) out.emplace_back(graph, colors, std::move(arrows));
  }
  return out;
}

std::vector<SatakeDiagram> enumerate_diagonal_diagrams(int max_nodes) {
  std::vector<SatakeDiagram> out;
  for (const auto& c : connected_types(max_nodes / 2)) {
    const DynkinGraph graph({c, c});
    std::vector<Arrow> arrows;
    for (int i = 1; i <= c.rank; ++i) arrows.emplace_back(i, i + c.rank);
    out.emplace_back(graph, std::vector<Color>(static_cast<std::size_t>(2 * c.rank), Color::White), std::move(arrows));
  }
  return out;
}

}  // namespace z2c
