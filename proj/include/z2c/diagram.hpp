#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

namespace z2c {

enum class DynkinType { A, B, C, D, E, F, G };

char type_letter(DynkinType t);

struct DynkinComponent {
  DynkinType type = DynkinType::A;
  int rank = 1;

  bool operator==(const DynkinComponent&) const = default;
  std::string name() const;  // "A3", "E6", ...
};

/// Throws ValidationError unless the rank is legal for the type
/// (A>=1, B>=2, C>=3, D>=4, E6-8, F4, G2).
void validate_component(const DynkinComponent& c);

struct DynkinEdge {
  int a = 0;  // 1-based node ids, a < b
  int b = 0;
  int bond = 1;
  int toward = 0;  // node id of the shorter root for bond 2/3, else 0

  bool operator==(const DynkinEdge&) const = default;
};

/// Disjoint union of connected Dynkin diagrams with Bourbaki numbering per
/// component; components are numbered left to right.
class DynkinGraph {
public:
  DynkinGraph() = default;
  explicit DynkinGraph(std::vector<DynkinComponent> components);

  const std::vector<DynkinComponent>& components() const noexcept { return components_; }
  const std::vector<DynkinEdge>& edges() const noexcept { return edges_; }
  int size() const noexcept { return size_; }
  int offset(std::size_t component) const { return offsets_.at(component); }
  std::size_t component_of(int node) const;
  const std::vector<int>& neighbors(int node) const { return adjacency_.at(static_cast<std::size_t>(node - 1)); }
  /// "A3 x B2"; "empty" for the empty graph.
  std::string label() const;

  bool operator==(const DynkinGraph& rhs) const { return components_ == rhs.components_; }

private:
  std::vector<DynkinComponent> components_;
  std::vector<int> offsets_;
  std::vector<DynkinEdge> edges_;
  std::vector<std::vector<int>> adjacency_;
  int size_ = 0;
};

/// Edges of a single connected Dynkin diagram with Bourbaki numbering 1..rank.
std::vector<DynkinEdge> bourbaki_edges(const DynkinComponent& c);

enum class Color { White, Black };

using Arrow = std::pair<int, int>;

/// Dynkin graph with a black/white coloring and a partial matching of white
/// nodes by arrows. Construction validates the structural invariants.
class SatakeDiagram {
public:
  SatakeDiagram() = default;
  SatakeDiagram(DynkinGraph graph, std::vector<Color> colors, std::vector<Arrow> arrows);

  const DynkinGraph& graph() const noexcept { return graph_; }
  const std::vector<Color>& colors() const noexcept { return colors_; }
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
  int size() const noexcept { return graph_.size(); }
  bool empty() const noexcept { return graph_.size() == 0; }

  bool is_white(int node) const { return colors_.at(static_cast<std::size_t>(node - 1)) == Color::White; }
  /// Partner of `node` under the arrow matching, 0 if none.
  int partner(int node) const { return partner_.at(static_cast<std::size_t>(node - 1)); }
  int white_count() const;
  int black_count() const;

  std::string colors_string() const;
  /// DSL form: "A3 colors=wbw arrows=[(1,3)]"; "empty" for the empty diagram.
  std::string to_dsl() const;

  bool operator==(const SatakeDiagram& rhs) const;

private:
  DynkinGraph graph_;
  std::vector<Color> colors_;
  std::vector<Arrow> arrows_;
  std::vector<int> partner_;
};

/// Parses the one-line DSL `<TYPE><rank>[ x <TYPE><rank>]* colors=<w/b> arrows=[(i,j),...]`.
/// Throws ParseError (with position) or ValidationError.
SatakeDiagram parse_satake(std::string_view text);

nlohmann::json to_json(const SatakeDiagram& d);
SatakeDiagram satake_from_json(const nlohmann::json& j);

/// Diagram induced on the nodes flagged in `keep`, with components re-identified
/// and renumbered (not canonicalized).
SatakeDiagram induced_subdiagram(const SatakeDiagram& d, const std::vector<bool>& keep);

/// Canonical representative of the isomorphism class: each Dynkin component gets
/// the Bourbaki labeling, arrow-linked pieces and their components are ordered,
/// and among all admissible labelings the lexicographically least encoding wins.
SatakeDiagram canonical(const SatakeDiagram& d);
std::string canonical_key(const SatakeDiagram& d);

// --- combinatorial predicates -------------------------------------------------

/// #white - #arrows.
int rank(const SatakeDiagram& d);

/// White nodes with no arrow whose neighbors are all white.
std::vector<int> trivial_nodes(const SatakeDiagram& d);

bool has_codim3(const SatakeDiagram& d);

/// No black nodes.
bool is_n_regular(const SatakeDiagram& d);

/// One result per legal removal (an arrow-free white node, or an arrow pair),
/// canonicalized and deduplicated.
std::vector<SatakeDiagram> subdiagrams_one_step(const SatakeDiagram& d);

struct ReducedSubpairs {
  /// Canonical diagrams in discovery order; the first entry is the input
  /// itself (the zero-step case).
  std::vector<SatakeDiagram> diagrams;
  std::size_t self_index = 0;
};

/// Reflexive-transitive closure of subdiagrams_one_step.
ReducedSubpairs reduced_subpairs(const SatakeDiagram& d);

/// Some reduced subdiagram consists of a single isolated arrow-free white
/// node plus black nodes only.
bool has_bad_rank1_subpair(const SatakeDiagram& d);

/// Connectivity of the graph whose edges are Dynkin edges and arrows.
bool is_connected(const SatakeDiagram& d);

struct DiagramPiece {
  SatakeDiagram diagram;
  std::vector<int> nodes;  // node ids in the parent diagram
  bool inert = false;      // all nodes black
};

std::vector<DiagramPiece> decompose(const SatakeDiagram& d);

/// Connected Dynkin types with at most `max_nodes` nodes, ordered by node count.
std::vector<DynkinComponent> connected_types(int max_nodes);

/// Every coloring of the component together with every matching of its white
/// nodes by arrows.
std::vector<SatakeDiagram> enumerate_diagrams(const DynkinComponent& c);

/// All-white diagrams X x X with arrows joining corresponding nodes, for
/// connected X with 2 * rank(X) <= max_nodes.
std::vector<SatakeDiagram> enumerate_diagonal_diagrams(int max_nodes);

}  // namespace z2c
