#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "z2c/diagram.hpp"

namespace z2c {

/// Named families of symmetric pairs.
enum class Family {
  SlSo,      // (sl_n, so_n), params {n}
  SlGl,      // (sl_n, s(gl_k + gl_{n-k})), params {n, k}, k <= n-k
  SlSp,      // (sl_2n, sp_2n), params {n}
  SoSo,      // (so_{p+q}, so_p + so_q), params {p, q}, p <= q
  SpSp,      // (sp_2n, sp_2k + sp_{2n-2k}), params {n, k}, k <= n-k
  SpGl,      // (sp_2n, gl_n), params {n}
  SoGl,      // (so_2n, gl_n), params {n}
  Diagonal,  // (h + h, diag h), params {rank of h}, simple type in `factor`
  E6Sp8,
  E6SlSl,
  E6So10,
  E6F4,
  E7Sl8,
  E7So12Sl2,
  E7E6,
  E8So16,
  E8E7Sl2,
  F4SpSl,
  F4So9,
  G2SlSl,
};

struct PairId {
  Family family = Family::SlSo;
  std::vector<int> params;
  DynkinType factor = DynkinType::A;  // simple factor type for Family::Diagonal

  bool operator==(const PairId&) const = default;
};

/// Checks parameter constraints and brings parameters to normal form
/// (k <= n-k, p <= q). Throws ValidationError.
PairId normalized(PairId pair);

/// Short family id used in reports, e.g. "sl_n/s(gl_k+gl_n-k)".
std::string family_id(const PairId& pair);
/// Human-readable pair, e.g. "(sl5, s(gl2+gl3))".
std::string pair_name(const PairId& pair);

/// Compact pair syntax, e.g. "sl4,sp4", "so7,so2+so5", "sl3+sl3,diag", "E6,F4".
/// Throws ParseError for unknown syntax and ValidationError for bad parameters.
PairId parse_pair(std::string_view text);

SatakeDiagram satake_of(const PairId& pair);

/// Rank of g.
int algebra_rank(const PairId& pair);

/// The split (maximal-rank) pair with the given simple Dynkin type.
PairId maximal_rank_pair(const DynkinComponent& c);

/// Dynkin type of the simple algebra with the given classical name ("sl", "so",
/// "sp") and matrix size; isomorphic small cases are folded (so5 = B2, so6 = A3, ...).
DynkinComponent classical_type(std::string_view kind, int size);

enum class CatalogList { Codim3Table, NRegular, Remaining, MaximalRank };

std::string list_name(CatalogList list);

struct CatalogEntry {
  PairId pair;
  CatalogList list = CatalogList::Codim3Table;
  int row = 0;                  // 1-based position in its list
  int expected_rank = 0;        // rank column / rk(g,g0)
  std::optional<int> listed_m;  // N-regular list only: the value printed next to the entry
  std::string centralizer;      // codim-3 table only: centralizer of a Cartan subspace in g0
};

/// Instances of the codim-3 table rows with rk g <= max_rank.
std::vector<CatalogEntry> codim3_table(int max_rank);
/// Instances of the N-regular list (excluding maximal rank) with rk g <= max_rank.
std::vector<CatalogEntry> n_regular_list(int max_rank);
/// Instances of the list of simple pairs covered by neither construction.
std::vector<CatalogEntry> remaining_list(int max_rank);
/// Maximal-rank pairs of every simple type with rank <= max_rank.
std::vector<CatalogEntry> maximal_rank_list(int max_rank);

/// Every catalog instance whose diagram has exactly `nodes` nodes.
std::vector<PairId> instances_with_nodes(int nodes);

struct Classification {
  std::optional<PairId> family;  // preferred match
  std::vector<PairId> matches;   // all catalog pairs with an isomorphic diagram
  int rank = 0;
  bool codim3 = false;
  bool n_regular = false;
  std::optional<int> m;  // arrow count for N-regular diagrams
};

/// Requires a connected diagram (PreconditionError otherwise).
Classification classify(const SatakeDiagram& d);

/// Keys in fixed order: family, params, rank, codim3, n_regular, m.
nlohmann::ordered_json to_json(const Classification& c);

}  // namespace z2c
