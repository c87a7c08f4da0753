#ifndef WPI_LATTICE_HPP
#define WPI_LATTICE_HPP

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace wpi {

// Element of the index set I_{n,d}: entries (i0, i1, ..., in) with
// 1 <= i0 <= 2 and 1 <= i_nu <= 3d-1 for nu >= 1.
struct MultiIndex {
  std::vector<int> entries;

  int n() const { return static_cast<int>(entries.size()) - 1; }
  bool operator==(const MultiIndex& o) const { return entries == o.entries; }
  bool operator!=(const MultiIndex& o) const { return entries != o.entries; }
  std::string label() const;  // "t_i0_i1_..._in"
  std::string dotted() const; // "i0.i1.....in"
};

enum class Ordering { Less, Equal, Greater };

// Selects the linear order prec_kappa, kappa in 0..n.
struct OrderTag {
  int kappa = 0;
};

// prec_0 is lexicographic with the REVERSED order within each coordinate;
// prec_kappa (kappa >= 1) sorts by coordinate kappa ascending, ties by prec_0.
Ordering compare(OrderTag order, const MultiIndex& a, const MultiIndex& b);

// All of I_{n,d} sorted ascending by prec_0; size 2(3d-1)^n.
std::vector<MultiIndex> build_index_set(int n, int d);

// The prec_kappa-ascending listing of I_{n,d} (the enumeration map i_kappa).
std::vector<MultiIndex> enumerate_indices(int n, int d, OrderTag order);

// Edge rule of Gamma_{n,d}: i != j and the componentwise difference lies in
// {0,1}^(n+1) or in {0,-1}^(n+1).
bool is_edge(const MultiIndex& a, const MultiIndex& b);

struct LatticeGraph {
  int n = 0;
  int d = 1;
  std::vector<MultiIndex> vertices;            // prec_0 order
  std::vector<std::pair<int, int>> edges;      // index pairs, first < second
};

struct GraphStats {
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  bool connected = false;
};

LatticeGraph build_graph(int n, int d);

// Every triple (i,j,k), i prec_0 j prec_0 k, all three pairs edges.
std::vector<std::array<int, 3>> triangles(const LatticeGraph& g);

GraphStats graph_stats(const LatticeGraph& g);

std::string graph_to_dot(const LatticeGraph& g);
std::string graph_to_json(const LatticeGraph& g);

}  // namespace wpi

#endif
