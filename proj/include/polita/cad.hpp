#pragma once

#include "polita/family.hpp"
#include "polita/real_algebra.hpp"

#include <deque>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace polita {

using NodeId = std::size_t;

enum class CellKind { Root, Section, Sector };

// Encoding of one family member at a point of a line partition. `root` is set
// when the point is the root-th real root of that member.
struct PartitionTriple {
  int poly = 0;
  std::optional<int> root;
  ThomEncoding code;
};

// A point of the line above a sample: either a root of some family member or
// a sample strictly inside an interval between consecutive roots.
struct PartitionEntry {
  enum class Kind { Root, Interval };
  Kind kind = Kind::Root;
  std::vector<PartitionTriple> triples;  // one per member not vanishing identically
  Poly sample_poly;                      // defines the point, normalized at the sample below
  int sample_root = 1;
  std::optional<int> picked;             // family member defining a root point

  const PartitionTriple* triple_for(int poly) const;
};

struct CadCell {
  NodeId id = 0;
  NodeId parent = 0;
  int level = 0;
  int child_index = 0;
  CellKind kind = CellKind::Root;
  TriangularSystem sample;
  std::vector<int> signs;  // signs of family.level(level) at the sample
  int section_poly = -1;   // for sections: defining family member and its root index
  int section_root = 0;
  bool expanded = false;
  std::vector<NodeId> children;
};

// Cylindrical algebraic decomposition adapted to a completed family, built
// lazily: children of a cell are lifted on first request and kept.
class Cad {
 public:
  static constexpr NodeId kRoot = 0;

  // `eliminated` must be closed under projection (see eliminate_all).
  explicit Cad(PolyFamily eliminated, std::shared_ptr<RealAlgebra> algebra = nullptr);

  int dimension() const { return family_.dimension(); }
  const PolyFamily& family() const { return family_; }
  RealAlgebra& algebra() { return *algebra_; }

  const CadCell& cell(NodeId id) const { return cells_.at(id); }
  const std::vector<NodeId>& children(NodeId id);
  std::size_t constructed_cells() const { return cells_.size(); }

  // Lifts every cell up to the given level and returns the cells of that level in tree order.
  std::vector<NodeId> cells_at_level(int level);

  NodeId ancestor(NodeId id, int level) const;
  // Child indices from the root, e.g. {7, 0}.
  std::vector<int> path(NodeId id) const;
  std::string path_string(NodeId id) const;

  // Sign of the referenced family member on the cell (or on its ancestor at the member's level).
  int sign(NodeId id, const FamilyRef& ref) const;

  // The cell at the given level containing a rational point of that dimension.
  NodeId locate(const std::vector<Rational>& point);

  // Roots of all members of family level t.level()+1 above t, merged and ordered.
  std::vector<PartitionEntry> line_partition(const TriangularSystem& t);
  // Interleaves the roots with one sample point per open interval.
  std::vector<PartitionEntry> complete_partition(const TriangularSystem& t, const std::vector<PartitionEntry>& roots);

 private:
  struct Normalized {
    Poly poly;
    Degree degree = kMinusInfinity;
  };
  std::vector<Normalized> normalize_level(const TriangularSystem& t);
  PartitionEntry interval_entry(const TriangularSystem& t, const std::vector<Normalized>& members, Poly sample, int root);
  void lift(NodeId id);

  PolyFamily family_;
  std::shared_ptr<RealAlgebra> algebra_;
  std::deque<CadCell> cells_;
  std::mutex lift_mutex_;
};

}  // namespace polita
