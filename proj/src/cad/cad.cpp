#include "polita/cad.hpp"

#include "polita/errors.hpp"

#include <map>
#include <sstream>

namespace polita {

const PartitionTriple* PartitionEntry::triple_for(int poly) const {
  for (const auto& t : triples)
    if (t.poly == poly) return &t;
  return nullptr;
}

Cad::Cad(PolyFamily eliminated, std::shared_ptr<RealAlgebra> algebra)
    : family_(std::move(eliminated)), algebra_(algebra ? std::move(algebra) : std::make_shared<RealAlgebra>()) {
  CadCell root;
  root.id = kRoot;
  root.parent = kRoot;
  cells_.push_back(std::move(root));
}

// ============================================================================
// Line partition
// ============================================================================

std::vector<Cad::Normalized> Cad::normalize_level(const TriangularSystem& t) {
  const auto& members = family_.level(t.level() + 1);
  std::vector<Normalized> out;
  out.reserve(members.size());
  for (const auto& p : members) {
    auto [poly, degree] = algebra_->normalize_at(t, p);
    out.push_back({std::move(poly), degree});
  }
  return out;
}

std::vector<PartitionEntry> Cad::line_partition(const TriangularSystem& t) {
  if (t.level() >= dimension()) throw DomainError("line_partition: no family level above the sample");
  const auto members = normalize_level(t);
  const int m = static_cast<int>(members.size());

  struct RootRecord {
    std::map<int, int> roots;
    std::map<int, ThomEncoding> codes;
  };
  std::vector<std::vector<RootRecord>> lists(static_cast<std::size_t>(m));

  for (int i = 0; i < m; ++i) {
    const auto& mi = members[static_cast<std::size_t>(i)];
    if (mi.degree == kMinusInfinity) continue;
    auto& own = lists[static_cast<std::size_t>(i)];
    if (mi.degree >= 1) {
      const auto codes = algebra_->root_coding(t, mi.poly, mi.poly).expanded();
      for (std::size_t r = 0; r < codes.size(); ++r) {
        RootRecord rec;
        rec.roots[i] = static_cast<int>(r) + 1;
        rec.codes[i] = codes[r];
        own.push_back(std::move(rec));
      }
    }
    for (int j = 0; j < i; ++j) {
      const auto& mj = members[static_cast<std::size_t>(j)];
      if (mj.degree == kMinusInfinity) continue;
      if (!own.empty()) {
        const auto codes = algebra_->root_coding(t, mi.poly, mj.poly).expanded();
        for (std::size_t r = 0; r < own.size(); ++r) own[r].codes[j] = codes[r];
      }
      auto& other = lists[static_cast<std::size_t>(j)];
      if (!other.empty()) {
        const auto codes = algebra_->root_coding(t, mj.poly, mi.poly).expanded();
        for (std::size_t r = 0; r < other.size(); ++r) other[r].codes[i] = codes[r];
      }
    }
  }

  // Ordered merge: each new root is placed by comparing encodings of its own polynomial.
  std::vector<RootRecord> merged;
  for (int i = 0; i < m; ++i) {
    for (auto& rec : lists[static_cast<std::size_t>(i)]) {
      bool placed = false;
      for (std::size_t pos = 0; pos < merged.size() && !placed; ++pos) {
        const int c = thom_compare(rec.codes.at(i), merged[pos].codes.at(i));
        if (c == 0) {
          merged[pos].roots[i] = rec.roots.at(i);
          placed = true;
        } else if (c < 0) {
          merged.insert(merged.begin() + static_cast<long>(pos), std::move(rec));
          placed = true;
        }
      }
      if (!placed) merged.push_back(std::move(rec));
    }
  }

  std::vector<PartitionEntry> out;
  for (const auto& rec : merged) {
    PartitionEntry e;
    e.kind = PartitionEntry::Kind::Root;
    for (const auto& [poly, code] : rec.codes) {
      PartitionTriple tr{poly, std::nullopt, code};
      if (auto it = rec.roots.find(poly); it != rec.roots.end()) tr.root = it->second;
      e.triples.push_back(std::move(tr));
    }
    const int pick = rec.roots.begin()->first;
    e.picked = pick;
    e.sample_poly = members[static_cast<std::size_t>(pick)].poly;
    e.sample_root = rec.roots.begin()->second;
    out.push_back(std::move(e));
  }
  return out;
}

PartitionEntry Cad::interval_entry(const TriangularSystem& t, const std::vector<Normalized>& members, Poly sample,
                                   int root) {
  PartitionEntry e;
  e.kind = PartitionEntry::Kind::Interval;
  for (std::size_t j = 0; j < members.size(); ++j) {
    if (members[j].degree == kMinusInfinity) continue;
    const auto rc = algebra_->root_coding(t, sample, members[j].poly);
    e.triples.push_back({static_cast<int>(j), std::nullopt, rc.root(root)});
  }
  e.sample_poly = std::move(sample);
  e.sample_root = root;
  return e;
}

std::vector<PartitionEntry> Cad::complete_partition(const TriangularSystem& t, const std::vector<PartitionEntry>& roots) {
  const int k = t.level() + 1;
  const auto members = normalize_level(t);
  std::vector<PartitionEntry> out;
  if (roots.empty()) {
    out.push_back(interval_entry(t, members, Poly::variable(k), 1));
    return out;
  }
  auto defining = [&](const PartitionEntry& e) -> std::pair<const Poly&, const ThomEncoding&> {
    const int pick = *e.picked;
    return {members[static_cast<std::size_t>(pick)].poly, e.triple_for(pick)->code};
  };

  // Left of the first root: the first root of P(X + 1).
  {
    const auto [p, code] = defining(roots.front());
    (void)code;
    auto [shifted, degree] = algebra_->normalize_at(t, p.shift(k, Rational(1)));
    POLITA_ASSERT(degree >= 1, "shifted polynomial lost its roots");
    out.push_back(interval_entry(t, members, shifted, 1));
  }
  out.push_back(roots.front());

  // Between consecutive roots: a root of (P * oldP)' strictly between them.
  for (std::size_t i = 1; i < roots.size(); ++i) {
    const auto [old_p, old_code] = defining(roots[i - 1]);
    const auto [p, code] = defining(roots[i]);
    auto [between, degree] = algebra_->normalize_at(t, (p * old_p).derivative(k));
    POLITA_ASSERT(degree >= 1, "derivative between roots has no roots");
    const auto wrt_p = algebra_->root_coding(t, between, p).expanded();
    const auto wrt_old = algebra_->root_coding(t, between, old_p).expanded();
    int chosen = -1;
    for (std::size_t r = 0; r < wrt_p.size() && chosen < 0; ++r) {
      if (thom_compare(wrt_p[r], code) < 0 && thom_compare(wrt_old[r], old_code) > 0) chosen = static_cast<int>(r) + 1;
    }
    POLITA_ASSERT(chosen > 0, "no root of the derivative separates consecutive roots");
    out.push_back(interval_entry(t, members, between, chosen));
    out.push_back(roots[i]);
  }

  // Right of the last root: the last root of P(X - 1).
  {
    const auto [p, code] = defining(roots.back());
    (void)code;
    auto [shifted, degree] = algebra_->normalize_at(t, p.shift(k, Rational(-1)));
    const long count = algebra_->count_roots(t, shifted);
    POLITA_ASSERT(degree >= 1 && count >= 1, "shifted polynomial lost its roots");
    out.push_back(interval_entry(t, members, shifted, static_cast<int>(count)));
  }
  return out;
}

// ============================================================================
// Lifting and navigation
// ============================================================================

void Cad::lift(NodeId id) {
  const TriangularSystem t = cells_[id].sample;
  const int k = t.level() + 1;
  const auto entries = complete_partition(t, line_partition(t));
  const std::size_t members = family_.level(k).size();
  std::vector<NodeId> kids;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    CadCell c;
    c.id = cells_.size();
    c.parent = id;
    c.level = k;
    c.child_index = static_cast<int>(i);
    c.kind = e.kind == PartitionEntry::Kind::Root ? CellKind::Section : CellKind::Sector;
    c.sample = t.extended({e.sample_root, e.sample_poly, e.sample_poly.degree_in(k)});
    c.signs.assign(members, 0);
    for (const auto& tr : e.triples) c.signs[static_cast<std::size_t>(tr.poly)] = tr.code.signs.front();
    if (e.picked) {
      c.section_poly = *e.picked;
      c.section_root = e.triple_for(*e.picked)->root.value();
    }
    kids.push_back(c.id);
    cells_.push_back(std::move(c));
  }
  cells_[id].children = std::move(kids);
  cells_[id].expanded = true;
}

const std::vector<NodeId>& Cad::children(NodeId id) {
  std::lock_guard lock(lift_mutex_);
  CadCell& c = cells_.at(id);
  if (c.level >= dimension()) return c.children;
  if (!c.expanded) lift(id);
  return cells_[id].children;
}

std::vector<NodeId> Cad::cells_at_level(int level) {
  if (level < 0 || level > dimension()) throw DomainError("cells_at_level: level out of range");
  std::vector<NodeId> frontier{kRoot};
  for (int l = 0; l < level; ++l) {
    std::vector<NodeId> next;
    for (NodeId id : frontier)
      for (NodeId c : children(id)) next.push_back(c);
    frontier = std::move(next);
  }
  return frontier;
}

NodeId Cad::ancestor(NodeId id, int level) const {
  const CadCell* c = &cells_.at(id);
  if (level > c->level || level < 0) throw DomainError("ancestor: level out of range");
  while (c->level > level) c = &cells_[c->parent];
  return c->id;
}

std::vector<int> Cad::path(NodeId id) const {
  std::vector<int> out;
  const CadCell* c = &cells_.at(id);
  while (c->level > 0) {
    out.insert(out.begin(), c->child_index);
    c = &cells_[c->parent];
  }
  return out;
}

std::string Cad::path_string(NodeId id) const {
  const auto p = path(id);
  if (p.empty()) return "root";
  std::ostringstream os;
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "." : "") << p[i];
  return os.str();
}

int Cad::sign(NodeId id, const FamilyRef& ref) const {
  const CadCell& c = cells_.at(ancestor(id, ref.level));
  return c.signs.at(static_cast<std::size_t>(ref.index)) * ref.scale_sign;
}

NodeId Cad::locate(const std::vector<Rational>& point) {
  if (static_cast<int>(point.size()) > dimension()) throw DomainError("locate: point has too many coordinates");
  NodeId node = kRoot;
  for (std::size_t l = 0; l < point.size(); ++l) {
    const auto kids = children(node);
    if (kids.size() == 1) {
      node = kids.front();
      continue;
    }
    const int k = static_cast<int>(l) + 1;
    const TriangularSystem prefix =
        TriangularSystem::from_rational_point(std::vector<Rational>(point.begin(), point.begin() + static_cast<long>(l)));
    const Poly offset = Poly::variable(k) - Poly(point[l]);
    NodeId found = kids.back();
    for (std::size_t i = 0; i < kids.size(); ++i) {
      const CadCell& c = cells_[kids[i]];
      if (c.kind != CellKind::Section) continue;
      const Poly& member = family_.level(k)[static_cast<std::size_t>(c.section_poly)];
      // Sign of (root - x) at the section's root above the rational prefix.
      const int s = algebra_->root_coding(prefix, member, offset).root(c.section_root).signs.front();
      if (s == 0) {
        found = kids[i];
        break;
      }
      if (s > 0) {
        found = kids[i - 1];
        break;
      }
    }
    node = found;
  }
  return node;
}

}  // namespace polita
