#include "itcalc/algebra.hpp"

#include "itcalc/error.hpp"

#include <algorithm>
#include <set>

namespace itcalc {

std::optional<int> Quiver::arrow_index(const std::string& id) const {
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    if (arrows[i].id == id) return static_cast<int>(i);
  }
  return std::nullopt;
}

std::optional<std::size_t> Algebra::basis_index(const Path& path) const {
  auto it = index_.find({path.source, path.arrows});
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Algebra::extend(std::size_t path_index, int a) const {
  const Path& p = basis_.at(path_index);
  if (arrow(a).source != p.target) return std::nullopt;
  std::vector<int> arrows = p.arrows;
  arrows.push_back(a);
  auto it = index_.find({p.source, arrows});
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Algebra::prepend(int a, std::size_t path_index) const {
  const Path& p = basis_.at(path_index);
  if (arrow(a).target != p.source) return std::nullopt;
  std::vector<int> arrows;
  arrows.reserve(p.arrows.size() + 1);
  arrows.push_back(a);
  arrows.insert(arrows.end(), p.arrows.begin(), p.arrows.end());
  auto it = index_.find({arrow(a).source, arrows});
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::size_t> Algebra::paths_from(int vertex) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (basis_[i].source == vertex) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> Algebra::paths_to(int vertex) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (basis_[i].target == vertex) out.push_back(i);
  }
  return out;
}

std::vector<Path> Algebra::radical_power_basis(int k) const {
  if (k < 0) throw Error(ErrorKind::InvalidInput, "radical power must be non-negative");
  std::vector<Path> out;
  for (const auto& p : basis_) {
    if (p.length() >= static_cast<std::size_t>(k)) out.push_back(p);
  }
  return out;
}

bool Algebra::is_nakayama() const {
  std::vector<int> in(static_cast<std::size_t>(vertex_count()), 0);
  std::vector<int> out(in);
  for (const auto& a : quiver_.arrows) {
    ++out[static_cast<std::size_t>(a.source)];
    ++in[static_cast<std::size_t>(a.target)];
  }
  for (std::size_t v = 0; v < in.size(); ++v) {
    if (in[v] > 1 || out[v] > 1) return false;
  }
  return true;
}

int Algebra::loewy_length(int vertex) const {
  int longest = 0;
  for (const auto& p : basis_) {
    if (p.source == vertex) longest = std::max(longest, static_cast<int>(p.length()));
  }
  return longest + 1;
}

std::string Algebra::path_name(const Path& path) const {
  if (path.arrows.empty()) return "e" + std::to_string(path.source + 1);
  std::string out;
  for (std::size_t i = 0; i < path.arrows.size(); ++i) {
    if (i > 0) out += ' ';
    out += arrow(path.arrows[i]).id;
  }
  return out;
}

AlgebraPtr build_algebra(Quiver quiver, std::uint32_t p, std::vector<std::vector<int>> relations,
                         int cap) {
  if (quiver.vertex_count <= 0) {
    throw Error(ErrorKind::InvalidInput, "a quiver needs at least one vertex");
  }
  std::set<std::string> ids;
  for (const auto& a : quiver.arrows) {
    if (a.source < 0 || a.source >= quiver.vertex_count || a.target < 0 ||
        a.target >= quiver.vertex_count) {
      throw Error(ErrorKind::UnknownVertex, "arrow " + a.id + " has an endpoint outside the quiver");
    }
    if (!ids.insert(a.id).second) {
      throw Error(ErrorKind::InvalidInput, "duplicate arrow id " + a.id);
    }
  }
  const int arrow_count = static_cast<int>(quiver.arrows.size());
  for (const auto& rel : relations) {
    if (rel.size() < 2) throw Error(ErrorKind::InvalidPath, "relations must have length >= 2");
    for (int a : rel) {
      if (a < 0 || a >= arrow_count) throw Error(ErrorKind::InvalidPath, "relation uses an unknown arrow");
    }
    for (std::size_t i = 0; i + 1 < rel.size(); ++i) {
      const auto& first = quiver.arrows[static_cast<std::size_t>(rel[i])];
      const auto& next = quiver.arrows[static_cast<std::size_t>(rel[i + 1])];
      if (first.target != next.source) {
        throw Error(ErrorKind::InvalidPath,
                    "relation is not composable at " + first.id + " " + next.id);
      }
    }
  }
  std::sort(relations.begin(), relations.end());
  relations.erase(std::unique(relations.begin(), relations.end()), relations.end());

  std::shared_ptr<Algebra> alg(new Algebra(PrimeField(p)));
  alg->quiver_ = std::move(quiver);
  alg->relations_ = std::move(relations);

  // Level-by-level enumeration; a nonzero path extended by one arrow is
  // nonzero iff no relation occurs as a suffix.
  std::vector<Path> level;
  for (int v = 0; v < alg->vertex_count(); ++v) level.push_back(Path{v, v, {}});
  std::vector<Path> all;
  int length = 0;
  while (!level.empty()) {
    if (length >= cap) {
      throw Error(ErrorKind::NonAdmissible, "nonzero paths of length " + std::to_string(cap) +
                                                " exist; the ideal is not admissible");
    }
    all.insert(all.end(), level.begin(), level.end());
    std::vector<Path> next;
    for (const auto& path : level) {
      for (int a = 0; a < arrow_count; ++a) {
        if (alg->quiver_.arrows[static_cast<std::size_t>(a)].source != path.target) continue;
        Path ext = path;
        ext.arrows.push_back(a);
        ext.target = alg->quiver_.arrows[static_cast<std::size_t>(a)].target;
        bool zero = false;
        for (const auto& rel : alg->relations_) {
          if (rel.size() <= ext.arrows.size() &&
              std::equal(rel.rbegin(), rel.rend(), ext.arrows.rbegin())) {
            zero = true;
            break;
          }
        }
        if (!zero) next.push_back(std::move(ext));
      }
    }
    level = std::move(next);
    ++length;
  }
  alg->bound_ = length;

  const auto& arrows = alg->quiver_.arrows;
  std::stable_sort(all.begin(), all.end(), [&](const Path& x, const Path& y) {
    if (x.length() != y.length()) return x.length() < y.length();
    if (x.arrows.empty()) return x.source < y.source;
    for (std::size_t i = 0; i < x.arrows.size(); ++i) {
      const auto& ix = arrows[static_cast<std::size_t>(x.arrows[i])].id;
      const auto& iy = arrows[static_cast<std::size_t>(y.arrows[i])].id;
      if (ix != iy) return ix < iy;
    }
    return false;
  });
  alg->basis_ = std::move(all);
  alg->trivial_.assign(static_cast<std::size_t>(alg->vertex_count()), 0);
  for (std::size_t i = 0; i < alg->basis_.size(); ++i) {
    const auto& path = alg->basis_[i];
    alg->index_[{path.source, path.arrows}] = i;
    if (path.arrows.empty()) alg->trivial_[static_cast<std::size_t>(path.source)] = i;
  }
  return alg;
}

AlgebraPtr opposite_algebra(const Algebra& a) {
  Quiver q;
  q.vertex_count = a.vertex_count();
  for (const auto& arrow : a.quiver().arrows) q.arrows.push_back({arrow.id, arrow.target, arrow.source});
  std::vector<std::vector<int>> rels;
  for (auto rel : a.relations()) {
    std::reverse(rel.begin(), rel.end());
    rels.push_back(std::move(rel));
  }
  return build_algebra(std::move(q), a.field().modulus(), std::move(rels));
}

}  // namespace itcalc
