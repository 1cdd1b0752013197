#include "qss/semisimplicial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qss::ss {

SemiSimplicialComplex::SemiSimplicialComplex(std::vector<std::vector<std::vector<SimplexId>>> faces,
                                             std::vector<std::vector<VertexTuple>> tuples)
    : faces_(std::move(faces)), tuples_(std::move(tuples)) {
  if (!tuples_.empty()) {
    if (tuples_.size() != faces_.size()) throw std::invalid_argument("tuple table does not match levels");
    tuple_index_.resize(tuples_.size());
    for (std::size_t k = 0; k < tuples_.size(); ++k) {
      if (tuples_[k].size() != faces_[k].size()) throw std::invalid_argument("tuple table does not match level size");
      for (std::size_t s = 0; s < tuples_[k].size(); ++s)
        tuple_index_[k].emplace(tuples_[k][s], static_cast<SimplexId>(s));
    }
  }
}

int SemiSimplicialComplex::top_level() const {
  for (std::size_t k = faces_.size(); k-- > 0;)
    if (!faces_[k].empty()) return static_cast<int>(k);
  return -1;
}

std::size_t SemiSimplicialComplex::level_size(int level) const {
  if (level == -1) return 1;
  if (level < 0 || static_cast<std::size_t>(level) >= faces_.size()) return 0;
  return faces_[static_cast<std::size_t>(level)].size();
}

std::vector<std::size_t> SemiSimplicialComplex::level_sizes() const {
  std::vector<std::size_t> sizes;
  for (int k = 0; k <= top_level(); ++k) sizes.push_back(level_size(k));
  return sizes;
}

std::span<const SimplexId> SemiSimplicialComplex::faces(int level, SimplexId s) const {
  return faces_.at(static_cast<std::size_t>(level)).at(s);
}

const VertexTuple& SemiSimplicialComplex::tuple(int level, SimplexId s) const {
  return tuples_.at(static_cast<std::size_t>(level)).at(s);
}

std::optional<SimplexId> SemiSimplicialComplex::find_tuple(int level, const VertexTuple& t) const {
  if (level < 0 || static_cast<std::size_t>(level) >= tuple_index_.size()) return std::nullopt;
  const auto& idx = tuple_index_[static_cast<std::size_t>(level)];
  auto it = idx.find(t);
  if (it == idx.end()) return std::nullopt;
  return it->second;
}

std::string SemiSimplicialComplex::label(int level, SimplexId s) const {
  std::ostringstream os;
  if (has_tuples()) {
    os << '(';
    const auto& t = tuple(level, s);
    for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
    os << ')';
  } else {
    os << level << ':' << s;
  }
  return os.str();
}

ValidationReport validate(const SemiSimplicialComplex& x) {
  ValidationReport report;
  auto fail = [&](int level, SimplexId s, int i, int j, std::string msg) {
    report.passed = false;
    report.issues.push_back({level, s, i, j, std::move(msg)});
  };

  const int levels = static_cast<int>(x.num_levels());
  const int top = x.top_level();
  for (int k = 0; k < top; ++k) {
    if (x.level_size(k) == 0) fail(k, 0, -1, -1, "empty level below a nonempty level");
  }

  // Structure first; the identity is only meaningful on well-formed faces.
  bool structural_ok = true;
  for (int k = 0; k < levels; ++k) {
    for (SimplexId s = 0; s < x.level_size(k); ++s) {
      auto f = x.faces(k, s);
      const std::size_t want = k == 0 ? 0 : static_cast<std::size_t>(k) + 1;
      if (f.size() != want) {
        std::ostringstream os;
        os << "simplex " << x.label(k, s) << " at level " << k << " has " << f.size() << " faces, expected " << want;
        fail(k, s, -1, -1, os.str());
        structural_ok = false;
        continue;
      }
      for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] >= x.level_size(k - 1)) {
          std::ostringstream os;
          os << "face " << i << " of simplex " << x.label(k, s) << " at level " << k << " refers to missing simplex "
             << f[i] << " at level " << k - 1;
          fail(k, s, static_cast<int>(i), -1, os.str());
          structural_ok = false;
        }
      }
    }
  }
  if (!structural_ok) return report;

  for (int k = 2; k < levels; ++k) {
    for (SimplexId s = 0; s < x.level_size(k); ++s) {
      for (int j = 1; j <= k; ++j) {
        for (int i = 0; i < j; ++i) {
          const SimplexId lhs = x.face(k - 1, x.face(k, s, j), i);
          const SimplexId rhs = x.face(k - 1, x.face(k, s, i), j - 1);
          if (lhs != rhs) {
            std::ostringstream os;
            os << "face identity fails on simplex " << x.label(k, s) << " at level " << k << " for (i,j)=(" << i
               << "," << j << ")";
            fail(k, s, i, j, os.str());
          }
        }
      }
    }
  }
  return report;
}

namespace {

VertexTuple delete_coordinate(const VertexTuple& t, std::size_t i) {
  VertexTuple out;
  out.reserve(t.size() - 1);
  for (std::size_t c = 0; c < t.size(); ++c)
    if (c != i) out.push_back(t[c]);
  return out;
}

}  // namespace

SemiSimplicialComplex complex_from_tuples(const std::vector<std::vector<VertexTuple>>& levels) {
  std::vector<std::map<VertexTuple, SimplexId>> index(levels.size());
  for (std::size_t k = 0; k < levels.size(); ++k)
    for (std::size_t s = 0; s < levels[k].size(); ++s) {
      if (levels[k][s].size() != k + 1) throw InvalidComplex("tuple length does not match its level");
      if (!index[k].emplace(levels[k][s], static_cast<SimplexId>(s)).second)
        throw InvalidComplex("duplicate tuple in a level");
    }
  std::vector<std::vector<std::vector<SimplexId>>> faces(levels.size());
  for (std::size_t k = 0; k < levels.size(); ++k) {
    faces[k].resize(levels[k].size());
    if (k == 0) continue;
    for (std::size_t s = 0; s < levels[k].size(); ++s) {
      for (std::size_t i = 0; i <= k; ++i) {
        auto it = index[k - 1].find(delete_coordinate(levels[k][s], i));
        if (it == index[k - 1].end()) throw InvalidComplex("a face of a listed tuple is missing");
        faces[k][s].push_back(it->second);
      }
    }
  }
  return SemiSimplicialComplex(std::move(faces), levels);
}

SemiSimplicialComplex product_complex(int vertex_count, int top) {
  if (vertex_count <= 0) throw EmptyVertexSet("product complex needs at least one vertex");
  if (top < 0) throw std::invalid_argument("product complex needs top >= 0");
  std::vector<std::vector<VertexTuple>> levels(static_cast<std::size_t>(top) + 1);
  for (int v = 0; v < vertex_count; ++v) levels[0].push_back({v});
  for (std::size_t k = 1; k < levels.size(); ++k)
    for (const auto& t : levels[k - 1])
      for (int v = 0; v < vertex_count; ++v) {
        auto u = t;
        u.push_back(v);
        levels[k].push_back(std::move(u));
      }
  return complex_from_tuples(levels);
}

SemiSimplicialComplex injective_words_complex(int n) {
  if (n < 1) throw std::invalid_argument("injective words need n >= 1");
  std::vector<std::vector<VertexTuple>> levels(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) levels[0].push_back({v});
  for (std::size_t k = 1; k < levels.size(); ++k)
    for (const auto& t : levels[k - 1])
      for (int v = 0; v < n; ++v) {
        if (std::find(t.begin(), t.end(), v) != t.end()) continue;
        auto u = t;
        u.push_back(v);
        levels[k].push_back(std::move(u));
      }
  return complex_from_tuples(levels);
}

namespace {

std::vector<std::vector<VertexTuple>> increasing_subsets(int n, std::size_t max_size) {
  // Subsets of {0..n} by size, lexicographic within a size.
  std::vector<std::vector<VertexTuple>> levels(max_size);
  if (max_size == 0) return levels;
  for (int v = 0; v <= n; ++v) levels[0].push_back({v});
  for (std::size_t k = 1; k < max_size; ++k)
    for (const auto& t : levels[k - 1])
      for (int v = t.back() + 1; v <= n; ++v) {
        auto u = t;
        u.push_back(v);
        levels[k].push_back(std::move(u));
      }
  return levels;
}

}  // namespace

SemiSimplicialComplex boundary_simplex(int n) {
  if (n < 1) throw std::invalid_argument("boundary of a simplex needs n >= 1");
  return complex_from_tuples(increasing_subsets(n, static_cast<std::size_t>(n)));
}

SemiSimplicialComplex full_simplex(int n) {
  if (n < 0) throw std::invalid_argument("full simplex needs n >= 0");
  return complex_from_tuples(increasing_subsets(n, static_cast<std::size_t>(n) + 1));
}

la::CochainComplex augmented_cochain_complex(const SemiSimplicialComplex& x) {
  const auto report = validate(x);
  if (!report.passed) throw InvalidComplex("complex fails validation: " + report.issues.front().message);
  la::CochainComplex c;
  c.first_degree = -1;
  const int top = x.top_level();
  c.dims.push_back(1);
  for (int k = 0; k <= top; ++k) c.dims.push_back(x.level_size(k));
  if (top < 0) return c;
  // Inclusion of constants.
  la::RationalMatrix aug(x.level_size(0), 1);
  for (std::size_t v = 0; v < x.level_size(0); ++v) aug.set(v, 0, 1);
  c.differentials.push_back(std::move(aug));
  for (int l = 0; l < top; ++l) {
    la::RationalMatrix d(x.level_size(l + 1), x.level_size(l));
    for (SimplexId y = 0; y < x.level_size(l + 1); ++y) {
      auto f = x.faces(l + 1, y);
      for (std::size_t i = 0; i < f.size(); ++i) d.add(y, f[i], (i % 2 == 0) ? 1 : -1);
    }
    c.differentials.push_back(std::move(d));
  }
  return c;
}

bool is_face(const SemiSimplicialComplex& x, int lower_level, SimplexId lower, int upper_level, SimplexId upper) {
  if (lower_level >= upper_level || lower_level < 0) return false;
  std::vector<SimplexId> frontier{upper};
  for (int k = upper_level; k > lower_level; --k) {
    std::vector<SimplexId> next;
    for (SimplexId s : frontier)
      for (SimplexId f : x.faces(k, s)) next.push_back(f);
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    frontier = std::move(next);
  }
  return std::binary_search(frontier.begin(), frontier.end(), lower);
}

Flag descending_flag(const SemiSimplicialComplex& x, int top, SimplexId top_simplex, int face_index) {
  Flag f;
  f.simplices.assign(static_cast<std::size_t>(top) + 1, 0);
  f.witness.assign(static_cast<std::size_t>(top), face_index);
  f.simplices[static_cast<std::size_t>(top)] = top_simplex;
  for (int q = top - 1; q >= 0; --q)
    f.simplices[static_cast<std::size_t>(q)] = x.face(q + 1, f.simplices[static_cast<std::size_t>(q) + 1], face_index);
  return f;
}

bool is_flag(const SemiSimplicialComplex& x, const Flag& f) {
  if (f.witness.size() + 1 != f.simplices.size() && !(f.simplices.empty() && f.witness.empty())) return false;
  for (std::size_t q = 0; q + 1 < f.simplices.size(); ++q) {
    const int level = static_cast<int>(q) + 1;
    if (f.simplices[q + 1] >= x.level_size(level)) return false;
    const int i = f.witness[q];
    if (i < 0 || i > level) return false;
    if (x.face(level, f.simplices[q + 1], i) != f.simplices[q]) return false;
  }
  return true;
}

la::ChainHomotopy cone_homotopy(const SemiSimplicialComplex& product, int vertex) {
  if (!product.has_tuples()) throw std::invalid_argument("coning needs a product complex with vertex tuples");
  if (!product.find_tuple(0, {vertex})) throw std::invalid_argument("cone vertex is not a vertex of the complex");
  la::ChainHomotopy h;
  h.first_degree = -1;
  const int top = product.top_level();
  la::RationalMatrix apex(product.level_size(0), 1);
  apex.set(*product.find_tuple(0, {vertex}), 0, 1);
  h.maps.push_back(std::move(apex));
  h.bounds.push_back(1);
  for (int k = 0; k <= top; ++k) {
    la::RationalMatrix m(product.level_size(k + 1), product.level_size(k));
    if (k < top) {
      for (SimplexId s = 0; s < product.level_size(k); ++s) {
        VertexTuple t{vertex};
        const auto& base = product.tuple(k, s);
        t.insert(t.end(), base.begin(), base.end());
        auto target = product.find_tuple(k + 1, t);
        if (!target) throw std::invalid_argument("complex is not closed under coning");
        m.set(*target, s, 1);
      }
    }
    h.maps.push_back(std::move(m));
    h.bounds.push_back(1);
  }
  return h;
}

}  // namespace qss::ss
