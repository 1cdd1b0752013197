#include "qss_cli/project.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include "qss_cli/json_io.hpp"

namespace qss::cli {

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : Error(line ? "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message : message),
      line_(line),
      column_(column) {}

namespace {

const std::vector<std::string> kSections = {"groups",   "complexes",        "actions",   "profiles",
                                            "families", "double_complexes", "homotopies"};

// Singular nouns for messages.
std::string noun(const std::string& section) {
  if (section == "complexes") return "complex";
  if (section == "families") return "family";
  if (section == "double_complexes") return "double complex";
  if (section == "homotopies") return "homotopy";
  return section.substr(0, section.size() - 1);
}

// Thrown by a parser when a referenced object exists but failed to build.
struct Skipped {
  std::string reason;
};

class Loader {
 public:
  explicit Loader(Project& p) : p_(p) {}

  void run(const Json& doc) {
    if (!doc.is_object()) throw ParseError("project must be a JSON object");
    if (!doc.contains("version")) throw ParseError("missing \"version\"");
    if (!doc.at("version").is_string() || doc.at("version").get<std::string>() != "1")
      throw ParseError("unsupported schema version " + doc.at("version").dump() + " (expected \"1\")");
    p_.version = "1";
    for (const auto& [key, value] : doc.items()) {
      if (key == "version" || key == "description") continue;
      if (std::find(kSections.begin(), kSections.end(), key) == kSections.end())
        throw ParseError("unknown section \"" + key + "\"");
      if (!value.is_object()) throw ParseError("/" + key + ": section must be an object of named entries");
      for (const auto& [name, _] : value.items()) p_.declared[key].insert(name);
    }
    section(doc, "groups", [&](const std::string& n, const Json& j) { p_.groups[n] = group(j); });
    section(doc, "complexes", [&](const std::string& n, const Json& j) { p_.complexes[n] = complex(j); });
    section(doc, "actions", [&](const std::string& n, const Json& j) { p_.actions[n] = action(j); });
    section(doc, "profiles", [&](const std::string& n, const Json& j) { p_.profiles[n] = profile(j); });
    section(doc, "families", [&](const std::string& n, const Json& j) { p_.families[n] = family(j); });
    section(doc, "double_complexes", [&](const std::string& n, const Json& j) { p_.double_complexes[n] = dc(j); });
    section(doc, "homotopies", [&](const std::string& n, const Json& j) { p_.homotopies[n] = homotopy(j); });
  }

 private:
  using Handler = std::function<void(const std::string&, const Json&)>;

  void section(const Json& doc, const std::string& key, const Handler& h) {
    if (!doc.contains(key)) return;
    for (const auto& [name, value] : doc.at(key).items()) {
      path_ = "/" + key + "/" + name;
      try {
        if (!value.is_object()) throw std::invalid_argument("entry must be an object");
        h(name, value);
      } catch (const Skipped& s) {
        p_.problems.push_back(noun(key) + " '" + name + "': " + s.reason);
      } catch (const ParseError&) {
        throw;
      } catch (const Error& e) {
        p_.problems.push_back(noun(key) + " '" + name + "': " + e.what());
      } catch (const std::exception& e) {
        throw ParseError(path_ + ": " + e.what());
      }
    }
  }

  template <class Map>
  const typename Map::mapped_type& ref(const Map& built, const std::string& sec, const Json& j) {
    if (!j.is_string()) throw std::invalid_argument("reference to a " + noun(sec) + " must be a name");
    const auto name = j.get<std::string>();
    if (!p_.declares(sec, name)) throw ParseError(path_ + ": unknown " + noun(sec) + " '" + name + "'");
    auto it = built.find(name);
    if (it == built.end()) throw Skipped{"depends on " + noun(sec) + " '" + name + "', which could not be built"};
    return it->second;
  }

  static std::string kind_of(const Json& j) { return j.at("kind").get<std::string>(); }

  std::shared_ptr<const grp::FiniteGroup> group(const Json& j) {
    const auto kind = kind_of(j);
    grp::FiniteGroup g;
    if (kind == "symmetric") {
      g = grp::FiniteGroup::symmetric(j.at("degree").get<int>());
    } else if (kind == "trivial") {
      g = grp::FiniteGroup::trivial();
    } else if (kind == "permutations") {
      g = grp::FiniteGroup::from_permutations(j.at("generators").get<std::vector<grp::Permutation>>(),
                                              j.at("degree").get<int>());
    } else if (kind == "table") {
      g = grp::FiniteGroup::from_table(j.at("table").get<std::vector<std::vector<grp::ElementId>>>());
    } else {
      throw std::invalid_argument("unknown group kind '" + kind + "'");
    }
    return std::make_shared<const grp::FiniteGroup>(std::move(g));
  }

  static ss::SemiSimplicialComplex explicit_complex(const Json& levels) {
    std::vector<std::vector<std::vector<ss::SimplexId>>> faces;
    std::vector<std::vector<ss::VertexTuple>> tuples;
    bool all_tuples = true;
    for (std::size_t k = 0; k < levels.size(); ++k) {
      const auto& level = levels.at(k);
      const auto n = level.size();
      std::vector<std::vector<ss::SimplexId>> f(n);
      std::vector<ss::VertexTuple> t(n);
      std::vector<bool> seen(n, false);
      for (const auto& rec : level) {
        const auto id = rec.at("id").get<std::size_t>();
        if (id >= n || seen[id])
          throw std::invalid_argument("level " + std::to_string(k) + ": simplex ids must be 0.." +
                                      std::to_string(n) + "-1, each once (bad id " + std::to_string(id) + ")");
        seen[id] = true;
        f[id] = rec.value("faces", std::vector<ss::SimplexId>{});
        if (rec.contains("tuple")) t[id] = rec.at("tuple").get<ss::VertexTuple>();
        else all_tuples = false;
      }
      faces.push_back(std::move(f));
      tuples.push_back(std::move(t));
    }
    if (!all_tuples) tuples.clear();
    return ss::SemiSimplicialComplex(std::move(faces), std::move(tuples));
  }

  std::shared_ptr<const ss::SemiSimplicialComplex> complex(const Json& j) {
    const auto kind = kind_of(j);
    ss::SemiSimplicialComplex x;
    if (kind == "injective_words") x = ss::injective_words_complex(j.at("n").get<int>());
    else if (kind == "product") x = ss::product_complex(j.at("vertices").get<int>(), j.at("top").get<int>());
    else if (kind == "boundary_simplex") x = ss::boundary_simplex(j.at("n").get<int>());
    else if (kind == "full_simplex") x = ss::full_simplex(j.at("n").get<int>());
    else if (kind == "tuples")
      x = ss::complex_from_tuples(j.at("levels").get<std::vector<std::vector<ss::VertexTuple>>>());
    else if (kind == "explicit") x = explicit_complex(j.at("levels"));
    else throw std::invalid_argument("unknown complex kind '" + kind + "'");
    return std::make_shared<const ss::SemiSimplicialComplex>(std::move(x));
  }

  static grp::ElementId element(const grp::FiniteGroup& g, const Json& e) {
    if (e.is_array()) {
      const auto perm = e.get<grp::Permutation>();
      if (!g.has_permutations()) throw std::invalid_argument("group has no permutation labels");
      if (auto id = g.find_permutation(perm)) return *id;
      throw InvalidAction("permutation " + e.dump() + " is not in the group");
    }
    const auto id = e.get<grp::ElementId>();
    if (id >= g.size()) throw std::invalid_argument("element id " + std::to_string(id) + " out of range");
    return id;
  }

  std::shared_ptr<const grp::GroupAction> action(const Json& j) {
    const auto g = ref(p_.groups, "groups", j.at("group"));
    const auto x = ref(p_.complexes, "complexes", j.at("complex"));
    const auto kind = kind_of(j);
    using Table = std::vector<std::vector<std::vector<ss::SimplexId>>>;
    if (kind == "letters") return std::make_shared<const grp::GroupAction>(grp::GroupAction::letter_action(g, x));
    if (kind == "trivial") return std::make_shared<const grp::GroupAction>(grp::GroupAction::trivial_action(g, x));
    if (kind == "generators") {
      std::vector<grp::ElementId> gens;
      for (const auto& e : j.at("generators")) gens.push_back(element(*g, e));
      return std::make_shared<const grp::GroupAction>(
          grp::GroupAction::from_generator_images(g, x, gens, j.at("images").get<Table>()));
    }
    if (kind == "table") return std::make_shared<const grp::GroupAction>(g, x, j.at("table").get<Table>());
    throw std::invalid_argument("unknown action kind '" + kind + "'");
  }

  static std::vector<ExtInt> ext_list(const Json& j) {
    std::vector<ExtInt> out;
    for (const auto& v : j) out.push_back(ext_from_json(v));
    return out;
  }

  static quillen::StabilityProfile profile(const Json& j) {
    quillen::StabilityProfile p;
    if (j.contains("preset")) {
      const auto preset = j.at("preset").get<std::string>();
      if (preset == "general_linear") p = quillen::StabilityProfile::general_linear();
      else if (preset == "special_linear") p = quillen::StabilityProfile::special_linear(j.at("R").get<int>());
      else throw std::invalid_argument("unknown profile preset '" + preset + "'");
      return p;
    }
    p.R = ext_from_json(j.at("R"));
    p.q0 = j.value("q0", 1);
    if (j.contains("gamma")) p.gamma = ext_list(j.at("gamma"));
    if (j.contains("tau")) p.tau = ext_list(j.at("tau"));
    if (j.contains("extension")) {
      const auto& e = j.at("extension");
      if (e.is_string()) {
        p.gamma_ext = p.tau_ext = quillen::parse_extension(e.get<std::string>());
      } else {
        if (e.contains("gamma")) p.gamma_ext = quillen::parse_extension(e.at("gamma").get<std::string>());
        if (e.contains("tau")) p.tau_ext = quillen::parse_extension(e.at("tau").get<std::string>());
      }
    }
    p.check();
    return p;
  }

  static grp::Mq3Maps mq3_maps(const Json& j) {
    grp::Mq3Maps m;
    if (j.contains("pi"))
      for (const auto& e : j.at("pi")) {
        if (e.is_null()) {
          m.pi.emplace_back();
          continue;
        }
        grp::PartialMap pm;
        for (const auto& pair : e) pm[pair.at(0).get<grp::ElementId>()] = pair.at(1).get<grp::ElementId>();
        m.pi.emplace_back(std::move(pm));
      }
    if (j.contains("sigma"))
      for (const auto& e : j.at("sigma")) {
        if (e.is_null()) m.sigma.emplace_back();
        else m.sigma.emplace_back(e.get<grp::GroupMap>());
      }
    return m;
  }

  quillen::QuillenFamily family(const Json& j) {
    const auto kind = kind_of(j);
    quillen::QuillenFamily fam;
    if (kind == "symmetric") {
      fam = quillen::symmetric_family(j.at("R").get<int>());
    } else if (kind == "explicit") {
      for (const auto& name : j.at("actions")) {
        const auto a = ref(p_.actions, "actions", name);
        fam.actions.push_back(a);
        fam.tower.groups.push_back(a->group_ptr());
      }
      const auto& emb = j.at("embeddings");
      if (emb.is_string()) {
        if (emb.get<std::string>() != "letters") throw std::invalid_argument("embeddings must be \"letters\" or a list");
        for (std::size_t r = 0; r + 1 < fam.tower.groups.size(); ++r)
          fam.tower.iota.push_back(grp::extend_permutations(*fam.tower.groups[r], *fam.tower.groups[r + 1]));
      } else {
        fam.tower.iota = emb.get<std::vector<grp::GroupMap>>();
      }
      fam.maps.resize(fam.actions.size());
      if (j.contains("maps")) {
        const auto& maps = j.at("maps");
        for (std::size_t r = 0; r < maps.size() && r < fam.maps.size(); ++r)
          if (!maps.at(r).is_null()) fam.maps[r] = mq3_maps(maps.at(r));
      }
    } else {
      throw std::invalid_argument("unknown family kind '" + kind + "'");
    }
    fam.variant = grp::parse_mq3_variant(j.value("variant", std::string("a")));
    if (j.contains("profile")) fam.declared = ref(p_.profiles, "profiles", j.at("profile"));
    fam.q0 = j.value("q0", fam.declared ? fam.declared->q0 : 1);
    return fam;
  }

  static spec::DoubleComplex dc(const Json& j) {
    auto d = spec::DoubleComplex::with_dims(j.at("dims").get<std::vector<std::vector<std::size_t>>>());
    auto fill = [&](const char* key, std::vector<std::vector<la::RationalMatrix>>& target) {
      if (!j.contains(key)) return;
      const auto& grid = j.at(key);
      if (grid.size() != target.size())
        throw ShapeMismatch(std::string(key) + " has " + std::to_string(grid.size()) + " columns, dims has " +
                            std::to_string(target.size()));
      for (std::size_t p = 0; p < grid.size(); ++p) {
        if (grid.at(p).size() != target[p].size())
          throw ShapeMismatch(std::string(key) + "[" + std::to_string(p) + "] has the wrong length");
        for (std::size_t q = 0; q < grid.at(p).size(); ++q)
          if (!grid.at(p).at(q).is_null()) target[p][q] = matrix_from_json(grid.at(p).at(q));
      }
    };
    fill("horizontal", d.horiz);
    fill("vertical", d.vert);
    d.truncated_at = j.value("truncated_at", -1);
    d.check();
    return d;
  }

  HomotopySpec homotopy(const Json& j) {
    HomotopySpec h;
    h.complex = j.at("complex").get<std::string>();
    const auto x = ref(p_.complexes, "complexes", j.at("complex"));
    const auto kind = kind_of(j);
    if (kind == "cone") {
      h.homotopy = ss::cone_homotopy(*x, j.value("vertex", 0));
    } else if (kind == "explicit") {
      h.homotopy.first_degree = j.value("first_degree", -1);
      for (const auto& m : j.at("maps")) h.homotopy.maps.push_back(matrix_from_json(m));
      for (const auto& b : j.at("bounds")) h.homotopy.bounds.push_back(rational_from_json(b));
    } else {
      throw std::invalid_argument("unknown homotopy kind '" + kind + "'");
    }
    h.up_to = j.value("up_to", x->top_level() - 1);
    return h;
  }

  Project& p_;
  std::string path_;
};

std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

template <class Map>
const typename Map::mapped_type& lookup(const Project& p, const Map& m, const std::string& section,
                                        const std::string& name) {
  auto it = m.find(name);
  if (it != m.end()) return it->second;
  if (p.declares(section, name))
    throw NameNotFound(noun(section) + " '" + name + "' could not be built; run validate for details");
  std::string known;
  for (const auto& [k, _] : m) known += (known.empty() ? "" : ", ") + k;
  throw NameNotFound("no " + noun(section) + " named '" + name + "'" +
                     (known.empty() ? std::string() : " (known: " + known + ")"));
}

}  // namespace

bool Project::declares(const std::string& section, const std::string& name) const {
  auto it = declared.find(section);
  return it != declared.end() && it->second.count(name) > 0;
}

const std::shared_ptr<const grp::GroupAction>& Project::action(const std::string& name) const {
  return lookup(*this, actions, "actions", name);
}
const quillen::StabilityProfile& Project::profile(const std::string& name) const {
  return lookup(*this, profiles, "profiles", name);
}
const quillen::QuillenFamily& Project::family(const std::string& name) const {
  return lookup(*this, families, "families", name);
}
const spec::DoubleComplex& Project::double_complex(const std::string& name) const {
  return lookup(*this, double_complexes, "double_complexes", name);
}
const HomotopySpec& Project::homotopy(const std::string& name) const {
  return lookup(*this, homotopies, "homotopies", name);
}
const std::shared_ptr<const ss::SemiSimplicialComplex>& Project::complex(const std::string& name) const {
  return lookup(*this, complexes, "complexes", name);
}

Project parse_project(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const auto [line, col] = line_column(text, e.byte);
    std::string what = e.what();
    // Drop the library's "[json.exception.parse_error.101] parse error at line 1, column 1: " prefix.
    if (auto pos = what.find(": "); pos != std::string::npos) what = what.substr(pos + 2);
    throw ParseError(what, line, col);
  }
  Project p;
  Loader(p).run(doc);
  return p;
}

Project load_project(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_project(ss.str());
}

}  // namespace qss::cli
