#include <sstream>

#include "qss/quillen.hpp"

namespace qss::quillen {

QuillenFamily symmetric_family(int R) {
  if (R < 0) throw std::invalid_argument("family needs R >= 0");
  QuillenFamily fam;
  for (int r = 0; r <= R; ++r) {
    auto g = std::make_shared<const grp::FiniteGroup>(grp::FiniteGroup::symmetric(r));
    fam.tower.groups.push_back(g);
    if (r == 0) {
      auto empty = std::make_shared<const ss::SemiSimplicialComplex>();
      fam.actions.push_back(std::make_shared<const grp::GroupAction>(grp::GroupAction::trivial_action(g, empty)));
    } else {
      auto x = std::make_shared<const ss::SemiSimplicialComplex>(ss::injective_words_complex(r));
      fam.actions.push_back(std::make_shared<const grp::GroupAction>(grp::GroupAction::letter_action(g, x)));
    }
  }
  for (int r = 0; r < R; ++r)
    fam.tower.iota.push_back(grp::extend_permutations(fam.tower.at(r), fam.tower.at(r + 1)));
  fam.maps.resize(static_cast<std::size_t>(R) + 1);
  return fam;
}

namespace {

template <class F>
void guarded(std::vector<std::string>& failures, const std::string& what, F&& f) {
  try {
    f();
  } catch (const std::exception& e) {
    failures.push_back(what + ": " + e.what());
  }
}

}  // namespace

FamilyReport verify_family(const QuillenFamily& fam, const FamilyOptions& opts) {
  FamilyReport rep;
  const int R = fam.R();
  if (R < 0) {
    rep.failures.push_back("family has no members");
    rep.passed = false;
    return rep;
  }
  if (fam.tower.groups.size() < static_cast<std::size_t>(R) + 1)
    rep.failures.push_back("family lists fewer groups than complexes");
  if (fam.tower.iota.size() < static_cast<std::size_t>(R))
    rep.failures.push_back("family lists fewer embeddings than links");
  const bool tower_ok = rep.failures.empty();

  if (tower_ok) {
    for (int r = 0; r < R; ++r) {
      const auto& from = fam.tower.at(r);
      const auto& to = fam.tower.at(r + 1);
      const auto& f = fam.tower.iota[static_cast<std::size_t>(r)];
      if (auto bad = grp::homomorphism_defect(from, to, f)) {
        std::ostringstream os;
        os << "iota_" << r << " is not a homomorphism";
        if (f.size() == from.size()) os << " at (" << from.name(bad->first) << ", " << from.name(bad->second) << ")";
        rep.failures.push_back(os.str());
      } else if (!grp::is_injective(f)) {
        rep.failures.push_back("iota_" + std::to_string(r) + " is not injective");
      }
    }
  }

  StabilityProfile computed;
  computed.R = ExtInt(R);
  computed.q0 = fam.declared ? fam.declared->q0 : fam.q0;

  for (int r = 0; r <= R; ++r) {
    MemberReport m;
    m.r = r;
    const auto& a = *fam.actions[static_cast<std::size_t>(r)];
    const auto& x = a.complex();
    m.gamma = ExtInt::neg_inf();
    m.tau = ExtInt::neg_inf();

    if (tower_ok && fam.tower.at(r).size() != a.group().size())
      m.failures.push_back("acting group has order " + std::to_string(a.group().size()) + " but G_" +
                           std::to_string(r) + " has order " + std::to_string(fam.tower.at(r).size()));
    const auto laws = grp::check_group_laws(a.group());
    for (const auto& f : laws.failures) m.failures.push_back("group law: " + f);
    const auto act = grp::check_action(a);
    for (const auto& f : act.failures) m.failures.push_back("action: " + f);
    const auto valid = ss::validate(x);
    for (const auto& issue : valid.issues) m.failures.push_back("complex: " + issue.message);

    if (valid.passed) {
      guarded(m.failures, "acyclicity", [&] { m.gamma = la::acyclicity_degree(ss::augmented_cochain_complex(x)); });
    }
    m.tau = grp::transitivity_degree(a);
    for (int k = 0; k <= x.top_level(); ++k) m.orbit_counts.push_back(grp::orbits(a, k).size());

    const int depth = m.tau.is_finite() ? static_cast<int>(m.tau.value()) : -1;
    std::optional<grp::FlaggedAction> flag;
    guarded(m.failures, "generic flag", [&] {
      flag = grp::generic_flag(fam.actions[static_cast<std::size_t>(r)], depth);
    });
    if (flag) {
      for (const auto& h : flag->stabilizers) m.stabilizer_orders.push_back(h.size());
      m.int_inclusion = grp::check_int_inclusion(*flag);
      for (const auto& f : m.int_inclusion.failures) m.failures.push_back("w-inclusion: " + f);
      if (tower_ok) {
        if (fam.variant == grp::Mq3Variant::A) {
          for (int q = 0; q <= depth; ++q) m.expected_orders.push_back(fam.tower.at(r - q - 1).size());
          if (m.expected_orders != m.stabilizer_orders)
            m.failures.push_back("stabilizer orders differ from |G_{r-q-1}|");
        }
        guarded(m.failures, "MQ3" + grp::to_string(fam.variant), [&] {
          const auto& given = r < static_cast<int>(fam.maps.size()) ? fam.maps[static_cast<std::size_t>(r)]
                                                                    : std::optional<grp::Mq3Maps>{};
          const grp::Mq3Maps maps = given ? *given : grp::standard_mq3_maps(*flag, fam.tower, r);
          m.mq3 = grp::check_mq3(*flag, fam.tower, r, fam.variant, maps);
        });
        for (const auto& f : m.mq3.failures) m.failures.push_back("MQ3" + grp::to_string(fam.variant) + ": " + f);
      }
      if (opts.theorem_a) {
        if (x.level_size(0) == 0) {
          m.notes.push_back("empty complex: the spectral sequence checks do not apply");
        } else {
          try {
            m.theorem_a = spec::verify_theorem_A(*flag, m.gamma, m.tau, opts.budget);
            for (const auto& c : m.theorem_a->checks)
              for (const auto& f : c.failures) m.failures.push_back("spectral sequence: " + f);
            if (m.theorem_a->partial)
              m.notes.push_back("spectral sequence checked through total degree " +
                                std::to_string(m.theorem_a->exact_through) + " only (budget)");
          } catch (const BudgetExceeded& e) {
            m.notes.push_back(std::string("spectral sequence skipped: ") + e.what());
          }
        }
      }
    }

    computed.gamma.push_back(m.gamma);
    computed.tau.push_back(m.tau);
    if (fam.declared) {
      auto compare = [&](const char* name, ExtInt mine, auto getter) {
        try {
          const ExtInt d = getter(r);
          if (!(d == mine))
            m.failures.push_back(std::string("declared ") + name + "(" + std::to_string(r) + ") = " + d.to_string() +
                                 " but computed " + mine.to_string());
        } catch (const IndexOutOfRange&) {
          m.failures.push_back(std::string("declared profile has no ") + name + "(" + std::to_string(r) + ")");
        }
      };
      compare("gamma", m.gamma, [&](int k) { return fam.declared->gamma_at(k); });
      compare("tau", m.tau, [&](int k) { return fam.declared->tau_at(k); });
    }
    m.passed = m.failures.empty();
    rep.passed = rep.passed && m.passed;
    rep.members.push_back(std::move(m));
  }
  rep.profile = computed;
  rep.table = stability_table(computed, opts.q_max);
  rep.passed = rep.passed && rep.failures.empty();
  return rep;
}

}  // namespace qss::quillen
