#include "endrank/json_io.hpp"

#include <string>

namespace endrank {

namespace {

nlohmann::ordered_json labels(SemigroupTable const& t, ElementSet const& s) {
  return t.labels_of(s);
}

}  // namespace

nlohmann::ordered_json to_json(RankReport const& report,
                               SemigroupTable const& table) {
  auto ranks   = nlohmann::ordered_json::object();
  auto exact   = nlohmann::ordered_json::object();
  auto methods = nlohmann::ordered_json::object();
  auto certs   = nlohmann::ordered_json::object();
  for (std::size_t k = 0; k < 5; ++k) {
    auto const  key = "r" + std::to_string(k + 1);
    auto const& v   = report.ranks[k];
    if (!v) {
      ranks[key]   = nullptr;
      exact[key]   = nullptr;
      methods[key] = nullptr;
      continue;
    }
    ranks[key]   = v->value;
    exact[key]   = v->exact;
    methods[key] = std::string(to_string(v->method));
  }
  constexpr std::pair<std::size_t, char const*> cert_keys[]
      = {{1, "r2"}, {2, "r3"}, {3, "r4"}, {4, "r5_prime"}};
  for (auto [k, key] : cert_keys) {
    auto const& v = report.ranks[k];
    certs[key]    = v && v->certificate ? labels(table, *v->certificate)
                                        : nlohmann::ordered_json(nullptr);
  }
  nlohmann::ordered_json j;
  j["n"] = report.n ? nlohmann::ordered_json(*report.n)
                    : nlohmann::ordered_json(nullptr);
  j["size"]             = report.size;
  j["ranks"]            = std::move(ranks);
  j["exact"]            = std::move(exact);
  j["certificates"]     = std::move(certs);
  j["methods"]          = std::move(methods);
  j["budget_exhausted"] = report.budget_exhausted;
  return j;
}

nlohmann::ordered_json to_json(EndoMonoid const& monoid) {
  nlohmann::ordered_json elements = nlohmann::ordered_json::array();
  for (std::size_t id = 0; id < monoid.size(); ++id) {
    auto const&    f = monoid.elements()[id];
    nlohmann::ordered_json e;
    e["id"]    = id;
    e["label"] = f.label();
    if (auto const* a = std::get_if<Automorphism>(&f.kind())) {
      e["tag"]   = "automorphism";
      e["sigma"] = a->sigma.image();
    } else if (auto const* c = std::get_if<NonzeroConstant>(&f.kind())) {
      e["tag"] = "nonzero-constant";
      e["i"]   = c->i;
    } else {
      e["tag"] = "zero-constant";
    }
    e["image"] = f.image();
    elements.push_back(std::move(e));
  }
  return {{"n", monoid.n()},
          {"size", monoid.size()},
          {"automorphisms", monoid.automorphism_count()},
          {"elements", std::move(elements)}};
}

nlohmann::ordered_json to_json(ConjectureReport const& report,
                       SemigroupTable const&   table) {
  nlohmann::ordered_json j;
  j["n"]                   = report.n;
  j["predicted_r4"]        = report.predicted;
  j["verdict"]             = std::string(to_string(report.verdict));
  j["r4"]                  = report.best_size;
  j["r4_exact"]            = report.exact;
  j["lower_bound_witness"] = labels(table, report.lower_bound_witness);
  j["refutation"]          = report.refutation
                                 ? labels(table, *report.refutation)
                                 : nlohmann::ordered_json(nullptr);
  j["nodes"]               = report.nodes;
  return j;
}

}  // namespace endrank
