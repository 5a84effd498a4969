#include "glinf/json_io.hpp"

namespace glinf {

Json to_json(const Weight& w) { return Json(w.components()); }

Json to_json(const HighestWeight& w) { return Json(w.parts()); }

Json to_json(const EigenvalueReport& r) {
  Json j;
  j["lambda"] = to_json(r.lambda);
  j["m"] = r.m;
  j["closed"] = to_string(r.value_closed);
  j["recursive"] = to_string(r.value_recursive);
  j["agree"] = r.agree;
  return j;
}

Json to_json(const IdentityCertificate& c) {
  Json j;
  j["lambda"] = to_json(c.lambda);
  j["mu"] = c.mu ? to_json(*c.mu) : Json(nullptr);
  j["n"] = c.n_used;
  Json roots = Json::array();
  for (const auto& r : c.roots) roots.push_back(to_string(r));
  j["roots"] = std::move(roots);
  j["residual_zero"] = c.residual_is_zero;
  j["kernel_dims"] = c.per_root_kernel_dims;
  return j;
}

Json to_json(const Decomposition& d) {
  Json j;
  j["lambda"] = to_json(d.lambda);
  j["mu"] = to_json(d.mu);
  Json s = Json::array();
  for (const auto& term : d.summands) {
    Json t;
    t["nu"] = to_json(term.nu);
    t["mult"] = term.mult;
    s.push_back(std::move(t));
  }
  j["summands"] = std::move(s);
  return j;
}

Json module_fixture(const ModuleRep& rep) {
  Json j;
  j["lambda"] = to_json(rep.lambda());
  j["n"] = rep.n();
  j["dim"] = rep.dim();
  j["hwv_index"] = rep.hwv_index();
  Json basis = Json::array();
  for (const auto& p : rep.basis()) {
    Json rows = Json::array();
    for (std::size_t r = p.rank(); r >= 1; --r) rows.push_back(p.row(r));
    basis.push_back(std::move(rows));
  }
  j["basis"] = std::move(basis);
  Json gens = Json::array();
  for (std::size_t a = 1; a <= rep.n(); ++a)
    for (std::size_t b = 1; b <= rep.n(); ++b) {
      const auto& m = rep.generator(a, b);
      Json g;
      g["i"] = a;
      g["j"] = b;
      Json entries = Json::array();
      for (std::size_t r = 0; r < m.rows(); ++r)
        for (const auto& e : m.row(r)) entries.push_back(Json::array({r, e.col, to_string(e.value)}));
      g["entries"] = std::move(entries);
      gens.push_back(std::move(g));
    }
  j["generators"] = std::move(gens);
  return j;
}

HighestWeight highest_weight_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("highest weight must be a JSON array");
  return make_highest_weight(j.get<std::vector<long>>());
}

}  // namespace glinf
