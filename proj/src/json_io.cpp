#include "discode/json_io.hpp"

#include <cmath>

namespace discode {

namespace {

Json number(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

}  // namespace

Json to_json(Complex z) { return Json{{"re", number(z.real())}, {"im", number(z.imag())}}; }

Json to_json(const std::vector<TracePoint>& trace) {
  Json out = Json::array();
  for (const TracePoint& p : trace) out.push_back(Json::array({number(p.n), number(p.value)}));
  return out;
}

Json to_json(const NormEstimate& e) {
  Json j;
  j["kind"] = e.kind;
  j["value"] = number(e.value);
  j["argmax"] = e.argmax ? to_json(*e.argmax) : Json(nullptr);
  j["converged"] = e.converged;
  j["divergent"] = e.divergent;
  j["extrapolated"] = number(e.extrapolated);
  j["tail_exponent"] = number(e.tail_exponent);
  j["grid"] = e.grid;
  j["trace"] = to_json(e.trace);
  return j;
}

Json to_json(const ConditionReport& r) {
  Json j;
  j["criterion"] = r.criterion;
  j["quantity"] = number(r.quantity);
  j["threshold"] = r.threshold ? number(*r.threshold) : Json(nullptr);
  j["verdict"] = to_string(r.verdict);
  j["trace_verdict"] = to_string(r.analysis.verdict);
  Json extras = Json::object();
  for (const auto& [k, v] : r.extras) extras[k] = number(v);
  j["extras"] = extras;
  j["trace"] = to_json(r.trace);
  return j;
}

Json to_json(const CountResult& c) {
  return Json{{"zeta", to_json(c.zeta)},
              {"radius", number(c.radius)},
              {"count", c.count},
              {"residual", number(c.residual)},
              {"nodes", c.nodes}};
}

Json to_json(const VerifyReport& r) {
  Json items = Json::array();
  for (const VerifyItem& it : r.items) items.push_back(Json{{"id", it.id}, {"passed", it.passed}, {"detail", it.detail}});
  return Json{{"name", r.name}, {"passed", r.passed}, {"items", items}};
}

Json to_json(const Separation& s) {
  Json z1 = Json::array(), z2 = Json::array();
  for (const Complex& z : s.zeros1) z1.push_back(to_json(z));
  for (const Complex& z : s.zeros2) z2.push_back(to_json(z));
  return Json{{"zeros_f1", z1},
              {"zeros_f2", z2},
              {"min_distance", s.min_distance ? number(*s.min_distance) : Json(nullptr)},
              {"bound", number(s.bound)}};
}

Json to_json(const OmittedValues& o) {
  return Json{{"candidates", Json::array({to_json(o.first), to_json(o.second)})},
              {"clearance", Json::array({number(o.clearance_first), number(o.clearance_second)})},
              {"covered", o.covered},
              {"label", o.label}};
}

Json to_json(const TranslateNorm& t) {
  Json tail = Json::array();
  for (double v : t.tail) tail.push_back(number(v));
  return Json{{"a", to_json(t.a)}, {"value", number(t.value)}, {"tail", tail}, {"tail_monotone", t.tail_monotone}};
}

std::string dump(const Json& j) { return j.dump(2); }

}  // namespace discode
