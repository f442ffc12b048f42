#include "stein/serialize.hpp"

#include <cmath>
#include <sstream>

#include "stein/error.hpp"

namespace stein {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// '.' decimal separator regardless of locale, shortest round-trip digits.
std::string num(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return Json(x).dump();
}

Json term_json(const RadicalTerm& t) {
  return {{"coefficient", t.coefficient.str()},
          {"radicand", t.radicand.str()},
          {"root", t.root},
          {"pi_power", t.pi_power.str()},
          {"exact", t.str()},
          {"value", t.value()}};
}

const char* linearity_name(Linearity l) {
  switch (l) {
    case Linearity::linear: return "linear";
    case Linearity::nonlinear: return "nonlinear";
    case Linearity::degenerate: return "degenerate";
  }
  return "?";
}

}  // namespace

Json to_json(const SpectrumAtomList& atoms) {
  Json list = Json::array();
  for (auto& a : atoms.atoms())
    list.push_back({{"value", a.value.str()}, {"value_float", a.value.to_double()}, {"probability", a.probability.str()}});
  return {{"atoms", list}, {"count", atoms.size()}, {"second_moment", atoms.second_moment().str()}};
}

Json to_json(const ExchangeableStats& s) {
  Json j = {{"a", s.a.str()},
            {"second_moment", s.second_moment.str()},
            {"cond_var", s.cond_var.str()},
            {"fourth_moment", s.fourth_moment.str()}};
  if (s.max_step) j["max_step"] = s.max_step->str();
  if (s.third_abs_moment) j["third_abs_moment"] = s.third_abs_moment->str();
  return j;
}

Json to_json(const BoundReport& b) {
  Json terms = Json::array(), closed = Json::array();
  for (auto& t : b.terms) terms.push_back(term_json(t));
  for (auto& t : b.closed_form) closed.push_back(term_json(t));
  Json j = {{"variant", to_string(b.variant)}, {"stats", to_json(b.stats)}, {"terms", terms},
            {"total", b.total}, {"tolerance", BoundReport::kTolerance}};
  if (!b.closed_form.empty()) {
    j["closed_form"] = closed;
    j["closed_form_total"] = *b.closed_form_total;
  }
  return j;
}

Json to_json(const PipelineResult& r) {
  return {{"bound", to_json(r.bound)}, {"kolmogorov", r.kolmogorov}, {"dominated", r.dominated},
          {"atoms", r.distribution.size()}};
}

Json to_json(const AuditReport& a, const ChainKernel& k) {
  Json j = {{"chain", k.name},
            {"states", k.size()},
            {"signed", a.signed_kernel},
            {"max_row_deviation", a.max_row_deviation.str()},
            {"balance_residual", a.balance_residual.str()},
            {"nonnegative", a.nonnegative},
            {"linearity", linearity_name(a.linearity)},
            {"second_moment_w", a.second_moment_w.str()},
            {"mean_coefficient_w", a.mean_coefficient_w.str()},
            {"max_step", a.max_step.str()},
            {"passed", a.passed()}};
  if (a.a) j["a"] = a.a->str();
  if (a.linearity == Linearity::nonlinear) j["witness"] = k.states[a.witness];
  return j;
}

Json to_json(const WalkCoefficients& w) {
  Json values = Json::object();
  Json order = Json::array();
  for (std::size_t i = 0; i < w.labels.size(); ++i) {
    values[w.labels[i]] = w.values[i].str();
    order.push_back(w.labels[i]);
  }
  return {{"structure", w.structure}, {"generator", w.generator}, {"m", w.m}, {"labels", order}, {"values", values}};
}

Json to_json(const std::vector<SweepRow>& rows) {
  Json list = Json::array();
  for (auto& r : rows)
    list.push_back({{"n", r.n},
                    {"term1", r.term1},
                    {"term2", r.term2},
                    {"total", r.total},
                    {"total_n_quarter", r.total_scaled},
                    {"term1_n_half", r.term1_scaled},
                    {"kolmogorov", r.kolmogorov},
                    {"dominated", r.dominated}});
  return {{"rows", list}};
}

Json to_json(const std::vector<CheckResult>& checks) {
  Json list = Json::array();
  std::size_t failed = 0;
  for (auto& c : checks) {
    Json e = {{"suite", c.suite}, {"tag", c.tag}, {"structure", c.structure}, {"params", c.params}, {"passed", c.passed}};
    if (!c.detail.empty()) e["detail"] = c.detail;
    list.push_back(e);
    if (!c.passed) ++failed;
  }
  return {{"checks", list}, {"total", checks.size()}, {"failed", failed}};
}

std::string to_csv(const SpectrumAtomList& atoms) {
  std::ostringstream o;
  o << "value,value_float,probability\n";
  for (auto& a : atoms.atoms()) o << a.value.str() << ',' << num(a.value.to_double()) << ',' << a.probability.str() << '\n';
  return o.str();
}

std::string to_csv(const PipelineResult& r) {
  std::ostringstream o;
  o << "kind,index,coefficient,radicand,root,pi_power,exact,value\n";
  auto rows = [&](const char* kind, const std::vector<RadicalTerm>& ts) {
    for (std::size_t i = 0; i < ts.size(); ++i) {
      const auto& t = ts[i];
      o << kind << ',' << i + 1 << ',' << t.coefficient.str() << ',' << t.radicand.str() << ',' << t.root << ','
        << t.pi_power.str() << ',' << t.str() << ',' << num(t.value()) << '\n';
    }
  };
  rows("term", r.bound.terms);
  o << "total,,,,,,," << num(r.bound.total) << '\n';
  if (!r.bound.closed_form.empty()) {
    rows("closed_form", r.bound.closed_form);
    o << "closed_form_total,,,,,,," << num(*r.bound.closed_form_total) << '\n';
  }
  o << "kolmogorov,,,,,,," << num(r.kolmogorov) << '\n';
  o << "dominated,,,,,,," << (r.dominated ? "true" : "false") << '\n';
  return o.str();
}

std::string to_csv(const AuditReport& a, const ChainKernel& k) {
  std::ostringstream o;
  o << "field,value\n";
  for (auto& [key, val] : to_json(a, k).items()) {
    o << key << ',' << csv_field(val.is_string() ? val.get<std::string>() : val.dump()) << '\n';
  }
  return o.str();
}

std::string to_csv(const WalkCoefficients& w) {
  std::ostringstream o;
  o << "label,p\n";
  for (std::size_t i = 0; i < w.labels.size(); ++i) o << csv_field(w.labels[i]) << ',' << w.values[i].str() << '\n';
  return o.str();
}

std::string to_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream o;
  o << "n,term1,term2,total,total_n_quarter,term1_n_half,kolmogorov,dominated\n";
  for (auto& r : rows)
    o << r.n << ',' << num(r.term1) << ',' << num(r.term2) << ',' << num(r.total) << ',' << num(r.total_scaled) << ','
      << num(r.term1_scaled) << ',' << num(r.kolmogorov) << ',' << (r.dominated ? "true" : "false") << '\n';
  return o.str();
}

std::string to_csv(const std::vector<CheckResult>& checks) {
  std::ostringstream o;
  o << "suite,tag,structure,params,passed,detail\n";
  for (auto& c : checks)
    o << c.suite << ',' << csv_field(c.tag) << ',' << c.structure << ',' << csv_field(c.params) << ','
      << (c.passed ? "true" : "false") << ',' << csv_field(c.detail) << '\n';
  return o.str();
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::vector<RelationMatrix> parse_relations(const Json& j) {
  if (!j.is_object() || !j.contains("relations") || !j["relations"].is_array())
    throw ValidationError("scheme file needs an array field \"relations\"");
  const Json& rel = j["relations"];
  if (rel.empty()) throw ValidationError("scheme file has no relations");
  std::vector<RelationMatrix> out;
  std::size_t side = 0;
  for (std::size_t r = 0; r < rel.size(); ++r) {
    const Json& m = rel[r];
    if (!m.is_array() || m.empty()) throw ValidationError("relation " + std::to_string(r) + " is not a non-empty array");
    std::vector<int> flat;
    std::size_t rows;
    auto entry = [&](const Json& e) {
      if (!e.is_number_integer() || (e.get<int>() != 0 && e.get<int>() != 1))
        throw ValidationError("relation " + std::to_string(r) + " has an entry other than 0/1");
      flat.push_back(e.get<int>());
    };
    if (m[0].is_array()) {
      rows = m.size();
      for (auto& row : m) {
        if (!row.is_array() || row.size() != rows)
          throw ValidationError("relation " + std::to_string(r) + " is not square");
        for (auto& e : row) entry(e);
      }
    } else {
      for (auto& e : m) entry(e);
      rows = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(flat.size()))));
      if (rows * rows != flat.size()) throw ValidationError("relation " + std::to_string(r) + " length is not a square");
    }
    if (side == 0) side = rows;
    if (rows != side) throw ValidationError("relations have different sizes");
    RelationMatrix mat(side, side);
    for (std::size_t a = 0; a < side; ++a)
      for (std::size_t b = 0; b < side; ++b) mat(a, b) = flat[a * side + b];
    out.push_back(std::move(mat));
  }
  return out;
}

}  // namespace stein
