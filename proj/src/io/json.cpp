#include "fpt/io/json.hpp"

#include "fpt/error.hpp"
#include "fpt/transform.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace fpt::io {

namespace {

template <class Tag>
Json functional_json(const WordFunctional<Rational, Tag>& f) {
  Json j;
  j["vars"] = f.alphabet().names();
  j["order"] = f.order();
  j["kind"] = Tag::kind;
  Json table = Json::object();
  for (std::size_t i = 1; i < f.size(); ++i) {
    table[f.alphabet().format(f.word_at(i))] = to_string(f.values()[i]);
  }
  j["table"] = std::move(table);
  return j;
}

template <class Tag>
WordFunctional<Rational, Tag> functional_from(const Json& j) {
  if (!j.is_object()) throw StructuralError("functional file: top level must be an object");
  for (const char* key : {"vars", "order", "kind", "table"}) {
    if (!j.contains(key)) throw StructuralError(std::string("functional file: missing \"") + key + "\"");
  }
  if (!j["vars"].is_array()) throw StructuralError("functional file: \"vars\" must be an array of names");
  std::vector<std::string> names;
  for (const auto& v : j["vars"]) {
    if (!v.is_string()) throw StructuralError("functional file: variable names must be strings");
    names.push_back(v.get<std::string>());
  }
  if (names.empty()) throw StructuralError("functional file: no variables");
  if (!j["order"].is_number_integer() || j["order"].get<int>() < 1) {
    throw StructuralError("functional file: \"order\" must be a positive integer");
  }
  if (j["kind"] != Tag::kind) {
    throw StructuralError(std::string("functional file: expected kind \"") + Tag::kind + "\"");
  }
  if (!j["table"].is_object()) throw StructuralError("functional file: \"table\" must be an object");
  const int order = j["order"].get<int>();
  if (order > order_cap()) {
    throw CapacityError("functional file: order " + std::to_string(order) + " exceeds the cap " +
                        std::to_string(order_cap()));
  }
  WordFunctional<Rational, Tag> f(Alphabet(names), order);
  std::vector<bool> seen(f.size(), false);
  for (const auto& [key, value] : j["table"].items()) {
    if (!value.is_string()) throw StructuralError("functional file: value of \"" + key + "\" must be a \"p/q\" string");
    const Word w = f.alphabet().parse(key);
    if (w.empty() || static_cast<int>(w.size()) > order) {
      throw StructuralError("functional file: word \"" + key + "\" outside lengths 1.." + std::to_string(order));
    }
    const std::size_t index = f.layout().index(w);
    seen[index] = true;
    f.values()[index] = parse_rational(value.template get<std::string>());
  }
  for (std::size_t i = 1; i < f.size(); ++i) {
    if (!seen[i]) throw StructuralError("functional file: missing word \"" + f.alphabet().format(f.word_at(i)) + "\"");
  }
  return f;
}

Json rationals(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

Json number_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

}  // namespace

Json to_json(const MomentFunctional& mf) { return functional_json(mf); }
Json to_json(const CumulantFunctional& cf) { return functional_json(cf); }

AnyFunctional functional_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
    throw StructuralError("functional file: missing \"kind\"");
  }
  const auto kind = j["kind"].get<std::string>();
  if (kind == MomentTag::kind) return functional_from<MomentTag>(j);
  if (kind == CumulantTag::kind) return functional_from<CumulantTag>(j);
  throw StructuralError("functional file: kind must be \"moments\" or \"cumulants\"");
}

MomentFunctional moments_from_json(const Json& j) { return functional_from<MomentTag>(j); }
CumulantFunctional cumulants_from_json(const Json& j) { return functional_from<CumulantTag>(j); }

MomentFunctional as_moments(const AnyFunctional& f) {
  if (const auto* m = std::get_if<MomentFunctional>(&f)) return *m;
  return cumulants_to_moments(std::get<CumulantFunctional>(f));
}

CumulantFunctional as_cumulants(const AnyFunctional& f) {
  if (const auto* c = std::get_if<CumulantFunctional>(&f)) return *c;
  return moments_to_cumulants(std::get<MomentFunctional>(f));
}

Json to_json(const ConvergenceReport& report) {
  Json j;
  j["parameter"] = report.parameter;
  j["vars"] = report.alphabet.names();
  j["order"] = report.order;
  j["schedule"] = report.schedule;
  j["expansion_matches_target"] = report.expansion_matches_target;
  j["within_bounds"] = report.within_bounds();
  Json max_errors = Json::array();
  for (std::size_t i = 0; i < report.schedule.size(); ++i) max_errors.push_back(to_string(report.max_error(i)));
  j["max_errors"] = std::move(max_errors);
  Json rows = Json::array();
  for (const auto& row : report.rows) {
    Json r;
    r["word"] = report.alphabet.format(row.word);
    r["target"] = to_string(row.target);
    r["values"] = rationals(row.values);
    r["errors"] = rationals(row.errors);
    r["bound"] = row.bound ? Json(to_string(*row.bound)) : Json(nullptr);
    r["coefficients"] = rationals(row.coefficients);
    Json exps = Json::array();
    for (double e : row.exponents) exps.push_back(number_or_null(e));
    r["exponents"] = std::move(exps);
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  return j;
}

Json to_json(const InfDivReport& report, const Alphabet& names) {
  Json j;
  j["variables"] = report.variables;
  j["degree"] = report.degree;
  j["dimension"] = report.dimension;
  j["verdict"] = report.pass ? "PASS" : "FAIL";
  j["rank"] = report.rank;
  Json index = Json::array();
  for (const auto& w : report.index) index.push_back(names.format(w));
  j["index"] = std::move(index);
  j["pivots"] = rationals(report.pivots);
  if (!report.pass) {
    j["witness"] = rationals(report.witness);
    j["witness_polynomial"] = to_string(report.witness_polynomial, names);
    j["witness_value"] = to_string(report.witness_value);
  }
  j["note"] = report.note;
  return j;
}

Json to_json(const LevyReport& report) {
  Json j;
  j["order"] = report.order;
  j["passed"] = report.passed();
  Json sections = Json::array();
  for (const LevySection* s :
       {&report.reproduction, &report.freeness, &report.stationarity, &report.vanishing, &report.continuity}) {
    sections.push_back({{"name", s->name},
                        {"max_error", s->max_error},
                        {"tolerance", s->tolerance},
                        {"passed", s->passed},
                        {"detail", s->detail}});
  }
  j["sections"] = std::move(sections);
  return j;
}

Json fock_summary(const FockModel& model) {
  Json j;
  j["k"] = model.poly().variables;
  j["d_H"] = model.poly().degree;
  j["n_max"] = model.n_max();
  j["dim_H"] = model.dim_h();
  j["dim_one_particle"] = model.dim_one_particle();
  j["dim_fock"] = model.dim_fock();
  j["breakpoints"] = rationals(model.time().breakpoints());
  return j;
}

Json partitions_json(int n, const std::vector<NcPartition>& partitions) {
  Json j;
  j["n"] = n;
  j["count"] = partitions.size();
  Json list = Json::array();
  for (const auto& p : partitions) list.push_back(p.blocks());
  j["partitions"] = std::move(list);
  return j;
}

Json mobius_json(int n, const PartitionTable& table) {
  Json j;
  j["n"] = n;
  j["count"] = table.size();
  Json rows = Json::array();
  for (std::size_t p = 0; p < table.size(); ++p) {
    rows.push_back({{"partition", table.partitions[p].blocks()}, {"mu_to_one", table.mobius_to_one[p]}});
  }
  j["mobius_to_one"] = std::move(rows);
  return j;
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Json read_json(const std::filesystem::path& path) {
  const std::string text = read_text(path);
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw IoError(path.string() + ": invalid JSON: " + e.what());
  }
}

void write_json(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << j.dump(2) << '\n';
  if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace fpt::io
