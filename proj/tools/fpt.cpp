#include "fpt/dsl/parser.hpp"
#include "fpt/dsl/session.hpp"
#include "fpt/error.hpp"
#include "fpt/fock.hpp"
#include "fpt/infdiv.hpp"
#include "fpt/io/json.hpp"
#include "fpt/limits.hpp"
#include "fpt/models.hpp"
#include "fpt/nc_partition.hpp"
#include "fpt/transform.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <ctime>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace {

using fpt::io::Json;

constexpr const char* kVersion = "0.1.0";

struct Output {
  bool json = false;
  bool meta = false;

  void emit(Json doc, const std::string& human) const {
    if (meta) {
      const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
      std::ostringstream stamp;
      stamp << std::put_time(std::gmtime(&now), "%Y-%m-%dT%H:%M:%SZ");
      if (json) {
        doc["meta"] = {{"tool", "fpt"}, {"version", kVersion}, {"generated", stamp.str()}};
      } else {
        std::cout << "# fpt " << kVersion << ", generated " << stamp.str() << '\n';
      }
    }
    if (json) {
      std::cout << doc.dump(2) << '\n';
    } else {
      std::cout << human;
    }
  }
};

std::vector<std::int64_t> parse_schedule(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(item, &used);
      if (used != item.size() || v < 1) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::logic_error&) {
      throw fpt::ValidationError("schedule entries must be positive integers, got '" + item + "'");
    }
  }
  if (out.empty()) throw fpt::ValidationError("empty schedule");
  return out;
}

fpt::Rational json_rational(const Json& v) {
  if (v.is_string()) return fpt::parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return fpt::Rational(v.get<long>());
  throw fpt::StructuralError("spec file: numbers must be integers or \"p/q\" strings");
}

std::vector<fpt::Rational> json_rationals(const Json& spec, const char* key, bool required) {
  std::vector<fpt::Rational> out;
  if (!spec.contains(key)) {
    if (required) throw fpt::StructuralError(std::string("spec file: missing \"") + key + "\"");
    return out;
  }
  if (!spec[key].is_array()) throw fpt::StructuralError(std::string("spec file: \"") + key + "\" must be an array");
  for (const auto& v : spec[key]) out.push_back(json_rational(v));
  return out;
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

std::string convergence_human(const fpt::ConvergenceReport& r) {
  std::ostringstream out;
  std::size_t width = 6;
  for (const auto& row : r.rows) width = std::max(width, r.alphabet.format(row.word).size() + 2);
  out << pad("word", width) << pad("target", 12);
  for (auto n : r.schedule) out << pad("err " + r.parameter + "=" + std::to_string(n), 16);
  out << "bound\n";
  for (const auto& row : r.rows) {
    out << pad(r.alphabet.format(row.word), width) << pad(fpt::to_string(row.target), 12);
    for (const auto& e : row.errors) {
      std::ostringstream cell;
      cell << std::setprecision(6) << fpt::to_double(e);
      out << pad(cell.str(), 16);
    }
    out << (row.bound ? fpt::to_string(*row.bound) + "/" + r.parameter : "-") << '\n';
  }
  out << "within exact bounds: " << (r.within_bounds() ? "yes" : "no")
      << "; expansion limit matches target: " << (r.expansion_matches_target ? "yes" : "no") << '\n';
  return out.str();
}

int run(int argc, char** argv) {
  CLI::App app{"fpt: free probability toolkit"};
  app.require_subcommand(1);
  Output output;
  app.add_flag("--json", output.json, "machine-readable JSON output");
  app.add_flag("--meta", output.meta, "add tool version and timestamp to the output");

  // nc
  auto* nc = app.add_subcommand("nc", "non-crossing partitions");
  nc->require_subcommand(1);
  int nc_n = 0;
  auto* nc_enum = nc->add_subcommand("enumerate", "list NC(n) in canonical order");
  nc_enum->add_option("n", nc_n, "ground-set size")->required();
  auto* nc_mob = nc->add_subcommand("mobius", "mu(pi, 1_n) for every pi in NC(n)");
  nc_mob->add_option("n", nc_n, "ground-set size")->required();

  // transform
  auto* transform = app.add_subcommand("transform", "moment <-> cumulant transforms");
  std::string direction, in_file, out_file;
  transform->add_option("direction", direction, "m2c or c2m")->required()->check(CLI::IsMember({"m2c", "c2m"}));
  transform->add_option("--in", in_file, "input functional file")->required();
  transform->add_option("--out", out_file, "output functional file")->required();

  // model
  auto* model = app.add_subcommand("model", "build a named distribution");
  std::string ctor, names_opt, base_file, kind = "auto";
  std::vector<std::string> params;
  int order = 6;
  model->add_option("ctor", ctor, "constructor name")->required();
  model->add_option("params", params, "key=value parameters, e.g. lambda=1 cov=[[1,0],[0,1]]");
  model->add_option("--order", order, "maximum word length")->required();
  model->add_option("--out", out_file, "output functional file")->required();
  model->add_option("--names", names_opt, "comma-separated variable names");
  model->add_option("--base", base_file, "base law for compound_free_poisson and sandwich");
  model->add_option("--kind", kind, "moments, cumulants or auto")->check(CLI::IsMember({"auto", "moments", "cumulants"}));

  // limit
  auto* limit = app.add_subcommand("limit", "finite-N limit theorem checks");
  std::string limit_kind, spec_file, schedule_text = "10,100,1000";
  limit->add_option("kind", limit_kind, "poisson, multi or compound")
      ->required()
      ->check(CLI::IsMember({"poisson", "multi", "compound"}));
  limit->add_option("--spec", spec_file, "JSON spec: rates, jumps, model")->required();
  limit->add_option("--schedule", schedule_text, "comma-separated N values");
  limit->add_option("--order", order, "maximum word length");
  limit->add_option("--base", base_file, "base law for the compound check");

  // infdiv
  auto* infdiv = app.add_subcommand("infdiv", "free infinite divisibility");
  infdiv->require_subcommand(1);
  auto* infdiv_check = infdiv->add_subcommand("check", "Gram positivity at a degree");
  int vars = 0, degree = 2;
  infdiv_check->add_option("--in", in_file, "functional file")->required();
  infdiv_check->add_option("--vars", vars, "use the first k variables (default all)");
  infdiv_check->add_option("--degree", degree, "monomial degree d");

  // fock
  auto* fock = app.add_subcommand("fock", "Fock space realization");
  fock->require_subcommand(1);
  auto* fock_verify = fock->add_subcommand("verify", "check the process axioms");
  int fock_order = 4;
  fock_verify->add_option("--in", in_file, "functional file (order >= 2n+1)")->required();
  fock_verify->add_option("--order", fock_order, "moment order n = d_H = n_max");
  fock_verify->add_option("--vars", vars, "use the first k variables (default all)");

  // approx
  auto* approx = app.add_subcommand("approx", "compound free Poisson approximation");
  std::string j_text = "1,10,100,1000";
  approx->add_option("--target", in_file, "target functional file")->required();
  approx->add_option("--j", j_text, "comma-separated rates j");
  approx->add_option("--order", order, "maximum word length");

  // run
  auto* run_cmd = app.add_subcommand("run", "execute a DSL script");
  std::string script;
  int session_order = fpt::dsl::kDefaultSessionOrder;
  run_cmd->add_option("script", script, "script file")->required();
  run_cmd->add_option("--order", session_order, "session order cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (nc_enum->parsed()) {
    const auto parts = fpt::enumerate_nc(nc_n);
    std::ostringstream human;
    human << "NC(" << nc_n << "): " << parts.size() << " partitions\n";
    for (const auto& p : parts) human << p.to_string() << '\n';
    output.emit(fpt::io::partitions_json(nc_n, parts), human.str());
  } else if (nc_mob->parsed()) {
    if (nc_n < 1 || nc_n > fpt::order_cap()) throw fpt::CapacityError("n must lie in 1.." + std::to_string(fpt::order_cap()));
    const auto& table = fpt::partition_table(nc_n);
    std::ostringstream human;
    std::size_t width = 10;
    for (const auto& p : table.partitions) width = std::max(width, p.to_string().size() + 2);
    human << pad("partition", width) << "mu(pi, 1_" << nc_n << ")\n";
    for (std::size_t p = 0; p < table.size(); ++p) {
      human << pad(table.partitions[p].to_string(), width) << table.mobius_to_one[p] << '\n';
    }
    output.emit(fpt::io::mobius_json(nc_n, table), human.str());
  } else if (transform->parsed()) {
    const auto f = fpt::io::functional_from_json(fpt::io::read_json(in_file));
    Json doc;
    if (direction == "m2c") {
      const auto* mf = std::get_if<fpt::MomentFunctional>(&f);
      if (!mf) throw fpt::StructuralError("m2c expects a moments file");
      doc = fpt::io::to_json(fpt::moments_to_cumulants(*mf));
    } else {
      const auto* cf = std::get_if<fpt::CumulantFunctional>(&f);
      if (!cf) throw fpt::StructuralError("c2m expects a cumulants file");
      doc = fpt::io::to_json(fpt::cumulants_to_moments(*cf));
    }
    fpt::io::write_json(out_file, doc);
    output.emit({{"written", out_file}, {"kind", doc["kind"]}}, "wrote " + out_file + "\n");
  } else if (model->parsed()) {
    fpt::dsl::Session session(order);
    std::vector<std::string> names;
    if (!base_file.empty()) {
      const auto base = fpt::io::as_moments(fpt::io::functional_from_json(fpt::io::read_json(base_file)));
      // The base is bound under prefixed names so the output keeps the base's own names.
      std::vector<std::string> hidden;
      for (const auto& n : base.alphabet().names()) hidden.push_back("base_" + n);
      session.bind(base.truncated(std::min(base.order(), order)).renamed(fpt::Alphabet(hidden)));
      std::string list;
      for (const auto& n : hidden) list += (list.empty() ? "" : ", ") + n;
      params.push_back("base=[" + list + "]");
      names = base.alphabet().names();
    }
    if (!names_opt.empty()) {
      names.clear();
      std::stringstream in(names_opt);
      std::string item;
      while (std::getline(in, item, ',')) names.push_back(item);
    }
    if (names.empty()) {
      if (ctor == "semicircle_family" || ctor == "projection_family") {
        std::size_t k = 0;
        for (const auto& p : params) {
          if (p.rfind("cov=", 0) == 0) {
            for (std::size_t i = 4; i < p.size(); ++i) k += p[i] == '[';
            k -= 1;
          }
          if (p.rfind("rates=", 0) == 0) k = static_cast<std::size_t>(std::count(p.begin(), p.end(), ',')) + 1;
        }
        for (std::size_t i = 1; i <= std::max<std::size_t>(k, 1); ++i) names.push_back("x" + std::to_string(i));
      } else {
        names.push_back("x");
      }
    }
    std::string list, args;
    for (const auto& n : names) list += (list.empty() ? "" : ", ") + n;
    for (const auto& p : params) args += (args.empty() ? "" : ", ") + p;
    session.run("let " + list + " = " + ctor + "(" + args + ")");
    const auto mf = session.law(names, order);
    static const std::vector<std::string> cumulant_ctors{"semicircle", "semicircle_family", "free_poisson",
                                                          "compound_free_poisson", "sandwich"};
    const bool cumulants =
        kind == "cumulants" ||
        (kind == "auto" && std::find(cumulant_ctors.begin(), cumulant_ctors.end(), ctor) != cumulant_ctors.end());
    const Json doc = cumulants ? fpt::io::to_json(fpt::moments_to_cumulants(mf)) : fpt::io::to_json(mf);
    fpt::io::write_json(out_file, doc);
    output.emit({{"written", out_file}, {"kind", doc["kind"]}, {"vars", names}}, "wrote " + out_file + "\n");
  } else if (limit->parsed()) {
    const Json spec_json = fpt::io::read_json(spec_file);
    fpt::PoissonSpec spec{json_rationals(spec_json, "rates", true), json_rationals(spec_json, "jumps", false)};
    if (spec.jumps.empty()) spec.jumps.assign(spec.rates.size(), fpt::Rational(1));
    const std::string model_name = spec_json.value("model", limit_kind == "compound" ? "equal" : "free");
    const auto schedule = parse_schedule(schedule_text);
    fpt::ConvergenceReport report;
    if (limit_kind == "poisson") {
      report = fpt::poisson_limit_check(spec, schedule, order);
    } else if (limit_kind == "multi") {
      report = fpt::multi_poisson_limit_check(spec, fpt::parse_projection_model(model_name), schedule, order);
    } else {
      if (base_file.empty()) throw fpt::ValidationError("limit compound needs --base FILE");
      const auto base = fpt::io::as_moments(fpt::io::functional_from_json(fpt::io::read_json(base_file)));
      report = fpt::compound_limit_check(base, spec, fpt::parse_projection_model(model_name), schedule, order);
    }
    output.emit(fpt::io::to_json(report), convergence_human(report));
  } else if (infdiv_check->parsed()) {
    const auto cf = fpt::io::as_cumulants(fpt::io::functional_from_json(fpt::io::read_json(in_file)));
    const int k = vars > 0 ? vars : cf.letters();
    const auto report = fpt::check_infdiv(cf, k, degree);
    std::ostringstream human;
    human << "verdict: " << (report.pass ? "PASS" : "FAIL") << " (degree " << degree << ", dimension "
          << report.dimension << ", rank " << report.rank << ")\n";
    if (!report.pass) {
      human << "witness: P = " << fpt::to_string(report.witness_polynomial, cf.alphabet())
            << ", <P, P> = " << fpt::to_string(report.witness_value) << '\n';
    }
    human << report.note << '\n';
    output.emit(fpt::io::to_json(report, cf.alphabet()), human.str());
  } else if (fock_verify->parsed()) {
    const auto cf = fpt::io::as_cumulants(fpt::io::functional_from_json(fpt::io::read_json(in_file)));
    const int k = vars > 0 ? vars : cf.letters();
    const auto fock_model = fpt::build_fock_model(cf, k, fock_order);
    const auto report = fpt::verify_levy_axioms(fock_model, cf, fock_order);
    std::ostringstream human;
    human << "Fock model: k=" << k << " d_H=" << fock_order << " n_max=" << fock_order << " dim_H=" << fock_model.dim_h()
          << " dim_fock=" << fock_model.dim_fock() << '\n';
    for (const fpt::LevySection* s :
         {&report.reproduction, &report.freeness, &report.stationarity, &report.vanishing, &report.continuity}) {
      human << pad(s->name, 14) << (s->passed ? "ok     " : "FAILED ") << "max error " << s->max_error << " (tolerance "
            << s->tolerance << ")  " << s->detail << '\n';
    }
    human << "verdict: " << (report.passed() ? "PASS" : "FAIL") << '\n';
    Json doc{{"model", fpt::io::fock_summary(fock_model)}, {"report", fpt::io::to_json(report)}};
    output.emit(std::move(doc), human.str());
  } else if (approx->parsed()) {
    const auto target = fpt::io::as_cumulants(fpt::io::functional_from_json(fpt::io::read_json(in_file)));
    const auto report = fpt::approximation_report(target, parse_schedule(j_text), std::min(order, target.order()));
    output.emit(fpt::io::to_json(report), convergence_human(report));
  } else if (run_cmd->parsed()) {
    fpt::dsl::Session session(session_order);
    const std::string text = fpt::io::read_text(script);
    const auto program = fpt::dsl::parse(text);
    Json results = Json::array();
    session.run(program, [&](const fpt::dsl::QueryResult& r) {
      if (output.json) {
        results.push_back(r.json);
      } else {
        std::cout << r.text << '\n' << std::flush;
      }
    });
    if (output.json) output.emit({{"results", results}}, "");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const fpt::dsl::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const fpt::IoError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return 2;
  } catch (const fpt::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return 2;
  }
}
