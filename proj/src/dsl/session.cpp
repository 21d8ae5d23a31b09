#include "fpt/dsl/session.hpp"

#include "fpt/dsl/parser.hpp"
#include "fpt/fock.hpp"
#include "fpt/freeness.hpp"
#include "fpt/infdiv.hpp"
#include "fpt/limits.hpp"
#include "fpt/models.hpp"
#include "fpt/transform.hpp"

#include <algorithm>
#include <sstream>

namespace fpt::dsl {

namespace {

std::string located(SourcePos pos, const std::string& message) {
  return "line " + std::to_string(pos.line) + ", column " + std::to_string(pos.column) + ": " + message;
}

/// Keyword arguments plus positionals mapped onto parameter names in order.
class Params {
 public:
  Params(const std::vector<Arg>& args, const std::vector<std::string>& params, SourcePos pos, std::string what)
      : pos_(pos), what_(std::move(what)) {
    std::size_t next = 0;
    for (const Arg& a : args) {
      std::string key;
      if (a.key) {
        key = *a.key;
        if (std::find(params.begin(), params.end(), key) == params.end()) {
          throw EvalError(a.pos, what_ + ": unknown argument '" + key + "'");
        }
      } else {
        if (next >= params.size()) throw EvalError(a.pos, what_ + ": too many arguments");
        key = params[next++];
      }
      if (values_.count(key)) throw EvalError(a.pos, what_ + ": argument '" + key + "' given twice");
      if (!a.value) throw EvalError(a.pos, what_ + ": argument '" + key + "' must be a value");
      values_.emplace(key, *a.value);
    }
  }

  bool has(const std::string& key) const { return values_.count(key) > 0; }

  const Value& get(const std::string& key) const {
    const auto it = values_.find(key);
    if (it == values_.end()) throw EvalError(pos_, what_ + ": missing argument '" + key + "'");
    return it->second;
  }

  Rational rational(const std::string& key, std::optional<Rational> fallback = std::nullopt) const {
    if (!has(key)) {
      if (fallback) return *fallback;
      get(key);
    }
    const Value& v = get(key);
    if (!v.is_number()) throw EvalError(v.pos, what_ + ": '" + key + "' must be a rational");
    return std::get<Rational>(v.data);
  }

  int integer(const std::string& key, int fallback) const {
    if (!has(key)) return fallback;
    const Rational r = rational(key);
    if (r.get_den() != 1 || !r.get_num().fits_sint_p()) {
      throw EvalError(get(key).pos, what_ + ": '" + key + "' must be an integer");
    }
    return static_cast<int>(r.get_num().get_si());
  }

  std::vector<Rational> rationals(const std::string& key) const {
    const Value& v = get(key);
    if (!v.is_list()) throw EvalError(v.pos, what_ + ": '" + key + "' must be a list of rationals");
    std::vector<Rational> out;
    for (const Value& item : std::get<std::vector<Value>>(v.data)) {
      if (!item.is_number()) throw EvalError(item.pos, what_ + ": '" + key + "' must hold rationals");
      out.push_back(std::get<Rational>(item.data));
    }
    return out;
  }

  std::vector<std::int64_t> integers(const std::string& key, std::vector<std::int64_t> fallback) const {
    if (!has(key)) return fallback;
    std::vector<std::int64_t> out;
    for (const Rational& r : rationals(key)) {
      if (r.get_den() != 1 || !r.get_num().fits_slong_p()) {
        throw EvalError(get(key).pos, what_ + ": '" + key + "' must hold integers");
      }
      out.push_back(r.get_num().get_si());
    }
    return out;
  }

  RationalMatrix matrix(const std::string& key) const {
    const Value& v = get(key);
    if (!v.is_list()) throw EvalError(v.pos, what_ + ": '" + key + "' must be a list of rows");
    RationalMatrix out;
    for (const Value& row : std::get<std::vector<Value>>(v.data)) {
      if (!row.is_list()) throw EvalError(row.pos, what_ + ": '" + key + "' rows must be lists");
      std::vector<Rational> r;
      for (const Value& item : std::get<std::vector<Value>>(row.data)) {
        if (!item.is_number()) throw EvalError(item.pos, what_ + ": matrix entries must be rationals");
        r.push_back(std::get<Rational>(item.data));
      }
      out.push_back(std::move(r));
    }
    return out;
  }

  std::string name(const std::string& key, std::optional<std::string> fallback = std::nullopt) const {
    if (!has(key)) {
      if (fallback) return *fallback;
      get(key);
    }
    const Value& v = get(key);
    if (!v.is_name()) throw EvalError(v.pos, what_ + ": '" + key + "' must be a name");
    return std::get<std::string>(v.data);
  }

  /// A single name or a list of names.
  std::vector<std::string> names(const std::string& key) const {
    const Value& v = get(key);
    if (v.is_name()) return {std::get<std::string>(v.data)};
    if (!v.is_list()) throw EvalError(v.pos, what_ + ": '" + key + "' must be a variable or list of variables");
    std::vector<std::string> out;
    for (const Value& item : std::get<std::vector<Value>>(v.data)) {
      if (!item.is_name()) throw EvalError(item.pos, what_ + ": '" + key + "' must hold variable names");
      out.push_back(std::get<std::string>(item.data));
    }
    return out;
  }

  SourcePos pos(const std::string& key) const { return has(key) ? get(key).pos : pos_; }

 private:
  SourcePos pos_;
  std::string what_;
  std::map<std::string, Value> values_;
};

/// Splits query arguments into positional expressions and keyword parameters.
struct QueryArgs {
  std::vector<Expr> positional;
  std::vector<SourcePos> positions;
  std::vector<Arg> keywords;
};

QueryArgs split(const std::vector<Arg>& args) {
  QueryArgs out;
  for (const Arg& a : args) {
    if (a.key) {
      out.keywords.push_back(a);
    } else {
      out.positional.push_back(*a.expr);
      out.positions.push_back(a.pos);
    }
  }
  return out;
}

std::vector<std::string> plain_variables(const QueryArgs& args, const std::string& what) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < args.positional.size(); ++i) {
    const Expr& e = args.positional[i];
    if (e.kind != Expr::Kind::variable) throw EvalError(args.positions[i], what + ": arguments must be variable names");
    if (std::find(names.begin(), names.end(), e.name) != names.end()) {
      throw EvalError(args.positions[i], what + ": variable '" + e.name + "' listed twice");
    }
    names.push_back(e.name);
  }
  if (names.empty()) throw EvalError(SourcePos{}, what + ": at least one variable required");
  return names;
}

std::string table_text(const MomentFunctional& mf) {
  std::ostringstream out;
  std::size_t width = 4;
  for (std::size_t i = 1; i < mf.size(); ++i) width = std::max(width, mf.alphabet().format(mf.word_at(i)).size());
  for (std::size_t i = 1; i < mf.size(); ++i) {
    const std::string w = mf.alphabet().format(mf.word_at(i));
    out << "  " << w << std::string(width - w.size() + 2, ' ') << to_string(mf.values()[i]) << '\n';
  }
  return out.str();
}

std::string convergence_text(const ConvergenceReport& r) {
  std::ostringstream out;
  out << "  max error by word length\n  " << r.parameter;
  for (int n = 1; n <= r.order; ++n) out << "\tlen " << n;
  out << '\n';
  for (std::size_t i = 0; i < r.schedule.size(); ++i) {
    out << "  " << r.schedule[i];
    for (int n = 1; n <= r.order; ++n) out << '\t' << to_double(r.max_error(i, n));
    out << '\n';
  }
  out << "  within exact bounds: " << (r.within_bounds() ? "yes" : "no") << '\n';
  return out.str();
}

}  // namespace

EvalError::EvalError(SourcePos pos, const std::string& message) : Error(located(pos, message)), pos_(pos) {}

Session::Session(int order) : order_(order) {
  if (order < 1 || order > order_cap()) throw ValidationError("session order must lie in 1.." + std::to_string(order_cap()));
}

std::vector<QueryResult> Session::run(std::string_view text, const std::function<void(const QueryResult&)>& sink) {
  return run(parse(text), sink);
}

std::vector<QueryResult> Session::run(const Program& program, const std::function<void(const QueryResult&)>& sink) {
  std::vector<QueryResult> results;
  for (const Statement& s : program.statements) {
    if (auto r = execute(s)) {
      if (sink) sink(*r);
      results.push_back(std::move(*r));
    }
  }
  return results;
}

std::optional<QueryResult> Session::execute(const Statement& statement) {
  try {
    return std::visit(
        [&](const auto& node) -> std::optional<QueryResult> {
          using T = std::decay_t<decltype(node)>;
          if constexpr (std::is_same_v<T, LetStmt>) {
            let(node, statement.pos);
            return std::nullopt;
          } else if constexpr (std::is_same_v<T, FreeStmt>) {
            declare_free(node, statement.pos);
            return std::nullopt;
          } else if constexpr (std::is_same_v<T, OrderStmt>) {
            if (order_locked_) throw EvalError(statement.pos, "order(...) must come before the first let");
            if (node.order > order_cap()) {
              throw EvalError(statement.pos, "order " + std::to_string(node.order) + " exceeds the cap " +
                                                 std::to_string(order_cap()));
            }
            order_ = node.order;
            return std::nullopt;
          } else {
            return query(node, statement.pos);
          }
        },
        statement.node);
  } catch (const EvalError&) {
    throw;
  } catch (const Error& e) {
    throw EvalError(statement.pos, e.what());
  }
}

const Session::Bound& Session::lookup(const std::string& name, SourcePos pos) const {
  const auto it = bindings_.find(name);
  if (it == bindings_.end()) throw EvalError(pos, "unbound identifier '" + name + "'");
  return it->second;
}

void Session::collect(const Expr& expr, std::set<std::string>& names) const {
  if (expr.kind == Expr::Kind::variable) {
    lookup(expr.name, expr.pos);
    names.insert(expr.name);
  }
  for (const Expr& c : expr.children) collect(c, names);
}

Session::Joint Session::joint(const std::set<std::string>& names, int order, SourcePos pos) {
  if (order > order_) {
    throw EvalError(pos, "order overflow: degree " + std::to_string(order) + " exceeds the session order " +
                             std::to_string(order_));
  }
  order = std::max(order, 1);
  std::vector<int> fams;
  for (const auto& n : names) fams.push_back(bindings_.at(n).family);
  std::sort(fams.begin(), fams.end());
  fams.erase(std::unique(fams.begin(), fams.end()), fams.end());
  if (fams.empty()) {
    return Joint{MomentFunctional(Alphabet({"_"}), order), {}};
  }
  if (fams.size() > 1) {
    const bool declared = std::any_of(free_groups_.begin(), free_groups_.end(), [&](const std::set<int>& g) {
      return std::all_of(fams.begin(), fams.end(), [&](int f) { return g.count(f) > 0; });
    });
    if (!declared) {
      std::string list;
      for (const auto& n : names) list += (list.empty() ? "" : ", ") + n;
      throw EvalError(pos, "no joint law for " + list + "; declare them free(...) in one statement");
    }
  }
  const auto key = std::make_pair(fams, order);
  auto it = joint_cache_.find(key);
  if (it == joint_cache_.end()) {
    std::vector<MomentFunctional> parts;
    for (int f : fams) parts.push_back(families_[static_cast<std::size_t>(f)].moments.truncated(order));
    it = joint_cache_.emplace(key, parts.size() == 1 ? parts.front() : free_product(parts, order)).first;
  }
  Joint j{it->second, {}};
  for (int f : fams) {
    for (const auto& n : families_[static_cast<std::size_t>(f)].names) j.letter[n] = j.moments.alphabet().index(n);
  }
  return j;
}

NcPolynomial Session::polynomial(const Expr& expr, const Joint& joint) const {
  switch (expr.kind) {
    case Expr::Kind::number:
      return NcPolynomial::constant(expr.value);
    case Expr::Kind::variable:
      return NcPolynomial::variable(joint.letter.at(expr.name));
    case Expr::Kind::add:
      return polynomial(expr.children[0], joint) + polynomial(expr.children[1], joint);
    case Expr::Kind::sub:
      return polynomial(expr.children[0], joint) - polynomial(expr.children[1], joint);
    case Expr::Kind::mul:
      return polynomial(expr.children[0], joint) * polynomial(expr.children[1], joint);
    case Expr::Kind::neg:
      return polynomial(expr.children[0], joint) * Rational(-1);
  }
  return {};
}

namespace {

/// Upper bound on the degree without expanding the polynomial.
int degree_bound(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::number:
      return 0;
    case Expr::Kind::variable:
      return 1;
    case Expr::Kind::mul:
      return degree_bound(e.children[0]) + degree_bound(e.children[1]);
    case Expr::Kind::neg:
      return degree_bound(e.children[0]);
    default:
      return std::max(degree_bound(e.children[0]), degree_bound(e.children[1]));
  }
}

}  // namespace

Rational Session::phi(const Expr& expr) {
  std::set<std::string> names;
  collect(expr, names);
  const Joint j = joint(names, std::min(degree_bound(expr), order_ + 1), expr.pos);
  const NcPolynomial p = polynomial(expr, j);
  if (p.degree() > order_) throw EvalError(expr.pos, "order overflow");
  return evaluate(p, [&](const Word& w) { return j.moments.at(w); });
}

MomentFunctional Session::law(const std::vector<std::string>& names, int order, SourcePos pos) {
  const std::set<std::string> set(names.begin(), names.end());
  const Joint j = joint(set, order, pos);
  std::vector<NcPolynomial> polys;
  for (const auto& n : names) polys.push_back(NcPolynomial::variable(j.letter.at(n)));
  return pushforward([&](const Word& w) { return j.moments.at(w); }, polys, Alphabet(names), order);
}

void Session::let(const LetStmt& let, SourcePos pos) {
  order_locked_ = true;
  for (const auto& n : let.names) {
    if (bindings_.count(n)) throw EvalError(pos, "'" + n + "' is already bound");
  }
  for (std::size_t i = 0; i < let.names.size(); ++i) {
    for (std::size_t j = i + 1; j < let.names.size(); ++j) {
      if (let.names[i] == let.names[j]) throw EvalError(pos, "'" + let.names[i] + "' named twice");
    }
  }
  const int d = order_;
  const std::string& c = let.ctor;
  const Alphabet names(let.names);
  auto single = [&]() {
    if (let.names.size() != 1) throw EvalError(pos, c + " defines one variable, got " + std::to_string(let.names.size()));
    return let.names.front();
  };
  MomentFunctional moments;
  if (c == "semicircle") {
    const Params p(let.args, {"r"}, pos, c);
    moments = cumulants_to_moments(semicircle(p.rational("r", Rational(2)), d, single()));
  } else if (c == "semicircle_family") {
    const Params p(let.args, {"cov"}, pos, c);
    const CovarianceMatrix cov(p.matrix("cov"));
    if (cov.size() != names.size()) {
      throw EvalError(pos, "semicircle_family: " + std::to_string(cov.size()) + "x" + std::to_string(cov.size()) +
                               " covariance needs as many names");
    }
    moments = cumulants_to_moments(semicircle_family(cov, d, names));
  } else if (c == "free_poisson") {
    const Params p(let.args, {"lambda", "alpha"}, pos, c);
    moments = cumulants_to_moments(free_poisson(p.rational("lambda"), p.rational("alpha", Rational(1)), d, single()));
  } else if (c == "compound_free_poisson" || c == "sandwich") {
    const bool compound = c == "compound_free_poisson";
    const Params p(let.args, compound ? std::vector<std::string>{"lambda", "base"} : std::vector<std::string>{"cov", "base"},
                   pos, c);
    const auto base_names = p.names("base");
    if (base_names.size() != let.names.size()) throw EvalError(pos, c + ": one new name per base variable required");
    const auto base = law(base_names, d, p.pos("base"));
    const auto cf = compound ? compound_free_poisson(p.rational("lambda"), base, d)
                             : sandwich_cumulants(CovarianceMatrix(p.matrix("cov")), base, d);
    moments = cumulants_to_moments(cf).renamed(names);
  } else if (c == "projection") {
    const Params p(let.args, {"t"}, pos, c);
    moments = projection_functional(p.rational("t"), d, single());
  } else if (c == "projection_family") {
    const Params p(let.args, {"rates", "model", "N"}, pos, c);
    PoissonSpec spec{p.rationals("rates"), {}};
    spec.jumps.assign(spec.rates.size(), Rational(1));
    if (spec.rates.size() != let.names.size()) throw EvalError(pos, "projection_family: one name per rate required");
    moments = projection_family(spec, parse_projection_model(p.name("model", "free")), p.integer("N", 0), d).renamed(names);
  } else if (c == "bernoulli") {
    const Params p(let.args, {"p"}, pos, c);
    moments = bernoulli(p.rational("p", Rational(1, 2)), d, single());
  } else if (c == "point_mass") {
    const Params p(let.args, {"alpha"}, pos, c);
    moments = point_mass(p.rational("alpha"), d, single());
  } else {
    throw EvalError(pos, "unknown constructor '" + c +
                             "' (expected semicircle, semicircle_family, free_poisson, compound_free_poisson, "
                             "projection, projection_family, bernoulli, point_mass or sandwich)");
  }
  const int id = static_cast<int>(families_.size());
  families_.push_back(Family{let.names, std::move(moments)});
  for (std::size_t i = 0; i < let.names.size(); ++i) bindings_[let.names[i]] = Bound{id, static_cast<Letter>(i)};
}

void Session::bind(const MomentFunctional& moments) {
  for (const auto& n : moments.alphabet().names()) {
    if (bindings_.count(n)) throw EvalError(SourcePos{}, "'" + n + "' is already bound");
    if (is_keyword(n)) throw EvalError(SourcePos{}, "'" + n + "' is a reserved word");
  }
  if (moments.order() < order_) {
    throw EvalError(SourcePos{}, "bound law has order " + std::to_string(moments.order()) + ", session needs " +
                                     std::to_string(order_));
  }
  order_locked_ = true;
  const int id = static_cast<int>(families_.size());
  families_.push_back(Family{moments.alphabet().names(), moments.truncated(order_)});
  for (int i = 0; i < moments.letters(); ++i) bindings_[moments.alphabet().name(i)] = Bound{id, i};
}

void Session::declare_free(const FreeStmt& free, SourcePos pos) {
  std::set<int> group;
  for (const auto& n : free.names) group.insert(lookup(n, pos).family);
  free_groups_.push_back(std::move(group));
}

QueryResult Session::query(const QueryStmt& q, SourcePos pos) {
  QueryResult r;
  Statement echo;
  echo.node = q;
  r.query = print(echo);
  const QueryArgs args = split(q.args);
  if (q.kind == "phi") {
    if (!args.keywords.empty() || args.positional.size() != 1) throw EvalError(pos, "phi takes one polynomial");
    const Rational v = phi(args.positional.front());
    r.scalar = v;
    r.text = r.query + " = " + to_string(v);
    r.json = {{"query", r.query}, {"value", to_string(v)}};
  } else if (q.kind == "kappa") {
    if (!args.keywords.empty() || args.positional.empty()) throw EvalError(pos, "kappa takes one or more polynomials");
    const int n = static_cast<int>(args.positional.size());
    std::set<std::string> names;
    int total = 0;
    for (const Expr& e : args.positional) {
      collect(e, names);
      total += degree_bound(e);
    }
    const Joint j = joint(names, std::min(total, order_ + 1), pos);
    std::vector<NcPolynomial> polys;
    for (const Expr& e : args.positional) polys.push_back(polynomial(e, j));
    const auto phi_fn = [&](const Word& w) { return j.moments.at(w); };
    const PartitionTable& table = partition_table(n);
    Rational v = 0;
    for (std::size_t p = 0; p < table.size(); ++p) {
      Rational term = table.mobius_to_one[p];
      for (int b = 0; b < table.num_blocks(p) && sgn(term) != 0; ++b) {
        NcPolynomial product = NcPolynomial::constant(1);
        for (auto position : table.block(p, b)) product = product * polys[position];
        term *= evaluate(product, phi_fn);
      }
      v += term;
    }
    r.scalar = v;
    r.text = r.query + " = " + to_string(v);
    r.json = {{"query", r.query}, {"value", to_string(v)}};
  } else if (q.kind == "moments") {
    const Params p(args.keywords, {"order"}, pos, q.kind);
    const auto names = plain_variables(args, q.kind);
    const auto mf = law(names, p.integer("order", std::min(order_, 4)), p.pos("order"));
    r.text = r.query + "\n" + table_text(mf);
    r.json = {{"query", r.query}, {"functional", io::to_json(mf)}};
  } else if (q.kind == "infdiv") {
    const Params p(args.keywords, {"degree"}, pos, q.kind);
    const auto names = plain_variables(args, q.kind);
    const int d = p.integer("degree", 2);
    if (d < 1) throw EvalError(p.pos("degree"), "infdiv: degree must be positive");
    const auto cf = moments_to_cumulants(law(names, 2 * d, p.pos("degree")));
    const auto report = check_infdiv(cf, static_cast<int>(names.size()), d);
    r.text = r.query + " " + (report.pass ? "PASS" : "FAIL") + " (degree " + std::to_string(d) + ", rank " +
             std::to_string(report.rank) + " of " + std::to_string(report.dimension) + ")";
    if (!report.pass) {
      r.text += "; witness P = " + to_string(report.witness_polynomial, cf.alphabet()) +
                " with <P, P> = " + to_string(report.witness_value);
    }
    r.json = {{"query", r.query}, {"report", io::to_json(report, cf.alphabet())}};
  } else if (q.kind == "levy_check") {
    const Params p(args.keywords, {"order"}, pos, q.kind);
    const auto names = plain_variables(args, q.kind);
    const int n = p.integer("order", 4);
    if (n < 1) throw EvalError(p.pos("order"), "levy_check: order must be positive");
    const auto cf = moments_to_cumulants(law(names, 2 * n + 1, p.pos("order")));
    const auto model = build_fock_model(cf, static_cast<int>(names.size()), n);
    const auto report = verify_levy_axioms(model, cf, n);
    std::ostringstream out;
    out << r.query << ' ' << (report.passed() ? "PASS" : "FAIL") << " (dim H " << model.dim_h() << ")";
    for (const LevySection* s :
         {&report.reproduction, &report.freeness, &report.stationarity, &report.vanishing, &report.continuity}) {
      out << "\n  " << s->name << ": " << (s->passed ? "ok" : "FAILED") << ", max error " << s->max_error;
    }
    r.text = out.str();
    r.json = {{"query", r.query}, {"model", io::fock_summary(model)}, {"report", io::to_json(report)}};
  } else if (q.kind == "limit") {
    if (args.positional.size() != 1 || args.positional.front().kind != Expr::Kind::variable) {
      throw EvalError(pos, "limit needs a kind first: poisson, multi, compound or approx");
    }
    const std::string kind = args.positional.front().name;
    const std::vector<std::int64_t> default_schedule{10, 100, 1000};
    ConvergenceReport report;
    if (kind == "poisson") {
      const Params p(args.keywords, {"lambda", "alpha", "schedule", "order"}, pos, "limit(poisson)");
      report = poisson_limit_check(PoissonSpec{{p.rational("lambda")}, {p.rational("alpha", Rational(1))}},
                                   p.integers("schedule", default_schedule), p.integer("order", std::min(order_, 6)));
    } else if (kind == "multi") {
      const Params p(args.keywords, {"rates", "jumps", "model", "schedule", "order"}, pos, "limit(multi)");
      report = multi_poisson_limit_check(PoissonSpec{p.rationals("rates"), p.rationals("jumps")},
                                         parse_projection_model(p.name("model", "free")),
                                         p.integers("schedule", default_schedule), p.integer("order", std::min(order_, 4)));
    } else if (kind == "compound") {
      const Params p(args.keywords, {"base", "rates", "model", "schedule", "order"}, pos, "limit(compound)");
      const int d = p.integer("order", std::min(order_, 4));
      const auto base = law(p.names("base"), d, p.pos("base"));
      PoissonSpec spec{p.rationals("rates"), {}};
      spec.jumps.assign(spec.rates.size(), Rational(1));
      report = compound_limit_check(base, spec, parse_projection_model(p.name("model", "equal")),
                                    p.integers("schedule", default_schedule), d);
    } else if (kind == "approx") {
      const Params p(args.keywords, {"target", "j", "order"}, pos, "limit(approx)");
      const int d = p.integer("order", std::min(order_, 6));
      const auto target = moments_to_cumulants(law(p.names("target"), d, p.pos("target")));
      report = approximation_report(target, p.integers("j", {1, 10, 100, 1000}), d);
    } else {
      throw EvalError(args.positions.front(), "unknown limit kind '" + kind + "' (expected poisson, multi, compound or approx)");
    }
    r.text = r.query + "\n" + convergence_text(report);
    r.json = {{"query", r.query}, {"report", io::to_json(report)}};
  } else {
    throw EvalError(pos, "unknown query '" + q.kind + "'");
  }
  return r;
}

}  // namespace fpt::dsl
