#include "commands.hpp"

#include <functional>
#include <ostream>

#include <CLI11.hpp>

#include "records.hpp"
#include "zetaval/dirichlet.hpp"
#include "zetaval/errors.hpp"
#include "zetaval/hurwitz.hpp"
#include "zetaval/lerch.hpp"
#include "zetaval/multi.hpp"
#include "zetaval/suites.hpp"

namespace zetaval::cli {

namespace {

constexpr int kDefaultDigits = 50;

struct Options {
  std::string format = "text";
  std::optional<int> prec;
  // Positional and flag slots shared by the subcommands.
  unsigned m = 0;
  unsigned n = 0;
  unsigned r = 2;
  std::int64_t q = 1;
  std::size_t index = 0;
  std::string alpha;
  std::string lambda;
  bool poly = false;
  bool drop_i_factor = false;
  bool literal = false;
  std::string suite;
  std::string table_kind;
  unsigned max = 10;
};

Precision resolve_precision(const Options& o, const std::optional<std::string>& env) {
  if (o.prec) return Precision::of(*o.prec);
  if (env && !env->empty()) {
    try {
      std::size_t used = 0;
      const int digits = std::stoi(*env, &used);
      if (used == env->size()) return Precision::of(digits);
    } catch (const std::logic_error&) {
    }
    throw ParseError("ZETAVAL_PREC must be an integer digit count, got '" + *env + "'");
  }
  return Precision::of(kDefaultDigits);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

class Emitter {
public:
  Emitter(std::ostream& out, std::string format) : out_(out), format_(std::move(format)) {}

  void emit(const OutputRecord& r) {
    if (format_ == "json")
      out_ << to_json(r).dump() << '\n';
    else
      out_ << to_text(r) << '\n';
  }

  // Table rows carry an index column in text and csv.
  void emit_row(const std::string& kind, unsigned index, const OutputRecord& r) {
    if (format_ == "json") {
      emit(r);
    } else if (format_ == "csv") {
      if (!header_written_) out_ << "kind,index,value\n";
      header_written_ = true;
      out_ << csv_field(kind) << ',' << index << ',' << csv_field(to_text(r)) << '\n';
    } else {
      out_ << index << '\t' << to_text(r) << '\n';
    }
  }

private:
  std::ostream& out_;
  std::string format_;
  bool header_written_ = false;
};

json provenance(const std::string& op, json inputs = json::object()) {
  inputs["op"] = op;
  return inputs;
}

std::string parity_name(const DirichletCharacter& chi) { return chi.is_even() ? "even" : "odd"; }

OutputRecord character_record(std::size_t index, const DirichletCharacter& chi) {
  json values = json::array();
  for (std::int64_t a = 0; a < chi.modulus(); ++a) values.push_back(chi.exponent(a));
  const std::string text = std::to_string(index) + "  " + chi.name() + "  order=" + std::to_string(chi.order()) +
                           "  conductor=" + std::to_string(chi.conductor()) + "  " + parity_name(chi) +
                           (chi.is_principal() ? "  principal" : (chi.is_primitive() ? "  primitive" : ""));
  json payload{{"index", index},
               {"label", chi.label()},
               {"order", chi.order()},
               {"conductor", chi.conductor()},
               {"parity", parity_name(chi)},
               {"primitive", chi.is_primitive()},
               {"exponents", values}};
  return make_report(RecordKind::Report, payload, text,
                     provenance("characters", {{"q", chi.modulus()}, {"index", index}}));
}

OutputRecord check_record(const std::string& suite, const CheckResult& c, const Precision& prec) {
  const std::string text = std::string(c.pass ? "PASS" : "FAIL") + "  " + c.id + "  " + c.description +
                           (c.detail.empty() ? "" : "  [" + c.detail + "]");
  json payload{{"id", c.id}, {"description", c.description}, {"pass", c.pass}, {"detail", c.detail}};
  return make_report(RecordKind::Report, payload, text,
                     provenance("verify", {{"suite", suite}, {"digits", prec.digits}}));
}

OutputRecord table_entry(const std::string& kind, unsigned k) {
  if (kind == "zeta-neg") return make_record(zeta_neg(k), provenance("zeta_neg", {{"m", k}}));
  if (kind == "zeta-even") return make_record(zeta_even(k), provenance("zeta_even", {{"m", k}}));
  if (kind == "bernoulli") return make_record(bernoulli_number(k), provenance("bernoulli_number", {{"n", k}}));
  if (kind == "bernoulli-poly") return make_record(bernoulli_poly(k), provenance("bernoulli_poly", {{"n", k}}));
  return make_record(hurwitz_poly(k), provenance("hurwitz_poly", {{"m", k}}));
}

// Each subcommand registers its options and a body that writes records.
using Body = std::function<int(const Options&, Emitter&, const std::optional<std::string>&)>;

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::optional<std::string>& default_prec) {
  Options o;
  CLI::App app{"Exact special values of zeta and L-functions, with numeric verification", "zetaval"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--prec", o.prec, "significant digits for numeric work (default $ZETAVAL_PREC or 50)");

  std::vector<std::pair<CLI::App*, Body>> commands;
  auto add = [&](const std::string& name, const std::string& help, Body body) {
    CLI::App* sub = app.add_subcommand(name, help);
    commands.emplace_back(sub, std::move(body));
    return sub;
  };

  auto* zeta_neg_cmd = add("zeta-neg", "zeta(-m) as an exact rational", [](const Options& o, Emitter& e, auto&) {
    e.emit(make_record(zeta_neg(o.m), provenance("zeta_neg", {{"m", o.m}})));
    return kOk;
  });
  zeta_neg_cmd->add_option("m", o.m)->required();

  auto* zeta_even_cmd = add("zeta-even", "zeta(2m) = c * pi^{2m}", [](const Options& o, Emitter& e, auto&) {
    if (o.m == 0) throw DomainError("zeta-even needs m >= 1");
    e.emit(make_record(zeta_even(o.m), provenance("zeta_even", {{"m", o.m}})));
    return kOk;
  });
  zeta_even_cmd->add_option("m", o.m)->required();

  auto* hurwitz_cmd = add("hurwitz", "zeta(-m, a) at a rational point or as a polynomial in a",
                          [](const Options& o, Emitter& e, auto&) {
                            if (!o.poly && o.alpha.empty()) throw ParseError("hurwitz needs --alpha p/q or --poly");
                            if (o.poly) {
                              e.emit(make_record(hurwitz_poly(o.m), provenance("hurwitz_poly", {{"m", o.m}})));
                            } else {
                              const Rational a = Rational::parse(o.alpha);
                              e.emit(make_record(hurwitz_value(o.m, a),
                                                 provenance("hurwitz_value", {{"m", o.m}, {"alpha", a.to_string()}})));
                            }
                            return kOk;
                          });
  hurwitz_cmd->add_option("m", o.m)->required();
  auto* alpha_opt = hurwitz_cmd->add_option("--alpha", o.alpha, "rational point p/q");
  auto* poly_opt = hurwitz_cmd->add_flag("--poly", o.poly, "print the polynomial in a");
  alpha_opt->excludes(poly_opt);

  auto* bernoulli_cmd = add("bernoulli", "Bernoulli number B_n (B_1 = +1/2) or polynomial B_n(a)",
                            [](const Options& o, Emitter& e, auto&) {
                              if (o.poly)
                                e.emit(make_record(bernoulli_poly(o.n), provenance("bernoulli_poly", {{"n", o.n}})));
                              else
                                e.emit(make_record(bernoulli_number(o.n), provenance("bernoulli_number", {{"n", o.n}})));
                              return kOk;
                            });
  bernoulli_cmd->add_option("n", o.n)->required();
  bernoulli_cmd->add_flag("--poly", o.poly, "print the polynomial in a");

  auto* characters_cmd = add("characters", "list the Dirichlet characters mod q in index order",
                             [](const Options& o, Emitter& e, auto&) {
                               if (o.q < 1) throw DomainError("modulus must be positive");
                               const auto& all = characters(o.q);
                               for (std::size_t i = 0; i < all.size(); ++i) e.emit(character_record(i, all[i]));
                               return kOk;
                             });
  characters_cmd->add_option("q", o.q)->required();

  auto* lvalue_cmd = add("lvalue", "L(n, chi) = c * pi^n for chi of matching parity",
                         [](const Options& o, Emitter& e, auto&) {
                           const auto& chi = character(o.q, o.index);
                           e.emit(make_record(l_value_closed(o.n, chi),
                                              provenance("l_value_closed",
                                                         {{"n", o.n}, {"q", o.q}, {"index", o.index}})));
                           return kOk;
                         });
  lvalue_cmd->add_option("n", o.n)->required();
  lvalue_cmd->add_option("q", o.q)->required();
  lvalue_cmd->add_option("index", o.index)->required();

  auto* l1_cmd = add("l1", "L(1, chi): exact for odd chi, log-sine sum for even chi",
                     [](const Options& o, Emitter& e, const std::optional<std::string>& env) {
                       const auto& chi = character(o.q, o.index);
                       const json inputs{{"q", o.q}, {"index", o.index}};
                       if (chi.is_odd()) {
                         json p = inputs;
                         if (o.drop_i_factor) p["variant"] = "without-i";
                         e.emit(make_record(l1_odd_exact(chi, o.drop_i_factor), provenance("l1_odd_exact", p)));
                         return kOk;
                       }
                       if (o.drop_i_factor) throw DomainError("--literal applies to odd characters only");
                       const Precision prec = resolve_precision(o, env);
                       const BigComplex v = l1_even_numeric(chi, prec);
                       const std::string text = chi.order() <= 2 ? v.re.to_string(prec.digits) : v.to_string(prec.digits);
                       json payload{{"re", v.re.to_string(prec.digits)}, {"im", v.im.to_string(prec.digits)},
                                    {"digits", prec.digits}};
                       json p = inputs;
                       p["digits"] = prec.digits;
                       e.emit(make_report(RecordKind::Report, payload, text, provenance("l1_even_numeric", p)));
                       return kOk;
                     });
  l1_cmd->add_option("q", o.q)->required();
  l1_cmd->add_option("index", o.index)->required();
  l1_cmd->add_flag("--literal", o.drop_i_factor, "drop the factor i (documents a known misprint)");

  auto* lerch_cmd = add("lerch", "Lerch zeta phi(lambda, -m) or phi(lambda, a, -m) as a polynomial",
                        [](const Options& o, Emitter& e, auto&) {
                          const Rational lambda = Rational::parse(o.lambda);
                          const json inputs{{"lambda", lambda.to_string()}, {"m", o.m}};
                          if (o.poly)
                            e.emit(make_record(lerch_poly(lambda, o.m), provenance("lerch_poly", inputs)));
                          else
                            e.emit(make_record(lerch_neg(lambda, o.m), provenance("lerch_neg", inputs)));
                          return kOk;
                        });
  lerch_cmd->add_option("lambda", o.lambda, "rational p/q, not an integer")->required();
  lerch_cmd->add_option("m", o.m)->required();
  lerch_cmd->add_flag("--poly", o.poly, "print the polynomial in a");

  auto* multi_cmd = add("multi", "Z_r(-m, a) as a polynomial in a", [](const Options& o, Emitter& e, auto&) {
    if (o.r < 2) throw DomainError("multi needs r >= 2");
    const json inputs{{"r", o.r}, {"m", o.m}};
    if (!o.literal) {
      e.emit(make_record(z_r_poly(o.r, o.m), provenance("z_r_poly", inputs)));
      return kOk;
    }
    const auto t = multi_literal_expansion(o.r, o.m);
    json p = inputs;
    p["part"] = "literal";
    e.emit(make_record(t.literal, provenance("multi_literal", p)));
    p["part"] = "discrepancy";
    e.emit(make_record(t.discrepancy, provenance("multi_literal", p)));
    return kOk;
  });
  multi_cmd->add_option("r", o.r)->required();
  multi_cmd->add_option("m", o.m)->required();
  multi_cmd->add_flag("--literal", o.literal, "the literal expansion and its difference from the true value");

  auto* verify_cmd = add("verify", "run verification suites (all when --suite is absent)",
                         [](const Options& o, Emitter& e, const std::optional<std::string>& env) {
                           const Precision prec = resolve_precision(o, env);
                           std::vector<std::string> names = suite_names();
                           if (!o.suite.empty()) names = {o.suite};
                           bool all_pass = true;
                           for (const auto& name : names)
                             for (const auto& c : run_suite(name, prec)) {
                               all_pass = all_pass && c.pass;
                               e.emit(check_record(name, c, prec));
                             }
                           return all_pass ? kOk : kFailure;
                         });
  verify_cmd->add_option("--suite", o.suite)->check(CLI::IsMember(suite_names()));

  auto* table_cmd = add("table", "tabulate exact values for 0..max (1..max for zeta-even)",
                        [](const Options& o, Emitter& e, auto&) {
                          for (unsigned k = o.table_kind == "zeta-even" ? 1 : 0; k <= o.max; ++k)
                            e.emit_row(o.table_kind, k, table_entry(o.table_kind, k));
                          return kOk;
                        });
  table_cmd->add_option("--kind", o.table_kind)
      ->required()
      ->check(CLI::IsMember({"zeta-neg", "zeta-even", "bernoulli", "bernoulli-poly", "hurwitz-poly"}));
  table_cmd->add_option("--max", o.max)->check(CLI::Range(0u, 2000u));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  if (o.format == "csv" && !table_cmd->parsed()) {
    err << "error: --format csv applies to the table command only\n";
    return kUsage;
  }

  Emitter emitter(out, o.format);
  for (auto& [sub, body] : commands) {
    if (!sub->parsed()) continue;
    try {
      return body(o, emitter, default_prec);
    } catch (const InternalError& e) {
      err << "internal error: " << e.what() << '\n';
      return kFailure;
    } catch (const DomainError& e) {
      err << "error: " << e.what() << '\n';
      return kUsage;
    } catch (const std::exception& e) {
      err << "internal error: " << e.what() << '\n';
      return kFailure;
    }
  }
  return kUsage;
}

} // namespace zetaval::cli
