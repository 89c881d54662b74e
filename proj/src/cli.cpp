#include "altperm/cli.hpp"

#include <CLI11.hpp>

#include <functional>
#include <map>
#include <ostream>
#include <stdexcept>

#include "altperm/distributions.hpp"
#include "altperm/errors.hpp"
#include "altperm/format.hpp"
#include "altperm/pop_count.hpp"
#include "altperm/springer.hpp"
#include "altperm/sweep.hpp"

namespace altperm {
namespace {

constexpr int kBruteLengthGuard = 13;

// Bad flag values detected after parsing; reported like parse errors.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string format = "table";
  std::string method = "both";
  int order = 12;
  bool force = false;
  int threads = default_threads();
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"table", "json", "csv"}));
  sub->add_option("--method", c.method, "Computation method(s)");
  sub->add_option("--order", c.order, "Series truncation order")->check(CLI::Range(0, 1000));
  sub->add_flag("--force", c.force, "Allow brute force beyond length 13");
  sub->add_option("--threads", c.threads, "Worker threads for brute-force sweeps")->check(CLI::Range(1, 256));
}

OutputFormat parse_format(const std::string& s) {
  if (s == "json") return OutputFormat::Json;
  if (s == "csv") return OutputFormat::Csv;
  return OutputFormat::Table;
}

AltClass parse_class(const std::string& s) { return s == "du" ? AltClass::DownUp : AltClass::UpDown; }

StatKind parse_stat(const std::string& s) {
  static const std::map<std::string, StatKind> names{
      {"lrmax", StatKind::LrMax}, {"rlmax", StatKind::RlMax}, {"lrmin", StatKind::LrMin}, {"rlmin", StatKind::RlMin}};
  return names.at(s);
}

FlatPopVariant parse_variant(const std::string& s) {
  static const std::map<std::string, FlatPopVariant> names{{"lambda", FlatPopVariant::Lambda},
                                                           {"top_first", FlatPopVariant::TopFirst},
                                                           {"bottom_first", FlatPopVariant::BottomFirst},
                                                           {"vee", FlatPopVariant::Vee}};
  return names.at(s);
}

// "both" picks the pair, "all" every available method, otherwise exactly one.
std::vector<std::string> resolve_methods(const std::string& requested, const std::vector<std::string>& available,
                                         const std::vector<std::string>& both) {
  if (requested == "both") return both;
  if (requested == "all") return available;
  for (const auto& m : available)
    if (m == requested) return {m};
  std::string list;
  for (const auto& m : available) list += (list.empty() ? "" : ", ") + m;
  throw UsageError("--method " + requested + " is not available here (choose from " + list + ", both, all)");
}

bool uses(const std::vector<std::string>& methods, const std::string& m) {
  return std::find(methods.begin(), methods.end(), m) != methods.end();
}

void guard_brute(const std::vector<std::string>& methods, int length, const Common& c, std::ostream& err) {
  if (!uses(methods, "brute") || length <= kBruteLengthGuard) return;
  if (!c.force)
    throw UsageError("brute force at length " + std::to_string(length) + " exceeds the default guard of " +
                     std::to_string(kBruteLengthGuard) + "; pass --force or choose another --method");
  err << "warning: brute force at length " << length << " may take a long time\n";
}

int series_order(const Common& c, int needed) {
  const int order = std::max(c.order, needed);
  if (order > series_max_order())
    throw UsageError("series order " + std::to_string(order) + " exceeds the cap " + std::to_string(series_max_order()) +
                     " (raise it with ALTPERM_MAX_ORDER)");
  return order;
}

template <class T>
VerificationStatus agreement(const std::vector<T>& values) {
  if (values.size() <= 1) return VerificationStatus::SingleMethod;
  for (const auto& v : values)
    if (!(v == values.front())) return VerificationStatus::Mismatch;
  return VerificationStatus::VerifiedAgree;
}

VerificationStatus combine(VerificationStatus a, VerificationStatus b) {
  if (a == VerificationStatus::Mismatch || b == VerificationStatus::Mismatch) return VerificationStatus::Mismatch;
  if (a == VerificationStatus::VerifiedAgree || b == VerificationStatus::VerifiedAgree)
    return VerificationStatus::VerifiedAgree;
  return VerificationStatus::SingleMethod;
}

// One polynomial per method; rows list each, "result" is the first.
TableRecord polynomial_record(Json query, const std::vector<std::string>& methods,
                              const std::function<DistributionPolynomial(const std::string&)>& compute, Variables vars) {
  TableRecord rec;
  rec.query = std::move(query);
  rec.methods = methods;
  rec.columns = {"method", "distribution"};
  std::vector<DistributionPolynomial> values;
  for (const auto& m : methods) {
    values.push_back(compute(m));
    rec.rows.push_back({m, PolyCell{values.back(), vars}});
  }
  rec.status = agreement(values);
  rec.result = PolyCell{values.front(), vars};
  return rec;
}

struct Leaf {
  CLI::App* app = nullptr;
  std::function<TableRecord(std::ostream&)> action;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Statistics and pattern avoidance on alternating permutations", "altperm"};
  app.require_subcommand(1);
  Common common;
  std::vector<Leaf> leaves;

  // dist
  auto* dist = app.add_subcommand("dist", "Distributions of record statistics")->require_subcommand(1);
  std::string cls = "ud", stat = "rlmax", pair = "max";
  int length = 0;
  auto add_class_length = [&](CLI::App* sub) {
    sub->add_option("--class", cls, "Alternating class")->check(CLI::IsMember({"ud", "du"}));
    sub->add_option("--length", length, "Permutation length")->required()->check(CLI::Range(0, 30));
  };

  auto* single = dist->add_subcommand("single", "Distribution of one statistic");
  add_class_length(single);
  single->add_option("--stat", stat, "Statistic")->check(CLI::IsMember({"lrmax", "rlmax", "lrmin", "rlmin"}));
  add_common(single, common);
  leaves.push_back({single, [&](std::ostream& diag) {
                      const auto methods = resolve_methods(common.method, {"brute", "gf"}, {"brute", "gf"});
                      guard_brute(methods, length, common, diag);
                      const AltClass c = parse_class(cls);
                      const StatKind k = parse_stat(stat);
                      const int variant = single_variant_for(c, length, k);
                      Json q{{"command", "dist single"}, {"class", cls}, {"length", length}, {"stat", stat}};
                      return polynomial_record(
                          q, methods,
                          [&](const std::string& m) {
                            if (m == "brute") return brute_single(length, c, k, common.threads);
                            const auto f = gf_single(variant, series_order(common, length));
                            return extract_distribution(f, length, "F" + std::to_string(variant));
                          },
                          kOnlyQ);
                    }});

  auto* joint_mmp = dist->add_subcommand("joint-mmp", "Joint distribution of two mesh-pattern counts");
  add_class_length(joint_mmp);
  joint_mmp->add_option("--pair", pair, "max: (lrmax, rlmax), min: (lrmin, rlmin)")
      ->check(CLI::IsMember({"max", "min"}));
  add_common(joint_mmp, common);
  leaves.push_back({joint_mmp, [&](std::ostream& diag) {
                      const auto methods = resolve_methods(common.method, {"brute", "gf", "rec"}, {"brute", "gf"});
                      guard_brute(methods, length, common, diag);
                      const AltClass c = parse_class(cls);
                      const StatPair sp = pair == "min" ? StatPair::Minima : StatPair::Maxima;
                      const auto v = static_cast<MmpVariant>(joint_variant_for(c, length, sp) - 1);
                      Json q{{"command", "dist joint-mmp"}, {"class", cls}, {"length", length}, {"pair", pair}};
                      return polynomial_record(
                          q, methods,
                          [&](const std::string& m) {
                            if (m == "brute") return brute_joint_mmp(length, c, sp, common.threads);
                            if (m == "rec") return rec_joint_mmp(v, length);
                            return extract_distribution(gf_joint_mmp(v, series_order(common, length)), length,
                                                        to_string(v));
                          },
                          kBoth);
                    }});

  auto* joint_mm = dist->add_subcommand("joint-maxmin", "Joint distribution of left and right records");
  add_class_length(joint_mm);
  joint_mm->add_option("--pair", pair, "max: (lrmax, rlmax), min: (lrmin, rlmin)")
      ->check(CLI::IsMember({"max", "min"}));
  add_common(joint_mm, common);
  leaves.push_back({joint_mm, [&](std::ostream& diag) {
                      const auto methods = resolve_methods(common.method, {"brute", "gf", "subst"}, {"brute", "gf"});
                      guard_brute(methods, length, common, diag);
                      const AltClass c = parse_class(cls);
                      const StatPair sp = pair == "min" ? StatPair::Minima : StatPair::Maxima;
                      const int v = joint_variant_for(c, length, sp);
                      Json q{{"command", "dist joint-maxmin"}, {"class", cls}, {"length", length}, {"pair", pair}};
                      return polynomial_record(
                          q, methods,
                          [&](const std::string& m) {
                            const std::string name = "G" + std::to_string(v);
                            if (m == "brute") return brute_joint_maxmin(length, c, sp, common.threads);
                            const int order = series_order(common, length);
                            if (m == "subst")
                              return extract_distribution(gf_joint_maxmin_via_subst(v, order), length, name);
                            return extract_distribution(gf_joint_maxmin(v, order), length, name);
                          },
                          kBoth);
                    }});

  auto* check = dist->add_subcommand("check", "Brute-force check of every equidistribution identity at one length");
  check->add_option("--length", length, "Permutation length")->required()->check(CLI::Range(1, 30));
  add_common(check, common);
  leaves.push_back({check, [&](std::ostream& diag) {
                      guard_brute({"brute"}, length, common, diag);
                      TableRecord rec;
                      rec.query = Json{{"command", "dist check"}, {"length", length}};
                      rec.methods = {"brute"};
                      rec.columns = {"identity", "passed", "detail"};
                      rec.status = VerificationStatus::VerifiedAgree;
                      for (const auto& r : check_equidistribution(length, common.threads)) {
                        rec.rows.push_back({r.name, std::string(r.passed ? "yes" : "no"), r.passed ? std::string() : r.detail});
                        if (!r.passed) rec.status = VerificationStatus::Mismatch;
                      }
                      return rec;
                    }});

  // springer
  auto* springer = app.add_subcommand("springer", "Springer numbers and their q-analogues");
  int max_half_n = 6;
  std::string q_analog;
  int deformation = 0;
  springer->add_option("--max-half-n", max_half_n, "Largest n (permutation length 2n)")->check(CLI::Range(0, 60));
  springer->add_option("--q-analog", q_analog, "lle, be or joint")->check(CLI::IsMember({"lle", "be", "joint"}));
  springer->add_option("--section7,--deformation", deformation, "q-deformation 1..4 of 1/(cos t - sin t)")->check(CLI::Range(1, 4));
  add_common(springer, common);
  leaves.push_back({springer, [&](std::ostream& diag) {
                      TableRecord rec;
                      if (!q_analog.empty() && deformation != 0)
                        throw UsageError("--q-analog and --section7 are mutually exclusive");
                      if (deformation != 0) {
                        rec.methods = resolve_methods(common.method, {"gf"}, {"gf"});
                        const int order = series_order(common, 0);
                        rec.query = Json{{"command", "springer"}, {"section7", deformation}, {"order", order}};
                        rec.columns = {"n", "coefficient"};
                        const auto f = q_springer_series(deformation, order);
                        for (int n = 0; n <= order; ++n)
                          rec.rows.push_back({long(n), LaurentCell{egf_coefficient(f, n), kOnlyQ}});
                        return rec;
                      }
                      if (!q_analog.empty()) {
                        rec.methods = resolve_methods(common.method, {"brute", "gf"}, {"brute", "gf"});
                        guard_brute(rec.methods, 2 * max_half_n, common, diag);
                        rec.query = Json{{"command", "springer"}, {"q-analog", q_analog}, {"max-half-n", max_half_n}};
                        rec.columns = {"half_n", "length"};
                        for (const auto& m : rec.methods) rec.columns.push_back(m);
                        const Variables vars = q_analog == "lle" ? kOnlyQ : q_analog == "be" ? kOnlyP : kBoth;
                        std::optional<LaurentSeries> f;
                        if (uses(rec.methods, "gf")) {
                          const int order = series_order(common, max_half_n);
                          f = q_analog == "lle" ? gf_Q(order) : q_analog == "be" ? gf_U(order) : gf_W(order);
                        }
                        for (int h = 1; h <= max_half_n; ++h) {
                          std::vector<Cell> row{long(h), long(2 * h)};
                          std::vector<DistributionPolynomial> values;
                          for (const auto& m : rec.methods) {
                            DistributionPolynomial d;
                            if (m == "gf") {
                              d = extract_distribution(*f, h, "springer q-analogue");
                            } else {
                              d = brute_lle_be(2 * h);
                              if (q_analog == "lle") d = DistributionPolynomial::from_laurent(d.to_laurent().at_p_one(), "lle");
                              if (q_analog == "be") d = DistributionPolynomial::from_laurent(d.to_laurent().at_q_one(), "be");
                            }
                            values.push_back(d);
                            row.push_back(PolyCell{d, vars});
                          }
                          rec.status = combine(rec.status, agreement(values));
                          rec.rows.push_back(std::move(row));
                        }
                        return rec;
                      }
                      rec.methods = resolve_methods(common.method, {"gf", "rec", "brute"}, {"gf", "rec"});
                      guard_brute(rec.methods, 2 * max_half_n, common, diag);
                      rec.query = Json{{"command", "springer"}, {"max-half-n", max_half_n}};
                      rec.columns = {"half_n", "length", "value"};
                      std::vector<SequenceTable> tables;
                      for (const auto& m : rec.methods) {
                        if (m == "gf") tables.push_back(springer_numbers(max_half_n));
                        if (m == "rec") tables.push_back(rc_count_recurrence(max_half_n));
                        if (m == "brute") {
                          SequenceTable t;
                          for (int h = 0; h <= max_half_n; ++h) t.push_back(brute_rc_count(h));
                          tables.push_back(std::move(t));
                        }
                      }
                      rec.status = agreement(tables);
                      for (int h = 0; h <= max_half_n; ++h)
                        rec.rows.push_back({long(h), long(2 * h), tables.front()[static_cast<std::size_t>(h)]});
                      if (rec.status == VerificationStatus::Mismatch) {
                        for (std::size_t i = 0; i < tables.size(); ++i) {
                          rec.columns.push_back(rec.methods[i]);
                          for (int h = 0; h <= max_half_n; ++h)
                            rec.rows[static_cast<std::size_t>(h)].push_back(tables[i][static_cast<std::size_t>(h)]);
                        }
                      }
                      return rec;
                    }});

  // pop
  auto* pop = app.add_subcommand("pop", "Flat partially ordered pattern avoidance")->require_subcommand(1);
  std::string variant = "lambda";
  int k = 3;
  auto* pop_count = pop->add_subcommand("count", "Alternating permutations avoiding a flat pattern");
  pop_count->add_option("--variant", variant, "Flat pattern shape")
      ->check(CLI::IsMember({"lambda", "top_first", "bottom_first", "vee"}));
  pop_count->add_option("--k", k, "Pattern size")->check(CLI::Range(3, 30));
  pop_count->add_option("--class", cls, "Alternating class")->check(CLI::IsMember({"ud", "du"}));
  pop_count->add_option("--length", length, "Permutation length")->required()->check(CLI::Range(0, 200));
  add_common(pop_count, common);
  leaves.push_back({pop_count, [&](std::ostream& diag) {
                      TableRecord rec;
                      rec.methods = resolve_methods(common.method, {"brute", "rec"}, {"brute", "rec"});
                      guard_brute(rec.methods, length, common, diag);
                      const AltClass c = parse_class(cls);
                      const FlatPopVariant fv = parse_variant(variant);
                      rec.query = Json{{"command", "pop count"}, {"variant", variant}, {"k", k}, {"class", cls},
                                       {"length", length}};
                      rec.columns = {"method", "count"};
                      std::vector<BigInt> values;
                      for (const auto& m : rec.methods) {
                        values.push_back(m == "brute" ? brute_flat_pop_avoiding(length, c, fv, k)
                                                      : pop_table_lookup(fv, k, c, length));
                        rec.rows.push_back({m, values.back()});
                      }
                      rec.status = agreement(values);
                      rec.result = values.front();
                      return rec;
                    }});

  auto* pop_dist = pop->add_subcommand("dist", "Permutations of S_n by number of occurrences of the flat pattern");
  pop_dist->add_option("--k", k, "Pattern size")->check(CLI::Range(2, 30));
  pop_dist->add_option("--length", length, "Permutation length")->required()->check(CLI::Range(0, 200));
  add_common(pop_dist, common);
  leaves.push_back({pop_dist, [&](std::ostream& diag) {
                      TableRecord rec;
                      rec.methods = resolve_methods(common.method, {"rec", "brute"}, {"rec", "brute"});
                      guard_brute(rec.methods, length, common, diag);
                      rec.query = Json{{"command", "pop dist"}, {"k", k}, {"length", length}};
                      rec.columns = {"occurrences"};
                      std::vector<std::vector<BigInt>> tables;
                      for (const auto& m : rec.methods) {
                        rec.columns.push_back(m);
                        tables.push_back(m == "rec" ? flat_pop_distribution(length, k).counts
                                                    : brute_flat_pop_distribution(length, k).counts);
                      }
                      rec.status = agreement(tables);
                      std::size_t rows = 0;
                      for (const auto& t : tables) rows = std::max(rows, t.size());
                      for (std::size_t l = 0; l < rows; ++l) {
                        std::vector<Cell> row{long(l)};
                        for (const auto& t : tables) row.push_back(l < t.size() ? t[l] : BigInt(0));
                        rec.rows.push_back(std::move(row));
                      }
                      return rec;
                    }});

  // series
  auto* series = app.add_subcommand("series", "Truncated generating functions")->require_subcommand(1);
  std::string name;
  auto* show = series->add_subcommand("show", "Coefficients of a named generating function");
  show->add_option("--name", name, "sin, cos, sec, tan, euler, springer, F1-F4, A-D, G1-G4, G1s-G4s, Q, U, W, S7-1..S7-4")
      ->required();
  add_common(show, common);
  leaves.push_back({show, [&](std::ostream&) {
                      TableRecord rec;
                      rec.methods = resolve_methods(common.method == "both" ? "gf" : common.method, {"gf"}, {"gf"});
                      const int order = series_order(common, 0);
                      rec.query = Json{{"command", "series show"}, {"name", name}, {"order", order}};
                      rec.columns = {"n", "coefficient", "egf"};
                      const std::map<std::string, std::function<LaurentSeries()>> named{
                          {"sin", [&] { return lift(trig(TrigKind::Sin, order)); }},
                          {"cos", [&] { return lift(trig(TrigKind::Cos, order)); }},
                          {"sec", [&] { return lift(trig(TrigKind::Sec, order)); }},
                          {"tan", [&] { return lift(trig(TrigKind::Tan, order)); }},
                          {"euler", [&] { return lift(trig(TrigKind::Sec, order) + trig(TrigKind::Tan, order)); }},
                          {"springer", [&] { return lift(reciprocal(trig(TrigKind::Cos, order) - trig(TrigKind::Sin, order))); }},
                          {"F1", [&] { return gf_single(1, order); }},
                          {"F2", [&] { return gf_single(2, order); }},
                          {"F3", [&] { return gf_single(3, order); }},
                          {"F4", [&] { return gf_single(4, order); }},
                          {"A", [&] { return gf_joint_mmp(MmpVariant::A, order); }},
                          {"B", [&] { return gf_joint_mmp(MmpVariant::B, order); }},
                          {"C", [&] { return gf_joint_mmp(MmpVariant::C, order); }},
                          {"D", [&] { return gf_joint_mmp(MmpVariant::D, order); }},
                          {"G1", [&] { return gf_joint_maxmin(1, order); }},
                          {"G2", [&] { return gf_joint_maxmin(2, order); }},
                          {"G3", [&] { return gf_joint_maxmin(3, order); }},
                          {"G4", [&] { return gf_joint_maxmin(4, order); }},
                          {"G1s", [&] { return gf_joint_maxmin_via_subst(1, order); }},
                          {"G2s", [&] { return gf_joint_maxmin_via_subst(2, order); }},
                          {"G3s", [&] { return gf_joint_maxmin_via_subst(3, order); }},
                          {"G4s", [&] { return gf_joint_maxmin_via_subst(4, order); }},
                          {"Q", [&] { return gf_Q(order); }},
                          {"U", [&] { return gf_U(order); }},
                          {"W", [&] { return gf_W(order); }},
                          {"S7-1", [&] { return q_springer_series(1, order); }},
                          {"S7-2", [&] { return q_springer_series(2, order); }},
                          {"S7-3", [&] { return q_springer_series(3, order); }},
                          {"S7-4", [&] { return q_springer_series(4, order); }},
                      };
                      const auto it = named.find(name);
                      if (it == named.end()) throw UsageError("unknown series name '" + name + "'");
                      const LaurentSeries f = it->second();
                      for (int n = 0; n <= std::min(order, f.order()); ++n)
                        rec.rows.push_back({long(n), LaurentCell{f[n], kBoth}, LaurentCell{egf_coefficient(f, n), kBoth}});
                      return rec;
                    }});

  std::vector<std::string> argv_store{"altperm"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  for (const auto& leaf : leaves) {
    if (!leaf.app->parsed()) continue;
    try {
      const TableRecord rec = leaf.action(err);
      write_record(rec, parse_format(common.format), out);
      if (rec.status == VerificationStatus::Mismatch) {
        err << "error: methods disagree\n";
        return kExitMismatch;
      }
      return kExitOk;
    } catch (const UsageError& e) {
      err << "error: " << e.what() << "\n\n" << leaf.app->help();
      return kExitUsage;
    } catch (const DomainError& e) {
      err << "error: " << e.what() << '\n';
      return kExitUsage;
    } catch (const UnsupportedInput& e) {
      err << "error: " << e.what() << '\n';
      return kExitUsage;
    } catch (const VerificationError& e) {
      err << "error: " << e.what() << '\n';
      return kExitMismatch;
    } catch (const std::exception& e) {
      err << "internal error: " << e.what() << '\n';
      return kExitMismatch;
    }
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace altperm
