#include "ellmertens/cli.hpp"

#include <algorithm>
#include <future>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "ellmertens/errors.hpp"
#include "ellmertens/isogeny.hpp"
#include "ellmertens/mertens.hpp"
#include "ellmertens/mobius.hpp"
#include "ellmertens/oracle.hpp"
#include "ellmertens/zeta.hpp"

namespace ellmertens::cli {
namespace {

using Json = nlohmann::ordered_json;

enum class Format { Text, Json, Csv };

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

// What a subcommand hands back to the emitter. Most commands produce one
// payload; sweep produces one per (q, a) pair.
struct Result {
  Json inputs;
  std::vector<Json> payloads;
  Table table;
  int exit_code = 0;
};

// Exact integers travel as decimal strings.
std::string num(std::int64_t v) { return std::to_string(v); }
std::string num(std::uint64_t v) { return std::to_string(v); }
std::string num(const BigInt& v) { return v.str(); }

Json real(double v) {
  if (!std::isfinite(v)) return nullptr;
  return round_significant(v);
}

std::string real_text(double v) {
  if (std::isinf(v)) return "inf";
  std::ostringstream os;
  os << std::setprecision(15) << v;
  return os.str();
}

std::string theta_text(const IsogenyClass& cls) {
  return cls.kase.angle ? cls.kase.angle->str() : real_text(cls.theta);
}

Json optional_index(const std::optional<std::size_t>& v) {
  if (!v) return nullptr;
  return num(static_cast<std::uint64_t>(*v));
}

std::string optional_text(const std::optional<std::size_t>& v) {
  return v ? std::to_string(*v) : std::string("none");
}

void write_table(std::ostream& out, const Table& table) {
  std::vector<std::size_t> widths(table.header.size(), 0);
  const auto measure = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size() && i < widths.size(); ++i) widths[i] = std::max(widths[i], row[i].size());
  };
  measure(table.header);
  for (const auto& row : table.rows) measure(row);
  const auto line = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out << "  ";
      if (i + 1 == row.size()) {
        out << row[i];
      } else {
        out << std::left << std::setw(static_cast<int>(widths[i])) << row[i];
      }
    }
    out << '\n';
  };
  line(table.header);
  for (const auto& row : table.rows) line(row);
}

std::string csv_field(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string quoted = "\"";
  for (char c : field) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

void write_csv(std::ostream& out, const Table& table) {
  const auto line = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(row[i]);
    out << '\n';
  };
  line(table.header);
  for (const auto& row : table.rows) line(row);
}

// Shared between `verdict` and `sweep`; the column order is part of the CSV contract.
const std::vector<std::string> kVerdictColumns = {"q",     "p",         "m",      "a",     "case",
                                                  "theta", "holds",     "condition", "limsup", "first_violation"};

Json verdict_payload(const Verdict& v, const ConjectureCheck& check) {
  const auto& cls = v.cls;
  Json j;
  j["q"] = num(cls.q.q());
  j["p"] = num(cls.q.p());
  j["m"] = num(static_cast<std::uint64_t>(cls.q.m()));
  j["a"] = num(cls.a);
  j["case"] = case_label(cls.kase.tag);
  j["theta"] = theta_text(cls);
  j["holds"] = v.holds;
  j["condition"] = v.matched_condition ? Json(condition_label(*v.matched_condition)) : Json(nullptr);
  j["limsup"] = v.limsup.str();
  j["limsup_value"] = real(v.limsup.to_double());
  j["first_violation"] = optional_index(check.first_violation);
  j["violations_recur"] = check.recurs();
  j["xmax"] = num(static_cast<std::uint64_t>(check.x_max));
  return j;
}

std::vector<std::string> verdict_row(const Verdict& v, const ConjectureCheck& check) {
  const auto& cls = v.cls;
  return {num(cls.q.q()),
          num(cls.q.p()),
          std::to_string(cls.q.m()),
          num(cls.a),
          case_label(cls.kase.tag),
          theta_text(cls),
          v.holds ? "true" : "false",
          v.matched_condition ? condition_label(*v.matched_condition) : "",
          v.limsup.is_infinite() ? "inf" : real_text(v.limsup.to_double()),
          check.first_violation ? std::to_string(*check.first_violation) : ""};
}

struct Options {
  std::uint64_t q = 0;
  std::int64_t a = 0;
  std::size_t xmax = 0;
  std::size_t nmax = 12;
  std::string epsilon;
  std::uint64_t qmax = 0;
  bool force_large = false;
  unsigned threads = 0;
};

Result do_classify(const Options& o) {
  const PrimePower q = PrimePower::from_order(o.q);
  const IsogenyClass cls = classify(q, o.a);
  Result r;
  r.inputs = {{"q", num(o.q)}, {"a", num(o.a)}};
  Json j;
  j["case"] = case_label(cls.kase.tag);
  j["theta"] = theta_text(cls);
  j["theta_radians"] = real(cls.theta);
  j["rational_angle"] = cls.kase.is_rational_angle();
  j["p"] = num(q.p());
  j["m"] = num(static_cast<std::uint64_t>(q.m()));
  j["l_polynomial"] = l_polynomial(cls).str();
  r.payloads.push_back(j);
  r.table.header = {"q", "p", "m", "a", "case", "theta", "theta_radians", "l_polynomial"};
  r.table.rows.push_back({num(q.q()), num(q.p()), std::to_string(q.m()), num(cls.a), case_label(cls.kase.tag),
                          theta_text(cls), real_text(cls.theta), l_polynomial(cls).str()});
  return r;
}

Result do_traces(const Options& o) {
  const PrimePower q = PrimePower::from_order(o.q);
  Result r;
  r.inputs = {{"q", num(o.q)}};
  Json list = Json::array();
  r.table.header = {"a", "case", "theta"};
  for (auto a : admissible_traces(q)) {
    const IsogenyClass cls = classify(q, a);
    list.push_back({{"a", num(a)}, {"case", case_label(cls.kase.tag)}, {"theta", theta_text(cls)}});
    r.table.rows.push_back({num(a), case_label(cls.kase.tag), theta_text(cls)});
  }
  Json j;
  j["count"] = num(static_cast<std::uint64_t>(list.size()));
  j["traces"] = list;
  r.payloads.push_back(j);
  return r;
}

Result do_series(const Options& o) {
  const IsogenyClass cls = classify(PrimePower::from_order(o.q), o.a);
  const std::size_t n = o.nmax;
  const auto s = reciprocal_l_coefficients(cls, n);
  const auto c = mobius_coefficients(cls, n).coeffs;
  const auto counts = n > 0 ? extension_counts(cls, n) : ExtensionCounts{};
  Result r;
  r.inputs = {{"q", num(o.q)}, {"a", num(o.a)}, {"nmax", num(static_cast<std::uint64_t>(n))}};
  r.table.header = {"n", "s", "c", "trace", "points", "closed_points"};
  Json rows = Json::array();
  for (std::size_t k = 0; k <= n; ++k) {
    Json row;
    row["n"] = num(static_cast<std::uint64_t>(k));
    row["s"] = num(s[k]);
    row["c"] = num(c[k]);
    std::vector<std::string> cells = {std::to_string(k), num(s[k]), num(c[k]), "", "", ""};
    if (k >= 1) {
      row["trace"] = num(counts.traces[k - 1]);
      row["points"] = num(counts.points[k - 1]);
      row["closed_points"] = num(counts.closed_points[k - 1]);
      cells[3] = num(counts.traces[k - 1]);
      cells[4] = num(counts.points[k - 1]);
      cells[5] = num(counts.closed_points[k - 1]);
    } else {
      row["trace"] = nullptr;
      row["points"] = nullptr;
      row["closed_points"] = nullptr;
    }
    rows.push_back(row);
    r.table.rows.push_back(cells);
  }
  r.payloads.push_back({{"case", case_label(cls.kase.tag)}, {"rows", rows}});
  return r;
}

Result do_sums(const Options& o) {
  const IsogenyClass cls = classify(PrimePower::from_order(o.q), o.a);
  const std::size_t xmax = o.xmax ? o.xmax : 12;
  const auto trajectory = mertens_sums(cls, xmax);
  Result r;
  r.inputs = {{"q", num(o.q)}, {"a", num(o.a)}, {"xmax", num(static_cast<std::uint64_t>(xmax))}};
  r.table.header = {"X", "M", "ratio", "closed_form"};
  Json rows = Json::array();
  for (std::size_t x = 1; x <= xmax; ++x) {
    const double closed = closed_form_ratio(cls, x);
    rows.push_back({{"x", num(static_cast<std::uint64_t>(x))},
                    {"M", num(trajectory.M(x))},
                    {"ratio", real(trajectory.ratio(x))},
                    {"closed_form", real(closed)}});
    r.table.rows.push_back(
        {std::to_string(x), num(trajectory.M(x)), real_text(trajectory.ratio(x)), real_text(closed)});
  }
  r.payloads.push_back({{"case", case_label(cls.kase.tag)}, {"rows", rows}});
  return r;
}

Result do_verdict(const Options& o) {
  const std::size_t xmax = o.xmax ? o.xmax : 500;
  const Verdict v = verdict(PrimePower::from_order(o.q), o.a);
  const auto check = conjecture_check_exact(v.cls, xmax);
  Result r;
  r.inputs = {{"q", num(o.q)}, {"a", num(o.a)}, {"xmax", num(static_cast<std::uint64_t>(xmax))}};
  r.payloads.push_back(verdict_payload(v, check));
  r.table.header = kVerdictColumns;
  r.table.rows.push_back(verdict_row(v, check));
  return r;
}

Result do_limsup(const Options& o) {
  const IsogenyClass cls = classify(PrimePower::from_order(o.q), o.a);
  const Limsup l = limsup_ratio(cls);
  const std::string method = !cls.simple_zero() ? "linear-growth" : (cls.kase.angle ? "period-maximum" : "amplitude");
  Result r;
  r.inputs = {{"q", num(o.q)}, {"a", num(o.a)}};
  r.payloads.push_back({{"case", case_label(cls.kase.tag)},
                        {"limsup", l.str()},
                        {"limsup_value", real(l.to_double())},
                        {"method", method}});
  r.table.header = {"q", "a", "case", "limsup", "limsup_value", "method"};
  r.table.rows.push_back({num(o.q), num(o.a), case_label(cls.kase.tag), l.str(), real_text(l.to_double()), method});
  return r;
}

Result do_table(const Options& o) {
  const IsogenyClass cls = classify(PrimePower::from_order(o.q), o.a);
  const RatioProfile profile = residue_table(cls);
  Result r;
  r.inputs = {{"q", num(o.q)}, {"a", num(o.a)}};
  r.table.header = {"residue", "value", "decimal"};
  Json rows = Json::array();
  for (std::size_t i = 0; i < profile.values.size(); ++i) {
    rows.push_back({{"residue", num(static_cast<std::uint64_t>(i))},
                    {"value", profile.values[i].str()},
                    {"decimal", profile.decimal(i)}});
    r.table.rows.push_back({std::to_string(i), profile.values[i].str(), profile.decimal(i)});
  }
  r.payloads.push_back({{"case", case_label(cls.kase.tag)},
                        {"period", num(static_cast<std::uint64_t>(profile.period))},
                        {"rows", rows},
                        {"max_abs", profile.max_abs.str()},
                        {"max_abs_value", real(profile.max_abs.to_double())}});
  return r;
}

Result do_check(const Options& o) {
  const IsogenyClass cls = classify(PrimePower::from_order(o.q), o.a);
  const std::size_t xmax = o.xmax ? o.xmax : 500;
  const auto check = conjecture_check_exact(cls, xmax);
  Result r;
  r.inputs = {{"q", num(o.q)}, {"a", num(o.a)}, {"xmax", num(static_cast<std::uint64_t>(xmax))}};
  r.payloads.push_back({{"first_violation", optional_index(check.first_violation)},
                        {"last_violation", optional_index(check.last_violation)},
                        {"violation_count", num(static_cast<std::uint64_t>(check.violation_count))},
                        {"recurs", check.recurs()}});
  r.table.header = {"q", "a", "xmax", "first_violation", "last_violation", "violation_count"};
  r.table.rows.push_back({num(o.q), num(o.a), std::to_string(xmax), optional_text(check.first_violation),
                          optional_text(check.last_violation), std::to_string(check.violation_count)});
  return r;
}

Result do_witnesses(const Options& o) {
  const IsogenyClass cls = classify(PrimePower::from_order(o.q), o.a);
  const std::size_t xmax = o.xmax ? o.xmax : 12;
  Rational epsilon;
  try {
    epsilon = parse_decimal(o.epsilon);
  } catch (const std::invalid_argument& e) {
    throw CLI::ValidationError("--epsilon", e.what());
  }
  if (epsilon <= 0 || epsilon >= 1) throw CLI::ValidationError("--epsilon", "must lie strictly between 0 and 1");
  const auto found = witness_search(cls, epsilon, xmax);
  Result r;
  r.inputs = {{"q", num(o.q)}, {"a", num(o.a)}, {"epsilon", o.epsilon}, {"xmax", num(static_cast<std::uint64_t>(xmax))}};
  Json list = Json::array();
  r.table.header = {"X"};
  for (auto x : found) {
    list.push_back(num(static_cast<std::uint64_t>(x)));
    r.table.rows.push_back({std::to_string(x)});
  }
  r.payloads.push_back({{"count", num(static_cast<std::uint64_t>(found.size()))}, {"witnesses", list}});
  return r;
}

unsigned worker_count(unsigned requested) {
  return requested != 0 ? requested : std::max(1u, std::thread::hardware_concurrency());
}

Result do_sweep(const Options& o) {
  const std::size_t xmax = o.xmax ? o.xmax : 500;
  std::vector<IsogenyClass> classes;
  for (const auto& q : prime_powers_up_to(o.qmax)) {
    for (auto a : admissible_traces(q)) classes.push_back(classify(q, a));
  }

  struct Row {
    Verdict v;
    ConjectureCheck check;
  };
  std::vector<std::optional<Row>> rows(classes.size());
  const unsigned threads = std::min<unsigned>(worker_count(o.threads), std::max<std::size_t>(classes.size(), 1));
  std::vector<std::future<void>> workers;
  for (unsigned w = 0; w < threads; ++w) {
    workers.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < classes.size(); i += threads) {
        rows[i] = Row{verdict(classes[i]), conjecture_check_exact(classes[i], xmax)};
      }
    }));
  }
  for (auto& worker : workers) worker.get();

  // classes were generated in (q, a) order, so the output order does not depend on threads.
  Result r;
  r.inputs = {{"qmax", num(o.qmax)}, {"xmax", num(static_cast<std::uint64_t>(xmax))}};
  r.table.header = kVerdictColumns;
  for (const auto& row : rows) {
    r.payloads.push_back(verdict_payload(row->v, row->check));
    r.table.rows.push_back(verdict_row(row->v, row->check));
  }
  return r;
}

Result do_verify_product(const Options& o) {
  const IsogenyClass cls = classify(PrimePower::from_order(o.q), o.a);
  const auto recurrence = mobius_coefficients(cls, o.nmax).coeffs;
  const auto oracle = product_oracle(cls, o.nmax);
  Result r;
  r.inputs = {{"q", num(o.q)}, {"a", num(o.a)}, {"nmax", num(static_cast<std::uint64_t>(o.nmax))}};
  r.table.header = {"n", "recurrence", "product", "agree"};
  Json rec = Json::array(), orc = Json::array();
  const bool match = recurrence == oracle;
  for (std::size_t k = 0; k <= o.nmax; ++k) {
    rec.push_back(num(recurrence[k]));
    orc.push_back(num(oracle[k]));
    r.table.rows.push_back({std::to_string(k), num(recurrence[k]), num(oracle[k]), recurrence[k] == oracle[k] ? "yes" : "NO"});
  }
  r.payloads.push_back({{"match", match}, {"recurrence", rec}, {"product", orc}});
  r.exit_code = match ? 0 : 3;
  return r;
}

Result do_census(const Options& o) {
  const PrimePower q = PrimePower::from_order(o.q);
  const TraceCensus census = trace_census(q, {o.force_large, o.threads});
  const auto expected = admissible_traces(q);
  const bool match = census.realized_traces == expected;
  Result r;
  r.inputs = {{"q", num(o.q)}, {"force_large", o.force_large}};
  Json realized = Json::array(), admissible = Json::array(), counts = Json::object();
  r.table.header = {"a", "curves", "admissible"};
  for (auto a : census.realized_traces) realized.push_back(num(a));
  for (auto a : expected) admissible.push_back(num(a));
  for (const auto& [a, n] : census.counts) {
    counts[num(a)] = num(n);
    const bool ok = std::binary_search(expected.begin(), expected.end(), a);
    r.table.rows.push_back({num(a), num(n), ok ? "yes" : "NO"});
  }
  for (auto a : expected) {
    if (!census.counts.contains(a)) r.table.rows.push_back({num(a), "0", "yes"});
  }
  r.payloads.push_back({{"match", match},
                        {"realized_traces", realized},
                        {"admissible_traces", admissible},
                        {"counts", counts},
                        {"singular_tuples", num(census.singular_tuples)}});
  r.exit_code = match ? 0 : 3;
  return r;
}

void emit(std::ostream& out, const std::string& command, const Result& result, Format format) {
  switch (format) {
    case Format::Json:
      for (const auto& payload : result.payloads) {
        Json record;
        record["format_version"] = kFormatVersion;
        record["command"] = command;
        record["inputs"] = result.inputs;
        record["payload"] = payload;
        out << record.dump() << '\n';
      }
      break;
    case Format::Csv:
      write_csv(out, result.table);
      break;
    case Format::Text:
      write_table(out, result.table);
      break;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mertens conjecture for elliptic curves over finite fields"};
  app.name("ellmertens");
  app.require_subcommand(1);

  Options o;
  bool json = false;
  bool csv = false;

  const auto add_format = [&](CLI::App* sub) {
    auto* j = sub->add_flag("--json", json, "one JSON record per line");
    auto* c = sub->add_flag("--csv", csv, "comma-separated output");
    j->excludes(c);
  };
  const auto add_qa = [&](CLI::App* sub) {
    sub->add_option("--q", o.q, "field order q = p^m")->required();
    sub->add_option("--a", o.a, "Frobenius trace")->required();
  };

  using Handler = Result (*)(const Options&);
  std::vector<std::pair<CLI::App*, Handler>> commands;
  const auto command = [&](const std::string& name, const std::string& help, Handler handler) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_format(sub);
    commands.emplace_back(sub, handler);
    return sub;
  };

  add_qa(command("classify", "Waterhouse case and Frobenius angle of (q, a)", do_classify));
  command("traces", "all admissible traces for q", do_traces)->add_option("--q", o.q, "field order")->required();
  {
    auto* sub = command("series", "s_N, Moebius coefficients c_N and extension counts", do_series);
    add_qa(sub);
    sub->add_option("--nmax", o.nmax, "truncation degree (default 12)");
  }
  {
    auto* sub = command("sums", "exact M(X) and normalized ratios", do_sums);
    add_qa(sub);
    sub->add_option("--xmax", o.xmax, "largest X (default 12)");
  }
  {
    auto* sub = command("verdict", "whether the conjecture holds for (q, a)", do_verdict);
    add_qa(sub);
    sub->add_option("--xmax", o.xmax, "scan depth for first_violation (default 500)");
  }
  add_qa(command("limsup", "limsup of |M(X)| / q^(X/2)", do_limsup));
  add_qa(command("table", "exact periodic ratio table (rational angles)", do_table));
  {
    auto* sub = command("check", "first X with M(X)^2 > q^X", do_check);
    add_qa(sub);
    sub->add_option("--xmax", o.xmax, "scan depth (default 500)");
  }
  {
    auto* sub = command("witnesses", "all X with |M(X)| > (1 - epsilon) q^(X/2)", do_witnesses);
    add_qa(sub);
    sub->add_option("--epsilon", o.epsilon, "decimal in (0, 1)")->required();
    sub->add_option("--xmax", o.xmax, "scan depth (default 12)");
  }
  {
    auto* sub = command("sweep", "verdicts for every admissible (q, a) with q <= qmax", do_sweep);
    sub->add_option("--qmax", o.qmax, "largest field order")->required();
    sub->add_option("--xmax", o.xmax, "scan depth for first_violation (default 500)");
    sub->add_option("--threads", o.threads, "worker threads (default: hardware concurrency)");
  }
  {
    auto* sub = command("verify-product", "compare the recurrence against the Euler product", do_verify_product);
    add_qa(sub);
    sub->add_option("--nmax", o.nmax, "truncation degree (default 12, at most 64)")
        ->check(CLI::Range(std::size_t{0}, kProductOracleMaxDegree));
  }
  {
    auto* sub = command("census", "traces realized by all Weierstrass curves over F_q", do_census);
    sub->add_option("--q", o.q, "field order")->required();
    sub->add_flag("--force-large", o.force_large, "allow q > 16");
    sub->add_option("--threads", o.threads, "worker threads (default: hardware concurrency)");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  const Format format = json ? Format::Json : (csv ? Format::Csv : Format::Text);
  for (const auto& [sub, handler] : commands) {
    if (!sub->parsed()) continue;
    try {
      const Result result = handler(o);
      emit(out, sub->get_name(), result, format);
      return result.exit_code;
    } catch (const DomainError& e) {
      err << e.what() << '\n';
      return 2;
    } catch (const CLI::ValidationError& e) {
      err << "usage error: " << e.what() << '\n';
      return 1;
    } catch (const std::invalid_argument& e) {
      err << "usage error: " << e.what() << '\n';
      return 1;
    }
  }
  return 1;
}

}  // namespace ellmertens::cli
