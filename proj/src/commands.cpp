#include "degbern/commands.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

#include "degbern/bernoulli.hpp"
#include "degbern/coeff_a.hpp"
#include "degbern/combinatorics.hpp"
#include "degbern/errors.hpp"
#include "degbern/identity.hpp"
#include "degbern/render.hpp"

namespace degbern {

namespace {

struct CommonFlags {
  std::string lambda = "sym";
  std::string format = "json";
  unsigned threads = 1;
};

/// Runs independent jobs, results in job order.
template <typename T>
std::vector<T> run_jobs(const std::vector<std::function<T()>>& jobs, unsigned threads) {
  std::vector<T> out(jobs.size());
  const unsigned workers = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(jobs.size())));
  if (workers <= 1) {
    for (std::size_t i = 0; i < jobs.size(); ++i) out[i] = jobs[i]();
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(jobs.size());
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < jobs.size(); i = next.fetch_add(1)) {
          try {
            out[i] = jobs[i]();
          } catch (...) {
            errors[i] = std::current_exception();
          }
        }
      });
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

/// Wide triangle table: index column then value_0..value_{max}.
Table triangle_table(const std::string& name, const std::string& index_name, const std::string& prefix,
                     const std::vector<std::vector<Scalar>>& rows, int first_row = 0) {
  Table t{name, {{index_name, ColumnType::index}}, {}};
  std::size_t width = 0;
  for (const auto& r : rows) width = std::max(width, r.size());
  for (std::size_t k = 0; k < width; ++k) t.columns.push_back({prefix + std::to_string(k), ColumnType::scalar});
  for (std::size_t n = 0; n < rows.size(); ++n) {
    std::vector<Cell> row{static_cast<long>(n) + first_row};
    for (std::size_t k = 0; k < width; ++k) {
      if (k < rows[n].size()) {
        row.emplace_back(rows[n][k]);
      } else {
        row.emplace_back(std::monostate{});
      }
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

std::string opt_int(const std::optional<int>& v) { return v ? std::to_string(*v) : ""; }

CommandOutput emit(const CommonFlags& flags, const DocumentMeta& meta, const std::vector<Table>& tables, int code = 0) {
  return {render(parse_format(flags.format), meta, tables), "", code};
}

// b ---------------------------------------------------------------------------

struct BFlags {
  int max_n = 8;
  int order_r = 1;
  std::string route = "series";
};

CommandOutput cmd_b(const BFlags& f, const CommonFlags& c) {
  const Domain domain = Domain::parse(c.lambda);
  if (f.max_n < 0) throw PreconditionError("--max-n must be >= 0");
  if (f.order_r < 1) throw PreconditionError("--order-r must be >= 1");
  if (f.order_r > 1 && f.route != "series") {
    throw PreconditionError("order r > 1 is computed by the series route only");
  }
  domain.require_nonzero_lambda("b_{n,lambda} (use `classical` for lambda = 0)");
  if ((f.route == "multinomial" || f.route == "all") && f.max_n > kMultinomialMaxN) {
    throw PreconditionError("the multinomial route is capped at n <= " + std::to_string(kMultinomialMaxN));
  }

  DocumentMeta meta{kArtifactVersion,
                    "b --max-n " + std::to_string(f.max_n) + " --lambda " + domain.descriptor() + " --order-r " +
                        std::to_string(f.order_r) + " --route " + f.route + " --format " + c.format,
                    domain.descriptor(), std::nullopt};

  using RowJob = std::function<std::vector<Scalar>()>;
  std::vector<std::pair<std::string, RowJob>> routes;
  const int n_max = f.max_n;
  auto want = [&](const char* name) { return f.route == name || f.route == "all"; };
  if (want("series")) {
    routes.emplace_back("series", [=] { return b_higher_order(domain, f.order_r, n_max).values; });
  }
  if (want("recurrence")) routes.emplace_back("recurrence", [=] { return b_via_recurrence(domain, n_max).values; });
  if (want("multinomial")) {
    routes.emplace_back("multinomial", [=] {
      std::vector<Scalar> v;
      for (int n = 0; n <= n_max; ++n) v.push_back(b_via_multinomial(domain, n));
      return v;
    });
  }
  if (want("explicit")) {
    // "explicit" alone prints the a-form; "all" compares all three.
    std::vector<ExplicitForm> forms{ExplicitForm::a_form};
    if (f.route == "all") forms = {ExplicitForm::a_form, ExplicitForm::stirling_form, ExplicitForm::falling_form};
    for (ExplicitForm form : forms) {
      routes.emplace_back(std::string(to_string(form)), [=] { return b_explicit_row(domain, n_max, form).values; });
    }
  }

  std::vector<RowJob> jobs;
  for (const auto& r : routes) jobs.push_back(r.second);
  const auto values = run_jobs(jobs, c.threads);

  Table t{f.order_r == 1 ? "b" : "b_order_" + std::to_string(f.order_r), {{"n", ColumnType::index}}, {}};
  if (f.route == "all") {
    for (const auto& r : routes) t.columns.push_back({r.first, ColumnType::scalar});
    t.columns.push_back({"agree", ColumnType::flag});
  } else {
    t.columns.push_back({"value", ColumnType::scalar});
  }
  bool all_agree = true;
  for (int n = 0; n <= n_max; ++n) {
    const auto idx = static_cast<std::size_t>(n);
    std::vector<Cell> row{static_cast<long>(n)};
    bool agree = true;
    for (const auto& v : values) {
      row.emplace_back(v[idx]);
      agree = agree && v[idx] == values.front()[idx];
    }
    if (f.route == "all") row.emplace_back(agree);
    all_agree = all_agree && agree;
    t.rows.push_back(std::move(row));
  }
  return emit(c, meta, {t}, all_agree ? 0 : 1);
}

// a ---------------------------------------------------------------------------

struct AFlags {
  int max_N = 6;
  std::string route = "recurrence";
};

CommandOutput cmd_a(const AFlags& f, const CommonFlags& c) {
  const Domain domain = Domain::parse(c.lambda);
  if (f.max_N < 1) throw PreconditionError("--max-N must be >= 1");
  if (f.route == "falling") domain.require_nonzero_lambda("the falling-factorial form of a_i(N)");
  DocumentMeta meta{kArtifactVersion,
                    "a --max-N " + std::to_string(f.max_N) + " --lambda " + domain.descriptor() + " --route " + f.route +
                        " --format " + c.format,
                    domain.descriptor(), std::nullopt};

  std::vector<std::pair<std::string, std::function<CoeffTable()>>> routes;
  const int N_max = f.max_N;
  auto want = [&](const char* name) { return f.route == name || f.route == "all"; };
  if (want("recurrence")) routes.emplace_back("recurrence", [=] { return a_by_recurrence(domain, N_max); });
  if (f.route == "all") {
    routes.emplace_back("alternate_recurrence", [=] { return a_by_alternate_recurrence(domain, N_max); });
  }
  // Undefined at lambda = 0; the "all" route compares what exists.
  if (want("falling") && !domain.lambda_is_zero()) {
    routes.emplace_back("falling", [=] { return a_by_explicit_falling(domain, N_max); });
  }
  if (want("stirling")) routes.emplace_back("stirling", [=] { return a_by_explicit_stirling(domain, N_max); });

  std::vector<std::function<CoeffTable()>> jobs;
  for (const auto& r : routes) jobs.push_back(r.second);
  std::vector<std::optional<CoeffTable>> tables;
  {
    std::vector<std::function<std::optional<CoeffTable>()>> wrapped;
    for (const auto& j : jobs) wrapped.emplace_back([j] { return std::optional<CoeffTable>(j()); });
    tables = run_jobs(wrapped, c.threads);
  }
  const CoeffTable& primary = *tables.front();

  Table t = triangle_table("a", "N", "a_", primary.rows());
  if (f.route != "all") return emit(c, meta, {t});

  t.columns.push_back({"agree", ColumnType::flag});
  bool all_agree = true;
  for (int N = 0; N <= N_max; ++N) {
    bool agree = true;
    for (std::size_t r = 1; r < tables.size(); ++r) {
      const bool band_only = routes[r].first == "alternate_recurrence";
      for (int i = 0; i <= N; ++i) {
        if (band_only && (i < 1 || i > N - 1)) continue;
        agree = agree && tables[r]->at(i, N) == primary.at(i, N);
      }
    }
    t.rows[static_cast<std::size_t>(N)].emplace_back(agree);
    all_agree = all_agree && agree;
  }
  return emit(c, meta, {t}, all_agree ? 0 : 1);
}

// stirling --------------------------------------------------------------------

struct StirlingFlags {
  std::string kind = "first";
  int max_n = 6;
};

CommandOutput cmd_stirling(const StirlingFlags& f, const CommonFlags& c) {
  if (f.max_n < 0) throw PreconditionError("--max-n must be >= 0");
  const bool first = f.kind == "first";
  const Domain domain = first ? Domain::evaluated(Rational(0)) : Domain::parse(c.lambda);
  std::string command = "stirling --kind " + f.kind + " --max-n " + std::to_string(f.max_n);
  if (!first) command += " --lambda " + domain.descriptor();
  command += " --format " + c.format;
  DocumentMeta meta{kArtifactVersion, command, first ? std::nullopt : std::optional<std::string>(domain.descriptor()),
                    std::nullopt};

  StirlingTable table = first                 ? stirling1_signed(domain, f.max_n)
                        : f.kind == "deg2"    ? degenerate_stirling2(domain, f.max_n, Stirling2Route::generating_function)
                                              : scaled_degenerate_stirling_table(domain, f.max_n);
  const std::string name = first ? "stirling_first_signed" : f.kind == "deg2" ? "stirling_deg2" : "stirling_scaled_deg2";
  return emit(c, meta, {triangle_table(name, "n", "k_", table.rows())});
}

// classical -------------------------------------------------------------------

CommandOutput cmd_classical(int max_n, const CommonFlags& c) {
  if (max_n < 0) throw PreconditionError("--max-n must be >= 0");
  DocumentMeta meta{kArtifactVersion, "classical --max-n " + std::to_string(max_n) + " --format " + c.format, "0",
                    std::nullopt};
  const auto limit = classical_b_via_limit(max_n);
  const auto stirling = classical_b_via_stirling(max_n);
  Table t{"classical_b",
          {{"n", ColumnType::index}, {"limit", ColumnType::scalar}, {"stirling", ColumnType::scalar}, {"agree", ColumnType::flag}},
          {}};
  bool all_agree = true;
  for (int n = 0; n <= max_n; ++n) {
    const auto idx = static_cast<std::size_t>(n);
    const bool agree = limit[idx] == stirling[idx];
    all_agree = all_agree && agree;
    t.rows.push_back({static_cast<long>(n), Scalar(limit[idx]), Scalar(stirling[idx]), agree});
  }
  return emit(c, meta, {t}, all_agree ? 0 : 1);
}

// verify ----------------------------------------------------------------------

struct VerifyFlags {
  std::string suite = "all";
  int max_N = 8;
  int max_j = 8;
  std::optional<int> max_n;
  std::optional<int> order;
};

Cell opt_cell(const std::optional<int>& v) {
  if (!v) return std::monostate{};
  return static_cast<long>(*v);
}

Table reports_table(const std::vector<IdentityReport>& reports) {
  Table t{"reports",
          {{"identity", ColumnType::text},
           {"N", ColumnType::index},
           {"n", ColumnType::index},
           {"j", ColumnType::index},
           {"order", ColumnType::index},
           {"lambda", ColumnType::text},
           {"pass", ColumnType::flag},
           {"range_lo", ColumnType::index},
           {"range_hi", ColumnType::index},
           {"witness_index", ColumnType::index},
           {"witness_lhs", ColumnType::scalar},
           {"witness_rhs", ColumnType::scalar},
           {"detail", ColumnType::text}},
          {}};
  for (const auto& r : reports) {
    std::vector<Cell> row{std::string(to_string(r.identity)),
                          opt_cell(r.params.N),
                          opt_cell(r.params.n),
                          opt_cell(r.params.j),
                          opt_cell(r.params.order),
                          r.params.lambda,
                          r.pass};
    if (r.compared_range) {
      row.emplace_back(r.compared_range->first);
      row.emplace_back(r.compared_range->second);
    } else {
      row.emplace_back(std::monostate{});
      row.emplace_back(std::monostate{});
    }
    if (r.witness) {
      row.emplace_back(r.witness->index);
      row.emplace_back(r.witness->lhs);
      row.emplace_back(r.witness->rhs);
    } else {
      row.emplace_back(std::monostate{});
      row.emplace_back(std::monostate{});
      row.emplace_back(std::monostate{});
    }
    row.emplace_back(r.detail);
    t.rows.push_back(std::move(row));
  }
  return t;
}

CommandOutput cmd_verify(const VerifyFlags& f, const CommonFlags& c) {
  if (c.format == "latex") throw ParseError("verify emits json or csv");
  VerifyOptions options;
  options.suite = parse_suite(f.suite);
  options.N_max = f.max_N;
  options.j_max = f.max_j;
  options.n_max = f.max_n.value_or(f.max_N);
  options.order = f.order.value_or(2 * std::max(options.N_max, options.n_max) + 8);
  options.domain = Domain::parse(c.lambda);
  options.threads = c.threads;
  if (options.N_max < 1) throw PreconditionError("--max-N must be >= 1");
  if (options.j_max < 0 || options.n_max < 1) throw PreconditionError("--max-j must be >= 0 and --max-n >= 1");

  DocumentMeta meta{kArtifactVersion,
                    "verify --suite " + f.suite + " --max-N " + std::to_string(options.N_max) + " --max-j " +
                        std::to_string(options.j_max) + " --max-n " + std::to_string(options.n_max) + " --order " +
                        std::to_string(options.order) + " --lambda " + options.domain.descriptor() + " --format " +
                        c.format,
                    options.domain.descriptor(), options.order};

  const auto reports = verify_all(options);
  long passed = 0;
  for (const auto& r : reports) passed += r.pass ? 1 : 0;
  const long total = static_cast<long>(reports.size());

  std::vector<Table> tables{reports_table(reports)};
  tables.push_back({"summary",
                    {{"total", ColumnType::index}, {"passed", ColumnType::index}, {"failed", ColumnType::index},
                     {"all_pass", ColumnType::flag}},
                    {{total, passed, total - passed, passed == total}}});
  if (options.suite == Suite::thm41 || options.suite == Suite::all) {
    Table v{"thm41_variants",
            {{"j", ColumnType::index}, {"N", ColumnType::index}, {"expansion_factorial", ColumnType::flag},
             {"printed_factorial", ColumnType::flag}},
            {}};
    for (const auto& o : compare_thm41_variants(options.domain, options.j_max, options.N_max)) {
      v.rows.push_back({static_cast<long>(o.j), static_cast<long>(o.N), o.expansion_holds, o.printed_holds});
    }
    tables.push_back(std::move(v));
  }
  CommandOutput out = emit(c, meta, tables, passed == total ? 0 : 1);
  std::ostringstream diag;
  diag << passed << "/" << total << " reports passed\n";
  for (const auto& r : reports) {
    if (r.pass) continue;
    diag << "FAIL " << to_string(r.identity) << " N=" << opt_int(r.params.N) << " n=" << opt_int(r.params.n)
         << " j=" << opt_int(r.params.j);
    if (!r.detail.empty()) diag << " (" << r.detail << ")";
    if (r.witness) diag << " at " << r.witness->index << ": " << r.witness->lhs << " != " << r.witness->rhs;
    diag << "\n";
  }
  out.diagnostics = diag.str();
  return out;
}

void add_common(CLI::App* sub, CommonFlags& c, bool with_lambda = true) {
  if (with_lambda) sub->add_option("--lambda", c.lambda, "\"sym\" or a rational such as -1/3")->capture_default_str();
  sub->add_option("--format", c.format, "json, csv or latex")
      ->check(CLI::IsMember({"json", "csv", "latex"}))
      ->capture_default_str();
  sub->add_option("--threads", c.threads, "worker threads (output does not depend on it)")
      ->check(CLI::Range(1U, 256U))
      ->capture_default_str();
}

}  // namespace

CommandOutput run_cli(const std::vector<std::string>& args) {
  CLI::App app{"Degenerate Bernoulli numbers of the second kind, exactly.", "degbern"};
  app.require_subcommand(1);

  CommonFlags common;
  BFlags bf;
  AFlags af;
  StirlingFlags sf;
  int classical_max_n = 8;
  VerifyFlags vf;

  auto* b = app.add_subcommand("b", "b^{(r)}_{n,lambda} by one or all routes");
  b->add_option("--max-n", bf.max_n)->capture_default_str();
  b->add_option("--order-r", bf.order_r)->capture_default_str();
  b->add_option("--route", bf.route)
      ->check(CLI::IsMember({"series", "recurrence", "multinomial", "explicit", "all"}))
      ->capture_default_str();
  add_common(b, common);

  auto* a = app.add_subcommand("a", "triangle a_{i,lambda}(N)");
  a->add_option("--max-N", af.max_N)->capture_default_str();
  a->add_option("--route", af.route)
      ->check(CLI::IsMember({"recurrence", "falling", "stirling", "all"}))
      ->capture_default_str();
  add_common(a, common);

  auto* st = app.add_subcommand("stirling", "Stirling triangles");
  st->add_option("--kind", sf.kind)->check(CLI::IsMember({"first", "deg2", "scaled-deg2"}))->capture_default_str();
  st->add_option("--max-n", sf.max_n)->capture_default_str();
  add_common(st, common);

  auto* cl = app.add_subcommand("classical", "classical b_n by two routes");
  cl->add_option("--max-n", classical_max_n)->capture_default_str();
  add_common(cl, common, false);

  auto* v = app.add_subcommand("verify", "check identities; exit 0 iff all pass");
  v->add_option("--suite", vf.suite)
      ->check(CLI::IsMember({"ode", "cor34", "eq41", "eq42", "thm41", "cor42", "routes", "all"}))
      ->capture_default_str();
  v->add_option("--max-N", vf.max_N)->capture_default_str();
  v->add_option("--max-j", vf.max_j)->capture_default_str();
  v->add_option("--max-n", vf.max_n, "range of the route suites (default: max-N)");
  v->add_option("--order", vf.order, "truncation order (default: 2*max(max-N, max-n)+8)");
  add_common(v, common);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    return {app.help(), "", 0};
  } catch (const CLI::ParseError& e) {
    const std::string help = e.get_exit_code() == 0 ? app.help() : "";
    if (e.get_exit_code() == 0) return {help, "", 0};
    return {"", std::string("error: ") + e.what() + "\n", 2};
  }

  try {
    if (b->parsed()) return cmd_b(bf, common);
    if (a->parsed()) return cmd_a(af, common);
    if (st->parsed()) return cmd_stirling(sf, common);
    if (cl->parsed()) return cmd_classical(classical_max_n, common);
    return cmd_verify(vf, common);
  } catch (const InternalError& e) {
    return {"", std::string("internal error: ") + e.what() + "\n", 3};
  } catch (const Error& e) {
    return {"", std::string("error: ") + e.what() + "\n", 2};
  }
}

}  // namespace degbern
