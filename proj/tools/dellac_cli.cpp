// dellac: enumerate, inspect and verify Dellac configurations from the shell.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "dellac/enumerate.hpp"
#include "dellac/json_io.hpp"
#include "dellac/maps.hpp"
#include "dellac/poly.hpp"
#include "dellac/render.hpp"
#include "dellac/stats.hpp"
#include "dellac/verify.hpp"

using namespace dellac;

namespace {

struct Globals {
  std::string format = "json";
  int threads = 1;
  std::optional<std::size_t> limit;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// DELLAC_MAX_N, when set, bounds every size argument.
void check_size(int n) {
  if (n < 0) throw UsageError("size must be non-negative");
  if (const char* env = std::getenv("DELLAC_MAX_N")) {
    const int cap = std::atoi(env);
    if (cap > 0 && n > cap)
      throw UsageError("n = " + std::to_string(n) + " exceeds DELLAC_MAX_N = " + std::to_string(cap));
  }
}

// --in accepts inline JSON, "-" for stdin, or a file path.
json read_json_arg(const std::string& arg) {
  std::string text;
  if (arg == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) {
    text = arg;
  } else {
    std::ifstream in(arg);
    if (!in) throw UsageError("cannot read " + arg);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
}

void print_json(const json& j) { std::cout << j.dump() << '\n'; }

void require_json(const Globals& g, const char* what) {
  if (g.format != "json") throw UsageError(std::string(what) + " only supports --format json");
}

std::string csv_row(const std::vector<std::string>& cells) {
  std::string s;
  for (std::size_t k = 0; k < cells.size(); ++k) {
    if (k) s += ',';
    const std::string& c = cells[k];
    if (c.find_first_of(",\"\n") == std::string::npos) {
      s += c;
    } else {
      s += '"';
      for (char ch : c) s += ch == '"' ? std::string("\"\"") : std::string(1, ch);
      s += '"';
    }
  }
  return s;
}

void print_poly(const Globals& g, const Poly& p) {
  if (g.format == "csv") {
    std::vector<std::string> cells;
    for (const auto& c : p.coeffs()) cells.push_back(c.str());
    std::cout << csv_row(cells) << '\n';
  } else {
    print_json(poly_to_json(p));
  }
}

// ---------------------------------------------------------------------------

int cmd_enumerate(const Globals& g, const std::string& kind_tag_arg, int n) {
  check_size(n);
  EnumOptions opts;
  opts.limit = g.limit;
  const bool csv = g.format == "csv";
  try {
    if (kind_tag_arg == "sp") {
      if (csv) {
        std::vector<std::string> head{"kind", "n"};
        for (int j = 1; j <= 2 * n; ++j) head.push_back("f" + std::to_string(j));
        std::cout << csv_row(head) << '\n';
      }
      enum_sp(n, [&](const SurjectivePistol& f) {
        if (csv) {
          std::vector<std::string> row{"sp", std::to_string(n)};
          for (int v : f.values) row.push_back(std::to_string(v));
          std::cout << csv_row(row) << '\n';
        } else {
          print_json(pistol_to_json(f));
        }
      }, opts);
    } else {
      const Kind kind = parse_kind(kind_tag_arg);
      if (csv) std::cout << tableau_csv_header(kind == Kind::odd_extended ? 2 * n + 1 : 2 * n) << '\n';
      for_each_config(kind, n, [&](const Tableau& t) {
        if (csv) std::cout << tableau_to_csv(t, kind) << '\n';
        else print_json(tableau_to_json(t, kind));
      }, opts);
    }
  } catch (const LimitExceeded& e) {
    std::cout.flush();
    std::cerr << "truncated: output stopped after " << e.limit() << " items (--limit)\n";
  }
  return 0;
}

json inversions_to_json(const Tableau& d) {
  json pairs = json::array();
  for (const auto& [a, b] : inversions(d)) pairs.push_back({to_string(a), to_string(b)});
  return pairs;
}

int cmd_stats(const Globals& g, const std::string& in, const std::string& report) {
  require_json(g, "stats");
  const auto [kind, t] = tableau_from_json(read_json_arg(in));
  if (report == "inv") {
    if (kind != Kind::dellac && kind != Kind::symmetric_dellac)
      throw std::invalid_argument("inv report needs a dc or sdc tableau");
    json out{{"inversions", inversions_to_json(t)}, {"inv", inv(t)}};
    if (kind == Kind::symmetric_dellac) {
      out["tilde_inv"] = tilde_inv(t);
      out["fixed_pairs"] = fixed_pairs(t);
      out["bar_inv"] = bar_inv(t);
    }
    print_json(out);
  } else if (report == "paths") {
    if (kind == Kind::even_extended) print_json(path_report_to_json(path_report(t)));
    else if (kind == Kind::odd_extended) print_json(path_report_to_json(path_report_odd(t)));
    else throw std::invalid_argument("paths report needs a te or to tableau");
  } else if (report == "labels") {
    if (kind == Kind::even_extended) {
      const PathReport rep = path_report(t);
      json out{{"free_points", boxes_to_json(free_points(t))}};
      out["nu"] = nu_labels_to_json(assign_nu_labels(t, rep));
      if (t.width() >= 2) out["forward"] = forward_labels_to_json(assign_forward_labels(t, rep));
      print_json(out);
    } else if (kind == Kind::odd_extended) {
      const PathReport rep = path_report_odd(t);
      print_json({{"free_points", boxes_to_json(free_points(t))},
                  {"J", J_columns(rep)},
                  {"Jg", Jg_columns(rep)}});
    } else {
      throw std::invalid_argument("labels report needs a te or to tableau");
    }
  } else {
    throw UsageError("unknown report: " + report);
  }
  return 0;
}

int cmd_poincare(const Globals& g, const std::string& variety, int N) {
  check_size(N);
  print_poly(g, poincare(parse_variety(variety), N));
  return 0;
}

int cmd_poly(const Globals& g, const std::string& family, int n, const std::string& via) {
  check_size(n);
  if (via != "recurrence" && family != "P") throw UsageError("--via only applies to --family P");
  auto scalar = [&](const std::string& s) {
    if (g.format == "csv") std::cout << s << '\n';
    else print_json(s);
  };
  if (family == "D") {
    print_poly(g, D_poly(n));
  } else if (family == "P") {
    if (n < 1) throw UsageError("P_n needs n >= 1");
    if (via == "recurrence") print_poly(g, P_poly(n));
    else if (via == "pistols") print_poly(g, P_via_pistols(n));
    else if (via == "cf") {
      const PolySeries s = cf_series(n);
      // coefficient of t^n is x P_n(x)
      std::vector<BigInt> c = s.terms[n].coeffs();
      if (!c.empty()) c.erase(c.begin());
      print_poly(g, Poly(std::move(c)));
    } else {
      throw UsageError("unknown --via: " + via);
    }
  } else if (family == "c") {
    if (n < 1) throw UsageError("c_{n,k} needs n >= 1");
    const auto row = c_triangle(n)[n];
    if (g.format == "csv") {
      std::vector<std::string> cells;
      for (const auto& v : row) cells.push_back(v.str());
      std::cout << csv_row(cells) << '\n';
    } else {
      json a = json::array();
      for (const auto& v : row) a.push_back(v.str());
      print_json(a);
    }
  } else if (family == "l") {
    scalar(l_seq(n).str());
  } else if (family == "r") {
    scalar(r_seq(n).str());
  } else if (family == "L") {
    scalar(rational_to_json(L_seq(n)).get<std::string>());
  } else if (family == "R") {
    scalar(rational_to_json(R_seq(n)).get<std::string>());
  } else {
    throw UsageError("unknown family: " + family);
  }
  return 0;
}

json fiber_to_json(const Fiber& f, Kind kind) {
  json members = json::array();
  for (const Tableau& m : f.members) members.push_back(tableau_to_json(m, kind));
  return {{"situation", situation_name(f.situation)}, {"members", members}};
}

int cmd_map(const Globals& g, const std::string& op, const std::string& in, const std::string& x,
            const std::string& l) {
  require_json(g, "map");
  const json input = read_json_arg(in);
  auto need = [](const KindedTableau& kt, Kind k) {
    if (kt.kind != k) throw std::invalid_argument(std::string("this op needs a ") + kind_tag(k) + " tableau");
  };
  if (op == "even-expand" || op == "odd-expand") {
    const LabeledExtended lab = labeled_from_json(input);
    const Kind want = op == "even-expand" ? Kind::even_extended : Kind::odd_extended;
    if (parse_kind(input.at("kind").get<std::string>()) != want)
      throw std::invalid_argument(std::string("this op needs a ") + kind_tag(want) + " tableau");
    print_json(tableau_to_json(op == "even-expand" ? even_expand(lab) : odd_expand(lab), Kind::symmetric_dellac));
  } else if (op == "even-reduce" || op == "odd-reduce") {
    const KindedTableau kt = tableau_from_json(input);
    need(kt, Kind::symmetric_dellac);
    const bool even = op == "even-reduce";
    if ((kt.tableau.height() % 2 == 0) != even)
      throw std::invalid_argument(even ? "even-reduce needs SDC_N with N even" : "odd-reduce needs SDC_N with N odd");
    const LabeledExtended lab = even ? even_reduce(kt.tableau) : odd_reduce(kt.tableau);
    print_json(labeled_to_json(lab, even ? Kind::even_extended : Kind::odd_extended));
  } else if (op == "pi") {
    const KindedTableau kt = tableau_from_json(input);
    need(kt, Kind::even_extended);
    const PiResult r = pi_forward(kt.tableau);
    print_json({{"image", tableau_to_json(r.image, Kind::even_extended)}, {"X", boxes_to_json(r.X)}});
  } else if (op == "pi-fiber") {
    const KindedTableau kt = tableau_from_json(input);
    need(kt, Kind::even_extended);
    if (x.empty()) throw UsageError("pi-fiber needs --x");
    print_json(fiber_to_json(pi_fiber(kt.tableau, boxes_from_json(read_json_arg(x))), Kind::even_extended));
  } else if (op == "p") {
    const KindedTableau kt = tableau_from_json(input);
    need(kt, Kind::even_extended);
    print_json(tableau_to_json(p_forward(kt.tableau), Kind::odd_extended));
  } else if (op == "p-fiber") {
    const KindedTableau kt = tableau_from_json(input);
    need(kt, Kind::odd_extended);
    if (l.empty()) throw UsageError("p-fiber needs --l");
    print_json(tableau_to_json(p_fiber(kt.tableau, label_function_from_json(read_json_arg(l))), Kind::even_extended));
  } else {
    throw UsageError("unknown op: " + op);
  }
  return 0;
}

int cmd_verify(const Globals& g, const std::string& suite, std::optional<int> max_n) {
  if (max_n) check_size(*max_n);
  VerifyBounds b;
  b.max_n = max_n;
  b.threads = g.threads;
  if (const char* env = std::getenv("DELLAC_MAX_N")) {
    const int cap = std::atoi(env);
    if (cap > 0 && (!b.max_n || *b.max_n > cap)) b.max_n = cap;
  }
  const VerifyReport r = run_suite(suite, b);
  if (g.format == "csv") {
    std::cout << "suite,name,status,expected,actual,seconds\n";
    for (const Check& c : r.checks)
      std::cout << csv_row({r.suite, c.name, c.passed ? "pass" : "fail", c.expected, c.actual,
                            std::to_string(c.seconds)})
                << '\n';
  } else {
    std::cout << to_json(r).dump(2) << '\n';
  }
  return r.passed() ? 0 : 1;
}

int cmd_render(const std::string& in, const std::string& overlay, int cell, const std::string& out) {
  RenderSpec spec;
  const KindedTableau kt = tableau_from_json(read_json_arg(in));
  spec.tableau = kt.tableau;
  spec.kind = kt.kind;
  spec.overlay = parse_overlay(overlay);
  spec.cell = cell;
  const std::string svg = render_svg(spec);
  if (out.empty() || out == "-") {
    std::cout << svg;
  } else {
    std::ofstream f(out, std::ios::binary);
    if (!f) throw UsageError("cannot write " + out);
    f << svg;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact enumeration and verification for Dellac configurations"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  std::size_t limit = 0;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--threads", g.threads, "Worker threads for exhaustive sums")->check(CLI::Range(1, 256));
  auto* limit_opt = app.add_option("--limit", limit, "Stop streams after this many items");

  int rc = 0;

  std::string kind;
  int n = 0;
  auto* en = app.add_subcommand("enumerate", "Stream every object of a family, one per line");
  en->add_option("--kind", kind, "dc | sdc | te | to | sp")->required()->check(
      CLI::IsMember({"dc", "sdc", "te", "to", "sp"}));
  en->add_option("--n", n, "Size parameter")->required();

  std::string in, report;
  auto* st = app.add_subcommand("stats", "Statistics of one tableau");
  st->add_option("--in", in, "Tableau JSON, a file, or - for stdin")->required();
  st->add_option("--report", report, "inv | paths | labels")->required()->check(
      CLI::IsMember({"inv", "paths", "labels"}));

  std::string variety;
  auto* po = app.add_subcommand("poincare", "Poincare polynomial in q");
  po->add_option("--variety", variety, "a | sp | so")->required()->check(CLI::IsMember({"a", "sp", "so"}));
  po->add_option("--n", n, "N")->required();

  std::string family, via = "recurrence";
  auto* pl = app.add_subcommand("poly", "Polynomial families and their specializations");
  pl->add_option("--family", family, "D | P | c | l | r | L | R")->required()->check(
      CLI::IsMember({"D", "P", "c", "l", "r", "L", "R"}));
  pl->add_option("--n", n, "Index")->required();
  pl->add_option("--via", via, "recurrence | pistols | cf (P only)")->check(
      CLI::IsMember({"recurrence", "pistols", "cf"}));

  std::string op, x, l;
  auto* mp = app.add_subcommand("map", "Bijections and surjections between families");
  mp->add_option("--op", op, "even-expand | even-reduce | odd-expand | odd-reduce | pi | pi-fiber | p | p-fiber")
      ->required()
      ->check(CLI::IsMember({"even-expand", "even-reduce", "odd-expand", "odd-reduce", "pi", "pi-fiber", "p",
                             "p-fiber"}));
  mp->add_option("--in", in, "Input JSON, a file, or -")->required();
  mp->add_option("--x", x, "X for pi-fiber, as [\"j:i\", ...]");
  mp->add_option("--l", l, "l for p-fiber, as {\"j\": word}");

  std::string suite;
  int max_n = 0;
  auto* ve = app.add_subcommand("verify", "Run exhaustive checks; exit 1 if any fails");
  ve->add_option("--suite", suite, "Suite name or all")->required();
  auto* max_opt = ve->add_option("--max-n", max_n, "Cap every size bound of the suite");

  std::string overlay = "none", out;
  int cell = 24;
  auto* re = app.add_subcommand("render", "SVG drawing of a tableau");
  re->add_option("--in", in, "Tableau JSON, a file, or -")->required();
  re->add_option("--overlay", overlay, "none | paths | labels")->check(CLI::IsMember({"none", "paths", "labels"}));
  re->add_option("--cell", cell, "Pixels per box")->check(CLI::Range(4, 200));
  re->add_option("--out", out, "Output file (default stdout)");

  CLI11_PARSE(app, argc, argv);
  if (*limit_opt) g.limit = limit;

  try {
    if (*en) rc = cmd_enumerate(g, kind, n);
    else if (*st) rc = cmd_stats(g, in, report);
    else if (*po) rc = cmd_poincare(g, variety, n);
    else if (*pl) rc = cmd_poly(g, family, n, via);
    else if (*mp) rc = cmd_map(g, op, in, x, l);
    else if (*ve) {
      const auto& names = suite_names();
      if (suite != "all" && std::find(names.begin(), names.end(), suite) == names.end())
        throw UsageError("unknown suite: " + suite);
      rc = cmd_verify(g, suite, *max_opt ? std::optional<int>(max_n) : std::nullopt);
    } else if (*re) rc = cmd_render(in, overlay, cell, out);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return rc;
}
