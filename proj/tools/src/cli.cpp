#include "gradalg_cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "gradalg/algebra.hpp"
#include "gradalg/corpus.hpp"
#include "gradalg/error.hpp"
#include "gradalg/homology.hpp"
#include "gradalg/json_io.hpp"
#include "gradalg/lie.hpp"
#include "gradalg/matroid.hpp"
#include "gradalg/presentation.hpp"
#include "gradalg/quaddual.hpp"
#include "gradalg/series.hpp"

namespace gradalg::cli {

using nlohmann::json;

namespace {

struct Options {
  int degree = 8;
  int internal_degree = 8;
  bool degree_given = false;
  bool table = false;
};

struct Result {
  json payload;
  int code = kSuccess;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::Io, "cannot open '" + path + "': file not found or unreadable");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Presentation load_presentation(const std::string& path) { return parse_presentation(read_file(path)); }

json load_json(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw SyntaxError(ErrorKind::SyntaxError, "'" + path + "' is not valid JSON: " + e.what(), 0, 0);
  }
}

// Accepts a bare series document or a command payload holding one.
json series_document(const json& j, bool want_signed) {
  if (!j.is_object() || j.contains("truncation") || (want_signed && j.contains("even"))) return j;
  for (const auto& [key, value] : j.items()) {
    if (value.is_object() && (value.contains("truncation") || (want_signed && value.contains("even"))))
      return value;
  }
  return j;
}

// A series argument is either a .json file or an inline polynomial
// "c0,c1,...", padded with zeros to degree N.
TruncSeries load_series_arg(const std::string& arg, int N) {
  if (arg.size() > 5 && arg.ends_with(".json")) return series_from_json(series_document(load_json(arg), false));
  std::vector<Rational> coeffs;
  std::stringstream ss(arg);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      coeffs.push_back(parse_rational(item));
    } catch (const Error& e) {
      throw SyntaxError(ErrorKind::SyntaxError, "bad series literal '" + arg + "': " + e.what(), 0, 0);
    }
  }
  if (coeffs.empty()) throw SyntaxError(ErrorKind::SyntaxError, "empty series literal", 0, 0);
  if (coeffs.size() > static_cast<std::size_t>(N) + 1)
    throw SyntaxError(ErrorKind::SyntaxError, "series literal longer than degree N", 0, 0);
  coeffs.resize(static_cast<std::size_t>(N) + 1);
  return TruncSeries(std::move(coeffs));
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SyntaxError:
    case ErrorKind::Inhomogeneous:
    case ErrorKind::UnknownVariable:
    case ErrorKind::FlavorMismatch:
    case ErrorKind::Io:
      return kInputError;
    default:
      return kPreconditionFailed;
  }
}

std::string word_label(std::size_t i, std::size_t j, const std::vector<std::string>& names) {
  return names[i] + "*" + names[j];
}

json verify_json(const VerifyReport& r, const std::string& mode) {
  json j = {{"mode", mode}, {"pass", r.pass}};
  if (!r.reason.empty()) j["reason"] = r.reason;
  if (r.first_discrepancy) j["first_discrepancy"] = *r.first_discrepancy;
  if (r.off_diagonal) j["off_diagonal"] = {{"n", r.off_diagonal->first}, {"j", r.off_diagonal->second}};
  if (r.lhs.truncation() > 0 || r.lhs[0] != 0) j["lhs"] = to_json(r.lhs);
  if (r.rhs.truncation() > 0 || r.rhs[0] != 0) j["rhs"] = to_json(r.rhs);
  return j;
}

// Commands ------------------------------------------------------------------

Result cmd_hilbert(const Options& o, const std::string& file) {
  const Presentation p = load_presentation(file);
  return {{{"algebra", p.name}, {"hilbert", to_json(hilbert_series(p, o.degree))}}};
}

Result cmd_koszul_dual(const std::string& file, const std::string& output) {
  const Presentation p = load_presentation(file);
  const KoszulDual kd = koszul_dual_with_solutions(p);
  const auto names = kd.dual.var_names();
  const std::size_t n = names.size();
  json columns = json::array();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) columns.push_back(word_label(i, j, names));
  json rows = json::array();
  for (const auto& s : kd.solutions) {
    json row = json::array();
    for (std::uint32_t c = 0; c < n * n; ++c) row.push_back(to_string(s.at(c)));
    rows.push_back(row);
  }
  const std::string text = to_text(kd.dual);
  if (!output.empty()) {
    std::ofstream f(output, std::ios::binary);
    if (!f) fail(ErrorKind::Io, "cannot write '" + output + "'");
    f << text;
  }
  return {{{"algebra", kd.dual.name},
           {"presentation", text},
           {"solutions", {{"columns", columns}, {"rows", rows}}}}};
}

Result cmd_tor(const Options& o, const std::string& file) {
  const Presentation p = load_presentation(file);
  return {{{"algebra", p.name}, {"tor", to_json(bar_tor_dims(p, o.internal_degree).to_series())}}};
}

Result cmd_koszul_homology(const Options& o, const std::string& file) {
  const Presentation p = load_presentation(file);
  return {{{"algebra", p.name},
           {"koszul_homology", to_json(koszul_complex_homology(p, o.internal_degree).to_series())}}};
}

Result cmd_poincare(const Options& o, const std::string& method, const std::string& file) {
  const Presentation p = load_presentation(file);
  const int N = o.degree;
  TruncSeries2 series(0);
  if (method == "bar") {
    series = bar_tor_dims(p, N).to_series();
  } else if (method == "golod") {
    series = golod_poincare(koszul_complex_homology(p, N).to_series(), static_cast<int>(p.num_vars()), N);
  } else if (method == "r3") {
    series = r3_poincare(p, N);
  } else {
    const TruncSeries h = hilbert_series(p, N);
    series = TruncSeries2::diagonal(series_inverse(h.substitute(Rational(-1), 1)));
  }
  return {{{"algebra", p.name}, {"method", method}, {"poincare", to_json(series)}}};
}

Result cmd_verify(const Options& o, const std::string& mode, const std::string& file) {
  const Presentation p = load_presentation(file);
  const int N = o.degree;
  json j;
  bool pass = true;
  if (mode == "golod-products") {
    const ProductCheckReport r = golod_product_check(p, N);
    pass = r.pass;
    j = {{"mode", mode}, {"pass", r.pass}, {"classes", r.classes}, {"products", r.products}};
    if (!r.witness.empty()) j["witness"] = r.witness;
  } else if (mode == "gk-exact") {
    const GKData gk = gk_homology(p, N);
    pass = gk.acyclic && gk.exsec_exact;
    j = {{"mode", mode}, {"pass", pass}, {"acyclic", gk.acyclic}, {"exsec_exact", gk.exsec_exact},
         {"k_dims", gk.k_dims()}, {"homology", to_json(gk.homology.to_series())}};
    if (!pass) j["reason"] = gk.exsec_exact ? "NotAcyclic" : "NotExact";
  } else {
    const IdentityMode m = mode == "form" ? IdentityMode::Form
                           : mode == "froberg" ? IdentityMode::Froberg
                                               : IdentityMode::Kos;
    const VerifyReport r = verify_series_identity(p, m, N);
    pass = r.pass;
    j = verify_json(r, mode);
  }
  j["algebra"] = p.name;
  return {j, pass ? kSuccess : kVerifyFailed};
}

Result cmd_lie_dims(const Options& o, const std::string& file, const std::string& koszul_hilbert) {
  if (!koszul_hilbert.empty()) {
    const TruncSeries h = series_from_json(series_document(load_json(koszul_hilbert), false));
    return {{{"dims", to_json(koszul_lie_dims(h, o.degree))}}};
  }
  if (file.empty()) fail(ErrorKind::Io, "lie-dims needs a presentation file or --koszul-hilbert");
  const LiePresentation l = parse_lie_presentation(read_file(file));
  return {{{"lie", l.name}, {"dims", to_json(lie_dims(l, o.degree))}}};
}

Result cmd_lie_zero(const std::string& file, const std::string& expr) {
  const LiePresentation l = parse_lie_presentation(read_file(file));
  const LieExpr e = parse_lie_expr(expr, l.var_names());
  return {{{"lie", l.name}, {"expr", e.to_string(l.var_names())}, {"zero", lie_element_is_zero(l, e)}}};
}

Result cmd_holonomy(const Options& o, const std::string& graph, const std::string& flats, bool dims,
                    bool decomposable, bool os_hilbert) {
  if (graph.empty() == flats.empty()) fail(ErrorKind::Io, "holonomy needs exactly one of --graph or --flats");
  const TwoFlatFamily f =
      graph.empty() ? parse_flats(read_file(flats)) : graph_two_flats(parse_graph(read_file(graph)));
  const LiePresentation l = holonomy_presentation(f);
  const auto names = l.var_names();

  json flat_list = json::array();
  for (const auto& flat : f.flats) {
    json names_of = json::array();
    for (auto e : flat) names_of.push_back(f.ground[e]);
    flat_list.push_back(names_of);
  }
  json pairs = json::array();
  for (const auto& [a, b] : commuting_pairs(f)) pairs.push_back({f.ground[a], f.ground[b]});
  json rels = json::array();
  for (const auto& r : l.relations) rels.push_back(r.to_string(names));

  json j = {{"family", f.name}, {"ground", f.ground}, {"flats", flat_list},
            {"commuting_pairs", pairs}, {"relations", rels}};
  if (dims) j["dims"] = to_json(lie_dims(l, o.degree));
  if (decomposable) {
    const DecomposabilityReport r = is_decomposable(f);
    j["decomposable"] = r.decomposable;
    if (r.witness) {
      const auto& [x, y, z] = *r.witness;
      j["witness"] = "[" + names[x] + ",[" + names[y] + "," + names[z] + "]]";
    }
  }
  if (os_hilbert) j["os_hilbert"] = to_json(hilbert_series(orlik_solomon_quadratic(f), o.degree));
  return {j};
}

LoggMode logg_mode(const std::string& mode) {
  if (mode == "even") return LoggMode::Even;
  if (mode == "alternating") return LoggMode::Alternating;
  return LoggMode::Mixed;
}

Result cmd_logg(const Options& o, const std::string& mode, const std::string& file) {
  SignedSeries v = file.ends_with(".json")
                     ? signed_series_from_json(series_document(load_json(file), true))
                     : SignedSeries(load_series_arg(file, o.degree));
  if (o.degree_given && o.degree < v.truncation())
    v = SignedSeries(v.even.truncated(o.degree), v.odd.truncated(o.degree));
  const SignedSeries g = logg(v, logg_mode(mode));
  return {{{"mode", mode}, {"logg", to_json(g)}}};
}

Result cmd_series(const Options& o, const std::string& op, const std::vector<std::string>& operands) {
  const std::size_t need = (op == "inverse" || op == "log" || op == "exp") ? 1 : 2;
  if (operands.size() != need)
    throw SyntaxError(ErrorKind::SyntaxError,
                      "'series " + op + "' takes " + std::to_string(need) + " operand(s)", 0, 0);
  std::vector<TruncSeries> s;
  for (const auto& a : operands) s.push_back(load_series_arg(a, o.degree));
  if (o.degree_given)
    for (auto& x : s) x = x.truncated(std::min(o.degree, x.truncation()));
  TruncSeries r(0);
  if (op == "inverse") {
    r = series_inverse(s[0]);
  } else if (op == "log") {
    r = series_log(s[0]);
  } else if (op == "exp") {
    r = series_exp(s[0]);
  } else if (op == "multiply") {
    r = s[0] * s[1];
  } else if (op == "divide") {
    r = s[0] * series_inverse(s[1]);
  } else {
    r = free_product_series(s[0], s[1]);
  }
  return {{{"op", op}, {"series", to_json(r)}}};
}

Result cmd_examples(const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) fail(ErrorKind::Io, "cannot create '" + dir + "': " + ec.message());
  json files = json::array();
  for (const auto& c : corpus()) {
    const auto path = std::filesystem::path(dir) / c.filename;
    std::ofstream f(path, std::ios::binary);
    if (!f) fail(ErrorKind::Io, "cannot write '" + path.string() + "'");
    f << c.text;
    files.push_back(c.filename);
  }
  return {{{"directory", dir}, {"files", files}}};
}

// Table rendering -----------------------------------------------------------

bool is_series(const json& j) { return j.is_object() && j.contains("truncation") && j.contains("coeffs"); }
bool is_series2(const json& j) { return j.is_object() && j.contains("truncation_y") && j.contains("rows"); }

std::string scalar_text(const json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

void render(const json& j, std::ostream& out, const std::string& indent);

void render_series(const json& j, std::ostream& out, const std::string& indent) {
  const auto& coeffs = j.at("coeffs");
  std::size_t width = 1;
  for (const auto& c : coeffs) width = std::max(width, c.get<std::string>().size());
  const std::size_t dw = std::max<std::size_t>(std::to_string(coeffs.size()).size(), 6);
  out << indent << std::setw(static_cast<int>(dw)) << "degree" << "  " << "coefficient\n";
  for (std::size_t n = 0; n < coeffs.size(); ++n)
    out << indent << std::setw(static_cast<int>(dw)) << n << "  " << std::setw(static_cast<int>(width))
        << coeffs[n].get<std::string>() << "\n";
}

void render_series2(const json& j, std::ostream& out, const std::string& indent) {
  const int J = j.at("truncation_y").get<int>();
  std::vector<std::vector<std::string>> grid(static_cast<std::size_t>(J) + 1,
                                             std::vector<std::string>(static_cast<std::size_t>(J) + 1, "0"));
  std::size_t width = 1;
  for (const auto& row : j.at("rows")) {
    const auto y = row.at("j").get<std::size_t>();
    const auto& xs = row.at("coeffs_x");
    for (std::size_t n = 0; n < xs.size(); ++n) {
      grid[y][n] = xs[n].get<std::string>();
      width = std::max(width, grid[y][n].size());
    }
  }
  width = std::max(width, std::to_string(J).size()) + 1;
  out << indent << std::setw(5) << "j\\n";
  for (int n = 0; n <= J; ++n) out << std::setw(static_cast<int>(width)) << n;
  out << "\n";
  for (int y = 0; y <= J; ++y) {
    out << indent << std::setw(5) << y;
    for (int n = 0; n <= y; ++n) out << std::setw(static_cast<int>(width)) << grid[y][n];
    out << "\n";
  }
}

void render(const json& j, std::ostream& out, const std::string& indent) {
  if (is_series(j)) return render_series(j, out, indent);
  if (is_series2(j)) return render_series2(j, out, indent);
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      const bool flat_array = value.is_array() && std::all_of(value.begin(), value.end(),
                                                              [](const json& v) { return v.is_primitive(); });
      if (value.is_string() && value.get<std::string>().find('\n') != std::string::npos) {
        out << indent << key << ":\n";
        std::istringstream lines(value.get<std::string>());
        for (std::string line; std::getline(lines, line);) out << indent << "  " << line << "\n";
      } else if (value.is_primitive()) {
        out << indent << key << ": " << scalar_text(value) << "\n";
      } else if (flat_array) {
        out << indent << key << ":";
        for (const auto& v : value) out << " " << scalar_text(v);
        out << "\n";
      } else {
        out << indent << key << ":\n";
        render(value, out, indent + "  ");
      }
    }
    return;
  }
  if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_array() && std::all_of(v.begin(), v.end(), [](const json& x) { return x.is_primitive(); })) {
        out << indent;
        for (std::size_t k = 0; k < v.size(); ++k) out << (k ? " " : "") << scalar_text(v[k]);
        out << "\n";
      } else if (v.is_primitive()) {
        out << indent << scalar_text(v) << "\n";
      } else {
        render(v, out, indent + "  ");
      }
    }
    return;
  }
  out << indent << scalar_text(j) << "\n";
}

}  // namespace

int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graded algebras: Hilbert and Poincare series, Koszul duality, Lie algebras", "gradalg"};
  app.fallthrough();
  app.require_subcommand(1);

  Options o;
  app.add_option("-N,--degree", o.degree, "Truncation degree")->check(CLI::NonNegativeNumber);
  app.add_option("-J,--internal-degree", o.internal_degree, "Largest internal degree")
      ->check(CLI::NonNegativeNumber);
  auto* json_flag = app.add_flag("--json", "JSON output (default)");
  app.add_flag("--table", o.table, "Aligned human-readable output")->excludes(json_flag);

  std::string file, mode, method, output, expr, koszul_hilbert, graph, flats, dir, op;
  std::vector<std::string> operands;
  bool dims = false, decomposable = false, os_hilbert = false;
  std::function<Result()> run;

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert series of a presentation");
  hilbert->add_option("file", file, "Presentation file")->required();
  hilbert->callback([&] { run = [&] { return cmd_hilbert(o, file); }; });

  auto* kdual = app.add_subcommand("koszul-dual", "Koszul dual of a quadratic presentation");
  kdual->add_option("file", file, "Presentation file")->required();
  kdual->add_option("-o,--output", output, "Also write the dual presentation to this file");
  kdual->callback([&] { run = [&] { return cmd_koszul_dual(file, output); }; });

  auto* tor = app.add_subcommand("tor", "Bigraded Tor dimensions from the bar complex");
  tor->add_option("file", file, "Presentation file")->required();
  tor->callback([&] { run = [&] { return cmd_tor(o, file); }; });

  auto* khom = app.add_subcommand("koszul-homology", "Homology of the Koszul complex");
  khom->add_option("file", file, "Presentation file")->required();
  khom->callback([&] { run = [&] { return cmd_koszul_homology(o, file); }; });

  auto* poincare = app.add_subcommand("poincare", "Two-variable Poincare series");
  poincare->add_option("--method", method, "bar, golod, r3 or froberg")
      ->required()
      ->check(CLI::IsMember({"bar", "golod", "r3", "froberg"}));
  poincare->add_option("file", file, "Presentation file")->required();
  poincare->callback([&] { run = [&] { return cmd_poincare(o, method, file); }; });

  auto* verify = app.add_subcommand("verify", "Check a series identity or homology property");
  verify->add_option("mode", mode, "form, froberg, kos, golod-products or gk-exact")
      ->required()
      ->check(CLI::IsMember({"form", "froberg", "kos", "golod-products", "gk-exact"}));
  verify->add_option("file", file, "Presentation file")->required();
  verify->callback([&] { run = [&] { return cmd_verify(o, mode, file); }; });

  auto* ldims = app.add_subcommand("lie-dims", "Dimensions of a graded Lie algebra");
  ldims->add_option("file", file, "Lie presentation file");
  ldims->add_option("--koszul-hilbert", koszul_hilbert, "Hilbert series JSON of a Koszul algebra");
  ldims->callback([&] { run = [&] { return cmd_lie_dims(o, file, koszul_hilbert); }; });

  auto* lzero = app.add_subcommand("lie-zero", "Whether a Lie element vanishes");
  lzero->add_option("file", file, "Lie presentation file")->required();
  lzero->add_option("--expr", expr, "Lie expression")->required();
  lzero->callback([&] { run = [&] { return cmd_lie_zero(file, expr); }; });

  auto* holo = app.add_subcommand("holonomy", "Holonomy Lie algebra of a graph or 2-flat family");
  holo->add_option("--graph", graph, "Graph file");
  holo->add_option("--flats", flats, "2-flat family file");
  holo->add_flag("--dims", dims, "Lie dimensions through degree N");
  holo->add_flag("--decomposable", decomposable, "Decomposability check");
  holo->add_flag("--os-hilbert", os_hilbert, "Hilbert series of the quadratic Orlik-Solomon algebra");
  holo->callback([&] { run = [&] { return cmd_holonomy(o, graph, flats, dims, decomposable, os_hilbert); }; });

  auto* loggc = app.add_subcommand("logg", "Logarithmic formula of a series");
  loggc->add_option("--mode", mode, "even, alternating or mixed")
      ->required()
      ->check(CLI::IsMember({"even", "alternating", "mixed"}));
  loggc->add_option("file", file, "Series JSON (signed for mixed mode) or inline c0,c1,...")->required();
  loggc->callback([&] { run = [&] { return cmd_logg(o, mode, file); }; });

  auto* series = app.add_subcommand("series", "Power series arithmetic");
  series->add_option("op", op, "inverse, log, exp, multiply, divide or free-product")
      ->required()
      ->check(CLI::IsMember({"inverse", "log", "exp", "multiply", "divide", "free-product"}));
  series->add_option("operands", operands, "Series JSON files or inline lists c0,c1,...")->required();
  series->callback([&] { run = [&] { return cmd_series(o, op, operands); }; });

  auto* examples = app.add_subcommand("examples", "Write the built-in example corpus");
  examples->add_option("dir", dir, "Output directory")->required();
  examples->callback([&] { run = [&] { return cmd_examples(dir); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    if (app.get_subcommands().empty() && !args.empty() && !args.front().starts_with("-"))
      err << "error: unknown command '" << args.front() << "'\n";
    else
      err << "error: " << e.what() << "\n";
    err << "run with --help for usage\n";
    return kInputError;
  }
  o.degree_given = app.get_option("-N")->count() > 0;

  Result result;
  try {
    result = run();
  } catch (const SyntaxError& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what();
    if (e.line() > 0) err << " (line " << e.line() << ", column " << e.column() << ")";
    err << "\n";
    return exit_code_for(e.kind());
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return exit_code_for(e.kind());
  }

  if (o.table) {
    render(result.payload, out, "");
  } else {
    out << result.payload.dump(2) << "\n";
  }
  return result.code;
}

}  // namespace gradalg::cli
