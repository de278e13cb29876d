#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "tame/graded.hpp"
#include "tame/parse.hpp"
#include "tame/report.hpp"

namespace {

using namespace tame;

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitArith = 3;
constexpr int kExitFail = 4;
constexpr int kExitSingular = 5;

struct Config {
  std::string field = "F5";
  std::int64_t precision = 16;
  std::int64_t retry_cap = 1024;
  std::uint64_t seed = 0x7a3e5eedULL;
  std::string output = "text";
  std::int64_t depth = 16;
  std::int64_t lattice_shift = 0;
};

bool is_power_of_two(std::int64_t n) { return n > 0 && (n & (n - 1)) == 0; }

void validate(const Config& cfg) {
  if (cfg.precision < 4) throw ParseError("precision must be at least 4");
  if (!is_power_of_two(cfg.retry_cap) || cfg.retry_cap < cfg.precision)
    throw ParseError("retry cap must be a power of two >= precision");
  if (cfg.output != "text" && cfg.output != "json")
    throw ParseError("output must be text or json");
}

/// Optional key=value config file; unknown keys are rejected.
void load_config_file(const std::string& path, Config& cfg) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config file " + path);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ParseError("config lines must be key=value: " + line);
    std::string key = line.substr(0, eq), value = line.substr(eq + 1);
    if (key == "field")
      cfg.field = value;
    else if (key == "precision")
      cfg.precision = std::stoll(value);
    else if (key == "retry_cap")
      cfg.retry_cap = std::stoll(value);
    else if (key == "seed")
      cfg.seed = std::stoull(value);
    else if (key == "output")
      cfg.output = value;
    else if (key == "depth")
      cfg.depth = std::stoll(value);
    else if (key == "lattice_shift")
      cfg.lattice_shift = std::stoll(value);
    else
      throw ParseError("unknown config key: " + key);
  }
}

void emit_value(const Config& cfg, const std::string& op,
                const std::map<std::string, std::string>& fields) {
  if (cfg.output == "json") {
    nlohmann::json j;
    j["schema"] = 1;
    j["op"] = op;
    j["field"] = cfg.field;
    for (const auto& [k, v] : fields) j[k] = v;
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& [k, v] : fields) std::cout << k << " = " << v << "\n";
  }
}

int emit_report(const Config& cfg, const VerificationReport& rep) {
  std::cout << (cfg.output == "json" ? render_json(rep) + "\n"
                                     : render_text(rep));
  return rep.passed ? kExitOk : kExitFail;
}

int run(int argc, char** argv) {
  CLI::App app{"exact tame symbols and reciprocity laws over local fields"};
  app.require_subcommand(1);

  Config cfg;
  if (const char* env = std::getenv("TAME_PRECISION"))
    cfg.precision = std::stoll(env);

  std::string config_file;
  app.add_option("--config", config_file, "key=value config file");
  app.add_option("--field", cfg.field, "field spec: Fp, Fp^d:modulus, or Q");
  app.add_option("--precision", cfg.precision, "working series precision");
  app.add_option("--retry-cap", cfg.retry_cap,
                 "precision retry cap (power of two)");
  app.add_option("--seed", cfg.seed, "seed for randomized substeps");
  app.add_option("--output", cfg.output, "text or json");

  std::string f_text, g_text, h_text, at_text, curve_text;

  auto* sym1 = app.add_subcommand("symbol1d", "one-dimensional tame symbol");
  sym1->add_option("f", f_text)->required();
  sym1->add_option("g", g_text)->required();

  auto* sym2 = app.add_subcommand("symbol2d", "two-dimensional tame symbol");
  sym2->add_option("f", f_text)->required();
  sym2->add_option("g", g_text)->required();
  sym2->add_option("h", h_text)->required();

  auto* nuk = app.add_subcommand("nuk", "integer pairing nu_K");
  nuk->add_option("f", f_text)->required();
  nuk->add_option("g", g_text)->required();

  auto* comm = app.add_subcommand(
      "comm1d", "graded determinant commutator with the tame-symbol oracle");
  comm->add_option("f", f_text)->required();
  comm->add_option("g", g_text)->required();
  comm->add_option("--depth", cfg.depth, "matrix window depth");
  comm->add_option("--lattice-shift", cfg.lattice_shift, "lattice shift");

  auto* c3cmd = app.add_subcommand(
      "c3", "two-dimensional commutator pairing with the tame-symbol oracle");
  c3cmd->add_option("f", f_text)->required();
  c3cmd->add_option("g", g_text)->required();
  c3cmd->add_option("h", h_text)->required();

  auto* weil = app.add_subcommand("weil", "Weil reciprocity on P^1");
  weil->add_option("f", f_text)->required();
  weil->add_option("g", g_text)->required();

  auto* ppoint =
      app.add_subcommand("parshin-point", "Parshin point law at a surface point");
  ppoint->add_option("f", f_text)->required();
  ppoint->add_option("g", g_text)->required();
  ppoint->add_option("h", h_text)->required();
  ppoint->add_option("--at", at_text, "point u0,v0")->required();

  auto* pcurve = app.add_subcommand("parshin-curve",
                                    "Parshin curve law along a rational line");
  pcurve->add_option("f", f_text)->required();
  pcurve->add_option("g", g_text)->required();
  pcurve->add_option("h", h_text)->required();
  pcurve->add_option("--curve", curve_text, "parametrization x(T),y(T)")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  if (!config_file.empty()) {
    Config file_cfg;
    load_config_file(config_file, file_cfg);
    // explicit flags win over the config file
    if (app.count("--field") == 0) cfg.field = file_cfg.field;
    if (app.count("--precision") == 0 && !std::getenv("TAME_PRECISION"))
      cfg.precision = file_cfg.precision;
    if (app.count("--retry-cap") == 0) cfg.retry_cap = file_cfg.retry_cap;
    if (app.count("--seed") == 0) cfg.seed = file_cfg.seed;
    if (app.count("--output") == 0) cfg.output = file_cfg.output;
  }
  validate(cfg);

  FieldSpecPtr k = parse_field_spec(cfg.field);
  VerifyOptions vo{cfg.precision, cfg.retry_cap, cfg.seed};
  std::int64_t ext = k->is_extension() ? k->degree() : 1;

  auto norm_down = [&](const FieldElem& x) {
    return ext == 1 ? x : norm_to_base(x);
  };

  if (sym1->parsed()) {
    LaurentSeries1 f = parse_series1(k, f_text, cfg.precision);
    LaurentSeries1 g = parse_series1(k, g_text, cfg.precision);
    SymbolValue s = tame1d(f, g);
    emit_value(cfg, "symbol1d",
               {{"value", s.value.to_string()},
                {"norm", norm_down(s.value).to_string()}});
    return kExitOk;
  }
  if (sym2->parsed()) {
    LaurentSeries2 f = parse_series2(k, f_text, cfg.precision, cfg.precision);
    LaurentSeries2 g = parse_series2(k, g_text, cfg.precision, cfg.precision);
    LaurentSeries2 h = parse_series2(k, h_text, cfg.precision, cfg.precision);
    SymbolValue s = tame2d(f, g, h, cfg.precision);
    emit_value(cfg, "symbol2d",
               {{"value", s.value.to_string()},
                {"norm", norm_down(s.value).to_string()}});
    return kExitOk;
  }
  if (nuk->parsed()) {
    LaurentSeries2 f = parse_series2(k, f_text, cfg.precision, cfg.precision);
    LaurentSeries2 g = parse_series2(k, g_text, cfg.precision, cfg.precision);
    emit_value(cfg, "nuk", {{"value", std::to_string(nu_K(f, g, cfg.precision))}});
    return kExitOk;
  }
  if (comm->parsed()) {
    LaurentSeries1 f = parse_series1(k, f_text, cfg.depth + 8);
    LaurentSeries1 g = parse_series1(k, g_text, cfg.depth + 8);
    LatticeSpec L{cfg.lattice_shift, ext};
    CommReport r = comm1d(f, g, L, cfg.depth);
    FieldElem oracle = norm_down(tame1d(f, g).value).inverse();
    bool agree = r.value == oracle;
    emit_value(cfg, "comm1d",
               {{"comm", r.value.to_string()},
                {"oracle", oracle.to_string()},
                {"verdict", agree ? "AGREE" : "DISAGREE"}});
    return agree ? kExitOk : kExitFail;
  }
  if (c3cmd->parsed()) {
    LaurentSeries2 f = parse_series2(k, f_text, cfg.precision, cfg.precision);
    LaurentSeries2 g = parse_series2(k, g_text, cfg.precision, cfg.precision);
    LaurentSeries2 h = parse_series2(k, h_text, cfg.precision, cfg.precision);
    FieldElem c3 = c3_reduce(f, g, h);
    FieldElem oracle = norm_down(tame2d(f, g, h, cfg.precision).value);
    bool agree = c3 == oracle;
    emit_value(cfg, "c3",
               {{"c3", c3.to_string()},
                {"oracle", oracle.to_string()},
                {"verdict", agree ? "AGREE" : "DISAGREE"}});
    return agree ? kExitOk : kExitFail;
  }
  if (weil->parsed()) {
    RatFunc f = parse_rat_func(k, f_text);
    RatFunc g = parse_rat_func(k, g_text);
    return emit_report(cfg, weil_verify(f, g, vo));
  }
  if (ppoint->parsed()) {
    BivariateRational f = parse_bivariate(k, f_text);
    BivariateRational g = parse_bivariate(k, g_text);
    BivariateRational h = parse_bivariate(k, h_text);
    SurfacePoint x = parse_surface_point(k, at_text);
    return emit_report(cfg, parshin_point_verify(f, g, h, x, {}, vo));
  }
  if (pcurve->parsed()) {
    BivariateRational f = parse_bivariate(k, f_text);
    BivariateRational g = parse_bivariate(k, g_text);
    BivariateRational h = parse_bivariate(k, h_text);
    LineCurve c = parse_line_curve(k, curve_text);
    return emit_report(cfg, parshin_curve_verify(f, g, h, c, vo));
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitParse;
  } catch (const SingularBranchUnhandled& e) {
    std::cerr << e.what() << "\n";
    return kExitSingular;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return kExitArith;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitArith;
  }
}
